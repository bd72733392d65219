use serde::Serialize;

use super::bridges_and_2ecc;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Balloons: maximal 2-edge-connected subgraphs attached to the rest of the graph
/// by exactly one bridge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalloonReport {
    pub balloons: Vec<VertexSet>,
    /// The unique bridge incident to each balloon, aligned with `balloons`.
    pub bridge_of: Vec<(usize, usize)>,
    pub count: usize,
    pub is_dumbbell: bool,
}

/// Balloon decomposition of a connected graph.
///
/// Single-vertex 2-edge-connected components never count as balloons; a balloon
/// always has at least three vertices.
pub fn balloons(g: &Graph) -> Result<BalloonReport> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "balloons are only defined here for connected graphs".into(),
        ));
    }
    let (bridges, groups) = bridges_and_2ecc(g);
    let mut group_of = vec![0; g.n()];
    for (id, members) in groups.iter().enumerate() {
        for &v in members {
            group_of[v] = id;
        }
    }
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); groups.len()];
    for &(u, v) in &bridges {
        incident[group_of[u]].push((u, v));
        incident[group_of[v]].push((u, v));
    }

    let mut found = Vec::new();
    let mut bridge_of = Vec::new();
    for (members, touching) in groups.iter().zip(&incident) {
        if members.len() >= 3 && touching.len() == 1 {
            found.push(members.clone());
            bridge_of.push(touching[0]);
        }
    }
    let count = found.len();
    let is_dumbbell = count == 2 && found[0].len() + found[1].len() == g.n();
    Ok(BalloonReport {
        balloons: found,
        bridge_of,
        count,
        is_dumbbell,
    })
}
