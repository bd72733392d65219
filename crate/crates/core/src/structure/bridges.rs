use crate::graph::{Graph, VertexSet};

/// Bridges (as `(u, v)` with `u < v`, sorted) and the 2-edge-connected components,
/// i.e. the components left after deleting every bridge, ordered by smallest vertex.
///
/// Iterative DFS low-link, so deep paths do not overflow the stack.
pub fn bridges_and_2ecc(g: &Graph) -> (Vec<(usize, usize)>, Vec<VertexSet>) {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut order = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut bridges = Vec::new();
    let mut clock = 0;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if order[root] != UNSEEN {
            continue;
        }
        order[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(&(v, parent, next)) = stack.last() {
            if let Some(&w) = g.neighbors(v).get(next) {
                if let Some(top) = stack.last_mut() {
                    top.2 += 1;
                }
                if w == parent {
                    continue;
                }
                if order[w] == UNSEEN {
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        bridges.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();

    let mut comp = vec![UNSEEN; n];
    let mut groups = Vec::new();
    for start in 0..n {
        if comp[start] != UNSEEN {
            continue;
        }
        let id = groups.len();
        let mut members = VertexSet::new();
        let mut todo = vec![start];
        comp[start] = id;
        while let Some(v) = todo.pop() {
            members.insert(v);
            for &w in g.neighbors(v) {
                let e = (v.min(w), v.max(w));
                if comp[w] == UNSEEN && bridges.binary_search(&e).is_err() {
                    comp[w] = id;
                    todo.push(w);
                }
            }
        }
        groups.push(members);
    }
    (bridges, groups)
}
