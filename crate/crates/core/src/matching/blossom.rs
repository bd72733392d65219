// Edmonds' blossom algorithm, one alternating-tree search per exposed root.
// Blossoms are contracted implicitly through `base`: every vertex of a shrunken
// blossom points at the blossom's base, and the search treats them as one vertex.

const NONE: usize = usize::MAX;

pub(crate) struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    pub(crate) mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    /// even ("outer") vertices of the current tree
    outer: Vec<bool>,
    queue: std::collections::VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    pub(crate) fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            queue: Default::default(),
        }
    }

    pub(crate) fn is_exposed(&self, v: usize) -> bool {
        self.mate[v] == NONE
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != stem {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, u: usize) {
        let n = self.adj.len();
        let stem = self.lca(v, u);
        let mut in_blossom = vec![false; n];
        self.mark_path(v, stem, u, &mut in_blossom);
        self.mark_path(u, stem, v, &mut in_blossom);
        for i in 0..n {
            if in_blossom[self.base[i]] {
                self.base[i] = stem;
                if !self.outer[i] {
                    self.outer[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Grows an alternating tree from `root`. Returns the far end of an augmenting
    /// path, or `None` when the tree is exhausted (then `outer` holds every vertex
    /// reachable from `root` by an even alternating path).
    fn search(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.outer.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.outer[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let u = self.adj[v][idx];
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                let u_outer = u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE);
                if u_outer {
                    self.contract(v, u);
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        return Some(u);
                    }
                    let w = self.mate[u];
                    self.outer[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        debug_assert!(n == self.outer.len());
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    /// Runs to a maximum matching.
    pub(crate) fn solve(&mut self) {
        let n = self.adj.len();
        // greedy warm start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                if let Some(end) = self.search(root) {
                    self.augment(end);
                }
            }
        }
    }

    /// Vertices reachable from an exposed vertex by an even alternating path, i.e.
    /// those missed by some maximum matching. Only meaningful after `solve`.
    pub(crate) fn even_reachable(&mut self) -> Vec<bool> {
        let n = self.adj.len();
        let mut reach = vec![false; n];
        for root in 0..n {
            if self.mate[root] == NONE {
                let found = self.search(root);
                debug_assert!(found.is_none(), "matching is not maximum");
                for (r, &o) in reach.iter_mut().zip(&self.outer) {
                    *r |= o;
                }
            }
        }
        reach
    }
}
