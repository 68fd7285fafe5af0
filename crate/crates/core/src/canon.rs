//! Canonical labeling by partition refinement and individualization.
//!
//! The search explores every branch of the individualization tree except
//! those reachable by swapping twin vertices (same neighborhood apart from
//! each other). The canonical labeling is the leaf with the lexicographically
//! largest permuted adjacency matrix. Leaves with equal matrices differ by an
//! automorphism, which together with the twin swaps generate the full
//! automorphism group, so vertex orbits come for free.

use std::fmt;

use crate::format;
use crate::graph::{bit, Graph};

/// Identifies the isomorphism class of a graph: the graph6 encoding of its
/// canonically relabeled copy.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The graph6 text of the canonical representative.
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// Decodes the canonical representative.
    pub fn to_graph(&self) -> Graph {
        format::decode_graph6(self.as_str()).expect("canonical forms are valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a canonical labeling run.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// `orbits[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
    pub form: CanonicalForm,
}

impl Labeling {
    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }

    /// The graph relabeled into canonical order.
    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        let mut perm = vec![0; self.order.len()];
        for (pos, &v) in self.order.iter().enumerate() {
            perm[v] = pos;
        }
        g.relabel(&perm)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let mut search = Search {
        adj: &adj,
        best: None,
        parent: (0..n).collect(),
    };
    search.explore(vec![(0..n).collect()]);
    let (cert, order) = search
        .best
        .take()
        .expect("search reaches at least one leaf");
    let mut parent = search.parent;
    let orbits = (0..n).map(|v| find(&mut parent, v)).collect();
    let form = CanonicalForm(format::encode_graph6_rows(n, &cert).into_bytes());
    Labeling {
        order,
        orbits,
        form,
    }
}

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Union-find over vertices; roots are orbit minima.
    parent: Vec<usize>,
}

type Partition = Vec<Vec<usize>>;

impl Search<'_> {
    fn explore(&mut self, cells: Partition) {
        let cells = refine(self.adj, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().flatten().collect());
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if let Some(&u) = tried.iter().find(|&&u| self.twins(u, v)) {
                self.union(u, v);
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend(cells[target + 1..].iter().cloned());
            self.explore(next);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.adj[u] & !bit(v) == self.adj[v] & !bit(u)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| crate::graph::bits(self.adj[v]).fold(0u64, |row, w| row | bit(pos[w])))
            .collect();
        match &self.best {
            Some((best, _)) if cert < *best => {}
            Some((best, best_order)) if cert == *best => {
                let pairs: Vec<_> = best_order
                    .iter()
                    .copied()
                    .zip(order.iter().copied())
                    .collect();
                for (a, b) in pairs {
                    self.union(a, b);
                }
            }
            _ => self.best = Some((cert, order)),
        }
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = find(&mut self.parent, a);
        let rb = find(&mut self.parent, b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Splits cells by neighbor counts into every current cell until stable.
/// New cells are ordered by their count signature, so the result is a
/// function of the isomorphism type of (graph, ordered partition).
fn refine(adj: &[u64], mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | bit(v)))
            .collect();
        let mut out: Partition = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in cells {
            if cell.len() == 1 {
                out.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key = masks
                        .iter()
                        .map(|m| (adj[v] & m).count_ones() as u8)
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort_unstable();
            let before = out.len();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    out.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            split |= out.len() - before > 1;
        }
        cells = out;
        if !split {
            return cells;
        }
    }
}
