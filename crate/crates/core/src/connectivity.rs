//! Vertex and edge connectivity by unit-capacity maximum flow.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("class parameter k = {k} outside 1..={max} for a graph on {n} vertices")]
    InvalidK { k: usize, n: usize, max: usize },
    #[error("class membership is only defined for connected graphs")]
    Disconnected,
}

/// The two graph classes: bounded vertex connectivity or bounded edge
/// connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConnectivityClass {
    /// Connected graphs with κ ≤ k.
    Vertex,
    /// Connected graphs with κ′ ≤ k.
    Edge,
}

impl ConnectivityClass {
    pub fn name(self) -> &'static str {
        match self {
            ConnectivityClass::Vertex => "vertex",
            ConnectivityClass::Edge => "edge",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityProfile {
    pub kappa: usize,
    pub kappa_prime: usize,
    pub min_degree: usize,
}

pub fn profile(g: &Graph) -> ConnectivityProfile {
    ConnectivityProfile {
        kappa: vertex_connectivity(g),
        kappa_prime: edge_connectivity(g),
        min_degree: g.min_degree(),
    }
}

/// Dense residual network for Edmonds–Karp with small integer capacities.
struct FlowNetwork {
    size: usize,
    cap: Vec<u32>,
}

impl FlowNetwork {
    fn new(size: usize) -> FlowNetwork {
        FlowNetwork {
            size,
            cap: vec![0; size * size],
        }
    }

    fn add(&mut self, from: usize, to: usize, c: u32) {
        self.cap[from * self.size + to] += c;
    }

    /// Maximum flow from `s` to `t`, stopping early once it reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.size;
        let mut flow = 0;
        let mut prev = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[s] = s;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() && prev[t] == usize::MAX {
                let u = queue[head];
                head += 1;
                for (v, p) in prev.iter_mut().enumerate() {
                    if *p == usize::MAX && self.cap[u * n + v] > 0 {
                        *p = u;
                        queue.push(v);
                    }
                }
            }
            if prev[t] == usize::MAX {
                break;
            }
            // Every arc on the path has residual capacity >= 1.
            let mut v = t;
            while v != s {
                let u = prev[v];
                self.cap[u * n + v] -= 1;
                self.cap[v * n + u] += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Number of internally vertex-disjoint s–t paths for non-adjacent `s`, `t`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    // Vertex v splits into v_in = v and v_out = v + n joined by a unit arc.
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let inner = if v == s || v == t { n as u32 } else { 1 };
        net.add(v, v + n, inner);
        for w in g.neighbors(v) {
            net.add(v + n, w, n as u32);
        }
    }
    net.max_flow(s + n, t, limit)
}

fn local_edge_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = FlowNetwork::new(g.order());
    for (u, v) in g.edges() {
        net.add(u, v, 1);
        net.add(v, u, 1);
    }
    net.max_flow(s, t, limit)
}

/// κ(G): `n - 1` for complete graphs, 0 for disconnected graphs, otherwise
/// the fewest vertices whose removal disconnects the graph.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    best
}

/// κ′(G): the fewest edges whose removal disconnects the graph; 0 when
/// already disconnected or trivial.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    // Some minimum cut separates vertex 0 from some t.
    let mut best = g.min_degree();
    for t in 1..n {
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    best
}

/// Membership in the class of connected graphs with κ ≤ k (vertex) or κ′ ≤ k
/// (edge), for `1 <= k <= n - 1`.
pub fn in_class(g: &Graph, k: usize, class: ConnectivityClass) -> Result<bool, ConnectivityError> {
    let n = g.order();
    check_class_parameter(n, k)?;
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    Ok(match class {
        ConnectivityClass::Vertex => vertex_connectivity(g) <= k,
        ConnectivityClass::Edge => edge_connectivity(g) <= k,
    })
}

pub(crate) fn check_class_parameter(n: usize, k: usize) -> Result<(), ConnectivityError> {
    if k == 0 || k + 1 > n {
        return Err(ConnectivityError::InvalidK {
            k,
            n,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}
