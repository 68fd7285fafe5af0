//! Named graph families: complete graphs, paths, stars, K_n^k, joins and the
//! two-clique sandwich around a vertex cut.

use thiserror::Error;

use crate::graph::{bit, low_mask, Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("{family} needs {requirement}")]
    Parameter {
        family: &'static str,
        requirement: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Complete,
    Path,
    Star,
}

/// K_n, P_n (edges `(i, i+1)`) or S_n (center 0).
pub fn basic(kind: BasicKind, n: usize) -> Result<Graph, ConstructError> {
    if n == 0 {
        return Err(ConstructError::Parameter {
            family: "basic graph",
            requirement: "n >= 1".into(),
        });
    }
    let edges: Vec<(usize, usize)> = match kind {
        BasicKind::Complete => return Ok(complete(n)?),
        BasicKind::Path => (1..n).map(|i| (i - 1, i)).collect(),
        BasicKind::Star => (1..n).map(|i| (0, i)).collect(),
    };
    Ok(Graph::new(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::InvalidOrder(n));
    }
    let all = low_mask(n);
    Ok(Graph::from_adjacency(
        n,
        (0..n).map(|v| all & !bit(v)).collect(),
    ))
}

pub fn path(n: usize) -> Result<Graph, ConstructError> {
    basic(BasicKind::Path, n)
}

pub fn star(n: usize) -> Result<Graph, ConstructError> {
    basic(BasicKind::Star, n)
}

/// K_n^k: a clique on vertices `0..n-1` plus vertex `n-1` adjacent to the
/// first `k` clique vertices.
pub fn knk(n: usize, k: usize) -> Result<Graph, ConstructError> {
    if n < 2 || k == 0 || k >= n {
        return Err(ConstructError::Parameter {
            family: "K_n^k",
            requirement: format!("n >= 2 and 1 <= k <= n - 1 (got n = {n}, k = {k})"),
        });
    }
    let clique = complete(n - 1)?;
    Ok(clique.extend_with(low_mask(k)))
}

/// G1 ⊕ G2: disjoint union (G2 shifted past G1) plus every cross edge.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, ConstructError> {
    let (n1, n2) = (g1.order(), g2.order());
    if n1 + n2 > MAX_VERTICES {
        return Err(GraphError::InvalidOrder(n1 + n2).into());
    }
    let left = low_mask(n1);
    let right = low_mask(n1 + n2) & !left;
    let adj = (0..n1)
        .map(|v| g1.neighbor_mask(v) | right)
        .chain((0..n2).map(|v| (g2.neighbor_mask(v) << n1) | left))
        .collect();
    Ok(Graph::from_adjacency(n1 + n2, adj))
}

/// G(j, m) = K_j ⊕ H ⊕ K_m without the K_j–K_m edges, so V(H) separates the
/// two cliques. Vertex order: the K_j block, then H, then the K_m block.
pub fn sandwich(j: usize, h: &Graph, m: usize) -> Result<Graph, ConstructError> {
    let k = h.order();
    if j == 0 || m == 0 || j + k + m > MAX_VERTICES {
        return Err(ConstructError::Parameter {
            family: "sandwich",
            requirement: format!("j >= 1, m >= 1 and j + |H| + m <= {MAX_VERTICES} (got j = {j}, |H| = {k}, m = {m})"),
        });
    }
    let n = j + k + m;
    let left = low_mask(j);
    let middle = low_mask(j + k) & !left;
    let right = low_mask(n) & !low_mask(j + k);
    let mut adj = Vec::with_capacity(n);
    adj.extend((0..j).map(|v| (left & !bit(v)) | middle));
    adj.extend((0..k).map(|v| (h.neighbor_mask(v) << j) | left | right));
    adj.extend((j + k..n).map(|v| (right & !bit(v)) | middle));
    Ok(Graph::from_adjacency(n, adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{edge_connectivity, vertex_connectivity};
    use crate::indices::{pi1, pi2, Pi2Form};

    #[test]
    fn basic_families() {
        let k4 = basic(BasicKind::Complete, 4).unwrap();
        assert_eq!(k4.size(), 6);
        assert_eq!(k4.degrees(), vec![3; 4]);
        assert_eq!(star(5).unwrap().degrees(), vec![4, 1, 1, 1, 1]);
        let p2 = path(2).unwrap();
        assert!(p2.is_isomorphic(&star(2).unwrap()));
        assert!(p2.is_isomorphic(&complete(2).unwrap()));
        assert_eq!(path(1).unwrap(), complete(1).unwrap());
        assert!(basic(BasicKind::Path, 0).is_err());
    }

    #[test]
    fn knk_shape() {
        for n in 2..=9 {
            let kn = complete(n).unwrap();
            assert!(knk(n, n - 1).unwrap().is_isomorphic(&kn));
            for k in 1..n {
                let g = knk(n, k).unwrap();
                let mut expected = vec![k];
                expected.extend(std::iter::repeat_n(n - 2, n - k - 1));
                expected.extend(std::iter::repeat_n(n - 1, k));
                expected.sort_unstable();
                assert_eq!(g.degree_sequence().sorted(), expected, "n={n} k={k}");
                let kappa = vertex_connectivity(&g);
                assert_eq!(kappa, if k <= n - 2 { k } else { n - 1 });
            }
        }
        assert_eq!(
            knk(5, 2).unwrap().degree_sequence().sorted(),
            vec![2, 3, 3, 4, 4]
        );
        assert_eq!(vertex_connectivity(&knk(6, 2).unwrap()), 2);
        assert_eq!(edge_connectivity(&knk(6, 2).unwrap()), 2);
        assert!(knk(1, 1).is_err());
        assert!(knk(5, 0).is_err());
        assert!(knk(5, 5).is_err());
    }

    #[test]
    fn joins() {
        let k1 = complete(1).unwrap();
        assert!(join(&k1, &k1).unwrap().is_isomorphic(&complete(2).unwrap()));
        let e4 = Graph::empty(4).unwrap();
        assert!(join(&k1, &e4).unwrap().is_isomorphic(&star(5).unwrap()));
        let k5 = join(&complete(2).unwrap(), &complete(3).unwrap()).unwrap();
        assert!(k5.is_complete());
        let p3 = path(3).unwrap();
        let g = join(&p3, &e4).unwrap();
        assert_eq!(g.size(), 2 + 12);
        assert!(join(&complete(40).unwrap(), &complete(25).unwrap()).is_err());
    }

    #[test]
    fn sandwich_with_complete_middle_matches_knk() {
        for k in 1..=4 {
            for m in 1..=4 {
                let n = 1 + k + m;
                let s = sandwich(1, &complete(k).unwrap(), m).unwrap();
                let target = knk(n, k).unwrap();
                assert!(s.is_isomorphic(&target));
                assert_eq!(pi1(&s), pi1(&target));
                assert_eq!(pi2(&s, Pi2Form::Vertex), pi2(&target, Pi2Form::Vertex));
            }
        }
    }

    #[test]
    fn small_sandwich() {
        let s = sandwich(2, &complete(1).unwrap(), 2).unwrap();
        assert_eq!(s.degrees(), vec![2, 2, 4, 2, 2]);
        assert_eq!(*pi1(&s).value(), 4096u32.into());
        let outer = s.induced_subgraph(&[0, 1, 3, 4]).unwrap();
        assert_eq!(outer.count_components(), 2);
        assert!(sandwich(0, &complete(1).unwrap(), 2).is_err());
        assert!(sandwich(30, &complete(10).unwrap(), 30).is_err());
    }

    /// Every graph on `k` labeled vertices.
    fn all_graphs(k: usize) -> Vec<Graph> {
        let pairs: Vec<_> = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .collect();
        (0u64..1 << pairs.len())
            .map(|c| {
                let e: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| c & bit(*i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::new(k, &e).unwrap()
            })
            .collect()
    }

    #[test]
    fn sandwich_degree_formulas() {
        for k in 1..=4 {
            for h in all_graphs(k) {
                for j in 1..=9 - k - 1 {
                    for m in 1..=9 - k - j {
                        let s = sandwich(j, &h, m).unwrap();
                        let deg = s.degrees();
                        assert!(deg[..j].iter().all(|&d| d == j + k - 1));
                        for v in 0..k {
                            assert_eq!(deg[j + v], h.degree(v) + j + m);
                        }
                        assert!(deg[j + k..].iter().all(|&d| d == m + k - 1));
                        let cliques: Vec<_> = (0..j).chain(j + k..j + k + m).collect();
                        assert_eq!(s.induced_subgraph(&cliques).unwrap().count_components(), 2);
                        assert!(s.is_connected());
                    }
                }
            }
        }
    }
}
