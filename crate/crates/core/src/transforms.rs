//! Edge addition and the neighbor shift that moves edges from `v` to `u`.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("shift needs u != v (both {0})")]
    SameVertex(usize),
    #[error("shift needs u and v non-adjacent, but {u}{v} is an edge")]
    Adjacent { u: usize, v: usize },
    #[error("shift needs a nonempty vertex list")]
    EmptyShift,
    #[error("vertex {0} listed twice in the shift")]
    RepeatedVertex(usize),
    #[error("vertex {w} is not a neighbor of v = {v}")]
    NotNeighborOfV { w: usize, v: usize },
    #[error("vertex {w} is already a neighbor of u = {u}")]
    AlreadyNeighborOfU { w: usize, u: usize },
}

/// Moves the edges `v w` for every `w` in `moved` to `u w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSpec {
    pub u: usize,
    pub v: usize,
    pub moved: Vec<usize>,
}

impl ShiftSpec {
    pub fn new(u: usize, v: usize, moved: Vec<usize>) -> ShiftSpec {
        ShiftSpec { u, v, moved }
    }

    /// Checks the spec against `g`, naming the first violated condition.
    pub fn validate(&self, g: &Graph) -> Result<(), TransformError> {
        let n = g.order();
        let &ShiftSpec { u, v, .. } = self;
        for x in [u, v].into_iter().chain(self.moved.iter().copied()) {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n }.into());
            }
        }
        if u == v {
            return Err(TransformError::SameVertex(u));
        }
        if g.has_edge(u, v) {
            return Err(TransformError::Adjacent { u, v });
        }
        if self.moved.is_empty() {
            return Err(TransformError::EmptyShift);
        }
        let mut seen = 0u64;
        for &w in &self.moved {
            if seen & (1 << w) != 0 {
                return Err(TransformError::RepeatedVertex(w));
            }
            seen |= 1 << w;
            if !g.has_edge(v, w) {
                return Err(TransformError::NotNeighborOfV { w, v });
            }
            if g.has_edge(u, w) {
                return Err(TransformError::AlreadyNeighborOfU { w, u });
            }
        }
        Ok(())
    }
}

/// G + uv, rejecting self-loops and existing edges.
pub fn add_edge_checked(g: &Graph, u: usize, v: usize) -> Result<Graph, TransformError> {
    Ok(g.with_edge(u, v)?)
}

/// G − {v w : w ∈ S} + {u w : w ∈ S}.
pub fn shift_neighbors(g: &Graph, spec: &ShiftSpec) -> Result<Graph, TransformError> {
    spec.validate(g)?;
    let remove: Vec<_> = spec.moved.iter().map(|&w| (spec.v, w)).collect();
    let add: Vec<_> = spec.moved.iter().map(|&w| (spec.u, w)).collect();
    Ok(g.edit_edges(&add, &remove)?)
}
