//! Isomorphism-free generation of small graphs.
//!
//! Graphs on `n` vertices are grown from graphs on `n - 1` vertices by adding
//! a vertex with every possible neighborhood. A child is kept only when the
//! new vertex lies in the automorphism orbit of the child's designated
//! deletion vertex (the canonically last vertex of minimum degree), so each
//! isomorphism class has exactly one parent class. Siblings from the same
//! parent are deduplicated by canonical form and emitted in canonical-form
//! order, giving a deterministic stream regardless of worker count.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use rayon::prelude::*;
use rayon::ThreadPool;
use thiserror::Error;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::connectivity::{check_class_parameter, in_class, ConnectivityClass, ConnectivityError};
use crate::graph::{bit, Graph};

/// Default cap on `n` for connected-graph streams.
pub const DEFAULT_MAX_N: usize = 8;
/// No override can raise the connected-graph cap past this.
pub const HARD_MAX_N: usize = 9;
pub const MAX_TREE_N: usize = 10;
/// Environment variable that raises the default cap.
pub const MAX_N_ENV: &str = "ZAGREB_MAX_N";

const CHUNK: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("vertex count must be at least 1")]
    Empty,
    #[error("n = {n} exceeds the enumeration limit {limit} (set {MAX_N_ENV} to raise it, up to {HARD_MAX_N})")]
    TooLarge { n: usize, limit: usize },
    #[error("trees are enumerated only up to n = {MAX_TREE_N}, got {0}")]
    TreeTooLarge(usize),
    #[error(transparent)]
    Class(#[from] ConnectivityError),
}

#[derive(Debug, Clone)]
pub struct EnumOptions {
    /// Largest `n` accepted for graph streams; clamped to [`HARD_MAX_N`].
    pub max_n: usize,
    /// Worker threads used to expand parent graphs; 1 means sequential.
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            max_n: DEFAULT_MAX_N,
            jobs: 1,
        }
    }
}

impl EnumOptions {
    /// Defaults, with `max_n` taken from `ZAGREB_MAX_N` when set and valid.
    pub fn from_env() -> EnumOptions {
        let max_n = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_N);
        EnumOptions { max_n, jobs: 1 }
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    fn check(&self, n: usize) -> Result<(), EnumError> {
        let limit = self.max_n.min(HARD_MAX_N);
        if n == 0 {
            Err(EnumError::Empty)
        } else if n > limit {
            Err(EnumError::TooLarge { n, limit })
        } else {
            Ok(())
        }
    }

    fn pool(&self) -> Option<Arc<ThreadPool>> {
        (self.jobs > 1).then(|| {
            Arc::new(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(self.jobs)
                    .build()
                    .expect("thread pool"),
            )
        })
    }
}

/// A lazily produced sequence of graphs on `n` vertices, one per
/// isomorphism class passing the stream's filter.
pub struct GraphStream {
    n: usize,
    inner: Box<dyn Iterator<Item = Graph> + Send>,
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.n
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.inner.next()
    }
}

/// Every graph on `n` vertices up to isomorphism, connected or not.
pub fn all_graphs_with(n: usize, opts: &EnumOptions) -> Result<GraphStream, EnumError> {
    opts.check(n)?;
    Ok(GraphStream {
        n,
        inner: generate(n, opts.pool()),
    })
}

/// Every connected graph on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<GraphStream, EnumError> {
    connected_graphs_with(n, &EnumOptions::default())
}

pub fn connected_graphs_with(n: usize, opts: &EnumOptions) -> Result<GraphStream, EnumError> {
    let all = all_graphs_with(n, opts)?;
    Ok(GraphStream {
        n,
        inner: Box::new(all.filter(Graph::is_connected)),
    })
}

/// Connected graphs with κ ≤ k (vertex class) or κ′ ≤ k (edge class).
pub fn class_members(
    n: usize,
    k: usize,
    class: ConnectivityClass,
) -> Result<GraphStream, EnumError> {
    class_members_with(n, k, class, &EnumOptions::default())
}

pub fn class_members_with(
    n: usize,
    k: usize,
    class: ConnectivityClass,
    opts: &EnumOptions,
) -> Result<GraphStream, EnumError> {
    check_class_parameter(n, k)?;
    let stream = connected_graphs_with(n, opts)?;
    let inner =
        stream.filter(move |g| in_class(g, k, class).expect("stream yields connected graphs"));
    Ok(GraphStream {
        n,
        inner: Box::new(inner),
    })
}

/// Every tree on `n` vertices up to isomorphism, in canonical-form order.
pub fn trees(n: usize) -> Result<GraphStream, EnumError> {
    if n == 0 {
        return Err(EnumError::Empty);
    }
    if n > MAX_TREE_N {
        return Err(EnumError::TreeTooLarge(n));
    }
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1).expect("K1");
    level.insert(k1.canonical_form(), k1);
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for tree in level.values() {
            for v in 0..tree.order() {
                let lab = canonical_labeling(&tree.extend_with(bit(v)));
                next.entry(lab.form)
                    .or_insert_with_key(|form| form.to_graph());
            }
        }
        level = next;
    }
    Ok(GraphStream {
        n,
        inner: Box::new(level.into_values()),
    })
}

fn generate(n: usize, pool: Option<Arc<ThreadPool>>) -> Box<dyn Iterator<Item = Graph> + Send> {
    if n == 1 {
        return Box::new(std::iter::once(Graph::empty(1).expect("K1")));
    }
    Box::new(Expand {
        parents: generate(n - 1, pool.clone()),
        pool,
        buffer: VecDeque::new(),
    })
}

struct Expand {
    parents: Box<dyn Iterator<Item = Graph> + Send>,
    pool: Option<Arc<ThreadPool>>,
    buffer: VecDeque<Graph>,
}

impl Iterator for Expand {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.buffer.is_empty() {
            let batch: Vec<Graph> = self.parents.by_ref().take(CHUNK).collect();
            if batch.is_empty() {
                return None;
            }
            let children: Vec<Vec<Graph>> = match &self.pool {
                Some(pool) => pool.install(|| batch.par_iter().map(children).collect()),
                None => batch.iter().map(children).collect(),
            };
            self.buffer.extend(children.into_iter().flatten());
        }
        self.buffer.pop_front()
    }
}

/// Accepted one-vertex extensions of `parent`, canonically labeled.
fn children(parent: &Graph) -> Vec<Graph> {
    let new = parent.order();
    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for mask in 0..1u64 << new {
        let child = parent.extend_with(mask);
        let deg = child.degrees();
        let min_deg = *deg.iter().min().expect("nonempty");
        if deg[new] != min_deg {
            continue;
        }
        let lab = canonical_labeling(&child);
        let deletion = *lab
            .order
            .iter()
            .rev()
            .find(|&&v| deg[v] == min_deg)
            .expect("some vertex has minimum degree");
        if lab.same_orbit(deletion, new) && !found.contains_key(&lab.form) {
            let g = lab.canonical_graph(&child);
            found.insert(lab.form, g);
        }
    }
    found.into_values().collect()
}
