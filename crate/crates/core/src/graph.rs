//! The prime graph on real class sizes.
//!
//! Vertices are the primes dividing some real class size; two primes are
//! adjacent when their product divides some real class size. Edges are
//! computed from the size multiset alone, exactly as defined.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::prime_divisors;
use crate::real::RealClassData;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeGraph {
    /// Primes, ascending.
    pub vertices: Vec<u64>,
    /// Unordered pairs stored as (smaller, larger), lexicographic.
    pub edges: Vec<(u64, u64)>,
    /// Connected components; the component containing 2 first, otherwise the
    /// one with the smallest prime.
    pub components: Vec<Vec<u64>>,
}

/// Outcome of splitting a graph into the two vertex sets π₁ and π₂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentSplit {
    /// Connected (including ≤ 1 vertex): all vertices in π₁, no π₂.
    Connected(BTreeSet<u64>),
    /// Exactly two components; `pi_one` holds 2 whenever 2 is a vertex.
    Two {
        pi_one: BTreeSet<u64>,
        pi_two: BTreeSet<u64>,
    },
    /// More than two components — a finding to report, never a panic.
    MoreThanTwo(Vec<BTreeSet<u64>>),
}

impl PrimeGraph {
    /// Builds the graph for the given multiset of real class sizes.
    pub fn from_real_sizes(sizes: &[u64]) -> PrimeGraph {
        let vertex_set: BTreeSet<u64> = sizes.iter().flat_map(|&s| prime_divisors(s)).collect();
        let vertices: Vec<u64> = vertex_set.into_iter().collect();
        let mut edges = Vec::new();
        for (i, &p) in vertices.iter().enumerate() {
            for &q in &vertices[i + 1..] {
                if sizes.iter().any(|&s| s % (p * q) == 0) {
                    edges.push((p, q));
                }
            }
        }
        let components = connected_components(&vertices, &edges);
        PrimeGraph {
            vertices,
            edges,
            components,
        }
    }

    pub fn from_real_data(real: &RealClassData) -> PrimeGraph {
        PrimeGraph::from_real_sizes(&real.sizes)
    }

    /// Full pipeline from a group: real class data, then the graph.
    pub fn of_group(g: &crate::group::Group) -> PrimeGraph {
        PrimeGraph::from_real_data(&crate::real::real_class_data(g))
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    pub fn has_vertex(&self, p: u64) -> bool {
        self.vertices.binary_search(&p).is_ok()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        let pair = if p < q { (p, q) } else { (q, p) };
        self.edges.contains(&pair)
    }

    /// π₁/π₂ labeling of the components; see [`ComponentSplit`].
    pub fn component_split(&self) -> ComponentSplit {
        match self.components.len() {
            0 | 1 => ComponentSplit::Connected(
                self.components.first().map(|c| c.iter().copied().collect()).unwrap_or_default(),
            ),
            2 => {
                let first: BTreeSet<u64> = self.components[0].iter().copied().collect();
                let second: BTreeSet<u64> = self.components[1].iter().copied().collect();
                // Component ordering already puts the one containing 2 first.
                ComponentSplit::Two {
                    pi_one: first,
                    pi_two: second,
                }
            }
            _ => ComponentSplit::MoreThanTwo(
                self.components
                    .iter()
                    .map(|c| c.iter().copied().collect())
                    .collect(),
            ),
        }
    }

    /// Vertex and edge containment in `other`.
    pub fn is_subgraph_of(&self, other: &PrimeGraph) -> bool {
        self.vertices.iter().all(|v| other.has_vertex(*v))
            && self.edges.iter().all(|&(p, q)| other.has_edge(p, q))
    }

    /// All pairs inside `vertex_set` are edges.
    pub fn is_complete_on(&self, vertex_set: &BTreeSet<u64>) -> bool {
        let vs: Vec<u64> = vertex_set.iter().copied().collect();
        vs.iter()
            .enumerate()
            .all(|(i, &p)| vs[i + 1..].iter().all(|&q| self.has_edge(p, q)))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn unite(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
        }
    }
}

fn connected_components(vertices: &[u64], edges: &[(u64, u64)]) -> Vec<Vec<u64>> {
    let index_of = |v: u64| vertices.binary_search(&v).unwrap();
    let mut uf = UnionFind::new(vertices.len());
    for &(p, q) in edges {
        uf.unite(index_of(p), index_of(q));
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<u64>> = Default::default();
    for (i, &v) in vertices.iter().enumerate() {
        by_root.entry(uf.find(i)).or_default().push(v);
    }
    let mut components: Vec<Vec<u64>> = by_root.into_values().collect();
    components.sort_by_key(|c| {
        let has_two = c.contains(&2);
        (!has_two, *c.first().unwrap())
    });
    components
}
