//! The commuting graph of a noncommutative Lie algebra over GF(q): vertex
//! indexing, centralizer-based adjacency, and connected components.
//!
//! Components are computed by one Gaussian elimination per vertex: the
//! neighbors of u are exactly the vertices inside ker(ad_u), so unioning u
//! with that kernel's members visits every edge without ever materializing an
//! adjacency structure. The quadratic pairwise-bracket method is kept as an
//! independent oracle.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::field::{Felt, FieldRef};
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

/// Default vertex bound for the quadratic oracle.
pub const NAIVE_BOUND: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("the commuting graph is defined only for noncommutative algebras")]
    CommutativeAlgebra,
    #[error("index {0} is not a vertex (central or out of range)")]
    NotAVertex(usize),
    #[error("graph has {vertices} vertices, above the naive-method bound {bound}")]
    TooLarge { vertices: usize, bound: usize },
    #[error("vertex list is not a connected component of the graph")]
    NotAComponent,
}

/// Bijection between F_q^n and [0, q^n) by base-q digits of the coordinate
/// indices, first coordinate least significant.
#[derive(Clone, Debug)]
pub struct VertexIndexer {
    field: FieldRef,
    n: usize,
    total: usize,
}

impl VertexIndexer {
    pub fn new(field: FieldRef, n: usize) -> Self {
        let total = field.q().pow(n as u32);
        Self { field, n, total }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn encode(&self, coords: &[Felt]) -> usize {
        debug_assert_eq!(coords.len(), self.n);
        let q = self.field.q();
        coords.iter().rev().fold(0usize, |acc, c| acc * q + c.index())
    }

    #[inline]
    pub fn decode_into(&self, idx: usize, out: &mut [Felt]) {
        debug_assert!(idx < self.total);
        let q = self.field.q();
        let mut x = idx;
        for slot in out.iter_mut().take(self.n) {
            *slot = Felt((x % q) as u16);
            x /= q;
        }
    }

    pub fn decode(&self, idx: usize) -> Vec<Felt> {
        let mut out = vec![Felt::ZERO; self.n];
        self.decode_into(idx, &mut out);
        out
    }
}

/// Union-find with path halving and union by size.
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        Self { parent: (0..len as u32).collect(), size: vec![1; len] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let gp = self.parent[self.parent[x] as usize];
            self.parent[x] = gp;
            x = gp as usize;
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
    }
}

/// The commuting graph: vertices are the noncentral elements, and two
/// vertices are adjacent iff their bracket vanishes.
#[derive(Debug)]
pub struct CommutingGraph {
    algebra: LieAlgebra,
    indexer: VertexIndexer,
    center: Subspace,
    central: Vec<bool>,
    vertex_count: usize,
}

impl CommutingGraph {
    pub fn new(algebra: LieAlgebra) -> Result<Self, GraphError> {
        let center = algebra.center();
        if center.dim() == algebra.dim() {
            return Err(GraphError::CommutativeAlgebra);
        }
        let indexer = VertexIndexer::new(algebra.field().clone(), algebra.dim());
        let mut central = vec![false; indexer.total()];
        for z in center.enumerate() {
            central[indexer.encode(&z)] = true;
        }
        let q = algebra.field().q();
        let vertex_count = indexer.total() - q.pow(center.dim() as u32);
        Ok(Self { algebra, indexer, center, central, vertex_count })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> &FieldRef {
        self.algebra.field()
    }

    pub fn indexer(&self) -> &VertexIndexer {
        &self.indexer
    }

    pub fn center(&self) -> &Subspace {
        &self.center
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn is_vertex(&self, idx: usize) -> bool {
        idx < self.indexer.total() && !self.central[idx]
    }

    /// All vertex indices, ascending.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.indexer.total()).filter(move |&i| !self.central[i])
    }

    /// Centralizer of the vertex u as a subspace: ker(ad_u).
    pub fn centralizer(&self, u: usize) -> Result<Subspace, GraphError> {
        if !self.is_vertex(u) {
            return Err(GraphError::NotAVertex(u));
        }
        Ok(self.algebra.adjoint_kernel_coords(&self.indexer.decode(u)))
    }

    /// Neighbor set of u: the vertices of ker(ad_u) other than u itself.
    pub fn neighbors(&self, u: usize) -> Result<Vec<usize>, GraphError> {
        let ker = self.centralizer(u)?;
        let mut out = Vec::new();
        ker.for_each_member(|w| {
            let widx = self.indexer.encode(w);
            if widx != u && self.is_vertex(widx) {
                out.push(widx);
            }
        });
        out.sort_unstable();
        Ok(out)
    }

    /// Adjacency test. [u, v] = 0 is the same predicate as membership of v in
    /// ker(ad_u); the bracket form is the cheap one for a single pair.
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        if u == v || !self.is_vertex(u) || !self.is_vertex(v) {
            return false;
        }
        let n = self.algebra.dim();
        let mut a = vec![Felt::ZERO; n];
        let mut b = vec![Felt::ZERO; n];
        let mut out = vec![Felt::ZERO; n];
        self.indexer.decode_into(u, &mut a);
        self.indexer.decode_into(v, &mut b);
        self.algebra.bracket_coords(&a, &b, &mut out);
        out.iter().all(|c| c.is_zero())
    }

    /// Connected components via one centralizer kernel per vertex. Each union
    /// step joins u to a member of ker(ad_u), which is a genuine edge, and
    /// every edge {u, v} is seen while processing u, so the resulting
    /// partition is exactly the set of connected components.
    pub fn components(&self) -> ComponentPartition {
        let total = self.indexer.total();
        let mut uf = UnionFind::new(total);
        let n = self.algebra.dim();
        let mut coords = vec![Felt::ZERO; n];
        for u in 0..total {
            if self.central[u] {
                continue;
            }
            self.indexer.decode_into(u, &mut coords);
            let ker = self.algebra.adjoint_kernel_coords(&coords);
            ker.for_each_member(|w| {
                let widx = self.indexer.encode(w);
                if widx != u && !self.central[widx] {
                    uf.union(u, widx);
                }
            });
        }
        ComponentPartition::from_union_find(self, &mut uf)
    }

    /// Quadratic oracle: pairwise bracket tests feeding the same union-find.
    pub fn components_naive(&self, bound: usize) -> Result<ComponentPartition, GraphError> {
        if self.vertex_count > bound {
            return Err(GraphError::TooLarge { vertices: self.vertex_count, bound });
        }
        let verts: Vec<usize> = self.vertices().collect();
        let n = self.algebra.dim();
        let coords: Vec<Vec<Felt>> = verts.iter().map(|&v| self.indexer.decode(v)).collect();
        let mut uf = UnionFind::new(self.indexer.total());
        let mut out = vec![Felt::ZERO; n];
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                self.algebra.bracket_coords(&coords[i], &coords[j], &mut out);
                if out.iter().all(|c| c.is_zero()) {
                    uf.union(verts[i], verts[j]);
                }
            }
        }
        Ok(ComponentPartition::from_union_find(self, &mut uf))
    }

    /// Oracle with the default bound.
    pub fn components_naive_default(&self) -> Result<ComponentPartition, GraphError> {
        self.components_naive(NAIVE_BOUND)
    }

    /// The connected component containing u, by breadth-first search.
    pub fn component_of(&self, u: usize) -> Result<Vec<usize>, GraphError> {
        if !self.is_vertex(u) {
            return Err(GraphError::NotAVertex(u));
        }
        let mut seen = BTreeSet::new();
        seen.insert(u);
        let mut queue = vec![u];
        while let Some(v) = queue.pop() {
            for w in self.neighbors(v)? {
                if seen.insert(w) {
                    queue.push(w);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Completeness of a component, checked through centralizer subspace
    /// membership: the component must lie inside ker(ad_u) for each of its
    /// vertices u.
    pub fn is_component_complete(&self, comp: &[usize]) -> Result<bool, GraphError> {
        let Some(&first) = comp.first() else {
            return Err(GraphError::NotAComponent);
        };
        let mut sorted = comp.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != comp.len() || self.component_of(first)? != sorted {
            return Err(GraphError::NotAComponent);
        }
        let n = self.algebra.dim();
        let mut w = vec![Felt::ZERO; n];
        for &u in &sorted {
            let ker = self.centralizer(u)?;
            for &v in &sorted {
                self.indexer.decode_into(v, &mut w);
                if !ker.contains_coords(&w) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All edges {u, v} with u < v, ascending, via the per-vertex kernels.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            let nbrs = self.neighbors(u).expect("u is a vertex");
            for v in nbrs {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// The vertex partition produced by a components run: each block sorted
/// ascending, blocks ordered by smallest member, so two runs over the same
/// graph compare bit-identically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentPartition {
    components: Vec<Vec<usize>>,
    /// Component id per graph index; usize::MAX for non-vertices.
    comp_of: Vec<usize>,
}

impl ComponentPartition {
    fn from_union_find(g: &CommutingGraph, uf: &mut UnionFind) -> Self {
        let total = g.indexer.total();
        let mut by_root: std::collections::HashMap<usize, Vec<usize>> =
            std::collections::HashMap::new();
        for u in 0..total {
            if !g.central[u] {
                by_root.entry(uf.find(u)).or_default().push(u);
            }
        }
        let mut components: Vec<Vec<usize>> = by_root.into_values().collect();
        for c in &mut components {
            c.sort_unstable();
        }
        components.sort_by_key(|c| c[0]);
        let mut comp_of = vec![usize::MAX; total];
        for (id, c) in components.iter().enumerate() {
            for &u in c {
                comp_of[u] = id;
            }
        }
        Self { components, comp_of }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Component id of a vertex index, if it is a vertex.
    pub fn component_id(&self, u: usize) -> Option<usize> {
        match self.comp_of.get(u) {
            Some(&id) if id != usize::MAX => Some(id),
            _ => None,
        }
    }

    /// Component sizes as a sorted multiset (ascending).
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.components.iter().map(|c| c.len()).collect();
        s.sort_unstable();
        s
    }

    /// Looks up a component by exact vertex-set equality; input must be
    /// sorted ascending.
    pub fn find_component(&self, sorted_vertices: &[usize]) -> Option<usize> {
        let &first = sorted_vertices.first()?;
        let id = self.component_id(first)?;
        (self.components[id] == sorted_vertices).then_some(id)
    }
}
