//! Simplicial complexes stored by their facets, and the complexes built from
//! graphs: cut complexes, total cut complexes, clique complexes and
//! Alexander duals.
//!
//! Two degenerate complexes are kept apart: the *void* complex has no faces
//! at all, while the *empty* complex has the single face `∅`. The void
//! complex has no dimension ([`SimplicialComplex::dim`] returns `None`); the
//! empty complex has dimension `-1`.

mod decomposable;
mod io;
mod shelling;

use std::collections::HashSet;

pub use self::shelling::{ShellingReport, ShellingSearch, ShellingWitness};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{k_subsets, VertexSet, MAX_VERTICES};

/// A finite simplicial complex on the ground set `{0, …, n-1}`.
///
/// Facets are inclusion-maximal and kept in lexicographic order, so two
/// complexes are equal iff they have the same ground set and the same faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal members of `faces`; duplicates collapse.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n);
        let mut candidates: Vec<VertexSet> = faces.into_iter().collect();
        if let Some(bad) = candidates.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::VertexOutOfRange { vertex: bad.difference(full).min().unwrap_or(n), n });
        }
        Ok(Self::from_faces_unchecked(n, &mut candidates))
    }

    /// Convenience constructor from explicit vertex lists.
    pub fn from_vertex_lists<I, F>(n: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        let sets = faces
            .into_iter()
            .map(|f| VertexSet::from_vertices(n, f.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(n, sets)
    }

    fn from_faces_unchecked(n: usize, candidates: &mut [VertexSet]) -> Self {
        candidates.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<VertexSet> = Vec::with_capacity(candidates.len());
        for &c in candidates.iter() {
            if !facets.iter().any(|&f| c.is_subset(f)) {
                facets.push(c);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { n, facets }
    }

    /// The complex with no faces.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `face`.
    pub fn simplex(n: usize, face: VertexSet) -> Result<Self> {
        Self::from_facets(n, [face])
    }

    /// The boundary of the simplex on `face`: all of its proper subsets.
    pub fn simplex_boundary(n: usize, face: VertexSet) -> Result<Self> {
        Self::from_facets(n, face.iter().map(|v| face.remove(v)))
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Whether the complex consists of a single simplex (including `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    /// All faces of dimension `d`, in lexicographic order.
    pub fn faces(&self, d: isize) -> Vec<VertexSet> {
        if d < -1 {
            return Vec::new();
        }
        let size = (d + 1) as usize;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &f in self.facets.iter().filter(|f| f.len() >= size) {
            for s in f.subsets_of_size(size) {
                if seen.insert(s) {
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Faces grouped by cardinality: `result[k]` holds the faces with `k`
    /// vertices (so `result[0] == [∅]`), each list in lexicographic order.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let Some(d) = self.dim() else { return Vec::new() };
        let mut seen = HashSet::new();
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); (d + 2) as usize];
        for &f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s) {
                    by_size[s.len()].push(s);
                }
            }
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        by_size
    }

    /// Face counts `(f_0, f_1, …, f_dim)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().skip(1).map(Vec::len).collect()
    }

    /// `lk(τ) = {σ : σ ∩ τ = ∅, σ ∪ τ ∈ Δ}`.
    pub fn link(&self, tau: VertexSet) -> Result<Self> {
        if !self.contains_face(tau) {
            return Err(Error::NotAFace(tau.to_string()));
        }
        let mut parts: Vec<VertexSet> =
            self.facets.iter().filter(|&&f| tau.is_subset(f)).map(|&f| f.difference(tau)).collect();
        Ok(Self::from_faces_unchecked(self.n, &mut parts))
    }

    /// `dl(τ) = {σ ∈ Δ : τ ⊄ σ}`.
    pub fn deletion(&self, tau: VertexSet) -> Self {
        let mut parts = Vec::with_capacity(self.facets.len());
        for &f in &self.facets {
            if tau.is_subset(f) {
                // the maximal faces of ⟨f⟩ avoiding τ drop one vertex of τ
                parts.extend(tau.iter().map(|v| f.remove(v)));
            } else {
                parts.push(f);
            }
        }
        Self::from_faces_unchecked(self.n, &mut parts)
    }

    /// Inclusion-minimal non-faces (the Stanley–Reisner generators), sorted.
    ///
    /// A set is a non-face iff it meets the complement of every facet, so the
    /// minimal non-faces are the minimal transversals of the facet
    /// complements; they are built one complement at a time.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let mut transversals = vec![VertexSet::EMPTY];
        for &f in &self.facets {
            let edge = f.complement(self.n);
            let mut next: Vec<VertexSet> = Vec::new();
            let mut extended: Vec<VertexSet> = Vec::new();
            for &t in &transversals {
                if !t.intersection(edge).is_empty() {
                    next.push(t);
                } else {
                    extended.extend(edge.iter().map(|v| t.insert(v)));
                }
            }
            // hitting sets already kept are minimal; extended ones may be absorbed
            extended.sort_unstable_by_key(|s| s.len());
            for e in extended {
                if !next.iter().any(|&t| t.is_subset(e)) {
                    next.push(e);
                }
            }
            transversals = next;
        }
        transversals.sort_unstable();
        transversals
    }

    /// `Δ^∨ = {σ : V ∖ σ ∉ Δ}` over the ground set `V = {0, …, n-1}`.
    pub fn alexander_dual(&self) -> Self {
        let mut parts: Vec<VertexSet> = self.minimal_nonfaces().into_iter().map(|s| s.complement(self.n)).collect();
        Self::from_faces_unchecked(self.n, &mut parts)
    }

    /// Writes the facet file: header `n t`, then one ascending vertex list per
    /// facet. The empty facet is written as `{}`.
    pub fn to_facet_file(&self) -> String {
        io::write_facet_file(self.n, &self.facets)
    }

    pub fn parse_facet_file(text: &str) -> Result<Self> {
        let (n, facets) = io::parse_facet_list(text)?;
        Self::from_facets(n, facets)
    }
}

pub use self::io::parse_facet_list;

/// The clique complex `Cl(G)`: faces are the cliques of `G`.
pub fn clique_complex(graph: &Graph) -> SimplicialComplex {
    let n = graph.vertex_count();
    let mut cliques = Vec::new();
    bron_kerbosch(graph, VertexSet::EMPTY, graph.vertices(), VertexSet::EMPTY, &mut cliques);
    SimplicialComplex::from_faces_unchecked(n, &mut cliques)
}

fn bron_kerbosch(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p.union(x).iter().max_by_key(|&u| g.neighbors(u).intersection(p).len()).expect("non-empty");
    let mut p = p;
    let mut x = x;
    for v in p.difference(g.neighbors(pivot)) {
        let nb = g.neighbors(v);
        bron_kerbosch(g, r.insert(v), p.intersection(nb), x.intersection(nb), out);
        p = p.remove(v);
        x = x.insert(v);
    }
}

fn check_k(graph: &Graph, k: usize) -> Result<()> {
    let n = graph.vertex_count();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} must satisfy 1 <= k <= n = {n}")));
    }
    Ok(())
}

/// The `k`-cut complex `Δ_k(G)`: facets are the `(n-k)`-sets whose
/// complement induces a disconnected subgraph.
pub fn cut_complex(graph: &Graph, k: usize) -> Result<SimplicialComplex> {
    check_k(graph, k)?;
    let n = graph.vertex_count();
    let mut facets: Vec<VertexSet> =
        k_subsets(n, k).filter(|&c| !graph.is_connected_within(c)).map(|c| c.complement(n)).collect();
    facets.sort_unstable();
    Ok(SimplicialComplex { n, facets })
}

/// The total `k`-cut complex `Δ_k^t(G)`: facets are the `(n-k)`-sets whose
/// complement is independent.
pub fn total_cut_complex(graph: &Graph, k: usize) -> Result<SimplicialComplex> {
    check_k(graph, k)?;
    let n = graph.vertex_count();
    let mut facets: Vec<VertexSet> =
        k_subsets(n, k).filter(|&c| graph.is_independent(c)).map(|c| c.complement(n)).collect();
    facets.sort_unstable();
    Ok(SimplicialComplex { n, facets })
}
