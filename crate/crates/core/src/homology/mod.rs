//! Reduced simplicial homology over prime fields and the rationals.
//!
//! Chains use the augmented complex: the `(-1)`-chains are spanned by `∅`
//! and `∂_0` sends every vertex to `∅`, so the Betti numbers computed here
//! are the reduced ones. Faces are oriented by ascending vertex order and
//! removing the vertex in position `k` contributes the sign `(-1)^k`.

mod field;
mod matrix;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

pub use self::field::{FieldSpec, Prime};
pub use self::matrix::{rank_bareiss, rank_gf2, rank_mod_p, rank_rational, IntMatrix};

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// Reduced Betti numbers `β̃_{-1}, β̃_0, …, β̃_dim` over a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    field: FieldSpec,
    /// Index of the first entry of `values`; always `-1`.
    from_dim: isize,
    values: Vec<usize>,
}

impl BettiVector {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The values starting at dimension `-1`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `β̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.values.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Largest stored dimension.
    pub fn top_dim(&self) -> isize {
        self.values.len() as isize - 2
    }

    /// `Σ_i (-1)^i β̃_i` over `i >= -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.values.iter().enumerate().map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) }).sum()
    }

    /// Checks `Σ_{i>=0} (-1)^i f_i = 1 + Σ_{i>=-1} (-1)^i β̃_i`.
    pub fn satisfies_euler_relation(&self, f_vector: &[usize]) -> bool {
        let chi: i64 = f_vector.iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
        chi == 1 + self.reduced_euler_characteristic()
    }

    /// Whether the homology is that of a wedge of `count` spheres of
    /// dimension `dim` (for `count = 0`: everything vanishes).
    pub fn is_wedge_of_spheres(&self, dim: isize, count: usize) -> bool {
        (-1..=self.top_dim().max(dim)).all(|i| self.get(i) == if i == dim { count } else { 0 })
    }
}

/// Index of each face within its dimension.
fn index_faces(faces: &[VertexSet]) -> HashMap<VertexSet, usize> {
    faces.iter().enumerate().map(|(i, &f)| (f, i)).collect()
}

/// `∂_d` with rows indexed by `lower` and columns by `upper`.
fn boundary_between(lower: &[VertexSet], upper: &[VertexSet]) -> IntMatrix {
    let index = index_faces(lower);
    let triplets = upper.iter().enumerate().flat_map(|(col, &face)| {
        let index = &index;
        face.iter().enumerate().map(move |(k, v)| {
            let row = index[&face.remove(v)];
            (row, col, if k % 2 == 0 { 1 } else { -1 })
        })
    });
    IntMatrix::from_triplets(lower.len(), upper.len(), triplets)
}

/// The boundary map `∂_d : C_d → C_{d-1}` as a matrix whose rows are the
/// `(d-1)`-faces and columns the `d`-faces, both in lexicographic order.
/// `∂_0` is the augmentation row of ones; dimensions with no faces give
/// empty matrices.
pub fn boundary_matrix(complex: &SimplicialComplex, d: isize) -> IntMatrix {
    let lower = if d >= 0 { complex.faces(d - 1) } else { Vec::new() };
    let upper = complex.faces(d);
    boundary_between(&lower, &upper)
}

/// Reduced Betti numbers over `field`.
pub fn betti(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiVector> {
    let Some(dim) = complex.dim() else { return Err(Error::VoidComplex) };
    let by_size = complex.faces_by_size();
    // ranks[k] = rank ∂_{k-1}, the map from k-vertex faces to (k-1)-vertex faces
    let ranks: Vec<usize> = (0..by_size.len())
        .into_par_iter()
        .map(|k| if k == 0 { 0 } else { boundary_between(&by_size[k - 1], &by_size[k]).rank(field) })
        .collect();
    let values = (0..by_size.len())
        .map(|k| {
            let above = ranks.get(k + 1).copied().unwrap_or(0);
            by_size[k].len() - ranks[k] - above
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(values.len() as isize, dim + 2);
    Ok(BettiVector { field, from_dim: -1, values })
}

/// Whether `β̃_i = 0` for every `i <= p`.
pub fn is_p_acyclic(complex: &SimplicialComplex, p: isize, field: FieldSpec) -> Result<bool> {
    let b = betti(complex, field)?;
    Ok((-1..=p).all(|i| b.get(i) == 0))
}

/// Cohen–Macaulay test: every face `σ`, including `∅`, must have a link that
/// is `(dim lk(σ) - 1)`-acyclic.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let faces: Vec<VertexSet> = complex.faces_by_size().into_iter().flatten().collect();
    faces
        .par_iter()
        .map(|&sigma| {
            let link = complex.link(sigma)?;
            let d = link.dim().expect("link of a face is not void");
            is_p_acyclic(&link, d - 1, field)
        })
        .try_reduce(|| true, |a, b| Ok(a && b))
}
