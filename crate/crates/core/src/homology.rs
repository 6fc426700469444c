//! Reduced simplicial homology over a field.
//!
//! Everything is computed on the augmented chain complex, where `C_{-1}` is
//! spanned by the empty face and `∂_0` sends every vertex to it. This makes
//! `β̃_{-1}({∅}) = 1` fall out of the rank formula with no special casing.

use serde::Serialize;

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::linalg::{rank, FieldSpec, SparseMatrix};

/// Reduced Betti numbers `β̃_{-1}, ..., β̃_{dim}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    field: FieldSpec,
    degrees: Vec<isize>,
    betti: Vec<usize>,
}

impl BettiTable {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `β̃_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.betti.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// `(degree, β̃_degree)` pairs from degree -1 upwards.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.degrees.iter().copied().zip(self.betti.iter().copied())
    }

    /// Values indexed from degree -1.
    pub fn values(&self) -> &[usize] {
        &self.betti
    }

    /// Largest stored degree (the dimension of the complex).
    pub fn top_degree(&self) -> isize {
        self.betti.len() as isize - 2
    }

    pub fn total(&self) -> usize {
        self.betti.iter().sum()
    }
}

/// Matrix of `∂_i : C_i → C_{i-1}`, for `-1 ≤ i ≤ dim K + 1`.
///
/// Rows are the `(i-1)`-faces and columns the `i`-faces, both in
/// lexicographic order. The entry for deleting the vertex in position `p`
/// is `(-1)^p`, or 1 over F2.
pub fn boundary_matrix(k: &Complex, i: isize, field: FieldSpec) -> Result<SparseMatrix> {
    let dim = k.dim();
    if i < -1 || i > dim + 1 {
        return Err(Error::Range(format!(
            "boundary degree {i} outside -1..={}",
            dim + 1
        )));
    }
    let faces = k.faces_by_dim();
    Ok(boundary_from_faces(&faces, i, field))
}

/// `faces[k]` holds the faces of dimension `k - 1`.
fn boundary_from_faces(faces: &[Vec<Simplex>], i: isize, field: FieldSpec) -> SparseMatrix {
    let empty: Vec<Simplex> = Vec::new();
    let group = |d: isize| -> &Vec<Simplex> {
        if d < -1 {
            &empty
        } else {
            faces.get((d + 1) as usize).unwrap_or(&empty)
        }
    };
    let cols = group(i);
    let rows = group(i - 1);
    let mut entries = Vec::with_capacity(cols.len() * (i + 1).max(0) as usize);
    if !rows.is_empty() {
        for (c, sigma) in cols.iter().enumerate() {
            for (pos, face) in sigma.codim_one_faces() {
                let r = rows.binary_search(&face).expect("faces are downward closed");
                let sign = if field == FieldSpec::F2 || pos % 2 == 0 { 1 } else { -1 };
                entries.push((r, c, sign));
            }
        }
    }
    SparseMatrix::new_unchecked(rows.len(), cols.len(), entries)
}

pub fn reduced_betti(k: &Complex, field: FieldSpec) -> BettiTable {
    let faces = k.faces_by_dim();
    let dim = faces.len() as isize - 2;
    // ranks[t] = rank ∂_{t-1}, for t = 0..=dim+2
    let ranks: Vec<usize> = (-1..=dim + 1)
        .map(|i| {
            if i <= -1 || i > dim {
                0
            } else {
                rank(&boundary_from_faces(&faces, i, field), field)
            }
        })
        .collect();
    let betti = (-1..=dim)
        .map(|i| {
            let t = (i + 1) as usize;
            faces[t].len() - ranks[t] - ranks[t + 1]
        })
        .collect();
    BettiTable {
        field,
        degrees: (-1..=dim).collect(),
        betti,
    }
}

/// `t̃b(K)`, the sum of all reduced Betti numbers; 1 for `{∅}`.
pub fn tb_reduced(k: &Complex, field: FieldSpec) -> usize {
    reduced_betti(k, field).total()
}

/// `tb(K)`: `t̃b(K) + 1` for nonempty `K`, and 0 for `{∅}`.
pub fn tb_unreduced(k: &Complex, field: FieldSpec) -> usize {
    if k.is_empty_complex() {
        0
    } else {
        tb_reduced(k, field) + 1
    }
}

/// `χ̃(K) = Σ_{i ≥ -1} (-1)^i f_i` with `f_{-1} = 1`.
pub fn reduced_euler(k: &Complex) -> i64 {
    let mut chi = -1i64;
    for (i, f) in k.f_vector().into_iter().enumerate() {
        if i % 2 == 0 {
            chi += f as i64;
        } else {
            chi -= f as i64;
        }
    }
    chi
}
