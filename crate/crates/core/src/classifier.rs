//! Tightness: `D̃(K) = 2^{m-d-1}` checked numerically, and recognition of
//! simplex-sphere joins `Δ^[r] * ∂Δ^{N_1} * ... * ∂Δ^{N_k}`.
//!
//! A complex is such a join exactly when its minimal non-faces are pairwise
//! disjoint; the `N_t` are then the minimal non-faces and the cone vertices
//! are everything they miss.

use serde::Serialize;

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::generate;
use crate::hochster::d_total;
use crate::linalg::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinDecomposition {
    pub cone_vertices: Simplex,
    pub sphere_factors: Vec<Simplex>,
    /// Set when `K` is not a simplex-sphere join.
    pub residual: bool,
}

impl Serialize for JoinDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            cone_vertices: Vec<usize>,
            sphere_factors: Vec<Vec<usize>>,
            residual: bool,
        }
        Repr {
            cone_vertices: self.cone_vertices.vertices().collect(),
            sphere_factors: self
                .sphere_factors
                .iter()
                .map(|f| f.vertices().collect())
                .collect(),
            residual: self.residual,
        }
        .serialize(s)
    }
}

fn require_full(k: &Complex) -> Result<()> {
    if k.full_support() {
        Ok(())
    } else {
        Err(Error::NotFullSupport(format!(
            "vertex set is {} but the universe is [{}]",
            k.support(),
            k.m()
        )))
    }
}

pub fn decompose(k: &Complex) -> Result<JoinDecomposition> {
    require_full(k)?;
    let factors = k.minimal_non_faces();
    let mut seen = Simplex::EMPTY;
    let mut disjoint = true;
    for f in &factors {
        if !f.intersection(seen).is_empty() {
            disjoint = false;
            break;
        }
        seen = seen.union(*f);
    }
    if !disjoint {
        return Ok(JoinDecomposition {
            cone_vertices: Simplex::EMPTY,
            sphere_factors: factors,
            residual: true,
        });
    }
    Ok(JoinDecomposition {
        cone_vertices: k.universe().difference(seen),
        sphere_factors: factors,
        residual: false,
    })
}

/// `D̃(K; F) = 2^{m - dim K - 1}`.
pub fn is_tight_numeric(k: &Complex, field: FieldSpec) -> Result<bool> {
    require_full(k)?;
    let exponent = k.m() as isize - k.dim() - 1;
    Ok(d_total(k, field)? == 1u64 << exponent)
}

pub fn is_tight_structural(k: &Complex) -> Result<bool> {
    Ok(!decompose(k)?.residual)
}

/// Numeric tightness for a recognized join, computed factor by factor:
/// `D̃` of the join is the product of `D̃` over the factors, so only the
/// small spheres are swept. Falls back to the full sweep otherwise.
pub fn is_tight_factored(k: &Complex, field: FieldSpec) -> Result<bool> {
    let dec = decompose(k)?;
    if dec.residual {
        return is_tight_numeric(k, field);
    }
    let mut product = 1u64;
    for n in &dec.sphere_factors {
        product *= d_total(&generate::boundary(n.len())?, field)?;
    }
    if !dec.cone_vertices.is_empty() {
        product *= d_total(&generate::simplex(dec.cone_vertices.len())?, field)?;
    }
    let exponent = k.m() as isize - k.dim() - 1;
    Ok(product == 1u64 << exponent)
}

/// `⌊(m-1)/2⌋`: a tight complex on `[m]` has at least this dimension.
pub fn tightness_necessary_dim(m: usize) -> Result<usize> {
    if m == 0 {
        return Err(Error::Range("need m ≥ 1".into()));
    }
    Ok((m - 1) / 2)
}
