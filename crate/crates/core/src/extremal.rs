//! Closed forms and extremal answer sets: `g(m, d)`, the `t̃b` upper bounds,
//! the maximizers of `t̃b` and of `D̃`, and the tight lower bound.
//!
//! Answers carry generated witnesses, and each witness is re-measured by the
//! homology or Hochster engine before the answer is returned.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::generate::{skeleton, skeleton_ext};
use crate::hochster::d_total;
use crate::homology::tb_reduced;
use crate::linalg::FieldSpec;

/// Witnesses are re-measured only up to this many vertices.
pub const WITNESS_CHECK_LIMIT: usize = 12;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn check_md(m: usize, d: usize) -> Result<()> {
    if d >= m {
        Err(Error::Range(format!("need 0 ≤ d < m, got m={m}, d={d}")))
    } else {
        Ok(())
    }
}

/// `g(m, d) = Σ_{j=d+1}^{m} C(m, j) C(j-1, d)`.
pub fn g(m: usize, d: usize) -> Result<BigUint> {
    check_md(m, d)?;
    Ok(g_unchecked(m, d))
}

fn g_unchecked(m: usize, d: usize) -> BigUint {
    (d + 1..=m).map(|j| binomial(m, j) * binomial(j - 1, d)).sum()
}

/// `g(m, d) + g(m, d-1) = 2^{m-d} C(m, d)` for every `1 ≤ d < m`.
pub fn g_recurrence_check(m: usize) -> bool {
    (1..m).all(|d| {
        g_unchecked(m, d) + g_unchecked(m, d - 1) == (BigUint::one() << (m - d)) * binomial(m, d)
    })
}

/// The `d` maximizing `g(m, ·)`, by evaluating every `d`. A tie is a
/// domain error.
pub fn g_argmax(m: usize) -> Result<usize> {
    if m == 0 {
        return Err(Error::Range("g_argmax needs m ≥ 1".into()));
    }
    let values: Vec<BigUint> = (0..m).map(|d| g_unchecked(m, d)).collect();
    let best = values.iter().max().expect("m ≥ 1");
    let at: Vec<usize> = (0..m).filter(|&d| &values[d] == best).collect();
    if at.len() > 1 {
        return Err(Error::Domain(format!("g({m}, ·) is maximal at several d: {at:?}")));
    }
    Ok(at[0])
}

/// Upper bound for `t̃b` over `d`-dimensional complexes on `[m]`.
pub fn tb_upper_bound(m: usize, d: usize) -> Result<BigUint> {
    check_md(m, d)?;
    let h = m / 2;
    Ok(if d == m - 1 {
        BigUint::zero()
    } else if d < h {
        binomial(m - 1, d + 1)
    } else {
        binomial(m - 1, h) - binomial(d, h)
    })
}

/// `D̃(Δ_(d)^[m]) = g(m, d+1) + 1`.
pub fn d_skeleton_value(m: usize, d: usize) -> Result<BigUint> {
    check_md(m, d)?;
    Ok(g_unchecked(m, d + 1) + BigUint::one())
}

/// `2^{m-d-1}`, the least `D̃` of a `d`-dimensional complex on `[m]`.
pub fn tight_bound(m: usize, d: usize) -> Result<BigUint> {
    check_md(m, d)?;
    Ok(BigUint::one() << (m - d - 1))
}

/// The functional an [`ExtremalAnswer`] is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Functional {
    TbReduced,
    DTotal,
}

/// Counts that fit in 64 bits serialize as numbers, larger ones as decimal
/// strings.
pub fn serialize_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.collect_str(v),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalAnswer {
    #[serde(serialize_with = "serialize_big")]
    pub value: BigUint,
    pub witnesses: Vec<Complex>,
    pub theorem: String,
    pub functional: Functional,
    /// False when the witnesses were too large to re-measure.
    pub checked: bool,
}

impl ExtremalAnswer {
    fn new(theorem: &str, functional: Functional, value: BigUint, witnesses: Vec<Complex>) -> Result<Self> {
        let check = witnesses.iter().all(|w| w.m() <= WITNESS_CHECK_LIMIT);
        if check {
            for w in &witnesses {
                let measured = match functional {
                    Functional::TbReduced => BigUint::from(tb_reduced(w, FieldSpec::F2)),
                    Functional::DTotal => BigUint::from(d_total(w, FieldSpec::F2)?),
                };
                if measured != value {
                    return Err(Error::Domain(format!(
                        "{theorem}: witness {w:?} measures {measured}, expected {value}"
                    )));
                }
            }
        }
        Ok(ExtremalAnswer {
            value,
            witnesses,
            theorem: theorem.to_string(),
            functional,
            checked: check,
        })
    }
}

/// Representatives of the `d`-dimensional complexes on `[m]` with the
/// largest `t̃b`.
pub fn sigma_tb_witnesses(m: usize, d: usize) -> Result<ExtremalAnswer> {
    check_md(m, d)?;
    let h = m / 2;
    let witnesses = if d == m - 1 || d < h {
        vec![skeleton(m, d)?]
    } else if d + 3 <= m {
        vec![skeleton_ext(m, h - 1, d)?]
    } else if m % 2 == 1 {
        // d = m - 2 with m odd; when h = d the second member is the plain
        // d-skeleton
        let second = if h < d { skeleton_ext(m, h, d)? } else { skeleton(m, d)? };
        vec![skeleton_ext(m, h - 1, d)?, second]
    } else {
        vec![skeleton_ext(m, h - 1, d)?]
    };
    ExtremalAnswer::new("SIGMA-2.9", Functional::TbReduced, tb_upper_bound(m, d)?, witnesses)
}

/// Representatives of all complexes on `[m]` (any dimension) with the
/// largest `t̃b`.
///
/// For `m ≥ 3` these are skeleta: `k = (m-3)/2` for odd `m`, and both
/// `k = m/2 - 1` and `k = m/2 - 2` for even `m`, with value
/// `C(m-1, ⌊(m-1)/2⌋)`. For `m ≤ 2` the answer is the discrete complex on
/// `[m]`.
pub fn sigma_tb_global(m: usize) -> Result<ExtremalAnswer> {
    if m == 0 {
        return Err(Error::Range("need m ≥ 1".into()));
    }
    let (value, witnesses) = if m <= 2 {
        (BigUint::from(m - 1), vec![skeleton(m, 0)?])
    } else if m % 2 == 1 {
        (binomial(m - 1, (m - 1) / 2), vec![skeleton(m, (m - 3) / 2)?])
    } else {
        (
            binomial(m - 1, (m - 1) / 2),
            vec![skeleton(m, m / 2 - 1)?, skeleton(m, m / 2 - 2)?],
        )
    };
    ExtremalAnswer::new("TB-2.2", Functional::TbReduced, value, witnesses)
}

/// The largest `D̃` over all complexes on `[m]`: `g(m, ⌊(m-1)/3⌋) + 1`,
/// attained only by `Δ_(⌊(m-1)/3⌋-1)^[m]`. Defined for `m ≥ 4`.
pub fn d_max(m: usize) -> Result<ExtremalAnswer> {
    if m < 4 {
        return Err(Error::Domain(format!(
            "d_max is stated for m ≥ 4; m = {m} has no skeleton witness"
        )));
    }
    let t = (m - 1) / 3;
    let value = g_unchecked(m, t) + BigUint::one();
    ExtremalAnswer::new("DMAX-4.2", Functional::DTotal, value, vec![skeleton(m, t - 1)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, 6), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(60, 30), big(118264581564861424));
    }

    #[test]
    fn g_values() {
        assert_eq!(g(5, 1).unwrap(), big(49));
        assert_eq!(g(4, 1).unwrap(), big(17));
        let row: Vec<BigUint> = (0..9).map(|d| g(9, d).unwrap()).collect();
        let expected = [511u64, 1793, 2815, 2561, 1471, 545, 127, 17, 1];
        assert_eq!(row, expected.map(big).to_vec());
        assert!(g(3, 3).is_err());
    }

    #[test]
    fn argmax_and_recurrence() {
        assert_eq!(g_argmax(9).unwrap(), 2);
        for m in 1..=60 {
            assert_eq!(g_argmax(m).unwrap(), (m - 1) / 3, "m={m}");
        }
        for m in 1..=30 {
            assert!(g_recurrence_check(m));
        }
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(tb_upper_bound(6, 2).unwrap(), big(10));
        assert_eq!(tb_upper_bound(6, 3).unwrap(), big(9));
        assert_eq!(tb_upper_bound(3, 1).unwrap(), big(1));
        assert_eq!(tb_upper_bound(4, 2).unwrap(), big(2));
        for m in 1..=10 {
            assert_eq!(tb_upper_bound(m, m - 1).unwrap(), big(0));
        }
        assert!(tb_upper_bound(3, 3).is_err());
    }

    #[test]
    fn tight_and_skeleton_values() {
        assert_eq!(tight_bound(5, 1).unwrap(), big(8));
        assert_eq!(d_skeleton_value(5, 0).unwrap(), big(50));
        assert_eq!(d_skeleton_value(4, 3).unwrap(), big(1));
    }

    #[test]
    fn witness_sets() {
        let a = sigma_tb_global(5).unwrap();
        assert_eq!(a.value, big(6));
        assert_eq!(a.witnesses, vec![skeleton(5, 1).unwrap()]);
        assert!(a.checked);

        let b = sigma_tb_global(6).unwrap();
        assert_eq!(b.value, big(10));
        assert_eq!(b.witnesses, vec![skeleton(6, 2).unwrap(), skeleton(6, 1).unwrap()]);

        let c = sigma_tb_witnesses(7, 5).unwrap();
        assert_eq!(
            c.witnesses,
            vec![skeleton_ext(7, 2, 5).unwrap(), skeleton_ext(7, 3, 5).unwrap()]
        );
        assert_eq!(c.value, tb_upper_bound(7, 5).unwrap());

        let small = sigma_tb_witnesses(3, 1).unwrap();
        assert_eq!(small.witnesses.len(), 2);
        assert_eq!(sigma_tb_global(1).unwrap().value, big(0));
        assert_eq!(sigma_tb_global(2).unwrap().value, big(1));
    }

    #[test]
    fn every_witness_set_measures_its_bound() {
        for m in 1..=9 {
            for d in 0..m {
                let a = sigma_tb_witnesses(m, d).unwrap();
                assert!(a.checked);
                assert!(a.witnesses.iter().all(|w| w.dim() == d as isize));
            }
        }
    }

    #[test]
    fn d_max_answers() {
        let a = d_max(5).unwrap();
        assert_eq!(a.value, big(50));
        assert_eq!(a.witnesses, vec![skeleton(5, 0).unwrap()]);
        assert_eq!(d_max(4).unwrap().value, big(18));
        assert!(matches!(d_max(3), Err(Error::Domain(_))));
    }
}
