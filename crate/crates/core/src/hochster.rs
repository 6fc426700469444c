//! Bigraded Betti numbers of the Stanley–Reisner ring through full
//! subcomplexes, and the total `D̃(K) = Σ_J t̃b(K|_J)`.
//!
//! The sweep visits every `J ⊆ [m]` in Gray-code order, so each step toggles
//! one vertex and the restricted facets are updated in place. Chunks of the
//! Gray sequence run on the rayon pool and their partial tables are summed.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::homology::reduced_betti;
use crate::linalg::FieldSpec;

/// Largest `m` accepted by the subset sweep.
pub const SWEEP_CAPACITY: usize = 24;

/// Above this size restricted complexes are looked up in a per-worker memo.
const MEMO_THRESHOLD: usize = 12;

/// Gray-code steps handled by one task.
const CHUNK: u64 = 1 << 8;

/// Map `(i, j) → β^{-i,2j}`; absent keys are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedTable {
    m: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BigradedTable {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

#[derive(Serialize)]
struct EntryRow {
    i: usize,
    j: usize,
    value: u64,
}

impl Serialize for BigradedTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            m: usize,
            field: FieldSpec,
            entries: Vec<EntryRow>,
            total: u64,
        }
        Repr {
            m: self.m,
            field: self.field,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &value)| EntryRow { i, j, value })
                .collect(),
            total: self.total(),
        }
        .serialize(s)
    }
}

/// `sums[j][deg + 1] = Σ_{|J| = j} β̃_deg(K|_J)`.
type SizeSums = Vec<Vec<u64>>;

fn check_sweep(k: &Complex) -> Result<()> {
    if !k.full_support() {
        return Err(Error::NotFullSupport(format!(
            "vertex set is {} but the universe is [{}]",
            k.support(),
            k.m()
        )));
    }
    if k.m() > SWEEP_CAPACITY {
        return Err(Error::Capacity(format!(
            "subset sweep needs m ≤ {SWEEP_CAPACITY}, got {}",
            k.m()
        )));
    }
    Ok(())
}

fn gray(n: u64) -> u64 {
    n ^ (n >> 1)
}

fn sweep(k: &Complex, field: FieldSpec) -> SizeSums {
    let m = k.m();
    let width = (k.dim() + 2) as usize;
    let total: u64 = 1 << m;
    let chunks = total.div_ceil(CHUNK);
    let zero = || vec![vec![0u64; width]; m + 1];
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut sums = zero();
            let mut memo: HashMap<Vec<Simplex>, Vec<usize>> = HashMap::new();
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut j = gray(start);
            let mut masked: Vec<Simplex> =
                k.facets().iter().map(|f| f.intersection(Simplex::from_bits(j))).collect();
            for n in start..end {
                if n > start {
                    let next = gray(n);
                    let bit = j ^ next;
                    if next & bit != 0 {
                        for (t, f) in masked.iter_mut().zip(k.facets()) {
                            *t = Simplex::from_bits(t.bits() | (f.bits() & bit));
                        }
                    } else {
                        for t in masked.iter_mut() {
                            *t = Simplex::from_bits(t.bits() & !bit);
                        }
                    }
                    j = next;
                }
                let size = j.count_ones() as usize;
                let restricted = Complex::from_facets_unchecked(m, masked.clone());
                let betti = if size > MEMO_THRESHOLD {
                    let onto = Simplex::from_bits(j);
                    let key: Vec<Simplex> =
                        restricted.facets().iter().map(|f| f.compress(onto)).collect();
                    memo.entry(key)
                        .or_insert_with(|| reduced_betti(&restricted, field).values().to_vec())
                        .clone()
                } else {
                    reduced_betti(&restricted, field).values().to_vec()
                };
                for (slot, b) in sums[size].iter_mut().zip(&betti) {
                    *slot += *b as u64;
                }
            }
            sums
        })
        .reduce(zero, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(&b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        })
}

/// `β^{-i,2j}(K) = Σ_{|J| = j} β̃_{j-i-1}(K|_J)` for all `(i, j)`.
pub fn bigraded(k: &Complex, field: FieldSpec) -> Result<BigradedTable> {
    check_sweep(k)?;
    let sums = sweep(k, field);
    let mut entries = BTreeMap::new();
    for (j, row) in sums.iter().enumerate() {
        for (t, &value) in row.iter().enumerate() {
            // t = deg + 1, so i = j - deg - 1 = j - t
            if value > 0 {
                entries.insert((j - t, j), value);
            }
        }
    }
    Ok(BigradedTable { m: k.m(), field, entries })
}

/// `D̃(K) = Σ_{J ⊆ [m]} t̃b(K|_J)`.
pub fn d_total(k: &Complex, field: FieldSpec) -> Result<u64> {
    check_sweep(k)?;
    let d: u64 = sweep(k, field).iter().flatten().sum();
    debug_assert!(
        d >= 1u64 << (k.m() as isize - k.mdim() - 1).max(0),
        "D̃ below 2^(m - mdim - 1) for {k:?}"
    );
    Ok(d)
}

/// `τ_i(K) = (1/(m+1)) Σ_J β̃_i(K|_J) / C(m, |J|)`, exactly.
pub fn tau(k: &Complex, field: FieldSpec, i: isize) -> Result<BigRational> {
    if i < -1 {
        return Err(Error::Range(format!("degree {i} below -1")));
    }
    check_sweep(k)?;
    let m = k.m();
    let sums = sweep(k, field);
    let mut acc = BigRational::from_integer(BigInt::from(0));
    let t = (i + 1) as usize;
    let mut binom = BigInt::from(1);
    for (j, row) in sums.iter().enumerate() {
        if j > 0 {
            binom = binom * BigInt::from(m - j + 1) / BigInt::from(j);
        }
        if let Some(&v) = row.get(t) {
            if v > 0 {
                acc += BigRational::new(BigInt::from(v), binom.clone());
            }
        }
    }
    Ok(acc / BigRational::from_integer(BigInt::from(m + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn simplex_table_is_trivial() {
        for m in 1..=6 {
            let t = bigraded(&generate::simplex(m).unwrap(), FieldSpec::F2).unwrap();
            assert_eq!(t.entries().len(), 1);
            assert_eq!(t.get(0, 0), 1);
        }
    }

    #[test]
    fn small_spheres() {
        let s0 = bigraded(&generate::boundary(2).unwrap(), FieldSpec::F2).unwrap();
        let expected: BTreeMap<_, _> = [((0, 0), 1), ((1, 2), 1)].into_iter().collect();
        assert_eq!(s0.entries(), &expected);
        assert_eq!(s0.total(), 2);

        let circle = bigraded(&generate::boundary(3).unwrap(), FieldSpec::Rationals).unwrap();
        let expected: BTreeMap<_, _> = [((0, 0), 1), ((1, 3), 1)].into_iter().collect();
        assert_eq!(circle.entries(), &expected);
    }

    #[test]
    fn pentagon_and_k23() {
        let c5 = generate::cycle(5).unwrap();
        let k23 = generate::complete_bipartite(2, 3).unwrap();
        assert_eq!(d_total(&c5, FieldSpec::F2).unwrap(), 12);
        assert_eq!(d_total(&k23, FieldSpec::F2).unwrap(), 12);
        assert_eq!(d_total(&c5, FieldSpec::Rationals).unwrap(), 12);
    }

    #[test]
    fn discrete_points() {
        assert_eq!(d_total(&generate::skeleton(5, 0).unwrap(), FieldSpec::F2).unwrap(), 50);
        assert_eq!(d_total(&generate::skeleton(4, 0).unwrap(), FieldSpec::F2).unwrap(), 18);
        assert_eq!(d_total(&Complex::empty(0), FieldSpec::F2).unwrap(), 1);
    }

    #[test]
    fn total_matches_bigraded_sum() {
        let k = generate::skeleton_ext(6, 1, 3).unwrap();
        let t = bigraded(&k, FieldSpec::F2).unwrap();
        assert_eq!(t.total(), d_total(&k, FieldSpec::F2).unwrap());
        for &(i, j) in t.entries().keys() {
            let deg = j as isize - i as isize - 1;
            assert!((i, j) == (0, 0) || (0..=k.dim()).contains(&deg));
        }
    }

    #[test]
    fn tau_values() {
        let s0 = generate::boundary(2).unwrap();
        assert_eq!(tau(&s0, FieldSpec::F2, 0).unwrap(), frac(1, 3));
        for m in 1..=5 {
            let k = generate::simplex(m).unwrap();
            assert_eq!(tau(&k, FieldSpec::F2, -1).unwrap(), frac(1, m as i64 + 1));
            assert_eq!(tau(&k, FieldSpec::F2, 0).unwrap(), frac(0, 1));
        }
        assert!(tau(&s0, FieldSpec::F2, -2).is_err());
    }

    #[test]
    fn preconditions() {
        let ghost = Complex::build(3, [[1, 2]]).unwrap();
        assert!(matches!(d_total(&ghost, FieldSpec::F2), Err(Error::NotFullSupport(_))));
        let big = generate::simplex(25).unwrap();
        assert!(matches!(d_total(&big, FieldSpec::F2), Err(Error::Capacity(_))));
    }

    #[test]
    fn memo_path_agrees() {
        // m = 14 crosses the memo threshold; a simplex-sphere join has a
        // known product value
        let k = generate::simplex_sphere_join(10, &[2, 2]).unwrap();
        assert_eq!(d_total(&k, FieldSpec::F2).unwrap(), 4);
    }
}
