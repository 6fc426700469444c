//! Orderly generation of complexes on `[m]` up to isomorphism.
//!
//! A complex is stored as a down-set of subsets of `[m]`, coded as a `u64`
//! whose bit `p` stands for the subset at position `p`. Positions list the
//! subsets by decreasing size, so the lowest set bit is always a facet of
//! the largest size. The canonical code of a class is the largest code over
//! all `m!` relabelings.
//!
//! Generation starts from the discrete complex and adds one subset at a
//! time, always at a position below every current bit, keeping the child
//! only when its code is canonical. Removing the lowest bit of a canonical
//! code leaves a canonical code, so every class has exactly one parent and
//! is produced exactly once.

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};

/// Largest `m` the enumerator accepts.
pub const EXHAUSTIVE_CAPACITY: usize = 6;

/// From this `m` on the caller must opt into long runs.
pub const LONG_RUN_THRESHOLD: usize = 6;

struct Lattice {
    m: usize,
    /// Subset bits at each position.
    subset: Vec<u64>,
    /// Position of each subset.
    position: Vec<u8>,
    /// `tables[π][k][v]`: image under `π` of byte `k` of a code equal to `v`.
    tables: Vec<Vec<[u64; 256]>>,
    base: u64,
}

impl Lattice {
    fn new(m: usize) -> Lattice {
        let n = 1usize << m;
        let mut subset: Vec<u64> = (0..n as u64).collect();
        subset.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        let mut position = vec![0u8; n];
        for (p, &s) in subset.iter().enumerate() {
            position[s as usize] = p as u8;
        }
        let bytes = n.div_ceil(8);
        let mut tables = Vec::new();
        for perm in permutations(m) {
            let image: Vec<u8> = subset
                .iter()
                .map(|&s| {
                    let mut t = 0u64;
                    for (v, &to) in perm.iter().enumerate() {
                        if s >> v & 1 == 1 {
                            t |= 1 << to;
                        }
                    }
                    position[t as usize]
                })
                .collect();
            let mut table = vec![[0u64; 256]; bytes];
            for (k, row) in table.iter_mut().enumerate() {
                for (v, slot) in row.iter_mut().enumerate() {
                    for b in 0..8 {
                        let p = 8 * k + b;
                        if v >> b & 1 == 1 && p < n {
                            *slot |= 1 << image[p];
                        }
                    }
                }
            }
            tables.push(table);
        }
        let base = (0..=m)
            .map(|v| if v == 0 { 0 } else { 1u64 << (v - 1) })
            .fold(0u64, |acc, s| acc | 1 << position[s as usize]);
        Lattice { m, subset, position, tables, base }
    }

    fn image(&self, table: &[[u64; 256]], code: u64) -> u64 {
        table
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, row)| acc | row[(code >> (8 * k) & 0xff) as usize])
    }

    fn is_canonical(&self, code: u64) -> bool {
        self.tables.iter().all(|t| self.image(t, code) <= code)
    }

    fn contains(&self, code: u64, s: u64) -> bool {
        code >> self.position[s as usize] & 1 == 1
    }

    /// Positions `p` below the lowest bit of `code` whose subset has at most
    /// `max_size` elements and all of whose codim-1 faces are present.
    fn children(&self, code: u64, max_size: usize) -> Vec<u64> {
        let lowest = code.trailing_zeros() as usize;
        let mut out = Vec::new();
        for p in (0..lowest).rev() {
            let s = self.subset[p];
            let size = s.count_ones() as usize;
            if size < 2 || size > max_size {
                continue;
            }
            let closed = Simplex::from_bits(s)
                .codim_one_faces()
                .all(|(_, f)| self.contains(code, f.bits()));
            if !closed {
                continue;
            }
            let child = code | 1 << p;
            if self.is_canonical(child) {
                out.push(child);
            }
        }
        out
    }

    fn dim(&self, code: u64) -> isize {
        self.subset[code.trailing_zeros() as usize].count_ones() as isize - 1
    }

    fn complex(&self, code: u64) -> Complex {
        let faces = (0..self.subset.len())
            .filter(|&p| code >> p & 1 == 1)
            .map(|p| Simplex::from_bits(self.subset[p]))
            .collect();
        Complex::from_facets_unchecked(self.m, faces)
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut c = vec![0usize; m];
    out.push(perm.clone());
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Checks the enumeration capacity for `m`.
pub fn check_capacity(m: usize, allow_long: bool) -> Result<()> {
    if m == 0 {
        return Err(Error::Range("enumeration needs m ≥ 1".into()));
    }
    if m > EXHAUSTIVE_CAPACITY {
        return Err(Error::Capacity(format!(
            "exhaustive enumeration supports m ≤ {EXHAUSTIVE_CAPACITY}, got {m}"
        )));
    }
    if m >= LONG_RUN_THRESHOLD && !allow_long {
        return Err(Error::Capacity(format!(
            "m = {m} is a long run; enable it explicitly"
        )));
    }
    Ok(())
}

/// Depth-first stream of one representative per isomorphism class of
/// complexes on `[m]` with every vertex present, restricted to dimension
/// `d` when given.
pub struct Classes {
    lattice: Lattice,
    dim: Option<usize>,
    max_size: usize,
    stack: Vec<u64>,
}

impl Iterator for Classes {
    type Item = Complex;

    fn next(&mut self) -> Option<Complex> {
        while let Some(code) = self.stack.pop() {
            let mut kids = self.lattice.children(code, self.max_size);
            kids.reverse();
            self.stack.extend(kids);
            let keep = match self.dim {
                Some(d) => self.lattice.dim(code) == d as isize,
                None => true,
            };
            if keep {
                return Some(self.lattice.complex(code));
            }
        }
        None
    }
}

/// Representatives of `Σ(m, d)` (or of every dimension when `d` is `None`),
/// one per isomorphism class. `m` up to 5 runs freely; `m = 6` needs
/// `allow_long`.
pub fn classes(m: usize, d: Option<usize>, allow_long: bool) -> Result<Classes> {
    check_capacity(m, allow_long)?;
    if let Some(d) = d {
        if d >= m {
            return Err(Error::Range(format!("need d < m, got m={m}, d={d}")));
        }
    }
    let lattice = Lattice::new(m);
    let stack = vec![lattice.base];
    Ok(Classes {
        lattice,
        dim: d,
        max_size: d.map_or(m, |d| d + 1),
        stack,
    })
}

/// Collected form of [`classes`].
pub fn enumerate(m: usize, d: Option<usize>, allow_long: bool) -> Result<Vec<Complex>> {
    Ok(classes(m, d, allow_long)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_form;
    use std::collections::BTreeSet;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(3, Some(1), false).unwrap().len(), 3);
        assert_eq!(enumerate(3, None, false).unwrap().len(), 5);
        assert_eq!(enumerate(4, Some(1), false).unwrap().len(), 10);
        assert_eq!(enumerate(5, Some(1), false).unwrap().len(), 33);
        for m in 1..=5 {
            let top = enumerate(m, Some(m - 1), false).unwrap();
            assert_eq!(top, vec![crate::generate::simplex(m).unwrap()]);
        }
    }

    #[test]
    fn classes_are_distinct_and_sound() {
        for m in 1..=5 {
            let all = enumerate(m, None, false).unwrap();
            let keys: BTreeSet<_> = all.iter().map(|k| canonical_form(k).unwrap()).collect();
            assert_eq!(keys.len(), all.len());
            assert!(all.iter().all(|k| k.full_support()));
            let per_dim: usize = (0..m).map(|d| enumerate(m, Some(d), false).unwrap().len()).sum();
            assert_eq!(per_dim, all.len());
        }
    }

    #[test]
    fn capacity_gate() {
        assert!(matches!(enumerate(6, Some(1), false), Err(Error::Capacity(_))));
        assert!(matches!(enumerate(7, Some(1), true), Err(Error::Capacity(_))));
        assert!(enumerate(0, None, false).is_err());
        assert!(enumerate(3, Some(3), false).is_err());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        let distinct: BTreeSet<_> = permutations(4).into_iter().collect();
        assert_eq!(distinct.len(), 24);
    }
}
