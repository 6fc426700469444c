//! Isomorphism-invariant keys for complexes.
//!
//! The key of a complex is the smallest sorted facet list over every
//! relabeling of `[m]` that is compatible with an iteratively refined vertex
//! colouring. The colouring is itself an isomorphism invariant, so two
//! complexes get the same key exactly when they are isomorphic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};

/// Default bound on `m` for exhaustive relabeling.
pub const DEFAULT_PERMUTATION_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    m: usize,
    facets: Vec<Simplex>,
}

impl CanonicalForm {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// The canonical representative itself.
    pub fn to_complex(&self) -> Complex {
        Complex::from_facets_unchecked(self.m, self.facets.clone())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_complex().serialize(s)
    }
}

pub fn canonical_form(k: &Complex) -> Result<CanonicalForm> {
    canonical_form_with_limit(k, DEFAULT_PERMUTATION_LIMIT)
}

pub fn canonical_form_with_limit(k: &Complex, limit: usize) -> Result<CanonicalForm> {
    let m = k.m();
    if m > limit {
        return Err(Error::Capacity(format!(
            "canonical form needs m ≤ {limit}, got {m}"
        )));
    }
    let colour = refined_colours(k);

    // Vertices sorted by colour; each colour class owns a contiguous block of
    // new labels.
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 1..=m {
        cells.entry(colour[v - 1]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut block_start = Vec::with_capacity(cells.len());
    let mut next = 1;
    for cell in &cells {
        block_start.push(next);
        next += cell.len();
    }

    let mut perm = vec![0usize; m];
    let mut best: Option<Vec<Simplex>> = None;
    let mut orders: Vec<Vec<usize>> = cells.clone();
    search_cells(k, &mut orders, &block_start, 0, &mut perm, &mut best);

    Ok(CanonicalForm {
        m,
        facets: best.unwrap_or_else(|| vec![Simplex::EMPTY]),
    })
}

pub fn is_isomorphic(a: &Complex, b: &Complex) -> Result<bool> {
    let (a, b) = if a.full_support() && b.full_support() {
        (a.clone(), b.clone())
    } else {
        (a.compact(), b.compact())
    };
    if a.m() != b.m()
        || a.facets().len() != b.facets().len()
        || a.f_vector() != b.f_vector()
    {
        return Ok(false);
    }
    Ok(canonical_form(&a)? == canonical_form(&b)?)
}

/// Walks every ordering of each cell (cell by cell), writing the induced
/// labeling into `perm` and keeping the smallest image.
fn search_cells(
    k: &Complex,
    orders: &mut [Vec<usize>],
    block_start: &[usize],
    cell: usize,
    perm: &mut [usize],
    best: &mut Option<Vec<Simplex>>,
) {
    if cell == orders.len() {
        let mut image: Vec<Simplex> = k
            .facets()
            .iter()
            .map(|f| {
                Simplex::from_bits(f.vertices().fold(0u64, |acc, v| acc | 1 << (perm[v - 1] - 1)))
            })
            .collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            *best = Some(image);
        }
        return;
    }
    let n = orders[cell].len();
    let mut c = vec![0usize; n];
    // Heap's algorithm over the current cell.
    assign(&orders[cell], block_start[cell], perm);
    search_cells(k, orders, block_start, cell + 1, perm, best);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                orders[cell].swap(0, i);
            } else {
                orders[cell].swap(c[i], i);
            }
            assign(&orders[cell], block_start[cell], perm);
            search_cells(k, orders, block_start, cell + 1, perm, best);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn assign(order: &[usize], start: usize, perm: &mut [usize]) {
    for (offset, &v) in order.iter().enumerate() {
        perm[v - 1] = start + offset;
    }
}

/// Colour refinement: start from (facet count, facet size multiset) and
/// repeatedly split by the multiset of co-facet colour patterns.
fn refined_colours(k: &Complex) -> Vec<usize> {
    let m = k.m();
    let facets: Vec<Simplex> = k.facets().iter().copied().filter(|f| !f.is_empty()).collect();

    let initial: Vec<Vec<usize>> = (1..=m)
        .map(|v| {
            let mut sizes: Vec<usize> = facets
                .iter()
                .filter(|f| f.contains(v))
                .map(|f| f.len())
                .collect();
            sizes.sort_unstable();
            sizes
        })
        .collect();
    let mut colour = rank_signatures(&initial);
    let mut classes = count_distinct(&colour);

    loop {
        let signatures: Vec<(usize, Vec<Vec<usize>>)> = (1..=m)
            .map(|v| {
                let mut around: Vec<Vec<usize>> = facets
                    .iter()
                    .filter(|f| f.contains(v))
                    .map(|f| {
                        let mut cs: Vec<usize> =
                            f.vertices().filter(|&u| u != v).map(|u| colour[u - 1]).collect();
                        cs.sort_unstable();
                        cs
                    })
                    .collect();
                around.sort_unstable();
                (colour[v - 1], around)
            })
            .collect();
        let refined = rank_signatures(&signatures);
        let refined_classes = count_distinct(&refined);
        colour = refined;
        if refined_classes == classes {
            break;
        }
        classes = refined_classes;
    }
    colour
}

fn rank_signatures<T: Ord + Clone>(sigs: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = sigs.to_vec();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(s).expect("present"))
        .collect()
}

fn count_distinct(colour: &[usize]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn relabeled_cycle_has_same_key() {
        let c5 = generate::cycle(5).unwrap();
        let moved = c5.relabel(&[3, 5, 1, 2, 4]).unwrap();
        assert_ne!(c5, moved);
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&moved).unwrap());
        assert!(is_isomorphic(&c5, &moved).unwrap());
    }

    #[test]
    fn cycle_is_not_bipartite_k23() {
        let c5 = generate::cycle(5).unwrap();
        let k23 = generate::complete_bipartite(2, 3).unwrap();
        assert!(!is_isomorphic(&c5, &k23).unwrap());
    }

    #[test]
    fn refinement_cannot_split_regular_graphs_but_key_still_separates() {
        // Two 2-regular graphs on 6 vertices: C_6 and two triangles.
        let c6 = generate::cycle(6).unwrap();
        let two_triangles =
            Complex::build(6, [[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn capacity_limit() {
        let big = generate::simplex(11).unwrap();
        assert!(matches!(canonical_form(&big), Err(Error::Capacity(_))));
        assert!(canonical_form_with_limit(&big, 11).is_ok());
    }

    #[test]
    fn ghost_vertices_are_ignored_by_isomorphism() {
        let a = Complex::build(4, [[1, 2]]).unwrap();
        let b = Complex::build(3, [[2, 3]]).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
    }
}
