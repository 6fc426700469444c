#![allow(dead_code)]

use rand::Rng;
use tbtool_core::{Complex, Simplex};

/// The six-vertex real projective plane.
pub fn rp2() -> Complex {
    Complex::from_json(include_str!("../fixtures/rp2_6.json")).unwrap()
}

/// Every down-set of subsets of `[m]` that contains `∅`, as a complex.
/// Subsets are decided in order of increasing size, so a subset is only
/// offered once all of its codim-1 faces have been decided.
pub fn all_labeled_complexes(m: usize) -> Vec<Complex> {
    let mut order: Vec<u64> = (1..1u64 << m).collect();
    order.sort_by_key(|s| (s.count_ones(), *s));
    let mut out = Vec::new();
    let mut chosen = vec![false; 1 << m];
    chosen[0] = true;
    fn go(i: usize, order: &[u64], chosen: &mut Vec<bool>, m: usize, out: &mut Vec<Complex>) {
        if i == order.len() {
            let faces: Vec<Simplex> = (0..chosen.len())
                .filter(|&s| chosen[s])
                .map(|s| Simplex::from_bits(s as u64))
                .collect();
            out.push(Complex::from_facets(m, faces).unwrap());
            return;
        }
        let s = order[i];
        go(i + 1, order, chosen, m, out);
        let closed = (0..m).all(|v| s >> v & 1 == 0 || chosen[(s & !(1 << v)) as usize]);
        if closed {
            chosen[s as usize] = true;
            go(i + 1, order, chosen, m, out);
            chosen[s as usize] = false;
        }
    }
    go(0, &order, &mut chosen, m, &mut out);
    out
}

/// Random Sperner family on `{2..m}` avoiding subsets of `spine`, with
/// members of size at most `max_size`.
pub fn random_family<R: Rng>(m: usize, spine: Simplex, max_size: usize, rng: &mut R) -> Vec<Simplex> {
    let rest = Simplex::prefix(m).without(1).bits();
    let mut members: Vec<Simplex> = Vec::new();
    for _ in 0..rng.gen_range(0..=2 * m) {
        let s = Simplex::from_bits(rng.gen::<u64>() & rest);
        if s.is_empty() || s.len() > max_size || s.is_subset_of(spine) {
            continue;
        }
        if members.iter().all(|t| !s.is_subset_of(*t) && !t.is_subset_of(s)) {
            members.push(s);
        }
    }
    members
}

/// Random `size`-subset of `{2..m}`.
pub fn random_spine<R: Rng>(m: usize, size: usize, rng: &mut R) -> Simplex {
    let mut pool: Vec<usize> = (2..=m).collect();
    let mut out = Simplex::EMPTY;
    for _ in 0..size {
        let i = rng.gen_range(0..pool.len());
        out = out.with(pool.swap_remove(i));
    }
    out
}

/// Width of the subsets of `[n]` meeting `over` (all subsets when `None`),
/// ordered by inclusion. By Dilworth's theorem the width is the number of
/// elements minus a maximum matching between strict comparabilities.
pub fn antichain_width(n: usize, over: Option<Simplex>) -> usize {
    let elems: Vec<u64> = (0..1u64 << n)
        .filter(|&s| over.is_none_or(|y| s & y.bits() != 0))
        .collect();
    let above: Vec<Vec<usize>> = elems
        .iter()
        .map(|&a| {
            (0..elems.len())
                .filter(|&j| elems[j] != a && elems[j] & a == a)
                .collect()
        })
        .collect();
    fn augment(u: usize, above: &[Vec<usize>], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &v in &above[u] {
            if !seen[v] {
                seen[v] = true;
                if mate[v].is_none_or(|w| augment(w, above, seen, mate)) {
                    mate[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    let mut mate = vec![None; elems.len()];
    let mut matched = 0;
    for u in 0..elems.len() {
        let mut seen = vec![false; elems.len()];
        if augment(u, &above, &mut seen, &mut mate) {
            matched += 1;
        }
    }
    elems.len() - matched
}

/// Faces of each size from raw facet lists, in lexicographic order.
pub fn faces_of_size(facets: &[Vec<usize>], size: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for f in facets {
        let n = f.len();
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize == size {
                let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                out.push(s);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn dense_boundary(facets: &[Vec<usize>], size: usize) -> Vec<Vec<i64>> {
    let cols = faces_of_size(facets, size);
    let rows = faces_of_size(facets, size - 1);
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (c, s) in cols.iter().enumerate() {
        for skip in 0..s.len() {
            let face: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect();
            let r = rows.iter().position(|x| *x == face).unwrap();
            m[r][c] = if skip % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Rank of an integer matrix reduced mod the prime `p`.
pub fn rank_mod(mut a: Vec<Vec<i64>>, p: i64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let s = inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}
