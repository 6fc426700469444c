//! Sperner families, near-cones and shifted complexes.
//!
//! Vertex 1 is the apex of every near-cone; nothing here relabels it.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::extremal::binomial;

/// An antichain of subsets of `ground`, optionally required to meet `over`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpernerFamily {
    pub ground: Simplex,
    pub members: Vec<Simplex>,
    pub over: Option<Simplex>,
}

/// File form: `{"ground": [...], "members": [[...], ...], "over": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpernerFile {
    pub ground: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<Vec<usize>>,
}

impl SpernerFamily {
    pub fn new(ground: Simplex, mut members: Vec<Simplex>, over: Option<Simplex>) -> Self {
        members.sort_unstable();
        members.dedup();
        SpernerFamily { ground, members, over }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpernerFile::from(self)).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<SpernerFamily> {
        let file: SpernerFile = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        SpernerFamily::try_from(file)
    }
}

fn vertex_list(s: Simplex) -> Vec<usize> {
    s.vertices().collect()
}

impl From<&SpernerFamily> for SpernerFile {
    fn from(f: &SpernerFamily) -> Self {
        SpernerFile {
            ground: vertex_list(f.ground),
            members: f.members.iter().map(|m| vertex_list(*m)).collect(),
            over: f.over.map(vertex_list),
        }
    }
}

impl TryFrom<SpernerFile> for SpernerFamily {
    type Error = Error;

    fn try_from(file: SpernerFile) -> Result<Self> {
        let members = file
            .members
            .into_iter()
            .map(Simplex::from_vertices)
            .collect::<Result<Vec<_>>>()?;
        let over = file.over.map(Simplex::from_vertices).transpose()?;
        Ok(SpernerFamily::new(Simplex::from_vertices(file.ground)?, members, over))
    }
}

impl Serialize for SpernerFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpernerFile::from(self).serialize(s)
    }
}

fn check_members(f: &SpernerFamily) -> Result<()> {
    match f.members.iter().find(|m| !m.is_subset_of(f.ground)) {
        Some(bad) => Err(Error::Range(format!("member {bad} not inside ground {}", f.ground))),
        None => Ok(()),
    }
}

/// No member contains another. Members outside the ground set are an error.
pub fn is_sperner(f: &SpernerFamily) -> Result<bool> {
    check_members(f)?;
    let ms = &f.members;
    for (i, a) in ms.iter().enumerate() {
        for b in &ms[i + 1..] {
            if a.is_subset_of(*b) || b.is_subset_of(*a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sperner, and every member meets `y`.
pub fn is_sperner_over(f: &SpernerFamily, y: Simplex) -> Result<bool> {
    if !y.is_subset_of(f.ground) {
        return Err(Error::Range(format!("{y} not inside ground {}", f.ground)));
    }
    Ok(is_sperner(f)? && f.members.iter().all(|m| !m.intersection(y).is_empty()))
}

/// Largest antichain in the subsets of an `n`-set: `C(n, ⌊n/2⌋)`.
pub fn sperner_max(n: usize) -> BigUint {
    binomial(n, n / 2)
}

/// Largest antichain of an `n`-set whose members all meet a fixed `k`-set:
/// `C(n, ⌈n/2⌉) - C(n-k, ⌈n/2⌉)`.
pub fn f_bound(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::Range(format!("f_bound needs 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    let c = n.div_ceil(2);
    Ok(binomial(n, c) - binomial(n - k, c))
}

fn require_apex(d: &Complex) -> Result<()> {
    if d.m() == 0 {
        Err(Error::Range("near-cone predicates need vertex 1".into()))
    } else {
        Ok(())
    }
}

/// For every face `S` with `1 ∉ S` and `j ∈ S`, `(S ∖ j) ∪ {1}` is a face.
///
/// It suffices to test facets: the swap applied to a face is contained in
/// the swap applied to any facet above it, or in that facet itself.
pub fn is_near_cone(d: &Complex) -> Result<bool> {
    require_apex(d)?;
    Ok(d.facets()
        .iter()
        .filter(|f| !f.contains(1))
        .all(|f| f.vertices().all(|j| d.contains_face(f.without(j).with(1)))))
}

/// Closed under replacing a vertex `i` by `i - 1` when `i - 1` is absent.
/// Testing facets is enough, as for [`is_near_cone`].
pub fn is_shifted(d: &Complex) -> Result<bool> {
    require_apex(d)?;
    Ok(d.facets().iter().all(|f| {
        f.vertices()
            .filter(|&i| i >= 2 && !f.contains(i - 1))
            .all(|i| d.contains_face(f.without(i).with(i - 1)))
    }))
}

/// `B(Δ) = {S ∈ Δ : S ∪ {1} ∉ Δ}`, as a family on `{2, ..., m}`.
pub fn b_delta(d: &Complex) -> Result<SpernerFamily> {
    if !is_near_cone(d)? {
        return Err(Error::Domain("complex is not a near-cone".into()));
    }
    let members = d
        .faces_by_dim()
        .into_iter()
        .flatten()
        .filter(|s| !d.contains_face(s.with(1)))
        .collect();
    Ok(SpernerFamily::new(d.universe().without(1), members, None))
}

/// The near-cone `[1 * (E(F) ∖ F)] ∪ F ∪ Δ^{{1} ∪ spine}` on `[m]`, whose
/// `B` is `F` and whose dimension is `|spine|`.
///
/// Needs `F` to be an antichain on `{2, ..., m}` with no member inside
/// `spine` and no member larger than `|spine| + 1`. With `F` and `spine`
/// both empty the result is the single vertex 1.
pub fn near_cone_from_family(f: &SpernerFamily, spine: Simplex, m: usize) -> Result<Complex> {
    if m == 0 {
        return Err(Error::Range("near-cone needs m ≥ 1".into()));
    }
    let rest = Simplex::prefix(m).without(1);
    if !spine.is_subset_of(rest) {
        return Err(Error::Range(format!("spine {spine} not inside {{2..{m}}}")));
    }
    if let Some(bad) = f.members.iter().find(|s| !s.is_subset_of(rest)) {
        return Err(Error::Range(format!("member {bad} not inside {{2..{m}}}")));
    }
    let family = SpernerFamily::new(rest, f.members.clone(), None);
    if !is_sperner(&family)? {
        return Err(Error::Domain("family is not an antichain".into()));
    }
    let d = spine.len();
    for s in &family.members {
        if s.is_subset_of(spine) {
            return Err(Error::Domain(format!("member {s} lies inside the spine {spine}")));
        }
        if s.len() > d + 1 {
            return Err(Error::Domain(format!(
                "member {s} has {} vertices, more than {}",
                s.len(),
                d + 1
            )));
        }
    }
    // Maximal faces of 1 * (E(F) ∖ F) are the cones over codim-1 faces of
    // members; everything else in it lies below one of those.
    let mut faces = family.members.clone();
    for s in &family.members {
        faces.extend(s.codim_one_faces().map(|(_, t)| t.with(1)));
    }
    faces.push(spine.with(1));
    Complex::from_facets(m, faces)
}

/// Largest `n` for [`max_antichain`].
pub const ANTICHAIN_SEARCH_CAPACITY: usize = 6;

/// Size of the largest antichain of subsets of `[n]`, restricted to
/// members meeting `over` when given, found by exhaustive branch and bound.
pub fn max_antichain(n: usize, over: Option<Simplex>) -> Result<usize> {
    if n > ANTICHAIN_SEARCH_CAPACITY {
        return Err(Error::Capacity(format!(
            "antichain search supports n ≤ {ANTICHAIN_SEARCH_CAPACITY}, got {n}"
        )));
    }
    let candidates: Vec<u64> = (0..1u64 << n)
        .filter(|&s| over.is_none_or(|y| s & y.bits() != 0))
        .collect();
    // compatible[i]: candidates after i that are incomparable with i
    let compatible: Vec<u64> = candidates
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            candidates
                .iter()
                .enumerate()
                .skip(i + 1)
                .filter(|&(_, &b)| a & b != a && a & b != b)
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    fn grow(open: u64, size: usize, compatible: &[u64], best: &mut usize) {
        if size > *best {
            *best = size;
        }
        if size + open.count_ones() as usize <= *best {
            return;
        }
        let mut rest = open;
        while rest != 0 && size + rest.count_ones() as usize > *best {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if size + 1 + (rest & compatible[i]).count_ones() as usize > *best {
                grow(rest & compatible[i], size + 1, compatible, best);
            }
        }
    }
    let all = if candidates.len() == 64 { u64::MAX } else { (1u64 << candidates.len()) - 1 };
    let mut best = 0;
    grow(all, 0, &compatible, &mut best);
    Ok(best)
}
