//! Finite simplicial complexes on the vertex universe `[m] = {1, ..., m}`.
//!
//! Faces are bit vectors (`Simplex`), vertex `i` living in bit `i - 1`. A
//! [`Complex`] stores only its facets; every other face query is derived
//! from them. The empty complex `{∅}` is the complex whose only facet is the
//! empty simplex, so it always has a value and reduced Betti number
//! `β̃_{-1} = 1`. A complex with no faces at all cannot be represented.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex universe.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, stored as a bit vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub const fn from_bits(bits: u64) -> Self {
        Simplex(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a simplex from 1-based vertex labels.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::Range(format!(
                    "vertex {v} outside 1..={MAX_VERTICES}"
                )));
            }
            bits |= 1 << (v - 1);
        }
        Ok(Simplex(bits))
    }

    /// The single vertex `{v}`; `v` must lie in `1..=64`.
    pub fn vertex(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        Simplex(1 << (v - 1))
    }

    /// `{1, ..., n}`.
    pub fn prefix(n: usize) -> Self {
        Simplex(universe_bits(n))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset_of(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Simplex) -> Simplex {
        Simplex(self.0 | other.0)
    }

    pub fn intersection(self, other: Simplex) -> Simplex {
        Simplex(self.0 & other.0)
    }

    pub fn difference(self, other: Simplex) -> Simplex {
        Simplex(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Simplex {
        self.union(Simplex::vertex(v))
    }

    pub fn without(self, v: usize) -> Simplex {
        self.difference(Simplex::vertex(v))
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// Moves every vertex up by `by` labels.
    pub fn shifted(self, by: usize) -> Simplex {
        if by >= 64 {
            Simplex(0)
        } else {
            Simplex(self.0 << by)
        }
    }

    /// Re-indexes `self ∩ onto` so that the k-th smallest vertex of `onto`
    /// becomes vertex k.
    pub fn compress(self, onto: Simplex) -> Simplex {
        let mut out = 0u64;
        for (k, v) in onto.vertices().enumerate() {
            if self.contains(v) {
                out |= 1 << k;
            }
        }
        Simplex(out)
    }

    /// Inverse of [`Simplex::compress`]: vertex k goes to the k-th smallest
    /// vertex of `onto`.
    pub fn expand(self, onto: Simplex) -> Simplex {
        let mut out = 0u64;
        for (k, v) in onto.vertices().enumerate() {
            if self.0 & (1 << k) != 0 {
                out |= 1 << (v - 1);
            }
        }
        Simplex(out)
    }

    /// Faces obtained by deleting one vertex, paired with the deleted
    /// vertex's position (0-based) in increasing vertex order.
    pub fn codim_one_faces(self) -> impl Iterator<Item = (usize, Simplex)> {
        self.vertices()
            .enumerate()
            .map(move |(pos, v)| (pos, self.without(v)))
    }

    /// All subsets of `self`, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            of: self.0,
            next: Some(self.0),
        }
    }
}

/// Size first, then lexicographic on increasing vertex lists.
impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the smallest differing vertex belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration in decreasing numeric order.
pub struct Subsets {
    of: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Simplex;

    fn next(&mut self) -> Option<Simplex> {
        let cur = self.next?;
        self.next = (cur != 0).then(|| (cur - 1) & self.of);
        Some(Simplex(cur))
    }
}

pub(crate) fn universe_bits(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Keeps the inclusion-maximal members and sorts them. An empty input
/// yields `[∅]`.
pub(crate) fn maximal_elements(mut faces: Vec<Simplex>) -> Vec<Simplex> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.0.cmp(&b.0)));
    faces.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset_of(*k)) {
            kept.push(f);
        }
    }
    if kept.is_empty() {
        kept.push(Simplex::EMPTY);
    }
    kept.sort_unstable();
    kept
}

/// `(dim, mdim, f-vector)` of a complex. For `{∅}` both dimensions are -1
/// and the f-vector is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub dim: isize,
    pub mdim: isize,
    pub f_vector: Vec<usize>,
}

/// A finite simplicial complex given by its facets over the universe `[m]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    m: usize,
    facets: Vec<Simplex>,
    full_support: bool,
}

impl Complex {
    /// Downward closure of `faces` on `[m]`. Faces contained in other listed
    /// faces are dropped.
    pub fn build<I, F>(m: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let faces = collect_faces(m, faces)?;
        Self::from_facets(m, faces)
    }

    /// Like [`Complex::build`], but a listed face contained in another one is
    /// an error instead of being dropped.
    pub fn build_strict<I, F>(m: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let faces = collect_faces(m, faces)?;
        for (i, a) in faces.iter().enumerate() {
            for (j, b) in faces.iter().enumerate() {
                if i != j && a.is_subset_of(*b) {
                    return Err(Error::Domain(format!(
                        "face {a} is contained in listed face {b}"
                    )));
                }
            }
        }
        Self::from_facets(m, faces)
    }

    pub fn from_facets(m: usize, faces: Vec<Simplex>) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "m = {m} exceeds {MAX_VERTICES} vertices"
            )));
        }
        let universe = universe_bits(m);
        if let Some(bad) = faces.iter().find(|f| f.0 & !universe != 0) {
            return Err(Error::Range(format!("face {bad} not contained in [{m}]")));
        }
        Ok(Self::from_facets_unchecked(m, faces))
    }

    pub(crate) fn from_facets_unchecked(m: usize, faces: Vec<Simplex>) -> Self {
        let facets = maximal_elements(faces);
        let support = facets.iter().fold(0u64, |acc, f| acc | f.0);
        Complex {
            m,
            full_support: support == universe_bits(m),
            facets,
        }
    }

    /// The complex `{∅}` on the universe `[m]`.
    pub fn empty(m: usize) -> Self {
        Self::from_facets_unchecked(m.min(MAX_VERTICES), Vec::new())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// True when every vertex of `[m]` is a face.
    pub fn full_support(&self) -> bool {
        self.full_support
    }

    pub fn universe(&self) -> Simplex {
        Simplex(universe_bits(self.m))
    }

    /// Union of all faces.
    pub fn support(&self) -> Simplex {
        Simplex(self.facets.iter().fold(0, |acc, f| acc | f.0))
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn mdim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).min().unwrap_or(-1)
    }

    pub fn contains_face(&self, sigma: Simplex) -> bool {
        self.facets.iter().any(|f| sigma.is_subset_of(*f))
    }

    /// All faces grouped by dimension: entry `k` holds the faces of
    /// dimension `k - 1`, each group sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<Simplex>> {
        let mut all: Vec<u64> = Vec::new();
        for f in &self.facets {
            all.extend(f.subsets().map(|s| s.0));
        }
        all.sort_unstable();
        all.dedup();
        let top = self.dim() + 1;
        let mut groups = vec![Vec::new(); (top + 1) as usize];
        for bits in all {
            groups[bits.count_ones() as usize].push(Simplex(bits));
        }
        for g in &mut groups {
            g.sort_unstable();
        }
        groups
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().skip(1).map(Vec::len).collect()
    }

    pub fn metrics(&self) -> Metrics {
        Metrics {
            dim: self.dim(),
            mdim: self.mdim(),
            f_vector: self.f_vector(),
        }
    }

    /// The full subcomplex on `j`, re-indexed onto `1..=|j|` in increasing
    /// vertex order.
    pub fn restrict(&self, j: Simplex) -> Result<Complex> {
        self.check_in_universe(j)?;
        let faces = self
            .facets
            .iter()
            .map(|f| f.intersection(j).compress(j))
            .collect();
        Ok(Self::from_facets_unchecked(j.len(), faces))
    }

    /// `K \ w`: the full subcomplex on `[m] ∖ {w}`.
    pub fn delete_vertex(&self, w: usize) -> Result<Complex> {
        if w == 0 || w > self.m {
            return Err(Error::Range(format!("vertex {w} not in [{}]", self.m)));
        }
        self.restrict(self.universe().without(w))
    }

    /// Link of `sigma`, re-indexed onto the universe `[m] ∖ sigma`.
    pub fn link(&self, sigma: Simplex) -> Result<Complex> {
        self.check_face(sigma)?;
        let rest = self.universe().difference(sigma);
        let faces = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .map(|f| f.difference(sigma).compress(rest))
            .collect();
        Ok(Self::from_facets_unchecked(rest.len(), faces))
    }

    /// Star of `sigma` on the same universe.
    pub fn star(&self, sigma: Simplex) -> Result<Complex> {
        self.check_face(sigma)?;
        let faces = self
            .facets
            .iter()
            .copied()
            .filter(|f| sigma.is_subset_of(*f))
            .collect();
        Ok(Self::from_facets_unchecked(self.m, faces))
    }

    /// `K * L`; the vertices of `L` are shifted up by `K.m()`.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "join needs {m} vertices, limit is {MAX_VERTICES}"
            )));
        }
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                faces.push(a.union(b.shifted(self.m)));
            }
        }
        Ok(Self::from_facets_unchecked(m, faces))
    }

    /// Face-wise union; both complexes must share the universe.
    pub fn union(&self, other: &Complex) -> Result<Complex> {
        self.check_same_universe(other)?;
        let faces = self.facets.iter().chain(&other.facets).copied().collect();
        Ok(Self::from_facets_unchecked(self.m, faces))
    }

    /// Face-wise intersection; both complexes must share the universe.
    pub fn intersection(&self, other: &Complex) -> Result<Complex> {
        self.check_same_universe(other)?;
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                faces.push(a.intersection(*b));
            }
        }
        Ok(Self::from_facets_unchecked(self.m, faces))
    }

    /// Inclusion-minimal subsets of `[m]` that are not faces.
    pub fn minimal_non_faces(&self) -> Vec<Simplex> {
        let universe = self.universe();
        let mut out = Vec::new();
        for layer in self.faces_by_dim() {
            for sigma in layer {
                for v in universe.difference(sigma).vertices() {
                    // generate each candidate only from its largest vertex
                    if sigma.max_vertex().is_some_and(|top| top > v) {
                        continue;
                    }
                    let candidate = sigma.with(v);
                    if !self.contains_face(candidate)
                        && candidate
                            .codim_one_faces()
                            .all(|(_, face)| self.contains_face(face))
                    {
                        out.push(candidate);
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_pure(&self) -> bool {
        self.dim() == self.mdim()
    }

    /// Whether the geometric realization is connected. `{∅}` is not.
    pub fn is_connected(&self) -> bool {
        if self.is_empty_complex() {
            return false;
        }
        let mut reached = self.facets[0];
        loop {
            let next = self
                .facets
                .iter()
                .filter(|f| !f.intersection(reached).is_empty())
                .fold(reached, |acc, f| acc.union(*f));
            if next == reached {
                break;
            }
            reached = next;
        }
        reached == self.support()
    }

    /// Pure of dimension `n ≥ 0`, every `(n-1)`-face in exactly two facets,
    /// and facets strongly connected through `(n-1)`-faces.
    pub fn is_pseudomanifold(&self) -> bool {
        let n = self.dim();
        if n < 0 || !self.is_pure() {
            return false;
        }
        let mut ridges: std::collections::HashMap<Simplex, Vec<usize>> =
            std::collections::HashMap::new();
        for (idx, f) in self.facets.iter().enumerate() {
            for (_, r) in f.codim_one_faces() {
                ridges.entry(r).or_default().push(idx);
            }
        }
        if ridges.values().any(|owners| owners.len() != 2) {
            return false;
        }
        let count = self.facets.len();
        let mut seen = vec![false; count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (_, r) in self.facets[i].codim_one_faces() {
                for &j in &ridges[&r] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The same complex on its own support, re-indexed onto `1..=|support|`.
    pub fn compact(&self) -> Complex {
        let support = self.support();
        let faces = self.facets.iter().map(|f| f.compress(support)).collect();
        Self::from_facets_unchecked(support.len(), faces)
    }

    /// Image under the vertex map `v ↦ perm[v - 1]`; `perm` must be a
    /// permutation of `1..=m`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Complex> {
        let mut seen = 0u64;
        if perm.len() != self.m {
            return Err(Error::Range(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.m
            )));
        }
        for &p in perm {
            if p == 0 || p > self.m || seen & (1 << (p - 1)) != 0 {
                return Err(Error::Range(format!("{perm:?} is not a permutation")));
            }
            seen |= 1 << (p - 1);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Complex {
        let faces = self
            .facets
            .iter()
            .map(|f| Simplex(f.vertices().fold(0, |acc, v| acc | 1 << (perm[v - 1] - 1))))
            .collect();
        Self::from_facets_unchecked(self.m, faces)
    }

    /// Facets as sorted 1-based vertex lists, in facet order.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.vertices().collect())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ComplexFile::from(self)).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Complex> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        Complex::try_from(file)
    }

    fn check_in_universe(&self, s: Simplex) -> Result<()> {
        if s.is_subset_of(self.universe()) {
            Ok(())
        } else {
            Err(Error::Range(format!("{s} not contained in [{}]", self.m)))
        }
    }

    fn check_face(&self, sigma: Simplex) -> Result<()> {
        if self.contains_face(sigma) {
            Ok(())
        } else {
            Err(Error::NotAFace(format!("{sigma} is not a face")))
        }
    }

    fn check_same_universe(&self, other: &Complex) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::Range(format!(
                "universes differ: [{}] vs [{}]",
                self.m, other.m
            )))
        }
    }
}

fn collect_faces<I, F>(m: usize, faces: I) -> Result<Vec<Simplex>>
where
    I: IntoIterator<Item = F>,
    F: IntoIterator<Item = usize>,
{
    let mut out = Vec::new();
    for face in faces {
        let mut bits = 0u64;
        for v in face {
            if v == 0 || v > m {
                return Err(Error::Range(format!("vertex {v} not in [{m}]")));
            }
            bits |= 1 << (v - 1);
        }
        out.push(Simplex(bits));
    }
    Ok(out)
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(m={}, facets=[", self.m)?;
        for (k, s) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("])")
    }
}

/// On-disk form: `{"m": <int>, "facets": [[v, ...], ...]}` with 1-based
/// vertices, facets sorted by size and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&Complex> for ComplexFile {
    fn from(k: &Complex) -> Self {
        ComplexFile {
            m: k.m,
            facets: k.facet_lists(),
        }
    }
}

impl TryFrom<ComplexFile> for Complex {
    type Error = Error;

    fn try_from(file: ComplexFile) -> Result<Complex> {
        Complex::build(file.m, file.facets)
    }
}

impl Serialize for Complex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexFile::from(self).serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(vs: &[usize]) -> Simplex {
        Simplex::from_vertices(vs.iter().copied()).unwrap()
    }

    fn cycle5() -> Complex {
        Complex::build(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]).unwrap()
    }

    #[test]
    fn simplex_order_is_size_then_lex() {
        let mut v = vec![s(&[2, 3]), s(&[1, 4]), s(&[5]), s(&[1, 2, 3]), s(&[1, 3])];
        v.sort();
        assert_eq!(v, vec![s(&[5]), s(&[1, 3]), s(&[1, 4]), s(&[2, 3]), s(&[1, 2, 3])]);
    }

    #[test]
    fn compress_and_expand_are_inverse() {
        let onto = s(&[2, 4, 7]);
        let x = s(&[4, 7]);
        assert_eq!(x.compress(onto), s(&[2, 3]));
        assert_eq!(x.compress(onto).expand(onto), x);
    }

    #[test]
    fn build_triangle_boundary() {
        let k = Complex::build(3, [vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.facets().len(), 3);
        assert!(k.full_support());
    }

    #[test]
    fn build_drops_dominated_faces() {
        let k = Complex::build(3, [vec![1, 2, 3], vec![1, 2]]).unwrap();
        assert_eq!(k.facets(), &[s(&[1, 2, 3])]);
        assert!(Complex::build_strict(3, [vec![1, 2, 3], vec![1, 2]]).is_err());
    }

    #[test]
    fn build_s0() {
        let k = Complex::build(2, [[1], [2]]).unwrap();
        assert_eq!(k.dim(), 0);
        assert_eq!(k.facets().len(), 2);
    }

    #[test]
    fn build_rejects_bad_vertices() {
        assert!(matches!(Complex::build(3, [[0, 1]]), Err(Error::Range(_))));
        assert!(matches!(Complex::build(3, [[1, 4]]), Err(Error::Range(_))));
        assert!(matches!(Complex::build(0, [[1]]), Err(Error::Range(_))));
    }

    #[test]
    fn empty_complex_conventions() {
        let e = Complex::build(0, Vec::<Vec<usize>>::new()).unwrap();
        assert!(e.is_empty_complex());
        assert_eq!(e.dim(), -1);
        assert_eq!(e.metrics(), Metrics { dim: -1, mdim: -1, f_vector: vec![] });
    }

    #[test]
    fn restrict_examples() {
        let simplex3 = Complex::build(3, [[1, 2, 3]]).unwrap();
        assert_eq!(
            simplex3.restrict(s(&[1, 2])).unwrap(),
            Complex::build(2, [[1, 2]]).unwrap()
        );
        assert_eq!(
            cycle5().restrict(s(&[1, 2, 3])).unwrap(),
            Complex::build(3, [[1, 2], [2, 3]]).unwrap()
        );
        let e = cycle5().restrict(Simplex::EMPTY).unwrap();
        assert!(e.is_empty_complex());
        assert_eq!(e.m(), 0);
        assert!(matches!(cycle5().restrict(s(&[6])), Err(Error::Range(_))));
    }

    #[test]
    fn link_and_star() {
        let b3 = Complex::build(3, [[1, 2], [2, 3], [1, 3]]).unwrap();
        assert_eq!(
            b3.link(s(&[1])).unwrap(),
            Complex::build(2, [[1], [2]]).unwrap()
        );
        let b4 = Complex::build(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        assert_eq!(
            b4.link(s(&[1, 2])).unwrap(),
            Complex::build(2, [[1], [2]]).unwrap()
        );
        assert_eq!(
            b3.star(s(&[1])).unwrap().facets(),
            &[s(&[1, 2]), s(&[1, 3])]
        );
        assert!(matches!(b3.link(s(&[1, 2, 3])), Err(Error::NotAFace(_))));
    }

    #[test]
    fn join_examples() {
        let s0 = Complex::build(2, [[1], [2]]).unwrap();
        let c4 = s0.join(&s0).unwrap();
        assert_eq!(c4, Complex::build(4, [[1, 3], [1, 4], [2, 3], [2, 4]]).unwrap());
        let point = Complex::build(1, [[1]]).unwrap();
        let path = point.join(&s0).unwrap();
        assert_eq!(path, Complex::build(3, [[1, 2], [1, 3]]).unwrap());
        let k = cycle5();
        assert_eq!(k.join(&Complex::empty(0)).unwrap(), k);
        assert_eq!(Complex::empty(0).join(&k).unwrap(), k);
    }

    #[test]
    fn delete_vertex_examples() {
        assert_eq!(
            cycle5().delete_vertex(5).unwrap(),
            Complex::build(4, [[1, 2], [2, 3], [3, 4]]).unwrap()
        );
        let simplex3 = Complex::build(3, [[1, 2, 3]]).unwrap();
        assert_eq!(simplex3.delete_vertex(3).unwrap(), Complex::build(2, [[1, 2]]).unwrap());
        let s0 = Complex::build(2, [[1], [2]]).unwrap();
        assert_eq!(s0.delete_vertex(1).unwrap(), Complex::build(1, [[1]]).unwrap());
        assert!(s0.delete_vertex(3).is_err());
    }

    #[test]
    fn minimal_non_face_examples() {
        let b3 = Complex::build(3, [[1, 2], [2, 3], [1, 3]]).unwrap();
        assert_eq!(b3.minimal_non_faces(), vec![s(&[1, 2, 3])]);
        let c4 = Complex::build(4, [[1, 2], [2, 3], [3, 4], [1, 4]]).unwrap();
        assert_eq!(c4.minimal_non_faces(), vec![s(&[1, 3]), s(&[2, 4])]);
        let full = Complex::build(4, [[1, 2, 3, 4]]).unwrap();
        assert!(full.minimal_non_faces().is_empty());
        let ghost = Complex::build(3, [[1, 2]]).unwrap();
        assert_eq!(ghost.minimal_non_faces(), vec![s(&[3])]);
    }

    #[test]
    fn metrics_examples() {
        let k = Complex::build(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]).unwrap();
        assert_eq!(k.metrics(), Metrics { dim: 1, mdim: 1, f_vector: vec![4, 6] });
        let mixed = Complex::build(4, vec![vec![1, 2, 3], vec![4]]).unwrap();
        assert_eq!((mixed.dim(), mixed.mdim()), (2, 0));
    }

    #[test]
    fn pseudomanifold_examples() {
        let b4 = Complex::build(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        assert!(b4.is_pseudomanifold());
        let glued = Complex::build(4, [[1, 2, 3], [2, 3, 4]]).unwrap();
        assert!(!glued.is_pseudomanifold());
        assert!(cycle5().is_pseudomanifold());
        let two_circles =
            Complex::build(6, [[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]]).unwrap();
        assert!(!two_circles.is_pseudomanifold());
        assert!(!two_circles.is_connected());
        assert!(cycle5().is_connected());
    }

    #[test]
    fn json_round_trip_is_sorted() {
        let k = Complex::build(4, vec![vec![3, 4], vec![2, 1, 3], vec![4, 1]]).unwrap();
        let text = k.to_json();
        assert_eq!(text, r#"{"m":4,"facets":[[1,4],[3,4],[1,2,3]]}"#);
        assert_eq!(Complex::from_json(&text).unwrap(), k);
    }

    #[test]
    fn json_errors_carry_position() {
        let err = Complex::from_json("{\"m\": 3,\n \"facets\": [[1,2],]}").unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
