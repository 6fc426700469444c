//! Named families of complexes.

use rand::Rng;

use crate::complex::{Complex, Simplex, MAX_VERTICES};
use crate::error::{Error, Result};

/// A named family member, as accepted by the `gen` command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Simplex { m: usize },
    Skeleton { m: usize, k: usize },
    SkeletonExt { m: usize, k: usize, d: usize },
    Boundary { n: usize },
    SphereJoin { parts: Vec<usize> },
    SimplexSphereJoin { r: usize, parts: Vec<usize> },
    Cycle { m: usize },
    CompleteBipartite { a: usize, b: usize },
}

impl Generator {
    pub fn build(&self) -> Result<Complex> {
        match self {
            Generator::Simplex { m } => simplex(*m),
            Generator::Skeleton { m, k } => skeleton(*m, *k),
            Generator::SkeletonExt { m, k, d } => skeleton_ext(*m, *k, *d),
            Generator::Boundary { n } => boundary(*n),
            Generator::SphereJoin { parts } => sphere_join(parts),
            Generator::SimplexSphereJoin { r, parts } => simplex_sphere_join(*r, parts),
            Generator::Cycle { m } => cycle(*m),
            Generator::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
        }
    }

    /// Parses `kind` plus its integer parameters, e.g. `("skeleton", [4, 0])`.
    pub fn parse(kind: &str, params: &[usize]) -> Result<Generator> {
        let want = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::Range(format!(
                    "`{kind}` takes {n} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let g = match kind {
            "simplex" => {
                want(1)?;
                Generator::Simplex { m: params[0] }
            }
            "skeleton" => {
                want(2)?;
                Generator::Skeleton { m: params[0], k: params[1] }
            }
            "skeleton-ext" | "skeleton_ext" => {
                want(3)?;
                Generator::SkeletonExt { m: params[0], k: params[1], d: params[2] }
            }
            "boundary" => {
                want(1)?;
                Generator::Boundary { n: params[0] }
            }
            "sphere-join" | "sphere_join" => Generator::SphereJoin { parts: params.to_vec() },
            "simplex-sphere-join" | "simplex_sphere_join" => {
                if params.is_empty() {
                    return Err(Error::Range(format!("`{kind}` needs r")));
                }
                Generator::SimplexSphereJoin { r: params[0], parts: params[1..].to_vec() }
            }
            "cycle" => {
                want(1)?;
                Generator::Cycle { m: params[0] }
            }
            "bipartite" | "complete-bipartite" | "complete_bipartite" => {
                want(2)?;
                Generator::CompleteBipartite { a: params[0], b: params[1] }
            }
            other => return Err(Error::Range(format!("unknown generator `{other}`"))),
        };
        Ok(g)
    }
}

fn check_m(m: usize) -> Result<()> {
    if m > MAX_VERTICES {
        Err(Error::Capacity(format!("m = {m} exceeds {MAX_VERTICES}")))
    } else {
        Ok(())
    }
}

/// `Δ^[m]`.
pub fn simplex(m: usize) -> Result<Complex> {
    if m == 0 {
        return Err(Error::Range("simplex needs m ≥ 1".into()));
    }
    check_m(m)?;
    Complex::from_facets(m, vec![Simplex::prefix(m)])
}

/// `Δ_(k)^[m]`, all subsets of `[m]` of size `k + 1`.
pub fn skeleton(m: usize, k: usize) -> Result<Complex> {
    if k >= m {
        return Err(Error::Range(format!("skeleton needs k < m, got k={k}, m={m}")));
    }
    check_m(m)?;
    Complex::from_facets(m, k_subsets(Simplex::prefix(m), k + 1))
}

/// `Δ_(k)^[m]⟨d⟩ = Δ_(k)^[m] ∪ Δ^{[d+1]}`.
pub fn skeleton_ext(m: usize, k: usize, d: usize) -> Result<Complex> {
    if !(k < d && d < m) {
        return Err(Error::Range(format!(
            "skeleton-ext needs k < d < m, got k={k}, d={d}, m={m}"
        )));
    }
    check_m(m)?;
    let mut facets = k_subsets(Simplex::prefix(m), k + 1);
    facets.push(Simplex::prefix(d + 1));
    Complex::from_facets(m, facets)
}

/// `∂Δ^[n]`; `∂Δ^[1]` is `{∅}` with no vertices.
pub fn boundary(n: usize) -> Result<Complex> {
    if n == 0 {
        return Err(Error::Range("boundary needs n ≥ 1".into()));
    }
    if n == 1 {
        return Ok(Complex::empty(0));
    }
    check_m(n)?;
    let full = Simplex::prefix(n);
    Complex::from_facets(n, full.vertices().map(|v| full.without(v)).collect())
}

/// `∂Δ^[n1] * ... * ∂Δ^[nk]`.
pub fn sphere_join(parts: &[usize]) -> Result<Complex> {
    if parts.is_empty() {
        return Err(Error::Range("sphere join needs at least one factor".into()));
    }
    let mut acc = Complex::empty(0);
    for &n in parts {
        acc = acc.join(&boundary(n)?)?;
    }
    Ok(acc)
}

/// `Δ^[r] * ∂Δ^[n1] * ... * ∂Δ^[nk]`.
pub fn simplex_sphere_join(r: usize, parts: &[usize]) -> Result<Complex> {
    let base = simplex(r)?;
    if parts.is_empty() {
        return Ok(base);
    }
    base.join(&sphere_join(parts)?)
}

/// The cycle `C_m` with edges `{i, i+1}` and `{1, m}`.
pub fn cycle(m: usize) -> Result<Complex> {
    if m < 3 {
        return Err(Error::Range(format!("cycle needs m ≥ 3, got {m}")));
    }
    check_m(m)?;
    let edges = (1..=m)
        .map(|i| Simplex::vertex(i).with(i % m + 1))
        .collect();
    Complex::from_facets(m, edges)
}

/// `K_{a,b}` with parts `{1..a}` and `{a+1..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Complex> {
    if a == 0 || b == 0 {
        return Err(Error::Range("complete bipartite needs a, b ≥ 1".into()));
    }
    check_m(a + b)?;
    let mut edges = Vec::with_capacity(a * b);
    for i in 1..=a {
        for j in a + 1..=a + b {
            edges.push(Simplex::vertex(i).with(j));
        }
    }
    Complex::from_facets(a + b, edges)
}

/// A random complex on `[m]`: between 1 and `2m` facets, each vertex kept
/// with probability 1/2. Vertices may be missing.
pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<Complex> {
    check_m(m)?;
    let universe = Simplex::prefix(m).bits();
    let count = rng.gen_range(1..=(2 * m).max(1));
    let faces = (0..count)
        .map(|_| Simplex::from_bits(rng.gen::<u64>() & universe))
        .collect();
    Complex::from_facets(m, faces)
}

/// Like [`random`], with every vertex of `[m]` added as a face.
pub fn random_full<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<Complex> {
    let k = random(m, rng)?;
    let mut faces = k.facets().to_vec();
    faces.extend((1..=m).map(Simplex::vertex));
    Complex::from_facets(m, faces)
}

/// All `size`-subsets of `of`.
pub(crate) fn k_subsets(of: Simplex, size: usize) -> Vec<Simplex> {
    let vertices: Vec<usize> = of.vertices().collect();
    let n = vertices.len();
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(Simplex::from_bits(
            idx.iter().fold(0u64, |acc, &i| acc | 1 << (vertices[i] - 1)),
        ));
        // advance to the next combination in lexicographic order
        let mut i = size;
        while i > 0 && idx[i - 1] == i - 1 + n - size {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
