//! Desk-scale checks of the classification results, each producing a
//! machine-readable report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::classifier::{is_tight_numeric, is_tight_structural};
use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::extremal::{
    binomial, d_max, d_skeleton_value, g_argmax, g_recurrence_check, sigma_tb_global,
    sigma_tb_witnesses, tb_upper_bound, ExtremalAnswer,
};
use crate::generate;
use crate::hochster::d_total;
use crate::homology::{reduced_euler, tb_reduced};
use crate::linalg::FieldSpec;
use crate::search::enumerate::{check_capacity, enumerate};
use crate::search::scan::{scan, Objective, ScanOptions};
use crate::sperner::{f_bound, max_antichain, sperner_max};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Bk12,
    Tb22,
    Mv21,
    Sperner28,
    Sigma29,
    Bounds210,
    Tight312,
    Links310,
    Mv41,
    Dmax42,
    G51,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Bk12,
        TheoremId::Tb22,
        TheoremId::Mv21,
        TheoremId::Sperner28,
        TheoremId::Sigma29,
        TheoremId::Bounds210,
        TheoremId::Tight312,
        TheoremId::Links310,
        TheoremId::Mv41,
        TheoremId::Dmax42,
        TheoremId::G51,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Bk12 => "BK-1.2",
            TheoremId::Tb22 => "TB-2.2",
            TheoremId::Mv21 => "MV-2.1",
            TheoremId::Sperner28 => "SPERNER-2.8",
            TheoremId::Sigma29 => "SIGMA-2.9",
            TheoremId::Bounds210 => "BOUNDS-2.10",
            TheoremId::Tight312 => "TIGHT-3.12",
            TheoremId::Links310 => "LINKS-3.10",
            TheoremId::Mv41 => "MV-4.1",
            TheoremId::Dmax42 => "DMAX-4.2",
            TheoremId::G51 => "G-5.1",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Optional knobs; each verifier documents which ones it reads.
#[derive(Debug, Clone, Copy)]
pub struct VerifyParams {
    pub m_max: Option<usize>,
    pub m: Option<usize>,
    pub samples: Option<usize>,
    pub n_max: Option<usize>,
    pub seed: u64,
    pub field: FieldSpec,
    pub threads: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            m_max: None,
            m: None,
            samples: None,
            n_max: None,
            seed: 0,
            field: FieldSpec::F2,
            threads: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub pass: bool,
    /// Number of instances examined.
    pub checked: usize,
    pub counterexample: Option<Value>,
    pub details: String,
}

struct Outcome {
    checked: usize,
    counterexample: Option<Value>,
    details: String,
}

impl Outcome {
    fn pass(checked: usize, details: String) -> Result<Outcome> {
        Ok(Outcome { checked, counterexample: None, details })
    }

    fn fail(checked: usize, counterexample: Value, details: String) -> Result<Outcome> {
        Ok(Outcome { checked, counterexample: Some(counterexample), details })
    }
}

fn complex_json(k: &Complex) -> Value {
    serde_json::to_value(k).expect("plain data")
}

fn keys(witnesses: &[Complex]) -> Result<Vec<CanonicalForm>> {
    let mut out = witnesses.iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

pub fn verify(id: TheoremId, params: VerifyParams) -> Result<VerifyReport> {
    let outcome = match id {
        TheoremId::Bk12 => bk(params),
        TheoremId::Tb22 => tb_global(params),
        TheoremId::Mv21 => mv_tb(params),
        TheoremId::Sperner28 => sperner(params),
        TheoremId::Sigma29 => sigma(params),
        TheoremId::Bounds210 => bounds(params),
        TheoremId::Tight312 => tight(params),
        TheoremId::Links310 => links(params),
        TheoremId::Mv41 => mv_d(params),
        TheoremId::Dmax42 => dmax(params),
        TheoremId::G51 => g_argmax_check(params),
    }?;
    Ok(VerifyReport {
        theorem: id.to_string(),
        pass: outcome.counterexample.is_none(),
        checked: outcome.checked,
        counterexample: outcome.counterexample,
        details: outcome.details,
    })
}

/// `m_max` for the enumeration-based verifiers; 6 is accepted as an
/// explicit request for the long run.
fn enum_limit(params: VerifyParams, default: usize) -> Result<usize> {
    let m_max = params.m_max.unwrap_or(default);
    check_capacity(m_max, true)?;
    Ok(m_max)
}

fn opts(params: VerifyParams) -> ScanOptions {
    ScanOptions { threads: params.threads, progress: false, allow_long: true }
}

/// `t̃b(K) ≤ C(m-1, ⌊(m-1)/2⌋)` and `|χ̃(K)| ≤ t̃b(K)` on every class with
/// `m ≤ m_max` (default 5).
fn bk(params: VerifyParams) -> Result<Outcome> {
    let m_max = enum_limit(params, 5)?;
    let mut checked = 0;
    for m in 1..=m_max {
        let bound = binomial(m - 1, (m - 1) / 2);
        for k in enumerate(m, None, true)? {
            checked += 1;
            let tb = tb_reduced(&k, params.field);
            let chi = reduced_euler(&k).unsigned_abs() as usize;
            if big(tb as u64) > bound || chi > tb {
                return Outcome::fail(
                    checked,
                    json!({"complex": complex_json(&k), "tb": tb, "euler": reduced_euler(&k), "bound": bound.to_string()}),
                    format!("bound violated at m = {m}"),
                );
            }
        }
    }
    Outcome::pass(checked, format!("all classes with m ≤ {m_max}"))
}

/// Global `TB_MAX` scans agree with the skeleton answer set, `m ≤ m_max`
/// (default 5).
fn tb_global(params: VerifyParams) -> Result<Outcome> {
    let m_max = enum_limit(params, 5)?;
    let mut checked = 0;
    for m in 1..=m_max {
        let report = scan(m, None, Objective::TbMax, params.field, opts(params))?;
        let answer = sigma_tb_global(m)?;
        checked += report.enumerated;
        if let Some(fail) = compare_answer(m, None, &report.witnesses, report.extremal_value, &answer)? {
            return Outcome::fail(checked, fail, format!("mismatch at m = {m}"));
        }
    }
    Outcome::pass(checked, format!("m = 1..={m_max}"))
}

fn compare_answer(
    m: usize,
    d: Option<usize>,
    found: &[CanonicalForm],
    value: u64,
    answer: &ExtremalAnswer,
) -> Result<Option<Value>> {
    let expected = keys(&answer.witnesses)?;
    if found == expected.as_slice() && big(value) == answer.value {
        return Ok(None);
    }
    Ok(Some(json!({
        "m": m,
        "d": d,
        "scan_value": value,
        "expected_value": answer.value.to_string(),
        "scan_witnesses": found,
        "expected_witnesses": expected,
    })))
}

/// `t̃b(K) + t̃b(L) ≤ t̃b(K ∩ L) + t̃b(K ∪ L)` on seeded random subcomplexes
/// of `Δ^[m]` (`m` default 6, `samples` default 1000).
fn mv_tb(params: VerifyParams) -> Result<Outcome> {
    let m = params.m.unwrap_or(6);
    let samples = params.samples.unwrap_or(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let f = params.field;
    for i in 0..samples {
        let k = generate::random(m, &mut rng)?;
        let l = generate::random(m, &mut rng)?;
        let cap = k.intersection(&l)?;
        let cup = k.union(&l)?;
        let lhs = tb_reduced(&k, f) + tb_reduced(&l, f);
        let rhs = tb_reduced(&cap, f) + tb_reduced(&cup, f);
        if lhs > rhs {
            return Outcome::fail(
                i + 1,
                json!({"k": complex_json(&k), "l": complex_json(&l), "lhs": lhs, "rhs": rhs}),
                "inequality violated".into(),
            );
        }
    }
    Outcome::pass(samples, format!("{samples} pairs at m = {m}, seed {}", params.seed))
}

/// `D̃(K) + D̃(L) ≤ D̃(K ∩ L) + D̃(K ∪ L)` on seeded random complexes with
/// every vertex present (`m` default 5, `samples` default 1000).
fn mv_d(params: VerifyParams) -> Result<Outcome> {
    let m = params.m.unwrap_or(5);
    let samples = params.samples.unwrap_or(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let f = params.field;
    for i in 0..samples {
        let k = generate::random_full(m, &mut rng)?;
        let l = generate::random_full(m, &mut rng)?;
        let lhs = d_total(&k, f)? + d_total(&l, f)?;
        let rhs = d_total(&k.intersection(&l)?, f)? + d_total(&k.union(&l)?, f)?;
        if lhs > rhs {
            return Outcome::fail(
                i + 1,
                json!({"k": complex_json(&k), "l": complex_json(&l), "lhs": lhs, "rhs": rhs}),
                "inequality violated".into(),
            );
        }
    }
    Outcome::pass(samples, format!("{samples} pairs at m = {m}, seed {}", params.seed))
}

/// Exhaustive antichain maxima against `sperner_max(n)` and `f_bound(n, k)`
/// for `n ≤ n_max` (default 6).
fn sperner(params: VerifyParams) -> Result<Outcome> {
    let n_max = params.n_max.unwrap_or(6);
    let mut checked = 0;
    for n in 1..=n_max {
        let found = max_antichain(n, None)?;
        checked += 1;
        if big(found as u64) != sperner_max(n) {
            return Outcome::fail(
                checked,
                json!({"n": n, "search": found, "formula": sperner_max(n).to_string()}),
                "unrestricted maximum differs".into(),
            );
        }
        for k in 1..=n {
            let found = max_antichain(n, Some(Simplex::prefix(k)))?;
            checked += 1;
            let formula = f_bound(n, k)?;
            if big(found as u64) != formula {
                return Outcome::fail(
                    checked,
                    json!({"n": n, "k": k, "search": found, "formula": formula.to_string()}),
                    "restricted maximum differs".into(),
                );
            }
        }
    }
    Outcome::pass(checked, format!("n = 1..={n_max}"))
}

/// Per-dimension `TB_MAX` scans agree with the closed-form witness sets,
/// `m ≤ m_max` (default 5).
fn sigma(params: VerifyParams) -> Result<Outcome> {
    let m_max = enum_limit(params, 5)?;
    let mut checked = 0;
    for m in 1..=m_max {
        for d in 0..m {
            let report = scan(m, Some(d), Objective::TbMax, params.field, opts(params))?;
            checked += report.enumerated;
            let answer = sigma_tb_witnesses(m, d)?;
            if let Some(fail) = compare_answer(m, Some(d), &report.witnesses, report.extremal_value, &answer)? {
                return Outcome::fail(checked, fail, format!("mismatch at m = {m}, d = {d}"));
            }
        }
    }
    Outcome::pass(checked, format!("m = 1..={m_max}, every d"))
}

/// The largest `t̃b` in each `Σ(m, d)` equals `tb_upper_bound(m, d)`.
fn bounds(params: VerifyParams) -> Result<Outcome> {
    let m_max = enum_limit(params, 5)?;
    let mut checked = 0;
    for m in 1..=m_max {
        for d in 0..m {
            let report = scan(m, Some(d), Objective::TbMax, params.field, opts(params))?;
            checked += report.enumerated;
            let bound = tb_upper_bound(m, d)?;
            if big(report.extremal_value) != bound {
                return Outcome::fail(
                    checked,
                    json!({"m": m, "d": d, "scan": report.extremal_value, "bound": bound.to_string()}),
                    "bound not attained".into(),
                );
            }
        }
    }
    Outcome::pass(checked, format!("m = 1..={m_max}, every d"))
}

const TIGHT_FIELDS: [FieldSpec; 3] = [FieldSpec::F2, FieldSpec::Fp(3), FieldSpec::Rationals];

/// Numeric and structural tightness agree on every class with
/// `m ≤ m_max` (default 5), over F2, F3 and Q.
fn tight(params: VerifyParams) -> Result<Outcome> {
    let m_max = enum_limit(params, 5)?;
    let mut checked = 0;
    for m in 1..=m_max {
        for k in enumerate(m, None, true)? {
            let structural = is_tight_structural(&k)?;
            for f in TIGHT_FIELDS {
                checked += 1;
                let numeric = is_tight_numeric(&k, f)?;
                if numeric != structural {
                    return Outcome::fail(
                        checked,
                        json!({"complex": complex_json(&k), "field": f, "numeric": numeric, "structural": structural}),
                        format!("disagreement at m = {m}"),
                    );
                }
            }
        }
    }
    Outcome::pass(checked, format!("m = 1..={m_max}, fields f2, f3, q"))
}

/// Every tight class (`m ≤ m_max`, default 5) is pure, has tight links, and
/// is connected once `m ≥ 3`.
fn links(params: VerifyParams) -> Result<Outcome> {
    let m_max = enum_limit(params, 5)?;
    let mut checked = 0;
    for m in 1..=m_max {
        for k in enumerate(m, None, true)? {
            if !is_tight_numeric(&k, params.field)? {
                continue;
            }
            checked += 1;
            let fail = |why: &str, extra: Value| {
                Outcome::fail(checked, json!({"complex": complex_json(&k), "reason": why, "at": extra}), why.to_string())
            };
            if !k.is_pure() {
                return fail("tight but not pure", Value::Null);
            }
            if m >= 3 && !k.is_connected() {
                return fail("tight but disconnected", Value::Null);
            }
            for sigma in k.faces_by_dim().into_iter().flatten() {
                let link = k.link(sigma)?.compact();
                if !is_tight_structural(&link)? {
                    return fail("link not tight", json!(sigma.vertices().collect::<Vec<_>>()));
                }
            }
        }
    }
    Outcome::pass(checked, format!("tight classes with m ≤ {m_max}"))
}

/// Global `D_MAX` scans for `4 ≤ m ≤ m_max` (default 5) return the
/// skeleton answer, whose value also matches `d_skeleton_value`.
fn dmax(params: VerifyParams) -> Result<Outcome> {
    let m_max = enum_limit(params, 5)?;
    let mut checked = 0;
    for m in 4..=m_max {
        let report = scan(m, None, Objective::DMax, params.field, opts(params))?;
        checked += report.enumerated;
        let answer = d_max(m)?;
        let skeleton_dim = (m - 1) / 3 - 1;
        if answer.value != d_skeleton_value(m, skeleton_dim)? {
            return Outcome::fail(
                checked,
                json!({"m": m, "closed_form": answer.value.to_string()}),
                "closed forms disagree".into(),
            );
        }
        if let Some(fail) = compare_answer(m, None, &report.witnesses, report.extremal_value, &answer)? {
            return Outcome::fail(checked, fail, format!("mismatch at m = {m}"));
        }
    }
    Outcome::pass(checked, format!("m = 4..={m_max}"))
}

/// `g_argmax(m) = ⌊(m-1)/3⌋` for `2 ≤ m ≤ m_max` (default 60) and the
/// two-term identity for `m ≤ min(m_max, 30)`.
fn g_argmax_check(params: VerifyParams) -> Result<Outcome> {
    let m_max = params.m_max.unwrap_or(60);
    let mut checked = 0;
    for m in 2..=m_max {
        checked += 1;
        match g_argmax(m) {
            Ok(d) if d == (m - 1) / 3 => {}
            other => {
                return Outcome::fail(
                    checked,
                    json!({"m": m, "argmax": format!("{other:?}"), "expected": (m - 1) / 3}),
                    "maximizer differs".into(),
                )
            }
        }
        if m <= 30 && !g_recurrence_check(m) {
            return Outcome::fail(checked, json!({"m": m}), "identity fails".into());
        }
    }
    Outcome::pass(checked, format!("m = 2..={m_max}"))
}
