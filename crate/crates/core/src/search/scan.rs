//! Extremal scans over enumerated classes.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::classifier::tightness_necessary_dim;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::hochster::d_total;
use crate::homology::tb_reduced;
use crate::linalg::FieldSpec;
use crate::search::enumerate::classes;

/// Classes between two progress lines.
pub const PROGRESS_EVERY: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Objective {
    /// Largest `t̃b`.
    TbMax,
    /// Smallest `D̃`.
    DMin,
    /// Largest `D̃`.
    DMax,
    /// Every class with `D̃ = 2^{m-d-1}`; the reported value is the excess
    /// over that bound, 0.
    TightAll,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::TbMax => "TB_MAX",
            Objective::DMin => "D_MIN",
            Objective::DMax => "D_MAX",
            Objective::TightAll => "TIGHT_ALL",
        })
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Objective> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "TB_MAX" => Ok(Objective::TbMax),
            "D_MIN" => Ok(Objective::DMin),
            "D_MAX" => Ok(Objective::DMax),
            "TIGHT_ALL" => Ok(Objective::TightAll),
            _ => Err(Error::Parse(format!("unknown objective `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
    /// Print a status line to stderr every [`PROGRESS_EVERY`] classes.
    pub progress: bool,
    /// Permit `m = 6`.
    pub allow_long: bool,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub m: usize,
    pub d: Option<usize>,
    pub objective: Objective,
    pub extremal_value: u64,
    pub witnesses: Vec<CanonicalForm>,
    pub enumerated: usize,
    pub field: FieldSpec,
    /// Wall time; not part of the serialized report.
    pub elapsed: Duration,
}

impl Serialize for ScanReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Dim {
            Fixed(usize),
            All(&'static str),
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            m: usize,
            d: Dim,
            objective: Objective,
            extremal_value: u64,
            witnesses: &'a [CanonicalForm],
            enumerated: usize,
            field: FieldSpec,
        }
        Repr {
            m: self.m,
            d: self.d.map_or(Dim::All("all"), Dim::Fixed),
            objective: self.objective,
            extremal_value: self.extremal_value,
            witnesses: &self.witnesses,
            enumerated: self.enumerated,
            field: self.field,
        }
        .serialize(s)
    }
}

/// Value of `k` under `objective`, oriented so that larger is better, or
/// `None` when the class does not take part.
fn score(k: &Complex, objective: Objective, field: FieldSpec, floor: isize) -> Result<Option<(i128, u64)>> {
    Ok(match objective {
        Objective::TbMax => {
            let v = tb_reduced(k, field) as u64;
            Some((v as i128, v))
        }
        Objective::DMax => {
            let v = d_total(k, field)?;
            Some((v as i128, v))
        }
        Objective::DMin => {
            let v = d_total(k, field)?;
            Some((-(v as i128), v))
        }
        Objective::TightAll => {
            if k.dim() < floor {
                return Ok(None);
            }
            let bound = 1u64 << (k.m() as isize - k.dim() - 1);
            let excess = d_total(k, field)? - bound;
            (excess == 0).then_some((0, 0))
        }
    })
}

#[derive(Default)]
struct Best {
    key: Option<i128>,
    value: u64,
    witnesses: Vec<Complex>,
}

impl Best {
    fn offer(mut self, key: i128, value: u64, k: Complex) -> Best {
        match self.key {
            Some(cur) if key < cur => {}
            Some(cur) if key == cur => self.witnesses.push(k),
            _ => {
                self.key = Some(key);
                self.value = value;
                self.witnesses = vec![k];
            }
        }
        self
    }

    fn merge(self, other: Best) -> Best {
        match (self.key, other.key) {
            (None, _) => other,
            (_, None) => self,
            (Some(a), Some(b)) if a > b => self,
            (Some(a), Some(b)) if a < b => other,
            _ => {
                let mut merged = self;
                merged.witnesses.extend(other.witnesses);
                merged
            }
        }
    }
}

/// Evaluates `objective` on every class of `Σ(m, d)` (all dimensions when
/// `d` is `None`) and reports the extremal value with every class that
/// attains it.
pub fn scan(
    m: usize,
    d: Option<usize>,
    objective: Objective,
    field: FieldSpec,
    opts: ScanOptions,
) -> Result<ScanReport> {
    let start = Instant::now();
    let stream = classes(m, d, opts.allow_long)?;
    let floor = tightness_necessary_dim(m)? as isize;

    let run = || -> Result<(Best, usize)> {
        let mut count = 0usize;
        let counted = stream.inspect(|_| {
            count += 1;
            if opts.progress && count.is_multiple_of(PROGRESS_EVERY) {
                eprintln!("scan m={m}: {count} classes enumerated");
            }
        });
        let best = counted
            .par_bridge()
            .map(|k| Ok(score(&k, objective, field, floor)?.map(|(key, v)| (key, v, k))))
            .try_fold(Best::default, |acc, item: Result<_>| {
                Ok::<_, Error>(match item? {
                    Some((key, v, k)) => acc.offer(key, v, k),
                    None => acc,
                })
            })
            .try_reduce(Best::default, |a, b| Ok(a.merge(b)))?;
        Ok((best, count))
    };

    let (best, enumerated) = if opts.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Range(format!("thread pool: {e}")))?
            .install(run)?
    } else {
        run()?
    };

    let mut witnesses = best
        .witnesses
        .iter()
        .map(canonical_form)
        .collect::<Result<Vec<_>>>()?;
    witnesses.sort();
    if opts.progress {
        eprintln!("scan m={m}: done, {enumerated} classes");
    }
    Ok(ScanReport {
        m,
        d,
        objective,
        extremal_value: best.value,
        witnesses,
        enumerated,
        field,
        elapsed: start.elapsed(),
    })
}
