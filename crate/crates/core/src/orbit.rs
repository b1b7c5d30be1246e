//! Orbits of the NF-step.
//!
//! The NF-step is injective on the finite set of complexes on `[n]`, so the
//! orbit of every complex is a pure cycle. The *period* is the first strict
//! return; the *NF-number* is the first return up to isomorphism and never
//! exceeds the period.

use serde::Serialize;

use crate::canon::{canonical_form, invariant_signature, CanonicalForm};
use crate::complex::SimplicialComplex;
use crate::dualize::nf_step;
use crate::error::{Error, Result};
use crate::format::ComplexDocument;

pub const DEFAULT_MAX_ITERATIONS: u64 = 10_000_000;
pub const DEFAULT_MAX_STORED_STEPS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitConfig {
    /// Give up after this many steps without returning.
    pub max_iterations: u64,
    /// Trace steps kept in memory; later steps are computed but not stored.
    pub max_stored_steps: usize,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig {
            max_iterations: DEFAULT_MAX_ITERATIONS,
            max_stored_steps: DEFAULT_MAX_STORED_STEPS,
        }
    }
}

/// `δ^(k)(complex)`; `k = 0` returns the input.
pub fn nf_iterate(complex: &SimplicialComplex, k: u64) -> SimplicialComplex {
    let mut cur = complex.clone();
    for _ in 0..k {
        cur = nf_step(&cur);
    }
    cur
}

/// Isomorphism test against a fixed start, caching its canonical form.
struct StartMatcher<'a> {
    start: &'a SimplicialComplex,
    signature: Vec<u32>,
    canon: Option<CanonicalForm>,
}

impl<'a> StartMatcher<'a> {
    fn new(start: &'a SimplicialComplex) -> Self {
        StartMatcher {
            start,
            signature: invariant_signature(start),
            canon: None,
        }
    }

    fn is_isomorphic(&mut self, other: &SimplicialComplex) -> bool {
        if other == self.start {
            return true;
        }
        if other.facet_count() != self.start.facet_count()
            || other.dimension() != self.start.dimension()
            || invariant_signature(other) != self.signature
        {
            return false;
        }
        let start = self.start;
        let canon = self.canon.get_or_insert_with(|| canonical_form(start));
        *canon == canonical_form(other)
    }
}

/// NF-number and period from one pass over the orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrbitNumbers {
    pub nf_number: u64,
    pub period: u64,
}

pub fn orbit_numbers(complex: &SimplicialComplex, config: &OrbitConfig) -> Result<OrbitNumbers> {
    let mut matcher = StartMatcher::new(complex);
    let mut nf_number = None;
    let mut cur = complex.clone();
    for k in 1..=config.max_iterations {
        cur = nf_step(&cur);
        if nf_number.is_none() && matcher.is_isomorphic(&cur) {
            nf_number = Some(k);
        }
        if cur == *complex {
            return Ok(OrbitNumbers {
                nf_number: nf_number.unwrap_or(k),
                period: k,
            });
        }
    }
    Err(Error::IterationCap(config.max_iterations))
}

/// Smallest `t ≥ 1` with `δ^(t)(complex) ≅ complex`.
pub fn nf_number(complex: &SimplicialComplex) -> Result<u64> {
    nf_number_with(complex, &OrbitConfig::default())
}

pub fn nf_number_with(complex: &SimplicialComplex, config: &OrbitConfig) -> Result<u64> {
    let mut matcher = StartMatcher::new(complex);
    let mut cur = complex.clone();
    for k in 1..=config.max_iterations {
        cur = nf_step(&cur);
        if matcher.is_isomorphic(&cur) {
            return Ok(k);
        }
    }
    Err(Error::IterationCap(config.max_iterations))
}

/// Smallest `q ≥ 1` with `δ^(q)(complex) = complex`.
pub fn nf_period(complex: &SimplicialComplex) -> Result<u64> {
    nf_period_with(complex, &OrbitConfig::default())
}

pub fn nf_period_with(complex: &SimplicialComplex, config: &OrbitConfig) -> Result<u64> {
    let mut cur = complex.clone();
    for k in 1..=config.max_iterations {
        cur = nf_step(&cur);
        if cur == *complex {
            return Ok(k);
        }
    }
    Err(Error::IterationCap(config.max_iterations))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub k: u64,
    pub complex: SimplicialComplex,
    pub dim: i64,
    pub isomorphic_to_start: bool,
}

/// Recorded orbit prefix. `nf_number` and `period` are `None` when the
/// limit was reached before they were observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTrace {
    pub steps: Vec<TraceStep>,
    pub nf_number: Option<u64>,
    pub period: Option<u64>,
    /// Steps computed, including any beyond the storage cap.
    pub computed: u64,
}

impl OrbitTrace {
    pub fn dimensions(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.dim).collect()
    }

    /// One line per step: `k=3 dim=1 facets=⟨{2,3}⟩ iso=false`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format!(
                "k={} dim={} facets={} iso={}\n",
                s.k, s.dim, s.complex, s.isomorphic_to_start
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Step {
            k: u64,
            dim: i64,
            iso: bool,
            complex: ComplexDocument,
        }
        #[derive(Serialize)]
        struct Doc {
            nf_number: Option<u64>,
            period: Option<u64>,
            computed: u64,
            steps: Vec<Step>,
        }
        let doc = Doc {
            nf_number: self.nf_number,
            period: self.period,
            computed: self.computed,
            steps: self
                .steps
                .iter()
                .map(|s| Step {
                    k: s.k,
                    dim: s.dim,
                    iso: s.isomorphic_to_start,
                    complex: ComplexDocument::from_complex(&s.complex),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("trace serializes")
    }
}

/// Records `Δ, δ(Δ), δ²(Δ), …` through the period or `limit` steps,
/// whichever comes first.
pub fn orbit_trace(complex: &SimplicialComplex, limit: u64) -> OrbitTrace {
    orbit_trace_with(complex, limit, &OrbitConfig::default())
}

pub fn orbit_trace_with(complex: &SimplicialComplex, limit: u64, config: &OrbitConfig) -> OrbitTrace {
    let mut matcher = StartMatcher::new(complex);
    let mut steps = vec![TraceStep {
        k: 0,
        complex: complex.clone(),
        dim: complex.dimension(),
        isomorphic_to_start: true,
    }];
    let mut nf_number = None;
    let mut period = None;
    let mut cur = complex.clone();
    let mut computed = 0;
    for k in 1..=limit.min(config.max_iterations) {
        cur = nf_step(&cur);
        computed = k;
        let iso = matcher.is_isomorphic(&cur);
        if iso && nf_number.is_none() {
            nf_number = Some(k);
        }
        if steps.len() < config.max_stored_steps {
            steps.push(TraceStep {
                k,
                complex: cur.clone(),
                dim: cur.dimension(),
                isomorphic_to_start: iso,
            });
        }
        if cur == *complex {
            period = Some(k);
            break;
        }
    }
    OrbitTrace {
        steps,
        nf_number,
        period,
        computed,
    }
}
