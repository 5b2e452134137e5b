//! Randomized finite-field evidence for simplicity and irreducibility.
//!
//! The structural decision procedures in this crate answer existence
//! questions symbolically. This module cross-examines them numerically: it
//! samples concrete representations over a small prime field and checks by
//! linear algebra whether the sampled representation is absolutely
//! irreducible, meaning the algebra its matrices generate spans the full
//! n-by-n matrix space.
//!
//! A successful trial is a certificate that a simple representation exists
//! over the algebraic closure of the sample field, which is strong evidence
//! for the characteristic-zero statement. A failed batch of trials proves
//! nothing: the verdict is [`OracleVerdict::ProbablyNo`], never "no".
//! Sampling is fully deterministic given the seed; trial `t` runs on the
//! `(t + 1)`-th output of a splitmix64 stream seeded with the master seed,
//! so single trials can be replayed in isolation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::{element_of_order, is_prime, ModMatrix, SpanBasis};
use crate::quiver::{DimVector, Quiver};
use crate::torus_knot::TorusKnotDims;

/// The splitmix64 generator: 64 bits of state, one mixing round per output.
/// Chosen for portability; the whole sequence is pinned by tests so the
/// oracle's samples are reproducible anywhere.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// A field element drawn by reduction; the bias at 64 bits is far below
    /// anything that could matter here.
    pub fn next_mod(&mut self, modulus: u64) -> u64 {
        self.next_u64() % modulus
    }
}

/// Verdicts the oracle can return. There is no plain "No": failure to find
/// a witness is only evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleVerdict {
    Yes,
    ProbablyNo,
}

impl OracleVerdict {
    pub fn as_bool(self) -> bool {
        matches!(self, OracleVerdict::Yes)
    }
}

/// Sampling parameters for the oracle.
#[derive(Clone, Copy, Debug)]
pub struct PrimeFieldConfig {
    /// Prime modulus of the sample field.
    pub modulus: u64,
    /// Master seed; every sample is a deterministic function of it.
    pub seed: u64,
    /// Number of independent samples before giving up.
    pub trials: u32,
    /// Largest total dimension the oracle accepts; the span computation is
    /// quartic in it.
    pub cap: u64,
}

impl Default for PrimeFieldConfig {
    fn default() -> Self {
        PrimeFieldConfig {
            modulus: 1009,
            seed: 0,
            trials: 8,
            cap: 8,
        }
    }
}

/// One sampled representation: a matrix per arrow, in the order of
/// [`Quiver::arrow_list`], of shape `dims[target] x dims[source]`.
pub struct FiniteFieldRep {
    dims: Vec<u64>,
    arrows: Vec<(usize, usize)>,
    matrices: Vec<ModMatrix>,
}

/// Draw a representation of `quiver` with entries uniform in the field.
pub fn sample_rep(
    quiver: &Quiver,
    dims: &DimVector,
    modulus: u64,
    rng: &mut SplitMix64,
) -> Result<FiniteFieldRep> {
    if dims.len() != quiver.num_vertices() {
        return Err(Error::LengthMismatch {
            expected: quiver.num_vertices(),
            got: dims.len(),
        });
    }
    if !is_prime(modulus) {
        return Err(Error::NotPrime(modulus));
    }
    let arrows = quiver.arrow_list();
    let matrices = arrows
        .iter()
        .map(|&(s, t)| {
            let (rows, cols) = (dims.get(t) as usize, dims.get(s) as usize);
            let mut m = ModMatrix::zeros(modulus, rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, rng.next_mod(modulus));
                }
            }
            m
        })
        .collect();
    Ok(FiniteFieldRep {
        dims: dims.coords().to_vec(),
        arrows,
        matrices,
    })
}

/// Block offsets of each vertex space inside the total space.
fn offsets(dims: &[u64]) -> Vec<usize> {
    let mut offs = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0usize;
    for &d in dims {
        offs.push(acc);
        acc += d as usize;
    }
    offs.push(acc);
    offs
}

/// The dimension of the algebra generated inside `End(total space)` by the
/// vertex projectors and the arrow matrices, computed as a closure of a row
/// span under multiplication by the generators on both sides.
pub fn burnside_span_dim(rep: &FiniteFieldRep) -> usize {
    let modulus = match rep.matrices.first() {
        Some(m) => m.modulus(),
        // No arrows: the algebra is spanned by the projectors alone.
        None => return rep.dims.iter().filter(|&&d| d > 0).count(),
    };
    let offs = offsets(&rep.dims);
    let n = *offs.last().expect("offsets always has a last entry");
    if n == 0 {
        return 0;
    }
    let mut generators: Vec<ModMatrix> = Vec::new();
    for (v, &d) in rep.dims.iter().enumerate() {
        if d == 0 {
            continue;
        }
        let mut proj = ModMatrix::zeros(modulus, n, n);
        for i in offs[v]..offs[v + 1] {
            proj.set(i, i, 1);
        }
        generators.push(proj);
    }
    for (&(s, t), m) in rep.arrows.iter().zip(&rep.matrices) {
        let mut emb = ModMatrix::zeros(modulus, n, n);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                emb.set(offs[t] + i, offs[s] + j, m.get(i, j));
            }
        }
        generators.push(emb);
    }
    span_closure(modulus, n, &generators, &generators)
}

/// Close `seeds` under left and right multiplication by `generators` and
/// return the dimension of the resulting span inside `End(F^n)`.
fn span_closure(
    modulus: u64,
    n: usize,
    seeds: &[ModMatrix],
    generators: &[ModMatrix],
) -> usize {
    let mut basis = SpanBasis::new(modulus, n * n);
    let mut worklist: Vec<ModMatrix> = Vec::new();
    let identity = ModMatrix::identity(modulus, n);
    for seed in std::iter::once(&identity).chain(seeds) {
        if basis.insert(seed.entries().to_vec()) {
            worklist.push(seed.clone());
        }
    }
    while let Some(m) = worklist.pop() {
        if basis.is_full() {
            break;
        }
        for g in generators {
            for product in [g.mul(&m), m.mul(g)] {
                if basis.insert(product.entries().to_vec()) {
                    worklist.push(product);
                }
            }
        }
    }
    basis.len()
}

/// Is the sampled representation absolutely irreducible, i.e. does its
/// algebra span all of `End(F^n)`?
pub fn is_simple_rep(rep: &FiniteFieldRep) -> bool {
    let n: u64 = rep.dims.iter().sum();
    if n == 0 {
        return false;
    }
    burnside_span_dim(rep) == (n * n) as usize
}

/// The outcome of one oracle trial.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TrialOutcome {
    pub trial: u32,
    pub sub_seed: u64,
    pub span_dim: usize,
    pub full: bool,
}

/// A full oracle run: configuration echo, per-trial outcomes (stopping at
/// the first witness) and the final verdict.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub modulus: u64,
    pub seed: u64,
    pub trials_requested: u32,
    pub outcomes: Vec<TrialOutcome>,
    pub verdict: OracleVerdict,
}

fn check_config(config: &PrimeFieldConfig, n: u64) -> Result<()> {
    if !is_prime(config.modulus) {
        return Err(Error::NotPrime(config.modulus));
    }
    if n > config.cap {
        return Err(Error::OracleCapExceeded { n, cap: config.cap });
    }
    Ok(())
}

fn run_trials(
    config: &PrimeFieldConfig,
    mut sample_span: impl FnMut(u64) -> Result<(usize, usize)>,
) -> Result<OracleReport> {
    let mut seed_stream = SplitMix64::new(config.seed);
    let mut outcomes = Vec::new();
    let mut verdict = OracleVerdict::ProbablyNo;
    for trial in 0..config.trials {
        let sub_seed = seed_stream.next_u64();
        let (span_dim, full_dim) = sample_span(sub_seed)?;
        let full = span_dim == full_dim;
        outcomes.push(TrialOutcome {
            trial,
            sub_seed,
            span_dim,
            full,
        });
        if full {
            verdict = OracleVerdict::Yes;
            break;
        }
    }
    Ok(OracleReport {
        modulus: config.modulus,
        seed: config.seed,
        trials_requested: config.trials,
        outcomes,
        verdict,
    })
}

/// Numeric evidence that `quiver` has a simple representation of dimension
/// vector `dims`.
pub fn oracle_simple_report(
    quiver: &Quiver,
    dims: &DimVector,
    config: &PrimeFieldConfig,
) -> Result<OracleReport> {
    if dims.len() != quiver.num_vertices() {
        return Err(Error::LengthMismatch {
            expected: quiver.num_vertices(),
            got: dims.len(),
        });
    }
    let n = dims.total();
    check_config(config, n)?;
    if n == 0 {
        return Ok(OracleReport {
            modulus: config.modulus,
            seed: config.seed,
            trials_requested: config.trials,
            outcomes: Vec::new(),
            verdict: OracleVerdict::ProbablyNo,
        });
    }
    run_trials(config, |sub_seed| {
        let mut rng = SplitMix64::new(sub_seed);
        let rep = sample_rep(quiver, dims, config.modulus, &mut rng)?;
        Ok((burnside_span_dim(&rep), (n * n) as usize))
    })
}

pub fn oracle_simple_exists(
    quiver: &Quiver,
    dims: &DimVector,
    config: &PrimeFieldConfig,
) -> Result<OracleVerdict> {
    Ok(oracle_simple_report(quiver, dims, config)?.verdict)
}

/// The default sample field for margin patterns: the smallest prime above
/// 1000 that is `1 mod pq`, so that both generators have enough eigenvalues.
pub fn default_knot_modulus(p: usize, q: usize) -> Result<u64> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument(format!(
            "invalid eigenvalue class counts p = {p}, q = {q}"
        )));
    }
    let step = (p as u64) * (q as u64);
    // Smallest value above 1000 congruent to 1 mod step, then walk the
    // residue class until it hits a prime.
    let mut candidate = 1001 + (step + 1 - 1001 % step) % step;
    loop {
        if is_prime(candidate) {
            return Ok(candidate);
        }
        candidate += step;
    }
}

/// Numeric evidence that an irreducible representation with eigenvalue
/// multiplicities `dims` exists: sample `A = P D_a P^-1` and
/// `B = R D_b R^-1` with fixed root-of-unity spectra and random invertible
/// conjugators, and test whether `A` and `B` generate the full matrix
/// algebra. Singular draws of `P` or `R` are resampled from the same
/// stream.
pub fn oracle_torus_knot_report(
    dims: &TorusKnotDims,
    config: &PrimeFieldConfig,
) -> Result<OracleReport> {
    let n = dims.n();
    check_config(config, n)?;
    let l = config.modulus;
    let zeta_p = element_of_order(l, dims.p() as u64)?;
    let zeta_q = element_of_order(l, dims.q() as u64)?;
    if n == 0 {
        return Ok(OracleReport {
            modulus: l,
            seed: config.seed,
            trials_requested: config.trials,
            outcomes: Vec::new(),
            verdict: OracleVerdict::ProbablyNo,
        });
    }
    let nn = n as usize;
    let diag_of = |margins: &[u64], zeta: u64| {
        let mut d = ModMatrix::zeros(l, nn, nn);
        let mut slot = 0usize;
        for (class, &mult) in margins.iter().enumerate() {
            let eigen = crate::modp::pow_mod(zeta, class as u64, l);
            for _ in 0..mult {
                d.set(slot, slot, eigen);
                slot += 1;
            }
        }
        d
    };
    let d_a = diag_of(dims.a(), zeta_p);
    let d_b = diag_of(dims.b(), zeta_q);
    run_trials(config, |sub_seed| {
        let mut rng = SplitMix64::new(sub_seed);
        let mut conjugate = |d: &ModMatrix| loop {
            let mut p = ModMatrix::zeros(l, nn, nn);
            for i in 0..nn {
                for j in 0..nn {
                    p.set(i, j, rng.next_mod(l));
                }
            }
            if let Some(p_inv) = p.invert() {
                return p.mul(d).mul(&p_inv);
            }
        };
        let a = conjugate(&d_a);
        let b = conjugate(&d_b);
        let span = span_closure(l, nn, &[a.clone(), b.clone()], &[a, b]);
        Ok((span, nn * nn))
    })
}

pub fn oracle_torus_knot_irreducible(
    dims: &TorusKnotDims,
    config: &PrimeFieldConfig,
) -> Result<OracleVerdict> {
    Ok(oracle_torus_knot_report(dims, config)?.verdict)
}
