//! Schur bundles on partial flag varieties.
//!
//! A weight `λ` on `F(k_1, ..., k_r; n)` is a concatenation of one weakly
//! decreasing sequence per block. `λ + ρ` is the blocked partition attached
//! to `E_λ`; twisting by `O(-t)` evolves that partition to time `t`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{BlockedPartition, FlagType};

/// `ρ = (n-1, n-2, ..., 1, 0)`.
pub fn rho(n: usize) -> Vec<i64> {
    (0..n as i64).rev().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurWeight {
    ftype: FlagType,
    lambda: Vec<i64>,
}

impl SchurWeight {
    pub fn new(ftype: FlagType, lambda: Vec<i64>) -> Result<Self> {
        if lambda.len() != ftype.total_length() {
            return Err(Error::LengthMismatch {
                expected: ftype.total_length(),
                found: lambda.len(),
            });
        }
        let offsets = ftype.offsets();
        for b in 0..ftype.num_blocks() {
            let block = &lambda[offsets[b]..offsets[b + 1]];
            if block.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Weight(format!(
                    "block {} of {lambda:?} is not weakly decreasing",
                    b + 1
                )));
            }
        }
        Ok(SchurWeight { ftype, lambda })
    }

    /// Reads `6|5,2,2,1|1` with the partition grammar, without the
    /// strict-decrease requirement.
    pub fn parse(s: &str) -> Result<Self> {
        let cleaned = s.trim().replace('\u{2212}', "-");
        let mut lengths = Vec::new();
        let mut lambda = Vec::new();
        for raw in cleaned.split('|') {
            let block = raw
                .split(',')
                .filter(|e| !e.trim().is_empty())
                .map(|e| {
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::parse(s, format!("{e:?} is not an integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            lengths.push(block.len());
            lambda.extend(block);
        }
        SchurWeight::new(FlagType::new(lengths)?, lambda)
    }

    pub fn flag_type(&self) -> &FlagType {
        &self.ftype
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn block(&self, i: usize) -> &[i64] {
        let offsets = self.ftype.offsets();
        &self.lambda[offsets[i]..offsets[i + 1]]
    }

    /// `λ(t)`: block `i` lowered by `t` times its velocity.
    pub fn twisted(&self, t: i64) -> SchurWeight {
        let lambda = self
            .ftype
            .block_of_each()
            .into_iter()
            .zip(&self.lambda)
            .map(|(b, &x)| x - t * self.ftype.velocity(b))
            .collect();
        SchurWeight {
            ftype: self.ftype.clone(),
            lambda,
        }
    }

    pub fn plus_rho(&self) -> Vec<i64> {
        self.lambda
            .iter()
            .zip(rho(self.lambda.len()))
            .map(|(x, r)| x + r)
            .collect()
    }
}

impl std::fmt::Display for SchurWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in 0..self.ftype.num_blocks() {
            if b > 0 {
                write!(f, "|")?;
            }
            let parts: Vec<String> = self.block(b).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

/// `λ = P - ρ`. With `normalize`, the result is translated so its smallest
/// entry is zero.
pub fn to_weight(p: &BlockedPartition, normalize: bool) -> SchurWeight {
    let mut lambda: Vec<i64> = p
        .entries()
        .iter()
        .zip(rho(p.entries().len()))
        .map(|(x, r)| x - r)
        .collect();
    if normalize {
        let min = lambda.iter().copied().min().unwrap_or(0);
        lambda.iter_mut().for_each(|x| *x -= min);
    }
    SchurWeight {
        ftype: p.flag_type().clone(),
        lambda,
    }
}

/// `P = λ + ρ`.
pub fn to_partition(w: &SchurWeight) -> Result<BlockedPartition> {
    BlockedPartition::new(w.ftype.clone(), w.plus_rho()).map_err(|e| match e {
        Error::NotDecreasing { .. } => {
            Error::Weight(format!("{w} + ρ is not strictly decreasing"))
        }
        other => other,
    })
}

/// `μ` padded with zeros to length `d`, checked dominant, and translated to
/// be nonnegative.
fn padded_shape(mu: &[i64], d: usize) -> Result<Vec<u64>> {
    if mu.len() > d {
        return Err(Error::Weight(format!("{mu:?} has more than {d} parts")));
    }
    let mut full = mu.to_vec();
    full.resize(d, 0);
    if full.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Weight(format!("{mu:?} is not weakly decreasing")));
    }
    let min = full.last().copied().unwrap_or(0);
    Ok(full.into_iter().map(|x| (x - min) as u64).collect())
}

/// `dim S^μ C^d` by the hook-content formula.
pub fn schur_dim_hook(mu: &[i64], d: usize) -> Result<BigUint> {
    let shape = padded_shape(mu, d)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&r| r as usize > j).count();
            num *= BigUint::from((d + j - i) as u64);
            den *= BigUint::from((arm + leg + 1) as u64);
        }
    }
    Ok(num / den)
}

/// `dim S^μ C^d = Π_{i<j} (μ_i - μ_j + j - i) / (j - i)`.
pub fn schur_dim_weyl(mu: &[i64], d: usize) -> Result<BigUint> {
    let shape = padded_shape(mu, d)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..d {
        for j in i + 1..d {
            num *= BigUint::from(shape[i] - shape[j] + (j - i) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    Ok(num / den)
}

/// Dimension of the irreducible `GL_d` representation of highest weight `μ`.
pub fn schur_dim(mu: &[i64], d: usize) -> Result<BigUint> {
    schur_dim_weyl(mu, d)
}

/// `rk E_λ = Π_s dim S^{λ_s} C^{l_s}`.
pub fn bundle_rank(w: &SchurWeight) -> BigUint {
    (0..w.ftype.num_blocks())
        .map(|s| {
            schur_dim(w.block(s), w.ftype.lengths()[s]).expect("blocks of a weight are dominant")
        })
        .product()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomologyAnswer {
    Vanishes,
    Nonzero {
        q: usize,
        mu: Vec<i64>,
        #[serde(serialize_with = "serialize_decimal")]
        dim: BigUint,
    },
}

fn serialize_decimal<S: serde::Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl CohomologyAnswer {
    pub fn vanishes(&self) -> bool {
        matches!(self, CohomologyAnswer::Vanishes)
    }

    /// `(-1)^q dim H^q`, the Euler characteristic.
    pub fn euler_characteristic(&self) -> BigInt {
        match self {
            CohomologyAnswer::Vanishes => BigInt::zero(),
            CohomologyAnswer::Nonzero { q, dim, .. } => {
                let v = BigInt::from(dim.clone());
                if q % 2 == 0 {
                    v
                } else {
                    -v
                }
            }
        }
    }
}

/// Cohomology of `E_λ(-t)` by Borel-Weil-Bott.
pub fn bwb_cohomology(w: &SchurWeight, t: i64) -> CohomologyAnswer {
    let shifted = w.twisted(t).plus_rho();
    let n = shifted.len();
    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return CohomologyAnswer::Vanishes;
    }
    let q = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| shifted[i] < shifted[j])
        .count();
    let mu: Vec<i64> = sorted.iter().zip(rho(n)).map(|(x, r)| x - r).collect();
    let dim = schur_dim(&mu, n).expect("sorted regular weight is dominant");
    CohomologyAnswer::Nonzero { q, mu, dim }
}

/// `E_λ(-t)` is acyclic, i.e. `λ - t·(twist) + ρ` has a repeated entry.
/// Agrees with `bwb_cohomology(w, t).vanishes()` without computing dimensions.
pub fn bwb_vanishes(w: &SchurWeight, t: i64) -> bool {
    let mut v = w.twisted(t).plus_rho();
    v.sort_unstable();
    v.windows(2).any(|p| p[0] == p[1])
}

/// `E_λ` is initialized and `E_λ(-t)` is acyclic for every `t ∈ [N]`.
pub fn is_ulrich_via_bwb(w: &SchurWeight) -> bool {
    let p = w.plus_rho();
    if p.windows(2).any(|x| x[0] <= x[1]) {
        return false;
    }
    let n = w.ftype.dimension() as i64;
    (1..=n).all(|t| bwb_vanishes(w, t))
}

/// `dim F(k_1, ..., k_r; n)`, computed as `Σ k_i (k_{i+1} - k_i)` and checked
/// against `Σ_{i<j} l_i l_j`.
pub fn flag_dimension(ftype: &FlagType) -> u64 {
    let mut ks = ftype.flag_dims();
    ks.push(ftype.total_length());
    let by_flag: u64 = ks
        .windows(2)
        .map(|w| (w[0] * (w[1] - w[0])) as u64)
        .sum();
    assert_eq!(by_flag, ftype.dimension(), "dimension formulas disagree");
    by_flag
}

/// The line bundle `L_1^{a_1} ⊗ ... ⊗ L_r^{a_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationWeights {
    a: Vec<u64>,
}

impl PolarizationWeights {
    pub fn new(a: Vec<u64>) -> Result<Self> {
        if a.is_empty() || a.contains(&0) {
            return Err(Error::Weight(format!(
                "polarization weights {a:?} must be positive"
            )));
        }
        Ok(PolarizationWeights { a })
    }

    /// `a = (1, ..., 1)`.
    pub fn ones(r: usize) -> Self {
        PolarizationWeights { a: vec![1; r] }
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// `b_{ij} = a_i + ... + a_j`, one-based and inclusive.
    pub fn b(&self, i: usize, j: usize) -> u64 {
        self.a[i - 1..j].iter().sum()
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn check_polarization(ftype: &FlagType, a: &PolarizationWeights) -> Result<()> {
    if a.a.len() != ftype.steps() {
        return Err(Error::Weight(format!(
            "{} weights given for a flag with {} steps",
            a.a.len(),
            ftype.steps()
        )));
    }
    Ok(())
}

/// Degree of `F(k_1, ..., k_r; n)` under `L_a`, via the closed product formula
/// in the `b_{ij}`.
pub fn flag_degree(ftype: &FlagType, a: &PolarizationWeights) -> Result<BigUint> {
    check_polarization(ftype, a)?;
    let r = ftype.steps();
    let n = ftype.total_length() as u64;
    let mut k = vec![0u64];
    k.extend(ftype.flag_dims().iter().map(|&x| x as u64));
    k.push(n);
    let mut num = factorial(ftype.dimension());
    for i in 1..=r {
        for j in i..=r {
            let e = (k[i] - k[i - 1]) * (k[j + 1] - k[j]);
            num *= BigUint::from(a.b(i, j)).pow(e as u32);
        }
    }
    let mut den = BigUint::one();
    for s in 1..=r {
        for i in k[s - 1] + 1..=k[s] {
            den *= factorial(n - i) / factorial(k[s] - i);
        }
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// The same degree from `N! Π ⟨ψ, α⟩ / ⟨ρ, α⟩` over positive roots, with the
/// dominant weight `ψ` written out coordinate by coordinate.
pub fn flag_degree_by_roots(ftype: &FlagType, a: &PolarizationWeights) -> Result<BigUint> {
    check_polarization(ftype, a)?;
    let r = ftype.steps();
    let psi: Vec<u64> = ftype
        .block_of_each()
        .into_iter()
        .map(|b| if b < r { a.b(b + 1, r) } else { 0 })
        .collect();
    let mut num = factorial(ftype.dimension());
    let mut den = BigUint::one();
    for i in 0..psi.len() {
        for j in i + 1..psi.len() {
            if psi[i] > psi[j] {
                num *= BigUint::from(psi[i] - psi[j]);
                den *= BigUint::from((j - i) as u64);
            }
        }
    }
    Ok(num / den)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UlrichIdentity {
    pub h0: BigUint,
    pub rank: BigUint,
    pub degree: BigUint,
    pub ok: bool,
}

/// Compares `h^0(E_λ)` with `rk E_λ · deg F` for the polarization `a = (1, ..., 1)`.
pub fn ulrich_identity_check(w: &SchurWeight) -> Result<UlrichIdentity> {
    let h0 = match bwb_cohomology(w, 0) {
        CohomologyAnswer::Nonzero { q: 0, dim, .. } => dim,
        _ => {
            return Err(Error::Weight(format!(
                "{w} + ρ is not strictly decreasing, so E_λ has no sections"
            )))
        }
    };
    let rank = bundle_rank(w);
    let degree = flag_degree(&w.ftype, &PolarizationWeights::ones(w.ftype.steps()))?;
    let ok = h0 == &rank * &degree;
    Ok(UlrichIdentity {
        h0,
        rank,
        degree,
        ok,
    })
}

/// `χ(E_λ(-t))` for `t = 0, ..., count - 1`.
pub fn euler_characteristics(w: &SchurWeight, count: usize) -> Vec<BigInt> {
    (0..count as i64)
        .map(|t| bwb_cohomology(w, t).euler_characteristic())
        .collect()
}
