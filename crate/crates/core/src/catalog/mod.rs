//! Generators for the named (OEIS-numbered) sequences used throughout the
//! project, plus the binary-run counters, the regular paper-folding
//! sequence, and the Josephus partial-sum pipeline.
//!
//! The catalog is an immutable registry: construct it once, then pull
//! term prefixes out of it. Offsets are stored per sequence and follow the
//! b-file indexing of each entry. For tests, single term values can be
//! overridden at construction time; this is the seam the fault-injection
//! suite uses to prove which checks depend on which sequence.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact::{Integer, Ring};
use crate::series::{
    catalan_series, geometric_series, motzkin_series, rueppel_series, Sequence, Series,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
}

/// All sequence ids the catalog can generate.
pub const IDS: [&str; 16] = [
    "A000108", "A005811", "A006257", "A014577", "A036563", "A036987", "A037834", "A043545",
    "A043725", "A062050", "A088567", "A088748", "A110036", "A126983", "A268411", "A339422",
];

/// Run statistics of the binary expansion of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunCounts {
    /// Number of maximal runs of equal bits (0 for n = 0).
    pub total_runs: u64,
    /// Number of maximal runs of ones.
    pub runs_of_ones: u64,
    /// Number of adjacent bit positions whose digits differ.
    pub alternations: u64,
}

/// Scans the binary expansion of `n` once and counts runs, runs of ones,
/// and digit alternations.
pub fn binary_runs(n: u64) -> RunCounts {
    if n == 0 {
        return RunCounts {
            total_runs: 0,
            runs_of_ones: 0,
            alternations: 0,
        };
    }
    let bits = 64 - n.leading_zeros() as u64;
    let mut total_runs = 1;
    let mut runs_of_ones = 0;
    let mut alternations = 0;
    let mut prev = (n >> (bits - 1)) & 1;
    if prev == 1 {
        runs_of_ones = 1;
    }
    for i in (0..bits - 1).rev() {
        let d = (n >> i) & 1;
        if d != prev {
            total_runs += 1;
            alternations += 1;
            if d == 1 {
                runs_of_ones += 1;
            }
        }
        prev = d;
    }
    RunCounts {
        total_runs,
        runs_of_ones,
        alternations,
    }
}

/// The regular paper-folding sequence: strip the trailing zeros of `n + 1`
/// and report 1 when the remaining odd part is 1 mod 4.
///
/// The indexing is pinned by the continued-fraction signs it has to
/// reproduce: `2*paperfold(n) - 1` must match the sign of the
/// `(8n+7)`-th Stieltjes parameter of the two-parameter Rueppel series,
/// which the catalog tests check against an independent expansion.
pub fn paperfold(n: u64) -> u8 {
    let mut m = n + 1;
    while m.is_multiple_of(2) {
        m /= 2;
    }
    u8::from(m % 4 == 1)
}

/// The four stages of the Josephus pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct JosephusPipeline {
    /// `1 - r_{n+2}` with each zero at position `4*2^k - 3` replaced by
    /// `-(position+1)/2`, then `1, 0` prepended.
    pub marked: Sequence<Integer>,
    /// Partial sums of `marked` (A062050's term list).
    pub partial1: Sequence<Integer>,
    /// `marked` multiplied termwise by `1, 2, 2, 2, ...`.
    pub doubled: Sequence<Integer>,
    /// Partial sums of `doubled` (A006257's term list).
    pub partial2: Sequence<Integer>,
}

/// Builds the marked complement-of-Rueppel sequence and its partial-sum
/// stages. `n` is the length of every returned sequence; `n >= 4`.
pub fn josephus_pipeline(n: usize) -> JosephusPipeline {
    assert!(n >= 4, "pipeline needs at least 4 terms");
    let r = rueppel_series::<Integer>(n);
    let mut marked = vec![Integer::one(), Integer::zero()];
    for i in 0..n - 2 {
        // 1 - r_{i+2}; the zeros sit exactly where r_{i+2} = 1.
        if r.coeff(i + 2).is_zero() {
            marked.push(Integer::one());
        } else {
            marked.push(Integer::new(-((i as i64 + 1) / 2)));
        }
    }
    let marked = Sequence::new(marked, 0);
    let partial1 = marked.partial_sums();
    let mut weights = vec![Integer::new(2); n];
    weights[0] = Integer::one();
    let doubled = marked.termwise_mul(&Sequence::new(weights, 0));
    let partial2 = doubled.partial_sums();
    JosephusPipeline {
        marked,
        partial1,
        doubled,
        partial2,
    }
}

/// First `n` Motzkin numbers.
pub fn motzkin_terms(n: usize) -> Sequence<Integer> {
    motzkin_series::<Integer>(n).to_sequence(0)
}

/// Immutable registry of sequence generators with optional per-term
/// overrides (a test seam for fault injection).
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    overrides: BTreeMap<(String, i64), Integer>,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    /// Returns a catalog that reports `value` for term `index` (absolute,
    /// offset-aware) of `id`.
    pub fn with_override(mut self, id: &str, index: i64, value: Integer) -> Self {
        self.overrides.insert((id.to_string(), index), value);
        self
    }

    /// Declared offset of a sequence: the absolute index of its first term.
    pub fn offset(&self, id: &str) -> Result<i64, CatalogError> {
        Ok(match id {
            "A000108" | "A005811" | "A014577" | "A036987" | "A043545" | "A088567" | "A088748"
            | "A126983" | "A268411" | "A339422" => 0,
            "A006257" | "A037834" | "A043725" | "A062050" | "A110036" => 1,
            "A036563" => 2,
            _ => return Err(CatalogError::UnknownSequence(id.to_string())),
        })
    }

    /// First `n` terms of the sequence, starting at its declared offset.
    pub fn terms(&self, id: &str, n: usize) -> Result<Sequence<Integer>, CatalogError> {
        let offset = self.offset(id)?;
        let terms = match id {
            "A000108" => catalan_series::<Integer>(n).coeffs().to_vec(),
            "A005811" => (0..n as u64)
                .map(|k| Integer::new(binary_runs(k).total_runs as i64))
                .collect(),
            "A006257" => (1..=n as u64).map(|m| Integer::new(josephus_survivor(m))).collect(),
            "A014577" => (0..n as u64)
                .map(|k| Integer::new(i64::from(paperfold(k))))
                .collect(),
            "A036563" => (2..n as u32 + 2)
                .map(|k| Integer::new(2).pow(k).sub(&Integer::new(3)))
                .collect(),
            "A036987" => rueppel_series::<Integer>(n).coeffs().to_vec(),
            "A037834" => (1..=n as u64)
                .map(|k| Integer::new(binary_runs(k).alternations as i64))
                .collect(),
            "A043545" => {
                let r = rueppel_series::<Integer>(n);
                r.coeffs()
                    .iter()
                    .map(|v| Integer::one().sub(v))
                    .collect()
            }
            "A043725" => run_congruence_numbers(n),
            "A062050" => (1..=n as u64)
                .map(|m| {
                    let p = 1u64 << (63 - m.leading_zeros() as u64);
                    Integer::new((m + 1 - p) as i64)
                })
                .collect(),
            "A088567" => non_squashing_counts(n),
            "A088748" => (0..n as u64)
                .map(|k| Integer::new(binary_runs(k).total_runs as i64 + 1))
                .collect(),
            "A110036" => jacobi_alpha_negated(n),
            "A126983" => {
                let order = n.max(2);
                let c = catalan_series::<Integer>(order);
                let den = Series::one(order).add(&c.mul_xk(1).truncated(order).unwrap());
                den.recip().expect("unit constant").coeffs()[..n].to_vec()
            }
            "A268411" => (0..n as u64)
                .map(|k| Integer::new((binary_runs(k).runs_of_ones % 2) as i64))
                .collect(),
            "A339422" => {
                let order = n.max(2);
                let r = rueppel_series::<Integer>(order);
                let den = Series::one(order).add(&r.mul_xk(1).truncated(order).unwrap());
                den.recip().expect("unit constant").coeffs()[..n].to_vec()
            }
            _ => return Err(CatalogError::UnknownSequence(id.to_string())),
        };
        let mut seq = Sequence::new(terms, offset);
        if !self.overrides.is_empty() {
            let terms = seq
                .terms()
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let index = offset + i as i64;
                    self.overrides
                        .get(&(id.to_string(), index))
                        .cloned()
                        .unwrap_or_else(|| v.clone())
                })
                .collect();
            seq = Sequence::new(terms, offset);
        }
        Ok(seq)
    }
}

/// Josephus survivor for a circle of `m` people, every second eliminated:
/// `J(2^a + l) = 2l + 1`.
fn josephus_survivor(m: u64) -> i64 {
    let p = 1u64 << (63 - m.leading_zeros() as u64);
    (2 * (m - p) + 1) as i64
}

/// Numbers whose binary expansion has a run count congruent to 1 mod 4.
fn run_congruence_numbers(n: usize) -> Vec<Integer> {
    let mut out = Vec::with_capacity(n);
    let mut k = 1u64;
    while out.len() < n {
        if binary_runs(k).total_runs % 4 == 1 {
            out.push(Integer::new(k as i64));
        }
        k += 1;
    }
    out
}

/// A088567 from its generating function: the expansion of
/// `1/(1-x) + sum_{k>=1} x^{3*2^{k-1}-2} / prod_{j=0}^{k} (1 - x^{2^j})`
/// gives the sequence from its third term on; the two leading ones are
/// prepended to match the declared offset 0.
fn non_squashing_counts(n: usize) -> Vec<Integer> {
    if n <= 2 {
        return vec![Integer::one(); n];
    }
    let order = n - 2;
    let mut acc = geometric_series::<Integer>(order);
    // Denominator product, starting from the k = 0 factor (1 - x) and
    // gaining a (1 - x^(2^k)) factor per summand.
    let mut den_poly = vec![Integer::one(), Integer::new(-1)];
    let mut k = 1u32;
    loop {
        let e = 3 * (1usize << (k - 1)) - 2;
        if e >= order {
            break;
        }
        den_poly = poly_mul_one_minus_xk(&den_poly, 1usize << k, order);
        let den = Series::from_coeffs(pad_to(&den_poly, order));
        let term = den
            .recip()
            .expect("unit constant")
            .mul_xk(e)
            .truncated(order)
            .unwrap();
        acc = acc.add(&term);
        k += 1;
    }
    let mut out = vec![Integer::one(), Integer::one()];
    out.extend_from_slice(acc.coeffs());
    out.truncate(n);
    out
}

fn pad_to(coeffs: &[Integer], order: usize) -> Vec<Integer> {
    let mut v = coeffs.to_vec();
    v.truncate(order);
    while v.len() < order {
        v.push(Integer::zero());
    }
    v
}

/// Multiplies a dense polynomial by `(1 - x^k)`, truncating at `order`.
fn poly_mul_one_minus_xk(p: &[Integer], k: usize, order: usize) -> Vec<Integer> {
    let len = (p.len() + k).min(order);
    let mut out = vec![Integer::zero(); len];
    for (i, v) in p.iter().enumerate() {
        if i < out.len() {
            out[i] = out[i].add(v);
        }
        if i + k < out.len() {
            out[i + k] = out[i + k].sub(v);
        }
    }
    out
}

/// A110036 from the Jacobi expansion of the Rueppel generating function:
/// term `m` (offset 1) is the negated parameter `alpha_{m-1}`.
fn jacobi_alpha_negated(n: usize) -> Vec<Integer> {
    let depth = n.max(1) - 1;
    let r = rueppel_series::<Integer>(2 * depth + 2);
    let j = crate::cfrac::jacobi_expand(&r, depth).expect("Rueppel J-fraction exists");
    j.alphas()
        .iter()
        .take(n)
        .map(|a| {
            a.to_integer()
                .expect("Rueppel J-parameters are integers")
                .neg()
        })
        .collect()
}
