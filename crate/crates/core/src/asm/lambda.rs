use std::collections::BTreeMap;

use num::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corner::{lambda_weight, matrix_power, mu_weight};
use super::interlacing::{interlacing_family, Relation};
use super::laurent::{indexed, Laurent, Monomial};
use super::matrix::{enumerate_asm, Asm};
use super::corner::Side;
use crate::error::{precondition, ForgeError, Result};
use crate::rational::{from_int, Rational};

/// Values for the variables `lambda[i,j]`, `mu[i,j]`, `X[i,j]` (first layer) and `Y[i,j]` (base layer).
pub type Assignment = BTreeMap<String, Rational>;

/// Arithmetic needed by the recurrence.
pub trait RecurrenceValue: Clone + Send + Sync {
    fn times(&self, other: &Self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn over(&self, other: &Self) -> Option<Self>;
}

impl RecurrenceValue for Rational {
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn over(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
}

/// A quotient of Laurent polynomials, kept unreduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentFraction {
    pub num: Laurent,
    pub den: Laurent,
}

impl LaurentFraction {
    pub fn of(p: Laurent) -> Self {
        LaurentFraction { num: p, den: Laurent::one() }
    }

    /// Whether `num / den` equals `p`, by cross-multiplication.
    pub fn equals(&self, p: &Laurent) -> bool {
        p.mul(&self.den) == self.num
    }
}

impl RecurrenceValue for LaurentFraction {
    fn times(&self, other: &Self) -> Self {
        LaurentFraction { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }
    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            return LaurentFraction { num: self.num.add(&other.num), den: self.den.clone() };
        }
        LaurentFraction { num: self.num.mul(&other.den).add(&other.num.mul(&self.den)), den: self.den.mul(&other.den) }
    }
    fn over(&self, other: &Self) -> Option<Self> {
        if other.num.is_zero() {
            return None;
        }
        match other.num.inverse_monomial() {
            Ok(inv) => Some(LaurentFraction { num: self.num.mul(&other.den).mul(&inv), den: self.den.clone() }),
            Err(_) => Some(LaurentFraction { num: self.num.mul(&other.den), den: self.den.mul(&other.num) }),
        }
    }
}

/// Runs the recurrence up to layer `k` and returns that layer, indexed from `(1, 1)`.
///
/// `x[0] = Y` (size n+1), `x[1] = X` (size n), and
/// `x[k+1]_{i,j} = (μ_{i,n−k+1−j} x[k]_{i,j} x[k]_{i+1,j+1} + λ_{i,j} x[k]_{i,j+1} x[k]_{i+1,j}) / x[k−1]_{i+1,j+1}`.
pub fn lambda_layer<T: RecurrenceValue>(n: usize, k: usize, value: &impl Fn(&str) -> Result<T>) -> Result<Vec<Vec<T>>> {
    if n == 0 || k > n {
        return precondition(format!("layer {k} of an order-{n} pyramid does not exist"));
    }
    let layer = |name: &str, size: usize| -> Result<Vec<Vec<T>>> {
        (1..=size).map(|i| (1..=size).map(|j| value(&indexed(name, i, j))).collect()).collect()
    };
    let mut below = layer("Y", n + 1)?;
    let mut current = layer("X", n)?;
    if k == 0 {
        return Ok(below);
    }
    for step in 1..k {
        let size = n - step;
        let mut next = Vec::with_capacity(size);
        for i in 0..size {
            let mut row = Vec::with_capacity(size);
            for j in 0..size {
                let mu = value(&indexed("mu", i + 1, n - step - j))?;
                let lambda = value(&indexed("lambda", i + 1, j + 1))?;
                let main = mu.times(&current[i][j]).times(&current[i + 1][j + 1]);
                let cross = lambda.times(&current[i][j + 1]).times(&current[i + 1][j]);
                let entry = main.plus(&cross).over(&below[i + 1][j + 1]).ok_or_else(|| {
                    ForgeError::DivisionByZero(format!("x[{}] at ({}, {}) vanishes", step - 1, i + 2, j + 2))
                })?;
                row.push(entry);
            }
            next.push(row);
        }
        below = std::mem::replace(&mut current, next);
    }
    Ok(current)
}

/// `x_n[k]_{1,1}` at an exact rational point.
pub fn lambda_recurrence(n: usize, k: usize, point: &Assignment) -> Result<Rational> {
    let value = |name: &str| point.get(name).cloned().ok_or_else(|| ForgeError::Precondition(format!("no value for {name}")));
    Ok(lambda_layer(n, k, &value)?.swap_remove(0).swap_remove(0))
}

/// `x_n[k]_{1,1}` as an unreduced quotient of Laurent polynomials in all variables.
pub fn lambda_recurrence_symbolic(n: usize, k: usize) -> Result<LaurentFraction> {
    let value = |name: &str| Ok(LaurentFraction::of(Laurent::variable(name)));
    Ok(lambda_layer(n, k, &value)?.swap_remove(0).swap_remove(0))
}

fn monomial_product(parts: &[Laurent]) -> Laurent {
    parts.iter().fold(Laurent::one(), |acc, p| acc.mul(p))
}

/// The sum over left-interlacing pairs `(A, B)` with `|B| = k`, `|A| = k − 1` of
/// `F_λ(B)/s(F_λ(A)) · G^n_μ(B)/t(G^n_μ(A)) · X^B · s(Y)^{−A}`, where `s` shifts both indices
/// of `λ` and `Y` by one and `t` shifts the row index of `μ`.
pub fn lambda_closed_form(n: usize, k: usize) -> Result<Laurent> {
    if k == 0 || k > n {
        return precondition(format!("the closed form needs 1 ≤ k ≤ n, got k = {k}, n = {n}"));
    }
    let terms: Vec<Laurent> = enumerate_asm(k)?
        .par_iter()
        .map(|b| -> Result<Laurent> {
            let top = monomial_product(&[lambda_weight(b), mu_weight(b, n)?, matrix_power(b, "X", 0)]);
            let mut sum = Laurent::zero();
            for (_, a) in &interlacing_family(b, Side::Left, Relation::Below)?.members {
                let bottom = monomial_product(&[
                    lambda_weight(a).shift_indices("lambda", 1, 1),
                    mu_weight(a, n)?.shift_indices("mu", 1, 0),
                    matrix_power(a, "Y", 1),
                ]);
                sum = sum.add(&top.mul(&bottom.inverse_monomial()?));
            }
            Ok(sum)
        })
        .collect::<Result<_>>()?;
    Ok(terms.iter().fold(Laurent::zero(), |acc, t| acc.add(t)))
}

/// `Σ_{|B|=n} M^B λ^{Inv(B)} ∏_{(i,j)∈Dinv(B)} μ_{i,n+1−j} ∏_{B_{i,j}=−1} (μ_{i,n+1−j} + λ_{i,j})`.
pub fn corollary_form(n: usize) -> Result<Laurent> {
    let terms: Vec<Laurent> = enumerate_asm(n)?
        .par_iter()
        .map(|b| {
            let mut exps = Monomial::new();
            for (i, j) in b.inversions() {
                *exps.entry(indexed("lambda", i, j)).or_insert(0) += 1;
            }
            for (i, j) in b.dual_inversions() {
                *exps.entry(indexed("mu", i, n + 1 - j)).or_insert(0) += 1;
            }
            let mut term = Laurent::monomial(exps).mul(&matrix_power(b, "M", 0));
            for i in 1..=n {
                for j in (1..=n).filter(|&j| b.get(i, j) == -1) {
                    term = term.mul(&Laurent::variable(&indexed("mu", i, n + 1 - j)).add(&Laurent::variable(&indexed("lambda", i, j))));
                }
            }
            term
        })
        .collect();
    Ok(terms.iter().fold(Laurent::zero(), |acc, t| acc.add(t)))
}

/// `Σ_B λ^{inv(B)} (1 + λ)^{N(B)} M^B` in the single variable `lambda`, with `inv` counting
/// the inversion zeros of `B`.
pub fn robbins_rumsey_form(n: usize) -> Result<Laurent> {
    let one_plus = Laurent::one().add(&Laurent::variable("lambda"));
    let mut total = Laurent::zero();
    for b in enumerate_asm(n)? {
        let term = Laurent::variable("lambda")
            .pow(b.inversions().len() as u32)
            .mul(&one_plus.pow(b.negatives() as u32))
            .mul(&matrix_power(&b, "M", 0));
        total = total.add(&term);
    }
    Ok(total)
}

fn variable_family(name: &str) -> &str {
    name.split('[').next().unwrap_or(name)
}

/// Sets `Y ≡ 1` and renames `X[i,j]` to `M[i,j]`.
pub fn with_unit_base(p: &Laurent) -> Result<Laurent> {
    p.substitute(|v| match variable_family(v) {
        "Y" => Some(Laurent::one()),
        "X" => Some(Laurent::variable(&v.replacen('X', "M", 1))),
        _ => None,
    })
}

/// Sets `μ ≡ 1` and every `λ[i,j]` to one variable `lambda`.
pub fn with_uniform_lambda(p: &Laurent) -> Result<Laurent> {
    p.substitute(|v| match variable_family(v) {
        "mu" => Some(Laurent::one()),
        "lambda" => Some(Laurent::variable("lambda")),
        _ => None,
    })
}

/// Sets `λ ≡ −1` and `μ ≡ 1`.
pub fn with_determinant_parameters(p: &Laurent) -> Result<Laurent> {
    p.substitute(|v| match variable_family(v) {
        "mu" => Some(Laurent::one()),
        "lambda" => Some(Laurent::constant(from_int(-1))),
        _ => None,
    })
}

/// `Σ_σ sgn(σ) ∏ M_{i,σ(i)}`.
pub fn determinant_polynomial(n: usize) -> Result<Laurent> {
    let mut total = Laurent::zero();
    for b in enumerate_asm(n)?.into_iter().filter(|b| b.negatives() == 0) {
        let sign = if b.inversions().len() % 2 == 0 { 1 } else { -1 };
        total = total.add(&matrix_power(&b, "M", 0).mul(&Laurent::constant(from_int(sign))));
    }
    Ok(total)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_determinant(m: &[Vec<Rational>]) -> Rational {
    match m.len() {
        0 => Rational::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .filter(|&c| !m[0][c].is_zero())
            .map(|c| {
                let minor: Vec<Vec<Rational>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect()).collect();
                let term = &m[0][c] * cofactor_determinant(&minor);
                if c % 2 == 0 { term } else { -term }
            })
            .fold(Rational::zero(), |acc, t| acc + t),
    }
}

/// A rational with numerator and denominator uniform in `[−9, 9] \ {0}`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let mut pick = || loop {
        let v: i64 = rng.gen_range(-9..=9);
        if v != 0 {
            return v;
        }
    };
    Rational::new(pick().into(), pick().into())
}

/// A random assignment of every variable the order-`n` pyramid uses.
pub fn random_point(n: usize, rng: &mut impl Rng) -> Assignment {
    let mut point = Assignment::new();
    for name in ["lambda", "mu", "X", "Y"] {
        let size = if name == "X" { n } else { n + 1 };
        for i in 1..=size {
            for j in 1..=size {
                point.insert(indexed(name, i, j), random_rational(rng));
            }
        }
    }
    point
}

/// One recurrence-versus-closed-form comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub k: usize,
    pub point: usize,
    #[serde(with = "crate::rational::as_string")]
    pub recurrence: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub closed_form: Rational,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Compares the recurrence with the closed form for every `k ≤ n` at `points` random points,
/// resampling points where the recurrence divides by zero.
pub fn compare_at_random_points(n: usize, points: usize, rng: &mut impl Rng) -> Result<Vec<PointRecord>> {
    let forms: Vec<Laurent> = (1..=n).map(|k| lambda_closed_form(n, k)).collect::<Result<_>>()?;
    let mut records = Vec::new();
    for (index, form) in forms.iter().enumerate() {
        let k = index + 1;
        let mut point = 0;
        while point < points {
            let assignment = random_point(n, rng);
            let recurrence = match lambda_recurrence(n, k, &assignment) {
                Ok(v) => v,
                Err(ForgeError::DivisionByZero(_)) => continue,
                Err(e) => return Err(e),
            };
            let closed_form = form.evaluate(|v| assignment.get(v).cloned())?;
            let matches = recurrence == closed_form;
            records.push(PointRecord { k, point, recurrence, closed_form, matches });
            point += 1;
        }
    }
    Ok(records)
}

/// The weighted count `Σ_{|B|=n} 2^{N(B)}`.
pub fn weighted_asm_count(n: usize) -> Result<Rational> {
    Ok(enumerate_asm(n)?.iter().map(|b: &Asm| Rational::from_integer(num::BigInt::from(1u64 << b.negatives()))).sum())
}
