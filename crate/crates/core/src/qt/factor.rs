use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::series::{Grading, TruncatedSeries};
use crate::error::{precondition, ForgeError, Result};
use crate::rational::Rational;

/// `∏ (1 − qᵃtᵇ)^e` in canonical form: no `(0, 0)` factor, no zero exponent, sorted by `(a, b)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32, i64)>", into = "Vec<(u32, u32, i64)>")]
pub struct FactorProduct {
    factors: BTreeMap<(u32, u32), i64>,
}

impl TryFrom<Vec<(u32, u32, i64)>> for FactorProduct {
    type Error = ForgeError;
    fn try_from(list: Vec<(u32, u32, i64)>) -> Result<Self> {
        let mut p = FactorProduct::one();
        for (a, b, e) in list {
            p.mul_factor(a, b, e)?;
        }
        Ok(p)
    }
}

impl From<FactorProduct> for Vec<(u32, u32, i64)> {
    fn from(p: FactorProduct) -> Self {
        p.factors.into_iter().map(|((a, b), e)| (a, b, e)).collect()
    }
}

impl FactorProduct {
    pub fn one() -> Self {
        FactorProduct::default()
    }

    /// `(1 − qᵃtᵇ)^e`.
    pub fn factor(a: u32, b: u32, e: i64) -> Result<Self> {
        let mut p = Self::one();
        p.mul_factor(a, b, e)?;
        Ok(p)
    }

    /// Multiplies in `(1 − qᵃtᵇ)^e`.
    pub fn mul_factor(&mut self, a: u32, b: u32, e: i64) -> Result<()> {
        if (a, b) == (0, 0) {
            return Err(ForgeError::DivisionByZero("the factor 1 - q^0 t^0 vanishes".into()));
        }
        if e == 0 {
            return Ok(());
        }
        let slot = self.factors.entry((a, b)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&(a, b));
        }
        Ok(())
    }

    pub fn factors(&self) -> &BTreeMap<(u32, u32), i64> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), &e) in &other.factors {
            out.mul_factor(a, b, e).expect("canonical factors are non-degenerate");
        }
        out
    }

    pub fn inverse(&self) -> Self {
        FactorProduct { factors: self.factors.iter().map(|(&k, &e)| (k, -e)).collect() }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    /// The substitution `q = t`, as a product in `t` alone (stored with `a = 0`).
    pub fn at_q_equals_t(&self) -> Self {
        let mut out = Self::one();
        for (&(a, b), &e) in &self.factors {
            out.mul_factor(0, a + b, e).expect("a + b > 0");
        }
        out
    }

    /// The substitution `q = 0`: factors with `a > 0` become 1.
    pub fn at_q_zero(&self) -> Self {
        FactorProduct { factors: self.factors.iter().filter(|(&(a, _), _)| a == 0).map(|(&k, &e)| (k, e)).collect() }
    }

    /// Exact value at rational `(q, t)`.
    pub fn evaluate(&self, q: &Rational, t: &Rational) -> Result<Rational> {
        let mut value = Rational::one();
        for (&(a, b), &e) in &self.factors {
            let base = Rational::one() - num::pow(q.clone(), a as usize) * num::pow(t.clone(), b as usize);
            if base.is_zero() {
                return Err(ForgeError::DivisionByZero(format!("factor (1 - q^{a} t^{b}) vanishes at q={q}, t={t}")));
            }
            value *= if e > 0 { num::pow(base, e as usize) } else { num::pow(base.recip(), (-e) as usize) };
        }
        Ok(value)
    }

    /// Expands the product in `grading`, sending `qᵃtᵇ` to the exponent vector `embed(a, b)`.
    pub fn expand(&self, grading: &Arc<Grading>, embed: impl Fn(u32, u32) -> Vec<u32>) -> Result<TruncatedSeries> {
        let mut s = TruncatedSeries::one(grading);
        for (&(a, b), &e) in &self.factors {
            s.mul_one_minus_pow(&embed(a, b), e)?;
        }
        Ok(s)
    }

    /// Expands over the `(q, t)` grading.
    pub fn expand_qt(&self, max_degree: u32) -> TruncatedSeries {
        self.expand(&Grading::qt(max_degree), |a, b| vec![a, b]).expect("factors have positive degree")
    }
}

impl fmt::Display for FactorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(&(a, b), &e)| {
                let mono = match (a, b) {
                    (0, b) => format!("t^{b}"),
                    (a, 0) => format!("q^{a}"),
                    (a, b) => format!("q^{a} t^{b}"),
                };
                format!("(1 - {mono})^{e}")
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// A signed finite sum of monomials `qⁿtᵐ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32, i64)>", into = "Vec<(u32, u32, i64)>")]
pub struct Alphabet {
    terms: BTreeMap<(u32, u32), i64>,
}

impl From<Vec<(u32, u32, i64)>> for Alphabet {
    fn from(list: Vec<(u32, u32, i64)>) -> Self {
        let mut a = Alphabet::default();
        for (n, m, c) in list {
            a.add(n, m, c);
        }
        a
    }
}

impl From<Alphabet> for Vec<(u32, u32, i64)> {
    fn from(a: Alphabet) -> Self {
        a.terms.into_iter().map(|((n, m), c)| (n, m, c)).collect()
    }
}

impl Alphabet {
    pub fn zero() -> Self {
        Alphabet::default()
    }

    /// Adds `c · qⁿtᵐ`.
    pub fn add(&mut self, n: u32, m: u32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry((n, m)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&(n, m));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(n, m), &c) in &other.terms {
            out.add(n, m, c);
        }
        out
    }

    /// `(q − t) · A`.
    pub fn times_q_minus_t(&self) -> Self {
        let mut out = Alphabet::zero();
        for (&(n, m), &c) in &self.terms {
            out.add(n + 1, m, c);
            out.add(n, m + 1, -c);
        }
        out
    }

    /// Keeps the terms with `q`-exponent 0.
    pub fn without_q(&self) -> Self {
        Alphabet { terms: self.terms.iter().filter(|(&(n, _), _)| n == 0).map(|(&k, &c)| (k, c)).collect() }
    }

    /// `Ω[A] = ∏ (1 − qⁿtᵐ)^{−c}`.
    pub fn omega(&self) -> Result<FactorProduct> {
        if self.terms.contains_key(&(0, 0)) {
            return precondition("Ω of an alphabet with a constant term diverges");
        }
        let mut p = FactorProduct::one();
        for (&(n, m), &c) in &self.terms {
            p.mul_factor(n, m, -c)?;
        }
        Ok(p)
    }

    /// The alphabet as a series over `grading`, sending `qⁿtᵐ` to `embed(n, m)`.
    pub fn to_series(&self, grading: &Arc<Grading>, embed: impl Fn(u32, u32) -> Vec<u32>) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(grading);
        for (&(n, m), &c) in &self.terms {
            s.add_term(embed(n, m), crate::rational::from_int(c));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int;

    #[test]
    fn canonical_form_cancels() {
        let p = FactorProduct::factor(1, 0, 2).unwrap().mul(&FactorProduct::factor(1, 0, -2).unwrap());
        assert!(p.is_one());
        assert!(FactorProduct::factor(0, 0, 1).is_err());
        let json = serde_json::to_string(&FactorProduct::factor(2, 1, -1).unwrap()).unwrap();
        assert_eq!(json, "[[2,1,-1]]");
    }

    #[test]
    fn omega_of_q_minus_t_times_one_is_pieri_box() {
        // Ω[(q − t)] = (1 − t)/(1 − q).
        let mut a = Alphabet::zero();
        a.add(0, 0, 1);
        let p = a.times_q_minus_t().omega().unwrap();
        assert_eq!(p, FactorProduct::factor(0, 1, 1).unwrap().mul(&FactorProduct::factor(1, 0, -1).unwrap()));
        let v = p.evaluate(&Rational::new(1.into(), 2.into()), &Rational::new(1.into(), 3.into())).unwrap();
        assert_eq!(v, Rational::new(4.into(), 3.into()));
        assert!(p.evaluate(&from_int(1), &from_int(0)).unwrap_err().to_string().contains("vanishes"));
    }
}
