use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, ForgeError, Result};
use crate::rational::{format_rational, Rational};

/// A linear degree bound `Σ weights[i] · e[i] ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cutoff {
    pub weights: Vec<u32>,
    pub bound: u32,
}

/// Named variables together with the cutoffs that truncate every series over them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    variables: Vec<String>,
    cutoffs: Vec<Cutoff>,
}

impl Grading {
    /// Every variable must carry positive weight in some cutoff, so that truncation is finite.
    pub fn new(variables: Vec<String>, cutoffs: Vec<Cutoff>) -> Result<Arc<Self>> {
        let n = variables.len();
        if cutoffs.iter().any(|c| c.weights.len() != n) {
            return Err(ForgeError::ShapeMismatch("cutoff weights must match the variables".into()));
        }
        if let Some(v) = (0..n).find(|&v| cutoffs.iter().all(|c| c.weights[v] == 0)) {
            return precondition(format!("variable {} is not bounded by any cutoff", variables[v]));
        }
        Ok(Arc::new(Grading { variables, cutoffs }))
    }

    /// One variable per name, each bounded by `bound` on its own.
    pub fn per_variable(names: &[&str], bound: u32) -> Arc<Self> {
        let n = names.len();
        let cutoffs = (0..n)
            .map(|v| Cutoff { weights: (0..n).map(|w| u32::from(v == w)).collect(), bound })
            .collect();
        Grading::new(names.iter().map(|s| s.to_string()).collect(), cutoffs).expect("every variable is bounded")
    }

    /// `z ≤ max_weight` and `q + t ≤ max_degree` over `(z, q, t)`.
    pub fn zqt(max_weight: u32, max_degree: u32) -> Arc<Self> {
        Grading::new(
            vec!["z".into(), "q".into(), "t".into()],
            vec![Cutoff { weights: vec![1, 0, 0], bound: max_weight }, Cutoff { weights: vec![0, 1, 1], bound: max_degree }],
        )
        .expect("bounded")
    }

    /// `q + t ≤ max_degree` over `(q, t)`.
    pub fn qt(max_degree: u32) -> Arc<Self> {
        Grading::new(vec!["q".into(), "t".into()], vec![Cutoff { weights: vec![1, 1], bound: max_degree }]).expect("bounded")
    }

    /// Variables `z1..zT` with total degree at most `max_weight`.
    pub fn refined(period: usize, max_weight: u32) -> Arc<Self> {
        Grading::new((1..=period).map(|k| format!("z{k}")).collect(), vec![Cutoff { weights: vec![1; period], bound: max_weight }])
            .expect("bounded")
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn cutoffs(&self) -> &[Cutoff] {
        &self.cutoffs
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn admits(&self, e: &[u32]) -> bool {
        self.cutoffs
            .iter()
            .all(|c| c.weights.iter().zip(e).map(|(&w, &x)| u64::from(w) * u64::from(x)).sum::<u64>() <= u64::from(c.bound))
    }
}

/// A power series over a grading, with exact rational coefficients, truncated by its cutoffs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    grading: Arc<Grading>,
    coeffs: BTreeMap<Vec<u32>, Rational>,
}

impl TruncatedSeries {
    pub fn zero(grading: &Arc<Grading>) -> Self {
        TruncatedSeries { grading: grading.clone(), coeffs: BTreeMap::new() }
    }

    pub fn one(grading: &Arc<Grading>) -> Self {
        Self::monomial(grading, vec![0; grading.arity()], Rational::one())
    }

    /// `c · x^e`, or zero if `e` lies beyond the cutoffs.
    pub fn monomial(grading: &Arc<Grading>, e: Vec<u32>, c: Rational) -> Self {
        let mut s = Self::zero(grading);
        s.add_term(e, c);
        s
    }

    pub fn grading(&self) -> &Arc<Grading> {
        &self.grading
    }

    /// Non-zero coefficients keyed by exponent vector.
    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.coeffs
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · x^e` in place; terms beyond the cutoffs are dropped.
    pub fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() || !self.grading.admits(&e) {
            return;
        }
        match self.coeffs.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_grading(&self, other: &Self) -> Result<()> {
        if self.grading != other.grading {
            return Err(ForgeError::ShapeMismatch("series over different gradings".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_grading(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.grading);
        }
        TruncatedSeries { grading: self.grading.clone(), coeffs: self.coeffs.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiplies every exponent by `x^shift`, dropping what falls beyond the cutoffs.
    pub fn shift(&self, shift: &[u32]) -> Self {
        let mut out = Self::zero(&self.grading);
        for (e, c) in &self.coeffs {
            out.add_term(e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_grading(other)?;
        let mut out = Self::zero(&self.grading);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if self.grading.admits(&e) {
                    out.add_term(e, c1 * c2);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by `(1 − x^m)^power` in place.
    pub fn mul_one_minus_pow(&mut self, m: &[u32], power: i64) -> Result<()> {
        if m.iter().all(|&x| x == 0) {
            return Err(ForgeError::DivisionByZero("factor 1 - 1 has degree zero".into()));
        }
        for _ in 0..power.unsigned_abs() {
            let mut term = self.shift(m);
            if power > 0 {
                for (e, c) in term.coeffs {
                    self.add_term(e, -c);
                }
            } else {
                while !term.is_zero() {
                    for (e, c) in &term.coeffs {
                        self.add_term(e.clone(), c.clone());
                    }
                    term = term.shift(m);
                }
            }
        }
        Ok(())
    }

    /// Replaces each exponent vector `e` by `map(e)` in the target grading, summing collisions.
    pub fn substitute(&self, target: &Arc<Grading>, map: impl Fn(&[u32]) -> Vec<u32>) -> Self {
        let mut out = Self::zero(target);
        for (e, c) in &self.coeffs {
            out.add_term(map(e), c.clone());
        }
        out
    }

    /// `exp(self)` for a series without constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coefficient(&vec![0; self.grading.arity()]).is_zero() {
            return precondition("exp needs a series without constant term");
        }
        let mut total = Self::one(&self.grading);
        let mut term = Self::one(&self.grading);
        let mut k = 1i64;
        loop {
            term = term.mul(self)?.scale(&Rational::new(1.into(), k.into()));
            if term.is_zero() {
                return Ok(total);
            }
            total = total.add(&term)?;
            k += 1;
        }
    }

    /// The plethystic power sum `p_k`: every monomial `x^e` becomes `x^{k e}`, constants stay fixed.
    pub fn power_sum(&self, k: u32) -> Self {
        let mut out = Self::zero(&self.grading);
        for (e, c) in &self.coeffs {
            out.add_term(e.iter().map(|x| x * k).collect(), c.clone());
        }
        out
    }

    /// `Ω[A] = exp(Σ_k p_k[A] / k)` for an alphabet `A` without constant term.
    pub fn plethystic_exp(&self) -> Result<Self> {
        let mut log = Self::zero(&self.grading);
        let mut k = 1u32;
        loop {
            let p = self.power_sum(k);
            if p.is_zero() {
                break;
            }
            log = log.add(&p.scale(&Rational::new(1.into(), k.into())))?;
            k += 1;
        }
        log.exp()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = self
                    .grading
                    .variables
                    .iter()
                    .zip(e)
                    .filter(|(_, &x)| x > 0)
                    .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                    .collect();
                if mono.is_empty() {
                    format_rational(c)
                } else {
                    format!("{}*{}", format_rational(c), mono.join("*"))
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int;

    #[test]
    fn geometric_series_and_inverse() {
        let g = Grading::per_variable(&["z"], 6);
        let mut s = TruncatedSeries::one(&g);
        s.mul_one_minus_pow(&[1], -1).unwrap();
        assert_eq!(s.coeffs().len(), 7);
        s.mul_one_minus_pow(&[1], 1).unwrap();
        assert_eq!(s, TruncatedSeries::one(&g));
        assert!(s.mul_one_minus_pow(&[0], 1).is_err());
    }

    #[test]
    fn exp_of_z_matches_factorials() {
        let g = Grading::per_variable(&["z"], 5);
        let z = TruncatedSeries::monomial(&g, vec![1], from_int(1));
        let e = z.exp().unwrap();
        assert_eq!(e.coefficient(&[4]), Rational::new(1.into(), 24.into()));
        // Ω[z] = 1/(1 − z).
        let omega = z.plethystic_exp().unwrap();
        assert!(omega.coeffs().values().all(|c| c == &from_int(1)));
        assert_eq!(omega.coeffs().len(), 6);
    }

    #[test]
    fn unbounded_variable_is_rejected() {
        assert!(Grading::new(vec!["a".into()], vec![Cutoff { weights: vec![0], bound: 3 }]).is_err());
    }
}
