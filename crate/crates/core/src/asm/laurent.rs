use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, ForgeError, Result};
use crate::rational::{format_rational, Rational};

/// Exponents by variable name; zero exponents are never stored.
pub type Monomial = BTreeMap<String, i64>;

/// `"name[i,j]"`, the naming scheme for indexed variables.
pub fn indexed(name: &str, i: usize, j: usize) -> String {
    format!("{name}[{i},{j}]")
}

/// A Laurent polynomial over exact rationals in named variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exps: Monomial,
    #[serde(with = "crate::rational::as_string")]
    coeff: Rational,
}

impl Serialize for Laurent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> =
            self.terms.iter().map(|(m, c)| TermRecord { exps: m.clone(), coeff: c.clone() }).collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut out = Laurent::zero();
        for r in records {
            out.add_term(r.exps, r.coeff);
        }
        Ok(out)
    }
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = a.clone();
    for (v, &e) in b {
        let slot = out.entry(v.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            out.remove(v);
        }
    }
    out
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut out = Laurent::zero();
        out.add_term(Monomial::new(), c);
        out
    }

    pub fn variable(name: &str) -> Self {
        Laurent::monomial([(name.to_string(), 1)].into_iter().collect())
    }

    /// The monomial with coefficient 1.
    pub fn monomial(exps: Monomial) -> Self {
        let mut out = Laurent::zero();
        out.add_term(exps, Rational::one());
        out
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · exps`, dropping zero exponents and cancelled terms.
    pub fn add_term(&mut self, mut exps: Monomial, c: Rational) {
        exps.retain(|_, e| *e != 0);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(mul_monomials(m1, m2), c1 * c2);
            }
        }
        out
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Laurent::one(), |acc, _| acc.mul(self))
    }

    /// The inverse of a single term.
    pub fn inverse_monomial(&self) -> Result<Self> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 => {
                let mut out = Laurent::zero();
                out.add_term(m.iter().map(|(v, &e)| (v.clone(), -e)).collect(), c.recip());
                Ok(out)
            }
            _ => precondition(format!("{self} is not a single term")),
        }
    }

    /// All variable names that occur.
    pub fn variables(&self) -> std::collections::BTreeSet<String> {
        self.terms.keys().flat_map(|m| m.keys().cloned()).collect()
    }

    /// Whether every negative exponent sits on a variable accepted by `allowed`.
    pub fn denominators_only_in(&self, allowed: impl Fn(&str) -> bool) -> bool {
        self.terms.keys().flatten().all(|(v, &e)| e >= 0 || allowed(v))
    }

    /// Exact value with every variable assigned by `value`.
    pub fn evaluate(&self, value: impl Fn(&str) -> Option<Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in m {
                let x = value(v).ok_or_else(|| ForgeError::Precondition(format!("no value for {v}")))?;
                if e < 0 && x.is_zero() {
                    return Err(ForgeError::DivisionByZero(format!("{v} = 0 appears in a denominator")));
                }
                let p = num::pow(x, e.unsigned_abs() as usize);
                term *= if e < 0 { p.recip() } else { p };
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces variables by Laurent polynomials; variables mapped to `None` stay.
    /// Negative powers need the replacement to be a single term.
    pub fn substitute(&self, replace: impl Fn(&str) -> Option<Laurent>) -> Result<Self> {
        let mut out = Laurent::zero();
        for (m, c) in &self.terms {
            let mut term = Laurent::constant(c.clone());
            let mut kept = Monomial::new();
            for (v, &e) in m {
                match replace(v) {
                    None => {
                        kept.insert(v.clone(), e);
                    }
                    Some(r) => {
                        let base = if e < 0 { r.inverse_monomial()? } else { r };
                        term = term.mul(&base.pow(e.unsigned_abs() as u32));
                    }
                }
            }
            out = out.add(&term.mul(&Laurent::monomial(kept)));
        }
        Ok(out)
    }

    /// Renames indexed variables `name[i,j]` to `name[i+di, j+dj]` for the given name.
    pub fn shift_indices(&self, name: &str, di: usize, dj: usize) -> Self {
        let mut out = Laurent::zero();
        for (m, c) in &self.terms {
            let renamed = m.iter().map(|(v, &e)| (shift_name(v, name, di, dj), e)).collect();
            out.add_term(renamed, c.clone());
        }
        out
    }
}

fn shift_name(v: &str, name: &str, di: usize, dj: usize) -> String {
    let parsed = v.strip_prefix(name).and_then(|rest| rest.strip_prefix('[')).and_then(|rest| rest.strip_suffix(']'));
    match parsed.and_then(|inner| inner.split_once(',')) {
        Some((i, j)) => match (i.parse::<usize>(), j.parse::<usize>()) {
            (Ok(i), Ok(j)) => indexed(name, i + di, j + dj),
            _ => v.to_string(),
        },
        None => v.to_string(),
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> =
                    m.iter().map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") }).collect();
                match (vars.is_empty(), c.is_one()) {
                    (true, _) => format_rational(c),
                    (false, true) => vars.join("*"),
                    (false, false) if c.is_negative() && (-c).is_one() => format!("-{}", vars.join("*")),
                    (false, false) => format!("{}*{}", format_rational(c), vars.join("*")),
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
    fn arithmetic_and_json() {
        let x = Laurent::variable("X[1,1]");
        let y = Laurent::variable("Y[2,2]");
        let p = x.mul(&y.inverse_monomial().unwrap()).add(&Laurent::constant(Rational::new(3.into(), 2.into())));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[{"exps":{},"coeff":"3/2"},{"exps":{"X[1,1]":1,"Y[2,2]":-1},"coeff":"1/1"}]"#);
        assert_eq!(serde_json::from_str::<Laurent>(&json).unwrap(), p);
        assert!(p.sub(&p).is_zero());
        let v = p.evaluate(|name| Some(if name == "X[1,1]" { from_int(4) } else { from_int(2) })).unwrap();
        assert_eq!(v, Rational::new(7.into(), 2.into()));
        assert!(p.denominators_only_in(|v| v.starts_with('Y')));
        assert!(!p.denominators_only_in(|v| v.starts_with('X')));
    }

    #[test]
    fn substitution_and_shift() {
        let p = Laurent::variable("lambda[1,2]").pow(2).mul(&Laurent::variable("Y[1,1]").inverse_monomial().unwrap());
        assert_eq!(p.shift_indices("lambda", 1, 1).to_string(), "Y[1,1]^-1*lambda[2,3]^2");
        let q = p.substitute(|v| v.starts_with('Y').then(Laurent::one)).unwrap();
        assert_eq!(q, Laurent::variable("lambda[1,2]").pow(2));
        assert!(p.substitute(|v| v.starts_with('Y').then(|| Laurent::variable("a").add(&Laurent::one()))).is_err());
    }
}
