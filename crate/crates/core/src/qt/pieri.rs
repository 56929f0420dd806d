use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::factor::{Alphabet, FactorProduct};
use crate::cylindric::{classify_cubes, cpp_to_paths, Cpp};
use crate::error::{precondition, Result};
use crate::partitions::{is_horizontal_strip, Partition};

/// A horizontal strip `λ/μ` with the columns where it has a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriContext {
    pub outer: Partition,
    pub inner: Partition,
    /// Columns `j` with `λ′_j > μ′_j`.
    pub columns: BTreeSet<u32>,
}

impl PieriContext {
    pub fn new(outer: &Partition, inner: &Partition) -> Result<Self> {
        if !is_horizontal_strip(inner, outer) {
            return precondition(format!("{outer}/{inner} is not a horizontal strip"));
        }
        let columns = (1..=outer.first_part()).filter(|&j| outer.col(j) > inner.col(j)).collect();
        Ok(PieriContext { outer: outer.clone(), inner: inner.clone(), columns })
    }
}

/// `b_λ(s) = (1 − q^{a} t^{ℓ+1}) / (1 − q^{a+1} t^{ℓ})` for the box in row `i`, column `j`.
fn box_factor(lambda: &Partition, i: usize, j: u32) -> FactorProduct {
    let arm = lambda.row(i) - j;
    let leg = lambda.col(j) as u32 - i as u32;
    let mut p = FactorProduct::factor(arm, leg + 1, 1).expect("positive degree");
    p.mul_factor(arm + 1, leg, -1).expect("positive degree");
    p
}

/// `∏ b_λ(s)` over the boxes `s` of `λ` whose column satisfies `keep`.
fn column_product(lambda: &Partition, keep: impl Fn(u32) -> bool) -> FactorProduct {
    let mut p = FactorProduct::one();
    for (r, &part) in lambda.parts().iter().enumerate() {
        for j in (1..=part).filter(|&j| keep(j)) {
            p = p.mul(&box_factor(lambda, r + 1, j));
        }
    }
    p
}

/// The dual Pieri coefficient `φ_{λ/μ} = ∏_{s ∈ C} b_λ(s) / b_μ(s)`.
pub fn pieri_phi(outer: &Partition, inner: &Partition) -> Result<FactorProduct> {
    let ctx = PieriContext::new(outer, inner)?;
    let in_c = |j| ctx.columns.contains(&j);
    Ok(column_product(outer, in_c).div(&column_product(inner, in_c)))
}

/// The Pieri coefficient `ψ_{λ/μ} = ∏_{s ∉ C} b_μ(s) / b_λ(s)`.
pub fn pieri_psi(outer: &Partition, inner: &Partition) -> Result<FactorProduct> {
    let ctx = PieriContext::new(outer, inner)?;
    let not_c = |j| !ctx.columns.contains(&j);
    Ok(column_product(inner, not_c).div(&column_product(outer, not_c)))
}

/// `W_c = ∏_{π_k=1} φ_{μᵏ/μᵏ⁻¹} · ∏_{π_k=0} ψ_{μᵏ⁻¹/μᵏ}`.
pub fn weight_w(c: &Cpp) -> FactorProduct {
    let seq = c.seq();
    let mut w = FactorProduct::one();
    for k in 1..seq.len() {
        let factor = if c.profile().bit(k as i64) {
            pieri_phi(&seq[k], &seq[k - 1])
        } else {
            pieri_psi(&seq[k - 1], &seq[k])
        };
        w = w.mul(&factor.expect("a valid cylindric plane partition has strips"));
    }
    w
}

/// `D_c = Σ_{valley} q^{a} t^{ℓ} − Σ_{peak} q^{a} t^{ℓ}` over the cubes of the path model,
/// the sign for which `W_c = Ω[(q − t) D_c]` when steps are measured upward.
pub fn alphabet_d(c: &Cpp) -> Alphabet {
    let mut a = Alphabet::zero();
    for cube in classify_cubes(&cpp_to_paths(c)) {
        let sign = i64::from(cube.valley) - i64::from(cube.peak);
        a.add(cube.arm as u32, cube.leg as u32, sign);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_box() {
        let phi = pieri_phi(&p(&[1]), &Partition::empty()).unwrap();
        assert_eq!(phi.to_string(), "(1 - t^1)^1 (1 - q^1)^-1");
        assert!(pieri_psi(&p(&[1]), &Partition::empty()).unwrap().is_one());
        assert!(pieri_phi(&p(&[2, 1]), &p(&[2, 1])).unwrap().is_one());
        assert!(pieri_phi(&p(&[1, 1]), &Partition::empty()).is_err());
    }

    #[test]
    fn equal_parameters_give_one() {
        for n in 0..=6 {
            for lambda in crate::partitions::partitions_of(n) {
                for mu in crate::partitions::subpartitions(&lambda) {
                    if is_horizontal_strip(&mu, &lambda) {
                        assert!(pieri_phi(&lambda, &mu).unwrap().at_q_equals_t().is_one());
                        assert!(pieri_psi(&lambda, &mu).unwrap().at_q_equals_t().is_one());
                    }
                }
            }
        }
    }
}
