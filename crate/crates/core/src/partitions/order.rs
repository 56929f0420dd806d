use std::cmp::Ordering;

use super::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionOrder {
    Containment,
    Dominance,
    Lex,
}

/// Outcome of comparing two elements of a partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Comparison {
    pub(crate) fn from_flags(le: bool, ge: bool) -> Self {
        match (le, ge) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Less,
            (false, true) => Comparison::Greater,
            (false, false) => Comparison::Incomparable,
        }
    }
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

/// Compares `mu` against `lambda`; `Less` means `mu` lies below `lambda`.
pub fn order_compare(mu: &Partition, lambda: &Partition, order: PartitionOrder) -> Comparison {
    match order {
        PartitionOrder::Containment => {
            Comparison::from_flags(mu.is_contained_in(lambda), lambda.is_contained_in(mu))
        }
        PartitionOrder::Dominance => {
            let rows = mu.len().max(lambda.len());
            let (mut sum_mu, mut sum_lambda) = (0u32, 0u32);
            let (mut le, mut ge) = (true, true);
            for i in 1..=rows {
                sum_mu += mu.row(i);
                sum_lambda += lambda.row(i);
                le &= sum_mu <= sum_lambda;
                ge &= sum_mu >= sum_lambda;
            }
            Comparison::from_flags(le, ge)
        }
        PartitionOrder::Lex => mu.parts().cmp(lambda.parts()).into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dominance_example() {
        assert_eq!(order_compare(&p(&[2, 2]), &p(&[3, 1]), PartitionOrder::Dominance), Comparison::Less);
        assert_eq!(
            order_compare(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2]), PartitionOrder::Dominance),
            Comparison::Incomparable
        );
        let lam = p(&[4, 2]);
        for order in [PartitionOrder::Containment, PartitionOrder::Dominance, PartitionOrder::Lex] {
            assert_eq!(order_compare(&lam, &lam, order), Comparison::Equal);
        }
        assert_eq!(
            order_compare(&p(&[2]), &p(&[1, 1]), PartitionOrder::Containment),
            Comparison::Incomparable
        );
    }
}
