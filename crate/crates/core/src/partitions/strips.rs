use super::Partition;
use crate::error::{ForgeError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Size restriction for [`strip_neighbors`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripBound {
    Exact(u32),
    AtMost(u32),
    /// Only meaningful downward; upward neighbourhoods are infinite.
    Unbounded,
}

/// Whether `lambda / mu` is a strip of the given kind (false unless `mu ⊆ lambda`).
pub fn is_strip(mu: &Partition, lambda: &Partition, kind: StripKind) -> bool {
    match kind {
        StripKind::Horizontal => is_horizontal_strip(mu, lambda),
        StripKind::Vertical => is_horizontal_strip(&mu.conjugate(), &lambda.conjugate()),
    }
}

/// Interlacing test `λ₁ ≥ μ₁ ≥ λ₂ ≥ μ₂ ≥ …`.
pub fn is_horizontal_strip(mu: &Partition, lambda: &Partition) -> bool {
    if mu.len() > lambda.len() || lambda.len() > mu.len() + 1 {
        return false;
    }
    (1..=lambda.len()).all(|i| lambda.row(i) >= mu.row(i) && mu.row(i) >= lambda.row(i + 1))
}

/// Horizontal-strip neighbours of `lambda` in the given direction.
///
/// Upward: every `ν` with `ν/λ` a horizontal strip; downward: every `ν` with `λ/ν` one.
/// Results are sorted.
pub fn strip_neighbors(lambda: &Partition, direction: Direction, bound: StripBound) -> Result<Vec<Partition>> {
    let (min, max) = match bound {
        StripBound::Exact(r) => (r, r),
        StripBound::AtMost(r) => (0, r),
        StripBound::Unbounded => match direction {
            Direction::Down => (0, lambda.size()),
            Direction::Up => {
                return Err(ForgeError::Precondition(
                    "upward strip neighbourhoods need a size cap".into(),
                ))
            }
        },
    };
    let mut out = Vec::new();
    match direction {
        Direction::Up => for_each_strip_up(lambda, min, max, &mut |nu| out.push(nu.clone())),
        Direction::Down => for_each_strip_down(lambda, min, max, &mut |nu| out.push(nu.clone())),
    }
    out.sort();
    Ok(out)
}

/// Calls `visit` on every `ν ⊇ λ` with `ν/λ` a horizontal strip of size in `min..=max`.
pub fn for_each_strip_up(lambda: &Partition, min: u32, max: u32, visit: &mut dyn FnMut(&Partition)) {
    let rows = lambda.len() + 1;
    let mut parts = vec![0u32; rows];
    grow_row(lambda, 1, rows, min, max, 0, &mut parts, visit);
}

#[allow(clippy::too_many_arguments)]
fn grow_row(
    lambda: &Partition,
    row: usize,
    rows: usize,
    min: u32,
    max: u32,
    used: u32,
    parts: &mut Vec<u32>,
    visit: &mut dyn FnMut(&Partition),
) {
    if row > rows {
        if used >= min {
            visit(&Partition::from_sorted(parts.clone()));
        }
        return;
    }
    let base = lambda.row(row);
    let ceiling = if row == 1 { base + (max - used) } else { lambda.row(row - 1).min(base + (max - used)) };
    for len in base..=ceiling {
        parts[row - 1] = len;
        grow_row(lambda, row + 1, rows, min, max, used + (len - base), parts, visit);
    }
}

/// Calls `visit` on every `ν ⊆ λ` with `λ/ν` a horizontal strip of size in `min..=max`.
pub fn for_each_strip_down(lambda: &Partition, min: u32, max: u32, visit: &mut dyn FnMut(&Partition)) {
    let rows = lambda.len();
    let mut parts = vec![0u32; rows];
    shrink_row(lambda, 1, rows, min, max, 0, &mut parts, visit);
}

#[allow(clippy::too_many_arguments)]
fn shrink_row(
    lambda: &Partition,
    row: usize,
    rows: usize,
    min: u32,
    max: u32,
    used: u32,
    parts: &mut Vec<u32>,
    visit: &mut dyn FnMut(&Partition),
) {
    if row > rows {
        if used >= min {
            visit(&Partition::from_sorted(parts.clone()));
        }
        return;
    }
    let top = lambda.row(row);
    let floor = lambda.row(row + 1).max(top.saturating_sub(max - used));
    for len in floor..=top {
        parts[row - 1] = len;
        shrink_row(lambda, row + 1, rows, min, max, used + (top - len), parts, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn example_strips() {
        assert!(is_strip(&p(&[3, 3, 3]), &p(&[5, 3, 3, 2]), StripKind::Horizontal));
        assert!(is_strip(&p(&[4, 2, 2, 2]), &p(&[5, 3, 3, 2]), StripKind::Vertical));
        assert!(!is_strip(&p(&[4, 2, 2, 2]), &p(&[5, 3, 3, 2]), StripKind::Horizontal));
        let lam = p(&[2, 1]);
        assert!(is_strip(&lam, &lam, StripKind::Horizontal));
        assert!(is_strip(&lam, &lam, StripKind::Vertical));
        assert!(!is_strip(&p(&[3]), &p(&[2, 2]), StripKind::Horizontal));
    }

    #[test]
    fn small_neighbourhoods() {
        let down = strip_neighbors(&p(&[1]), Direction::Down, StripBound::Unbounded).unwrap();
        assert_eq!(down, vec![Partition::empty(), p(&[1])]);
        let up = strip_neighbors(&Partition::empty(), Direction::Up, StripBound::Exact(1)).unwrap();
        assert_eq!(up, vec![p(&[1])]);
        assert!(strip_neighbors(&p(&[1]), Direction::Up, StripBound::Unbounded).is_err());
        let up2 = strip_neighbors(&p(&[1]), Direction::Up, StripBound::AtMost(2)).unwrap();
        assert_eq!(up2, vec![p(&[1]), p(&[1, 1]), p(&[2]), p(&[2, 1]), p(&[3])]);
    }
}
