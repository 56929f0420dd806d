//! Fomin's single-box local rules for the Robinson correspondence.

use crate::error::{precondition, ForgeError, Result};
use crate::partitions::Partition;

fn covers_or_equal(small: &Partition, big: &Partition) -> bool {
    small == big || small.added_box_row(big).is_some()
}

/// Completes a growth-diagram face from its lower-left corner `rho`, its two
/// neighbours `mu` and `nu`, and the filling bit `x`.
pub fn fomin_forward(rho: &Partition, mu: &Partition, nu: &Partition, x: bool) -> Result<Partition> {
    if !covers_or_equal(rho, mu) || !covers_or_equal(rho, nu) {
        return precondition(format!("{mu} and {nu} must equal or cover {rho}"));
    }
    if x && (rho != mu || rho != nu) {
        return precondition("a filled face needs three equal corners");
    }
    let all_equal = rho == mu && rho == nu;
    if x && all_equal {
        return rho.add_box(1);
    }
    if all_equal {
        return Ok(rho.clone());
    }
    if mu == rho {
        return Ok(nu.clone());
    }
    if nu == rho {
        return Ok(mu.clone());
    }
    if mu != nu {
        return Ok(mu.union(nu));
    }
    if let Some(row) = rho.added_box_row(mu) {
        return mu.add_box(row + 1);
    }
    Err(ForgeError::Invariant(format!(
        "no forward rule matched rho={rho} mu={mu} nu={nu} x={x}"
    )))
}

/// Inverts [`fomin_forward`]: from `mu`, `nu` and the upper-right corner `lambda`
/// recovers the lower-left corner and the filling bit.
pub fn fomin_reverse(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<(Partition, bool)> {
    if !covers_or_equal(mu, lambda) || !covers_or_equal(nu, lambda) {
        return precondition(format!("{lambda} must equal or cover {mu} and {nu}"));
    }
    if mu == nu && mu != lambda {
        let row = mu.added_box_row(lambda).expect("checked cover");
        if row == 1 {
            return Ok((mu.clone(), true));
        }
        return Ok((mu.remove_box(row - 1)?, false));
    }
    if mu == lambda && nu == lambda {
        return Ok((lambda.clone(), false));
    }
    if mu == lambda {
        return Ok((nu.clone(), false));
    }
    if nu == lambda {
        return Ok((mu.clone(), false));
    }
    if mu != nu {
        return Ok((mu.intersection(nu), false));
    }
    Err(ForgeError::Invariant(format!(
        "no reverse rule matched mu={mu} nu={nu} lambda={lambda}"
    )))
}
