//! Cylindric growth diagrams and the bijection between labelled diagrams and
//! cylindric plane partitions.
//!
//! Vertices below the boundary path are indexed by `(k, t)`: the diagonal `k` in
//! `1..=T` (cyclic) and the depth `t ≥ 0`, with `(k, 0)` carrying `μᵏ`. The face
//! `(k, t)` has top `(k, t)`, bottom `(k, t+1)` and sides
//! `(k−1, t + [π_k = 0])` and `(k+1, t + [π_{k+1} = 1])`. Every face satisfies
//! `burge_up(side, side, m, bottom) = top`.

use std::collections::BTreeMap;

use super::alcd::{Alcd, CylBox};
use super::cpp::Cpp;
use super::CylProfile;
use crate::correspondences::{burge_down, burge_up};
use crate::error::{precondition, ForgeError, Result};
use crate::partitions::Partition;

/// A filled fundamental domain of a cylindric growth diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylGrowthDiagram {
    pub profile: CylProfile,
    /// `vertices[t][k-1]` is the label of vertex `(k, t)`; below the last layer every vertex is `base`.
    pub vertices: Vec<Vec<Partition>>,
    /// Non-zero face labels keyed by `(k, t)`.
    pub faces: BTreeMap<(usize, usize), u32>,
    pub base: Partition,
    /// Rotations applied before filling. The diagonal coordinates need none, so this is always 0.
    pub rotations: usize,
}

struct Geometry<'a> {
    profile: &'a CylProfile,
    t: usize,
}

impl<'a> Geometry<'a> {
    fn new(profile: &'a CylProfile) -> Self {
        Geometry { profile, t: profile.period() }
    }

    fn prev(&self, k: usize) -> usize {
        if k == 1 {
            self.t
        } else {
            k - 1
        }
    }

    fn next(&self, k: usize) -> usize {
        k % self.t + 1
    }

    /// Side vertices of face `(k, depth)`.
    fn sides(&self, k: usize, depth: usize) -> ((usize, usize), (usize, usize)) {
        let left = (self.prev(k), depth + usize::from(!self.profile.bit(k as i64)));
        let right = (self.next(k), depth + usize::from(self.profile.bit(k as i64 + 1)));
        (left, right)
    }

    /// The unrolled box `(a, b)` of face `(k, depth)`: `a` is the (depth+1)-th 1 at or
    /// before `k`, `b` the (depth+1)-th 0 at or after `k+1`.
    fn face_box(&self, k: usize, depth: usize) -> (i64, i64) {
        let mut a = k as i64 + 1;
        for _ in 0..=depth {
            a -= 1;
            while !self.profile.bit(a) {
                a -= 1;
            }
        }
        let mut b = k as i64;
        for _ in 0..=depth {
            b += 1;
            while self.profile.bit(b) {
                b += 1;
            }
        }
        (a, b)
    }

    /// Inverse of [`Geometry::face_box`].
    fn box_face(&self, a: i64, b: i64) -> (usize, usize) {
        let leg = (a + 1..b).filter(|&s| !self.profile.bit(s)).count() as i64;
        let k = a + leg;
        let depth = (a + 1..=k).filter(|&s| self.profile.bit(s)).count();
        (self.profile.reduce(k), depth)
    }
}

/// Face coordinates `(k, t)` of a labelled box.
pub fn face_of_box(profile: &CylProfile, b: &CylBox) -> (usize, usize) {
    let (a, end) = b.unrolled(profile);
    Geometry::new(profile).box_face(a, end)
}

/// The labelled box at face `(k, t)`.
pub fn box_of_face(profile: &CylProfile, k: usize, depth: usize) -> Result<CylBox> {
    if !profile.is_mixed() {
        return precondition(format!("{profile} has no boxes"));
    }
    let (a, b) = Geometry::new(profile).face_box(k, depth);
    CylBox::from_unrolled(profile, a, b)
}

/// Fills the layers in `layers[depth]` for every diagonal using `rule`, in an order
/// that respects the same-depth dependencies of the side vertices.
fn fill_layer(
    geometry: &Geometry,
    layers: &mut [Vec<Option<Partition>>],
    depth: usize,
    target_is_below: bool,
    rule: &mut dyn FnMut(usize, &Partition, &Partition, &Partition) -> Result<Partition>,
) -> Result<()> {
    let t = geometry.t;
    let (known, unknown) = if target_is_below { (depth, depth + 1) } else { (depth + 1, depth) };
    let mut pending: Vec<usize> = (1..=t).collect();
    while !pending.is_empty() {
        let before = pending.len();
        let mut still = Vec::new();
        for k in pending {
            let (left, right) = geometry.sides(k, depth);
            let fetch = |(kk, d): (usize, usize)| layers[d][kk - 1].clone();
            match (fetch(left), fetch(right)) {
                (Some(alpha), Some(beta)) => {
                    let from = layers[known][k - 1].clone().expect("known layer is filled");
                    layers[unknown][k - 1] = Some(rule(k, &alpha, &beta, &from)?);
                }
                _ => still.push(k),
            }
        }
        if still.len() == before {
            return Err(ForgeError::Invariant(format!("cyclic dependency in layer {depth} of {}", geometry.profile)));
        }
        pending = still;
    }
    Ok(())
}

/// Builds the cylindric plane partition of the pair `(γ, d)`.
pub fn psi(profile: &CylProfile, gamma: &Partition, d: &Alcd) -> Result<Cpp> {
    Ok(Cpp::from_parts_unchecked(profile.clone(), psi_diagram(profile, gamma, d)?.boundary()))
}

/// The full growth diagram behind [`psi`].
pub fn psi_diagram(profile: &CylProfile, gamma: &Partition, d: &Alcd) -> Result<CylGrowthDiagram> {
    if d.profile() != profile {
        return precondition(format!("diagram has profile {}, expected {profile}", d.profile()));
    }
    let t = profile.period();
    let geometry = Geometry::new(profile);
    let faces: BTreeMap<(usize, usize), u32> = d
        .labels()
        .iter()
        .map(|(b, &l)| (face_of_box(profile, b), l))
        .collect();
    let depth = faces.keys().map(|&(_, dd)| dd + 1).max().unwrap_or(0);
    let mut layers: Vec<Vec<Option<Partition>>> = vec![vec![None; t]; depth + 2];
    layers[depth] = vec![Some(gamma.clone()); t];
    layers[depth + 1] = vec![Some(gamma.clone()); t];
    for dd in (0..depth).rev() {
        let mut rule = |k: usize, alpha: &Partition, beta: &Partition, below: &Partition| {
            burge_up(alpha, beta, faces.get(&(k, dd)).copied().unwrap_or(0), below)
        };
        fill_layer(&geometry, &mut layers, dd, false, &mut rule)?;
    }
    layers.truncate(depth + 1);
    let vertices = layers
        .into_iter()
        .map(|layer| layer.into_iter().map(|p| p.expect("filled")).collect())
        .collect();
    let diagram = CylGrowthDiagram { profile: profile.clone(), vertices, faces, base: gamma.clone(), rotations: 0 };
    diagram.check()?;
    Ok(diagram)
}

/// Recovers `(γ, d)` from a cylindric plane partition.
pub fn phi(profile: &CylProfile, c: &Cpp) -> Result<(Partition, Alcd)> {
    let diagram = phi_diagram(profile, c)?;
    let mut d = Alcd::empty(profile.clone());
    for (&(k, dd), &label) in &diagram.faces {
        d.set(box_of_face(profile, k, dd)?, label);
    }
    Ok((diagram.base, d))
}

/// The full growth diagram behind [`phi`], filled downward until a layer is constant.
pub fn phi_diagram(profile: &CylProfile, c: &Cpp) -> Result<CylGrowthDiagram> {
    if c.profile() != profile {
        return precondition(format!("partition has profile {}, expected {profile}", c.profile()));
    }
    let t = profile.period();
    let first: Vec<Partition> = c.seq()[1..].to_vec();
    if !profile.is_mixed() {
        if first.iter().any(|p| *p != first[0]) {
            return Err(ForgeError::Invariant("a pure profile forces a constant sequence".into()));
        }
        return Ok(CylGrowthDiagram {
            profile: profile.clone(),
            vertices: vec![first.clone()],
            faces: BTreeMap::new(),
            base: first[0].clone(),
            rotations: 0,
        });
    }
    let geometry = Geometry::new(profile);
    let limit = c.weight() as usize + t;
    let mut layers: Vec<Vec<Option<Partition>>> = vec![first.into_iter().map(Some).collect()];
    let mut faces = BTreeMap::new();
    let mut dd = 0;
    loop {
        if layers[dd].iter().all(|p| p == &layers[dd][0]) {
            break;
        }
        if dd > limit {
            return Err(ForgeError::Invariant(format!("growth diagram did not stabilize within {limit} layers")));
        }
        layers.push(vec![None; t]);
        let mut labels = Vec::new();
        let mut rule = |k: usize, alpha: &Partition, beta: &Partition, above: &Partition| {
            let (m, below) = burge_down(alpha, beta, above)?;
            if m > 0 {
                labels.push((k, m));
            }
            Ok(below)
        };
        fill_layer(&geometry, &mut layers, dd, true, &mut rule)?;
        for (k, m) in labels {
            faces.insert((k, dd), m);
        }
        dd += 1;
    }
    let base = layers[dd][0].clone().expect("filled");
    let vertices = layers
        .into_iter()
        .map(|layer| layer.into_iter().map(|p| p.expect("filled")).collect())
        .collect();
    let diagram = CylGrowthDiagram { profile: profile.clone(), vertices, faces, base, rotations: 0 };
    diagram.check()?;
    Ok(diagram)
}

impl CylGrowthDiagram {
    /// Label of vertex `(k, depth)`, with everything below the stored layers equal to the base.
    pub fn vertex(&self, k: usize, depth: usize) -> &Partition {
        self.vertices.get(depth).map_or(&self.base, |layer| &layer[k - 1])
    }

    /// The boundary sequence `μ⁰, …, μᵀ` read from depth 0.
    pub fn boundary(&self) -> Vec<Partition> {
        let t = self.profile.period();
        let mut seq = vec![self.vertex(t, 0).clone()];
        seq.extend((1..=t).map(|k| self.vertex(k, 0).clone()));
        seq
    }

    /// Re-verifies the local rule on every stored face.
    pub fn check(&self) -> Result<()> {
        let geometry = Geometry::new(&self.profile);
        if !self.profile.is_mixed() {
            return Ok(());
        }
        for dd in 0..self.vertices.len() {
            for k in 1..=self.profile.period() {
                let (left, right) = geometry.sides(k, dd);
                let m = self.faces.get(&(k, dd)).copied().unwrap_or(0);
                let top = burge_up(self.vertex(left.0, left.1), self.vertex(right.0, right.1), m, self.vertex(k, dd + 1))?;
                if &top != self.vertex(k, dd) {
                    return Err(ForgeError::Invariant(format!("local rule fails at face ({k},{dd})")));
                }
            }
        }
        Ok(())
    }
}

/// Replaces `μⁱ` (and `μ⁰` when `i = T`) using the local rule at an inside corner `i`
/// ("01" at `(i, i+1)`), producing a partition on the profile with that corner flipped.
pub fn lift_at(c: &Cpp, i: usize, m: u32) -> Result<Cpp> {
    let profile = c.profile();
    if !profile.inside_corners().contains(&i) {
        return precondition(format!("position {i} is not an inside corner of {profile}"));
    }
    let t = profile.period();
    let (alpha, nu, beta) = (c.layer(i as i64 - 1), c.layer(i as i64), c.layer(i as i64 + 1));
    let lambda = burge_up(alpha, beta, m, nu)?;
    let mut seq = c.seq().to_vec();
    seq[i] = lambda.clone();
    if i == t {
        seq[0] = lambda;
    }
    Cpp::new(profile.swap_at(i), seq)
}

/// Inverse of [`lift_at`] at an outside corner `i` ("10" at `(i, i+1)`).
pub fn lower_at(c: &Cpp, i: usize) -> Result<(u32, Cpp)> {
    let profile = c.profile();
    if !profile.outside_corners().contains(&i) {
        return precondition(format!("position {i} is not an outside corner of {profile}"));
    }
    let t = profile.period();
    let (alpha, lambda, beta) = (c.layer(i as i64 - 1), c.layer(i as i64), c.layer(i as i64 + 1));
    let (m, nu) = burge_down(alpha, beta, lambda)?;
    let mut seq = c.seq().to_vec();
    seq[i] = nu.clone();
    if i == t {
        seq[0] = nu;
    }
    Ok((m, Cpp::new(profile.swap_at(i), seq)?))
}

/// Whether lifting at the inside corners `i` and `j` gives the same result in either order.
pub fn local_commutation_check(c: &Cpp, (i, label_i): (usize, u32), (j, label_j): (usize, u32)) -> Result<bool> {
    if i == j {
        return Ok(true);
    }
    let first = lift_at(&lift_at(c, i, label_i)?, j, label_j)?;
    let second = lift_at(&lift_at(c, j, label_j)?, i, label_i)?;
    Ok(first == second)
}
