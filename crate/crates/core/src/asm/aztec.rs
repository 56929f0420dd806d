use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::matrix::Asm;
use crate::error::{precondition, ForgeError, Result};

/// Orientation of a domino: `h` covers two squares side by side, `v` two stacked squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    #[serde(rename = "h")]
    Horizontal,
    #[serde(rename = "v")]
    Vertical,
}

/// A domino by the lower-left corner of its lower-left unit square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Domino {
    pub x: i64,
    pub y: i64,
    pub dir: Dir,
}

impl Domino {
    pub fn squares(&self) -> [(i64, i64); 2] {
        match self.dir {
            Dir::Horizontal => [(self.x, self.y), (self.x + 1, self.y)],
            Dir::Vertical => [(self.x, self.y), (self.x, self.y + 1)],
        }
    }
}

/// A domino tiling of the Aztec diamond of order `n`: the unit squares with centers
/// `|x| + |y| ≤ n`, whose corners are the lattice points with `|x| + |y| ≤ n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Domino>", into = "Vec<Domino>")]
pub struct Tiling {
    n: usize,
    dominoes: BTreeSet<Domino>,
}

impl TryFrom<Vec<Domino>> for Tiling {
    type Error = ForgeError;
    fn try_from(list: Vec<Domino>) -> Result<Self> {
        let n = (1..).find(|&n: &usize| n * (n + 1) >= list.len()).unwrap_or(1);
        Tiling::new(n, list)
    }
}

impl From<Tiling> for Vec<Domino> {
    fn from(t: Tiling) -> Self {
        t.dominoes.into_iter().collect()
    }
}

fn in_diamond(n: usize, (a, b): (i64, i64)) -> bool {
    (2 * a + 1).abs() + (2 * b + 1).abs() <= 2 * n as i64
}

/// Half-width of row `b` of the diamond, continued past its top and bottom.
fn row_half_width(n: usize, b: i64) -> i64 {
    if b >= 0 {
        n as i64 - b
    } else {
        n as i64 + b + 1
    }
}

fn diamond_squares(n: usize) -> Vec<(i64, i64)> {
    let r = n as i64;
    let mut out: Vec<(i64, i64)> =
        (-r..r).flat_map(|b| (-r..r).map(move |a| (a, b))).filter(|&s| in_diamond(n, s)).collect();
    out.sort_by_key(|&(a, b)| (-b, a));
    out
}

/// Square ownership on the bounding grid of the diamond.
struct Grid {
    n: i64,
    owner: Vec<Option<u32>>,
}

impl Grid {
    fn new(n: usize) -> Self {
        let side = 2 * n;
        Grid { n: n as i64, owner: vec![None; side * side] }
    }

    fn index(&self, (a, b): (i64, i64)) -> usize {
        ((a + self.n) * 2 * self.n + (b + self.n)) as usize
    }

    fn inside(&self, s: (i64, i64)) -> bool {
        in_diamond(self.n as usize, s)
    }

    fn owner(&self, s: (i64, i64)) -> Option<u32> {
        self.inside(s).then(|| self.owner[self.index(s)]).flatten()
    }

    fn set(&mut self, d: &Domino, id: Option<u32>) {
        for s in d.squares() {
            let k = self.index(s);
            self.owner[k] = id;
        }
    }

    /// Whether the unit segment at `x` spanning row `b` splits a domino. Outside the diamond the
    /// plane is tiled by horizontal dominoes aligned with the row ends.
    fn vertical_is_middle(&self, x: i64, b: i64) -> bool {
        let (l, r) = ((x - 1, b), (x, b));
        match (self.inside(l), self.inside(r)) {
            (true, true) => self.owner(l).is_some() && self.owner(l) == self.owner(r),
            (false, false) => {
                let w = row_half_width(self.n as usize, b);
                x.abs() > w && (x - w - 1).rem_euclid(2) == 0
            }
            _ => false,
        }
    }

    /// Whether the unit segment at height `y` from `x` to `x + 1` splits a domino.
    fn horizontal_is_middle(&self, x: i64, y: i64) -> bool {
        let (lo, hi) = ((x, y - 1), (x, y));
        self.inside(lo) && self.inside(hi) && self.owner(lo).is_some() && self.owner(lo) == self.owner(hi)
    }

    fn degree(&self, (x, y): (i64, i64)) -> u8 {
        let middles = [
            self.vertical_is_middle(x, y),
            self.vertical_is_middle(x, y - 1),
            self.horizontal_is_middle(x - 1, y),
            self.horizontal_is_middle(x, y),
        ];
        4 - middles.iter().filter(|&&m| m).count() as u8
    }

    /// Whether every diamond square around the vertex is covered.
    fn settled(&self, (x, y): (i64, i64)) -> bool {
        [(x - 1, y), (x, y), (x - 1, y - 1), (x, y - 1)].iter().all(|&s| !self.inside(s) || self.owner(s).is_some())
    }
}

/// Lattice point carrying entry `(i, j)` of the `A` matrix (order `n`, size `n`).
fn a_vertex(n: usize, i: usize, j: usize) -> (i64, i64) {
    (-(n as i64 - 1) + (i + j) as i64 - 2, j as i64 - i as i64)
}

/// Lattice point carrying entry `(i, j)` of the `B` matrix (size `n + 1`).
fn b_vertex(n: usize, i: usize, j: usize) -> (i64, i64) {
    (-(n as i64) + (i + j) as i64 - 2, j as i64 - i as i64)
}

fn a_entry(degree: u8) -> Result<i8> {
    match degree {
        3 => Ok(0),
        2 => Ok(1),
        4 => Ok(-1),
        d => Err(ForgeError::Invariant(format!("A vertex of degree {d}"))),
    }
}

fn b_entry(degree: u8) -> Result<i8> {
    match degree {
        3 => Ok(0),
        4 => Ok(1),
        2 => Ok(-1),
        d => Err(ForgeError::Invariant(format!("B vertex of degree {d}"))),
    }
}

impl Tiling {
    pub fn new(n: usize, dominoes: impl IntoIterator<Item = Domino>) -> Result<Self> {
        if n == 0 {
            return precondition("an Aztec diamond needs order at least 1");
        }
        let dominoes: BTreeSet<Domino> = dominoes.into_iter().collect();
        let mut seen = HashSet::new();
        for d in &dominoes {
            for s in d.squares() {
                if !in_diamond(n, s) || !seen.insert(s) {
                    return precondition(format!("domino {d:?} leaves the diamond or overlaps another"));
                }
            }
        }
        if seen.len() != 2 * n * (n + 1) {
            return precondition("the dominoes do not cover the diamond");
        }
        Ok(Tiling { n, dominoes })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dominoes(&self) -> &BTreeSet<Domino> {
        &self.dominoes
    }

    fn by_rows(n: usize, dir: Dir) -> Self {
        let r = n as i64;
        let mut dominoes = BTreeSet::new();
        for line in -r..r {
            let w = row_half_width(n, line);
            for start in (-w..w).step_by(2) {
                let (x, y) = if dir == Dir::Horizontal { (start, line) } else { (line, start) };
                dominoes.insert(Domino { x, y, dir });
            }
        }
        Tiling { n, dominoes }
    }

    pub fn all_horizontal(n: usize) -> Self {
        Tiling::by_rows(n, Dir::Horizontal)
    }

    pub fn all_vertical(n: usize) -> Self {
        Tiling::by_rows(n, Dir::Vertical)
    }

    fn grid(&self) -> Grid {
        let mut g = Grid::new(self.n);
        for (id, d) in self.dominoes.iter().enumerate() {
            g.set(d, Some(id as u32));
        }
        g
    }

    /// The vertex degree of every lattice point in the diamond, for display and debugging.
    pub fn degree_at(&self, vertex: (i64, i64)) -> u8 {
        self.grid().degree(vertex)
    }

    /// Centers of the 2×2 squares covered by two parallel dominoes.
    pub fn flippable_centers(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for d in &self.dominoes {
            let partner = match d.dir {
                Dir::Horizontal => Domino { x: d.x, y: d.y + 1, dir: d.dir },
                Dir::Vertical => Domino { x: d.x + 1, y: d.y, dir: d.dir },
            };
            if self.dominoes.contains(&partner) {
                out.push((d.x + 1, d.y + 1));
            }
        }
        out.sort();
        out
    }
}

/// The pair `(A, B)` of sizes `n` and `n + 1` read off the vertex degrees.
pub fn aztec_pair(t: &Tiling) -> Result<(Asm, Asm)> {
    let n = t.n;
    let g = t.grid();
    let a = (1..=n).map(|i| (1..=n).map(|j| a_entry(g.degree(a_vertex(n, i, j)))).collect()).collect::<Result<_>>()?;
    let b =
        (1..=n + 1).map(|i| (1..=n + 1).map(|j| b_entry(g.degree(b_vertex(n, i, j)))).collect()).collect::<Result<_>>()?;
    Ok((Asm::new(a)?, Asm::new(b)?))
}

/// The tiling whose vertex degrees give the pair `(A, B)`.
pub fn tiling_of_pair(a: &Asm, b: &Asm) -> Result<Tiling> {
    let n = a.size();
    if n == 0 || b.size() != n + 1 {
        return Err(ForgeError::ShapeMismatch("expected sizes n ≥ 1 and n + 1".into()));
    }
    let mut targets = std::collections::HashMap::new();
    for i in 1..=n {
        for j in 1..=n {
            targets.insert(a_vertex(n, i, j), match a.get(i, j) { 0 => 3u8, 1 => 2, _ => 4 });
        }
    }
    for i in 1..=n + 1 {
        for j in 1..=n + 1 {
            targets.insert(b_vertex(n, i, j), match b.get(i, j) { 0 => 3u8, 1 => 4, _ => 2 });
        }
    }
    let squares = diamond_squares(n);
    let mut grid = Grid::new(n);
    let mut placed: Vec<Domino> = Vec::new();

    fn consistent(grid: &Grid, d: &Domino, targets: &std::collections::HashMap<(i64, i64), u8>) -> bool {
        let mut corners = BTreeSet::new();
        for (a, b) in d.squares() {
            for v in [(a, b), (a + 1, b), (a, b + 1), (a + 1, b + 1)] {
                corners.insert(v);
            }
        }
        corners.iter().all(|v| !grid.settled(*v) || targets.get(v).is_none_or(|&t| grid.degree(*v) == t))
    }

    fn search(
        squares: &[(i64, i64)],
        k: usize,
        grid: &mut Grid,
        placed: &mut Vec<Domino>,
        targets: &std::collections::HashMap<(i64, i64), u8>,
    ) -> bool {
        let Some(k) = (k..squares.len()).find(|&k| grid.owner(squares[k]).is_none()) else {
            return true;
        };
        let (a, b) = squares[k];
        for d in [Domino { x: a, y: b, dir: Dir::Horizontal }, Domino { x: a, y: b - 1, dir: Dir::Vertical }] {
            let other = if d.dir == Dir::Horizontal { (a + 1, b) } else { (a, b - 1) };
            if !grid.inside(other) || grid.owner(other).is_some() {
                continue;
            }
            grid.set(&d, Some(placed.len() as u32));
            placed.push(d);
            if consistent(grid, &d, targets) && search(squares, k + 1, grid, placed, targets) {
                return true;
            }
            placed.pop();
            grid.set(&d, None);
        }
        false
    }

    if !search(&squares, 0, &mut grid, &mut placed, &targets) {
        return precondition("no tiling realizes this pair");
    }
    let t = Tiling::new(n, placed)?;
    if aztec_pair(&t)? != (a.clone(), b.clone()) {
        return precondition("no tiling realizes this pair");
    }
    Ok(t)
}

/// Rotates the two parallel dominoes covering the 2×2 square centered at `center`.
pub fn elementary_flip(t: &Tiling, center: (i64, i64)) -> Result<Tiling> {
    let (cx, cy) = center;
    let horizontal = [Domino { x: cx - 1, y: cy - 1, dir: Dir::Horizontal }, Domino { x: cx - 1, y: cy, dir: Dir::Horizontal }];
    let vertical = [Domino { x: cx - 1, y: cy - 1, dir: Dir::Vertical }, Domino { x: cx, y: cy - 1, dir: Dir::Vertical }];
    let (from, to) = if horizontal.iter().all(|d| t.dominoes.contains(d)) {
        (horizontal, vertical)
    } else if vertical.iter().all(|d| t.dominoes.contains(d)) {
        (vertical, horizontal)
    } else {
        return precondition(format!("the square centered at {center:?} is not covered by two parallel dominoes"));
    };
    let mut dominoes = t.dominoes.clone();
    for d in &from {
        dominoes.remove(d);
    }
    dominoes.extend(to);
    Ok(Tiling { n: t.n, dominoes })
}

/// Every tiling of the order-`n` diamond, sorted.
pub fn enumerate_tilings(n: usize) -> Result<Vec<Tiling>> {
    if n == 0 {
        return precondition("an Aztec diamond needs order at least 1");
    }
    let squares = diamond_squares(n);
    let mut grid = Grid::new(n);
    let mut placed = Vec::new();
    let mut out = Vec::new();
    fn walk(squares: &[(i64, i64)], k: usize, grid: &mut Grid, placed: &mut Vec<Domino>, out: &mut Vec<Tiling>, n: usize) {
        let Some(k) = (k..squares.len()).find(|&k| grid.owner(squares[k]).is_none()) else {
            out.push(Tiling { n, dominoes: placed.iter().copied().collect() });
            return;
        };
        let (a, b) = squares[k];
        for d in [Domino { x: a, y: b, dir: Dir::Horizontal }, Domino { x: a, y: b - 1, dir: Dir::Vertical }] {
            let other = if d.dir == Dir::Horizontal { (a + 1, b) } else { (a, b - 1) };
            if !grid.inside(other) || grid.owner(other).is_some() {
                continue;
            }
            grid.set(&d, Some(placed.len() as u32));
            placed.push(d);
            walk(squares, k + 1, grid, placed, out, n);
            placed.pop();
            grid.set(&d, None);
        }
    }
    walk(&squares, 0, &mut grid, &mut placed, &mut out, n);
    out.sort_by(|a, b| a.dominoes.cmp(&b.dominoes));
    Ok(out)
}

/// Number of tilings reachable from the all-vertical tiling by elementary flips.
pub fn flip_component_size(n: usize) -> Result<usize> {
    let start = Tiling::all_vertical(n);
    let mut seen: HashSet<BTreeSet<Domino>> = HashSet::from([start.dominoes.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for c in t.flippable_centers() {
            let next = elementary_flip(&t, c)?;
            if seen.insert(next.dominoes.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}
