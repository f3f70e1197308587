//! Conversion of 3-level unitaries on `3^n` indices into multiply-controlled
//! gates by moving the three index points onto a line of the grid `{0,1,2}^n`.
//!
//! A point `x` is moved one step along wire `w` by an `X` or `X^2` on `w`
//! controlled by `x`'s values on every other wire. Once the points sit on a
//! line `{x : x_w = c_w for w != t}`, the 3-level matrix is a gate on wire `t`
//! controlled by `c`.

use crate::circuit::controlled::pow3;
use crate::circuit::{normalize_controls, Atom, Base, ControlledGate, GateWord, LevelMatrix};
use crate::cyclotomic::LocalOmega;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A vertex of the grid, wire 0 first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GridPoint(pub Vec<u8>);

impl GridPoint {
    pub fn from_index(idx: usize, n: usize) -> Self {
        let mut coords = vec![0u8; n];
        let mut rest = idx;
        for w in (0..n).rev() {
            coords[w] = (rest % 3) as u8;
            rest /= 3;
        }
        Self(coords)
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &d| acc * 3 + usize::from(d))
    }

    pub fn is_adjacent(&self, other: &GridPoint) -> bool {
        let diffs: Vec<u8> = self
            .0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| a != b)
            .map(|(a, b)| a.abs_diff(*b))
            .collect();
        diffs == [1]
    }
}

#[derive(Clone, Debug)]
pub struct RoutingPlan {
    pub wires: usize,
    /// Permutation gates applied before the core, in time order.
    pub conjugators: Vec<ControlledGate>,
    /// Positions of the three points initially and after every conjugator.
    pub tracked: Vec<[usize; 3]>,
    /// The gate that acts on the routed points; controls may be 0 or 1.
    pub core: ControlledGate,
}

impl RoutingPlan {
    /// Conjugators, core, then inverted conjugators, all with `|2>` controls.
    pub fn expand(&self) -> Vec<ControlledGate> {
        let mut out = Vec::new();
        for g in &self.conjugators {
            out.extend(normalize_controls(g));
        }
        out.extend(normalize_controls(&self.core));
        for g in self.conjugators.iter().rev() {
            out.extend(normalize_controls(&g.inverse()));
        }
        out
    }

    pub fn stats(&self) -> RoutingStats {
        RoutingStats {
            conjugators: self.conjugators.len(),
            expanded_gates: self.expand().len(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RoutingStats {
    pub conjugators: usize,
    pub expanded_gates: usize,
}

const STEP_UP: [u8; 3] = [1, 2, 0];
const STEP_DOWN: [u8; 3] = [2, 0, 1];

struct Router {
    n: usize,
    points: [GridPoint; 3],
    conjugators: Vec<ControlledGate>,
    tracked: Vec<[usize; 3]>,
}

impl Router {
    /// Moves point `k` one step along `wire`.
    fn step(&mut self, k: usize, wire: usize, up: bool) {
        let controls = (0..self.n)
            .filter(|&w| w != wire)
            .map(|w| (w, self.points[k].0[w]))
            .collect();
        let (sigma, word) = if up {
            (STEP_UP, GateWord::atom(Atom::X))
        } else {
            (STEP_DOWN, GateWord::pow(Atom::X, 2))
        };
        let g = ControlledGate::new(controls, wire, word).expect("controls avoid the target");
        let next: Vec<usize> = self
            .points
            .iter()
            .map(|p| g.permute_index(p.index(), self.n, sigma))
            .collect();
        for (p, &idx) in self.points.iter_mut().zip(&next) {
            *p = GridPoint::from_index(idx, self.n);
        }
        self.tracked.push([next[0], next[1], next[2]]);
        self.conjugators.push(g);
    }

    fn walk(&mut self, k: usize, wire: usize, to: u8) {
        while self.points[k].0[wire] != to {
            let up = self.points[k].0[wire] < to;
            self.step(k, wire, up);
        }
    }

    fn on_line(&self, k: usize, t: usize, rest: &[u8]) -> bool {
        (0..self.n).all(|w| w == t || self.points[k].0[w] == rest[w])
    }

    /// Routes onto the line through `rest` along wire `t` (`rest[t]` unused).
    /// Point 2 goes first, then 1, then 0; a point off the line first fixes
    /// its `t` value so that later moves cannot touch points already placed.
    fn route(&mut self, t: usize, rest: &[u8]) {
        let others: Vec<usize> = (0..self.n).filter(|&w| w != t).collect();
        for &w in &others {
            self.walk(2, w, rest[w]);
        }
        if !self.on_line(1, t, rest) {
            let a = self.points[2].0[t];
            if self.points[1].0[t] == a {
                self.step(1, t, a == 0);
            }
            for &w in &others {
                self.walk(1, w, rest[w]);
            }
        }
        if !self.on_line(0, t, rest) {
            let r = 3 - self.points[2].0[t] - self.points[1].0[t];
            self.walk(0, t, r);
            for &w in &others {
                self.walk(0, w, rest[w]);
            }
        }
    }
}

/// Plans a 3-level matrix whose indices are below `3^n` as controlled gates.
///
/// Every choice of target wire and line is tried; the plan with the fewest
/// conjugators (then fewest expanded gates) wins.
pub fn to_controlled(level: &LevelMatrix, n: usize) -> Result<RoutingPlan> {
    if n == 0 {
        return Err(Error::DimensionError("no wires".into()));
    }
    let idx: [usize; 3] = level
        .indices()
        .try_into()
        .map_err(|_| Error::DimensionError(format!("expected a 3-level matrix, got {}", level.level())))?;
    let dim = pow3(n);
    if let Some(&bad) = idx.iter().find(|&&j| j >= dim) {
        return Err(Error::IndexOutOfRange { index: bad, dim });
    }
    if idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2] {
        return Err(Error::DegenerateIndices);
    }

    let mut best: Option<(RoutingStats, RoutingPlan)> = None;
    for t in 0..n {
        for line in 0..pow3(n - 1) {
            let mut rest = vec![0u8; n];
            let mut code = line;
            for w in (0..n).rev().filter(|&w| w != t) {
                rest[w] = (code % 3) as u8;
                code /= 3;
            }
            let plan = route_on(level, n, idx, t, &rest)?;
            let stats = plan.stats();
            let better = best
                .as_ref()
                .is_none_or(|(s, _)| (stats.conjugators, stats.expanded_gates) < (s.conjugators, s.expanded_gates));
            if better {
                best = Some((stats, plan));
            }
        }
    }
    Ok(best.expect("at least one candidate line").1)
}

fn route_on(level: &LevelMatrix, n: usize, idx: [usize; 3], t: usize, rest: &[u8]) -> Result<RoutingPlan> {
    let mut router = Router {
        n,
        points: idx.map(|j| GridPoint::from_index(j, n)),
        conjugators: Vec::new(),
        tracked: vec![idx],
    };
    router.route(t, rest);
    debug_assert!((0..3).all(|k| router.on_line(k, t, rest)));

    // point k now sits at value pi[k] on the target wire
    let pi: [u8; 3] = [0, 1, 2].map(|k| router.points[k].0[t]);
    let mut pi_inv = [0u8; 3];
    for (k, &v) in pi.iter().enumerate() {
        pi_inv[usize::from(v)] = k as u8;
    }
    let x_pi: Matrix<LocalOmega> = Matrix::permutation(&pi.map(usize::from));
    let base = match level.word() {
        Some(w) => Base::Word(
            GateWord::permutation(pi)
                .then(w)
                .then(&GateWord::permutation(pi_inv)),
        ),
        None => Base::Omega(x_pi.mul(level.base())?.mul(&x_pi.dagger())?),
    };
    let controls = (0..n).filter(|&w| w != t).map(|w| (w, rest[w])).collect();
    let core = ControlledGate::new(controls, t, base)?;
    Ok(RoutingPlan {
        wires: n,
        conjugators: router.conjugators,
        tracked: router.tracked,
        core,
    })
}

fn unused_indices(used: &[usize], count: usize) -> Vec<usize> {
    (0..).filter(|j| !used.contains(j)).take(count).collect()
}

/// Re-expresses a 1-, 2- or 3-level step as a 3-level matrix with a gate
/// word. Extra indices are the smallest ones not already used.
pub fn lift_level_alphabet(step: &LevelMatrix, m: usize) -> Result<LevelMatrix> {
    if m < 3 {
        return Err(Error::DimensionError(format!("dimension {m} < 3")));
    }
    let idx = step.indices();
    if let Some(&bad) = idx.iter().find(|&&j| j >= m) {
        return Err(Error::IndexOutOfRange { index: bad, dim: m });
    }
    match step.level() {
        3 => match step.word() {
            Some(_) => Ok(step.clone()),
            None => Err(Error::DimensionError("3-level matrix without a gate word".into())),
        },
        2 => {
            if step.base() != &Matrix::permutation(&[1, 0]) {
                return Err(Error::DimensionError("only 2-level swaps can be lifted".into()));
            }
            let a = unused_indices(idx, 1)[0];
            LevelMatrix::three(GateWord::atom(Atom::Perm([0, 2, 1])), [a, idx[0], idx[1]])
        }
        _ => {
            let (sign, p) = step.base().get(0, 0).as_unit().ok_or(Error::NotUnitary)?;
            let mut word = if sign < 0 { GateWord::atom(Atom::R) } else { GateWord::identity() };
            word = word.then(&GateWord::pow(Atom::S, u32::from(p)));
            let free = unused_indices(idx, 2);
            LevelMatrix::three(word, [free[0], free[1], idx[0]])
        }
    }
}
