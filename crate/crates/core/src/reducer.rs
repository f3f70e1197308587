//! Reduction of unitaries over Z[1/3, w] to the identity by 1/2/3-level
//! unitaries of type H S^a, swap, `w^p` and `-1`.
//!
//! A unit column with sde `f > 0` is scaled to `v = chi^f u`. The entries
//! with `P(v_j) != 0` come in a multiple of three; each triple is brought to
//! residue 1 with `[-1]` steps and then hit with `H S^a`, where
//! `a + sum P(v_j') = 0 (mod 3)`. That lowers the sde by at least one.
//! At sde 0 the column is `+-w^a e_j` and is finished with a swap and phases.
//!
//! Single columns group the triples in ascending order. `decompose_unitary`
//! instead searches for triples whose residue rows sum to zero in as many
//! other columns as possible, highest sde first, since ascending triples
//! make the sde of later columns grow geometrically.

use crate::circuit::{Atom, GateWord, LevelMatrix};
use crate::cyclotomic::{LocalOmega, Scalar, Trit};
use crate::error::{Error, Result};
use crate::linalg::{OmegaMatrix, Vector};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StepKind {
    SignFix,
    SdeStep,
    Permute,
    PhaseFix,
    BaseCase,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionStep {
    pub level: LevelMatrix,
    pub kind: StepKind,
}

impl ReductionStep {
    fn new(level: LevelMatrix, kind: StepKind) -> Self {
        Self { level, kind }
    }
}

/// `u <- L u` for a level matrix given in coordinates relative to `offset`.
fn apply_to_column(level: &LevelMatrix, u: &mut [LocalOmega], offset: usize) {
    let idx: Vec<usize> = level.indices().iter().map(|j| j - offset).collect();
    let old: Vec<LocalOmega> = idx.iter().map(|&j| u[j].clone()).collect();
    for (bi, &j) in idx.iter().enumerate() {
        u[j] = level
            .base()
            .row(bi)
            .iter()
            .zip(&old)
            .fold(LocalOmega::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
    }
}

fn is_unit(u: &[LocalOmega]) -> bool {
    u.iter()
        .fold(LocalOmega::zero(), |acc, x| acc.add(&x.mul(&x.conj())))
        .is_one()
}

fn column_sde(u: &[LocalOmega]) -> u32 {
    u.iter().map(LocalOmega::sde).max().unwrap_or(0)
}

/// Residue bookkeeping for one sde-lowering round, exposed for tests.
#[derive(Clone, Debug)]
pub struct SdeRound {
    pub sde_before: u32,
    pub nonzero_residues: usize,
    pub steps: Vec<ReductionStep>,
}

fn sde_round(u: &mut [LocalOmega], offset: usize, columns: &[Vec<u8>]) -> Result<SdeRound> {
    let m = u.len();
    if m < 3 {
        return Err(Error::DimensionError(format!(
            "sde reduction needs at least 3 entries, got {m}"
        )));
    }
    let f = column_sde(u);
    if f == 0 {
        return Err(Error::SdeZero);
    }
    let mut v: Vec<_> = u
        .iter()
        .map(|x| x.scaled_numerator(f).expect("f is the column sde"))
        .collect();
    let active: Vec<usize> = (0..m).filter(|&j| !v[j].pmap().is_zero()).collect();
    if !active.len().is_multiple_of(3) {
        return Err(Error::NotAUnitVector);
    }
    let signs: Vec<u8> = active.iter().map(|&j| v[j].pmap().value()).collect();
    let triples = choose_triples(&active, &signs, columns);
    let mut steps = Vec::new();
    for triple in &triples {
        for &j in triple {
            if v[j].pmap() == Trit::new(2) {
                v[j] = v[j].neg();
                steps.push(ReductionStep::new(LevelMatrix::sign(j + offset), StepKind::SignFix));
            }
        }
        let deriv = triple.iter().fold(Trit::default(), |acc, &j| acc + v[j].pderiv());
        let a = (-deriv).value();
        let word = GateWord::atom(Atom::H).then(&GateWord::pow(Atom::S, u32::from(a)));
        let idx = [triple[0] + offset, triple[1] + offset, triple[2] + offset];
        steps.push(ReductionStep::new(LevelMatrix::three(word, idx)?, StepKind::SdeStep));
    }
    for s in &steps {
        apply_to_column(&s.level, u, offset);
    }
    Ok(SdeRound {
        sde_before: f,
        nonzero_residues: active.len(),
        steps,
    })
}

const SEARCH_BUDGET: usize = 20_000;

/// Greedily protects the columns in `columns` (residues per row, in
/// priority order): a column is kept if the triples can still be chosen to
/// sum to zero in it and in every column kept before it.
fn choose_triples(active: &[usize], signs: &[u8], columns: &[Vec<u8>]) -> Vec<[usize; 3]> {
    let mut kept: Vec<&Vec<u8>> = Vec::new();
    let mut best = None;
    for col in columns {
        let signed = || active.iter().zip(signs).map(|(&j, &s)| col[j] * s % 3);
        // a partition into zero-sum triples needs a zero total
        if signed().all(|r| r == 0) || signed().sum::<u8>() % 3 != 0 {
            continue;
        }
        kept.push(col);
        match zero_sum_triples(active, signs, &kept) {
            Some(t) => best = Some(t),
            None => {
                kept.pop();
            }
        }
    }
    best.unwrap_or_else(|| active.chunks(3).map(|t| [t[0], t[1], t[2]]).collect())
}

/// Splits `active` into triples whose sign-corrected residue rows sum to
/// zero mod 3. An H-type step on such a triple cannot raise the sde of
/// any of `columns`.
fn zero_sum_triples(active: &[usize], signs: &[u8], columns: &[&Vec<u8>]) -> Option<Vec<[usize; 3]>> {
    let rows: Vec<Vec<u8>> = active
        .iter()
        .zip(signs)
        .map(|(&j, &s)| columns.iter().map(|c| c[j] * s % 3).collect())
        .collect();
    let mut used = vec![false; active.len()];
    let mut out = Vec::new();
    let mut budget = SEARCH_BUDGET;
    if search(&rows, &mut used, &mut out, &mut budget) {
        Some(out.iter().map(|t| t.map(|i| active[i])).collect())
    } else {
        None
    }
}

fn search(rows: &[Vec<u8>], used: &mut [bool], out: &mut Vec<[usize; 3]>, budget: &mut usize) -> bool {
    let Some(i) = used.iter().position(|&u| !u) else {
        return true;
    };
    used[i] = true;
    for j in i + 1..rows.len() {
        if used[j] {
            continue;
        }
        let need: Vec<u8> = rows[i].iter().zip(&rows[j]).map(|(a, b)| (6 - a - b) % 3).collect();
        used[j] = true;
        for l in j + 1..rows.len() {
            if used[l] || rows[l] != need {
                continue;
            }
            if *budget == 0 {
                used[i] = false;
                used[j] = false;
                return false;
            }
            *budget -= 1;
            used[l] = true;
            out.push([i, j, l]);
            if search(rows, used, out, budget) {
                return true;
            }
            out.pop();
            used[l] = false;
        }
        used[j] = false;
    }
    used[i] = false;
    false
}

/// One round of the sde-lowering step on a unit column with `m >= 3`.
/// Returns the applied steps (in application order) and the new column.
pub fn sde_reduce_step(u: &Vector<LocalOmega>) -> Result<(Vec<ReductionStep>, Vector<LocalOmega>)> {
    if !is_unit(&u.0) {
        return Err(Error::NotAUnitVector);
    }
    let mut out = u.0.clone();
    let round = sde_round(&mut out, 0, &[])?;
    Ok((round.steps, Vector(out)))
}

/// Like [`sde_reduce_step`] but also reports the residue count.
pub fn sde_reduce_round(u: &Vector<LocalOmega>) -> Result<(SdeRound, Vector<LocalOmega>)> {
    if !is_unit(&u.0) {
        return Err(Error::NotAUnitVector);
    }
    let mut out = u.0.clone();
    let round = sde_round(&mut out, 0, &[])?;
    Ok((round, Vector(out)))
}

/// Residues of rows `c..` in each column `c+1..` of `cur`, scaled by that
/// column's own sde, ordered by decreasing sde.
fn pattern_columns(cur: &OmegaMatrix, c: usize) -> Vec<Vec<u8>> {
    let m = cur.rows();
    let mut cols: Vec<(usize, u32)> = (c + 1..m)
        .map(|d| (d, (c..m).map(|r| cur.get(r, d).sde()).max().unwrap_or(0)))
        .collect();
    cols.sort_by_key(|&(d, g)| (std::cmp::Reverse(g), d));
    cols.iter()
        .map(|&(d, g)| {
            (c..m)
                .map(|r| cur.get(r, d).scaled_numerator(g).expect("column sde").pmap().value())
                .collect()
        })
        .collect()
}

/// Reduces the unit column `u` (occupying rows `offset..`) to `e_offset`.
/// With `cur`, the steps are also applied to that matrix and triples are
/// chosen so that its other columns do not grow in sde where possible.
fn reduce_slice(
    u: &mut [LocalOmega],
    offset: usize,
    max_sde: &mut u32,
    mut cur: Option<&mut OmegaMatrix>,
) -> Result<Vec<ReductionStep>> {
    let m = u.len();
    let mut steps = Vec::new();
    *max_sde = (*max_sde).max(column_sde(u));
    while column_sde(u) > 0 {
        if m < 3 {
            // a unit vector of length 1 or 2 always has sde 0
            return Err(Error::NotAUnitVector);
        }
        let columns = cur.as_deref().map(|mat| pattern_columns(mat, offset)).unwrap_or_default();
        let round = sde_round(u, offset, &columns)?;
        if let Some(mat) = cur.as_deref_mut() {
            for s in &round.steps {
                s.level.apply_left(mat)?;
            }
        }
        steps.extend(round.steps);
    }
    let tail = if m < 3 { StepKind::BaseCase } else { StepKind::PhaseFix };
    let nonzero: Vec<usize> = (0..m).filter(|&j| !u[j].is_zero()).collect();
    let &[j] = nonzero.as_slice() else {
        return Err(Error::NotAUnitVector);
    };
    let (sign, p) = u[j].as_unit().ok_or(Error::NotAUnitVector)?;
    let mut finish = Vec::new();
    if j != 0 {
        let kind = if m < 3 { StepKind::BaseCase } else { StepKind::Permute };
        finish.push(ReductionStep::new(LevelMatrix::swap(offset, j + offset)?, kind));
    }
    if sign < 0 {
        finish.push(ReductionStep::new(LevelMatrix::sign(offset), tail));
    }
    if p != 0 {
        finish.push(ReductionStep::new(LevelMatrix::phase(3 - p, offset), tail));
    }
    for s in &finish {
        apply_to_column(&s.level, u, offset);
        if let Some(mat) = cur.as_deref_mut() {
            s.level.apply_left(mat)?;
        }
    }
    steps.extend(finish);
    Ok(steps)
}

/// Steps `U_1, ..., U_k` (application order) with `U_k ... U_1 u = e_0`.
pub fn reduce_column(u: &Vector<LocalOmega>) -> Result<Vec<ReductionStep>> {
    if u.is_empty() || !is_unit(&u.0) {
        return Err(Error::NotAUnitVector);
    }
    let mut work = u.0.clone();
    let mut max_sde = 0;
    reduce_slice(&mut work, 0, &mut max_sde, None)
}

#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    /// `U = levels[0] * levels[1] * ... * levels[k-1]`.
    pub levels: Vec<LevelMatrix>,
    pub max_sde: u32,
}

fn swap_columns(u: &mut OmegaMatrix, a: usize, b: usize) {
    for r in 0..u.rows() {
        let x = u.get(r, a).clone();
        u.set(r, a, u.get(r, b).clone());
        u.set(r, b, x);
    }
}

/// The column among `c..` to reduce next: one of sde 0 if any, otherwise
/// the one whose reduction leaves the smallest sde in the rest of `cur`.
fn choose_pivot(cur: &OmegaMatrix, c: usize) -> Result<usize> {
    let m = cur.rows();
    let sde = |d: usize| (c..m).map(|r| cur.get(r, d).sde()).max().unwrap_or(0);
    if let Some(d) = (c..m).find(|&d| sde(d) == 0) {
        return Ok(d);
    }
    let mut best = (u32::MAX, u32::MAX, usize::MAX, c);
    for d in c..m {
        let mut trial = cur.clone();
        swap_columns(&mut trial, c, d);
        let mut col: Vec<LocalOmega> = (c..m).map(|r| trial.get(r, c).clone()).collect();
        let mut seen = 0;
        let steps = reduce_slice(&mut col, c, &mut seen, Some(&mut trial))?;
        let sdes: Vec<u32> = (c + 1..m)
            .map(|d| (c + 1..m).map(|r| trial.get(r, d).sde()).max().unwrap_or(0))
            .collect();
        let top = sdes.iter().copied().max().unwrap_or(0);
        best = best.min((top, sdes.iter().sum(), steps.len(), d));
    }
    Ok(best.3)
}

/// Writes a unitary over Z[1/3, w] as a product of level matrices.
///
/// Columns are reduced in the order picked by [`choose_pivot`]; the column
/// swaps come back as trailing swap levels. If the sde grows on the way,
/// `U^dag` is decomposed as well and the shorter result kept.
pub fn decompose_unitary(u: &OmegaMatrix) -> Result<Decomposition> {
    if !u.is_square() || !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let d = decompose_columns(u)?;
    if d.max_sde <= u.max_sde() {
        return Ok(d);
    }
    let dd = decompose_columns(&u.dagger())?;
    if dd.levels.len() >= d.levels.len() {
        return Ok(d);
    }
    // U^dag = L_1 ... L_k, so U = L_k^-1 ... L_1^-1
    Ok(Decomposition {
        levels: dd.levels.iter().rev().map(LevelMatrix::inverse).collect(),
        max_sde: dd.max_sde,
    })
}

fn decompose_columns(u: &OmegaMatrix) -> Result<Decomposition> {
    let m = u.rows();
    let mut cur = u.clone();
    let mut applied = Vec::new();
    let mut swaps = Vec::new();
    let mut max_sde = 0;
    for c in 0..m {
        let d = choose_pivot(&cur, c)?;
        if d != c {
            swap_columns(&mut cur, c, d);
            swaps.push(LevelMatrix::swap(c, d)?);
        }
        let mut col: Vec<LocalOmega> = (c..m).map(|r| cur.get(r, c).clone()).collect();
        let steps = reduce_slice(&mut col, c, &mut max_sde, Some(&mut cur))?;
        applied.extend(steps.into_iter().map(|s| s.level));
    }
    if !cur.is_identity() {
        return Err(Error::NotUnitary);
    }
    // L U Q = I with Q the product of the column swaps, so U = L^-1 Q^-1
    let mut levels: Vec<LevelMatrix> = applied.iter().map(LevelMatrix::inverse).collect();
    levels.extend(swaps.into_iter().rev());
    Ok(Decomposition { levels, max_sde })
}
