//! Minimal lengths `ℓ⁻_h(λ)` and the invariants derived from them.
//!
//! `ℓ⁻_h(λ)` is the least Coxeter length of a `w` with `<wλ, h> < 0`. It is
//! symmetric in `(h, λ)`, superadditive in `λ`, and its minimum over
//! nonzero dominant `λ` is attained at a fundamental weight. Those facts
//! reduce `ℓ_Δ` to the `n²` fundamental pairs and `ℓ^sd_Δ` to the
//! generators of the self-dual dominant monoid.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::{dot, sign, Coweight, Root, RootSystem, SimpleType, Weight};
use crate::weyl::{OrbitSearch, WeylWord};

/// The element `h` a weight is paired against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Pairing {
    /// Paired through the invariant form.
    Weight(Weight),
    /// Paired through the natural weight/coweight pairing.
    Coweight(Coweight),
}

impl Pairing {
    fn functional(&self, rs: &RootSystem) -> Result<Vec<i64>> {
        match self {
            Pairing::Weight(h) => rs.form_functional(h),
            Pairing::Coweight(h) => rs.pairing_functional(h),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Pairing::Weight(h) => h.is_zero(),
            Pairing::Coweight(h) => h.is_zero(),
        }
    }

    fn coords(&self) -> &[i64] {
        match self {
            Pairing::Weight(h) => h.coords(),
            Pairing::Coweight(h) => h.coords(),
        }
    }

    /// Sign of the pairing of `mu` with this element.
    pub fn sign_against(&self, rs: &RootSystem, mu: &Weight) -> Result<i32> {
        match self {
            Pairing::Weight(h) => rs.invariant_form_sign(mu, h),
            Pairing::Coweight(h) => rs.natural_pairing_sign(mu, h),
        }
    }
}

/// A value of `ℓ⁻_h(λ)` with the element attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllResult {
    pub value: usize,
    pub witness: WeylWord,
    pub image: Weight,
    pub h: Pairing,
    pub lambda: Weight,
}

/// Result of an independent witness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub letters: usize,
    pub length: usize,
    pub image: Weight,
    pub pairing_sign: i32,
}

impl WitnessCheck {
    /// Negative pairing and a reduced word.
    pub fn is_valid(&self) -> bool {
        self.pairing_sign < 0 && self.length == self.letters
    }
}

/// Recompute length, image, and pairing sign of `word` applied to `lambda`.
pub fn check_witness(rs: &RootSystem, h: &Pairing, lambda: &Weight, word: &WeylWord) -> Result<WitnessCheck> {
    let image = rs.apply_word(word, lambda)?;
    let pairing_sign = h.sign_against(rs, &image)?;
    Ok(WitnessCheck {
        letters: word.len(),
        length: rs.word_length(word)?,
        image,
        pairing_sign,
    })
}

impl EllResult {
    /// Re-derive the result's invariants without the search.
    pub fn verify(&self, rs: &RootSystem) -> Result<bool> {
        let c = check_witness(rs, &self.h, &self.lambda, &self.witness)?;
        Ok(c.is_valid() && c.length == self.value && c.image == self.image)
    }
}

/// `ℓ⁻_h(λ)`, or the marker that no element of length ≤ `limit` works.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EllOutcome {
    Found(EllResult),
    ExceedsLimit { limit: usize, exhausted: bool },
}

impl EllOutcome {
    pub fn found(&self) -> Option<&EllResult> {
        match self {
            EllOutcome::Found(r) => Some(r),
            EllOutcome::ExceedsLimit { .. } => None,
        }
    }

    pub fn into_found(self) -> Option<EllResult> {
        match self {
            EllOutcome::Found(r) => Some(r),
            EllOutcome::ExceedsLimit { .. } => None,
        }
    }

    pub fn value(&self) -> Option<usize> {
        self.found().map(|r| r.value)
    }
}

fn require_nonzero_dominant(rs: &RootSystem, w: &[i64], what: &'static str) -> Result<()> {
    rs.check_len(w.len())?;
    if w.iter().all(|&c| c == 0) {
        return Err(Error::ZeroWeight { what });
    }
    if w.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant { what, coords: w.to_vec() });
    }
    Ok(())
}

/// Search from `lambda` against several elements at once.
fn ell_minus_many(rs: &RootSystem, hs: &[Pairing], lambda: &Weight, limit: usize) -> Result<Vec<EllOutcome>> {
    require_nonzero_dominant(rs, lambda.coords(), "λ")?;
    let mut functionals = Vec::with_capacity(hs.len());
    for h in hs {
        if h.is_zero() {
            return Err(Error::ZeroWeight { what: "h" });
        }
        require_nonzero_dominant(rs, h.coords(), "h")?;
        functionals.push(h.functional(rs)?);
    }
    let tests: Vec<_> = functionals.iter().map(|v| move |mu: &[i64]| dot(mu, v) < 0).collect();
    let searches = rs.orbit_bfs_first_hits(lambda, &tests, limit)?;
    Ok(searches
        .into_iter()
        .zip(hs)
        .map(|(s, h)| match s {
            OrbitSearch::Found(r) => EllOutcome::Found(EllResult {
                value: r.depth,
                witness: r.witness,
                image: r.image,
                h: h.clone(),
                lambda: lambda.clone(),
            }),
            OrbitSearch::NotFound { exhausted, .. } => EllOutcome::ExceedsLimit { limit, exhausted },
        })
        .collect())
}

/// `ℓ⁻_h(λ)` with `h` paired through the invariant form. `limit` defaults to `#Δ⁺`.
pub fn ell_minus(rs: &RootSystem, h: &Weight, lambda: &Weight, limit: Option<usize>) -> Result<EllOutcome> {
    let limit = limit.unwrap_or(rs.num_positive_roots());
    Ok(ell_minus_many(rs, &[Pairing::Weight(h.clone())], lambda, limit)?.pop().unwrap())
}

/// `ℓ⁻_h(λ)` for a coweight `h`.
pub fn ell_minus_coweight(rs: &RootSystem, h: &Coweight, lambda: &Weight, limit: Option<usize>) -> Result<EllOutcome> {
    let limit = limit.unwrap_or(rs.num_positive_roots());
    Ok(ell_minus_many(rs, &[Pairing::Coweight(h.clone())], lambda, limit)?.pop().unwrap())
}

/// `ℓ^λ = min{ l(w) : wλ ∉ Cone(Δ⁺) }`.
pub fn ell_exit_cone(rs: &RootSystem, lambda: &Weight) -> Result<usize> {
    require_nonzero_dominant(rs, lambda.coords(), "λ")?;
    let test = |mu: &[i64]| !rs.in_cone_raw(mu);
    match rs.orbit_bfs_first_negative(lambda, test, rs.num_positive_roots())? {
        OrbitSearch::Found(r) => Ok(r.depth),
        // w₀λ = −λ* lies outside the cone for nonzero λ.
        OrbitSearch::NotFound { .. } => unreachable!("w₀λ leaves the positive root cone"),
    }
}

/// A minimum together with where it is attained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attained {
    pub value: usize,
    pub result: EllResult,
}

/// `ℓ^h = min_j ℓ⁻_h(ϖ_j)`; also reports the minimizing `j` (1-based).
pub fn ell_h(rs: &RootSystem, h: &Weight) -> Result<(usize, usize, EllResult)> {
    require_nonzero_dominant(rs, h.coords(), "h")?;
    let hs = [Pairing::Weight(h.clone())];
    let per_j: Vec<Result<EllOutcome>> = (1..=rs.rank())
        .into_par_iter()
        .map(|j| {
            let lam = rs.fundamental_weight(j)?;
            Ok(ell_minus_many(rs, &hs, &lam, rs.num_positive_roots())?.pop().unwrap())
        })
        .collect();
    let mut best: Option<(usize, EllResult)> = None;
    for (j, out) in per_j.into_iter().enumerate() {
        if let EllOutcome::Found(r) = out? {
            if best.as_ref().is_none_or(|(_, b)| r.value < b.value) {
                best = Some((j + 1, r));
            }
        }
    }
    let (j, r) = best.expect("h pairs negatively with w₀ϖ_j for some j");
    Ok((r.value, j, r))
}

/// Minimum of `ℓ⁻_h(ϖ_j)` over `h ∈ hs`, `j` in the given system. Ties go to
/// the earliest `h`, then the smallest `j`.
fn min_over_generators(rs: &RootSystem, hs: &[Weight]) -> Result<Attained> {
    let pairings: Vec<Pairing> = hs.iter().cloned().map(Pairing::Weight).collect();
    let rows: Vec<Result<Vec<EllOutcome>>> = (1..=rs.rank())
        .into_par_iter()
        .map(|j| ell_minus_many(rs, &pairings, &rs.fundamental_weight(j)?, rs.num_positive_roots()))
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let mut best: Option<EllResult> = None;
    for hi in 0..hs.len() {
        for row in &rows {
            if let EllOutcome::Found(r) = &row[hi] {
                if best.as_ref().is_none_or(|b| r.value < b.value) {
                    best = Some(r.clone());
                }
            }
        }
    }
    let result = best.expect("simple systems have finite ℓ values");
    Ok(Attained { value: result.value, result })
}

fn embed(rs: &RootSystem, f: usize, w: &Weight) -> Weight {
    let off = rs.factor_offsets()[f];
    let mut c = vec![0; rs.rank()];
    c[off..off + w.len()].copy_from_slice(w.coords());
    Weight::new(c)
}

fn lift(rs: &RootSystem, f: usize, a: Attained) -> Attained {
    let off = rs.factor_offsets()[f];
    let r = a.result;
    let h = match r.h {
        Pairing::Weight(h) => Pairing::Weight(embed(rs, f, &h)),
        Pairing::Coweight(h) => Pairing::Coweight(Coweight::new(embed(rs, f, &Weight::new(h.0)).0)),
    };
    Attained {
        value: a.value,
        result: EllResult {
            value: r.value,
            witness: r.witness.shifted(off),
            image: embed(rs, f, &r.image),
            h,
            lambda: embed(rs, f, &r.lambda),
        },
    }
}

/// Per-factor minimum, lifted back into the product.
fn min_over_factors<F>(rs: &RootSystem, per_factor: F) -> Result<Attained>
where
    F: Fn(&RootSystem) -> Result<Attained>,
{
    let mut best: Option<Attained> = None;
    for f in 0..rs.factors().len() {
        let sub = rs.factor_system(f);
        let a = lift(rs, f, per_factor(&sub)?);
        if best.as_ref().is_none_or(|b| a.value < b.value) {
            best = Some(a);
        }
    }
    best.ok_or(Error::EmptyAmbient)
}

/// `ℓ_Δ = min_{j,k} ℓ⁻_{ϖ_j}(ϖ_k)`; for products, the minimum over factors.
pub fn ell_delta(rs: &RootSystem) -> Result<Attained> {
    min_over_factors(rs, |sub| min_over_generators(sub, &sub.fundamental_weights()))
}

/// Generators of the self-dual dominant monoid: self-dual `ϖ_j`, and
/// `ϖ_j + ϖ_j*` once per dual pair.
pub fn selfdual_generators(rs: &RootSystem) -> Vec<Weight> {
    let perm = rs.dual_permutation();
    let mut out = Vec::new();
    for j in 0..rs.rank() {
        let p = perm[j];
        if p == j {
            out.push(rs.fundamental_weight(j + 1).unwrap());
        } else if j < p {
            let mut c = vec![0; rs.rank()];
            c[j] = 1;
            c[p] = 1;
            out.push(Weight::new(c));
        }
    }
    out
}

/// `ℓ^sd_Δ`: the minimum of `ℓ⁻_h(ϖ_j)` over self-dual generators `h`.
pub fn ell_sd_delta(rs: &RootSystem) -> Result<Attained> {
    min_over_factors(rs, |sub| min_over_generators(sub, &selfdual_generators(sub)))
}

/// Both invariants of one simple type.
pub fn simple_profile(t: SimpleType) -> Result<(Attained, Attained)> {
    let rs = RootSystem::simple(t);
    Ok((ell_delta(&rs)?, ell_sd_delta(&rs)?))
}

/// Named weight used as a table label: `w3`, `rho`, or sums like `w1+w6`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightLabel {
    pub name: String,
    pub weight: Weight,
}

impl WeightLabel {
    pub fn parse(rs: &RootSystem, s: &str) -> Result<WeightLabel> {
        let s = s.trim();
        let bad = || Error::Parse { what: "weight label", input: s.to_string() };
        let mut acc = Weight::zero(rs.rank());
        for term in s.split('+') {
            let term = term.trim();
            let w = if term.eq_ignore_ascii_case("rho") {
                rs.rho()
            } else if let Some(idx) = term.strip_prefix('w').or_else(|| term.strip_prefix('W')) {
                let j: usize = idx.parse().map_err(|_| bad())?;
                rs.fundamental_weight(j)?
            } else {
                return Err(bad());
            };
            acc = acc.add(&w);
        }
        Ok(WeightLabel { name: s.to_ascii_lowercase(), weight: acc })
    }

    pub fn fundamental(rs: &RootSystem, j: usize) -> WeightLabel {
        WeightLabel { name: format!("w{j}"), weight: rs.fundamental_weight(j).unwrap() }
    }

    pub fn rho(rs: &RootSystem) -> WeightLabel {
        WeightLabel { name: "rho".into(), weight: rs.rho() }
    }

    /// `w1..wn` followed by `rho`.
    pub fn standard(rs: &RootSystem) -> Vec<WeightLabel> {
        let mut v: Vec<_> = (1..=rs.rank()).map(|j| WeightLabel::fundamental(rs, j)).collect();
        v.push(WeightLabel::rho(rs));
        v
    }
}

/// One table box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Cell {
    Value(usize),
    /// The search exhausted its depth limit: the value is at least this.
    AtLeast(usize),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Value(v) => write!(f, "{v}"),
            Cell::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

/// Boxes `ℓ⁻_h(λ)` with rows `λ` and columns `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllTable {
    pub type_string: String,
    pub rank: usize,
    pub rows: Vec<WeightLabel>,
    pub cols: Vec<WeightLabel>,
    pub entries: Vec<Vec<Cell>>,
    pub witnesses: Vec<Vec<Option<WeylWord>>>,
}

pub fn ell_table(rs: &RootSystem, rows: &[WeightLabel], cols: &[WeightLabel], limit: Option<usize>) -> Result<EllTable> {
    let limit = limit.unwrap_or(rs.num_positive_roots());
    let hs: Vec<Pairing> = cols.iter().map(|c| Pairing::Weight(c.weight.clone())).collect();
    let computed: Vec<Result<Vec<EllOutcome>>> =
        rows.par_iter().map(|r| ell_minus_many(rs, &hs, &r.weight, limit)).collect();
    let mut entries = Vec::with_capacity(rows.len());
    let mut witnesses = Vec::with_capacity(rows.len());
    for row in computed {
        let row = row?;
        entries.push(
            row.iter()
                .map(|o| match o {
                    EllOutcome::Found(r) => Cell::Value(r.value),
                    EllOutcome::ExceedsLimit { limit, .. } => Cell::AtLeast(limit + 1),
                })
                .collect(),
        );
        witnesses.push(row.into_iter().map(|o| o.into_found().map(|r| r.witness)).collect());
    }
    Ok(EllTable {
        type_string: rs.type_string(),
        rank: rs.rank(),
        rows: rows.to_vec(),
        cols: cols.to_vec(),
        entries,
        witnesses,
    })
}

impl EllTable {
    pub fn get(&self, row: &str, col: &str) -> Option<Cell> {
        let r = self.rows.iter().position(|l| l.name == row)?;
        let c = self.cols.iter().position(|l| l.name == col)?;
        Some(self.entries[r][c])
    }

    /// Tab-separated values, header row first.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("lambda\\h");
        for c in &self.cols {
            out.push('\t');
            out.push_str(&c.name);
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.entries) {
            out.push_str(&r.name);
            for cell in row {
                out.push('\t');
                out.push_str(&cell.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schemaVersion": crate::SCHEMA_VERSION,
            "type": self.type_string,
            "rows": self.rows.iter().map(|l| l.name.clone()).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(|l| l.name.clone()).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "witnesses": self.witnesses.iter().map(|r| r.iter().map(|w| w.as_ref().map(|w| w.format(self.rank))).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    /// Boxed layout: value line, then witness line, per row.
    pub fn to_text(&self) -> String {
        let width = self
            .witnesses
            .iter()
            .flatten()
            .flatten()
            .map(|w| w.format(self.rank).len())
            .chain(self.cols.iter().map(|c| c.name.len()))
            .max()
            .unwrap_or(4)
            .max(4);
        let label_w = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0).max(8);
        let mut out = format!("{:<label_w$}", "lambda\\h");
        for c in &self.cols {
            out.push_str(&format!(" | {:^width$}", c.name));
        }
        out.push('\n');
        for (ri, r) in self.rows.iter().enumerate() {
            out.push_str(&format!("{:<label_w$}", r.name));
            for cell in &self.entries[ri] {
                out.push_str(&format!(" | {:^width$}", cell.to_string()));
            }
            out.push('\n');
            if self.witnesses[ri].iter().any(Option::is_some) {
                out.push_str(&format!("{:<label_w$}", ""));
                for w in &self.witnesses[ri] {
                    let s = w.as_ref().map(|w| w.format(self.rank)).unwrap_or_default();
                    out.push_str(&format!(" | {s:^width$}"));
                }
                out.push('\n');
            }
        }
        out
    }
}

/// One checked instance of the dominant-root law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantRootCheck {
    pub factor: usize,
    pub root: Root,
    /// Height for short roots (or simply-laced types), dual height for long ones.
    pub expected: usize,
    pub computed: usize,
}

impl DominantRootCheck {
    pub fn holds(&self) -> bool {
        self.expected == self.computed
    }
}

/// `ℓ^β` against the height law for every dominant root of every factor.
pub fn dominant_root_law(rs: &RootSystem) -> Result<Vec<DominantRootCheck>> {
    let mut out = Vec::new();
    for f in 0..rs.factors().len() {
        let sub = rs.factor_system(f);
        let (long, short) = sub.factor_dominant_roots(0);
        let mut roots = vec![long.clone()];
        if short != long {
            roots.push(short);
        }
        let simply_laced = rs.factors()[f].is_simply_laced();
        for mut root in roots {
            let expected = if root.is_long && !simply_laced {
                sub.coroot_height(&root) as usize
            } else {
                root.height as usize
            };
            let (computed, _, _) = ell_h(&sub, &root.as_weight())?;
            root.factor = f;
            out.push(DominantRootCheck { factor: f, root, expected, computed });
        }
    }
    Ok(out)
}

/// `ℓ_Δ` for E8, all 64 fundamental pairs.
pub fn e8_exact() -> Result<Attained> {
    ell_delta(&RootSystem::from_type_string("E8")?)
}

/// Sign helper for callers that already hold a functional.
pub fn functional_sign(mu: &Weight, functional: &[i64]) -> i32 {
    sign(dot(mu.coords(), functional))
}
