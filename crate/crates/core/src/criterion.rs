//! Embedding-independent sufficient conditions for (A), (A-k) and (M).
//!
//! All checks here are sufficient conditions. A report that a property is
//! not guaranteed says nothing about whether it fails, except in the SL₂
//! case where the criterion is an equivalence.

use serde::{Deserialize, Serialize};

use crate::ell::{ell_delta, ell_sd_delta};
use crate::error::{Error, Result};
use crate::rootsystem::{Family, RootSystem, SimpleType};

/// A connected reductive subgroup, described by its root datum shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDatum {
    pub factors: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl GroupDatum {
    pub fn new(factors: Vec<SimpleType>, torus_rank: usize) -> GroupDatum {
        GroupDatum { factors, torus_rank }
    }

    pub fn torus(rank: usize) -> GroupDatum {
        GroupDatum { factors: Vec::new(), torus_rank: rank }
    }

    /// Semisimple part given as a type string; an empty string means none.
    pub fn parse(types: &str, torus_rank: usize) -> Result<GroupDatum> {
        let factors = if types.trim().is_empty() {
            Vec::new()
        } else {
            crate::rootsystem::parse_type_string(types)?
        };
        Ok(GroupDatum { factors, torus_rank })
    }

    /// `#Δ̃⁺`.
    pub fn num_pos_roots(&self) -> usize {
        self.factors.iter().map(|t| t.num_positive_roots_formula()).sum()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    /// `w̃₀ = −1` on the full Cartan subalgebra; false once a central torus is present.
    pub fn minus_one_longest(&self) -> bool {
        self.torus_rank == 0
            && self
                .factors
                .iter()
                .all(|&t| RootSystem::simple(t).minus_one_longest())
    }

    pub fn dim(&self) -> usize {
        self.torus_rank + self.semisimple_rank() + 2 * self.num_pos_roots()
    }

    pub fn type_string(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        if parts.is_empty() {
            "trivial".into()
        } else {
            parts.join("x")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SubSummary {
    pub factors: Vec<String>,
    pub torus_rank: usize,
    pub pos_roots: usize,
    pub minus_one: bool,
}

/// Lower bound on `k(ι)` from the ambient invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AkReport {
    pub ambient: String,
    pub sub: SubSummary,
    pub ell: usize,
    pub ell_sd: usize,
    pub bound_general: i64,
    /// Present only when `w̃₀ = −1`.
    pub bound_sd: Option<i64>,
    pub best_bound: i64,
    pub holds_a: bool,
    pub holds_m: bool,
    pub max_k: i64,
}

impl AkReport {
    pub fn summary(&self) -> String {
        let verdict = |b: bool| if b { "guaranteed" } else { "not guaranteed" };
        format!(
            "ambient {} sub {}: k >= {} ; (A) {} ; (M) {}",
            self.ambient,
            if self.sub.factors.is_empty() && self.sub.torus_rank == 0 {
                "trivial".to_string()
            } else {
                let mut f = self.sub.factors.clone();
                if self.sub.torus_rank > 0 {
                    f.push(format!("T{}", self.sub.torus_rank));
                }
                f.join("x")
            },
            self.max_k,
            verdict(self.holds_a),
            verdict(self.holds_m)
        )
    }
}

/// Build the report from precomputed ambient invariants.
pub fn ak_report(ambient: &str, ell: usize, ell_sd: usize, sub: &GroupDatum) -> AkReport {
    let pos = sub.num_pos_roots() as i64;
    let minus_one = sub.minus_one_longest();
    let bound_general = ell as i64 - pos;
    let bound_sd = minus_one.then(|| ell_sd as i64 - pos);
    let best_bound = bound_sd.map_or(bound_general, |b| b.max(bound_general));
    AkReport {
        ambient: ambient.to_string(),
        sub: SubSummary {
            factors: sub.factors.iter().map(|t| t.to_string()).collect(),
            torus_rank: sub.torus_rank,
            pos_roots: pos as usize,
            minus_one,
        },
        ell,
        ell_sd,
        bound_general,
        bound_sd,
        best_bound,
        holds_a: best_bound >= 1,
        holds_m: best_bound >= 2,
        max_k: best_bound.max(0),
    }
}

/// `k(ι) ≥ ℓ_Δ − #Δ̃⁺`, and `k(ι) ≥ ℓ^sd_Δ − #Δ̃⁺` when `w̃₀ = −1`.
pub fn ak_bound(ambient: &RootSystem, sub: &GroupDatum) -> Result<AkReport> {
    if ambient.rank() == 0 {
        return Err(Error::EmptyAmbient);
    }
    let ell = ell_delta(ambient)?.value;
    let ell_sd = ell_sd_delta(ambient)?.value;
    Ok(ak_report(&ambient.type_string(), ell, ell_sd, sub))
}

/// Exact (A)/(M) answer for an SL₂-subgroup. `projects[i]` says whether
/// the subgroup projects nontrivially to factor `i`.
pub fn sl2_property(factors: &[SimpleType], projects: &[bool]) -> Result<(bool, bool)> {
    if factors.len() != projects.len() {
        return Err(Error::LengthMismatch { expected: factors.len(), got: projects.len() });
    }
    let flagged = || factors.iter().zip(projects).filter(|(_, &p)| p).map(|(t, _)| *t);
    let holds_a = !flagged().any(|t| t.family() == Family::A && t.rank() == 1);
    let holds_m = !flagged().any(|t| {
        matches!(
            (t.family(), t.rank()),
            (Family::A, 1) | (Family::A, 2) | (Family::B, 2) | (Family::C, 2)
        )
    });
    Ok((holds_a, holds_m))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lr0Membership {
    pub member: bool,
    /// 1-based positions of the violated inequalities.
    pub violators: Vec<usize>,
}

/// Membership in `LR₀` for an SL₂-subgroup. `values[i] = λ_i(h)` for each
/// ambient factor; `flagged[i]` marks the rank-1 factors with nontrivial
/// projection. Unflagged entries make up `λ₀(h)`.
pub fn sl2_lr0_member(values: &[i64], flagged: &[bool]) -> Result<Lr0Membership> {
    if values.len() != flagged.len() {
        return Err(Error::LengthMismatch { expected: values.len(), got: flagged.len() });
    }
    if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::NegativePairing { index: index + 1, value });
    }
    let total: i64 = values.iter().sum();
    let violators: Vec<usize> = (0..values.len())
        .filter(|&j| flagged[j] && values[j] > total - values[j])
        .map(|j| j + 1)
        .collect();
    Ok(Lr0Membership { member: violators.is_empty(), violators })
}

/// Dimension of the natural representation of a classical type.
pub fn natural_dim(t: SimpleType) -> Result<usize> {
    let n = t.rank();
    match t.family() {
        Family::A => Ok(n + 1),
        Family::B => Ok(2 * n + 1),
        Family::C | Family::D => Ok(2 * n),
        _ => Err(Error::NotClassical(t.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "status")]
pub enum ClassicalBound {
    NotApplicable { reason: String },
    Bound { m: usize, k: i64, holds_ak: bool },
}

impl ClassicalBound {
    pub fn k(&self) -> Option<i64> {
        match self {
            ClassicalBound::Bound { k, .. } => Some(*k),
            ClassicalBound::NotApplicable { .. } => None,
        }
    }
}

/// `k = ⌊(m−1)/2⌋ − #Δ̃⁺`, with `3 − #Δ̃⁺` for `so₅ ≅ sp₄`.
pub fn classical_bound(ambient: SimpleType, sub_pos_roots: usize, natural_rep_self_dual: bool) -> Result<ClassicalBound> {
    let m = natural_dim(ambient)?;
    if ambient.family() == Family::A && !natural_rep_self_dual {
        return Ok(ClassicalBound::NotApplicable {
            reason: "type A ambient needs V ≅ V* as a module of the subgroup".into(),
        });
    }
    let base = if ambient.rank() == 2 && matches!(ambient.family(), Family::B | Family::C) {
        3
    } else {
        (m as i64 - 1) / 2
    };
    let k = base - sub_pos_roots as i64;
    Ok(ClassicalBound::Bound { m, k, holds_ak: k > 0 })
}

/// The dimension shortcut: with `dim V ≥ dim g̃`, rank ≥ 3 gives (A) and
/// rank ≥ 5 gives (M). `None` when the dimension hypothesis fails.
pub fn classical_rank_shortcut(ambient: SimpleType, sub: &GroupDatum) -> Result<Option<(bool, bool)>> {
    let m = natural_dim(ambient)?;
    if m < sub.dim() {
        return Ok(None);
    }
    let r = sub.semisimple_rank() + sub.torus_rank;
    Ok(Some((r >= 3, r >= 5)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "verdict")]
pub enum E8Verdict {
    NoEmbedding { reason: String },
    NotApplicable { reason: String },
    Guaranteed { m: usize, k: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct E8Report {
    pub ambient: String,
    /// True when (M) holds for every proper E8-subgroup (vacuously if none exist).
    pub holds_m: bool,
    pub detail: E8Verdict,
}

/// Smallest nontrivial E8-module is the adjoint.
pub const E8_MIN_MODULE_DIM: usize = 248;

/// (M) for a hypothetical E8-subgroup of a simple group.
pub fn e8_subgroup_report(ambient: SimpleType) -> E8Report {
    let detail = match ambient.family() {
        Family::E if ambient.rank() == 8 => E8Verdict::NotApplicable {
            reason: "E8 has no proper E8-subgroup".into(),
        },
        Family::E | Family::F | Family::G => E8Verdict::NoEmbedding {
            reason: format!("e8 does not embed into {ambient}"),
        },
        _ => {
            let m = natural_dim(ambient).expect("classical family");
            if m < E8_MIN_MODULE_DIM {
                E8Verdict::NoEmbedding {
                    reason: format!("natural representation has dimension {m} < {E8_MIN_MODULE_DIM}"),
                }
            } else {
                let pos = SimpleType::new(Family::E, 8).unwrap().num_positive_roots_formula() as i64;
                E8Verdict::Guaranteed { m, k: (m as i64 - 1) / 2 - pos }
            }
        }
    };
    let holds_m = match &detail {
        E8Verdict::Guaranteed { k, .. } => *k >= 2,
        E8Verdict::NoEmbedding { .. } => true,
        E8Verdict::NotApplicable { .. } => false,
    };
    E8Report { ambient: ambient.to_string(), holds_m, detail }
}
