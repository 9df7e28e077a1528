//! Parameter normalisation, case selection, weighted-band decomposition and
//! fold-type assignment for `T(p, q; r, s)`, with exact length accounting.
//!
//! Lengths are tracked in units of the ribbon width `w`: folds of types 1, 2
//! and 3 cost `2` per strand, type 4 and the combined 3+4 fold cost `2|s|`,
//! and directly connected strands cost nothing.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::braid::{
    flip_braid, full_twist_word, routing_block, twisted_block_form, twisted_torus_braid, BraidWord,
};
use crate::error::{BraidError, Result};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Transforms {
    pub mirrored: bool,
    pub swapped_pq: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Warning {
    /// `r = p`: cable knot territory.
    WarnCable,
    /// `r` is a multiple of `q`.
    WarnTorusOrTrivial,
    /// `q = 1` accepted under the permissive flag.
    UncertifiedTrivialTorusFactor,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Warning::WarnCable => "warn_cable",
            Warning::WarnTorusOrTrivial => "warn_torus_or_trivial",
            Warning::UncertifiedTrivialTorusFactor => "unknot-based: torus factor trivial",
        })
    }
}

/// Normalised parameters: `gcd(p, q) = 1`, `q < p`, `1 <= r < p + q`, `s != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistParams {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub s: i64,
    pub transforms: Transforms,
    pub warnings: Vec<Warning>,
}

impl TwistParams {
    pub fn abs_s(&self) -> u64 {
        self.s.unsigned_abs()
    }

    pub fn braid(&self) -> Result<BraidWord> {
        twisted_torus_braid(self.p as usize, self.q as usize, self.r as usize, self.s)
    }
}

/// Mirror and `p ↔ q` normalisation. `q = 1` after normalisation is rejected
/// unless `permissive` is set, in which case the result carries a warning.
pub fn normalize_params(p: i64, q: i64, r: i64, s: i64, permissive: bool) -> Result<TwistParams> {
    let invalid = |m: String| Err(BraidError::InvalidParameters(m));
    if p == 0 || q == 0 {
        return invalid(format!("p and q must be nonzero, got p={p}, q={q}"));
    }
    if s == 0 {
        return invalid("s must be nonzero".into());
    }
    let (mut p, mut q) = (p, q);
    let mut s = s;
    let mut transforms = Transforms::default();
    // T(−p, −q) is T(p, q) with reversed orientation
    if p < 0 {
        p = -p;
        q = -q;
    }
    if q < 0 {
        q = -q;
        s = -s;
        transforms.mirrored = true;
    }
    if p.gcd(&q) != 1 {
        return Err(BraidError::Link { p, q });
    }
    if r < 1 || r >= p + q {
        return invalid(format!("need 1 <= r < p + q = {}, got r={r}", p + q));
    }
    if q > p {
        std::mem::swap(&mut p, &mut q);
        transforms.swapped_pq = true;
    }
    let mut warnings = Vec::new();
    if q == 1 {
        if !permissive {
            return invalid("unknot-based: torus factor trivial (q = 1); pass the permissive flag to allow".into());
        }
        warnings.push(Warning::UncertifiedTrivialTorusFactor);
    }
    if p < 2 {
        return invalid(format!("p must be at least 2 after normalisation, got {p}"));
    }
    if r == p {
        warnings.push(Warning::WarnCable);
    }
    if r % q == 0 {
        warnings.push(Warning::WarnTorusOrTrivial);
    }
    let to_u32 = |x: i64| u32::try_from(x).map_err(|_| BraidError::InvalidParameters(format!("{x} is too large")));
    Ok(TwistParams { p: to_u32(p)?, q: to_u32(q)?, r: to_u32(r)?, s, transforms, warnings })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseBranch {
    /// `r <= p − q`
    Reduced,
    /// `p − q < r <= p`
    Standard,
    /// `p < r < p + q`
    Extended,
}

impl fmt::Display for CaseBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseBranch::Reduced => "REDUCED",
            CaseBranch::Standard => "STANDARD",
            CaseBranch::Extended => "EXTENDED",
        })
    }
}

pub fn case_branch(params: &TwistParams) -> CaseBranch {
    let (p, q, r) = (params.p, params.q, params.r);
    if r + q <= p {
        CaseBranch::Reduced
    } else if r <= p {
        CaseBranch::Standard
    } else {
        CaseBranch::Extended
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Region {
    Upper,
    Lower,
}

/// What a band does in the braid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BandRole {
    /// Strands added by the kink when `r > p`.
    Extra,
    /// Untwisted bundle crossing the others without being parallel to them.
    Crossing,
    /// Bundle carrying one full twist from the torus part.
    Twisted,
    /// Untwisted parallel bundle.
    Untwisted,
    /// Bundle carrying the `s` full twists.
    Boxed,
    /// Strands joined straight across.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Band {
    pub weight: u32,
    pub region: Region,
    pub twist_box: Option<i64>,
    pub role: BandRole,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedBandDiagram {
    pub params: TwistParams,
    pub case: CaseBranch,
    pub bands: Vec<Band>,
}

impl WeightedBandDiagram {
    pub fn weight_in(&self, region: Region) -> u32 {
        self.bands.iter().filter(|b| b.region == region).map(|b| b.weight).sum()
    }

    /// Strand count of the braid the diagram decomposes.
    pub fn strand_count(&self) -> u32 {
        match self.case {
            CaseBranch::Extended => self.params.r,
            _ => self.params.p,
        }
    }

    fn weight_of(&self, role: BandRole) -> u32 {
        self.bands.iter().filter(|b| b.role == role).map(|b| b.weight).sum()
    }

    /// The braid word obtained by gluing the bands back together: twisted
    /// bundles contribute full twists, bundles that pass one another
    /// contribute block crossings, and the box contributes `s` full twists.
    pub fn reassembled_word(&self) -> Result<BraidWord> {
        let TwistParams { p, r, s, .. } = self.params;
        let (p, r) = (p as usize, r as usize);
        let word = match self.case {
            CaseBranch::Standard => {
                let lower = twisted_block_form(p, self.weight_of(BandRole::Twisted) as usize);
                lower.concat(&full_twist_word(self.weight_of(BandRole::Boxed) as usize, s, 0, p)?)?
            }
            CaseBranch::Reduced => {
                let twisted = self.weight_of(BandRole::Twisted) as usize;
                let boxed = full_twist_word(self.weight_of(BandRole::Boxed) as usize, s, twisted, p)?;
                boxed.concat(&twisted_block_form(p, twisted))?
            }
            CaseBranch::Extended => {
                // The p-strand bundle is swept p + q − r times before the extra strands pass it.
                let sweeps = self.weight_of(BandRole::Crossing) as usize;
                let extra = self.weight_of(BandRole::Extra) as usize;
                let mut letters = flip_braid(&twisted_block_form(p, sweeps)).letters().to_vec();
                letters.extend(routing_block(p, extra));
                let lower = BraidWord::new(r, letters)?;
                lower.concat(&full_twist_word(self.weight_of(BandRole::Boxed) as usize, s, 0, r)?)?
            }
        };
        debug_assert_eq!(word.strands(), self.strand_count() as usize);
        Ok(word)
    }
}

fn band(weight: u32, region: Region, twist_box: Option<i64>, role: BandRole) -> Band {
    Band { weight, region, twist_box, role }
}

/// Decomposition for the case selected by [`case_branch`].
pub fn band_decomposition(params: &TwistParams) -> WeightedBandDiagram {
    band_decomposition_for(params, case_branch(params)).expect("selected case is always admissible")
}

/// Decomposition for an explicitly requested case. `Standard` may be requested
/// whenever `r <= p`, which exposes the weaker construction in the `Reduced` range.
pub fn band_decomposition_for(params: &TwistParams, case: CaseBranch) -> Result<WeightedBandDiagram> {
    let TwistParams { p, q, r, s, .. } = *params;
    let admissible = match case {
        CaseBranch::Reduced => r + q <= p,
        CaseBranch::Standard => r <= p,
        CaseBranch::Extended => r > p,
    };
    if !admissible {
        return Err(BraidError::InvalidParameters(format!("case {case} does not apply to (p, q, r) = ({p}, {q}, {r})")));
    }
    use BandRole::*;
    use Region::*;
    let bands = match case {
        CaseBranch::Extended => vec![
            band(r - p, Lower, None, Extra),
            band(p + q - r, Lower, None, Crossing),
            band(r - q, Lower, None, Twisted),
            band(r, Upper, Some(s), Boxed),
        ],
        CaseBranch::Standard => vec![
            band(p - q, Lower, None, Untwisted),
            band(q, Lower, None, Twisted),
            band(r, Upper, Some(s), Boxed),
            band(p - r, Upper, None, Direct),
        ],
        CaseBranch::Reduced => vec![
            band(r, Lower, Some(s), Boxed),
            band(p - q - r, Lower, None, Untwisted),
            band(q, Lower, None, Twisted),
            band(p, Upper, None, Direct),
        ],
    };
    let bands = bands.into_iter().filter(|b| b.weight > 0).collect();
    Ok(WeightedBandDiagram { params: params.clone(), case, bands })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FoldType {
    T1,
    T2,
    T3,
    T4,
    #[serde(rename = "T3T4_COMBINED")]
    T3T4Combined,
    #[serde(rename = "DIRECT")]
    Direct,
}

impl FoldType {
    /// Core length per strand, in units of `w`.
    pub fn strand_length(self, abs_s: u64) -> Rational {
        match self {
            FoldType::T1 | FoldType::T2 | FoldType::T3 => Rational::from_integer(2),
            FoldType::T4 | FoldType::T3T4Combined => Rational::from_integer(2 * abs_s as i64),
            FoldType::Direct => Rational::zero(),
        }
    }
}

impl fmt::Display for FoldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FoldType::T1 => "T1",
            FoldType::T2 => "T2",
            FoldType::T3 => "T3",
            FoldType::T4 => "T4",
            FoldType::T3T4Combined => "T3T4_COMBINED",
            FoldType::Direct => "DIRECT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldEntry {
    pub weight: u32,
    pub region: Region,
    pub role: BandRole,
    pub fold: FoldType,
    pub twist_box: Option<i64>,
    /// In units of `w`.
    pub strand_length: Rational,
    /// Signed full twists carried by each strand of the entry.
    pub twists: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldPlan {
    pub entries: Vec<FoldEntry>,
    pub width: Rational,
    /// The band diagram this plan was assigned from, if any.
    pub source: Option<WeightedBandDiagram>,
}

impl FoldPlan {
    /// A plan built from raw entries with no band decomposition behind it.
    pub fn from_entries(entries: Vec<FoldEntry>, width: Rational) -> Result<Self> {
        if width <= Rational::zero() {
            return Err(BraidError::InvalidParameters("width must be positive".into()));
        }
        Ok(Self { entries, width, source: None })
    }

    pub fn case(&self) -> Option<CaseBranch> {
        self.source.as_ref().map(|d| d.case)
    }

    pub fn params(&self) -> Option<&TwistParams> {
        self.source.as_ref().map(|d| &d.params)
    }

    /// Σ weight × strand length, in units of `w`.
    pub fn length_over_width(&self) -> Rational {
        self.entries.iter().map(|e| e.strand_length * e.weight as i64).sum()
    }
}

/// Fold assignment for each band of the decomposition.
pub fn assign_fold_types(d: &WeightedBandDiagram, width: Rational) -> Result<FoldPlan> {
    if width <= Rational::zero() {
        return Err(BraidError::InvalidParameters("width must be positive".into()));
    }
    let s = d.params.s;
    let entries = d
        .bands
        .iter()
        .map(|b| {
            let (fold, twists) = match (d.case, b.role) {
                (_, BandRole::Direct) => (FoldType::Direct, 0),
                (_, BandRole::Extra) | (_, BandRole::Untwisted) => (FoldType::T1, 0),
                (_, BandRole::Crossing) => (FoldType::T2, 0),
                (_, BandRole::Twisted) => (FoldType::T3, 1),
                // one full twist from the type-3 part, |s| − 1 from rolls, mirrored for s < 0
                (CaseBranch::Reduced, BandRole::Boxed) => (FoldType::T3T4Combined, s),
                (_, BandRole::Boxed) => (FoldType::T4, s),
            };
            FoldEntry {
                weight: b.weight,
                region: b.region,
                role: b.role,
                fold,
                twist_box: b.twist_box,
                strand_length: fold.strand_length(d.params.abs_s()),
                twists,
            }
        })
        .collect();
    Ok(FoldPlan { entries, width, source: Some(d.clone()) })
}

/// Total core length `w × Σ weight × strand length`.
pub fn plan_length(plan: &FoldPlan) -> Rational {
    plan.width * plan.length_over_width()
}

/// Closed-form bound for the selected case.
pub fn bound_for_case(params: &TwistParams, case: CaseBranch) -> u64 {
    let (p, r, abs_s) = (params.p as u64, params.r as u64, params.abs_s());
    match case {
        CaseBranch::Reduced => 2 * (p + (abs_s - 1) * r),
        CaseBranch::Standard => 2 * (p + abs_s * r),
        CaseBranch::Extended => 2 * (r + abs_s * r),
    }
}

/// `2(max{p, q, r} + |s| r)` for any admissible parameters.
pub fn general_bound(params: &TwistParams) -> u64 {
    let m = params.p.max(params.q).max(params.r) as u64;
    2 * (m + params.abs_s() * params.r as u64)
}

/// `2(p + (|s| − 1) r)`, valid when `r <= p − q`.
pub fn sharp_bound(params: &TwistParams) -> Option<u64> {
    (params.r + params.q <= params.p).then(|| 2 * (params.p as u64 + (params.abs_s() - 1) * params.r as u64))
}

/// Upper bound on ribbonlength after normalisation.
pub fn ribbonlength_upper_bound(p: i64, q: i64, r: i64, s: i64) -> Result<u64> {
    let params = normalize_params(p, q, r, s, false)?;
    Ok(bound_for_case(&params, case_branch(&params)))
}

/// Convenience: normalised parameters straight to the fold plan at the given width.
pub fn plan_for(params: &TwistParams, width: Rational) -> Result<FoldPlan> {
    assign_fold_types(&band_decomposition(params), width)
}
