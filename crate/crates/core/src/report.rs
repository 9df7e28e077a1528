//! JSON report shapes shared by the command line and the Python bindings.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::planner::{
    assign_fold_types, band_decomposition_for, bound_for_case, case_branch, CaseBranch, FoldPlan, FoldType,
    Rational, Region, Transforms, TwistParams, Warning,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParamsJson {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub s: i64,
}

impl From<&TwistParams> for ParamsJson {
    fn from(t: &TwistParams) -> Self {
        Self { p: t.p, q: t.q, r: t.r, s: t.s }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub params: ParamsJson,
    pub case: CaseBranch,
    pub rib_upper_bound: u64,
    pub warnings: Vec<Warning>,
}

pub fn bound_report(params: &TwistParams) -> BoundReport {
    let case = case_branch(params);
    BoundReport {
        params: params.into(),
        case,
        rib_upper_bound: bound_for_case(params, case),
        warnings: params.warnings.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandJson {
    pub weight: u32,
    pub region: Region,
    #[serde(rename = "box", skip_serializing_if = "Option::is_none", default)]
    pub twist_box: Option<i64>,
    pub fold: FoldType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanReport {
    pub params: ParamsJson,
    pub transforms: Transforms,
    pub case: CaseBranch,
    pub bands: Vec<BandJson>,
    pub length_over_w: i64,
    pub rib_upper_bound: u64,
    pub warnings: Vec<Warning>,
}

/// Plan and report for `params` at width `w`, using the given case or the
/// default selection.
pub fn plan_with_report(
    params: &TwistParams,
    w: Rational,
    case: Option<CaseBranch>,
) -> Result<(FoldPlan, PlanReport)> {
    let case = case.unwrap_or_else(|| case_branch(params));
    let plan = assign_fold_types(&band_decomposition_for(params, case)?, w)?;
    let length = plan.length_over_width();
    debug_assert!(length.is_integer());
    let report = PlanReport {
        params: params.into(),
        transforms: params.transforms,
        case,
        bands: plan
            .entries
            .iter()
            .map(|e| BandJson { weight: e.weight, region: e.region, twist_box: e.twist_box, fold: e.fold })
            .collect(),
        length_over_w: length.to_integer(),
        rib_upper_bound: bound_for_case(params, case_branch(params)),
        warnings: params.warnings.clone(),
    };
    Ok((plan, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planner::normalize_params;
    use serde_json::json;

    #[test]
    fn plan_json_shape() {
        let params = normalize_params(3, 2, 2, 1, false).unwrap();
        let (_, report) = plan_with_report(&params, Rational::from_integer(1), None).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(
            v,
            json!({
                "params": {"p": 3, "q": 2, "r": 2, "s": 1},
                "transforms": {"mirrored": false, "swapped_pq": false},
                "case": "STANDARD",
                "bands": [
                    {"weight": 1, "region": "LOWER", "fold": "T1"},
                    {"weight": 2, "region": "LOWER", "fold": "T3"},
                    {"weight": 2, "region": "UPPER", "box": 1, "fold": "T4"},
                    {"weight": 1, "region": "UPPER", "fold": "DIRECT"}
                ],
                "length_over_w": 10,
                "rib_upper_bound": 10,
                "warnings": ["warn_torus_or_trivial"]
            })
        );
    }

    #[test]
    fn bound_json_shape() {
        let params = normalize_params(5, 2, 4, 1, false).unwrap();
        let v = serde_json::to_value(bound_report(&params)).unwrap();
        assert_eq!(v["case"], "STANDARD");
        assert_eq!(v["rib_upper_bound"], 2 * (5 + 4));
        assert_eq!(v["warnings"], json!(["warn_torus_or_trivial"]));
    }
}
