//! Flat-folded realisations of fold plans.

mod layout;
mod svg;
mod template;

pub use layout::{
    assemble_layout, segments_touch, validate_layout, CrossingRecord, FoldLine, OverlapKind, RibbonLayout, Segment,
    ValidationReport, Violation, ViolationClass, LANE_PITCH,
};
pub use svg::render_svg;
pub use template::{epsilon, layout_fold_type, FoldAngle, FoldTemplate, Piece, Point};

use crate::braid::closure_component_count;
use crate::error::{BraidError, Result};
use crate::invariants::PlanarDiagram;
use crate::planner::FoldPlan;

/// Planar diagram of the ribbon core, read off the band combinatorics.
///
/// A plan with no band decomposition behind it is a set of parallel strands
/// with no crossings between them, so only a single strand gives a knot.
pub fn diagram_from_plan(plan: &FoldPlan) -> Result<PlanarDiagram> {
    let Some(source) = &plan.source else {
        let strands: u32 = plan.entries.iter().map(|e| e.weight).sum();
        return match strands {
            1 => Ok(PlanarDiagram::unknot()),
            n => Err(BraidError::MultiComponent(n as usize)),
        };
    };
    let word = source.reassembled_word()?;
    let components = closure_component_count(&word);
    if components != 1 {
        return Err(BraidError::MultiComponent(components));
    }
    Ok(PlanarDiagram::from_braid_closure(&word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{torus_braid, twisted_torus_braid};
    use crate::invariants::{alexander_from_braid, alexander_from_diagram, alexander_torus_oracle};
    use crate::laurent::LaurentPolynomial;
    use crate::planner::{normalize_params, plan_for, BandRole, FoldEntry, FoldType, Rational, Region};

    fn one() -> Rational {
        Rational::from_integer(1)
    }

    fn plan(p: i64, q: i64, r: i64, s: i64) -> FoldPlan {
        plan_for(&normalize_params(p, q, r, s, false).unwrap(), one()).unwrap()
    }

    #[test]
    fn torus_plans() {
        for (p, q) in [(3, 2), (5, 2), (5, 3), (7, 4)] {
            let d = diagram_from_plan(&plan(p, q, 1, 1)).unwrap();
            let oracle = alexander_torus_oracle(p as u32, q as u32).unwrap();
            // one extra full twist on a single strand is no twist at all
            assert_eq!(alexander_from_diagram(&d).unwrap(), oracle);
            let b = torus_braid(p as usize, q as usize).unwrap();
            assert_eq!(alexander_from_braid(&b).unwrap(), oracle);
        }
    }

    #[test]
    fn twisted_plan_matches_braid() {
        let d = diagram_from_plan(&plan(3, 2, 2, 1)).unwrap();
        let expected = alexander_from_braid(&twisted_torus_braid(3, 2, 2, 1).unwrap()).unwrap();
        assert_eq!(alexander_from_diagram(&d).unwrap(), expected);
    }

    #[test]
    fn loose_strands() {
        let entry = |weight| FoldEntry {
            weight,
            region: Region::Lower,
            role: BandRole::Untwisted,
            fold: FoldType::T1,
            twist_box: None,
            strand_length: Rational::from_integer(2),
            twists: 0,
        };
        let single = FoldPlan::from_entries(vec![entry(1)], one()).unwrap();
        let d = diagram_from_plan(&single).unwrap();
        assert!(d.crossings().is_empty());
        assert_eq!(alexander_from_diagram(&d).unwrap(), LaurentPolynomial::one());
        let double = FoldPlan::from_entries(vec![entry(2)], one()).unwrap();
        assert!(matches!(diagram_from_plan(&double), Err(BraidError::MultiComponent(2))));
    }
}
