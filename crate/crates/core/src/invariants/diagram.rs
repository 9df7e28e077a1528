//! Planar knot diagrams as arc/crossing incidence data, and the Alexander
//! polynomial computed from the crossing matrix.

use serde::{Deserialize, Serialize};

use crate::braid::{closure_component_count, BraidWord};
use crate::error::{BraidError, Result};
use crate::laurent::LaurentPolynomial;

use super::alexander::normalize_alexander;
use super::matrix::determinant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    /// `+1` or `−1`, matching the sign of the braid generator that produced it.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    arcs: usize,
    components: usize,
}

impl PlanarDiagram {
    /// Checks that every arc ends at exactly one under-crossing and starts at exactly one.
    pub fn new(crossings: Vec<Crossing>, arcs: usize, components: usize) -> Result<Self> {
        let bad = |msg: String| Err(BraidError::InvalidParameters(msg));
        if crossings.iter().any(|c| c.sign != 1 && c.sign != -1) {
            return bad("crossing sign must be +1 or -1".into());
        }
        if crossings.iter().any(|c| c.over >= arcs || c.under_in >= arcs || c.under_out >= arcs) {
            return bad("arc index out of range".into());
        }
        let mut ends = vec![0usize; arcs];
        let mut starts = vec![0usize; arcs];
        for c in &crossings {
            ends[c.under_in] += 1;
            starts[c.under_out] += 1;
        }
        let looped = ends.iter().filter(|&&e| e == 0).count();
        if ends.iter().zip(&starts).any(|(e, s)| e > &1 || e != s) {
            return bad("each arc must end at exactly one under-crossing".into());
        }
        // arcs with no under-crossing at all are closed loops, each its own component
        if looped > components {
            return bad("more closed arcs than components".into());
        }
        Ok(Self { crossings, arcs, components })
    }

    pub fn unknot() -> Self {
        Self { crossings: Vec::new(), arcs: 1, components: 1 }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Diagram of the closure of a braid word, all strands oriented downward.
    pub fn from_braid_closure(b: &BraidWord) -> Self {
        let n = b.strands();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut at: Vec<usize> = (0..n).collect();
        let mut raw = Vec::with_capacity(b.len());
        for &g in b.letters() {
            let i = g.unsigned_abs() as usize - 1;
            let (over_pos, under_pos) = if g > 0 { (i, i + 1) } else { (i + 1, i) };
            let fresh = parent.len();
            parent.push(fresh);
            raw.push(Crossing { over: at[over_pos], under_in: at[under_pos], under_out: fresh, sign: g.signum() as i8 });
            at[under_pos] = fresh;
            at.swap(i, i + 1);
        }
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (pos, &arc) in at.iter().enumerate() {
            let (a, b) = (find(&mut parent, arc), find(&mut parent, pos));
            parent[a] = b;
        }
        let mut label = vec![usize::MAX; parent.len()];
        let mut arcs = 0;
        for x in 0..parent.len() {
            let root = find(&mut parent, x);
            if label[root] == usize::MAX {
                label[root] = arcs;
                arcs += 1;
            }
            label[x] = label[root];
        }
        let crossings = raw
            .into_iter()
            .map(|c| Crossing { over: label[c.over], under_in: label[c.under_in], under_out: label[c.under_out], sign: c.sign })
            .collect();
        Self { crossings, arcs, components: closure_component_count(b) }
    }
}

/// Alexander polynomial from the crossing matrix of a one-component diagram.
///
/// Row of a crossing with over-arc `a`, incoming under-arc `b`, outgoing `c`:
/// positive gives `a: 1 − t, b: t, c: −1`; negative gives `a: 1 − t, b: −1, c: t`.
/// One row and one column are deleted before taking the determinant.
pub fn alexander_from_diagram(d: &PlanarDiagram) -> Result<LaurentPolynomial> {
    if d.components != 1 {
        return Err(BraidError::MultiComponent(d.components));
    }
    if d.crossings.is_empty() {
        return Ok(LaurentPolynomial::one());
    }
    let n = d.crossings.len();
    if d.arcs != n {
        return Err(BraidError::InvalidParameters(format!(
            "knot diagram with {n} crossings must have {n} arcs, found {}",
            d.arcs
        )));
    }
    let t = LaurentPolynomial::t();
    let one_minus_t = &LaurentPolynomial::one() - &t;
    let minus_one = LaurentPolynomial::constant(-1);
    let mut m = vec![vec![LaurentPolynomial::zero(); n]; n];
    for (k, c) in d.crossings.iter().enumerate() {
        let (into, out) = if c.sign > 0 { (&t, &minus_one) } else { (&minus_one, &t) };
        m[k][c.over] = &m[k][c.over] + &one_minus_t;
        m[k][c.under_in] = &m[k][c.under_in] + into;
        m[k][c.under_out] = &m[k][c.under_out] + out;
    }
    m.pop();
    for row in m.iter_mut() {
        row.pop();
    }
    normalize_alexander(&determinant(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{torus_braid, twisted_torus_braid};
    use crate::invariants::{alexander_from_braid, alexander_torus_oracle};

    fn standard_trefoil() -> PlanarDiagram {
        // arcs 0,1,2; each crossing's over-arc is the arc not involved below
        let c = |over, under_in, under_out| Crossing { over, under_in, under_out, sign: 1 };
        PlanarDiagram::new(vec![c(2, 0, 1), c(0, 1, 2), c(1, 2, 0)], 3, 1).unwrap()
    }

    #[test]
    fn unknot_diagram() {
        assert!(alexander_from_diagram(&PlanarDiagram::unknot()).unwrap().is_one());
    }

    #[test]
    fn trefoil_diagram() {
        assert_eq!(alexander_from_diagram(&standard_trefoil()).unwrap(), alexander_torus_oracle(2, 3).unwrap());
    }

    #[test]
    fn closure_of_torus_braid() {
        let b = torus_braid(3, 2).unwrap();
        let d = PlanarDiagram::from_braid_closure(&b);
        assert_eq!(d.crossings().len(), 4);
        assert_eq!(d.arc_count(), 4);
        assert_eq!(alexander_from_diagram(&d).unwrap(), alexander_from_braid(&b).unwrap());
    }

    #[test]
    fn mixed_signs_agree() {
        for s in [-3i64, -1, 2] {
            let b = twisted_torus_braid(5, 2, 3, s).unwrap();
            let d = PlanarDiagram::from_braid_closure(&b);
            assert_eq!(alexander_from_diagram(&d).unwrap(), alexander_from_braid(&b).unwrap(), "s = {s}");
        }
        let fig8 = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap();
        let d = PlanarDiagram::from_braid_closure(&fig8);
        let expected = LaurentPolynomial::from_terms([(-1, -1), (0, 3), (1, -1)]);
        assert_eq!(alexander_from_diagram(&d).unwrap(), normalize_alexander(&expected).unwrap());
    }

    #[test]
    fn rejects_links_and_bad_incidence() {
        let hopf = PlanarDiagram::from_braid_closure(&BraidWord::new(2, vec![1, 1]).unwrap());
        assert!(alexander_from_diagram(&hopf).is_err());
        let c = Crossing { over: 0, under_in: 0, under_out: 0, sign: 2 };
        assert!(PlanarDiagram::new(vec![c], 1, 1).is_err());
    }
}
