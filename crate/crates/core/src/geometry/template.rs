//! Planar fold templates in local coordinates (units of `w`).
//!
//! Every template has a vertical core starting at `P1 = (0, 0)` and ending at
//! `P2 = (0, H)`. The core is entered and left through short horizontal arms,
//! each joined to the core by a 45° crease of width `w`. Type 4 inserts
//! `|s| − 1` roll pairs into the core: each pair folds the ribbon down by `w/2`
//! and back up along horizontal creases, and the core height grows to
//! `H = 1 + |s|`, so the total core length is `2|s|`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::planner::{FoldType, Rational};

/// Connector length, as a fraction of `w`.
pub const EPSILON: (i64, i64) = (1, 100);

pub fn epsilon() -> Rational {
    Rational::new(EPSILON.0, EPSILON.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Self::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn scaled(&self, k: Rational) -> Point {
        Point::new(self.x * k, self.y * k)
    }

    pub fn translated(&self, dx: Rational, dy: Rational) -> Point {
        Point::new(self.x + dx, self.y + dy)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FoldAngle {
    /// 45° crease turning the ribbon through a right angle.
    Diagonal,
    /// Horizontal crease reversing the ribbon.
    Reversal,
}

/// A straight piece of the core with a stacking layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub from: Point,
    pub to: Point,
    pub layer: i32,
    pub connector: bool,
}

impl Piece {
    pub fn length(&self) -> Rational {
        (self.to.x - self.from.x).abs() + (self.to.y - self.from.y).abs()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldTemplate {
    pub tag: FoldType,
    pub width: Rational,
    pub pieces: Vec<Piece>,
    pub fold_lines: Vec<(Point, Point)>,
    pub fold_angles: Vec<FoldAngle>,
    pub roll_layers: usize,
}

impl FoldTemplate {
    /// Core length excluding connectors.
    pub fn core_length(&self) -> Rational {
        self.pieces.iter().filter(|p| !p.connector).map(Piece::length).sum()
    }

    /// Lengths of the core pieces between consecutive creases.
    pub fn inter_fold_lengths(&self) -> Vec<Rational> {
        self.pieces.iter().filter(|p| !p.connector).map(Piece::length).collect()
    }

    /// Height of the core above `P1`.
    pub fn height(&self) -> Rational {
        self.pieces.iter().flat_map(|p| [p.from.y, p.to.y]).max().unwrap_or_else(Rational::zero)
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn pt(x: Rational, y: Rational) -> Point {
    Point::new(x, y)
}

/// 45° crease at the core end `(0, y)`; `up` says whether the core leaves it
/// upwards, `side` is −1 when the arm lies to the left.
fn diagonal_crease(y: Rational, up: bool, side: i64) -> (Point, Point) {
    let h = r(1, 2);
    // Reflection maps the arm direction onto the core direction.
    let rising = (side < 0) == up;
    if rising {
        (pt(-h, y - h), pt(h, y + h))
    } else {
        (pt(-h, y + h), pt(h, y - h))
    }
}

fn reversal_crease(y: Rational) -> (Point, Point) {
    (pt(r(-1, 2), y), pt(r(1, 2), y))
}

/// Template for one strand of the given fold type. `s` must be supplied for
/// type 4 and the combined fold, and its sign mirrors every template.
pub fn layout_fold_type(tag: FoldType, w: Rational, s: Option<i64>) -> Result<FoldTemplate> {
    if w <= Rational::zero() {
        return Err(BraidError::Layout("width must be positive".into()));
    }
    let needs_s = matches!(tag, FoldType::T4 | FoldType::T3T4Combined);
    let s = match (needs_s, s) {
        (true, None) => return Err(BraidError::Layout(format!("{tag} needs a twist count"))),
        (_, Some(0)) => return Err(BraidError::Layout("twist count must be nonzero".into())),
        (_, s) => s.unwrap_or(1),
    };
    let mirror: i64 = if s < 0 { -1 } else { 1 };
    let rolls = if needs_s { s.unsigned_abs() as usize - 1 } else { 0 };
    let eps = epsilon();
    let zero = Rational::zero();

    if tag == FoldType::Direct {
        let piece = Piece { from: pt(zero, zero), to: pt(zero, eps), layer: 0, connector: true };
        return Ok(FoldTemplate {
            tag,
            width: w,
            pieces: vec![piece],
            fold_lines: vec![],
            fold_angles: vec![],
            roll_layers: 0,
        }
        .scaled(w));
    }

    // arm sides (−1 left, +1 right) and arm layers relative to the core
    let (bottom_side, top_side, bottom_layer, top_layer) = match tag {
        FoldType::T1 => (-1, -1, 1, 1),
        FoldType::T2 => (1, 1, 1, 1),
        _ => (-1, 1, 1, -1),
    };
    let (bottom_side, top_side) = (bottom_side * mirror, top_side * mirror);
    let (bottom_layer, top_layer) = (bottom_layer * mirror as i32, top_layer * mirror as i32);

    let height = Rational::from_integer(2 + rolls as i64);
    let mut pieces = vec![Piece {
        from: pt(eps * bottom_side, zero),
        to: pt(zero, zero),
        layer: bottom_layer,
        connector: true,
    }];
    let mut fold_lines = vec![diagonal_crease(zero, true, bottom_side)];
    let mut fold_angles = vec![FoldAngle::Diagonal];

    let mut y = zero;
    let mut layer = 0;
    for i in 0..rolls as i64 {
        let top = r(5, 4) + i;
        let bottom = r(3, 4) + i;
        pieces.push(Piece { from: pt(zero, y), to: pt(zero, top), layer, connector: false });
        fold_lines.push(reversal_crease(top));
        fold_angles.push(FoldAngle::Reversal);
        layer += mirror as i32;
        pieces.push(Piece { from: pt(zero, top), to: pt(zero, bottom), layer, connector: false });
        fold_lines.push(reversal_crease(bottom));
        fold_angles.push(FoldAngle::Reversal);
        layer += mirror as i32;
        y = bottom;
    }
    pieces.push(Piece { from: pt(zero, y), to: pt(zero, height), layer, connector: false });
    fold_lines.push(diagonal_crease(height, false, top_side));
    fold_angles.push(FoldAngle::Diagonal);
    let top_arm_layer = if top_layer > 0 { layer.max(0) + top_layer } else { layer.min(0) + top_layer };
    pieces.push(Piece {
        from: pt(zero, height),
        to: pt(eps * top_side, height),
        layer: top_arm_layer,
        connector: true,
    });

    Ok(FoldTemplate { tag, width: w, pieces, fold_lines, fold_angles, roll_layers: rolls }.scaled(w))
}

impl FoldTemplate {
    fn scaled(mut self, w: Rational) -> Self {
        for p in &mut self.pieces {
            p.from = p.from.scaled(w);
            p.to = p.to.scaled(w);
        }
        for (a, b) in &mut self.fold_lines {
            *a = a.scaled(w);
            *b = b.scaled(w);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> Rational {
        Rational::from_integer(1)
    }

    #[test]
    fn basic_templates() {
        for tag in [FoldType::T1, FoldType::T2, FoldType::T3] {
            let t = layout_fold_type(tag, one(), None).unwrap();
            assert_eq!(t.core_length(), Rational::from_integer(2));
            assert_eq!(t.fold_lines.len(), 2);
            assert_eq!(t.fold_angles, vec![FoldAngle::Diagonal; 2]);
        }
    }

    #[test]
    fn type_four() {
        let t = layout_fold_type(FoldType::T4, one(), Some(3)).unwrap();
        assert_eq!(t.core_length(), Rational::from_integer(6));
        assert_eq!(t.roll_layers, 2);
        assert_eq!(t.fold_lines.len(), 6);
        let t1 = layout_fold_type(FoldType::T4, one(), Some(1)).unwrap();
        let t3 = layout_fold_type(FoldType::T3, one(), None).unwrap();
        assert_eq!(t1.core_length(), t3.core_length());
        assert!(layout_fold_type(FoldType::T4, one(), None).is_err());
        assert!(layout_fold_type(FoldType::T3T4Combined, one(), None).is_err());
    }

    #[test]
    fn negative_twists_mirror() {
        let pos = layout_fold_type(FoldType::T4, one(), Some(2)).unwrap();
        let neg = layout_fold_type(FoldType::T4, one(), Some(-2)).unwrap();
        assert_eq!(pos.core_length(), neg.core_length());
        for (a, b) in pos.pieces.iter().zip(&neg.pieces) {
            assert_eq!(a.from.x, -b.from.x);
            assert_eq!(a.to.y, b.to.y);
            assert_eq!(a.layer, -b.layer);
        }
    }

    #[test]
    fn width_scales_length() {
        let t = layout_fold_type(FoldType::T4, Rational::new(1, 3), Some(-4)).unwrap();
        assert_eq!(t.core_length(), Rational::new(8, 3));
        assert!(layout_fold_type(FoldType::T1, Rational::zero(), None).is_err());
        assert!(layout_fold_type(FoldType::Direct, one(), None).unwrap().core_length().is_zero());
    }

    #[test]
    fn crease_directions() {
        // arm from the left turning up: crease along y = x
        let (a, b) = diagonal_crease(Rational::zero(), true, -1);
        assert_eq!((a, b), (Point::new(r(-1, 2), r(-1, 2)), Point::new(r(1, 2), r(1, 2))));
        // core arriving from below and leaving to the left: crease along y = −x
        let (a, b) = diagonal_crease(Rational::from_integer(2), false, -1);
        assert_eq!((a, b), (Point::new(r(-1, 2), r(5, 2)), Point::new(r(1, 2), r(3, 2))));
    }
}
