//! Assembly of fold templates into a flat layout, and its validation.
//!
//! Segments are axis-parallel pieces of the core; the ribbon occupied by a
//! segment is the rectangle of half-width `w/2` around it. Two segments
//! overlap when their rectangles share interior.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::template::{layout_fold_type, Point};
use crate::error::{BraidError, Result};
use crate::planner::{plan_length, FoldPlan, FoldType, Rational, Region};

/// Distance between neighbouring strand lanes, in units of `w`.
pub const LANE_PITCH: i64 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    /// Index of the plan entry this segment belongs to.
    pub band: usize,
    pub strand: usize,
    /// Position along the strand.
    pub index: usize,
    pub from: Point,
    pub to: Point,
    pub layer: i32,
    pub connector: bool,
}

impl Segment {
    pub fn is_vertical(&self) -> bool {
        self.from.x == self.to.x
    }

    pub fn is_axis_parallel(&self) -> bool {
        self.from.x == self.to.x || self.from.y == self.to.y
    }

    pub fn length(&self) -> Rational {
        (self.to.x - self.from.x).abs() + (self.to.y - self.from.y).abs()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldLine {
    pub from: Point,
    pub to: Point,
    pub strand: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverlapKind {
    /// Consecutive pieces meeting at a crease.
    Fold,
    /// Parallel layers of one strand.
    Stack,
    /// Transversal overlap.
    Crossing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub over: usize,
    pub under: usize,
    pub kind: OverlapKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonLayout {
    pub width: Rational,
    pub segments: Vec<Segment>,
    pub fold_lines: Vec<FoldLine>,
    pub crossing_data: Vec<CrossingRecord>,
    pub framing_twists: i64,
    /// Core length the layout must realise, in units of `w`.
    pub expected_length_over_w: Rational,
}

impl RibbonLayout {
    pub fn empty(width: Rational) -> Self {
        Self {
            width,
            segments: vec![],
            fold_lines: vec![],
            crossing_data: vec![],
            framing_twists: 0,
            expected_length_over_w: Rational::zero(),
        }
    }

    /// Core length excluding connectors, in units of `w`.
    pub fn measured_length_over_w(&self) -> Rational {
        let total: Rational = self.segments.iter().filter(|s| !s.connector).map(Segment::length).sum();
        total / self.width
    }

    pub fn crossing_count(&self) -> usize {
        self.crossing_data.iter().filter(|c| c.kind == OverlapKind::Crossing).count()
    }
}

#[derive(Clone, Copy, Debug)]
struct Rect {
    x0: Rational,
    x1: Rational,
    y0: Rational,
    y1: Rational,
}

impl Rect {
    fn of(s: &Segment, w: Rational) -> Rect {
        let h = w / 2;
        let (x0, x1) = (s.from.x.min(s.to.x), s.from.x.max(s.to.x));
        let (y0, y1) = (s.from.y.min(s.to.y), s.from.y.max(s.to.y));
        if s.is_vertical() {
            Rect { x0: x0 - h, x1: x1 + h, y0, y1 }
        } else {
            Rect { x0, x1, y0: y0 - h, y1: y1 + h }
        }
    }

    fn intersection(&self, o: &Rect) -> Option<Rect> {
        let r = Rect { x0: self.x0.max(o.x0), x1: self.x1.min(o.x1), y0: self.y0.max(o.y0), y1: self.y1.min(o.y1) };
        (r.x0 < r.x1 && r.y0 < r.y1).then_some(r)
    }

    fn center(&self) -> (Rational, Rational) {
        ((self.x0 + self.x1) / 2, (self.y0 + self.y1) / 2)
    }

    fn contains_strictly(&self, (x, y): (Rational, Rational)) -> bool {
        self.x0 < x && x < self.x1 && self.y0 < y && y < self.y1
    }
}

/// All overlapping pairs `(i, j)` with `i < j`, with their intersection.
fn overlaps(segments: &[Segment], w: Rational) -> Vec<(usize, usize, Rect)> {
    let rects: Vec<Rect> = segments.iter().map(|s| Rect::of(s, w)).collect();
    let mut order: Vec<usize> = (0..rects.len()).collect();
    order.sort_by(|&a, &b| rects[a].x0.cmp(&rects[b].x0).then(a.cmp(&b)));
    let mut out = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if rects[j].x0 >= rects[i].x1 {
                break;
            }
            if let Some(r) = rects[i].intersection(&rects[j]) {
                out.push((i.min(j), i.max(j), r));
            }
        }
    }
    out.sort_by_key(|o| (o.0, o.1));
    out
}

fn classify(a: &Segment, b: &Segment) -> Option<OverlapKind> {
    let same_strand = a.strand == b.strand;
    if same_strand && a.index.abs_diff(b.index) == 1 {
        Some(OverlapKind::Fold)
    } else if a.is_vertical() != b.is_vertical() {
        Some(OverlapKind::Crossing)
    } else if same_strand {
        Some(OverlapKind::Stack)
    } else {
        None
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed-segment intersection, exact.
pub fn segments_touch(a: (&Point, &Point), b: (&Point, &Point)) -> bool {
    let d1 = cross(b.0, b.1, a.0).signum();
    let d2 = cross(b.0, b.1, a.1).signum();
    let d3 = cross(a.0, a.1, b.0).signum();
    let d4 = cross(a.0, a.1, b.1).signum();
    if d1 * d2 < Rational::zero() && d3 * d4 < Rational::zero() {
        return true;
    }
    (d1.is_zero() && on_segment(a.0, b.0, b.1))
        || (d2.is_zero() && on_segment(a.1, b.0, b.1))
        || (d3.is_zero() && on_segment(b.0, a.0, a.1))
        || (d4.is_zero() && on_segment(b.1, a.0, a.1))
}

fn touching_fold_lines(lines: &[FoldLine]) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..lines.len()).collect();
    let lo = |l: &FoldLine| l.from.x.min(l.to.x);
    let hi = |l: &FoldLine| l.from.x.max(l.to.x);
    order.sort_by(|&a, &b| lo(&lines[a]).cmp(&lo(&lines[b])).then(a.cmp(&b)));
    let mut out = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if lo(&lines[j]) > hi(&lines[i]) {
                break;
            }
            if segments_touch((&lines[i].from, &lines[i].to), (&lines[j].from, &lines[j].to)) {
                out.push((i.min(j), i.max(j)));
            }
        }
    }
    out.sort();
    out
}

/// Lay out every strand of the plan in its own lane.
pub fn assemble_layout(plan: &FoldPlan) -> Result<RibbonLayout> {
    let w = plan.width;
    let mut templates = Vec::new();
    for (band, e) in plan.entries.iter().enumerate() {
        let s = matches!(e.fold, FoldType::T4 | FoldType::T3T4Combined).then_some(e.twists);
        let t = layout_fold_type(e.fold, w, s)?;
        for _ in 0..e.weight {
            templates.push((band, e.region, t.clone()));
        }
    }
    let lower_height = templates
        .iter()
        .filter(|(_, region, _)| *region == Region::Lower)
        .map(|(_, _, t)| t.height())
        .max()
        .unwrap_or_else(Rational::zero);
    let pitch = w * LANE_PITCH;
    let upper_base = lower_height + pitch;

    let mut segments = Vec::new();
    let mut fold_lines = Vec::new();
    let mut lanes = BTreeMap::new();
    for (strand, (band, region, t)) in templates.iter().enumerate() {
        let lane = lanes.entry(*region).or_insert(0i64);
        let dx = pitch * *lane;
        *lane += 1;
        let dy = if *region == Region::Lower { Rational::zero() } else { upper_base };
        for (index, piece) in t.pieces.iter().enumerate() {
            segments.push(Segment {
                band: *band,
                strand,
                index,
                from: piece.from.translated(dx, dy),
                to: piece.to.translated(dx, dy),
                layer: piece.layer,
                connector: piece.connector,
            });
        }
        for (a, b) in &t.fold_lines {
            fold_lines.push(FoldLine { from: a.translated(dx, dy), to: b.translated(dx, dy), strand });
        }
    }

    if let Some((i, j)) = touching_fold_lines(&fold_lines).first() {
        return Err(BraidError::Layout(format!("fold lines {i} and {j} touch at pitch {LANE_PITCH}w")));
    }

    let mut crossing_data = Vec::new();
    for (i, j, _) in overlaps(&segments, w) {
        let (a, b) = (&segments[i], &segments[j]);
        let kind = classify(a, b)
            .ok_or_else(|| BraidError::Layout(format!("segments {i} and {j} overlap without crossing")))?;
        let (over, under) = match a.layer.cmp(&b.layer) {
            std::cmp::Ordering::Greater => (i, j),
            std::cmp::Ordering::Less => (j, i),
            std::cmp::Ordering::Equal => {
                return Err(BraidError::Layout(format!("segments {i} and {j} overlap on one layer")));
            }
        };
        crossing_data.push(CrossingRecord { over, under, kind });
    }

    let framing_twists = plan
        .entries
        .iter()
        .filter(|e| matches!(e.fold, FoldType::T3 | FoldType::T4 | FoldType::T3T4Combined))
        .map(|e| e.weight as i64 * e.twists)
        .sum();

    Ok(RibbonLayout {
        width: w,
        segments,
        fold_lines,
        crossing_data,
        framing_twists,
        expected_length_over_w: plan_length(plan) / w,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationClass {
    FoldLineContact,
    DegenerateSegment,
    NonTransversalOverlap,
    InconsistentCrossing,
    CrossingCycle,
    LengthMismatch,
}

impl fmt::Display for ViolationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or_default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub class: ViolationClass,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub fold_lines_disjoint: bool,
    pub crossings_consistent: bool,
    pub measured_length_over_w: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, class: ViolationClass) -> bool {
        self.violations.iter().any(|v| v.class == class)
    }
}

fn has_cycle(nodes: &[usize], edges: &BTreeSet<(usize, usize)>) -> bool {
    // Kahn's algorithm on the induced subgraph
    let mut indeg: BTreeMap<usize, usize> = nodes.iter().map(|&n| (n, 0)).collect();
    for &(a, b) in edges {
        if indeg.contains_key(&a) {
            if let Some(d) = indeg.get_mut(&b) {
                *d += 1;
            }
        }
    }
    let mut ready: Vec<usize> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&n, _)| n).collect();
    let mut seen = 0;
    while let Some(n) = ready.pop() {
        seen += 1;
        for &(a, b) in edges.range((n, 0)..=(n, usize::MAX)) {
            debug_assert_eq!(a, n);
            if let Some(d) = indeg.get_mut(&b) {
                *d -= 1;
                if *d == 0 {
                    ready.push(b);
                }
            }
        }
    }
    seen < nodes.len()
}

/// Check fold-line disjointness, immersion and crossing consistency, and the
/// measured length. Failures are collected, never thrown.
pub fn validate_layout(layout: &RibbonLayout) -> ValidationReport {
    let mut violations = Vec::new();
    let mut push = |class, detail: String| violations.push(Violation { class, detail });
    let w = layout.width;

    let touching = touching_fold_lines(&layout.fold_lines);
    for &(i, j) in &touching {
        push(ViolationClass::FoldLineContact, format!("fold lines {i} and {j} intersect"));
    }

    for (i, s) in layout.segments.iter().enumerate() {
        if !s.is_axis_parallel() {
            push(ViolationClass::DegenerateSegment, format!("segment {i} is not axis-parallel"));
        } else if s.length().is_zero() {
            push(ViolationClass::DegenerateSegment, format!("segment {i} has zero length"));
        }
    }

    let pairs = overlaps(&layout.segments, w);
    let mut overlapping = BTreeSet::new();
    let mut neighbours: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(i, j, _) in &pairs {
        overlapping.insert((i, j));
        neighbours.entry(i).or_default().insert(j);
        neighbours.entry(j).or_default().insert(i);
        if classify(&layout.segments[i], &layout.segments[j]).is_none() {
            push(ViolationClass::NonTransversalOverlap, format!("segments {i} and {j} overlap in parallel"));
        }
    }

    let mut recorded: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut edges = BTreeSet::new();
    for c in &layout.crossing_data {
        let (i, j) = (c.over.min(c.under), c.over.max(c.under));
        if c.over == c.under || c.over >= layout.segments.len() || c.under >= layout.segments.len() {
            push(ViolationClass::InconsistentCrossing, format!("malformed record {} over {}", c.over, c.under));
            continue;
        }
        if !overlapping.contains(&(i, j)) {
            push(ViolationClass::InconsistentCrossing, format!("record for disjoint segments {i} and {j}"));
        }
        if let Some(&prev) = recorded.get(&(i, j)) {
            if prev != c.over {
                push(ViolationClass::InconsistentCrossing, format!("segments {i} and {j} are each over the other"));
            }
        }
        recorded.insert((i, j), c.over);
        let (lo, hi) = (layout.segments[c.under].layer, layout.segments[c.over].layer);
        if lo > hi {
            push(ViolationClass::InconsistentCrossing, format!("record puts {} over {} against layer order", c.over, c.under));
        }
        edges.insert((c.over, c.under));
    }
    for &(i, j) in &overlapping {
        if !recorded.contains_key(&(i, j)) {
            push(ViolationClass::InconsistentCrossing, format!("segments {i} and {j} overlap without a record"));
        }
    }

    let rects: Vec<Rect> = layout.segments.iter().map(|s| Rect::of(s, w)).collect();
    let mut regions = BTreeSet::new();
    for &(i, j, r) in &pairs {
        let c = r.center();
        let mut members: Vec<usize> = vec![i, j];
        let (ni, nj) = (&neighbours[&i], &neighbours[&j]);
        members.extend(ni.intersection(nj).copied().filter(|&k| rects[k].contains_strictly(c)));
        members.sort_unstable();
        if regions.insert(members.clone()) && has_cycle(&members, &edges) {
            push(ViolationClass::CrossingCycle, format!("over/under cycle among segments {members:?}"));
        }
    }

    let measured = layout.measured_length_over_w();
    if measured != layout.expected_length_over_w {
        push(
            ViolationClass::LengthMismatch,
            format!("measured {measured} but the plan needs {}", layout.expected_length_over_w),
        );
    }

    let crossings_consistent = !violations.iter().any(|v| {
        matches!(
            v.class,
            ViolationClass::NonTransversalOverlap | ViolationClass::InconsistentCrossing | ViolationClass::CrossingCycle
        )
    });
    ValidationReport {
        fold_lines_disjoint: touching.is_empty(),
        crossings_consistent,
        measured_length_over_w: measured.to_string(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planner::{normalize_params, plan_for, BandRole, FoldEntry};

    fn one() -> Rational {
        Rational::from_integer(1)
    }

    fn layout(p: i64, q: i64, r: i64, s: i64) -> RibbonLayout {
        let params = normalize_params(p, q, r, s, false).unwrap();
        assemble_layout(&plan_for(&params, one()).unwrap()).unwrap()
    }

    fn single_t1() -> RibbonLayout {
        let e = FoldEntry {
            weight: 1,
            region: Region::Lower,
            role: BandRole::Untwisted,
            fold: FoldType::T1,
            twist_box: None,
            strand_length: Rational::from_integer(2),
            twists: 0,
        };
        assemble_layout(&FoldPlan::from_entries(vec![e], one()).unwrap()).unwrap()
    }

    #[test]
    fn measured_lengths() {
        assert_eq!(layout(3, 2, 2, 1).measured_length_over_w(), Rational::from_integer(10));
        assert_eq!(layout(5, 2, 3, 2).measured_length_over_w(), Rational::from_integer(16));
        assert_eq!(layout(3, 2, 4, -3).measured_length_over_w(), Rational::from_integer(32));
    }

    #[test]
    fn generated_layouts_validate() {
        for (p, q, r, s) in [(3, 2, 2, 1), (5, 2, 3, 2), (3, 2, 4, -3), (7, 3, 9, 4), (5, 3, 1, -2)] {
            let report = validate_layout(&layout(p, q, r, s));
            assert!(report.passed(), "{p} {q} {r} {s}: {:?}", report.violations);
        }
    }

    #[test]
    fn single_fold() {
        let l = single_t1();
        assert_eq!(l.fold_lines.len(), 2);
        assert_eq!(l.crossing_count(), 0);
        assert!(validate_layout(&l).passed());
    }

    #[test]
    fn framing() {
        assert_eq!(layout(3, 2, 2, 1).framing_twists, 2 + 2);
        assert_eq!(layout(7, 3, 5, -2).framing_twists, 3 - 2 * 5);
    }

    #[test]
    fn coincident_fold_lines() {
        let mut l = single_t1();
        l.fold_lines.push(l.fold_lines[0].clone());
        let report = validate_layout(&l);
        assert!(!report.fold_lines_disjoint);
        assert!(report.has(ViolationClass::FoldLineContact));
    }

    #[test]
    fn three_cycle() {
        let seg = |strand, index, a: (i64, i64), b: (i64, i64)| Segment {
            band: 0,
            strand,
            index,
            from: Point::ints(a.0, a.1),
            to: Point::ints(b.0, b.1),
            layer: 0,
            connector: false,
        };
        let rec = |over, under, kind| CrossingRecord { over, under, kind };
        let l = RibbonLayout {
            width: one(),
            segments: vec![seg(0, 0, (-2, 0), (2, 0)), seg(1, 0, (0, -2), (0, 2)), seg(0, 2, (-1, 0), (1, 0))],
            fold_lines: vec![],
            crossing_data: vec![
                rec(0, 1, OverlapKind::Crossing),
                rec(1, 2, OverlapKind::Crossing),
                rec(2, 0, OverlapKind::Stack),
            ],
            framing_twists: 0,
            expected_length_over_w: Rational::from_integer(10),
        };
        let report = validate_layout(&l);
        assert!(!report.crossings_consistent);
        assert_eq!(report.violations.iter().map(|v| v.class).collect::<Vec<_>>(), vec![ViolationClass::CrossingCycle]);
    }

    #[test]
    fn length_mismatch() {
        let mut l = single_t1();
        l.expected_length_over_w = Rational::from_integer(3);
        let report = validate_layout(&l);
        assert_eq!(report.violations.len(), 1);
        assert!(report.has(ViolationClass::LengthMismatch));
        assert_eq!(report.measured_length_over_w, "2");
    }

    #[test]
    fn touch_test() {
        let p = |x, y| Point::ints(x, y);
        assert!(segments_touch((&p(0, 0), &p(2, 2)), (&p(0, 2), &p(2, 0))));
        assert!(segments_touch((&p(0, 0), &p(2, 0)), (&p(2, 0), &p(3, 0))));
        assert!(!segments_touch((&p(0, 0), &p(1, 0)), (&p(2, 0), &p(3, 0))));
        assert!(!segments_touch((&p(0, 0), &p(1, 1)), (&p(0, 1), &p(1, 2))));
    }
}
