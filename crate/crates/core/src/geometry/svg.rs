use std::fmt::Write;

use num_traits::{ToPrimitive, Zero};

use super::layout::{OverlapKind, RibbonLayout, Segment};
use crate::planner::Rational;

const MARGIN: i64 = 1;
/// Horizontal shift per layer, as a fraction of `w`; rendering only.
const LAYER_SHIFT: (i64, i64) = (1, 20);

fn num(x: Rational) -> String {
    let v = x.to_f64().unwrap_or(0.0);
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

struct Frame {
    x0: Rational,
    y1: Rational,
    width: Rational,
    height: Rational,
    w: Rational,
}

impl Frame {
    fn x(&self, x: Rational) -> String {
        num(x - self.x0)
    }

    // SVG y grows downwards
    fn y(&self, y: Rational) -> String {
        num(self.y1 - y)
    }
}

fn shift(seg: &Segment, w: Rational) -> Rational {
    w * Rational::new(LAYER_SHIFT.0, LAYER_SHIFT.1) * seg.layer as i64
}

fn ribbon_rect(seg: &Segment, w: Rational) -> (Rational, Rational, Rational, Rational) {
    let h = w / 2;
    let dx = shift(seg, w);
    let (x0, x1) = (seg.from.x.min(seg.to.x) + dx, seg.from.x.max(seg.to.x) + dx);
    let (y0, y1) = (seg.from.y.min(seg.to.y), seg.from.y.max(seg.to.y));
    if seg.is_vertical() {
        (x0 - h, x1 + h, y0, y1)
    } else {
        (x0, x1, y0 - h, y1 + h)
    }
}

/// Deterministic SVG 1.1 rendering of a layout.
pub fn render_svg(layout: &RibbonLayout) -> String {
    let w = layout.width;
    let margin = w * MARGIN;
    let xs = layout
        .segments
        .iter()
        .flat_map(|s| {
            let (a, b, _, _) = ribbon_rect(s, w);
            [a, b]
        })
        .chain(layout.fold_lines.iter().flat_map(|f| [f.from.x, f.to.x]));
    let ys = layout
        .segments
        .iter()
        .flat_map(|s| {
            let (_, _, a, b) = ribbon_rect(s, w);
            [a, b]
        })
        .chain(layout.fold_lines.iter().flat_map(|f| [f.from.y, f.to.y]));
    let (xs, ys): (Vec<_>, Vec<_>) = (xs.collect(), ys.collect());
    let lo = |v: &[Rational]| v.iter().min().copied().unwrap_or_else(Rational::zero);
    let hi = |v: &[Rational]| v.iter().max().copied().unwrap_or_else(Rational::zero);
    let frame = Frame {
        x0: lo(&xs) - margin,
        y1: hi(&ys) + margin,
        width: hi(&xs) - lo(&xs) + margin * 2,
        height: hi(&ys) - lo(&ys) + margin * 2,
        w,
    };

    let mut out = String::new();
    let (fw, fh) = (num(frame.width), num(frame.height));
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{fw}" height="{fh}" viewBox="0 0 {fw} {fh}">"#
    )
    .unwrap();
    let stroke = num(frame.w / 40);
    writeln!(out, r##"<rect x="0" y="0" width="{fw}" height="{fh}" fill="#ffffff"/>"##).unwrap();

    let mut order: Vec<usize> = (0..layout.segments.len()).collect();
    order.sort_by_key(|&i| (layout.segments[i].band, layout.segments[i].strand, layout.segments[i].index));
    writeln!(out, r#"<g id="ribbon">"#).unwrap();
    for &i in &order {
        let seg = &layout.segments[i];
        let (x0, x1, y0, y1) = ribbon_rect(seg, w);
        let (fill, opacity) = if seg.connector { ("#9e9e9e", "0.500") } else { ("#f2c14e", "0.850") };
        writeln!(
            out,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="{fill}" fill-opacity="{opacity}" stroke="#5b4a1a" stroke-width="{stroke}"/>"##,
            frame.x(x0),
            frame.y(y1),
            num(x1 - x0),
            num(y1 - y0),
        )
        .unwrap();
        let dx = shift(seg, w);
        writeln!(
            out,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#1f3a5f" stroke-width="{stroke}"/>"##,
            frame.x(seg.from.x + dx),
            frame.y(seg.from.y),
            frame.x(seg.to.x + dx),
            frame.y(seg.to.y),
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    // over strands redrawn across the under strand's gap
    writeln!(out, r#"<g id="crossings">"#).unwrap();
    for c in layout.crossing_data.iter().filter(|c| c.kind == OverlapKind::Crossing) {
        let seg = &layout.segments[c.over];
        let (x0, x1, y0, y1) = ribbon_rect(seg, w);
        writeln!(
            out,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#f2c14e" stroke="#ffffff" stroke-width="{stroke}"/>"##,
            frame.x(x0),
            frame.y(y1),
            num(x1 - x0),
            num(y1 - y0),
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r#"<g id="folds">"#).unwrap();
    for f in &layout.fold_lines {
        writeln!(
            out,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c0392b" stroke-width="{stroke}" stroke-dasharray="{} {}"/>"##,
            frame.x(f.from.x),
            frame.y(f.from.y),
            frame.x(f.to.x),
            frame.y(f.to.y),
            num(frame.w / 10),
            num(frame.w / 20),
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::assemble_layout;
    use crate::planner::{normalize_params, plan_for};

    #[test]
    fn deterministic_and_dashed() {
        let params = normalize_params(3, 2, 2, 1, false).unwrap();
        let layout = assemble_layout(&plan_for(&params, Rational::from_integer(1)).unwrap()).unwrap();
        let a = render_svg(&layout);
        assert_eq!(a, render_svg(&layout));
        assert_eq!(a.matches("stroke-dasharray").count(), layout.fold_lines.len());
        assert!(a.starts_with("<?xml"));
    }

    #[test]
    fn empty_canvas() {
        let svg = render_svg(&RibbonLayout::empty(Rational::from_integer(1)));
        assert!(svg.contains("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("stroke-dasharray"));
    }

    #[test]
    fn three_decimals() {
        assert_eq!(num(Rational::new(1, 3)), "0.333");
        assert_eq!(num(Rational::new(-1, 10000)), "0.000");
    }
}
