//! SVG rendering of a construction state.
//!
//! The drawing uses world coordinates directly with `y` negated, so the
//! mathematical up direction is up on screen.

use std::fmt::Write as _;

use origami::geom::{Line, Point};
use origami::script::{ConstructionState, Produced};

use crate::format::sig12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RenderError {
    #[error("nothing to draw: the construction has no marked points")]
    EmptyState,
}

/// Axis-aligned rectangle in world coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Rect {
    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    pub fn diagonal(&self) -> f64 {
        self.width().hypot(self.height())
    }

    /// Bounding box of `points` padded by `margin` times its larger side.
    /// Flat or single-point boxes are widened first.
    pub fn fit(points: &[Point], margin: f64) -> Option<Rect> {
        let first = points.first()?;
        let mut r = Rect {
            min_x: first.x,
            min_y: first.y,
            max_x: first.x,
            max_y: first.y,
        };
        for p in points {
            r.min_x = r.min_x.min(p.x);
            r.min_y = r.min_y.min(p.y);
            r.max_x = r.max_x.max(p.x);
            r.max_y = r.max_y.max(p.y);
        }
        let mut span = r.width().max(r.height());
        if span <= 1e-12 {
            span = 1.0;
        }
        let grow = |lo: &mut f64, hi: &mut f64| {
            let short = 0.1 * span - (*hi - *lo);
            if short > 0.0 {
                *lo -= short / 2.0;
                *hi += short / 2.0;
            }
            *lo -= margin * span;
            *hi += margin * span;
        };
        grow(&mut r.min_x, &mut r.max_x);
        grow(&mut r.min_y, &mut r.max_y);
        Some(r)
    }

    /// The part of `line` inside the rectangle, if any.
    pub fn clip(&self, line: &Line) -> Option<(Point, Point)> {
        let o = line.anchor();
        let d = line.direction();
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (o, d, min, max) in [(o.x, d.x, self.min_x, self.max_x), (o.y, d.y, self.min_y, self.max_y)] {
            if d.abs() < 1e-15 {
                if o < min || o > max {
                    return None;
                }
            } else {
                let (t1, t2) = ((min - o) / d, (max - o) / d);
                lo = lo.max(t1.min(t2));
                hi = hi.min(t1.max(t2));
            }
        }
        if lo >= hi {
            return None;
        }
        Some((o + d * lo, o + d * hi))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// `None` fits the view to the marked points.
    pub viewbox: Option<Rect>,
    /// Fraction of the fitted size added on every side.
    pub margin: f64,
    /// Line width as a fraction of the viewbox diagonal.
    pub crease_width: f64,
    pub labels: bool,
    /// Output width in pixels.
    pub pixel_width: u32,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            viewbox: None,
            margin: 0.1,
            crease_width: 0.003,
            labels: true,
            pixel_width: 800,
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Draws every line and point of `state` in trace order.
pub fn render_svg(state: &ConstructionState, spec: &RenderSpec) -> Result<String, RenderError> {
    let points: Vec<Point> = state
        .trace()
        .iter()
        .filter_map(|s| match &s.produced {
            Produced::Point { point, .. } => Some(*point),
            _ => None,
        })
        .collect();
    if points.is_empty() {
        return Err(RenderError::EmptyState);
    }
    let view = match spec.viewbox {
        Some(v) => v,
        None => Rect::fit(&points, spec.margin).ok_or(RenderError::EmptyState)?,
    };
    let diag = view.diagonal();
    let radius = 0.01 * diag;
    let stroke = spec.crease_width * diag;
    let font = 0.03 * diag;
    let height_px = (f64::from(spec.pixel_width) * view.height() / view.width()).round().max(1.0);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str("<!-- y axis flipped: the world point (x, y) is drawn at (x, -y) so up is up -->\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        spec.pixel_width,
        sig12(height_px),
        sig12(view.min_x),
        sig12(-view.max_y),
        sig12(view.width()),
        sig12(view.height()),
    );
    let _ = writeln!(
        svg,
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>",
        sig12(view.min_x),
        sig12(-view.max_y),
        sig12(view.width()),
        sig12(view.height()),
    );
    for step in state.trace() {
        match &step.produced {
            Produced::Line { name, line } => {
                if let Some((a, b)) = view.clip(line) {
                    let _ = writeln!(
                        svg,
                        "<line id=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#3465a4\" stroke-width=\"{}\"/>",
                        escape(name),
                        sig12(a.x),
                        sig12(-a.y),
                        sig12(b.x),
                        sig12(-b.y),
                        sig12(stroke),
                    );
                }
            }
            Produced::Point { name, point } => {
                let _ = writeln!(
                    svg,
                    "<circle id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#cc0000\"/>",
                    escape(name),
                    sig12(point.x),
                    sig12(-point.y),
                    sig12(radius),
                );
                if spec.labels {
                    let _ = writeln!(
                        svg,
                        "<text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"sans-serif\">{}</text>",
                        sig12(point.x + radius),
                        sig12(-point.y - radius),
                        sig12(font),
                        escape(name),
                    );
                }
            }
            Produced::Check { .. } => {}
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
