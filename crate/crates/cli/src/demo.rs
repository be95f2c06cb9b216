//! Named demonstrations, each running one library construction.

use origami::constructions::{
    circle_line_intersection, double_cube, euler_check, heptagon, incenter, perpendicular_bisector, ray_difference,
    trisect_angle, Triangle,
};
use origami::error::Error;
use origami::geom::{Line, Point, Tolerance};
use origami::script::ConstructionState;

use crate::format::{fixed6, sig12};

pub const DEMOS: [&str; 7] = [
    "bisector",
    "incenter",
    "euler",
    "circle-line",
    "trisect",
    "double-cube",
    "heptagon",
];

pub const DEFAULT_ANGLE_DEG: f64 = 60.0;

/// Key/value lines to print plus the state to render.
#[derive(Debug, Clone)]
pub struct DemoOutput {
    pub values: Vec<(String, String)>,
    pub state: ConstructionState,
}

impl DemoOutput {
    pub fn render(&self) -> String {
        self.values.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

struct Kv(Vec<(String, String)>);

impl Kv {
    fn num(&mut self, key: &str, x: f64) {
        self.0.push((key.to_string(), sig12(x)));
    }

    fn deg(&mut self, key: &str, x: f64) {
        self.0.push((key.to_string(), fixed6(x)));
    }

    fn text(&mut self, key: &str, v: impl ToString) {
        self.0.push((key.to_string(), v.to_string()));
    }

    fn point(&mut self, key: &str, p: Point) {
        self.num(&format!("{key}_x"), p.x);
        self.num(&format!("{key}_y"), p.y);
    }

    fn line(&mut self, key: &str, l: &Line) {
        self.num(&format!("{key}_nx"), l.nx());
        self.num(&format!("{key}_ny"), l.ny());
        self.num(&format!("{key}_d"), l.d());
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DemoError {
    #[error("unknown demo `{name}`; valid demos: {}", DEMOS.join(", "))]
    UnknownDemo { name: String },
    #[error("--angle must be in (0, 90] degrees, got {0}")]
    BadAngle(f64),
    #[error(transparent)]
    Construction(#[from] Error),
}

fn pt(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

/// Runs the demo called `name`. `angle_deg` is used by `trisect` only.
pub fn run_demo(name: &str, angle_deg: f64, tol: &Tolerance) -> Result<DemoOutput, DemoError> {
    let mut kv = Kv(Vec::new());
    let state = match name {
        "bisector" => {
            let c = perpendicular_bisector(pt(1.0, 2.0), pt(4.0, 6.0), tol)?;
            kv.line("crease", &c.value.0);
            kv.point("midpoint", c.value.1);
            c.state
        }
        "incenter" => {
            let t = Triangle::new(pt(0.0, 0.0), pt(4.0, 0.0), pt(0.0, 3.0), tol)?;
            let c = incenter(&t, tol)?;
            kv.point("incenter", c.value);
            let a = Line::through(t.a, t.b, tol)?;
            kv.num("inradius", a.distance(c.value));
            c.state
        }
        "euler" => {
            let t = Triangle::new(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 3.0), tol)?;
            let c = euler_check(&t, tol)?;
            let e = c.value;
            kv.point("circumcenter", e.circumcenter);
            kv.point("centroid", e.centroid);
            kv.point("orthocenter", e.orthocenter);
            kv.num("collinearity_residual", e.residual);
            kv.deg("ratio_GH_OG", e.ratio);
            c.state
        }
        "circle-line" => {
            let p = Line::new(1.0, 0.0, 0.5)?;
            let c = circle_line_intersection(pt(0.0, 0.0), pt(1.0, 0.0), &p, tol)?;
            kv.text("count", c.value.len());
            for (i, x) in c.value.iter().enumerate() {
                kv.point(&format!("point{i}"), *x);
            }
            c.state
        }
        "trisect" => {
            if !(angle_deg > 0.0 && angle_deg <= 90.0) {
                return Err(DemoError::BadAngle(angle_deg));
            }
            let theta = angle_deg.to_radians();
            let q = Line::new(0.0, 1.0, 0.0)?;
            let p = Line::through(Point::ORIGIN, pt(theta.cos(), theta.sin()), tol)?;
            let c = trisect_angle(&q, &p, Point::ORIGIN, 1.0, tol)?;
            let r = &c.value;
            let t1 = ray_difference(r.side_q, r.trisector1).to_degrees();
            let t2 = ray_difference(r.side_q, r.trisector2).to_degrees();
            kv.deg("theta_deg", r.theta.to_degrees());
            kv.deg("trisector1_deg", t1);
            kv.deg("trisector2_deg", t2);
            kv.point("a_prime", r.a_prime);
            kv.point("c", r.c);
            kv.line("crease", &r.crease);
            c.state
        }
        "double-cube" => {
            let c = double_cube(tol)?;
            let r = c.value;
            kv.num("t", r.t);
            kv.num("ratio", r.ratio);
            kv.num("ratio_cubed", r.ratio.powi(3));
            kv.point("a_prime", r.a_prime);
            kv.point("x_prime", r.x_prime);
            c.state
        }
        "heptagon" => {
            let c = heptagon(tol)?;
            for (i, s) in c.value.slopes.iter().enumerate() {
                kv.num(&format!("slope{i}"), *s);
            }
            kv.num("cos_2pi_7", c.value.cos);
            c.state
        }
        other => return Err(DemoError::UnknownDemo { name: other.to_string() }),
    };
    Ok(DemoOutput { values: kv.0, state })
}
