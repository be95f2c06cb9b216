//! Real roots of polynomials up to degree three.
//!
//! Closed forms (trigonometric for three real roots, Cardano otherwise) give
//! starting points; every root is then Newton-polished on the polynomial.
//! In the one-real-root branch the cubic is deflated and the remaining
//! quadratic is examined again, so a double root that rounding pushed just
//! past the discriminant boundary is still found.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Leading coefficients at or below this magnitude are treated as zero.
pub const EPS_LEADING: f64 = 1e-12;

/// Roots closer than this are reported once, with multiplicity.
pub const MERGE_SPACING: f64 = 1e-8;

/// `c3·t³ + c2·t² + c1·t + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cubic {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl Cubic {
    pub fn new(c3: f64, c2: f64, c1: f64, c0: f64) -> Self {
        Self { c3, c2, c1, c0 }
    }

    /// `t³ + a·t² + b·t + c`.
    pub fn monic(a: f64, b: f64, c: f64) -> Self {
        Self::new(1.0, a, b, c)
    }

    #[inline]
    pub fn eval(&self, t: f64) -> f64 {
        ((self.c3 * t + self.c2) * t + self.c1) * t + self.c0
    }

    #[inline]
    pub fn derivative(&self, t: f64) -> f64 {
        (3.0 * self.c3 * t + 2.0 * self.c2) * t + self.c1
    }

    /// The polynomial in `s` obtained by substituting `t = s + k`.
    pub fn shifted(&self, k: f64) -> Self {
        let Cubic { c3, c2, c1, .. } = *self;
        Self {
            c3,
            c2: 3.0 * c3 * k + c2,
            c1: (3.0 * c3 * k + 2.0 * c2) * k + c1,
            c0: self.eval(k),
        }
    }

    pub fn degree(&self) -> Option<u8> {
        if self.c3.abs() > EPS_LEADING {
            Some(3)
        } else if self.c2.abs() > EPS_LEADING {
            Some(2)
        } else if self.c1.abs() > EPS_LEADING {
            Some(1)
        } else if self.c0.abs() > EPS_LEADING {
            Some(0)
        } else {
            None
        }
    }
}

/// A real root and how many nearby roots were merged into it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    pub multiplicity: u8,
}

/// All real roots in ascending order.
///
/// Degrades to the quadratic or linear formula when the leading
/// coefficients vanish. A nonzero constant yields no roots.
pub fn solve_cubic_real(c: &Cubic) -> Result<Vec<Root>> {
    if !(c.c3.is_finite() && c.c2.is_finite() && c.c1.is_finite() && c.c0.is_finite()) {
        return Err(Error::NonFinite);
    }
    let candidates = match c.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => Vec::new(),
        Some(1) => vec![-c.c0 / c.c1],
        Some(2) => quadratic_roots(c.c2, c.c1, c.c0)
            .into_iter()
            .map(|t| polish(c, t))
            .collect(),
        Some(_) => monic_roots(c.c2 / c.c3, c.c1 / c.c3, c.c0 / c.c3),
    };
    Ok(merge(candidates))
}

/// Real roots of `a·t² + b·t + c` with `a != 0`, computed without
/// cancellation. A slightly negative discriminant is not rounded up here.
fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Vec::new();
    }
    if disc == 0.0 {
        let r = -b / (2.0 * a);
        return vec![r, r];
    }
    let q = -0.5 * (b + disc.sqrt().copysign(b));
    let r1 = q / a;
    let r2 = if q != 0.0 { c / q } else { -r1 };
    vec![r1, r2]
}

fn monic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let poly = Cubic::monic(a, b, c);
    let shift = a / 3.0;
    // Depressed form x³ + p·x + q with t = x - a/3.
    let p = b - a * shift;
    let q = (2.0 * shift * shift - b) * shift + c;

    if p == 0.0 && q == 0.0 {
        return vec![-shift; 3];
    }

    let half_q = 0.5 * q;
    let third_p = p / 3.0;
    let disc = half_q * half_q + third_p * third_p * third_p;

    if disc < 0.0 {
        let r = 2.0 * (-third_p).sqrt();
        let cos_arg = (-half_q / (-third_p).powf(1.5)).clamp(-1.0, 1.0);
        let phi = cos_arg.acos();
        return (0..3)
            .map(|k| {
                let x = r * ((phi - TAU * k as f64) / 3.0).cos();
                polish(&poly, x - shift)
            })
            .collect();
    }

    let u = (-half_q - disc.sqrt().copysign(half_q)).cbrt();
    let x = if u != 0.0 { u - third_p / u } else { 0.0 };
    let t0 = polish(&poly, x - shift);

    let mut roots = vec![t0];
    // Deflate by (t - t0): t² + B t + C.
    let big_b = a + t0;
    let big_c = b + t0 * big_b;
    let disc2 = big_b * big_b - 4.0 * big_c;
    let scale = 1.0 + big_b * big_b + big_c.abs();
    if disc2 >= 0.0 {
        roots.extend(
            quadratic_roots(1.0, big_b, big_c)
                .into_iter()
                .map(|t| polish(&poly, t)),
        );
    } else if disc2 > -1e-9 * scale {
        // Possibly a double root lost to rounding; keep it only if it
        // actually annihilates the cubic.
        let t = polish(&poly, -0.5 * big_b);
        if poly.eval(t).abs() <= residual_bound(t) {
            roots.push(t);
            roots.push(t);
        }
    }
    roots
}

/// Acceptance bound on `|poly(t)|` for a monic cubic.
pub fn residual_bound(t: f64) -> f64 {
    1e-12 * t.abs().powi(3).max(1.0)
}

/// Newton iteration that only accepts steps reducing `|poly|`.
pub(crate) fn polish(poly: &Cubic, mut t: f64) -> f64 {
    let mut f = poly.eval(t);
    for _ in 0..64 {
        if f == 0.0 {
            break;
        }
        let df = poly.derivative(t);
        if df == 0.0 || !df.is_finite() {
            break;
        }
        let next = t - f / df;
        let f_next = poly.eval(next);
        if !(f_next.abs() < f.abs()) {
            break;
        }
        t = next;
        f = f_next;
    }
    t
}

fn merge(mut values: Vec<f64>) -> Vec<Root> {
    values.sort_by(f64::total_cmp);
    let mut out: Vec<(f64, u8)> = Vec::with_capacity(values.len());
    for v in values {
        match out.last_mut() {
            Some((sum, count)) if (v - *sum / *count as f64).abs() <= MERGE_SPACING => {
                *sum += v;
                *count += 1;
            }
            _ => out.push((v, 1)),
        }
    }
    out.into_iter()
        .map(|(sum, count)| Root {
            value: sum / count as f64,
            multiplicity: count,
        })
        .collect()
}

/// Convenience: root values only.
pub fn real_root_values(c: &Cubic) -> Result<Vec<f64>> {
    Ok(solve_cubic_real(c)?.into_iter().map(|r| r.value).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn values(c: Cubic) -> Vec<f64> {
        real_root_values(&c).unwrap()
    }

    /// Plain bisection on a bracket known to contain a sign change.
    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        let flo = f(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == (flo > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn cube_root_of_two() {
        let oracle = bisect(|t| t * t * t - 2.0, 1.0, 2.0);
        let r = values(Cubic::monic(0.0, 0.0, -2.0));
        assert_eq!(r.len(), 1);
        assert!((r[0] - oracle).abs() < 1e-15);
        assert!((r[0] - 1.259_921_049_894_873).abs() < 1e-15);
    }

    #[test]
    fn factored_roots() {
        assert_eq!(values(Cubic::monic(0.0, -1.0, 0.0)), vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn heptagon_cubic() {
        let r = values(Cubic::monic(1.0, -2.0, -1.0));
        let mut oracle: Vec<f64> = (1..=3)
            .map(|k| 2.0 * (TAU * k as f64 / 7.0).cos())
            .collect();
        oracle.sort_by(f64::total_cmp);
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip(&oracle) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
        assert!((r[0] + 1.801_937_7).abs() < 1e-7);
        assert!((r[1] + 0.445_041_9).abs() < 1e-7);
        assert!((r[2] - 1.246_979_6).abs() < 1e-7);
    }

    #[test]
    fn double_and_triple_roots() {
        // (t-1)²(t+2)
        let r = solve_cubic_real(&Cubic::monic(0.0, -3.0, 2.0)).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].value + 2.0).abs() < 1e-12 && r[0].multiplicity == 1);
        assert!((r[1].value - 1.0).abs() < 1e-8 && r[1].multiplicity == 2);

        // (t-0.5)³ is exact in binary.
        let r = solve_cubic_real(&Cubic::monic(-1.5, 0.75, -0.125)).unwrap();
        assert_eq!(r, vec![Root { value: 0.5, multiplicity: 3 }]);

        // (t-0.3)³ is not; a triple root is only determined to ~cbrt(ε).
        let r = solve_cubic_real(&Cubic::monic(-0.9, 0.27, -0.027)).unwrap();
        assert!(!r.is_empty());
        assert!(r.iter().all(|x| (x.value - 0.3).abs() < 1e-4), "{r:?}");

        // (t-1/3)²(t-5): 1/3 is not representable, so rounding decides the branch.
        let r = solve_cubic_real(&Cubic::monic(-5.0 - 2.0 / 3.0, 10.0 / 3.0 + 1.0 / 9.0, -5.0 / 9.0))
            .unwrap();
        let near_third = r.iter().find(|x| (x.value - 1.0 / 3.0).abs() < 1e-6);
        assert!(near_third.is_some(), "{r:?}");
    }

    #[test]
    fn degree_degrades() {
        assert_eq!(values(Cubic::new(0.0, 1.0, 0.0, -4.0)), vec![-2.0, 2.0]);
        assert_eq!(values(Cubic::new(1e-14, 0.0, 2.0, -1.0)), vec![0.5]);
        assert!(values(Cubic::new(0.0, 1.0, 0.0, 1.0)).is_empty());
        assert!(values(Cubic::new(0.0, 0.0, 0.0, 3.0)).is_empty());
        assert_eq!(
            solve_cubic_real(&Cubic::new(0.0, 1e-13, 0.0, 0.0)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn shift_substitution() {
        let c = Cubic::monic(0.0, -1.0, 0.0);
        let s = c.shifted(2.0);
        for t in [-1.5, 0.25, 3.0] {
            assert!((s.eval(t) - c.eval(t + 2.0)).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn roots_are_polished_and_sorted(a in -10.0..10.0f64, b in -10.0..10.0f64, c in -10.0..10.0f64) {
            let poly = Cubic::monic(a, b, c);
            let roots = values(poly);
            prop_assert!(!roots.is_empty());
            prop_assert!(roots.windows(2).all(|w| w[0] < w[1]));
            for t in &roots {
                // Merged roots are averages, so allow the bound with some slack there.
                prop_assert!(poly.eval(*t).abs() < residual_bound(*t) * 10.0, "t={t} res={}", poly.eval(*t));
            }
        }

        #[test]
        fn recovers_planted_roots(r1 in -5.0..5.0f64, r2 in -5.0..5.0f64, r3 in -5.0..5.0f64) {
            let mut planted = [r1, r2, r3];
            planted.sort_by(f64::total_cmp);
            prop_assume!(planted[1] - planted[0] > 1e-3 && planted[2] - planted[1] > 1e-3);
            let a = -(r1 + r2 + r3);
            let b = r1 * r2 + r1 * r3 + r2 * r3;
            let c = -r1 * r2 * r3;
            let roots = values(Cubic::monic(a, b, c));
            prop_assert_eq!(roots.len(), 3);
            for (got, want) in roots.iter().zip(&planted) {
                prop_assert!((got - want).abs() < 1e-9);
            }
        }
    }
}
