//! Piecewise-continuous symbols on the compactified real line: a continuous
//! base function plus finitely many jump points with one-sided limits.
//!
//! At infinity the swap convention holds: `g(inf^-) = g(+inf)` and
//! `g(inf^+) = g(-inf)`, so the compactified line is traversed as a circle.

use crate::error::{Error, Result};
use crate::symbol::RationalSymbol;
use num_complex::Complex64;
use std::f64::consts::PI;

/// A point of the compactified real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Location {
    Finite(f64),
    Infinity,
}

/// Which one-sided limit to take when evaluating at a jump.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A discontinuity with its one-sided limits. At `Infinity` the left limit
/// is the limit at `+inf` and the right limit the limit at `-inf`.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpPoint {
    pub location: Location,
    pub left: Complex64,
    pub right: Complex64,
}

/// Closed-form base functions used by the structured symbol families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedForm {
    /// sign(x)
    Sign,
    /// tanh(pi x)
    TanhPi,
    /// The jump symbol with exponent alpha and branch point at infinity:
    /// exp(i alpha (pi - 2 atan x)); tends to 1 at +inf and to
    /// exp(2 pi i alpha) at -inf.
    JumpPowerInf { alpha: Complex64 },
}

/// Evaluable handle for the continuous part of a [`PCSymbol`].
#[derive(Debug, Clone, PartialEq)]
pub enum BaseFunction {
    Rational(RationalSymbol),
    /// scale * form(x) + offset
    Named {
        form: NamedForm,
        scale: Complex64,
        offset: Complex64,
    },
    /// Dense sample table with linear interpolation; constant beyond the ends.
    Sampled {
        xs: Vec<f64>,
        values: Vec<Complex64>,
    },
}

impl BaseFunction {
    fn named_value(form: NamedForm, x: f64) -> Complex64 {
        match form {
            NamedForm::Sign => Complex64::new(x.signum(), 0.0),
            NamedForm::TanhPi => Complex64::new((PI * x).tanh(), 0.0),
            NamedForm::JumpPowerInf { alpha } => {
                let phi = PI - 2.0 * x.atan();
                (alpha * Complex64::new(0.0, phi)).exp()
            }
        }
    }

    /// Value at a finite real point (away from discontinuities of the form).
    pub fn value(&self, x: f64) -> Result<Complex64> {
        match self {
            BaseFunction::Rational(r) => r.eval(Complex64::new(x, 0.0)),
            BaseFunction::Named {
                form,
                scale,
                offset,
            } => Ok(scale * Self::named_value(*form, x) + offset),
            BaseFunction::Sampled { xs, values } => {
                if xs.is_empty() {
                    return Err(Error::InvalidArgument("empty sample table".into()));
                }
                if x <= xs[0] {
                    return Ok(values[0]);
                }
                if x >= *xs.last().unwrap() {
                    return Ok(*values.last().unwrap());
                }
                let idx = xs.partition_point(|&t| t <= x);
                let (x0, x1) = (xs[idx - 1], xs[idx]);
                let (v0, v1) = (values[idx - 1], values[idx]);
                let w = (x - x0) / (x1 - x0);
                Ok(v0 + (v1 - v0) * w)
            }
        }
    }

    /// Limit as x -> +inf.
    pub fn limit_plus(&self) -> Result<Complex64> {
        match self {
            BaseFunction::Rational(r) => r.eval_at_infinity(),
            BaseFunction::Named {
                form,
                scale,
                offset,
            } => {
                let v = match form {
                    NamedForm::Sign | NamedForm::TanhPi => Complex64::new(1.0, 0.0),
                    NamedForm::JumpPowerInf { .. } => Complex64::new(1.0, 0.0),
                };
                Ok(scale * v + offset)
            }
            BaseFunction::Sampled { values, .. } => values
                .last()
                .copied()
                .ok_or_else(|| Error::InvalidArgument("empty sample table".into())),
        }
    }

    /// Limit as x -> -inf.
    pub fn limit_minus(&self) -> Result<Complex64> {
        match self {
            BaseFunction::Rational(r) => r.eval_at_infinity(),
            BaseFunction::Named {
                form,
                scale,
                offset,
            } => {
                let v = match form {
                    NamedForm::Sign | NamedForm::TanhPi => Complex64::new(-1.0, 0.0),
                    NamedForm::JumpPowerInf { alpha } => {
                        (alpha * Complex64::new(0.0, 2.0 * PI)).exp()
                    }
                };
                Ok(scale * v + offset)
            }
            BaseFunction::Sampled { values, .. } => values
                .first()
                .copied()
                .ok_or_else(|| Error::InvalidArgument("empty sample table".into())),
        }
    }
}

/// A piecewise-continuous symbol: continuous base plus sorted jump points.
#[derive(Debug, Clone, PartialEq)]
pub struct PCSymbol {
    base: BaseFunction,
    jumps: Vec<JumpPoint>,
}

fn push_jump(jumps: &mut Vec<JumpPoint>, location: Location, left: Complex64, right: Complex64) {
    if (left - right).norm() > 0.0 {
        jumps.push(JumpPoint {
            location,
            left,
            right,
        });
    }
}

impl PCSymbol {
    /// Generic constructor. Jump locations must be pairwise distinct, with
    /// finite and distinct one-sided limits.
    pub fn new(base: BaseFunction, mut jumps: Vec<JumpPoint>) -> Result<Self> {
        for j in &jumps {
            if (j.left - j.right).norm() == 0.0 {
                return Err(Error::InvalidArgument(
                    "jump with equal one-sided limits".into(),
                ));
            }
            if !j.left.is_finite() || !j.right.is_finite() {
                return Err(Error::InvalidArgument("jump limits must be finite".into()));
            }
        }
        jumps.sort_by(|a, b| match (a.location, b.location) {
            (Location::Finite(x), Location::Finite(y)) => x.partial_cmp(&y).unwrap(),
            (Location::Finite(_), Location::Infinity) => std::cmp::Ordering::Less,
            (Location::Infinity, Location::Finite(_)) => std::cmp::Ordering::Greater,
            (Location::Infinity, Location::Infinity) => std::cmp::Ordering::Equal,
        });
        for w in jumps.windows(2) {
            if w[0].location == w[1].location {
                return Err(Error::InvalidArgument("duplicate jump locations".into()));
            }
        }
        Ok(Self { base, jumps })
    }

    /// A continuous symbol from a bounded rational function (no jumps).
    pub fn from_rational(r: RationalSymbol) -> Result<Self> {
        let cls = r.classify_roots();
        if !cls.poles_real.is_empty() {
            return Err(Error::InvalidArgument(
                "rational base with real poles is unbounded".into(),
            ));
        }
        r.eval_at_infinity()?;
        Self::new(BaseFunction::Rational(r), Vec::new())
    }

    /// `scale * sign(x) + offset`, with its jumps at 0 and infinity.
    pub fn sign_affine(scale: Complex64, offset: Complex64) -> Result<Self> {
        let base = BaseFunction::Named {
            form: NamedForm::Sign,
            scale,
            offset,
        };
        let mut jumps = Vec::new();
        push_jump(&mut jumps, Location::Finite(0.0), -scale + offset, scale + offset);
        push_jump(&mut jumps, Location::Infinity, scale + offset, -scale + offset);
        Self::new(base, jumps)
    }

    /// The paper's half-line scan symbol `-(sign x + lambda)`.
    pub fn sign_lambda(lambda: Complex64) -> Result<Self> {
        Self::sign_affine(Complex64::new(-1.0, 0.0), -lambda)
    }

    /// `scale * tanh(pi x) + offset`, continuous on the line with a jump at
    /// infinity.
    pub fn tanh_affine(scale: Complex64, offset: Complex64) -> Result<Self> {
        let base = BaseFunction::Named {
            form: NamedForm::TanhPi,
            scale,
            offset,
        };
        let mut jumps = Vec::new();
        push_jump(&mut jumps, Location::Infinity, scale + offset, -scale + offset);
        Self::new(base, jumps)
    }

    /// The jump-power symbol with exponent alpha and discontinuity at
    /// infinity: tends to 1 at +inf and exp(2 pi i alpha) at -inf.
    pub fn jump_power(alpha: Complex64) -> Result<Self> {
        let base = BaseFunction::Named {
            form: NamedForm::JumpPowerInf { alpha },
            scale: Complex64::new(1.0, 0.0),
            offset: Complex64::new(0.0, 0.0),
        };
        let mut jumps = Vec::new();
        push_jump(
            &mut jumps,
            Location::Infinity,
            Complex64::new(1.0, 0.0),
            (alpha * Complex64::new(0.0, 2.0 * PI)).exp(),
        );
        Self::new(base, jumps)
    }

    /// A symbol given by a dense sample table (linear interpolation).
    pub fn from_samples(xs: Vec<f64>, values: Vec<Complex64>) -> Result<Self> {
        if xs.len() != values.len() || xs.is_empty() {
            return Err(Error::InvalidArgument(
                "sample table must be nonempty with matching lengths".into(),
            ));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("sample abscissae must increase".into()));
        }
        Self::new(BaseFunction::Sampled { xs, values }, Vec::new())
    }

    pub fn base(&self) -> &BaseFunction {
        &self.base
    }

    pub fn jumps(&self) -> &[JumpPoint] {
        &self.jumps
    }

    fn jump_at(&self, loc: Location) -> Option<&JumpPoint> {
        self.jumps.iter().find(|j| match (j.location, loc) {
            (Location::Finite(a), Location::Finite(b)) => a == b,
            (Location::Infinity, Location::Infinity) => true,
            _ => false,
        })
    }

    /// One-sided limits `(g(c^-), g(c^+))`. At non-jump points both equal the
    /// base value; at infinity the swap convention applies.
    pub fn one_sided_limits(&self, c: Location) -> Result<(Complex64, Complex64)> {
        if let Some(j) = self.jump_at(c) {
            return Ok((j.left, j.right));
        }
        match c {
            Location::Finite(x) => {
                let v = self.base.value(x)?;
                Ok((v, v))
            }
            Location::Infinity => Ok((self.base.limit_plus()?, self.base.limit_minus()?)),
        }
    }

    /// Evaluates the symbol; a side is required exactly at jump locations.
    pub fn eval(&self, x: f64, side: Option<Side>) -> Result<Complex64> {
        if let Some(j) = self.jump_at(Location::Finite(x)) {
            return match side {
                Some(Side::Left) => Ok(j.left),
                Some(Side::Right) => Ok(j.right),
                None => Err(Error::JumpWithoutSide(x)),
            };
        }
        self.base.value(x)
    }

    /// Pointwise reciprocal for the structured families that stay in the
    /// family. Fails when the base may vanish or cannot be inverted in
    /// closed form.
    pub fn reciprocal(&self) -> Result<PCSymbol> {
        let one = Complex64::new(1.0, 0.0);
        let base = match &self.base {
            BaseFunction::Rational(r) => {
                let cls = r.classify_roots();
                if !cls.zeros_real.is_empty() {
                    return Err(Error::NotInvertibleSymbol(
                        "rational base has a real zero".into(),
                    ));
                }
                if r.zeros().len() > r.poles().len() {
                    return Err(Error::NotInvertibleSymbol(
                        "reciprocal would be unbounded at infinity".into(),
                    ));
                }
                if r.zeros().len() < r.poles().len() {
                    return Err(Error::NotInvertibleSymbol(
                        "base vanishes at infinity".into(),
                    ));
                }
                BaseFunction::Rational(r.reciprocal())
            }
            BaseFunction::Named {
                form: NamedForm::Sign,
                scale,
                offset,
            } => {
                let cp = scale + offset;
                let cm = offset - scale;
                if cp.norm() == 0.0 || cm.norm() == 0.0 {
                    return Err(Error::NotInvertibleSymbol("sign base takes the value 0".into()));
                }
                let rp = one / cp;
                let rm = one / cm;
                BaseFunction::Named {
                    form: NamedForm::Sign,
                    scale: (rp - rm) / 2.0,
                    offset: (rp + rm) / 2.0,
                }
            }
            BaseFunction::Named {
                form: NamedForm::JumpPowerInf { alpha },
                scale,
                offset,
            } => {
                if scale != &one || offset.norm() != 0.0 {
                    return Err(Error::NotInvertibleSymbol(
                        "affine jump-power base has no closed-form reciprocal".into(),
                    ));
                }
                BaseFunction::Named {
                    form: NamedForm::JumpPowerInf { alpha: -alpha },
                    scale: one,
                    offset: Complex64::new(0.0, 0.0),
                }
            }
            BaseFunction::Named {
                form: NamedForm::TanhPi,
                ..
            } => {
                return Err(Error::NotInvertibleSymbol(
                    "tanh base has no closed-form reciprocal in the family".into(),
                ))
            }
            BaseFunction::Sampled { xs, values } => {
                if values.iter().any(|v| v.norm() == 0.0) {
                    return Err(Error::NotInvertibleSymbol("sampled base vanishes".into()));
                }
                BaseFunction::Sampled {
                    xs: xs.clone(),
                    values: values.iter().map(|v| one / v).collect(),
                }
            }
        };
        let mut jumps = Vec::with_capacity(self.jumps.len());
        for j in &self.jumps {
            if j.left.norm() == 0.0 || j.right.norm() == 0.0 {
                return Err(Error::NotInvertibleSymbol("one-sided limit is zero".into()));
            }
            jumps.push(JumpPoint {
                location: j.location,
                left: one / j.left,
                right: one / j.right,
            });
        }
        PCSymbol::new(base, jumps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sign_lambda_eval() {
        // -(sign x + 2) at x = 3 is -3
        let g = PCSymbol::sign_lambda(c(2.0, 0.0)).unwrap();
        assert_eq!(g.eval(3.0, None).unwrap(), c(-3.0, 0.0));
        assert_eq!(g.eval(-3.0, None).unwrap(), c(-1.0, 0.0));
        assert!(matches!(g.eval(0.0, None), Err(Error::JumpWithoutSide(_))));
        assert_eq!(g.eval(0.0, Some(Side::Left)).unwrap(), c(-1.0, 0.0));
        assert_eq!(g.eval(0.0, Some(Side::Right)).unwrap(), c(-3.0, 0.0));
    }

    #[test]
    fn sign_limits_at_zero() {
        let g = PCSymbol::sign_affine(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let (l, r) = g.one_sided_limits(Location::Finite(0.0)).unwrap();
        assert_eq!((l, r), (c(-1.0, 0.0), c(1.0, 0.0)));
    }

    #[test]
    fn jump_power_limits_at_infinity() {
        // alpha = 1/4: (g(inf^-), g(inf^+)) = (1, e^{i pi/2})
        let g = PCSymbol::jump_power(c(0.25, 0.0)).unwrap();
        let (l, r) = g.one_sided_limits(Location::Infinity).unwrap();
        assert!((l - c(1.0, 0.0)).norm() < 1e-15);
        assert!((r - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn continuous_base_limits_agree() {
        let r = RationalSymbol::new(
            vec![c(0.0, 2.0), c(0.0, -2.0)],
            vec![c(0.0, 1.0), c(0.0, -1.0)],
            c(1.0, 0.0),
        )
        .unwrap();
        let g = PCSymbol::from_rational(r).unwrap();
        let (l, rr) = g.one_sided_limits(Location::Finite(1.5)).unwrap();
        assert_eq!(l, rr);
        let (li, ri) = g.one_sided_limits(Location::Infinity).unwrap();
        assert_eq!(li, ri);
    }

    #[test]
    fn jump_power_base_continuous_on_line() {
        let g = PCSymbol::jump_power(c(0.25, 0.0)).unwrap();
        // unit modulus on the real line for real alpha
        for &x in &[-10.0, -1.0, 0.0, 1.0, 10.0] {
            let v = g.eval(x, None).unwrap();
            assert!((v.norm() - 1.0).abs() < 1e-14);
        }
        // value at 0 is e^{i alpha pi}
        let v0 = g.eval(0.0, None).unwrap();
        assert!((v0 - (c(0.0, PI * 0.25)).exp()).norm() < 1e-14);
    }

    #[test]
    fn reciprocal_of_sign_family() {
        let g = PCSymbol::sign_lambda(c(2.0, 0.0)).unwrap();
        let gi = g.reciprocal().unwrap();
        for &x in &[-5.0, -0.5, 0.7, 9.0] {
            let a = g.eval(x, None).unwrap();
            let b = gi.eval(x, None).unwrap();
            assert!((a * b - c(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn reciprocal_rejects_vanishing() {
        // -(sign x + 1) hits zero on x < 0
        let g = PCSymbol::sign_lambda(c(1.0, 0.0)).unwrap();
        assert!(g.reciprocal().is_err());
    }

    #[test]
    fn sampled_interpolation() {
        let g = PCSymbol::from_samples(
            vec![-1.0, 0.0, 1.0],
            vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)],
        )
        .unwrap();
        assert_eq!(g.eval(0.5, None).unwrap(), c(1.5, 0.0));
        assert_eq!(g.eval(5.0, None).unwrap(), c(2.0, 0.0));
    }
}
