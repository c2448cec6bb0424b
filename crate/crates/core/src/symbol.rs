//! Rational symbols stored by zeros, poles and a scale factor.
//!
//! Storing roots rather than coefficients means factorisation never has to
//! re-factor polynomials; coefficients are derived on demand via
//! [`ComplexPolynomial`].

use crate::error::{Error, Result};
use crate::poly::ComplexPolynomial;
use num_complex::Complex64;

/// Relative tolerance below which a root counts as lying on the real axis.
pub const TAU_AXIS: f64 = 1e-9;

/// Number of sample points used for min-modulus estimates over the
/// compactified real line.
pub const ELLIPTICITY_SAMPLES: usize = 4096;

/// A scalar rational function `scale * prod (x - z_i) / prod (x - p_j)`.
///
/// Zeros and poles are multisets; common zero/pole pairs are cancelled on
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalSymbol {
    zeros: Vec<Complex64>,
    poles: Vec<Complex64>,
    scale: Complex64,
}

/// Half-plane classification of the zeros and poles of a rational symbol.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RootClassification {
    pub zeros_upper: Vec<Complex64>,
    pub zeros_lower: Vec<Complex64>,
    pub zeros_real: Vec<Complex64>,
    pub poles_upper: Vec<Complex64>,
    pub poles_lower: Vec<Complex64>,
    pub poles_real: Vec<Complex64>,
}

/// Result of the ellipticity test: the decision is exact (root
/// classification), the min-modulus is a sampled diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticityReport {
    pub elliptic: bool,
    pub min_modulus: f64,
}

fn on_axis(z: Complex64) -> bool {
    z.im.abs() <= TAU_AXIS * z.norm().max(1.0)
}

impl RationalSymbol {
    /// Builds a rational symbol from root multisets, cancelling common
    /// zero/pole pairs.
    pub fn new(zeros: Vec<Complex64>, poles: Vec<Complex64>, scale: Complex64) -> Result<Self> {
        if scale.norm() == 0.0 || !scale.is_finite() {
            return Err(Error::InvalidArgument(
                "scale must be finite and nonzero".into(),
            ));
        }
        let mut zs = zeros;
        let mut ps = poles;
        // cancel coincident zero/pole pairs
        let mut i = 0;
        'outer: while i < zs.len() {
            for j in 0..ps.len() {
                let tol = 1e-12 * zs[i].norm().max(1.0);
                if (zs[i] - ps[j]).norm() <= tol {
                    zs.swap_remove(i);
                    ps.swap_remove(j);
                    continue 'outer;
                }
            }
            i += 1;
        }
        Ok(Self {
            zeros: zs,
            poles: ps,
            scale,
        })
    }

    /// Builds a rational symbol from numerator and denominator coefficients
    /// (ascending degree), factoring both via companion-matrix roots.
    pub fn from_coeffs(num: &[Complex64], den: &[Complex64]) -> Result<Self> {
        let pn = ComplexPolynomial::new(num.to_vec());
        let pd = ComplexPolynomial::new(den.to_vec());
        if pn.is_zero() {
            return Err(Error::InvalidArgument("numerator is identically zero".into()));
        }
        if pd.is_zero() {
            return Err(Error::InvalidArgument("denominator is identically zero".into()));
        }
        let scale = pn.coeffs()[pn.degree()] / pd.coeffs()[pd.degree()];
        Self::new(pn.roots()?, pd.roots()?, scale)
    }

    /// The constant symbol `c`.
    pub fn constant(c: Complex64) -> Result<Self> {
        Self::new(Vec::new(), Vec::new(), c)
    }

    /// The distinguished symbol `r(x) = (x - i)/(x + i)`.
    pub fn r() -> Self {
        Self {
            zeros: vec![Complex64::new(0.0, 1.0)],
            poles: vec![Complex64::new(0.0, -1.0)],
            scale: Complex64::new(1.0, 0.0),
        }
    }

    /// Integer powers `r^k`; negative `k` swaps zeros and poles.
    pub fn r_pow(k: i64) -> Self {
        let up = Complex64::new(0.0, 1.0);
        let dn = Complex64::new(0.0, -1.0);
        let n = k.unsigned_abs() as usize;
        let (zeros, poles) = if k >= 0 {
            (vec![up; n], vec![dn; n])
        } else {
            (vec![dn; n], vec![up; n])
        };
        Self {
            zeros,
            poles,
            scale: Complex64::new(1.0, 0.0),
        }
    }

    /// `lambda_+(x) = x + i` (unbounded at infinity).
    pub fn lambda_plus() -> Self {
        Self {
            zeros: vec![Complex64::new(0.0, -1.0)],
            poles: Vec::new(),
            scale: Complex64::new(1.0, 0.0),
        }
    }

    /// `lambda_-(x) = x - i` (unbounded at infinity).
    pub fn lambda_minus() -> Self {
        Self {
            zeros: vec![Complex64::new(0.0, 1.0)],
            poles: Vec::new(),
            scale: Complex64::new(1.0, 0.0),
        }
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn poles(&self) -> &[Complex64] {
        &self.poles
    }

    pub fn scale(&self) -> Complex64 {
        self.scale
    }

    /// Reciprocal symbol `1/R`.
    pub fn reciprocal(&self) -> Self {
        Self {
            zeros: self.poles.clone(),
            poles: self.zeros.clone(),
            scale: Complex64::new(1.0, 0.0) / self.scale,
        }
    }

    /// Product of two rational symbols (common factors cancelled).
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut zeros = self.zeros.clone();
        zeros.extend_from_slice(&other.zeros);
        let mut poles = self.poles.clone();
        poles.extend_from_slice(&other.poles);
        Self::new(zeros, poles, self.scale * other.scale)
    }

    /// Scales the symbol by a nonzero constant.
    pub fn scaled(&self, c: Complex64) -> Result<Self> {
        Self::new(self.zeros.clone(), self.poles.clone(), self.scale * c)
    }

    /// Evaluates at a finite point. Fails on exact pole hits.
    pub fn eval(&self, x: Complex64) -> Result<Complex64> {
        for &p in &self.poles {
            if x == p {
                return Err(Error::PoleAtPoint(x));
            }
        }
        let mut acc = self.scale;
        // interleave zero and pole factors to avoid overflow for large |x|
        let n = self.zeros.len().max(self.poles.len());
        for i in 0..n {
            if let Some(&z) = self.zeros.get(i) {
                acc *= x - z;
            }
            if let Some(&p) = self.poles.get(i) {
                acc /= x - p;
            }
        }
        Ok(acc)
    }

    /// Limit at the point at infinity: zero when the denominator dominates,
    /// `scale` for equal degrees, an error otherwise.
    pub fn eval_at_infinity(&self) -> Result<Complex64> {
        use std::cmp::Ordering::*;
        match self.zeros.len().cmp(&self.poles.len()) {
            Less => Ok(Complex64::new(0.0, 0.0)),
            Equal => Ok(self.scale),
            Greater => Err(Error::UnboundedAtInfinity),
        }
    }

    /// Partitions zeros and poles into upper half-plane, lower half-plane and
    /// real-axis buckets. Points with |Im| below `TAU_AXIS` (relative to the
    /// root magnitude) land on the axis.
    pub fn classify_roots(&self) -> RootClassification {
        let mut out = RootClassification::default();
        for &z in &self.zeros {
            if on_axis(z) {
                out.zeros_real.push(z);
            } else if z.im > 0.0 {
                out.zeros_upper.push(z);
            } else {
                out.zeros_lower.push(z);
            }
        }
        for &p in &self.poles {
            if on_axis(p) {
                out.poles_real.push(p);
            } else if p.im > 0.0 {
                out.poles_upper.push(p);
            } else {
                out.poles_lower.push(p);
            }
        }
        out
    }

    /// True iff the symbol is bounded and bounded away from zero on the
    /// compactified real line: equal degrees and no real zeros or poles.
    pub fn is_elliptic(&self) -> EllipticityReport {
        let cls = self.classify_roots();
        let elliptic = self.zeros.len() == self.poles.len()
            && cls.zeros_real.is_empty()
            && cls.poles_real.is_empty();
        let mut min_modulus = f64::INFINITY;
        for i in 0..ELLIPTICITY_SAMPLES {
            let theta = -std::f64::consts::FRAC_PI_2
                + std::f64::consts::PI * (i as f64 + 0.5) / ELLIPTICITY_SAMPLES as f64;
            let x = Complex64::new(theta.tan(), 0.0);
            if let Ok(v) = self.eval(x) {
                min_modulus = min_modulus.min(v.norm());
            }
        }
        if let Ok(v) = self.eval_at_infinity() {
            min_modulus = min_modulus.min(v.norm());
        }
        EllipticityReport {
            elliptic,
            min_modulus,
        }
    }

    /// Winding number of the symbol around the origin: the difference between
    /// the number of zeros and the number of poles in the upper half-plane.
    pub fn winding_index(&self) -> Result<i64> {
        let rep = self.is_elliptic();
        if !rep.elliptic {
            return Err(Error::NotElliptic(
                "winding index requires equal degrees and no real roots".into(),
            ));
        }
        let cls = self.classify_roots();
        Ok(cls.zeros_upper.len() as i64 - cls.poles_upper.len() as i64)
    }

    /// Independent winding oracle: accumulated argument variation along the
    /// compactified real line on a fine tangent-mapped grid.
    pub fn winding_index_argvar(&self, samples: usize) -> Result<i64> {
        let rep = self.is_elliptic();
        if !rep.elliptic {
            return Err(Error::NotElliptic("argument variation requires ellipticity".into()));
        }
        let mut total = 0.0;
        let mut prev = self.eval_at_infinity()?;
        for i in 0..=samples {
            let theta = -std::f64::consts::FRAC_PI_2
                + std::f64::consts::PI * (i as f64 + 0.5) / (samples as f64 + 1.0);
            let v = self.eval(Complex64::new(theta.tan(), 0.0))?;
            total += (v / prev).arg();
            prev = v;
        }
        // close the curve back at infinity
        total += (self.eval_at_infinity()? / prev).arg();
        let w = total / (2.0 * std::f64::consts::PI);
        let rounded = w.round();
        if (w - rounded).abs() > 0.1 {
            return Err(Error::InvalidArgument(format!(
                "argument variation {w} is not close to an integer"
            )));
        }
        Ok(rounded as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// (x+2i)^2/(x^2+1), the running factorisation example.
    pub fn paper_example() -> RationalSymbol {
        RationalSymbol::new(
            vec![c(0.0, -2.0), c(0.0, -2.0)],
            vec![c(0.0, 1.0), c(0.0, -1.0)],
            c(1.0, 0.0),
        )
        .unwrap()
    }

    #[test]
    fn eval_r_at_zero() {
        let r = RationalSymbol::r();
        assert!((r.eval(c(0.0, 0.0)).unwrap() - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn eval_paper_example_at_infinity() {
        assert_eq!(paper_example().eval_at_infinity().unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn eval_lambda_plus_unbounded() {
        assert_eq!(
            RationalSymbol::lambda_plus().eval_at_infinity(),
            Err(Error::UnboundedAtInfinity)
        );
    }

    #[test]
    fn classify_paper_example() {
        let cls = paper_example().classify_roots();
        assert_eq!(cls.zeros_lower.len(), 2);
        assert!(cls.zeros_upper.is_empty() && cls.zeros_real.is_empty());
        assert_eq!(cls.poles_upper, vec![c(0.0, 1.0)]);
        assert_eq!(cls.poles_lower, vec![c(0.0, -1.0)]);
    }

    #[test]
    fn classify_from_coeffs() {
        // (x^2+4)/(x^2+1) via coefficient factoring
        let s = RationalSymbol::from_coeffs(
            &[c(4.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
            &[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        )
        .unwrap();
        let cls = s.classify_roots();
        assert_eq!(cls.zeros_upper.len(), 1);
        assert_eq!(cls.zeros_lower.len(), 1);
        assert!((cls.zeros_upper[0] - c(0.0, 2.0)).norm() < 1e-10);
        assert_eq!(cls.poles_upper.len(), 1);
        assert!((cls.poles_upper[0] - c(0.0, 1.0)).norm() < 1e-10);
    }

    #[test]
    fn winding_examples() {
        assert_eq!(paper_example().winding_index().unwrap(), -1);
        assert_eq!(RationalSymbol::r().winding_index().unwrap(), 1);
        let s = RationalSymbol::new(
            vec![c(0.0, 2.0), c(0.0, -2.0)],
            vec![c(0.0, 1.0), c(0.0, -1.0)],
            c(1.0, 0.0),
        )
        .unwrap();
        assert_eq!(s.winding_index().unwrap(), 0);
    }

    #[test]
    fn winding_r_pow_table() {
        for k in -5..=5 {
            assert_eq!(RationalSymbol::r_pow(k).winding_index().unwrap(), k);
            assert_eq!(
                RationalSymbol::r_pow(k).winding_index_argvar(20000).unwrap(),
                k
            );
        }
    }

    #[test]
    fn ellipticity_examples() {
        assert!(paper_example().is_elliptic().elliptic);
        let real_zero = RationalSymbol::new(
            vec![c(0.0, 0.0)],
            vec![c(0.0, -1.0)],
            c(1.0, 0.0),
        )
        .unwrap();
        assert!(!real_zero.is_elliptic().elliptic);
        let s = RationalSymbol::new(
            vec![c(0.0, 2.0), c(0.0, -2.0)],
            vec![c(0.0, 1.0), c(0.0, -1.0)],
            c(1.0, 0.0),
        )
        .unwrap();
        let rep = s.is_elliptic();
        assert!(rep.elliptic);
        assert!(rep.min_modulus > 0.9 && rep.min_modulus <= 1.0 + 1e-12);
    }

    #[test]
    fn classification_scale_invariant() {
        let s = paper_example();
        let t = s.scaled(c(-3.0, 4.0)).unwrap();
        assert_eq!(s.classify_roots(), t.classify_roots());
    }

    #[test]
    fn pole_hit_is_an_error() {
        let r = RationalSymbol::r();
        assert!(matches!(r.eval(c(0.0, -1.0)), Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn cancellation_on_construction() {
        let s = RationalSymbol::new(
            vec![c(0.0, 1.0), c(2.0, 3.0)],
            vec![c(2.0, 3.0), c(0.0, -1.0)],
            c(2.0, 0.0),
        )
        .unwrap();
        assert_eq!(s.zeros().len(), 1);
        assert_eq!(s.poles().len(), 1);
    }
}
