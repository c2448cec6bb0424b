//! Complex polynomials: construction from roots or coefficients, Horner
//! evaluation, and root finding via companion-matrix eigenvalues with a
//! Newton polish step.

use crate::error::{Error, Result};
use ndarray::Array2;
use ndarray_linalg::Eig;
use num_complex::Complex64;

/// A polynomial over the complex numbers, stored by ascending-degree
/// coefficients. The zero polynomial is a distinct tagged value; otherwise
/// the leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    /// Builds a polynomial from coefficients, trimming trailing (near-)zero
    /// leading terms. An all-zero list yields the zero polynomial.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.norm() == 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            // multiply by (x - r)
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= r * c;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].norm() == 0.0
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> ComplexPolynomial {
        if self.degree() == 0 {
            return ComplexPolynomial::new(vec![Complex64::new(0.0, 0.0)]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        ComplexPolynomial::new(coeffs)
    }

    /// All roots, by companion-matrix eigenvalues followed by one Newton
    /// polish step. Robust for the moderate degrees used for symbols.
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        if self.is_zero() {
            return Err(Error::InvalidArgument(
                "zero polynomial has no well-defined roots".into(),
            ));
        }
        let n = self.degree();
        if n == 0 {
            return Ok(Vec::new());
        }
        let lead = self.coeffs[n];
        if n == 1 {
            return Ok(vec![-self.coeffs[0] / lead]);
        }
        // companion matrix of the monic polynomial
        let mut m = Array2::<Complex64>::zeros((n, n));
        for i in 1..n {
            m[(i, i - 1)] = Complex64::new(1.0, 0.0);
        }
        for i in 0..n {
            m[(i, n - 1)] = -self.coeffs[i] / lead;
        }
        let (eigs, _) = m
            .eig()
            .map_err(|e| Error::InvalidArgument(format!("eigenvalue solver failed: {e}")))?;
        let deriv = self.derivative();
        let polished = eigs
            .iter()
            .map(|&z| {
                let dp = deriv.eval(z);
                if dp.norm() > 0.0 {
                    let step = self.eval(z) / dp;
                    if step.norm().is_finite() {
                        return z - step;
                    }
                }
                z
            })
            .collect();
        Ok(polished)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn from_roots_and_eval() {
        // (x - 1)(x + 2) = x^2 + x - 2
        let p = ComplexPolynomial::from_roots(&[c(1.0, 0.0), c(-2.0, 0.0)]);
        assert_eq!(p.coeffs(), &[c(-2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(p.eval(c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn roots_of_x2_plus_4() {
        let p = ComplexPolynomial::new(vec![c(4.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let mut roots = p.roots().unwrap();
        roots.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((roots[0] - c(0.0, -2.0)).norm() < 1e-12);
        assert!((roots[1] - c(0.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn roots_complex_coefficients() {
        // (x - i)(x - (2+i)) expanded
        let r1 = c(0.0, 1.0);
        let r2 = c(2.0, 1.0);
        let p = ComplexPolynomial::from_roots(&[r1, r2]);
        let mut roots = p.roots().unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((roots[0] - r1).norm() < 1e-12);
        assert!((roots[1] - r2).norm() < 1e-12);
    }

    #[test]
    fn zero_polynomial_tagged() {
        let p = ComplexPolynomial::new(vec![c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(p.is_zero());
        assert!(p.roots().is_err());
    }
}
