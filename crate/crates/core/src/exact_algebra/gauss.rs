//! Quadratic Gauss sums and their reciprocity.

use num_complex::Complex64;

use super::int_matrix::IntMatrix;
use super::normal_form::coset_reps;
use super::phase::exp_i_pi;
use super::rational::{dot, int, RatMatrix};
use super::signature::signature;
use super::Rational;
use crate::error::{Error, Result};

/// Evaluates both sides of the reciprocity formula
///
/// ```text
/// Σ_{q ∈ (ℤ/a)^g} e^{(πi/a) qᵀQq + 2πi wᵀq}
///   = |a^g / det Q|^{1/2} e^{(πi/4) sgn Q} Σ_{m ∈ ℤ^g/Qℤ^g} e^{−πi a (m+w)ᵀQ⁻¹(m+w)}
/// ```
///
/// and returns `(lhs, rhs)`.
pub fn gauss_reciprocity_check(
    q: &IntMatrix,
    a: i64,
    w: &[Rational],
) -> Result<(Complex64, Complex64)> {
    if !q.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let g = q.rows();
    if w.len() != g {
        return Err(Error::DimensionMismatch(format!("w has length {}, expected {g}", w.len())));
    }
    if a <= 0 || a % 2 != 0 {
        return Err(Error::OddModulus(a));
    }
    if w.iter().any(|x| !(x * int(a)).is_integer()) {
        return Err(Error::DimensionMismatch("a·w must be integral".into()));
    }
    let det = q.det()?;
    if det == 0 {
        return Err(Error::SingularMatrix);
    }
    let qr = RatMatrix::from(q);

    let mut lhs = Complex64::new(0.0, 0.0);
    let mut v = vec![0i64; g];
    loop {
        let vr: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
        let t = qr.quadratic(&vr) / int(a) + int(2) * dot(w, &vr);
        lhs += exp_i_pi(t);
        if !odometer(&mut v, a) {
            break;
        }
    }

    let qinv = qr.inverse()?;
    let mut sum = Complex64::new(0.0, 0.0);
    for m in coset_reps(q)? {
        let mw: Vec<Rational> = m.iter().zip(w).map(|(&x, y)| int(x) + y).collect();
        sum += exp_i_pi(-int(a) * qinv.quadratic(&mw));
    }
    let sgn = signature(&qr)?.value();
    let scale = ((a as f64).powi(g as i32) / det.abs() as f64).sqrt();
    let rhs = sum * exp_i_pi(Rational::new(sgn as i128, 4)) * scale;
    Ok((lhs, rhs))
}

/// Advances `v` through `[0, m)^n`, last coordinate fastest; `false` on wrap.
pub(crate) fn odometer(v: &mut [i64], m: i64) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x < m {
            return true;
        }
        *x = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn scalar_examples() {
        let zero = [Rational::from_integer(0)];
        let (l, r) = gauss_reciprocity_check(&IntMatrix::diag(&[2]), 2, &zero).unwrap();
        assert!(close(l, Complex64::new(0.0, 0.0)) && close(r, Complex64::new(0.0, 0.0)));
        let (l, r) = gauss_reciprocity_check(&IntMatrix::diag(&[1]), 2, &zero).unwrap();
        assert!(close(l, Complex64::new(1.0, 1.0)));
        assert!(close(r, Complex64::new(1.0, 1.0)));
    }

    #[test]
    fn product_structure() {
        let w = vec![Rational::from_integer(0); 2];
        let (l, r) = gauss_reciprocity_check(&IntMatrix::identity(2), 2, &w).unwrap();
        let expect = Complex64::new(1.0, 1.0) * Complex64::new(1.0, 1.0);
        assert!(close(l, expect) && close(r, expect));
    }

    #[test]
    fn input_validation() {
        let w = [Rational::from_integer(0)];
        assert_eq!(gauss_reciprocity_check(&IntMatrix::diag(&[1]), 3, &w), Err(Error::OddModulus(3)));
        assert_eq!(gauss_reciprocity_check(&IntMatrix::diag(&[0]), 2, &w), Err(Error::SingularMatrix));
        let asym = IntMatrix::from_rows(&[[1, 1], [0, 1]]).unwrap();
        let w2 = [Rational::from_integer(0); 2];
        assert_eq!(gauss_reciprocity_check(&asym, 2, &w2), Err(Error::NotSymmetric));
    }
}
