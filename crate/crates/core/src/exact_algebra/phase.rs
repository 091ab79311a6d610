use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::rational::{int, rem_euclid, to_f64};
use super::Rational;

/// `e^{iπt}` with `t ∈ [0, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitPhase {
    t: Rational,
}

impl UnitPhase {
    pub fn new(t: Rational) -> Self {
        UnitPhase { t: rem_euclid(t, int(2)) }
    }

    pub fn one() -> Self {
        UnitPhase { t: Rational::zero() }
    }

    /// `e^{2πi·n/d}`.
    pub fn root_of_unity(n: i64, d: i64) -> Self {
        Self::new(Rational::new(2 * n as i128, d as i128))
    }

    pub fn t(&self) -> Rational {
        self.t
    }

    pub fn conj(&self) -> Self {
        Self::new(-self.t)
    }

    pub fn pow(&self, n: i64) -> Self {
        Self::new(self.t * int(n))
    }

    pub fn to_complex(&self) -> Complex64 {
        exp_i_pi(self.t)
    }
}

impl Mul for UnitPhase {
    type Output = UnitPhase;
    fn mul(self, rhs: UnitPhase) -> UnitPhase {
        UnitPhase::new(self.t + rhs.t)
    }
}

/// `e^{iπt}` evaluated in floating point after exact reduction of `t` mod 2.
pub fn exp_i_pi(t: Rational) -> Complex64 {
    let t = rem_euclid(t, int(2));
    // Exact values at multiples of 1/4 keep the common phases bit-stable.
    if (t * int(4)).is_integer() {
        let e = (t * int(4)).to_integer();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        return match e {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(h, h),
            2 => Complex64::new(0.0, 1.0),
            3 => Complex64::new(-h, h),
            4 => Complex64::new(-1.0, 0.0),
            5 => Complex64::new(-h, -h),
            6 => Complex64::new(0.0, -1.0),
            _ => Complex64::new(h, -h),
        };
    }
    let (s, c) = (PI * to_f64(t)).sin_cos();
    Complex64::new(c, s)
}

/// Exact matrix entry `amp2^{-1/2} · Σ cⱼ e^{iπ tⱼ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhaseSum {
    amp2: Rational,
    terms: Vec<(UnitPhase, Rational)>,
}

impl PhaseSum {
    pub fn new(amp2: Rational, terms: impl IntoIterator<Item = (UnitPhase, Rational)>) -> Self {
        assert!(amp2 > Rational::zero(), "amp2 must be positive");
        let mut terms: Vec<(UnitPhase, Rational)> = terms.into_iter().collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(UnitPhase, Rational)> = Vec::with_capacity(terms.len());
        for (p, c) in terms {
            match merged.last_mut() {
                Some((q, d)) if *q == p => *d += c,
                _ => merged.push((p, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        PhaseSum { amp2, terms: merged }
    }

    pub fn zero() -> Self {
        PhaseSum { amp2: Rational::one(), terms: Vec::new() }
    }

    pub fn phase(p: UnitPhase) -> Self {
        Self::new(Rational::one(), [(p, Rational::one())])
    }

    pub fn amp2(&self) -> Rational {
        self.amp2
    }

    pub fn terms(&self) -> &[(UnitPhase, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self) -> Complex64 {
        let s: Complex64 = self.terms.iter().map(|(p, c)| p.to_complex() * to_f64(*c)).sum();
        s / to_f64(self.amp2).sqrt()
    }

    /// Multiplies every term by a unit phase.
    pub fn rotate(&self, p: UnitPhase) -> Self {
        Self::new(self.amp2, self.terms.iter().map(|(q, c)| (*q * p, *c)))
    }
}

impl Mul for &PhaseSum {
    type Output = PhaseSum;
    fn mul(self, rhs: &PhaseSum) -> PhaseSum {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (p, c) in &self.terms {
            for (q, d) in &rhs.terms {
                terms.push((*p * *q, c * d));
            }
        }
        PhaseSum::new(self.amp2 * rhs.amp2, terms)
    }
}

/// Square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix { n, data: vec![Complex64::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `‖M·M† − I‖_max`.
    pub fn unitarity_error(&self) -> f64 {
        (self * &self.adjoint()).max_abs_diff(&Self::identity(self.n))
    }

    /// Best scalar approximation `c` (mean of the diagonal) and `‖M − c·I‖_max`.
    pub fn scalar_part(&self) -> (Complex64, f64) {
        let c = (0..self.n).map(|i| self.get(i, i)).sum::<Complex64>() / self.n as f64;
        (c, self.max_abs_diff(&Self::identity(self.n).scale(c)))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.n), |acc, _| &acc * self)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension");
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.data[i * n + l];
                if a == Complex64::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[l * n + j];
                }
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| {
                    let z = self.get(i, j);
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::rat;

    #[test]
    fn phases_normalize() {
        assert_eq!(UnitPhase::new(rat(5, 2)).t(), rat(1, 2));
        assert_eq!(UnitPhase::new(rat(-1, 2)).t(), rat(3, 2));
        assert_eq!(UnitPhase::new(rat(1, 3)) * UnitPhase::new(rat(5, 3)), UnitPhase::one());
        let z = UnitPhase::new(rat(1, 1)).to_complex();
        assert_eq!(z, Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn phase_sum_merges() {
        let s = PhaseSum::new(
            int(2),
            [(UnitPhase::new(rat(1, 2)), int(1)), (UnitPhase::new(rat(5, 2)), int(1)), (UnitPhase::one(), int(0))],
        );
        assert_eq!(s.terms().len(), 1);
        assert!((s.evaluate() - Complex64::new(0.0, 2.0 / 2f64.sqrt())).norm() < 1e-15);
        let cancel = PhaseSum::new(int(1), [(UnitPhase::one(), int(1)), (UnitPhase::one(), int(-1))]);
        assert!(cancel.is_zero());
    }

    #[test]
    fn phase_sum_matches_float_for_many_denominators() {
        for d in 1..=1000i64 {
            let t = rat(2 * d - 1, d);
            let s = PhaseSum::phase(UnitPhase::new(t));
            let direct = Complex64::from_polar(1.0, PI * (2 * d - 1) as f64 / d as f64);
            assert!((s.evaluate() - direct).norm() < 1e-12);
        }
    }

    #[test]
    fn unitarity_of_dft() {
        let n = 4;
        let m = ComplexMatrix::from_fn(n, |i, j| {
            UnitPhase::root_of_unity((i * j) as i64, n as i64).to_complex() / (n as f64).sqrt()
        });
        assert!(m.unitarity_error() < 1e-14);
    }
}
