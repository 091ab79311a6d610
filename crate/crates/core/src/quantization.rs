//! Bohr–Sommerfeld data and BKS intertwiners between real polarizations.
//!
//! Matrices are indexed `[target label][source label]`, with labels of
//! `(ℤ/k)^g` in lexicographic order of least nonnegative residues.

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::gauss::odometer;
use crate::exact_algebra::normal_form::{coset_reps, unimodular_inverse};
use crate::exact_algebra::rational::{dot, int, to_f64, RatMatrix};
use crate::exact_algebra::{exp_i_pi, ComplexMatrix, IntMatrix, PhaseSum, Rational, UnitPhase};
use crate::maslov::{mu, LagLift};
use crate::symplectic_lattice::{adapted_basis, intersect, omega_blocks, pair_adapted_bases, AdaptedBasis, Lagrangian};

/// Exact entries are dropped once a single entry would exceed this many terms.
pub const MAX_EXACT_TERMS: usize = 10_000;
/// Exact products are skipped when they would form more term products than this.
pub const MAX_EXACT_WORK: usize = 200_000;

/// A rational real polarization with its canonical adapted frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polarization {
    l: Lagrangian,
    basis: AdaptedBasis,
}

impl Polarization {
    pub fn new(l: &Lagrangian) -> Result<Self> {
        l.require_full()?;
        Ok(Polarization { l: l.clone(), basis: adapted_basis(l)? })
    }

    pub fn lagrangian(&self) -> &Lagrangian {
        &self.l
    }

    pub fn basis(&self) -> &AdaptedBasis {
        &self.basis
    }

    pub fn k_potential(&self, x: &[Rational]) -> Rational {
        k_potential(&self.basis, x)
    }
}

/// `K(X) = ½ Σ aᵢbᵢ` for `X = Σ aᵢWᵢ + Σ bᵢWᵢ⊥` in the frame `basis`.
pub fn k_potential(basis: &AdaptedBasis, x: &[Rational]) -> Rational {
    let (a, b) = basis.coords(x);
    dot(&a, &b) / int(2)
}

/// The space spanned by the `k^g` Bohr–Sommerfeld states of a polarization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSpace {
    k: i64,
    pol: Polarization,
}

impl HilbertSpace {
    pub fn new(pol: &Polarization, k: i64) -> Result<Self> {
        if k < 2 || k % 2 != 0 {
            return Err(Error::OddModulus(k));
        }
        Ok(HilbertSpace { k, pol: pol.clone() })
    }

    pub fn from_lagrangian(l: &Lagrangian, k: i64) -> Result<Self> {
        Self::new(&Polarization::new(l)?, k)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn g(&self) -> usize {
        self.pol.l.space().g()
    }

    pub fn dim(&self) -> usize {
        (self.k as usize).pow(self.g() as u32)
    }

    pub fn polarization(&self) -> &Polarization {
        &self.pol
    }

    pub fn labels(&self) -> Vec<Vec<i64>> {
        labels(self.g(), self.k)
    }
}

pub fn labels(g: usize, k: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = vec![0i64; g];
    loop {
        out.push(v.clone());
        if !odometer(&mut v, k) {
            return out;
        }
    }
}

pub fn label_index(q: &[i64], k: i64) -> usize {
    q.iter().fold(0usize, |acc, &x| acc * k as usize + x.rem_euclid(k) as usize)
}

/// Row-major exact entries of an intertwiner.
pub type ExactMatrix = Vec<PhaseSum>;

/// A unitary map between two Bohr–Sommerfeld bases.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    pub source: HilbertSpace,
    pub target: HilbertSpace,
    /// Frames that define the standard bases on each side.
    pub source_frame: AdaptedBasis,
    pub target_frame: AdaptedBasis,
    pub matrix: ComplexMatrix,
    pub exact: Option<ExactMatrix>,
}

impl Intertwiner {
    /// `self ∘ first`.
    pub fn compose(&self, first: &Intertwiner) -> Result<Intertwiner> {
        if first.target != self.source || first.target_frame != self.source_frame {
            return Err(Error::FrameMismatch);
        }
        let exact = match (&self.exact, &first.exact) {
            (Some(a), Some(b)) => exact_mul(a, b, self.matrix.dim()),
            _ => None,
        };
        Ok(Intertwiner {
            source: first.source.clone(),
            target: self.target.clone(),
            source_frame: first.source_frame.clone(),
            target_frame: self.target_frame.clone(),
            matrix: &self.matrix * &first.matrix,
            exact,
        })
    }

    /// Multiplies by a unit phase.
    pub fn rotate(&self, p: UnitPhase) -> Intertwiner {
        let mut out = self.clone();
        out.matrix = self.matrix.scale(p.to_complex());
        out.exact = self.exact.as_ref().map(|e| e.iter().map(|s| s.rotate(p)).collect());
        out
    }

    pub fn unitarity_error(&self) -> f64 {
        self.matrix.unitarity_error()
    }
}

fn exact_to_complex(e: &ExactMatrix, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |i, j| e[i * n + j].evaluate())
}

/// Product of exact matrices when every entry stays a single `PhaseSum`.
pub fn exact_mul(a: &ExactMatrix, b: &ExactMatrix, n: usize) -> Option<ExactMatrix> {
    let work: usize = (0..n)
        .map(|l| {
            let col: usize = (0..n).map(|i| a[i * n + l].terms().len()).sum();
            let row: usize = (0..n).map(|j| b[l * n + j].terms().len()).sum();
            col * row
        })
        .sum();
    if work > MAX_EXACT_WORK {
        return None;
    }
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut amp2: Option<Rational> = None;
            let mut terms = Vec::new();
            for l in 0..n {
                let (x, y) = (&a[i * n + l], &b[l * n + j]);
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let p = x * y;
                match amp2 {
                    None => amp2 = Some(p.amp2()),
                    Some(v) if v != p.amp2() => return None,
                    _ => {}
                }
                terms.extend_from_slice(p.terms());
                if terms.len() > MAX_EXACT_TERMS {
                    return None;
                }
            }
            out.push(match amp2 {
                Some(v) => PhaseSum::new(v, terms),
                None => PhaseSum::zero(),
            });
        }
    }
    Some(out)
}

fn rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn check_pair(h1: &HilbertSpace, h2: &HilbertSpace) -> Result<()> {
    if h1.k != h2.k {
        return Err(Error::ModulusMismatch(format!("k = {} and k = {}", h1.k, h2.k)));
    }
    if h1.pol.l.space() != h2.pol.l.space() {
        return Err(Error::SpaceMismatch);
    }
    Ok(())
}

/// The points `X_{l q₂ q₁}` of `Λ₁_{q₁} ∩ Λ₂_{q₂}` for transverse frames,
/// one per class `[l] ∈ ℤ^g / ω(2,1)ℤ^g`:
/// `X = Σ [ω(2,1)⁻¹(q₂/k + l)]ᵢ W₁ᵢ − Σ [ω(2,1)⁻ᵀ q₁/k]ᵢ W₂ᵢ`.
pub fn intersection_points_in(
    b1: &AdaptedBasis,
    b2: &AdaptedBasis,
    k: i64,
    q1: &[i64],
    q2: &[i64],
) -> Result<Vec<Vec<Rational>>> {
    let blocks = omega_blocks(b1, b2)?;
    if blocks.o21.det()? == 0 {
        return Err(Error::NotTransverse);
    }
    let space = b1.space();
    let (g, n) = (space.g(), space.dim());
    let inv = RatMatrix::from(&blocks.o21).inverse()?;
    let kk = int(k);
    let q1k: Vec<Rational> = q1.iter().map(|&x| int(x) / kk).collect();
    let c2: Vec<Rational> = inv.transpose().mul_vec(&q1k);
    let mut out = Vec::new();
    for l in coset_reps(&blocks.o21)? {
        let rhs: Vec<Rational> = (0..g).map(|i| int(q2[i]) / kk + int(l[i])).collect();
        let c1 = inv.mul_vec(&rhs);
        let mut x = vec![Rational::zero(); n];
        for i in 0..g {
            for j in 0..n {
                x[j] += c1[i] * int(b1.w()[(i, j)]) - c2[i] * int(b2.w()[(i, j)]);
            }
        }
        out.push(x);
    }
    Ok(out)
}

pub fn intersection_points(
    h1: &HilbertSpace,
    h2: &HilbertSpace,
    q1: &[i64],
    q2: &[i64],
) -> Result<Vec<Vec<Rational>>> {
    check_pair(h1, h2)?;
    intersection_points_in(h1.pol.basis(), h2.pol.basis(), h1.k, q1, q2)
}

/// Closed-form transverse matrix in arbitrary adapted frames.
pub fn transverse_matrix(b1: &AdaptedBasis, b2: &AdaptedBasis, k: i64) -> Result<(ComplexMatrix, ExactMatrix)> {
    let blocks = omega_blocks(b1, b2)?;
    let det = blocks.o21.det()?;
    if det == 0 {
        return Err(Error::NotTransverse);
    }
    let g = b1.space().g();
    let amp2 = int(k).pow(g as i32) * int(det).abs();
    let exact = quadratic_phase_entries(
        g,
        g,
        k,
        &blocks.o21,
        &blocks.o2_1p,
        &blocks.o2p_1,
        amp2,
    )?;
    let n = (k as usize).pow(g as u32);
    Ok((exact_to_complex(&exact, n), exact))
}

/// Entries `amp2^{-1/2} Σ_{[l]} e^{(πi/k) A}` where the quadratic exponent uses
/// the leading `h × h` blocks and labels must agree beyond index `h`.
fn quadratic_phase_entries(
    g: usize,
    h: usize,
    k: i64,
    o21: &IntMatrix,
    o2_1p: &IntMatrix,
    o2p_1: &IntMatrix,
    amp2: Rational,
) -> Result<ExactMatrix> {
    let c = |m: &IntMatrix| RatMatrix::from(&m.submatrix(0, h, 0, h));
    let (w21, w2_1p, w2p_1) = (c(o21), c(o2_1p), c(o2p_1));
    let inv = w21.inverse()?;
    let m1 = &inv * &w2_1p;
    let m2 = &w2p_1 * &inv;
    let reps = coset_reps(&o21.submatrix(0, h, 0, h))?;
    let kk = int(k);
    let labels = labels(g, k);
    let mut out = Vec::with_capacity(labels.len() * labels.len());
    for q2 in &labels {
        for q1 in &labels {
            if q1[h..] != q2[h..] {
                out.push(PhaseSum::zero());
                continue;
            }
            let q1r = rat_vec(&q1[..h]);
            let fixed = m1.quadratic(&q1r);
            let lin = inv.transpose().mul_vec(&q1r);
            let terms = reps.iter().map(|l| {
                let u: Vec<Rational> = (0..h).map(|i| int(q2[i]) + kk * int(l[i])).collect();
                let a = fixed - int(2) * dot(&lin, &u) - m2.quadratic(&u);
                (UnitPhase::new(a / kk), Rational::from_integer(1))
            });
            out.push(PhaseSum::new(amp2, terms));
        }
    }
    Ok(out)
}

/// `M(2,1)` for transverse polarizations in their canonical frames.
pub fn bks_matrix_transverse(h1: &HilbertSpace, h2: &HilbertSpace) -> Result<Intertwiner> {
    check_pair(h1, h2)?;
    let (matrix, exact) = transverse_matrix(h1.pol.basis(), h2.pol.basis(), h1.k)?;
    Ok(Intertwiner {
        source: h1.clone(),
        target: h2.clone(),
        source_frame: h1.pol.basis.clone(),
        target_frame: h2.pol.basis.clone(),
        matrix,
        exact: Some(exact),
    })
}

/// Number of leading pairs that are not shared, or an error if the frames are
/// not pair-adapted for their Lagrangians.
fn transverse_rank(b1: &AdaptedBasis, b2: &AdaptedBasis) -> Result<usize> {
    let g = b1.space().g();
    let l12 = intersect(&b1.lagrangian(), &b2.lagrangian())?;
    let h = g - l12.rank();
    for i in h..g {
        if b1.w().row(i) != b2.w().row(i) || b1.wperp().row(i) != b2.wperp().row(i) {
            return Err(Error::BasesNotPairAdapted);
        }
    }
    let o21 = omega_blocks(b1, b2)?.o21;
    if o21.submatrix(0, h, 0, h).det()? == 0 {
        return Err(Error::BasesNotPairAdapted);
    }
    Ok(h)
}

/// Closed-form nontransverse matrix in pair-adapted frames.
pub fn nontransverse_matrix(b1: &AdaptedBasis, b2: &AdaptedBasis, k: i64) -> Result<(ComplexMatrix, ExactMatrix)> {
    let g = b1.space().g();
    let h = transverse_rank(b1, b2)?;
    if h == g {
        return Err(Error::TransverseInput);
    }
    let blocks = omega_blocks(b1, b2)?;
    let det = blocks.o21.submatrix(0, h, 0, h).det()?;
    let amp2 = int(k).pow(h as i32) * int(det).abs();
    let exact = quadratic_phase_entries(g, h, k, &blocks.o21, &blocks.o2_1p, &blocks.o2p_1, amp2)?;
    let n = (k as usize).pow(g as u32);
    Ok((exact_to_complex(&exact, n), exact))
}

/// `M(2,1)` for polarizations with `L₁ ∩ L₂ ≠ 0`, in the given pair-adapted
/// frames of `h1` and `h2`.
pub fn bks_matrix_nontransverse_in(
    h1: &HilbertSpace,
    h2: &HilbertSpace,
    b1: &AdaptedBasis,
    b2: &AdaptedBasis,
) -> Result<Intertwiner> {
    check_pair(h1, h2)?;
    if b1.lagrangian() != h1.pol.l || b2.lagrangian() != h2.pol.l {
        return Err(Error::BasesNotPairAdapted);
    }
    let (matrix, exact) = nontransverse_matrix(b1, b2, h1.k)?;
    Ok(Intertwiner {
        source: h1.clone(),
        target: h2.clone(),
        source_frame: b1.clone(),
        target_frame: b2.clone(),
        matrix,
        exact: Some(exact),
    })
}

/// As [`bks_matrix_nontransverse_in`] with the frames from
/// [`pair_adapted_bases`].
pub fn bks_matrix_nontransverse(h1: &HilbertSpace, h2: &HilbertSpace) -> Result<Intertwiner> {
    check_pair(h1, h2)?;
    let (b1, b2) = pair_adapted_bases(&h1.pol.l, &h2.pol.l)?;
    bks_matrix_nontransverse_in(h1, h2, &b1, &b2)
}

/// Monomial unitary from the standard basis of frame `b` to that of `b2`,
/// both adapted to `P`: `σ^{B2}_q = e^{(πi/k) qᵀA⁻¹Bq} σ^B_{A⁻ᵀq}` where
/// `(A B; 0 A⁻ᵀ)` is the transition in the `b`-frame.
pub fn rebase_unitary(pol: &Polarization, b: &AdaptedBasis, b2: &AdaptedBasis, k: i64) -> Result<Intertwiner> {
    let h = HilbertSpace::new(pol, k)?;
    if b.lagrangian() != pol.l || b2.lagrangian() != pol.l {
        return Err(Error::BasisMismatch);
    }
    let (matrix, exact) = rebase_matrix(b, b2, k)?;
    Ok(Intertwiner {
        source: h.clone(),
        target: h,
        source_frame: b.clone(),
        target_frame: b2.clone(),
        matrix,
        exact: Some(exact),
    })
}

fn rebase_matrix(b: &AdaptedBasis, b2: &AdaptedBasis, k: i64) -> Result<(ComplexMatrix, ExactMatrix)> {
    let g = b.space().g();
    let f1 = b.frame();
    let f2 = b2.frame();
    let t = (&f2 * &unimodular_inverse(&f1)?).transpose();
    if !t.submatrix(g, 2 * g, 0, g).is_zero() {
        return Err(Error::BasisMismatch);
    }
    let a = t.submatrix(0, g, 0, g);
    let bm = t.submatrix(0, g, g, 2 * g);
    let a_inv = unimodular_inverse(&a)?;
    let s = RatMatrix::from(&(&a_inv * &bm));
    let a_inv_t = a_inv.transpose();
    let n = (k as usize).pow(g as u32);
    let mut exact = vec![PhaseSum::zero(); n * n];
    for q in labels(g, k) {
        let src = a_inv_t.mul_vec(&q);
        let t = -s.quadratic(&rat_vec(&q)) / int(k);
        exact[label_index(&q, k) * n + label_index(&src, k)] = PhaseSum::phase(UnitPhase::new(t));
    }
    Ok((exact_to_complex(&exact, n), exact))
}

/// `F_{P₂P₁}` in the canonical frames of both sides.
pub fn bks_matrix(h1: &HilbertSpace, h2: &HilbertSpace) -> Result<Intertwiner> {
    check_pair(h1, h2)?;
    if intersect(&h1.pol.l, &h2.pol.l)?.rank() == 0 {
        return bks_matrix_transverse(h1, h2);
    }
    let (b1, b2) = pair_adapted_bases(&h1.pol.l, &h2.pol.l)?;
    let inner = bks_matrix_nontransverse_in(h1, h2, &b1, &b2)?;
    let into = rebase_unitary(&h1.pol, &h1.pol.basis, &b1, h1.k)?;
    let out = rebase_unitary(&h2.pol, &b2, &h2.pol.basis, h1.k)?;
    out.compose(&inner)?.compose(&into)
}

/// `e^{−(πi/4) μ(L̃₂, L̃₁)} F_{P₂P₁}`, the Maslov-corrected intertwiner from
/// `lift1` to `lift2`.
pub fn corrected_intertwiner(lift1: &LagLift, lift2: &LagLift, k: i64) -> Result<Intertwiner> {
    for l in [lift1, lift2] {
        if l.modulus() != 8 {
            return Err(Error::ModulusMismatch(format!("expected lifts mod 8, got mod {}", l.modulus())));
        }
    }
    let m = mu(lift2, lift1, 4)?;
    let h1 = HilbertSpace::from_lagrangian(lift1.lagrangian(), k)?;
    let h2 = HilbertSpace::from_lagrangian(lift2.lagrangian(), k)?;
    Ok(bks_matrix(&h1, &h2)?.rotate(UnitPhase::new(Rational::new(-(m as i128), 4))))
}

/// The defining point sum `amp2^{-1/2} Σ_X e^{2πik(K₂ − K₁)(X)}` over the
/// intersection points of transverse frames.
pub fn transverse_point_sum(b1: &AdaptedBasis, b2: &AdaptedBasis, k: i64) -> Result<ComplexMatrix> {
    let g = b1.space().g();
    let det = omega_blocks(b1, b2)?.o21.det()?;
    if det == 0 {
        return Err(Error::NotTransverse);
    }
    let scale = ((k as f64).powi(g as i32) * det.abs() as f64).sqrt();
    let labels = labels(g, k);
    let n = labels.len();
    let mut m = ComplexMatrix::zeros(n);
    for (i, q2) in labels.iter().enumerate() {
        for (j, q1) in labels.iter().enumerate() {
            let mut s = Complex64::new(0.0, 0.0);
            for x in intersection_points_in(b1, b2, k, q1, q2)? {
                let dk = k_potential(b2, &x) - k_potential(b1, &x);
                s += exp_i_pi(int(2 * k) * dk);
            }
            m.set(i, j, s / scale);
        }
    }
    Ok(m)
}

/// Leafwise point sum for pair-adapted frames: one solution of the
/// component equations per class `[l] ∈ ℤ^h / ω̌(2,1)ℤ^h`, taken with
/// `b = q₁/k` in the `P₁` frame and vanishing shared `a`-coordinates.
pub fn nontransverse_point_sum(b1: &AdaptedBasis, b2: &AdaptedBasis, k: i64) -> Result<ComplexMatrix> {
    let g = b1.space().g();
    let h = transverse_rank(b1, b2)?;
    let blocks = omega_blocks(b1, b2)?;
    let o21 = blocks.o21.submatrix(0, h, 0, h);
    let inv = RatMatrix::from(&o21).inverse()?;
    let o2_1p = RatMatrix::from(&blocks.o2_1p);
    let reps = coset_reps(&o21)?;
    let scale = ((k as f64).powi(h as i32) * o21.det()?.abs() as f64).sqrt();
    let kk = int(k);
    let labels = labels(g, k);
    let n = labels.len();
    let mut m = ComplexMatrix::zeros(n);
    for (i, q2) in labels.iter().enumerate() {
        for (j, q1) in labels.iter().enumerate() {
            if q1[h..] != q2[h..] {
                continue;
            }
            let b: Vec<Rational> = q1.iter().map(|&x| int(x) / kk).collect();
            let shift = o2_1p.mul_vec(&b);
            let mut s = Complex64::new(0.0, 0.0);
            for l in &reps {
                let rhs: Vec<Rational> = (0..h).map(|t| int(q2[t]) / kk + int(l[t]) - shift[t]).collect();
                let mut a = inv.mul_vec(&rhs);
                a.resize(g, Rational::zero());
                let x = b1.from_coords(&a, &b);
                let dk = k_potential(b2, &x) - k_potential(b1, &x);
                s += exp_i_pi(int(2 * k) * dk);
            }
            m.set(i, j, s / scale);
        }
    }
    Ok(m)
}

/// Number of points in `(1/(kD))ℤ^{2g} / ℤ^{2g}` satisfying both label
/// congruences, for `D = |det ω(2,1)|`. Exhaustive, so only for small cases.
pub fn brute_force_intersection_count(
    b1: &AdaptedBasis,
    b2: &AdaptedBasis,
    k: i64,
    q1: &[i64],
    q2: &[i64],
) -> Result<usize> {
    let d = omega_blocks(b1, b2)?.o21.det()?.abs();
    if d == 0 {
        return Err(Error::NotTransverse);
    }
    let n = b1.space().dim();
    let den = k * d;
    let mut v = vec![0i64; n];
    let mut count = 0;
    loop {
        // X = v/den; kω(W, X) = ω(W, v)/d must be ≡ q mod k.
        let on_leaf = |b: &AdaptedBasis, q: &[i64]| {
            (0..q.len()).all(|i| {
                let num = b1.space().omega_int(b.w().row(i), &v);
                num % d == 0 && (num / d - q[i]).rem_euclid(k) == 0
            })
        };
        if on_leaf(b1, q1) && on_leaf(b2, q2) {
            count += 1;
        }
        if !odometer(&mut v, den) {
            return Ok(count);
        }
    }
}

/// Entrywise float evaluation helper for callers holding exact data.
pub fn evaluate_exact(e: &ExactMatrix) -> ComplexMatrix {
    let n = (e.len() as f64).sqrt().round() as usize;
    exact_to_complex(e, n)
}

/// `|amp2|^{-1/2}` prefactor as a float.
pub fn amplitude(amp2: Rational) -> f64 {
    1.0 / to_f64(amp2).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::rat;
    use crate::symplectic_lattice::SymplecticSpace;

    fn lag(s: &SymplecticSpace, rows: &[&[i64]]) -> Lagrangian {
        Lagrangian::new(s, IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn potential_examples() {
        let s = SymplecticSpace::standard(1);
        let p = Polarization::new(&lag(&s, &[&[1, 2]])).unwrap();
        let w = p.basis().w().row(0).to_vec();
        let wp = p.basis().wperp().row(0).to_vec();
        assert_eq!(p.k_potential(&[int(0), int(0)]), int(0));
        assert_eq!(p.k_potential(&rat_vec(&w)), int(0));
        assert_eq!(p.k_potential(&rat_vec(&wp)), int(0));
        let sum: Vec<i64> = w.iter().zip(&wp).map(|(a, b)| a + b).collect();
        assert_eq!(p.k_potential(&rat_vec(&sum)), rat(1, 2));
    }

    #[test]
    fn fourier_example() {
        let s = SymplecticSpace::standard(1);
        let b1 = AdaptedBasis::from_frame(&s, &IntMatrix::from_rows(&[[1, 0], [0, 1]]).unwrap()).unwrap();
        let b2 = AdaptedBasis::from_frame(&s, &IntMatrix::from_rows(&[[0, 1], [-1, 0]]).unwrap()).unwrap();
        let (m, _) = transverse_matrix(&b1, &b2, 2).unwrap();
        let r = 1.0 / 2f64.sqrt();
        let expect = ComplexMatrix::from_fn(2, |q2, q1| {
            Complex64::new(r, 0.0) * exp_i_pi(int((q1 * q2) as i64))
        });
        assert!(m.max_abs_diff(&expect) < 1e-12);
        assert!(m.max_abs_diff(&transverse_point_sum(&b1, &b2, 2).unwrap()) < 1e-12);
    }

    #[test]
    fn point_counts() {
        let s = SymplecticSpace::standard(1);
        let h1 = HilbertSpace::from_lagrangian(&lag(&s, &[&[1, 0]]), 2).unwrap();
        let h2 = HilbertSpace::from_lagrangian(&lag(&s, &[&[0, 1]]), 2).unwrap();
        assert_eq!(intersection_points(&h1, &h2, &[0], &[1]).unwrap().len(), 1);
        let h3 = HilbertSpace::from_lagrangian(&lag(&s, &[&[1, 2]]), 2).unwrap();
        assert_eq!(intersection_points(&h1, &h3, &[1], &[0]).unwrap().len(), 2);
        let c = brute_force_intersection_count(h1.polarization().basis(), h3.polarization().basis(), 2, &[1], &[0]);
        assert_eq!(c.unwrap(), 2);
    }

    #[test]
    fn identity_cases() {
        let s = SymplecticSpace::standard(2);
        let h = HilbertSpace::from_lagrangian(&lag(&s, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]), 2).unwrap();
        let m = bks_matrix(&h, &h).unwrap();
        assert!(m.matrix.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-15);
        let b = h.polarization().basis();
        let r = rebase_unitary(h.polarization(), b, b, 2).unwrap();
        assert!(r.matrix.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-15);
    }

    #[test]
    fn odd_level_rejected() {
        let s = SymplecticSpace::standard(1);
        let p = Polarization::new(&lag(&s, &[&[1, 0]])).unwrap();
        assert_eq!(HilbertSpace::new(&p, 3), Err(Error::OddModulus(3)));
    }

    #[test]
    fn shear_rebase_is_diagonal() {
        let s = SymplecticSpace::standard(1);
        let p = Polarization::new(&lag(&s, &[&[1, 0]])).unwrap();
        let b = p.basis().clone();
        // W⊥ ↦ W⊥ + W.
        let b2 = AdaptedBasis::from_frame(&s, &IntMatrix::from_rows(&[[1, 0], [1, 1]]).unwrap()).unwrap();
        let r = rebase_unitary(&p, &b, &b2, 4).unwrap();
        for q in 0..4 {
            let expect = exp_i_pi(-rat((q * q) as i64, 4));
            assert!((r.matrix.get(q, q) - expect).norm() < 1e-15);
        }
    }
}
