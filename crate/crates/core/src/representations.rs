//! The finite Heisenberg group `H_k`, the projective `Sp(ℤ)` representation
//! and the `Mp(ℤ)` representation on a Bohr–Sommerfeld space.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_algebra::rational::int;
use crate::exact_algebra::{ComplexMatrix, IntMatrix, PhaseSum, Rational, UnitPhase};
use crate::maslov::{MpElement, SpElement};
use crate::quantization::{
    bks_matrix, label_index, labels, rebase_unitary, HilbertSpace, Intertwiner, Polarization,
};
use crate::symplectic_lattice::AdaptedBasis;

/// `(λ, v)` with `v = n/k` written in a reference frame `(Wᵢ ; Wᵢ⊥)`:
/// `n = (a₁…a_g, b₁…b_g)` means `v = Σ (aᵢ/k)Wᵢ + (bᵢ/k)Wᵢ⊥`.
///
/// The group is `(T × (1/k)ℤ^{2g}) / {(1, W) : W ∈ ℤ^{2g}}` with product
/// `(λ, V)(λ', V') = (λλ' e^{πik ω(V, V')}, V + V')`. Elements are stored with
/// `n` reduced into `[0, k)`, the phase absorbing the sign `e^{πi ω(n, W)}`
/// picked up by each lattice translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisenbergElement {
    k: i64,
    phase: UnitPhase,
    n: Vec<i64>,
    frame: IntMatrix,
}

/// ω in frame coordinates.
fn omega_frame(n: &[i64], m: &[i64]) -> i64 {
    let g = n.len() / 2;
    (0..g).map(|i| n[i] * m[g + i] - n[g + i] * m[i]).sum()
}

impl HeisenbergElement {
    pub fn new(frame: &AdaptedBasis, k: i64, phase: UnitPhase, n: &[i64]) -> Result<Self> {
        if k < 2 || k % 2 != 0 {
            return Err(Error::OddModulus(k));
        }
        if n.len() != frame.space().dim() {
            return Err(Error::DimensionMismatch(format!("n has length {}", n.len())));
        }
        Ok(Self::reduced(frame.frame(), k, phase, n.to_vec()))
    }

    fn reduced(frame: IntMatrix, k: i64, mut phase: UnitPhase, n: Vec<i64>) -> Self {
        let w: Vec<i64> = n.iter().map(|x| -x.div_euclid(k)).collect();
        phase = phase * UnitPhase::new(int(omega_frame(&n, &w)));
        let n = n.iter().zip(&w).map(|(x, y)| x + k * y).collect();
        HeisenbergElement { k, phase, n, frame }
    }

    pub fn central(frame: &AdaptedBasis, k: i64, phase: UnitPhase) -> Result<Self> {
        Self::new(frame, k, phase, &vec![0; frame.space().dim()])
    }

    /// `(1, Wᵢ/k)`.
    pub fn w(frame: &AdaptedBasis, k: i64, i: usize) -> Result<Self> {
        let mut n = vec![0; frame.space().dim()];
        n[i] = 1;
        Self::new(frame, k, UnitPhase::one(), &n)
    }

    /// `(1, Wᵢ⊥/k)`.
    pub fn wperp(frame: &AdaptedBasis, k: i64, i: usize) -> Result<Self> {
        let g = frame.space().g();
        let mut n = vec![0; 2 * g];
        n[g + i] = 1;
        Self::new(frame, k, UnitPhase::one(), &n)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn phase(&self) -> UnitPhase {
        self.phase
    }

    pub fn n(&self) -> &[i64] {
        &self.n
    }

    pub fn frame(&self) -> &IntMatrix {
        &self.frame
    }

    /// The same group element written in another frame.
    pub fn in_frame(&self, target: &AdaptedBasis) -> HeisenbergElement {
        let dim = self.n.len();
        let mut y = vec![0i64; dim];
        for i in 0..dim {
            for j in 0..dim {
                y[j] += self.n[i] * self.frame[(i, j)];
            }
        }
        Self::reduced(target.frame(), self.k, self.phase, target.coords_int(&y))
    }
}

pub fn heisenberg_mul(x: &HeisenbergElement, y: &HeisenbergElement) -> Result<HeisenbergElement> {
    if x.frame != y.frame || x.k != y.k {
        return Err(Error::FrameMismatch);
    }
    let c = UnitPhase::new(Rational::new(omega_frame(&x.n, &y.n) as i128, x.k as i128));
    let n = x.n.iter().zip(&y.n).map(|(a, b)| a + b).collect();
    Ok(HeisenbergElement::reduced(x.frame.clone(), x.k, x.phase * y.phase * c, n))
}

/// A unitary operator on a Bohr–Sommerfeld space, in its canonical frame.
#[derive(Clone, Debug)]
pub struct RepMatrix {
    pub space: HilbertSpace,
    pub matrix: ComplexMatrix,
    pub exact: Option<Vec<PhaseSum>>,
}

/// `ρ(λ, (a, b)) = λ e^{πi a·b/k} Y^b X^a`, where `Xᵢ = ρ(1, Wᵢ/k)` multiplies
/// `σ_q` by `e^{2πi qᵢ/k}` and `Yᵢ = ρ(1, Wᵢ⊥/k)` shifts `q ↦ q + eᵢ`.
pub fn heisenberg_matrix(h: &HeisenbergElement, space: &HilbertSpace) -> Result<RepMatrix> {
    if h.frame != space.polarization().basis().frame() || h.k != space.k() {
        return Err(Error::FrameMismatch);
    }
    let (g, k) = (space.g(), space.k());
    let (a, b) = h.n.split_at(g);
    let dim = space.dim();
    let base = h.phase * UnitPhase::new(Rational::new(a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>() as i128, k as i128));
    let mut exact = vec![PhaseSum::zero(); dim * dim];
    for q in labels(g, k) {
        let aq: i64 = a.iter().zip(&q).map(|(x, y)| x * y).sum();
        let p = base * UnitPhase::root_of_unity(aq, k);
        let target: Vec<i64> = q.iter().zip(b).map(|(x, y)| x + y).collect();
        exact[label_index(&target, k) * dim + label_index(&q, k)] = PhaseSum::phase(p);
    }
    let matrix = ComplexMatrix::from_fn(dim, |i, j| exact[i * dim + j].evaluate());
    Ok(RepMatrix { space: space.clone(), matrix, exact: Some(exact) })
}

/// The map `H_P → H_{bP}` induced by `b`: the identity on labels from the
/// canonical frame of `P` to the image frame `b·(W ; W⊥)`, followed by the
/// rebase to the canonical frame of `bP`.
pub fn sp_pushforward(b: &SpElement, space: &HilbertSpace) -> Result<Intertwiner> {
    let pol = space.polarization();
    let sp = pol.lagrangian().space();
    if b.space() != sp {
        return Err(Error::SpaceMismatch);
    }
    let image_frame = &pol.basis().frame() * &b.matrix().transpose();
    let image_basis = AdaptedBasis::from_frame(sp, &image_frame)?;
    let image_pol = Polarization::new(&b.act(pol.lagrangian())?)?;
    let target = HilbertSpace::new(&image_pol, space.k())?;
    let n = space.dim();
    let exact: Vec<PhaseSum> = (0..n * n)
        .map(|x| if x / n == x % n { PhaseSum::phase(UnitPhase::one()) } else { PhaseSum::zero() })
        .collect();
    let transport = Intertwiner {
        source: space.clone(),
        target: target.clone(),
        source_frame: pol.basis().clone(),
        target_frame: image_basis.clone(),
        matrix: ComplexMatrix::identity(n),
        exact: Some(exact),
    };
    let rebase = rebase_unitary(&image_pol, &image_basis, image_pol.basis(), space.k())?;
    rebase.compose(&transport)
}

/// `U_P(b) = F_{P, bP} ∘ b`.
pub fn u_sp(b: &SpElement, space: &HilbertSpace) -> Result<RepMatrix> {
    let push = sp_pushforward(b, space)?;
    let back = bks_matrix(&push.target, space)?;
    let u = back.compose(&push)?;
    Ok(RepMatrix { space: space.clone(), matrix: u.matrix, exact: u.exact })
}

/// `U_P(b, z) = e^{(πi/4) z} U_P(b)` for `(b, z)` over the base `L_P`.
pub fn u_mp(x: &MpElement, space: &HilbertSpace) -> Result<RepMatrix> {
    if x.base() != space.polarization().lagrangian() {
        return Err(Error::BaseMismatch);
    }
    let u = u_sp(x.sp(), space)?;
    let p = UnitPhase::new(Rational::new(x.z() as i128, 4));
    Ok(RepMatrix {
        space: u.space,
        matrix: u.matrix.scale(p.to_complex()),
        exact: u.exact.map(|e| e.iter().map(|s| s.rotate(p)).collect()),
    })
}

/// Dimension of `{M : [G, M] = 0 for all G in gens}`, by Gaussian
/// elimination on the stacked commutator equations with tolerance `tol`.
pub fn commutant_dimension(gens: &[ComplexMatrix], tol: f64) -> usize {
    let Some(first) = gens.first() else { return 0 };
    let n = first.dim();
    let unknowns = n * n;
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for g in gens {
        // (GM − MG)_{ij} = Σ_l G_il M_lj − M_il G_lj
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Complex64::zero(); unknowns];
                for l in 0..n {
                    row[l * n + j] += g.get(i, l);
                    row[i * n + l] -= g.get(l, j);
                }
                rows.push(row);
            }
        }
    }
    let mut rank = 0;
    for c in 0..unknowns {
        let Some(p) = (rank..rows.len()).max_by(|&a, &b| rows[a][c].norm().total_cmp(&rows[b][c].norm())) else {
            break;
        };
        if rows[p][c].norm() <= tol {
            continue;
        }
        rows.swap(rank, p);
        let piv = rows[rank][c];
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][c] / piv;
                if f.norm() > 0.0 {
                    for t in c..unknowns {
                        let v = rows[rank][t];
                        rows[r][t] -= f * v;
                    }
                }
            }
        }
        rank += 1;
    }
    unknowns - rank
}
