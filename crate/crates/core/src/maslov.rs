//! Maslov–Kashiwara index, the `ℤ/2q` Maslov index in the base-point model of
//! the Lagrangian covers, and the `[Sp(ℤ) × ℤ/8]_L` model of `Mp(ℤ)`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact_algebra::normal_form::unimodular_inverse;
use crate::exact_algebra::rational::RatMatrix;
use crate::exact_algebra::{signature, IntMatrix, Rational};
use crate::symplectic_lattice::{adapted_basis, intersect, to_rat, Lagrangian, SymplecticSpace};

fn same_space(ls: &[&Lagrangian]) -> Result<()> {
    for l in ls {
        if l.space() != ls[0].space() {
            return Err(Error::SpaceMismatch);
        }
        l.require_full()?;
    }
    Ok(())
}

/// Signature of `G(X₁⊕X₂⊕X₃) = ω(X₁,X₂) + ω(X₂,X₃) + ω(X₃,X₁)` on `L₁⊕L₂⊕L₃`.
pub fn tau(l1: &Lagrangian, l2: &Lagrangian, l3: &Lagrangian) -> Result<i64> {
    same_space(&[l1, l2, l3])?;
    let space = l1.space();
    let g = space.g();
    let ls = [l1, l2, l3];
    let mut s = RatMatrix::zeros(3 * g, 3 * g);
    for (a, b) in [(0, 1), (1, 2), (2, 0)] {
        let o = space.pairing(ls[a].gens(), ls[b].gens());
        for i in 0..g {
            for j in 0..g {
                let v = Rational::from_integer(o[(i, j)] as i128);
                s[(a * g + i, b * g + j)] += v;
                s[(b * g + j, a * g + i)] += v;
            }
        }
    }
    Ok(signature(&s)?.value())
}

/// Signature of `H(X, X') = ω(X, p₃₁X')` on `L₂`, where `p₃₁` projects onto
/// `L₃` along `L₁`. Requires `L₁ ∩ L₃ = 0`.
pub fn tau_transverse(l1: &Lagrangian, l2: &Lagrangian, l3: &Lagrangian) -> Result<i64> {
    same_space(&[l1, l2, l3])?;
    if intersect(l1, l3)?.rank() != 0 {
        return Err(Error::NotTransverse);
    }
    let space = l1.space();
    let g = space.g();
    let stack = RatMatrix::from(&l1.gens().vstack(l3.gens())?);
    let inv = stack.inverse()?;
    let l3r = RatMatrix::from(l3.gens());
    let v: Vec<Vec<Rational>> = (0..g).map(|i| to_rat(l2.gens().row(i))).collect();
    let projected: Vec<Vec<Rational>> = v
        .iter()
        .map(|x| {
            let c = inv.vec_mul(x);
            l3r.vec_mul(&c[g..])
        })
        .collect();
    let h = RatMatrix::from_fn(g, g, |i, j| space.omega(&v[i], &projected[j]).expect("dim"));
    Ok(signature(&h)?.value())
}

/// A point `(L, λ)` of the `q`-fold cover in the model `[Lag × ℤ/2q]_base`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LagLift {
    base: Lagrangian,
    l: Lagrangian,
    lambda: i64,
    modulus: i64,
}

impl LagLift {
    /// Checks `λ ≡ g − dim(L ∩ base) (mod 2)` and reduces `λ` mod `2q`.
    pub fn new(base: &Lagrangian, l: &Lagrangian, lambda: i64, q: i64) -> Result<Self> {
        same_space(&[base, l])?;
        if q < 1 {
            return Err(Error::ModulusMismatch(format!("q = {q} must be positive")));
        }
        let g = base.space().g() as i64;
        let d = intersect(l, base)?.rank() as i64;
        if (lambda - (g - d)).is_odd() {
            return Err(Error::ParityViolation(format!(
                "λ = {lambda} but g − dim(L ∩ base) = {}",
                g - d
            )));
        }
        Ok(LagLift { base: base.clone(), l: l.clone(), lambda: lambda.rem_euclid(2 * q), modulus: 2 * q })
    }

    pub fn base(&self) -> &Lagrangian {
        &self.base
    }

    pub fn lagrangian(&self) -> &Lagrangian {
        &self.l
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    /// `2q`.
    pub fn modulus(&self) -> i64 {
        self.modulus
    }
}

/// `μ_{2q}(a, b) = λ_a − λ_b + τ(base, L_a, L_b) mod 2q`.
pub fn mu(a: &LagLift, b: &LagLift, q: i64) -> Result<i64> {
    if a.base != b.base {
        return Err(Error::BaseMismatch);
    }
    if q < 1 || a.modulus % (2 * q) != 0 || b.modulus % (2 * q) != 0 {
        return Err(Error::ModulusMismatch(format!(
            "lifts mod {} and {} cannot be read mod {}",
            a.modulus,
            b.modulus,
            2 * q
        )));
    }
    let t = tau(&a.base, &a.l, &b.l)?;
    Ok((a.lambda - b.lambda + t).rem_euclid(2 * q))
}

/// Marker for operators built from the half-density pairing alone, as opposed
/// to the Maslov-corrected ones.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HalfDensityLabel;

/// Integer symplectic automorphism `b` acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpElement {
    space: SymplecticSpace,
    b: IntMatrix,
}

impl SpElement {
    pub fn new(space: &SymplecticSpace, b: IntMatrix) -> Result<Self> {
        if !space.is_symplectic(&b) {
            return Err(Error::NotSymplectic);
        }
        Ok(SpElement { space: space.clone(), b })
    }

    pub fn identity(space: &SymplecticSpace) -> Self {
        SpElement { space: space.clone(), b: IntMatrix::identity(space.dim()) }
    }

    /// `Fᵀ·M·F⁻ᵀ`: the element whose matrix in the frame `F` (rows) is `M`.
    pub fn from_frame_matrix(space: &SymplecticSpace, frame: &IntMatrix, m: &IntMatrix) -> Result<Self> {
        let f_inv = unimodular_inverse(frame)?;
        let b = &(&frame.transpose() * m) * &f_inv.transpose();
        Self::new(space, b)
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn mul(&self, other: &SpElement) -> Result<SpElement> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(SpElement { space: self.space.clone(), b: &self.b * &other.b })
    }

    pub fn inverse(&self) -> SpElement {
        SpElement { space: self.space.clone(), b: unimodular_inverse(&self.b).expect("symplectic") }
    }

    pub fn act(&self, l: &Lagrangian) -> Result<Lagrangian> {
        if l.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        l.transform(&self.b)
    }

    pub fn is_identity(&self) -> bool {
        self.b == IntMatrix::identity(self.space.dim())
    }
}

/// `(b, z)` in `[Sp(ℤ) × ℤ/8]_base`.
///
/// Elements built from [`mp_generators`] and [`mp_mul`] are certified to lie
/// in the group; direct construction only checks the parity of `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MpElement {
    base: Lagrangian,
    b: SpElement,
    z: i64,
    certified: bool,
}

impl MpElement {
    pub fn new(base: &Lagrangian, b: SpElement, z: i64) -> Result<Self> {
        base.require_full()?;
        if b.space() != base.space() {
            return Err(Error::SpaceMismatch);
        }
        let g = base.space().g() as i64;
        let d = intersect(&b.act(base)?, base)?.rank() as i64;
        if (z - (g - d)).is_odd() {
            return Err(Error::ParityViolation(format!("z = {z} but g − dim(bL ∩ L) = {}", g - d)));
        }
        Ok(MpElement { base: base.clone(), b, z: z.rem_euclid(8), certified: false })
    }

    pub fn identity(base: &Lagrangian) -> Self {
        MpElement { base: base.clone(), b: SpElement::identity(base.space()), z: 0, certified: true }
    }

    pub fn base(&self) -> &Lagrangian {
        &self.base
    }

    pub fn sp(&self) -> &SpElement {
        &self.b
    }

    pub fn z(&self) -> i64 {
        self.z
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }
}

/// `(b, z)(b', z') = (bb', z + z' + τ(L, bL, bb'L))`.
pub fn mp_mul(x: &MpElement, y: &MpElement) -> Result<MpElement> {
    if x.base != y.base {
        return Err(Error::BaseMismatch);
    }
    let l = &x.base;
    let bb = x.b.mul(&y.b)?;
    let t = tau(l, &x.b.act(l)?, &bb.act(l)?)?;
    Ok(MpElement {
        base: l.clone(),
        b: bb,
        z: (x.z + y.z + t).rem_euclid(8),
        certified: x.certified && y.certified,
    })
}

/// `(b, z)·(L', λ) = (bL', z + λ + τ(L, bL, bL'))`.
pub fn mp_act(x: &MpElement, lift: &LagLift) -> Result<LagLift> {
    if x.base != lift.base {
        return Err(Error::BaseMismatch);
    }
    if lift.modulus != 8 {
        return Err(Error::ModulusMismatch(format!("Mp(ℤ) acts on lifts mod 8, got mod {}", lift.modulus)));
    }
    let l = &x.base;
    let image = x.b.act(&lift.l)?;
    let t = tau(l, &x.b.act(l)?, &image)?;
    Ok(LagLift { base: l.clone(), l: image, lambda: (x.z + lift.lambda + t).rem_euclid(8), modulus: 8 })
}

/// Generators of `Mp(ℤ)`, written in the canonical adapted frame of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MpGenerator {
    /// `(e, 4)`
    Epsilon,
    /// `(diag(A, A⁻ᵀ), 0 or 2)` by the sign of `det A`
    Alpha(IntMatrix),
    /// `([[I, B], [0, I]], 0)` for symmetric `B`
    Beta(IntMatrix),
    /// `([[0, I], [−I, 0]], g mod 8)`
    Gamma,
    /// `Gamma · Epsilon`, the other lift of `γ`
    GammaEpsilon,
}

/// Frame matrix of a generator in the base's canonical adapted frame.
pub fn generator_frame_matrix(g: usize, kind: &MpGenerator) -> Result<IntMatrix> {
    let n = 2 * g;
    let check_g = |m: &IntMatrix| -> Result<()> {
        if m.rows() != g || m.cols() != g {
            return Err(Error::DimensionMismatch(format!("expected a {g}×{g} block")));
        }
        Ok(())
    };
    Ok(match kind {
        MpGenerator::Epsilon => IntMatrix::identity(n),
        MpGenerator::Alpha(a) => {
            check_g(a)?;
            let a_inv_t = unimodular_inverse(a)?.transpose();
            IntMatrix::from_fn(n, n, |i, j| match (i < g, j < g) {
                (true, true) => a[(i, j)],
                (false, false) => a_inv_t[(i - g, j - g)],
                _ => 0,
            })
        }
        MpGenerator::Beta(b) => {
            check_g(b)?;
            if !b.is_symmetric() {
                return Err(Error::NotSymmetric);
            }
            IntMatrix::from_fn(n, n, |i, j| match (i < g, j < g) {
                (true, false) => b[(i, j - g)],
                _ => i64::from(i == j),
            })
        }
        MpGenerator::Gamma | MpGenerator::GammaEpsilon => IntMatrix::from_fn(n, n, |i, j| {
            if j == i + g {
                1
            } else if i == j + g {
                -1
            } else {
                0
            }
        }),
    })
}

pub fn mp_generators(base: &Lagrangian, kind: &MpGenerator) -> Result<MpElement> {
    base.require_full()?;
    let space = base.space();
    let g = space.g();
    let frame = adapted_basis(base)?.frame();
    let m = generator_frame_matrix(g, kind)?;
    let z = match kind {
        MpGenerator::Epsilon => 4,
        MpGenerator::Alpha(a) => {
            if a.det()? > 0 {
                0
            } else {
                2
            }
        }
        MpGenerator::Beta(_) => 0,
        MpGenerator::Gamma => g as i64 % 8,
        MpGenerator::GammaEpsilon => (g as i64 + 4) % 8,
    };
    let b = SpElement::from_frame_matrix(space, &frame, &m)?;
    Ok(MpElement { base: base.clone(), b, z, certified: true })
}
