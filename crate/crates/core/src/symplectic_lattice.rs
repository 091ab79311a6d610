//! The lattice `ℤ^{2g}` with a unimodular symplectic form, its rational
//! Lagrangian subspaces and integer symplectic bases adapted to them.

use crate::error::{Error, Result};
use crate::exact_algebra::normal_form::{bezout, is_primitive, left_kernel, rank, row_lattice_basis, saturate};
use crate::exact_algebra::rational::{dot, int, RatMatrix};
use crate::exact_algebra::{IntMatrix, Rational};

/// `(ℤ^{2g}, ω)` with `ω(x, y) = xᵀ·gram·y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticSpace {
    g: usize,
    gram: IntMatrix,
}

/// `[[0, I], [−I, 0]]`.
pub fn standard_gram(g: usize) -> IntMatrix {
    IntMatrix::from_fn(2 * g, 2 * g, |i, j| {
        if j == i + g {
            1
        } else if i == j + g {
            -1
        } else {
            0
        }
    })
}

impl SymplecticSpace {
    pub fn standard(g: usize) -> Self {
        assert!(g > 0, "genus must be positive");
        SymplecticSpace { g, gram: standard_gram(g) }
    }

    /// Accepts any skew-symmetric gram matrix of determinant 1.
    pub fn with_gram(gram: IntMatrix) -> Result<Self> {
        let n = gram.rows();
        if !gram.is_square() || n == 0 || n % 2 != 0 {
            return Err(Error::InvalidGram("gram must be 2g × 2g with g ≥ 1".into()));
        }
        if gram != -&gram.transpose() {
            return Err(Error::InvalidGram("gram is not skew-symmetric".into()));
        }
        if gram.det()? != 1 {
            return Err(Error::InvalidGram("lattice is not self-dual (det ≠ 1)".into()));
        }
        Ok(SymplecticSpace { g: n / 2, gram })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        2 * self.g
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn is_standard(&self) -> bool {
        self.gram == standard_gram(self.g)
    }

    pub fn omega(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        Ok(dot(x, &RatMatrix::from(&self.gram).mul_vec(y)))
    }

    /// ω on lattice vectors. Panics on a length mismatch.
    pub fn omega_int(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "dimension");
        let mut s = 0i128;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] as i128 * self.gram[(i, j)] as i128 * y[j] as i128;
            }
        }
        i64::try_from(s).expect("overflow")
    }

    /// Gram matrix of ω on the rows of `a` against the rows of `b`.
    pub fn pairing(&self, a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        IntMatrix::from_fn(a.rows(), b.rows(), |i, j| self.omega_int(a.row(i), b.row(j)))
    }

    /// A lattice basis `F` (rows) with `F·gram·Fᵀ = J`; coordinates in the
    /// standard space are `c = v·F⁻¹`.
    pub fn standardize(&self) -> Result<(SymplecticSpace, IntMatrix)> {
        let empty = Lagrangian { space: self.clone(), gens: IntMatrix::zeros(0, self.dim()) };
        let basis = adapted_basis(&empty)?;
        Ok((SymplecticSpace::standard(self.g), basis.frame()))
    }

    pub fn is_symplectic(&self, b: &IntMatrix) -> bool {
        b.rows() == self.dim() && b.is_square() && &(&b.transpose() * &self.gram) * b == self.gram
    }
}

/// Rational isotropic subspace, stored by the HNF basis of its lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lagrangian {
    space: SymplecticSpace,
    gens: IntMatrix,
}

impl Lagrangian {
    /// Strict constructor: rows must be independent, primitive and isotropic.
    pub fn new(space: &SymplecticSpace, gens: IntMatrix) -> Result<Self> {
        check_width(space, &gens)?;
        if rank(&gens) != gens.rows() || !is_primitive(&gens) {
            return Err(Error::NotPrimitive);
        }
        Self::finish(space, row_lattice_basis(&gens))
    }

    /// The rational span of arbitrary lattice vectors.
    pub fn from_span(space: &SymplecticSpace, rows: &IntMatrix) -> Result<Self> {
        check_width(space, rows)?;
        Self::finish(space, saturate(rows))
    }

    fn finish(space: &SymplecticSpace, gens: IntMatrix) -> Result<Self> {
        if gens.rows() > space.g() {
            return Err(Error::NotIsotropic);
        }
        if !space.pairing(&gens, &gens).is_zero() {
            return Err(Error::NotIsotropic);
        }
        Ok(Lagrangian { space: space.clone(), gens })
    }

    /// `span(e₁, …, e_g)`.
    pub fn standard(space: &SymplecticSpace) -> Self {
        let g = space.g();
        let rows = IntMatrix::from_fn(g, 2 * g, |i, j| i64::from(i == j));
        Self::from_span(space, &rows).expect("coordinate Lagrangian")
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn gens(&self) -> &IntMatrix {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.rows()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.space.g()
    }

    pub fn require_full(&self) -> Result<()> {
        if self.is_full() {
            Ok(())
        } else {
            Err(Error::NotLagrangian { expected: self.space.g(), got: self.rank() })
        }
    }

    /// Image under a lattice automorphism `b` acting on column vectors.
    pub fn transform(&self, b: &IntMatrix) -> Result<Lagrangian> {
        if !self.space.is_symplectic(b) {
            return Err(Error::NotSymplectic);
        }
        Self::from_span(&self.space, &(&self.gens * &b.transpose()))
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let row = IntMatrix::from_row_vecs(&[v.to_vec()], self.space.dim());
        rank(&self.gens.vstack(&row).expect("width")) == self.rank()
    }

    pub fn dim_intersection(&self, other: &Lagrangian) -> Result<usize> {
        Ok(intersect(self, other)?.rank())
    }
}

fn check_width(space: &SymplecticSpace, m: &IntMatrix) -> Result<()> {
    if m.cols() != space.dim() && m.rows() > 0 {
        return Err(Error::DimensionMismatch(format!(
            "rows of length {} in dimension {}",
            m.cols(),
            space.dim()
        )));
    }
    Ok(())
}

/// Integer symplectic basis `(W₁…W_g ; W₁⊥…W_g⊥)` of the lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdaptedBasis {
    space: SymplecticSpace,
    w: IntMatrix,
    wperp: IntMatrix,
}

impl AdaptedBasis {
    /// Wraps a frame (rows `W₁…W_g, W₁⊥…W_g⊥`) after checking it is symplectic.
    pub fn from_frame(space: &SymplecticSpace, frame: &IntMatrix) -> Result<Self> {
        let g = space.g();
        if frame.rows() != 2 * g || frame.cols() != 2 * g {
            return Err(Error::DimensionMismatch("frame must be 2g × 2g".into()));
        }
        let b = AdaptedBasis {
            space: space.clone(),
            w: frame.submatrix(0, g, 0, 2 * g),
            wperp: frame.submatrix(g, 2 * g, 0, 2 * g),
        };
        b.check()?;
        Ok(b)
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn w(&self) -> &IntMatrix {
        &self.w
    }

    pub fn wperp(&self) -> &IntMatrix {
        &self.wperp
    }

    /// The stack `(W ; W⊥)`.
    pub fn frame(&self) -> IntMatrix {
        self.w.vstack(&self.wperp).expect("same width")
    }

    /// The Lagrangian spanned by `W₁…W_g`.
    pub fn lagrangian(&self) -> Lagrangian {
        Lagrangian::from_span(&self.space, &self.w).expect("W is isotropic")
    }

    /// Verifies the symplectic relations; unimodularity of the stack follows.
    pub fn check(&self) -> Result<()> {
        let s = &self.space;
        let g = s.g();
        if !s.pairing(&self.w, &self.w).is_zero() || !s.pairing(&self.wperp, &self.wperp).is_zero() {
            return Err(Error::NotIsotropic);
        }
        if s.pairing(&self.w, &self.wperp) != IntMatrix::identity(g) {
            return Err(Error::NotUnimodular);
        }
        Ok(())
    }

    /// Coordinates `(a, b)` with `X = Σ aᵢWᵢ + Σ bᵢWᵢ⊥`, i.e.
    /// `aᵢ = ω(X, Wᵢ⊥)` and `bᵢ = ω(Wᵢ, X)`.
    pub fn coords(&self, x: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let g = self.space.g();
        let a = (0..g).map(|i| self.space.omega(x, &to_rat(self.wperp.row(i))).expect("dim")).collect();
        let b = (0..g).map(|i| self.space.omega(&to_rat(self.w.row(i)), x).expect("dim")).collect();
        (a, b)
    }

    /// Integer version of [`AdaptedBasis::coords`] as one vector `(a, b)`.
    pub fn coords_int(&self, x: &[i64]) -> Vec<i64> {
        let g = self.space.g();
        let mut out: Vec<i64> = (0..g).map(|i| self.space.omega_int(x, self.wperp.row(i))).collect();
        out.extend((0..g).map(|i| self.space.omega_int(self.w.row(i), x)));
        out
    }

    pub fn from_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.space.dim();
        let mut x = vec![Rational::from_integer(0); n];
        for i in 0..self.space.g() {
            for j in 0..n {
                x[j] += a[i] * int(self.w[(i, j)]) + b[i] * int(self.wperp[(i, j)]);
            }
        }
        x
    }
}

pub(crate) fn to_rat(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// Adapted symplectic basis whose first `rank L` vectors `W` span `L`.
///
/// Pairs `(Wᵢ, Wᵢ⊥)` are split off one at a time. `Wᵢ` is the first HNF
/// generator of what remains of `L` (or of the complement lattice once `L` is
/// used up), `Wᵢ⊥` solves `ω(Wᵢ, ·) = 1` on the complement by iterated
/// extended gcd, and everything is then projected onto `{Wᵢ, Wᵢ⊥}^ω`.
pub fn adapted_basis(l: &Lagrangian) -> Result<AdaptedBasis> {
    adapted_basis_with_prefix(l, &[])
}

fn adapted_basis_with_prefix(l: &Lagrangian, prefix: &[Vec<i64>]) -> Result<AdaptedBasis> {
    let space = l.space();
    let (g, n) = (space.g(), space.dim());
    let mut comp: Vec<Vec<i64>> = IntMatrix::identity(n).row_vecs();
    let mut gens: Vec<Vec<i64>> = l.gens().row_vecs();
    let mut prefix: Vec<Vec<i64>> = prefix.to_vec();
    let mut w_rows = Vec::with_capacity(g);
    let mut x_rows = Vec::with_capacity(g);
    for _ in 0..g {
        let w = if !prefix.is_empty() {
            prefix.remove(0)
        } else if let Some(v) = gens.first() {
            v.clone()
        } else {
            comp[0].clone()
        };
        let r: Vec<i64> = comp.iter().map(|c| space.omega_int(&w, c)).collect();
        let (d, c) = bezout(&r);
        if d != 1 {
            return Err(Error::NotPrimitive);
        }
        let mut x = vec![0i64; n];
        for (cj, row) in c.iter().zip(&comp) {
            for t in 0..n {
                x[t] += cj * row[t];
            }
        }
        let project = |v: &Vec<i64>| -> Vec<i64> {
            let (vx, vw) = (space.omega_int(v, &x), space.omega_int(v, &w));
            (0..n).map(|t| v[t] - vx * w[t] + vw * x[t]).collect()
        };
        comp = reduce(comp.iter().map(project).collect(), n);
        gens = reduce(gens.iter().map(project).collect(), n);
        prefix = prefix.iter().map(project).collect();
        w_rows.push(w);
        x_rows.push(x);
    }
    let basis = AdaptedBasis {
        space: space.clone(),
        w: IntMatrix::from_row_vecs(&w_rows, n),
        wperp: IntMatrix::from_row_vecs(&x_rows, n),
    };
    debug_assert!(basis.check().is_ok());
    Ok(basis)
}

fn reduce(rows: Vec<Vec<i64>>, n: usize) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return rows;
    }
    row_lattice_basis(&IntMatrix::from_row_vecs(&rows, n)).row_vecs()
}

/// `L₁ ∩ L₂`, primitive by construction.
pub fn intersect(l1: &Lagrangian, l2: &Lagrangian) -> Result<Lagrangian> {
    if l1.space() != l2.space() {
        return Err(Error::SpaceMismatch);
    }
    let n = l1.space().dim();
    if l1.rank() == 0 || l2.rank() == 0 {
        return Lagrangian::from_span(l1.space(), &IntMatrix::zeros(0, n));
    }
    let stacked = l1.gens().vstack(l2.gens())?;
    let k = left_kernel(&stacked);
    let y = k.submatrix(0, k.rows(), 0, l1.rank());
    Lagrangian::from_span(l1.space(), &(&y * l1.gens()))
}

/// Adapted bases of two full Lagrangians sharing their last `g − h` pairs,
/// which span `L₁ ∩ L₂`.
pub fn pair_adapted_bases(l1: &Lagrangian, l2: &Lagrangian) -> Result<(AdaptedBasis, AdaptedBasis)> {
    l1.require_full()?;
    l2.require_full()?;
    let l12 = intersect(l1, l2)?;
    let d = l12.rank();
    let prefix = l12.gens().row_vecs();
    let b1 = adapted_basis_with_prefix(l1, &prefix)?;
    let b2 = adapted_basis_with_prefix(l2, &prefix)?;
    Ok((rotate_pairs(&b1, d), rotate_pairs(&b2, d)))
}

/// Moves the first `d` pairs to the end.
fn rotate_pairs(b: &AdaptedBasis, d: usize) -> AdaptedBasis {
    let g = b.space.g();
    let order: Vec<usize> = (d..g).chain(0..d).collect();
    AdaptedBasis { space: b.space.clone(), w: b.w.select_rows(&order), wperp: b.wperp.select_rows(&order) }
}

/// The eight blocks `ω(a, b)_{ij} = ω(Aᵢ, Bⱼ)` of two adapted bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaBlocks {
    /// ω(2,1)
    pub o21: IntMatrix,
    /// ω(2,1⊥)
    pub o2_1p: IntMatrix,
    /// ω(2⊥,1)
    pub o2p_1: IntMatrix,
    /// ω(2⊥,1⊥)
    pub o2p_1p: IntMatrix,
    /// ω(1,2)
    pub o12: IntMatrix,
    /// ω(1⊥,2)
    pub o1p_2: IntMatrix,
    /// ω(1,2⊥)
    pub o1_2p: IntMatrix,
    /// ω(1⊥,2⊥)
    pub o1p_2p: IntMatrix,
}

impl OmegaBlocks {
    /// Leading `h × h` corners, in the same field order.
    pub fn reduced(&self, h: usize) -> OmegaBlocks {
        let c = |m: &IntMatrix| m.submatrix(0, h, 0, h);
        OmegaBlocks {
            o21: c(&self.o21),
            o2_1p: c(&self.o2_1p),
            o2p_1: c(&self.o2p_1),
            o2p_1p: c(&self.o2p_1p),
            o12: c(&self.o12),
            o1p_2: c(&self.o1p_2),
            o1_2p: c(&self.o1_2p),
            o1p_2p: c(&self.o1p_2p),
        }
    }
}

pub fn omega_blocks(b1: &AdaptedBasis, b2: &AdaptedBasis) -> Result<OmegaBlocks> {
    if b1.space != b2.space {
        return Err(Error::SpaceMismatch);
    }
    let s = &b1.space;
    Ok(OmegaBlocks {
        o21: s.pairing(&b2.w, &b1.w),
        o2_1p: s.pairing(&b2.w, &b1.wperp),
        o2p_1: s.pairing(&b2.wperp, &b1.w),
        o2p_1p: s.pairing(&b2.wperp, &b1.wperp),
        o12: s.pairing(&b1.w, &b2.w),
        o1p_2: s.pairing(&b1.wperp, &b2.w),
        o1_2p: s.pairing(&b1.w, &b2.wperp),
        o1p_2p: s.pairing(&b1.wperp, &b2.wperp),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::rat;

    fn lag(space: &SymplecticSpace, rows: &[&[i64]]) -> Lagrangian {
        Lagrangian::new(space, IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn omega_examples() {
        let s = SymplecticSpace::standard(1);
        assert_eq!(s.omega(&[int(1), int(0)], &[int(0), int(1)]).unwrap(), int(1));
        let x = [rat(1, 3), rat(-2, 5)];
        assert_eq!(s.omega(&x, &x).unwrap(), int(0));
        assert_eq!(s.omega(&[int(1), int(2)], &[int(1), int(0)]).unwrap(), int(-2));
        assert!(matches!(s.omega(&[int(1)], &[int(1), int(0)]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn adapted_examples() {
        let s = SymplecticSpace::standard(1);
        let b = adapted_basis(&lag(&s, &[&[1, 0]])).unwrap();
        assert_eq!(b.w().row(0), &[1, 0]);
        assert_eq!(b.wperp().row(0), &[0, 1]);
        let b = adapted_basis(&lag(&s, &[&[1, 2]])).unwrap();
        assert_eq!(b.w().row(0), &[1, 2]);
        assert_eq!(s.omega_int(b.w().row(0), b.wperp().row(0)), 1);
        assert!(b.frame().is_unimodular());
    }

    #[test]
    fn lagrangian_validation() {
        let s = SymplecticSpace::standard(1);
        let bad = IntMatrix::from_rows(&[[2, 4]]).unwrap();
        assert_eq!(Lagrangian::new(&s, bad), Err(Error::NotPrimitive));
        let s2 = SymplecticSpace::standard(2);
        let nonisotropic = IntMatrix::from_rows(&[[1, 0, 0, 0], [0, 0, 1, 0]]).unwrap();
        assert_eq!(Lagrangian::new(&s2, nonisotropic), Err(Error::NotIsotropic));
    }

    #[test]
    fn nonstandard_gram_normalizes() {
        // ω pairs (e₁, e₂) and (e₃, e₄) instead of (e₁, e₃) and (e₂, e₄).
        let gram = IntMatrix::from_rows(&[[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]).unwrap();
        let s = SymplecticSpace::with_gram(gram.clone()).unwrap();
        let (std, f) = s.standardize().unwrap();
        assert!(std.is_standard());
        assert_eq!(&(&f * &gram) * &f.transpose(), standard_gram(2));
    }

    #[test]
    fn intersections() {
        let s = SymplecticSpace::standard(1);
        let a = lag(&s, &[&[1, 0]]);
        assert_eq!(intersect(&a, &a).unwrap(), a);
        assert_eq!(intersect(&a, &lag(&s, &[&[0, 1]])).unwrap().rank(), 0);
        let s2 = SymplecticSpace::standard(2);
        // e1, e2 span a Lagrangian; e1, e4 as well.
        let l1 = lag(&s2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let l2 = lag(&s2, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(intersect(&l1, &l2).unwrap(), lag(&s2, &[&[1, 0, 0, 0]]));
    }

    #[test]
    fn pair_adapted_shares_intersection() {
        let s2 = SymplecticSpace::standard(2);
        let l1 = lag(&s2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let l2 = lag(&s2, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
        let (b1, b2) = pair_adapted_bases(&l1, &l2).unwrap();
        assert_eq!(b1.w().row(1), b2.w().row(1));
        assert_eq!(b1.wperp().row(1), b2.wperp().row(1));
        assert_eq!(b1.w().row(1), &[1, 0, 0, 0]);
        assert_eq!(b1.lagrangian(), l1);
        assert_eq!(b2.lagrangian(), l2);
        let blocks = omega_blocks(&b1, &b2).unwrap();
        assert_eq!(blocks.o21[(1, 1)], 0);
        assert_eq!(blocks.o2_1p[(1, 1)], 1);
        assert_eq!(blocks.o2p_1[(1, 1)], -1);
        assert_ne!(blocks.o21[(0, 0)], 0);
        let (c1, c2) = pair_adapted_bases(&l1, &l1).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn omega_block_examples() {
        let s = SymplecticSpace::standard(1);
        let b1 = adapted_basis(&lag(&s, &[&[1, 0]])).unwrap();
        let bl = omega_blocks(&b1, &b1).unwrap();
        assert!(bl.o21.is_zero());
        assert_eq!(bl.o2_1p, IntMatrix::identity(1));
        let b2 = AdaptedBasis::from_frame(&s, &IntMatrix::from_rows(&[[0, 1], [-1, 0]]).unwrap()).unwrap();
        assert_eq!(omega_blocks(&b1, &b2).unwrap().o21, IntMatrix::diag(&[-1]));
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = SymplecticSpace::standard(1);
        let b = adapted_basis(&lag(&s, &[&[1, 2]])).unwrap();
        let x = vec![rat(1, 3), rat(-5, 7)];
        let (a, c) = b.coords(&x);
        assert_eq!(b.from_coords(&a, &c), x);
    }
}
