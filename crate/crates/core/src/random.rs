//! Seeded generators for random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact_algebra::{IntMatrix, Rational};
use crate::maslov::{generator_frame_matrix, LagLift, MpGenerator, SpElement};
use crate::symplectic_lattice::{adapted_basis, intersect, Lagrangian, SymplecticSpace};

/// Entry bound kept by [`random_sp`].
pub const MAX_ENTRY: i64 = 5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_symmetric(g: usize, r: &mut impl Rng, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(g, g);
    for i in 0..g {
        for j in i..g {
            let v = r.gen_range(-bound..=bound);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    m
}

fn random_generator(g: usize, r: &mut impl Rng) -> IntMatrix {
    let kind = match r.gen_range(0..4) {
        0 => {
            let mut a = IntMatrix::identity(g);
            let (i, j) = (r.gen_range(0..g), r.gen_range(0..g));
            if i == j {
                a[(i, i)] = -1;
            } else {
                a[(i, j)] = if r.gen() { 1 } else { -1 };
            }
            MpGenerator::Alpha(a)
        }
        1 => MpGenerator::Gamma,
        _ => MpGenerator::Beta(random_symmetric(g, r, 2)),
    };
    generator_frame_matrix(g, &kind).expect("generator shapes are valid")
}

/// A random word of `len` accepted letters in the standard generators of
/// `Sp(2g, ℤ)`, with every entry bounded by [`MAX_ENTRY`]. Letters that
/// would break the bound are redrawn, up to `4·len` draws in total.
pub fn random_sp(space: &SymplecticSpace, len: usize, r: &mut impl Rng) -> Result<SpElement> {
    let g = space.g();
    let (_, f) = space.standardize()?;
    let mut m = IntMatrix::identity(2 * g);
    let mut accepted = 0;
    for _ in 0..4 * len {
        if accepted == len {
            break;
        }
        let next = &m * &random_generator(g, r);
        if next.max_abs() <= MAX_ENTRY {
            m = next;
            accepted += 1;
        }
    }
    SpElement::from_frame_matrix(space, &f, &m)
}

/// `b·L` for a random word `b`, where `L` meets `L₀` in a random dimension
/// and `L₀` is spanned by the first half of a standard frame.
pub fn random_lagrangian(space: &SymplecticSpace, r: &mut impl Rng) -> Result<Lagrangian> {
    let (_, f) = space.standardize()?;
    let l0 = Lagrangian::from_span(space, &f.submatrix(0, space.g(), 0, 2 * space.g()))?;
    let l = random_lagrangian_meeting(&l0, r.gen_range(0..=space.g()), r)?;
    random_sp(space, 6, r)?.act(&l)
}

/// A Lagrangian meeting `l` in exactly `d` dimensions.
///
/// In an adapted frame of `l`, it is spanned by `Σⱼ Sᵢⱼ Wⱼ + Wᵢ⊥` for
/// `i < g − d` with `S` random symmetric, together with `W_{g−d}, …, W_{g−1}`.
pub fn random_lagrangian_meeting(l: &Lagrangian, d: usize, r: &mut impl Rng) -> Result<Lagrangian> {
    let basis = adapted_basis(l)?;
    let space = l.space();
    let g = space.g();
    let m = g - d.min(g);
    let s = random_symmetric(m, r, 2);
    let rows: Vec<Vec<i64>> = (0..g)
        .map(|i| {
            (0..2 * g)
                .map(|c| {
                    if i < m {
                        let a: i64 = (0..m).map(|j| s[(i, j)] * basis.w()[(j, c)]).sum();
                        a + basis.wperp()[(i, c)]
                    } else {
                        basis.w()[(i, c)]
                    }
                })
                .collect()
        })
        .collect();
    let out = Lagrangian::from_span(space, &IntMatrix::from_row_vecs(&rows, 2 * g))?;
    debug_assert_eq!(intersect(&out, l)?.rank(), d.min(g));
    Ok(out)
}

/// A lift of `l` mod `2q` with random `λ` of the admissible parity.
pub fn random_lift(base: &Lagrangian, l: &Lagrangian, q: i64, r: &mut impl Rng) -> Result<LagLift> {
    let g = base.space().g() as i64;
    let d = intersect(l, base)?.rank() as i64;
    let lambda = 2 * r.gen_range(0..q) + (g - d).rem_euclid(2);
    LagLift::new(base, l, lambda, q)
}

/// A nondegenerate symmetric `Q`, even `a` and `w` with `a·w` integral.
pub fn random_gauss_instance(g: usize, r: &mut impl Rng) -> (IntMatrix, i64, Vec<Rational>) {
    loop {
        let q = random_symmetric(g, r, 3);
        if q.det().map_or(true, |d| d == 0) {
            continue;
        }
        let a = 2 * r.gen_range(1..=3);
        let w = (0..g).map(|_| Rational::new(r.gen_range(0..a) as i128, a as i128)).collect();
        return (q, a, w);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_are_symplectic_and_bounded() {
        let s = SymplecticSpace::standard(2);
        let mut r = rng(7);
        for _ in 0..50 {
            let b = random_sp(&s, 10, &mut r).unwrap();
            assert!(s.is_symplectic(b.matrix()));
            assert!(b.matrix().max_abs() <= MAX_ENTRY);
        }
    }

    #[test]
    fn prescribed_intersections() {
        let s = SymplecticSpace::standard(2);
        let mut r = rng(11);
        for d in 0..=2 {
            for _ in 0..10 {
                let l = random_lagrangian(&s, &mut r).unwrap();
                let m = random_lagrangian_meeting(&l, d, &mut r).unwrap();
                assert_eq!(intersect(&l, &m).unwrap().rank(), d);
            }
        }
    }

    #[test]
    fn seeds_reproduce() {
        let s = SymplecticSpace::standard(1);
        let a = random_lagrangian(&s, &mut rng(3)).unwrap();
        let b = random_lagrangian(&s, &mut rng(3)).unwrap();
        assert_eq!(a, b);
    }
}
