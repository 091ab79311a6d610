//! Hermite and Smith normal forms with their transformation matrices, and the
//! lattice operations built on them.

use num_integer::Integer;

use super::int_matrix::IntMatrix;
use crate::error::{Error, Result};

/// Row Hermite normal form: returns `(H, U)` with `U·M = H`, `U` unimodular,
/// `H` in row echelon form with positive pivots, entries above each pivot in
/// `[0, pivot)`, and zero rows at the bottom.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| h[(i, c)] != 0)
                .min_by_key(|&i| h[(i, c)].abs());
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if h[(i, c)] != 0 {
                    let q = Integer::div_floor(&h[(i, c)], &h[(r, c)]);
                    h.add_row_multiple(i, r, -q);
                    u.add_row_multiple(i, r, -q);
                    if h[(i, c)] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, c)] == 0 {
            continue;
        }
        if h[(r, c)] < 0 {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = Integer::div_floor(&h[(i, c)], &h[(r, c)]);
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        r += 1;
    }
    (h, u)
}

/// Rank over ℚ.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hnf(m);
    (0..h.rows()).filter(|&i| h.row(i).iter().any(|&x| x != 0)).count()
}

/// HNF with the zero rows removed: a canonical basis of the row lattice.
pub fn row_lattice_basis(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(m);
    let r = (0..h.rows()).filter(|&i| h.row(i).iter().any(|&x| x != 0)).count();
    h.submatrix(0, r, 0, h.cols())
}

/// Smith normal form: returns `(S, U, V)` with `U·M·V = S` diagonal,
/// nonnegative, and `S_ii | S_{i+1,i+1}`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&s, t) else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)] != 0 {
                    let q = Integer::div_floor(&s[(i, t)], &s[(t, t)]);
                    s.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                    clean &= s[(i, t)] == 0;
                }
            }
            for j in t + 1..cols {
                if s[(t, j)] != 0 {
                    let q = Integer::div_floor(&s[(t, j)], &s[(t, t)]);
                    s.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                    clean &= s[(t, j)] == 0;
                }
            }
            if !clean {
                // Move the smallest remainder in the pivot cross onto the pivot.
                let best_row = (t + 1..rows)
                    .filter(|&i| s[(i, t)] != 0)
                    .min_by_key(|&i| s[(i, t)].abs());
                let best_col = (t + 1..cols)
                    .filter(|&j| s[(t, j)] != 0)
                    .min_by_key(|&j| s[(t, j)].abs());
                let row_val = best_row.map(|i| s[(i, t)].abs());
                let col_val = best_col.map(|j| s[(t, j)].abs());
                match (row_val, col_val) {
                    (Some(a), Some(b)) if b < a => {
                        let j = best_col.unwrap();
                        s.swap_cols(t, j);
                        v.swap_cols(t, j);
                    }
                    (Some(_), _) => {
                        let i = best_row.unwrap();
                        s.swap_rows(t, i);
                        u.swap_rows(t, i);
                    }
                    (None, Some(_)) => {
                        let j = best_col.unwrap();
                        s.swap_cols(t, j);
                        v.swap_cols(t, j);
                    }
                    (None, None) => unreachable!(),
                }
                continue;
            }
            let d = s[(t, t)];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| s[(i, j)] % d != 0));
            match bad {
                Some(i) => {
                    s.add_row_multiple(t, i, 1);
                    u.add_row_multiple(t, i, 1);
                }
                None => break,
            }
        }
        if s[(t, t)] < 0 {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

fn smallest_entry(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = s[(i, j)].abs();
            if x != 0 && best.map_or(true, |(bi, bj)| x < s[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Nonzero invariant factors of `M`.
pub fn invariant_factors(m: &IntMatrix) -> Vec<i64> {
    let (s, _, _) = snf(m);
    (0..s.rows().min(s.cols())).map(|i| s[(i, i)]).filter(|&d| d != 0).collect()
}

/// Inverse of a unimodular matrix.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    // The HNF of a unimodular matrix is the identity, so U = M⁻¹.
    let (_, u) = hnf(m);
    Ok(u)
}

/// Coset representatives of `ℤⁿ / A·ℤⁿ`, enumerated lexicographically over the
/// Smith box `∏ [0, dᵢ)` and mapped back by `U⁻¹` where `U·A·V = D`.
pub fn coset_reps(a: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("coset_reps needs a square matrix".into()));
    }
    if a.det()? == 0 {
        return Err(Error::SingularMatrix);
    }
    let n = a.rows();
    let (s, u, _) = snf(a);
    let u_inv = unimodular_inverse(&u)?;
    let d: Vec<i64> = (0..n).map(|i| s[(i, i)]).collect();
    let mut out = Vec::new();
    let mut y = vec![0i64; n];
    loop {
        out.push(u_inv.mul_vec(&y));
        // Odometer with the last coordinate fastest.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            y[i] += 1;
            if y[i] < d[i] {
                break;
            }
            y[i] = 0;
        }
    }
}

/// Whether `x − y ∈ A·ℤⁿ`.
pub fn same_coset(a: &IntMatrix, x: &[i64], y: &[i64]) -> Result<bool> {
    let (s, u, _) = snf(a);
    if (0..s.rows()).any(|i| s[(i, i)] == 0) {
        return Err(Error::SingularMatrix);
    }
    let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    // x − y = U⁻¹·D·V⁻¹·z  ⇔  U(x − y) ∈ Dℤⁿ.
    let w = u.mul_vec(&diff);
    Ok(w.iter().enumerate().all(|(i, &c)| c % s[(i, i)] == 0))
}

/// Basis of the integer left kernel `{x : x·M = 0}`, in HNF.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(m);
    let r = (0..h.rows()).filter(|&i| h.row(i).iter().any(|&x| x != 0)).count();
    row_lattice_basis(&u.submatrix(r, u.rows(), 0, u.cols()))
}

/// Basis (in HNF) of the saturation `span_ℚ(rows) ∩ ℤⁿ`.
pub fn saturate(m: &IntMatrix) -> IntMatrix {
    let (s, _, v) = snf(m);
    let r = (0..s.rows().min(s.cols())).filter(|&i| s[(i, i)] != 0).count();
    let v_inv = unimodular_inverse(&v).expect("SNF transform is unimodular");
    row_lattice_basis(&v_inv.submatrix(0, r, 0, v_inv.cols()))
}

/// Rows are independent and generate a saturated sublattice.
pub fn is_primitive(m: &IntMatrix) -> bool {
    let f = invariant_factors(m);
    f.len() == m.rows() && f.iter().all(|&d| d == 1)
}

/// Coefficients `c` with `Σ cᵢ·aᵢ = gcd(a)` (gcd taken nonnegative).
pub fn bezout(a: &[i64]) -> (i64, Vec<i64>) {
    let mut g = 0i64;
    let mut c = vec![0i64; a.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let e = g.extended_gcd(&x);
        // e.gcd = e.x·g + e.y·x
        for cj in c.iter_mut().take(i) {
            *cj *= e.x;
        }
        c[i] = e.y;
        g = e.gcd;
    }
    if g < 0 {
        g = -g;
        c.iter_mut().for_each(|x| *x = -*x);
    }
    (g, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn hnf_identity_and_zero() {
        let i = IntMatrix::identity(3);
        assert_eq!(hnf(&i), (i.clone(), i.clone()));
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(hnf(&z), (z.clone(), IntMatrix::identity(2)));
    }

    #[test]
    fn hnf_two_by_two() {
        let a = m(&[&[2, 4], &[1, 3]]);
        let (h, u) = hnf(&a);
        assert_eq!(&u * &a, h);
        assert_eq!(u.det().unwrap().abs(), 1);
        assert_eq!(h[(1, 0)], 0);
        assert!(h[(0, 0)] > 0 && h[(1, 1)] > 0);
        assert_eq!(h.det().unwrap().abs(), a.det().unwrap().abs());
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf(&IntMatrix::identity(2)).0, IntMatrix::identity(2));
        let a = m(&[&[2, 0], &[0, 3]]);
        let (s, u, v) = snf(&a);
        assert_eq!(s, IntMatrix::diag(&[1, 6]));
        assert_eq!(&(&u * &a) * &v, s);
        let a = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(snf(&a).0, IntMatrix::identity(2));
    }

    #[test]
    fn coset_examples() {
        assert_eq!(coset_reps(&m(&[&[1]])).unwrap(), vec![vec![0]]);
        let mut r = coset_reps(&m(&[&[-2]])).unwrap();
        r.iter_mut().for_each(|v| v[0] = v[0].rem_euclid(2));
        r.sort();
        assert_eq!(r, vec![vec![0], vec![1]]);
        let reps = coset_reps(&m(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(reps.len(), 6);
        assert!(matches!(coset_reps(&m(&[&[1, 2], &[2, 4]])), Err(Error::SingularMatrix)));
    }

    #[test]
    fn kernel_and_saturation() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        let k = left_kernel(&a);
        assert_eq!(k.rows(), 1);
        assert!((&k * &a).is_zero());
        let s = saturate(&m(&[&[2, 4, 0]]));
        assert_eq!(s, m(&[&[1, 2, 0]]));
        assert!(is_primitive(&m(&[&[1, 2, 0]])));
        assert!(!is_primitive(&m(&[&[2, 4, 0]])));
    }

    #[test]
    fn bezout_coefficients() {
        let a = [6, 10, 15];
        let (g, c) = bezout(&a);
        assert_eq!(g, 1);
        assert_eq!(a.iter().zip(&c).map(|(x, y)| x * y).sum::<i64>(), 1);
        assert_eq!(bezout(&[0, -4]).0, 4);
    }
}
