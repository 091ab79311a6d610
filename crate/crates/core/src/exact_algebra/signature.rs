use num_traits::{Signed, Zero};

use super::rational::RatMatrix;
use crate::error::{Error, Result};

/// Inertia of a real symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Signature {
    /// `n₊ − n₋`.
    pub fn value(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }
}

/// Exact inertia by symmetric elimination over ℚ.
///
/// A nonzero diagonal entry is eliminated as a 1×1 pivot. When the remaining
/// diagonal is zero but some `a_ij ≠ 0`, the block `[[0, a], [a, 0]]` is used
/// as a 2×2 pivot; it contributes one positive and one negative direction.
pub fn signature(s: &RatMatrix) -> Result<Signature> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut a = s.clone();
    let mut live: Vec<usize> = (0..a.rows()).collect();
    let mut sig = Signature { n_plus: 0, n_minus: 0, n_zero: 0 };
    while !live.is_empty() {
        if let Some(pos) = live.iter().position(|&i| !a[(i, i)].is_zero()) {
            let p = live.remove(pos);
            let d = a[(p, p)];
            if d.is_positive() {
                sig.n_plus += 1;
            } else {
                sig.n_minus += 1;
            }
            for &i in &live {
                let f = a[(i, p)] / d;
                if f.is_zero() {
                    continue;
                }
                for &j in &live {
                    let x = a[(p, j)];
                    a[(i, j)] -= f * x;
                }
            }
            continue;
        }
        let pair = live.iter().enumerate().find_map(|(x, &i)| {
            live[x + 1..].iter().find(|&&j| !a[(i, j)].is_zero()).map(|&j| (i, j))
        });
        let Some((p, q)) = pair else {
            sig.n_zero += live.len();
            break;
        };
        live.retain(|&i| i != p && i != q);
        sig.n_plus += 1;
        sig.n_minus += 1;
        // Schur complement of the pivot block P = [[0, c], [c, 0]], P⁻¹ = P / c².
        let c = a[(p, q)];
        for &i in &live {
            let (ip, iq) = (a[(i, p)], a[(i, q)]);
            if ip.is_zero() && iq.is_zero() {
                continue;
            }
            for &j in &live {
                let (pj, qj) = (a[(p, j)], a[(q, j)]);
                a[(i, j)] -= (ip * qj + iq * pj) / c;
            }
        }
    }
    Ok(sig)
}
