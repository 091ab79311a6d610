//! Randomized property suites.
//!
//! Every suite draws its instances from a ChaCha stream seeded by
//! [`VerifyConfig::seed`], so reports are reproducible. A case fails when its
//! error exceeds the suite tolerance, or when an exact identity breaks.

use std::f64::consts::PI;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact_algebra::{gauss_reciprocity_check, ComplexMatrix, IntMatrix, Rational, UnitPhase};
use crate::maslov::{
    mp_generators, mp_mul, mu, tau, tau_transverse, LagLift, MpElement, MpGenerator,
};
use crate::quantization::{
    bks_matrix, brute_force_intersection_count, corrected_intertwiner, evaluate_exact, intersection_points,
    nontransverse_matrix, nontransverse_point_sum, transverse_matrix, transverse_point_sum, HilbertSpace,
};
use crate::random::{
    random_gauss_instance, random_lagrangian, random_lagrangian_meeting, random_lift, random_sp, rng,
};
use crate::representations::{commutant_dimension, heisenberg_matrix, heisenberg_mul, u_mp, u_sp, HeisenbergElement};
use crate::symplectic_lattice::{adapted_basis, intersect, omega_blocks, pair_adapted_bases, Lagrangian, SymplecticSpace};

pub const DEFAULT_SEED: u64 = 20_240_611;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Entrywise tolerance of the closed-form vs point-sum comparison.
pub const ORACLE_TOLERANCE: f64 = 1e-12;
/// Largest Lagrangian generator entry used by random instances.
pub const ENTRY_BOUND: i64 = 5;

pub const SUITES: [&str; 10] =
    ["unitarity", "triple", "corrected", "oracle", "gauss", "tau", "mu", "heisenberg", "sp", "counting"];

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: DEFAULT_SEED, tolerance: DEFAULT_TOLERANCE }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: usize,
    pub max_error: f64,
    /// Per-case remarks, e.g. measured phases.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), cases: 0, failures: 0, max_error: 0.0, notes: Vec::new() }
    }

    /// Records a floating case.
    fn measure(&mut self, err: f64, tol: f64) {
        self.cases += 1;
        if err.is_nan() || err > tol {
            self.failures += 1;
        }
        if err.is_nan() {
            self.max_error = f64::NAN;
        } else if !self.max_error.is_nan() {
            self.max_error = self.max_error.max(err);
        }
    }

    /// Records an exact case.
    fn check(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    match name {
        "unitarity" => unitarity(cfg),
        "triple" => triple(cfg),
        "corrected" => corrected(cfg),
        "oracle" => oracle(cfg),
        "gauss" => gauss(cfg),
        "tau" => tau_axioms(cfg),
        "mu" => mu_coboundary(cfg),
        "heisenberg" => heisenberg(cfg),
        "sp" => sp_mp(cfg),
        "counting" => counting(cfg),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, cfg)).collect()
}

fn small(l: &Lagrangian) -> bool {
    l.gens().max_abs() <= ENTRY_BOUND
}

fn lagrangian(s: &SymplecticSpace, r: &mut impl Rng) -> Result<Lagrangian> {
    loop {
        let l = random_lagrangian(s, r)?;
        if small(&l) {
            return Ok(l);
        }
    }
}

/// A Lagrangian meeting `l` in a random dimension `0..=g`.
fn partner(l: &Lagrangian, r: &mut impl Rng) -> Result<Lagrangian> {
    let g = l.space().g();
    loop {
        let m = if r.gen_bool(0.3) {
            random_lagrangian(l.space(), r)?
        } else {
            let d = r.gen_range(0..=g);
            random_lagrangian_meeting(l, d, r)?
        };
        if small(&m) {
            return Ok(m);
        }
    }
}

fn setting(r: &mut impl Rng) -> (SymplecticSpace, i64) {
    let g = r.gen_range(1..=2);
    let k = if r.gen() { 2 } else { 4 };
    (SymplecticSpace::standard(g), k)
}

fn space(l: &Lagrangian, k: i64) -> Result<HilbertSpace> {
    HilbertSpace::from_lagrangian(l, k)
}

/// Distance between angles, in `[0, π]`.
fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

/// `‖M − c·I‖_max` plus the phase and modulus deviations of `c` from `e^{iθ}`.
fn scalar_error(m: &ComplexMatrix, theta: f64) -> (f64, f64) {
    let (c, off) = m.scalar_part();
    let err = off.max((c.norm() - 1.0).abs()).max(angle_gap(c.arg(), theta));
    (err, c.arg())
}

/// `‖MM† − I‖` over 200 random pairs, together with the agreement of the
/// exact form with the floating matrix when the former is present.
pub fn unitarity(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("unitarity");
    let mut r = rng(cfg.seed);
    let mut nontransverse = 0;
    for _ in 0..200 {
        let (s, k) = setting(&mut r);
        let l1 = lagrangian(&s, &mut r)?;
        let l2 = partner(&l1, &mut r)?;
        if intersect(&l1, &l2)?.rank() > 0 {
            nontransverse += 1;
        }
        let f = bks_matrix(&space(&l1, k)?, &space(&l2, k)?)?;
        let mut err = f.unitarity_error();
        if let Some(e) = &f.exact {
            err = err.max(evaluate_exact(e).max_abs_diff(&f.matrix));
        }
        rep.measure(err, cfg.tolerance);
    }
    rep.notes.push(format!("{nontransverse} of {} pairs nontransverse", rep.cases));
    Ok(rep)
}

/// `F₁₃F₃₂F₂₁ = e^{−(πi/4)τ(L₁, L₂, L₃)}·I` over 100 random triples.
pub fn triple(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("triple");
    let mut r = rng(cfg.seed ^ 0x7269);
    for case in 0..100 {
        let (s, k) = setting(&mut r);
        let l1 = lagrangian(&s, &mut r)?;
        let l2 = if r.gen() { lagrangian(&s, &mut r)? } else { partner(&l1, &mut r)? };
        let l3 = match r.gen_range(0..3) {
            0 => lagrangian(&s, &mut r)?,
            1 => partner(&l1, &mut r)?,
            _ => partner(&l2, &mut r)?,
        };
        let (h1, h2, h3) = (space(&l1, k)?, space(&l2, k)?, space(&l3, k)?);
        let m = bks_matrix(&h3, &h1)?.compose(&bks_matrix(&h2, &h3)?.compose(&bks_matrix(&h1, &h2)?)?)?;
        let t = tau(&l1, &l2, &l3)?;
        let expected = -PI * t as f64 / 4.0;
        let (err, arg) = scalar_error(&m.matrix, expected);
        rep.measure(err, cfg.tolerance);
        rep.notes.push(format!(
            "case {case}: g={} k={k} tau={t} arg(c)/pi={:.12} expected {:.12}",
            s.g(),
            (arg / PI).rem_euclid(2.0) + 0.0,
            (expected / PI).rem_euclid(2.0) + 0.0
        ));
    }
    Ok(rep)
}

/// `F̃₁₃F̃₃₂F̃₂₁ = I` over 100 random lifted triples in the 4-fold cover.
pub fn corrected(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("corrected");
    let mut r = rng(cfg.seed ^ 0x636f);
    for _ in 0..100 {
        let (s, k) = setting(&mut r);
        let base = lagrangian(&s, &mut r)?;
        let l1 = partner(&base, &mut r)?;
        let l2 = partner(&l1, &mut r)?;
        let l3 = partner(&l2, &mut r)?;
        let lifts: Vec<LagLift> = [&l1, &l2, &l3].iter().map(|l| random_lift(&base, l, 4, &mut r)).collect::<Result<_>>()?;
        let f21 = corrected_intertwiner(&lifts[0], &lifts[1], k)?;
        let f32 = corrected_intertwiner(&lifts[1], &lifts[2], k)?;
        let f13 = corrected_intertwiner(&lifts[2], &lifts[0], k)?;
        let m = f13.compose(&f32.compose(&f21)?)?;
        rep.measure(m.matrix.max_abs_diff(&ComplexMatrix::identity(m.matrix.dim())), cfg.tolerance);
    }
    Ok(rep)
}

fn primitive_lines(bound: i64) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in -bound..=bound {
            if (a > 0 || b > 0) && num_integer::gcd(a, b) == 1 {
                out.push([a, b]);
            }
        }
    }
    out
}

/// Closed forms against the defining point sums: every transverse pair of
/// lines with entries in `[−3, 3]` and `0 < |det ω(2,1)| ≤ 6`, then random
/// `g = 2` pairs, transverse and not.
pub fn oracle(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let tol = cfg.tolerance.min(ORACLE_TOLERANCE);
    let mut rep = SuiteReport::new("oracle");
    let s1 = SymplecticSpace::standard(1);
    let lines: Vec<Lagrangian> = primitive_lines(3)
        .into_iter()
        .map(|v| Lagrangian::from_span(&s1, &IntMatrix::from_row_vecs(&[v.to_vec()], 2)))
        .collect::<Result<_>>()?;
    for k in [2, 4] {
        for a in &lines {
            for b in &lines {
                let (b1, b2) = (adapted_basis(a)?, adapted_basis(b)?);
                let det = omega_blocks(&b1, &b2)?.o21.det()?;
                if det == 0 || det.abs() > 6 {
                    continue;
                }
                let (m, _) = transverse_matrix(&b1, &b2, k)?;
                rep.measure(m.max_abs_diff(&transverse_point_sum(&b1, &b2, k)?), tol);
            }
        }
    }
    let mut r = rng(cfg.seed ^ 0x6f72);
    let s2 = SymplecticSpace::standard(2);
    let (mut tr, mut nt) = (0, 0);
    while tr < 100 || nt < 100 {
        let k = if r.gen() { 2 } else { 4 };
        let l1 = lagrangian(&s2, &mut r)?;
        let l2 = partner(&l1, &mut r)?;
        if intersect(&l1, &l2)?.rank() == 0 {
            let (b1, b2) = (adapted_basis(&l1)?, adapted_basis(&l2)?);
            if tr >= 100 || omega_blocks(&b1, &b2)?.o21.det()?.abs() > 6 {
                continue;
            }
            tr += 1;
            let (m, _) = transverse_matrix(&b1, &b2, k)?;
            rep.measure(m.max_abs_diff(&transverse_point_sum(&b1, &b2, k)?), tol);
        } else if l1 != l2 && nt < 100 {
            nt += 1;
            let (b1, b2) = pair_adapted_bases(&l1, &l2)?;
            let (m, _) = nontransverse_matrix(&b1, &b2, k)?;
            rep.measure(m.max_abs_diff(&nontransverse_point_sum(&b1, &b2, k)?), tol);
        }
    }
    Ok(rep)
}

/// Reciprocity for 100 random `(Q, a, w)` with `g ≤ 3`.
pub fn gauss(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("gauss");
    let mut r = rng(cfg.seed ^ 0x6761);
    for _ in 0..100 {
        let g = r.gen_range(1..=3);
        let (q, a, w) = random_gauss_instance(g, &mut r);
        let (lhs, rhs) = gauss_reciprocity_check(&q, a, &w)?;
        rep.measure((lhs - rhs).norm(), cfg.tolerance);
    }
    Ok(rep)
}

/// Exact τ axioms on 200 random instances.
pub fn tau_axioms(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("tau");
    let mut r = rng(cfg.seed ^ 0x7461);
    for _ in 0..200 {
        let g = r.gen_range(1..=3);
        let s = SymplecticSpace::standard(g);
        let l1 = lagrangian(&s, &mut r)?;
        let l2 = partner(&l1, &mut r)?;
        let l3 = partner(if r.gen() { &l1 } else { &l2 }, &mut r)?;
        let l4 = partner(&l3, &mut r)?;
        let t = tau(&l1, &l2, &l3)?;
        let b = random_sp(&s, 6, &mut r)?;
        let moved = tau(&b.act(&l1)?, &b.act(&l2)?, &b.act(&l3)?)?;
        let antisym = tau(&l2, &l1, &l3)? == -t && tau(&l1, &l3, &l2)? == -t && tau(&l2, &l3, &l1)? == t;
        let cocycle = tau(&l2, &l3, &l4)? - tau(&l1, &l3, &l4)? + tau(&l1, &l2, &l4)? - t == 0;
        let dims = intersect(&l1, &l2)?.rank() + intersect(&l2, &l3)?.rank() + intersect(&l3, &l1)?.rank();
        let parity = (t - (g + dims) as i64).rem_euclid(2) == 0;
        let transverse = match tau_transverse(&l1, &l2, &l3) {
            Ok(v) => v == t,
            Err(Error::NotTransverse) => intersect(&l1, &l3)?.rank() > 0,
            Err(e) => return Err(e),
        };
        rep.check(moved == t && antisym && cocycle && parity && transverse);
    }
    Ok(rep)
}

/// The coboundary identity `μ(a,b) − μ(a,c) + μ(b,c) ≡ τ(A,B,C)`,
/// antisymmetry and parity, exactly mod `2q` for `q ∈ {1, 2, 4}`.
pub fn mu_coboundary(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("mu");
    let mut r = rng(cfg.seed ^ 0x6d75);
    for case in 0..100 {
        let q = [1, 2, 4][case % 3];
        let g = r.gen_range(1..=2);
        let s = SymplecticSpace::standard(g);
        let base = lagrangian(&s, &mut r)?;
        let la = partner(&base, &mut r)?;
        let lb = partner(&la, &mut r)?;
        let lc = partner(&lb, &mut r)?;
        let (a, b, c) = (random_lift(&base, &la, q, &mut r)?, random_lift(&base, &lb, q, &mut r)?, random_lift(&base, &lc, q, &mut r)?);
        let m = 2 * q;
        let lhs = mu(&a, &b, q)? - mu(&a, &c, q)? + mu(&b, &c, q)?;
        let cob = (lhs - tau(&la, &lb, &lc)?).rem_euclid(m) == 0;
        let anti = (mu(&a, &b, q)? + mu(&b, &a, q)?).rem_euclid(m) == 0;
        let parity = (mu(&a, &b, q)? - (g - intersect(&la, &lb)?.rank()) as i64).rem_euclid(2) == 0;
        rep.check(cob && anti && parity);
    }
    Ok(rep)
}

fn random_heisenberg(h: &HilbertSpace, r: &mut impl Rng) -> Result<HeisenbergElement> {
    let k = h.k();
    let n: Vec<i64> = (0..2 * h.g()).map(|_| r.gen_range(-k..2 * k)).collect();
    let phase = UnitPhase::new(Rational::new(r.gen_range(0..24), 12));
    HeisenbergElement::new(h.polarization().basis(), k, phase, &n)
}

fn rho(x: &HeisenbergElement, h: &HilbertSpace) -> Result<ComplexMatrix> {
    Ok(heisenberg_matrix(x, h)?.matrix)
}

/// Group law, representation property, intertwining by BKS operators and the
/// `g = 1` commutant witness.
pub fn heisenberg(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("heisenberg");
    let mut r = rng(cfg.seed ^ 0x6865);
    for _ in 0..60 {
        let (s, k) = setting(&mut r);
        let l1 = lagrangian(&s, &mut r)?;
        let l2 = partner(&l1, &mut r)?;
        let (h1, h2) = (space(&l1, k)?, space(&l2, k)?);
        let (x, y, z) = (random_heisenberg(&h1, &mut r)?, random_heisenberg(&h1, &mut r)?, random_heisenberg(&h1, &mut r)?);
        let xy = heisenberg_mul(&x, &y)?;
        rep.check(heisenberg_mul(&xy, &z)? == heisenberg_mul(&x, &heisenberg_mul(&y, &z)?)?);
        rep.measure((&rho(&x, &h1)? * &rho(&y, &h1)?).max_abs_diff(&rho(&xy, &h1)?), cfg.tolerance);
        let f = bks_matrix(&h1, &h2)?.matrix;
        let b1 = h1.polarization().basis();
        let mut gens: Vec<HeisenbergElement> = (0..s.g())
            .flat_map(|i| [HeisenbergElement::w(b1, k, i), HeisenbergElement::wperp(b1, k, i)])
            .collect::<Result<_>>()?;
        gens.push(x);
        for gen in gens {
            let moved = gen.in_frame(h2.polarization().basis());
            let lhs = &f * &rho(&gen, &h1)?;
            let rhs = &rho(&moved, &h2)? * &f;
            rep.measure(lhs.max_abs_diff(&rhs), cfg.tolerance);
        }
        // XᵢYᵢ = e^{2πi/k} YᵢXᵢ
        let (w, wp) = (HeisenbergElement::w(b1, k, 0)?, HeisenbergElement::wperp(b1, k, 0)?);
        let c = heisenberg_mul(&w, &wp)?.phase() * heisenberg_mul(&wp, &w)?.phase().conj();
        rep.check(c == UnitPhase::root_of_unity(1, k));
    }
    for k in [2, 4] {
        let s = SymplecticSpace::standard(1);
        for l in [Lagrangian::standard(&s), lagrangian(&s, &mut r)?] {
            let h = space(&l, k)?;
            let b = h.polarization().basis();
            let gens = [rho(&HeisenbergElement::w(b, k, 0)?, &h)?, rho(&HeisenbergElement::wperp(b, k, 0)?, &h)?];
            rep.check(commutant_dimension(&gens, 1e-9) == 1);
        }
    }
    Ok(rep)
}

fn random_mp_word(base: &Lagrangian, r: &mut impl Rng) -> Result<MpElement> {
    let g = base.space().g();
    let mut x = MpElement::identity(base);
    for _ in 0..r.gen_range(1..=4) {
        let kind = match r.gen_range(0..5) {
            0 => MpGenerator::Epsilon,
            1 => {
                let mut a = IntMatrix::identity(g);
                let (i, j) = (r.gen_range(0..g), r.gen_range(0..g));
                a[(i, j)] = if i == j { -1 } else { r.gen_range(-1..=1) };
                MpGenerator::Alpha(a)
            }
            2 => {
                let mut b = IntMatrix::zeros(g, g);
                for i in 0..g {
                    for j in i..g {
                        let v = r.gen_range(-1..=1);
                        b[(i, j)] = v;
                        b[(j, i)] = v;
                    }
                }
                MpGenerator::Beta(b)
            }
            3 => MpGenerator::Gamma,
            _ => MpGenerator::GammaEpsilon,
        };
        x = mp_mul(&x, &mp_generators(base, &kind)?)?;
    }
    Ok(x)
}

/// The `τ`-cocycle of `U_P`, multiplicativity of `U_P` on `Mp(ℤ)` words and
/// the pinned `g = 1` matrices and relations.
pub fn sp_mp(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sp");
    let tol = cfg.tolerance;
    let mut r = rng(cfg.seed ^ 0x7370);
    for _ in 0..40 {
        let (s, k) = setting(&mut r);
        let l = lagrangian(&s, &mut r)?;
        let h = space(&l, k)?;
        let (b, b2) = (random_sp(&s, 6, &mut r)?, random_sp(&s, 6, &mut r)?);
        let bb = b.mul(&b2)?;
        let t = tau(&l, &b.act(&l)?, &bb.act(&l)?)?;
        let lhs = &u_sp(&b, &h)?.matrix * &u_sp(&b2, &h)?.matrix;
        let rhs = u_sp(&bb, &h)?.matrix.scale(UnitPhase::new(Rational::new(t as i128, 4)).to_complex());
        rep.measure(lhs.max_abs_diff(&rhs), tol);

        let (x, y) = (random_mp_word(&l, &mut r)?, random_mp_word(&l, &mut r)?);
        let lhs = &u_mp(&x, &h)?.matrix * &u_mp(&y, &h)?.matrix;
        rep.measure(lhs.max_abs_diff(&u_mp(&mp_mul(&x, &y)?, &h)?.matrix), tol);
    }
    let s = SymplecticSpace::standard(1);
    for k in [2, 4] {
        for l in [Lagrangian::standard(&s), lagrangian(&s, &mut r)?] {
            let h = space(&l, k)?;
            let n = h.dim();
            let st = mp_generators(&l, &MpGenerator::GammaEpsilon)?;
            let tt = mp_generators(&l, &MpGenerator::Beta(IntMatrix::diag(&[1])))?;
            let eps = mp_generators(&l, &MpGenerator::Epsilon)?;
            let (us, ut, ue) = (u_mp(&st, &h)?.matrix, u_mp(&tt, &h)?.matrix, u_mp(&eps, &h)?.matrix);
            let amp = 1.0 / (k as f64).sqrt();
            let pinned_s = ComplexMatrix::from_fn(n, |q, q1| {
                (UnitPhase::new(Rational::new(5, 4)) * UnitPhase::root_of_unity((q * q1) as i64, k)).to_complex() * amp
            });
            let pinned_t = ComplexMatrix::from_fn(n, |q, q1| {
                if q == q1 {
                    UnitPhase::new(Rational::new((q * q) as i128, k as i128)).to_complex()
                } else {
                    0.0.into()
                }
            });
            let minus = ComplexMatrix::identity(n).scale((-1.0).into());
            rep.measure(us.max_abs_diff(&pinned_s), tol);
            rep.measure(ut.max_abs_diff(&pinned_t), tol);
            rep.measure((&us * &ut).pow(3).max_abs_diff(&ComplexMatrix::identity(n)), tol);
            rep.measure(us.pow(4).max_abs_diff(&minus), tol);
            rep.measure(ue.max_abs_diff(&minus), tol);
            let st_tt = mp_mul(&st, &tt)?;
            let cube = mp_mul(&st_tt, &mp_mul(&st_tt, &st_tt)?)?;
            let fourth = (0..3).try_fold(st.clone(), |acc, _| mp_mul(&acc, &st))?;
            rep.check(cube.sp().is_identity() && cube.z() == 0);
            rep.check(fourth.sp().is_identity() && fourth.z() == 4);
        }
    }
    Ok(rep)
}

/// `k^g` labels, `|det ω(2,1)|` points per pair of fibres, and brute-force
/// congruence counts for `g = 1`.
pub fn counting(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("counting");
    let mut r = rng(cfg.seed ^ 0x636e);
    for _ in 0..60 {
        let (s, k) = setting(&mut r);
        let l1 = lagrangian(&s, &mut r)?;
        let l2 = loop {
            let m = lagrangian(&s, &mut r)?;
            if intersect(&l1, &m)?.rank() == 0 {
                break m;
            }
        };
        let (h1, h2) = (space(&l1, k)?, space(&l2, k)?);
        rep.check(h1.dim() == (k as usize).pow(s.g() as u32) && h1.labels().len() == h1.dim());
        let (b1, b2) = (h1.polarization().basis(), h2.polarization().basis());
        let det = omega_blocks(b1, b2)?.o21.det()?.unsigned_abs() as usize;
        let q1: Vec<i64> = (0..s.g()).map(|_| r.gen_range(0..k)).collect();
        let q2: Vec<i64> = (0..s.g()).map(|_| r.gen_range(0..k)).collect();
        let pts = intersection_points(&h1, &h2, &q1, &q2)?;
        let mut ok = pts.len() == det;
        if s.g() == 1 {
            ok &= brute_force_intersection_count(b1, b2, k, &q1, &q2)? == det;
        }
        rep.check(ok);
    }
    Ok(rep)
}
