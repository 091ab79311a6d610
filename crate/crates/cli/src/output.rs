use serde::Serialize;
use serde_json::{json, Value};
use torus_quant::exact_algebra::{ComplexMatrix, IntMatrix, PhaseSum, Rational};
use torus_quant::symplectic_lattice::AdaptedBasis;

pub fn ratio(x: Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn int_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.row_vecs()
}

pub fn frame(b: &AdaptedBasis) -> Value {
    json!({ "w": int_rows(b.w()), "wperp": int_rows(b.wperp()) })
}

/// Entries as `[re, im]`; serde_json writes the shortest decimal that
/// reparses to the same `f64`.
pub fn matrix(m: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| [m.get(i, j).re, m.get(i, j).im]).collect()).collect()
}

#[derive(Serialize)]
struct Term {
    t: String,
    c: String,
}

#[derive(Serialize)]
struct Entry {
    amp2: String,
    terms: Vec<Term>,
}

pub fn exact(e: &[PhaseSum], n: usize) -> Value {
    let entry = |p: &PhaseSum| Entry {
        amp2: ratio(p.amp2()),
        terms: p.terms().iter().map(|(ph, c)| Term { t: ratio(ph.t()), c: ratio(*c) }).collect(),
    };
    let rows: Vec<Vec<Entry>> = (0..n).map(|i| (0..n).map(|j| entry(&e[i * n + j])).collect()).collect();
    serde_json::to_value(rows).expect("serializable")
}

pub fn matrix_text(m: &ComplexMatrix) -> String {
    let cells: Vec<Vec<String>> = (0..m.dim())
        .map(|i| {
            (0..m.dim())
                .map(|j| {
                    let z = m.get(i, j);
                    format!("{:+.6}{:+.6}i", z.re + 0.0, z.im + 0.0)
                })
                .collect()
        })
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    cells
        .iter()
        .map(|row| row.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join("  "))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn rows_text(m: &IntMatrix) -> String {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}
