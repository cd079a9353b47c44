//! Integer matrices, Smith normal form with transform accumulation, and the
//! homology of the one-vertex presentation 2-complex.
//!
//! Every entry is an arbitrary-precision integer and every result is exact.
//! The SNF pivot strategy picks the smallest nonzero absolute value in the
//! remaining block, which keeps entry growth moderate at these sizes;
//! correctness is certified by recomposing `U * A * V` rather than by the
//! strategy itself.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::presentations::Presentation;

/// A dense rows-by-cols integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntegerMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut out = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let add = factor * self.get(source, j);
            let v = self.get(target, j) + add;
            self.set(target, j, v);
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let add = factor * self.get(i, source);
            let v = self.get(i, target) + add;
            self.set(i, target, v);
        }
    }

    fn negate_row(&mut self, row: usize) {
        for j in 0..self.cols {
            let v = -self.get(row, j);
            self.set(row, j, v);
        }
    }

    /// Matrix exchange as JSON arrays of decimal strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| {
                let row: Vec<Value> = (0..self.cols)
                    .map(|j| Value::String(self.get(i, j).to_string()))
                    .collect();
                Value::Array(row)
            })
            .collect();
        Value::Array(rows)
    }

    /// Accepts JSON arrays of numbers or decimal strings.
    pub fn from_json(value: &Value) -> Result<Self, String> {
        let rows = value.as_array().ok_or("expected an array of rows")?;
        let mut data: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len());
        for row in rows {
            let entries = row.as_array().ok_or("row must be an array")?;
            let mut out = Vec::with_capacity(entries.len());
            for e in entries {
                let v = match e {
                    Value::Number(n) => n
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or("number out of i64 range; use a decimal string")?,
                    Value::String(s) => {
                        BigInt::from_str(s).map_err(|_| "bad decimal string")?
                    }
                    _ => return Err("entry must be number or string".to_string()),
                };
                out.push(v);
            }
            data.push(out);
        }
        let width = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != width) {
            return Err("ragged rows".to_string());
        }
        Ok(IntegerMatrix::from_rows(data))
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Smith normal form data: `u * a * v` is diagonal with the entries of
/// `diag`, each nonnegative and dividing the next, and `u`, `v` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diag: Vec<BigInt>,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// The nontrivial invariant factors (entries at least 2).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag
            .iter()
            .filter(|d| d.magnitude() > &1u32.into())
            .cloned()
            .collect()
    }

    /// The diagonal as a full matrix of the original shape.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(rows, cols);
        for (i, v) in self.diag.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

/// Smith normal form over the integers with explicit unimodular transforms.
pub fn smith_normal_form(a: &IntegerMatrix) -> SnfResult {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let limit = rows.min(cols);
    let mut k = 0;
    while k < limit {
        // smallest nonzero |entry| in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if d.get(i, j).is_zero() {
                    continue;
                }
                match &pivot {
                    Some((pi, pj)) if d.get(*pi, *pj).magnitude() <= d.get(i, j).magnitude() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        // one Euclidean sweep; nonzero remainders shrink the pivot, so loop
        let mut dirty = false;
        for i in (k + 1)..rows {
            if d.get(i, k).is_zero() {
                continue;
            }
            let q = -(d.get(i, k) / d.get(k, k));
            if !q.is_zero() {
                d.add_row(i, k, &q);
                u.add_row(i, k, &q);
            }
            if !d.get(i, k).is_zero() {
                dirty = true;
            }
        }
        for j in (k + 1)..cols {
            if d.get(k, j).is_zero() {
                continue;
            }
            let q = -(d.get(k, j) / d.get(k, k));
            if !q.is_zero() {
                d.add_col(j, k, &q);
                v.add_col(j, k, &q);
            }
            if !d.get(k, j).is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        // divisibility of the remaining block by the pivot
        let mut fixed = true;
        'scan: for i in (k + 1)..rows {
            for j in (k + 1)..cols {
                if !(d.get(i, j) % d.get(k, k)).is_zero() {
                    let one = BigInt::one();
                    d.add_row(k, i, &one);
                    u.add_row(k, i, &one);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }
    let diag: Vec<BigInt> = (0..limit).map(|i| d.get(i, i).clone()).collect();
    SnfResult { diag, u, v }
}

/// Whether the integer row span of `a` contains the vector `target`.
pub fn row_span_contains(a: &IntegerMatrix, target: &[BigInt]) -> bool {
    assert_eq!(target.len(), a.cols(), "vector length mismatch");
    let snf = smith_normal_form(a);
    // x a = target  <=>  y d = target v  with y = x u^-1 over the integers
    let tv = IntegerMatrix::from_rows(vec![target.to_vec()]).mul(&snf.v);
    for j in 0..a.cols() {
        let entry = tv.get(0, j);
        if j < snf.diag.len() && !snf.diag[j].is_zero() {
            if !(entry % &snf.diag[j]).is_zero() {
                return false;
            }
        } else if !entry.is_zero() {
            return false;
        }
    }
    true
}

/// Betti number and torsion coefficients of one homology group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.betti > 0 {
            parts.push(match self.betti {
                1 => "Z".to_string(),
                b => format!("Z^{b}"),
            });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Homology of the presentation 2-complex (one vertex, a loop per generator,
/// a disk per relator).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationHomology {
    pub h0: HomologyGroup,
    pub h1: HomologyGroup,
    pub h2: HomologyGroup,
}

impl PresentationHomology {
    pub fn to_json(&self) -> Value {
        let group = |h: &HomologyGroup| {
            json!({
                "betti": h.betti,
                "torsion": h.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            })
        };
        json!({ "H0": group(&self.h0), "H1": group(&self.h1), "H2": group(&self.h2) })
    }
}

/// Homology of the one-vertex CW model of a presentation. The boundary map
/// from 2-cells to 1-cells is the abelianization matrix; the 1-cell boundary
/// map is zero.
pub fn presentation_homology(p: &Presentation) -> PresentationHomology {
    let n = p.generators().len();
    let m = p.relations().len();
    let snf = smith_normal_form(&p.abelianization_matrix());
    let rank = snf.rank();
    PresentationHomology {
        h0: HomologyGroup {
            betti: 1,
            torsion: Vec::new(),
        },
        h1: HomologyGroup {
            betti: n - rank,
            torsion: snf.torsion(),
        },
        h2: HomologyGroup {
            betti: m - rank,
            torsion: Vec::new(),
        },
    }
}

/// Euler characteristic of the presentation complex: `1 - n + m`, which is
/// `1 + deficiency`.
pub fn euler_characteristic(p: &Presentation) -> i64 {
    1 - p.generators().len() as i64 + p.relations().len() as i64
}

/// The second Betti number the bounded 5-manifold construction would force
/// on the boundary when the presented group is trivial: `2 * deficiency`.
/// This is a reported formula, not a computation done here.
pub fn expected_boundary_beta2(p: &Presentation) -> i64 {
    2 * p.deficiency()
}
