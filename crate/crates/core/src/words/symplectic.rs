//! Action of twist words on the first homology of the capped surface.
//!
//! Classes are integer vectors in the basis `a_1, b_1, ..., a_g, b_g` with
//! `⟨a_i, b_i⟩ = 1`.

use std::fmt;

use super::{CurveSystem, GeneratorKind, TwistWord};
use crate::error::Result;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<i128>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| v as i128)).collect::<Vec<_>>();
        assert_eq!(data.len(), n * n, "matrix must be square");
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut data = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * o.data[k * n + j];
                }
            }
        }
        Matrix { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| {
                let s: i128 = (0..self.n).map(|j| self.data[i * self.n + j] * v[j] as i128).sum();
                i64::try_from(s).expect("homology class overflow")
            })
            .collect()
    }

    /// Inverse of a symplectic matrix, `-J Mᵀ J`.
    pub fn symplectic_inverse(&self) -> Matrix {
        let n = self.n;
        let j = standard_j(n);
        let mut t = Matrix { n, data: vec![0; n * n] };
        for r in 0..n {
            for c in 0..n {
                t.data[r * n + c] = self.data[c * n + r];
            }
        }
        let mut out = j.mul(&t).mul(&j);
        for v in &mut out.data {
            *v = -*v;
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>4}")).collect();
            writeln!(f, "[{}]", cells.join(""))?;
        }
        Ok(())
    }
}

fn standard_j(n: usize) -> Matrix {
    let mut j = Matrix { n, data: vec![0; n * n] };
    for i in (0..n).step_by(2) {
        j.data[i * n + i + 1] = 1;
        j.data[(i + 1) * n + i] = -1;
    }
    j
}

/// `⟨x, y⟩` in the interleaved standard basis.
pub fn symplectic_form(x: &[i64], y: &[i64]) -> i64 {
    assert_eq!(x.len(), y.len());
    x.chunks(2).zip(y.chunks(2)).map(|(a, b)| a[0] * b[1] - a[1] * b[0]).sum()
}

/// `x ↦ x + sign·⟨x, c⟩·c`, the action of a right-handed twist (`sign = 1`).
pub fn transvection(c: &[i64], sign: i64) -> Matrix {
    let n = c.len();
    let mut m = Matrix::identity(n);
    for j in 0..n {
        let mut e = vec![0i64; n];
        e[j] = 1;
        let k = symplectic_form(&e, c) * sign;
        if k != 0 {
            for (i, ci) in c.iter().enumerate() {
                m.data[i * n + j] += (k * ci) as i128;
            }
        }
    }
    m
}

/// Product of the transvections of the word's twists. Boundary twists,
/// fractional twists and stabilization markers act trivially.
pub fn word_to_symplectic(word: &TwistWord, sys: &CurveSystem) -> Result<Matrix> {
    let n = 2 * sys.genus;
    let mut m = Matrix::identity(n);
    for g in &word.generators {
        match g.kind {
            GeneratorKind::FractionalBoundaryTwist | GeneratorKind::StabilizationMarker => continue,
            GeneratorKind::DehnTwist | GeneratorKind::BraidHalfTwist => {
                let c = sys.class(&g.curve)?;
                if c.iter().all(|&v| v == 0) {
                    continue;
                }
                m = m.mul(&transvection(c, g.sign));
            }
        }
    }
    Ok(m)
}

pub fn words_equal_on_homology(w1: &TwistWord, w2: &TwistWord, sys: &CurveSystem) -> Result<bool> {
    Ok(word_to_symplectic(w1, sys)? == word_to_symplectic(w2, sys)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::chain_model;

    #[test]
    fn transvection_matches_formula() {
        let c = vec![1, 0];
        let m = transvection(&c, 1);
        // b ↦ b + ⟨b, a⟩ a = b - a
        assert_eq!(m.apply(&[0, 1]), vec![-1, 1]);
        assert_eq!(m.apply(&[1, 0]), vec![1, 0]);
    }

    #[test]
    fn inverse_twist_is_inverse() {
        let c = vec![1, -2, 0, 3];
        assert!(transvection(&c, 1).mul(&transvection(&c, -1)).is_identity());
        assert_eq!(transvection(&c, 1).symplectic_inverse(), transvection(&c, -1));
    }

    #[test]
    fn chain_order_six() {
        let sys = chain_model(1, 1);
        let w = TwistWord::positive(&["c1", "c2"]).pow(6);
        assert!(word_to_symplectic(&w, &sys).unwrap().is_identity());
        let w3 = TwistWord::positive(&["c1", "c2"]).pow(3);
        assert_eq!(word_to_symplectic(&w3, &sys).unwrap().apply(&[1, 0]), vec![-1, 0]);
    }

    #[test]
    fn twist_and_inverse_differ() {
        let sys = chain_model(1, 1);
        let a = TwistWord::positive(&["c1"]);
        assert!(!words_equal_on_homology(&a, &a.inverse(), &sys).unwrap());
        assert!(words_equal_on_homology(&a, &a, &sys).unwrap());
    }
}
