//! Braid words in the standard and band generators, and the braids whose
//! branched covers give cable pages.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CableError, Result};
use crate::words::{Generator, TwistWord};

/// `σ_{i,j}^{±1}` with `i < j`; `σ_i` is `σ_{i,i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidLetter {
    pub i: usize,
    pub j: usize,
    pub sign: i64,
}

impl BraidLetter {
    pub fn sigma(i: usize, sign: i64) -> Self {
        BraidLetter { i, j: i + 1, sign: sign.signum() }
    }

    pub fn band(i: usize, j: usize, sign: i64) -> Self {
        BraidLetter { i: i.min(j), j: i.max(j), sign: sign.signum() }
    }

    pub fn is_standard(&self) -> bool {
        self.j == self.i + 1
    }

    pub fn inverse(&self) -> Self {
        BraidLetter { sign: -self.sign, ..*self }
    }

    /// `σ_{i,j} = (σ_{j-1} ⋯ σ_{i+1}) σ_i (σ_{i+1}^{-1} ⋯ σ_{j-1}^{-1})`.
    pub fn expand(&self) -> Vec<BraidLetter> {
        let outer: Vec<BraidLetter> = (self.i + 1..self.j).rev().map(|k| BraidLetter::sigma(k, 1)).collect();
        let mut out = outer.clone();
        out.push(BraidLetter::sigma(self.i, self.sign));
        out.extend(outer.iter().rev().map(BraidLetter::inverse));
        out
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = if self.sign < 0 { "^-1" } else { "" };
        if self.is_standard() {
            write!(f, "σ_{}{inv}", self.i)
        } else {
            write!(f, "σ_{{{},{}}}{inv}", self.i, self.j)
        }
    }
}

/// A braid on `strand_count` strands, letters read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    pub strand_count: usize,
    pub letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        for l in &letters {
            if l.i < 1 || l.j <= l.i || l.j > strand_count {
                return Err(CableError::Domain(format!("letter {l} out of range for {strand_count} strands")));
            }
        }
        Ok(BraidWord { strand_count, letters })
    }

    pub fn identity(strand_count: usize) -> Self {
        BraidWord { strand_count, letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sign > 0)
    }

    pub fn then(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().copied());
        BraidWord { strand_count: self.strand_count.max(other.strand_count), letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().map(BraidLetter::inverse).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(BraidWord::identity(self.strand_count), |acc, _| acc.then(&base))
    }

    /// The same braid in standard generators only.
    pub fn expand(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().flat_map(BraidLetter::expand).collect(),
        }
    }

    /// Strands each letter passes over between its endpoints.
    pub fn band_crossings(&self) -> usize {
        self.letters.iter().map(|l| l.j - l.i - 1).sum()
    }

    /// `perm[k]` is the final position of the strand starting at `k`
    /// (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strand_count).collect();
        for l in &self.letters {
            let (a, b) = (l.i - 1, l.j - 1);
            for pos in at.iter_mut() {
                if *pos == a {
                    *pos = b;
                } else if *pos == b {
                    *pos = a;
                }
            }
        }
        at
    }

    /// Lift through a double branched cover: `σ_i` becomes a twist about the
    /// lift of the `i`-th arc. Letters act left to right, twists right to
    /// left, so the order reverses.
    pub fn lift(&self, arc_curve: impl Fn(usize) -> String) -> TwistWord {
        TwistWord::new(
            self.expand().letters.iter().rev().map(|l| Generator::twist_signed(&arc_curve(l.i), l.sign)).collect(),
        )
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Garside half twist on strands `lo..=hi`:
/// `(σ_{hi-1} ⋯ σ_lo)(σ_{hi-1} ⋯ σ_{lo+1}) ⋯ σ_{hi-1}`.
pub fn garside(strand_count: usize, lo: usize, hi: usize) -> BraidWord {
    let mut letters = Vec::new();
    for start in lo..hi {
        letters.extend((start..hi).rev().map(|k| BraidLetter::sigma(k, 1)));
    }
    BraidWord { strand_count, letters }
}

/// Number of branch points of the simple cover presenting a page of genus
/// `g` with `n` boundary components over the disk.
pub fn branch_point_count(g: usize, n: usize) -> usize {
    if n <= 1 {
        2 * g + 1
    } else {
        (2 * g + 2) + 2 * (n - 2)
    }
}

/// One positive Markov stabilization: `letter` adds strand `new_strand`,
/// banded to `attached_to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkovStep {
    pub letter: usize,
    pub new_strand: usize,
    pub attached_to: usize,
}

/// A braid together with the stabilizations building it from the trivial
/// braid on `start_strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizedBraid {
    pub braid: BraidWord,
    pub start_strands: usize,
    pub steps: Vec<MarkovStep>,
}

impl StabilizedBraid {
    /// Every letter is positive and used once, each step adds a strand not
    /// seen before and attaches it to a strand already present.
    pub fn verify(&self) -> bool {
        let mut present: Vec<bool> = (1..=self.braid.strand_count).map(|s| s <= self.start_strands).collect();
        let mut used = vec![false; self.braid.letters.len()];
        for s in &self.steps {
            let Some(l) = self.braid.letters.get(s.letter) else { return false };
            if used[s.letter] || l.sign <= 0 {
                return false;
            }
            let ends = (l.i == s.new_strand && l.j == s.attached_to) || (l.j == s.new_strand && l.i == s.attached_to);
            if !ends || present[s.new_strand - 1] || !present[s.attached_to - 1] {
                return false;
            }
            used[s.letter] = true;
            present[s.new_strand - 1] = true;
        }
        used.iter().all(|&u| u) && present.iter().all(|&p| p)
    }
}

/// The `dp`-strand braid `∏_{i=2}^{p} ∏_{j=1}^{d} σ_{(p-i)d+j, (p-i+1)d+j}`
/// with its stabilization certificate.
pub fn braid_bp(d: usize, p: usize) -> Result<StabilizedBraid> {
    if d < 1 || p < 2 {
        return Err(CableError::Domain(format!("need d ≥ 1 and p ≥ 2, got d = {d}, p = {p}")));
    }
    let mut letters = Vec::new();
    for i in 2..=p {
        for j in 1..=d {
            letters.push(BraidLetter::band((p - i) * d + j, (p - i + 1) * d + j, 1));
        }
    }
    let braid = BraidWord::new(d * p, letters)?;
    // strands of block k are added after block k-1, which sits later in the word
    let mut steps = Vec::new();
    for i in (2..=p).rev() {
        for j in 1..=d {
            let letter = (i - 2) * d + (j - 1);
            let l = braid.letters[letter];
            steps.push(MarkovStep { letter, new_strand: l.j, attached_to: l.i });
        }
    }
    Ok(StabilizedBraid { braid, start_strands: d, steps })
}

/// The two factorizations of the braid whose lift is the rotation of the
/// `(2,2)`-cable of a genus `g` page with connected binding, on `4g+2`
/// strands split into halves of `m = 2g+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationBraids {
    pub m: usize,
    /// `Δ · Δ_1^{-2} · Δ_2^{-2}`.
    pub garside_form: BraidWord,
    /// `b_1 ⋯ b_m`.
    pub conjugate_form: BraidWord,
    /// The factors `b_k`.
    pub factors: Vec<BraidWord>,
}

/// `b_1 = σ_m`, `b_{k+1} = σ_{m-k} σ_{m+k} b_k σ_{m+k}^{-1} σ_{m-k}^{-1}`.
pub fn rotation_braids_22(g: usize) -> RotationBraids {
    let m = 2 * g + 1;
    let n = 2 * m;
    let delta = garside(n, 1, n);
    let d1 = garside(n, 1, m);
    let d2 = garside(n, m + 1, n);
    let garside_form = delta.then(&d1.pow(-2)).then(&d2.pow(-2));
    let mut factors = vec![BraidWord { strand_count: n, letters: vec![BraidLetter::sigma(m, 1)] }];
    for k in 1..m {
        let prev = factors.last().expect("nonempty");
        let left = vec![BraidLetter::sigma(m - k, 1), BraidLetter::sigma(m + k, 1)];
        let right = vec![BraidLetter::sigma(m + k, -1), BraidLetter::sigma(m - k, -1)];
        let mut letters = left;
        letters.extend(prev.letters.iter().copied());
        letters.extend(right);
        factors.push(BraidWord { strand_count: n, letters });
    }
    let conjugate_form = factors.iter().fold(BraidWord::identity(n), |acc, b| acc.then(b));
    RotationBraids { m, garside_form, conjugate_form, factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band_generator_swaps_its_ends() {
        for (i, j) in [(1, 2), (1, 4), (2, 5), (3, 7)] {
            let w = BraidWord::new(8, vec![BraidLetter::band(i, j, 1)]).unwrap();
            let perm = w.expand().permutation();
            for (k, &to) in perm.iter().enumerate() {
                let k = k + 1;
                let expect = if k == i {
                    j
                } else if k == j {
                    i
                } else {
                    k
                };
                assert_eq!(to + 1, expect);
            }
        }
    }

    #[test]
    fn branch_points() {
        assert_eq!(branch_point_count(1, 3), 6);
        assert_eq!(branch_point_count(0, 2), 2);
        assert_eq!(branch_point_count(1, 2), 4);
        assert_eq!(branch_point_count(2, 1), 5);
    }

    #[test]
    fn bp_small_cases() {
        let b = braid_bp(1, 2).unwrap();
        assert_eq!(b.braid.letters, [BraidLetter::sigma(1, 1)]);
        let b = braid_bp(4, 3).unwrap();
        assert_eq!(b.braid.len(), 8);
        assert_eq!(b.braid.band_crossings(), 24);
        assert_eq!(b.braid.strand_count, 12);
        assert!(b.braid.is_positive());
        assert!(b.verify());
        assert!(braid_bp(0, 2).is_err());
        assert!(braid_bp(3, 1).is_err());
    }

    #[test]
    fn certificate_rejects_tampering() {
        let mut b = braid_bp(3, 3).unwrap();
        b.steps.swap(0, 5);
        assert!(!b.verify());
        let mut b = braid_bp(3, 3).unwrap();
        b.braid.letters[0].sign = -1;
        assert!(!b.verify());
    }

    #[test]
    fn garside_reverses_strands() {
        for n in 2..8 {
            let d = garside(n, 1, n);
            assert_eq!(d.len(), n * (n - 1) / 2);
            let perm = d.permutation();
            assert!(perm.iter().enumerate().all(|(k, &to)| to == n - 1 - k));
            assert!(d.pow(2).permutation().iter().enumerate().all(|(k, &to)| to == k));
        }
    }

    #[test]
    fn rotation_braids_agree_on_permutations() {
        for g in 0..4 {
            let r = rotation_braids_22(g);
            assert_eq!(r.garside_form.permutation(), r.conjugate_form.permutation());
            assert_eq!(r.factors.len(), 2 * g + 1);
        }
    }
}
