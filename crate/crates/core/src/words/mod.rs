//! Dehn twist and braid words over named curves.
//!
//! Words are in functional order: the rightmost generator acts first.

mod curves;
mod length;
mod relations;
mod symplectic;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::slope::Slope;

pub use crate::data::shipped_scripts;
pub use curves::{chain_model, Curve, CurveSystem, CurveSystemFile};
pub use length::{algebraic_length, expand_generators, mod10_class};
pub use relations::{
    matrix_on, replay, Direction, Relation, ReplayLog, RewriteScript, Side, Step, StepRecord, Workspace,
};
pub use symplectic::{symplectic_form, transvection, word_to_symplectic, words_equal_on_homology, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    DehnTwist,
    FractionalBoundaryTwist,
    BraidHalfTwist,
    StabilizationMarker,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub curve: String,
    /// `+1` right-handed, `-1` left-handed. Fractional twists keep `+1`
    /// here and carry their sign in `amount`.
    pub sign: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amount: Option<Slope>,
}

impl Generator {
    pub fn twist(curve: &str) -> Self {
        Generator { kind: GeneratorKind::DehnTwist, curve: curve.to_string(), sign: 1, amount: None }
    }

    pub fn inv_twist(curve: &str) -> Self {
        Generator { sign: -1, ..Generator::twist(curve) }
    }

    pub fn twist_signed(curve: &str, sign: i64) -> Self {
        Generator { sign: sign.signum(), ..Generator::twist(curve) }
    }

    /// `δ_{s/r}` about the named boundary.
    pub fn fractional(boundary: &str, amount: Slope) -> Self {
        Generator {
            kind: GeneratorKind::FractionalBoundaryTwist,
            curve: boundary.to_string(),
            sign: 1,
            amount: Some(amount),
        }
    }

    pub fn half_twist(strand_curve: &str, sign: i64) -> Self {
        Generator {
            kind: GeneratorKind::BraidHalfTwist,
            curve: strand_curve.to_string(),
            sign: sign.signum(),
            amount: None,
        }
    }

    pub fn marker(component: &str, sign: i64) -> Self {
        Generator {
            kind: GeneratorKind::StabilizationMarker,
            curve: component.to_string(),
            sign: sign.signum(),
            amount: None,
        }
    }

    pub fn inverse(&self) -> Self {
        let mut g = self.clone();
        match g.amount {
            Some(a) => g.amount = Some(Slope::new(-a.numerator(), a.denominator()).unwrap()),
            None => g.sign = -g.sign,
        }
        g
    }

    pub fn is_inverse_of(&self, other: &Generator) -> bool {
        &self.inverse() == other
    }

    pub fn is_negative(&self) -> bool {
        match self.amount {
            Some(a) => a.numerator() < 0,
            None => self.sign < 0,
        }
    }

    pub fn is_twist(&self) -> bool {
        self.kind == GeneratorKind::DehnTwist
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeneratorKind::FractionalBoundaryTwist => {
                let a = self.amount.unwrap_or(Slope::integer(1));
                write!(f, "δ_{{{}}}({})", a, self.curve)
            }
            GeneratorKind::StabilizationMarker => {
                write!(f, "S{}({})", if self.sign < 0 { "-" } else { "+" }, self.curve)
            }
            GeneratorKind::BraidHalfTwist => {
                write!(f, "σ_{}{}", self.curve, if self.sign < 0 { "^-1" } else { "" })
            }
            GeneratorKind::DehnTwist => {
                write!(f, "D_{}{}", self.curve, if self.sign < 0 { "^-1" } else { "" })
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistWord {
    pub generators: Vec<Generator>,
}

impl TwistWord {
    pub fn new(generators: Vec<Generator>) -> Self {
        TwistWord { generators }
    }

    pub fn empty() -> Self {
        TwistWord::default()
    }

    /// Positive twists about the given curves, leftmost first.
    pub fn positive(curves: &[&str]) -> Self {
        TwistWord::new(curves.iter().map(|c| Generator::twist(c)).collect())
    }

    /// Parses a compact form: curve names separated by spaces, with a
    /// trailing `'` or `^-1` marking a left-handed twist.
    pub fn parse_compact(s: &str) -> Self {
        TwistWord::new(
            s.split_whitespace()
                .map(|t| {
                    if let Some(c) = t.strip_suffix("^-1").or_else(|| t.strip_suffix('\'')) {
                        Generator::inv_twist(c)
                    } else {
                        Generator::twist(t)
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn inverse(&self) -> Self {
        TwistWord::new(self.generators.iter().rev().map(Generator::inverse).collect())
    }

    /// `self ∘ other`.
    pub fn then(&self, other: &TwistWord) -> Self {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        TwistWord::new(g)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = TwistWord::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    pub fn push(&mut self, g: Generator) {
        self.generators.push(g);
    }

    pub fn positive_count(&self) -> usize {
        self.generators.iter().filter(|g| g.is_twist() && !g.is_negative()).count()
    }

    pub fn negative_count(&self) -> usize {
        self.generators.iter().filter(|g| g.is_negative()).count()
    }

    /// No left-handed twists and no negative fractional twists.
    pub fn is_positive(&self) -> bool {
        self.generators.iter().all(|g| !g.is_negative())
    }

    /// Renames curves through `f`, leaving unmapped names alone.
    pub fn rename(&self, f: impl Fn(&str) -> Option<String>) -> Self {
        TwistWord::new(
            self.generators
                .iter()
                .map(|g| {
                    let mut g = g.clone();
                    if let Some(n) = f(&g.curve) {
                        g.curve = n;
                    }
                    g
                })
                .collect(),
        )
    }

    pub fn curves(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(|g| g.curve.as_str())
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" ∘ "))
    }
}

impl FromIterator<Generator> for TwistWord {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        TwistWord::new(iter.into_iter().collect())
    }
}
