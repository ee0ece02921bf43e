//! Oracle-gated relations and replayable rewrite scripts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::symplectic::{word_to_symplectic, Matrix};
use super::{CurveSystem, Generator, TwistWord};
use crate::error::{CableError, Result};

/// `lhs = rhs` as mapping classes, checked on homology in its home system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub name: String,
    pub system: String,
    pub lhs: TwistWord,
    pub rhs: TwistWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// lhs → rhs
    Forward,
    Backward,
}

/// Which neighbour a conjugated twist moves across.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `D_c ∘ f = f ∘ D_{f⁻¹(c)}`
    Right,
    /// `f ∘ D_c = D_{f(c)} ∘ f`
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    Apply {
        relation: String,
        position: usize,
        direction: Direction,
    },
    CancelInverse {
        position: usize,
    },
    CommuteDisjoint {
        position: usize,
    },
    /// Moves the twist at `at` across the `span` letters on `side`,
    /// renaming its curve to the registered `image`.
    Conjugate {
        at: usize,
        span: usize,
        side: Side,
        image: String,
    },
    /// Replaces `w` by `h ∘ w ∘ h⁻¹` (same open book, conjugate monodromy).
    ConjugateWhole {
        by: TwistWord,
    },
    /// Positive stabilization: moves to a larger page and appends a positive
    /// twist about a new curve.
    Stabilize {
        curve: String,
        system: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteScript {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub system: String,
    pub start: TwistWord,
    pub steps: Vec<Step>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<TwistWord>,
}

/// What was verified for one step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub index: usize,
    pub step: Step,
    pub system: String,
    pub word: TwistWord,
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayLog {
    pub script: String,
    pub system: String,
    pub final_word: TwistWord,
    pub records: Vec<StepRecord>,
}

/// Curve systems and the relations registered over them.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    systems: BTreeMap<String, CurveSystem>,
    relations: BTreeMap<String, Relation>,
}

impl Workspace {
    pub fn new() -> Self {
        Workspace::default()
    }

    pub fn add_system(&mut self, sys: CurveSystem) -> Result<()> {
        sys.validate()?;
        self.systems.insert(sys.name.clone(), sys);
        Ok(())
    }

    pub fn system(&self, name: &str) -> Result<&CurveSystem> {
        self.systems.get(name).ok_or_else(|| CableError::Data(format!("unknown curve system `{name}`")))
    }

    pub fn systems(&self) -> impl Iterator<Item = &CurveSystem> {
        self.systems.values()
    }

    pub fn relations(&self) -> impl Iterator<Item = &Relation> {
        self.relations.values()
    }

    pub fn relation(&self, name: &str) -> Result<&Relation> {
        self.relations.get(name).ok_or_else(|| CableError::Data(format!("unknown relation `{name}`")))
    }

    /// Registers `lhs = rhs` after checking both sides agree on the homology
    /// of `system`.
    pub fn register_relation(&mut self, name: &str, lhs: TwistWord, rhs: TwistWord, system: &str) -> Result<()> {
        let sys = self.system(system)?;
        if word_to_symplectic(&lhs, sys)? != word_to_symplectic(&rhs, sys)? {
            return Err(CableError::OracleGate(name.to_string()));
        }
        self.relations
            .insert(name.to_string(), Relation { name: name.to_string(), system: system.to_string(), lhs, rhs });
        Ok(())
    }

    /// Replaces the exact subword at `position` by the other side.
    pub fn apply_relation(
        &self,
        word: &TwistWord,
        name: &str,
        position: usize,
        direction: Direction,
    ) -> Result<TwistWord> {
        let rel = self.relation(name)?;
        let (from, to) = match direction {
            Direction::Forward => (&rel.lhs, &rel.rhs),
            Direction::Backward => (&rel.rhs, &rel.lhs),
        };
        let end = position + from.len();
        if end > word.len() || word.generators[position..end] != from.generators[..] {
            return Err(CableError::Precondition(format!("`{name}` does not match at position {position}")));
        }
        let mut g = word.generators[..position].to_vec();
        g.extend(to.generators.iter().cloned());
        g.extend(word.generators[end..].iter().cloned());
        Ok(TwistWord::new(g))
    }

    /// Replays every step, checking preconditions and the homology oracle.
    pub fn replay(&self, script: &RewriteScript) -> Result<ReplayLog> {
        let mut sys = self.system(&script.system)?;
        let mut word = script.start.clone();
        let mut records = Vec::with_capacity(script.steps.len());
        for (index, step) in script.steps.iter().enumerate() {
            let fail = |reason: String| CableError::Rewrite { step: index, reason };
            let before = word_to_symplectic(&word, sys).map_err(|e| fail(e.to_string()))?;
            let (next, check) = match step {
                Step::Stabilize { curve, system } => {
                    let target = self.system(system)?;
                    let next = stabilize(&word, sys, target, curve).map_err(fail)?;
                    sys = target;
                    (next, format!("intersections preserved in `{system}`"))
                }
                Step::ConjugateWhole { by } => {
                    let next = by.then(&word).then(&by.inverse());
                    let h = word_to_symplectic(by, sys).map_err(|e| fail(e.to_string()))?;
                    let after = word_to_symplectic(&next, sys).map_err(|e| fail(e.to_string()))?;
                    if after != h.mul(&before).mul(&h.symplectic_inverse()) {
                        return Err(fail("conjugated matrix mismatch".into()));
                    }
                    (next, "matrix conjugated".to_string())
                }
                _ => {
                    let next = self.rewrite(&word, sys, step).map_err(|e| match e {
                        CableError::Rewrite { .. } => e,
                        other => fail(other.to_string()),
                    })?;
                    let after = word_to_symplectic(&next, sys).map_err(|e| fail(e.to_string()))?;
                    if after != before {
                        return Err(fail("homology oracle: matrix changed".into()));
                    }
                    (next, "matrix preserved".to_string())
                }
            };
            word = next;
            records.push(StepRecord { index, step: step.clone(), system: sys.name.clone(), word: word.clone(), check });
        }
        if let Some(expected) = &script.expected {
            if &word != expected {
                return Err(CableError::Rewrite {
                    step: script.steps.len(),
                    reason: format!("final word {word} differs from the expected {expected}"),
                });
            }
        }
        Ok(ReplayLog { script: script.name.clone(), system: sys.name.clone(), final_word: word, records })
    }

    fn rewrite(&self, word: &TwistWord, sys: &CurveSystem, step: &Step) -> Result<TwistWord> {
        let g = &word.generators;
        let at = |i: usize| -> Result<&Generator> {
            g.get(i).ok_or_else(|| CableError::Precondition(format!("position {i} is past the end of the word")))
        };
        match step {
            Step::Apply { relation, position, direction } => self.apply_relation(word, relation, *position, *direction),
            Step::CancelInverse { position } => {
                let (a, b) = (at(*position)?, at(*position + 1)?);
                if !a.is_inverse_of(b) {
                    return Err(CableError::Precondition(format!("{a} and {b} are not inverse")));
                }
                let mut out = g.clone();
                out.drain(*position..*position + 2);
                Ok(TwistWord::new(out))
            }
            Step::CommuteDisjoint { position } => {
                let (a, b) = (at(*position)?, at(*position + 1)?);
                if !sys.certified_disjoint(&a.curve, &b.curve) {
                    return Err(CableError::Precondition(format!("{a} and {b} are not certified disjoint")));
                }
                let mut out = g.clone();
                out.swap(*position, *position + 1);
                Ok(TwistWord::new(out))
            }
            Step::Conjugate { at: i, span, side, image } => {
                let twist = at(*i)?.clone();
                if !twist.is_twist() {
                    return Err(CableError::Precondition(format!("{twist} is not a Dehn twist")));
                }
                let range = match side {
                    Side::Right => *i + 1..*i + 1 + span,
                    Side::Left => {
                        i.checked_sub(*span)
                            .ok_or_else(|| CableError::Precondition("conjugating span runs past the start".into()))?
                            ..*i
                    }
                };
                if range.end > g.len() {
                    return Err(CableError::Precondition("conjugating span runs past the end".into()));
                }
                let f = TwistWord::new(g[range.clone()].to_vec());
                let mf = word_to_symplectic(&f, sys)?;
                let m = match side {
                    Side::Right => mf.symplectic_inverse(),
                    Side::Left => mf,
                };
                let expected = m.apply(sys.class(&twist.curve)?);
                let got = sys.class(image)?;
                let neg: Vec<i64> = expected.iter().map(|v| -v).collect();
                if got != expected.as_slice() && got != neg.as_slice() {
                    return Err(CableError::Precondition(format!("class of `{image}` is not ±f({})", twist.curve)));
                }
                let moved = Generator { curve: image.clone(), ..twist };
                let mut out = g[..range.start.min(*i)].to_vec();
                match side {
                    Side::Right => {
                        out.extend(f.generators.iter().cloned());
                        out.push(moved);
                    }
                    Side::Left => {
                        out.push(moved);
                        out.extend(f.generators.iter().cloned());
                    }
                }
                out.extend(g[range.end.max(*i + 1)..].iter().cloned());
                Ok(TwistWord::new(out))
            }
            Step::ConjugateWhole { .. } | Step::Stabilize { .. } => unreachable!("handled by replay"),
        }
    }
}

fn stabilize(
    word: &TwistWord,
    from: &CurveSystem,
    to: &CurveSystem,
    curve: &str,
) -> std::result::Result<TwistWord, String> {
    if from.contains(curve) {
        return Err(format!("stabilizing curve `{curve}` already lives on the old page"));
    }
    let c = to.curve(curve).map_err(|e| e.to_string())?;
    if !c.nonseparating {
        return Err(format!("stabilizing curve `{curve}` must be nonseparating"));
    }
    let names: Vec<&str> = {
        let mut v: Vec<&str> = word.curves().collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    for a in &names {
        for b in &names {
            let old = from.intersection(a, b).map_err(|e| e.to_string())?;
            let new = to.intersection(a, b).map_err(|e| e.to_string())?;
            if old != new {
                return Err(format!("⟨{a}, {b}⟩ changes from {old} to {new}"));
            }
        }
    }
    let mut out = word.clone();
    out.push(Generator::twist(curve));
    Ok(out)
}

/// Replays with the given workspace.
pub fn replay(ws: &Workspace, script: &RewriteScript) -> Result<ReplayLog> {
    ws.replay(script)
}

/// Symplectic matrix of a word on a named system of the workspace.
pub fn matrix_on(ws: &Workspace, system: &str, word: &TwistWord) -> Result<Matrix> {
    word_to_symplectic(word, ws.system(system)?)
}
