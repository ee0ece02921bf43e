//! Algebraic length and its mod-10 residue in genus 2.

use std::collections::BTreeMap;

use super::{CurveSystem, GeneratorKind, TwistWord};
use crate::error::{CableError, Result};

/// Signed count of twists. Every generator must be a Dehn twist about a
/// curve marked nonseparating.
pub fn algebraic_length(word: &TwistWord, sys: &CurveSystem) -> Result<i64> {
    let mut total = 0;
    for g in &word.generators {
        if g.kind != GeneratorKind::DehnTwist {
            return Err(CableError::NonExpandable(g.to_string()));
        }
        let c = sys.curve(&g.curve)?;
        if !c.nonseparating || c.boundary_parallel.is_some() {
            return Err(CableError::NonExpandable(g.to_string()));
        }
        total += g.sign;
    }
    Ok(total)
}

/// Image in the abelianization `Z/10` of the genus-2 mapping class group.
/// Only defined for genus-2 systems with one boundary component.
pub fn mod10_class(word: &TwistWord, sys: &CurveSystem) -> Result<i64> {
    if sys.genus != 2 || sys.boundary_labels.len() != 1 {
        return Err(CableError::Precondition(format!(
            "mod-10 class needs genus 2 with one boundary, got genus {} with {} boundaries",
            sys.genus,
            sys.boundary_labels.len()
        )));
    }
    Ok(algebraic_length(word, sys)?.rem_euclid(10))
}

/// Replaces each twist about a curve in `rules` by the rule's word (or its
/// inverse for a left-handed twist). Other generators pass through.
pub fn expand_generators(word: &TwistWord, rules: &BTreeMap<String, TwistWord>) -> TwistWord {
    let mut out = TwistWord::empty();
    for g in &word.generators {
        match rules.get(&g.curve) {
            Some(w) if g.kind == GeneratorKind::DehnTwist => {
                out = out.then(&if g.sign < 0 { w.inverse() } else { w.clone() });
            }
            _ => out.push(g.clone()),
        }
    }
    out
}
