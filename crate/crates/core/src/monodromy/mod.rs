//! Monodromy words of cabled open books.
//!
//! Every word splits as a rotation part `ρ`, depending only on the page,
//! followed by `φ̃`, the original monodromy copied onto the first nodule.

mod braid;
mod layout;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use braid::{
    braid_bp, branch_point_count, garside, rotation_braids_22, BraidLetter, BraidWord, MarkovStep, RotationBraids,
    StabilizedBraid,
};
pub use layout::{NoduleLayout, TwoTwoLayout};

use crate::cabling::{cabled_page, resolve, CableCoefficients};
use crate::error::{CableError, Result};
use crate::openbook::{strip_fractional, RationalOpenBook};
use crate::slope::Slope;
use crate::words::{
    chain_model, mod10_class, word_to_symplectic, words_equal_on_homology, Generator, Matrix, TwistWord,
};

fn require_word(book: &RationalOpenBook) -> Result<&TwistWord> {
    book.monodromy.as_ref().ok_or_else(|| CableError::Precondition("open book has no monodromy word".into()))
}

fn require_integral(book: &RationalOpenBook) -> Result<()> {
    book.check()?;
    if !book.is_integral() {
        return Err(CableError::Precondition("open book must be integral".into()));
    }
    Ok(())
}

fn genus(book: &RationalOpenBook) -> usize {
    book.genus.max(0) as usize
}

/// Copies a word onto nodule `j` of a page with disconnected binding by
/// prefixing every curve with `n{j}.`.
pub fn lift_disconnected(phi: &TwistWord, j: usize) -> TwistWord {
    phi.rename(|c| Some(format!("n{j}.{c}")))
}

/// `ρ ∘ φ̃` for the `(p,1)`-cable of a book with disconnected binding.
/// `ρ` is `d(p-1)` positive twists about the lifts `c_{k,j}` of the arcs
/// joining branch point `j` of disk `k` to branch point `j` of disk `k+1`.
pub fn monodromy_p1_disconnected(book: &RationalOpenBook, p: usize) -> Result<TwistWord> {
    require_integral(book)?;
    let phi = require_word(book)?;
    if book.boundary_count_of_page < 2 {
        return Err(CableError::Precondition("binding is connected; use monodromy_p1_connected".into()));
    }
    if p <= 1 {
        return Ok(phi.clone());
    }
    let d = branch_point_count(genus(book), book.boundary_count_of_page as usize);
    let mut w = TwistWord::empty();
    for k in 1..p {
        for j in (1..=d).rev() {
            let name = if p == 2 { format!("c{j}") } else { format!("c{k},{j}") };
            w.push(Generator::twist(&name));
        }
    }
    Ok(w.then(&lift_disconnected(phi, 1)))
}

/// `ρ_{(p,1)} = ∏_{j=2}^{p} ∂_j^{-1} ∘ T_{p-1} ∘ ⋯ ∘ T_1` with
/// `T_j = ∂_j^{-1} ∘ s_j`, nodule boundaries left unexpanded.
pub fn rotation_p1(layout: &NoduleLayout) -> TwistWord {
    let mut w = TwistWord::empty();
    for j in 2..=layout.p {
        w.push(Generator::inv_twist(&layout.nodule_boundaries[j - 1]));
    }
    for j in (1..layout.p).rev() {
        w.push(Generator::inv_twist(&layout.nodule_boundaries[j - 1]));
        w = w.then(&layout.garside_block(j));
    }
    w
}

/// `ρ_{(p,1)} ∘ φ̃` for a book with connected binding. Nodule boundary
/// twists are kept as `nb{j}`; see [`NoduleLayout::expand_nodule_boundaries`].
pub fn monodromy_p1_connected(book: &RationalOpenBook, p: usize) -> Result<TwistWord> {
    require_integral(book)?;
    let phi = require_word(book)?;
    if !book.is_connected() {
        return Err(CableError::Precondition("binding is disconnected; use monodromy_p1_disconnected".into()));
    }
    if p <= 1 {
        return Ok(phi.clone());
    }
    let layout = NoduleLayout::connected(p, genus(book))?;
    Ok(rotation_p1(&layout).then(&layout.lift_to_nodule(phi, 1)?))
}

/// `D_{d_{2g+1}} ∘ ⋯ ∘ D_{d_1}`.
pub fn rotation_22(layout: &TwoTwoLayout) -> TwistWord {
    TwistWord::new((1..=layout.m()).rev().map(|k| Generator::twist(&layout.rotation_curve(k))).collect())
}

/// Agreement of the two braid factorizations of the `(2,2)` rotation and of
/// their lifts with the twist word about the `d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationCheck {
    pub braids: RotationBraids,
    pub permutations_agree: bool,
    pub lifts_agree: bool,
    pub twist_word_agrees: bool,
}

impl RotationCheck {
    pub fn passed(&self) -> bool {
        self.permutations_agree && self.lifts_agree && self.twist_word_agrees
    }
}

pub fn check_rotation_22(g: usize) -> Result<RotationCheck> {
    let layout = TwoTwoLayout { genus: g };
    let braids = rotation_braids_22(g);
    let sys = layout.curve_system();
    let arc = |i: usize| layout.arc(i);
    let a = word_to_symplectic(&braids.garside_form.lift(arc), &sys)?;
    let b = word_to_symplectic(&braids.conjugate_form.lift(arc), &sys)?;
    let t = word_to_symplectic(&rotation_22(&layout), &sys)?;
    Ok(RotationCheck {
        permutations_agree: braids.garside_form.permutation() == braids.conjugate_form.permutation(),
        lifts_agree: a == b,
        twist_word_agrees: t == b,
        braids,
    })
}

/// `ρ_{(2,2)} ∘ φ̃` for a book with connected binding.
pub fn monodromy_22_connected(book: &RationalOpenBook) -> Result<TwistWord> {
    require_integral(book)?;
    let phi = require_word(book)?;
    if !book.is_connected() {
        return Err(CableError::Precondition("the (2,2) construction needs connected binding".into()));
    }
    let g = genus(book);
    let check = check_rotation_22(g)?;
    if !check.passed() {
        return Err(CableError::Inconsistent(format!("rotation factorizations disagree for genus {g}")));
    }
    let layout = TwoTwoLayout { genus: g };
    Ok(rotation_22(&layout).then(&layout.lift_to_nodule(phi, 1)?))
}

/// The `(p,1)` word followed by `(|p|-1)(|q|-1)` positive stabilization
/// markers per binding component.
pub fn monodromy_pq(book: &RationalOpenBook, p: i64, q: i64) -> Result<TwistWord> {
    if p == 0 || q == 0 || p * q < 0 {
        return Err(CableError::InvalidCoefficients(format!(
            "({p}, {q}) is not a positive cable; use negative_cable_word"
        )));
    }
    let (p, q) = (p.abs(), q.abs());
    let mut w = if book.boundary_count_of_page == 1 {
        monodromy_p1_connected(book, p as usize)?
    } else {
        monodromy_p1_disconnected(book, p as usize)?
    };
    for label in book.boundary_labels() {
        for _ in 0..(p - 1) * (q - 1) {
            w.push(Generator::marker(&label, 1));
        }
    }
    Ok(w)
}

/// Page and word of a cable: the page from [`cabled_page`], the word from
/// [`monodromy_pq`] or [`negative_cable_word`].
pub fn cable_monodromy(book: &RationalOpenBook, p: i64, q: i64) -> Result<RationalOpenBook> {
    let page = cabled_page(book, &CableCoefficients::new(vec![(p, q); book.components.len()]))?;
    let word = if p * q > 0 {
        monodromy_pq(book, p, q)?
    } else {
        let r = negative_form(book)?;
        if (p.abs(), q.abs()) != (r - 1, 1) {
            return Err(CableError::InvalidCoefficients(format!(
                "negative cable words are known for the ({}, -1)-cable of an ({r}, -1) book only",
                r - 1
            )));
        }
        negative_cable_word(book)?
    };
    Ok(page.with_monodromy(word))
}

/// `r` for a connected book whose binding normalizes to `(r, -1)`.
fn negative_form(book: &RationalOpenBook) -> Result<i64> {
    book.check()?;
    let c = book.components.first().map(|c| c.normalize_to_window());
    match c {
        Some(c) if book.components.len() == 1 && c.seifert_numerator == -1 && c.order >= 2 => Ok(c.order),
        _ => Err(CableError::Precondition("expected a connected binding with (r, -1) data, r ≥ 2".into())),
    }
}

/// `δ_{1/r} ∘ ρ_{(r-1,1)}^{-1} ∘ ∂_1^{2-r} ∘ φ̃` for the `(r-1,-1)`-cable of
/// `(Σ, δ_{1/r} ∘ φ)`.
pub fn negative_cable_word(book: &RationalOpenBook) -> Result<TwistWord> {
    let r = negative_form(book)?;
    let label = book.boundary_labels().remove(0);
    let phi = strip_fractional(require_word(book)?, std::slice::from_ref(&label));
    let layout = NoduleLayout::connected((r - 1) as usize, genus(book))?;
    let mut w = TwistWord::new(vec![Generator::fractional(&layout.boundary, Slope::new(1, r)?)]);
    w = w.then(&rotation_p1(&layout).inverse());
    w = w.then(&TwistWord::new(vec![Generator::twist(&layout.nodule_boundaries[0])]).pow(2 - r));
    Ok(w.then(&layout.lift_to_nodule(&phi, 1)?))
}

/// `φ ∘ M_∂`: every `(r,-1)` component resolved to `(r, 0)`, its fractional
/// twist replaced by positive twists about the `r` new boundary circles.
pub fn resolution_word_r0(book: &RationalOpenBook) -> Result<TwistWord> {
    book.check()?;
    let word = require_word(book)?;
    let mut l = Vec::new();
    for c in &book.components {
        if c.is_integral() {
            continue;
        }
        let w = c.normalize_to_window();
        if w.seifert_numerator != -1 || w.multiplicity != 1 {
            return Err(CableError::Precondition(format!(
                "component ({}, {}) is not in (r, -1) form",
                c.order, c.seifert_numerator
            )));
        }
        l.push(0);
    }
    if l.is_empty() {
        return Ok(word.clone());
    }
    resolve(book, &l)?.monodromy.ok_or_else(|| CableError::Precondition("resolution word unavailable".into()))
}

/// Checks the chain relation `(c_1 ⋯ c_{2g})^{4g+2} = ∂` on homology before
/// it is used to expand boundary twists.
fn chain_relation_gate(g: usize) -> Result<()> {
    let sys = chain_model(g, 1);
    let names: Vec<String> = (1..=2 * g).map(|k| format!("c{k}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let lhs = TwistWord::positive(&refs).pow(4 * g as i64 + 2);
    if !words_equal_on_homology(&lhs, &TwistWord::positive(&["bd"]), &sys)? {
        return Err(CableError::OracleGate(format!("chain_g{g}")));
    }
    Ok(())
}

/// Residue comparison showing that the `(2,1)`-cable of
/// `(T, D_{c1}^p ∘ D_{c2})` has no positive factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinObstruction {
    pub p: u32,
    /// Cable word with nodule boundaries expanded by the chain relation.
    pub word: TwistWord,
    pub algebraic_length: i64,
    pub length_mod10: i64,
    /// `|F| = p + 3` twists: a filling with `χ = p` built from one 0-handle,
    /// four 1-handles and one 2-handle per twist.
    pub required_mod10: i64,
    pub obstructed: bool,
}

impl SteinObstruction {
    pub fn verdict(&self) -> &'static str {
        if self.obstructed {
            "OBSTRUCTED"
        } else {
            "NOT OBSTRUCTED"
        }
    }
}

impl fmt::Display for SteinObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = if self.obstructed { "NO positive factorization" } else { "no obstruction" };
        write!(
            f,
            "{lead}: length ≡ {} (mod 10), required ≡ {} (mod 10); verdict {}",
            self.length_mod10,
            self.required_mod10,
            self.verdict()
        )
    }
}

pub fn stein_obstruction(p: u32) -> Result<SteinObstruction> {
    if p < 1 {
        return Err(CableError::Domain("p must be at least 1".into()));
    }
    chain_relation_gate(1)?;
    let mut phi = TwistWord::positive(&["c1"]).pow(p as i64);
    phi.push(Generator::twist("c2"));
    let book = RationalOpenBook::integral(1, 1).with_monodromy(phi);
    let layout = NoduleLayout::connected(2, 1)?;
    let word = layout.expand_nodule_boundaries(&monodromy_p1_connected(&book, 2)?);
    let sys = layout.curve_system();
    let algebraic_length = crate::words::algebraic_length(&word, &sys)?;
    let length_mod10 = mod10_class(&word, &sys)?;
    let required_mod10 = (p as i64 + 3).rem_euclid(10);
    Ok(SteinObstruction {
        p,
        word,
        algebraic_length,
        length_mod10,
        required_mod10,
        obstructed: length_mod10 != required_mod10,
    })
}

/// Page on which two monodromies are stacked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CobordismPage {
    /// `(2,2)`-cable of a genus `g` page with connected binding.
    Connected { genus: usize },
    /// `(2,1)`-cable of a genus `g` page with `boundaries ≥ 2`.
    Disconnected { genus: usize, boundaries: usize },
}

/// `ρ ∘ φ̃_1 ∘ X` with `X = ρ ∘ φ̃_2 ∘ ρ^{-1}`, conjugate to the cobordism
/// word by `X`. `X` is supported on `ρ(Σ_2) = Σ_1`, so both factors sit on
/// the first nodule and the page destabilizes to `Σ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DestabilizationCertificate {
    pub conjugator: TwistWord,
    pub conjugated_word: TwistWord,
    pub nodule_one_factor: TwistWord,
    /// Homology shows `X` moves only nodule-1 classes. Only available on
    /// connected pages.
    pub homology_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismWord {
    pub rho: TwistWord,
    pub word: TwistWord,
    pub certificate: DestabilizationCertificate,
}

/// `ρ ∘ φ̃_2 ∘ φ̃_1` with `φ̃_i` acting on nodule `i`.
pub fn compose_cobordism_word(phi1: &TwistWord, phi2: &TwistWord, page: CobordismPage) -> Result<CobordismWord> {
    let (rho, lift1, lift2) = match page {
        CobordismPage::Connected { genus } => {
            let layout = TwoTwoLayout { genus };
            let lift = |w: &TwistWord, j| {
                layout
                    .lift_to_nodule(w, j)
                    .map_err(|e| CableError::PageMismatch(format!("word does not live on the page: {e}")))
            };
            (rotation_22(&layout), lift(phi1, 1)?, lift(phi2, 2)?)
        }
        CobordismPage::Disconnected { genus, boundaries } => {
            if boundaries < 2 {
                return Err(CableError::PageMismatch("disconnected page needs at least two boundaries".into()));
            }
            let book = RationalOpenBook::integral(genus as i64, boundaries).with_monodromy(TwistWord::empty());
            (monodromy_p1_disconnected(&book, 2)?, lift_disconnected(phi1, 1), lift_disconnected(phi2, 2))
        }
    };
    let word = rho.then(&lift2).then(&lift1);
    let conjugator = rho.then(&lift2).then(&rho.inverse());
    let nodule_one_factor = lift1.then(&conjugator);
    let conjugated_word = rho.then(&nodule_one_factor);
    let homology_checked = match page {
        CobordismPage::Connected { genus } if genus > 0 => {
            let layout = TwoTwoLayout { genus };
            let sys = layout.curve_system();
            let x = word_to_symplectic(&conjugator, &sys)?;
            if !moves_only(&x, 0..2 * genus) {
                return Err(CableError::Inconsistent("conjugated factor leaves the first nodule".into()));
            }
            let lhs = word_to_symplectic(&conjugated_word, &sys)?;
            let rhs = x.symplectic_inverse().mul(&word_to_symplectic(&word, &sys)?).mul(&x);
            if lhs != rhs {
                return Err(CableError::Inconsistent("destabilization conjugation fails on homology".into()));
            }
            true
        }
        _ => false,
    };
    Ok(CobordismWord {
        rho,
        word,
        certificate: DestabilizationCertificate { conjugator, conjugated_word, nodule_one_factor, homology_checked },
    })
}

/// `M - I` has nonzero rows only in `coords`.
fn moves_only(m: &Matrix, coords: std::ops::Range<usize>) -> bool {
    let n = m.dim();
    (0..n).filter(|i| !coords.contains(i)).all(|i| (0..n).all(|j| m.get(i, j) == i128::from(i == j)))
}
