//! Cables of rational open books: sign tests, contact verdicts, cabled page
//! data, resolutions and surgery-induced books.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{CableError, Result};
use crate::lens::fiber_euler_raw;
use crate::openbook::{normalize_to_window, strip_fractional, BindingComponent, RationalOpenBook};
use crate::slope::{exceptional_slopes, farey_neighbors, Slope};
use crate::words::{Generator, TwistWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CableSign {
    Positive,
    Negative,
    EqualsSeifert,
    EqualsMeridian,
}

/// Positive when the cable slope is larger than the Seifert slope.
pub fn cable_sign(cable: Slope, seifert: Slope) -> CableSign {
    if cable.is_infinite() {
        CableSign::EqualsMeridian
    } else if cable == seifert {
        CableSign::EqualsSeifert
    } else if cable > seifert {
        CableSign::Positive
    } else {
        CableSign::Negative
    }
}

/// One `(p, q)` pair per binding component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CableCoefficients {
    pub pairs: Vec<(i64, i64)>,
}

impl CableCoefficients {
    pub fn new(pairs: Vec<(i64, i64)>) -> Self {
        CableCoefficients { pairs }
    }

    pub fn single(p: i64, q: i64) -> Self {
        CableCoefficients { pairs: vec![(p, q)] }
    }

    /// Parses `"2,-1;1,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || CableError::InvalidCoefficients(format!("cannot parse `{s}`; expected `p,q;p,q;...`"));
        let pairs = s
            .split(';')
            .map(|pair| {
                let (p, q) = pair.trim().split_once(',').ok_or_else(bad)?;
                Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CableCoefficients { pairs })
    }

    /// Checks the pairs against the book's binding.
    pub fn validate_for(&self, book: &RationalOpenBook) -> Result<()> {
        if self.pairs.len() != book.components.len() {
            return Err(CableError::InvalidCoefficients(format!(
                "{} pairs for {} binding components",
                self.pairs.len(),
                book.components.len()
            )));
        }
        let sign = self.pairs.first().map(|p| p.0.signum()).unwrap_or(1);
        for (i, (&(p, q), c)) in self.pairs.iter().zip(&book.components).enumerate() {
            if p == 0 {
                return Err(CableError::InvalidCoefficients(format!("pair {i} is meridional (p = 0)")));
            }
            if p.signum() != sign {
                return Err(CableError::InvalidCoefficients("all p must share one sign".into()));
            }
            if Slope::new(q, p)? == c.seifert_slope() {
                return Err(CableError::InvalidCoefficients(format!("pair {i} has the Seifert slope")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CableCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(p, q)| format!("{p},{q}")).collect();
        write!(f, "{}", parts.join(";"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictKind {
    SameContact,
    ReversedContact,
    Overtwisted,
    VirtuallyOvertwistedOrOvertwisted,
    ExceptionalTightPossible,
    RationalUnknotCable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentSign {
    Positive,
    Negative,
    /// `|p| = 1`: the component is effectively not cabled.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableVerdict {
    pub kind: VerdictKind,
    /// What is actually proved for an exceptional cable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qualifier: Option<VerdictKind>,
    pub hopf_delta: Option<i64>,
    pub lutz_recipe: Option<String>,
    pub per_component_signs: Vec<ComponentSign>,
}

/// Verdict for one negative, non-degenerate pair.
fn negative_pair_kind(book: &RationalOpenBook, c: &BindingComponent, p: i64, q: i64) -> Result<VerdictKind> {
    let w = c.normalize_to_window();
    let (r, s) = (w.order, w.seifert_numerator);
    let shift = (s - c.seifert_numerator) / c.order;
    let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
    let q = q + shift * p;
    if book.is_rational_unknot_book && r * q - p * s == -1 {
        debug_assert!(farey_neighbors(Slope::new(q, p)?, Slope::new(s, r)?));
        return Ok(VerdictKind::RationalUnknotCable);
    }
    if p.gcd(&q) > 1 {
        return Ok(VerdictKind::Overtwisted);
    }
    if exceptional_slopes(Slope::new(s, r)?)?.contains(&Slope::new(q, p)?) {
        Ok(VerdictKind::ExceptionalTightPossible)
    } else {
        Ok(VerdictKind::Overtwisted)
    }
}

/// Sign of each pair relative to its component's Seifert slope.
pub fn component_signs(book: &RationalOpenBook, coeffs: &CableCoefficients) -> Result<Vec<ComponentSign>> {
    coeffs.validate_for(book)?;
    coeffs
        .pairs
        .iter()
        .zip(&book.components)
        .map(|(&(p, q), c)| {
            if p.abs() == 1 {
                return Ok(ComponentSign::Degenerate);
            }
            match cable_sign(Slope::new(q, p)?, c.seifert_slope()) {
                CableSign::Positive => Ok(ComponentSign::Positive),
                CableSign::Negative => Ok(ComponentSign::Negative),
                other => Err(CableError::InvalidCoefficients(format!("cable slope {q}/{p}: {other:?}"))),
            }
        })
        .collect()
}

pub fn classify_cable(book: &RationalOpenBook, coeffs: &CableCoefficients) -> Result<CableVerdict> {
    book.check()?;
    let signs = component_signs(book, coeffs)?;
    let p_sign = coeffs.pairs[0].0.signum();
    let mut kinds = Vec::new();
    for ((&(p, q), c), sign) in coeffs.pairs.iter().zip(&book.components).zip(&signs) {
        if *sign == ComponentSign::Negative {
            kinds.push(negative_pair_kind(book, c, p, q)?);
        }
    }
    let kind = if kinds.is_empty() {
        if p_sign > 0 {
            VerdictKind::SameContact
        } else {
            VerdictKind::ReversedContact
        }
    } else if kinds.contains(&VerdictKind::Overtwisted) {
        VerdictKind::Overtwisted
    } else if kinds.contains(&VerdictKind::ExceptionalTightPossible) {
        VerdictKind::ExceptionalTightPossible
    } else {
        VerdictKind::RationalUnknotCable
    };
    let qualifier =
        (kind == VerdictKind::ExceptionalTightPossible).then_some(VerdictKind::VirtuallyOvertwistedOrOvertwisted);
    let hopf = if book.is_integral() && book.is_connected() {
        let (p, q) = coeffs.pairs[0];
        if p.abs() == 1 || p * q > 0 {
            Some(0)
        } else {
            hopf_delta(p, q, book.genus).ok()
        }
    } else {
        None
    };
    let mut verdict = CableVerdict { kind, qualifier, hopf_delta: hopf, lutz_recipe: None, per_component_signs: signs };
    if kind == VerdictKind::Overtwisted {
        verdict.lutz_recipe = Some(lutz_recipe(book, coeffs, &verdict.per_component_signs)?);
    }
    Ok(verdict)
}

/// Change of the Hopf invariant for a negative cable of an integral
/// connected binding of the given genus.
pub fn hopf_delta(p: i64, q: i64, genus: i64) -> Result<i64> {
    if p.abs() == 1 {
        return Ok(0);
    }
    if p == 0 || p * q >= 0 {
        return Err(CableError::Domain(format!("hopf delta is only defined for negative cables, got ({p}, {q})")));
    }
    if genus == 0 && q.abs() == 1 {
        return Err(CableError::Domain(format!("({p}, {q}) cable of the unknot is excluded")));
    }
    Ok((1 - p.abs()) * (2 * genus + q.abs() - 1))
}

fn lutz_recipe(book: &RationalOpenBook, coeffs: &CableCoefficients, signs: &[ComponentSign]) -> Result<String> {
    let ambient = if coeffs.pairs[0].0 > 0 { "ξ" } else { "-ξ" };
    let mut parts = Vec::new();
    for (i, ((&(p, q), c), sign)) in coeffs.pairs.iter().zip(&book.components).zip(signs).enumerate() {
        if *sign == ComponentSign::Negative && negative_pair_kind(book, c, p, q)? == VerdictKind::Overtwisted {
            parts.push(format!("Lutz twist along binding component {} using its ({p},{q})-Lutz cable", i + 1));
        }
    }
    Ok(format!("starting from {ambient}: {}", parts.join("; ")))
}

/// Recipe text for an overtwisted verdict, empty otherwise.
pub fn lutz_cable_description(book: &RationalOpenBook, coeffs: &CableCoefficients) -> Result<String> {
    Ok(classify_cable(book, coeffs)?.lutz_recipe.unwrap_or_default())
}

/// Count and sign of the stabilizations taking the `(p,1)` cable to the
/// `(p,q)` cable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationCount {
    pub count: i64,
    pub positive: bool,
}

pub fn stabilization_count_pq_from_p1(p: i64, q: i64) -> Result<StabilizationCount> {
    if p == 0 || q == 0 {
        return Err(CableError::InvalidCoefficients(format!("({p}, {q}) needs p, q nonzero")));
    }
    Ok(StabilizationCount { count: (p.abs() - 1) * (q.abs() - 1), positive: p * q > 0 })
}

/// Page data of the cable. The page of the cable is assembled from `m`
/// copies of the old page and, for each component, copies of the fiber of
/// the torus link `(k, l) = sign(p)·(p, q)` in the solid torus.
pub fn cabled_page(book: &RationalOpenBook, coeffs: &CableCoefficients) -> Result<RationalOpenBook> {
    book.check()?;
    coeffs.validate_for(book)?;
    assemble_cable(book, coeffs)
}

/// [`cabled_page`] without the coefficient checks. Resolution passes
/// integral components through as `(1, 0)`.
fn assemble_cable(book: &RationalOpenBook, coeffs: &CableCoefficients) -> Result<RationalOpenBook> {
    struct Part {
        r: i64,
        s: i64,
        n: i64,
        k: i64,
        l: i64,
        c: i64,
    }
    let parts: Vec<Part> = coeffs
        .pairs
        .iter()
        .zip(&book.components)
        .map(|(&(p, q), comp)| {
            let n = comp.multiplicity;
            let (r, s) = (comp.order / n, comp.seifert_numerator / n);
            let (k, l) = if p < 0 { (-p, -q) } else { (p, q) };
            Part { r, s, n, k, l, c: k / r.gcd(&k) }
        })
        .collect();
    let m = parts.iter().fold(1i64, |acc, x| acc.lcm(&(x.c / x.c.gcd(&x.n))));
    let mut chi = m * book.page_euler_char();
    let mut components = Vec::new();
    for x in &parts {
        let copies = m * x.n / x.c;
        chi += copies * (fiber_euler_raw(x.r, x.s, x.k, x.l) - x.c);
        let d = x.k.gcd(&x.l);
        let g = x.r.gcd(&x.k);
        let z = x.r / g;
        let w = (x.k / g) * (x.k * x.s - x.l * x.r);
        for _ in 0..d {
            let order = copies * z;
            let (order, s) = normalize_to_window(order, copies * w / d);
            components.push(BindingComponent::new(order, s)?);
        }
    }
    let b: i64 = components.iter().map(|c| c.multiplicity).sum();
    let twice_genus = 2 - b - chi;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(CableError::Domain(format!("cable page data inconsistent: chi = {chi}, b = {b}")));
    }
    let mut out = RationalOpenBook::new(twice_genus / 2, components, None);
    out.is_rational_unknot_book = out.genus == 0 && b == 1;
    Ok(out)
}

/// Closed form `|p|·χ + |q| - |pq|` for an integral connected binding.
pub fn cabled_euler_closed_form(chi: i64, p: i64, q: i64) -> i64 {
    p.abs() * chi + q.abs() - (p * q).abs()
}

/// Replaces every rational component by its `(r, l)` cable; `l` lists one
/// value per non-integral component in order.
pub fn resolve(book: &RationalOpenBook, l: &[i64]) -> Result<RationalOpenBook> {
    book.check()?;
    let rational: Vec<usize> = (0..book.components.len()).filter(|&i| !book.components[i].is_integral()).collect();
    if rational.len() != l.len() {
        return Err(CableError::ResolutionSlope(format!(
            "{} resolution slopes for {} rational components",
            l.len(),
            rational.len()
        )));
    }
    if rational.is_empty() {
        return Ok(book.clone());
    }
    let mut pairs = vec![(1, 0); book.components.len()];
    for (&i, &li) in rational.iter().zip(l) {
        let w = book.components[i].normalize_to_window();
        if li <= w.seifert_numerator {
            return Err(CableError::ResolutionSlope(format!(
                "l = {li} must exceed the normalized Seifert numerator {}",
                w.seifert_numerator
            )));
        }
        pairs[i] = (w.order, li + (book.components[i].seifert_numerator - w.seifert_numerator) / w.order * w.order);
    }
    let coeffs = CableCoefficients::new(pairs);
    let mut out = assemble_cable(book, &coeffs)?;
    if !out.is_integral() {
        return Err(CableError::ResolutionSlope(format!("slopes {l:?} do not give an integral book")));
    }
    out.is_rational_unknot_book = false;
    out.monodromy = resolved_monodromy(book, &rational, l, &out);
    Ok(out)
}

/// The word for resolutions that only turn `(r, -1)` components into
/// `(r, 0)`: the old word followed by a positive multitwist about the new
/// boundary circles. Other resolutions carry no word.
fn resolved_monodromy(
    book: &RationalOpenBook,
    rational: &[usize],
    l: &[i64],
    out: &RationalOpenBook,
) -> Option<TwistWord> {
    let word = book.monodromy.as_ref()?;
    let simple = rational.iter().zip(l).all(|(&i, &li)| {
        let w = book.components[i].normalize_to_window();
        w.seifert_numerator == -1 && li == 0 && w.multiplicity == 1
    });
    if !simple || book.components.iter().any(|c| c.multiplicity != 1) {
        return None;
    }
    let new_labels = out.boundary_labels();
    let mut old_to_new = Vec::new();
    let mut multitwist = TwistWord::empty();
    let mut next = 0;
    for (i, c) in book.components.iter().enumerate() {
        let old = book.component_labels(i).remove(0);
        if rational.contains(&i) {
            for _ in 0..c.order {
                multitwist.push(Generator::twist(&new_labels[next]));
                next += 1;
            }
            old_to_new.push((old, None));
        } else {
            old_to_new.push((old, Some(new_labels[next].clone())));
            next += 1;
        }
    }
    let resolved: Vec<String> = old_to_new.iter().filter(|(_, n)| n.is_none()).map(|(o, _)| o.clone()).collect();
    let kept = strip_fractional(word, &resolved);
    let renamed = kept.rename(|c| old_to_new.iter().find(|(o, _)| o == c).and_then(|(_, n)| n.clone()));
    Some(renamed.then(&multitwist))
}

/// Surgery with coefficient `a/b` is admissible when it lies below the
/// Seifert slope.
pub fn surgery_admissible(coefficient: Slope, seifert: Slope) -> bool {
    !coefficient.is_infinite() && !seifert.is_infinite() && coefficient < seifert
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeredBook {
    pub book: RationalOpenBook,
    /// The coefficient lies below the Seifert slope.
    pub admissible: bool,
}

/// Open book induced on the surgered manifold. The coefficient `a/b` is
/// measured in the component's framing and kills `a·μ + b·λ`.
pub fn induced_open_book_from_surgery(
    book: &RationalOpenBook,
    index: usize,
    coefficient: Slope,
) -> Result<SurgeredBook> {
    book.check()?;
    let comp =
        *book.components.get(index).ok_or_else(|| CableError::Domain(format!("no binding component {index}")))?;
    if coefficient.is_infinite() {
        return Ok(SurgeredBook { book: book.clone(), admissible: false });
    }
    if coefficient == comp.seifert_slope() {
        return Err(CableError::FibrationDestroyed(format!("coefficient {coefficient} is the Seifert slope")));
    }
    let (a, b) = (coefficient.numerator(), coefficient.denominator());
    // choose (c, d) with ad - bc = 1
    let ext = a.extended_gcd(&b);
    let (c, d) = (-ext.y, ext.x);
    debug_assert_eq!(a * d - b * c, 1);
    let n = comp.multiplicity;
    let (pl, pm) = (comp.order / n, comp.seifert_numerator / n);
    let new_l = a * pl - b * pm;
    let new_m = -c * pl + d * pm;
    let (r, s) = if new_l < 0 { (-new_l, -new_m) } else { (new_l, new_m) };
    let (r, s) = normalize_to_window(n * r, n * s);
    let new = BindingComponent::new(r, s)?;
    let mut out = book.clone();
    out.components[index] = new;
    out.is_rational_unknot_book = false;
    if let Some(w) = &book.monodromy {
        let labels = book.component_labels(index);
        let mut w = strip_fractional(w, &labels);
        if new.multiplicity == 1 && s != 0 {
            w.push(Generator::fractional(&labels[0], Slope::new(-s, r)?));
        }
        out.monodromy = Some(w);
    }
    Ok(SurgeredBook { book: out, admissible: surgery_admissible(coefficient, comp.seifert_slope()) })
}
