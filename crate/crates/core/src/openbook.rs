//! Rational open books at the level of page topology and binding data.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{CableError, Result};
use crate::slope::Slope;
use crate::words::{Generator, GeneratorKind, TwistWord};

/// A binding component whose pages approach it as `(r, s)`-curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BindingComponent {
    pub order: i64,
    pub seifert_numerator: i64,
    pub multiplicity: i64,
}

fn gcd0(r: i64, s: i64) -> i64 {
    if s == 0 {
        r.abs()
    } else {
        r.gcd(&s)
    }
}

impl BindingComponent {
    /// Computes the multiplicity as `gcd(r, s)`, with `gcd(r, 0) = r`.
    pub fn new(order: i64, seifert_numerator: i64) -> Result<Self> {
        if order < 1 {
            return Err(CableError::Domain(format!("order {order} must be positive")));
        }
        Ok(BindingComponent { order, seifert_numerator, multiplicity: gcd0(order, seifert_numerator) })
    }

    /// The honest binding component with the page framing.
    pub fn integral() -> Self {
        BindingComponent { order: 1, seifert_numerator: 0, multiplicity: 1 }
    }

    pub fn seifert_slope(&self) -> Slope {
        Slope::new(self.seifert_numerator, self.order).expect("order is positive")
    }

    /// The page meets the component in a single longitude.
    pub fn is_integral(&self) -> bool {
        self.order == 1
    }

    /// `s ↦ s + k·r`.
    pub fn reframe(&self, k: i64) -> Self {
        BindingComponent { seifert_numerator: self.seifert_numerator + k * self.order, ..*self }
    }

    /// The framing with `-r < s <= 0`.
    pub fn normalize_to_window(&self) -> Self {
        let r = self.order;
        let s = self.seifert_numerator.mod_floor(&r);
        BindingComponent { seifert_numerator: if s == 0 { 0 } else { s - r }, ..*self }
    }
}

pub fn reframe(c: BindingComponent, k: i64) -> BindingComponent {
    c.reframe(k)
}

/// `(r, s)` with `-r < s <= 0`.
pub fn normalize_to_window(r: i64, s: i64) -> (i64, i64) {
    let w = s.mod_floor(&r);
    (r, if w == 0 { 0 } else { w - r })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "BookJson", into = "BookJson")]
pub struct RationalOpenBook {
    pub genus: i64,
    pub components: Vec<BindingComponent>,
    pub boundary_count_of_page: i64,
    pub is_rational_unknot_book: bool,
    pub monodromy: Option<TwistWord>,
}

#[derive(Serialize, Deserialize)]
struct BookJson {
    genus: i64,
    components: Vec<BindingComponent>,
    #[serde(default)]
    rational_unknot: bool,
    #[serde(default)]
    monodromy: Option<TwistWord>,
    #[serde(default, skip_serializing)]
    boundary_count: Option<i64>,
}

impl From<BookJson> for RationalOpenBook {
    fn from(j: BookJson) -> Self {
        let b = j.boundary_count.unwrap_or_else(|| j.components.iter().map(|c| c.multiplicity).sum());
        RationalOpenBook {
            genus: j.genus,
            components: j.components,
            boundary_count_of_page: b,
            is_rational_unknot_book: j.rational_unknot,
            monodromy: j.monodromy,
        }
    }
}

impl From<RationalOpenBook> for BookJson {
    fn from(b: RationalOpenBook) -> Self {
        BookJson {
            genus: b.genus,
            components: b.components,
            rational_unknot: b.is_rational_unknot_book,
            monodromy: b.monodromy,
            boundary_count: None,
        }
    }
}

/// How a positive stabilization attaches its 1-handle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilizationMode {
    /// Both feet on one boundary circle: one more boundary component.
    SameComponent(usize),
    /// Feet on two boundary circles: they merge and the genus goes up.
    Join(usize, usize),
}

impl RationalOpenBook {
    /// Page data from its parts; the boundary count is the sum of
    /// multiplicities.
    pub fn new(genus: i64, components: Vec<BindingComponent>, monodromy: Option<TwistWord>) -> Self {
        let b = components.iter().map(|c| c.multiplicity).sum();
        RationalOpenBook { genus, components, boundary_count_of_page: b, is_rational_unknot_book: false, monodromy }
    }

    /// Integral book with `n` binding components.
    pub fn integral(genus: i64, n: usize) -> Self {
        RationalOpenBook::new(genus, vec![BindingComponent::integral(); n], None)
    }

    /// Disk pages around a rational unknot with Seifert data `(r, s)`.
    pub fn rational_unknot(r: i64, s: i64) -> Result<Self> {
        let c = BindingComponent::new(r, s)?;
        if c.multiplicity != 1 {
            return Err(CableError::Domain(format!("rational unknot needs gcd(r, s) = 1, got ({r}, {s})")));
        }
        let mut b = RationalOpenBook::new(0, vec![c], None);
        b.is_rational_unknot_book = true;
        Ok(b)
    }

    /// The right- or left-handed trefoil: genus one, one boundary,
    /// monodromy `D_c1 ∘ D_c2` (or its inverse twists).
    pub fn trefoil(right_handed: bool) -> Self {
        let w = if right_handed { TwistWord::parse_compact("c1 c2") } else { TwistWord::parse_compact("c1' c2'") };
        RationalOpenBook::new(1, vec![BindingComponent::integral()], Some(w))
    }

    pub fn with_monodromy(mut self, w: TwistWord) -> Self {
        self.monodromy = Some(w);
        self
    }

    pub fn page_euler_char(&self) -> i64 {
        2 - 2 * self.genus - self.boundary_count_of_page
    }

    pub fn is_integral(&self) -> bool {
        self.components.iter().all(BindingComponent::is_integral)
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1 && self.boundary_count_of_page == 1
    }

    /// Names of the page boundary circles, in component order: `bd` when
    /// there is one, else `bd1, bd2, ...`.
    pub fn boundary_labels(&self) -> Vec<String> {
        let b = self.boundary_count_of_page.max(0) as usize;
        if b == 1 {
            vec!["bd".to_string()]
        } else {
            (1..=b).map(|i| format!("bd{i}")).collect()
        }
    }

    /// Labels of the boundary circles belonging to component `i`.
    pub fn component_labels(&self, i: usize) -> Vec<String> {
        let labels = self.boundary_labels();
        let start: i64 = self.components[..i].iter().map(|c| c.multiplicity).sum();
        let n = self.components[i].multiplicity;
        labels.into_iter().skip(start as usize).take(n as usize).collect()
    }

    /// Violated invariants, empty when the book is well formed.
    pub fn validate(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.genus < 0 {
            v.push("negative genus".to_string());
        }
        if self.components.is_empty() {
            v.push("empty binding".to_string());
        }
        for (i, c) in self.components.iter().enumerate() {
            if c.order < 1 {
                v.push(format!("component {i} is meridional"));
            } else if c.multiplicity != gcd0(c.order, c.seifert_numerator) {
                v.push(format!("component {i} multiplicity mismatch"));
            }
        }
        if self.boundary_count_of_page != self.components.iter().map(|c| c.multiplicity).sum::<i64>() {
            v.push("boundary count mismatch".to_string());
        }
        if self.is_rational_unknot_book && (self.genus != 0 || self.boundary_count_of_page != 1) {
            v.push("rational unknot flag on a page that is not a disk".to_string());
        }
        v
    }

    pub fn check(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(e) => Err(CableError::Domain(format!("invalid open book: {e}"))),
        }
    }

    /// Plumbs one positive Hopf band. The stabilized components must be
    /// integral with multiplicity one.
    pub fn positive_stabilize(&self, mode: StabilizationMode) -> Result<Self> {
        self.check()?;
        let honest = |i: usize| -> Result<()> {
            match self.components.get(i) {
                None => Err(CableError::InvalidStabilization(format!("no component {i}"))),
                Some(c) if c.order != 1 || c.multiplicity != 1 => Err(CableError::InvalidStabilization(format!(
                    "component {i} is not an integral single-boundary component"
                ))),
                Some(_) => Ok(()),
            }
        };
        let mut out = self.clone();
        match mode {
            StabilizationMode::SameComponent(i) => {
                honest(i)?;
                out.components.insert(i + 1, BindingComponent::integral());
                out.boundary_count_of_page += 1;
            }
            StabilizationMode::Join(i, j) => {
                if i == j {
                    return Err(CableError::InvalidStabilization("join needs two distinct components".into()));
                }
                honest(i)?;
                honest(j)?;
                out.components.remove(i.max(j));
                out.boundary_count_of_page -= 1;
                out.genus += 1;
            }
        }
        out.is_rational_unknot_book = false;
        if let Some(w) = &self.monodromy {
            let mut n = 1;
            while w.curves().any(|c| c == format!("alpha{n}")) {
                n += 1;
            }
            let mut w = w.clone();
            w.push(Generator::twist(&format!("alpha{n}")));
            out.monodromy = Some(w);
        }
        Ok(out)
    }
}

/// Removes fractional twists about the given boundary labels.
pub(crate) fn strip_fractional(w: &TwistWord, labels: &[String]) -> TwistWord {
    w.generators
        .iter()
        .filter(|g| !(g.kind == GeneratorKind::FractionalBoundaryTwist && labels.contains(&g.curve)))
        .cloned()
        .collect()
}

pub fn page_euler_char(book: &RationalOpenBook) -> i64 {
    book.page_euler_char()
}

pub fn positive_stabilize(book: &RationalOpenBook, mode: StabilizationMode) -> Result<RationalOpenBook> {
    book.positive_stabilize(mode)
}
