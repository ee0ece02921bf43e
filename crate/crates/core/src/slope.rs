//! Exact slopes on a framed torus, negative continued fractions and
//! Farey graph paths.
//!
//! A slope `q/p` is the class `p·λ + q·μ`. The sign lives in the numerator
//! and the meridian is `1/0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CableError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    numerator: i64,
    denominator: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { numerator: 1, denominator: 0 };
    pub const ZERO: Slope = Slope { numerator: 0, denominator: 1 };

    /// Builds and normalizes `q/p`. Fails only for `0/0`.
    pub fn new(q: i64, p: i64) -> Result<Slope> {
        if q == 0 && p == 0 {
            return Err(CableError::InvalidSlope("0/0".into()));
        }
        if p == 0 {
            return Ok(Slope::INFINITY);
        }
        let g = q.gcd(&p);
        let (mut q, mut p) = (q / g, p / g);
        if p < 0 {
            q = -q;
            p = -p;
        }
        Ok(Slope { numerator: q, denominator: p })
    }

    pub fn integer(n: i64) -> Slope {
        Slope { numerator: n, denominator: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn is_infinite(&self) -> bool {
        self.denominator == 0
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    /// `floor(q/p)`; `None` for the meridian.
    pub fn floor(&self) -> Option<i64> {
        (!self.is_infinite()).then(|| Integer::div_floor(&self.numerator, &self.denominator))
    }

    /// Fraction form, `"q/p"` or `"inf"`. This is the JSON encoding.
    pub fn to_fraction_string(&self) -> String {
        if self.is_infinite() {
            "inf".to_string()
        } else {
            format!("{}/{}", self.numerator, self.denominator)
        }
    }

    /// Action of the integral matrix `[[a, b], [c, d]]` on `q/p`, viewing the
    /// slope as the column vector `(q, p)`.
    pub fn mobius(&self, m: [[i64; 2]; 2]) -> Slope {
        let q = m[0][0] * self.numerator + m[0][1] * self.denominator;
        let p = m[1][0] * self.numerator + m[1][1] * self.denominator;
        Slope::new(q, p).expect("unimodular image of a slope is a slope")
    }
}

impl Ord for Slope {
    /// Finite slopes by value; the meridian sorts above everything.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let l = self.numerator as i128 * other.denominator as i128;
                let r = other.numerator as i128 * self.denominator as i128;
                l.cmp(&r)
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

impl FromStr for Slope {
    type Err = CableError;

    fn from_str(s: &str) -> Result<Slope> {
        let t = s.trim();
        if matches!(t, "inf" | "∞" | "infinity" | "-inf") {
            return Ok(Slope::INFINITY);
        }
        let bad = || CableError::InvalidSlope(format!("cannot parse `{s}`"));
        match t.split_once('/') {
            Some((q, p)) => {
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                Slope::new(q, p)
            }
            None => Ok(Slope::integer(t.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_fraction_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Slope, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `[r_0, ..., r_k]` standing for `1/(r_0 - 1/(r_1 - ... - 1/r_k))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NegContinuedFraction {
    pub terms: Vec<i64>,
}

impl NegContinuedFraction {
    pub fn new(terms: Vec<i64>) -> Self {
        NegContinuedFraction { terms }
    }

    /// Applies `[.., r, -1] = [.., r + 1]` until the tail is not `-1`.
    pub fn collapse(mut self) -> Self {
        while self.terms.len() > 1 && self.terms.last() == Some(&-1) {
            self.terms.pop();
            *self.terms.last_mut().unwrap() += 1;
        }
        self
    }

    pub fn is_canonical(&self) -> bool {
        !self.terms.is_empty() && self.terms.iter().all(|&r| r <= -2)
    }
}

impl fmt::Display for NegContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Canonical negative continued fraction of a slope in `(-1, 0)`.
pub fn neg_cont_frac(s: Slope) -> Result<NegContinuedFraction> {
    if s.is_infinite() || s >= Slope::ZERO || s <= Slope::integer(-1) {
        return Err(CableError::Domain(format!("{s} is not in (-1, 0)")));
    }
    // x = 1/s < -1, written as num/den with den > 0
    let (mut num, mut den) = (-s.denominator, -s.numerator);
    let mut terms = Vec::new();
    loop {
        let r = Integer::div_floor(&num, &den);
        terms.push(r);
        let rem = num - r * den; // x = r + rem/den, 0 <= rem < den
        if rem == 0 {
            break;
        }
        // next x = 1/(r - x) = -den/rem
        num = -den;
        den = rem;
    }
    Ok(NegContinuedFraction { terms })
}

/// Evaluates a nested negative continued fraction exactly.
pub fn eval_cont_frac(cf: &NegContinuedFraction) -> Result<Slope> {
    let Some((&last, rest)) = cf.terms.split_last() else {
        return Err(CableError::Domain("empty continued fraction".into()));
    };
    let zero = || CableError::DivisionByZero(cf.terms.clone());
    // t = n/d
    let (mut n, mut d) = (last as i128, 1i128);
    for &r in rest.iter().rev() {
        if n == 0 {
            return Err(zero());
        }
        // r - d/n
        let (nn, nd) = (r as i128 * n - d, n);
        n = nn;
        d = nd;
    }
    if n == 0 {
        return Err(zero());
    }
    let g = n.gcd(&d);
    let to64 = |v: i128| i64::try_from(v).map_err(|_| CableError::Domain("overflow".into()));
    Slope::new(to64(d / g)?, to64(n / g)?)
}

/// Farey edge test, `|q_a p_b - q_b p_a| = 1`.
pub fn farey_neighbors(a: Slope, b: Slope) -> bool {
    let det = a.numerator as i128 * b.denominator as i128 - b.numerator as i128 * a.denominator as i128;
    det.abs() == 1
}

/// Regular continued fraction `[a_0; a_1, ...]` of a finite slope.
fn regular_cf(s: Slope) -> Vec<i64> {
    let (mut n, mut d) = (s.numerator, s.denominator);
    let mut out = Vec::new();
    while d != 0 {
        let a = Integer::div_floor(&n, &d);
        out.push(a);
        let r = n - a * d;
        n = d;
        d = r;
    }
    out
}

#[derive(Clone)]
struct Route {
    len: usize,
    outside: usize,
    // vertices in the moved frame, as (numerator, denominator)
    verts: Vec<(i64, i64)>,
}

/// Ladder search over the convergents of the image of `to` once `from` is
/// moved to the meridian. With `confined` set, vertices outside the closed
/// interval spanned by the endpoints are forbidden.
fn ladder(from: Slope, to: Slope, confined: bool) -> Option<Vec<Slope>> {
    let (a, b) = (from.numerator, from.denominator);
    let eg = a.extended_gcd(&b);
    let (x, y) = (eg.x * eg.gcd.signum(), eg.y * eg.gcd.signum());
    debug_assert_eq!(a * x + b * y, 1);
    let forward = [[x, y], [-b, a]];
    let back = [[a, -y], [b, x]];
    let target = to.mobius(forward);

    let (lo, hi) = if from <= to { (from, to) } else { (to, from) };
    let bounded = !from.is_infinite() && !to.is_infinite();
    let is_outside = |v: (i64, i64)| -> bool {
        if !bounded {
            return false;
        }
        let s = Slope::new(v.0, v.1).unwrap().mobius(back);
        s < lo || s > hi
    };

    let quotients = regular_cf(target);
    let mut conv: Vec<(i64, i64)> = vec![(0, 1), (1, 0)]; // c_{-2}, c_{-1}
    let mut best: Vec<Option<Route>> = vec![None, Some(Route { len: 0, outside: 0, verts: vec![(1, 0)] })];

    let extend = |r: &Route, vs: &[(i64, i64)]| -> Option<Route> {
        let out = vs.iter().filter(|&&v| is_outside(v)).count();
        if confined && out > 0 {
            return None;
        }
        let mut verts = r.verts.clone();
        verts.extend_from_slice(vs);
        Some(Route { len: r.len + vs.len(), outside: r.outside + out, verts })
    };

    for (k, &q) in quotients.iter().enumerate() {
        let (p1, p2) = (conv[k + 1], conv[k]);
        let c = (q * p1.0 + p2.0, q * p1.1 + p2.1);
        let direct = best[k + 1].as_ref().and_then(|r| extend(r, &[c]));
        let pivot = if k >= 1 && q >= 1 {
            best[k].as_ref().and_then(|r| {
                let fan: Vec<(i64, i64)> = (1..=q).map(|j| (p2.0 + j * p1.0, p2.1 + j * p1.1)).collect();
                extend(r, &fan)
            })
        } else {
            None
        };
        let chosen = match (direct, pivot) {
            (Some(d), Some(p)) => {
                if (p.len, p.outside) <= (d.len, d.outside) {
                    Some(p)
                } else {
                    Some(d)
                }
            }
            (d, p) => d.or(p),
        };
        conv.push(c);
        best.push(chosen);
    }
    let route = best.pop().flatten()?;
    Some(route.verts.into_iter().map(|(n, d)| Slope::new(n, d).unwrap().mobius(back)).collect())
}

fn symmetric_path(from: Slope, to: Slope, confined: bool) -> Option<Vec<Slope>> {
    if from == to {
        return Some(vec![from]);
    }
    if farey_neighbors(from, to) {
        return Some(vec![from, to]);
    }
    if from < to {
        ladder(from, to, confined)
    } else {
        let mut p = ladder(to, from, confined)?;
        p.reverse();
        Some(p)
    }
}

/// A shortest path in the Farey graph, both endpoints included.
///
/// Among shortest paths the one with the fewest vertices outside the
/// interval between the endpoints is returned.
pub fn farey_shortest_path(from: Slope, to: Slope) -> Vec<Slope> {
    symmetric_path(from, to, false).expect("the Farey graph is connected")
}

/// Shortest path that stays inside the closed interval between the
/// endpoints, i.e. walks one way around the tessellation. `None` when the
/// endpoints are not both finite.
pub fn farey_clockwise_path(from: Slope, to: Slope) -> Option<Vec<Slope>> {
    if from.is_infinite() || to.is_infinite() {
        return None;
    }
    symmetric_path(from, to, true)
}

/// Exceptional cabling slopes of a Seifert slope in `[-1, 0]`.
///
/// For `s` in `(-1, 0)` the slopes come from repeatedly adding one to the
/// last term of the negative continued fraction of `s`. The list ends at
/// `-1`. The integral case `0` gives `[-1]`; `-1` itself has none.
pub fn exceptional_slopes(seifert: Slope) -> Result<Vec<Slope>> {
    if seifert == Slope::ZERO {
        return Ok(vec![Slope::integer(-1)]);
    }
    if seifert == Slope::integer(-1) {
        return Ok(Vec::new());
    }
    let mut cf = neg_cont_frac(seifert)
        .map_err(|_| CableError::Domain(format!("Seifert slope {seifert} is outside [-1, 0]; reframe first")))?;
    let mut out = Vec::new();
    loop {
        *cf.terms.last_mut().unwrap() += 1;
        cf = cf.collapse();
        out.push(eval_cont_frac(&cf)?);
        if cf.terms == [-1] {
            break;
        }
    }
    Ok(out)
}
