//! Curve names and homology models for cable pages.
//!
//! Connected binding, `(p,1)`-cable of a genus `g` page: nodules
//! `Σ_1, ..., Σ_p`, each a copy of the page carrying the chain
//! `c_1, ..., c_{2g}`, joined through the base disk by reference arcs `d_j`.
//! With `d = 2g+1`, the subsurface `Σ_{j,j+1}` carries the chain of `2d-1`
//! curves: nodule `j`'s chain, the connector `c_{j,d}` built from `d_j`, then
//! nodule `j+1`'s chain in reverse.

use serde::{Deserialize, Serialize};

use crate::error::{CableError, Result};
use crate::words::{chain_model, Curve, CurveSystem, GeneratorKind, TwistWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoduleLayout {
    pub p: usize,
    pub genus: usize,
    /// `nodule_curves[j-1][k-1]` is the chain curve `c_k` on nodule `j`.
    pub nodule_curves: Vec<Vec<String>>,
    /// Connector curve of `Σ_{j,j+1}`, built from the reference arc `d_j`.
    pub connectors: Vec<String>,
    /// Boundary curves of the base component: one per nodule.
    pub nodule_boundaries: Vec<String>,
    /// Label of the page boundary.
    pub boundary: String,
}

impl NoduleLayout {
    /// For `p = 2` the curves are the flat chain `c1, ..., c{4g+1}`; for
    /// larger `p` they are `c{j},{k}`.
    pub fn connected(p: usize, genus: usize) -> Result<Self> {
        if p < 1 {
            return Err(CableError::Domain("p must be at least 1".into()));
        }
        let d = 2 * genus + 1;
        let name = |j: usize, k: usize| -> String {
            match p {
                1 => format!("c{k}"),
                2 if j == 1 => format!("c{k}"),
                2 => format!("c{}", 2 * d - k),
                _ => format!("c{j},{k}"),
            }
        };
        let nodule_curves = (1..=p).map(|j| (1..d).map(|k| name(j, k)).collect()).collect();
        let connectors = (1..p).map(|j| name(j, d)).collect();
        let nodule_boundaries = (1..=p).map(|j| format!("nb{j}")).collect();
        Ok(NoduleLayout { p, genus, nodule_curves, connectors, nodule_boundaries, boundary: "bd".into() })
    }

    pub fn d(&self) -> usize {
        2 * self.genus + 1
    }

    /// Curve at chain position `pos` (1..=2d-1) of `Σ_{j,j+1}`.
    pub fn position(&self, j: usize, pos: usize) -> &str {
        let d = self.d();
        if pos < d {
            &self.nodule_curves[j - 1][pos - 1]
        } else if pos == d {
            &self.connectors[j - 1]
        } else {
            &self.nodule_curves[j][2 * d - pos - 1]
        }
    }

    /// Nodule `j`'s chain in the order it appears along the layouts.
    fn chain_in_layout_order(&self, j: usize) -> Vec<String> {
        let mut c = self.nodule_curves[j - 1].clone();
        if j > 1 {
            c.reverse();
        }
        c
    }

    /// `∂_j` as the chain word `(c_1 ⋯ c_{2g})^{4g+2}` on nodule `j`.
    pub fn nodule_boundary_word(&self, j: usize) -> TwistWord {
        let chain = self.chain_in_layout_order(j);
        let refs: Vec<&str> = chain.iter().map(String::as_str).collect();
        TwistWord::positive(&refs).pow(4 * self.genus as i64 + 2)
    }

    /// Nodule boundary twists replaced by chain words.
    pub fn expand_nodule_boundaries(&self, w: &TwistWord) -> TwistWord {
        let rules =
            (1..=self.p).map(|j| (self.nodule_boundaries[j - 1].clone(), self.nodule_boundary_word(j))).collect();
        crate::words::expand_generators(w, &rules)
    }

    /// `s_j = (D_{2d-1}) ∘ (D_{2d-2} ∘ D_{2d-1}) ∘ ⋯ ∘ (D_1 ∘ ⋯ ∘ D_{2d-1})`
    /// on `Σ_{j,j+1}`: the lift of the Garside half twist.
    pub fn garside_block(&self, j: usize) -> TwistWord {
        let top = 2 * self.d() - 1;
        let mut w = TwistWord::empty();
        for start in (1..=top).rev() {
            for pos in start..=top {
                w.push(crate::words::Generator::twist(self.position(j, pos)));
            }
        }
        w
    }

    /// Copies a word on the base page (chain names `c1..c{2g}`, boundary
    /// `bd`) onto nodule `j`.
    pub fn lift_to_nodule(&self, phi: &TwistWord, j: usize) -> Result<TwistWord> {
        let mut out = TwistWord::empty();
        for g in &phi.generators {
            if g.kind == GeneratorKind::FractionalBoundaryTwist {
                return Err(CableError::Precondition(format!("cannot lift fractional twist {g} to a nodule")));
            }
            let target = if g.curve == "bd" {
                self.nodule_boundaries[j - 1].clone()
            } else {
                let k = g
                    .curve
                    .strip_prefix('c')
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k >= 1 && k <= 2 * self.genus)
                    .ok_or_else(|| CableError::UnresolvedCurve(g.curve.clone()))?;
                self.nodule_curves[j - 1][k - 1].clone()
            };
            let mut g = g.clone();
            g.curve = target;
            out.push(g);
        }
        Ok(out)
    }

    /// Homology of the capped cable page, genus `pg`: nodule `j` spans the
    /// `j`-th block of `2g` coordinates, connectors are `A_{j+1} - A_j` where
    /// `A_j` is the arc class `a_g` of nodule `j`.
    pub fn curve_system(&self) -> CurveSystem {
        let g = self.genus;
        let dim = 2 * g * self.p;
        let local =
            if g == 0 { Vec::new() } else { chain_model(g, 0).curves().iter().map(|c| c.homology.clone()).collect() };
        let place = |j: usize, v: &[i64]| -> Vec<i64> {
            let mut out = vec![0; dim];
            out[2 * g * (j - 1)..2 * g * j].copy_from_slice(v);
            out
        };
        let mut sys = CurveSystem::new(&format!("cable_p{}_g{g}", self.p), g * self.p, vec![self.boundary.clone()]);
        for j in 1..=self.p {
            for (k, name) in self.nodule_curves[j - 1].iter().enumerate() {
                let c = Curve {
                    name: name.clone(),
                    homology: place(j, &local[k]),
                    boundary_parallel: None,
                    nonseparating: true,
                };
                sys.add_curve(c).expect("distinct names");
            }
        }
        for j in 1..self.p {
            let mut v = vec![0; dim];
            if g > 0 {
                let a = &local[2 * g];
                for (x, (l, r)) in v.iter_mut().zip(place(j + 1, a).iter().zip(place(j, a))) {
                    *x = l - r;
                }
            }
            let c = Curve {
                name: self.connectors[j - 1].clone(),
                homology: v,
                boundary_parallel: None,
                nonseparating: true,
            };
            sys.add_curve(c).expect("distinct names");
        }
        for nb in &self.nodule_boundaries {
            sys = sys.with_separating(nb).expect("distinct names");
        }
        sys.with_boundary(&self.boundary, &self.boundary).expect("distinct names").record_all()
    }

    /// Coordinates of nodule `j` in [`Self::curve_system`].
    pub fn nodule_coordinates(&self, j: usize) -> std::ops::Range<usize> {
        2 * self.genus * (j - 1)..2 * self.genus * j
    }
}

/// The `(2,2)`-cable page of a genus `g` page with connected binding: the
/// double cover of the disk over `4g+2` points. `c_i` lifts the arc between
/// points `i` and `i+1`; nodule 1 carries `c_1..c_{2g}` and nodule 2 carries
/// `c_{2g+2}..c_{4g+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTwoLayout {
    pub genus: usize,
}

impl TwoTwoLayout {
    pub fn m(&self) -> usize {
        2 * self.genus + 1
    }

    pub fn arc(&self, i: usize) -> String {
        format!("c{i}")
    }

    pub fn rotation_curve(&self, k: usize) -> String {
        format!("d{k}")
    }

    /// Chain classes oriented so that `⟨c_i, c_{i+1}⟩ = 1`.
    fn arc_classes(&self) -> Vec<Vec<i64>> {
        let n = 4 * self.genus + 1;
        let mut out: Vec<Vec<i64>> = Vec::new();
        if self.genus == 0 {
            return vec![Vec::new()];
        }
        for c in chain_model(2 * self.genus, 0).curves().iter().take(n) {
            let mut v = c.homology.clone();
            if let Some(prev) = out.last() {
                if crate::words::symplectic_form(prev, &v) < 0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
            }
            out.push(v);
        }
        out
    }

    /// `d_k = Σ_{j=m-k+1}^{m} c_j + Σ_{j=m+1}^{m+k-1} (-1)^{j-m} c_j`.
    pub fn rotation_class(&self, k: usize) -> Vec<i64> {
        let m = self.m();
        let e = self.arc_classes();
        let mut v = vec![0; 4 * self.genus];
        for j in (m + 1 - k)..=m {
            add(&mut v, &e[j - 1], 1);
        }
        for j in (m + 1)..(m + k) {
            add(&mut v, &e[j - 1], if (j - m).is_multiple_of(2) { 1 } else { -1 });
        }
        v
    }

    /// Capped homology, genus `2g`.
    pub fn curve_system(&self) -> CurveSystem {
        let g2 = 2 * self.genus;
        let mut sys = CurveSystem::new(&format!("cable22_g{}", self.genus), g2, vec!["bd1".into(), "bd2".into()]);
        for (i, c) in self.arc_classes().into_iter().enumerate() {
            sys.add_curve(Curve { name: self.arc(i + 1), homology: c, boundary_parallel: None, nonseparating: true })
                .expect("distinct names");
        }
        for k in 1..=self.m() {
            let c = Curve {
                name: self.rotation_curve(k),
                homology: self.rotation_class(k),
                boundary_parallel: None,
                nonseparating: true,
            };
            sys.add_curve(c).expect("distinct names");
        }
        for nb in ["nb1", "nb2"] {
            sys = sys.with_separating(nb).expect("distinct names");
        }
        for l in ["bd1", "bd2"] {
            sys = sys.with_boundary(l, l).expect("distinct names");
        }
        sys.record_all()
    }

    /// Nodule chains: the same names as the `(2,1)` layout.
    pub fn nodules(&self) -> NoduleLayout {
        NoduleLayout::connected(2, self.genus).expect("p = 2")
    }

    pub fn lift_to_nodule(&self, phi: &TwistWord, j: usize) -> Result<TwistWord> {
        self.nodules().lift_to_nodule(phi, j)
    }
}

fn add(v: &mut [i64], w: &[i64], s: i64) {
    for (x, y) in v.iter_mut().zip(w) {
        *x += s * y;
    }
}
