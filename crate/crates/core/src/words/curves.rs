use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::symplectic::symplectic_form;
use crate::error::{CableError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub name: String,
    pub homology: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_parallel: Option<String>,
    #[serde(default = "yes")]
    pub nonseparating: bool,
}

fn yes() -> bool {
    true
}

/// Named curves on a model surface with their classes in the capped
/// surface and a table of recorded algebraic intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSystem {
    pub name: String,
    pub genus: usize,
    pub boundary_labels: Vec<String>,
    curves: Vec<Curve>,
    index: HashMap<String, usize>,
    recorded: BTreeMap<(usize, usize), i64>,
}

/// On-disk form. `matrix[i][j]` is `⟨order[i], order[j]⟩` or `null` when
/// not recorded.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveSystemFile {
    #[serde(default)]
    pub name: String,
    pub genus: usize,
    #[serde(default)]
    pub boundary_labels: Vec<String>,
    pub curves: Vec<Curve>,
    #[serde(default)]
    pub intersections: Option<IntersectionTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntersectionTable {
    pub order: Vec<String>,
    pub matrix: Vec<Vec<Option<i64>>>,
}

impl CurveSystem {
    pub fn new(name: &str, genus: usize, boundary_labels: Vec<String>) -> Self {
        CurveSystem {
            name: name.to_string(),
            genus,
            boundary_labels,
            curves: Vec::new(),
            index: HashMap::new(),
            recorded: BTreeMap::new(),
        }
    }

    pub fn add_curve(&mut self, curve: Curve) -> Result<()> {
        if curve.homology.len() != 2 * self.genus {
            return Err(CableError::Inconsistent(format!(
                "curve `{}` has a class of length {}, expected {}",
                curve.name,
                curve.homology.len(),
                2 * self.genus
            )));
        }
        if self.index.contains_key(&curve.name) {
            return Err(CableError::Inconsistent(format!("duplicate curve `{}`", curve.name)));
        }
        self.index.insert(curve.name.clone(), self.curves.len());
        self.curves.push(curve);
        Ok(())
    }

    /// Adds a nonseparating curve with the given class.
    pub fn with(mut self, name: &str, class: Vec<i64>) -> Result<Self> {
        self.add_curve(Curve { name: name.into(), homology: class, boundary_parallel: None, nonseparating: true })?;
        Ok(self)
    }

    /// Adds a separating curve (zero class).
    pub fn with_separating(mut self, name: &str) -> Result<Self> {
        let zero = vec![0; 2 * self.genus];
        self.add_curve(Curve { name: name.into(), homology: zero, boundary_parallel: None, nonseparating: false })?;
        Ok(self)
    }

    /// Adds a curve parallel to the named boundary.
    pub fn with_boundary(mut self, name: &str, label: &str) -> Result<Self> {
        let zero = vec![0; 2 * self.genus];
        self.add_curve(Curve {
            name: name.into(),
            homology: zero,
            boundary_parallel: Some(label.into()),
            nonseparating: false,
        })?;
        Ok(self)
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn curve(&self, name: &str) -> Result<&Curve> {
        self.index.get(name).map(|&i| &self.curves[i]).ok_or_else(|| CableError::UnresolvedCurve(name.to_string()))
    }

    pub fn class(&self, name: &str) -> Result<&[i64]> {
        Ok(&self.curve(name)?.homology)
    }

    /// Algebraic intersection computed from the classes.
    pub fn intersection(&self, a: &str, b: &str) -> Result<i64> {
        Ok(symplectic_form(self.class(a)?, self.class(b)?))
    }

    pub fn record(&mut self, a: &str, b: &str, value: i64) -> Result<()> {
        let (i, j) = (self.idx(a)?, self.idx(b)?);
        self.recorded.insert((i, j), value);
        self.recorded.insert((j, i), -value);
        Ok(())
    }

    /// Records every pair from the classes.
    pub fn record_all(mut self) -> Self {
        for i in 0..self.curves.len() {
            for j in 0..self.curves.len() {
                let v = symplectic_form(&self.curves[i].homology, &self.curves[j].homology);
                self.recorded.insert((i, j), v);
            }
        }
        self
    }

    pub fn recorded(&self, a: &str, b: &str) -> Option<i64> {
        let (i, j) = (self.index.get(a)?, self.index.get(b)?);
        self.recorded.get(&(*i, *j)).copied()
    }

    /// The disjointness certificate used for commuting twists: same curve,
    /// or a recorded intersection of zero.
    pub fn certified_disjoint(&self, a: &str, b: &str) -> bool {
        a == b || self.recorded(a, b) == Some(0)
    }

    fn idx(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| CableError::UnresolvedCurve(name.to_string()))
    }

    /// Checks the recorded table against the classes, antisymmetry, and
    /// that boundary-parallel curves have zero class.
    pub fn validate(&self) -> Result<()> {
        for c in &self.curves {
            if c.boundary_parallel.is_some() && c.homology.iter().any(|&v| v != 0) {
                return Err(CableError::Inconsistent(format!(
                    "boundary-parallel curve `{}` has nonzero class",
                    c.name
                )));
            }
            if let Some(b) = &c.boundary_parallel {
                if !self.boundary_labels.contains(b) {
                    return Err(CableError::Inconsistent(format!("curve `{}` names unknown boundary `{b}`", c.name)));
                }
            }
        }
        for (&(i, j), &v) in &self.recorded {
            let computed = symplectic_form(&self.curves[i].homology, &self.curves[j].homology);
            if computed != v {
                return Err(CableError::Inconsistent(format!(
                    "recorded ⟨{}, {}⟩ = {v} but the classes give {computed}",
                    self.curves[i].name, self.curves[j].name
                )));
            }
            if self.recorded.get(&(j, i)).is_some_and(|&w| w != -v) {
                return Err(CableError::Inconsistent(format!(
                    "intersections of `{}` and `{}` are not antisymmetric",
                    self.curves[i].name, self.curves[j].name
                )));
            }
        }
        Ok(())
    }

    pub fn to_file(&self) -> CurveSystemFile {
        let order: Vec<String> = self.curves.iter().map(|c| c.name.clone()).collect();
        let n = order.len();
        let matrix = (0..n).map(|i| (0..n).map(|j| self.recorded.get(&(i, j)).copied()).collect()).collect();
        CurveSystemFile {
            name: self.name.clone(),
            genus: self.genus,
            boundary_labels: self.boundary_labels.clone(),
            curves: self.curves.clone(),
            intersections: Some(IntersectionTable { order, matrix }),
            note: None,
        }
    }

    /// Loads and validates.
    pub fn from_file(f: CurveSystemFile) -> Result<Self> {
        let mut sys = CurveSystem::new(&f.name, f.genus, f.boundary_labels);
        for c in f.curves {
            sys.add_curve(c)?;
        }
        if let Some(t) = f.intersections {
            if t.matrix.len() != t.order.len() {
                return Err(CableError::Inconsistent("intersection table is not square".into()));
            }
            for (i, row) in t.matrix.iter().enumerate() {
                if row.len() != t.order.len() {
                    return Err(CableError::Inconsistent("intersection table is not square".into()));
                }
                for (j, v) in row.iter().enumerate() {
                    if let Some(v) = v {
                        let (a, b) = (sys.idx(&t.order[i])?, sys.idx(&t.order[j])?);
                        sys.recorded.insert((a, b), *v);
                    }
                }
            }
        }
        sys.validate()?;
        Ok(sys)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: CurveSystemFile = serde_json::from_str(s).map_err(|e| CableError::Data(e.to_string()))?;
        CurveSystem::from_file(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("curve systems serialize")
    }
}

/// Unit vector `a_i` (1-based) in genus `g`.
pub(crate) fn a_vec(g: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; 2 * g];
    v[2 * (i - 1)] = 1;
    v
}

pub(crate) fn b_vec(g: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; 2 * g];
    v[2 * (i - 1) + 1] = 1;
    v
}

/// Classes of the standard chain `c_1, ..., c_{2g+1}` on a genus `g`
/// surface: `c_1 = a_1`, `c_{2i} = b_i`, `c_{2i+1} = a_{i+1} - a_i`,
/// `c_{2g+1} = a_g`.
pub(crate) fn chain_classes(g: usize) -> Vec<Vec<i64>> {
    if g == 0 {
        return vec![Vec::new()];
    }
    let mut out = vec![a_vec(g, 1)];
    for i in 1..=g {
        out.push(b_vec(g, i));
        if i < g {
            let mut v = a_vec(g, i + 1);
            v[2 * (i - 1)] = -1;
            out.push(v);
        } else {
            out.push(a_vec(g, g));
        }
    }
    out
}

/// The chain curves `c1..c{2g+1}` plus one boundary-parallel curve per
/// boundary. Boundaries are labelled `bd` (one) or `bd1, bd2, ...`.
pub fn chain_model(g: usize, boundaries: usize) -> CurveSystem {
    let labels: Vec<String> = match boundaries {
        0 => Vec::new(),
        1 => vec!["bd".to_string()],
        n => (1..=n).map(|i| format!("bd{i}")).collect(),
    };
    let mut sys = CurveSystem::new(&format!("chain_g{g}"), g, labels.clone());
    for (i, c) in chain_classes(g).into_iter().enumerate() {
        sys.add_curve(Curve { name: format!("c{}", i + 1), homology: c, boundary_parallel: None, nonseparating: true })
            .expect("fresh names");
    }
    for l in &labels {
        sys = sys.with_boundary(l, l).expect("fresh names");
    }
    sys.record_all()
}
