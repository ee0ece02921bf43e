//! Torus knots and links `T_{(k,l)}^{(r,s)}` on the Heegaard torus of the
//! lens space `-L(r,s)`, and the invariants of their fibers.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{CableError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensTorusKnot {
    pub r: i64,
    pub s: i64,
    pub k: i64,
    pub l: i64,
}

/// Homological order of a knot and how often each fiber boundary wraps
/// longitudinally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotOrder {
    pub order: i64,
    pub wrap: i64,
}

impl LensTorusKnot {
    pub fn new(r: i64, s: i64, k: i64, l: i64) -> Result<Self> {
        let knot = LensTorusKnot { r, s, k, l };
        knot.check()?;
        Ok(knot)
    }

    fn check(&self) -> Result<()> {
        if self.r < 1 {
            return Err(CableError::Domain(format!("lens parameter r = {} must be positive", self.r)));
        }
        if self.s < 0 || self.s >= self.r.max(1) || self.r.gcd(&self.s) != 1 {
            return Err(CableError::Domain(format!(
                "lens parameter s = {} must satisfy 0 <= s < r and gcd(r, s) = 1",
                self.s
            )));
        }
        if self.k == 0 && self.l == 0 {
            return Err(CableError::Domain("(k, l) = (0, 0) is not a curve".into()));
        }
        Ok(())
    }

    /// Number of link components, `gcd(k, l)`.
    pub fn components(&self) -> i64 {
        self.k.gcd(&self.l)
    }

    /// The class of one component.
    pub fn reduced(&self) -> LensTorusKnot {
        let d = self.components();
        LensTorusKnot { k: self.k / d, l: self.l / d, ..*self }
    }

    /// A component is trivial when it is `±(0,1)` or `±(r,s)`.
    pub fn is_trivial(&self) -> bool {
        let c = self.reduced();
        let same = |a: i64, b: i64| (c.k, c.l) == (a, b) || (c.k, c.l) == (-a, -b);
        same(0, 1) || same(self.r, self.s)
    }

    /// Exterior is a solid torus: `(k,l) = ±(1,n)` or `rl - ks = ±1`.
    pub fn is_rational_unknot(&self) -> bool {
        if self.components() != 1 {
            return false;
        }
        self.k.abs() == 1 || (self.r * self.l - self.k * self.s).abs() == 1
    }

    fn nontrivial(&self) -> Result<()> {
        self.check()?;
        if self.is_trivial() {
            return Err(CableError::TrivialKnot(format!("{self:?}")));
        }
        Ok(())
    }

    /// `(|k| + |ks - lr| - |k(ks - lr)|) / gcd(r, k)`.
    pub fn euler_characteristic(&self) -> Result<i64> {
        self.nontrivial()?;
        Ok(fiber_euler_raw(self.r, self.s, self.k, self.l))
    }

    /// `gcd(r, k^2) / gcd(r, k)` per component.
    pub fn boundary_count(&self) -> Result<i64> {
        self.nontrivial()?;
        let c = self.reduced();
        Ok(self.components() * self.r.gcd(&(c.k * c.k)) / self.r.gcd(&c.k))
    }

    /// Order `r / gcd(r, k)` and wrap `r / gcd(r, k^2)` of one component.
    pub fn homological_order(&self) -> Result<KnotOrder> {
        self.nontrivial()?;
        let c = self.reduced();
        Ok(KnotOrder { order: self.r / self.r.gcd(&c.k), wrap: self.r / self.r.gcd(&(c.k * c.k)) })
    }
}

/// The fiber Euler characteristic formula with no triviality check.
///
/// The division is exact for every input with `gcd(r, s) = 1`.
pub fn fiber_euler_raw(r: i64, s: i64, k: i64, l: i64) -> i64 {
    let m = k * s - l * r;
    let num = k.abs() + m.abs() - (k * m).abs();
    let g = r.gcd(&k);
    debug_assert_eq!(num % g, 0);
    num / g
}
