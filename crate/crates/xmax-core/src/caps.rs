//! Configurable resource limits.
//!
//! Groups above `order_cap` are rejected at construction. Element sets are
//! materialized only up to `element_cap`; whole-lattice computations are
//! allowed up to `lattice_cap` (hard maximum `LATTICE_HARD_MAX`, which needs
//! an explicit override to reach).

use crate::error::{CapKind, Error, Result};

/// Hard upper bound for `lattice_cap`, regardless of overrides.
pub const LATTICE_HARD_MAX: u64 = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order accepted at construction.
    pub order_cap: u128,
    /// Largest order for which the full element set is materialized.
    pub element_cap: u64,
    /// Largest permutation degree (also bounds quotient indices).
    pub degree_cap: u32,
    /// Largest order for whole-lattice enumeration.
    pub lattice_cap: u64,
    /// Largest order for exhaustive isomorphism testing.
    pub iso_cap: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order_cap: 1_000_000,
            element_cap: 100_000,
            degree_cap: 10_000,
            lattice_cap: 2_000,
            iso_cap: 2_000,
        }
    }
}

impl Caps {
    pub fn check_order(&self, order: u128) -> Result<()> {
        if order > self.order_cap {
            return Err(Error::CapExceeded {
                kind: CapKind::Order,
                needed: order,
                cap: self.order_cap,
            });
        }
        Ok(())
    }

    pub fn check_degree(&self, degree: u64) -> Result<()> {
        if degree > self.degree_cap as u64 {
            return Err(Error::CapExceeded {
                kind: CapKind::Degree,
                needed: degree as u128,
                cap: self.degree_cap as u128,
            });
        }
        Ok(())
    }

    pub fn check_elements(&self, order: u128) -> Result<()> {
        if order > self.element_cap as u128 {
            return Err(Error::CapExceeded {
                kind: CapKind::Elements,
                needed: order,
                cap: self.element_cap as u128,
            });
        }
        Ok(())
    }

    pub fn check_lattice(&self, order: u128) -> Result<()> {
        let cap = self.lattice_cap.min(LATTICE_HARD_MAX);
        if order > cap as u128 {
            return Err(Error::CapExceeded {
                kind: CapKind::Lattice,
                needed: order,
                cap: cap as u128,
            });
        }
        Ok(())
    }

    pub fn check_iso(&self, order: u128) -> Result<()> {
        if order > self.iso_cap as u128 {
            return Err(Error::CapExceeded {
                kind: CapKind::Isomorphism,
                needed: order,
                cap: self.iso_cap as u128,
            });
        }
        Ok(())
    }
}
