//! Classification of order pairs (alpha, beta) into the four regions of the
//! order plane where the law of exponents does or does not let the coupled
//! system collapse to single fractional diffusion equations.
//!
//! Every inequality uses the floating-point sum `alpha + beta`, which is
//! commutative, so swapping the orders maps A to A and C to D exactly.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FracOrderPair {
    alpha: f64,
    beta: f64,
}

impl FracOrderPair {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidOrder(format!(
                    "{name} must be finite and > 0, got {v}"
                )));
            }
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.alpha + self.beta
    }

    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Region {
    A,
    B,
    C,
    D,
    Outside,
}

impl Region {
    pub fn label(&self) -> &'static str {
        match self {
            Region::A => "A",
            Region::B => "B",
            Region::C => "C",
            Region::D => "D",
            Region::Outside => "Outside",
        }
    }
}

/// Which equation a field obeys once the other field is eliminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FieldEquation {
    /// d_t^gamma u = lambda d_zz u
    FractionalDiffusion,
    /// d_t^beta d_t^alpha u = lambda d_zz u without a collapse of orders
    Sequential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    Subdiffusive,
    Diffusive,
    Superdiffusive,
    Wave,
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionReport {
    pub region: Region,
    pub gamma: f64,
    pub density_eq: FieldEquation,
    pub velocity_eq: FieldEquation,
    pub regime: Regime,
}

pub fn regime_of(gamma: f64) -> Regime {
    if gamma < 1.0 {
        Regime::Subdiffusive
    } else if gamma == 1.0 {
        Regime::Diffusive
    } else if gamma < 2.0 {
        Regime::Superdiffusive
    } else if gamma == 2.0 {
        Regime::Wave
    } else {
        Regime::Outside
    }
}

pub fn region_of(p: &FracOrderPair) -> Region {
    let (a, b, g) = (p.alpha, p.beta, p.gamma());
    if a < 1.0 && b < 1.0 && g <= 1.0 {
        Region::A
    } else if a > 1.0 && a < 2.0 && g <= 2.0 {
        Region::D
    } else if b > 1.0 && b < 2.0 && g <= 2.0 {
        Region::C
    } else if a <= 1.0 && b <= 1.0 {
        // the unit square minus A: alpha + beta > 1
        Region::B
    } else {
        Region::Outside
    }
}

pub fn classify(p: &FracOrderPair) -> RegionReport {
    use FieldEquation::*;
    let region = region_of(p);
    let (density_eq, velocity_eq) = match region {
        Region::A => (FractionalDiffusion, FractionalDiffusion),
        Region::D => (FractionalDiffusion, Sequential),
        Region::C => (Sequential, FractionalDiffusion),
        Region::B | Region::Outside => (Sequential, Sequential),
    };
    RegionReport {
        region,
        gamma: p.gamma(),
        density_eq,
        velocity_eq,
        regime: regime_of(p.gamma()),
    }
}

/// `n` pairs evenly spaced on the open segment alpha + beta = gamma:
/// alpha_i = gamma i / (n + 1).
pub fn boundary_pairs(gamma: f64, n: usize) -> Result<Vec<FracOrderPair>> {
    if !(gamma.is_finite() && gamma > 0.0 && gamma <= 2.0) {
        return Err(Error::InvalidOrder(format!(
            "boundary gamma must lie in (0, 2], got {gamma}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidOrder("boundary_pairs needs n >= 1".into()));
    }
    (1..=n)
        .map(|i| {
            let a = gamma * i as f64 / (n + 1) as f64;
            FracOrderPair::new(a, gamma - a)
        })
        .collect()
}
