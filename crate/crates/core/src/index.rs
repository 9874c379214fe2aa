//! Index of homogeneous twisted Dirac operators on equal-rank homogeneous
//! spaces `G/K`, by the closed product over positive roots and by the
//! Bott–Borel–Weil dominance route.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::reps::weyl_dim_of;
use crate::roots::RootSystem;
use crate::weight::{Rational, Weight};

#[derive(Clone, Debug)]
pub struct IndexInput {
    pub g_roots: RootSystem,
    pub rho_g: Weight,
    pub rho_k: Weight,
    pub mu: Weight,
}

impl IndexInput {
    pub fn new(g_roots: RootSystem, rho_k: Weight, mu: Weight) -> Result<Self> {
        let n = g_roots.ambient_rank();
        rho_k.check_len(n)?;
        mu.check_len(n)?;
        let rho_g = g_roots.half_sum_positive_roots();
        Ok(IndexInput {
            g_roots,
            rho_g,
            rho_k,
            mu,
        })
    }

    /// `mu + rho_K`, the weight whose position relative to the `G` chambers
    /// determines the index.
    pub fn shifted(&self) -> Weight {
        &self.mu + &self.rho_k
    }
}

/// `prod_{alpha in roots} <numer, alpha> / <denom, alpha>`.
pub fn product_over_roots(roots: &[Weight], numer: &Weight, denom: &Weight) -> Rational {
    let mut acc = Rational::one();
    for a in roots {
        let top = numer.dot(a);
        if top.is_zero() {
            return Rational::zero();
        }
        acc *= top / denom.dot(a);
    }
    acc
}

/// `prod_{alpha in R+(G)} <mu + rho_K, alpha> / <rho_G, alpha>`, exactly.
pub fn index_product(input: &IndexInput) -> Rational {
    product_over_roots(
        input.g_roots.positive_roots(),
        &input.shifted(),
        &input.rho_g,
    )
}

/// Reflect `mu + rho_K` into the dominant chamber of `G`; the index is
/// `sign(w) * dim V_{w(mu + rho_K) - rho_G}`, or zero when the shifted weight
/// is singular or the result is not dominant.
pub fn index_bbw(input: &IndexInput) -> Result<BigInt> {
    let g = &input.g_roots;
    let d = g.make_dominant(&input.shifted());
    if d.singular {
        return Ok(BigInt::zero());
    }
    let lambda = &d.dominant - &input.rho_g;
    if !g.is_dominant(&lambda) {
        return Ok(BigInt::zero());
    }
    Ok(BigInt::from(d.sign) * weyl_dim_of(g, &lambda)?)
}

/// The product formula, required to be an integer.
pub fn integral_index(input: &IndexInput) -> Result<BigInt> {
    let v = index_product(input);
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegralIndex {
            weight: input.mu.clone(),
            value: v.to_string(),
        })
    }
}
