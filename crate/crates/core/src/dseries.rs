//! Discrete series traces for an equal-rank pair.
//!
//! For a `K`-highest weight `μ` with Harish-Chandra parameter `μ + ρ_c`:
//!
//! ```text
//! dim V_μ           = ∏_{Φc⁺} (μ+ρ_c, α) / (ρ_c, α)
//! d_H               = ∏_{Φ⁺}  (μ+ρ_c, α) / (ρ, α)
//! τ_G(DInd[V_μ])    = (-1)^{d/2} d_H
//! factor            = (-1)^{d/2} ∏_{Φn⁺}(μ+ρ_c, α) ∏_{Φc⁺}(ρ_c, α) / ∏_{Φ⁺}(ρ, α)
//! ```
//!
//! and `τ_G(DInd[V_μ]) = factor · dim V_μ`. Formal degrees use the Haar
//! normalisation `vol K = vol M_1/K_1 = 1`; only ratios of root pairings
//! enter, so no volumes are computed.
//!
//! `formal_degree` is the signed product. It is nonnegative whenever
//! `μ + ρ_c` lies in the closed positive chamber of `G`.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::pairs::CompactPair;
use crate::rootkit::{Root, Weight};
use crate::{Error, Rational, Result};

/// Everything computed for one `(pair, μ)`; the machine witness that the
/// trace diagram commutes at that point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub mu: Weight,
    /// `τ_K([V_μ]) = dim V_μ`.
    pub dim_v: BigUint,
    pub regular: bool,
    pub formal_degree: Rational,
    pub tau_g: Rational,
    pub factor: Rational,
    /// `(-1)^{d/2}` with `d = dim G/K`.
    pub sign: i8,
}

/// `(-1)^{d/2}`.
pub fn sign(p: &CompactPair) -> i8 {
    if (p.dim_gk() / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn signed(p: &CompactPair, q: Rational) -> Rational {
    if sign(p) < 0 {
        -q
    } else {
        q
    }
}

fn product_of_pairings(p: &CompactPair, w: &Weight, roots: &[Root]) -> Result<Rational> {
    let rs = p.root_system();
    let mut acc = Rational::one();
    for beta in roots {
        acc *= rs.pair_with_root(w, beta)?;
    }
    Ok(acc)
}

/// `(μ, α) ≥ 0` for every `α ∈ Φc⁺`.
pub fn is_compact_dominant(p: &CompactPair, mu: &Weight) -> Result<bool> {
    let rs = p.root_system();
    for beta in p.compact_positive_roots() {
        if rs.pair_with_root(mu, beta)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `<μ, α^∨> ∈ Z` for every compact root.
pub fn is_compact_integral(p: &CompactPair, mu: &Weight) -> Result<bool> {
    let rs = p.root_system();
    for beta in p.compact_positive_roots() {
        if !rs.coroot_pairing(mu, beta)?.is_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_dominant(p: &CompactPair, mu: &Weight) -> Result<()> {
    if is_compact_dominant(p, mu)? {
        Ok(())
    } else {
        Err(Error::NotDominant(mu.to_string()))
    }
}

/// Weyl dimension of the `K`-representation with highest weight `mu`.
pub fn weyl_dim(p: &CompactPair, mu: &Weight) -> Result<BigUint> {
    require_dominant(p, mu)?;
    if !is_compact_integral(p, mu)? {
        return Err(Error::NotIntegral(mu.to_string()));
    }
    let rho_c = p.rho_c();
    let shifted = mu + &rho_c;
    let compact = p.compact_positive_roots();
    let dim = product_of_pairings(p, &shifted, compact)? / product_of_pairings(p, &rho_c, compact)?;
    if !dim.is_integer() || !dim.is_positive() {
        return Err(Error::NonIntegerDimension(dim.to_string()));
    }
    Ok(dim
        .to_integer()
        .to_biguint()
        .expect("positive integer converts"))
}

/// `μ + ρ_c` pairs nonzero with every positive root.
pub fn is_regular(p: &CompactPair, mu: &Weight) -> Result<bool> {
    let rs = p.root_system();
    let shifted = mu + &p.rho_c();
    for beta in rs.positive_roots() {
        if rs.pair_with_root(&shifted, beta)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `d_H = ∏_{Φ⁺} (μ+ρ_c, α)/(ρ, α)`; zero exactly at singular parameters.
pub fn formal_degree(p: &CompactPair, mu: &Weight) -> Result<Rational> {
    require_dominant(p, mu)?;
    let positive = p.root_system().positive_roots();
    let shifted = mu + &p.rho_c();
    Ok(product_of_pairings(p, &shifted, positive)? / product_of_pairings(p, &p.rho(), positive)?)
}

/// The signed scalar with `τ_G(DInd[V_μ]) = factor · τ_K([V_μ])`.
pub fn trace_factor(p: &CompactPair, mu: &Weight) -> Result<Rational> {
    require_dominant(p, mu)?;
    let shifted = mu + &p.rho_c();
    let num = product_of_pairings(p, &shifted, p.noncompact_positive_roots())?
        * product_of_pairings(p, &p.rho_c(), p.compact_positive_roots())?;
    let den = product_of_pairings(p, &p.rho(), p.root_system().positive_roots())?;
    Ok(signed(p, num / den))
}

/// `Π_K([V_μ])`: the value of `τ_G` on the Dirac induction of `V_μ`.
pub fn tau_g_of_dirac_induction(p: &CompactPair, mu: &Weight) -> Result<Rational> {
    require_dominant(p, mu)?;
    if !is_regular(p, mu)? {
        return Ok(Rational::zero());
    }
    Ok(signed(p, formal_degree(p, mu)?))
}

/// Computes every trace quantity at `(p, mu)` and checks
/// `τ_G = factor · dim V_μ` as an exact rational identity.
pub fn check_factorization(p: &CompactPair, mu: &Weight) -> Result<TraceReport> {
    let dim_v = weyl_dim(p, mu)?;
    let regular = is_regular(p, mu)?;
    let formal_degree = formal_degree(p, mu)?;
    let tau_g = tau_g_of_dirac_induction(p, mu)?;
    let factor = trace_factor(p, mu)?;
    let sign = sign(p);

    let dim_q = Rational::from_integer(dim_v.clone().into());
    let via_sign = if regular {
        signed(p, formal_degree.clone())
    } else {
        Rational::zero()
    };
    if tau_g != &factor * &dim_q || tau_g != via_sign || regular == formal_degree.is_zero() {
        return Err(Error::FactorizationViolation {
            tau_g: tau_g.to_string(),
            factor: factor.to_string(),
            dim_v: dim_v.to_string(),
        });
    }
    Ok(TraceReport {
        mu: mu.clone(),
        dim_v,
        regular,
        formal_degree,
        tau_g,
        factor,
        sign,
    })
}

/// `L²ind(D_M) = factor · L²ind(D_N)`, where `slice_index` is the compact
/// slice integral `∫_N e^{c_1(L_N)/2} Â(N)`.
pub fn l2_index_ratio(p: &CompactPair, mu: &Weight, slice_index: &Rational) -> Result<Rational> {
    Ok(trace_factor(p, mu)? * slice_index)
}
