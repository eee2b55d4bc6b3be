//! Truncated rational power series and multiplicative genera.
//!
//! A genus is given per Chern root by a characteristic series `Q(x)` with
//! `Q(0) = 1`. On `CP^n` every Chern root equals the hyperplane class `x`
//! with multiplicity `n + 1` (from `c(CP^n) = (1 + x)^{n+1}`), so
//! characteristic numbers are coefficients of `x^n` in `Q(x)^{n+1}`, possibly
//! twisted by a line bundle factor `e^{kx/2}`.
//!
//! | genus | `Q(x)` |
//! |-------|--------|
//! | Â     | `(x/2) / sinh(x/2)` |
//! | L     | `x / tanh(x)` |
//! | Todd  | `x / (1 - e^{-x})` |

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{frac, rat, Error, Rational, Result};

/// `Σ c_k x^k mod x^{order+1}` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// `e^{a x}`.
    pub fn exp_linear(a: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for k in 0..=order {
            coeffs.push(term.clone());
            term = term * a / rat(k as i64 + 1);
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let mut inv: Vec<Rational> = Vec::with_capacity(n + 1);
        inv.push(c0.recip());
        for k in 1..=n {
            let s: Rational = (1..=k).map(|j| &self.coeffs[j] * &inv[k - j]).sum();
            inv.push(-s / c0);
        }
        Ok(Self { coeffs: inv })
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InvalidComposition);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner: c_0 + inner·(c_1 + inner·(c_2 + …))
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// True when every odd coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, &self.coeffs, "x")?;
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

fn write_univariate(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let monomial = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        write_term(f, c, &monomial, first)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    monomial: &str,
    first: bool,
) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let abs = c.abs();
    match (monomial.is_empty(), abs.is_one(), abs.is_integer()) {
        (true, _, _) => write!(f, "{abs}"),
        (false, true, _) => write!(f, "{monomial}"),
        (false, false, true) => write!(f, "{abs}{monomial}"),
        (false, false, false) => write!(f, "({abs}){monomial}"),
    }
}

/// `sinh(a x) / (a x)` truncated at `order`.
fn sinhc(a: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut term = Rational::one();
    let a2 = a * a;
    for k in (0..=order).step_by(2) {
        coeffs[k] = term.clone();
        term = term * &a2 / rat(((k + 2) * (k + 3)) as i64);
    }
    TruncatedSeries { coeffs }
}

/// `(x/2) / sinh(x/2) = 1 - x²/24 + 7x⁴/5760 - …`
pub fn series_ahat_half(order: usize) -> TruncatedSeries {
    sinhc(&frac(1, 2), order)
        .inverse()
        .expect("constant term is 1")
}

/// `x / tanh(x) = 1 + x²/3 - x⁴/45 + …`
pub fn series_l(order: usize) -> TruncatedSeries {
    let cosh = TruncatedSeries::new(
        (0..=order)
            .map(|k| {
                if k % 2 == 0 {
                    factorial(k).recip()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
        order,
    );
    let inv = sinhc(&Rational::one(), order)
        .inverse()
        .expect("constant term is 1");
    &cosh * &inv
}

/// `x / (1 - e^{-x}) = 1 + x/2 + x²/12 - x⁴/720 + …`
pub fn series_todd(order: usize) -> TruncatedSeries {
    // (1 - e^{-x}) / x = Σ (-1)^k x^k / (k+1)!
    let q = TruncatedSeries::new(
        (0..=order)
            .map(|k| {
                let v = factorial(k + 1).recip();
                if k % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect(),
        order,
    );
    q.inverse().expect("constant term is 1")
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * rat(k as i64))
}

/// Polynomials in `x_1, …, x_r` modulo `x_i^{n_i + 1}`: the rational
/// cohomology ring of `CP^{n_1} × … × CP^{n_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentPoly {
    caps: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl NilpotentPoly {
    pub fn zero(caps: Vec<usize>) -> Self {
        Self {
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(caps: Vec<usize>) -> Self {
        let mut p = Self::zero(caps);
        p.terms.insert(vec![0; p.caps.len()], Rational::one());
        p
    }

    /// The generator `x_var` (0-based).
    pub fn variable(caps: Vec<usize>, var: usize) -> Self {
        Self::from_series(caps, var, &TruncatedSeries::new(vec![rat(0), rat(1)], 1))
    }

    /// Embeds a univariate series in `x_var`, dropping powers past the cap.
    pub fn from_series(caps: Vec<usize>, var: usize, s: &TruncatedSeries) -> Self {
        assert!(var < caps.len(), "variable index out of range");
        let mut p = Self::zero(caps);
        for k in 0..=p.caps[var].min(s.order()) {
            let c = s.coeff(k);
            if !c.is_zero() {
                let mut m = vec![0; p.caps.len()];
                m[var] = k;
                p.terms.insert(m, c);
            }
        }
        p
    }

    /// Highest allowed exponent `n_i` of each variable.
    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    pub fn coefficient(&self, monomial: &[usize]) -> Rational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the top class `x_1^{n_1} ⋯ x_r^{n_r}`.
    pub fn top_coefficient(&self) -> Rational {
        self.coefficient(&self.caps)
    }

    /// Nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dense coefficients `[c_0, …, c_n]` of a one-variable element.
    pub fn univariate_coeffs(&self) -> Vec<Rational> {
        assert_eq!(self.caps.len(), 1, "not a one-variable ring");
        (0..=self.caps[0]).map(|k| self.coefficient(&[k])).collect()
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.caps.clone()), |acc, _| &acc * self)
    }

    fn assert_same_ring(&self, other: &Self) {
        assert_eq!(self.caps, other.caps, "operands live in different rings");
    }
}

impl Add for &NilpotentPoly {
    type Output = NilpotentPoly;

    fn add(self, rhs: &NilpotentPoly) -> NilpotentPoly {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            let e = out.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }
}

impl Mul for &NilpotentPoly {
    type Output = NilpotentPoly;

    fn mul(self, rhs: &NilpotentPoly) -> NilpotentPoly {
        self.assert_same_ring(rhs);
        let mut out = NilpotentPoly::zero(self.caps.clone());
        for (ma, ca) in &self.terms {
            'inner: for (mb, cb) in &rhs.terms {
                let mut m = Vec::with_capacity(ma.len());
                for ((a, b), cap) in ma.iter().zip(mb).zip(&self.caps) {
                    if a + b > *cap {
                        continue 'inner;
                    }
                    m.push(a + b);
                }
                *out.terms.entry(m).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for NilpotentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.caps.len() == 1 {
            return write_univariate(f, &self.univariate_coeffs(), "x");
        }
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // graded order: lower total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.iter().sum::<usize>(), std::cmp::Reverse((*m).clone())));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let monomial = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{e}", v + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            write_term(f, c, &monomial, i == 0)?;
        }
        Ok(())
    }
}

/// The built-in genera.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Genus {
    /// Â with per-root factor `(x/2)/sinh(x/2)`.
    AhatHalf,
    L,
    Todd,
    /// Â carrying an extra line-bundle twist `e^{k x/2}` on every factor.
    /// The `e^{kx}` convention corresponds to `ExpTwist(2k)`.
    ExpTwist(Rational),
}

impl Genus {
    /// Per-root characteristic series `Q(x)` truncated at `order`.
    pub fn characteristic_series(&self, order: usize) -> TruncatedSeries {
        match self {
            Genus::AhatHalf | Genus::ExpTwist(_) => series_ahat_half(order),
            Genus::L => series_l(order),
            Genus::Todd => series_todd(order),
        }
    }

    /// Twist built into the genus itself (zero except for `ExpTwist`).
    pub fn builtin_twist(&self) -> Rational {
        match self {
            Genus::ExpTwist(k) => k.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Genus::AhatHalf => "ahat",
            Genus::L => "l",
            Genus::Todd => "todd",
            Genus::ExpTwist(_) => "exptwist",
        }
    }
}

fn check_dim(n: i64) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidDimension(n));
    }
    Ok(n as usize)
}

/// `Q(x)^{n+1} · e^{k x/2}` truncated at `x^n`.
fn cpn_integrand(q: &TruncatedSeries, n: usize, twist: &Rational) -> TruncatedSeries {
    let power = q.truncate(n).pow(n as u32 + 1);
    if twist.is_zero() {
        power
    } else {
        &power * &TruncatedSeries::exp_linear(&(twist / rat(2)), n)
    }
}

/// `∫_{CP^n} e^{kx/2} Â(CP^n)`: the index of the `Spin^c` Dirac operator
/// on `CP^n` twisted by a line bundle of Chern class `k x`.
pub fn twisted_ahat_cpn(n: i64, k: i64) -> Result<Rational> {
    twisted_ahat_cpn_rational(n, &rat(k))
}

/// [`twisted_ahat_cpn`] for a rational twist parameter.
pub fn twisted_ahat_cpn_rational(n: i64, k: &Rational) -> Result<Rational> {
    let n = check_dim(n)?;
    Ok(cpn_integrand(&series_ahat_half(n), n, k).coeff(n))
}

/// Signature of `CP^n`, as its L-genus.
pub fn signature_cpn(n: i64) -> Result<BigInt> {
    let n = check_dim(n)?;
    let v = cpn_integrand(&series_l(n), n, &Rational::zero()).coeff(n);
    if !v.is_integer() {
        return Err(Error::NonIntegral(v.to_string()));
    }
    Ok(v.to_integer())
}

/// `p(CP^n) = (1 + x²)^{n+1}` in `Q[x]/(x^{n+1})`.
pub fn pontryagin_class_cpn(n: i64) -> Result<NilpotentPoly> {
    let n = check_dim(n)?;
    let one_plus_x2 = TruncatedSeries::new(vec![rat(1), rat(0), rat(1)], n);
    Ok(NilpotentPoly::from_series(
        vec![n],
        0,
        &one_plus_x2.pow(n as u32 + 1),
    ))
}

/// `L(CP^n) = (x / tanh x)^{n+1}` in `Q[x]/(x^{n+1})`.
pub fn l_class_cpn(n: i64) -> Result<NilpotentPoly> {
    let n = check_dim(n)?;
    let q = NilpotentPoly::from_series(vec![n], 0, &series_l(n));
    Ok(q.pow(n as u32 + 1))
}

/// Genus of `CP^{n_1} × … × CP^{n_r}` with twist `e^{k_i x_i/2}` on factor `i`:
/// the top coefficient of `∏ Q(x_i)^{n_i+1} e^{k_i x_i/2}`.
pub fn product_genus(genus: &Genus, dims: &[i64], twists: &[Rational]) -> Result<Rational> {
    if dims.len() != twists.len() {
        return Err(Error::LengthMismatch {
            dims: dims.len(),
            twists: twists.len(),
        });
    }
    if dims.is_empty() {
        return Err(Error::InvalidDimension(0));
    }
    let caps = dims
        .iter()
        .map(|&n| check_dim(n))
        .collect::<Result<Vec<_>>>()?;
    let max = *caps.iter().max().expect("nonempty");
    let q = genus.characteristic_series(max);
    let extra = genus.builtin_twist();
    let mut total = NilpotentPoly::one(caps.clone());
    for (var, (&n, k)) in caps.iter().zip(twists).enumerate() {
        let factor = cpn_integrand(&q, n, &(k + &extra));
        total = &total * &NilpotentPoly::from_series(caps.clone(), var, &factor);
    }
    Ok(total.top_coefficient())
}
