//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use lietrace::rootkit::{CartanMatrix, RootSystem, Weight};
use lietrace::{rat, BigInt, Rational};
use num_traits::{One, Signed, Zero};

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`, from
/// `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n {
        let mut s = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += Rational::from_integer(binomial(m as i64 + 1, j as i64)) * bj;
        }
        b.push(-s / rat(m as i64 + 1));
    }
    b
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |a, k| a * rat(k as i64))
}

/// `χ(CP^n, O(j)) = (j+1)(j+2)⋯(j+n)/n!` as a polynomial in rational `j`.
pub fn hilbert_polynomial_cpn(n: usize, j: &Rational) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| acc * (j + rat(i as i64))) / factorial(n)
}

/// Dimension of the irreducible module of highest weight `lambda` as the sum
/// of its weight multiplicities, via Freudenthal's recursion.
pub fn freudenthal_dimension(rs: &RootSystem, lambda: &Weight) -> Rational {
    let r = rs.rank();
    let simple: Vec<Weight> = (1..=r)
        .map(|i| rs.root_weight(&rs.simple_root(i).unwrap()))
        .collect();
    let positive = rs.positive_roots().to_vec();
    let rho = rs.rho();
    let lr = lambda + &rho;
    let top = rs.inner_product(&lr, &lr).unwrap();

    let weight_at = |depth: &[i64]| -> Weight {
        let mut w = lambda.clone();
        for (i, &n) in depth.iter().enumerate() {
            w = &w - &simple[i].scaled(&rat(n));
        }
        w
    };
    // μ is a weight of V iff its dominant conjugate μ⁺ satisfies λ - μ⁺ ∈ Q⁺.
    let admissible = |mu: &Weight| -> bool {
        let mut w = mu.clone();
        while let Some(i) = w.coords().iter().position(|c| c.is_negative()) {
            w = rs.reflect(&w, i + 1).unwrap();
        }
        let diff = rs.root_basis_coords(&(lambda - &w)).unwrap();
        diff.iter().all(|c| c.is_integer() && !c.is_negative())
    };

    let mut mult: HashMap<Vec<i64>, Rational> = HashMap::new();
    mult.insert(vec![0; r], Rational::one());
    let mut total = Rational::one();
    let mut frontier: Vec<Vec<i64>> = vec![vec![0; r]];
    loop {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for d in &frontier {
            for i in 0..r {
                let mut e = d.clone();
                e[i] += 1;
                if !next.contains(&e) {
                    next.push(e);
                }
            }
        }
        let mut found = Vec::new();
        for d in next {
            let mu = weight_at(&d);
            if !admissible(&mu) {
                continue;
            }
            let mut acc = Rational::zero();
            for beta in &positive {
                for k in 1.. {
                    let higher: Vec<i64> = d
                        .iter()
                        .zip(beta.coords())
                        .map(|(n, c)| n - k * c)
                        .collect();
                    if higher.iter().any(|&n| n < 0) {
                        break;
                    }
                    if let Some(m) = mult.get(&higher) {
                        let w = weight_at(&higher);
                        acc += m * rs.pair_with_root(&w, beta).unwrap();
                    }
                }
            }
            let mr = &mu + &rho;
            let denom = &top - rs.inner_product(&mr, &mr).unwrap();
            let m = acc * rat(2) / denom;
            if !m.is_zero() {
                total += &m;
                mult.insert(d.clone(), m);
                found.push(d);
            }
        }
        if found.is_empty() {
            break;
        }
        frontier = found;
    }
    total
}

pub fn root_system(m: CartanMatrix) -> RootSystem {
    RootSystem::new(m).unwrap()
}

/// Cartan matrices of rank at most 3 used by property tests.
pub fn small_cartans() -> Vec<CartanMatrix> {
    vec![
        CartanMatrix::a(1),
        CartanMatrix::a(2),
        CartanMatrix::b(2),
        CartanMatrix::c(2),
        CartanMatrix::g2(),
        CartanMatrix::a(3),
        CartanMatrix::b(3),
        CartanMatrix::c(3),
        CartanMatrix::new(vec![vec![2, 0], vec![0, 2]]).unwrap(),
    ]
}
