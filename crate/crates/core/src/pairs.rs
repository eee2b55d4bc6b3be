//! Equal-rank pairs `(g, k)` encoded as a `Z/2` grading of the roots.
//!
//! Noncompactness is marked on simple roots and extended additively: a root
//! `Σ c_i α_i` is noncompact iff `Σ_{i marked} c_i` is odd. The compact
//! roots then automatically form a closed subsystem.

use std::collections::BTreeSet;

use crate::rootkit::{Root, RootSystem, Weight};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    Compact,
    Noncompact,
}

impl Grading {
    fn parity(self) -> u8 {
        match self {
            Grading::Compact => 0,
            Grading::Noncompact => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompactPair {
    rs: RootSystem,
    noncompact_simple: BTreeSet<usize>,
    compact_positive: Vec<Root>,
    noncompact_positive: Vec<Root>,
}

/// Grades `rs` with the given (1-based) noncompact simple roots.
pub fn make_pair(
    rs: RootSystem,
    noncompact_simple: impl IntoIterator<Item = usize>,
) -> Result<CompactPair> {
    CompactPair::new(rs, noncompact_simple)
}

impl CompactPair {
    pub fn new(rs: RootSystem, noncompact_simple: impl IntoIterator<Item = usize>) -> Result<Self> {
        let marks: BTreeSet<usize> = noncompact_simple.into_iter().collect();
        if let Some(&bad) = marks.iter().find(|&&i| i == 0 || i > rs.rank()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                rank: rs.rank(),
            });
        }
        let (noncompact_positive, compact_positive) = rs
            .positive_roots()
            .iter()
            .cloned()
            .partition(|b| grade_of(&marks, b) == Grading::Noncompact);
        let pair = Self {
            rs,
            noncompact_simple: marks,
            compact_positive,
            noncompact_positive,
        };
        pair.verify()?;
        Ok(pair)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn noncompact_simple(&self) -> &BTreeSet<usize> {
        &self.noncompact_simple
    }

    pub fn grade(&self, root: &Root) -> Grading {
        grade_of(&self.noncompact_simple, root)
    }

    /// `Φc⁺`, in the height order of the ambient positive roots.
    pub fn compact_positive_roots(&self) -> &[Root] {
        &self.compact_positive
    }

    /// `Φn⁺ = Φ⁺ \ Φc⁺`.
    pub fn noncompact_positive_roots(&self) -> &[Root] {
        &self.noncompact_positive
    }

    pub fn rho(&self) -> Weight {
        self.rs.rho()
    }

    pub fn rho_c(&self) -> Weight {
        self.rs.half_sum(&self.compact_positive)
    }

    pub fn rho_n(&self) -> Weight {
        self.rs.half_sum(&self.noncompact_positive)
    }

    /// `dim G/K = |Φn| = 2 |Φn⁺|`.
    pub fn dim_gk(&self) -> usize {
        2 * self.noncompact_positive.len()
    }

    /// Same grading on the root system with its form scaled by `factor`.
    pub fn with_scaled_form(&self, factor: &crate::Rational) -> CompactPair {
        CompactPair {
            rs: self.rs.with_scaled_form(factor),
            ..self.clone()
        }
    }

    /// Exhaustive check of the grading invariants.
    fn verify(&self) -> Result<()> {
        let roots = self.rs.roots();
        for b in roots {
            for c in roots {
                let sum = b + c;
                if !self.rs.contains(&sum) {
                    continue;
                }
                let expected = (self.grade(b).parity() + self.grade(c).parity()) % 2;
                if self.grade(&sum).parity() != expected {
                    return Err(Error::InvalidGrading(format!(
                        "grade of {b} + {c} is not additive"
                    )));
                }
            }
        }
        for b in roots {
            if self.grade(b) != self.grade(&-b) {
                return Err(Error::InvalidGrading(format!(
                    "{b} and its negative differ"
                )));
            }
        }
        if &self.rho_c() + &self.rho_n() != self.rho() {
            return Err(Error::InvalidGrading("rho_c + rho_n != rho".into()));
        }
        Ok(())
    }
}

fn grade_of(marks: &BTreeSet<usize>, root: &Root) -> Grading {
    let s: i64 = marks.iter().map(|&i| root.coords()[i - 1]).sum();
    if s.rem_euclid(2) == 1 {
        Grading::Noncompact
    } else {
        Grading::Compact
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac;
    use crate::rootkit::CartanMatrix;

    fn pair(m: CartanMatrix, marks: &[usize]) -> CompactPair {
        make_pair(RootSystem::new(m).unwrap(), marks.iter().copied()).unwrap()
    }

    #[test]
    fn sl2r() {
        let p = pair(CartanMatrix::a(1), &[1]);
        assert!(p.compact_positive_roots().is_empty());
        assert_eq!(p.noncompact_positive_roots(), &[Root::new(vec![1])]);
        assert_eq!(p.dim_gk(), 2);
        assert_eq!(p.rho_c(), Weight::zero(1));
        // ρ_n = α/2 = ω
        assert_eq!(p.rho_n(), Weight::from_ints(&[1]));
    }

    #[test]
    fn su21() {
        let p = pair(CartanMatrix::a(2), &[2]);
        assert_eq!(p.compact_positive_roots(), &[Root::new(vec![1, 0])]);
        assert_eq!(
            p.noncompact_positive_roots(),
            &[Root::new(vec![0, 1]), Root::new(vec![1, 1])]
        );
        assert_eq!(p.dim_gk(), 4);
        // ρ_c = α₁/2 = (1, -1/2); ρ_n = α₁/2 + α₂ = (0, 3/2)
        assert_eq!(p.rho_c(), Weight::new(vec![frac(1, 1), frac(-1, 2)]));
        assert_eq!(p.rho_n(), Weight::new(vec![frac(0, 1), frac(3, 2)]));
        let rs = p.root_system();
        let expected_rho_n = rs.half_sum(&[Root::new(vec![1, 0]), Root::new(vec![0, 2])]);
        assert_eq!(p.rho_n(), expected_rho_n);
    }

    #[test]
    fn all_compact() {
        let p = pair(CartanMatrix::a(2), &[]);
        assert_eq!(p.compact_positive_roots().len(), 3);
        assert_eq!(p.dim_gk(), 0);
        assert_eq!(p.rho_c(), p.rho());
    }

    #[test]
    fn sp4r_and_so41() {
        // C2 here has α₁ short, α₂ long.
        let sp4 = pair(CartanMatrix::c(2), &[2]);
        assert_eq!(sp4.compact_positive_roots(), &[Root::new(vec![1, 0])]);
        assert_eq!(sp4.dim_gk(), 6);
        let so41 = pair(CartanMatrix::c(2), &[1]);
        assert_eq!(
            so41.compact_positive_roots(),
            &[Root::new(vec![0, 1]), Root::new(vec![2, 1])]
        );
        assert_eq!(so41.dim_gk(), 4);
    }

    #[test]
    fn out_of_range_mark() {
        let rs = RootSystem::new(CartanMatrix::a(2)).unwrap();
        assert_eq!(
            make_pair(rs.clone(), [3]).unwrap_err(),
            Error::IndexOutOfRange { index: 3, rank: 2 }
        );
        assert!(make_pair(rs, [0]).is_err());
    }
}
