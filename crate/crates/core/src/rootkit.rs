//! Finite root systems built from Cartan matrices.
//!
//! Conventions:
//!
//! - Simple roots are labelled `1..=rank`.
//! - `a_ij = <α_i^∨, α_j>`, so `s_i(α_j) = α_j - a_ij α_i`.
//! - The invariant form is `B = D·A` with `D = diag((α_i, α_i)/2)`, scaled on
//!   each irreducible component so that short roots have `(α, α) = 2`.
//! - [`Root`]s carry integer coordinates in the simple-root basis;
//!   [`Weight`]s carry rational coordinates in the fundamental-weight basis.
//!
//! Central torus directions of a reductive group have no roots and are not
//! represented; every pairing against a root ignores them anyway.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix};
use crate::{rat, Error, Rational, Result};

/// Upper bound on the number of roots generated before giving up.
pub const ROOT_LIMIT: usize = 500;

/// A validated generalized Cartan matrix of finite type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let r = entries.len();
        if r == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidCartan(format!(
                    "row {} has length {}, expected {r}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry ({0},{0}) is {1}, expected 2",
                    i + 1,
                    row[i]
                )));
            }
        }
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let (aij, aji) = (entries[i][j], entries[j][i]);
                if aij > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({},{}) is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (aij == 0) != (aji == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({0},{1}) and ({1},{0}) must vanish together",
                        i + 1,
                        j + 1
                    )));
                }
                if !(0..=3).contains(&(aij * aji)) {
                    return Err(Error::InvalidCartan(format!(
                        "product a_{0}{1}·a_{1}{0} = {2} not in 0..=3",
                        i + 1,
                        j + 1,
                        aij * aji
                    )));
                }
            }
        }
        let m = linalg::from_ints(&entries);
        for k in 1..=r {
            let minor: Matrix = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            let det = linalg::determinant(&minor);
            if !det.is_positive() {
                return Err(Error::NotFiniteType(format!(
                    "leading principal minor of size {k} is {det}"
                )));
            }
        }
        Ok(Self { entries })
    }

    /// Type `A_n` (`n >= 1`).
    pub fn a(n: usize) -> Self {
        Self::chain(n, |_| (-1, -1))
    }

    /// Type `B_n` (`n >= 2`), last simple root short.
    pub fn b(n: usize) -> Self {
        assert!(n >= 2, "B_n needs n >= 2");
        Self::chain(n, |i| if i + 2 == n { (-1, -2) } else { (-1, -1) })
    }

    /// Type `C_n` (`n >= 2`), last simple root long.
    pub fn c(n: usize) -> Self {
        assert!(n >= 2, "C_n needs n >= 2");
        Self::chain(n, |i| if i + 2 == n { (-2, -1) } else { (-1, -1) })
    }

    /// Type `D_n` (`n >= 3`), with `α_{n-2}` as the branch node.
    pub fn d(n: usize) -> Self {
        assert!(n >= 3, "D_n needs n >= 3");
        let mut e = Self::a(n).entries;
        e[n - 2][n - 1] = 0;
        e[n - 1][n - 2] = 0;
        e[n - 3][n - 1] = -1;
        e[n - 1][n - 3] = -1;
        Self::new(e).expect("D_n is of finite type")
    }

    /// Type `G_2`, second simple root short.
    pub fn g2() -> Self {
        Self::new(vec![vec![2, -1], vec![-3, 2]]).expect("G2 is of finite type")
    }

    /// Type `F_4`, first two simple roots long.
    pub fn f4() -> Self {
        Self::new(vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ])
        .expect("F4 is of finite type")
    }

    fn chain(n: usize, link: impl Fn(usize) -> (i64, i64)) -> Self {
        assert!(n >= 1, "rank must be positive");
        let mut e = vec![vec![0; n]; n];
        for i in 0..n {
            e[i][i] = 2;
            if i + 1 < n {
                let (up, down) = link(i);
                e[i][i + 1] = up;
                e[i + 1][i] = down;
            }
        }
        Self::new(e).expect("chain Cartan matrix is of finite type")
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry `a_ij` with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }
}

impl Neg for &Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;

    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, s: &Rational) -> Weight {
        Weight(self.0.iter().map(|c| c * s).collect())
    }

    /// All fundamental coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// All fundamental coordinates are nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite root system together with its invariant form.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    cartan_q: Matrix,
    cartan_inv: Matrix,
    /// `(α_i, α_i) / 2` for each simple root.
    half_lengths: Vec<Rational>,
    form: Matrix,
    roots: Vec<Root>,
    positive: Vec<Root>,
    index: HashSet<Root>,
}

/// Builds the root system of `cartan` by reflection closure of the simple roots.
pub fn build_root_system(cartan: CartanMatrix) -> Result<RootSystem> {
    RootSystem::new(cartan)
}

impl RootSystem {
    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        let r = cartan.rank();
        let half_lengths = symmetrizer(&cartan)?;
        let cartan_q = linalg::from_ints(cartan.rows());
        let cartan_inv = linalg::inverse(&cartan_q)
            .ok_or_else(|| Error::NotFiniteType("Cartan matrix is singular".into()))?;
        let form: Matrix = (0..r)
            .map(|i| (0..r).map(|j| &half_lengths[i] * &cartan_q[i][j]).collect())
            .collect();

        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..r {
            let s = Root::unit(r, i);
            seen.insert(s.clone());
            queue.push_back(s);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..r {
                let image = reflect_root_coords(&cartan, &beta, i);
                if !image.is_positive() && !image.is_negative() {
                    return Err(Error::NotFiniteType(format!(
                        "reflection produced mixed-sign vector {image}"
                    )));
                }
                if seen.insert(image.clone()) {
                    if seen.len() > ROOT_LIMIT {
                        return Err(Error::NotFiniteType(format!(
                            "more than {ROOT_LIMIT} roots generated"
                        )));
                    }
                    queue.push_back(image);
                }
            }
        }

        let mut positive: Vec<Root> = seen.iter().filter(|b| b.is_positive()).cloned().collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|b| -b));

        Ok(Self {
            cartan,
            cartan_q,
            cartan_inv,
            half_lengths,
            form,
            roots,
            positive,
            index: seen,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Positive roots (by height) followed by their negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Positive roots ordered by height; the first `rank` are the simple roots.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// The symmetric matrix `B_ij = (α_i, α_j)`.
    pub fn form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.index.contains(root)
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        Ok(Root::unit(self.rank(), i - 1))
    }

    /// Returns `ω_i`.
    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let mut w = Weight::zero(self.rank());
        w.0[i - 1] = Rational::one();
        Ok(w)
    }

    /// A root rewritten in fundamental-weight coordinates (`A·c`).
    pub fn root_weight(&self, root: &Root) -> Weight {
        let c: Vec<Rational> = root.coords().iter().map(|&v| rat(v)).collect();
        Weight(linalg::mat_vec(&self.cartan_q, &c))
    }

    /// Coordinates of `w` in the simple-root basis (`A⁻¹·w`), exact.
    pub fn root_basis_coords(&self, w: &Weight) -> Result<Vec<Rational>> {
        self.check_rank(w)?;
        Ok(linalg::mat_vec(&self.cartan_inv, w.coords()))
    }

    /// `B(a, b)` computed through root-basis coordinates.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        let ca = self.root_basis_coords(a)?;
        let cb = self.root_basis_coords(b)?;
        let bcb = linalg::mat_vec(&self.form, &cb);
        Ok(ca.iter().zip(&bcb).map(|(x, y)| x * y).sum())
    }

    /// `(w, β)` for a root `β`, using `(ω_i, α_j) = δ_ij (α_j, α_j)/2`.
    pub fn pair_with_root(&self, w: &Weight, root: &Root) -> Result<Rational> {
        self.check_rank(w)?;
        Ok(root
            .coords()
            .iter()
            .zip(w.coords())
            .zip(&self.half_lengths)
            .filter(|((&c, _), _)| c != 0)
            .map(|((&c, wi), d)| rat(c) * wi * d)
            .sum())
    }

    pub fn root_inner_product(&self, a: &Root, b: &Root) -> Rational {
        let mut acc = Rational::zero();
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coords().iter().enumerate() {
                if bj != 0 {
                    acc += rat(ai * bj) * &self.form[i][j];
                }
            }
        }
        acc
    }

    /// `<w, β^∨> = 2 (w, β) / (β, β)`.
    pub fn coroot_pairing(&self, w: &Weight, root: &Root) -> Result<Rational> {
        let num = self.pair_with_root(w, root)? * rat(2);
        Ok(num / self.root_inner_product(root, root))
    }

    /// `ρ`, which is `(1, …, 1)` in fundamental-weight coordinates.
    pub fn rho(&self) -> Weight {
        Weight(vec![Rational::one(); self.rank()])
    }

    /// Half the sum of `roots`, in fundamental-weight coordinates.
    pub fn half_sum(&self, roots: &[Root]) -> Weight {
        let r = self.rank();
        let mut total = vec![0i64; r];
        for b in roots {
            for (t, c) in total.iter_mut().zip(b.coords()) {
                *t += c;
            }
        }
        self.root_weight(&Root(total)).scaled(&crate::frac(1, 2))
    }

    /// Simple reflection `s_i(w) = w - <w, α_i^∨> α_i`.
    pub fn reflect(&self, w: &Weight, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        self.check_rank(w)?;
        let k = &w.0[i - 1];
        Ok(Weight(
            w.0.iter()
                .enumerate()
                .map(|(j, c)| c - k * &self.cartan_q[j][i - 1])
                .collect(),
        ))
    }

    pub fn reflect_root(&self, root: &Root, i: usize) -> Result<Root> {
        self.check_index(i)?;
        Ok(reflect_root_coords(&self.cartan, root, i - 1))
    }

    /// Order of the Weyl group, as the size of the (free) orbit of `ρ`.
    pub fn weyl_order(&self, cap: usize) -> Result<usize> {
        let start = self.rho();
        let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank() {
                let image = self.reflect(&w, i)?;
                if seen.insert(image.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    queue.push_back(image);
                }
            }
        }
        Ok(seen.len())
    }

    /// The same root system with its invariant form multiplied by `factor > 0`.
    pub fn with_scaled_form(&self, factor: &Rational) -> RootSystem {
        assert!(factor.is_positive(), "form scale must be positive");
        let mut out = self.clone();
        for d in &mut out.half_lengths {
            *d *= factor;
        }
        for row in &mut out.form {
            for v in row.iter_mut() {
                *v *= factor;
            }
        }
        out
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }
}

fn reflect_root_coords(cartan: &CartanMatrix, root: &Root, i: usize) -> Root {
    let k: i64 = root
        .coords()
        .iter()
        .enumerate()
        .map(|(j, c)| cartan.entry(i, j) * c)
        .sum();
    let mut out = root.clone();
    out.0[i] -= k;
    out
}

/// Diagonal `d` with `d_i a_ij = d_j a_ji`, minimum 1 on each component.
fn symmetrizer(cartan: &CartanMatrix) -> Result<Vec<Rational>> {
    let r = cartan.rank();
    let mut d: Vec<Option<Rational>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("visited");
            for j in 0..r {
                let (aij, aji) = (cartan.entry(i, j), cartan.entry(j, i));
                if i == j || aij == 0 {
                    continue;
                }
                let dj = &di * rat(aij) / rat(aji);
                match &d[j] {
                    Some(existing) if *existing != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        let min = component
            .iter()
            .map(|&i| d[i].clone().expect("visited"))
            .min()
            .expect("component is nonempty");
        for &i in &component {
            let v = d[i].take().expect("visited");
            d[i] = Some(v / &min);
        }
    }
    Ok(d.into_iter()
        .map(|v| v.expect("every node visited"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac;

    fn rs(m: CartanMatrix) -> RootSystem {
        RootSystem::new(m).unwrap()
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -1], vec![-4, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![3]]),
            Err(Error::InvalidCartan(_))
        ));
        // affine A_1^(1) already fails the product bound
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        // affine A_2^(1): determinant zero
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]),
            Err(Error::NotFiniteType(_))
        ));
    }

    #[test]
    fn rank_one() {
        let a1 = rs(CartanMatrix::a(1));
        assert_eq!(a1.roots(), &[Root::new(vec![1]), Root::new(vec![-1])]);
        assert_eq!(a1.form()[0][0], rat(2));
        let rho = a1.rho();
        assert_eq!(a1.inner_product(&rho, &rho).unwrap(), frac(1, 2));
    }

    #[test]
    fn a2_positive_roots_and_pairings() {
        let a2 = rs(CartanMatrix::a(2));
        assert_eq!(
            a2.positive_roots(),
            &[
                Root::new(vec![1, 0]),
                Root::new(vec![0, 1]),
                Root::new(vec![1, 1])
            ]
        );
        let a1 = a2.root_weight(&Root::new(vec![1, 0]));
        assert_eq!(a2.inner_product(&a2.rho(), &a1).unwrap(), rat(1));
        let zero = Weight::zero(2);
        assert_eq!(a2.inner_product(&zero, &a2.rho()).unwrap(), rat(0));
    }

    #[test]
    fn g2_form_normalization() {
        let g2 = rs(CartanMatrix::g2());
        assert_eq!(g2.roots().len(), 12);
        let lengths: HashSet<Rational> = g2
            .positive_roots()
            .iter()
            .map(|b| g2.root_inner_product(b, b))
            .collect();
        assert_eq!(lengths, HashSet::from([rat(2), rat(6)]));
    }

    #[test]
    fn reflections() {
        let a1 = rs(CartanMatrix::a(1));
        let w = a1.fundamental_weight(1).unwrap();
        assert_eq!(a1.reflect(&w, 1).unwrap(), -&w);

        let a2 = rs(CartanMatrix::a(2));
        let alpha1 = a2.root_weight(&a2.simple_root(1).unwrap());
        assert_eq!(a2.reflect(&a2.rho(), 1).unwrap(), &a2.rho() - &alpha1);
        assert_eq!(
            a2.reflect(&a2.rho(), 3),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        );
        assert!(a2.reflect(&Weight::zero(3), 1).is_err());
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(rs(CartanMatrix::a(1)).weyl_order(100).unwrap(), 2);
        assert_eq!(rs(CartanMatrix::a(2)).weyl_order(100).unwrap(), 6);
        assert_eq!(rs(CartanMatrix::c(2)).weyl_order(100).unwrap(), 8);
        assert_eq!(rs(CartanMatrix::g2()).weyl_order(100).unwrap(), 12);
        assert_eq!(rs(CartanMatrix::a(3)).weyl_order(100).unwrap(), 24);
        assert_eq!(
            rs(CartanMatrix::a(3)).weyl_order(10),
            Err(Error::CapExceeded(10))
        );
    }

    #[test]
    fn reducible_matrix_is_accepted() {
        let m = CartanMatrix::new(vec![vec![2, 0], vec![0, 2]]).unwrap();
        let a1a1 = rs(m);
        assert_eq!(a1a1.roots().len(), 4);
        assert_eq!(a1a1.weyl_order(10).unwrap(), 4);
    }

    #[test]
    fn scaled_form_scales_pairings() {
        let b2 = rs(CartanMatrix::b(2));
        let scaled = b2.with_scaled_form(&rat(7));
        for beta in b2.positive_roots() {
            let p = b2.pair_with_root(&b2.rho(), beta).unwrap();
            let q = scaled.pair_with_root(&b2.rho(), beta).unwrap();
            assert_eq!(q, p * rat(7));
        }
    }
}
