//! The coordinate bialgebra of the n x n matrix monoid in the entry
//! variables x_ij: comultiplication dual to matrix multiplication, counit
//! given by evaluation at the identity, and symbolic checks of the
//! bialgebra axioms. Evaluation against the comultiplication reconstructs
//! matrix multiplication: f(AB) equals the paired evaluation of Delta(f).

mod oracle;

pub use oracle::{graded_dim, verify_hwc, GradedDimOptions, GradedDimResult, HwcReport};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar};

/// Monomial in the entry variables: exponent map on (row, col) indices,
/// zero exponents never stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<(usize, usize), u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn variable(i: usize, j: usize) -> Monomial {
        let mut exponents = BTreeMap::new();
        exponents.insert((i, j), 1);
        Monomial { exponents }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&v, &e) in &other.exponents {
            *exponents.entry(v).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    pub fn exponents(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    pub fn eval(&self, point: &Matrix) -> Scalar {
        let field = point.field();
        let mut acc = Scalar::one(field);
        for (&(i, j), &e) in &self.exponents {
            let entry = point.get(i, j);
            for _ in 0..e {
                acc = acc.mul(entry);
            }
        }
        acc
    }
}

impl std::fmt::Display for Monomial {
    /// Compact 1-based form, e.g. `x12^2*x21`; the empty monomial is `1`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(&(i, j), &e)| {
                if e == 1 {
                    format!("x{}{}", i + 1, j + 1)
                } else {
                    format!("x{}{}^{}", i + 1, j + 1, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Element of the polynomial coordinate ring: monomial -> nonzero
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SparsePoly {
    pub fn zero(field: Field) -> SparsePoly {
        SparsePoly { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, c: Scalar) -> SparsePoly {
        let mut p = SparsePoly::zero(field);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn monomial(field: Field, m: Monomial) -> SparsePoly {
        let mut p = SparsePoly::zero(field);
        p.add_term(m, Scalar::one(field));
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(c.field(), self.field);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn eval(&self, point: &Matrix) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for (m, c) in &self.terms {
            acc = acc.add(&c.mul(&m.eval(point)));
        }
        acc
    }
}

/// Element of the tensor square of the coordinate ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    field: Field,
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl TensorPoly {
    pub fn zero(field: Field) -> TensorPoly {
        TensorPoly { field, terms: BTreeMap::new() }
    }

    fn unit(field: Field) -> TensorPoly {
        let mut t = TensorPoly::zero(field);
        t.add_term(Monomial::one(), Monomial::one(), Scalar::one(field));
        t
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((left, right));
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    fn mul(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(self.field);
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term(l1.mul(l2), r1.mul(r2), c1.mul(c2));
            }
        }
        out
    }
}

/// Delta(x_ij) = sum_k x_ik (x) x_kj.
fn comultiply_variable(n: usize, field: Field, i: usize, j: usize) -> TensorPoly {
    let mut t = TensorPoly::zero(field);
    for k in 0..n {
        t.add_term(Monomial::variable(i, k), Monomial::variable(k, j), Scalar::one(field));
    }
    t
}

/// Comultiplication extended to polynomials as an algebra homomorphism.
pub fn comultiply(n: usize, p: &SparsePoly) -> TensorPoly {
    let field = p.field;
    let mut out = TensorPoly::zero(field);
    for (m, c) in p.terms() {
        let mut factor = TensorPoly::unit(field);
        for ((i, j), e) in m.exponents() {
            let dv = comultiply_variable(n, field, i, j);
            for _ in 0..e {
                factor = factor.mul(&dv);
            }
        }
        for ((l, r), cf) in factor.terms.into_iter() {
            out.add_term(l, r, c.mul(&cf));
        }
    }
    out
}

/// Counit: evaluation at the identity matrix.
pub fn counit(n: usize, p: &SparsePoly) -> Scalar {
    p.eval(&Matrix::identity(n, p.field))
}

fn counit_of_monomial(m: &Monomial, field: Field) -> Scalar {
    if m.exponents().all(|((i, j), _)| i == j) {
        Scalar::one(field)
    } else {
        Scalar::zero(field)
    }
}

/// All monomials of one degree in the n x n entry variables, in a fixed
/// deterministic order (descending lex on exponent vectors).
pub fn monomials_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
    let vars: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        vars: &[(usize, usize)],
        idx: usize,
        remaining: u32,
        current: &mut Vec<((usize, usize), u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if idx == vars.len() {
            if remaining == 0 {
                let mut m = Monomial::one();
                for &(v, e) in current.iter() {
                    if e > 0 {
                        m.exponents.insert(v, e);
                    }
                }
                out.push(m);
            }
            return;
        }
        for e in (0..=remaining).rev() {
            current.push((vars[idx], e));
            rec(vars, idx + 1, remaining - e, current, out);
            current.pop();
        }
    }
    rec(&vars, 0, degree, &mut Vec::new(), &mut out);
    out
}

type TripleTensor = BTreeMap<(Monomial, Monomial, Monomial), Scalar>;

fn add_triple(map: &mut TripleTensor, key: (Monomial, Monomial, Monomial), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().add(&c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Coassociativity and both counit laws, verified symbolically on every
/// monomial up to `max_degree`. The ranges are capped (n <= 4, degree <= 3)
/// because the symbolic expansions grow quickly beyond them.
pub fn check_bialgebra_axioms(n: usize, max_degree: u32) -> Result<bool> {
    if n == 0 || n > 4 {
        return Err(Error::OutOfRange(format!(
            "bialgebra check supports 1 <= n <= 4, got {n}"
        )));
    }
    if max_degree > 3 {
        return Err(Error::OutOfRange(format!(
            "bialgebra check supports degree <= 3, got {max_degree}"
        )));
    }
    let field = Field::Rational;
    for d in 0..=max_degree {
        for m in monomials_of_degree(n, d) {
            let p = SparsePoly::monomial(field, m.clone());
            let delta = comultiply(n, &p);

            // (id (x) Delta) Delta versus (Delta (x) id) Delta
            let mut lhs: TripleTensor = BTreeMap::new();
            let mut rhs: TripleTensor = BTreeMap::new();
            for ((l, r), c) in delta.terms() {
                let inner = comultiply(n, &SparsePoly::monomial(field, r.clone()));
                for ((a, b), c2) in inner.terms() {
                    add_triple(&mut lhs, (l.clone(), a.clone(), b.clone()), c.mul(c2));
                }
                let inner = comultiply(n, &SparsePoly::monomial(field, l.clone()));
                for ((a, b), c2) in inner.terms() {
                    add_triple(&mut rhs, (a.clone(), b.clone(), r.clone()), c.mul(c2));
                }
            }
            if lhs != rhs {
                return Ok(false);
            }

            // (eps (x) id) Delta = id = (id (x) eps) Delta
            let mut left_law = SparsePoly::zero(field);
            let mut right_law = SparsePoly::zero(field);
            for ((l, r), c) in delta.terms() {
                left_law.add_term(r.clone(), c.mul(&counit_of_monomial(l, field)));
                right_law.add_term(l.clone(), c.mul(&counit_of_monomial(r, field)));
            }
            if left_law != p || right_law != p {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// f(AB) = sum_i f_i(A) f'_i(B): the evaluation pairing of Delta(f) against
/// a pair of points reproduces evaluation at the product.
pub fn evaluation_compatible(n: usize, p: &SparsePoly, a: &Matrix, b: &Matrix) -> Result<bool> {
    let product = a.mul(b)?;
    let direct = p.eval(&product);
    let delta = comultiply(n, p);
    let mut paired = Scalar::zero(p.field);
    for ((l, r), c) in delta.terms() {
        paired = paired.add(&c.mul(&l.eval(a)).mul(&r.eval(b)));
    }
    Ok(direct == paired)
}
