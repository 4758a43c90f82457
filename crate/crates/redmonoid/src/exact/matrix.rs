//! Dense exact matrices over Q or F_p, with fraction-free (Bareiss)
//! elimination for rank and determinant. Naive elimination over Q explodes
//! denominators on the wide evaluation matrices of the coordinate-ring rank
//! oracle; Bareiss keeps every intermediate an integer minor of the input.

use num::{BigInt, BigRational, Integer, One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::scalar::{rational_from_strings, rational_is_normalized, Field, Scalar};

/// Row-major dense matrix; all entries share one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: Field, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch(field, e.field()));
            }
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Scalar>(
        rows: usize,
        cols: usize,
        field: Field,
        mut f: F,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.field(), field, "entry field mismatch at ({i},{j})");
                entries.push(e);
            }
        }
        Matrix { rows, cols, field, entries }
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_i64(field: Field, data: &[&[i64]]) -> Matrix {
        let rows = data.len();
        let cols = if rows == 0 { 0 } else { data[0].len() };
        Matrix::from_fn(rows, cols, field, |i, j| Scalar::from_integer(field, data[i][j]))
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        Matrix::from_fn(n, n, field, |i, j| {
            if i == j {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
    }

    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix::from_fn(rows, cols, field, |_, _| Scalar::zero(field))
    }

    pub fn diagonal(field: Field, diag: &[Scalar]) -> Matrix {
        let n = diag.len();
        Matrix::from_fn(n, n, field, |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                Scalar::zero(field)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn check_same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let field = self.field;
        Ok(Matrix::from_fn(self.rows, other.cols, field, |i, j| {
            let mut acc = Scalar::zero(field);
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        }))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix addition shape".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).add(other.get(i, j))
        }))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix subtraction shape".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).sub(other.get(i, j))
        }))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        assert_eq!(c.field(), self.field);
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| c.mul(self.get(i, j)))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    /// Rank over the field, by fraction-free elimination (Q) or modular
    /// elimination (F_p).
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rational => {
                let int_rows = self.integerized_rows();
                bareiss_rank(int_rows)
            }
            Field::Prime(p) => {
                let rows: Vec<Vec<u64>> = (0..self.rows)
                    .map(|i| {
                        (0..self.cols)
                            .map(|j| match self.get(i, j) {
                                Scalar::Prime { value, .. } => *value,
                                _ => unreachable!(),
                            })
                            .collect()
                    })
                    .collect();
                modular_rank(rows, p)
            }
        }
    }

    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        match self.field {
            Field::Rational => {
                let mut scaling = BigInt::one();
                let mut int_rows = Vec::with_capacity(self.rows);
                for i in 0..self.rows {
                    let (row, mult) = integerize_row(&self.row(i));
                    scaling *= mult;
                    int_rows.push(row);
                }
                let d = bareiss_det(int_rows);
                Ok(Scalar::Rational(BigRational::new(d, scaling)))
            }
            Field::Prime(p) => {
                let rows: Vec<Vec<u64>> = (0..self.rows)
                    .map(|i| {
                        (0..self.cols)
                            .map(|j| match self.get(i, j) {
                                Scalar::Prime { value, .. } => *value,
                                _ => unreachable!(),
                            })
                            .collect()
                    })
                    .collect();
                Ok(Scalar::Prime { value: modular_det(rows, p), modulus: p })
            }
        }
    }

    /// Exact inverse; `None` when singular.
    pub fn invert(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let field = self.field;
        // Gauss-Jordan on [A | I]. Matrices inverted in this crate are small
        // (monoid dimension n, not oracle width), so plain field arithmetic
        // is fine here.
        let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| self.row(i)).collect();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Scalar::one(field) } else { Scalar::zero(field) })
                    .collect()
            })
            .collect();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(None);
            };
            a.swap(k, p);
            inv.swap(k, p);
            let pivot_inv = a[k][k].inv().expect("nonzero pivot");
            for j in 0..n {
                a[k][j] = a[k][j].mul(&pivot_inv);
                inv[k][j] = inv[k][j].mul(&pivot_inv);
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let factor = a[i][k].clone();
                for j in 0..n {
                    a[i][j] = a[i][j].sub(&factor.mul(&a[k][j]));
                    inv[i][j] = inv[i][j].sub(&factor.mul(&inv[k][j]));
                }
            }
        }
        let entries = inv.into_iter().flatten().collect();
        Ok(Some(Matrix { rows: n, cols: n, field, entries }))
    }

    /// Rows scaled to integers (each row multiplied by the lcm of its entry
    /// denominators); preserves rank. Rational matrices only.
    pub(crate) fn integerized_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| integerize_row(&self.row(i)).0).collect()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| match e {
                Scalar::Rational(r) => {
                    json!([r.numer().to_string(), r.denom().to_string()])
                }
                Scalar::Prime { value, .. } => json!(value),
            })
            .collect();
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "field": self.field.to_string(),
            "entries": entries,
        })
    }

    pub fn from_json(v: &Value) -> Result<Matrix> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("matrix must be a JSON object".into()))?;
        let rows = obj
            .get("rows")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("missing or invalid \"rows\"".into()))? as usize;
        let cols = obj
            .get("cols")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("missing or invalid \"cols\"".into()))? as usize;
        let field = Field::parse(
            obj.get("field")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Json("missing or invalid \"field\"".into()))?,
        )?;
        let raw = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing or invalid \"entries\"".into()))?;
        let mut entries = Vec::with_capacity(raw.len());
        for e in raw {
            let s = match field {
                Field::Rational => {
                    let pair = e
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| Error::Json("rational entry must be [num, den]".into()))?;
                    let num = pair[0]
                        .as_str()
                        .ok_or_else(|| Error::Json("numerator must be a string".into()))?;
                    let den = pair[1]
                        .as_str()
                        .ok_or_else(|| Error::Json("denominator must be a string".into()))?;
                    rational_from_strings(num, den)?
                }
                Field::Prime(p) => {
                    let v = e
                        .as_i64()
                        .ok_or_else(|| Error::Json("fp entry must be a bare integer".into()))?;
                    Scalar::from_integer(Field::Prime(p), v)
                }
            };
            entries.push(s);
        }
        let m = Matrix::new(rows, cols, field, entries)?;
        debug_assert!(m.entries.iter().all(|e| match e {
            Scalar::Rational(r) => rational_is_normalized(r),
            _ => true,
        }));
        Ok(m)
    }
}

fn integerize_row(row: &[Scalar]) -> (Vec<BigInt>, BigInt) {
    let mut lcm = BigInt::one();
    for e in row {
        let r = e.as_rational().expect("rational matrix");
        lcm = lcm.lcm(r.denom());
    }
    let out = row
        .iter()
        .map(|e| {
            let r = e.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect();
    (out, lcm)
}

/// One-step fraction-free (Bareiss) elimination with full pivoting.
/// Returns the number of pivot steps and the accumulated swap sign; after
/// elimination `m[k][k]` holds the k-th leading principal minor of the
/// pivoted matrix, so divisions by the previous pivot are exact.
fn bareiss_eliminate(m: &mut [Vec<BigInt>]) -> (usize, i8) {
    let rows = m.len();
    if rows == 0 {
        return (0, 1);
    }
    let cols = m[0].len();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    let mut k = 0;
    let steps = rows.min(cols);
    while k < steps {
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != k {
            m.swap(k, pi);
            sign = -sign;
        }
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            sign = -sign;
        }
        for i in k + 1..rows {
            for j in k + 1..cols {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
        k += 1;
    }
    (k, sign)
}

pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    bareiss_eliminate(&mut m).0
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let (rank, sign) = bareiss_eliminate(&mut m);
    if rank < n {
        return BigInt::zero();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn modular_rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| m[i][col] % p != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for j in col..cols {
            m[rank][j] = m[rank][j] % p * inv % p;
        }
        for i in 0..rows {
            if i != rank && m[i][col] % p != 0 {
                let f = m[i][col] % p;
                for j in col..cols {
                    m[i][j] = (m[i][j] + (p - f) * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn modular_det(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| m[i][col] % p != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(col, pivot);
            det = (p - det) % p;
        }
        det = det * (m[col][col] % p) % p;
        let inv = mod_pow(m[col][col], p - 2, p);
        for i in col + 1..n {
            if m[i][col] % p != 0 {
                let f = m[i][col] % p * inv % p;
                for j in col..n {
                    m[i][j] = (m[i][j] + (p - f) * m[col][j] % p) % p;
                }
            }
        }
    }
    det
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    const Q: Field = Field::Rational;

    #[test]
    fn mul_identity_and_permutation() {
        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let i3 = Matrix::identity(2, Q);
        assert_eq!(i3.mul(&a).unwrap(), a);
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(
            a.mul(&swap).unwrap(),
            Matrix::from_i64(Q, &[&[2, 1], &[4, 3]])
        );
        let z = Matrix::zero(2, 2, Q);
        assert!(a.mul(&z).unwrap().is_zero());
    }

    #[test]
    fn mul_shape_and_field_errors() {
        let a = Matrix::from_i64(Q, &[&[1, 2]]);
        let b = Matrix::from_i64(Q, &[&[1, 2]]);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch(_))));
        let c = Matrix::from_i64(Field::Prime(5), &[&[1], &[2]]);
        assert!(matches!(a.mul(&c), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn transpose_basics() {
        let a = Matrix::from_i64(Q, &[&[1, 2]]);
        assert_eq!(a.transpose(), Matrix::from_i64(Q, &[&[1], &[2]]));
        assert_eq!(a.transpose().transpose(), a);
        let i = Matrix::identity(3, Q);
        assert_eq!(i.transpose(), i);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(4, Q).rank(), 4);
        assert_eq!(Matrix::zero(3, 3, Q).rank(), 0);
        // row 2 = 2 x row 1
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            Matrix::identity(5, Q).det().unwrap(),
            Scalar::one(Q)
        );
        let d = Matrix::from_i64(Q, &[&[2, 0], &[0, 3]]);
        assert_eq!(d.det().unwrap(), Scalar::from_integer(Q, 6));
        // direct 2x2 formula: 0*0 - 1*(-1) = 1
        let j = Matrix::from_i64(Q, &[&[0, 1], &[-1, 0]]);
        assert_eq!(j.det().unwrap(), Scalar::one(Q));
        let rect = Matrix::from_i64(Q, &[&[1, 2]]);
        assert!(matches!(rect.det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn invert_examples() {
        let i = Matrix::identity(3, Q);
        assert_eq!(i.invert().unwrap().unwrap(), i);
        assert!(Matrix::zero(2, 2, Q).invert().unwrap().is_none());
        let d = Matrix::from_i64(Q, &[&[2, 0], &[0, 4]]);
        let inv = d.invert().unwrap().unwrap();
        assert_eq!(d.mul(&inv).unwrap(), Matrix::identity(2, Q));
        assert_eq!(
            inv.get(0, 0),
            &Scalar::from_fraction(1.into(), 2.into()).unwrap()
        );
    }

    fn random_matrix(rng: &mut ChaCha20Rng, n: usize) -> Matrix {
        Matrix::from_fn(n, n, Q, |_, _| Scalar::from_integer(Q, rng.gen_range(-9..=9)))
    }

    #[test]
    fn det_is_multiplicative_seeded() {
        let mut rng = ChaCha20Rng::seed_from_u64(17);
        for trial in 0..100 {
            let n = 1 + trial % 6;
            let a = random_matrix(&mut rng, n);
            let b = random_matrix(&mut rng, n);
            let lhs = a.mul(&b).unwrap().det().unwrap();
            let rhs = a.det().unwrap().mul(&b.det().unwrap());
            assert_eq!(lhs, rhs, "det(AB) != det(A)det(B) at trial {trial}");
        }
    }

    #[test]
    fn rank_of_product_bounded() {
        let mut rng = ChaCha20Rng::seed_from_u64(23);
        for _ in 0..50 {
            let n = 2 + (rng.gen_range(0..4usize));
            let a = random_matrix(&mut rng, n);
            let b = random_matrix(&mut rng, n);
            let ab = a.mul(&b).unwrap();
            assert!(ab.rank() <= a.rank().min(b.rank()));
        }
    }

    #[test]
    fn invert_iff_full_rank_iff_nonzero_det() {
        let mut rng = ChaCha20Rng::seed_from_u64(31);
        for _ in 0..60 {
            let n = 1 + rng.gen_range(0..5usize);
            // mix in singular matrices by zeroing a row sometimes
            let mut a = random_matrix(&mut rng, n);
            if rng.gen_bool(0.3) {
                let r = rng.gen_range(0..n);
                for j in 0..n {
                    a.set(r, j, Scalar::zero(Q));
                }
            }
            let full = a.rank() == n;
            assert_eq!(a.invert().unwrap().is_some(), full);
            assert_eq!(!a.det().unwrap().is_zero(), full);
        }
    }

    #[test]
    fn rank_matches_over_prime_field() {
        // generic integer matrices keep their rank mod a large prime
        let p = Field::Prime(2147483647);
        let a_q = Matrix::from_i64(Q, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let a_p = Matrix::from_i64(p, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a_q.rank(), 2);
        assert_eq!(a_p.rank(), 2);
        assert_eq!(
            Matrix::from_i64(p, &[&[1, 2], &[3, 4]]).det().unwrap(),
            Scalar::from_integer(p, -2)
        );
    }

    #[test]
    fn json_roundtrip_rational_and_prime() {
        let a = Matrix::from_fn(2, 2, Q, |i, j| {
            Scalar::from_fraction(BigInt::from(i as i64 + 1), BigInt::from(j as i64 + 2)).unwrap()
        });
        let back = Matrix::from_json(&a.to_json()).unwrap();
        assert_eq!(a, back);

        let b = Matrix::from_i64(Field::Prime(7), &[&[1, 6], &[3, 0]]);
        assert_eq!(Matrix::from_json(&b.to_json()).unwrap(), b);
    }

    #[test]
    fn json_rejects_malformed() {
        assert!(Matrix::from_json(&json!({"rows": 1})).is_err());
        assert!(Matrix::from_json(&json!({
            "rows": 1, "cols": 2, "field": "q", "entries": [["1","1"]]
        }))
        .is_err());
        assert!(Matrix::from_json(&json!({
            "rows": 1, "cols": 1, "field": "fp:6", "entries": [1]
        }))
        .is_err());
    }

    proptest! {
        // transpose is an anti-homomorphism
        #[test]
        fn transpose_antihom(seed in 0u64..500) {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let n = 1 + (seed as usize) % 4;
            let a = random_matrix(&mut rng, n);
            let b = random_matrix(&mut rng, n);
            let lhs = a.mul(&b).unwrap().transpose();
            let rhs = b.transpose().mul(&a.transpose()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
