//! Exact G x G orbit witnesses: for a singular member A, units g, h with
//! g * A * h equal to the canonical idempotent of the same rank.
//!
//! For the form kinds the construction is a form-preserving version of
//! Gaussian elimination. The column space of a c = 0 member is totally
//! isotropic, so it extends to a frame of hyperbolic pairs; the frame matrix
//! is an exact isometry carrying the column space onto the span of the first
//! r basis vectors. Doing the same on the row side and fixing the remaining
//! invertible r x r block inside the Levi of the isotropic-subspace
//! stabilizer finishes the reduction. Every step is rational for the
//! symplectic kind. The orthogonal kind may need an exact isotropic vector
//! of a rational quadratic space, which a bounded search can miss; in that
//! case the search reports failure rather than return a non-unit factor.

use num::{BigRational, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar};
use crate::forms::{form_eval, FormKind};
use crate::monoid::{
    is_unit, similitude_factor, support_idempotent, MonoidKind, MonoidSpec,
};

/// Exact factorization g * a * h = e with g, h units and e a canonical
/// diagonal 0/1 idempotent.
#[derive(Clone, Debug)]
pub struct OrbitWitness {
    pub g: Matrix,
    pub h: Matrix,
    pub e: Matrix,
}

pub fn orbit_witness(spec: &MonoidSpec, a: &Matrix) -> Result<OrbitWitness> {
    match spec.kind {
        MonoidKind::Full => full_witness(spec, a),
        _ => {
            let Some(c) = similitude_factor(spec, a)? else {
                return Err(Error::NotMember(format!(
                    "{} monoid of size {}",
                    spec.kind.as_str(),
                    spec.n
                )));
            };
            if !c.is_zero() {
                return Err(Error::UnitInput);
            }
            form_witness(spec, a)
        }
    }
}

/// Classical rank normal form by simultaneous row and column elimination.
fn full_witness(spec: &MonoidSpec, a: &Matrix) -> Result<OrbitWitness> {
    spec_shape(spec, a)?;
    let n = spec.n;
    let field = spec.field;
    let mut m = a.clone();
    let mut g = Matrix::identity(n, field);
    let mut h = Matrix::identity(n, field);
    let mut rank = 0;
    for k in 0..n {
        let Some((pi, pj)) = find_pivot(&m, k) else {
            break;
        };
        if pi != k {
            swap_rows(&mut m, k, pi);
            swap_rows(&mut g, k, pi);
        }
        if pj != k {
            swap_cols(&mut m, k, pj);
            swap_cols(&mut h, k, pj);
        }
        let inv = m.get(k, k).inv().expect("nonzero pivot");
        scale_row(&mut m, k, &inv);
        scale_row(&mut g, k, &inv);
        for i in k + 1..n {
            if !m.get(i, k).is_zero() {
                let f = m.get(i, k).clone();
                row_sub(&mut m, i, k, &f);
                row_sub(&mut g, i, k, &f);
            }
        }
        for j in k + 1..n {
            if !m.get(k, j).is_zero() {
                let f = m.get(k, j).clone();
                col_sub(&mut m, j, k, &f);
                col_sub(&mut h, j, k, &f);
            }
        }
        rank += 1;
    }
    let e = support_idempotent(spec, &(0..rank).collect::<Vec<_>>());
    debug_assert_eq!(g.mul(a).unwrap().mul(&h).unwrap(), e);
    Ok(OrbitWitness { g, h, e })
}

fn spec_shape(spec: &MonoidSpec, a: &Matrix) -> Result<()> {
    if a.rows() != spec.n || a.cols() != spec.n {
        return Err(Error::DimensionMismatch(format!(
            "expected a {0}x{0} matrix, got {1}x{2}",
            spec.n,
            a.rows(),
            a.cols()
        )));
    }
    if a.field() != spec.field {
        return Err(Error::FieldMismatch(spec.field, a.field()));
    }
    Ok(())
}

fn form_witness(spec: &MonoidSpec, a: &Matrix) -> Result<OrbitWitness> {
    let n = spec.n;
    let field = spec.field;
    if field != Field::Rational {
        return Err(Error::Constraint(
            "orbit witnesses are computed over the rationals".into(),
        ));
    }
    let r = a.rank();
    if r == 0 {
        return Ok(OrbitWitness {
            g: Matrix::identity(n, field),
            h: Matrix::identity(n, field),
            e: Matrix::zero(n, n, field),
        });
    }
    let kind = match spec.kind {
        MonoidKind::Orthogonal => FormKind::Orthogonal,
        MonoidKind::Symplectic => FormKind::Symplectic,
        MonoidKind::Full => unreachable!(),
    };

    let col_basis = independent_columns(a);
    debug_assert_eq!(col_basis.len(), r);
    let b1 = isotropic_frame(kind, n, field, &col_basis)?;
    let g1 = b1.invert()?.expect("frame is invertible");

    let row_basis = independent_columns(&a.transpose());
    let b2 = isotropic_frame(kind, n, field, &row_basis)?;
    let h = b2.invert()?.expect("frame is invertible").transpose();

    let m = g1.mul(a)?.mul(&h)?;
    // m must vanish outside its leading r x r block
    for i in 0..n {
        for j in 0..n {
            if (i >= r || j >= r) && !m.get(i, j).is_zero() {
                return Err(Error::WitnessSearch(
                    "frame reduction left entries outside the leading block".into(),
                ));
            }
        }
    }
    let block = Matrix::from_fn(r, r, field, |i, j| m.get(i, j).clone());
    let block_inv = block
        .invert()?
        .ok_or_else(|| Error::WitnessSearch("leading block is singular".into()))?;
    let levi = levi_correction(n, r, field, &block, &block_inv);
    let g = levi.mul(&g1)?;

    let e = support_idempotent(spec, &(0..r).collect::<Vec<_>>());
    let product = g.mul(a)?.mul(&h)?;
    if product != e || !is_unit(spec, &g)? || !is_unit(spec, &h)? {
        return Err(Error::WitnessSearch(
            "witness verification failed".into(),
        ));
    }
    Ok(OrbitWitness { g, h, e })
}

/// diag(P, I, w P^{-T} w) lies in the isometry group for both split forms;
/// with P = N^{-1} it clears the leading block to the identity. The dual
/// block w (P^{-1})^T w is then w N^T w, the reversed transpose of N.
fn levi_correction(n: usize, r: usize, field: Field, block: &Matrix, block_inv: &Matrix) -> Matrix {
    let dual = Matrix::from_fn(r, r, field, |i, j| {
        block.get(r - 1 - j, r - 1 - i).clone()
    });
    Matrix::from_fn(n, n, field, |i, j| {
        if i < r && j < r {
            block_inv.get(i, j).clone()
        } else if i >= n - r && j >= n - r {
            dual.get(i - (n - r), j - (n - r)).clone()
        } else if i == j {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    })
}

/// A maximal independent set among the columns of `a`, as vectors.
fn independent_columns(a: &Matrix) -> Vec<Vec<Scalar>> {
    let mut ech = VecEchelon::new();
    let mut out = Vec::new();
    for j in 0..a.cols() {
        let col = a.col(j);
        if ech.insert(col.clone()) {
            out.push(col);
        }
    }
    out
}

/// Frame matrix B with B^T J B = J whose first r columns span the given
/// totally isotropic subspace. Columns i and n-1-i hold the i-th hyperbolic
/// pair; the middle columns standardize the orthogonal complement.
fn isotropic_frame(
    kind: FormKind,
    n: usize,
    field: Field,
    basis: &[Vec<Scalar>],
) -> Result<Matrix> {
    let r = basis.len();
    let mut pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::with_capacity(r);
    for c in basis {
        let mut u = c.clone();
        for (pu, pv) in &pairs {
            u = project_away(kind, n, &u, pu, pv);
        }
        if u.iter().all(Scalar::is_zero) {
            return Err(Error::WitnessSearch("dependent isotropic basis".into()));
        }
        let mut partner = None;
        for t in 0..n {
            let mut w = unit_vector(n, field, t);
            for (pu, pv) in &pairs {
                w = project_away(kind, n, &w, pu, pv);
            }
            let p = pairing(kind, n, &u, &w);
            if !p.is_zero() {
                partner = Some(scale_vec(&w, &p.inv().unwrap()));
                break;
            }
        }
        let mut v = partner.ok_or_else(|| {
            Error::WitnessSearch("degenerate complement while pairing".into())
        })?;
        if kind == FormKind::Orthogonal {
            v = make_isotropic_against(kind, n, field, &v, &u);
        }
        pairs.push((u, v));
    }

    // orthogonal complement of the chosen pairs
    let mut comp = Vec::new();
    let mut ech = VecEchelon::new();
    for t in 0..n {
        let mut w = unit_vector(n, field, t);
        for (pu, pv) in &pairs {
            w = project_away(kind, n, &w, pu, pv);
        }
        if ech.insert(w.clone()) {
            comp.push(w);
        }
    }
    debug_assert_eq!(comp.len(), n - 2 * r);
    let (mid_pairs, center) = standardize_complement(kind, n, field, comp)?;

    let mut columns: Vec<Vec<Scalar>> = vec![vec![]; n];
    for (i, (u, v)) in pairs.iter().enumerate() {
        columns[i] = u.clone();
        columns[n - 1 - i] = v.clone();
    }
    for (j, (x, y)) in mid_pairs.iter().enumerate() {
        columns[r + j] = x.clone();
        columns[(n - 1 - r) - j] = y.clone();
    }
    if let Some(z) = center {
        columns[(n - 1) / 2] = z;
    }
    let b = Matrix::from_fn(n, n, field, |i, j| columns[j][i].clone());

    // the frame must be an exact isometry
    let j = crate::forms::gram_matrix(kind, n, field)?;
    if b.transpose().mul(&j)?.mul(&b)? != j {
        return Err(Error::WitnessSearch("frame is not an isometry".into()));
    }
    Ok(b)
}

/// Hyperbolic pairs (plus a norm-one center vector for odd orthogonal
/// complements) spanning the subspace spanned by `work`.
fn standardize_complement(
    kind: FormKind,
    n: usize,
    field: Field,
    mut work: Vec<Vec<Scalar>>,
) -> Result<(Vec<(Vec<Scalar>, Vec<Scalar>)>, Option<Vec<Scalar>>)> {
    let mut mid_pairs = Vec::new();
    loop {
        work = independent_subset(work);
        if work.is_empty() {
            return Ok((mid_pairs, None));
        }
        if work.len() == 1 {
            if kind != FormKind::Orthogonal {
                return Err(Error::WitnessSearch(
                    "symplectic complement has odd dimension".into(),
                ));
            }
            let z = work.pop().unwrap();
            let q = pairing(kind, n, &z, &z);
            let s = exact_sqrt(&q).ok_or_else(|| {
                Error::WitnessSearch("center norm is not a rational square".into())
            })?;
            return Ok((mid_pairs, Some(scale_vec(&z, &s.inv().unwrap()))));
        }
        let x = match kind {
            FormKind::Symplectic => work[0].clone(),
            FormKind::Orthogonal => find_isotropic(kind, n, field, &work)?,
        };
        let partner = work
            .iter()
            .find(|w| !pairing(kind, n, &x, w).is_zero())
            .cloned()
            .ok_or_else(|| Error::WitnessSearch("degenerate middle block".into()))?;
        let mut y = scale_vec(&partner, &pairing(kind, n, &x, &partner).inv().unwrap());
        if kind == FormKind::Orthogonal {
            y = make_isotropic_against(kind, n, field, &y, &x);
        }
        work = work
            .iter()
            .map(|w| project_away(kind, n, w, &x, &y))
            .collect();
        mid_pairs.push((x, y));
    }
}

/// An exact isotropic vector in the span of `work` (orthogonal form).
/// Tries the basis vectors, then quadratic-formula combinations of pairs
/// from a small pool, then a bounded seeded search; failing all of those is
/// reported to the caller.
fn find_isotropic(
    kind: FormKind,
    n: usize,
    field: Field,
    work: &[Vec<Scalar>],
) -> Result<Vec<Scalar>> {
    let q = |v: &Vec<Scalar>| pairing(kind, n, v, v);
    for w in work {
        if q(w).is_zero() {
            return Ok(w.clone());
        }
    }
    // enrich the pool with small combinations before pairing up
    let mut pool: Vec<Vec<Scalar>> = work.to_vec();
    for i in 0..work.len() {
        for j in 0..work.len() {
            if i == j {
                continue;
            }
            for coef in [1i64, -1, 2, -2] {
                let v = add_scaled(&work[i], &Scalar::from_integer(field, coef), &work[j]);
                pool.push(v);
            }
        }
    }
    for v in &pool {
        if !v.iter().all(Scalar::is_zero) && q(v).is_zero() {
            return Ok(v.clone());
        }
    }
    for i in 0..pool.len() {
        for j in 0..pool.len() {
            if i == j {
                continue;
            }
            let qi = q(&pool[i]);
            let qj = q(&pool[j]);
            if qj.is_zero() {
                continue;
            }
            let b = pairing(kind, n, &pool[i], &pool[j]);
            // q(w_i + t w_j) = q_i + 2 t b + t^2 q_j, root when the
            // discriminant is a rational square
            let disc = b.mul(&b).sub(&qi.mul(&qj));
            if let Some(s) = exact_sqrt(&disc) {
                let t = s.sub(&b).div(&qj).unwrap();
                let cand = add_scaled(&pool[i], &t, &pool[j]);
                if !cand.iter().all(Scalar::is_zero) && q(&cand).is_zero() {
                    return Ok(cand);
                }
            }
        }
    }
    // bounded seeded fallback
    let mut rng = ChaCha20Rng::seed_from_u64(0x1505);
    for _ in 0..2000 {
        let mut v = vec![Scalar::zero(field); n];
        for w in work {
            let coef = Scalar::from_integer(field, rng.gen_range(-4..=4));
            v = add_scaled(&v, &coef, w);
        }
        if !v.iter().all(Scalar::is_zero) && q(&v).is_zero() {
            return Ok(v);
        }
    }
    Err(Error::WitnessSearch(
        "no exact isotropic vector found within the search budget".into(),
    ))
}

/// v - (q(v)/2) u, isotropic when <u, v> = 1 and u is isotropic.
fn make_isotropic_against(
    kind: FormKind,
    n: usize,
    field: Field,
    v: &[Scalar],
    u: &[Scalar],
) -> Vec<Scalar> {
    let qv = pairing(kind, n, v, v);
    let half = Scalar::from_integer(field, 2).inv().unwrap();
    add_scaled(v, &qv.mul(&half).neg(), u)
}

/// Projection onto the orthogonal complement of the hyperbolic pair (u, v)
/// with <u, v> = 1: x - <x,v> u -+ <x,u> v (sign by form symmetry).
fn project_away(
    kind: FormKind,
    n: usize,
    x: &[Scalar],
    u: &[Scalar],
    v: &[Scalar],
) -> Vec<Scalar> {
    let xv = pairing(kind, n, x, v);
    let xu = pairing(kind, n, x, u);
    let step = add_scaled(x, &xv.neg(), u);
    match kind {
        FormKind::Symplectic => add_scaled(&step, &xu, v),
        FormKind::Orthogonal => add_scaled(&step, &xu.neg(), v),
    }
}

fn pairing(kind: FormKind, n: usize, u: &[Scalar], v: &[Scalar]) -> Scalar {
    form_eval(kind, n, u, v).expect("vectors of frame length")
}

fn unit_vector(n: usize, field: Field, t: usize) -> Vec<Scalar> {
    (0..n)
        .map(|i| {
            if i == t {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
        .collect()
}

fn scale_vec(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x.mul(c)).collect()
}

fn add_scaled(x: &[Scalar], c: &Scalar, y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a.add(&c.mul(b))).collect()
}

fn independent_subset(vs: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut ech = VecEchelon::new();
    vs.into_iter().filter(|v| ech.insert(v.clone())).collect()
}

/// Exact square root of a nonnegative rational, when it exists.
fn exact_sqrt(s: &Scalar) -> Option<Scalar> {
    let r: &BigRational = s.as_rational()?;
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Scalar::Rational(BigRational::new_raw(num, den)))
    } else {
        None
    }
}

/// Incremental reduced echelon basis for linear-independence tests.
struct VecEchelon {
    rows: Vec<Vec<Scalar>>,
}

impl VecEchelon {
    fn new() -> VecEchelon {
        VecEchelon { rows: Vec::new() }
    }

    /// Reduces v against the basis; inserts the normalized remainder and
    /// returns true when it is nonzero.
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        for row in &self.rows {
            let p = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[p].is_zero() {
                let f = v[p].clone();
                v = add_scaled(&v, &f.neg(), row);
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        let v = scale_vec(&v, &inv);
        self.rows.push(v);
        true
    }
}

// small in-place matrix row/column operations used by the full-kind reduction

fn find_pivot(m: &Matrix, k: usize) -> Option<(usize, usize)> {
    for i in k..m.rows() {
        for j in k..m.cols() {
            if !m.get(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    for j in 0..m.cols() {
        let x = m.get(a, j).clone();
        let y = m.get(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn swap_cols(m: &mut Matrix, a: usize, b: usize) {
    for i in 0..m.rows() {
        let x = m.get(i, a).clone();
        let y = m.get(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

fn scale_row(m: &mut Matrix, i: usize, c: &Scalar) {
    for j in 0..m.cols() {
        let v = m.get(i, j).mul(c);
        m.set(i, j, v);
    }
}

/// row_i -= f * row_k
fn row_sub(m: &mut Matrix, i: usize, k: usize, f: &Scalar) {
    for j in 0..m.cols() {
        let v = m.get(i, j).sub(&f.mul(m.get(k, j)));
        m.set(i, j, v);
    }
}

/// col_j -= f * col_k
fn col_sub(m: &mut Matrix, j: usize, k: usize, f: &Scalar) {
    for i in 0..m.rows() {
        let v = m.get(i, j).sub(&f.mul(m.get(i, k)));
        m.set(i, j, v);
    }
}
