//! The fixed Gram matrices of the split symmetric and antisymmetric bilinear
//! forms, in the basis pairing index i with i' = n+1-i. All idempotent and
//! orbit coordinates downstream depend on this pairing, so no alternative
//! normalization is offered.

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Orthogonal,
    Symplectic,
}

/// Sign epsilon_i: +1 for i in the first half, -1 in the second half
/// (symplectic); identically +1 for the orthogonal form. Indices 0-based.
fn epsilon(kind: FormKind, n: usize, i: usize) -> i64 {
    match kind {
        FormKind::Orthogonal => 1,
        FormKind::Symplectic => {
            if i < n / 2 {
                1
            } else {
                -1
            }
        }
    }
}

pub fn check_form_constraints(kind: FormKind, n: usize, field: Field) -> Result<()> {
    if n == 0 {
        return Err(Error::Constraint("form dimension must be positive".into()));
    }
    match kind {
        FormKind::Symplectic if n % 2 != 0 => Err(Error::Constraint(format!(
            "symplectic form requires even dimension, got n = {n}"
        ))),
        FormKind::Orthogonal if field.characteristic() == 2 => Err(Error::Constraint(
            "orthogonal form requires characteristic != 2".into(),
        )),
        _ => Ok(()),
    }
}

/// Gram matrix J: the anti-identity for the orthogonal form, the signed
/// anti-identity (epsilon_i on the antidiagonal) for the symplectic one.
pub fn gram_matrix(kind: FormKind, n: usize, field: Field) -> Result<Matrix> {
    check_form_constraints(kind, n, field)?;
    Ok(Matrix::from_fn(n, n, field, |i, j| {
        if j == n - 1 - i {
            Scalar::from_integer(field, epsilon(kind, n, i))
        } else {
            Scalar::zero(field)
        }
    }))
}

/// v^T J w for length-n vectors over one field.
pub fn form_eval(kind: FormKind, n: usize, v: &[Scalar], w: &[Scalar]) -> Result<Scalar> {
    if v.len() != n || w.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "form_eval expects two length-{n} vectors, got {} and {}",
            v.len(),
            w.len()
        )));
    }
    let field = v
        .first()
        .map(Scalar::field)
        .ok_or_else(|| Error::Constraint("form dimension must be positive".into()))?;
    check_form_constraints(kind, n, field)?;
    let mut acc = Scalar::zero(field);
    for i in 0..n {
        if v[i].field() != field || w[i].field() != field {
            return Err(Error::FieldMismatch(field, v[i].field()));
        }
        // J has a single nonzero per row: column n-1-i.
        let term = v[i]
            .mul(&Scalar::from_integer(field, epsilon(kind, n, i)))
            .mul(&w[n - 1 - i]);
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        (0..n)
            .map(|j| Scalar::from_integer(Q, if j == i { 1 } else { 0 }))
            .collect()
    }

    #[test]
    fn gram_orthogonal_2() {
        let j = gram_matrix(FormKind::Orthogonal, 2, Q).unwrap();
        assert_eq!(j, Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn gram_symplectic_2_and_4() {
        let j2 = gram_matrix(FormKind::Symplectic, 2, Q).unwrap();
        assert_eq!(j2, Matrix::from_i64(Q, &[&[0, 1], &[-1, 0]]));
        let j4 = gram_matrix(FormKind::Symplectic, 4, Q).unwrap();
        assert_eq!(
            j4,
            Matrix::from_i64(
                Q,
                &[
                    &[0, 0, 0, 1],
                    &[0, 0, 1, 0],
                    &[0, -1, 0, 0],
                    &[-1, 0, 0, 0]
                ]
            )
        );
    }

    #[test]
    fn kind_constraints() {
        assert!(matches!(
            gram_matrix(FormKind::Symplectic, 3, Q),
            Err(Error::Constraint(_))
        ));
        assert!(matches!(
            gram_matrix(FormKind::Orthogonal, 2, Field::Prime(2)),
            Err(Error::Constraint(_))
        ));
        // odd orthogonal is allowed
        assert!(gram_matrix(FormKind::Orthogonal, 3, Q).is_ok());
    }

    #[test]
    fn form_eval_examples() {
        assert_eq!(
            form_eval(FormKind::Orthogonal, 2, &e(2, 0), &e(2, 1)).unwrap(),
            Scalar::one(Q)
        );
        // antisymmetry forces isotropy
        assert!(form_eval(FormKind::Symplectic, 2, &e(2, 0), &e(2, 0))
            .unwrap()
            .is_zero());
        // J_{4,1} = epsilon_4 = -1
        assert_eq!(
            form_eval(FormKind::Symplectic, 4, &e(4, 3), &e(4, 0)).unwrap(),
            Scalar::from_integer(Q, -1)
        );
        assert!(form_eval(FormKind::Symplectic, 4, &e(4, 0), &e(3, 0)).is_err());
    }

    #[test]
    fn gram_symmetry_and_involution() {
        for n in [2usize, 4, 6] {
            let j = gram_matrix(FormKind::Orthogonal, n, Q).unwrap();
            assert_eq!(j.transpose(), j);
            assert_eq!(j.mul(&j).unwrap(), Matrix::identity(n, Q));
            assert!(!j.det().unwrap().is_zero());

            let j = gram_matrix(FormKind::Symplectic, n, Q).unwrap();
            assert_eq!(j.transpose(), j.scale(&Scalar::from_integer(Q, -1)));
            assert_eq!(
                j.mul(&j).unwrap(),
                Matrix::identity(n, Q).scale(&Scalar::from_integer(Q, -1))
            );
            let d = j.det().unwrap();
            assert!(d == Scalar::one(Q) || d == Scalar::from_integer(Q, -1));
        }
        // odd orthogonal gram is its own inverse too
        let j = gram_matrix(FormKind::Orthogonal, 5, Q).unwrap();
        assert_eq!(j.mul(&j).unwrap(), Matrix::identity(5, Q));
    }
}
