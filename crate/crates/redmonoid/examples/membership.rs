//! Membership in the orthogonal and symplectic matrix monoids.
//!
//! A matrix A belongs to the monoid exactly when A^T J A = cJ = A J A^T for
//! a single scalar c; both equations matter once c = 0. This example prints
//! the Gram matrices, tests a few members, and searches the 0/1 matrices
//! for a witness that the second equation is not redundant.

use redmonoid::exact::{Field, Matrix, Scalar};
use redmonoid::forms::{gram_matrix, FormKind};
use redmonoid::monoid::{is_member, is_unit, similitude_factor, MonoidKind, MonoidSpec};

fn show(m: &Matrix) -> String {
    (0..m.rows())
        .map(|i| {
            let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", row.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> redmonoid::Result<()> {
    let q = Field::Rational;
    println!("orthogonal J (n=2):  {}", show(&gram_matrix(FormKind::Orthogonal, 2, q)?));
    println!("symplectic J (n=4):  {}", show(&gram_matrix(FormKind::Symplectic, 4, q)?));

    let spec = MonoidSpec::new(MonoidKind::Symplectic, 4, q)?;
    let examples: Vec<(&str, Matrix)> = vec![
        ("identity", Matrix::identity(4, q)),
        ("2 * identity", Matrix::identity(4, q).scale(&Scalar::from_integer(q, 2))),
        ("zero", Matrix::zero(4, 4, q)),
        ("diag(1,0,0,0)", Matrix::from_i64(q, &[&[1, 0, 0, 0], &[0; 4], &[0; 4], &[0; 4]])),
        ("diag(1,0,0,1)", Matrix::from_i64(q, &[&[1, 0, 0, 0], &[0; 4], &[0; 4], &[0, 0, 0, 1]])),
    ];
    for (name, a) in &examples {
        let c = similitude_factor(&spec, a)?;
        println!(
            "{name:>14}: member = {}, unit = {}, c = {}",
            is_member(&spec, a)?,
            is_unit(&spec, a)?,
            c.map_or("absent".to_string(), |s| s.to_display_string()),
        );
    }

    // the "extra" equation A J A^T = cJ is necessary: search 0/1 matrices
    // for A with A^T J A = 0 but A J A^T != 0
    let j = spec.gram().unwrap();
    for mask in 0u32..(1 << 16) {
        let a = Matrix::from_fn(4, 4, q, |i, k| {
            Scalar::from_integer(q, (mask >> (4 * i + k) & 1) as i64)
        });
        let lhs = a.transpose().mul(&j)?.mul(&a)?;
        if !lhs.is_zero() {
            continue;
        }
        let rhs = a.mul(&j)?.mul(&a.transpose())?;
        if !rhs.is_zero() {
            println!("\none-sided witness (A^T J A = 0 but A J A^T != 0):");
            println!("  A = {}", show(&a));
            println!("  is_member(A) = {}", is_member(&spec, &a)?);
            break;
        }
    }
    Ok(())
}
