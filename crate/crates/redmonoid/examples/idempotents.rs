//! Idempotents of the diagonal torus closure.
//!
//! For the form monoids of size n = 2m these are the diagonal 0/1 matrices
//! whose support avoids every pair {i, i'}, plus the identity: 3^m + 1 in
//! total. Each one is a canonical orbit representative.

use redmonoid::exact::Field;
use redmonoid::monoid::{
    idempotents_in_torus_closure, similitude_factor, torus_closure_contains, MonoidKind,
    MonoidSpec,
};

fn main() -> redmonoid::Result<()> {
    let q = Field::Rational;
    for n in [2usize, 4, 6] {
        let spec = MonoidSpec::new(MonoidKind::Symplectic, n, q)?;
        let es = idempotents_in_torus_closure(&spec);
        println!(
            "symplectic n = {n}: {} idempotents (3^{} + 1 = {})",
            es.len(),
            n / 2,
            3usize.pow(n as u32 / 2) + 1
        );
    }

    let spec = MonoidSpec::new(MonoidKind::Symplectic, 4, q)?;
    println!("\nsupports for n = 4 (1-based indices, identity last):");
    for e in idempotents_in_torus_closure(&spec) {
        let support: Vec<usize> = (0..4).filter(|&i| !e.get(i, i).is_zero()).map(|i| i + 1).collect();
        let c = similitude_factor(&spec, &e)?.unwrap();
        println!("  e_{support:?}  c = {c}");
    }

    // the torus closure itself: diagonals with all products d_i d_{i'} equal
    use redmonoid::exact::{Matrix, Scalar};
    let d = Matrix::diagonal(
        q,
        &[
            Scalar::from_integer(q, 2),
            Scalar::from_integer(q, 3),
            Scalar::from_integer(q, 4),
            Scalar::from_integer(q, 6),
        ],
    );
    println!(
        "\ndiag(2,3,4,6) in the torus closure (2*6 = 3*4): {}",
        torus_closure_contains(&spec, &d)?
    );
    let d = Matrix::diagonal(
        q,
        &[
            Scalar::from_integer(q, 1),
            Scalar::from_integer(q, 1),
            Scalar::from_integer(q, 1),
            Scalar::from_integer(q, 2),
        ],
    );
    println!(
        "diag(1,1,1,2) in the torus closure: {}",
        torus_closure_contains(&spec, &d)?
    );
    Ok(())
}
