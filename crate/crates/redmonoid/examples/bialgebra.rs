//! The coordinate bialgebra of the matrix monoid: comultiplication dual to
//! matrix multiplication, counit as evaluation at the identity, symbolic
//! axiom checks, and the evaluation pairing that reconstructs products.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use redmonoid::coordring::{
    check_bialgebra_axioms, comultiply, counit, evaluation_compatible, Monomial, SparsePoly,
};
use redmonoid::exact::{Field, Matrix, Scalar};

fn main() -> redmonoid::Result<()> {
    let q = Field::Rational;

    let x11 = SparsePoly::monomial(q, Monomial::variable(0, 0));
    let delta = comultiply(2, &x11);
    println!("Delta(x11) for n = 2 has {} tensor terms:", delta.terms().count());
    for ((l, r), c) in delta.terms() {
        println!("  {c} * {l} (x) {r}");
    }
    println!("counit(x_11) = {}", counit(2, &x11));

    for (n, d) in [(1usize, 3u32), (2, 2), (3, 2)] {
        println!(
            "bialgebra axioms for n = {n} up to degree {d}: {}",
            check_bialgebra_axioms(n, d)?
        );
    }

    // f(AB) = sum f_i(A) f'_i(B) on random points
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    let mut p = SparsePoly::zero(q);
    p.add_term(
        Monomial::variable(0, 0).mul(&Monomial::variable(1, 1)),
        Scalar::one(q),
    );
    p.add_term(
        Monomial::variable(0, 1).mul(&Monomial::variable(1, 0)),
        Scalar::from_integer(q, -1),
    );
    let mut all_ok = true;
    for _ in 0..50 {
        let a = Matrix::from_fn(2, 2, q, |_, _| Scalar::from_integer(q, rng.gen_range(-5..=5)));
        let b = Matrix::from_fn(2, 2, q, |_, _| Scalar::from_integer(q, rng.gen_range(-5..=5)));
        all_ok &= evaluation_compatible(2, &p, &a, &b)?;
    }
    println!("det(AB) = paired evaluation of Delta(det) on 50 random pairs: {all_ok}");
    Ok(())
}
