//! Induced-module dimensions: the Weyl dimension formula for types A and C,
//! cross-checked against an independent semistandard-tableau count, and the
//! squared-dimension sums they predict for the coordinate ring.

use redmonoid::exact::Field;
use redmonoid::monoid::{MonoidKind, MonoidSpec};
use redmonoid::repdim::{binomial, dim_nabla, graded_square_sum, partitions_exact, ssyt_count, DimTable};
use redmonoid::weights::{RootDatum, Weight};

fn main() -> redmonoid::Result<()> {
    let q = Field::Rational;

    // type A: Weyl formula and tableau counting agree
    println!("GL_3 dimensions (Weyl formula = tableau count):");
    let rd = RootDatum::type_a(3);
    for cells in 0..=4u64 {
        for p in partitions_exact(cells, 3) {
            let mut padded: Vec<i64> = p.iter().map(|&x| x as i64).collect();
            padded.resize(3, 0);
            let weyl = dim_nabla(&rd, &Weight::type_a(padded))?;
            let tab = ssyt_count(3, &p)?;
            assert_eq!(weyl, tab);
            println!("  shape {p:?}: {weyl}");
        }
    }

    // the Schur-algebra dimension identity: sum of squares = monomial count
    println!("\nsum over partitions of dim^2 vs C(n^2+d-1, d):");
    for n in 1..=3usize {
        for d in 0..=4u32 {
            let full = MonoidSpec::new(MonoidKind::Full, n, q)?;
            let lhs = graded_square_sum(&full, d)?;
            let rhs = binomial((n * n) as u64 + d as u64 - 1, d as u64).max(1);
            assert_eq!(lhs, rhs);
            print!("  n={n} d={d}: {lhs}");
        }
        println!();
    }

    // type C table for the symplectic monoid
    println!("\nsymplectic n = 4 dimension tables:");
    let sp4 = MonoidSpec::new(MonoidKind::Symplectic, 4, q)?;
    for d in 0..=2u32 {
        let table = DimTable::build(&sp4, d)?;
        let pretty: Vec<String> = table
            .entries
            .iter()
            .map(|(w, dim)| {
                let (a, k) = w.coords();
                format!("({a:?};{k}) -> {dim}")
            })
            .collect();
        println!(
            "  degree {d}: {}   square sum {}",
            pretty.join(", "),
            table.square_sum()
        );
    }
    Ok(())
}
