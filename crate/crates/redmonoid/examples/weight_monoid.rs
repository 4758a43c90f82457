//! The weight monoid X(D) of the diagonal torus closure and its dominance
//! combinatorics: membership, enumeration by degree, dominant predecessors,
//! and the saturation property that drives the highest-weight theory.

use redmonoid::exact::Field;
use redmonoid::monoid::{MonoidKind, MonoidSpec};
use redmonoid::weights::{
    check_xd_plus_saturated, dominance_leq, dominant_predecessors, is_saturated, root_datum_for,
    xd_contains, xd_dominant_enumerate, Weight,
};

fn main() -> redmonoid::Result<()> {
    let q = Field::Rational;
    let spec = MonoidSpec::new(MonoidKind::Symplectic, 4, q)?;
    let rd = root_datum_for(&spec)?;

    // membership in the generator monoid eps_i = (e_i; 0), eps_{i'} = (-e_i; 1)
    for (a, k) in [(vec![1, 0], 0), (vec![-1, 0], 0), (vec![-1, 0], 1)] {
        let w = Weight::type_c(a.clone(), k);
        println!("({a:?}; {k}) in X(D): {}", xd_contains(&spec, &w)?);
    }

    println!("\ndominant X(D) weights by degree:");
    for d in 0..=3u32 {
        let slice = xd_dominant_enumerate(&spec, d)?;
        let pretty: Vec<String> = slice
            .iter()
            .map(|w| {
                let (a, k) = w.coords();
                format!("({a:?};{k})")
            })
            .collect();
        println!("  degree {d}: {}", pretty.join(" "));
    }

    let top = Weight::type_c(vec![2, 0], 0);
    let below = Weight::type_c(vec![0, 0], 1);
    println!(
        "\n(0,0;1) <= (2,0;0) in dominance order: {}",
        dominance_leq(&rd, &below, &top)?
    );
    let preds = dominant_predecessors(&rd, &top)?;
    println!("dominant predecessors of (2,0;0): {} weights", preds.len());
    println!("that slice is saturated: {}", is_saturated(&rd, &preds)?);

    println!();
    for d in 0..=4u32 {
        println!(
            "degree-{d} slice of X(D)^+ is predecessor closed: {}",
            check_xd_plus_saturated(&spec, d)?
        );
    }

    let full = MonoidSpec::new(MonoidKind::Full, 3, q)?;
    for d in 0..=6u32 {
        assert!(check_xd_plus_saturated(&full, d)?);
    }
    println!("\nfull monoid n = 3: saturation holds for every degree up to 6");
    Ok(())
}
