//! G x G orbit classification and exact orbit witnesses.
//!
//! Singular members fall into orbits indexed by rank; `orbit_witness`
//! produces units g, h with g * A * h exactly equal to the canonical
//! idempotent of that rank, a symplectic version of Gaussian elimination.

use redmonoid::exact::Field;
use redmonoid::monoid::{
    classify_orbit, orbit_witness, sample_member, sample_unit, similitude_factor, MonoidKind,
    MonoidSpec, OrbitClass,
};

fn main() -> redmonoid::Result<()> {
    let q = Field::Rational;
    let spec = MonoidSpec::new(MonoidKind::Symplectic, 4, q)?;

    let u = sample_unit(&spec, 42, 3)?;
    println!(
        "sampled unit: c = {}, class = {:?}",
        similitude_factor(&spec, &u)?.unwrap(),
        classify_orbit(&spec, &u)?
    );

    for seed in 0..6u64 {
        let rank = 1 + (seed as usize) % 2;
        let a = sample_member(&spec, seed, Some(rank))?;
        let class = classify_orbit(&spec, &a)?;
        assert_eq!(class, OrbitClass::Singular { rank });
        let w = orbit_witness(&spec, &a)?;
        let round_trip = w.g.mul(&a)?.mul(&w.h)?;
        println!(
            "seed {seed}: rank {rank} member  ->  g*A*h = e_{{1..{rank}}} exactly: {}",
            round_trip == w.e
        );
    }

    // orbit labels are invariant under multiplication by units
    let a = sample_member(&spec, 9, Some(2))?;
    let g = sample_unit(&spec, 100, 3)?;
    let h = sample_unit(&spec, 101, 3)?;
    let moved = g.mul(&a)?.mul(&h)?;
    println!(
        "\ninvariance: class(A) = {:?}, class(gAh) = {:?}",
        classify_orbit(&spec, &a)?,
        classify_orbit(&spec, &moved)?
    );
    Ok(())
}
