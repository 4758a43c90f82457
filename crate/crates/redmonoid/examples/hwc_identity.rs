//! The graded multiplicity identity for the coordinate ring: the exact rank
//! of the evaluation matrix on sampled unit-group points (the coordinate
//! ring's degree-d dimension) equals the sum of squared induced-module
//! dimensions over the dominant weight slice.
//!
//! The n = 4, degree 2 symplectic case reduces a 136-column matrix over Q.

use redmonoid::coordring::{verify_hwc, GradedDimOptions};
use redmonoid::exact::Field;
use redmonoid::monoid::{MonoidKind, MonoidSpec};

fn report(spec: &MonoidSpec, degree: u32, seed: u64) -> redmonoid::Result<()> {
    let started = std::time::Instant::now();
    let r = verify_hwc(spec, degree, seed, &GradedDimOptions::default())?;
    println!(
        "{:>10} n = {}, degree {}: oracle rank {} vs square sum {}  equal = {}  ({} points, {:.2?})",
        spec.kind.as_str(),
        spec.n,
        degree,
        r.graded_dim,
        r.square_sum,
        r.equal,
        r.points_used,
        started.elapsed(),
    );
    Ok(())
}

fn main() -> redmonoid::Result<()> {
    let q = Field::Rational;

    let full2 = MonoidSpec::new(MonoidKind::Full, 2, q)?;
    for d in 0..=3 {
        report(&full2, d, 17)?;
    }

    let sp2 = MonoidSpec::new(MonoidKind::Symplectic, 2, q)?;
    for d in 1..=4 {
        report(&sp2, d, 17)?;
    }

    let sp4 = MonoidSpec::new(MonoidKind::Symplectic, 4, q)?;
    report(&sp4, 1, 17)?;
    report(&sp4, 2, 17)?;
    Ok(())
}
