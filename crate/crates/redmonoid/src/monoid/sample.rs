//! Seeded, deterministic sampling of unit-group and monoid elements.
//!
//! Form-kind units come from the Cayley transform: a matrix S with
//! S^T J = -J S (the Lie algebra condition) maps to (I - S)^{-1}(I + S),
//! which preserves the form exactly; a random nonzero scalar then moves the
//! similitude factor off 1. Solutions of the skew condition are J^{-1} W
//! with W symmetric (symplectic J) or antisymmetric (orthogonal J).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar};
use crate::monoid::{
    classify_orbit, is_unit, paired, support_idempotent, MonoidKind, MonoidSpec, OrbitClass,
};

const MAX_ATTEMPTS: u32 = 64;

/// Component of the orthogonal unit group for even n; `Plus` contains the
/// identity. The symplectic and full unit groups are connected, as is the
/// odd-dimensional orthogonal similitude group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitComponent {
    Plus,
    Minus,
}

fn small_scalar(rng: &mut ChaCha20Rng, field: Field, bound: u32) -> Scalar {
    let v = rng.gen_range(-(bound as i64)..=bound as i64);
    Scalar::from_integer(field, v)
}

fn nonzero_scalar(rng: &mut ChaCha20Rng, field: Field, bound: u32) -> Scalar {
    loop {
        let v = rng.gen_range(1..=bound as i64);
        let s = Scalar::from_integer(field, if rng.gen_bool(0.5) { v } else { -v });
        if !s.is_zero() {
            return s;
        }
    }
}

/// The permutation swapping e_1 and e_n; det = -1, preserves both forms.
fn end_swap_reflection(n: usize, field: Field) -> Matrix {
    Matrix::from_fn(n, n, field, |i, j| {
        let target = if i == 0 {
            n - 1
        } else if i == n - 1 {
            0
        } else {
            i
        };
        if j == target {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    })
}

fn sample_form_unit(
    spec: &MonoidSpec,
    rng: &mut ChaCha20Rng,
    bound: u32,
    component: UnitComponent,
) -> Result<Matrix> {
    let n = spec.n;
    let field = spec.field;
    let j = spec.gram().expect("form kind");
    let j_inv = j.invert()?.expect("gram matrix is invertible");
    let symmetric = spec.kind == MonoidKind::Symplectic;
    for _ in 0..MAX_ATTEMPTS {
        let mut w = Matrix::zero(n, n, field);
        for i in 0..n {
            for k in i..n {
                if i == k {
                    if symmetric {
                        w.set(i, i, small_scalar(rng, field, bound));
                    }
                    continue;
                }
                let v = small_scalar(rng, field, bound);
                w.set(i, k, v.clone());
                w.set(k, i, if symmetric { v } else { v.neg() });
            }
        }
        let s = j_inv.mul(&w)?;
        let i_minus = Matrix::identity(n, field).sub(&s)?;
        let Some(inv) = i_minus.invert()? else {
            continue;
        };
        let i_plus = Matrix::identity(n, field).add(&s)?;
        let mut u = inv.mul(&i_plus)?;
        u = u.scale(&nonzero_scalar(rng, field, bound));
        if component == UnitComponent::Minus {
            u = u.mul(&end_swap_reflection(n, field))?;
        }
        if is_unit(spec, &u)? {
            return Ok(u);
        }
    }
    Err(Error::SamplingFailed {
        attempts: MAX_ATTEMPTS,
        reason: format!("no invertible Cayley parameter for {}", spec.kind.as_str()),
    })
}

fn sample_full_unit(spec: &MonoidSpec, rng: &mut ChaCha20Rng, bound: u32) -> Result<Matrix> {
    for _ in 0..MAX_ATTEMPTS {
        let a = Matrix::from_fn(spec.n, spec.n, spec.field, |_, _| {
            small_scalar(rng, spec.field, bound)
        });
        if !a.det()?.is_zero() {
            return Ok(a);
        }
    }
    Err(Error::SamplingFailed {
        attempts: MAX_ATTEMPTS,
        reason: "no invertible matrix found by rejection".into(),
    })
}

fn sample_unit_with_rng(
    spec: &MonoidSpec,
    rng: &mut ChaCha20Rng,
    entry_bound: u32,
) -> Result<Matrix> {
    match spec.kind {
        MonoidKind::Full => sample_full_unit(spec, rng, entry_bound),
        MonoidKind::Orthogonal if spec.n % 2 == 0 => {
            // visit both components of GO_n across the seed stream
            let component = if rng.gen_bool(0.5) {
                UnitComponent::Plus
            } else {
                UnitComponent::Minus
            };
            sample_form_unit(spec, rng, entry_bound, component)
        }
        _ => sample_form_unit(spec, rng, entry_bound, UnitComponent::Plus),
    }
}

/// A unit of the spec's group, deterministic in (seed, entry_bound).
pub fn sample_unit(spec: &MonoidSpec, seed: u64, entry_bound: u32) -> Result<Matrix> {
    if entry_bound == 0 {
        return Err(Error::Constraint("entry_bound must be >= 1".into()));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    sample_unit_with_rng(spec, &mut rng, entry_bound)
}

/// A unit in a prescribed component. `Minus` is only meaningful for the
/// even-dimensional orthogonal kind, whose similitude group has two
/// components; everything else is connected.
pub fn sample_unit_in_component(
    spec: &MonoidSpec,
    seed: u64,
    entry_bound: u32,
    component: UnitComponent,
) -> Result<Matrix> {
    if entry_bound == 0 {
        return Err(Error::Constraint("entry_bound must be >= 1".into()));
    }
    if component == UnitComponent::Minus
        && !(spec.kind == MonoidKind::Orthogonal && spec.n % 2 == 0)
    {
        return Err(Error::Constraint(format!(
            "unit group of kind {} (n = {}) is connected; there is no minus component",
            spec.kind.as_str(),
            spec.n
        )));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    match spec.kind {
        MonoidKind::Full => sample_full_unit(spec, &mut rng, entry_bound),
        _ => sample_form_unit(spec, &mut rng, entry_bound, component),
    }
}

fn max_singular_rank(spec: &MonoidSpec) -> usize {
    match spec.kind {
        MonoidKind::Full => spec.n,
        _ => spec.n / 2,
    }
}

/// g * e * h for seeded units g, h and an idempotent e: the canonical
/// idempotent supported on the first `rank` indices when a rank is
/// requested, otherwise a seeded-random singular idempotent. The result is
/// always a member; it is singular unless a full-kind rank n was requested.
pub fn sample_member(spec: &MonoidSpec, seed: u64, rank_choice: Option<usize>) -> Result<Matrix> {
    let max_rank = max_singular_rank(spec);
    if let Some(r) = rank_choice {
        if r > max_rank {
            return Err(Error::OutOfRange(format!(
                "rank {r} exceeds the maximum {} for kind {} with n = {}",
                max_rank,
                spec.kind.as_str(),
                spec.n
            )));
        }
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let g = sample_unit_with_rng(spec, &mut rng, 3)?;
    let h = sample_unit_with_rng(spec, &mut rng, 3)?;
    let support: Vec<usize> = match rank_choice {
        Some(r) => (0..r).collect(),
        None => loop {
            let mut s = Vec::new();
            match spec.kind {
                MonoidKind::Full => {
                    for i in 0..spec.n {
                        if rng.gen_bool(0.5) {
                            s.push(i);
                        }
                    }
                    if s.len() == spec.n {
                        continue; // keep unrequested samples singular
                    }
                }
                _ => {
                    // per pair {i, i'}: neither, i, or i'
                    for i in 0..spec.n / 2 {
                        match rng.gen_range(0..3u8) {
                            1 => s.push(i),
                            2 => s.push(paired(spec.n, i)),
                            _ => {}
                        }
                    }
                    s.sort_unstable();
                }
            }
            break s;
        },
    };
    let e = support_idempotent(spec, &support);
    g.mul(&e)?.mul(&h)
}

/// Used by tests: classify helper that must see the constructed rank.
#[allow(dead_code)]
pub(crate) fn classify_is_singular_of_rank(
    spec: &MonoidSpec,
    a: &Matrix,
    rank: usize,
) -> Result<bool> {
    Ok(classify_orbit(spec, a)? == OrbitClass::Singular { rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{is_member, similitude_factor};

    const Q: Field = Field::Rational;

    #[test]
    fn sampled_units_are_units_and_deterministic() {
        for kind in [MonoidKind::Full, MonoidKind::Orthogonal, MonoidKind::Symplectic] {
            let spec = MonoidSpec::new(kind, 4, Q).unwrap();
            for seed in 0..10u64 {
                let u = sample_unit(&spec, seed, 3).unwrap();
                assert!(is_unit(&spec, &u).unwrap(), "{kind:?} seed {seed}");
                assert_eq!(u, sample_unit(&spec, seed, 3).unwrap());
            }
        }
    }

    #[test]
    fn symplectic_units_have_nonzero_factor() {
        let spec = MonoidSpec::new(MonoidKind::Symplectic, 6, Q).unwrap();
        for seed in 0..5u64 {
            let u = sample_unit(&spec, seed, 3).unwrap();
            let c = similitude_factor(&spec, &u).unwrap().unwrap();
            assert!(!c.is_zero());
        }
    }

    #[test]
    fn orthogonal_components_are_reachable() {
        let spec = MonoidSpec::new(MonoidKind::Orthogonal, 4, Q).unwrap();
        let plus = sample_unit_in_component(&spec, 11, 3, UnitComponent::Plus).unwrap();
        let minus = sample_unit_in_component(&spec, 11, 3, UnitComponent::Minus).unwrap();
        assert_eq!(
            classify_orbit(&spec, &plus).unwrap(),
            OrbitClass::Unit { component: 1 }
        );
        assert_eq!(
            classify_orbit(&spec, &minus).unwrap(),
            OrbitClass::Unit { component: -1 }
        );
        let sp = MonoidSpec::new(MonoidKind::Symplectic, 4, Q).unwrap();
        assert!(sample_unit_in_component(&sp, 0, 3, UnitComponent::Minus).is_err());
    }

    #[test]
    fn members_are_members() {
        for kind in [MonoidKind::Full, MonoidKind::Orthogonal, MonoidKind::Symplectic] {
            let spec = MonoidSpec::new(kind, 4, Q).unwrap();
            for seed in 0..10u64 {
                let a = sample_member(&spec, seed, None).unwrap();
                assert!(is_member(&spec, &a).unwrap());
                assert_eq!(a, sample_member(&spec, seed, None).unwrap());
            }
        }
    }

    #[test]
    fn member_rank_is_respected() {
        let spec = MonoidSpec::new(MonoidKind::Symplectic, 4, Q).unwrap();
        for r in 0..=2usize {
            let a = sample_member(&spec, 99 + r as u64, Some(r)).unwrap();
            assert_eq!(
                classify_orbit(&spec, &a).unwrap(),
                OrbitClass::Singular { rank: r }
            );
        }
        assert!(sample_member(&spec, 0, Some(3)).is_err());
        // rank 0 forces the zero matrix
        let z = sample_member(&spec, 5, Some(0)).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn prime_field_sampling() {
        let spec = MonoidSpec::new(MonoidKind::Symplectic, 4, Field::Prime(10007)).unwrap();
        let u = sample_unit(&spec, 3, 3).unwrap();
        assert!(is_unit(&spec, &u).unwrap());
    }
}
