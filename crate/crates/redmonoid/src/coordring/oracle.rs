//! Randomized evaluation-rank oracle for the graded dimension of the
//! coordinate ring of a matrix monoid.
//!
//! The unit group is dense in the monoid, so a polynomial vanishing on
//! sampled unit points vanishes on the monoid; the dimension of the
//! degree-d component is the rank of the matrix whose rows are sampled
//! points and whose columns are all degree-d monomials. Points are added in
//! batches until the rank stabilizes across two consecutive batches.
//!
//! Stabilization is tracked by a cheap mod-p elimination (p = 2^31 - 1),
//! which only decides when to stop sampling. The reported rank is exact
//! over the rationals: either the mod-p rank equals the column count, in
//! which case some maximal minor is nonzero mod p and hence nonzero over Q
//! (full column rank certified), or a fraction-free Bareiss elimination of
//! the accumulated integer rows computes the rank directly.

use num::{BigInt, Integer, One};
use serde_json::{json, Value};

use crate::coordring::{monomials_of_degree, Monomial};
use crate::error::{Error, Result};
use crate::exact::{bareiss_rank, Field, Matrix, Scalar};
use crate::monoid::{sample_unit_in_component, MonoidKind, MonoidSpec, UnitComponent};
use crate::repdim::graded_square_sum;

#[derive(Clone, Debug)]
pub struct GradedDimOptions {
    /// Maximum number of sampled points; defaults to 4 x the monomial count.
    pub point_budget: Option<usize>,
    /// Height bound for the Cayley parameters of sampled units.
    pub entry_bound: u32,
    /// Points added between rank checks.
    pub batch: usize,
    /// Restrict orthogonal sampling to the identity component.
    pub orthogonal_plus_only: bool,
    /// Worker threads for row evaluation; never affects the result.
    pub jobs: usize,
}

impl Default for GradedDimOptions {
    fn default() -> Self {
        GradedDimOptions {
            point_budget: None,
            entry_bound: 3,
            batch: 32,
            orthogonal_plus_only: false,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimResult {
    pub rank: usize,
    pub points_used: usize,
    pub monomial_count: usize,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

fn sample_point(spec: &MonoidSpec, seed: u64, index: usize, opts: &GradedDimOptions) -> Result<Matrix> {
    let point_seed = splitmix64(seed ^ (index as u64).wrapping_mul(0xa076_1d64_78bd_642f));
    let component = if spec.kind == MonoidKind::Orthogonal
        && spec.n % 2 == 0
        && !opts.orthogonal_plus_only
        && index % 2 == 1
    {
        UnitComponent::Minus
    } else {
        UnitComponent::Plus
    };
    sample_unit_in_component(spec, point_seed, opts.entry_bound, component)
}

/// One evaluation row, cleared of denominators (row scaling preserves rank).
fn evaluation_row(point: &Matrix, monomials: &[Monomial]) -> Vec<BigInt> {
    let values: Vec<Scalar> = monomials.iter().map(|m| m.eval(point)).collect();
    let mut lcm = BigInt::one();
    for v in &values {
        lcm = lcm.lcm(v.as_rational().expect("oracle is rational-only").denom());
    }
    values
        .iter()
        .map(|v| {
            let r = v.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect()
}

const FILTER_PRIME: u64 = 2_147_483_647;

/// Reduced echelon basis mod p; rows are kept with pivot 1 and reduced
/// against each other, so insertion is a handful of u64 passes.
struct ModEchelon {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModEchelon {
    fn new() -> ModEchelon {
        ModEchelon { rows: Vec::new(), pivots: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut row: Vec<u64>) -> bool {
        let p = FILTER_PRIME;
        for (basis, &piv) in self.rows.iter().zip(&self.pivots) {
            let f = row[piv] % p;
            if f != 0 {
                for (x, y) in row.iter_mut().zip(basis) {
                    *x = (*x + (p - f) * y % p) % p;
                }
            }
        }
        let Some(piv) = row.iter().position(|&x| x % p != 0) else {
            return false;
        };
        let inv = mod_inv(row[piv], p);
        for x in row.iter_mut() {
            *x = *x * inv % p;
        }
        // back-reduce the existing basis so future insertions stay cheap
        for (basis, &bp) in self.rows.iter_mut().zip(&self.pivots) {
            let f = basis[piv];
            if f != 0 && bp != piv {
                for (x, y) in basis.iter_mut().zip(&row) {
                    *x = (*x + (p - f) * y % p) % p;
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(piv);
        true
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p prime, a nonzero mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn reduce_mod(row: &[BigInt]) -> Vec<u64> {
    let p = BigInt::from(FILTER_PRIME);
    row.iter()
        .map(|x| {
            let r = x.mod_floor(&p);
            u64::try_from(r).expect("residue fits u64")
        })
        .collect()
}

/// Rank of the degree-d evaluation matrix, stabilized over two consecutive
/// point batches. Deterministic in the seed.
pub fn graded_dim(
    spec: &MonoidSpec,
    degree: u32,
    seed: u64,
    opts: &GradedDimOptions,
) -> Result<GradedDimResult> {
    if spec.field != Field::Rational {
        return Err(Error::Constraint(
            "the graded-dimension oracle runs over the rationals".into(),
        ));
    }
    let monomials = monomials_of_degree(spec.n, degree);
    let monomial_count = monomials.len();
    let batch = opts.batch.max(1);
    // the default budget always leaves room for two full batches, which the
    // stabilization rule needs
    let budget = opts
        .point_budget
        .unwrap_or_else(|| (4 * monomial_count.max(1)).max(2 * batch));

    let mut filter = ModEchelon::new();
    let mut all_rows: Vec<Vec<BigInt>> = Vec::new();
    let mut points_used = 0usize;
    let mut prev_rank: Option<usize> = None;
    while points_used < budget {
        let take = batch.min(budget - points_used);
        let rows = evaluate_batch(spec, seed, points_used, take, &monomials, opts)?;
        for row in rows {
            filter.insert(reduce_mod(&row));
            all_rows.push(row);
        }
        points_used += take;
        let rank = filter.rank();
        debug_assert!(rank <= monomial_count);
        // full column rank cannot grow further; otherwise wait for the
        // filter rank to repeat across two consecutive batches
        if rank == monomial_count || prev_rank == Some(rank) {
            return Ok(GradedDimResult {
                rank: exact_rank(all_rows, rank, monomial_count),
                points_used,
                monomial_count,
            });
        }
        prev_rank = Some(rank);
    }
    Err(Error::OracleNotStabilized {
        last_rank: filter.rank(),
        points_used,
    })
}

/// The exact rational rank of the sampled rows. A mod-p rank equal to the
/// column count certifies full rank outright (some maximal minor is nonzero
/// mod p, hence nonzero over Q); in every other case all rows go through
/// fraction-free Bareiss elimination, so the mod-p pass never decides the
/// answer, only when sampling stops.
fn exact_rank(rows: Vec<Vec<BigInt>>, filter_rank: usize, monomial_count: usize) -> usize {
    if filter_rank == monomial_count {
        return monomial_count;
    }
    bareiss_rank(rows)
}

/// Rows for points [start, start+count), evaluated on `jobs` threads when
/// requested; insertion order (and hence the result) is independent of the
/// thread count.
fn evaluate_batch(
    spec: &MonoidSpec,
    seed: u64,
    start: usize,
    count: usize,
    monomials: &[Monomial],
    opts: &GradedDimOptions,
) -> Result<Vec<Vec<BigInt>>> {
    let indices: Vec<usize> = (start..start + count).collect();
    let jobs = opts.jobs.max(1).min(count.max(1));
    if jobs == 1 {
        return indices
            .iter()
            .map(|&i| Ok(evaluation_row(&sample_point(spec, seed, i, opts)?, monomials)))
            .collect();
    }
    let chunk = count.div_ceil(jobs);
    let mut out: Vec<(usize, Result<Vec<Vec<BigInt>>>)> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (w, piece) in indices.chunks(chunk).enumerate() {
            let piece: Vec<usize> = piece.to_vec();
            handles.push((
                w,
                scope.spawn(move || {
                    piece
                        .iter()
                        .map(|&i| {
                            Ok(evaluation_row(&sample_point(spec, seed, i, opts)?, monomials))
                        })
                        .collect::<Result<Vec<_>>>()
                }),
            ));
        }
        for (w, h) in handles {
            out.push((w, h.join().expect("evaluation worker panicked")));
        }
    });
    out.sort_by_key(|(w, _)| *w);
    let mut rows = Vec::with_capacity(count);
    for (_, r) in out {
        rows.extend(r?);
    }
    Ok(rows)
}

/// Comparison of the oracle's graded dimension against the square sum of
/// induced-module dimensions over the dominant weight slice.
#[derive(Clone, Debug)]
pub struct HwcReport {
    pub spec: MonoidSpec,
    pub degree: u32,
    pub graded_dim: u64,
    pub square_sum: u64,
    pub equal: bool,
    pub points_used: usize,
    pub seed: u64,
}

impl HwcReport {
    pub fn to_json(&self) -> Value {
        json!({
            "spec": self.spec.to_json(),
            "degree": self.degree,
            "graded_dim": self.graded_dim,
            "square_sum": self.square_sum,
            "equal": self.equal,
            "points_used": self.points_used,
            "seed": self.seed,
        })
    }
}

/// Runs the oracle and the dimension-formula side by side.
pub fn verify_hwc(
    spec: &MonoidSpec,
    degree: u32,
    seed: u64,
    opts: &GradedDimOptions,
) -> Result<HwcReport> {
    let square_sum = graded_square_sum(spec, degree)?;
    let oracle = graded_dim(spec, degree, seed, opts)?;
    Ok(HwcReport {
        spec: spec.clone(),
        degree,
        graded_dim: oracle.rank as u64,
        square_sum,
        equal: oracle.rank as u64 == square_sum,
        points_used: oracle.points_used,
        seed,
    })
}
