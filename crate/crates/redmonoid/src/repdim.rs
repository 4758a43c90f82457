//! Dimensions of the induced modules via the Weyl dimension formula for
//! types A and C, an independent semistandard-tableau counting oracle for
//! type A, and the graded square sum those dimensions predict for the
//! coordinate ring of the monoid.
//!
//! The formula is evaluated with doubled rho so every pairing stays an
//! integer; the running product is exact big-integer arithmetic and each
//! division is checked to leave remainder zero. The similitude coordinate
//! never enters coroot pairings, so the dimension is independent of k.

use num::{BigInt, One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::monoid::MonoidSpec;
use crate::weights::{
    is_dominant, partitions_at_most, root_datum_for, xd_dominant_enumerate, RootDatum, Weight,
};

/// dim of the induced module of highest weight `w`, by the Weyl dimension
/// formula: product over positive roots of <w + rho, a^vee> / <rho, a^vee>.
pub fn dim_nabla(rd: &RootDatum, w: &Weight) -> Result<u64> {
    rd.check_shape(w)?;
    if !is_dominant(rd, w)? {
        return Err(Error::NotDominant(format!("{w:?}")));
    }
    let (a, _) = w.coords();
    let two_rho = rd.two_rho();
    let shifted: Vec<i64> = a.iter().zip(two_rho).map(|(x, r)| 2 * x + r).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in rd.positive_roots() {
        num *= BigInt::from(root.pairing(&shifted));
        den *= BigInt::from(root.pairing(two_rho));
    }
    let (q, r) = num::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension formula division must be exact");
    q.to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("dimension of {w:?} exceeds u64")))
}

/// Number of semistandard Young tableaux of the given shape with entries in
/// {1..n}, by direct backtracking enumeration. Independent of the Weyl
/// formula; intended for shapes with at most a dozen cells.
pub fn ssyt_count(n: usize, partition: &[u64]) -> Result<u64> {
    if partition.iter().any(|&p| p == 0) {
        return Err(Error::Constraint("partition parts must be positive".into()));
    }
    if partition.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Constraint("partition parts must be non-increasing".into()));
    }
    if partition.len() > n {
        return Err(Error::Constraint(format!(
            "partition has {} parts, more than the entry bound {n}",
            partition.len()
        )));
    }
    let shape: Vec<usize> = partition.iter().map(|&p| p as usize).collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();

    fn fill(
        shape: &[usize],
        filling: &mut Vec<Vec<usize>>,
        n: usize,
        row: usize,
        col: usize,
    ) -> u64 {
        if row == shape.len() {
            return 1;
        }
        let (next_row, next_col) = if col + 1 < shape[row] {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let min_left = if col > 0 { filling[row][col - 1] } else { 1 };
        let min_above = if row > 0 && col < shape[row - 1] {
            filling[row - 1][col] + 1
        } else {
            1
        };
        let lo = min_left.max(min_above);
        let mut count = 0;
        for v in lo..=n {
            filling[row][col] = v;
            count += fill(shape, filling, n, next_row, next_col);
        }
        filling[row][col] = 0;
        count
    }

    if shape.is_empty() {
        return Ok(1);
    }
    Ok(fill(&shape, &mut filling, n, 0, 0))
}

/// Sum of squared induced-module dimensions over the dominant X(D) weights
/// of one degree: the predicted dimension of the degree-d component of the
/// monoid's coordinate ring.
pub fn graded_square_sum(spec: &MonoidSpec, degree: u32) -> Result<u64> {
    let rd = root_datum_for(spec)?;
    let mut acc: u64 = 0;
    for w in xd_dominant_enumerate(spec, degree)? {
        let d = dim_nabla(&rd, &w)?;
        acc = acc
            .checked_add(d.checked_mul(d).ok_or_else(|| {
                Error::OutOfRange("squared dimension exceeds u64".into())
            })?)
            .ok_or_else(|| Error::OutOfRange("square sum exceeds u64".into()))?;
    }
    Ok(acc)
}

/// Dimension table for one degree slice: the weights are exactly the
/// dominant X(D) weights of that degree, in enumeration order.
#[derive(Clone, Debug)]
pub struct DimTable {
    pub spec: MonoidSpec,
    pub degree: u32,
    pub entries: Vec<(Weight, u64)>,
}

impl DimTable {
    pub fn build(spec: &MonoidSpec, degree: u32) -> Result<DimTable> {
        let rd = root_datum_for(spec)?;
        let entries = xd_dominant_enumerate(spec, degree)?
            .into_iter()
            .map(|w| dim_nabla(&rd, &w).map(|d| (w, d)))
            .collect::<Result<Vec<_>>>()?;
        Ok(DimTable { spec: spec.clone(), degree, entries })
    }

    pub fn square_sum(&self) -> u64 {
        self.entries.iter().map(|(_, d)| d * d).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "spec": self.spec.to_json(),
            "degree": self.degree,
            "entries": self.entries.iter().map(|(w, d)| {
                json!({"weight": w.to_json(), "dim": d})
            }).collect::<Vec<_>>(),
        })
    }
}

/// All partitions with at most `max_parts` parts and `cells` cells, without
/// zero padding; used by the tableau cross-checks.
pub fn partitions_exact(cells: u64, max_parts: usize) -> Vec<Vec<u64>> {
    partitions_at_most(cells as i64, max_parts)
        .into_iter()
        .map(|p| p.into_iter().filter(|&x| x > 0).map(|x| x as u64).collect())
        .collect()
}

/// Exact binomial coefficient, used by the dimension identities.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc.to_u64().expect("binomial fits u64 at desk scale")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;
    use crate::monoid::MonoidKind;

    const Q: Field = Field::Rational;

    #[test]
    fn weyl_formula_type_a_examples() {
        let rd = RootDatum::type_a(2);
        assert_eq!(dim_nabla(&rd, &Weight::type_a(vec![1, 0])).unwrap(), 2);
        assert_eq!(dim_nabla(&rd, &Weight::type_a(vec![2, 0])).unwrap(), 3);
        assert_eq!(dim_nabla(&rd, &Weight::type_a(vec![1, 1])).unwrap(), 1);
        assert!(matches!(
            dim_nabla(&rd, &Weight::type_a(vec![0, 2])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn weyl_formula_type_c_examples() {
        let rd = RootDatum::type_c(2);
        // natural module of Sp_4 and the 5-dimensional piece of its square
        assert_eq!(dim_nabla(&rd, &Weight::type_c(vec![1, 0], 0)).unwrap(), 4);
        assert_eq!(dim_nabla(&rd, &Weight::type_c(vec![1, 1], 0)).unwrap(), 5);
        assert_eq!(dim_nabla(&rd, &Weight::type_c(vec![2, 0], 0)).unwrap(), 10);
        // central characters are one-dimensional, independent of k
        assert_eq!(dim_nabla(&rd, &Weight::type_c(vec![0, 0], 7)).unwrap(), 1);
        for k in -2..=2 {
            assert_eq!(
                dim_nabla(&rd, &Weight::type_c(vec![1, 1], k)).unwrap(),
                5
            );
        }
    }

    #[test]
    fn lambda_squared_of_natural_sp4_decomposes() {
        // dim of the second exterior power of the natural 4-dim module is 6,
        // matching 5 + 1 from the weight enumeration
        let rd = RootDatum::type_c(2);
        let five = dim_nabla(&rd, &Weight::type_c(vec![1, 1], 0)).unwrap();
        let one = dim_nabla(&rd, &Weight::type_c(vec![0, 0], 1)).unwrap();
        assert_eq!(five + one, 6);
    }

    #[test]
    fn dim_of_zero_weight_and_central_shift() {
        let rd = RootDatum::type_a(3);
        assert_eq!(dim_nabla(&rd, &Weight::type_a(vec![0, 0, 0])).unwrap(), 1);
        // adding the determinant character does not change dimensions
        assert_eq!(
            dim_nabla(&rd, &Weight::type_a(vec![3, 2, 1])).unwrap(),
            dim_nabla(&rd, &Weight::type_a(vec![4, 3, 2])).unwrap()
        );
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(ssyt_count(2, &[1]).unwrap(), 2);
        assert_eq!(ssyt_count(2, &[2]).unwrap(), 3); // {11, 12, 22}
        assert_eq!(ssyt_count(3, &[1, 1]).unwrap(), 3); // strict columns
        assert_eq!(ssyt_count(3, &[]).unwrap(), 1);
        assert!(ssyt_count(1, &[1, 1]).is_err());
        assert!(ssyt_count(3, &[1, 2]).is_err());
    }

    #[test]
    fn weyl_dimension_equals_tableau_count() {
        for n in 1..=4usize {
            let rd = RootDatum::type_a(n);
            for cells in 0..=8u64 {
                for p in partitions_exact(cells, n) {
                    let mut padded: Vec<i64> = p.iter().map(|&x| x as i64).collect();
                    padded.resize(n, 0);
                    let weyl = dim_nabla(&rd, &Weight::type_a(padded)).unwrap();
                    let tableaux = ssyt_count(n, &p).unwrap();
                    assert_eq!(weyl, tableaux, "shape {p:?}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn square_sum_examples() {
        let full2 = MonoidSpec::new(MonoidKind::Full, 2, Q).unwrap();
        assert_eq!(graded_square_sum(&full2, 2).unwrap(), 10);
        let sp4 = MonoidSpec::new(MonoidKind::Symplectic, 4, Q).unwrap();
        assert_eq!(graded_square_sum(&sp4, 1).unwrap(), 16);
        assert_eq!(graded_square_sum(&sp4, 2).unwrap(), 126);
    }

    #[test]
    fn schur_algebra_identity() {
        // sum over partitions of squared tableau counts equals the monomial
        // count in n^2 variables
        for n in 1..=3u64 {
            for d in 0..=4u64 {
                let mut acc = 0u64;
                for p in partitions_exact(d, n as usize) {
                    let c = ssyt_count(n as usize, &p).unwrap();
                    acc += c * c;
                }
                assert_eq!(acc, binomial(n * n + d - 1, d), "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn dim_table_shape() {
        let sp4 = MonoidSpec::new(MonoidKind::Symplectic, 4, Q).unwrap();
        let table = DimTable::build(&sp4, 2).unwrap();
        assert_eq!(table.entries.len(), 3);
        assert_eq!(table.square_sum(), 126);
        assert!(table.entries.iter().all(|&(_, d)| d >= 1));
        let json = table.to_json();
        assert_eq!(json["degree"], 2);
        assert_eq!(json["entries"][0]["dim"], 10);
    }
}
