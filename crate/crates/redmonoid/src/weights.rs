//! Weight-lattice combinatorics for types A and C: dominance order, the
//! diagonal weight monoid X(D) of the full and symplectic monoids, dominant
//! enumeration by degree, saturated sets, and multiplicity truncation.
//!
//! Type A weights are integer n-vectors (characters of the diagonal torus
//! of GL_n). Type C weights are written (a_1..a_m; k): the character sending
//! diag(t_1..t_m, c t_m^{-1}..c t_1^{-1}) to t^a c^k. In these coordinates
//! the n diagonal matrix entries of the symplectic monoid are the monoid
//! generators eps_i = (e_i; 0) and eps_{i'} = (-e_i; 1), and the last simple
//! root must carry k-component -1 so that roots have degree zero.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::monoid::{MonoidKind, MonoidSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootDatumKind {
    /// GL_n: weights in Z^n.
    TypeA(usize),
    /// GSp_2m: weights in Z^m plus the similitude coordinate.
    TypeC(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    TypeA(Vec<i64>),
    TypeC { a: Vec<i64>, k: i64 },
}

impl Weight {
    pub fn type_a(a: Vec<i64>) -> Weight {
        Weight::TypeA(a)
    }

    pub fn type_c(a: Vec<i64>, k: i64) -> Weight {
        Weight::TypeC { a, k }
    }

    pub fn zero(kind: RootDatumKind) -> Weight {
        match kind {
            RootDatumKind::TypeA(n) => Weight::TypeA(vec![0; n]),
            RootDatumKind::TypeC(m) => Weight::TypeC { a: vec![0; m], k: 0 },
        }
    }

    pub fn coords(&self) -> (&[i64], i64) {
        match self {
            Weight::TypeA(a) => (a, 0),
            Weight::TypeC { a, k } => (a, *k),
        }
    }

    /// Value pattern on the scalar subgroup; additive, zero on roots.
    pub fn degree(&self) -> i64 {
        let (a, k) = self.coords();
        a.iter().sum::<i64>() + 2 * k
    }

    pub fn to_json(&self) -> Value {
        match self {
            Weight::TypeA(a) => json!({"type": "A", "a": a}),
            Weight::TypeC { a, k } => json!({"type": "C", "a": a, "k": k}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Weight> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("weight must be a JSON object".into()))?;
        let ty = obj
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("weight needs a \"type\" of \"A\" or \"C\"".into()))?;
        let a: Vec<i64> = obj
            .get("a")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("weight needs an integer array \"a\"".into()))?
            .iter()
            .map(|x| {
                x.as_i64()
                    .ok_or_else(|| Error::Json("weight coordinates must be integers".into()))
            })
            .collect::<Result<_>>()?;
        match ty {
            "A" => Ok(Weight::TypeA(a)),
            "C" => {
                let k = obj
                    .get("k")
                    .and_then(Value::as_i64)
                    .ok_or_else(|| Error::Json("type C weight needs an integer \"k\"".into()))?;
                Ok(Weight::TypeC { a, k })
            }
            _ => Err(Error::Json(format!("unknown weight type {ty:?}"))),
        }
    }
}

/// A root in X(T) coordinates together with its coroot as a linear
/// functional on the a-part (the similitude coordinate never enters
/// pairings).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub a: Vec<i64>,
    pub k: i64,
    coroot: Vec<i64>,
}

impl Root {
    pub fn pairing(&self, weight_a: &[i64]) -> i64 {
        self.coroot
            .iter()
            .zip(weight_a)
            .map(|(c, w)| c * w)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub kind: RootDatumKind,
    simple: Vec<Root>,
    positive: Vec<Root>,
    two_rho: Vec<i64>,
}

fn basis_vec(m: usize, i: usize, v: i64) -> Vec<i64> {
    let mut out = vec![0; m];
    out[i] = v;
    out
}

impl RootDatum {
    pub fn type_a(n: usize) -> RootDatum {
        let mut simple = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut a = vec![0i64; n];
            a[i] = 1;
            a[i + 1] = -1;
            simple.push(Root { a: a.clone(), k: 0, coroot: a });
        }
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut a = vec![0i64; n];
                a[i] = 1;
                a[j] = -1;
                positive.push(Root { a: a.clone(), k: 0, coroot: a });
            }
        }
        let two_rho = sum_of_roots(&positive, n);
        RootDatum { kind: RootDatumKind::TypeA(n), simple, positive, two_rho }
    }

    pub fn type_c(m: usize) -> RootDatum {
        let mut simple = Vec::new();
        for i in 0..m.saturating_sub(1) {
            let mut a = vec![0i64; m];
            a[i] = 1;
            a[i + 1] = -1;
            simple.push(Root { a: a.clone(), k: 0, coroot: a });
        }
        // the long simple root 2e_m, k-part -1; its coroot pairs to a_m
        simple.push(Root {
            a: basis_vec(m, m - 1, 2),
            k: -1,
            coroot: basis_vec(m, m - 1, 1),
        });
        let mut positive = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let mut a = vec![0i64; m];
                a[i] = 1;
                a[j] = -1;
                positive.push(Root { a: a.clone(), k: 0, coroot: a });
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let mut a = vec![0i64; m];
                a[i] = 1;
                a[j] = 1;
                positive.push(Root { a: a.clone(), k: -1, coroot: a.clone() });
            }
        }
        for i in 0..m {
            positive.push(Root {
                a: basis_vec(m, i, 2),
                k: -1,
                coroot: basis_vec(m, i, 1),
            });
        }
        let two_rho = sum_of_roots(&positive, m);
        RootDatum { kind: RootDatumKind::TypeC(m), simple, positive, two_rho }
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// The doubled half-sum of positive roots (a-part only), kept doubled so
    /// all pairing arithmetic stays in the integers.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    pub fn rank(&self) -> usize {
        match self.kind {
            RootDatumKind::TypeA(n) => n,
            RootDatumKind::TypeC(m) => m,
        }
    }

    pub fn check_shape(&self, w: &Weight) -> Result<()> {
        let ok = match (self.kind, w) {
            (RootDatumKind::TypeA(n), Weight::TypeA(a)) => a.len() == n,
            (RootDatumKind::TypeC(m), Weight::TypeC { a, .. }) => a.len() == m,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "weight {:?} does not match root datum {:?}",
                w, self.kind
            )))
        }
    }
}

fn sum_of_roots(roots: &[Root], m: usize) -> Vec<i64> {
    let mut acc = vec![0i64; m];
    for r in roots {
        for (x, y) in acc.iter_mut().zip(&r.a) {
            *x += y;
        }
    }
    acc
}

/// All simple-coroot pairings nonnegative. Type A: a non-increasing vector;
/// type C: a non-increasing vector with a_m >= 0 (k is invisible to
/// coroots).
pub fn is_dominant(rd: &RootDatum, w: &Weight) -> Result<bool> {
    rd.check_shape(w)?;
    let (a, _) = w.coords();
    Ok(rd.simple.iter().all(|alpha| alpha.pairing(a) >= 0))
}

/// Coefficients of delta in the simple-root basis, when delta lies in the
/// integer span; the expansion is unique because the simple roots extended
/// by the degree functional are linearly independent.
fn simple_root_expansion(rd: &RootDatum, delta_a: &[i64], delta_k: i64) -> Option<Vec<i64>> {
    match rd.kind {
        RootDatumKind::TypeA(n) => {
            if delta_k != 0 || delta_a.iter().sum::<i64>() != 0 {
                return None;
            }
            // partial sums
            let mut coeffs = Vec::with_capacity(n.saturating_sub(1));
            let mut acc = 0;
            for d in &delta_a[..n.saturating_sub(1)] {
                acc += d;
                coeffs.push(acc);
            }
            Some(coeffs)
        }
        RootDatumKind::TypeC(m) => {
            let c_last = -delta_k;
            if m == 1 {
                if delta_a[0] == 2 * c_last {
                    return Some(vec![c_last]);
                }
                return None;
            }
            let mut coeffs = vec![0i64; m];
            coeffs[m - 1] = c_last;
            coeffs[0] = delta_a[0];
            for i in 1..m - 1 {
                coeffs[i] = coeffs[i - 1] + delta_a[i];
            }
            if delta_a[m - 1] == 2 * c_last - coeffs[m - 2] {
                Some(coeffs)
            } else {
                None
            }
        }
    }
}

/// lambda <= mu in the dominance order: mu - lambda is a nonnegative
/// integer combination of simple roots (equivalently of positive roots).
pub fn dominance_leq(rd: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<bool> {
    rd.check_shape(lambda)?;
    rd.check_shape(mu)?;
    let (la, lk) = lambda.coords();
    let (ma, mk) = mu.coords();
    let delta_a: Vec<i64> = ma.iter().zip(la).map(|(m, l)| m - l).collect();
    let delta_k = mk - lk;
    Ok(simple_root_expansion(rd, &delta_a, delta_k)
        .map_or(false, |coeffs| coeffs.iter().all(|&c| c >= 0)))
}

/// Root datum of the unit group attached to a monoid spec.
pub fn root_datum_for(spec: &MonoidSpec) -> Result<RootDatum> {
    match spec.kind {
        MonoidKind::Full => Ok(RootDatum::type_a(spec.n)),
        MonoidKind::Symplectic => Ok(RootDatum::type_c(spec.n / 2)),
        MonoidKind::Orthogonal => Err(Error::UnsupportedKind(
            "orthogonal weight combinatorics is not supported \
             (the orthogonal monoid is reducible or non-normal)"
                .into(),
        )),
    }
}

/// Membership in the weight monoid X(D) of the diagonal torus closure.
/// Full kind: all coordinates nonnegative. Symplectic: expressible in the
/// diagonal-entry generators, which reduces to k >= sum of max(0, -a_i)
/// (and nonnegative degree, which that implies).
pub fn xd_contains(spec: &MonoidSpec, w: &Weight) -> Result<bool> {
    let rd = root_datum_for(spec)?;
    rd.check_shape(w)?;
    match spec.kind {
        MonoidKind::Full => {
            let (a, _) = w.coords();
            Ok(a.iter().all(|&x| x >= 0))
        }
        MonoidKind::Symplectic => {
            let (a, k) = w.coords();
            let need: i64 = a.iter().map(|&x| (-x).max(0)).sum();
            Ok(k >= need && w.degree() >= 0)
        }
        MonoidKind::Orthogonal => unreachable!("rejected by root_datum_for"),
    }
}

/// Partitions of `d` into at most `parts` parts, in descending
/// lexicographic order, each padded with zeros to length `parts`.
pub(crate) fn partitions_at_most(d: i64, parts: usize) -> Vec<Vec<i64>> {
    fn rec(d: i64, parts: usize, max_first: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if d == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for first in (1..=d.min(max_first)).rev() {
            prefix.push(first);
            rec(d - first, parts - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    rec(d, parts, d, &mut Vec::new(), &mut out);
    for p in &mut out {
        p.resize(parts, 0);
    }
    out
}

/// All dominant X(D) weights of the given degree, deterministically ordered
/// (full kind: partitions in descending lex; symplectic: ascending k, then
/// descending lex on the partition part).
pub fn xd_dominant_enumerate(spec: &MonoidSpec, degree: u32) -> Result<Vec<Weight>> {
    let rd = root_datum_for(spec)?;
    let d = degree as i64;
    let out = match rd.kind {
        RootDatumKind::TypeA(n) => partitions_at_most(d, n)
            .into_iter()
            .map(Weight::TypeA)
            .collect(),
        RootDatumKind::TypeC(m) => {
            let mut out = Vec::new();
            for k in 0..=d / 2 {
                for p in partitions_at_most(d - 2 * k, m) {
                    out.push(Weight::TypeC { a: p, k });
                }
            }
            out
        }
    };
    Ok(out)
}

/// All dominant weights lambda with lambda <= mu (same degree), found by a
/// bounded search of the degree slice.
pub fn dominant_predecessors(rd: &RootDatum, mu: &Weight) -> Result<Vec<Weight>> {
    rd.check_shape(mu)?;
    if !is_dominant(rd, mu)? {
        return Err(Error::NotDominant(format!("{mu:?}")));
    }
    let mut out = Vec::new();
    match rd.kind {
        RootDatumKind::TypeA(n) => {
            let (ma, _) = mu.coords();
            let hi = *ma.iter().max().unwrap();
            let lo = *ma.iter().min().unwrap();
            let degree: i64 = ma.iter().sum();
            // non-increasing candidates with entries in [lo, hi]
            fn rec(
                n: usize,
                lo: i64,
                cap: i64,
                remaining: i64,
                prefix: &mut Vec<i64>,
                out: &mut Vec<Vec<i64>>,
            ) {
                if prefix.len() == n {
                    if remaining == 0 {
                        out.push(prefix.clone());
                    }
                    return;
                }
                let slots_left = (n - prefix.len() - 1) as i64;
                for v in (lo..=cap).rev() {
                    let rest = remaining - v;
                    if rest < slots_left * lo || rest > slots_left * v {
                        continue;
                    }
                    prefix.push(v);
                    rec(n, lo, v, rest, prefix, out);
                    prefix.pop();
                }
            }
            let mut cands = Vec::new();
            rec(n, lo, hi, degree, &mut Vec::new(), &mut cands);
            for c in cands {
                let w = Weight::TypeA(c);
                if dominance_leq(rd, &w, mu)? {
                    out.push(w);
                }
            }
        }
        RootDatumKind::TypeC(m) => {
            let (ma, mk) = mu.coords();
            let sum: i64 = ma.iter().sum();
            // each subtracted positive root moves 2 units of a-sum into k
            for t in 0..=sum / 2 {
                for p in partitions_at_most(sum - 2 * t, m) {
                    let w = Weight::TypeC { a: p, k: mk + t };
                    if dominance_leq(rd, &w, mu)? {
                        out.push(w);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Predecessor-closedness of a finite set of dominant weights.
pub fn is_saturated(rd: &RootDatum, pi: &[Weight]) -> Result<bool> {
    for w in pi {
        if !is_dominant(rd, w)? {
            return Err(Error::NotDominant(format!("{w:?}")));
        }
    }
    for mu in pi {
        for lambda in dominant_predecessors(rd, mu)? {
            if !pi.contains(&lambda) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Brute-force check that the degree-d slice of X(D)^+ is predecessor
/// closed in the dominance order of X(T)^+.
pub fn check_xd_plus_saturated(spec: &MonoidSpec, degree: u32) -> Result<bool> {
    let rd = root_datum_for(spec)?;
    let slice = xd_dominant_enumerate(spec, degree)?;
    for mu in &slice {
        for lambda in dominant_predecessors(&rd, mu)? {
            if !xd_contains(spec, &lambda)? || !slice.contains(&lambda) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Restriction of a multiplicity vector to the index set pi; keys outside
/// pi are kept with multiplicity zero.
pub fn truncate_multiplicities(
    pi: &[Weight],
    mult: &BTreeMap<Weight, u64>,
) -> BTreeMap<Weight, u64> {
    mult.iter()
        .map(|(w, &m)| (w.clone(), if pi.contains(w) { m } else { 0 }))
        .collect()
}

pub fn weight_set_to_json(ws: &[Weight]) -> Value {
    Value::Array(ws.iter().map(Weight::to_json).collect())
}

pub fn mult_map_to_json(map: &BTreeMap<Weight, u64>) -> Value {
    Value::Array(
        map.iter()
            .map(|(w, m)| json!({"weight": w.to_json(), "mult": m}))
            .collect(),
    )
}

pub fn mult_map_from_json(v: &Value) -> Result<BTreeMap<Weight, u64>> {
    let mut out = BTreeMap::new();
    for item in v
        .as_array()
        .ok_or_else(|| Error::Json("expected an array of {weight, mult}".into()))?
    {
        let w = Weight::from_json(
            item.get("weight")
                .ok_or_else(|| Error::Json("entry needs a \"weight\"".into()))?,
        )?;
        let m = item
            .get("mult")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("entry needs a nonnegative \"mult\"".into()))?;
        out.insert(w, m);
    }
    Ok(out)
}

pub fn weight_set_from_json(v: &Value) -> Result<Vec<Weight>> {
    v.as_array()
        .ok_or_else(|| Error::Json("expected a JSON array of weights".into()))?
        .iter()
        .map(Weight::from_json)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Field, Matrix, Scalar};

    const Q: Field = Field::Rational;

    fn full(n: usize) -> MonoidSpec {
        MonoidSpec::new(MonoidKind::Full, n, Q).unwrap()
    }

    fn symplectic(n: usize) -> MonoidSpec {
        MonoidSpec::new(MonoidKind::Symplectic, n, Q).unwrap()
    }

    #[test]
    fn simple_roots_are_independent_and_cartan_is_right() {
        for rd in [RootDatum::type_a(4), RootDatum::type_c(3)] {
            let rows: Vec<Vec<Scalar>> = rd
                .simple_roots()
                .iter()
                .map(|r| {
                    let mut v: Vec<i64> = r.a.clone();
                    v.push(r.k);
                    v.into_iter().map(|x| Scalar::from_integer(Q, x)).collect()
                })
                .collect();
            let m = Matrix::from_fn(rows.len(), rows[0].len(), Q, |i, j| rows[i][j].clone());
            assert_eq!(m.rank(), rd.simple_roots().len());
        }
        // Cartan matrix of C_2: [[2, -1], [-2, 2]] in (row = alpha_j paired
        // against coroot of alpha_i) convention <alpha_j, alpha_i^vee>
        let rd = RootDatum::type_c(2);
        let alpha = rd.simple_roots();
        assert_eq!(alpha[0].pairing(&alpha[0].a), 2);
        assert_eq!(alpha[1].pairing(&alpha[0].a), -1); // <alpha_1, alpha_2^vee>
        assert_eq!(alpha[0].pairing(&alpha[1].a), -2); // <alpha_2, alpha_1^vee>
        assert_eq!(alpha[1].pairing(&alpha[1].a), 2);
    }

    #[test]
    fn positive_roots_have_degree_zero_and_positive_expansion() {
        for rd in [RootDatum::type_a(4), RootDatum::type_c(3)] {
            for root in rd.positive_roots() {
                let degree: i64 = root.a.iter().sum::<i64>() + 2 * root.k;
                assert_eq!(degree, 0, "root {root:?} must have degree 0");
                let coeffs = simple_root_expansion(&rd, &root.a, root.k)
                    .expect("positive root expands in simple roots");
                assert!(coeffs.iter().all(|&c| c >= 0));
            }
        }
    }

    #[test]
    fn dominance_examples_type_a() {
        let rd = RootDatum::type_a(2);
        let w = |a: &[i64]| Weight::TypeA(a.to_vec());
        assert!(is_dominant(&rd, &w(&[2, 0])).unwrap());
        assert!(!is_dominant(&rd, &w(&[0, 2])).unwrap());
        assert!(dominance_leq(&rd, &w(&[1, 1]), &w(&[2, 0])).unwrap());
        assert!(!dominance_leq(&rd, &w(&[2, 0]), &w(&[1, 1])).unwrap());
        // different degree is never comparable
        assert!(!dominance_leq(&rd, &w(&[1, 0]), &w(&[2, 0])).unwrap());
    }

    #[test]
    fn dominance_examples_type_c() {
        let rd = RootDatum::type_c(2);
        // k is invisible to coroots
        for k in -3..=3 {
            assert!(is_dominant(&rd, &Weight::type_c(vec![1, 1], k)).unwrap());
        }
        assert!(!is_dominant(&rd, &Weight::type_c(vec![1, 2], 0)).unwrap());
        assert!(!is_dominant(&rd, &Weight::type_c(vec![1, -1], 0)).unwrap());
        // (0,0;1) <= (2,0;0): difference is alpha_1 + ... with coefficients (2, 1)
        assert!(dominance_leq(
            &rd,
            &Weight::type_c(vec![0, 0], 1),
            &Weight::type_c(vec![2, 0], 0)
        )
        .unwrap());
        assert!(!dominance_leq(
            &rd,
            &Weight::type_c(vec![2, 0], 0),
            &Weight::type_c(vec![0, 0], 1)
        )
        .unwrap());
    }

    #[test]
    fn xd_membership() {
        let spec = full(2);
        assert!(xd_contains(&spec, &Weight::type_a(vec![3, 1])).unwrap());
        assert!(!xd_contains(&spec, &Weight::type_a(vec![-1, 2])).unwrap());

        let spec = symplectic(4);
        assert!(xd_contains(&spec, &Weight::type_c(vec![1, 0], 0)).unwrap());
        assert!(!xd_contains(&spec, &Weight::type_c(vec![-1, 0], 0)).unwrap());
        assert!(xd_contains(&spec, &Weight::type_c(vec![-1, 0], 1)).unwrap());

        let orth = MonoidSpec::new(MonoidKind::Orthogonal, 4, Q).unwrap();
        assert!(matches!(
            xd_contains(&orth, &Weight::type_c(vec![1, 0], 0)),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn xd_membership_matches_generator_enumeration() {
        // brute force over nonnegative generator combinations on a box
        let spec = symplectic(4);
        let m = 2usize;
        // generator coefficients up to 10 cover every weight in the tested
        // box (|a_i| <= 3, k <= 6 needs p_i = a_i + q_i <= 9)
        let max_coef = 10i64;
        let mut reachable = std::collections::BTreeSet::new();
        // coefficients p_i for eps_i = (e_i; 0), q_i for eps_{i'} = (-e_i; 1)
        for p1 in 0..=max_coef {
            for p2 in 0..=max_coef {
                for q1 in 0..=max_coef {
                    for q2 in 0..=max_coef {
                        let a = vec![p1 - q1, p2 - q2];
                        let k = q1 + q2;
                        reachable.insert((a, k));
                    }
                }
            }
        }
        for a1 in -3..=3 {
            for a2 in -3..=3 {
                for k in 0..=6i64 {
                    let w = Weight::type_c(vec![a1, a2], k);
                    let closed_form = xd_contains(&spec, &w).unwrap();
                    let brute = reachable.contains(&(vec![a1, a2], k));
                    assert_eq!(closed_form, brute, "mismatch at ({a1},{a2};{k}) m={m}");
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let spec = full(2);
        assert_eq!(
            xd_dominant_enumerate(&spec, 2).unwrap(),
            vec![Weight::type_a(vec![2, 0]), Weight::type_a(vec![1, 1])]
        );
        let spec = symplectic(4);
        assert_eq!(
            xd_dominant_enumerate(&spec, 2).unwrap(),
            vec![
                Weight::type_c(vec![2, 0], 0),
                Weight::type_c(vec![1, 1], 0),
                Weight::type_c(vec![0, 0], 1)
            ]
        );
        assert_eq!(
            xd_dominant_enumerate(&spec, 0).unwrap(),
            vec![Weight::type_c(vec![0, 0], 0)]
        );
    }

    #[test]
    fn enumerate_agrees_with_brute_force_scan() {
        // scan the degree slice within the coordinate box |a_i| <= d, k <= d
        let spec = symplectic(4);
        let rd = root_datum_for(&spec).unwrap();
        for d in 0..=4u32 {
            let listed = xd_dominant_enumerate(&spec, d).unwrap();
            let mut brute = Vec::new();
            for a1 in -(d as i64)..=d as i64 {
                for a2 in -(d as i64)..=d as i64 {
                    for k in 0..=d as i64 {
                        let w = Weight::type_c(vec![a1, a2], k);
                        if w.degree() == d as i64
                            && is_dominant(&rd, &w).unwrap()
                            && xd_contains(&spec, &w).unwrap()
                        {
                            brute.push(w);
                        }
                    }
                }
            }
            assert_eq!(listed.len(), brute.len(), "degree {d}");
            for w in &brute {
                assert!(listed.contains(w));
            }
            // no duplicates, all dominant members
            let set: std::collections::BTreeSet<_> = listed.iter().collect();
            assert_eq!(set.len(), listed.len());
        }
    }

    #[test]
    fn predecessors_examples() {
        let rd = RootDatum::type_a(2);
        assert_eq!(
            dominant_predecessors(&rd, &Weight::type_a(vec![2, 0])).unwrap(),
            vec![Weight::type_a(vec![2, 0]), Weight::type_a(vec![1, 1])]
        );
        let rd = RootDatum::type_a(3);
        assert_eq!(
            dominant_predecessors(&rd, &Weight::type_a(vec![1, 1, 1])).unwrap(),
            vec![Weight::type_a(vec![1, 1, 1])]
        );
        let rd = RootDatum::type_c(2);
        assert_eq!(
            dominant_predecessors(&rd, &Weight::type_c(vec![2, 0], 0)).unwrap(),
            vec![
                Weight::type_c(vec![2, 0], 0),
                Weight::type_c(vec![1, 1], 0),
                Weight::type_c(vec![0, 0], 1)
            ]
        );
        // GL weights with negative entries work too
        let rd = RootDatum::type_a(2);
        assert_eq!(
            dominant_predecessors(&rd, &Weight::type_a(vec![1, -1])).unwrap(),
            vec![Weight::type_a(vec![1, -1]), Weight::type_a(vec![0, 0])]
        );
        assert!(matches!(
            dominant_predecessors(&rd, &Weight::type_a(vec![0, 2])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn saturation_examples() {
        let rd = RootDatum::type_a(2);
        let both = vec![Weight::type_a(vec![2, 0]), Weight::type_a(vec![1, 1])];
        assert!(is_saturated(&rd, &both).unwrap());
        assert!(!is_saturated(&rd, &both[..1].to_vec()).unwrap());

        let rd = RootDatum::type_c(2);
        let slice = vec![
            Weight::type_c(vec![2, 0], 0),
            Weight::type_c(vec![1, 1], 0),
            Weight::type_c(vec![0, 0], 1),
        ];
        assert!(is_saturated(&rd, &slice).unwrap());
    }

    #[test]
    fn xd_plus_is_saturated_at_desk_scale() {
        for d in 0..=6u32 {
            assert!(check_xd_plus_saturated(&full(1), d).unwrap());
            assert!(check_xd_plus_saturated(&full(3), d).unwrap());
        }
        for d in 0..=4u32 {
            assert!(check_xd_plus_saturated(&symplectic(4), d).unwrap());
        }
    }

    #[test]
    fn dominance_is_a_partial_order_on_slices() {
        let spec = symplectic(4);
        let rd = root_datum_for(&spec).unwrap();
        let slice = xd_dominant_enumerate(&spec, 4).unwrap();
        assert!(slice.len() <= 50);
        for x in &slice {
            assert!(dominance_leq(&rd, x, x).unwrap());
            for y in &slice {
                let xy = dominance_leq(&rd, x, y).unwrap();
                let yx = dominance_leq(&rd, y, x).unwrap();
                if xy && yx {
                    assert_eq!(x, y);
                }
                if xy {
                    assert_eq!(x.degree(), y.degree());
                }
                for z in &slice {
                    if xy && dominance_leq(&rd, y, z).unwrap() {
                        assert!(dominance_leq(&rd, x, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn xd_is_additively_closed_and_saturated_as_a_monoid() {
        let spec = symplectic(4);
        let box_weights: Vec<Weight> = (-2..=2)
            .flat_map(|a1| {
                (-2..=2).flat_map(move |a2| (0..=4).map(move |k| Weight::type_c(vec![a1, a2], k)))
            })
            .collect();
        for x in &box_weights {
            for y in &box_weights {
                if xd_contains(&spec, x).unwrap() && xd_contains(&spec, y).unwrap() {
                    let (xa, xk) = x.coords();
                    let (ya, yk) = y.coords();
                    let sum = Weight::type_c(
                        xa.iter().zip(ya).map(|(p, q)| p + q).collect(),
                        xk + yk,
                    );
                    assert!(xd_contains(&spec, &sum).unwrap());
                }
            }
        }
        // monoid saturation: N*lambda in X(D) for some N >= 1 forces lambda in X(D)
        for w in &box_weights {
            for n in 1..=3i64 {
                let (a, k) = w.coords();
                let scaled = Weight::type_c(a.iter().map(|x| n * x).collect(), n * k);
                if xd_contains(&spec, &scaled).unwrap() && !xd_contains(&spec, w).unwrap() {
                    panic!("saturation fails at {w:?} with N = {n}");
                }
            }
        }
    }

    #[test]
    fn truncation() {
        let w1 = Weight::type_a(vec![2, 0]);
        let w2 = Weight::type_a(vec![1, 1]);
        let mut mult = BTreeMap::new();
        mult.insert(w1.clone(), 3u64);
        mult.insert(w2.clone(), 1u64);
        let all = truncate_multiplicities(&[w1.clone(), w2.clone()], &mult);
        assert_eq!(all, mult);
        let none = truncate_multiplicities(&[], &mult);
        assert!(none.values().all(|&m| m == 0));
        let only_first = truncate_multiplicities(&[w1.clone()], &mult);
        assert_eq!(only_first[&w1], 3);
        assert_eq!(only_first[&w2], 0);
    }

    #[test]
    fn weight_json_roundtrip() {
        for w in [
            Weight::type_a(vec![3, 1, 0]),
            Weight::type_c(vec![2, 1], -1),
        ] {
            assert_eq!(Weight::from_json(&w.to_json()).unwrap(), w);
        }
        assert!(Weight::from_json(&json!({"type": "B", "a": [1]})).is_err());
        assert!(Weight::from_json(&json!({"type": "C", "a": [1]})).is_err());
    }
}
