//! Membership, similitude factors, idempotents of the torus closure, and
//! G x G orbit classification for the full, orthogonal and symplectic
//! matrix monoids.
//!
//! A matrix A belongs to the orthogonal/symplectic monoid exactly when
//! A^T J A = cJ = A J A^T for a single scalar c (possibly zero). Units are
//! the members with c != 0; the full monoid contains every matrix.

mod sample;
mod witness;

pub use sample::{sample_member, sample_unit, sample_unit_in_component, UnitComponent};
pub use witness::{orbit_witness, OrbitWitness};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar};
use crate::forms::{check_form_constraints, gram_matrix, FormKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoidKind {
    Full,
    Orthogonal,
    Symplectic,
}

impl MonoidKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MonoidKind::Full => "full",
            MonoidKind::Orthogonal => "orthogonal",
            MonoidKind::Symplectic => "symplectic",
        }
    }

    pub fn parse(s: &str) -> Result<MonoidKind> {
        match s {
            "full" => Ok(MonoidKind::Full),
            "orthogonal" => Ok(MonoidKind::Orthogonal),
            "symplectic" => Ok(MonoidKind::Symplectic),
            _ => Err(Error::Constraint(format!(
                "unknown kind {s:?} (expected full, orthogonal or symplectic)"
            ))),
        }
    }

    fn form_kind(&self) -> Option<FormKind> {
        match self {
            MonoidKind::Full => None,
            MonoidKind::Orthogonal => Some(FormKind::Orthogonal),
            MonoidKind::Symplectic => Some(FormKind::Symplectic),
        }
    }
}

/// Which monoid M inside the n x n matrices is meant, and over which field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidSpec {
    pub kind: MonoidKind,
    pub n: usize,
    pub field: Field,
}

impl MonoidSpec {
    pub fn new(kind: MonoidKind, n: usize, field: Field) -> Result<MonoidSpec> {
        if n == 0 {
            return Err(Error::Constraint("monoid size n must be positive".into()));
        }
        if let Some(fk) = kind.form_kind() {
            check_form_constraints(fk, n, field)?;
        }
        Ok(MonoidSpec { kind, n, field })
    }

    /// The Gram matrix J for the form kinds; `None` for the full monoid.
    pub fn gram(&self) -> Option<Matrix> {
        self.kind
            .form_kind()
            .map(|fk| gram_matrix(fk, self.n, self.field).expect("validated at construction"))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "n": self.n,
            "field": self.field.to_string(),
        })
    }

    fn check_shape(&self, a: &Matrix) -> Result<()> {
        if a.rows() != self.n || a.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "expected a {0}x{0} matrix, got {1}x{2}",
                self.n,
                a.rows(),
                a.cols()
            )));
        }
        if a.field() != self.field {
            return Err(Error::FieldMismatch(self.field, a.field()));
        }
        Ok(())
    }
}

/// G x G orbit label: a unit component, or a singular orbit indexed by rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitClass {
    Unit { component: i8 },
    Singular { rank: usize },
}

impl OrbitClass {
    pub fn to_json(&self) -> Value {
        match self {
            OrbitClass::Unit { component } => json!({"class": "unit", "component": component}),
            OrbitClass::Singular { rank } => json!({"class": "singular", "rank": rank}),
        }
    }
}

/// The unique c with A^T J A = cJ = A J A^T, if both equations hold for a
/// common scalar; `None` otherwise. c = 0 is a legal value (the singular
/// part of the monoid); uniqueness follows from J being invertible.
pub fn similitude_factor(spec: &MonoidSpec, a: &Matrix) -> Result<Option<Scalar>> {
    spec.check_shape(a)?;
    let Some(j) = spec.gram() else {
        return Err(Error::UnsupportedKind(
            "full kind has no similitude factor".into(),
        ));
    };
    let n = spec.n;
    let at = a.transpose();
    let lhs = at.mul(&j)?.mul(a)?;
    // J_{1,n} = 1 for both kinds, so the candidate c can be read off directly.
    let c = lhs.get(0, n - 1).clone();
    let cj = j.scale(&c);
    if lhs != cj {
        return Ok(None);
    }
    let rhs = a.mul(&j)?.mul(&at)?;
    if rhs != cj {
        return Ok(None);
    }
    Ok(Some(c))
}

pub fn is_member(spec: &MonoidSpec, a: &Matrix) -> Result<bool> {
    spec.check_shape(a)?;
    match spec.kind {
        MonoidKind::Full => Ok(true),
        _ => Ok(similitude_factor(spec, a)?.is_some()),
    }
}

/// Member with invertible similitude factor (full kind: invertible matrix);
/// equivalently, A lies in GL_n, GO_n or GSp_n.
pub fn is_unit(spec: &MonoidSpec, a: &Matrix) -> Result<bool> {
    spec.check_shape(a)?;
    match spec.kind {
        MonoidKind::Full => Ok(!a.det()?.is_zero()),
        _ => Ok(similitude_factor(spec, a)?.map_or(false, |c| !c.is_zero())),
    }
}

/// Index pairing i <-> i' = n+1-i, 0-based: i <-> n-1-i.
pub(crate) fn paired(n: usize, i: usize) -> usize {
    n - 1 - i
}

/// All diagonal 0/1 idempotents of the torus closure: every subset for the
/// full monoid; the pair-avoiding subsets (S with S meeting no {i, i'}) plus
/// the identity for the form kinds. Ordered by cardinality, then
/// lexicographically on the support; identity last.
pub fn idempotents_in_torus_closure(spec: &MonoidSpec) -> Vec<Matrix> {
    let n = spec.n;
    let mut supports: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        match spec.kind {
            MonoidKind::Full => supports.push(s),
            _ => {
                let pair_avoiding = s.iter().all(|&i| mask >> paired(n, i) & 1 == 0);
                if pair_avoiding {
                    supports.push(s);
                }
            }
        }
    }
    supports.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut out: Vec<Matrix> = supports
        .iter()
        .map(|s| support_idempotent(spec, s))
        .collect();
    if spec.kind != MonoidKind::Full {
        out.push(Matrix::identity(n, spec.field));
    }
    out
}

/// The diagonal 0/1 matrix e_S supported on `support` (0-based indices).
pub fn support_idempotent(spec: &MonoidSpec, support: &[usize]) -> Matrix {
    let field = spec.field;
    Matrix::from_fn(spec.n, spec.n, field, |i, j| {
        if i == j && support.contains(&i) {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    })
}

/// Whether a diagonal matrix lies in the closure of the diagonal torus:
/// always for the full kind, and exactly when all products d_i * d_{i'}
/// agree for the form kinds (their common value is the similitude factor).
pub fn torus_closure_contains(spec: &MonoidSpec, d: &Matrix) -> Result<bool> {
    spec.check_shape(d)?;
    if !d.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    if spec.kind == MonoidKind::Full {
        return Ok(true);
    }
    let n = spec.n;
    let first = d.get(0, 0).mul(d.get(paired(n, 0), paired(n, 0)));
    for i in 1..n {
        if d.get(i, i).mul(d.get(paired(n, i), paired(n, i))) != first {
            return Ok(false);
        }
    }
    Ok(true)
}

/// G x G orbit of a member: units split into components (orthogonal kind,
/// even n: det A = +/- c^{n/2}); singular members are classified by rank.
pub fn classify_orbit(spec: &MonoidSpec, a: &Matrix) -> Result<OrbitClass> {
    spec.check_shape(a)?;
    match spec.kind {
        MonoidKind::Full => {
            if a.det()?.is_zero() {
                Ok(OrbitClass::Singular { rank: a.rank() })
            } else {
                Ok(OrbitClass::Unit { component: 1 })
            }
        }
        kind => {
            let Some(c) = similitude_factor(spec, a)? else {
                return Err(Error::NotMember(format!(
                    "{} monoid of size {}",
                    kind.as_str(),
                    spec.n
                )));
            };
            if c.is_zero() {
                return Ok(OrbitClass::Singular { rank: a.rank() });
            }
            if kind == MonoidKind::Orthogonal && spec.n % 2 == 0 {
                let m = spec.n / 2;
                let mut c_pow = Scalar::one(spec.field);
                for _ in 0..m {
                    c_pow = c_pow.mul(&c);
                }
                let det = a.det()?;
                if det == c_pow {
                    Ok(OrbitClass::Unit { component: 1 })
                } else if det == c_pow.neg() {
                    Ok(OrbitClass::Unit { component: -1 })
                } else {
                    unreachable!("orthogonal unit with det^2 != c^n");
                }
            } else {
                // GSp and odd-dimension GO are connected.
                Ok(OrbitClass::Unit { component: 1 })
            }
        }
    }
}
