//! The classified noncommutative solvable Lie algebras of dimension up to 4,
//! with parameter admissibility conditions, and the closed-form component
//! structure of their commuting graphs: predicted counts, explicit vertex-set
//! generators, and per-component shapes.
//!
//! Family names follow the standard classification labels N2, N3_1, ...,
//! N4_13. Parameters are field elements; a family together with a parameter
//! tuple and a field pins down one algebra.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Felt, FieldError, FieldRef};
use crate::graph::VertexIndexer;
use crate::lie::{LieAlgebra, LieError};
use crate::linalg::{Subspace, Vector};
use crate::shape::ShapeSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("{id}: condition violated: {reason}")]
    ConditionViolated { id: String, reason: String },
    #[error("{id}: unsatisfiable over every finite field: {reason}")]
    UnsatisfiableOverFiniteField { id: String, reason: String },
    #[error("{family} takes {expected} parameter(s), got {got}")]
    WrongParamCount { family: &'static str, expected: usize, got: usize },
    #[error("unknown algebra family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    LinAlg(#[from] crate::linalg::LinAlgError),
}

/// One row of the classification: a family of algebras sharing a bracket
/// pattern, possibly depending on one or two field parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    N2,
    N3_1,
    N3_2,
    N3_3,
    N4_1,
    N4_2,
    N4_3,
    N4_4,
    N4_5,
    N4_6,
    N4_7,
    N4_8,
    N4_9,
    N4_10,
    N4_11,
    N4_12,
    N4_13,
}

impl Family {
    pub const ALL: [Family; 17] = [
        Family::N2,
        Family::N3_1,
        Family::N3_2,
        Family::N3_3,
        Family::N4_1,
        Family::N4_2,
        Family::N4_3,
        Family::N4_4,
        Family::N4_5,
        Family::N4_6,
        Family::N4_7,
        Family::N4_8,
        Family::N4_9,
        Family::N4_10,
        Family::N4_11,
        Family::N4_12,
        Family::N4_13,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::N2 => "N2",
            Family::N3_1 => "N3_1",
            Family::N3_2 => "N3_2",
            Family::N3_3 => "N3_3",
            Family::N4_1 => "N4_1",
            Family::N4_2 => "N4_2",
            Family::N4_3 => "N4_3",
            Family::N4_4 => "N4_4",
            Family::N4_5 => "N4_5",
            Family::N4_6 => "N4_6",
            Family::N4_7 => "N4_7",
            Family::N4_8 => "N4_8",
            Family::N4_9 => "N4_9",
            Family::N4_10 => "N4_10",
            Family::N4_11 => "N4_11",
            Family::N4_12 => "N4_12",
            Family::N4_13 => "N4_13",
        }
    }

    pub fn parse(s: &str) -> Result<Family, CatalogError> {
        let up = s.trim().to_uppercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == up)
            .ok_or_else(|| CatalogError::UnknownFamily(s.to_string()))
    }

    pub fn dim(self) -> usize {
        match self {
            Family::N2 => 2,
            Family::N3_1 | Family::N3_2 | Family::N3_3 => 3,
            _ => 4,
        }
    }

    pub fn param_count(self) -> usize {
        match self {
            Family::N3_2 | Family::N3_3 | Family::N4_2 | Family::N4_8 | Family::N4_9
            | Family::N4_12 | Family::N4_13 => 1,
            Family::N4_5 | Family::N4_6 | Family::N4_10 => 2,
            _ => 0,
        }
    }

    /// Human-readable bracket relations, for listings.
    pub fn brackets_text(self) -> &'static str {
        match self {
            Family::N2 => "[e1,e2]=e1",
            Family::N3_1 => "[e3,e1]=e1, [e3,e2]=e2",
            Family::N3_2 => "[e3,e1]=e2, [e3,e2]=a*e1+e2",
            Family::N3_3 => "[e3,e1]=e2, [e3,e2]=a*e1",
            Family::N4_1 => "[e4,e1]=e1, [e4,e2]=e2, [e4,e3]=e3",
            Family::N4_2 => "[e4,e1]=e1, [e4,e2]=e3, [e4,e3]=-a*e2+(a+1)*e3",
            Family::N4_3 => "[e4,e2]=e3, [e4,e3]=e3",
            Family::N4_4 => "[e4,e2]=e3",
            Family::N4_5 => "[e4,e1]=e2, [e4,e2]=e3, [e4,e3]=a*e1+b*e2+e3",
            Family::N4_6 => "[e4,e1]=e2, [e4,e2]=e3, [e4,e3]=a*e1+b*e2",
            Family::N4_7 => "[e1,e2]=e2, [e3,e4]=e4",
            Family::N4_8 => "[e4,e1]=e1+a*e2, [e4,e2]=e1, [e3,e1]=e1, [e3,e2]=e2",
            Family::N4_9 => "[e4,e1]=e2, [e4,e2]=a*e1, [e3,e1]=e1, [e3,e2]=e2",
            Family::N4_10 => "[e4,e1]=e1, [e3,e1]=e2, [e3,e2]=a*e1, [e4,e2]=b*e2, [e4,e3]=(1+b)*e3",
            Family::N4_11 => "[e4,e1]=e1, [e3,e1]=e2, [e4,e2]=2*e2, [e4,e3]=e3",
            Family::N4_12 => "[e3,e1]=e2, [e4,e1]=e1+a*e3, [e4,e2]=e2, [e4,e3]=e1",
            Family::N4_13 => "[e3,e1]=e2, [e4,e1]=a*e3, [e4,e3]=e1",
        }
    }

    /// Side conditions on the parameters, for listings.
    pub fn conditions_text(self) -> &'static str {
        match self {
            Family::N3_2 | Family::N3_3 | Family::N4_2 | Family::N4_5 | Family::N4_6 => {
                "parameters arbitrary"
            }
            Family::N4_8 => "T^2 - T - a must have no root",
            Family::N4_9 => "char = 2 and a not a square (no finite field qualifies)",
            Family::N4_10 => "char = 2, a != 0, b != 1",
            Family::N4_12 | Family::N4_13 => "a != 0",
            _ => "none",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete catalog algebra: family plus parameter tuple (alpha, then
/// beta), as elements of the target field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraId {
    pub family: Family,
    pub params: Vec<Felt>,
}

impl AlgebraId {
    pub fn new(family: Family, params: Vec<Felt>) -> Self {
        Self { family, params }
    }

    pub fn plain(family: Family) -> Self {
        Self { family, params: Vec::new() }
    }

    pub fn alpha(&self) -> Option<Felt> {
        self.params.first().copied()
    }

    pub fn beta(&self) -> Option<Felt> {
        self.params.get(1).copied()
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params.as_slice() {
            [] => write!(f, "{}", self.family),
            [a] => write!(f, "{}(alpha={})", self.family, a),
            [a, b] => write!(f, "{}(alpha={}, beta={})", self.family, a, b),
            _ => write!(f, "{}{:?}", self.family, self.params),
        }
    }
}

fn condition_violated(id: &AlgebraId, reason: impl Into<String>) -> CatalogError {
    CatalogError::ConditionViolated { id: id.to_string(), reason: reason.into() }
}

/// Validates the parameter tuple against the family's side conditions over
/// the given field.
pub fn check_conditions(id: &AlgebraId, field: &FieldRef) -> Result<(), CatalogError> {
    let expected = id.family.param_count();
    if id.params.len() != expected {
        return Err(CatalogError::WrongParamCount {
            family: id.family.name(),
            expected,
            got: id.params.len(),
        });
    }
    for &p in &id.params {
        if p.index() >= field.q() {
            return Err(CatalogError::Field(FieldError::ElementOutOfRange {
                idx: p.index() as u64,
                q: field.q(),
            }));
        }
    }
    match id.family {
        Family::N4_8 => {
            // T^2 - T - a must be rootless
            let a1 = field.int(-1);
            let a0 = field.neg(id.alpha().unwrap());
            if field.quadratic_has_root(a1, a0) {
                return Err(condition_violated(id, "T^2 - T - alpha has a root in the field"));
            }
        }
        Family::N4_9 => {
            if !field.characteristic_is_two() {
                return Err(condition_violated(id, "requires characteristic 2"));
            }
            // In a finite field of characteristic 2 squaring is onto, so
            // no alpha outside the squares exists.
            return Err(CatalogError::UnsatisfiableOverFiniteField {
                id: id.to_string(),
                reason: "alpha must be a non-square, but every element of a finite field of characteristic 2 is a square".into(),
            });
        }
        Family::N4_10 => {
            if !field.characteristic_is_two() {
                return Err(condition_violated(id, "requires characteristic 2"));
            }
            if id.alpha().unwrap().is_zero() {
                return Err(condition_violated(id, "alpha must be nonzero"));
            }
            if id.beta().unwrap() == field.one() {
                return Err(condition_violated(id, "beta must differ from 1"));
            }
        }
        Family::N4_12 | Family::N4_13 if id.alpha().unwrap().is_zero() => {
            return Err(condition_violated(id, "alpha must be nonzero"));
        }
        _ => {}
    }
    Ok(())
}

/// All parameter tuples admissible for the family over the field, in element
/// index order.
pub fn admissible_ids(family: Family, field: &FieldRef) -> Vec<AlgebraId> {
    let tuples: Vec<Vec<Felt>> = match family.param_count() {
        0 => vec![Vec::new()],
        1 => field.elements().map(|a| vec![a]).collect(),
        2 => field
            .elements()
            .flat_map(|a| field.elements().map(move |b| vec![a, b]))
            .collect(),
        _ => unreachable!(),
    };
    tuples
        .into_iter()
        .map(|params| AlgebraId::new(family, params))
        .filter(|id| check_conditions(id, field).is_ok())
        .collect()
}

/// Whether a skipped family (or branch) is merely inadmissible over this
/// field or unsatisfiable over every finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipStatus {
    Inadmissible,
    Unsatisfiable,
}

/// A catalog row (or row branch) with no admissible parameters over a field.
#[derive(Debug, Clone, Serialize)]
pub struct BranchSkip {
    pub label: String,
    pub status: SkipStatus,
    pub reason: String,
}

/// Skip records a sweep should emit for this family over this field, so the
/// report documents gaps instead of silently omitting them.
pub fn family_skips(family: Family, field: &FieldRef) -> Vec<BranchSkip> {
    match family {
        Family::N4_9 => {
            if field.characteristic_is_two() {
                vec![BranchSkip {
                    label: "N4_9".into(),
                    status: SkipStatus::Unsatisfiable,
                    reason: "alpha must be a non-square, but every element of a finite field of characteristic 2 is a square".into(),
                }]
            } else {
                vec![BranchSkip {
                    label: "N4_9".into(),
                    status: SkipStatus::Inadmissible,
                    reason: "requires characteristic 2".into(),
                }]
            }
        }
        Family::N4_10 => {
            if field.characteristic_is_two() {
                vec![BranchSkip {
                    label: "N4_10 (alpha*beta non-square branch)".into(),
                    status: SkipStatus::Unsatisfiable,
                    reason: "alpha*beta is always a square in a finite field of characteristic 2".into(),
                }]
            } else {
                vec![BranchSkip {
                    label: "N4_10".into(),
                    status: SkipStatus::Inadmissible,
                    reason: "requires characteristic 2".into(),
                }]
            }
        }
        _ => Vec::new(),
    }
}

/// Known decompositions L = H + F^k (abelian complement), recorded as
/// metadata and exercised by the direct-sum verification.
pub fn decomposable_alias(id: &AlgebraId, field: &FieldRef) -> Option<(AlgebraId, usize)> {
    let zero = field.zero();
    match id.family {
        Family::N3_2 if id.alpha() == Some(zero) => Some((AlgebraId::plain(Family::N2), 1)),
        Family::N4_2 if id.alpha() == Some(zero) => Some((AlgebraId::plain(Family::N3_1), 1)),
        Family::N4_3 => Some((AlgebraId::plain(Family::N2), 2)),
        Family::N4_4 => Some((AlgebraId::new(Family::N3_3, vec![zero]), 1)),
        // these two decompose only for beta != 0: at beta = 0 the derived
        // algebra is 2-dimensional while the candidate summand's is not
        Family::N4_5 if id.alpha() == Some(zero) && id.beta() != Some(zero) => {
            Some((AlgebraId::new(Family::N3_2, vec![id.beta().unwrap()]), 1))
        }
        Family::N4_6 if id.alpha() == Some(zero) && id.beta() != Some(zero) => {
            Some((AlgebraId::new(Family::N3_3, vec![id.beta().unwrap()]), 1))
        }
        _ => None,
    }
}

/// Builds the algebra with exactly the classified structure constants,
/// validating side conditions and the Jacobi identity.
pub fn instantiate(id: &AlgebraId, field: &FieldRef) -> Result<LieAlgebra, CatalogError> {
    check_conditions(id, field)?;
    let f = field;
    let n = id.family.dim();
    let one = f.one();
    let a = id.alpha().unwrap_or(Felt::ZERO);
    let b = id.beta().unwrap_or(Felt::ZERO);

    let combo = |terms: &[(usize, Felt)]| -> Vec<Felt> {
        let mut v = vec![Felt::ZERO; n];
        for &(i, c) in terms {
            v[i - 1] = f.add(v[i - 1], c);
        }
        v
    };
    let e = |i: usize| combo(&[(i, one)]);

    // Rows are written as in the classification ([e_i, e_j] with i > j
    // allowed); normalize to i < j with a sign flip.
    let mut entries: Vec<(usize, usize, Vec<Felt>)> = Vec::new();
    let mut br = |i: usize, j: usize, v: Vec<Felt>| {
        if i < j {
            entries.push((i, j, v));
        } else {
            let neg = v.into_iter().map(|c| f.neg(c)).collect();
            entries.push((j, i, neg));
        }
    };

    match id.family {
        Family::N2 => {
            br(1, 2, e(1));
        }
        Family::N3_1 => {
            br(3, 1, e(1));
            br(3, 2, e(2));
        }
        Family::N3_2 => {
            br(3, 1, e(2));
            br(3, 2, combo(&[(1, a), (2, one)]));
        }
        Family::N3_3 => {
            br(3, 1, e(2));
            br(3, 2, combo(&[(1, a)]));
        }
        Family::N4_1 => {
            br(4, 1, e(1));
            br(4, 2, e(2));
            br(4, 3, e(3));
        }
        Family::N4_2 => {
            br(4, 1, e(1));
            br(4, 2, e(3));
            br(4, 3, combo(&[(2, f.neg(a)), (3, f.add(a, one))]));
        }
        Family::N4_3 => {
            br(4, 2, e(3));
            br(4, 3, e(3));
        }
        Family::N4_4 => {
            br(4, 2, e(3));
        }
        Family::N4_5 => {
            br(4, 1, e(2));
            br(4, 2, e(3));
            br(4, 3, combo(&[(1, a), (2, b), (3, one)]));
        }
        Family::N4_6 => {
            br(4, 1, e(2));
            br(4, 2, e(3));
            br(4, 3, combo(&[(1, a), (2, b)]));
        }
        Family::N4_7 => {
            br(1, 2, e(2));
            br(3, 4, e(4));
        }
        Family::N4_8 => {
            br(4, 1, combo(&[(1, one), (2, a)]));
            br(4, 2, e(1));
            br(3, 1, e(1));
            br(3, 2, e(2));
        }
        Family::N4_9 => {
            br(4, 1, e(2));
            br(4, 2, combo(&[(1, a)]));
            br(3, 1, e(1));
            br(3, 2, e(2));
        }
        Family::N4_10 => {
            br(4, 1, e(1));
            br(3, 1, e(2));
            br(3, 2, combo(&[(1, a)]));
            br(4, 2, combo(&[(2, b)]));
            br(4, 3, combo(&[(3, f.add(one, b))]));
        }
        Family::N4_11 => {
            br(4, 1, e(1));
            br(3, 1, e(2));
            br(4, 2, combo(&[(2, f.int(2))]));
            br(4, 3, e(3));
        }
        Family::N4_12 => {
            br(3, 1, e(2));
            br(4, 1, combo(&[(1, one), (3, a)]));
            br(4, 2, e(2));
            br(4, 3, e(1));
        }
        Family::N4_13 => {
            br(3, 1, e(2));
            br(4, 1, combo(&[(3, a)]));
            br(4, 3, e(1));
        }
    }

    Ok(LieAlgebra::new(f.clone(), n, entries)?)
}

/// The classified center of the algebra, as a canonical subspace.
pub fn predicted_center(id: &AlgebraId, field: &FieldRef) -> Result<Subspace, CatalogError> {
    check_conditions(id, field)?;
    let f = field;
    let n = id.family.dim();
    let one = f.one();
    let a = id.alpha().unwrap_or(Felt::ZERO);
    let b = id.beta().unwrap_or(Felt::ZERO);
    let combo = |terms: &[(usize, Felt)]| -> Vector {
        let mut v = vec![Felt::ZERO; n];
        for &(i, c) in terms {
            v[i - 1] = f.add(v[i - 1], c);
        }
        Vector::new(f.clone(), v)
    };
    let gens: Vec<Vector> = match id.family {
        Family::N2 | Family::N3_1 | Family::N4_1 | Family::N4_7 | Family::N4_8
        | Family::N4_9 | Family::N4_10 | Family::N4_12 => Vec::new(),
        Family::N3_2 => {
            if a.is_zero() {
                vec![combo(&[(1, one), (2, f.int(-1))])]
            } else {
                Vec::new()
            }
        }
        Family::N3_3 => {
            if a.is_zero() {
                vec![combo(&[(2, one)])]
            } else {
                Vec::new()
            }
        }
        Family::N4_2 => {
            if a.is_zero() {
                vec![combo(&[(2, one), (3, f.int(-1))])]
            } else {
                Vec::new()
            }
        }
        Family::N4_3 => vec![combo(&[(1, one)]), combo(&[(2, one), (3, f.int(-1))])],
        Family::N4_4 => vec![combo(&[(1, one)]), combo(&[(3, one)])],
        Family::N4_5 => {
            if a.is_zero() {
                vec![combo(&[(1, b), (2, one), (3, f.int(-1))])]
            } else {
                Vec::new()
            }
        }
        Family::N4_6 => {
            if a.is_zero() {
                vec![combo(&[(3, one), (1, f.neg(b))])]
            } else {
                Vec::new()
            }
        }
        Family::N4_11 => {
            if f.characteristic_is_two() {
                vec![combo(&[(2, one)])]
            } else {
                Vec::new()
            }
        }
        Family::N4_13 => vec![combo(&[(2, one)])],
    };
    Ok(Subspace::span(f, n, &gens)?)
}

/// Closed-form component count over GF(q).
///
/// The N4_8 and N4_9 rows evaluate to q^2 + 1: their component lists consist
/// of a fixed plane plus a family of q^2 planes that includes the remaining
/// fixed plane at the zero parameter pair, so there are q^2 + 1 distinct
/// components, in agreement with (q^4 - 1)/(q^2 - 1).
pub fn predicted_cc_count(id: &AlgebraId, field: &FieldRef) -> Result<usize, CatalogError> {
    check_conditions(id, field)?;
    let q = field.q();
    let a = id.alpha().unwrap_or(Felt::ZERO);
    Ok(match id.family {
        Family::N2 => q + 1,
        Family::N3_1 => q * q + 1,
        Family::N3_2 | Family::N3_3 => {
            if a.is_zero() {
                q + 1
            } else {
                q * q + 1
            }
        }
        Family::N4_1 => q * q * q + 1,
        Family::N4_2 => {
            if a.is_zero() {
                q * q + 1
            } else {
                q * q * q + 1
            }
        }
        Family::N4_3 | Family::N4_4 => q + 1,
        Family::N4_5 | Family::N4_6 => {
            if a.is_zero() {
                q * q + 1
            } else {
                q * q * q + 1
            }
        }
        Family::N4_7 => 1,
        Family::N4_8 | Family::N4_9 => q * q + 1,
        Family::N4_10 => q * q * q + 1,
        Family::N4_11 => {
            if field.characteristic_is_two() {
                q * q + q + 1
            } else {
                q * q * q + 1
            }
        }
        Family::N4_12 => q * q * q + 1,
        Family::N4_13 => q * q + q + 1,
    })
}

/// Predicted structure of one connected component.
#[derive(Debug, Clone)]
pub struct PredictedComponent {
    pub label: String,
    /// Sorted vertex indices under the standard [`VertexIndexer`].
    pub vertices: Vec<usize>,
    pub shape: PredictedShape,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredictedShape {
    Complete,
    Windmill { core_size: usize, blade_size: usize, blade_count: usize },
    /// Explicit clique vertex sets covering the component.
    CliqueUnion { cliques: Vec<Vec<usize>> },
}

impl PredictedShape {
    pub fn to_spec(&self, component_size: usize) -> ShapeSpec {
        match self {
            PredictedShape::Complete => ShapeSpec::Complete { size: component_size },
            PredictedShape::Windmill { core_size, blade_size, blade_count } => ShapeSpec::Windmill {
                core_size: *core_size,
                blade_size: *blade_size,
                blade_count: *blade_count,
            },
            PredictedShape::CliqueUnion { cliques } => {
                let mut sizes: Vec<usize> = cliques.iter().map(|c| c.len()).collect();
                sizes.sort_unstable();
                ShapeSpec::CliqueUnion { clique_sizes: sizes }
            }
        }
    }
}

/// The full prediction for one algebra over one field: the component vertex
/// sets partition the noncentral elements.
#[derive(Debug, Clone)]
pub struct Prediction {
    pub cc_count: usize,
    pub center: Subspace,
    pub components: Vec<PredictedComponent>,
}

impl Prediction {
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.components.iter().map(|c| c.vertices.len()).collect();
        s.sort_unstable();
        s
    }
}

/// Component-set builder bound to one field and dimension.
struct Gen {
    f: FieldRef,
    n: usize,
    ix: VertexIndexer,
}

impl Gen {
    fn new(f: &FieldRef, n: usize) -> Self {
        Self { f: f.clone(), n, ix: VertexIndexer::new(f.clone(), n) }
    }

    fn combo(&self, terms: &[(usize, Felt)]) -> Vec<Felt> {
        let mut v = vec![Felt::ZERO; self.n];
        for &(i, c) in terms {
            v[i - 1] = self.f.add(v[i - 1], c);
        }
        v
    }

    fn e(&self, i: usize) -> Vec<Felt> {
        self.combo(&[(i, self.f.one())])
    }

    /// All s# + t vectors for s in span(gens), t in span(translate), as sorted
    /// vertex indices. The generators must be jointly independent.
    fn punctured(&self, gens: &[Vec<Felt>], translate: &[Vec<Felt>]) -> Vec<usize> {
        let f = &self.f;
        let q = f.q();
        let all: Vec<Vector> = gens
            .iter()
            .chain(translate)
            .map(|c| Vector::new(f.clone(), c.clone()))
            .collect();
        let span = Subspace::span(f, self.n, &all).expect("generator lengths match");
        assert_eq!(span.dim(), gens.len() + translate.len(), "generators must be independent");

        let s = gens.len();
        let t = translate.len();
        let mut out = Vec::with_capacity((q.pow(s as u32) - 1) * q.pow(t as u32));
        let mut base = vec![Felt::ZERO; self.n];
        for cs in 1..q.pow(s as u32) {
            base.iter_mut().for_each(|c| *c = Felt::ZERO);
            let mut m = cs;
            for g in gens {
                let c = f.elt(m % q);
                m /= q;
                if !c.is_zero() {
                    for i in 0..self.n {
                        base[i] = f.add(base[i], f.mul(c, g[i]));
                    }
                }
            }
            let mut v = vec![Felt::ZERO; self.n];
            for ct in 0..q.pow(t as u32) {
                v.copy_from_slice(&base);
                let mut m = ct;
                for g in translate {
                    let c = f.elt(m % q);
                    m /= q;
                    if !c.is_zero() {
                        for i in 0..self.n {
                            v[i] = f.add(v[i], f.mul(c, g[i]));
                        }
                    }
                }
                out.push(self.ix.encode(&v));
            }
        }
        out.sort_unstable();
        out
    }

    fn pretty(&self, coeffs: &[Felt]) -> String {
        let mut terms = Vec::new();
        for (i, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = format!("e{}", i + 1);
            if c == self.f.one() {
                terms.push(name);
            } else {
                terms.push(format!("{}{}", self.f.elt_string(c), name));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    fn label(&self, gens: &[Vec<Felt>], translate: &[Vec<Felt>]) -> String {
        let g: Vec<String> = gens.iter().map(|c| self.pretty(c)).collect();
        let head = format!("<{}>#", g.join(","));
        if translate.is_empty() {
            head
        } else {
            let t: Vec<String> = translate.iter().map(|c| self.pretty(c)).collect();
            format!("{}+<{}>", head, t.join(","))
        }
    }

    fn complete(&self, gens: Vec<Vec<Felt>>, translate: Vec<Vec<Felt>>) -> PredictedComponent {
        PredictedComponent {
            label: self.label(&gens, &translate),
            vertices: self.punctured(&gens, &translate),
            shape: PredictedShape::Complete,
        }
    }

    /// Projective line representatives (1, x) for all x, then (0, 1).
    fn line_reps(&self) -> Vec<(Felt, Felt)> {
        let mut reps: Vec<(Felt, Felt)> =
            self.f.elements().map(|x| (self.f.one(), x)).collect();
        reps.push((Felt::ZERO, self.f.one()));
        reps
    }
}

/// The q^2 + q + 1 complete components <e4>#+<e2>, <e3+m4 e4>#+<e2>, and
/// <e1+m3 e3+m4 e4>#+<e2> shared by N4_13 and the degenerate-center case of
/// N4_11.
fn families_around_center_e2(g: &Gen, f: &FieldRef, one: Felt, comps: &mut Vec<PredictedComponent>) {
    let z = vec![g.e(2)];
    comps.push(g.complete(vec![g.e(4)], z.clone()));
    for m4 in f.elements() {
        comps.push(g.complete(vec![g.combo(&[(3, one), (4, m4)])], z.clone()));
    }
    for m3 in f.elements() {
        for m4 in f.elements() {
            comps.push(g.complete(vec![g.combo(&[(1, one), (3, m3), (4, m4)])], z.clone()));
        }
    }
}

/// Builds the predicted component list: explicit vertex sets ranging the
/// parameters over the field, with side constraints applied, plus the shape
/// of each component.
pub fn predicted_components(id: &AlgebraId, field: &FieldRef) -> Result<Prediction, CatalogError> {
    check_conditions(id, field)?;
    let f = field;
    let q = f.q();
    let n = id.family.dim();
    let g = Gen::new(f, n);
    let one = f.one();
    let a = id.alpha().unwrap_or(Felt::ZERO);
    let b = id.beta().unwrap_or(Felt::ZERO);

    let mut comps: Vec<PredictedComponent> = Vec::new();

    // the recurring dim-3 / dim-4 patterns
    let derived_plus_tails = |comps: &mut Vec<PredictedComponent>, derived: Vec<usize>, translate: Vec<Vec<Felt>>| {
        // one component on the span of the given basis vectors, plus tails
        // <mu . derived + e_top># + translate over all coefficient tuples
        let top = n;
        let gens: Vec<Vec<Felt>> = derived.iter().map(|&i| g.e(i)).collect();
        comps.push(g.complete(gens.clone(), translate.clone()));
        let k = derived.len();
        for m in 0..q.pow(k as u32) {
            let mut terms: Vec<(usize, Felt)> = vec![(top, one)];
            let mut x = m;
            for &i in &derived {
                let c = f.elt(x % q);
                x /= q;
                if !c.is_zero() {
                    terms.push((i, c));
                }
            }
            comps.push(g.complete(vec![g.combo(&terms)], translate.clone()));
        }
    };

    match id.family {
        Family::N2 => derived_plus_tails(&mut comps, vec![1], vec![]),
        Family::N3_1 => derived_plus_tails(&mut comps, vec![1, 2], vec![]),
        Family::N3_2 => {
            if a.is_zero() {
                // <e2># + <e1-e2>, and <e3 + mu e2># + <e1-e2>
                let z = g.combo(&[(1, one), (2, f.int(-1))]);
                derived_plus_tails(&mut comps, vec![2], vec![z]);
            } else {
                derived_plus_tails(&mut comps, vec![1, 2], vec![]);
            }
        }
        Family::N3_3 => {
            if a.is_zero() {
                derived_plus_tails(&mut comps, vec![1], vec![g.e(2)]);
            } else {
                derived_plus_tails(&mut comps, vec![1, 2], vec![]);
            }
        }
        Family::N4_1 => derived_plus_tails(&mut comps, vec![1, 2, 3], vec![]),
        Family::N4_2 => {
            if a.is_zero() {
                let z = g.combo(&[(2, one), (3, f.int(-1))]);
                derived_plus_tails(&mut comps, vec![1, 3], vec![z]);
            } else {
                derived_plus_tails(&mut comps, vec![1, 2, 3], vec![]);
            }
        }
        Family::N4_3 => {
            let t = vec![g.e(1), g.combo(&[(2, one), (3, f.int(-1))])];
            derived_plus_tails(&mut comps, vec![3], t);
        }
        Family::N4_4 => {
            let t = vec![g.e(1), g.e(3)];
            derived_plus_tails(&mut comps, vec![2], t);
        }
        Family::N4_5 => {
            if !a.is_zero() {
                derived_plus_tails(&mut comps, vec![1, 2, 3], vec![]);
            } else if b.is_zero() {
                let z = g.combo(&[(2, one), (3, f.int(-1))]);
                derived_plus_tails(&mut comps, vec![1, 2], vec![z]);
            } else {
                let z = g.combo(&[(1, b), (2, one), (3, f.int(-1))]);
                derived_plus_tails(&mut comps, vec![2, 3], vec![z]);
            }
        }
        Family::N4_6 => {
            if !a.is_zero() {
                derived_plus_tails(&mut comps, vec![1, 2, 3], vec![]);
            } else if b.is_zero() {
                derived_plus_tails(&mut comps, vec![1, 2], vec![g.e(3)]);
            } else {
                let z = g.combo(&[(1, b), (3, f.int(-1))]);
                derived_plus_tails(&mut comps, vec![2, 3], vec![z]);
            }
        }
        Family::N4_7 => {
            // one connected component on every noncentral element, covered by
            // the cliques (line in <e1,e2>) + (line in <e3,e4>)
            let vertices: Vec<usize> = (1..g.ix.total()).collect();
            let mut cliques = Vec::new();
            for &(c1, c2) in &g.line_reps() {
                let v1 = g.combo(&[(1, c1), (2, c2)]);
                for &(c3, c4) in &g.line_reps() {
                    let v2 = g.combo(&[(3, c3), (4, c4)]);
                    cliques.push(g.punctured(&[v1.clone(), v2], &[]));
                }
            }
            comps.push(PredictedComponent {
                label: "whole graph".into(),
                vertices,
                shape: PredictedShape::CliqueUnion { cliques },
            });
        }
        Family::N4_8 | Family::N4_9 => {
            comps.push(g.complete(vec![g.e(1), g.e(2)], vec![]));
            comps.push(g.complete(vec![g.e(3), g.e(4)], vec![]));
            let mut seen: BTreeSet<Vec<usize>> = comps.iter().map(|c| c.vertices.clone()).collect();
            for m3 in f.elements() {
                for m4 in f.elements() {
                    let (u, v) = if id.family == Family::N4_8 {
                        let m3_over_a = f.div(m3, a).expect("alpha is nonzero when rootless");
                        (
                            g.combo(&[(1, one), (3, m3), (4, m4)]),
                            g.combo(&[(2, one), (3, f.sub(m4, m3_over_a)), (4, m3_over_a)]),
                        )
                    } else {
                        (
                            g.combo(&[(1, one), (3, m3), (4, m4)]),
                            g.combo(&[(2, one), (3, f.mul(a, m4)), (4, m3)]),
                        )
                    };
                    let c = g.complete(vec![u, v], vec![]);
                    if seen.insert(c.vertices.clone()) {
                        comps.push(c);
                    }
                }
            }
        }
        Family::N4_10 => {
            let gamma = f.sqrt(f.mul(a, b)).expect("squaring is onto in characteristic 2");
            // the glued component on <e1, e2, gamma e3 + alpha e4>
            let w = g.combo(&[(3, gamma), (4, a)]);
            let vertices = g.punctured(&[g.e(1), g.e(2), w.clone()], &[]);
            let hub = g.combo(&[(1, gamma), (2, one)]);
            let mut cliques: Vec<Vec<usize>> = vec![g.punctured(&[g.e(1), g.e(2)], &[])];
            let mut seen: BTreeSet<Vec<usize>> = cliques.iter().cloned().collect();
            for m1 in f.elements() {
                for m2 in f.elements() {
                    let v = g.combo(&[(1, m1), (2, m2), (3, gamma), (4, a)]);
                    let clique = g.punctured(&[hub.clone(), v], &[]);
                    if seen.insert(clique.clone()) {
                        cliques.push(clique);
                    }
                }
            }
            comps.push(PredictedComponent {
                label: g.label(&[g.e(1), g.e(2), w], &[]),
                vertices,
                shape: PredictedShape::CliqueUnion { cliques },
            });
            for m1 in f.elements() {
                for m2 in f.elements() {
                    comps.push(g.complete(vec![g.combo(&[(1, m1), (2, m2), (3, one)])], vec![]));
                }
            }
            // tails through e4 exist away from alpha*mu3^2 = beta, where the
            // vertex lies in the glued component instead
            for m1 in f.elements() {
                for m2 in f.elements() {
                    for m3 in f.elements() {
                        if f.mul(a, f.mul(m3, m3)) == b {
                            continue;
                        }
                        comps.push(g.complete(
                            vec![g.combo(&[(1, m1), (2, m2), (3, m3), (4, one)])],
                            vec![],
                        ));
                    }
                }
            }
        }
        Family::N4_11 if f.characteristic_is_two() => {
            families_around_center_e2(&g, f, one, &mut comps);
        }
        Family::N4_13 => {
            families_around_center_e2(&g, f, one, &mut comps);
        }
        Family::N4_11 | Family::N4_12 => {
            // windmill on <e1,e2,e3>#: core <e2>#, one blade per line through
            // (e1 : e3), fully joined to the core, no cross-blade edges
            let vertices = g.punctured(&[g.e(1), g.e(2), g.e(3)], &[]);
            comps.push(PredictedComponent {
                label: g.label(&[g.e(1), g.e(2), g.e(3)], &[]),
                vertices,
                shape: PredictedShape::Windmill {
                    core_size: q - 1,
                    blade_size: (q - 1) * q,
                    blade_count: q + 1,
                },
            });
            for m1 in f.elements() {
                for m2 in f.elements() {
                    for m3 in f.elements() {
                        comps.push(g.complete(
                            vec![g.combo(&[(1, m1), (2, m2), (3, m3), (4, one)])],
                            vec![],
                        ));
                    }
                }
            }
        }
    }

    let center = predicted_center(id, field)?;
    let prediction = Prediction { cc_count: comps.len(), center, components: comps };

    // structural invariants of a well-formed prediction
    let expected_count = predicted_cc_count(id, field)?;
    assert_eq!(prediction.cc_count, expected_count, "{id}: enumerator count vs closed form");
    let vertex_total: usize = prediction.sizes().iter().sum();
    let expected_total = q.pow(n as u32) - q.pow(prediction.center.dim() as u32);
    assert_eq!(vertex_total, expected_total, "{id}: predicted sets must cover V");
    let mut all: BTreeSet<usize> = BTreeSet::new();
    for c in &prediction.components {
        for &v in &c.vertices {
            assert!(all.insert(v), "{id}: predicted sets must be disjoint");
        }
    }

    Ok(prediction)
}
