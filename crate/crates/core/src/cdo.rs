//! Covariant differential operators on finite free modules.
//!
//! A pair `(A, X)` acts on `R^n` by `D(v) = A·v + X(v)`, with `X` applied to
//! every coordinate, so `D(r·v) − r·D(v) = X(r)·v` holds by construction.
//!
//! Checking that relation on the ring variables is complete for polynomial
//! carriers: if it holds for `r` and `s` then it holds for `r + s`, and
//!
//! ```text
//! [D, μ(rs)] = [D, μ(r)]·μ(s) + μ(r)·[D, μ(s)] = μ(X(r)·s + r·X(s)) = μ(X(rs)),
//! ```
//!
//! while constants commute with `D` by linearity.
//!
//! Projective modules are images of idempotents `P`. For `n = P·n`,
//! `X(n) = X(P)·n + P·X(n)`, hence `P·X(n) = X(n) − X(P)·n`: the lift
//! `D̃ = P∘X` is the pair `(−X(P), X)` restricted to `image(P)`.

use std::fmt;

use crate::calculus::{apply, vf_bracket, VectorField};
use crate::linalg::{Matrix, Vector};
use crate::rings::{ensure_same_ring, Comparison, ExactEq, Ring, RingElement};
use crate::verifier::{run_trials, CheckResult, Evidence, SamplerConfig};
use crate::{Error, Result};

const CDO_CHECK_STREAM: u64 = 0x100;

#[derive(Clone, Debug, PartialEq)]
pub struct FreeModuleDesc {
    pub ring: Ring,
    pub rank: usize,
}

impl FreeModuleDesc {
    pub fn new(ring: &Ring, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(FreeModuleDesc {
            ring: ring.clone(),
            rank,
        })
    }

    pub fn zero(&self) -> Vector {
        Vector::zero(&self.ring, self.rank)
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(&self.ring, self.rank, i)
    }

    fn check(&self, v: &Vector) -> Result<()> {
        ensure_same_ring(&self.ring, v.ring())?;
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: v.len(),
            });
        }
        Ok(())
    }
}

/// `X` applied to every entry of a matrix.
pub fn derive_matrix(x: &VectorField, m: &Matrix) -> Result<Matrix> {
    m.try_map(|e| apply(x, e))
}

/// The pair `(A, X)`.
#[derive(Clone, Debug)]
pub struct CdoOperator {
    module: FreeModuleDesc,
    matrix: Matrix,
    field: VectorField,
}

impl CdoOperator {
    pub fn new(module: &FreeModuleDesc, matrix: Matrix, field: VectorField) -> Result<Self> {
        ensure_same_ring(&module.ring, matrix.ring())?;
        ensure_same_ring(&module.ring, field.ring())?;
        if matrix.rows() != module.rank || matrix.cols() != module.rank {
            return Err(Error::DimensionMismatch {
                expected: module.rank,
                found: if matrix.rows() != module.rank {
                    matrix.rows()
                } else {
                    matrix.cols()
                },
            });
        }
        Ok(CdoOperator {
            module: module.clone(),
            matrix,
            field,
        })
    }

    pub fn zero(module: &FreeModuleDesc) -> Self {
        CdoOperator {
            module: module.clone(),
            matrix: Matrix::zero(&module.ring, module.rank),
            field: VectorField::zero(&module.ring),
        }
    }

    pub fn module(&self) -> &FreeModuleDesc {
        &self.module
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> &VectorField {
        &self.field
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        cdo_apply(self, v)
    }

    pub fn scale(&self, r: &RingElement) -> Result<Self> {
        Ok(CdoOperator {
            module: self.module.clone(),
            matrix: self.matrix.scale(r)?,
            field: self.field.scale(r)?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(CdoOperator {
            module: self.module.clone(),
            matrix: self.matrix.add(&other.matrix)?,
            field: self.field.add(&other.field)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(CdoOperator {
            module: self.module.clone(),
            matrix: self.matrix.sub(&other.matrix)?,
            field: self.field.sub(&other.field)?,
        })
    }

    /// Matrix entries row by row, then the coefficients of the field.
    pub fn render(&self) -> Vec<String> {
        let mut out = self.matrix.render();
        out.extend(self.field.render());
        out
    }
}

impl ExactEq for CdoOperator {
    fn compare(&self, other: &Self) -> Comparison {
        self.matrix
            .compare(&other.matrix)
            .and(self.field.compare(&other.field))
    }
}

impl PartialEq for CdoOperator {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).equal
    }
}

impl fmt::Display for CdoOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(A = {}, X = {})", self.matrix, self.field)
    }
}

/// `D(v) = A·v + X(v)`.
pub fn cdo_apply(op: &CdoOperator, v: &Vector) -> Result<Vector> {
    op.module.check(v)?;
    op.matrix
        .mul_vec(v)?
        .add(&v.try_map(|e| apply(&op.field, e))?)
}

/// `(A₁A₂ − A₂A₁ + X₁(A₂) − X₂(A₁), [X₁, X₂])`.
pub fn cdo_bracket(op1: &CdoOperator, op2: &CdoOperator) -> Result<CdoOperator> {
    if op1.module != op2.module {
        return Err(Error::RingMismatch);
    }
    let (a1, a2) = (&op1.matrix, &op2.matrix);
    let matrix = a1
        .mul(a2)?
        .sub(&a2.mul(a1)?)?
        .add(&derive_matrix(&op1.field, a2)?)?
        .sub(&derive_matrix(&op2.field, a1)?)?;
    let field = vf_bracket(&op1.field, &op2.field)?;
    CdoOperator::new(&op1.module, matrix, field)
}

/// Verifies `D(r·v) − r·D(v) = X(r)·v` for an operator given as a function.
///
/// Every ring variable is paired first with every basis vector, then with
/// `cfg.trials` random vectors.
pub fn cdo_check_fn<F>(
    name: &str,
    module: &FreeModuleDesc,
    field: &VectorField,
    cfg: &SamplerConfig,
    op: F,
) -> Result<CheckResult>
where
    F: Fn(&Vector) -> Result<Vector> + Sync,
{
    let ring = &module.ring;
    let nvars = ring.nvars();
    let fixed = nvars * module.rank;
    run_trials(name, cfg, CDO_CHECK_STREAM, fixed + cfg.trials, |s, i| {
        let (var, v) = if i < fixed {
            (i / module.rank, module.basis(i % module.rank))
        } else {
            (i % nvars, s.vector(ring, module.rank))
        };
        let r = RingElement::var(ring, var)?;
        let lhs = op(&v.scale(&r)?)?.sub(&op(&v)?.scale(&r)?)?;
        let rhs = v.scale(&apply(field, &r)?)?;
        Ok(Evidence::new(lhs, rhs).input("r", r).input("v", v))
    })
}

pub fn cdo_check(op: &CdoOperator, cfg: &SamplerConfig) -> Result<CheckResult> {
    cdo_check_fn("cdo", &op.module, &op.field, cfg, |v| cdo_apply(op, v))
}

/// A projective module presented as the image of `P` with `P·P = P`.
#[derive(Clone, Debug)]
pub struct IdempotentPresentation {
    module: FreeModuleDesc,
    p: Matrix,
}

impl IdempotentPresentation {
    pub fn new(module: &FreeModuleDesc, p: Matrix) -> Result<Self> {
        ensure_same_ring(&module.ring, p.ring())?;
        if p.rows() != module.rank || p.cols() != module.rank {
            return Err(Error::DimensionMismatch {
                expected: module.rank,
                found: p.rows(),
            });
        }
        if p.mul(&p)? != p {
            return Err(Error::NotIdempotent);
        }
        Ok(IdempotentPresentation {
            module: module.clone(),
            p,
        })
    }

    pub fn identity(module: &FreeModuleDesc) -> Self {
        IdempotentPresentation {
            module: module.clone(),
            p: Matrix::identity(&module.ring, module.rank),
        }
    }

    pub fn module(&self) -> &FreeModuleDesc {
        &self.module
    }

    pub fn matrix(&self) -> &Matrix {
        &self.p
    }

    pub fn project(&self, v: &Vector) -> Result<Vector> {
        self.p.mul_vec(v)
    }
}

/// `(−X(P), X)`; on `image(P)` it agrees with `D̃(f) = Σ_i X(e_i*(f))·P(e_i)`.
pub fn projective_lift(pres: &IdempotentPresentation, x: &VectorField) -> Result<CdoOperator> {
    let a = derive_matrix(x, &pres.p)?.neg();
    CdoOperator::new(&pres.module, a, x.clone())
}

/// The connection `ℓ ↦ projective_lift(P, ρ^L(ℓ))`.
#[derive(Clone, Debug)]
pub struct Connection {
    anchor: Matrix,
    pres: IdempotentPresentation,
}

impl Connection {
    pub fn anchor_matrix(&self) -> &Matrix {
        &self.anchor
    }

    /// `ρ^L(ℓ)`: column `j` of the anchor matrix is `ρ^L(e_j)`.
    pub fn anchor(&self, l: &Vector) -> Result<VectorField> {
        VectorField::from_vector(self.anchor.mul_vec(l)?)
    }

    pub fn apply(&self, l: &Vector) -> Result<CdoOperator> {
        projective_lift(&self.pres, &self.anchor(l)?)
    }
}

/// Builds `∇` from an anchor given as a `nvars × rank(L)` matrix.
pub fn connection_from_lift(anchor: Matrix, pres: &IdempotentPresentation) -> Result<Connection> {
    ensure_same_ring(anchor.ring(), &pres.module.ring)?;
    let nvars = pres.module.ring.nvars();
    if anchor.rows() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: anchor.rows(),
        });
    }
    Ok(Connection {
        anchor,
        pres: pres.clone(),
    })
}
