//! Vector fields, one-forms, and two-forms over a coordinate ring.
//!
//! `T_R` is the free module on the coordinate derivations `∂/∂t_i`, and
//! `Ω¹_R` is the free module on `dt_i`, paired by `⟨dt_i, ∂_j⟩ = δ_ij`.
//! Everything here is a pure function of immutable values.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::Vector;
use crate::rings::{ensure_same_ring, Comparison, ExactEq, Ring, RingElement};
use crate::{Error, Result};

macro_rules! coordinate_module {
    ($name:ident, $basis:literal) => {
        #[derive(Clone, Debug, PartialEq)]
        pub struct $name(Vector);

        impl $name {
            pub fn new(ring: &Ring, coeffs: Vec<RingElement>) -> Result<Self> {
                if coeffs.len() != ring.nvars() {
                    return Err(Error::DimensionMismatch {
                        expected: ring.nvars(),
                        found: coeffs.len(),
                    });
                }
                Vector::new(ring, coeffs).map($name)
            }

            pub fn from_vector(v: Vector) -> Result<Self> {
                let ring = v.ring().clone();
                Self::new(&ring, v.into_entries())
            }

            pub fn zero(ring: &Ring) -> Self {
                $name(Vector::zero(ring, ring.nvars()))
            }

            /// The basis element with index `i`.
            pub fn basis(ring: &Ring, i: usize) -> Self {
                $name(Vector::basis(ring, ring.nvars(), i))
            }

            pub fn ring(&self) -> &Ring {
                self.0.ring()
            }

            pub fn coeffs(&self) -> &[RingElement] {
                self.0.entries()
            }

            pub fn coeff(&self, i: usize) -> &RingElement {
                self.0.entry(i)
            }

            pub fn as_vector(&self) -> &Vector {
                &self.0
            }

            pub fn into_vector(self) -> Vector {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                self.0.add(&other.0).map($name)
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                self.0.sub(&other.0).map($name)
            }

            pub fn neg(&self) -> Self {
                $name(self.0.neg())
            }

            pub fn scale(&self, r: &RingElement) -> Result<Self> {
                self.0.scale(r).map($name)
            }

            pub fn render(&self) -> Vec<String> {
                self.0.render()
            }
        }

        impl ExactEq for $name {
            fn compare(&self, other: &Self) -> Comparison {
                self.0.compare(&other.0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let names = &self.ring().variables;
                let mut first = true;
                for (c, v) in self.coeffs().iter().zip(names) {
                    if c.is_zero() && c.precision().is_none() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    write!(f, "({c})")?;
                    write!(f, $basis, v)?;
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    };
}

coordinate_module!(VectorField, "∂{}");
coordinate_module!(OneForm, "d{}");

/// Skew-symmetric two-form; only entries with `i < j` are stored.
#[derive(Clone, Debug)]
pub struct TwoForm {
    ring: Ring,
    coeffs: BTreeMap<(usize, usize), RingElement>,
}

impl TwoForm {
    pub fn zero(ring: &Ring) -> Self {
        let n = ring.nvars();
        let coeffs = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|k| (k, RingElement::zero(ring)))
            .collect();
        TwoForm {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeff(&self, i: usize, j: usize) -> RingElement {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[&(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.coeffs[&(j, i)],
            std::cmp::Ordering::Equal => RingElement::zero(&self.ring),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(RingElement::is_zero)
    }

    /// `ω(X, Y) = Σ_{i<j} ω_ij (X_i Y_j − X_j Y_i)`.
    pub fn evaluate(&self, x: &VectorField, y: &VectorField) -> Result<RingElement> {
        ensure_same_ring(&self.ring, x.ring())?;
        ensure_same_ring(&self.ring, y.ring())?;
        Ok(self
            .coeffs
            .iter()
            .fold(RingElement::zero(&self.ring), |acc, (&(i, j), w)| {
                acc + w * (x.coeff(i) * y.coeff(j) - x.coeff(j) * y.coeff(i))
            }))
    }

    pub fn render(&self) -> Vec<String> {
        self.coeffs.values().map(ToString::to_string).collect()
    }
}

impl ExactEq for TwoForm {
    fn compare(&self, other: &Self) -> Comparison {
        self.coeffs
            .values()
            .zip(other.coeffs.values())
            .fold(Comparison::EQUAL, |acc, (a, b)| acc.and(a.compare(b)))
    }
}

/// `X(r) = Σ_i X_i ∂r/∂t_i`.
pub fn apply(x: &VectorField, r: &RingElement) -> Result<RingElement> {
    ensure_same_ring(x.ring(), r.ring())?;
    x.coeffs()
        .iter()
        .enumerate()
        .try_fold(RingElement::zero(r.ring()), |acc, (i, c)| {
            Ok(acc + c * r.derive(i)?)
        })
}

/// `⟨α, X⟩ = Σ_i α_i X_i`.
pub fn pair(alpha: &OneForm, x: &VectorField) -> Result<RingElement> {
    alpha.as_vector().dot(x.as_vector())
}

/// The commutator `[X, Y]`, coordinatewise `X(Y_i) − Y(X_i)`.
pub fn vf_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField> {
    ensure_same_ring(x.ring(), y.ring())?;
    let coeffs = x
        .coeffs()
        .iter()
        .zip(y.coeffs())
        .map(|(xi, yi)| Ok(apply(x, yi)? - apply(y, xi)?))
        .collect::<Result<_>>()?;
    VectorField::new(x.ring(), coeffs)
}

/// Exterior derivative of a function: `(dr)_i = ∂r/∂t_i`.
pub fn d_scalar(r: &RingElement) -> Result<OneForm> {
    let ring = r.ring();
    let coeffs = (0..ring.nvars())
        .map(|i| r.derive(i))
        .collect::<Result<_>>()?;
    OneForm::new(ring, coeffs)
}

/// Exterior derivative of a one-form: `(dα)_ij = ∂_i α_j − ∂_j α_i` for `i < j`.
pub fn d_oneform(alpha: &OneForm) -> Result<TwoForm> {
    let ring = alpha.ring().clone();
    let n = ring.nvars();
    let mut coeffs = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = alpha.coeff(j).derive(i)? - alpha.coeff(i).derive(j)?;
            coeffs.insert((i, j), c);
        }
    }
    Ok(TwoForm { ring, coeffs })
}

/// Lie derivative `L_X α`, evaluated on the basis fields:
/// `(L_X α)(∂_i) = X(α(∂_i)) − α([X, ∂_i])`.
pub fn lie_derivative(x: &VectorField, alpha: &OneForm) -> Result<OneForm> {
    ensure_same_ring(x.ring(), alpha.ring())?;
    let ring = x.ring();
    let coeffs = (0..ring.nvars())
        .map(|i| {
            let e = VectorField::basis(ring, i);
            Ok(apply(x, &pair(alpha, &e)?)? - pair(alpha, &vf_bracket(x, &e)?)?)
        })
        .collect::<Result<_>>()?;
    OneForm::new(ring, coeffs)
}
