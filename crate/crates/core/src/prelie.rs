//! Pre-Lie-Rinehart structures from a duality pairing `L × N → R`.
//!
//! Given `y₀ ∈ N`, a pair `(D₀, X₀)` on `N` and its dual `E₀` on `L`, the
//! product is
//!
//! ```text
//! thm1:  ℓ₁·ℓ₂ = ⟨ℓ₁,y₀⟩ E₀(ℓ₂)
//! thm2:  ℓ₁·ℓ₂ = ⟨ℓ₁,y₀⟩ E₀(ℓ₂) − ⟨ℓ₁,D₀y₀⟩ ℓ₂
//! ```
//!
//! with anchor `ρ(ℓ) = ⟨ℓ,y₀⟩ X₀`. The structure is pre-Lie when
//! `B(ℓ₁,ℓ₂) = ⟨ℓ₁,y₀⟩⟨ℓ₂,D₀ᵏy₀⟩` is symmetric (`k` = 1 or 2). `B` is
//! bilinear, so checking basis pairs decides symmetry completely. The duality
//! relation `X₀⟨ℓ,n⟩ = ⟨E₀ℓ,n⟩ + ⟨ℓ,D₀n⟩` likewise only needs basis pairs:
//! scaling either argument by `r` adds `X₀(r)⟨ℓ,n⟩` to both sides.
//!
//! A nonzero Gram determinant stands in for nondegeneracy of the pairing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::calculus::{apply, d_scalar, pair, vf_bracket, OneForm, VectorField};
use crate::cdo::{derive_matrix, CdoOperator, FreeModuleDesc};
use crate::linalg::{Matrix, Vector};
use crate::rings::{ensure_same_ring, ExactEq, Ring, RingElement};
use crate::verifier::{CheckResult, Evidence, Item, Sampler, SamplerConfig, Status, Witness};
use crate::{Error, Result};

const SKEW_SEARCH_STREAM: u64 = 0x200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Thm1,
    Thm2,
}

impl Variant {
    /// Power of `D₀` in the symmetry condition.
    pub fn order(self) -> u32 {
        match self {
            Variant::Thm1 => 1,
            Variant::Thm2 => 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Thm1 => "thm1",
            Variant::Thm2 => "thm2",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm1" => Ok(Variant::Thm1),
            "thm2" => Ok(Variant::Thm2),
            _ => Err(Error::Config(format!("unknown theorem `{s}`"))),
        }
    }
}

/// Free modules `L`, `N` of equal rank with Gram matrix `G_ij = ⟨e_i, e_j⟩`.
#[derive(Clone, Debug)]
pub struct PairingSpace {
    l: FreeModuleDesc,
    n: FreeModuleDesc,
    gram: Matrix,
    identity: bool,
}

impl PairingSpace {
    pub fn new(l: &FreeModuleDesc, n: &FreeModuleDesc, gram: Matrix) -> Result<Self> {
        ensure_same_ring(&l.ring, &n.ring)?;
        ensure_same_ring(&l.ring, gram.ring())?;
        if l.rank != n.rank || gram.rows() != l.rank || gram.cols() != l.rank {
            return Err(Error::DimensionMismatch {
                expected: l.rank,
                found: n.rank,
            });
        }
        if gram.determinant()?.is_zero() {
            return Err(Error::SingularPairing);
        }
        let identity = gram == Matrix::identity(&l.ring, l.rank);
        Ok(PairingSpace {
            l: l.clone(),
            n: n.clone(),
            gram,
            identity,
        })
    }

    /// `Ω¹ × T` with `⟨dt_i, ∂_j⟩ = δ_ij`.
    pub fn standard(ring: &Ring) -> Self {
        let m = FreeModuleDesc {
            ring: ring.clone(),
            rank: ring.nvars(),
        };
        PairingSpace {
            l: m.clone(),
            n: m,
            gram: Matrix::identity(ring, ring.nvars()),
            identity: true,
        }
    }

    pub fn l(&self) -> &FreeModuleDesc {
        &self.l
    }

    pub fn n(&self) -> &FreeModuleDesc {
        &self.n
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn ring(&self) -> &Ring {
        &self.l.ring
    }

    /// `G·n`, the covector `ℓ ↦ ⟨ℓ, n⟩`.
    fn lower(&self, n: &Vector) -> Result<Vector> {
        if self.identity {
            Ok(n.clone())
        } else {
            self.gram.mul_vec(n)
        }
    }

    pub fn pair(&self, l: &Vector, n: &Vector) -> Result<RingElement> {
        l.dot(&self.lower(n)?)
    }
}

/// `y₀`, `X₀`, `D₀` on `N` and `E₀` on `L`, related by the duality identity.
#[derive(Clone, Debug)]
pub struct StructureData {
    pub space: PairingSpace,
    pub y0: Vector,
    pub x0: VectorField,
    pub d0: CdoOperator,
    pub e0: CdoOperator,
}

impl StructureData {
    pub fn new(
        space: PairingSpace,
        y0: Vector,
        x0: VectorField,
        d0: CdoOperator,
        e0: CdoOperator,
    ) -> Result<Self> {
        if d0.module() != space.n() || e0.module() != space.l() || y0.len() != space.n().rank {
            return Err(Error::Config(
                "operators do not act on the paired modules".into(),
            ));
        }
        ensure_same_ring(space.ring(), y0.ring())?;
        if d0.field() != &x0 || e0.field() != &x0 {
            return Err(Error::Config("derivation parts must equal X0".into()));
        }
        let data = StructureData {
            space,
            y0,
            x0,
            d0,
            e0,
        };
        if let Some((i, j)) = data.duality_defect()? {
            return Err(Error::Config(format!(
                "duality relation fails on basis pair ({i}, {j})"
            )));
        }
        Ok(data)
    }

    pub fn ring(&self) -> &Ring {
        self.space.ring()
    }

    /// First basis pair violating `X₀(G_ij) = ⟨E₀e_i, e_j⟩ + ⟨e_i, D₀e_j⟩`.
    fn duality_defect(&self) -> Result<Option<(usize, usize)>> {
        let rank = self.space.l.rank;
        for i in 0..rank {
            let el = self.e0.apply(&self.space.l.basis(i))?;
            for j in 0..rank {
                let ei = self.space.l.basis(i);
                let ej = self.space.n.basis(j);
                let lhs = apply(&self.x0, self.space.gram.get(i, j))?;
                let rhs =
                    self.space.pair(&el, &ej)? + self.space.pair(&ei, &self.d0.apply(&ej)?)?;
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

/// `E₀` with derivation part `X₀` solving `Aᴱᵀ·G = X₀(G) − G·Aᴰ`.
pub fn derive_dual_operator(
    space: &PairingSpace,
    d0: &CdoOperator,
    x0: &VectorField,
) -> Result<CdoOperator> {
    let g = &space.gram;
    let rhs = derive_matrix(x0, g)?.sub(&g.mul(d0.matrix())?)?;
    let det = g.determinant()?;
    let scaled = rhs.mul(&g.adjugate()?)?;
    let at = scaled.try_map(|e| e.exact_divide(&det)?.ok_or(Error::SingularPairing))?;
    CdoOperator::new(&space.l, at.transpose(), x0.clone())
}

/// `D₀ = ad X` on `T` and `E₀ = L_X` on `Ω¹`, as matrix-plus-derivation pairs.
pub fn omega_operators(x: &VectorField) -> Result<(CdoOperator, CdoOperator)> {
    let ring = x.ring();
    let n = ring.nvars();
    let module = FreeModuleDesc {
        ring: ring.clone(),
        rank: n,
    };
    let dx = Matrix::try_from_fn(ring, n, n, |i, k| x.coeff(i).derive(k))?;
    let d0 = CdoOperator::new(&module, dx.neg(), x.clone())?;
    let e0 = CdoOperator::new(&module, dx.transpose(), x.clone())?;
    Ok((d0, e0))
}

#[derive(Clone, Debug)]
pub struct PreLieStructure {
    variant: Variant,
    data: StructureData,
    forced: bool,
    omega: Option<(VectorField, VectorField)>,
    symmetry: CheckResult,
    /// `G·y₀`
    gy0: Vector,
    /// `G·D₀y₀`
    gdy0: Vector,
}

impl PreLieStructure {
    /// Refuses with `ConditionViolated` when the symmetry condition fails, unless `force`.
    pub fn new(variant: Variant, data: StructureData, force: bool) -> Result<Self> {
        Self::build(variant, data, force, None)
    }

    fn build(
        variant: Variant,
        data: StructureData,
        force: bool,
        omega: Option<(VectorField, VectorField)>,
    ) -> Result<Self> {
        let dy0 = data.d0.apply(&data.y0)?;
        let gy0 = data.space.lower(&data.y0)?;
        let gdy0 = data.space.lower(&dy0)?;
        let twist = match variant {
            Variant::Thm1 => gdy0.clone(),
            Variant::Thm2 => data.space.lower(&data.d0.apply(&dy0)?)?,
        };
        let symmetry = symmetry_check(&data, variant, &gy0, &twist, omega.is_some())?;
        if symmetry.status == Status::Fail && !force {
            return Err(Error::ConditionViolated {
                variant: variant.to_string(),
                witness: Box::new(symmetry.witness.expect("failed check carries a witness")),
            });
        }
        Ok(PreLieStructure {
            variant,
            data,
            forced: force,
            omega,
            symmetry,
            gy0,
            gdy0,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn data(&self) -> &StructureData {
        &self.data
    }

    pub fn forced(&self) -> bool {
        self.forced
    }

    /// `(X, Y)` when this is the standard `Ω¹` instance.
    pub fn omega(&self) -> Option<(&VectorField, &VectorField)> {
        self.omega.as_ref().map(|(x, y)| (x, y))
    }

    pub fn ring(&self) -> &Ring {
        self.data.ring()
    }

    pub fn l_module(&self) -> &FreeModuleDesc {
        &self.data.space.l
    }

    /// Wraps an `L`-element for witnesses and comparisons.
    pub fn l_item(&self, l: Vector) -> Item {
        if self.omega.is_some() {
            Item::Form(OneForm::from_vector(l).expect("rank equals variable count"))
        } else {
            Item::Vector(l)
        }
    }

    fn check_l(&self, l: &Vector) -> Result<()> {
        ensure_same_ring(self.ring(), l.ring())?;
        if l.len() != self.l_module().rank {
            return Err(Error::DimensionMismatch {
                expected: self.l_module().rank,
                found: l.len(),
            });
        }
        Ok(())
    }

    /// `⟨ℓ, y₀⟩`
    pub fn pair_y0(&self, l: &Vector) -> Result<RingElement> {
        self.check_l(l)?;
        l.dot(&self.gy0)
    }

    /// `⟨ℓ, D₀y₀⟩`
    pub fn pair_dy0(&self, l: &Vector) -> Result<RingElement> {
        self.check_l(l)?;
        l.dot(&self.gdy0)
    }
}

fn symmetry_check(
    data: &StructureData,
    variant: Variant,
    gy0: &Vector,
    twist: &Vector,
    omega: bool,
) -> Result<CheckResult> {
    let l = &data.space.l;
    let wrap = |v: Vector| -> Item {
        if omega {
            Item::Form(OneForm::from_vector(v).expect("rank equals variable count"))
        } else {
            Item::Vector(v)
        }
    };
    let mut trials = 0;
    let mut precision = crate::rings::Comparison::EQUAL;
    for i in 0..l.rank {
        for j in i..l.rank {
            trials += 1;
            if i == j {
                continue;
            }
            let bij = gy0.entry(i) * twist.entry(j);
            let bji = gy0.entry(j) * twist.entry(i);
            let cmp = bij.compare(&bji);
            precision = precision.and(cmp);
            if !cmp.equal {
                let ev = Evidence::new(bij, bji)
                    .input("l1", wrap(l.basis(i)))
                    .input("l2", wrap(l.basis(j)));
                return Ok(CheckResult {
                    name: format!("symmetry_{variant}"),
                    status: Status::Fail,
                    trials,
                    witness: Some(ev.witness()),
                    precision: precision.precision,
                    note: None,
                });
            }
        }
    }
    Ok(CheckResult {
        name: format!("symmetry_{variant}"),
        status: Status::Pass,
        trials,
        witness: None,
        precision: precision.precision,
        note: None,
    })
}

/// Builds the `Ω¹` instance: `G = I`, `y₀ = Y`, `X₀ = X`, `D₀ = ad X`, `E₀ = L_X`.
pub fn standard_omega_instance(
    x: &VectorField,
    y: &VectorField,
    variant: Variant,
    force: bool,
) -> Result<PreLieStructure> {
    ensure_same_ring(x.ring(), y.ring())?;
    let (d0, e0) = omega_operators(x)?;
    let data = StructureData {
        space: PairingSpace::standard(x.ring()),
        y0: y.as_vector().clone(),
        x0: x.clone(),
        d0,
        e0,
    };
    PreLieStructure::build(variant, data, force, Some((x.clone(), y.clone())))
}

/// Symmetry of `B` on every basis pair; a failure names the pair and both values.
pub fn symmetry_condition(s: &PreLieStructure) -> CheckResult {
    s.symmetry.clone()
}

/// `c` with `(ad X)^order Y = c·Y`, if one exists in the carrier.
pub fn eigen_solve(x: &VectorField, y: &VectorField, order: u32) -> Result<Option<RingElement>> {
    ensure_same_ring(x.ring(), y.ring())?;
    if y.is_zero() {
        return Err(Error::ZeroY);
    }
    let mut z = y.clone();
    for _ in 0..order {
        z = vf_bracket(x, &z)?;
    }
    let pivot = y
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("Y is nonzero");
    let Some(c) = z.coeff(pivot).exact_divide(y.coeff(pivot))? else {
        return Ok(None);
    };
    Ok((y.scale(&c)? == z).then_some(c))
}

/// `ℓ₁·ℓ₂`.
pub fn product(s: &PreLieStructure, l1: &Vector, l2: &Vector) -> Result<Vector> {
    s.check_l(l2)?;
    let main = s.data.e0.apply(l2)?.scale(&s.pair_y0(l1)?)?;
    match s.variant {
        Variant::Thm1 => Ok(main),
        Variant::Thm2 => main.sub(&l2.scale(&s.pair_dy0(l1)?)?),
    }
}

/// `[ℓ₁, ℓ₂] = ℓ₁·ℓ₂ − ℓ₂·ℓ₁`.
pub fn bracket(s: &PreLieStructure, l1: &Vector, l2: &Vector) -> Result<Vector> {
    product(s, l1, l2)?.sub(&product(s, l2, l1)?)
}

/// `ρ(ℓ) = ⟨ℓ, y₀⟩ X₀`.
pub fn anchor(s: &PreLieStructure, l: &Vector) -> Result<VectorField> {
    s.data.x0.scale(&s.pair_y0(l)?)
}

/// `(ℓ₁,ℓ₂,ℓ₃) = ℓ₁·(ℓ₂·ℓ₃) − (ℓ₁·ℓ₂)·ℓ₃`.
pub fn associator(s: &PreLieStructure, l1: &Vector, l2: &Vector, l3: &Vector) -> Result<Vector> {
    product(s, l1, &product(s, l2, l3)?)?.sub(&product(s, &product(s, l1, l2)?, l3)?)
}

/// `[ℓ₁,[ℓ₂,ℓ₃]] + [ℓ₂,[ℓ₃,ℓ₁]] + [ℓ₃,[ℓ₁,ℓ₂]]`.
pub fn jacobiator(s: &PreLieStructure, l1: &Vector, l2: &Vector, l3: &Vector) -> Result<Vector> {
    let a = bracket(s, l1, &bracket(s, l2, l3)?)?;
    let b = bracket(s, l2, &bracket(s, l3, l1)?)?;
    let c = bracket(s, l3, &bracket(s, l1, l2)?)?;
    a.add(&b)?.add(&c)
}

/// `∇(ℓ)`: `(⟨ℓ,y₀⟩E₀, ρ(ℓ))`, minus `⟨ℓ,D₀y₀⟩·id` in the matrix part for thm2.
pub fn nabla_operator(s: &PreLieStructure, l: &Vector) -> Result<CdoOperator> {
    let op = s.data.e0.scale(&s.pair_y0(l)?)?;
    match s.variant {
        Variant::Thm1 => Ok(op),
        Variant::Thm2 => {
            let module = s.l_module();
            let shift = Matrix::identity(&module.ring, module.rank).scale(&s.pair_dy0(l)?)?;
            CdoOperator::new(module, op.matrix().sub(&shift)?, op.field().clone())
        }
    }
}

/// Searches triples built from `e_i` and `t_k·e_i` for a failure of left symmetry.
pub fn left_symmetry_witness(s: &PreLieStructure) -> Result<Option<Witness>> {
    let module = s.l_module();
    let ring = &module.ring;
    let mut candidates: Vec<Vector> = (0..module.rank).map(|i| module.basis(i)).collect();
    for k in 0..ring.nvars() {
        let t = RingElement::var(ring, k)?;
        for i in 0..module.rank {
            candidates.push(module.basis(i).scale(&t)?);
        }
    }
    for (a, l1) in candidates.iter().enumerate() {
        for l2 in &candidates[a + 1..] {
            for l3 in &candidates {
                let lhs = associator(s, l1, l2, l3)?;
                let rhs = associator(s, l2, l1, l3)?;
                if lhs != rhs {
                    let ev = Evidence::new(s.l_item(lhs), s.l_item(rhs))
                        .input("l1", s.l_item(l1.clone()))
                        .input("l2", s.l_item(l2.clone()))
                        .input("l3", s.l_item(l3.clone()));
                    return Ok(Some(ev.witness()));
                }
            }
        }
    }
    Ok(None)
}

/// For the `Ω¹` instance: `(r₁, r₂)` with `Y(r₁)X(r₂) ≠ −Y(r₂)X(r₁)`, showing `⟨ρ(dr₁), dr₂⟩` is not skew.
pub fn skew_asymmetry_witness(s: &PreLieStructure, cfg: &SamplerConfig) -> Result<Option<Witness>> {
    let (x, y) = s
        .omega()
        .ok_or_else(|| Error::Config("skew probe needs an Ω¹ instance".into()))?;
    let ring = s.ring();
    let mut candidates: Vec<RingElement> = (0..ring.nvars())
        .map(|i| RingElement::var(ring, i))
        .collect::<Result<_>>()?;
    let mut sampler = Sampler::new(cfg, SKEW_SEARCH_STREAM);
    candidates.extend((0..cfg.trials).map(|_| sampler.element(ring)));
    for r1 in &candidates {
        for r2 in &candidates {
            let lhs = apply(y, r1)? * apply(x, r2)?;
            let rhs = -(apply(y, r2)? * apply(x, r1)?);
            if lhs != rhs {
                let ev = Evidence::new(lhs, rhs)
                    .input("r1", r1.clone())
                    .input("r2", r2.clone());
                return Ok(Some(ev.witness()));
            }
        }
    }
    Ok(None)
}

/// `⟨ρ(dr₁), dr₂⟩` for the `Ω¹` instance.
pub fn anchor_of_differential(
    s: &PreLieStructure,
    r1: &RingElement,
    r2: &RingElement,
) -> Result<RingElement> {
    let rho = anchor(s, d_scalar(r1)?.as_vector())?;
    pair(&d_scalar(r2)?, &rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::lie_derivative;
    use crate::rings::{parse_expression, RingDescriptor};

    fn e(r: &Ring, s: &str) -> RingElement {
        parse_expression(s, r).unwrap()
    }

    fn vf(r: &Ring, cs: &[&str]) -> VectorField {
        VectorField::new(r, cs.iter().map(|c| e(r, c)).collect()).unwrap()
    }

    fn form(r: &Ring, cs: &[&str]) -> Vector {
        Vector::new(r, cs.iter().map(|c| e(r, c)).collect()).unwrap()
    }

    #[test]
    fn one_variable_thm1_is_accepted() {
        let r = RingDescriptor::poly(&["t"]).unwrap();
        let s = standard_omega_instance(&vf(&r, &["t"]), &vf(&r, &["t^3"]), Variant::Thm1, false)
            .unwrap();
        assert!(symmetry_condition(&s).passed());
    }

    #[test]
    fn asymmetric_thm1_is_refused() {
        let r = RingDescriptor::poly(&["t1", "t2"]).unwrap();
        let x = vf(&r, &["1", "0"]);
        let y = vf(&r, &["t1", "1"]);
        let Err(Error::ConditionViolated { witness, .. }) =
            standard_omega_instance(&x, &y, Variant::Thm1, false)
        else {
            panic!("expected refusal");
        };
        assert_eq!(witness.input("l1").unwrap().value, vec!["1", "0"]);
        assert_eq!(witness.input("l2").unwrap().value, vec!["0", "1"]);
        assert_eq!(
            (witness.lhs.clone(), witness.rhs.clone()),
            (vec!["0".to_string()], vec!["1".to_string()])
        );

        let forced = standard_omega_instance(&x, &y, Variant::Thm1, true).unwrap();
        assert_eq!(symmetry_condition(&forced).status, Status::Fail);
        assert!(left_symmetry_witness(&forced).unwrap().is_some());
    }

    #[test]
    fn asymmetric_thm2_values() {
        let r = RingDescriptor::poly(&["t1", "t2"]).unwrap();
        let s = standard_omega_instance(
            &vf(&r, &["1", "0"]),
            &vf(&r, &["t1^2", "1"]),
            Variant::Thm2,
            true,
        )
        .unwrap();
        let w = symmetry_condition(&s).witness.unwrap();
        assert_eq!(
            (w.lhs, w.rhs),
            (vec!["0".to_string()], vec!["2".to_string()])
        );
    }

    #[test]
    fn eigen_examples() {
        let r = RingDescriptor::poly(&["t"]).unwrap();
        assert_eq!(
            eigen_solve(&vf(&r, &["t"]), &vf(&r, &["t^3"]), 1).unwrap(),
            Some(e(&r, "2"))
        );
        assert_eq!(
            eigen_solve(&vf(&r, &["1"]), &vf(&r, &["t"]), 1).unwrap(),
            None
        );
        assert_eq!(
            eigen_solve(&vf(&r, &["1"]), &vf(&r, &["t"]), 2).unwrap(),
            Some(e(&r, "0"))
        );
        assert_eq!(
            eigen_solve(&vf(&r, &["1"]), &vf(&r, &["0"]), 1).unwrap_err(),
            Error::ZeroY
        );

        let r2 = RingDescriptor::poly(&["t1", "t2"]).unwrap();
        let c = eigen_solve(&vf(&r2, &["t1", "t2"]), &vf(&r2, &["t1*t2", "0"]), 1).unwrap();
        assert_eq!(c, Some(e(&r2, "1")));
    }

    #[test]
    fn dual_operator_examples() {
        let r = RingDescriptor::poly(&["t1", "t2"]).unwrap();
        let x = vf(&r, &["t2^2", "t1*t2 - 1"]);
        let (d0, e0) = omega_operators(&x).unwrap();
        let derived = derive_dual_operator(&PairingSpace::standard(&r), &d0, &x).unwrap();
        assert_eq!(derived, e0);
        let alpha = form(&r, &["t1^3", "2*t2 + t1"]);
        let expected = lie_derivative(&x, &OneForm::from_vector(alpha.clone()).unwrap()).unwrap();
        assert_eq!(&derived.apply(&alpha).unwrap(), expected.as_vector());

        let zero = CdoOperator::zero(&PairingSpace::standard(&r).n);
        let e_zero =
            derive_dual_operator(&PairingSpace::standard(&r), &zero, &VectorField::zero(&r))
                .unwrap();
        assert_eq!(e_zero, CdoOperator::zero(&PairingSpace::standard(&r).l));

        let one = RingDescriptor::poly(&["t"]).unwrap();
        let m = FreeModuleDesc::new(&one, 1).unwrap();
        let space = PairingSpace::new(&m, &m, Matrix::identity(&one, 1)).unwrap();
        let d = CdoOperator::new(&m, Matrix::zero(&one, 1), vf(&one, &["1"])).unwrap();
        assert_eq!(
            derive_dual_operator(&space, &d, &vf(&one, &["1"])).unwrap(),
            d
        );
    }

    #[test]
    fn singular_pairing() {
        let r = RingDescriptor::poly(&["t"]).unwrap();
        let m = FreeModuleDesc::new(&r, 2).unwrap();
        let g = Matrix::from_rows(
            &r,
            vec![vec![e(&r, "t"), e(&r, "1")], vec![e(&r, "t^2"), e(&r, "t")]],
        )
        .unwrap();
        assert_eq!(
            PairingSpace::new(&m, &m, g).unwrap_err(),
            Error::SingularPairing
        );

        let g = Matrix::from_rows(
            &r,
            vec![vec![e(&r, "t"), e(&r, "0")], vec![e(&r, "0"), e(&r, "1")]],
        )
        .unwrap();
        let space = PairingSpace::new(&m, &m, g).unwrap();
        let d = CdoOperator::new(&m, Matrix::zero(&r, 2), vf(&r, &["1"])).unwrap();
        assert_eq!(
            derive_dual_operator(&space, &d, &vf(&r, &["1"])).unwrap_err(),
            Error::SingularPairing
        );
    }

    #[test]
    fn product_examples() {
        let r = RingDescriptor::poly(&["t"]).unwrap();
        let (f, g, h) = ("t^2 + 1", "t^3 - t", "2*t^4 + t");
        let x = vf(&r, &["1"]);
        let y = vf(&r, &[g]);
        let (l1, l2) = (form(&r, &[f]), form(&r, &[h]));
        let fg = e(&r, f) * e(&r, g);
        let dh = e(&r, h).derive(0).unwrap();

        let s1 = standard_omega_instance(&x, &y, Variant::Thm1, false).unwrap();
        assert_eq!(
            product(&s1, &l1, &l2).unwrap(),
            Vector::new(&r, vec![&fg * &dh]).unwrap()
        );

        let s2 = standard_omega_instance(&x, &y, Variant::Thm2, false).unwrap();
        let dg = e(&r, g).derive(0).unwrap();
        let expected = &fg * &dh - e(&r, f) * dg * e(&r, h);
        assert_eq!(
            product(&s2, &l1, &l2).unwrap(),
            Vector::new(&r, vec![expected]).unwrap()
        );

        let zero = form(&r, &["0"]);
        assert!(product(&s1, &zero, &l2).unwrap().is_zero());
        assert!(product(&s2, &zero, &l2).unwrap().is_zero());
        assert_eq!(anchor(&s1, &l1).unwrap(), vf(&r, &[&fg.to_string()]));
    }

    #[test]
    fn nabla_matches_product() {
        let r = RingDescriptor::poly(&["t1", "t2"]).unwrap();
        let s = standard_omega_instance(
            &vf(&r, &["t1", "t2"]),
            &vf(&r, &["t1*t2", "0"]),
            Variant::Thm2,
            true,
        )
        .unwrap();
        let l1 = form(&r, &["t2", "t1^2"]);
        let l2 = form(&r, &["1 - t1", "t2^3"]);
        let nabla = nabla_operator(&s, &l1).unwrap();
        assert_eq!(nabla.apply(&l2).unwrap(), product(&s, &l1, &l2).unwrap());
        assert_eq!(nabla.field(), &anchor(&s, &l1).unwrap());
    }
}
