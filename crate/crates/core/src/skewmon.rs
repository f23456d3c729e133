//! Skew monoidal structures and their verification: the five coherence
//! axioms, the three (op)monoidal functor axioms, internal-hom
//! representability, and the five-way reflective lemma.
//!
//! A left skew structure has constraints pointing in fixed directions,
//! none assumed invertible:
//! `α : (A⊗B)⊗C → A⊗(B⊗C)`, `λ : I⊗A → A`, `ρ : A → A⊗I`.
//!
//! The five axioms checked here:
//!   pentagon  α∘α = (1⊗α)∘α∘(α⊗1)
//!   left-unit λ_{B⊗C}∘α_{I,B,C} = λ_B⊗1_C
//!   mid-unit  (1_A⊗λ_C)∘α_{A,I,C}∘(ρ_A⊗1_C) = 1
//!   right-unit α_{A,B,I}∘ρ_{A⊗B} = 1_A⊗ρ_B
//!   unit-unit λ_I∘ρ_I = 1_I

use crate::fincat::{Category, FinCategory, Finite, Fun, MorId, ObjId};
use crate::reflection::Adjunction;
use crate::report::{AxiomOutcome, AxiomReport, Error};
use serde::Serialize;
use std::fmt;
use std::rc::Rc;

/// A (left) skew monoidal structure on a carrier category.
pub struct SkewMonoidal<C: Category> {
    pub carrier: C,
    pub unit: C::Obj,
    tensor_obj: Rc<dyn Fn(&C::Obj, &C::Obj) -> C::Obj>,
    tensor_mor: Rc<dyn Fn(&C::Mor, &C::Mor) -> C::Mor>,
    alpha: Rc<dyn Fn(&C::Obj, &C::Obj, &C::Obj) -> C::Mor>,
    lambda: Rc<dyn Fn(&C::Obj) -> C::Mor>,
    rho: Rc<dyn Fn(&C::Obj) -> C::Mor>,
}

impl<C: Category> Clone for SkewMonoidal<C> {
    fn clone(&self) -> Self {
        SkewMonoidal {
            carrier: self.carrier.clone(),
            unit: self.unit.clone(),
            tensor_obj: self.tensor_obj.clone(),
            tensor_mor: self.tensor_mor.clone(),
            alpha: self.alpha.clone(),
            lambda: self.lambda.clone(),
            rho: self.rho.clone(),
        }
    }
}

impl<C: Category> fmt::Debug for SkewMonoidal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewMonoidal")
    }
}

impl<C: Category> SkewMonoidal<C> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        carrier: C,
        unit: C::Obj,
        tensor_obj: impl Fn(&C::Obj, &C::Obj) -> C::Obj + 'static,
        tensor_mor: impl Fn(&C::Mor, &C::Mor) -> C::Mor + 'static,
        alpha: impl Fn(&C::Obj, &C::Obj, &C::Obj) -> C::Mor + 'static,
        lambda: impl Fn(&C::Obj) -> C::Mor + 'static,
        rho: impl Fn(&C::Obj) -> C::Mor + 'static,
    ) -> Self {
        SkewMonoidal {
            carrier,
            unit,
            tensor_obj: Rc::new(tensor_obj),
            tensor_mor: Rc::new(tensor_mor),
            alpha: Rc::new(alpha),
            lambda: Rc::new(lambda),
            rho: Rc::new(rho),
        }
    }

    pub fn tensor(&self, a: &C::Obj, b: &C::Obj) -> C::Obj {
        (self.tensor_obj)(a, b)
    }

    pub fn tensor_mor(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        (self.tensor_mor)(f, g)
    }

    /// `1_a ⊗ g`.
    pub fn tensor_left(&self, a: &C::Obj, g: &C::Mor) -> C::Mor {
        self.tensor_mor(&self.carrier.identity(a), g)
    }

    /// `f ⊗ 1_b`.
    pub fn tensor_right(&self, f: &C::Mor, b: &C::Obj) -> C::Mor {
        self.tensor_mor(f, &self.carrier.identity(b))
    }

    pub fn alpha(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> C::Mor {
        (self.alpha)(a, b, c)
    }

    pub fn lambda(&self, a: &C::Obj) -> C::Mor {
        (self.lambda)(a)
    }

    pub fn rho(&self, a: &C::Obj) -> C::Mor {
        (self.rho)(a)
    }
}

fn expect_endpoints<C: Category>(
    cat: &C,
    m: &C::Mor,
    src: &C::Obj,
    tgt: &C::Obj,
    what: &str,
    instance: &str,
) -> Result<(), Error> {
    if cat.src(m) != *src {
        return Err(Error::structural(
            what,
            format!("component at {instance} has wrong source"),
        ));
    }
    if cat.tgt(m) != *tgt {
        return Err(Error::structural(
            what,
            format!("component at {instance} has wrong target"),
        ));
    }
    Ok(())
}

/// Verify the five skew coherence axioms on the given object quadruples.
/// The pentagon uses the full quadruple; the unit axioms use slices of it.
/// Every constraint component is endpoint-checked before composing, so
/// malformed structures yield a structural error rather than a panic.
pub fn check_skew_axioms<C: Category>(
    s: &SkewMonoidal<C>,
    tuples: &[[C::Obj; 4]],
) -> Result<AxiomReport, Error> {
    let cat = &s.carrier;
    let i = &s.unit;
    let mut pentagon = AxiomOutcome::new("pentagon");
    let mut left_unit = AxiomOutcome::new("left-unit");
    let mut mid_unit = AxiomOutcome::new("mid-unit");
    let mut right_unit = AxiomOutcome::new("right-unit");
    let mut unit_unit = AxiomOutcome::new("unit-unit");

    let alpha = |x: &C::Obj, y: &C::Obj, z: &C::Obj, inst: &str| -> Result<C::Mor, Error> {
        let m = s.alpha(x, y, z);
        expect_endpoints(
            cat,
            &m,
            &s.tensor(&s.tensor(x, y), z),
            &s.tensor(x, &s.tensor(y, z)),
            "check_skew_axioms",
            &format!("alpha at {inst}"),
        )?;
        Ok(m)
    };
    let lambda = |x: &C::Obj, inst: &str| -> Result<C::Mor, Error> {
        let m = s.lambda(x);
        expect_endpoints(cat, &m, &s.tensor(i, x), x, "check_skew_axioms", &format!("lambda at {inst}"))?;
        Ok(m)
    };
    let rho = |x: &C::Obj, inst: &str| -> Result<C::Mor, Error> {
        let m = s.rho(x);
        expect_endpoints(cat, &m, x, &s.tensor(x, i), "check_skew_axioms", &format!("rho at {inst}"))?;
        Ok(m)
    };

    // λ_I ∘ ρ_I = 1_I, once.
    {
        let lhs = cat.compose(&lambda(i, "I")?, &rho(i, "I")?);
        unit_unit.record("I", &cat.mor_label(&lhs), "1_I", lhs == cat.identity(i));
    }

    for [a, b, c, d] in tuples {
        let labels = |os: &[&C::Obj]| {
            os.iter().map(|o| cat.obj_label(o)).collect::<Vec<_>>().join(", ")
        };
        // Pentagon on (A, B, C, D).
        {
            let inst = format!("({})", labels(&[a, b, c, d]));
            let ab = s.tensor(a, b);
            let cd = s.tensor(c, d);
            let bc = s.tensor(b, c);
            let lhs = cat.compose(&alpha(a, b, &cd, &inst)?, &alpha(&ab, c, d, &inst)?);
            let rhs = cat.compose(
                &s.tensor_left(a, &alpha(b, c, d, &inst)?),
                &cat.compose(
                    &alpha(a, &bc, d, &inst)?,
                    &s.tensor_right(&alpha(a, b, c, &inst)?, d),
                ),
            );
            pentagon.record(&inst, &cat.mor_label(&lhs), &cat.mor_label(&rhs), lhs == rhs);
        }
        // λ_{B⊗C} ∘ α_{I,B,C} = λ_B ⊗ 1_C on (B, C).
        {
            let inst = format!("({})", labels(&[b, c]));
            let bc = s.tensor(b, c);
            let lhs = cat.compose(&lambda(&bc, &inst)?, &alpha(i, b, c, &inst)?);
            let rhs = s.tensor_right(&lambda(b, &inst)?, c);
            left_unit.record(&inst, &cat.mor_label(&lhs), &cat.mor_label(&rhs), lhs == rhs);
        }
        // (1_A ⊗ λ_C) ∘ α_{A,I,C} ∘ (ρ_A ⊗ 1_C) = 1 on (A, C).
        {
            let inst = format!("({})", labels(&[a, c]));
            let ac = s.tensor(a, c);
            let lhs = cat.compose(
                &s.tensor_left(a, &lambda(c, &inst)?),
                &cat.compose(&alpha(a, i, c, &inst)?, &s.tensor_right(&rho(a, &inst)?, c)),
            );
            mid_unit.record(&inst, &cat.mor_label(&lhs), "1", lhs == cat.identity(&ac));
        }
        // α_{A,B,I} ∘ ρ_{A⊗B} = 1_A ⊗ ρ_B on (A, B).
        {
            let inst = format!("({})", labels(&[a, b]));
            let ab = s.tensor(a, b);
            let lhs = cat.compose(&alpha(a, b, i, &inst)?, &rho(&ab, &inst)?);
            let rhs = s.tensor_left(a, &rho(b, &inst)?);
            right_unit.record(&inst, &cat.mor_label(&lhs), &cat.mor_label(&rhs), lhs == rhs);
        }
    }

    let mut report = AxiomReport::default();
    report.push(pentagon);
    report.push(left_unit);
    report.push(mid_unit);
    report.push(right_unit);
    report.push(unit_unit);
    Ok(report)
}

/// Exhaustive variant: all object quadruples of a finite carrier.
pub fn check_skew_axioms_all<C: Finite>(s: &SkewMonoidal<C>) -> Result<AxiomReport, Error> {
    let obs = s.carrier.objects();
    let mut tuples = Vec::with_capacity(obs.len().pow(4));
    for a in &obs {
        for b in &obs {
            for c in &obs {
                for d in &obs {
                    tuples.push([a.clone(), b.clone(), c.clone(), d.clone()]);
                }
            }
        }
    }
    check_skew_axioms(s, &tuples)
}

/// Bifunctoriality and constraint naturality on sampled morphism triples.
pub fn check_structure<C: Category>(
    s: &SkewMonoidal<C>,
    triples: &[[C::Mor; 3]],
) -> AxiomReport {
    let cat = &s.carrier;
    let mut interchange = AxiomOutcome::new("tensor-interchange");
    let mut tensor_id = AxiomOutcome::new("tensor-identities");
    let mut nat_alpha = AxiomOutcome::new("alpha-naturality");
    let mut nat_lambda = AxiomOutcome::new("lambda-naturality");
    let mut nat_rho = AxiomOutcome::new("rho-naturality");
    for [f, g, h] in triples {
        let inst = format!(
            "({}, {}, {})",
            cat.mor_label(f),
            cat.mor_label(g),
            cat.mor_label(h)
        );
        let (fa, fb) = (cat.src(f), cat.tgt(f));
        let (ga, gb) = (cat.src(g), cat.tgt(g));
        let (ha, hb) = (cat.src(h), cat.tgt(h));
        // Interchange: (g'∘f')⊗(g∘f) = (g'⊗g)∘(f'⊗f), with g' = h∘(junk)? Use
        // composables built from f,g,h where possible: (f then id) suffices to
        // exercise both variables, so use f,g horizontally and h vertically:
        // (h∘?).. keep it honest: only when f,g composable with themselves via
        // identities. We check the middle-four on (f;1)×(1;g):
        {
            let lhs = s.tensor_mor(
                &cat.compose(&cat.identity(&fb), f),
                &cat.compose(g, &cat.identity(&ga)),
            );
            let rhs = cat.compose(
                &s.tensor_mor(&cat.identity(&fb), g),
                &s.tensor_mor(f, &cat.identity(&ga)),
            );
            interchange.record(&inst, &cat.mor_label(&lhs), &cat.mor_label(&rhs), lhs == rhs);
        }
        {
            let lhs = s.tensor_mor(&cat.identity(&fa), &cat.identity(&ga));
            let rhs = cat.identity(&s.tensor(&fa, &ga));
            tensor_id.record(&inst, &cat.mor_label(&lhs), &cat.mor_label(&rhs), lhs == rhs);
        }
        // α natural in all three variables.
        {
            let lhs = cat.compose(
                &s.alpha(&fb, &gb, &hb),
                &s.tensor_mor(&s.tensor_mor(f, g), h),
            );
            let rhs = cat.compose(
                &s.tensor_mor(f, &s.tensor_mor(g, h)),
                &s.alpha(&fa, &ga, &ha),
            );
            nat_alpha.record(&inst, &cat.mor_label(&lhs), &cat.mor_label(&rhs), lhs == rhs);
        }
        // λ natural.
        {
            let lhs = cat.compose(f, &s.lambda(&fa));
            let rhs = cat.compose(&s.lambda(&fb), &s.tensor_left(&s.unit, f));
            nat_lambda.record(&inst, &cat.mor_label(&lhs), &cat.mor_label(&rhs), lhs == rhs);
        }
        // ρ natural.
        {
            let lhs = cat.compose(&s.rho(&fb), f);
            let rhs = cat.compose(&s.tensor_right(f, &s.unit), &s.rho(&fa));
            nat_rho.record(&inst, &cat.mor_label(&lhs), &cat.mor_label(&rhs), lhs == rhs);
        }
    }
    let mut report = AxiomReport::default();
    report.push(interchange);
    report.push(tensor_id);
    report.push(nat_alpha);
    report.push(nat_lambda);
    report.push(nat_rho);
    report
}

/// An opmonoidal structure on a functor between skew monoidal carriers:
/// `ψ0 : FI → Ī` and `ψ_{X,Y} : F(X⊗Y) → FX ⊗̄ FY`.
pub struct Opmonoidal<X: Category, A: Category> {
    pub f: Fun<X, A>,
    pub dom: SkewMonoidal<X>,
    pub cod: SkewMonoidal<A>,
    pub psi0: A::Mor,
    psi: Rc<dyn Fn(&X::Obj, &X::Obj) -> A::Mor>,
}

impl<X: Category, A: Category> Clone for Opmonoidal<X, A> {
    fn clone(&self) -> Self {
        Opmonoidal {
            f: self.f.clone(),
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            psi0: self.psi0.clone(),
            psi: self.psi.clone(),
        }
    }
}

impl<X: Category, A: Category> Opmonoidal<X, A> {
    pub fn new(
        f: Fun<X, A>,
        dom: SkewMonoidal<X>,
        cod: SkewMonoidal<A>,
        psi0: A::Mor,
        psi: impl Fn(&X::Obj, &X::Obj) -> A::Mor + 'static,
    ) -> Self {
        Opmonoidal { f, dom, cod, psi0, psi: Rc::new(psi) }
    }

    pub fn psi(&self, x: &X::Obj, y: &X::Obj) -> A::Mor {
        (self.psi)(x, y)
    }

    /// Identity opmonoidal structure on the identity functor.
    pub fn identity(s: &SkewMonoidal<X>) -> Opmonoidal<X, X> {
        let cat = s.carrier.clone();
        let s2 = s.clone();
        Opmonoidal::new(
            Fun::<X, X>::id(cat.clone()),
            s.clone(),
            s.clone(),
            cat.identity(&s.unit),
            move |x, y| s2.carrier.identity(&s2.tensor(x, y)),
        )
    }
}

/// Flags and per-pair invertibility alongside the three axiom outcomes.
#[derive(Debug, Clone, Serialize)]
pub struct OpmonoidalReport {
    pub axioms: AxiomReport,
    /// ψ0 invertible.
    pub normal: bool,
    /// ψ0 and every checked ψ component invertible.
    pub strong: bool,
    /// Per checked pair: (instance, invertible).
    pub psi_invertible: Vec<(String, bool)>,
}

impl OpmonoidalReport {
    pub fn passed(&self) -> bool {
        self.axioms.passed()
    }
}

/// Verify the three opmonoidal axioms on the given object triples:
///   (O1) ᾱ∘(ψ⊗̄1)∘ψ_{X⊗Y,Z} = (1⊗̄ψ)∘ψ_{X,Y⊗Z}∘Fα
///   (O2) λ̄∘(ψ0⊗̄1)∘ψ_{I,X} = Fλ_X
///   (O3) (1⊗̄ψ0)∘ψ_{X,I}∘Fρ_X = ρ̄_{FX}
pub fn check_opmonoidal<X: Category, A: Category>(
    o: &Opmonoidal<X, A>,
    triples: &[[X::Obj; 3]],
) -> Result<OpmonoidalReport, Error> {
    let dom = &o.dom;
    let cod = &o.cod;
    let acat = &cod.carrier;
    let i = &dom.unit;
    let ibar = &cod.unit;
    expect_endpoints(
        acat,
        &o.psi0,
        &o.f.ob(&dom.ob_unit()),
        ibar,
        "check_opmonoidal",
        "psi0",
    )?;
    let mut o1 = AxiomOutcome::new("opmonoidal-assoc");
    let mut o2 = AxiomOutcome::new("opmonoidal-left-unit");
    let mut o3 = AxiomOutcome::new("opmonoidal-right-unit");
    let mut psi_invertible = Vec::new();
    let mut strong = acat.inverse(&o.psi0).is_some();
    let normal = strong;
    let psi_checked = |x: &X::Obj, y: &X::Obj, inst: &str| -> Result<A::Mor, Error> {
        let m = o.psi(x, y);
        expect_endpoints(
            acat,
            &m,
            &o.f.ob(&dom.tensor(x, y)),
            &cod.tensor(&o.f.ob(x), &o.f.ob(y)),
            "check_opmonoidal",
            &format!("psi at {inst}"),
        )?;
        Ok(m)
    };
    for [x, y, z] in triples {
        let inst = format!(
            "({}, {}, {})",
            dom.carrier.obj_label(x),
            dom.carrier.obj_label(y),
            dom.carrier.obj_label(z)
        );
        let fx = o.f.ob(x);
        let fy = o.f.ob(y);
        let fz = o.f.ob(z);
        let xy = dom.tensor(x, y);
        let yz = dom.tensor(y, z);
        let psi_xy = psi_checked(x, y, &inst)?;
        {
            let inv = acat.inverse(&psi_xy).is_some();
            strong &= inv;
            psi_invertible.push((
                format!("({}, {})", dom.carrier.obj_label(x), dom.carrier.obj_label(y)),
                inv,
            ));
        }
        // (O1)
        {
            let lhs = acat.compose(
                &cod.alpha(&fx, &fy, &fz),
                &acat.compose(&cod.tensor_right(&psi_xy, &fz), &psi_checked(&xy, z, &inst)?),
            );
            let rhs = acat.compose(
                &cod.tensor_left(&fx, &psi_checked(y, z, &inst)?),
                &acat.compose(&psi_checked(x, &yz, &inst)?, &o.f.mor(&dom.alpha(x, y, z))),
            );
            o1.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
        // (O2)
        {
            let lhs = acat.compose(
                &cod.lambda(&fx),
                &acat.compose(&cod.tensor_right(&o.psi0, &fx), &psi_checked(i, x, &inst)?),
            );
            let rhs = o.f.mor(&dom.lambda(x));
            o2.record(
                &dom.carrier.obj_label(x),
                &acat.mor_label(&lhs),
                &acat.mor_label(&rhs),
                lhs == rhs,
            );
        }
        // (O3)
        {
            let lhs = acat.compose(
                &cod.tensor_left(&fx, &o.psi0),
                &acat.compose(&psi_checked(x, i, &inst)?, &o.f.mor(&dom.rho(x))),
            );
            let rhs = cod.rho(&fx);
            o3.record(
                &dom.carrier.obj_label(x),
                &acat.mor_label(&lhs),
                &acat.mor_label(&rhs),
                lhs == rhs,
            );
        }
    }
    let mut axioms = AxiomReport::default();
    axioms.push(o1);
    axioms.push(o2);
    axioms.push(o3);
    Ok(OpmonoidalReport { axioms, normal, strong, psi_invertible })
}

impl<C: Category> SkewMonoidal<C> {
    fn ob_unit(&self) -> C::Obj {
        self.unit.clone()
    }
}

/// A monoidal structure on a functor `R` between skew monoidal carriers:
/// `φ0 : Ī → RI` and `φ_{X,Y} : RX ⊗̄ RY → R(X⊗Y)`.
pub struct Monoidal<X: Category, A: Category> {
    pub f: Fun<X, A>,
    pub dom: SkewMonoidal<X>,
    pub cod: SkewMonoidal<A>,
    pub phi0: A::Mor,
    phi: Rc<dyn Fn(&X::Obj, &X::Obj) -> A::Mor>,
}

impl<X: Category, A: Category> Clone for Monoidal<X, A> {
    fn clone(&self) -> Self {
        Monoidal {
            f: self.f.clone(),
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            phi0: self.phi0.clone(),
            phi: self.phi.clone(),
        }
    }
}

impl<X: Category, A: Category> Monoidal<X, A> {
    pub fn new(
        f: Fun<X, A>,
        dom: SkewMonoidal<X>,
        cod: SkewMonoidal<A>,
        phi0: A::Mor,
        phi: impl Fn(&X::Obj, &X::Obj) -> A::Mor + 'static,
    ) -> Self {
        Monoidal { f, dom, cod, phi0, phi: Rc::new(phi) }
    }

    pub fn phi(&self, x: &X::Obj, y: &X::Obj) -> A::Mor {
        (self.phi)(x, y)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MonoidalReport {
    pub axioms: AxiomReport,
    pub normal: bool,
    pub phi_invertible: Vec<(String, bool)>,
}

impl MonoidalReport {
    pub fn passed(&self) -> bool {
        self.axioms.passed()
    }
}

/// The dual three axioms:
///   (M1) Rα∘φ_{X⊗Y,Z}∘(φ⊗̄1) = φ_{X,Y⊗Z}∘(1⊗̄φ)∘ᾱ
///   (M2) Rλ∘φ_{I,X}∘(φ0⊗̄1) = λ̄_{RX}
///   (M3) φ_{X,I}∘(1⊗̄φ0)∘ρ̄_{RX} = Rρ_X
pub fn check_monoidal<X: Category, A: Category>(
    m: &Monoidal<X, A>,
    triples: &[[X::Obj; 3]],
) -> Result<MonoidalReport, Error> {
    let dom = &m.dom;
    let cod = &m.cod;
    let acat = &cod.carrier;
    let i = &dom.unit;
    expect_endpoints(
        acat,
        &m.phi0,
        &cod.unit,
        &m.f.ob(i),
        "check_monoidal",
        "phi0",
    )?;
    let mut m1 = AxiomOutcome::new("monoidal-assoc");
    let mut m2 = AxiomOutcome::new("monoidal-left-unit");
    let mut m3 = AxiomOutcome::new("monoidal-right-unit");
    let mut phi_invertible = Vec::new();
    let normal = acat.inverse(&m.phi0).is_some();
    let phi_checked = |x: &X::Obj, y: &X::Obj, inst: &str| -> Result<A::Mor, Error> {
        let mor = m.phi(x, y);
        expect_endpoints(
            acat,
            &mor,
            &cod.tensor(&m.f.ob(x), &m.f.ob(y)),
            &m.f.ob(&dom.tensor(x, y)),
            "check_monoidal",
            &format!("phi at {inst}"),
        )?;
        Ok(mor)
    };
    for [x, y, z] in triples {
        let inst = format!(
            "({}, {}, {})",
            dom.carrier.obj_label(x),
            dom.carrier.obj_label(y),
            dom.carrier.obj_label(z)
        );
        let rx = m.f.ob(x);
        let ry = m.f.ob(y);
        let rz = m.f.ob(z);
        let xy = dom.tensor(x, y);
        let yz = dom.tensor(y, z);
        let phi_xy = phi_checked(x, y, &inst)?;
        phi_invertible.push((
            format!("({}, {})", dom.carrier.obj_label(x), dom.carrier.obj_label(y)),
            acat.inverse(&phi_xy).is_some(),
        ));
        // (M1)
        {
            let lhs = acat.compose(
                &m.f.mor(&dom.alpha(x, y, z)),
                &acat.compose(&phi_checked(&xy, z, &inst)?, &cod.tensor_right(&phi_xy, &rz)),
            );
            let rhs = acat.compose(
                &phi_checked(x, &yz, &inst)?,
                &acat.compose(
                    &cod.tensor_left(&rx, &phi_checked(y, z, &inst)?),
                    &cod.alpha(&rx, &ry, &rz),
                ),
            );
            m1.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
        // (M2)
        {
            let lhs = acat.compose(
                &m.f.mor(&dom.lambda(x)),
                &acat.compose(&phi_checked(i, x, &inst)?, &cod.tensor_right(&m.phi0, &rx)),
            );
            let rhs = cod.lambda(&rx);
            m2.record(
                &dom.carrier.obj_label(x),
                &acat.mor_label(&lhs),
                &acat.mor_label(&rhs),
                lhs == rhs,
            );
        }
        // (M3)
        {
            let lhs = acat.compose(
                &phi_checked(x, i, &inst)?,
                &acat.compose(&cod.tensor_left(&rx, &m.phi0), &cod.rho(&rx)),
            );
            let rhs = m.f.mor(&dom.rho(x));
            m3.record(
                &dom.carrier.obj_label(x),
                &acat.mor_label(&lhs),
                &acat.mor_label(&rhs),
                lhs == rhs,
            );
        }
    }
    let mut axioms = AxiomReport::default();
    axioms.push(m1);
    axioms.push(m2);
    axioms.push(m3);
    Ok(MonoidalReport { axioms, normal, phi_invertible })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HomKind {
    Left,
    Right,
}

/// A representing object with its evaluation morphism.
/// Left: `H = [Y,Z]` with `u : H⊗Y → Z` and `f ↦ u∘(f⊗1_Y)` bijective.
/// Right: `H = ⟨X,Z⟩` with `u : X⊗H → Z` and `g ↦ u∘(1_X⊗g)` bijective.
/// `fixed` is the frozen argument (`Y` for left, `X` for right).
#[derive(Debug, Clone)]
pub struct InternalHomWitness<C: Category> {
    pub kind: HomKind,
    pub hom_object: C::Obj,
    pub evaluation: C::Mor,
    pub fixed: C::Obj,
    pub target: C::Obj,
}

impl<C: Category> InternalHomWitness<C> {
    /// The representability bijection applied to one morphism into the
    /// representing object.
    pub fn transpose(&self, s: &SkewMonoidal<C>, f: &C::Mor) -> C::Mor {
        match self.kind {
            HomKind::Left => {
                s.carrier.compose(&self.evaluation, &s.tensor_right(f, &self.fixed))
            }
            HomKind::Right => {
                s.carrier.compose(&self.evaluation, &s.tensor_left(&self.fixed, f))
            }
        }
    }
}

fn is_bijection_onto<C: Category>(images: &[C::Mor], codomain: &[C::Mor]) -> bool {
    if images.len() != codomain.len() {
        return false;
    }
    // Injectivity + containment; sizes equal then bijective.
    for (i, m) in images.iter().enumerate() {
        if images[..i].contains(m) {
            return false;
        }
        if !codomain.contains(m) {
            return false;
        }
    }
    true
}

/// Search for a left internal hom `[Y, Z]`: an object `H` and evaluation
/// `u : H⊗Y → Z` making `hom(X,H) → hom(X⊗Y,Z)`, `f ↦ u∘(f⊗1_Y)` bijective
/// for every `X`. Exhaustive over the finite carrier.
pub fn left_hom<C: Finite>(
    s: &SkewMonoidal<C>,
    y: &C::Obj,
    z: &C::Obj,
) -> Option<InternalHomWitness<C>> {
    let cat = &s.carrier;
    for h in cat.objects() {
        let hy = s.tensor(&h, y);
        'cand: for u in cat.hom(&hy, z) {
            for x in cat.objects() {
                let xy = s.tensor(&x, y);
                let images: Vec<C::Mor> = cat
                    .hom(&x, &h)
                    .iter()
                    .map(|f| cat.compose(&u, &s.tensor_right(f, y)))
                    .collect();
                if !is_bijection_onto::<C>(&images, &cat.hom(&xy, z)) {
                    continue 'cand;
                }
            }
            return Some(InternalHomWitness {
                kind: HomKind::Left,
                hom_object: h,
                evaluation: u,
                fixed: y.clone(),
                target: z.clone(),
            });
        }
    }
    None
}

/// Search for a right internal hom `⟨X, Z⟩` dually.
pub fn right_hom<C: Finite>(
    s: &SkewMonoidal<C>,
    x: &C::Obj,
    z: &C::Obj,
) -> Option<InternalHomWitness<C>> {
    let cat = &s.carrier;
    for h in cat.objects() {
        let xh = s.tensor(x, &h);
        'cand: for u in cat.hom(&xh, z) {
            for y in cat.objects() {
                let xy = s.tensor(x, &y);
                let images: Vec<C::Mor> = cat
                    .hom(&y, &h)
                    .iter()
                    .map(|g| cat.compose(&u, &s.tensor_left(x, g)))
                    .collect();
                if !is_bijection_onto::<C>(&images, &cat.hom(&xy, z)) {
                    continue 'cand;
                }
            }
            return Some(InternalHomWitness {
                kind: HomKind::Right,
                hom_object: h,
                evaluation: u,
                fixed: x.clone(),
                target: z.clone(),
            });
        }
    }
    None
}

/// The five equivalent conditions of the reflective lemma, evaluated
/// independently of each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiveConditions {
    /// Z ≅ NA for some A (exhaustive iso search).
    pub i: bool,
    /// hom(η_X, 1) : hom(NLX, Z) → hom(X, Z) surjective for all X.
    pub ii: bool,
    /// η_Z is a split monomorphism.
    pub iii: bool,
    /// η_Z is invertible.
    pub iv: bool,
    /// hom(η_X, 1) bijective for all X.
    pub v: bool,
}

impl FiveConditions {
    pub fn all_equal(&self) -> bool {
        let FiveConditions { i, ii, iii, iv, v } = *self;
        ii == i && iii == i && iv == i && v == i
    }
}

/// Evaluate conditions (i)–(v) for an object `z` of the base of a reflection.
/// Requires the counit invertible (equivalently, the right adjoint fully
/// faithful); errors otherwise.
pub fn reflective_lemma<X: Finite, A: Finite>(
    adj: &Adjunction<X, A>,
    z: &X::Obj,
) -> Result<FiveConditions, Error> {
    let xcat = &adj.left.dom;
    let acat = &adj.left.cod;
    for a in acat.objects() {
        if acat.inverse(&adj.counit_at(&a)).is_none() {
            return Err(Error::precondition(
                "reflective_lemma",
                format!("counit not invertible at {}", acat.obj_label(&a)),
            ));
        }
    }
    // N fully faithful: hom bijections through mmap.
    for a in acat.objects() {
        for b in acat.objects() {
            let images: Vec<X::Mor> =
                acat.hom(&a, &b).iter().map(|f| adj.right.mor(f)).collect();
            let codomain = xcat.hom(&adj.right.ob(&a), &adj.right.ob(&b));
            if !is_bijection_onto::<X>(&images, &codomain) {
                return Err(Error::precondition(
                    "reflective_lemma",
                    format!(
                        "N not fully faithful at ({}, {})",
                        acat.obj_label(&a),
                        acat.obj_label(&b)
                    ),
                ));
            }
        }
    }

    let nl = |x: &X::Obj| adj.right.ob(&adj.left.ob(x));
    // (i)
    let i = acat.objects().iter().any(|a| {
        let na = adj.right.ob(a);
        xcat.hom(z, &na).iter().any(|f| xcat.inverse(f).is_some())
    });
    // (ii) and (v)
    let mut ii = true;
    let mut v = true;
    for x in xcat.objects() {
        let eta_x = adj.unit_at(&x);
        let images: Vec<X::Mor> =
            xcat.hom(&nl(&x), z).iter().map(|g| xcat.compose(g, &eta_x)).collect();
        let target = xcat.hom(&x, z);
        let surjective = target.iter().all(|t| images.contains(t));
        ii &= surjective;
        v &= is_bijection_onto::<X>(&images, &target);
    }
    // (iii)
    let eta_z = adj.unit_at(z);
    let id_z = xcat.identity(z);
    let iii = xcat.hom(&nl(z), z).iter().any(|nu| xcat.compose(nu, &eta_z) == id_z);
    // (iv)
    let iv = xcat.inverse(&eta_z).is_some();
    Ok(FiveConditions { i, ii, iii, iv, v })
}

/// The cartesian (meet) skew structure on a thin finite category with all
/// binary meets and a top element. All constraints are the unique morphisms,
/// so the five axioms hold; this is the workhorse finite carrier for the
/// reflection theorems.
pub fn meet_skew(c: &FinCategory) -> Result<SkewMonoidal<FinCategory>, Error> {
    let n = c.n_objects();
    // Thin?
    for a in c.objects() {
        for b in c.objects() {
            if c.hom(&a, &b).len() > 1 {
                return Err(Error::precondition("meet_skew", "carrier is not thin"));
            }
        }
    }
    let leq =
        |a: usize, b: usize| !c.hom(&ObjId(a), &ObjId(b)).is_empty();
    // Top.
    let top = (0..n)
        .find(|&t| (0..n).all(|a| leq(a, t)))
        .ok_or_else(|| Error::precondition("meet_skew", "no top element"))?;
    // Meet table.
    let mut meet = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&d| leq(d, a) && leq(d, b)).collect();
            let glb = lower
                .iter()
                .copied()
                .find(|&m| lower.iter().all(|&d| leq(d, m)))
                .ok_or_else(|| {
                    Error::precondition("meet_skew", format!("no meet for (o{a}, o{b})"))
                })?;
            meet[a][b] = glb;
        }
    }
    let the = {
        let c = c.clone();
        move |a: ObjId, b: ObjId| -> MorId {
            c.hom(&a, &b)
                .into_iter()
                .next()
                .unwrap_or_else(|| panic!("meet_skew: no morphism {a} → {b}"))
        }
    };
    let meet_rc = Rc::new(meet);
    let m1 = meet_rc.clone();
    let m2 = meet_rc.clone();
    let m3 = meet_rc.clone();
    let m4 = meet_rc.clone();
    let m5 = meet_rc;
    let c1 = c.clone();
    let the1 = the.clone();
    let the2 = the.clone();
    let the3 = the.clone();
    let the4 = the;
    Ok(SkewMonoidal::new(
        c.clone(),
        ObjId(top),
        move |a: &ObjId, b: &ObjId| ObjId(m1[a.0][b.0]),
        move |f: &MorId, g: &MorId| {
            let (fs, ft) = (c1.src(f), c1.tgt(f));
            let (gs, gt) = (c1.src(g), c1.tgt(g));
            the1(ObjId(m2[fs.0][gs.0]), ObjId(m2[ft.0][gt.0]))
        },
        move |a: &ObjId, b: &ObjId, d: &ObjId| {
            the2(ObjId(m3[m3[a.0][b.0]][d.0]), ObjId(m3[a.0][m3[b.0][d.0]]))
        },
        move |a: &ObjId| the3(ObjId(m4[top][a.0]), *a),
        move |a: &ObjId| the4(*a, ObjId(m5[a.0][top])),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::check_category;

    /// Diamond with a top: 0 < a(1), b(2) < 3.
    fn diamond() -> FinCategory {
        FinCategory::from_preorder(4, |a, b| {
            a == b || a == 0 || b == 3
        })
    }

    #[test]
    fn meet_skew_on_diamond_passes_all_axioms() {
        let c = diamond();
        assert!(check_category(&c).unwrap().passed());
        let s = meet_skew(&c).unwrap();
        let report = check_skew_axioms_all(&s).unwrap();
        assert!(report.passed(), "{:?}", report.axioms.iter().map(|a| &a.violations).collect::<Vec<_>>());
    }

    #[test]
    fn meet_skew_structure_naturality() {
        let c = diamond();
        let s = meet_skew(&c).unwrap();
        let mors = c.morphisms();
        let mut triples = Vec::new();
        for f in &mors {
            for g in &mors {
                triples.push([*f, *g, mors[(f.0 + g.0) % mors.len()]]);
            }
        }
        assert!(check_structure(&s, &triples).passed());
    }

    #[test]
    fn identity_opmonoidal_passes_and_is_strong() {
        let c = diamond();
        let s = meet_skew(&c).unwrap();
        let o = Opmonoidal::<FinCategory, FinCategory>::identity(&s);
        let obs = c.objects();
        let mut triples = Vec::new();
        for a in &obs {
            for b in &obs {
                for d in &obs {
                    triples.push([*a, *b, *d]);
                }
            }
        }
        let report = check_opmonoidal(&o, &triples).unwrap();
        assert!(report.passed());
        assert!(report.normal);
        assert!(report.strong);
    }

    #[test]
    fn left_hom_is_relative_pseudocomplement_on_boolean_square() {
        // 2×2 Boolean lattice as a poset: 0=⊥, 1, 2 atoms, 3=⊤.
        // leq via bitmask inclusion: objects are subsets {}, {x}, {y}, {x,y}.
        let c = FinCategory::from_preorder(4, |a, b| a & b == a);
        let s = meet_skew(&c).unwrap();
        // [Y,Z] in a Heyting algebra is Y ⇒ Z = ⋁{X : X∧Y ≤ Z}; on the Boolean
        // square, {x} ⇒ {y} = {y} ∪ complement({x}) = {y}.
        let w = left_hom(&s, &ObjId(1), &ObjId(2)).unwrap();
        assert_eq!(w.hom_object, ObjId(2));
        // Y ⇒ ⊤ = ⊤.
        let w = left_hom(&s, &ObjId(1), &ObjId(3)).unwrap();
        assert_eq!(w.hom_object, ObjId(3));
        // ⊤ ⇒ Z = Z.
        let w = left_hom(&s, &ObjId(3), &ObjId(1)).unwrap();
        assert_eq!(w.hom_object, ObjId(1));
        // Meet is symmetric, so right homs agree.
        let w = right_hom(&s, &ObjId(1), &ObjId(2)).unwrap();
        assert_eq!(w.hom_object, ObjId(2));
    }

    #[test]
    fn malformed_psi_is_a_structural_error_not_a_panic() {
        let c = diamond();
        let s = meet_skew(&c).unwrap();
        let cat = c.clone();
        let bad = Opmonoidal::new(
            crate::fincat::Fun::<FinCategory, FinCategory>::id(c.clone()),
            s.clone(),
            s.clone(),
            c.id_of(s.unit),
            // ψ at the wrong object entirely.
            move |_x: &ObjId, _y: &ObjId| cat.id_of(ObjId(0)),
        );
        let err = check_opmonoidal(&bad, &[[ObjId(3), ObjId(3), ObjId(3)]]).unwrap_err();
        assert!(matches!(err, crate::report::Error::Structural { .. }));
    }

    #[test]
    fn representability_bijection_is_natural() {
        // transpose(f∘h) = transpose(f)∘(h⊗1) for all composable h, f into
        // the representing object.
        let c = FinCategory::from_preorder(4, |a, b| a & b == a);
        let s = meet_skew(&c).unwrap();
        for y in c.objects() {
            for z in c.objects() {
                let Some(w) = left_hom(&s, &y, &z) else { continue };
                for x in c.objects() {
                    for x2 in c.objects() {
                        for h in c.hom(&x2, &x) {
                            for f in c.hom(&x, &w.hom_object) {
                                let lhs = w.transpose(&s, &c.compose(&f, &h));
                                let rhs = c.compose(
                                    &w.transpose(&s, &f),
                                    &s.tensor_right(&h, &y),
                                );
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn one_object_carrier_has_homs() {
        let c = FinCategory::terminal();
        let s = meet_skew(&c).unwrap();
        let w = left_hom(&s, &ObjId(0), &ObjId(0)).unwrap();
        assert_eq!(w.hom_object, ObjId(0));
    }

    #[test]
    fn hom_absent_when_counts_cannot_match() {
        // Non-thin carrier: a commutative idempotent monoid {e, z}, z² = z,
        // as a one-object category with tensor = multiplication. hom sizes:
        // hom(*,*) = 2 always, so representability needs |hom(X⊗Y,Z)| = 2 =
        // |hom(X,H)|: fine; build instead a discrete 2-object category with
        // pointwise tensor missing cross homs.
        let c = FinCategory::discrete(2);
        let s = SkewMonoidal::new(
            c.clone(),
            ObjId(0),
            |a: &ObjId, _b: &ObjId| *a,
            {
                let c = c.clone();
                move |f: &MorId, _g: &MorId| {
                    let _ = &c;
                    *f
                }
            },
            {
                let c = c.clone();
                move |a: &ObjId, _b: &ObjId, _d: &ObjId| c.id_of(*a)
            },
            {
                let c = c.clone();
                move |a: &ObjId| c.id_of(*a)
            },
            {
                let c = c.clone();
                move |a: &ObjId| c.id_of(*a)
            },
        );
        // hom(X⊗Y, Z) = hom(X, Z): empty for X ≠ Z. Representing object must
        // be H with hom(X,H) ≅ hom(X,Z) for all X, i.e. H = Z: exists. Check
        // absence with Z varying: actually left_hom(s, Y=o1, Z=o1): H must
        // satisfy hom(X,H) ≅ hom(X⊗o1, o1) = hom(X,o1): H = o1 works. To get
        // absence, pick Z so the system is unsolvable: impossible here, so
        // instead check a tensor that collapses: Y irrelevant — use right_hom
        // where X⊗- is constant at X: hom(X⊗Y,Z)=hom(X,Z) must be ≅ hom(Y,H)
        // for ALL Y: for X=o0,Z=o1 the left side is always empty, but
        // hom(Y,H) is nonempty at Y=H. So no H exists.
        let w = right_hom(&s, &ObjId(0), &ObjId(1));
        assert!(w.is_none());
    }

    #[test]
    fn representing_object_unique_up_to_iso() {
        let c = FinCategory::from_preorder(4, |a, b| a & b == a);
        let s = meet_skew(&c).unwrap();
        for y in c.objects() {
            for z in c.objects() {
                let found: Vec<ObjId> = c
                    .objects()
                    .into_iter()
                    .filter(|h| {
                        let hy = s.tensor(h, &y);
                        c.hom(&hy, &z).into_iter().any(|u| {
                            c.objects().iter().all(|x| {
                                let xy = s.tensor(x, &y);
                                let images: Vec<MorId> = c
                                    .hom(x, h)
                                    .iter()
                                    .map(|f| c.compose(&u, &s.tensor_right(f, &y)))
                                    .collect();
                                is_bijection_onto::<FinCategory>(&images, &c.hom(&xy, &z))
                            })
                        })
                    })
                    .collect();
                // In a poset all representing objects are equal, hence isomorphic.
                for h in &found[1..] {
                    assert!(
                        c.hom(h, &found[0]).len() == 1 && c.hom(&found[0], h).len() == 1,
                        "representing objects not isomorphic"
                    );
                }
            }
        }
    }
}
