//! Comonads riding a skew action, Eilenberg–Moore coalgebra categories with
//! the lifted action, and the lifted warping with its corollaries.
//!
//! A comonad here is `(G, γ, δ, ε)` on a skew actegory: the comonad laws,
//! the action-compatibility squares for `(G, γ)`, and the squares tying `γ`
//! to `δ` and `ε`.

use crate::fincat::{Category, Fun};
use crate::report::{AxiomOutcome, AxiomReport, Error, LawReport, Violation};
use crate::skewmon::Opmonoidal;
use crate::warping::{SkewAction, SkewWarping};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

/// A comonad `(G, γ, δ, ε)` on the carrier of a skew action.
pub struct ActegoryComonad<C: Category, A: Category> {
    pub action: SkewAction<C, A>,
    pub g: Fun<A, A>,
    gamma: Rc<dyn Fn(&C::Obj, &A::Obj) -> A::Mor>,
    delta: Rc<dyn Fn(&A::Obj) -> A::Mor>,
    eps: Rc<dyn Fn(&A::Obj) -> A::Mor>,
}

impl<C: Category, A: Category> Clone for ActegoryComonad<C, A> {
    fn clone(&self) -> Self {
        ActegoryComonad {
            action: self.action.clone(),
            g: self.g.clone(),
            gamma: self.gamma.clone(),
            delta: self.delta.clone(),
            eps: self.eps.clone(),
        }
    }
}

impl<C: Category, A: Category> fmt::Debug for ActegoryComonad<C, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ActegoryComonad")
    }
}

impl<C: Category, A: Category> ActegoryComonad<C, A> {
    pub fn new(
        action: SkewAction<C, A>,
        g: Fun<A, A>,
        gamma: impl Fn(&C::Obj, &A::Obj) -> A::Mor + 'static,
        delta: impl Fn(&A::Obj) -> A::Mor + 'static,
        eps: impl Fn(&A::Obj) -> A::Mor + 'static,
    ) -> Self {
        ActegoryComonad {
            action,
            g,
            gamma: Rc::new(gamma),
            delta: Rc::new(delta),
            eps: Rc::new(eps),
        }
    }

    /// `G = Id`, all structure identities.
    pub fn identity(action: SkewAction<C, A>) -> Self {
        let cat = action.carrier.clone();
        let cat2 = cat.clone();
        let cat3 = cat.clone();
        let act = action.clone();
        ActegoryComonad {
            g: Fun::<A, A>::id(cat.clone()),
            action,
            gamma: Rc::new(move |x: &C::Obj, a: &A::Obj| cat.identity(&act.star(x, a))),
            delta: Rc::new(move |a: &A::Obj| cat2.identity(a)),
            eps: Rc::new(move |a: &A::Obj| cat3.identity(a)),
        }
    }

    pub fn gamma(&self, x: &C::Obj, a: &A::Obj) -> A::Mor {
        (self.gamma)(x, a)
    }

    pub fn delta(&self, a: &A::Obj) -> A::Mor {
        (self.delta)(a)
    }

    pub fn eps(&self, a: &A::Obj) -> A::Mor {
        (self.eps)(a)
    }

    /// Idempotency scan: `δ` invertible on the given objects.
    pub fn is_idempotent_on(&self, objs: &[A::Obj]) -> bool {
        objs.iter().all(|a| self.action.carrier.inverse(&self.delta(a)).is_some())
    }

    /// Strength scan: `γ` invertible on the given pairs.
    pub fn is_strong_on(&self, pairs: &[(C::Obj, A::Obj)]) -> bool {
        pairs.iter().all(|(x, a)| self.action.carrier.inverse(&self.gamma(x, a)).is_some())
    }
}

/// Comonad laws plus the γ-compatibility squares, on sampled tuples.
pub fn check_actegory_comonad<C: Category, A: Category>(
    m: &ActegoryComonad<C, A>,
    tuples: &[(C::Obj, C::Obj, A::Obj)],
) -> Result<AxiomReport, Error> {
    let act = &m.action;
    let s = &act.acting;
    let acat = &act.carrier;
    let i = &s.unit;
    let mut counit_l = AxiomOutcome::new("comonad-counit-left");
    let mut counit_r = AxiomOutcome::new("comonad-counit-right");
    let mut coassoc = AxiomOutcome::new("comonad-coassoc");
    let mut compat_assoc = AxiomOutcome::new("action-compat-assoc");
    let mut compat_unit = AxiomOutcome::new("action-compat-unit");
    let mut compat_comult = AxiomOutcome::new("compat-comultiplication");
    let mut compat_counit = AxiomOutcome::new("compat-counit");
    for (x, y, a) in tuples {
        let inst = format!(
            "({}, {}; {})",
            s.carrier.obj_label(x),
            s.carrier.obj_label(y),
            acat.obj_label(a)
        );
        let ga = m.g.ob(a);
        // Structural checks for the components at this instance.
        {
            let gam = m.gamma(x, a);
            let want_src = act.star(x, &ga);
            let want_tgt = m.g.ob(&act.star(x, a));
            if acat.src(&gam) != want_src || acat.tgt(&gam) != want_tgt {
                return Err(Error::structural(
                    "check_actegory_comonad",
                    format!("gamma at {inst} has wrong endpoints"),
                ));
            }
            let d = m.delta(a);
            if acat.src(&d) != ga || acat.tgt(&d) != m.g.ob(&ga) {
                return Err(Error::structural(
                    "check_actegory_comonad",
                    format!("delta at {inst} has wrong endpoints"),
                ));
            }
            let e = m.eps(a);
            if acat.src(&e) != ga || acat.tgt(&e) != *a {
                return Err(Error::structural(
                    "check_actegory_comonad",
                    format!("eps at {inst} has wrong endpoints"),
                ));
            }
        }
        let lab = acat.obj_label(a);
        // Comonad laws at A.
        {
            let d = m.delta(a);
            let lhs = acat.compose(&m.eps(&ga), &d);
            counit_l.record(&lab, &acat.mor_label(&lhs), "1", lhs == acat.identity(&ga));
            let lhs = acat.compose(&m.g.mor(&m.eps(a)), &d);
            counit_r.record(&lab, &acat.mor_label(&lhs), "1", lhs == acat.identity(&ga));
            let lhs = acat.compose(&m.g.mor(&m.delta(a)), &d);
            let rhs = acat.compose(&m.delta(&ga), &d);
            coassoc.record(&lab, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
        // Associativity compatibility: G(α)∘γ_{X⊗Y,A} = γ_{X,Y⋆A}∘(1⋆γ_{Y,A})∘α_{X,Y,GA}.
        {
            let xy = s.tensor(x, y);
            let ya = act.star(y, a);
            let lhs = acat.compose(&m.g.mor(&act.act_alpha(x, y, a)), &m.gamma(&xy, a));
            let rhs = acat.compose(
                &m.gamma(x, &ya),
                &acat.compose(&act.star_left(x, &m.gamma(y, a)), &act.act_alpha(x, y, &ga)),
            );
            compat_assoc.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
        // Unit compatibility: G(λ_A)∘γ_{I,A} = λ_{GA}.
        {
            let lhs = acat.compose(&m.g.mor(&act.act_lambda(a)), &m.gamma(i, a));
            let rhs = act.act_lambda(&ga);
            compat_unit.record(&lab, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
        // Comultiplication compatibility: δ_{X⋆A}∘γ_{X,A} = G(γ_{X,A})∘γ_{X,GA}∘(1⋆δ_A).
        {
            let xa = act.star(x, a);
            let lhs = acat.compose(&m.delta(&xa), &m.gamma(x, a));
            let rhs = acat.compose(
                &m.g.mor(&m.gamma(x, a)),
                &acat.compose(&m.gamma(x, &ga), &act.star_left(x, &m.delta(a))),
            );
            compat_comult.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
        // Counit compatibility: ε_{X⋆A}∘γ_{X,A} = 1⋆ε_A.
        {
            let xa = act.star(x, a);
            let lhs = acat.compose(&m.eps(&xa), &m.gamma(x, a));
            let rhs = act.star_left(x, &m.eps(a));
            compat_counit.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
    }
    let mut report = AxiomReport::default();
    report.push(counit_l);
    report.push(counit_r);
    report.push(coassoc);
    report.push(compat_assoc);
    report.push(compat_unit);
    report.push(compat_comult);
    report.push(compat_counit);
    Ok(report)
}

/// Naturality of γ (in both variables), δ, and ε on sampled morphisms.
pub fn check_comonad_naturality<C: Category, A: Category>(
    m: &ActegoryComonad<C, A>,
    c_mors: &[C::Mor],
    a_mors: &[A::Mor],
) -> LawReport {
    let act = &m.action;
    let acat = &act.carrier;
    let ccat = &act.acting.carrier;
    let mut report = LawReport::default();
    for g in a_mors {
        let (a, b) = (acat.src(g), acat.tgt(g));
        let lhs = acat.compose(&m.delta(&b), &m.g.mor(g));
        let rhs = acat.compose(&m.g.mor(&m.g.mor(g)), &m.delta(&a));
        if lhs != rhs {
            report.push(Violation::new("delta-naturality", acat.mor_label(g), "square fails"));
        }
        let lhs = acat.compose(g, &m.eps(&a));
        let rhs = acat.compose(&m.eps(&b), &m.g.mor(g));
        if lhs != rhs {
            report.push(Violation::new("eps-naturality", acat.mor_label(g), "square fails"));
        }
    }
    for f in c_mors {
        for g in a_mors {
            let (x, x2) = (ccat.src(f), ccat.tgt(f));
            let (a, b) = (acat.src(g), acat.tgt(g));
            let lhs =
                acat.compose(&m.gamma(&x2, &b), &act.star_mor(f, &m.g.mor(g)));
            let rhs = acat.compose(&m.g.mor(&act.star_mor(f, g)), &m.gamma(&x, &a));
            if lhs != rhs {
                report.push(Violation::new(
                    "gamma-naturality",
                    format!("({}, {})", ccat.mor_label(f), acat.mor_label(g)),
                    "square fails",
                ));
            }
        }
    }
    report
}

/// An Eilenberg–Moore coalgebra `(A, a : A → GA)`.
pub struct Coalgebra<A: Category> {
    pub carrier: A::Obj,
    pub coaction: A::Mor,
}

impl<A: Category> Clone for Coalgebra<A> {
    fn clone(&self) -> Self {
        Coalgebra { carrier: self.carrier.clone(), coaction: self.coaction.clone() }
    }
}

impl<A: Category> PartialEq for Coalgebra<A> {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.coaction == other.coaction
    }
}

impl<A: Category> fmt::Debug for Coalgebra<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coalgebra({:?})", self.carrier)
    }
}

/// A coaction-preserving morphism between coalgebras.
pub struct CoalgMor<A: Category> {
    pub dom: Coalgebra<A>,
    pub cod: Coalgebra<A>,
    pub map: A::Mor,
}

impl<A: Category> Clone for CoalgMor<A> {
    fn clone(&self) -> Self {
        CoalgMor { dom: self.dom.clone(), cod: self.cod.clone(), map: self.map.clone() }
    }
}

impl<A: Category> PartialEq for CoalgMor<A> {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.map == other.map
    }
}

impl<A: Category> fmt::Debug for CoalgMor<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoalgMor({:?})", self.map)
    }
}

/// The coalgebra laws for `(carrier, coaction)`.
pub fn check_coalgebra<C: Category, A: Category>(
    m: &ActegoryComonad<C, A>,
    c: &Coalgebra<A>,
) -> Result<LawReport, Error> {
    let acat = &m.action.carrier;
    let ga = m.g.ob(&c.carrier);
    if acat.src(&c.coaction) != c.carrier || acat.tgt(&c.coaction) != ga {
        return Err(Error::structural("check_coalgebra", "coaction has wrong endpoints"));
    }
    let mut report = LawReport::default();
    let lhs = acat.compose(&m.eps(&c.carrier), &c.coaction);
    if lhs != acat.identity(&c.carrier) {
        report.push(Violation::new("coalgebra-counit", acat.obj_label(&c.carrier), "ε∘a != 1"));
    }
    let lhs = acat.compose(&m.g.mor(&c.coaction), &c.coaction);
    let rhs = acat.compose(&m.delta(&c.carrier), &c.coaction);
    if lhs != rhs {
        report.push(Violation::new(
            "coalgebra-coassoc",
            acat.obj_label(&c.carrier),
            "Ga∘a != δ∘a",
        ));
    }
    Ok(report)
}

/// Is `f` a coalgebra morphism `(A,a) → (B,b)`?
pub fn is_coalgebra_morphism<C: Category, A: Category>(
    m: &ActegoryComonad<C, A>,
    dom: &Coalgebra<A>,
    cod: &Coalgebra<A>,
    f: &A::Mor,
) -> bool {
    let acat = &m.action.carrier;
    acat.compose(&cod.coaction, f) == acat.compose(&m.g.mor(f), &dom.coaction)
}

/// The Eilenberg–Moore category of a comonad, as a carrier.
pub struct CoalgCategory<C: Category, A: Category> {
    pub comonad: Rc<ActegoryComonad<C, A>>,
}

impl<C: Category, A: Category> Clone for CoalgCategory<C, A> {
    fn clone(&self) -> Self {
        CoalgCategory { comonad: self.comonad.clone() }
    }
}

impl<C: Category, A: Category> Category for CoalgCategory<C, A> {
    type Obj = Coalgebra<A>;
    type Mor = CoalgMor<A>;

    fn src(&self, f: &CoalgMor<A>) -> Coalgebra<A> {
        f.dom.clone()
    }

    fn tgt(&self, f: &CoalgMor<A>) -> Coalgebra<A> {
        f.cod.clone()
    }

    fn identity(&self, o: &Coalgebra<A>) -> CoalgMor<A> {
        CoalgMor {
            dom: o.clone(),
            cod: o.clone(),
            map: self.comonad.action.carrier.identity(&o.carrier),
        }
    }

    fn compose(&self, g: &CoalgMor<A>, f: &CoalgMor<A>) -> CoalgMor<A> {
        assert!(f.cod == g.dom, "coalgebra morphisms not composable");
        CoalgMor {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            map: self.comonad.action.carrier.compose(&g.map, &f.map),
        }
    }

    fn inverse(&self, f: &CoalgMor<A>) -> Option<CoalgMor<A>> {
        // An iso of coalgebras is an iso of carriers whose inverse is then
        // automatically a coalgebra morphism.
        let inv = self.comonad.action.carrier.inverse(&f.map)?;
        Some(CoalgMor { dom: f.cod.clone(), cod: f.dom.clone(), map: inv })
    }

    fn obj_label(&self, o: &Coalgebra<A>) -> String {
        format!(
            "({}, {})",
            self.comonad.action.carrier.obj_label(&o.carrier),
            self.comonad.action.carrier.mor_label(&o.coaction)
        )
    }

    fn mor_label(&self, f: &CoalgMor<A>) -> String {
        self.comonad.action.carrier.mor_label(&f.map)
    }
}

/// The Eilenberg–Moore construction: the coalgebra category, the lifted skew
/// action `X⋆(A,a) = (X⋆A, γ∘(X⋆a))`, and the forgetful functor.
pub fn em_category<C: Category, A: Category>(
    m: &ActegoryComonad<C, A>,
) -> (
    CoalgCategory<C, A>,
    SkewAction<C, CoalgCategory<C, A>>,
    Fun<CoalgCategory<C, A>, A>,
) {
    let coalg = CoalgCategory { comonad: Rc::new(m.clone()) };
    let act = m.action.clone();
    let star_obj = {
        let m = m.clone();
        move |x: &C::Obj, a: &Coalgebra<A>| lifted_star(&m, x, a)
    };
    let star_mor = {
        let m = m.clone();
        move |f: &C::Mor, g: &CoalgMor<A>| {
            let act = &m.action;
            CoalgMor {
                dom: lifted_star(&m, &act.acting.carrier.src(f), &g.dom),
                cod: lifted_star(&m, &act.acting.carrier.tgt(f), &g.cod),
                map: act.star_mor(f, &g.map),
            }
        }
    };
    let act_alpha = {
        let m = m.clone();
        move |x: &C::Obj, y: &C::Obj, a: &Coalgebra<A>| {
            let act = &m.action;
            let xy = act.acting.tensor(x, y);
            CoalgMor {
                dom: lifted_star(&m, &xy, a),
                cod: lifted_star(&m, x, &lifted_star(&m, y, a)),
                map: act.act_alpha(x, y, &a.carrier),
            }
        }
    };
    let act_lambda = {
        let m = m.clone();
        move |a: &Coalgebra<A>| {
            let act = &m.action;
            CoalgMor {
                dom: lifted_star(&m, &act.acting.unit, a),
                cod: a.clone(),
                map: act.act_lambda(&a.carrier),
            }
        }
    };
    let lifted = SkewAction::new(
        act.acting.clone(),
        coalg.clone(),
        star_obj,
        star_mor,
        act_alpha,
        act_lambda,
    );
    let base = act.carrier.clone();
    let u = Fun::new(
        coalg.clone(),
        base,
        |o: &Coalgebra<A>| o.carrier.clone(),
        |f: &CoalgMor<A>| f.map.clone(),
    );
    (coalg, lifted, u)
}

fn lifted_star<C: Category, A: Category>(
    m: &ActegoryComonad<C, A>,
    x: &C::Obj,
    a: &Coalgebra<A>,
) -> Coalgebra<A> {
    let act = &m.action;
    let carrier = act.star(x, &a.carrier);
    let coaction = act
        .carrier
        .compose(&m.gamma(x, &a.carrier), &act.star_left(x, &a.coaction));
    Coalgebra { carrier, coaction }
}

/// The cofree coalgebra `(GA, δ_A)`.
pub fn cofree<C: Category, A: Category>(
    m: &ActegoryComonad<C, A>,
    a: &A::Obj,
) -> Coalgebra<A> {
    Coalgebra { carrier: m.g.ob(a), coaction: m.delta(a) }
}

/// Lift a warping to the coalgebra category:
/// `(T∘U, (GK, δ_K), v, v0∘Tε_K, γ⁻¹∘Gk∘a)`.
///
/// Precondition: `γ_{TA,K}` and `γ_{TA,TB⋆K}` invertible; validated on the
/// given `(A, B)` carrier pairs, with the failing component named otherwise.
pub fn lift_warping<C: Category, A: Category>(
    w: &SkewWarping<C, A>,
    m: &ActegoryComonad<C, A>,
    tested_pairs: &[(A::Obj, A::Obj)],
) -> Result<SkewWarping<C, CoalgCategory<C, A>>, Error> {
    let acat = &m.action.carrier;
    for (a, b) in tested_pairs {
        let ta = w.t.ob(a);
        if acat.inverse(&m.gamma(&ta, &w.k)).is_none() {
            return Err(Error::precondition(
                "lift_warping",
                format!(
                    "gamma({}, K) not invertible",
                    m.action.acting.carrier.obj_label(&ta)
                ),
            ));
        }
        let tbk = m.action.star(&w.t.ob(b), &w.k);
        if acat.inverse(&m.gamma(&ta, &tbk)).is_none() {
            return Err(Error::precondition(
                "lift_warping",
                format!(
                    "gamma({}, TB⋆K) not invertible",
                    m.action.acting.carrier.obj_label(&ta)
                ),
            ));
        }
    }
    let (coalg, lifted_action, u) = em_category(m);
    let t_lifted = u.then(&w.t);
    let unit = cofree(m, &w.k);
    let v = {
        let w = w.clone();
        move |a: &Coalgebra<A>, b: &Coalgebra<A>| w.v(&a.carrier, &b.carrier)
    };
    let v0 = {
        let ccat = &w.action.acting.carrier;
        ccat.compose(&w.v0, &w.t.mor(&m.eps(&w.k)))
    };
    // γ⁻¹ components appear in k' and again in the warping axioms; memoize.
    let memo: Rc<RefCell<HashMap<String, A::Mor>>> = Rc::new(RefCell::new(HashMap::new()));
    let kappa = {
        let w = w.clone();
        let m = m.clone();
        let lifted = lifted_action.clone();
        let unit = unit.clone();
        move |ca: &Coalgebra<A>| {
            let acat = &m.action.carrier;
            let ta = w.t.ob(&ca.carrier);
            let key = m.action.acting.carrier.obj_label(&ta);
            let gamma_inv = {
                let mut memo = memo.borrow_mut();
                match memo.get(&key) {
                    Some(inv) => inv.clone(),
                    None => {
                        let inv = acat
                            .inverse(&m.gamma(&ta, &w.k))
                            .unwrap_or_else(|| panic!("lift_warping: gamma({key}, K) not invertible"));
                        memo.insert(key.clone(), inv.clone());
                        inv
                    }
                }
            };
            let map = acat.compose(
                &gamma_inv,
                &acat.compose(&m.g.mor(&w.kappa(&ca.carrier)), &ca.coaction),
            );
            CoalgMor {
                dom: ca.clone(),
                cod: lifted.star(&ta, &unit),
                map,
            }
        }
    };
    let _ = coalg;
    Ok(SkewWarping::new(lifted_action, t_lifted, unit, v, v0, kappa))
}

/// Cor. follow-up: the forgetful functor preserves the induced tensors on the
/// nose; verify `U((A,a)⊗̄(B,b)) = UA ⊗̄ UB` on object and morphism samples.
pub fn check_forgetful_strict<C: Category, A: Category>(
    lifted: &crate::skewmon::SkewMonoidal<CoalgCategory<C, A>>,
    base: &crate::skewmon::SkewMonoidal<A>,
    u: &Fun<CoalgCategory<C, A>, A>,
    obj_pairs: &[(Coalgebra<A>, Coalgebra<A>)],
    mor_pairs: &[(CoalgMor<A>, CoalgMor<A>)],
) -> LawReport {
    let acat = &base.carrier;
    let mut report = LawReport::default();
    for (a, b) in obj_pairs {
        let lhs = u.ob(&lifted.tensor(a, b));
        let rhs = base.tensor(&u.ob(a), &u.ob(b));
        if lhs != rhs {
            report.push(Violation::new(
                "forgetful-tensor-objects",
                format!("({}, {})", acat.obj_label(&a.carrier), acat.obj_label(&b.carrier)),
                "U(A⊗̄B) != UA⊗UB",
            ));
        }
    }
    for (f, g) in mor_pairs {
        let lhs = u.mor(&lifted.tensor_mor(f, g));
        let rhs = base.tensor_mor(&u.mor(f), &u.mor(g));
        if lhs != rhs {
            report.push(Violation::new(
                "forgetful-tensor-morphisms",
                format!("({}, {})", acat.mor_label(&f.map), acat.mor_label(&g.map)),
                "U(f⊗̄g) != Uf⊗Ug",
            ));
        }
    }
    report
}

/// The opmonoidal structure on the forgetful functor promised by the lift:
/// identity tensor comparisons and unit constraint `ε_K` (for the identity
/// warping on `C` this is `ε_I : GI → I`).
pub fn forgetful_opmonoidal<C: Category, A: Category>(
    lifted: &crate::skewmon::SkewMonoidal<CoalgCategory<C, A>>,
    base: &crate::skewmon::SkewMonoidal<A>,
    u: &Fun<CoalgCategory<C, A>, A>,
    m: &ActegoryComonad<C, A>,
    base_unit_of_warping: &A::Obj,
) -> Opmonoidal<CoalgCategory<C, A>, A> {
    let base_cl = base.clone();
    let lifted_cl = lifted.clone();
    let u_cl = u.clone();
    Opmonoidal::new(
        u.clone(),
        lifted.clone(),
        base.clone(),
        m.eps(base_unit_of_warping),
        move |a: &Coalgebra<A>, b: &Coalgebra<A>| {
            base_cl.carrier.identity(&u_cl.ob(&lifted_cl.tensor(a, b)))
        },
    )
}

/// The idempotent-case compatibility diagram, componentwise on sampled pairs:
/// the square `δ_{X⊗Y}∘G(1⊗ε_Y) = Gγ_{X,Y}` and the triangle
/// `Gε_{X⊗Y}∘Gγ_{X,Y} = G(1⊗ε_Y)`.
///
/// Here the comonad rides the tensor-as-action of a skew monoidal category on
/// itself, so `⋆ = ⊗`.
pub fn check_link_diagram<A: Category>(
    m: &ActegoryComonad<A, A>,
    pairs: &[(A::Obj, A::Obj)],
) -> AxiomReport {
    let act = &m.action;
    let acat = &act.carrier;
    let mut square = AxiomOutcome::new("counit-comultiplication-square");
    let mut triangle = AxiomOutcome::new("counit-triangle");
    for (x, y) in pairs {
        let inst = format!("({}, {})", acat.obj_label(x), acat.obj_label(y));
        let xy = act.star(x, y);
        let g_one_eps = m.g.mor(&act.star_left(x, &m.eps(y)));
        let lhs = acat.compose(&m.delta(&xy), &g_one_eps);
        let rhs = m.g.mor(&m.gamma(x, y));
        square.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        let lhs = acat.compose(&m.g.mor(&m.eps(&xy)), &m.g.mor(&m.gamma(x, y)));
        triangle.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&g_one_eps), lhs == g_one_eps);
    }
    let mut report = AxiomReport::default();
    report.push(square);
    report.push(triangle);
    report
}
