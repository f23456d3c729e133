//! Skew actions of a skew monoidal category on a category, skew left warpings
//! riding them, and the induced skew monoidal structure.
//!
//! Action constraints: `α_{X,Y,A} : (X⊗Y)⋆A → X⋆(Y⋆A)` and `λ_A : I⋆A → A`,
//! subject to three axioms mirroring the pentagon and unit laws. A warping is
//! `(T, K, v, v0, k)` with `v_{A,B} : T(TA⋆B) → TA⊗TB`, `v0 : TK → I`,
//! `k_A : A → TA⋆K`, subject to five diagrams; it induces a skew monoidal
//! structure with tensor `A⊗̄B = TA⋆B` and unit `K`.

use crate::fincat::{Category, FinCategory, FinFunctor, FinNat, Finite, Fun, MorId, ObjId};
use crate::report::{AxiomOutcome, AxiomReport, Error};
use crate::skewmon::{Opmonoidal, SkewMonoidal};
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

/// A left skew action of `acting` on `carrier`.
pub struct SkewAction<C: Category, A: Category> {
    pub acting: SkewMonoidal<C>,
    pub carrier: A,
    star_obj: Rc<dyn Fn(&C::Obj, &A::Obj) -> A::Obj>,
    star_mor: Rc<dyn Fn(&C::Mor, &A::Mor) -> A::Mor>,
    act_alpha: Rc<dyn Fn(&C::Obj, &C::Obj, &A::Obj) -> A::Mor>,
    act_lambda: Rc<dyn Fn(&A::Obj) -> A::Mor>,
}

impl<C: Category, A: Category> Clone for SkewAction<C, A> {
    fn clone(&self) -> Self {
        SkewAction {
            acting: self.acting.clone(),
            carrier: self.carrier.clone(),
            star_obj: self.star_obj.clone(),
            star_mor: self.star_mor.clone(),
            act_alpha: self.act_alpha.clone(),
            act_lambda: self.act_lambda.clone(),
        }
    }
}

impl<C: Category, A: Category> fmt::Debug for SkewAction<C, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewAction")
    }
}

impl<C: Category, A: Category> SkewAction<C, A> {
    pub fn new(
        acting: SkewMonoidal<C>,
        carrier: A,
        star_obj: impl Fn(&C::Obj, &A::Obj) -> A::Obj + 'static,
        star_mor: impl Fn(&C::Mor, &A::Mor) -> A::Mor + 'static,
        act_alpha: impl Fn(&C::Obj, &C::Obj, &A::Obj) -> A::Mor + 'static,
        act_lambda: impl Fn(&A::Obj) -> A::Mor + 'static,
    ) -> Self {
        SkewAction {
            acting,
            carrier,
            star_obj: Rc::new(star_obj),
            star_mor: Rc::new(star_mor),
            act_alpha: Rc::new(act_alpha),
            act_lambda: Rc::new(act_lambda),
        }
    }

    pub fn star(&self, x: &C::Obj, a: &A::Obj) -> A::Obj {
        (self.star_obj)(x, a)
    }

    pub fn star_mor(&self, f: &C::Mor, g: &A::Mor) -> A::Mor {
        (self.star_mor)(f, g)
    }

    /// `1_x ⋆ g`.
    pub fn star_left(&self, x: &C::Obj, g: &A::Mor) -> A::Mor {
        self.star_mor(&self.acting.carrier.identity(x), g)
    }

    /// `f ⋆ 1_a`.
    pub fn star_right(&self, f: &C::Mor, a: &A::Obj) -> A::Mor {
        self.star_mor(f, &self.carrier.identity(a))
    }

    pub fn act_alpha(&self, x: &C::Obj, y: &C::Obj, a: &A::Obj) -> A::Mor {
        (self.act_alpha)(x, y, a)
    }

    pub fn act_lambda(&self, a: &A::Obj) -> A::Mor {
        (self.act_lambda)(a)
    }
}

/// The tautological action of a skew monoidal category on itself.
pub fn tensor_as_action<C: Category>(s: &SkewMonoidal<C>) -> SkewAction<C, C> {
    let s1 = s.clone();
    let s2 = s.clone();
    let s3 = s.clone();
    let s4 = s.clone();
    SkewAction::new(
        s.clone(),
        s.carrier.clone(),
        move |x, a| s1.tensor(x, a),
        move |f, g| s2.tensor_mor(f, g),
        move |x, y, a| s3.alpha(x, y, a),
        move |a| s4.lambda(a),
    )
}

fn endpoints_ok<A: Category>(cat: &A, m: &A::Mor, src: &A::Obj, tgt: &A::Obj) -> bool {
    cat.src(m) == *src && cat.tgt(m) == *tgt
}

/// Verify the three action axioms on the given `(X, Y, Z, A)` tuples.
pub fn check_action<C: Category, A: Category>(
    act: &SkewAction<C, A>,
    tuples: &[(C::Obj, C::Obj, C::Obj, A::Obj)],
) -> Result<AxiomReport, Error> {
    let s = &act.acting;
    let acat = &act.carrier;
    let i = &s.unit;
    let mut assoc = AxiomOutcome::new("action-assoc");
    let mut left_unit = AxiomOutcome::new("action-left-unit");
    let mut right_unit = AxiomOutcome::new("action-right-unit");
    for (x, y, z, a) in tuples {
        let inst = format!(
            "({}, {}, {}; {})",
            s.carrier.obj_label(x),
            s.carrier.obj_label(y),
            s.carrier.obj_label(z),
            acat.obj_label(a)
        );
        // Structural validation of the components used.
        {
            let al = act.act_alpha(x, y, a);
            let want_src = act.star(&s.tensor(x, y), a);
            let want_tgt = act.star(x, &act.star(y, a));
            if !endpoints_ok(acat, &al, &want_src, &want_tgt) {
                return Err(Error::structural(
                    "check_action",
                    format!("act_alpha at {inst} has wrong endpoints"),
                ));
            }
            let lam = act.act_lambda(a);
            if !endpoints_ok(acat, &lam, &act.star(i, a), a) {
                return Err(Error::structural(
                    "check_action",
                    format!("act_lambda at {inst} has wrong endpoints"),
                ));
            }
        }
        // Pentagon-shaped compatibility of the two associativities.
        {
            let xy = s.tensor(x, y);
            let yz = s.tensor(y, z);
            let za = act.star(z, a);
            let lhs = acat.compose(&act.act_alpha(x, y, &za), &act.act_alpha(&xy, z, a));
            let rhs = acat.compose(
                &act.star_left(x, &act.act_alpha(y, z, a)),
                &acat.compose(&act.act_alpha(x, &yz, a), &act.star_right(&s.alpha(x, y, z), a)),
            );
            assoc.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
        // Left unit against the action.
        {
            let ya = act.star(y, a);
            let lhs = acat.compose(&act.act_lambda(&ya), &act.act_alpha(i, y, a));
            let rhs = act.star_mor(&s.lambda(y), &acat.identity(a));
            left_unit.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
        // Right unit against the action.
        {
            let xa = act.star(x, a);
            let lhs = acat.compose(
                &act.star_left(x, &act.act_lambda(a)),
                &acat.compose(&act.act_alpha(x, i, a), &act.star_right(&s.rho(x), a)),
            );
            right_unit.record(&inst, &acat.mor_label(&lhs), "1", lhs == acat.identity(&xa));
        }
    }
    let mut report = AxiomReport::default();
    report.push(assoc);
    report.push(left_unit);
    report.push(right_unit);
    Ok(report)
}

/// A skew left warping riding an action.
pub struct SkewWarping<C: Category, A: Category> {
    pub action: SkewAction<C, A>,
    pub t: Fun<A, C>,
    pub k: A::Obj,
    v: Rc<dyn Fn(&A::Obj, &A::Obj) -> C::Mor>,
    pub v0: C::Mor,
    kappa: Rc<dyn Fn(&A::Obj) -> A::Mor>,
}

impl<C: Category, A: Category> Clone for SkewWarping<C, A> {
    fn clone(&self) -> Self {
        SkewWarping {
            action: self.action.clone(),
            t: self.t.clone(),
            k: self.k.clone(),
            v: self.v.clone(),
            v0: self.v0.clone(),
            kappa: self.kappa.clone(),
        }
    }
}

impl<C: Category, A: Category> SkewWarping<C, A> {
    pub fn new(
        action: SkewAction<C, A>,
        t: Fun<A, C>,
        k: A::Obj,
        v: impl Fn(&A::Obj, &A::Obj) -> C::Mor + 'static,
        v0: C::Mor,
        kappa: impl Fn(&A::Obj) -> A::Mor + 'static,
    ) -> Self {
        SkewWarping { action, t, k, v: Rc::new(v), v0, kappa: Rc::new(kappa) }
    }

    pub fn v(&self, a: &A::Obj, b: &A::Obj) -> C::Mor {
        (self.v)(a, b)
    }

    pub fn kappa(&self, a: &A::Obj) -> A::Mor {
        (self.kappa)(a)
    }
}

/// The identity warping of a skew monoidal category: `T = Id`, `K = I`,
/// `v = 1`, `v0 = 1`, `k = ρ`, riding the tensor-as-action.
pub fn identity_warping<C: Category>(s: &SkewMonoidal<C>) -> SkewWarping<C, C> {
    let action = tensor_as_action(s);
    let cat = s.carrier.clone();
    let s1 = s.clone();
    let s2 = s.clone();
    SkewWarping::new(
        action,
        Fun::<C, C>::id(cat.clone()),
        s.unit.clone(),
        move |a, b| s1.carrier.identity(&s1.tensor(a, b)),
        cat.identity(&s.unit),
        move |a| s2.rho(a),
    )
}

/// Verify the five warping axioms on the given `[A, B, C]` triples.
pub fn check_warping<C: Category, A: Category>(
    w: &SkewWarping<C, A>,
    triples: &[[A::Obj; 3]],
) -> Result<AxiomReport, Error> {
    let act = &w.action;
    let s = &act.acting;
    let ccat = &s.carrier;
    let acat = &act.carrier;
    let k = &w.k;
    let mut assoc = AxiomOutcome::new("warp-assoc");
    let mut unit1 = AxiomOutcome::new("warp-left-unit");
    let mut unit2 = AxiomOutcome::new("warp-right-unit");
    let mut unit3 = AxiomOutcome::new("warp-unit-exchange");
    let mut unit4 = AxiomOutcome::new("warp-unit-law");

    // Unit law at K, once: λ^a_K ∘ (v0⋆1_K) ∘ k_K = 1_K.
    {
        let tk = w.t.ob(k);
        if !endpoints_ok(ccat, &w.v0, &tk, &s.unit) {
            return Err(Error::structural("check_warping", "v0 has wrong endpoints"));
        }
        let kk = w.kappa(k);
        if !endpoints_ok(acat, &kk, k, &act.star(&tk, k)) {
            return Err(Error::structural("check_warping", "k at K has wrong endpoints"));
        }
        let lhs = acat.compose(
            &act.act_lambda(k),
            &acat.compose(&act.star_right(&w.v0, k), &kk),
        );
        unit4.record("K", &acat.mor_label(&lhs), "1_K", lhs == acat.identity(k));
    }

    for [a, b, c] in triples {
        let inst = format!(
            "({}, {}, {})",
            acat.obj_label(a),
            acat.obj_label(b),
            acat.obj_label(c)
        );
        let (ta, tb, tc) = (w.t.ob(a), w.t.ob(b), w.t.ob(c));
        let tab = act.star(&ta, b); // TA⋆B
        let v_ab = w.v(a, b);
        if !endpoints_ok(ccat, &v_ab, &w.t.ob(&tab), &s.tensor(&ta, &tb)) {
            return Err(Error::structural(
                "check_warping",
                format!("v at {inst} has wrong endpoints"),
            ));
        }
        // Associativity diagram.
        {
            let lhs = ccat.compose(
                &s.alpha(&ta, &tb, &tc),
                &ccat.compose(&s.tensor_right(&v_ab, &tc), &w.v(&tab, c)),
            );
            let rhs = ccat.compose(
                &s.tensor_left(&ta, &w.v(b, c)),
                &ccat.compose(
                    &w.v(a, &act.star(&tb, c)),
                    &ccat.compose(
                        &w.t.mor(&act.act_alpha(&ta, &tb, c)),
                        &w.t.mor(&act.star_right(&v_ab, c)),
                    ),
                ),
            );
            assoc.record(&inst, &ccat.mor_label(&lhs), &ccat.mor_label(&rhs), lhs == rhs);
        }
        // Left-unit diagram on B.
        {
            let lhs = ccat.compose(
                &s.lambda(&tb),
                &ccat.compose(&s.tensor_right(&w.v0, &tb), &w.v(k, b)),
            );
            let rhs = ccat.compose(
                &w.t.mor(&act.act_lambda(b)),
                &w.t.mor(&act.star_right(&w.v0, b)),
            );
            unit1.record(
                &acat.obj_label(b),
                &ccat.mor_label(&lhs),
                &ccat.mor_label(&rhs),
                lhs == rhs,
            );
        }
        // Right-unit diagram on A.
        {
            let lhs = ccat.compose(
                &s.tensor_left(&ta, &w.v0),
                &ccat.compose(&w.v(a, k), &w.t.mor(&w.kappa(a))),
            );
            let rhs = s.rho(&ta);
            unit2.record(
                &acat.obj_label(a),
                &ccat.mor_label(&lhs),
                &ccat.mor_label(&rhs),
                lhs == rhs,
            );
        }
        // Unit-exchange diagram on (A, B).
        {
            let lhs = acat.compose(
                &act.act_alpha(&ta, &tb, k),
                &acat.compose(&act.star_right(&v_ab, k), &w.kappa(&tab)),
            );
            let rhs = act.star_left(&ta, &w.kappa(b));
            unit3.record(&inst, &acat.mor_label(&lhs), &acat.mor_label(&rhs), lhs == rhs);
        }
    }
    let mut report = AxiomReport::default();
    report.push(assoc);
    report.push(unit1);
    report.push(unit2);
    report.push(unit3);
    report.push(unit4);
    Ok(report)
}

/// Naturality of `v` in both variables and of `k`, on sampled morphism pairs.
pub fn check_warping_naturality<C: Category, A: Category>(
    w: &SkewWarping<C, A>,
    pairs: &[(A::Mor, A::Mor)],
) -> crate::report::LawReport {
    use crate::report::Violation;
    let act = &w.action;
    let s = &act.acting;
    let ccat = &s.carrier;
    let acat = &act.carrier;
    let mut report = crate::report::LawReport::default();
    for (f, g) in pairs {
        let (a, a2) = (acat.src(f), acat.tgt(f));
        let (b, b2) = (acat.src(g), acat.tgt(g));
        // v natural: (Tf⊗Tg)∘v_{A,B} = v_{A',B'}∘T(Tf⋆g).
        let lhs = ccat.compose(&s.tensor_mor(&w.t.mor(f), &w.t.mor(g)), &w.v(&a, &b));
        let rhs = ccat.compose(&w.v(&a2, &b2), &w.t.mor(&act.star_mor(&w.t.mor(f), g)));
        if lhs != rhs {
            report.push(Violation::new(
                "v-naturality",
                format!("({}, {})", acat.mor_label(f), acat.mor_label(g)),
                "square fails",
            ));
        }
        // k natural: (Tf⋆1_K)∘k_A = k_{A'}∘f.
        let lhs = acat.compose(&act.star_mor(&w.t.mor(f), &acat.identity(&w.k)), &w.kappa(&a));
        let rhs = acat.compose(&w.kappa(&a2), f);
        if lhs != rhs {
            report.push(Violation::new("k-naturality", acat.mor_label(f), "square fails"));
        }
    }
    report
}

/// The skew monoidal structure induced by a warping:
/// `A⊗̄B = TA⋆B`, unit `K`, `ᾱ = α∘(v⋆1)`, `λ̄ = λ∘(v0⋆1)`, `ρ̄ = k`,
/// with the opmonoidal functor `(T, v0, v)` into the acting category.
pub fn warping_to_skew<C: Category, A: Category>(
    w: &SkewWarping<C, A>,
) -> (SkewMonoidal<A>, Opmonoidal<A, C>) {
    let act = w.action.clone();
    let acat = act.carrier.clone();
    let tensor_obj = {
        let w = w.clone();
        move |a: &A::Obj, b: &A::Obj| w.action.star(&w.t.ob(a), b)
    };
    let tensor_mor = {
        let w = w.clone();
        move |f: &A::Mor, g: &A::Mor| w.action.star_mor(&w.t.mor(f), g)
    };
    let alpha = {
        let w = w.clone();
        move |a: &A::Obj, b: &A::Obj, c: &A::Obj| {
            let (ta, tb) = (w.t.ob(a), w.t.ob(b));
            w.action.carrier.compose(
                &w.action.act_alpha(&ta, &tb, c),
                &w.action.star_right(&w.v(a, b), c),
            )
        }
    };
    let lambda = {
        let w = w.clone();
        move |b: &A::Obj| {
            w.action
                .carrier
                .compose(&w.action.act_lambda(b), &w.action.star_right(&w.v0, b))
        }
    };
    let rho = {
        let w = w.clone();
        move |a: &A::Obj| w.kappa(a)
    };
    let barred = SkewMonoidal::new(
        acat,
        w.k.clone(),
        tensor_obj,
        tensor_mor,
        alpha,
        lambda,
        rho,
    );
    let psi = {
        let w = w.clone();
        move |a: &A::Obj, b: &A::Obj| w.v(a, b)
    };
    let opmon = Opmonoidal::new(
        w.t.clone(),
        barred.clone(),
        w.action.acting.clone(),
        w.v0.clone(),
        psi,
    );
    (barred, opmon)
}

/// The endofunctor category `[A, A]` of a small finite category, materialized:
/// objects are functors, morphisms are natural transformations, composition is
/// vertical. Also returns the object and morphism dictionaries.
pub struct EndoCategory {
    pub cat: FinCategory,
    pub base: FinCategory,
    pub functors: Vec<FinFunctor>,
    pub nats: Vec<FinNat>,
    functor_index: HashMap<(Vec<usize>, Vec<usize>), usize>,
    nat_index: HashMap<(usize, usize, Vec<usize>), usize>,
}

impl EndoCategory {
    pub fn functor_id(&self, f: &FinFunctor) -> Option<ObjId> {
        self.functor_index.get(&(f.omap.clone(), f.mmap.clone())).copied().map(ObjId)
    }

    pub fn nat_id(&self, dom: ObjId, cod: ObjId, components: &[usize]) -> Option<MorId> {
        self.nat_index.get(&(dom.0, cod.0, components.to_vec())).copied().map(MorId)
    }
}

/// Materialize `[A, A]`. Guarded by size caps: the functor count grows
/// exponentially with the base.
pub fn endofunctor_category(
    base: &FinCategory,
    max_objects: usize,
    max_morphisms: usize,
) -> Result<EndoCategory, Error> {
    if base.n_objects() > max_objects || base.n_morphisms() > max_morphisms {
        return Err(Error::precondition(
            "endofunctor_category",
            format!(
                "base too large ({} objects, {} morphisms; caps {max_objects}, {max_morphisms})",
                base.n_objects(),
                base.n_morphisms()
            ),
        ));
    }
    let n = base.n_objects();
    let m = base.n_morphisms();
    // Enumerate object maps, then consistent morphism maps.
    let mut functors: Vec<FinFunctor> = Vec::new();
    let mut omap = vec![0usize; n];
    loop {
        // For this omap enumerate all mmaps where each f goes into
        // hom(omap(src f), omap(tgt f)); check laws afterwards.
        let choices: Vec<Vec<usize>> = (0..m)
            .map(|f| {
                let (s, t) = (base.src(&MorId(f)), base.tgt(&MorId(f)));
                base.hom(&ObjId(omap[s.0]), &ObjId(omap[t.0]))
                    .into_iter()
                    .map(|g| g.0)
                    .collect()
            })
            .collect();
        if choices.iter().all(|c| !c.is_empty()) {
            let mut pick = vec![0usize; m];
            'mmaps: loop {
                let mmap: Vec<usize> = (0..m).map(|f| choices[f][pick[f]]).collect();
                let cand = FinFunctor::new(base.clone(), base.clone(), omap.clone(), mmap).unwrap();
                if crate::fincat::check_functor(&cand).map(|r| r.passed()).unwrap_or(false) {
                    functors.push(cand);
                }
                for f in 0..m {
                    if pick[f] + 1 < choices[f].len() {
                        pick[f] += 1;
                        continue 'mmaps;
                    }
                    pick[f] = 0;
                }
                break;
            }
        }
        // Bump omap.
        let mut done = true;
        for o in 0..n {
            if omap[o] + 1 < n {
                omap[o] += 1;
                done = false;
                break;
            }
            omap[o] = 0;
        }
        if done {
            break;
        }
    }
    // Natural transformations per functor pair.
    let mut nats: Vec<FinNat> = Vec::new();
    let mut mors: Vec<(usize, usize)> = Vec::new();
    for (fi, f) in functors.iter().enumerate() {
        for (gi, g) in functors.iter().enumerate() {
            let choices: Vec<Vec<usize>> = (0..n)
                .map(|o| {
                    base.hom(&ObjId(f.omap[o]), &ObjId(g.omap[o]))
                        .into_iter()
                        .map(|c| c.0)
                        .collect()
                })
                .collect();
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut pick = vec![0usize; n];
            'comps: loop {
                let comps: Vec<usize> = (0..n).map(|o| choices[o][pick[o]]).collect();
                let cand = FinNat::new(f.clone(), g.clone(), comps).unwrap();
                if crate::fincat::check_natural(&cand).map(|r| r.passed()).unwrap_or(false) {
                    nats.push(cand);
                    mors.push((fi, gi));
                }
                for o in 0..n {
                    if pick[o] + 1 < choices[o].len() {
                        pick[o] += 1;
                        continue 'comps;
                    }
                    pick[o] = 0;
                }
                break;
            }
        }
    }
    let nat_index: HashMap<(usize, usize, Vec<usize>), usize> = nats
        .iter()
        .enumerate()
        .map(|(i, t)| ((mors[i].0, mors[i].1, t.components.clone()), i))
        .collect();
    let functor_index: HashMap<(Vec<usize>, Vec<usize>), usize> = functors
        .iter()
        .enumerate()
        .map(|(i, f)| ((f.omap.clone(), f.mmap.clone()), i))
        .collect();
    // Composition table (vertical) and identities.
    let mut comp_entries = Vec::new();
    for (gi, g) in nats.iter().enumerate() {
        for (fi, f) in nats.iter().enumerate() {
            if mors[fi].1 != mors[gi].0 {
                continue;
            }
            let composite = f.then(g).expect("parallel mismatch");
            let idx = nat_index[&(mors[fi].0, mors[gi].1, composite.components.clone())];
            comp_entries.push(((gi, fi), idx));
        }
    }
    let ids: Vec<usize> = functors
        .iter()
        .enumerate()
        .map(|(fi, f)| {
            let idn = FinNat::identity(f);
            nat_index[&(fi, fi, idn.components.clone())]
        })
        .collect();
    let cat = FinCategory::new(functors.len(), mors, &comp_entries, ids)?;
    Ok(EndoCategory { cat, base: base.clone(), functors, nats, functor_index, nat_index })
}

/// The strict monoidal structure on `[A, A]` with tensor = composition of
/// endofunctors, and the evaluation action on `A`.
pub fn evaluation_action(endo: &Rc<EndoCategory>) -> Result<SkewAction<FinCategory, FinCategory>, Error> {
    let id_idx = endo
        .functor_id(&FinFunctor::identity(&endo.base))
        .ok_or_else(|| Error::structural("evaluation_action", "identity functor not enumerated"))?;
    let tensor_obj = {
        let endo = endo.clone();
        move |f: &ObjId, g: &ObjId| {
            let composite = endo.functors[g.0].then(&endo.functors[f.0]);
            endo.functor_id(&composite).expect("composite functor not enumerated")
        }
    };
    let tensor_mor = {
        let endo = endo.clone();
        move |phi: &MorId, psi: &MorId| {
            // Horizontal composite φ∘ψ : F∘G ⇒ F'∘G', component at o:
            // φ_{G'(o)} ∘ F(ψ_o).
            let phi_n = &endo.nats[phi.0];
            let psi_n = &endo.nats[psi.0];
            let f = &phi_n.dom;
            let gp = &psi_n.cod;
            let base = &endo.base;
            let comps: Vec<usize> = (0..base.n_objects())
                .map(|o| {
                    let a = phi_n.at(ObjId(gp.omap[o]));
                    let b = f.mor(psi_n.at(ObjId(o)));
                    base.try_compose(a, b).expect("horizontal composite undefined").0
                })
                .collect();
            let dom = endo
                .functor_id(&psi_n.dom.then(&phi_n.dom))
                .expect("dom composite missing");
            let cod = endo
                .functor_id(&psi_n.cod.then(&phi_n.cod))
                .expect("cod composite missing");
            endo.nat_id(dom, cod, &comps).expect("horizontal composite not a listed nat")
        }
    };
    let ecat = endo.cat.clone();
    let ecat2 = endo.cat.clone();
    let ecat3 = endo.cat.clone();
    let s = SkewMonoidal::new(
        endo.cat.clone(),
        id_idx,
        tensor_obj.clone(),
        tensor_mor,
        move |f: &ObjId, g: &ObjId, h: &ObjId| {
            let fg_h = tensor_obj(&tensor_obj(f, g), h);
            ecat.id_of(fg_h)
        },
        move |f: &ObjId| ecat2.id_of(*f),
        move |f: &ObjId| ecat3.id_of(*f),
    );
    let base = endo.base.clone();
    let endo1 = endo.clone();
    let endo2 = endo.clone();
    let endo3 = endo.clone();
    let base2 = endo.base.clone();
    let base3 = endo.base.clone();
    Ok(SkewAction::new(
        s,
        endo.base.clone(),
        move |f: &ObjId, a: &ObjId| endo1.functors[f.0].ob(*a),
        move |phi: &MorId, f: &MorId| {
            // (φ ⋆ f) = φ_b ∘ F(f) : F(a) → F'(b).
            let phi_n = &endo2.nats[phi.0];
            let b = base.tgt(f);
            base.try_compose(phi_n.at(b), phi_n.dom.mor(*f))
                .expect("evaluation star undefined")
        },
        move |f: &ObjId, g: &ObjId, a: &ObjId| {
            let fga = endo3.functors[f.0].ob(endo3.functors[g.0].ob(*a));
            base2.id_of(fga)
        },
        move |a: &ObjId| base3.id_of(*a),
    ))
}

/// Encode a finite skew monoidal structure as a warping riding the
/// evaluation action of `[A,A]` on `A`: `T(a) = a⊗−`, `K = I`, `v = α`,
/// `v0 = λ`, `k = ρ`.
pub fn evaluation_warping(
    s: &SkewMonoidal<FinCategory>,
    endo: &Rc<EndoCategory>,
) -> Result<SkewWarping<FinCategory, FinCategory>, Error> {
    let action = evaluation_action(endo)?;
    let base = s.carrier.clone();
    let tensor_functor = {
        let s = s.clone();
        let base = base.clone();
        let endo = endo.clone();
        move |a: ObjId| -> Result<(FinFunctor, ObjId), Error> {
            let omap: Vec<usize> =
                (0..base.n_objects()).map(|b| s.tensor(&a, &ObjId(b)).0).collect();
            let mmap: Vec<usize> =
                (0..base.n_morphisms()).map(|g| s.tensor_left(&a, &MorId(g)).0).collect();
            let f = FinFunctor::new(base.clone(), base.clone(), omap, mmap)?;
            let idx = endo
                .functor_id(&f)
                .ok_or_else(|| Error::structural("evaluation_warping", "a⊗− not enumerated"))?;
            Ok((f, idx))
        }
    };
    // T as a generic functor A → [A,A].
    let endo_t = endo.clone();
    let s_t = s.clone();
    let base_t = base.clone();
    let t = Fun::new(
        base.clone(),
        endo.cat.clone(),
        {
            let s = s.clone();
            let base = base.clone();
            let endo = endo.clone();
            move |a: &ObjId| {
                let omap: Vec<usize> =
                    (0..base.n_objects()).map(|b| s.tensor(a, &ObjId(b)).0).collect();
                let mmap: Vec<usize> =
                    (0..base.n_morphisms()).map(|g| s.tensor_left(a, &MorId(g)).0).collect();
                endo.functor_id(&FinFunctor::new(base.clone(), base.clone(), omap, mmap).unwrap())
                    .expect("a⊗− not enumerated")
            }
        },
        move |f: &MorId| {
            // T(f) : (a⊗−) ⇒ (a'⊗−), components f⊗1_b.
            let a = base_t.src(f);
            let a2 = base_t.tgt(f);
            let comps: Vec<usize> =
                (0..base_t.n_objects()).map(|b| s_t.tensor_right(f, &ObjId(b)).0).collect();
            let dom = {
                let omap: Vec<usize> =
                    (0..base_t.n_objects()).map(|b| s_t.tensor(&a, &ObjId(b)).0).collect();
                let mmap: Vec<usize> =
                    (0..base_t.n_morphisms()).map(|g| s_t.tensor_left(&a, &MorId(g)).0).collect();
                endo_t
                    .functor_id(&FinFunctor::new(base_t.clone(), base_t.clone(), omap, mmap).unwrap())
                    .unwrap()
            };
            let cod = {
                let omap: Vec<usize> =
                    (0..base_t.n_objects()).map(|b| s_t.tensor(&a2, &ObjId(b)).0).collect();
                let mmap: Vec<usize> =
                    (0..base_t.n_morphisms()).map(|g| s_t.tensor_left(&a2, &MorId(g)).0).collect();
                endo_t
                    .functor_id(&FinFunctor::new(base_t.clone(), base_t.clone(), omap, mmap).unwrap())
                    .unwrap()
            };
            endo_t.nat_id(dom, cod, &comps).expect("T(f) not a listed nat")
        },
    );
    // v_{A,B} : T(TA⋆B) = (a⊗b)⊗− ⇒ (a⊗−)∘(b⊗−), components α_{a,b,c}.
    let endo_v = endo.clone();
    let s_v = s.clone();
    let base_v = base.clone();
    let tf = tensor_functor;
    let v = move |a: &ObjId, b: &ObjId| -> MorId {
        let ab = s_v.tensor(a, b);
        let (_, dom) = tf(ab).expect("(a⊗b)⊗− missing");
        let (fb, _) = tf(*b).expect("b⊗− missing");
        let (fa, _) = tf(*a).expect("a⊗− missing");
        let cod = endo_v.functor_id(&fb.then(&fa)).expect("composite missing");
        let comps: Vec<usize> =
            (0..base_v.n_objects()).map(|c| s_v.alpha(a, b, &ObjId(c)).0).collect();
        endo_v.nat_id(dom, cod, &comps).expect("alpha family is not natural")
    };
    // v0 : T(I) = (I⊗−) ⇒ Id, components λ_c.
    let v0 = {
        let (_, dom) = {
            let a = s.unit;
            let omap: Vec<usize> =
                (0..base.n_objects()).map(|b| s.tensor(&a, &ObjId(b)).0).collect();
            let mmap: Vec<usize> =
                (0..base.n_morphisms()).map(|g| s.tensor_left(&a, &MorId(g)).0).collect();
            let f = FinFunctor::new(base.clone(), base.clone(), omap, mmap)?;
            let idx = endo
                .functor_id(&f)
                .ok_or_else(|| Error::structural("evaluation_warping", "I⊗− not enumerated"))?;
            (f, idx)
        };
        let cod = endo.functor_id(&FinFunctor::identity(&base)).unwrap();
        let comps: Vec<usize> = (0..base.n_objects()).map(|c| s.lambda(&ObjId(c)).0).collect();
        endo
            .nat_id(dom, cod, &comps)
            .ok_or_else(|| Error::structural("evaluation_warping", "lambda family is not natural"))?
    };
    let s_k = s.clone();
    Ok(SkewWarping::new(action, t, s.unit, v, v0, move |a| s_k.rho(a)))
}
