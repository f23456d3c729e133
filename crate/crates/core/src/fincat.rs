//! Explicit finite categories, functors, and natural transformations, plus the
//! generic `Category` interface the rest of the crate is written against.
//!
//! A [`FinCategory`] is all tables: dense integer indices for objects and
//! morphisms, a total composition table over composable pairs, and an identity
//! picker. Every law check is a finite table lookup.

use crate::report::{Error, LawReport, Violation};
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

/// Dense object index in a [`FinCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

/// Dense morphism index in a [`FinCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

/// The interface every carrier in this crate exposes.
///
/// Values of the category (objects, morphisms) are self-describing: `src` and
/// `tgt` are computable from a morphism alone. `compose` panics on an
/// endpoint mismatch — checkers validate endpoints first and report a
/// structural error instead of composing.
pub trait Category: Clone + 'static {
    type Obj: Clone + PartialEq + fmt::Debug;
    type Mor: Clone + PartialEq + fmt::Debug;

    fn src(&self, f: &Self::Mor) -> Self::Obj;
    fn tgt(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, o: &Self::Obj) -> Self::Mor;
    /// `g ∘ f` (first `f`, then `g`).
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    /// The unique two-sided inverse, if one exists.
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;

    fn obj_label(&self, o: &Self::Obj) -> String;
    fn mor_label(&self, f: &Self::Mor) -> String;

    fn is_identity(&self, f: &Self::Mor) -> bool {
        *f == self.identity(&self.src(f))
    }
}

/// Carriers whose objects and hom sets can be enumerated outright.
pub trait Finite: Category {
    fn objects(&self) -> Vec<Self::Obj>;
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor>;

    fn morphisms(&self) -> Vec<Self::Mor> {
        let obs = self.objects();
        let mut out = Vec::new();
        for a in &obs {
            for b in &obs {
                out.extend(self.hom(a, b));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FinCatData {
    pub n_objects: usize,
    /// (src, tgt) per morphism.
    pub mors: Vec<(usize, usize)>,
    /// comp[g][f] = Some(g∘f) where tgt(f) = src(g).
    pub comp: Vec<Vec<Option<usize>>>,
    /// Identity morphism per object.
    pub ids: Vec<usize>,
    pub obj_names: Option<Vec<String>>,
    pub mor_names: Option<Vec<String>>,
}

/// An explicit finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory(pub(crate) Rc<FinCatData>);

impl FinCategory {
    /// Build from raw tables. `mors` lists (src, tgt) pairs, `comp` maps
    /// composable index pairs `(g, f)` to `g∘f`, `ids` picks the identity of
    /// each object. Structural sanity (indices in range) is enforced here;
    /// the category *laws* are checked separately by [`check_category`].
    pub fn new(
        n_objects: usize,
        mors: Vec<(usize, usize)>,
        comp_entries: &[((usize, usize), usize)],
        ids: Vec<usize>,
    ) -> Result<Self, Error> {
        let n = mors.len();
        for (i, &(s, t)) in mors.iter().enumerate() {
            if s >= n_objects || t >= n_objects {
                return Err(Error::structural(
                    "category",
                    format!("morphism f{i} has out-of-range endpoint ({s},{t})"),
                ));
            }
        }
        if ids.len() != n_objects {
            return Err(Error::structural("category", "ids table length != object count"));
        }
        for (o, &i) in ids.iter().enumerate() {
            if i >= n {
                return Err(Error::structural("category", format!("ids(o{o}) out of range")));
            }
        }
        let mut comp = vec![vec![None; n]; n];
        for &((g, f), gf) in comp_entries {
            if g >= n || f >= n || gf >= n {
                return Err(Error::structural(
                    "category",
                    format!("comp entry ({g},{f})={gf} out of range"),
                ));
            }
            comp[g][f] = Some(gf);
        }
        // Every composable pair must be covered.
        for g in 0..n {
            for f in 0..n {
                if mors[f].1 == mors[g].0 && comp[g][f].is_none() {
                    return Err(Error::structural(
                        "category",
                        format!("missing composition entry for (f{g}, f{f})"),
                    ));
                }
            }
        }
        Ok(FinCategory(Rc::new(FinCatData {
            n_objects,
            mors,
            comp,
            ids,
            obj_names: None,
            mor_names: None,
        })))
    }

    pub fn with_names(
        self,
        obj_names: Vec<String>,
        mor_names: Vec<String>,
    ) -> Result<Self, Error> {
        let mut data = (*self.0).clone();
        if obj_names.len() != data.n_objects || mor_names.len() != data.mors.len() {
            return Err(Error::structural("category", "name tables have wrong length"));
        }
        data.obj_names = Some(obj_names);
        data.mor_names = Some(mor_names);
        Ok(FinCategory(Rc::new(data)))
    }

    pub fn n_objects(&self) -> usize {
        self.0.n_objects
    }

    pub fn n_morphisms(&self) -> usize {
        self.0.mors.len()
    }

    pub fn id_of(&self, o: ObjId) -> MorId {
        MorId(self.0.ids[o.0])
    }

    /// Composite `g∘f` if the pair is composable.
    pub fn try_compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.0.comp[g.0][f.0].map(MorId)
    }

    /// The terminal category: one object, one morphism.
    pub fn terminal() -> FinCategory {
        FinCategory::new(1, vec![(0, 0)], &[((0, 0), 0)], vec![0]).unwrap()
    }

    /// The walking arrow `0 → 1` (morphisms: id0, id1, f).
    pub fn walking_arrow() -> FinCategory {
        FinCategory::new(
            2,
            vec![(0, 0), (1, 1), (0, 1)],
            &[
                ((0, 0), 0),
                ((1, 1), 1),
                ((2, 0), 2),
                ((1, 2), 2),
            ],
            vec![0, 1],
        )
        .unwrap()
    }

    /// The walking isomorphism (morphisms: id0, id1, f: 0→1, g: 1→0).
    pub fn walking_iso() -> FinCategory {
        FinCategory::new(
            2,
            vec![(0, 0), (1, 1), (0, 1), (1, 0)],
            &[
                ((0, 0), 0),
                ((1, 1), 1),
                ((2, 0), 2),
                ((1, 2), 2),
                ((3, 1), 3),
                ((0, 3), 3),
                ((3, 2), 0),
                ((2, 3), 1),
            ],
            vec![0, 1],
        )
        .unwrap()
    }

    /// Discrete category on `n` objects.
    pub fn discrete(n: usize) -> FinCategory {
        let mors: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        let comp: Vec<((usize, usize), usize)> = (0..n).map(|i| ((i, i), i)).collect();
        FinCategory::new(n, mors, &comp, (0..n).collect()).unwrap()
    }

    /// The product category: objects and morphisms are index pairs, all
    /// structure componentwise.
    pub fn product(a: &FinCategory, b: &FinCategory) -> FinCategory {
        let (na, nb) = (a.n_objects(), b.n_objects());
        let (ma, mb) = (a.n_morphisms(), b.n_morphisms());
        let mors: Vec<(usize, usize)> = (0..ma * mb)
            .map(|m| {
                let (fa, fb) = (MorId(m / mb), MorId(m % mb));
                (a.src(&fa).0 * nb + b.src(&fb).0, a.tgt(&fa).0 * nb + b.tgt(&fb).0)
            })
            .collect();
        let mut comp = Vec::new();
        for g in 0..ma * mb {
            for f in 0..ma * mb {
                let (ga, gb) = (MorId(g / mb), MorId(g % mb));
                let (fa, fb) = (MorId(f / mb), MorId(f % mb));
                if let (Some(ha), Some(hb)) = (a.try_compose(ga, fa), b.try_compose(gb, fb)) {
                    comp.push(((g, f), ha.0 * mb + hb.0));
                }
            }
        }
        let ids: Vec<usize> = (0..na * nb)
            .map(|o| a.id_of(ObjId(o / nb)).0 * mb + b.id_of(ObjId(o % nb)).0)
            .collect();
        FinCategory::new(na * nb, mors, &comp, ids).expect("componentwise tables are coherent")
    }

    /// A thin category from a reflexive-transitive relation `leq`.
    /// Morphism `a → b` exists iff `leq(a, b)`.
    pub fn from_preorder(n: usize, leq: impl Fn(usize, usize) -> bool) -> FinCategory {
        let mut mors = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    index.insert((a, b), mors.len());
                    mors.push((a, b));
                }
            }
        }
        let mut comp = Vec::new();
        for (g, &(gs, gt)) in mors.iter().enumerate() {
            for (f, &(fs, ft)) in mors.iter().enumerate() {
                if ft == gs {
                    comp.push(((g, f), index[&(fs, gt)]));
                }
            }
        }
        let ids = (0..n).map(|a| index[&(a, a)]).collect();
        FinCategory::new(n, mors, &comp, ids).unwrap()
    }
}

impl Category for FinCategory {
    type Obj = ObjId;
    type Mor = MorId;

    fn src(&self, f: &MorId) -> ObjId {
        ObjId(self.0.mors[f.0].0)
    }

    fn tgt(&self, f: &MorId) -> ObjId {
        ObjId(self.0.mors[f.0].1)
    }

    fn identity(&self, o: &ObjId) -> MorId {
        MorId(self.0.ids[o.0])
    }

    fn compose(&self, g: &MorId, f: &MorId) -> MorId {
        self.0.comp[g.0][f.0]
            .map(MorId)
            .unwrap_or_else(|| panic!("compose({g}, {f}): not composable"))
    }

    fn inverse(&self, f: &MorId) -> Option<MorId> {
        let (s, t) = (self.src(f), self.tgt(f));
        let id_s = self.identity(&s);
        let id_t = self.identity(&t);
        self.hom(&t, &s)
            .into_iter()
            .find(|g| self.compose(g, f) == id_s && self.compose(f, g) == id_t)
    }

    fn obj_label(&self, o: &ObjId) -> String {
        match &self.0.obj_names {
            Some(names) => names[o.0].clone(),
            None => o.to_string(),
        }
    }

    fn mor_label(&self, f: &MorId) -> String {
        match &self.0.mor_names {
            Some(names) => names[f.0].clone(),
            None => f.to_string(),
        }
    }
}

impl Finite for FinCategory {
    fn objects(&self) -> Vec<ObjId> {
        (0..self.0.n_objects).map(ObjId).collect()
    }

    fn hom(&self, a: &ObjId, b: &ObjId) -> Vec<MorId> {
        self.0
            .mors
            .iter()
            .enumerate()
            .filter(|(_, &(s, t))| s == a.0 && t == b.0)
            .map(|(i, _)| MorId(i))
            .collect()
    }

    fn morphisms(&self) -> Vec<MorId> {
        (0..self.0.mors.len()).map(MorId).collect()
    }
}

/// Check associativity and identity laws; empty report means pass.
/// Violations name the witnessing morphism pair/triple.
pub fn check_category(c: &FinCategory) -> Result<LawReport, Error> {
    let d = &c.0;
    let n = d.mors.len();
    // Structural pass: composites listed for non-composable pairs, or
    // identities that are not endomorphisms, make the table malformed.
    for g in 0..n {
        for f in 0..n {
            if d.comp[g][f].is_some() && d.mors[f].1 != d.mors[g].0 {
                return Err(Error::structural(
                    "check_category",
                    format!("comp(f{g}, f{f}) defined but tgt(f{f}) != src(f{g})"),
                ));
            }
        }
    }
    for (o, &i) in d.ids.iter().enumerate() {
        if d.mors[i] != (o, o) {
            return Err(Error::structural(
                "check_category",
                format!("ids(o{o}) = f{i} is not an endomorphism of o{o}"),
            ));
        }
    }

    let mut report = LawReport::default();
    // Composite endpoints: result of comp(g, f) must run src(f) → tgt(g).
    for g in 0..n {
        for f in 0..n {
            if let Some(gf) = d.comp[g][f] {
                if d.mors[gf] != (d.mors[f].0, d.mors[g].1) {
                    report.push(Violation::new(
                        "comp-endpoints",
                        format!("(f{g}, f{f})"),
                        format!("comp(f{g}, f{f}) = f{gf} has wrong endpoints"),
                    ));
                }
            }
        }
    }
    // Identity laws.
    for f in 0..n {
        let (s, t) = d.mors[f];
        let left = d.comp[d.ids[t]][f].unwrap();
        if left != f {
            report.push(Violation::new(
                "left-identity",
                format!("(id{}, f{})", t, f),
                format!("comp(id{t}, f{f}) = f{left}, expected f{f}"),
            ));
        }
        let right = d.comp[f][d.ids[s]].unwrap();
        if right != f {
            report.push(Violation::new(
                "right-identity",
                format!("(f{}, id{})", f, s),
                format!("comp(f{f}, id{s}) = f{right}, expected f{f}"),
            ));
        }
    }
    // Associativity over all composable triples. Composites of
    // endpoint-corrupt entries may be missing; those are already reported
    // above, so skip the instances they poison.
    for f in 0..n {
        for g in 0..n {
            if d.mors[f].1 != d.mors[g].0 {
                continue;
            }
            let gf = d.comp[g][f].unwrap();
            for h in 0..n {
                if d.mors[g].1 != d.mors[h].0 {
                    continue;
                }
                let hg = d.comp[h][g].unwrap();
                let (Some(l), Some(r)) = (d.comp[h][gf], d.comp[hg][f]) else {
                    continue;
                };
                if l != r {
                    report.push(Violation::new(
                        "assoc",
                        format!("(f{h}, f{g}, f{f})"),
                        format!("(f{h}∘f{g})∘f{f} = f{r} but f{h}∘(f{g}∘f{f}) = f{l}"),
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// A functor between explicit finite categories, as tables.
#[derive(Debug, Clone, PartialEq)]
pub struct FinFunctor {
    pub dom: FinCategory,
    pub cod: FinCategory,
    pub omap: Vec<usize>,
    pub mmap: Vec<usize>,
}

impl FinFunctor {
    pub fn new(
        dom: FinCategory,
        cod: FinCategory,
        omap: Vec<usize>,
        mmap: Vec<usize>,
    ) -> Result<Self, Error> {
        if omap.len() != dom.n_objects() || mmap.len() != dom.n_morphisms() {
            return Err(Error::structural("functor", "map tables have wrong length"));
        }
        if omap.iter().any(|&o| o >= cod.n_objects()) || mmap.iter().any(|&m| m >= cod.n_morphisms())
        {
            return Err(Error::structural("functor", "omap/mmap out of range"));
        }
        Ok(FinFunctor { dom, cod, omap, mmap })
    }

    pub fn identity(c: &FinCategory) -> FinFunctor {
        FinFunctor {
            dom: c.clone(),
            cod: c.clone(),
            omap: (0..c.n_objects()).collect(),
            mmap: (0..c.n_morphisms()).collect(),
        }
    }

    /// Constant functor at `o`: every morphism goes to `id(o)`.
    pub fn constant(dom: &FinCategory, cod: &FinCategory, o: ObjId) -> FinFunctor {
        FinFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            omap: vec![o.0; dom.n_objects()],
            mmap: vec![cod.id_of(o).0; dom.n_morphisms()],
        }
    }

    pub fn ob(&self, o: ObjId) -> ObjId {
        ObjId(self.omap[o.0])
    }

    pub fn mor(&self, f: MorId) -> MorId {
        MorId(self.mmap[f.0])
    }

    /// `other ∘ self` at the level of tables.
    pub fn then(&self, other: &FinFunctor) -> FinFunctor {
        FinFunctor {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            omap: self.omap.iter().map(|&o| other.omap[o]).collect(),
            mmap: self.mmap.iter().map(|&m| other.mmap[m]).collect(),
        }
    }

    /// View as a generic functor value.
    pub fn as_fun(&self) -> Fun<FinCategory, FinCategory> {
        let omap = self.omap.clone();
        let mmap = self.mmap.clone();
        Fun::new(
            self.dom.clone(),
            self.cod.clone(),
            move |o: &ObjId| ObjId(omap[o.0]),
            move |f: &MorId| MorId(mmap[f.0]),
        )
    }
}

/// Functor laws: endpoint preservation, identities, composition.
pub fn check_functor(fr: &FinFunctor) -> Result<LawReport, Error> {
    let mut report = LawReport::default();
    let dom = &fr.dom;
    let cod = &fr.cod;
    for f in dom.morphisms() {
        let img = fr.mor(f);
        if cod.src(&img) != fr.ob(dom.src(&f)) {
            report.push(Violation::new(
                "src-preservation",
                format!("f{}", f.0),
                format!("src(F f{}) = {} but F src = {}", f.0, cod.src(&img), fr.ob(dom.src(&f))),
            ));
        }
        if cod.tgt(&img) != fr.ob(dom.tgt(&f)) {
            report.push(Violation::new(
                "tgt-preservation",
                format!("f{}", f.0),
                format!("tgt(F f{}) = {} but F tgt = {}", f.0, cod.tgt(&img), fr.ob(dom.tgt(&f))),
            ));
        }
    }
    for o in dom.objects() {
        if fr.mor(dom.id_of(o)) != cod.id_of(fr.ob(o)) {
            report.push(Violation::new(
                "identity-preservation",
                format!("{o}"),
                format!("F(id {o}) != id(F {o})"),
            ));
        }
    }
    for g in dom.morphisms() {
        for f in dom.morphisms() {
            if dom.tgt(&f) != dom.src(&g) {
                continue;
            }
            let gf = dom.compose(&g, &f);
            let lhs = fr.mor(gf);
            let (ig, iff) = (fr.mor(g), fr.mor(f));
            // Guard: if endpoints were not preserved, composability may fail.
            if cod.tgt(&iff) != cod.src(&ig) {
                continue;
            }
            let rhs = cod.compose(&ig, &iff);
            if lhs != rhs {
                report.push(Violation::new(
                    "composition-preservation",
                    format!("(f{}, f{})", g.0, f.0),
                    format!("F(g∘f) = {lhs:?} but Fg∘Ff = {rhs:?}"),
                ));
            }
        }
    }
    Ok(report)
}

/// A natural transformation between parallel table functors.
#[derive(Debug, Clone, PartialEq)]
pub struct FinNat {
    pub dom: FinFunctor,
    pub cod: FinFunctor,
    /// Component (a morphism of the codomain category) per domain object.
    pub components: Vec<usize>,
}

impl FinNat {
    pub fn new(dom: FinFunctor, cod: FinFunctor, components: Vec<usize>) -> Result<Self, Error> {
        if dom.dom != cod.dom || dom.cod != cod.cod {
            return Err(Error::structural("nat", "dom and cod functors are not parallel"));
        }
        if components.len() != dom.dom.n_objects() {
            return Err(Error::structural("nat", "component table has wrong length"));
        }
        if components.iter().any(|&m| m >= dom.cod.n_morphisms()) {
            return Err(Error::structural("nat", "component out of range"));
        }
        Ok(FinNat { dom, cod, components })
    }

    pub fn identity(f: &FinFunctor) -> FinNat {
        let components = (0..f.dom.n_objects()).map(|o| f.cod.0.ids[f.omap[o]]).collect();
        FinNat { dom: f.clone(), cod: f.clone(), components }
    }

    pub fn at(&self, o: ObjId) -> MorId {
        MorId(self.components[o.0])
    }

    /// Vertical composite `other · self` (self first).
    pub fn then(&self, other: &FinNat) -> Result<FinNat, Error> {
        if other.dom != self.cod {
            return Err(Error::structural("nat", "vertical composite endpoints mismatch"));
        }
        let cat = &self.dom.cod;
        let components = (0..self.components.len())
            .map(|o| {
                cat.try_compose(other.at(ObjId(o)), self.at(ObjId(o)))
                    .map(|m| m.0)
                    .ok_or_else(|| Error::structural("nat", "non-composable components"))
            })
            .collect::<Result<_, _>>()?;
        FinNat::new(self.dom.clone(), other.cod.clone(), components)
    }

    /// Whisker on the left with `h : B → dom-category` (components at h(o)).
    pub fn whisker_left(&self, h: &FinFunctor) -> Result<FinNat, Error> {
        if h.cod != self.dom.dom {
            return Err(Error::structural("nat", "whisker_left functor mismatch"));
        }
        let components = (0..h.dom.n_objects()).map(|o| self.components[h.omap[o]]).collect();
        FinNat::new(h.then(&self.dom), h.then(&self.cod), components)
    }

    /// Whisker on the right with `h : cod-category → D` (apply h to components).
    pub fn whisker_right(&self, h: &FinFunctor) -> Result<FinNat, Error> {
        if h.dom != self.dom.cod {
            return Err(Error::structural("nat", "whisker_right functor mismatch"));
        }
        let components = self.components.iter().map(|&m| h.mmap[m]).collect();
        FinNat::new(self.dom.then(h), self.cod.then(h), components)
    }
}

/// Naturality check: all squares over morphisms of the domain.
pub fn check_natural(t: &FinNat) -> Result<LawReport, Error> {
    let base = &t.dom.dom;
    let cat = &t.dom.cod;
    for o in base.objects() {
        let c = t.at(o);
        if cat.src(&c) != t.dom.ob(o) || cat.tgt(&c) != t.cod.ob(o) {
            return Err(Error::structural(
                "check_natural",
                format!("component at {o} has wrong endpoints"),
            ));
        }
    }
    let mut report = LawReport::default();
    for f in base.morphisms() {
        let (a, b) = (base.src(&f), base.tgt(&f));
        let lhs = cat.compose(&t.at(b), &t.dom.mor(f));
        let rhs = cat.compose(&t.cod.mor(f), &t.at(a));
        if lhs != rhs {
            report.push(Violation::new(
                "naturality",
                format!("f{}", f.0),
                format!("t_b∘F f{} = {lhs:?} but G f{}∘t_a = {rhs:?}", f.0, f.0),
            ));
        }
    }
    Ok(report)
}

/// The unique two-sided inverse of `m` in `c`, if any.
pub fn is_invertible(c: &FinCategory, m: MorId) -> Option<MorId> {
    c.inverse(&m)
}

/// A functor between arbitrary carriers, as procedures.
pub struct Fun<C: Category, D: Category> {
    pub dom: C,
    pub cod: D,
    omap: Rc<dyn Fn(&C::Obj) -> D::Obj>,
    mmap: Rc<dyn Fn(&C::Mor) -> D::Mor>,
}

impl<C: Category, D: Category> Clone for Fun<C, D> {
    fn clone(&self) -> Self {
        Fun {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            omap: self.omap.clone(),
            mmap: self.mmap.clone(),
        }
    }
}

impl<C: Category, D: Category> fmt::Debug for Fun<C, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fun")
    }
}

impl<C: Category, D: Category> Fun<C, D> {
    pub fn new(
        dom: C,
        cod: D,
        omap: impl Fn(&C::Obj) -> D::Obj + 'static,
        mmap: impl Fn(&C::Mor) -> D::Mor + 'static,
    ) -> Self {
        Fun { dom, cod, omap: Rc::new(omap), mmap: Rc::new(mmap) }
    }

    pub fn ob(&self, o: &C::Obj) -> D::Obj {
        (self.omap)(o)
    }

    pub fn mor(&self, f: &C::Mor) -> D::Mor {
        (self.mmap)(f)
    }

    pub fn id(c: C) -> Fun<C, C> {
        Fun::new(c.clone(), c, |o: &C::Obj| o.clone(), |f: &C::Mor| f.clone())
    }

    /// `other ∘ self`.
    pub fn then<E: Category>(&self, other: &Fun<D, E>) -> Fun<C, E> {
        let f = self.clone();
        let g = other.clone();
        let f2 = self.clone();
        let g2 = other.clone();
        Fun::new(
            self.dom.clone(),
            other.cod.clone(),
            move |o| g.ob(&f.ob(o)),
            move |m| g2.mor(&f2.mor(m)),
        )
    }

    /// Functor laws on the given samples.
    pub fn check_on(&self, objs: &[C::Obj], composable: &[(C::Mor, C::Mor)]) -> LawReport {
        let mut report = LawReport::default();
        for o in objs {
            let lhs = self.mor(&self.dom.identity(o));
            let rhs = self.cod.identity(&self.ob(o));
            if lhs != rhs {
                report.push(Violation::new(
                    "identity-preservation",
                    self.dom.obj_label(o),
                    "F(id) != id(F)".to_string(),
                ));
            }
        }
        for (g, f) in composable {
            let lhs = self.mor(&self.dom.compose(g, f));
            let rhs = self.cod.compose(&self.mor(g), &self.mor(f));
            if lhs != rhs {
                report.push(Violation::new(
                    "composition-preservation",
                    format!("({}, {})", self.dom.mor_label(g), self.dom.mor_label(f)),
                    "F(g∘f) != Fg∘Ff".to_string(),
                ));
            }
        }
        report
    }
}

/// Naturality of a component family `t : F ⇒ G` on the given morphisms.
pub fn check_naturality_on<C: Category, D: Category>(
    f: &Fun<C, D>,
    g: &Fun<C, D>,
    t: &dyn Fn(&C::Obj) -> D::Mor,
    mors: &[C::Mor],
    label: &str,
) -> LawReport {
    let mut report = LawReport::default();
    let d = &f.cod;
    for m in mors {
        let (a, b) = (f.dom.src(m), f.dom.tgt(m));
        let lhs = d.compose(&t(&b), &f.mor(m));
        let rhs = d.compose(&g.mor(m), &t(&a));
        if lhs != rhs {
            report.push(Violation::new(
                format!("naturality({label})"),
                f.dom.mor_label(m),
                "square does not commute".to_string(),
            ));
        }
    }
    report
}
