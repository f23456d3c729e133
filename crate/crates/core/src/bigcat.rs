//! The slice category `Set/O` for a finite index set `O`, presented
//! computably: objects are finite fibred sets built on demand, hom sets are
//! enumerable per pair, and a seeded sampler drives property checks.
//!
//! Element labels are structured tags recording summand provenance, so the
//! canonical isomorphisms the theory promises can be *computed*, not just
//! asserted. Maps are positional (per-fibre index tables); equality of maps is
//! extensional equality of those tables.

use crate::fincat::{Category, Fun};
use crate::reflection::Adjunction;
use crate::report::Error;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::rc::Rc;

/// A structured element label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    /// The canonical inhabitant of a singleton fibre.
    Unit,
    /// A plain point.
    Atom(u32),
    /// A morphism of some base category, as an element.
    Mor(u32),
    /// Injection into an ordered disjoint sum, tagged with the summand index.
    Tag(u32, Rc<Elem>),
    /// An ordered pair.
    Pair(Rc<Elem>, Rc<Elem>),
}

impl Elem {
    pub fn tag(i: usize, e: Elem) -> Elem {
        Elem::Tag(i as u32, Rc::new(e))
    }

    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Rc::new(a), Rc::new(b))
    }

    /// `(a, m, b)` as a right-nested pair; the shape tensor elements use.
    pub fn triple(a: Elem, m: Elem, b: Elem) -> Elem {
        Elem::pair(a, Elem::pair(m, b))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Unit => write!(f, "*"),
            Elem::Atom(k) => write!(f, "a{k}"),
            Elem::Mor(m) => write!(f, "f{m}"),
            Elem::Tag(i, e) => write!(f, "{i}:{e}"),
            Elem::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// An object of `Set/O`: a finite carrier fibred over `O = {0..base-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibredSet {
    fibres: Rc<Vec<Vec<Elem>>>,
}

impl FibredSet {
    pub fn new(fibres: Vec<Vec<Elem>>) -> FibredSet {
        FibredSet { fibres: Rc::new(fibres) }
    }

    /// All fibres empty.
    pub fn empty(base: usize) -> FibredSet {
        FibredSet::new(vec![Vec::new(); base])
    }

    /// Every fibre a singleton; the unit of the slice tensor.
    pub fn singletons(base: usize) -> FibredSet {
        FibredSet::new(vec![vec![Elem::Unit]; base])
    }

    /// Fibres of the given sizes populated with `Atom(0..size)`.
    pub fn atomic(sizes: &[usize]) -> FibredSet {
        FibredSet::new(
            sizes.iter().map(|&s| (0..s as u32).map(Elem::Atom).collect()).collect(),
        )
    }

    pub fn base(&self) -> usize {
        self.fibres.len()
    }

    pub fn fibre(&self, j: usize) -> &[Elem] {
        &self.fibres[j]
    }

    pub fn size(&self, j: usize) -> usize {
        self.fibres[j].len()
    }

    pub fn total(&self) -> usize {
        self.fibres.iter().map(Vec::len).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.fibres.iter().map(Vec::len).collect()
    }

    pub fn index_in(&self, j: usize, e: &Elem) -> Option<usize> {
        self.fibres[j].iter().position(|x| x == e)
    }
}

impl fmt::Display for FibredSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, fibre) in self.fibres.iter().enumerate() {
            if j > 0 {
                write!(f, "|")?;
            }
            for (p, e) in fibre.iter().enumerate() {
                if p > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

/// A fibre-preserving map, stored positionally: `table[j][p]` is the position
/// in the codomain fibre `j` of the image of the `p`-th domain element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreMap {
    pub dom: FibredSet,
    pub cod: FibredSet,
    table: Rc<Vec<Vec<usize>>>,
}

impl FibreMap {
    pub fn new(dom: FibredSet, cod: FibredSet, table: Vec<Vec<usize>>) -> Result<FibreMap, Error> {
        if dom.base() != cod.base() || table.len() != dom.base() {
            return Err(Error::structural("fibre map", "base mismatch"));
        }
        for j in 0..dom.base() {
            if table[j].len() != dom.size(j) {
                return Err(Error::structural("fibre map", format!("table at fibre {j} wrong length")));
            }
            if table[j].iter().any(|&q| q >= cod.size(j)) {
                return Err(Error::structural("fibre map", format!("image out of range at fibre {j}")));
            }
        }
        Ok(FibreMap { dom, cod, table: Rc::new(table) })
    }

    /// Build from a positional function; panics on out-of-range images.
    pub fn from_fn(dom: &FibredSet, cod: &FibredSet, f: impl Fn(usize, usize) -> usize) -> FibreMap {
        let table: Vec<Vec<usize>> =
            (0..dom.base()).map(|j| (0..dom.size(j)).map(|p| f(j, p)).collect()).collect();
        FibreMap::new(dom.clone(), cod.clone(), table).expect("canonical map out of range")
    }

    /// Build by mapping labels; every image label must occur in the codomain.
    pub fn from_labels(
        dom: &FibredSet,
        cod: &FibredSet,
        f: impl Fn(usize, &Elem) -> Elem,
    ) -> Result<FibreMap, Error> {
        let mut table = Vec::with_capacity(dom.base());
        for j in 0..dom.base() {
            let mut row = Vec::with_capacity(dom.size(j));
            // Hot lookups go through a map built once per fibre.
            let index: std::collections::HashMap<&Elem, usize> =
                cod.fibre(j).iter().enumerate().map(|(q, e)| (e, q)).collect();
            for e in dom.fibre(j) {
                let img = f(j, e);
                match index.get(&img) {
                    Some(&q) => row.push(q),
                    None => {
                        return Err(Error::structural(
                            "fibre map",
                            format!("image {img} not in codomain fibre {j}"),
                        ))
                    }
                }
            }
            table.push(row);
        }
        FibreMap::new(dom.clone(), cod.clone(), table)
    }

    pub fn identity(x: &FibredSet) -> FibreMap {
        FibreMap::from_fn(x, x, |_, p| p)
    }

    pub fn apply(&self, j: usize, p: usize) -> usize {
        self.table[j][p]
    }

    /// Image label of the `p`-th element of fibre `j`.
    pub fn image(&self, j: usize, p: usize) -> &Elem {
        &self.cod.fibre(j)[self.table[j][p]]
    }

    /// `self ∘ other` is not provided; see [`SliceCategory::compose`].
    pub fn is_bijective(&self) -> bool {
        (0..self.dom.base()).all(|j| {
            if self.dom.size(j) != self.cod.size(j) {
                return false;
            }
            let mut seen = vec![false; self.cod.size(j)];
            self.table[j].iter().all(|&q| !std::mem::replace(&mut seen[q], true))
        })
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        &self.table
    }
}

impl fmt::Display for FibreMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MAX: usize = 24;
        write!(f, "{{")?;
        let mut written = 0usize;
        let mut omitted = 0usize;
        for j in 0..self.dom.base() {
            for p in 0..self.dom.size(j) {
                if written >= MAX {
                    omitted += 1;
                    continue;
                }
                if written > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}:{}↦{}", j, self.dom.fibre(j)[p], self.image(j, p))?;
                written += 1;
            }
        }
        if omitted > 0 {
            write!(f, " …+{omitted}")?;
        }
        write!(f, "}}")
    }
}

/// A total function between index sets `{0..dom_size-1} → {0..cod_size-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    pub dom_size: usize,
    pub cod_size: usize,
    map: Vec<usize>,
}

impl IndexMap {
    pub fn new(dom_size: usize, cod_size: usize, map: Vec<usize>) -> Result<IndexMap, Error> {
        if map.len() != dom_size {
            return Err(Error::structural("index map", "table length != domain size"));
        }
        if map.iter().any(|&o| o >= cod_size) {
            return Err(Error::structural("index map", "value out of range"));
        }
        Ok(IndexMap { dom_size, cod_size, map })
    }

    pub fn identity(n: usize) -> IndexMap {
        IndexMap::new(n, n, (0..n).collect()).unwrap()
    }

    pub fn apply(&self, u: usize) -> usize {
        self.map[u]
    }

    /// Preimage of `i`, ascending.
    pub fn preimage(&self, i: usize) -> Vec<usize> {
        (0..self.dom_size).filter(|&u| self.map[u] == i).collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod_size];
        self.map.iter().all(|&i| !std::mem::replace(&mut seen[i], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod_size];
        for &i in &self.map {
            seen[i] = true;
        }
        seen.iter().all(|&b| b)
    }

    pub fn entries(&self) -> &[usize] {
        &self.map
    }
}

/// `Set/O` as a computable category. Objects are [`FibredSet`]s over the base,
/// morphisms are [`FibreMap`]s; composition and identities are positional.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceCategory {
    pub base: usize,
}

/// The slice category `Set/o` for `o = {0..base-1}`.
pub fn slice_category(base: usize) -> SliceCategory {
    SliceCategory { base }
}

impl Category for SliceCategory {
    type Obj = FibredSet;
    type Mor = FibreMap;

    fn src(&self, f: &FibreMap) -> FibredSet {
        f.dom.clone()
    }

    fn tgt(&self, f: &FibreMap) -> FibredSet {
        f.cod.clone()
    }

    fn identity(&self, o: &FibredSet) -> FibreMap {
        FibreMap::identity(o)
    }

    fn compose(&self, g: &FibreMap, f: &FibreMap) -> FibreMap {
        assert!(f.cod == g.dom, "compose: middle objects differ");
        FibreMap::from_fn(&f.dom, &g.cod, |j, p| g.apply(j, f.apply(j, p)))
    }

    fn inverse(&self, f: &FibreMap) -> Option<FibreMap> {
        if !f.is_bijective() {
            return None;
        }
        let mut table: Vec<Vec<usize>> = (0..f.cod.base()).map(|j| vec![0; f.cod.size(j)]).collect();
        for j in 0..f.dom.base() {
            for p in 0..f.dom.size(j) {
                table[j][f.apply(j, p)] = p;
            }
        }
        Some(FibreMap::new(f.cod.clone(), f.dom.clone(), table).unwrap())
    }

    fn obj_label(&self, o: &FibredSet) -> String {
        o.to_string()
    }

    fn mor_label(&self, f: &FibreMap) -> String {
        f.to_string()
    }
}

impl SliceCategory {
    /// All fibre-preserving maps `X → Y`, in lexicographic positional order.
    pub fn hom(&self, x: &FibredSet, y: &FibredSet) -> Vec<FibreMap> {
        let count = self.hom_count(x, y);
        if count == 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut table: Vec<Vec<usize>> = (0..self.base).map(|j| vec![0; x.size(j)]).collect();
        loop {
            out.push(FibreMap::new(x.clone(), y.clone(), table.clone()).unwrap());
            // Odometer over all (fibre, position) slots.
            let mut done = true;
            'bump: for j in 0..self.base {
                for p in 0..x.size(j) {
                    if table[j][p] + 1 < y.size(j) {
                        table[j][p] += 1;
                        done = false;
                        break 'bump;
                    }
                    table[j][p] = 0;
                }
            }
            if done {
                break;
            }
        }
        out
    }

    /// `∏_j |Y_j|^{|X_j|}`.
    pub fn hom_count(&self, x: &FibredSet, y: &FibredSet) -> u128 {
        let mut count: u128 = 1;
        for j in 0..self.base {
            count = count.saturating_mul((y.size(j) as u128).saturating_pow(x.size(j) as u32));
        }
        count
    }

    /// Random object with fibre sizes `0..=bound`, elements `Atom(0..size)`.
    pub fn sample_object(&self, rng: &mut ChaCha8Rng, bound: usize) -> FibredSet {
        let sizes: Vec<usize> = (0..self.base).map(|_| rng.random_range(0..=bound)).collect();
        FibredSet::atomic(&sizes)
    }

    /// Random object with empty fibres wherever `allowed[j]` is false.
    pub fn sample_object_masked(
        &self,
        rng: &mut ChaCha8Rng,
        bound: usize,
        allowed: &[bool],
    ) -> FibredSet {
        let sizes: Vec<usize> = (0..self.base)
            .map(|j| if allowed[j] { rng.random_range(0..=bound) } else { 0 })
            .collect();
        FibredSet::atomic(&sizes)
    }

    /// Random map `X → Y`, if one exists.
    pub fn sample_map(
        &self,
        rng: &mut ChaCha8Rng,
        x: &FibredSet,
        y: &FibredSet,
    ) -> Option<FibreMap> {
        let mut table = Vec::with_capacity(self.base);
        for j in 0..self.base {
            if x.size(j) > 0 && y.size(j) == 0 {
                return None;
            }
            table.push((0..x.size(j)).map(|_| rng.random_range(0..y.size(j).max(1))).collect());
        }
        Some(FibreMap::new(x.clone(), y.clone(), table).unwrap())
    }
}

/// The direct image `N = ξ_! : Set/U → Set/O`; fibre over `i` is the ordered
/// disjoint sum of the fibres over the preimage of `i`.
pub fn direct_image(xi: &IndexMap) -> Fun<SliceCategory, SliceCategory> {
    let dom = slice_category(xi.dom_size);
    let cod = slice_category(xi.cod_size);
    let xi_o = xi.clone();
    let xi_m = xi.clone();
    Fun::new(
        dom,
        cod,
        move |a: &FibredSet| {
            let fibres = (0..xi_o.cod_size)
                .map(|i| {
                    let mut fibre = Vec::new();
                    for u in xi_o.preimage(i) {
                        for e in a.fibre(u) {
                            fibre.push(Elem::tag(u, e.clone()));
                        }
                    }
                    fibre
                })
                .collect();
            FibredSet::new(fibres)
        },
        move |f: &FibreMap| {
            let mut table = Vec::with_capacity(xi_m.cod_size);
            let mut dom_fibres = Vec::with_capacity(xi_m.cod_size);
            let mut cod_fibres = Vec::with_capacity(xi_m.cod_size);
            for i in 0..xi_m.cod_size {
                let pre = xi_m.preimage(i);
                // Offsets of each summand in the codomain fibre.
                let mut cod_offset = std::collections::HashMap::new();
                let mut acc = 0usize;
                for &u in &pre {
                    cod_offset.insert(u, acc);
                    acc += f.cod.size(u);
                }
                let mut row = Vec::new();
                let mut dom_fibre = Vec::new();
                let mut cod_fibre = Vec::new();
                for &u in &pre {
                    for p in 0..f.dom.size(u) {
                        row.push(cod_offset[&u] + f.apply(u, p));
                        dom_fibre.push(Elem::tag(u, f.dom.fibre(u)[p].clone()));
                    }
                    for e in f.cod.fibre(u) {
                        cod_fibre.push(Elem::tag(u, e.clone()));
                    }
                }
                table.push(row);
                dom_fibres.push(dom_fibre);
                cod_fibres.push(cod_fibre);
            }
            FibreMap::new(FibredSet::new(dom_fibres), FibredSet::new(cod_fibres), table).unwrap()
        },
    )
}

/// The inverse image `R = ξ* : Set/O → Set/U`; fibre over `u` is a copy of
/// the fibre over `ξ(u)`.
pub fn inverse_image(xi: &IndexMap) -> Fun<SliceCategory, SliceCategory> {
    let dom = slice_category(xi.cod_size);
    let cod = slice_category(xi.dom_size);
    let xi_o = xi.clone();
    let xi_m = xi.clone();
    Fun::new(
        dom,
        cod,
        move |x: &FibredSet| {
            FibredSet::new((0..xi_o.dom_size).map(|u| x.fibre(xi_o.apply(u)).to_vec()).collect())
        },
        move |f: &FibreMap| {
            let dom_fibres =
                (0..xi_m.dom_size).map(|u| f.dom.fibre(xi_m.apply(u)).to_vec()).collect();
            let cod_fibres =
                (0..xi_m.dom_size).map(|u| f.cod.fibre(xi_m.apply(u)).to_vec()).collect();
            let table = (0..xi_m.dom_size).map(|u| f.table()[xi_m.apply(u)].clone()).collect();
            FibreMap::new(FibredSet::new(dom_fibres), FibredSet::new(cod_fibres), table).unwrap()
        },
    )
}

/// The adjunction `ξ_! ⊣ ξ*` between `Set/U` and `Set/O`, with unit
/// `η_A : A → RNA` and counit `ε_X : NRX → X` given componentwise.
///
/// The unit components are bijections exactly when `ξ` is injective; the
/// counit component over `i` is the identity of `X_i` repeated once per
/// preimage point, so the empty map when `i` is outside the image.
pub fn slice_adjunction(xi: &IndexMap) -> Adjunction<SliceCategory, SliceCategory> {
    let n = direct_image(xi);
    let r = inverse_image(xi);
    let n_for_unit = n.clone();
    let r_for_unit = r.clone();
    let xi_unit = xi.clone();
    let unit = move |a: &FibredSet| {
        let rna = r_for_unit.ob(&n_for_unit.ob(a));
        let table: Vec<Vec<usize>> = (0..a.base())
            .map(|u| {
                // Position of A_u inside (NA)_{ξu} = Σ_{ξu'=ξu} A_{u'}.
                let offset: usize = xi_unit
                    .preimage(xi_unit.apply(u))
                    .into_iter()
                    .take_while(|&v| v < u)
                    .map(|v| a.size(v))
                    .sum();
                (0..a.size(u)).map(|p| offset + p).collect()
            })
            .collect();
        FibreMap::new(a.clone(), rna, table).unwrap()
    };
    let n_for_counit = n.clone();
    let r_for_counit = r.clone();
    let xi_counit = xi.clone();
    let counit = move |x: &FibredSet| {
        let nrx = n_for_counit.ob(&r_for_counit.ob(x));
        let table: Vec<Vec<usize>> = (0..x.base())
            .map(|i| {
                let mut row = Vec::new();
                for _u in xi_counit.preimage(i) {
                    row.extend(0..x.size(i));
                }
                row
            })
            .collect();
        FibreMap::new(nrx, x.clone(), table).unwrap()
    };
    let counit_iso = (0..xi.cod_size).all(|i| xi.preimage(i).len() == 1);
    Adjunction::new(n, r, unit, counit, xi.is_injective(), counit_iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(0)
    }

    #[test]
    fn hom_counts_over_a_point() {
        let s = slice_category(1);
        let x = FibredSet::atomic(&[2]);
        let y = FibredSet::atomic(&[3]);
        assert_eq!(s.hom(&x, &y).len(), 9); // |Y|^|X|
        assert_eq!(s.hom_count(&x, &y), 9);
    }

    #[test]
    fn empty_fibre_rules() {
        let s = slice_category(2);
        let x = FibredSet::new(vec![vec![], vec![Elem::Atom(0)]]);
        let y = FibredSet::new(vec![vec![Elem::Atom(0)], vec![Elem::Atom(0)]]);
        // X empty over 0: maps exist iff nonempty X-fibres land in nonempty Y-fibres.
        assert_eq!(s.hom(&x, &y).len(), 1);
        let y2 = FibredSet::new(vec![vec![Elem::Atom(0)], vec![]]);
        assert_eq!(s.hom(&x, &y2).len(), 0);
    }

    #[test]
    fn hom_contains_identity() {
        let s = slice_category(3);
        let x = FibredSet::atomic(&[2, 0, 1]);
        let id = FibreMap::identity(&x);
        assert!(s.hom(&x, &x).contains(&id));
    }

    #[test]
    fn direct_image_examples() {
        // ξ identity: fibres unchanged up to tagging.
        let xi = IndexMap::identity(2);
        let n = direct_image(&xi);
        let a = FibredSet::atomic(&[1, 2]);
        let na = n.ob(&a);
        assert_eq!(na.sizes(), vec![1, 2]);
        // U={u}, O={0,1}, ξ(u)=0, A_u={a}: (NA)_0={a}, (NA)_1=∅.
        let xi = IndexMap::new(1, 2, vec![0]).unwrap();
        let n = direct_image(&xi);
        let a = FibredSet::atomic(&[1]);
        let na = n.ob(&a);
        assert_eq!(na.sizes(), vec![1, 0]);
        // ξ constant onto one point, |U|=2, both fibres singletons: image fibre has 2 elements.
        let xi = IndexMap::new(2, 1, vec![0, 0]).unwrap();
        let n = direct_image(&xi);
        let a = FibredSet::atomic(&[1, 1]);
        assert_eq!(n.ob(&a).sizes(), vec![2]);
    }

    #[test]
    fn inverse_image_examples() {
        // O={0,1}, X_0={p,q}, X_1={r}; ξ(u)=ξ(v)=0: both fibres copies of X_0.
        let xi = IndexMap::new(2, 2, vec![0, 0]).unwrap();
        let r = inverse_image(&xi);
        let x = FibredSet::atomic(&[2, 1]);
        let rx = r.ob(&x);
        assert_eq!(rx.sizes(), vec![2, 2]);
        assert_eq!(rx.fibre(0), rx.fibre(1));
        // All fibres empty stays empty.
        let rx = r.ob(&FibredSet::empty(2));
        assert_eq!(rx.total(), 0);
    }

    #[test]
    fn adjunction_triangles_hold_on_samples() {
        let xi = IndexMap::new(3, 2, vec![0, 0, 1]).unwrap();
        let adj = slice_adjunction(&xi);
        let mut rng = rng();
        let su = slice_category(3);
        let so = slice_category(2);
        for _ in 0..20 {
            let a = su.sample_object(&mut rng, 3);
            let x = so.sample_object(&mut rng, 3);
            let report = adj.check_triangles(&[a], &[x]);
            assert!(report.passed(), "{:?}", report.violations);
        }
    }

    #[test]
    fn counit_outside_image_is_empty_map() {
        // μ: {u} ↪ {0,1}, image {0}: ε_X at 1 is the unique map ∅ → X_1.
        let xi = IndexMap::new(1, 2, vec![0]).unwrap();
        let adj = slice_adjunction(&xi);
        let x = FibredSet::atomic(&[2, 2]);
        let eps = adj.counit_at(&x);
        assert_eq!(eps.dom.size(1), 0);
        assert_eq!(eps.cod.size(1), 2);
        // And over 0 it is the identity of X_0.
        assert_eq!(eps.dom.size(0), 2);
        assert!((0..2).all(|p| eps.apply(0, p) == p));
    }

    #[test]
    fn unit_bijective_iff_injective() {
        let inj = IndexMap::new(2, 3, vec![2, 0]).unwrap();
        assert!(inj.is_injective());
        let adj = slice_adjunction(&inj);
        let a = FibredSet::atomic(&[2, 3]);
        assert!(adj.unit_at(&a).is_bijective());

        let noninj = IndexMap::new(2, 1, vec![0, 0]).unwrap();
        let adj = slice_adjunction(&noninj);
        // X_0 = {p}: (NRX)_0 has 2 elements, ε not invertible.
        let x = FibredSet::atomic(&[1]);
        let eps = adj.counit_at(&x);
        assert_eq!(eps.dom.size(0), 2);
        assert!(!eps.is_bijective());
    }

    #[test]
    fn comonad_cardinality_oracle() {
        // |(GX)_j| = |X_j| · |ξ⁻¹(j)| for G = ξ_!ξ*.
        let xi = IndexMap::new(4, 3, vec![0, 0, 2, 0]).unwrap();
        let n = direct_image(&xi);
        let r = inverse_image(&xi);
        let mut rng = rng();
        let so = slice_category(3);
        for _ in 0..20 {
            let x = so.sample_object(&mut rng, 3);
            let gx = n.ob(&r.ob(&x));
            for j in 0..3 {
                assert_eq!(gx.size(j), x.size(j) * xi.preimage(j).len());
            }
        }
    }

    #[test]
    fn unit_counit_natural_on_samples() {
        let xi = IndexMap::new(3, 2, vec![0, 1, 1]).unwrap();
        let adj = slice_adjunction(&xi);
        let mut rng = rng();
        let su = slice_category(3);
        let so = slice_category(2);
        let mut mors_u = Vec::new();
        let mut mors_o = Vec::new();
        for _ in 0..15 {
            let a = su.sample_object(&mut rng, 3);
            let b = su.sample_object(&mut rng, 3);
            if let Some(f) = su.sample_map(&mut rng, &a, &b) {
                mors_u.push(f);
            }
            let x = so.sample_object(&mut rng, 3);
            let y = so.sample_object(&mut rng, 3);
            if let Some(f) = so.sample_map(&mut rng, &x, &y) {
                mors_o.push(f);
            }
        }
        assert!(!mors_u.is_empty() && !mors_o.is_empty());
        let report = adj.check_naturality(&mors_u, &mors_o);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn slice_composition_and_inverse() {
        let s = slice_category(2);
        let x = FibredSet::atomic(&[2, 1]);
        let f = FibreMap::from_fn(&x, &x, |j, p| if j == 0 { 1 - p } else { p });
        assert!(f.is_bijective());
        let inv = s.inverse(&f).unwrap();
        assert_eq!(s.compose(&inv, &f), FibreMap::identity(&x));
        assert_eq!(s.compose(&f, &inv), FibreMap::identity(&x));
        let g = FibreMap::from_fn(&x, &x, |_, _| 0);
        assert!(s.inverse(&g).is_none());
    }
}
