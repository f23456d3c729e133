//! Deterministic seeded generation of test corpora: random finite categories
//! built by construction (never by rejection of random tables), reflective
//! adjunctions from closure systems, and index maps.
//!
//! Closure systems (families of subsets closed under intersection and
//! containing the ground set) give meet-semilattices with top; any
//! intersection-closed subfamily containing the top is reflective, with the
//! reflector sending each element to the intersection of the subfamily
//! members above it.

use crate::bigcat::IndexMap;
use crate::fincat::{Category, FinCategory, Finite, MorId, ObjId};
use crate::reflection::Adjunction;
use crate::skewmon::{meet_skew, SkewMonoidal};
use crate::slice::full_image;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Sampling knobs shared by demos, the CLI, and the acceptance suite.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SampleConfig {
    pub fibre_bound: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { fibre_bound: 3, samples: 50, seed: 0 }
    }
}

impl SampleConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A deterministic generator for the given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A reflective adjunction between finite categories, with an optional skew
/// structure on the base for the reflection theorems.
pub struct CorpusReflection {
    pub name: String,
    pub x: FinCategory,
    pub a: FinCategory,
    pub adj: Adjunction<FinCategory, FinCategory>,
    pub skew: Option<SkewMonoidal<FinCategory>>,
}

/// Intersection-closed family over `{0..ground-1}` containing the full set,
/// as sorted bitmasks.
fn random_closure_system(rng: &mut ChaCha8Rng, ground: usize, gens: usize) -> Vec<u32> {
    let full: u32 = if ground >= 32 { u32::MAX } else { (1u32 << ground) - 1 };
    let mut family = vec![full];
    for _ in 0..gens {
        let g: u32 = rng.random_range(0..=full);
        if !family.contains(&g) {
            family.push(g);
        }
    }
    // Close under pairwise intersection.
    loop {
        let mut added = false;
        let snapshot = family.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let m = a & b;
                if !family.contains(&m) {
                    family.push(m);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    family.sort_unstable();
    family
}

/// The poset category of a closure system, ordered by inclusion of masks.
fn closure_system_category(masks: &[u32]) -> FinCategory {
    let masks = masks.to_vec();
    FinCategory::from_preorder(masks.len(), move |a, b| masks[a] & masks[b] == masks[a])
}

/// Build the reflection of a thin category onto a full subposet, if every
/// object has a least subposet element above it.
pub fn reflection_onto_subposet(
    x: &FinCategory,
    s_objs: &[usize],
    name: &str,
) -> Option<CorpusReflection> {
    let n = x.n_objects();
    let leq = |a: usize, b: usize| !x.hom(&ObjId(a), &ObjId(b)).is_empty();
    let mut reflector = Vec::with_capacity(n);
    for o in 0..n {
        let above: Vec<usize> = s_objs.iter().copied().filter(|&s| leq(o, s)).collect();
        let least = above.iter().copied().find(|&m| above.iter().all(|&s| leq(m, s)))?;
        reflector.push(least);
    }
    let incl = IndexMap::new(s_objs.len(), n, s_objs.to_vec()).ok()?;
    let (a_cat, incl_fun) = full_image(&incl, x).ok()?;
    // L : X → A on objects; thinness picks the morphisms.
    let s_pos = |o: usize| s_objs.iter().position(|&s| s == o).unwrap();
    let l_omap: Vec<usize> = (0..n).map(|o| s_pos(reflector[o])).collect();
    let l_mmap: Vec<usize> = x
        .morphisms()
        .iter()
        .map(|f| {
            let (s, t) = (x.src(f).0, x.tgt(f).0);
            a_cat.hom(&ObjId(l_omap[s]), &ObjId(l_omap[t]))[0].0
        })
        .collect();
    let l = crate::fincat::FinFunctor::new(x.clone(), a_cat.clone(), l_omap.clone(), l_mmap).ok()?;
    let unit_iso = (0..n).all(|o| reflector[o] == o);
    let x_for_unit = x.clone();
    let reflector_unit = reflector.clone();
    let a_for_counit = a_cat.clone();
    let adj = Adjunction::new(
        l.as_fun(),
        incl_fun.as_fun(),
        move |o: &ObjId| x_for_unit.hom(o, &ObjId(reflector_unit[o.0]))[0],
        move |u: &ObjId| a_for_counit.id_of(*u),
        unit_iso,
        true,
    );
    let skew = meet_skew(x).ok();
    Some(CorpusReflection { name: name.to_string(), x: x.clone(), a: a_cat, adj, skew })
}

/// Deterministic corpus of reflective adjunctions: closure-system posets with
/// intersection-closed reflective subfamilies, plus a handful of named small
/// cases (walking-arrow reflection, identity adjunctions).
pub fn reflective_corpus(seed: u64, count: usize) -> Vec<CorpusReflection> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    // Walking arrow reflected onto its terminal object.
    let arrow = FinCategory::from_preorder(2, |a, b| a <= b);
    out.push(reflection_onto_subposet(&arrow, &[1], "arrow-onto-1").expect("arrow reflection"));
    // Identity adjunction on a Boolean square (meets available).
    let square = FinCategory::from_preorder(4, |a, b| a & b == a);
    out.push(CorpusReflection {
        name: "identity-boolean-square".into(),
        x: square.clone(),
        a: square.clone(),
        adj: Adjunction::<FinCategory, FinCategory>::identity(square.clone()),
        skew: meet_skew(&square).ok(),
    });
    // Identity adjunction on a small commutative monoid (non-thin carrier).
    let z2 = cyclic_monoid_category(2);
    out.push(CorpusReflection {
        name: "identity-z2-monoid".into(),
        x: z2.clone(),
        a: z2.clone(),
        adj: Adjunction::<FinCategory, FinCategory>::identity(z2.clone()),
        skew: Some(monoid_skew(&z2)),
    });
    // Non-thin, non-identity: the arrow reflection with parallel morphisms
    // everywhere, via a product with the monoid.
    if let Some(r) = product_reflection(&out[0], &z2, "arrow-times-z2") {
        out.push(r);
    }
    while out.len() < count {
        let ground = rng.random_range(2..=4usize);
        let gens = rng.random_range(1..=4usize);
        let masks = random_closure_system(&mut rng, ground, gens);
        if masks.len() < 2 || masks.len() > 10 {
            continue;
        }
        let x = closure_system_category(&masks);
        // Reflective subfamily: random subset containing the top, closed
        // under intersection.
        let mut s_masks: Vec<u32> = vec![*masks.last().unwrap()];
        for &m in &masks {
            if rng.random_bool(0.5) && !s_masks.contains(&m) {
                s_masks.push(m);
            }
        }
        loop {
            let mut added = false;
            let snapshot = s_masks.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    if !s_masks.contains(&(a & b)) {
                        s_masks.push(a & b);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let mut s_objs: Vec<usize> =
            s_masks.iter().map(|m| masks.iter().position(|x| x == m).unwrap()).collect();
        s_objs.sort_unstable();
        let name = format!("closure-system-{}-{}", masks.len(), s_objs.len());
        if let Some(r) = reflection_onto_subposet(&x, &s_objs, &name) {
            // Occasionally thicken the homs with a monoid factor.
            if out.len() % 5 == 4 && r.x.n_objects() <= 5 {
                let name = format!("{name}-times-z2");
                if let Some(p) = product_reflection(&r, &z2, &name) {
                    out.push(p);
                    continue;
                }
            }
            out.push(r);
        }
    }
    out
}

/// A 7-element meet-semilattice with a reflective sub-semilattice on which
/// the reflection condition fails at the pair `(x, s)`:
/// the reflector sends `x∧s = ⊥` to `m` but `Lx∧s = w > m`.
pub fn failing_reflection() -> (CorpusReflection, (ObjId, ObjId)) {
    // 0=⊥, 1=m, 2=w, 3=x, 4=s, 5=c, 6=t with ⊥<m<w<s<t, w<c<t, x<c.
    let up: [&[usize]; 7] = [
        &[0, 1, 2, 3, 4, 5, 6],
        &[1, 2, 4, 5, 6],
        &[2, 4, 5, 6],
        &[3, 5, 6],
        &[4, 6],
        &[5, 6],
        &[6],
    ];
    let x = FinCategory::from_preorder(7, move |a, b| up[a].contains(&b));
    let r = reflection_onto_subposet(&x, &[1, 2, 4, 5, 6], "failing-nucleus")
        .expect("reflection exists");
    // The witnessing pair (X-object x, A-object s): s sits at position 2 of
    // the subposet [m, w, s, c, t].
    (r, (ObjId(3), ObjId(2)))
}

/// The cyclic monoid `Z_n` as a one-object category.
pub fn cyclic_monoid_category(n: usize) -> FinCategory {
    let mors: Vec<(usize, usize)> = (0..n).map(|_| (0, 0)).collect();
    let mut comp = Vec::new();
    for g in 0..n {
        for f in 0..n {
            comp.push(((g, f), (g + f) % n));
        }
    }
    FinCategory::new(1, mors, &comp, vec![0]).unwrap()
}

/// Tensor = monoid multiplication on a one-object commutative monoid
/// category, with identity constraints.
pub fn monoid_skew(c: &FinCategory) -> SkewMonoidal<FinCategory> {
    let c1 = c.clone();
    let c2 = c.clone();
    let c3 = c.clone();
    let c4 = c.clone();
    SkewMonoidal::new(
        c.clone(),
        ObjId(0),
        |_: &ObjId, _: &ObjId| ObjId(0),
        move |f: &MorId, g: &MorId| c1.try_compose(*f, *g).unwrap(),
        move |_: &ObjId, _: &ObjId, _: &ObjId| c2.id_of(ObjId(0)),
        move |_: &ObjId| c3.id_of(ObjId(0)),
        move |_: &ObjId| c4.id_of(ObjId(0)),
    )
}

/// The componentwise skew structure on a product category.
pub fn product_skew(
    sa: &SkewMonoidal<FinCategory>,
    sb: &SkewMonoidal<FinCategory>,
) -> SkewMonoidal<FinCategory> {
    let a = sa.carrier.clone();
    let b = sb.carrier.clone();
    let p = FinCategory::product(&a, &b);
    let (nb, mb) = (b.n_objects(), b.n_morphisms());
    let ob = move |o: ObjId| (ObjId(o.0 / nb), ObjId(o.0 % nb));
    let obp = move |x: ObjId, y: ObjId| ObjId(x.0 * nb + y.0);
    let mo = move |m: MorId| (MorId(m.0 / mb), MorId(m.0 % mb));
    let mop = move |x: MorId, y: MorId| MorId(x.0 * mb + y.0);
    let (s1, s2) = (sa.clone(), sb.clone());
    let (t1, t2) = (sa.clone(), sb.clone());
    let (a1, a2) = (sa.clone(), sb.clone());
    let (l1, l2) = (sa.clone(), sb.clone());
    let (r1, r2) = (sa.clone(), sb.clone());
    SkewMonoidal::new(
        p,
        obp(sa.unit, sb.unit),
        move |x: &ObjId, y: &ObjId| {
            let (xa, xb) = ob(*x);
            let (ya, yb) = ob(*y);
            obp(s1.tensor(&xa, &ya), s2.tensor(&xb, &yb))
        },
        move |f: &MorId, g: &MorId| {
            let (fa, fb) = mo(*f);
            let (ga, gb) = mo(*g);
            mop(t1.tensor_mor(&fa, &ga), t2.tensor_mor(&fb, &gb))
        },
        move |x: &ObjId, y: &ObjId, z: &ObjId| {
            let (xa, xb) = ob(*x);
            let (ya, yb) = ob(*y);
            let (za, zb) = ob(*z);
            mop(a1.alpha(&xa, &ya, &za), a2.alpha(&xb, &yb, &zb))
        },
        move |x: &ObjId| {
            let (xa, xb) = ob(*x);
            mop(l1.lambda(&xa), l2.lambda(&xb))
        },
        move |x: &ObjId| {
            let (xa, xb) = ob(*x);
            mop(r1.rho(&xa), r2.rho(&xb))
        },
    )
}

/// Pair a thin reflection with a one-object monoid: the result is a
/// reflection of a category with parallel morphisms in every hom.
pub fn product_reflection(thin: &CorpusReflection, monoid: &FinCategory, name: &str) -> Option<CorpusReflection> {
    let x = FinCategory::product(&thin.x, monoid);
    let a = FinCategory::product(&thin.a, monoid);
    let mb = monoid.n_morphisms();
    let l_thin = thin.adj.left.clone();
    let n_thin = thin.adj.right.clone();
    let l = crate::fincat::Fun::new(
        x.clone(),
        a.clone(),
        {
            let l_thin = l_thin.clone();
            move |o: &ObjId| ObjId(l_thin.ob(&ObjId(o.0)).0) // one object on the right
        },
        {
            let l_thin = l_thin.clone();
            move |m: &MorId| MorId(l_thin.mor(&MorId(m.0 / mb)).0 * mb + m.0 % mb)
        },
    );
    let n = crate::fincat::Fun::new(
        a.clone(),
        x.clone(),
        {
            let n_thin = n_thin.clone();
            move |o: &ObjId| ObjId(n_thin.ob(&ObjId(o.0)).0)
        },
        {
            let n_thin = n_thin.clone();
            move |m: &MorId| MorId(n_thin.mor(&MorId(m.0 / mb)).0 * mb + m.0 % mb)
        },
    );
    if monoid.n_objects() != 1 {
        return None;
    }
    let adj_thin = thin.adj.clone();
    let e = monoid.id_of(ObjId(0)).0;
    let unit = move |o: &ObjId| MorId(adj_thin.unit_at(&ObjId(o.0)).0 * mb + e);
    let adj_thin2 = thin.adj.clone();
    let counit = move |o: &ObjId| MorId(adj_thin2.counit_at(&ObjId(o.0)).0 * mb + e);
    let adj = Adjunction::new(l, n, unit, counit, thin.adj.unit_iso, thin.adj.counit_iso);
    let skew = thin.skew.as_ref().map(|s| product_skew(s, &monoid_skew(monoid)));
    Some(CorpusReflection { name: name.to_string(), x, a, adj, skew })
}

/// A random finite category within the given caps, drawn from families that
/// are lawful by construction: posets, cyclic monoids, walking shapes, and
/// full images of random index maps into these.
pub fn random_fin_category(rng: &mut ChaCha8Rng, max_objects: usize, max_morphisms: usize) -> FinCategory {
    for _ in 0..32 {
        let cand = match rng.random_range(0..5u8) {
            0 => {
                // Random poset from a random reflexive relation's transitive
                // closure.
                let n = rng.random_range(1..=max_objects);
                let mut leq = vec![vec![false; n]; n];
                for (i, row) in leq.iter_mut().enumerate() {
                    row[i] = true;
                }
                for _ in 0..rng.random_range(0..=n * 2) {
                    let a = rng.random_range(0..n);
                    let b = rng.random_range(0..n);
                    // Orient low-to-high to stay antisymmetric.
                    let (a, b) = (a.min(b), a.max(b));
                    leq[a][b] = true;
                }
                for k in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            if leq[i][k] && leq[k][j] {
                                leq[i][j] = true;
                            }
                        }
                    }
                }
                FinCategory::from_preorder(n, move |a, b| leq[a][b])
            }
            1 => cyclic_monoid_category(rng.random_range(1..=3)),
            2 => match rng.random_range(0..4u8) {
                0 => FinCategory::terminal(),
                1 => FinCategory::walking_arrow(),
                2 => FinCategory::walking_iso(),
                _ => FinCategory::discrete(rng.random_range(1..=max_objects)),
            },
            3 => {
                // Closure-system meet-semilattice.
                let ground = rng.random_range(2..=3);
                let masks = random_closure_system(rng, ground, 2);
                closure_system_category(&masks)
            }
            _ => {
                // Full image of a random map into a small base: yields
                // parallel morphisms and non-thin homs.
                let base = match rng.random_range(0..3u8) {
                    0 => FinCategory::walking_arrow(),
                    1 => FinCategory::walking_iso(),
                    _ => cyclic_monoid_category(2),
                };
                let u = rng.random_range(1..=max_objects);
                let map: Vec<usize> =
                    (0..u).map(|_| rng.random_range(0..base.n_objects())).collect();
                let xi = IndexMap::new(u, base.n_objects(), map).unwrap();
                match full_image(&xi, &base) {
                    Ok((cat, _)) => cat,
                    Err(_) => continue,
                }
            }
        };
        if cand.n_objects() <= max_objects && cand.n_morphisms() <= max_morphisms {
            return cand;
        }
    }
    FinCategory::walking_arrow()
}

/// A random index map into `{0..cod-1}`; optionally force non-injectivity
/// (requires `cod ≥ 1`).
pub fn random_index_map(
    rng: &mut ChaCha8Rng,
    cod: usize,
    force_noninjective: bool,
) -> IndexMap {
    if force_noninjective {
        let dom = rng.random_range(2..=cod.max(1) + 2);
        let mut map: Vec<usize> = (0..dom).map(|_| rng.random_range(0..cod)).collect();
        // Pin a collision.
        map[1] = map[0];
        IndexMap::new(dom, cod, map).unwrap()
    } else {
        let dom = rng.random_range(1..=cod);
        // Injective: sample without replacement.
        let mut pool: Vec<usize> = (0..cod).collect();
        let mut map = Vec::with_capacity(dom);
        for _ in 0..dom {
            let k = rng.random_range(0..pool.len());
            map.push(pool.swap_remove(k));
        }
        IndexMap::new(dom, cod, map).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::check_category;
    use crate::reflection::check_reflection_condition;
    use crate::skewmon::reflective_lemma;

    #[test]
    fn random_categories_are_lawful() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..40 {
            let c = random_fin_category(&mut rng, 4, 12);
            assert!(c.n_objects() <= 4 && c.n_morphisms() <= 12);
            assert!(check_category(&c).unwrap().passed(), "unlawful random category");
        }
    }

    #[test]
    fn corpus_reflections_satisfy_triangles() {
        for r in reflective_corpus(7, 12) {
            let xs = r.x.objects();
            let asx = r.a.objects();
            let tri = r.adj.check_triangles(&xs, &asx);
            assert!(tri.passed(), "{}: {:?}", r.name, tri.violations);
            let nat = r.adj.check_naturality(&r.x.morphisms(), &r.a.morphisms());
            assert!(nat.passed(), "{}: {:?}", r.name, nat.violations);
        }
    }

    #[test]
    fn corpus_reflections_have_invertible_counit() {
        for r in reflective_corpus(3, 10) {
            for a in r.a.objects() {
                assert!(
                    r.a.inverse(&r.adj.counit_at(&a)).is_some(),
                    "{}: counit not invertible",
                    r.name
                );
            }
        }
    }

    #[test]
    fn walking_arrow_reflection_lemma_all_false_at_zero() {
        let arrow = FinCategory::from_preorder(2, |a, b| a <= b);
        let r = reflection_onto_subposet(&arrow, &[1], "arrow").unwrap();
        let five = reflective_lemma(&r.adj, &ObjId(0)).unwrap();
        assert!(five.all_equal());
        assert!(!five.i);
        let five = reflective_lemma(&r.adj, &ObjId(1)).unwrap();
        assert!(five.all_equal());
        assert!(five.i);
    }

    #[test]
    fn failing_reflection_reports_the_witness_pair() {
        let (r, (x, b)) = failing_reflection();
        assert!(check_category(&r.x).unwrap().passed());
        let skew = r.skew.as_ref().expect("meet structure");
        let report =
            check_reflection_condition(&r.adj, skew, &[(x, b)]).unwrap();
        assert!(!report.all_hold);
        let (pair, _) = report.counterexample.unwrap();
        assert!(pair.contains("o3"));
    }

    #[test]
    fn product_category_and_skew_are_lawful() {
        let p = FinCategory::product(
            &FinCategory::walking_arrow(),
            &cyclic_monoid_category(2),
        );
        assert!(check_category(&p).unwrap().passed());
        assert_eq!(p.n_objects(), 2);
        assert_eq!(p.n_morphisms(), 6);
        // Parallel morphisms exist in every inhabited hom.
        assert_eq!(p.hom(&ObjId(0), &ObjId(1)).len(), 2);
        let square = FinCategory::from_preorder(4, |a, b| a & b == a);
        let s = product_skew(
            &crate::skewmon::meet_skew(&square).unwrap(),
            &monoid_skew(&cyclic_monoid_category(2)),
        );
        assert!(crate::skewmon::check_skew_axioms_all(&s).unwrap().passed());
    }

    #[test]
    fn corpus_contains_non_thin_reflections() {
        let corpus = reflective_corpus(77, 20);
        let non_thin = corpus
            .iter()
            .filter(|r| {
                r.x.objects().iter().any(|a| {
                    r.x.objects().iter().any(|b| r.x.hom(a, b).len() > 1)
                })
            })
            .count();
        assert!(non_thin >= 2, "only {non_thin} non-thin instances");
    }

    #[test]
    fn index_maps_honor_injectivity_request() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            assert!(random_index_map(&mut rng, 4, false).is_injective());
            assert!(!random_index_map(&mut rng, 3, true).is_injective());
        }
    }
}
