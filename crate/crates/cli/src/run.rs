//! Directive execution and the machine-readable report.
//!
//! Reports are deterministic given (document, seed, config): field order is
//! fixed by the struct definitions, collections are vectors in declaration
//! or sample order, and no wall-clock data is included.

use crate::document::{Directive, SpecDocument};
use crate::parse::Env;
use serde::Serialize;
use serde_json::{json, Value};
use skewcat_core::bigcat::slice_category;
use skewcat_core::comonad::{check_actegory_comonad, check_comonad_naturality};
use skewcat_core::fincat::{
    check_category, check_functor, check_natural, Category, FinCategory, Finite, ObjId,
};
use skewcat_core::gen::SampleConfig;
use skewcat_core::reflection::{
    build_reflected_structure_all, check_closed_equivalences, check_reflection_condition,
};
use skewcat_core::skewmon::{
    check_opmonoidal, check_skew_axioms, check_skew_axioms_all, check_structure, meet_skew,
    reflective_lemma,
};
use skewcat_core::slice::{
    build_slice_skew, check_tensor_cardinality, idempotent_comparison,
    injective_coreflection_demo, noninjective_comonad_demo, slice_comonad,
};
use skewcat_core::warping::{check_warping, identity_warping, warping_to_skew};
use skewcat_core::Error as CoreError;

#[derive(Debug, Clone, Serialize)]
pub struct ReportConfig {
    pub seed: u64,
    pub samples: usize,
    pub fibre_bound: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DirectiveOutcome {
    pub directive: String,
    pub outcome: String,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: u32,
    pub config: ReportConfig,
    pub document: String,
    pub directives: Vec<DirectiveOutcome>,
    pub outcome: String,
}

impl Report {
    /// 0 = all pass, 1 = verification failure, 2 = input/precondition error.
    pub fn exit_code(&self) -> i32 {
        match self.outcome.as_str() {
            "pass" => 0,
            "fail" => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

fn outcome_of(pass: bool) -> String {
    if pass { "pass".into() } else { "fail".into() }
}

/// Execute the directives in order; preconditions that fail produce an
/// `error` entry and the run continues.
pub fn run(doc: &SpecDocument, env: &Env, cfg: &SampleConfig) -> Report {
    let mut directives = Vec::new();
    for d in doc.directives() {
        let (outcome, detail) = match execute(d, env, cfg) {
            Ok((pass, detail)) => (outcome_of(pass), detail),
            Err(e) => ("error".to_string(), json!({ "error": e.to_string() })),
        };
        directives.push(DirectiveOutcome { directive: d.to_string(), outcome, detail });
    }
    let outcome = if directives.iter().any(|d| d.outcome == "error") {
        "error"
    } else if directives.iter().any(|d| d.outcome == "fail") {
        "fail"
    } else {
        "pass"
    }
    .to_string();
    Report {
        version: 1,
        config: ReportConfig {
            seed: cfg.seed,
            samples: cfg.samples,
            fibre_bound: cfg.fibre_bound,
        },
        document: doc.to_string(),
        directives,
        outcome,
    }
}

fn all_triples(c: &FinCategory) -> Vec<[ObjId; 3]> {
    let obs = c.objects();
    let mut out = Vec::new();
    for a in &obs {
        for b in &obs {
            for d in &obs {
                out.push([*a, *b, *d]);
            }
        }
    }
    out
}

fn execute(d: &Directive, env: &Env, cfg: &SampleConfig) -> Result<(bool, Value), CoreError> {
    fn val<T: Serialize>(v: &T) -> Value {
        serde_json::to_value(v).expect("report serialization")
    }
    match d.verb.as_str() {
        "check-category" => {
            let c = &env.categories[&d.args[0]];
            let report = check_category(&c.cat)?;
            Ok((report.passed(), val(&report)))
        }
        "check-functor" => {
            let f = &env.functors[&d.args[0]];
            let report = check_functor(&f.functor)?;
            Ok((report.passed(), val(&report)))
        }
        "check-natural" => {
            let t = &env.nats[&d.args[0]];
            let report = check_natural(&t.nat)?;
            Ok((report.passed(), val(&report)))
        }
        "check-adjunction" => {
            let j = &env.adjunctions[&d.args[0]];
            let xs = j.adj.left.dom.objects();
            let asx = j.adj.left.cod.objects();
            let mut report = j.adj.check_triangles(&xs, &asx);
            report.merge(
                j.adj
                    .check_naturality(&j.adj.left.dom.morphisms(), &j.adj.left.cod.morphisms()),
            );
            report.merge(j.adj.check_flags(&xs, &asx));
            let detail = json!({
                "violations": val(&report),
                "unit_invertible": j.adj.unit_iso,
                "counit_invertible": j.adj.counit_iso,
            });
            Ok((report.passed(), detail))
        }
        "slice-skew" => {
            let c = &env.categories[&d.args[0]];
            let s = build_slice_skew(&c.cat);
            let so = slice_category(c.cat.n_objects());
            let mut rng = cfg.rng();
            let quads: Vec<_> = (0..cfg.samples)
                .map(|_| {
                    [
                        so.sample_object(&mut rng, cfg.fibre_bound),
                        so.sample_object(&mut rng, cfg.fibre_bound),
                        so.sample_object(&mut rng, cfg.fibre_bound),
                        so.sample_object(&mut rng, cfg.fibre_bound),
                    ]
                })
                .collect();
            let axioms = check_skew_axioms(&s, &quads)?;
            let mut triples = Vec::new();
            for _ in 0..cfg.samples / 4 {
                let a = so.sample_object(&mut rng, cfg.fibre_bound);
                let b = so.sample_object(&mut rng, cfg.fibre_bound);
                let (Some(f), Some(g), Some(h)) = (
                    so.sample_map(&mut rng, &a, &b),
                    so.sample_map(&mut rng, &b, &a),
                    so.sample_map(&mut rng, &a, &a),
                ) else {
                    continue;
                };
                triples.push([f, g, h]);
            }
            let naturality = check_structure(&s, &triples);
            let cardinality_ok = quads
                .iter()
                .all(|[x, y, _, _]| check_tensor_cardinality(&c.cat, &s, x, y));
            let pass = axioms.passed() && naturality.passed() && cardinality_ok;
            Ok((
                pass,
                json!({
                    "axioms": val(&axioms),
                    "naturality": val(&naturality),
                    "cardinality_ok": cardinality_ok,
                    "sampled_tuples": quads.len(),
                }),
            ))
        }
        "tensor" => {
            let c = &env.categories[&d.args[0]];
            let x = &env.fibreds[&d.args[1]];
            let y = &env.fibreds[&d.args[2]];
            let s = build_slice_skew(&c.cat);
            let xy = s.tensor(&x.set, &y.set);
            let fibres: Vec<Value> = (0..xy.base())
                .map(|j| {
                    json!({
                        "object": c.obj_names[j],
                        "size": xy.size(j),
                        "elements": xy.fibre(j).iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let cardinality_ok = check_tensor_cardinality(&c.cat, &s, &x.set, &y.set);
            Ok((
                cardinality_ok,
                json!({
                    "fibres": fibres,
                    "cardinality_ok": cardinality_ok,
                    "x_elements": x.element_names,
                    "y_elements": y.element_names,
                }),
            ))
        }
        "reflective-lemma" => {
            let j = &env.adjunctions[&d.args[0]];
            let mut rows = Vec::new();
            let mut all_agree = true;
            for z in j.adj.left.dom.objects() {
                let five = reflective_lemma(&j.adj, &z)?;
                all_agree &= five.all_equal();
                rows.push(json!({
                    "object": j.adj.left.dom.obj_label(&z),
                    "i": five.i, "ii": five.ii, "iii": five.iii, "iv": five.iv, "v": five.v,
                    "agree": five.all_equal(),
                }));
            }
            Ok((all_agree, json!({ "conditions": rows, "all_agree": all_agree })))
        }
        "reflection" => {
            let j = &env.adjunctions[&d.args[0]];
            let skew = meet_skew(&j.adj.left.dom)?;
            let lawful = j
                .adj
                .check_triangles(&j.adj.left.dom.objects(), &j.adj.left.cod.objects());
            if !lawful.passed() {
                return Err(CoreError::precondition(
                    "reflection",
                    "adjunction does not satisfy the triangle identities",
                ));
            }
            let mut pairs = Vec::new();
            for x in j.adj.left.dom.objects() {
                for b in j.adj.left.cod.objects() {
                    pairs.push((x, b));
                }
            }
            let condition = check_reflection_condition(&j.adj, &skew, &pairs)?;
            if !condition.all_hold {
                return Ok((
                    false,
                    json!({
                        "condition": val(&condition),
                        "constructed": false,
                    }),
                ));
            }
            let (barred, opmon) = build_reflected_structure_all(&j.adj, &skew)?;
            let axioms = check_skew_axioms_all(&barred)?;
            let opreport = check_opmonoidal(&opmon, &all_triples(&j.adj.left.dom))?;
            let psi_nb: Vec<(String, bool)> = j
                .adj
                .left
                .dom
                .objects()
                .iter()
                .flat_map(|x| {
                    let j = &j.adj;
                    let skew = &skew;
                    j.left.cod.objects().into_iter().map(move |b| {
                        let nb = j.right.ob(&b);
                        let m = j.left.mor(&skew.tensor_mor(&j.unit_at(x), &j.unit_at(&nb)));
                        (
                            format!("({}, N{})", j.left.dom.obj_label(x), j.left.cod.obj_label(&b)),
                            j.left.cod.inverse(&m).is_some(),
                        )
                    })
                })
                .collect();
            let psi_ok = psi_nb.iter().all(|(_, b)| *b);
            let pass = axioms.passed() && opreport.passed() && opreport.normal && psi_ok;
            Ok((
                pass,
                json!({
                    "condition": val(&condition),
                    "constructed": true,
                    "axioms": val(&axioms),
                    "opmonoidal": val(&opreport),
                    "psi_at_nb_invertible": psi_nb,
                }),
            ))
        }
        "closed-equivalences" => {
            let j = &env.adjunctions[&d.args[0]];
            let skew = meet_skew(&j.adj.left.dom)?;
            let report = check_closed_equivalences(&j.adj, &skew)?;
            Ok((report.passed(), val(&report)))
        }
        "coreflection" => {
            let c = &env.categories[&d.args[0]];
            let m = &env.maps[&d.args[1]];
            let demo = injective_coreflection_demo(&c.cat, &m.map, cfg)?;
            Ok((demo.passed(), val(&demo)))
        }
        "lift-comonad" => {
            let c = &env.categories[&d.args[0]];
            let m = &env.maps[&d.args[1]];
            let demo = noninjective_comonad_demo(&c.cat, &m.map, cfg)?;
            Ok((demo.passed(), val(&demo)))
        }
        "idempotent-comparison" => {
            let c = &env.categories[&d.args[0]];
            let m = &env.maps[&d.args[1]];
            let demo = idempotent_comparison(&c.cat, &m.map, cfg)?;
            Ok((demo.passed(), val(&demo)))
        }
        "warping-roundtrip" => {
            let c = &env.categories[&d.args[0]];
            let s = meet_skew(&c.cat)?;
            let w = identity_warping(&s);
            let axioms = check_warping(&w, &all_triples(&c.cat))?;
            let (barred, opmon) = warping_to_skew(&w);
            let mut roundtrip = true;
            for a in c.cat.objects() {
                for b in c.cat.objects() {
                    roundtrip &= barred.tensor(&a, &b) == s.tensor(&a, &b);
                    for e in c.cat.objects() {
                        roundtrip &= barred.alpha(&a, &b, &e) == s.alpha(&a, &b, &e);
                    }
                }
                roundtrip &= barred.lambda(&a) == s.lambda(&a);
                roundtrip &= barred.rho(&a) == s.rho(&a);
            }
            roundtrip &= barred.unit == s.unit;
            let barred_axioms = check_skew_axioms_all(&barred)?;
            let opreport = check_opmonoidal(&opmon, &all_triples(&c.cat))?;
            let pass =
                axioms.passed() && roundtrip && barred_axioms.passed() && opreport.passed();
            Ok((
                pass,
                json!({
                    "warping_axioms": val(&axioms),
                    "roundtrip_exact": roundtrip,
                    "induced_axioms": val(&barred_axioms),
                    "opmonoidal": val(&opreport),
                }),
            ))
        }
        "check-warping" | "warping-to-skew" => {
            let kind = &env.warpings[&d.args[0]];
            match kind {
                crate::document::WarpingKind::IdentityMeet(cat) => {
                    let c = &env.categories[cat];
                    let s = meet_skew(&c.cat)?;
                    let w = identity_warping(&s);
                    if d.verb == "check-warping" {
                        let report = check_warping(&w, &all_triples(&c.cat))?;
                        Ok((report.passed(), val(&report)))
                    } else {
                        let (barred, opmon) = warping_to_skew(&w);
                        let axioms = check_skew_axioms_all(&barred)?;
                        let opreport = check_opmonoidal(&opmon, &all_triples(&c.cat))?;
                        let pass = axioms.passed() && opreport.passed();
                        Ok((
                            pass,
                            json!({
                                "axioms": val(&axioms),
                                "opmonoidal": val(&opreport),
                            }),
                        ))
                    }
                }
                crate::document::WarpingKind::IdentitySlice(cat) => {
                    let c = &env.categories[cat];
                    let s = build_slice_skew(&c.cat);
                    let so = slice_category(c.cat.n_objects());
                    let w = identity_warping(&s);
                    let mut rng = cfg.rng();
                    let triples: Vec<_> = (0..cfg.samples)
                        .map(|_| {
                            [
                                so.sample_object(&mut rng, cfg.fibre_bound),
                                so.sample_object(&mut rng, cfg.fibre_bound),
                                so.sample_object(&mut rng, cfg.fibre_bound),
                            ]
                        })
                        .collect();
                    if d.verb == "check-warping" {
                        let report = check_warping(&w, &triples)?;
                        Ok((report.passed(), val(&report)))
                    } else {
                        let (barred, opmon) = warping_to_skew(&w);
                        let quads: Vec<_> = triples
                            .iter()
                            .map(|[a, b, c]| [a.clone(), b.clone(), c.clone(), a.clone()])
                            .collect();
                        let axioms = check_skew_axioms(&barred, &quads)?;
                        let opreport = check_opmonoidal(&opmon, &triples)?;
                        let pass = axioms.passed() && opreport.passed();
                        Ok((
                            pass,
                            json!({
                                "axioms": val(&axioms),
                                "opmonoidal": val(&opreport),
                            }),
                        ))
                    }
                }
            }
        }
        "check-comonad" => {
            let (cat, map) = &env.comonads[&d.args[0]];
            let c = &env.categories[cat];
            let m = &env.maps[map];
            let skew = build_slice_skew(&c.cat);
            let comonad = slice_comonad(&c.cat, &m.map, &skew)?;
            let so = slice_category(c.cat.n_objects());
            let mut rng = cfg.rng();
            let tuples: Vec<_> = (0..cfg.samples)
                .map(|_| {
                    (
                        so.sample_object(&mut rng, cfg.fibre_bound),
                        so.sample_object(&mut rng, cfg.fibre_bound),
                        so.sample_object(&mut rng, cfg.fibre_bound),
                    )
                })
                .collect();
            let axioms = check_actegory_comonad(&comonad, &tuples)?;
            let mut mors = Vec::new();
            for _ in 0..cfg.samples / 3 {
                let a = so.sample_object(&mut rng, cfg.fibre_bound);
                let b = so.sample_object(&mut rng, cfg.fibre_bound);
                if let Some(f) = so.sample_map(&mut rng, &a, &b) {
                    mors.push(f);
                }
            }
            let naturality = check_comonad_naturality(&comonad, &mors, &mors);
            let pass = axioms.passed() && naturality.passed();
            Ok((
                pass,
                json!({
                    "axioms": val(&axioms),
                    "naturality": val(&naturality),
                }),
            ))
        }
        other => Err(CoreError::structural("run", format!("unhandled directive `{other}`"))),
    }
}

/// The built-in demo documents.
pub fn demo_document(which: &str) -> Option<&'static str> {
    match which {
        "section5" => Some(
            "# Injective index map: the coreflection route.\n\
             category C { objects 0 1; mor f: 0 -> 1; }\n\
             map mu: U -> C { v |-> 1 }\n\
             run check-category C;\n\
             run slice-skew C;\n\
             run coreflection C mu;\n\
             run idempotent-comparison C mu;\n",
        ),
        "section8" => Some(
            "# Non-injective index map: the comonadic route.\n\
             category C { objects 0 1; mor f: 0 -> 1; }\n\
             map xi: U -> C { u |-> 0; v |-> 0; w |-> 1 }\n\
             comonad G = slice(C, xi);\n\
             run check-category C;\n\
             run slice-skew C;\n\
             run check-comonad G;\n\
             run lift-comonad C xi;\n",
        ),
        _ => None,
    }
}
