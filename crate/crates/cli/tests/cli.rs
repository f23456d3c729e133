//! CLI-level behavior: print/parse round-trips, exit codes, and report
//! determinism on user documents.

use proptest::prelude::*;
use skewcat::document::{
    CategoryDecl, Decl, Directive, FibredDecl, MapDecl, SpecDocument,
};
use skewcat::{demo_document, parse, run};
use skewcat_core::fincat::{Category, FinCategory, Finite, ObjId};
use skewcat_core::gen::{random_fin_category, seeded_rng, SampleConfig};
use rand::Rng;
use std::process::Command;

/// Unparse a generated finite category into a declaration. Identities are
/// detected (they need not sit at the first indices) and get their canonical
/// names; every composable pair of non-identities is listed.
fn mor_name_table(c: &FinCategory, obj_prefix: &str, mor_prefix: &str) -> Vec<String> {
    let mut k = 0usize;
    c.morphisms()
        .iter()
        .map(|m| {
            if c.is_identity(m) {
                format!("id{obj_prefix}{}", c.src(m).0)
            } else {
                let name = format!("{mor_prefix}{k}");
                k += 1;
                name
            }
        })
        .collect()
}

fn category_decl(name: &str, c: &FinCategory) -> CategoryDecl {
    let objects: Vec<String> = (0..c.n_objects()).map(|i| format!("x{i}")).collect();
    let names = mor_name_table(c, "x", "m");
    let mut mors = Vec::new();
    for m in c.morphisms() {
        if c.is_identity(&m) {
            continue;
        }
        mors.push((
            names[m.0].clone(),
            format!("x{}", c.src(&m).0),
            format!("x{}", c.tgt(&m).0),
        ));
    }
    let mut comps = Vec::new();
    for g in c.morphisms() {
        for f in c.morphisms() {
            if c.is_identity(&g) || c.is_identity(&f) {
                continue;
            }
            if let Some(h) = c.try_compose(g, f) {
                comps.push((names[g.0].clone(), names[f.0].clone(), names[h.0].clone()));
            }
        }
    }
    CategoryDecl { name: name.into(), objects, mors, comps }
}

fn arbitrary_document(seed: u64) -> SpecDocument {
    let mut rng = seeded_rng(seed);
    let mut decls = Vec::new();
    let c = random_fin_category(&mut rng, 3, 9);
    decls.push(Decl::Category(category_decl("C", &c)));
    // An index map into C.
    let dom = rng.random_range(0..=3usize);
    let points: Vec<(String, String)> = (0..dom)
        .map(|u| (format!("u{u}"), format!("x{}", rng.random_range(0..c.n_objects()))))
        .collect();
    decls.push(Decl::Map(MapDecl {
        name: "xi".into(),
        dom_name: "U".into(),
        cod: "C".into(),
        points,
    }));
    // A fibred set over C.
    let mut fibres: Vec<(String, Vec<String>)> = Vec::new();
    for i in 0..c.n_objects() {
        if !rng.random_bool(0.7) {
            continue;
        }
        let k = rng.random_range(0..=2usize);
        fibres.push((format!("x{i}"), (0..k).map(|e| format!("e{i}_{e}")).collect()));
    }
    decls.push(Decl::Fibred(FibredDecl { name: "X".into(), over: "C".into(), fibres }));
    decls.push(Decl::Run(Directive {
        verb: "check-category".into(),
        args: vec!["C".into()],
    }));
    if rng.random_bool(0.5) {
        decls.push(Decl::Run(Directive {
            verb: "slice-skew".into(),
            args: vec!["C".into()],
        }));
    }
    SpecDocument { decls }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// parse(print(doc)) = doc for constructible documents, and the unparsed
    /// category lowers back to a lawful one.
    #[test]
    fn print_parse_roundtrip(seed in any::<u64>()) {
        let doc = arbitrary_document(seed);
        let text = doc.to_string();
        let (reparsed, env) = parse(&text).unwrap_or_else(|e| panic!("reparse failed: {e}\n{text}"));
        prop_assert_eq!(doc, reparsed);
        let c = &env.categories["C"];
        prop_assert!(skewcat_core::fincat::check_category(&c.cat).unwrap().passed());
    }
}

#[test]
fn reports_are_deterministic_for_fixed_inputs() {
    let text = demo_document("section5").unwrap();
    let (doc, env) = parse(text).unwrap();
    let cfg = SampleConfig { fibre_bound: 2, samples: 10, seed: 3 };
    let a = run(&doc, &env, &cfg).to_json();
    let b = run(&doc, &env, &cfg).to_json();
    assert_eq!(a, b);
    // A different seed samples different objects but still passes.
    let c = run(&doc, &env, &SampleConfig { fibre_bound: 2, samples: 10, seed: 4 }).to_json();
    assert_ne!(a, c);
}

#[test]
fn spec_example_document_drives_the_comonad_pipeline() {
    // Walking arrow + constant map + run lift-comonad.
    let text = "category C { objects 0 1; mor f: 0 -> 1; }\n\
                map xi: U -> C { u |-> 0; v |-> 0 }\n\
                run lift-comonad C xi;\n";
    let (doc, env) = parse(text).unwrap();
    let report = run(&doc, &env, &SampleConfig { fibre_bound: 2, samples: 10, seed: 0 });
    assert_eq!(report.outcome, "pass");
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn failing_verification_yields_exit_one() {
    // An unlawful category: identity composite redirected to a parallel arrow.
    let text = "category C { objects 0 1; mor f: 0 -> 1; mor g: 0 -> 1; comp f id0 = g; }\n\
                run check-category C;\n";
    let (doc, env) = parse(text).unwrap();
    let report = run(&doc, &env, &SampleConfig::default());
    assert_eq!(report.outcome, "fail");
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn precondition_error_is_reported_and_run_continues() {
    // coreflection demands an injective map; the directive errors but the
    // later directive still runs.
    let text = "category C { objects 0 1; mor f: 0 -> 1; }\n\
                map xi: U -> C { u |-> 0; v |-> 0 }\n\
                run coreflection C xi;\n\
                run check-category C;\n";
    let (doc, env) = parse(text).unwrap();
    let report = run(&doc, &env, &SampleConfig { fibre_bound: 2, samples: 8, seed: 0 });
    assert_eq!(report.directives.len(), 2);
    assert_eq!(report.directives[0].outcome, "error");
    assert_eq!(report.directives[1].outcome, "pass");
    assert_eq!(report.exit_code(), 2);
}

/// Unparse a corpus reflection into document text: both categories, the two
/// functors, and the adjunction with componentwise unit and counit.
fn reflection_document(r: &skewcat_core::gen::CorpusReflection) -> String {
    use std::fmt::Write;
    let xnames = mor_name_table(&r.x, "x", "m");
    let anames = mor_name_table(&r.a, "y", "n");
    let emit_category = |out: &mut String, cname: &str, cat: &FinCategory, op: &str, names: &[String]| {
        write!(out, "category {cname} {{ objects").unwrap();
        for o in 0..cat.n_objects() {
            write!(out, " {op}{o}").unwrap();
        }
        out.push_str(";\n");
        for m in cat.morphisms() {
            if cat.is_identity(&m) {
                continue;
            }
            writeln!(
                out,
                "  mor {}: {op}{} -> {op}{};",
                names[m.0],
                cat.src(&m).0,
                cat.tgt(&m).0
            )
            .unwrap();
        }
        for g in cat.morphisms() {
            for f in cat.morphisms() {
                if cat.is_identity(&g) || cat.is_identity(&f) {
                    continue;
                }
                if let Some(h) = cat.try_compose(g, f) {
                    writeln!(out, "  comp {} {} = {};", names[g.0], names[f.0], names[h.0])
                        .unwrap();
                }
            }
        }
        out.push_str("}\n");
    };
    let mut out = String::new();
    emit_category(&mut out, "X", &r.x, "x", &xnames);
    emit_category(&mut out, "A", &r.a, "y", &anames);
    write!(out, "functor L: X -> A {{").unwrap();
    for o in 0..r.x.n_objects() {
        write!(out, " obj x{o} |-> y{};", r.adj.left.ob(&ObjId(o)).0).unwrap();
    }
    for m in r.x.morphisms() {
        if r.x.is_identity(&m) {
            continue;
        }
        write!(out, " mor {} |-> {};", xnames[m.0], anames[r.adj.left.mor(&m).0]).unwrap();
    }
    out.push_str(" }\n");
    write!(out, "functor N: A -> X {{").unwrap();
    for o in 0..r.a.n_objects() {
        write!(out, " obj y{o} |-> x{};", r.adj.right.ob(&ObjId(o)).0).unwrap();
    }
    for m in r.a.morphisms() {
        if r.a.is_identity(&m) {
            continue;
        }
        write!(out, " mor {} |-> {};", anames[m.0], xnames[r.adj.right.mor(&m).0]).unwrap();
    }
    out.push_str(" }\n");
    write!(out, "adjunction J {{ left L; right N; unit {{").unwrap();
    for o in 0..r.x.n_objects() {
        write!(out, " x{o}: {};", xnames[r.adj.unit_at(&ObjId(o)).0]).unwrap();
    }
    write!(out, " }}; counit {{").unwrap();
    for o in 0..r.a.n_objects() {
        write!(out, " y{o}: {};", anames[r.adj.counit_at(&ObjId(o)).0]).unwrap();
    }
    out.push_str(" }; }\n");
    out.push_str("run check-adjunction J;\nrun reflective-lemma J;\nrun reflection J;\n");
    out
}

#[test]
fn failing_reflection_through_the_cli_reports_the_witness() {
    let (bad, _) = skewcat_core::gen::failing_reflection();
    let text = reflection_document(&bad);
    let (doc, env) = parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    let report = run(&doc, &env, &SampleConfig::default());
    assert_eq!(report.directives[0].outcome, "pass", "adjunction laws");
    assert_eq!(report.directives[1].outcome, "pass", "lemma agreement");
    // The reflection directive fails and names the witnessing pair.
    assert_eq!(report.directives[2].outcome, "fail");
    let detail = &report.directives[2].detail;
    assert_eq!(detail["constructed"], serde_json::json!(false));
    assert!(detail["condition"]["counterexample"].is_array());
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn passing_reflection_through_the_cli_constructs_the_structure() {
    // The walking-arrow reflection satisfies the condition everywhere.
    let corpus = skewcat_core::gen::reflective_corpus(7, 3);
    let text = reflection_document(&corpus[0]);
    let (doc, env) = parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    let report = run(&doc, &env, &SampleConfig::default());
    assert!(report.directives.iter().all(|d| d.outcome == "pass"), "{report:?}");
    let detail = &report.directives[2].detail;
    assert_eq!(detail["constructed"], serde_json::json!(true));
    assert!(detail["axioms"]["axioms"].is_array());
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_skewcat");
    // Unknown demo: input error.
    let out = Command::new(exe).args(["demo", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Passing demo: success, and --json writes the same bytes as stdout.
    let dir = std::env::temp_dir().join("skewcat-test-json");
    let _ = std::fs::create_dir_all(&dir);
    let path = dir.join("out.json");
    let out = Command::new(exe)
        .args(["demo", "section5", "--samples", "8", "--fibre-bound", "2"])
        .arg("--json")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, out.stdout);
}
