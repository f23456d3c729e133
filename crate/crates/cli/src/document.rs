//! The declarative document model and its canonical printer.
//!
//! A document is a sequence of declarations (categories, index maps, fibred
//! sets, functors, natural transformations, adjunctions, warpings, comonads)
//! and `run` directives, executed in order. `parse(print(doc)) == doc` for
//! every document the parser accepts.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDocument {
    pub decls: Vec<Decl>,
}

impl SpecDocument {
    pub fn directives(&self) -> impl Iterator<Item = &Directive> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Run(r) => Some(r),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Category(CategoryDecl),
    Map(MapDecl),
    Fibred(FibredDecl),
    Functor(FunctorDecl),
    Nat(NatDecl),
    Adjunction(AdjunctionDecl),
    Warping(WarpingDecl),
    Comonad(ComonadDecl),
    Run(Directive),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryDecl {
    pub name: String,
    pub objects: Vec<String>,
    /// (name, src, tgt) for each non-identity generator-free morphism.
    pub mors: Vec<(String, String, String)>,
    /// Explicit composition entries `comp g f = h`.
    pub comps: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDecl {
    pub name: String,
    pub dom_name: String,
    /// A declared category; the codomain is its object set.
    pub cod: String,
    /// `point |-> object` entries, in order.
    pub points: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibredDecl {
    pub name: String,
    pub over: String,
    /// Per object of the base category: the labelled elements of the fibre.
    /// Objects not listed have empty fibres.
    pub fibres: Vec<(String, Vec<String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorDecl {
    pub name: String,
    pub dom: String,
    pub cod: String,
    pub obj_entries: Vec<(String, String)>,
    pub mor_entries: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatDecl {
    pub name: String,
    pub dom: String,
    pub cod: String,
    /// `at object = morphism` entries.
    pub comps: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionDecl {
    pub name: String,
    pub left: String,
    pub right: String,
    pub unit: Vec<(String, String)>,
    pub counit: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WarpingKind {
    /// Identity warping on the meet structure of a finite thin category.
    IdentityMeet(String),
    /// Identity warping on the slice structure generated by a category.
    IdentitySlice(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpingDecl {
    pub name: String,
    pub kind: WarpingKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComonadDecl {
    pub name: String,
    /// The base category and the index map generating `ξ_!ξ*`.
    pub category: String,
    pub map: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Directive {
    pub verb: String,
    pub args: Vec<String>,
}

impl fmt::Display for Directive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verb)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// Directive verbs the runner understands.
pub const VERBS: &[&str] = &[
    "check-category",
    "check-functor",
    "check-natural",
    "check-adjunction",
    "slice-skew",
    "tensor",
    "reflective-lemma",
    "reflection",
    "closed-equivalences",
    "coreflection",
    "lift-comonad",
    "idempotent-comparison",
    "warping-roundtrip",
    "check-warping",
    "warping-to-skew",
    "check-comonad",
];

impl fmt::Display for SpecDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.decls {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Category(c) => {
                writeln!(f, "category {} {{", c.name)?;
                write!(f, "  objects")?;
                for o in &c.objects {
                    write!(f, " {o}")?;
                }
                writeln!(f, ";")?;
                for (name, s, t) in &c.mors {
                    writeln!(f, "  mor {name}: {s} -> {t};")?;
                }
                for (g, x, h) in &c.comps {
                    writeln!(f, "  comp {g} {x} = {h};")?;
                }
                writeln!(f, "}}")
            }
            Decl::Map(m) => {
                write!(f, "map {}: {} -> {} {{", m.name, m.dom_name, m.cod)?;
                for (i, (p, o)) in m.points.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, " {p} |-> {o}")?;
                }
                writeln!(f, " }}")
            }
            Decl::Fibred(x) => {
                write!(f, "fibred {} over {} {{", x.name, x.over)?;
                for (i, (o, elems)) in x.fibres.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, " {o}:")?;
                    for e in elems {
                        write!(f, " {e}")?;
                    }
                }
                writeln!(f, " }}")
            }
            Decl::Functor(x) => {
                writeln!(f, "functor {}: {} -> {} {{", x.name, x.dom, x.cod)?;
                for (a, b) in &x.obj_entries {
                    writeln!(f, "  obj {a} |-> {b};")?;
                }
                for (a, b) in &x.mor_entries {
                    writeln!(f, "  mor {a} |-> {b};")?;
                }
                writeln!(f, "}}")
            }
            Decl::Nat(x) => {
                writeln!(f, "nat {}: {} => {} {{", x.name, x.dom, x.cod)?;
                for (o, m) in &x.comps {
                    writeln!(f, "  at {o} = {m};")?;
                }
                writeln!(f, "}}")
            }
            Decl::Adjunction(x) => {
                writeln!(f, "adjunction {} {{", x.name)?;
                writeln!(f, "  left {};", x.left)?;
                writeln!(f, "  right {};", x.right)?;
                write!(f, "  unit {{")?;
                for (i, (o, m)) in x.unit.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, " {o}: {m}")?;
                }
                writeln!(f, " }};")?;
                write!(f, "  counit {{")?;
                for (i, (o, m)) in x.counit.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, " {o}: {m}")?;
                }
                writeln!(f, " }};")?;
                writeln!(f, "}}")
            }
            Decl::Warping(w) => match &w.kind {
                WarpingKind::IdentityMeet(c) => {
                    writeln!(f, "warping {} = identity meet({c});", w.name)
                }
                WarpingKind::IdentitySlice(c) => {
                    writeln!(f, "warping {} = identity slice({c});", w.name)
                }
            },
            Decl::Comonad(c) => {
                writeln!(f, "comonad {} = slice({}, {});", c.name, c.category, c.map)
            }
            Decl::Run(r) => writeln!(f, "run {r};"),
        }
    }
}
