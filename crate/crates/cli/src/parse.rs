//! Lexer, parser, and name resolution for the declarative input format.
//!
//! The grammar is declaration-oriented with `;`-separated entries:
//!
//! ```text
//! category C { objects 0 1; mor f: 0 -> 1; comp f id0 = f; }
//! map xi: U -> C { u |-> 0; v |-> 0 }
//! fibred X over C { 0: a b; 1: c }
//! functor F: C -> C { obj 0 |-> 1; obj 1 |-> 1; mor f |-> id1; }
//! nat t: F => G { at 0 = f; at 1 = g; }
//! adjunction J { left L; right N; unit { 0: f }; counit { 0: id1 }; }
//! warping W = identity meet(C);
//! comonad M = slice(C, xi);
//! run slice-skew C;
//! ```
//!
//! Identities are named `id<object>` and their compositions are filled in
//! automatically; explicit `comp` entries override them. Every other
//! composable pair must be listed, or the document is rejected with a
//! totality error. `#` starts a comment running to end of line.

use crate::document::*;
use skewcat_core::bigcat::{FibredSet, IndexMap};
use skewcat_core::fincat::{Category, FinCategory, FinFunctor, FinNat, MorId, ObjId};
use skewcat_core::reflection::Adjunction;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Resolution,
    Totality,
    Structural,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErrorKind::Syntax => write!(f, "syntax error"),
            ErrorKind::Resolution => write!(f, "resolution error"),
            ErrorKind::Totality => write!(f, "totality error"),
            ErrorKind::Structural => write!(f, "structural error"),
        }
    }
}

#[derive(Debug, Error)]
#[error("{kind} at {line}:{col}: {message}")]
pub struct ParseError {
    pub kind: ErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Colon,
    Comma,
    Equals,
    Arrow,     // ->
    MapsTo,    // |->
    FatArrow,  // =>
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Equals => write!(f, "`=`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::MapsTo => write!(f, "`|->`"),
            Tok::FatArrow => write!(f, "`=>`"),
        }
    }
}

struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start_col = col;
        let push = |out: &mut Vec<Token>, tok: Tok, n: usize, i: &mut usize, col: &mut usize| {
            out.push(Token { tok, line, col: start_col });
            *i += n;
            *col += n;
        };
        match c {
            '{' => push(&mut out, Tok::LBrace, 1, &mut i, &mut col),
            '}' => push(&mut out, Tok::RBrace, 1, &mut i, &mut col),
            '(' => push(&mut out, Tok::LParen, 1, &mut i, &mut col),
            ')' => push(&mut out, Tok::RParen, 1, &mut i, &mut col),
            ';' => push(&mut out, Tok::Semi, 1, &mut i, &mut col),
            ':' => push(&mut out, Tok::Colon, 1, &mut i, &mut col),
            ',' => push(&mut out, Tok::Comma, 1, &mut i, &mut col),
            '=' if chars.get(i + 1) == Some(&'>') => {
                push(&mut out, Tok::FatArrow, 2, &mut i, &mut col)
            }
            '=' => push(&mut out, Tok::Equals, 1, &mut i, &mut col),
            '-' if chars.get(i + 1) == Some(&'>') => {
                push(&mut out, Tok::Arrow, 2, &mut i, &mut col)
            }
            '|' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                push(&mut out, Tok::MapsTo, 3, &mut i, &mut col)
            }
            c if is_ident_start(c) => {
                let mut j = i;
                while j < chars.len() {
                    let ch = chars[j];
                    if is_ident_start(ch) {
                        j += 1;
                    } else if ch == '-'
                        && chars.get(j + 1).map(|&n| is_ident_start(n)).unwrap_or(false)
                    {
                        // Hyphen inside an identifier (directive verbs).
                        j += 1;
                    } else {
                        break;
                    }
                }
                let word: String = chars[i..j].iter().collect();
                let n = j - i;
                out.push(Token { tok: Tok::Ident(word), line, col: start_col });
                i = j;
                col += n;
            }
            other => {
                return Err(ParseError {
                    kind: ErrorKind::Syntax,
                    line,
                    col: start_col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

/// A declared category together with its name tables.
#[derive(Debug, Clone)]
pub struct CatEntry {
    pub cat: FinCategory,
    pub obj_names: Vec<String>,
    pub mor_names: Vec<String>,
}

impl CatEntry {
    pub fn obj(&self, name: &str) -> Option<usize> {
        self.obj_names.iter().position(|n| n == name)
    }

    pub fn mor(&self, name: &str) -> Option<usize> {
        self.mor_names.iter().position(|n| n == name)
    }
}

#[derive(Debug, Clone)]
pub struct MapEntry {
    pub map: IndexMap,
    pub cat: String,
    pub points: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct FibredEntry {
    pub set: FibredSet,
    pub over: String,
    pub element_names: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct FunctorEntry {
    pub functor: FinFunctor,
    pub dom: String,
    pub cod: String,
}

#[derive(Debug, Clone)]
pub struct NatEntry {
    pub nat: FinNat,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone)]
pub struct AdjEntry {
    pub adj: Adjunction<FinCategory, FinCategory>,
    /// Category names: left : x → a.
    pub x: String,
    pub a: String,
}

impl fmt::Debug for AdjEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdjEntry({} ⊣ ..: {} → {})", self.x, self.x, self.a)
    }
}

/// Resolved declarations, ready for the runner.
#[derive(Debug, Default, Clone)]
pub struct Env {
    pub categories: BTreeMap<String, CatEntry>,
    pub maps: BTreeMap<String, MapEntry>,
    pub fibreds: BTreeMap<String, FibredEntry>,
    pub functors: BTreeMap<String, FunctorEntry>,
    pub nats: BTreeMap<String, NatEntry>,
    pub adjunctions: BTreeMap<String, AdjEntry>,
    pub warpings: BTreeMap<String, WarpingKind>,
    pub comonads: BTreeMap<String, (String, String)>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    env: Env,
    names: HashSet<String>,
}

pub fn parse(text: &str) -> Result<(SpecDocument, Env), ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, env: Env::default(), names: HashSet::new() };
    let mut decls = Vec::new();
    while !p.at_end() {
        decls.push(p.decl()?);
    }
    Ok((SpecDocument { decls }, p.env))
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn here(&self) -> (usize, usize) {
        if self.pos < self.tokens.len() {
            (self.tokens[self.pos].line, self.tokens[self.pos].col)
        } else {
            self.tokens
                .last()
                .map(|t| (t.line, t.col))
                .unwrap_or((1, 1))
        }
    }

    fn err(&self, kind: ErrorKind, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError { kind, line, col, message: message.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let got = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err(ErrorKind::Syntax, format!("expected {tok}, found end of input")))?;
        if got == tok {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(ErrorKind::Syntax, format!("expected {tok}, found {got}")))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            Some(other) => {
                Err(self.err(ErrorKind::Syntax, format!("expected identifier, found {other}")))
            }
            None => Err(self.err(ErrorKind::Syntax, "expected identifier, found end of input")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let w = self.ident()?;
        if w == kw {
            Ok(())
        } else {
            self.pos -= 1;
            Err(self.err(ErrorKind::Syntax, format!("expected `{kw}`, found `{w}`")))
        }
    }

    fn fresh_name(&mut self, name: &str) -> Result<(), ParseError> {
        if !self.names.insert(name.to_string()) {
            return Err(self.err(ErrorKind::Resolution, format!("name `{name}` already declared")));
        }
        Ok(())
    }

    fn category(&self, name: &str) -> Result<&CatEntry, ParseError> {
        self.env
            .categories
            .get(name)
            .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown category `{name}`")))
    }

    fn decl(&mut self) -> Result<Decl, ParseError> {
        let word = self.ident()?;
        match word.as_str() {
            "category" => self.category_decl(),
            "map" => self.map_decl(),
            "fibred" => self.fibred_decl(),
            "functor" => self.functor_decl(),
            "nat" => self.nat_decl(),
            "adjunction" => self.adjunction_decl(),
            "warping" => self.warping_decl(),
            "comonad" => self.comonad_decl(),
            "run" => self.run_decl(),
            other => {
                self.pos -= 1;
                Err(self.err(ErrorKind::Syntax, format!("expected a declaration, found `{other}`")))
            }
        }
    }

    fn category_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        self.fresh_name(&name)?;
        self.expect(Tok::LBrace)?;
        self.keyword("objects")?;
        let mut objects = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            objects.push(self.ident()?);
        }
        self.expect(Tok::Semi)?;
        let mut mors = Vec::new();
        let mut comps = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Ident(w)) if w == "mor" => {
                    self.pos += 1;
                    let mname = self.ident()?;
                    self.expect(Tok::Colon)?;
                    let s = self.ident()?;
                    self.expect(Tok::Arrow)?;
                    let t = self.ident()?;
                    self.expect(Tok::Semi)?;
                    mors.push((mname, s, t));
                }
                Some(Tok::Ident(w)) if w == "comp" => {
                    self.pos += 1;
                    let g = self.ident()?;
                    let f = self.ident()?;
                    self.expect(Tok::Equals)?;
                    let h = self.ident()?;
                    self.expect(Tok::Semi)?;
                    comps.push((g, f, h));
                }
                _ => {
                    return Err(self.err(
                        ErrorKind::Syntax,
                        "expected `mor`, `comp`, or `}` in category body",
                    ))
                }
            }
        }
        let decl = CategoryDecl { name: name.clone(), objects, mors, comps };
        let entry = self.lower_category(&decl)?;
        self.env.categories.insert(name, entry);
        Ok(Decl::Category(decl))
    }

    fn lower_category(&self, d: &CategoryDecl) -> Result<CatEntry, ParseError> {
        let n = d.objects.len();
        let mut obj_index: HashMap<&str, usize> = HashMap::new();
        for (i, o) in d.objects.iter().enumerate() {
            if obj_index.insert(o, i).is_some() {
                return Err(self.err(ErrorKind::Resolution, format!("duplicate object `{o}`")));
            }
        }
        // Identities first, then declared morphisms.
        let mut mor_names: Vec<String> = d.objects.iter().map(|o| format!("id{o}")).collect();
        let mut mor_ends: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        let mut mor_index: HashMap<String, usize> =
            mor_names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        for (mname, s, t) in &d.mors {
            if mor_index.contains_key(mname) {
                return Err(self.err(ErrorKind::Resolution, format!("duplicate morphism `{mname}`")));
            }
            let s = *obj_index
                .get(s.as_str())
                .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown object `{s}`")))?;
            let t = *obj_index
                .get(t.as_str())
                .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown object `{t}`")))?;
            mor_index.insert(mname.clone(), mor_names.len());
            mor_names.push(mname.clone());
            mor_ends.push((s, t));
        }
        // Composition: explicit entries first, then identity fill-ins.
        let mut comp: HashMap<(usize, usize), usize> = HashMap::new();
        for (g, f, h) in &d.comps {
            let g = *mor_index
                .get(g)
                .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown morphism `{g}`")))?;
            let f = *mor_index
                .get(f)
                .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown morphism `{f}`")))?;
            let h = *mor_index
                .get(h)
                .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown morphism `{h}`")))?;
            if comp.insert((g, f), h).is_some() {
                return Err(self.err(
                    ErrorKind::Resolution,
                    format!("duplicate composition entry for ({}, {})", mor_names[g], mor_names[f]),
                ));
            }
        }
        for g in 0..mor_names.len() {
            for f in 0..mor_names.len() {
                if mor_ends[f].1 != mor_ends[g].0 || comp.contains_key(&(g, f)) {
                    continue;
                }
                if g < n {
                    comp.insert((g, f), f); // id ∘ f
                } else if f < n {
                    comp.insert((g, f), g); // g ∘ id
                } else {
                    return Err(self.err(
                        ErrorKind::Totality,
                        format!(
                            "missing composition entry for ({}, {})",
                            mor_names[g], mor_names[f]
                        ),
                    ));
                }
            }
        }
        let comp_entries: Vec<((usize, usize), usize)> =
            comp.into_iter().collect();
        let cat = FinCategory::new(n, mor_ends, &comp_entries, (0..n).collect())
            .and_then(|c| c.with_names(d.objects.clone(), mor_names.clone()))
            .map_err(|e| self.err(ErrorKind::Structural, e.to_string()))?;
        Ok(CatEntry { cat, obj_names: d.objects.clone(), mor_names })
    }

    fn map_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        self.fresh_name(&name)?;
        self.expect(Tok::Colon)?;
        let dom_name = self.ident()?;
        self.expect(Tok::Arrow)?;
        let cod = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut points = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Semi) => {
                    self.pos += 1;
                }
                _ => {
                    let p = self.ident()?;
                    self.expect(Tok::MapsTo)?;
                    let o = self.ident()?;
                    points.push((p, o));
                }
            }
        }
        let entry = {
            let cat = self.category(&cod)?;
            let mut seen = HashSet::new();
            let mut indices = Vec::with_capacity(points.len());
            for (p, o) in &points {
                if !seen.insert(p.clone()) {
                    return Err(self.err(ErrorKind::Resolution, format!("duplicate point `{p}`")));
                }
                let i = cat.obj(o).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown object `{o}` in `{cod}`"))
                })?;
                indices.push(i);
            }
            let map = IndexMap::new(points.len(), cat.cat.n_objects(), indices)
                .map_err(|e| self.err(ErrorKind::Structural, e.to_string()))?;
            MapEntry { map, cat: cod.clone(), points: points.iter().map(|(p, _)| p.clone()).collect() }
        };
        self.env.maps.insert(name.clone(), entry);
        Ok(Decl::Map(MapDecl { name, dom_name, cod, points }))
    }

    fn fibred_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        self.fresh_name(&name)?;
        self.keyword("over")?;
        let over = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut fibres = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Semi) => {
                    self.pos += 1;
                }
                _ => {
                    let o = self.ident()?;
                    self.expect(Tok::Colon)?;
                    let mut elems = Vec::new();
                    while let Some(Tok::Ident(_)) = self.peek() {
                        elems.push(self.ident()?);
                    }
                    fibres.push((o, elems));
                }
            }
        }
        let entry = {
            let cat = self.category(&over)?;
            let n = cat.cat.n_objects();
            let mut names: Vec<Vec<String>> = vec![Vec::new(); n];
            let mut seen = HashSet::new();
            for (o, elems) in &fibres {
                let i = cat.obj(o).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown object `{o}` in `{over}`"))
                })?;
                if !seen.insert(i) {
                    return Err(self.err(ErrorKind::Resolution, format!("duplicate fibre `{o}`")));
                }
                names[i] = elems.clone();
            }
            let sizes: Vec<usize> = names.iter().map(Vec::len).collect();
            FibredEntry { set: FibredSet::atomic(&sizes), over: over.clone(), element_names: names }
        };
        self.env.fibreds.insert(name.clone(), entry);
        Ok(Decl::Fibred(FibredDecl { name, over, fibres }))
    }

    fn functor_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        self.fresh_name(&name)?;
        self.expect(Tok::Colon)?;
        let dom = self.ident()?;
        self.expect(Tok::Arrow)?;
        let cod = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut obj_entries = Vec::new();
        let mut mor_entries = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Ident(w)) if w == "obj" => {
                    self.pos += 1;
                    let a = self.ident()?;
                    self.expect(Tok::MapsTo)?;
                    let b = self.ident()?;
                    self.expect(Tok::Semi)?;
                    obj_entries.push((a, b));
                }
                Some(Tok::Ident(w)) if w == "mor" => {
                    self.pos += 1;
                    let a = self.ident()?;
                    self.expect(Tok::MapsTo)?;
                    let b = self.ident()?;
                    self.expect(Tok::Semi)?;
                    mor_entries.push((a, b));
                }
                _ => {
                    return Err(
                        self.err(ErrorKind::Syntax, "expected `obj`, `mor`, or `}` in functor body")
                    )
                }
            }
        }
        let entry = self.lower_functor(&dom, &cod, &obj_entries, &mor_entries)?;
        self.env
            .functors
            .insert(name.clone(), FunctorEntry { functor: entry, dom: dom.clone(), cod: cod.clone() });
        Ok(Decl::Functor(FunctorDecl { name, dom, cod, obj_entries, mor_entries }))
    }

    fn lower_functor(
        &self,
        dom: &str,
        cod: &str,
        obj_entries: &[(String, String)],
        mor_entries: &[(String, String)],
    ) -> Result<FinFunctor, ParseError> {
        let dcat = self.category(dom)?;
        let ccat = self.category(cod)?;
        let n = dcat.cat.n_objects();
        let mut omap: Vec<Option<usize>> = vec![None; n];
        for (a, b) in obj_entries {
            let a = dcat.obj(a).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown object `{a}` in `{dom}`"))
            })?;
            let b = ccat.obj(b).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown object `{b}` in `{cod}`"))
            })?;
            if omap[a].replace(b).is_some() {
                return Err(self.err(
                    ErrorKind::Resolution,
                    format!("duplicate obj entry for `{}`", dcat.obj_names[a]),
                ));
            }
        }
        let omap: Vec<usize> = omap
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                o.ok_or_else(|| {
                    self.err(
                        ErrorKind::Totality,
                        format!("missing obj entry for `{}`", dcat.obj_names[i]),
                    )
                })
            })
            .collect::<Result<_, _>>()?;
        let m = dcat.cat.n_morphisms();
        let mut mmap: Vec<Option<usize>> = vec![None; m];
        for (a, b) in mor_entries {
            let a = dcat.mor(a).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown morphism `{a}` in `{dom}`"))
            })?;
            let b = ccat.mor(b).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown morphism `{b}` in `{cod}`"))
            })?;
            if mmap[a].replace(b).is_some() {
                return Err(self.err(
                    ErrorKind::Resolution,
                    format!("duplicate mor entry for `{}`", dcat.mor_names[a]),
                ));
            }
        }
        // Identities default to the identity of the image object.
        for (o, &img) in omap.iter().enumerate() {
            let id = dcat.cat.id_of(ObjId(o)).0;
            if mmap[id].is_none() {
                mmap[id] = Some(ccat.cat.id_of(ObjId(img)).0);
            }
        }
        let mmap: Vec<usize> = mmap
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    self.err(
                        ErrorKind::Totality,
                        format!("missing mor entry for `{}`", dcat.mor_names[i]),
                    )
                })
            })
            .collect::<Result<_, _>>()?;
        FinFunctor::new(dcat.cat.clone(), ccat.cat.clone(), omap, mmap)
            .map_err(|e| self.err(ErrorKind::Structural, e.to_string()))
    }

    fn nat_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        self.fresh_name(&name)?;
        self.expect(Tok::Colon)?;
        let dom = self.ident()?;
        self.expect(Tok::FatArrow)?;
        let cod = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut comps = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Ident(w)) if w == "at" => {
                    self.pos += 1;
                    let o = self.ident()?;
                    self.expect(Tok::Equals)?;
                    let m = self.ident()?;
                    self.expect(Tok::Semi)?;
                    comps.push((o, m));
                }
                _ => return Err(self.err(ErrorKind::Syntax, "expected `at` or `}` in nat body")),
            }
        }
        let entry = {
            let fd = self.env.functors.get(&dom).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown functor `{dom}`"))
            })?;
            let fc = self.env.functors.get(&cod).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown functor `{cod}`"))
            })?;
            if fd.dom != fc.dom || fd.cod != fc.cod {
                return Err(self.err(
                    ErrorKind::Structural,
                    format!("functors `{dom}` and `{cod}` are not parallel"),
                ));
            }
            let dcat = self.category(&fd.dom)?.clone();
            let ccat = self.category(&fd.cod)?.clone();
            let mut table: Vec<Option<usize>> = vec![None; dcat.cat.n_objects()];
            for (o, m) in &comps {
                let o = dcat.obj(o).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown object `{o}`"))
                })?;
                let m = ccat.mor(m).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown morphism `{m}`"))
                })?;
                if table[o].replace(m).is_some() {
                    return Err(self.err(
                        ErrorKind::Resolution,
                        format!("duplicate component at `{}`", dcat.obj_names[o]),
                    ));
                }
            }
            let table: Vec<usize> = table
                .into_iter()
                .enumerate()
                .map(|(i, v)| {
                    v.ok_or_else(|| {
                        self.err(
                            ErrorKind::Totality,
                            format!("missing component at `{}`", dcat.obj_names[i]),
                        )
                    })
                })
                .collect::<Result<_, _>>()?;
            let nat = FinNat::new(fd.functor.clone(), fc.functor.clone(), table)
                .map_err(|e| self.err(ErrorKind::Structural, e.to_string()))?;
            NatEntry { nat, dom: dom.clone(), cod: cod.clone() }
        };
        self.env.nats.insert(name.clone(), entry);
        Ok(Decl::Nat(NatDecl { name, dom, cod, comps }))
    }

    fn component_block(&mut self) -> Result<Vec<(String, String)>, ParseError> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Semi) => {
                    self.pos += 1;
                }
                _ => {
                    let o = self.ident()?;
                    self.expect(Tok::Colon)?;
                    let m = self.ident()?;
                    out.push((o, m));
                }
            }
        }
        Ok(out)
    }

    fn adjunction_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        self.fresh_name(&name)?;
        self.expect(Tok::LBrace)?;
        self.keyword("left")?;
        let left = self.ident()?;
        self.expect(Tok::Semi)?;
        self.keyword("right")?;
        let right = self.ident()?;
        self.expect(Tok::Semi)?;
        self.keyword("unit")?;
        let unit = self.component_block()?;
        self.expect(Tok::Semi)?;
        self.keyword("counit")?;
        let counit = self.component_block()?;
        self.expect(Tok::Semi)?;
        self.expect(Tok::RBrace)?;
        let entry = self.lower_adjunction(&left, &right, &unit, &counit)?;
        self.env.adjunctions.insert(name.clone(), entry);
        Ok(Decl::Adjunction(AdjunctionDecl { name, left, right, unit, counit }))
    }

    fn lower_adjunction(
        &self,
        left: &str,
        right: &str,
        unit: &[(String, String)],
        counit: &[(String, String)],
    ) -> Result<AdjEntry, ParseError> {
        let l = self
            .env
            .functors
            .get(left)
            .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown functor `{left}`")))?;
        let r = self
            .env
            .functors
            .get(right)
            .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown functor `{right}`")))?;
        if l.dom != r.cod || l.cod != r.dom {
            return Err(self.err(
                ErrorKind::Structural,
                format!("functors `{left}` and `{right}` do not form a dual pair"),
            ));
        }
        let xcat = self.category(&l.dom)?.clone();
        let acat = self.category(&l.cod)?.clone();
        let mut unit_table: Vec<Option<usize>> = vec![None; xcat.cat.n_objects()];
        for (o, m) in unit {
            let o = xcat.obj(o).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown object `{o}`"))
            })?;
            let m = xcat.mor(m).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown morphism `{m}`"))
            })?;
            unit_table[o] = Some(m);
        }
        let mut counit_table: Vec<Option<usize>> = vec![None; acat.cat.n_objects()];
        for (o, m) in counit {
            let o = acat.obj(o).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown object `{o}`"))
            })?;
            let m = acat.mor(m).ok_or_else(|| {
                self.err(ErrorKind::Resolution, format!("unknown morphism `{m}`"))
            })?;
            counit_table[o] = Some(m);
        }
        let unit_table: Vec<usize> = unit_table
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    self.err(
                        ErrorKind::Totality,
                        format!("missing unit component at `{}`", xcat.obj_names[i]),
                    )
                })
            })
            .collect::<Result<_, _>>()?;
        let counit_table: Vec<usize> = counit_table
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    self.err(
                        ErrorKind::Totality,
                        format!("missing counit component at `{}`", acat.obj_names[i]),
                    )
                })
            })
            .collect::<Result<_, _>>()?;
        // Endpoint validation.
        for (o, &m) in unit_table.iter().enumerate() {
            let want_tgt = r.functor.ob(l.functor.ob(ObjId(o)));
            let mor = MorId(m);
            if xcat.cat.src(&mor) != ObjId(o) || xcat.cat.tgt(&mor) != want_tgt {
                return Err(self.err(
                    ErrorKind::Structural,
                    format!("unit component at `{}` has wrong endpoints", xcat.obj_names[o]),
                ));
            }
        }
        for (o, &m) in counit_table.iter().enumerate() {
            let want_src = l.functor.ob(r.functor.ob(ObjId(o)));
            let mor = MorId(m);
            if acat.cat.src(&mor) != want_src || acat.cat.tgt(&mor) != ObjId(o) {
                return Err(self.err(
                    ErrorKind::Structural,
                    format!("counit component at `{}` has wrong endpoints", acat.obj_names[o]),
                ));
            }
        }
        let unit_iso =
            unit_table.iter().all(|&m| xcat.cat.inverse(&MorId(m)).is_some());
        let counit_iso =
            counit_table.iter().all(|&m| acat.cat.inverse(&MorId(m)).is_some());
        let ut = unit_table.clone();
        let ct = counit_table.clone();
        let adj = Adjunction::new(
            l.functor.as_fun(),
            r.functor.as_fun(),
            move |o: &ObjId| MorId(ut[o.0]),
            move |o: &ObjId| MorId(ct[o.0]),
            unit_iso,
            counit_iso,
        );
        Ok(AdjEntry { adj, x: l.dom.clone(), a: l.cod.clone() })
    }

    fn warping_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        self.fresh_name(&name)?;
        self.expect(Tok::Equals)?;
        self.keyword("identity")?;
        let flavor = self.ident()?;
        self.expect(Tok::LParen)?;
        let cat = self.ident()?;
        self.expect(Tok::RParen)?;
        self.expect(Tok::Semi)?;
        self.category(&cat)?;
        let kind = match flavor.as_str() {
            "meet" => WarpingKind::IdentityMeet(cat),
            "slice" => WarpingKind::IdentitySlice(cat),
            other => {
                return Err(self.err(
                    ErrorKind::Syntax,
                    format!("expected `meet` or `slice`, found `{other}`"),
                ))
            }
        };
        self.env.warpings.insert(name.clone(), kind.clone());
        Ok(Decl::Warping(WarpingDecl { name, kind }))
    }

    fn comonad_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        self.fresh_name(&name)?;
        self.expect(Tok::Equals)?;
        self.keyword("slice")?;
        self.expect(Tok::LParen)?;
        let category = self.ident()?;
        self.expect(Tok::Comma)?;
        let map = self.ident()?;
        self.expect(Tok::RParen)?;
        self.expect(Tok::Semi)?;
        self.category(&category)?;
        let m = self
            .env
            .maps
            .get(&map)
            .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown map `{map}`")))?;
        if m.cat != category {
            return Err(self.err(
                ErrorKind::Structural,
                format!("map `{map}` does not land in `{category}`"),
            ));
        }
        self.env.comonads.insert(name.clone(), (category.clone(), map.clone()));
        Ok(Decl::Comonad(ComonadDecl { name, category, map }))
    }

    fn run_decl(&mut self) -> Result<Decl, ParseError> {
        let verb = self.ident()?;
        if !VERBS.contains(&verb.as_str()) {
            return Err(self.err(ErrorKind::Resolution, format!("unknown directive `{verb}`")));
        }
        let mut args = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            args.push(self.ident()?);
        }
        self.expect(Tok::Semi)?;
        self.check_directive(&verb, &args)?;
        Ok(Decl::Run(Directive { verb, args }))
    }

    fn check_directive(&self, verb: &str, args: &[String]) -> Result<(), ParseError> {
        let need = |n: usize| -> Result<(), ParseError> {
            if args.len() != n {
                Err(self.err(
                    ErrorKind::Syntax,
                    format!("directive `{verb}` takes {n} argument(s), got {}", args.len()),
                ))
            } else {
                Ok(())
            }
        };
        let want_cat = |name: &String| -> Result<(), ParseError> {
            self.category(name).map(|_| ())
        };
        let want_map = |name: &String| -> Result<(), ParseError> {
            self.env
                .maps
                .get(name)
                .map(|_| ())
                .ok_or_else(|| self.err(ErrorKind::Resolution, format!("unknown map `{name}`")))
        };
        match verb {
            "check-category" | "slice-skew" | "warping-roundtrip" => {
                need(1)?;
                want_cat(&args[0])
            }
            "check-functor" => {
                need(1)?;
                self.env.functors.get(&args[0]).map(|_| ()).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown functor `{}`", args[0]))
                })
            }
            "check-natural" => {
                need(1)?;
                self.env.nats.get(&args[0]).map(|_| ()).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown nat `{}`", args[0]))
                })
            }
            "check-adjunction" | "reflective-lemma" | "reflection" | "closed-equivalences" => {
                need(1)?;
                self.env.adjunctions.get(&args[0]).map(|_| ()).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown adjunction `{}`", args[0]))
                })
            }
            "tensor" => {
                need(3)?;
                want_cat(&args[0])?;
                for a in &args[1..] {
                    let f = self.env.fibreds.get(a).ok_or_else(|| {
                        self.err(ErrorKind::Resolution, format!("unknown fibred set `{a}`"))
                    })?;
                    if f.over != args[0] {
                        return Err(self.err(
                            ErrorKind::Structural,
                            format!("fibred set `{a}` is not over `{}`", args[0]),
                        ));
                    }
                }
                Ok(())
            }
            "coreflection" | "lift-comonad" | "idempotent-comparison" => {
                need(2)?;
                want_cat(&args[0])?;
                want_map(&args[1])?;
                let m = &self.env.maps[&args[1]];
                if m.cat != args[0] {
                    return Err(self.err(
                        ErrorKind::Structural,
                        format!("map `{}` does not land in `{}`", args[1], args[0]),
                    ));
                }
                Ok(())
            }
            "check-warping" | "warping-to-skew" => {
                need(1)?;
                self.env.warpings.get(&args[0]).map(|_| ()).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown warping `{}`", args[0]))
                })
            }
            "check-comonad" => {
                need(1)?;
                self.env.comonads.get(&args[0]).map(|_| ()).ok_or_else(|| {
                    self.err(ErrorKind::Resolution, format!("unknown comonad `{}`", args[0]))
                })
            }
            _ => unreachable!("verb validated against VERBS"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document() {
        let (doc, env) = parse("").unwrap();
        assert!(doc.decls.is_empty());
        assert!(env.categories.is_empty());
    }

    #[test]
    fn terminal_category() {
        let (doc, env) = parse("category One { objects x; }").unwrap();
        assert_eq!(doc.decls.len(), 1);
        let c = &env.categories["One"];
        assert_eq!(c.cat.n_objects(), 1);
        assert_eq!(c.cat.n_morphisms(), 1);
    }

    #[test]
    fn walking_arrow_with_directives() {
        let text = "category C { objects 0 1; mor f: 0 -> 1; }\n\
                    map xi: U -> C { u |-> 0; v |-> 0 }\n\
                    run check-category C;\n\
                    run lift-comonad C xi;\n";
        let (doc, env) = parse(text).unwrap();
        assert_eq!(doc.directives().count(), 2);
        assert_eq!(env.categories["C"].cat.n_morphisms(), 3);
        assert_eq!(env.maps["xi"].map.dom_size, 2);
        assert!(!env.maps["xi"].map.is_injective());
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse("category C { objects 0 1; mor f 0 -> 1; }").unwrap_err();
        assert_eq!(err.kind, ErrorKind::Syntax);
        assert_eq!(err.line, 1);
        assert!(err.col > 1);
    }

    #[test]
    fn unknown_name_is_resolution_error() {
        let err = parse("run check-category C;").unwrap_err();
        assert_eq!(err.kind, ErrorKind::Resolution);
    }

    #[test]
    fn missing_composition_is_totality_error() {
        // g∘f is composable but not declared.
        let err = parse(
            "category C { objects 0 1 2; mor f: 0 -> 1; mor g: 1 -> 2; }",
        )
        .unwrap_err();
        assert_eq!(err.kind, ErrorKind::Totality);
        assert!(err.message.contains("(g, f)"));
    }

    #[test]
    fn explicit_composites_accepted() {
        let (_, env) = parse(
            "category C { objects 0 1 2; mor f: 0 -> 1; mor g: 1 -> 2; mor h: 0 -> 2; comp g f = h; }",
        )
        .unwrap();
        let c = &env.categories["C"];
        assert_eq!(c.cat.n_morphisms(), 6);
        assert!(skewcat_core::fincat::check_category(&c.cat).unwrap().passed());
    }

    #[test]
    fn redirected_identity_composite_parses_then_fails_check() {
        let (_, env) = parse(
            "category C { objects 0 1; mor f: 0 -> 1; comp f id0 = id0; }",
        )
        .unwrap();
        let c = &env.categories["C"];
        let report = skewcat_core::fincat::check_category(&c.cat).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = parse("category C { objects 0; }\ncategory C { objects 0; }").unwrap_err();
        assert_eq!(err.kind, ErrorKind::Resolution);
        assert_eq!(err.line, 2);
    }

    #[test]
    fn adjunction_walking_arrow_reflection() {
        let text = "category X { objects 0 1; mor f: 0 -> 1; }\n\
                    category A { objects s; }\n\
                    functor L: X -> A { obj 0 |-> s; obj 1 |-> s; mor f |-> ids; }\n\
                    functor N: A -> X { obj s |-> 1; }\n\
                    adjunction J { left L; right N; unit { 0: f; 1: id1 }; counit { s: ids }; }\n\
                    run reflective-lemma J;\n";
        let (_, env) = parse(text).unwrap();
        let j = &env.adjunctions["J"];
        assert!(j.adj.counit_iso);
        assert!(!j.adj.unit_iso);
    }
}
