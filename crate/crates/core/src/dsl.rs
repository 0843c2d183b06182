//! The spec-file language.
//!
//! ```text
//! file    := stmt*
//! stmt    := space | algebra | ring | cmd
//! space   := "space" NAME ("discrete" INT | "seq" | "opens" ["autoclose"] "{" set* "}")
//! set     := "{" INT* "}"
//! algebra := "algebra" NAME ("zmod" INT | "table" INT "{" rows "}" ["add" "{" rows "}"] ["zero" INT])
//! rows    := (INT | "{" INT* "}")*
//! ring    := "ring" NAME "=" "C" "(" NAME "," NAME ")" ropt*
//! ropt    := "mode" ("ring" | "mult") | "side" ("left" | "right" | "two-sided")
//!          | "pin" ("J" | "U1" | "U") set
//! cmd     := "analyze" NAME | "ideals" NAME | "check" NAME ID+
//!          | "generate" INT NAME | "fuzz" INT INT
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{make_zmod, AlgebraTable, Side, MAX_CARRIER};
use crate::ideals::{IdealConfig, Mode};
use crate::pointset::{PointSet, MAX_POINTS};
use crate::topology::{validate_topology, ExplicitSpace, Space};
use crate::verify::Pins;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Loc {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{loc}: syntax error: {msg}")]
    Syntax { loc: Loc, msg: String },
    #[error("{loc}: duplicate {kind} `{name}`")]
    DuplicateName { loc: Loc, kind: &'static str, name: String },
    #[error("{loc}: unknown {kind} `{name}`")]
    UnknownReference { loc: Loc, kind: &'static str, name: String },
    #[error("{loc}: {msg}")]
    Invalid { loc: Loc, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceDef {
    Discrete(usize),
    Seq,
    Opens { sets: Vec<PointSet>, autoclose: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgebraDef {
    Zmod(usize),
    Table { mul: Vec<Vec<usize>>, add: Option<Vec<Vec<usize>>>, zero: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDef {
    pub space: String,
    pub algebra: String,
    pub mode: Option<Mode>,
    pub side: Option<Side>,
    pub pins: Pins,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Directive {
    Analyze(String),
    Ideals(String),
    Check { ring: String, ids: Vec<String> },
    Generate { primes: usize, algebra: String },
    Fuzz { seed: u64, instances: usize },
}

/// A parsed and validated spec file; definitions keep source order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SpecFile {
    pub spaces: Vec<(String, SpaceDef)>,
    pub algebras: Vec<(String, AlgebraDef)>,
    pub rings: Vec<(String, RingDef)>,
    pub directives: Vec<Directive>,
}

/// A ring binding resolved to concrete objects.
#[derive(Debug, Clone)]
pub struct Binding {
    pub name: String,
    pub space: Space,
    pub algebra: AlgebraTable,
    pub config: IdealConfig,
    pub pins: Pins,
}

impl SpaceDef {
    pub fn build(&self) -> Result<Space, String> {
        match self {
            SpaceDef::Discrete(n) => Ok(Space::Explicit(ExplicitSpace::discrete(*n))),
            SpaceDef::Seq => Ok(Space::Sequence(crate::topology::SequenceSpace)),
            SpaceDef::Opens { sets, autoclose } => {
                let n = sets.iter().fold(PointSet::EMPTY, |a, &s| a.union(s)).bits();
                let n = 64 - n.leading_zeros() as usize;
                validate_topology(n, sets, *autoclose).map(Space::Explicit).map_err(|e| e.to_string())
            }
        }
    }
}

impl AlgebraDef {
    pub fn build(&self, name: &str) -> Result<AlgebraTable, String> {
        match self {
            AlgebraDef::Zmod(n) => Ok(make_zmod(*n)),
            AlgebraDef::Table { mul, add, zero } => {
                AlgebraTable::from_tables(name, mul, add.as_deref(), *zero, None).map_err(|e| e.to_string())
            }
        }
    }
}

impl SpecFile {
    pub fn space(&self, name: &str) -> Option<&SpaceDef> {
        self.spaces.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    pub fn algebra(&self, name: &str) -> Option<&AlgebraDef> {
        self.algebras.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    pub fn ring(&self, name: &str) -> Option<&RingDef> {
        self.rings.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    /// Build the objects behind a ring binding. Definitions were validated
    /// at parse time, so this only fails for hand-built spec files.
    pub fn bind(&self, ring: &str) -> Result<Binding, String> {
        let r = self.ring(ring).ok_or_else(|| format!("unknown ring `{ring}`"))?;
        let space = self.space(&r.space).ok_or_else(|| format!("unknown space `{}`", r.space))?.build()?;
        let algebra = self.algebra(&r.algebra).ok_or_else(|| format!("unknown algebra `{}`", r.algebra))?.build(&r.algebra)?;
        let mut config = IdealConfig::default_for(&algebra);
        if let Some(m) = r.mode {
            if m == Mode::Ring && !algebra.has_add() {
                return Err(format!("ring `{ring}`: mode ring needs an addition table"));
            }
            config.mode = m;
        }
        if let Some(s) = r.side {
            config.side = s;
        }
        Ok(Binding { name: ring.to_string(), space, algebra, config, pins: r.pins.clone() })
    }
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Int(u64),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(i) => write!(f, "`{i}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Loc)>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let loc = Loc { line: li + 1, col: i + 1 };
            if c.is_whitespace() {
                i += 1;
            } else if "{}(),=".contains(c) {
                out.push((Tok::Sym(c), loc));
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s.parse().map_err(|_| ParseError::Syntax { loc, msg: format!("integer `{s}` too large") })?;
                out.push((Tok::Int(v), loc));
            } else if c.is_alphanumeric() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || "_.-:".contains(chars[i])) {
                    i += 1;
                }
                out.push((Tok::Word(chars[start..i].iter().collect()), loc));
            } else {
                return Err(ParseError::Syntax { loc, msg: format!("unexpected character `{c}`") });
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

const KEYWORDS: &[&str] = &["space", "algebra", "ring", "analyze", "ideals", "check", "generate", "fuzz"];

struct Parser {
    toks: Vec<(Tok, Loc)>,
    pos: usize,
    end: Loc,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn loc(&self) -> Loc {
        self.toks.get(self.pos).map(|(_, l)| *l).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { loc: self.loc(), msg: msg.into() })
    }

    fn next(&mut self, what: &str) -> Result<(Tok, Loc), ParseError> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => self.err(format!("expected {what}, found end of input")),
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, Loc), ParseError> {
        match self.next(what)? {
            (Tok::Word(w), l) => Ok((w, l)),
            (t, l) => Err(ParseError::Syntax { loc: l, msg: format!("expected {what}, found {t}") }),
        }
    }

    fn int(&mut self, what: &str) -> Result<(u64, Loc), ParseError> {
        match self.next(what)? {
            (Tok::Int(v), l) => Ok((v, l)),
            (t, l) => Err(ParseError::Syntax { loc: l, msg: format!("expected {what}, found {t}") }),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        match self.next(&format!("`{c}`"))? {
            (Tok::Sym(d), _) if d == c => Ok(()),
            (t, l) => Err(ParseError::Syntax { loc: l, msg: format!("expected `{c}`, found {t}") }),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.word(&format!("`{kw}`"))? {
            (w, _) if w == kw => Ok(()),
            (w, l) => Err(ParseError::Syntax { loc: l, msg: format!("expected `{kw}`, found `{w}`") }),
        }
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn at_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Word(x)) if x == w)
    }

    fn name(&mut self, what: &str) -> Result<(String, Loc), ParseError> {
        let (w, l) = self.word(what)?;
        if KEYWORDS.contains(&w.as_str()) {
            return Err(ParseError::Syntax { loc: l, msg: format!("`{w}` is a keyword, not a {what}") });
        }
        Ok((w, l))
    }

    fn set(&mut self) -> Result<PointSet, ParseError> {
        self.sym('{')?;
        let mut s = PointSet::EMPTY;
        while !self.at_sym('}') {
            let (v, l) = self.int("a point")?;
            if v as usize >= MAX_POINTS {
                return Err(ParseError::Invalid { loc: l, msg: format!("point {v} exceeds the limit of {MAX_POINTS}") });
            }
            s.insert(v as usize);
        }
        self.sym('}')?;
        Ok(s)
    }

    /// `{ rows }` for an m×m table; rows may be braced or flat.
    fn table(&mut self, m: usize) -> Result<Vec<Vec<usize>>, ParseError> {
        let loc = self.loc();
        self.sym('{')?;
        let mut flat = Vec::new();
        while !self.at_sym('}') {
            if self.at_sym('{') {
                self.sym('{')?;
                while !self.at_sym('}') {
                    flat.push(self.int("a table entry")?.0 as usize);
                }
                self.sym('}')?;
            } else {
                flat.push(self.int("a table entry")?.0 as usize);
            }
        }
        self.sym('}')?;
        if flat.len() != m * m {
            return Err(ParseError::Invalid { loc, msg: format!("table has {} entries, expected {}", flat.len(), m * m) });
        }
        Ok(flat.chunks(m).map(<[usize]>::to_vec).collect())
    }
}

type Names = HashMap<String, Loc>;

fn fresh(names: &mut Names, kind: &'static str, name: &str, loc: Loc) -> Result<(), ParseError> {
    if names.insert(name.to_string(), loc).is_some() {
        return Err(ParseError::DuplicateName { loc, kind, name: name.to_string() });
    }
    Ok(())
}

fn known(names: &Names, kind: &'static str, name: &str, loc: Loc) -> Result<(), ParseError> {
    if !names.contains_key(name) {
        return Err(ParseError::UnknownReference { loc, kind, name: name.to_string() });
    }
    Ok(())
}

pub fn parse_spec(text: &str) -> Result<SpecFile, ParseError> {
    let toks = lex(text)?;
    let end = Loc { line: text.lines().count().max(1), col: text.lines().last().map_or(1, |l| l.chars().count() + 1) };
    let mut p = Parser { toks, pos: 0, end };
    let mut spec = SpecFile::default();
    let (mut spaces, mut algebras, mut rings) = (Names::new(), Names::new(), Names::new());

    while p.peek().is_some() {
        let (kw, kl) = p.word("a statement")?;
        match kw.as_str() {
            "space" => {
                let (name, nl) = p.name("space name")?;
                fresh(&mut spaces, "space", &name, nl)?;
                let (kind, kl) = p.word("`discrete`, `seq` or `opens`")?;
                let def = match kind.as_str() {
                    "discrete" => {
                        let (n, l) = p.int("a point count")?;
                        if !(1..=16).contains(&n) {
                            return Err(ParseError::Invalid { loc: l, msg: format!("discrete spaces have 1..=16 points, got {n}") });
                        }
                        SpaceDef::Discrete(n as usize)
                    }
                    "seq" => SpaceDef::Seq,
                    "opens" => {
                        let autoclose = p.at_word("autoclose");
                        if autoclose {
                            p.pos += 1;
                        }
                        p.sym('{')?;
                        let mut sets = Vec::new();
                        while !p.at_sym('}') {
                            sets.push(p.set()?);
                        }
                        p.sym('}')?;
                        SpaceDef::Opens { sets, autoclose }
                    }
                    other => {
                        return Err(ParseError::Syntax { loc: kl, msg: format!("expected `discrete`, `seq` or `opens`, found `{other}`") })
                    }
                };
                def.build().map_err(|msg| ParseError::Invalid { loc: kl, msg })?;
                spec.spaces.push((name, def));
            }
            "algebra" => {
                let (name, nl) = p.name("algebra name")?;
                fresh(&mut algebras, "algebra", &name, nl)?;
                let (kind, kl) = p.word("`zmod` or `table`")?;
                let def = match kind.as_str() {
                    "zmod" => {
                        let (n, l) = p.int("a modulus")?;
                        if !(2..=MAX_CARRIER as u64).contains(&n) {
                            return Err(ParseError::Invalid { loc: l, msg: format!("modulus {n} outside 2..={MAX_CARRIER}") });
                        }
                        AlgebraDef::Zmod(n as usize)
                    }
                    "table" => {
                        let (m, l) = p.int("a carrier size")?;
                        if !(2..=MAX_CARRIER as u64).contains(&m) {
                            return Err(ParseError::Invalid { loc: l, msg: format!("carrier size {m} outside 2..={MAX_CARRIER}") });
                        }
                        let mul = p.table(m as usize)?;
                        let add = if p.at_word("add") {
                            p.pos += 1;
                            Some(p.table(m as usize)?)
                        } else {
                            None
                        };
                        let zero = if p.at_word("zero") {
                            p.pos += 1;
                            p.int("the zero element")?.0 as usize
                        } else {
                            0
                        };
                        AlgebraDef::Table { mul, add, zero }
                    }
                    other => return Err(ParseError::Syntax { loc: kl, msg: format!("expected `zmod` or `table`, found `{other}`") }),
                };
                def.build(&name).map_err(|msg| ParseError::Invalid { loc: kl, msg })?;
                spec.algebras.push((name, def));
            }
            "ring" => {
                let (name, nl) = p.name("ring name")?;
                fresh(&mut rings, "ring", &name, nl)?;
                p.sym('=')?;
                p.keyword("C")?;
                p.sym('(')?;
                let (space, sl) = p.name("space name")?;
                known(&spaces, "space", &space, sl)?;
                p.sym(',')?;
                let (algebra, al) = p.name("algebra name")?;
                known(&algebras, "algebra", &algebra, al)?;
                p.sym(')')?;
                let mut def = RingDef { space, algebra, mode: None, side: None, pins: Pins::default() };
                loop {
                    if p.at_word("mode") {
                        p.pos += 1;
                        let (m, l) = p.word("`ring` or `mult`")?;
                        def.mode = Some(match m.as_str() {
                            "ring" => Mode::Ring,
                            "mult" => Mode::Multiplicative,
                            _ => return Err(ParseError::Syntax { loc: l, msg: format!("expected `ring` or `mult`, found `{m}`") }),
                        });
                    } else if p.at_word("side") {
                        p.pos += 1;
                        let (s, l) = p.word("`left`, `right` or `two-sided`")?;
                        def.side = Some(match s.as_str() {
                            "left" => Side::Left,
                            "right" => Side::Right,
                            "two-sided" => Side::TwoSided,
                            _ => return Err(ParseError::Syntax { loc: l, msg: format!("expected a side, found `{s}`") }),
                        });
                    } else if p.at_word("pin") {
                        p.pos += 1;
                        let (which, l) = p.word("`J`, `U1` or `U`")?;
                        let set = p.set()?;
                        match which.as_str() {
                            "J" => def.pins.j_vanishing = Some(set),
                            "U1" => def.pins.u1 = Some(set),
                            "U" => def.pins.u = Some(set),
                            _ => return Err(ParseError::Syntax { loc: l, msg: format!("unknown pin `{which}`") }),
                        }
                    } else {
                        break;
                    }
                }
                spec.rings.push((name.clone(), def));
                spec.bind(&name).map_err(|msg| ParseError::Invalid { loc: kl, msg })?;
            }
            "analyze" | "ideals" => {
                let (ring, rl) = p.name("ring name")?;
                known(&rings, "ring", &ring, rl)?;
                spec.directives.push(if kw == "analyze" { Directive::Analyze(ring) } else { Directive::Ideals(ring) });
            }
            "check" => {
                let (ring, rl) = p.name("ring name")?;
                known(&rings, "ring", &ring, rl)?;
                let mut ids = Vec::new();
                while let Some(Tok::Word(w)) = p.peek() {
                    if KEYWORDS.contains(&w.as_str()) {
                        break;
                    }
                    ids.push(w.clone());
                    p.pos += 1;
                }
                if ids.is_empty() {
                    return p.err("expected at least one checker id");
                }
                spec.directives.push(Directive::Check { ring, ids });
            }
            "generate" => {
                let (n, _) = p.int("a prime count")?;
                let (algebra, al) = p.name("algebra name")?;
                known(&algebras, "algebra", &algebra, al)?;
                spec.directives.push(Directive::Generate { primes: n as usize, algebra });
            }
            "fuzz" => {
                let (seed, _) = p.int("a seed")?;
                let (instances, _) = p.int("an instance count")?;
                spec.directives.push(Directive::Fuzz { seed, instances: instances as usize });
            }
            other => return Err(ParseError::Syntax { loc: kl, msg: format!("expected a statement, found `{other}`") }),
        }
    }
    Ok(spec)
}

fn show_set(s: PointSet) -> String {
    let pts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    if pts.is_empty() {
        "{}".into()
    } else {
        format!("{{ {} }}", pts.join(" "))
    }
}

fn show_table(rows: &[Vec<usize>]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| format!("{{ {} }}", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    format!("{{ {} }}", body.join(" "))
}

/// Canonical text: one statement per line, definitions before directives.
pub fn render_spec(spec: &SpecFile) -> String {
    let mut out = String::new();
    for (name, d) in &spec.spaces {
        let body = match d {
            SpaceDef::Discrete(n) => format!("discrete {n}"),
            SpaceDef::Seq => "seq".into(),
            SpaceDef::Opens { sets, autoclose } => {
                let sets: Vec<String> = sets.iter().map(|&s| show_set(s)).collect();
                format!("opens {}{{ {} }}", if *autoclose { "autoclose " } else { "" }, sets.join(" "))
            }
        };
        out += &format!("space {name} {body}\n");
    }
    for (name, d) in &spec.algebras {
        let body = match d {
            AlgebraDef::Zmod(n) => format!("zmod {n}"),
            AlgebraDef::Table { mul, add, zero } => {
                let mut s = format!("table {} {}", mul.len(), show_table(mul));
                if let Some(a) = add {
                    s += &format!(" add {}", show_table(a));
                }
                if *zero != 0 {
                    s += &format!(" zero {zero}");
                }
                s
            }
        };
        out += &format!("algebra {name} {body}\n");
    }
    for (name, r) in &spec.rings {
        out += &format!("ring {name} = C({}, {})", r.space, r.algebra);
        if let Some(m) = r.mode {
            out += if m == Mode::Ring { " mode ring" } else { " mode mult" };
        }
        if let Some(s) = r.side {
            out += &format!(" side {s}");
        }
        for (tag, pin) in [("J", r.pins.j_vanishing), ("U1", r.pins.u1), ("U", r.pins.u)] {
            if let Some(s) = pin {
                out += &format!(" pin {tag} {}", show_set(s));
            }
        }
        out.push('\n');
    }
    for d in &spec.directives {
        let line = match d {
            Directive::Analyze(r) => format!("analyze {r}"),
            Directive::Ideals(r) => format!("ideals {r}"),
            Directive::Check { ring, ids } => format!("check {ring} {}", ids.join(" ")),
            Directive::Generate { primes, algebra } => format!("generate {primes} {algebra}"),
            Directive::Fuzz { seed, instances } => format!("fuzz {seed} {instances}"),
        };
        out += &line;
        out.push('\n');
    }
    out
}

/// `zmod:N` on the command line, or a name defined in the spec.
pub fn algebra_arg(arg: &str, spec: Option<&SpecFile>) -> Result<AlgebraTable, String> {
    if let Some(n) = arg.strip_prefix("zmod:") {
        let n: usize = n.parse().map_err(|_| format!("bad modulus in `{arg}`"))?;
        if !(2..=MAX_CARRIER).contains(&n) {
            return Err(format!("modulus {n} outside 2..={MAX_CARRIER}"));
        }
        return Ok(make_zmod(n));
    }
    spec.and_then(|s| s.algebra(arg))
        .ok_or_else(|| format!("unknown algebra `{arg}` (use zmod:N or a name from the spec file)"))?
        .build(arg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_ring() {
        let s = parse_spec("space Z discrete 3\nalgebra Y zmod 2\nring R = C(Z, Y)").unwrap();
        assert_eq!(s.rings.len(), 1);
        let b = s.bind("R").unwrap();
        assert_eq!(b.config.mode, Mode::Ring);
    }

    #[test]
    fn sierpinski_from_opens() {
        let s = parse_spec("space Z opens { {} {0} {0 1} }").unwrap();
        let Space::Explicit(x) = s.space("Z").unwrap().build().unwrap() else { panic!() };
        assert_eq!(x, ExplicitSpace::sierpinski());
    }

    #[test]
    fn unknown_reference() {
        let e = parse_spec("space Z discrete 2\nring R = C(Z, W)").unwrap_err();
        assert!(matches!(e, ParseError::UnknownReference { ref name, loc, .. } if name == "W" && loc.line == 2));
    }

    #[test]
    fn duplicate_name() {
        let e = parse_spec("algebra Y zmod 2 algebra Y zmod 3").unwrap_err();
        assert!(matches!(e, ParseError::DuplicateName { .. }));
    }

    #[test]
    fn syntax_location() {
        let e = parse_spec("space Z\n  discrete x").unwrap_err();
        assert_eq!(e, ParseError::Syntax { loc: Loc { line: 2, col: 12 }, msg: "expected a point count, found `x`".into() });
    }

    #[test]
    fn not_a_topology() {
        assert!(matches!(parse_spec("space Z opens { {} {0} {1} {0 1 2} }"), Err(ParseError::Invalid { .. })));
        assert!(parse_spec("space Z opens autoclose { {} {0} {1} {0 1 2} }").is_ok());
    }

    #[test]
    fn tables_and_directives() {
        let text = "# magma\nalgebra M table 2 { {0 0} {0 1} }\nspace S seq\nring R = C(S, M) mode mult side left\ncheck R T5 L59 all\ngenerate 2 M\nfuzz 7 10\n";
        let s = parse_spec(text).unwrap();
        assert_eq!(s.directives.len(), 3);
        assert_eq!(parse_spec(&render_spec(&s)).unwrap(), s);
    }

    #[test]
    fn pins_round_trip() {
        let s = parse_spec("space Z discrete 3 algebra Y zmod 2 ring R = C(Z,Y) pin J {0} pin U1 {0 1} pin U {1 2}").unwrap();
        assert_eq!(s.ring("R").unwrap().pins.u, Some(PointSet::from_bits(0b110)));
        assert_eq!(parse_spec(&render_spec(&s)).unwrap(), s);
    }

    #[test]
    fn ring_mode_needs_addition() {
        let e = parse_spec("space Z discrete 1 algebra M table 2 {0 0 0 1} ring R = C(Z, M) mode ring").unwrap_err();
        assert!(matches!(e, ParseError::Invalid { .. }));
    }
}
