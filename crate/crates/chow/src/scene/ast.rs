//! Scene AST. `Display` re-emits canonical text; parsing that text yields
//! the same AST (print/parse round-trip stability).

use crate::rational::{fmt_rat, Rat};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rat),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Neg(..) => 2,
            Expr::Mul(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(..) | Expr::Ident(..) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.prec();
        if p < min {
            write!(f, "(")?;
        }
        match self {
            Expr::Num(r) => write!(f, "{}", fmt_rat(r))?,
            Expr::Ident(s) => write!(f, "{s}")?,
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 3)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 3)?;
                write!(f, "*")?;
                b.fmt_prec(f, 4)?;
            }
            Expr::Pow(a, n) => {
                a.fmt_prec(f, 5)?;
                write!(f, "^{n}")?;
            }
        }
        if p < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenDecl {
    pub name: String,
    pub degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformCase {
    Expected,
    Excess,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AssertBody {
    Eq { lhs: Expr, rhs: Expr },
    Zero { expr: Expr },
    Dim { degree: usize, expected: usize },
    Hilbert { dims: Vec<usize> },
    MapOk { name: String },
    ProjForm { pull: String, push: String },
    PushPull { pull: String, push: String, n: Rat },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Assertion {
    pub body: AssertBody,
    /// Ring context; required for eq/zero/dim/hilbert.
    pub ring: Option<String>,
    pub label: Option<String>,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Ring {
        name: String,
        gens: Vec<GenDecl>,
        rels: Vec<Expr>,
        top: usize,
        line: usize,
    },
    Class {
        name: String,
        ring: String,
        expr: Expr,
        line: usize,
    },
    Quotient {
        name: String,
        of: String,
        by: Vec<Expr>,
        line: usize,
    },
    PBundle {
        name: String,
        base: String,
        rank: usize,
        chern: Vec<Expr>,
        hyperplane: String,
        line: usize,
    },
    Blowup {
        name: String,
        ambient: String,
        center: String,
        pullback: String,
        pushforward: String,
        normal: Vec<Expr>,
        exceptional: String,
        line: usize,
    },
    Present {
        model: String,
        ring_name: String,
        line: usize,
    },
    Strict {
        name: String,
        model: String,
        class_expr: Expr,
        cap: Option<Expr>,
        case: TransformCase,
        line: usize,
    },
    JPush {
        name: String,
        model: String,
        expr: Expr,
        line: usize,
    },
    Pullback {
        name: String,
        source: String,
        target: String,
        images: Vec<(String, Expr)>,
        line: usize,
    },
    Pushforward {
        name: String,
        source: String,
        target: String,
        shift: i64,
        via: Option<String>,
        entries: Vec<(Expr, Expr)>,
        line: usize,
    },
    Fibration {
        name: String,
        total: String,
        base: String,
        pullback: String,
        pushforward: String,
        canonical: Expr,
        chern: Option<(Expr, Expr)>,
        line: usize,
    },
    FiberProd {
        name: String,
        a: String,
        b: String,
        base: String,
        pa: String,
        pb: String,
        proj_a: String,
        proj_b: String,
        push: Option<(String, String)>,
        line: usize,
    },
    Adjoin {
        class_name: String,
        ring: String,
        degree: usize,
        new_ring: String,
        rels: Vec<Expr>,
        extend: Option<(String, String, Vec<(Expr, Expr)>)>,
        line: usize,
    },
    Kappa {
        name: String,
        fibration: String,
        a: i64,
        b: i64,
        c: i64,
        line: usize,
    },
    Grr {
        fibration: String,
        rank: i64,
        chern: Vec<Expr>,
        parts: Vec<String>,
        line: usize,
    },
    Assert(Assertion),
}

impl Item {
    pub fn line(&self) -> usize {
        match self {
            Item::Ring { line, .. }
            | Item::Class { line, .. }
            | Item::Quotient { line, .. }
            | Item::PBundle { line, .. }
            | Item::Blowup { line, .. }
            | Item::Present { line, .. }
            | Item::Strict { line, .. }
            | Item::JPush { line, .. }
            | Item::Pullback { line, .. }
            | Item::Pushforward { line, .. }
            | Item::Fibration { line, .. }
            | Item::FiberProd { line, .. }
            | Item::Adjoin { line, .. }
            | Item::Kappa { line, .. }
            | Item::Grr { line, .. } => *line,
            Item::Assert(a) => a.line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub items: Vec<Item>,
}

fn join_exprs(es: &[Expr]) -> String {
    es.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Scene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            match item {
                Item::Ring {
                    name,
                    gens,
                    rels,
                    top,
                    ..
                } => {
                    let g = gens
                        .iter()
                        .map(|g| format!("{}:{}", g.name, g.degree))
                        .collect::<Vec<_>>()
                        .join(", ");
                    writeln!(
                        f,
                        "ring {name} {{ gens: {g}; rels: {}; top: {top} }}",
                        join_exprs(rels)
                    )?;
                }
                Item::Class { name, ring, expr, .. } => {
                    writeln!(f, "class {name} in {ring} := {expr}")?;
                }
                Item::Quotient { name, of, by, .. } => {
                    writeln!(f, "quotient {name} of {of} by ( {} )", join_exprs(by))?;
                }
                Item::PBundle {
                    name,
                    base,
                    rank,
                    chern,
                    hyperplane,
                    ..
                } => {
                    writeln!(
                        f,
                        "pbundle {name} over {base} rank {rank} chern ( {} ) hyperplane {hyperplane}",
                        join_exprs(chern)
                    )?;
                }
                Item::Blowup {
                    name,
                    ambient,
                    center,
                    pullback,
                    pushforward,
                    normal,
                    exceptional,
                    ..
                } => {
                    writeln!(
                        f,
                        "blowup {name} ambient {ambient} center {center} pullback {pullback} pushforward {pushforward} normal ( {} ) exceptional {exceptional}",
                        join_exprs(normal)
                    )?;
                }
                Item::Present { model, ring_name, .. } => {
                    writeln!(f, "present {model} as {ring_name}")?;
                }
                Item::Strict {
                    name,
                    model,
                    class_expr,
                    cap,
                    case,
                    ..
                } => {
                    write!(f, "strict {name} in {model} : {class_expr}")?;
                    if let Some(c) = cap {
                        write!(f, " cap {c}")?;
                    }
                    let cs = match case {
                        TransformCase::Expected => "expected",
                        TransformCase::Excess => "excess",
                    };
                    writeln!(f, " case {cs}")?;
                }
                Item::JPush { name, model, expr, .. } => {
                    writeln!(f, "jpush {name} in {model} : {expr}")?;
                }
                Item::Pullback {
                    name,
                    source,
                    target,
                    images,
                    ..
                } => {
                    writeln!(f, "pullback {name} : {source} -> {target} {{")?;
                    for (g, e) in images {
                        writeln!(f, "  {g} => {e};")?;
                    }
                    writeln!(f, "}}")?;
                }
                Item::Pushforward {
                    name,
                    source,
                    target,
                    shift,
                    via,
                    entries,
                    ..
                } => {
                    write!(f, "pushforward {name} : {source} -> {target} shift {shift}")?;
                    if let Some(v) = via {
                        write!(f, " via {v}")?;
                    }
                    writeln!(f, " {{")?;
                    for (l, r) in entries {
                        writeln!(f, "  {l} => {r};")?;
                    }
                    writeln!(f, "}}")?;
                }
                Item::Fibration {
                    name,
                    total,
                    base,
                    pullback,
                    pushforward,
                    canonical,
                    chern,
                    ..
                } => {
                    write!(
                        f,
                        "fibration {name} total {total} base {base} pullback {pullback} pushforward {pushforward} K {canonical}"
                    )?;
                    if let Some((c1, c2)) = chern {
                        write!(f, " c1 {c1} c2 {c2}")?;
                    }
                    writeln!(f)?;
                }
                Item::FiberProd {
                    name,
                    a,
                    b,
                    base,
                    pa,
                    pb,
                    proj_a,
                    proj_b,
                    push,
                    ..
                } => {
                    write!(
                        f,
                        "fiberprod {name} of {a} {b} over {base} maps {pa} {pb} projections {proj_a} {proj_b}"
                    )?;
                    if let Some((new, from)) = push {
                        write!(f, " pushforward {new} from {from}")?;
                    }
                    writeln!(f)?;
                }
                Item::Adjoin {
                    class_name,
                    ring,
                    degree,
                    new_ring,
                    rels,
                    extend,
                    ..
                } => {
                    write!(f, "adjoin {class_name} to {ring} degree {degree} as {new_ring}")?;
                    if !rels.is_empty() {
                        write!(f, " rels ( {} )", join_exprs(rels))?;
                    }
                    if let Some((push, new_push, entries)) = extend {
                        writeln!(f, " extend {push} as {new_push} {{")?;
                        for (l, r) in entries {
                            writeln!(f, "  {l} => {r};")?;
                        }
                        writeln!(f, "}}")?;
                    } else {
                        writeln!(f)?;
                    }
                }
                Item::Kappa {
                    name,
                    fibration,
                    a,
                    b,
                    c,
                    ..
                } => {
                    writeln!(f, "kappa {name} from {fibration} ( {a}, {b}, {c} )")?;
                }
                Item::Grr {
                    fibration,
                    rank,
                    chern,
                    parts,
                    ..
                } => {
                    writeln!(
                        f,
                        "grr {fibration} rank {rank} chern ( {} ) parts ( {} )",
                        join_exprs(chern),
                        parts.join(", ")
                    )?;
                }
                Item::Assert(a) => {
                    write!(f, "assert ")?;
                    let kind = match &a.body {
                        AssertBody::Eq { .. } => "eq",
                        AssertBody::Zero { .. } => "zero",
                        AssertBody::Dim { .. } => "dim",
                        AssertBody::Hilbert { .. } => "hilbert",
                        AssertBody::MapOk { .. } => "mapok",
                        AssertBody::ProjForm { .. } => "projform",
                        AssertBody::PushPull { .. } => "pushpull",
                    };
                    write!(f, "{kind}")?;
                    if let Some(r) = &a.ring {
                        write!(f, " in {r}")?;
                    }
                    write!(f, " : ")?;
                    match &a.body {
                        AssertBody::Eq { lhs, rhs } => write!(f, "{lhs} == {rhs}")?,
                        AssertBody::Zero { expr } => write!(f, "{expr}")?,
                        AssertBody::Dim { degree, expected } => {
                            write!(f, "{degree} == {expected}")?
                        }
                        AssertBody::Hilbert { dims } => {
                            let d = dims
                                .iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(", ");
                            write!(f, "( {d} )")?;
                        }
                        AssertBody::MapOk { name } => write!(f, "{name}")?,
                        AssertBody::ProjForm { pull, push } => write!(f, "{pull} {push}")?,
                        AssertBody::PushPull { pull, push, n } => {
                            write!(f, "{pull} {push} {}", fmt_rat(n))?
                        }
                    }
                    if let Some(l) = &a.label {
                        write!(f, " label \"{l}\"")?;
                    }
                    writeln!(f)?;
                }
            }
        }
        Ok(())
    }
}
