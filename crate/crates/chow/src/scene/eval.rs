//! Scene execution: declarations run in order against the algebra modules;
//! assertions never abort the run and each yields an independent report
//! entry. A failed declaration poisons its name, and anything referencing
//! it reports an error entry; invalid pullbacks and pushforwards stay
//! probeable through `assert mapok`.

use super::ast::*;
use super::report::{AssertOutcome, Report, ReportEntry};
use crate::blowup::{BlowupModel, TransformCase as BTCase};
use crate::bundle::{projective_bundle, BundleData};
use crate::chern::{chern_to_character, grr_push, kappa, FibrationData};
use crate::error::{EngineError, Result as EResult};
use crate::morphism::{
    check_projection_formula, verify_finite_cover, GradedLinearMap, RingMorphism,
};
use crate::product::{adjoin_class, extend_pushforward, fiber_product_over_base};
use crate::rational::Rat;
use crate::ring::{GeneratorSpec, PresentedRing, RawElement, RingElement};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone)]
enum Slot {
    Ring(Arc<PresentedRing>),
    Pullback(Arc<RingMorphism>),
    Pushforward(Arc<GradedLinearMap>),
    Fibration(Arc<FibrationData>),
    Model(Arc<BlowupModel>),
    /// Declaration failed; the message explains why.
    Failed(String),
}

#[derive(Clone, Debug, Default)]
pub struct EvalOptions {
    /// Used in report locations (`file:line`).
    pub file_name: String,
}

struct Env {
    file: String,
    slots: HashMap<String, Slot>,
    /// ring id -> class name -> value.
    classes: HashMap<u64, HashMap<String, RingElement>>,
    /// model name -> presented ring name.
    model_ring: HashMap<String, String>,
    entries: Vec<ReportEntry>,
}

impl Env {
    fn loc(&self, line: usize) -> String {
        format!("{}:{line}", self.file)
    }

    fn decl_error(&mut self, what: &str, name: &str, line: usize, msg: String) {
        self.entries.push(ReportEntry {
            label: format!("decl {what} {name}"),
            status: AssertOutcome::Error,
            witness: Some(msg),
            location: self.loc(line),
        });
        self.slots.insert(name.to_string(), Slot::Failed(format!(
            "declaration of `{name}` failed earlier"
        )));
    }

    fn declare(&mut self, what: &str, name: &str, line: usize, slot: Slot) {
        if self.slots.contains_key(name) {
            self.decl_error(what, name, line, format!("name `{name}` already declared"));
            return;
        }
        self.slots.insert(name.to_string(), slot);
    }

    fn ring(&self, name: &str) -> Result<Arc<PresentedRing>, String> {
        match self.slots.get(name) {
            Some(Slot::Ring(r)) => Ok(r.clone()),
            Some(Slot::Failed(m)) => Err(m.clone()),
            Some(_) => Err(format!("`{name}` is not a ring")),
            None => Err(format!("unknown ring `{name}`")),
        }
    }

    fn pullback(&self, name: &str) -> Result<Arc<RingMorphism>, String> {
        match self.slots.get(name) {
            Some(Slot::Pullback(m)) => Ok(m.clone()),
            Some(Slot::Failed(m)) => Err(m.clone()),
            Some(_) => Err(format!("`{name}` is not a pullback")),
            None => Err(format!("unknown pullback `{name}`")),
        }
    }

    fn pushforward(&self, name: &str) -> Result<Arc<GradedLinearMap>, String> {
        match self.slots.get(name) {
            Some(Slot::Pushforward(m)) => Ok(m.clone()),
            Some(Slot::Failed(m)) => Err(m.clone()),
            Some(_) => Err(format!("`{name}` is not a pushforward")),
            None => Err(format!("unknown pushforward `{name}`")),
        }
    }

    fn fibration(&self, name: &str) -> Result<Arc<FibrationData>, String> {
        match self.slots.get(name) {
            Some(Slot::Fibration(f)) => Ok(f.clone()),
            Some(Slot::Failed(m)) => Err(m.clone()),
            Some(_) => Err(format!("`{name}` is not a fibration")),
            None => Err(format!("unknown fibration `{name}`")),
        }
    }

    fn model(&self, name: &str) -> Result<Arc<BlowupModel>, String> {
        match self.slots.get(name) {
            Some(Slot::Model(m)) => Ok(m.clone()),
            Some(Slot::Failed(m)) => Err(m.clone()),
            Some(_) => Err(format!("`{name}` is not a blowup model")),
            None => Err(format!("unknown model `{name}`")),
        }
    }

    fn class_env(&self, ring: &PresentedRing) -> HashMap<String, RingElement> {
        self.classes.get(&ring.id()).cloned().unwrap_or_default()
    }

    fn add_class(&mut self, ring: &PresentedRing, name: &str, value: RingElement) {
        self.classes
            .entry(ring.id())
            .or_default()
            .insert(name.to_string(), value);
    }

    fn eval_in(&self, ring: &PresentedRing, expr: &Expr) -> EResult<RingElement> {
        eval_expr(expr, ring, &self.class_env(ring))
    }
}

/// Evaluate an expression against a ring: identifiers resolve to generators
/// first, then to declared classes of that ring.
pub fn eval_expr(
    expr: &Expr,
    ring: &PresentedRing,
    classes: &HashMap<String, RingElement>,
) -> EResult<RingElement> {
    match expr {
        Expr::Num(r) => Ok(ring.constant(r.clone())),
        Expr::Ident(name) => {
            if ring.gen_index(name).is_ok() {
                ring.gen_elem(name)
            } else if let Some(v) = classes.get(name) {
                Ok(v.clone())
            } else {
                Err(EngineError::UnknownGenerator(name.clone()))
            }
        }
        Expr::Neg(e) => Ok(ring.neg(&eval_expr(e, ring, classes)?)),
        Expr::Add(a, b) => ring.add(&eval_expr(a, ring, classes)?, &eval_expr(b, ring, classes)?),
        Expr::Sub(a, b) => ring.sub(&eval_expr(a, ring, classes)?, &eval_expr(b, ring, classes)?),
        Expr::Mul(a, b) => ring.mul(&eval_expr(a, ring, classes)?, &eval_expr(b, ring, classes)?),
        Expr::Pow(a, n) => ring.pow(&eval_expr(a, ring, classes)?, *n),
    }
}

/// Evaluate relation expressions over a free shadow of the declared
/// generators (relations cannot reference classes) and return raw terms.
fn raw_relations(gens: &[GeneratorSpec], top: usize, rels: &[Expr]) -> EResult<Vec<RawElement>> {
    // The shadow ring is free and truncated high enough that the relation
    // expressions survive expansion verbatim.
    let max_deg = top.max(16);
    let free = PresentedRing::new(gens.to_vec(), vec![], max_deg)?;
    let mut out = Vec::new();
    for r in rels {
        let v = eval_expr(r, &free, &HashMap::new())?;
        out.push(
            v.terms
                .iter()
                .map(|(m, c)| (m.0.clone(), c.clone()))
                .collect(),
        );
    }
    Ok(out)
}

/// Ring/class view of an evaluated scene, for the CLI inspectors.
pub struct SceneEnv {
    pub rings: Vec<(String, Arc<PresentedRing>)>,
    pub classes: HashMap<u64, HashMap<String, RingElement>>,
}

impl SceneEnv {
    pub fn ring(&self, name: &str) -> Option<Arc<PresentedRing>> {
        self.rings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r.clone())
    }

    pub fn classes_of(&self, ring: &PresentedRing) -> HashMap<String, RingElement> {
        self.classes.get(&ring.id()).cloned().unwrap_or_default()
    }
}

pub fn eval_scene(scene: &Scene, opts: &EvalOptions) -> Report {
    eval_scene_full(scene, opts).0
}

pub fn eval_scene_full(scene: &Scene, opts: &EvalOptions) -> (Report, SceneEnv) {
    let mut env = Env {
        file: if opts.file_name.is_empty() {
            "scene".to_string()
        } else {
            opts.file_name.clone()
        },
        slots: HashMap::new(),
        classes: HashMap::new(),
        model_ring: HashMap::new(),
        entries: Vec::new(),
    };
    for item in &scene.items {
        eval_item(&mut env, item);
    }
    let mut rings = Vec::new();
    for item in &scene.items {
        let name = match item {
            Item::Ring { name, .. }
            | Item::Quotient { name, .. }
            | Item::PBundle { name, .. }
            | Item::FiberProd { name, .. } => name,
            Item::Present { ring_name, .. } => ring_name,
            Item::Adjoin { new_ring, .. } => new_ring,
            _ => continue,
        };
        if let Some(Slot::Ring(r)) = env.slots.get(name) {
            rings.push((name.clone(), r.clone()));
        }
    }
    (
        Report::new(env.entries),
        SceneEnv {
            rings,
            classes: env.classes,
        },
    )
}

fn eval_item(env: &mut Env, item: &Item) {
    match item {
        Item::Assert(a) => eval_assert(env, a),
        _ => {
            if let Err((what, name, line, msg)) = eval_decl(env, item) {
                env.decl_error(&what, &name, line, msg);
            }
        }
    }
}

type DeclErr = (String, String, usize, String);

fn eval_decl(env: &mut Env, item: &Item) -> Result<(), DeclErr> {
    match item {
        Item::Ring {
            name,
            gens,
            rels,
            top,
            line,
        } => {
            let fail = |m: String| ("ring".to_string(), name.clone(), *line, m);
            let specs: Vec<GeneratorSpec> = gens
                .iter()
                .map(|g| GeneratorSpec::new(&g.name, g.degree))
                .collect();
            let raw = raw_relations(&specs, *top, rels).map_err(|e| fail(e.to_string()))?;
            let ring = PresentedRing::new(specs, raw, *top).map_err(|e| fail(e.to_string()))?;
            env.declare("ring", name, *line, Slot::Ring(Arc::new(ring)));
            Ok(())
        }
        Item::Class {
            name,
            ring,
            expr,
            line,
        } => {
            let fail = |m: String| ("class".to_string(), name.clone(), *line, m);
            let r = env.ring(ring).map_err(fail)?;
            if env.class_env(&r).contains_key(name) || r.gen_index(name).is_ok() {
                return Err(fail(format!("name `{name}` already in use in `{ring}`")));
            }
            let v = env.eval_in(&r, expr).map_err(|e| fail(e.to_string()))?;
            env.add_class(&r, name, v);
            Ok(())
        }
        Item::Quotient { name, of, by, line } => {
            let fail = |m: String| ("quotient".to_string(), name.clone(), *line, m);
            let r = env.ring(of).map_err(fail)?;
            let ideal: Vec<RingElement> = by
                .iter()
                .map(|e| env.eval_in(&r, e))
                .collect::<EResult<_>>()
                .map_err(|e| fail(e.to_string()))?;
            let q = r
                .quotient_by_classes(&ideal)
                .map_err(|e| fail(e.to_string()))?;
            env.declare("quotient", name, *line, Slot::Ring(Arc::new(q)));
            Ok(())
        }
        Item::PBundle {
            name,
            base,
            rank,
            chern,
            hyperplane,
            line,
        } => {
            let fail = |m: String| ("pbundle".to_string(), name.clone(), *line, m);
            let b = env.ring(base).map_err(fail)?;
            let cs: Vec<RingElement> = chern
                .iter()
                .map(|e| env.eval_in(&b, e))
                .collect::<EResult<_>>()
                .map_err(|e| fail(e.to_string()))?;
            let data = BundleData::new(&b, *rank, cs).map_err(|e| fail(e.to_string()))?;
            let pb = projective_bundle(b, &data, hyperplane).map_err(|e| fail(e.to_string()))?;
            env.declare("pbundle", name, *line, Slot::Ring(pb.total.clone()));
            env.declare(
                "pullback",
                &format!("{name}_up"),
                *line,
                Slot::Pullback(pb.pullback.clone()),
            );
            env.declare(
                "pushforward",
                &format!("{name}_dn"),
                *line,
                Slot::Pushforward(pb.pushforward.clone()),
            );
            Ok(())
        }
        Item::Blowup {
            name,
            ambient,
            center,
            pullback,
            pushforward,
            normal,
            exceptional,
            line,
        } => {
            let fail = |m: String| ("blowup".to_string(), name.clone(), *line, m);
            let amb = env.ring(ambient).map_err(fail)?;
            let cen = env.ring(center).map_err(fail)?;
            let pull = env.pullback(pullback).map_err(fail)?;
            let push = env.pushforward(pushforward).map_err(fail)?;
            let cs: Vec<RingElement> = normal
                .iter()
                .map(|e| env.eval_in(&cen, e))
                .collect::<EResult<_>>()
                .map_err(|e| fail(e.to_string()))?;
            let data =
                BundleData::new(&cen, cs.len(), cs).map_err(|e| fail(e.to_string()))?;
            let model = BlowupModel::new(amb, cen, pull, push, data, exceptional)
                .map_err(|e| fail(e.to_string()))?;
            env.declare("blowup", name, *line, Slot::Model(Arc::new(model)));
            Ok(())
        }
        Item::Present {
            model,
            ring_name,
            line,
        } => {
            let fail = |m: String| ("present".to_string(), ring_name.clone(), *line, m);
            let m = env.model(model).map_err(fail)?;
            env.declare("present", ring_name, *line, Slot::Ring(m.presented.clone()));
            env.model_ring.insert(model.clone(), ring_name.clone());
            Ok(())
        }
        Item::Strict {
            name,
            model,
            class_expr,
            cap,
            case,
            line,
        } => {
            let fail = |m: String| ("strict".to_string(), name.clone(), *line, m);
            let m = env.model(model).map_err(fail)?;
            env.model_ring
                .get(model)
                .ok_or_else(|| fail(format!("model `{model}` has not been presented")))?;
            let v = env
                .eval_in(&m.ambient, class_expr)
                .map_err(|e| fail(e.to_string()))?;
            let cap_v = match cap {
                Some(c) => Some(env.eval_in(&m.center, c).map_err(|e| fail(e.to_string()))?),
                None => None,
            };
            let bt = match case {
                TransformCase::Expected => BTCase::ExpectedDim,
                TransformCase::Excess => BTCase::ExcessOne,
            };
            let coord = m
                .strict_transform(&v, cap_v.as_ref(), bt)
                .map_err(|e| fail(e.to_string()))?;
            let pres = m.to_presented(&coord).map_err(|e| fail(e.to_string()))?;
            env.add_class(&m.presented.clone(), name, pres);
            Ok(())
        }
        Item::JPush {
            name,
            model,
            expr,
            line,
        } => {
            let fail = |m: String| ("jpush".to_string(), name.clone(), *line, m);
            let m = env.model(model).map_err(fail)?;
            env.model_ring
                .get(model)
                .ok_or_else(|| fail(format!("model `{model}` has not been presented")))?;
            let x = env
                .eval_in(&m.center, expr)
                .map_err(|e| fail(e.to_string()))?;
            let coord = m.jstar_center(&x).map_err(|e| fail(e.to_string()))?;
            let pres = m.to_presented(&coord).map_err(|e| fail(e.to_string()))?;
            env.add_class(&m.presented.clone(), name, pres);
            Ok(())
        }
        Item::Pullback {
            name,
            source,
            target,
            images,
            line,
        } => {
            let fail = |m: String| ("pullback".to_string(), name.clone(), *line, m);
            let src = env.ring(source).map_err(fail)?;
            let tgt = env.ring(target).map_err(fail)?;
            let mut imgs = Vec::new();
            for (g, e) in images {
                let v = env.eval_in(&tgt, e).map_err(|e| fail(e.to_string()))?;
                imgs.push((g.clone(), v));
            }
            match RingMorphism::new(src, tgt, imgs) {
                Ok(m) => {
                    env.declare("pullback", name, *line, Slot::Pullback(Arc::new(m)));
                }
                Err(e) => {
                    // Stays probeable through `assert mapok`.
                    env.slots
                        .insert(name.clone(), Slot::Failed(e.to_string()));
                }
            }
            Ok(())
        }
        Item::Pushforward {
            name,
            source,
            target,
            shift,
            via,
            entries,
            line,
        } => {
            let fail = |m: String| ("pushforward".to_string(), name.clone(), *line, m);
            let src = env.ring(source).map_err(fail)?;
            let tgt = env.ring(target).map_err(fail)?;
            let via_m = match via {
                Some(v) => Some(env.pullback(v).map_err(fail)?),
                None => None,
            };
            let mut es = Vec::new();
            for (l, r) in entries {
                let lv = env.eval_in(&src, l).map_err(|e| fail(e.to_string()))?;
                let rv = env.eval_in(&tgt, r).map_err(|e| fail(e.to_string()))?;
                es.push((lv, rv));
            }
            match GradedLinearMap::from_entries(src, tgt, *shift, es, via_m.as_deref()) {
                Ok(m) => {
                    env.declare("pushforward", name, *line, Slot::Pushforward(Arc::new(m)));
                }
                Err(e) => {
                    env.slots
                        .insert(name.clone(), Slot::Failed(e.to_string()));
                }
            }
            Ok(())
        }
        Item::Fibration {
            name,
            total,
            base,
            pullback,
            pushforward,
            canonical,
            chern,
            line,
        } => {
            let fail = |m: String| ("fibration".to_string(), name.clone(), *line, m);
            let t = env.ring(total).map_err(fail)?;
            let b = env.ring(base).map_err(fail)?;
            let pull = env.pullback(pullback).map_err(fail)?;
            let push = env.pushforward(pushforward).map_err(fail)?;
            let k = env
                .eval_in(&t, canonical)
                .map_err(|e| fail(e.to_string()))?;
            let (c1, c2) = match chern {
                Some((a, b_)) => {
                    let c1 = env.eval_in(&t, a).map_err(|e| fail(e.to_string()))?;
                    let c2 = env.eval_in(&t, b_).map_err(|e| fail(e.to_string()))?;
                    (Some(c1), Some(c2))
                }
                None => (None, None),
            };
            let f = FibrationData::new(t, b, pull, push, k, c1, c2)
                .map_err(|e| fail(e.to_string()))?;
            env.declare("fibration", name, *line, Slot::Fibration(Arc::new(f)));
            Ok(())
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
            line,
        } => {
            let fail = |m: String| ("fiberprod".to_string(), name.clone(), *line, m);
            let ra = env.ring(a).map_err(fail)?;
            let rb = env.ring(b).map_err(fail)?;
            let rbase = env.ring(base).map_err(fail)?;
            let ma = env.pullback(pa).map_err(fail)?;
            let mb = env.pullback(pb).map_err(fail)?;
            let fp = fiber_product_over_base(&ra, &rb, &rbase, &ma, &mb)
                .map_err(|e| fail(e.to_string()))?;
            env.declare("fiberprod", name, *line, Slot::Ring(fp.ring.clone()));
            env.declare("pullback", proj_a, *line, Slot::Pullback(fp.inj_a.clone()));
            env.declare("pullback", proj_b, *line, Slot::Pullback(fp.inj_b.clone()));
            if let Some((new_name, from)) = push {
                let pi = env.pushforward(from).map_err(fail)?;
                let bc = fp
                    .base_change_pushforward(&pi, &mb)
                    .map_err(|e| fail(e.to_string()))?;
                env.declare("pushforward", new_name, *line, Slot::Pushforward(Arc::new(bc)));
            }
            Ok(())
        }
        Item::Adjoin {
            class_name,
            ring,
            degree,
            new_ring,
            rels,
            extend,
            line,
        } => {
            let fail = |m: String| ("adjoin".to_string(), new_ring.clone(), *line, m);
            let r = env.ring(ring).map_err(fail)?;
            let mut gens = r.generators().to_vec();
            gens.push(GeneratorSpec::new(class_name, *degree));
            let raw = raw_relations(&gens, r.top_degree(), rels)
                .map_err(|e| fail(e.to_string()))?;
            let ext = adjoin_class(&r, class_name, *degree, raw)
                .map_err(|e| fail(e.to_string()))?;
            env.declare("adjoin", new_ring, *line, Slot::Ring(ext.clone()));
            if let Some((push_name, new_push, entries)) = extend {
                let old = env.pushforward(push_name).map_err(fail)?;
                let mut es = Vec::new();
                for (l, rr) in entries {
                    let lv = env.eval_in(&ext, l).map_err(|e| fail(e.to_string()))?;
                    let rv = env
                        .eval_in(&old.target, rr)
                        .map_err(|e| fail(e.to_string()))?;
                    es.push((lv, rv));
                }
                // Canonical inclusion of the pushforward target into the
                // extended ring (name-based), used for projection-formula
                // completion when it exists.
                let via = make_name_inclusion(&old.target, &ext);
                let next = extend_pushforward(&old, &ext, es, via.as_ref())
                    .map_err(|e| fail(e.to_string()))?;
                env.declare("pushforward", new_push, *line, Slot::Pushforward(Arc::new(next)));
            }
            Ok(())
        }
        Item::Kappa {
            name,
            fibration,
            a,
            b,
            c,
            line,
        } => {
            let fail = |m: String| ("kappa".to_string(), name.clone(), *line, m);
            let f = env.fibration(fibration).map_err(fail)?;
            if *b < 0 || *c < 0 {
                return Err(fail("kappa indices b, c must be non-negative".into()));
            }
            let v = kappa(&f, *a, *b as u32, *c as u32).map_err(|e| fail(e.to_string()))?;
            env.add_class(&f.base.clone(), name, v);
            Ok(())
        }
        Item::Grr {
            fibration,
            rank,
            chern,
            parts,
            line,
        } => {
            let fail =
                |m: String| ("grr".to_string(), parts.join(","), *line, m);
            let f = env.fibration(fibration).map_err(fail)?;
            let total = f.total.clone();
            let cs: Vec<RingElement> = chern
                .iter()
                .map(|e| env.eval_in(&total, e))
                .collect::<EResult<_>>()
                .map_err(|e| fail(e.to_string()))?;
            let cutoff = total.top_degree().min(6);
            let ch = chern_to_character(&total, Rat::from_integer((*rank).into()), &cs, cutoff)
                .map_err(|e| fail(e.to_string()))?;
            let g = grr_push(&f, &ch).map_err(|e| fail(e.to_string()))?;
            if parts.len() > g.parts.len() {
                return Err(fail(format!(
                    "requested {} parts, computed {}",
                    parts.len(),
                    g.parts.len()
                )));
            }
            for (i, pname) in parts.iter().enumerate() {
                env.add_class(&f.base.clone(), pname, g.parts[i].clone());
            }
            Ok(())
        }
        Item::Assert(_) => unreachable!("asserts handled separately"),
    }
}

fn make_name_inclusion(
    from: &Arc<PresentedRing>,
    into: &Arc<PresentedRing>,
) -> Option<RingMorphism> {
    let mut images = Vec::new();
    for g in from.generators() {
        match into.gen_elem(&g.name) {
            Ok(e) => images.push((g.name.clone(), e)),
            Err(_) => return None,
        }
    }
    RingMorphism::new(from.clone(), into.clone(), images).ok()
}

fn eval_assert(env: &mut Env, a: &Assertion) {
    let label = a
        .label
        .clone()
        .unwrap_or_else(|| format!("{} at line {}", assert_kind_name(&a.body), a.line));
    let location = env.loc(a.line);
    let outcome = run_assert(env, a);
    let (status, witness) = match outcome {
        Ok(None) => (AssertOutcome::Pass, None),
        Ok(Some(w)) => (AssertOutcome::Fail, Some(w)),
        Err(m) => (AssertOutcome::Error, Some(m)),
    };
    env.entries.push(ReportEntry {
        label,
        status,
        witness,
        location,
    });
}

fn assert_kind_name(b: &AssertBody) -> &'static str {
    match b {
        AssertBody::Eq { .. } => "eq",
        AssertBody::Zero { .. } => "zero",
        AssertBody::Dim { .. } => "dim",
        AssertBody::Hilbert { .. } => "hilbert",
        AssertBody::MapOk { .. } => "mapok",
        AssertBody::ProjForm { .. } => "projform",
        AssertBody::PushPull { .. } => "pushpull",
    }
}

/// `Ok(None)` = pass, `Ok(Some(witness))` = fail, `Err(msg)` = error.
fn run_assert(env: &Env, a: &Assertion) -> Result<Option<String>, String> {
    let need_ring = |env: &Env| -> Result<Arc<PresentedRing>, String> {
        let name = a
            .ring
            .as_ref()
            .ok_or_else(|| "assertion needs a ring context (`in NAME`)".to_string())?;
        env.ring(name)
    };
    match &a.body {
        AssertBody::Eq { lhs, rhs } => {
            let r = need_ring(env)?;
            let lv = env.eval_in(&r, lhs).map_err(|e| e.to_string())?;
            let rv = env.eval_in(&r, rhs).map_err(|e| e.to_string())?;
            let diff = r.sub(&lv, &rv).map_err(|e| e.to_string())?;
            if diff.is_zero() {
                Ok(None)
            } else {
                Ok(Some(format!("difference = {}", r.fmt_element(&diff))))
            }
        }
        AssertBody::Zero { expr } => {
            let r = need_ring(env)?;
            let v = env.eval_in(&r, expr).map_err(|e| e.to_string())?;
            if v.is_zero() {
                Ok(None)
            } else {
                Ok(Some(format!("normal form = {}", r.fmt_element(&v))))
            }
        }
        AssertBody::Dim { degree, expected } => {
            let r = need_ring(env)?;
            if *degree > r.top_degree() {
                return Err(format!(
                    "degree {degree} beyond truncation {}",
                    r.top_degree()
                ));
            }
            let actual = r.basis(*degree).len();
            if actual == *expected {
                Ok(None)
            } else {
                Ok(Some(format!("dim = {actual}")))
            }
        }
        AssertBody::Hilbert { dims } => {
            let r = need_ring(env)?;
            let actual = r.hilbert_function();
            let n = actual.len().max(dims.len());
            let get = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
            for i in 0..n {
                if get(&actual, i) != get(dims, i) {
                    return Ok(Some(format!(
                        "hilbert = ({})",
                        actual
                            .iter()
                            .map(|d| d.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )));
                }
            }
            Ok(None)
        }
        AssertBody::MapOk { name } => match env.slots.get(name) {
            Some(Slot::Pullback(_)) | Some(Slot::Pushforward(_)) => Ok(None),
            Some(Slot::Failed(m)) => Ok(Some(m.clone())),
            Some(_) => Err(format!("`{name}` is not a morphism")),
            None => Err(format!("unknown morphism `{name}`")),
        },
        AssertBody::ProjForm { pull, push } => {
            let pl = env.pullback(pull)?;
            let ps = env.pushforward(push)?;
            let violations = check_projection_formula(&pl, &ps).map_err(|e| e.to_string())?;
            if violations.is_empty() {
                Ok(None)
            } else {
                let v = &violations[0];
                Ok(Some(format!(
                    "{} violations; first at {}: {} != {}",
                    violations.len(),
                    v.context,
                    v.lhs,
                    v.rhs
                )))
            }
        }
        AssertBody::PushPull { pull, push, n } => {
            let pl = env.pullback(pull)?;
            let ps = env.pushforward(push)?;
            let violations = verify_finite_cover(&pl, &ps, n).map_err(|e| e.to_string())?;
            if violations.is_empty() {
                Ok(None)
            } else {
                let v = &violations[0];
                Ok(Some(format!(
                    "{} violations; first at {}: {} != {}",
                    violations.len(),
                    v.context,
                    v.lhs,
                    v.rhs
                )))
            }
        }
    }
}

/// Light static resolution: every top-level name must be declared before
/// use, and never redeclared. Expression-level identifiers are resolved at
/// evaluation time instead (they may be generators or classes).
pub fn resolve_names(scene: &Scene) -> Result<(), super::parser::ParseError> {
    use std::collections::HashSet;
    let mut declared: HashSet<String> = HashSet::new();
    let err = |line: usize, msg: String| super::parser::ParseError {
        line,
        col: 0,
        message: msg,
    };
    for item in &scene.items {
        let line = item.line();
        let need = |names: &[&String]| -> Result<(), super::parser::ParseError> {
            for n in names {
                if !declared.contains(*n) {
                    return Err(err(line, format!("`{n}` used before declaration")));
                }
            }
            Ok(())
        };
        match item {
            Item::Ring { name, .. } => {
                declared.insert(name.clone());
            }
            Item::Class { ring, .. } => need(&[ring])?,
            Item::Quotient { name, of, .. } => {
                need(&[of])?;
                declared.insert(name.clone());
            }
            Item::PBundle { name, base, .. } => {
                need(&[base])?;
                declared.insert(name.clone());
                declared.insert(format!("{name}_up"));
                declared.insert(format!("{name}_dn"));
            }
            Item::Blowup {
                name,
                ambient,
                center,
                pullback,
                pushforward,
                ..
            } => {
                need(&[ambient, center, pullback, pushforward])?;
                declared.insert(name.clone());
            }
            Item::Present {
                model, ring_name, ..
            } => {
                need(&[model])?;
                declared.insert(ring_name.clone());
            }
            Item::Strict { model, .. } | Item::JPush { model, .. } => need(&[model])?,
            Item::Pullback {
                name,
                source,
                target,
                ..
            } => {
                need(&[source, target])?;
                declared.insert(name.clone());
            }
            Item::Pushforward {
                name,
                source,
                target,
                via,
                ..
            } => {
                need(&[source, target])?;
                if let Some(v) = via {
                    need(&[v])?;
                }
                declared.insert(name.clone());
            }
            Item::Fibration {
                name,
                total,
                base,
                pullback,
                pushforward,
                ..
            } => {
                need(&[total, base, pullback, pushforward])?;
                declared.insert(name.clone());
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
                need(&[a, b, base, pa, pb])?;
                if let Some((new, from)) = push {
                    need(&[from])?;
                    declared.insert(new.clone());
                }
                declared.insert(name.clone());
                declared.insert(proj_a.clone());
                declared.insert(proj_b.clone());
            }
            Item::Adjoin {
                ring,
                new_ring,
                extend,
                ..
            } => {
                need(&[ring])?;
                if let Some((push, new_push, _)) = extend {
                    need(&[push])?;
                    declared.insert(new_push.clone());
                }
                declared.insert(new_ring.clone());
            }
            Item::Kappa { fibration, .. } => need(&[fibration])?,
            Item::Grr { fibration, .. } => need(&[fibration])?,
            Item::Assert(a) => {
                if let Some(r) = &a.ring {
                    need(&[r])?;
                }
                match &a.body {
                    AssertBody::MapOk { name } => need(&[name])?,
                    AssertBody::ProjForm { pull, push }
                    | AssertBody::PushPull { pull, push, .. } => need(&[pull, push])?,
                    _ => {}
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse_scene;
    use super::*;

    fn run(src: &str) -> Report {
        let scene = parse_scene(src).unwrap();
        resolve_names(&scene).unwrap();
        eval_scene(&scene, &EvalOptions::default())
    }

    #[test]
    fn simple_ring_and_asserts() {
        let report = run(
            "ring J { gens: T:1; rels: T^3; top: 3 }\n\
             assert hilbert in J : ( 1, 1, 1, 0 )\n\
             assert zero in J : T^3\n\
             assert eq in J : (T + 1)*(T - 1) == T^2 - 1\n",
        );
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn failing_assert_has_witness() {
        let report = run(
            "ring P { gens: H:1, T:1; rels: T^3, H^4 + H^3*T + 1/2*H^2*T^2; top: 6 }\n\
             assert zero in P : H^3 label \"wrong claim\"\n",
        );
        assert_eq!(report.summary.fail, 1);
        let e = &report.assertions[0];
        assert_eq!(e.status, AssertOutcome::Fail);
        assert!(e.witness.as_deref().unwrap().contains("H^3"));
    }

    #[test]
    fn empty_scene_is_empty_report() {
        let report = run("");
        assert!(report.assertions.is_empty());
        assert!(report.all_pass());
    }

    #[test]
    fn inhomogeneous_relation_reports_error() {
        let report = run("ring bad { gens: x:1; rels: x + 1; top: 2 }");
        assert_eq!(report.summary.error, 1);
        assert!(report.assertions[0]
            .witness
            .as_deref()
            .unwrap()
            .contains("inhomogeneous")
            || report.assertions[0]
                .witness
                .as_deref()
                .unwrap()
                .contains("degree 0"));
    }

    #[test]
    fn bad_pullback_probeable_via_mapok() {
        let report = run(
            "ring A { gens: x:1; rels: x^2; top: 2 }\n\
             ring B { gens: y:1; rels: ; top: 2 }\n\
             pullback f : A -> B {\n  x => y;\n}\n\
             assert mapok : f label \"x^2 must die\"\n",
        );
        assert_eq!(report.summary.fail, 1);
        assert!(report.assertions[0]
            .witness
            .as_deref()
            .unwrap()
            .contains("x^2"));
    }

    #[test]
    fn assert_order_independence() {
        let base = "ring J { gens: T:1; rels: T^3; top: 3 }\n";
        let a1 = "assert zero in J : T^3 label \"a\"\n";
        let a2 = "assert eq in J : T*T == T^2 label \"b\"\n";
        let r1 = run(&format!("{base}{a1}{a2}"));
        let r2 = run(&format!("{base}{a2}{a1}"));
        let statuses = |r: &Report| {
            let mut v: Vec<(String, AssertOutcome)> = r
                .assertions
                .iter()
                .map(|e| (e.label.clone(), e.status))
                .collect();
            v.sort_by(|a, b| a.0.cmp(&b.0));
            v
        };
        assert_eq!(statuses(&r1), statuses(&r2));
    }

    #[test]
    fn use_before_declaration_rejected() {
        let scene = parse_scene("assert hilbert in X : ( 1 )").unwrap();
        assert!(resolve_names(&scene).is_err());
    }
}
