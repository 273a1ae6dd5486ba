//! Coordinate model of a blowup Chow ring.
//!
//! For a smooth center X inside Y of codimension d >= 2, classes on the
//! blowup decompose as
//!
//! ```text
//! A^q(Y~) = A^q(Y) (+) A^(q-1)(X) (+) ... (+) A^(q-1-c)(X),   c = d - 2,
//! ```
//!
//! and we store elements as tuples `(y; x_0, .., x_c)` meaning
//! `f^*y - sum_r j_*(z^r g^* x_r)`, where z is the relative hyperplane class
//! of the exceptional bundle P(N). The product is computed through the three
//! rules
//!
//! ```text
//! f^*a . f^*b   = f^*(ab)
//! f^*a . j_*t   = j_*(t . g^* i^* a)
//! j_*t  . j_*u  = -j_*(z t u)
//! ```
//!
//! with `z^(d-1)` insertions reduced through the normalization identity
//! `j_*(z^(d-1) g^*y) = f^*(i_* y) - j_*((gamma_(d-1) - z^(d-1)) g^*y)`,
//! `gamma_r = z^r + z^(r-1) g^*c_1(N) + ... + g^*c_r(N)`.
//!
//! The model is the source of truth; a presentation on `f^*` generators,
//! the exceptional divisor class, and `j_*` of low-degree center classes is
//! derived from it degree by degree and cross-checked against the model's
//! dimensions.

use crate::bundle::{projective_bundle, BundleData, ProjectiveBundleRing};
use crate::error::{EngineError, Result};
use crate::linalg::{kernel_basis, solve, RationalMatrix, SparseReducer};
use crate::morphism::{GradedLinearMap, RingMorphism};
use crate::rational::Rat;
use crate::ring::{GeneratorSpec, Monomial, PresentedRing, RawElement, RingElement};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Arc;

/// An element in decomposition coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordElem {
    /// Element of the ambient ring (the `f^*` part).
    pub ambient: RingElement,
    /// `exc[r]` over the center; the tuple means
    /// `f^* ambient - sum_r j_*(z^r g^* exc[r])`, r = 0..=d-2.
    pub exc: Vec<RingElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformCase {
    /// dim(V cap X) = dim V - d: the strict transform is the full pullback.
    ExpectedDim,
    /// dim(V cap X) = dim V - d + 1: one excess dimension,
    /// `[V~] = f^*V - j_* g^*(V cap X)`.
    ExcessOne,
}

/// What an emitted generator means in the model.
#[derive(Debug, Clone)]
enum EmittedGen {
    Ambient(usize),
    Exceptional,
    /// `j_*(g^* m)` for a center basis monomial `m`.
    JStar(Monomial),
}

pub struct BlowupModel {
    pub ambient: Arc<PresentedRing>,
    pub center: Arc<PresentedRing>,
    /// i^*: ambient -> center.
    pub center_pullback: Arc<RingMorphism>,
    /// i_*: center -> ambient, shift d.
    pub center_pushforward: Arc<GradedLinearMap>,
    pub normal: BundleData,
    /// P(N) over the center; relation z^d + c_1 z^(d-1) + ... + c_d = 0.
    pub exc_bundle: ProjectiveBundleRing,
    pub codim: usize,
    /// Derived presentation (generators: ambient via f^*, the exceptional
    /// divisor, and j_* of low-degree center basis monomials).
    pub presented: Arc<PresentedRing>,
    gen_meanings: Vec<EmittedGen>,
    exceptional_name: String,
    /// Per degree: model coordinates of the presented basis monomials,
    /// column-major (one column per basis monomial).
    basis_values: Vec<RationalMatrix>,
}

impl BlowupModel {
    pub fn new(
        ambient: Arc<PresentedRing>,
        center: Arc<PresentedRing>,
        center_pullback: Arc<RingMorphism>,
        center_pushforward: Arc<GradedLinearMap>,
        normal: BundleData,
        exceptional_name: &str,
    ) -> Result<Self> {
        let d = normal.rank;
        if d < 2 {
            return Err(EngineError::BadBlowup(
                "codimension (normal rank) must be >= 2".into(),
            ));
        }
        if center_pullback.source.id() != ambient.id()
            || center_pullback.target.id() != center.id()
        {
            return Err(EngineError::BadBlowup(
                "center pullback must map the ambient ring to the center".into(),
            ));
        }
        if center_pushforward.source.id() != center.id()
            || center_pushforward.target.id() != ambient.id()
        {
            return Err(EngineError::BadBlowup(
                "center pushforward must map the center to the ambient ring".into(),
            ));
        }
        if center_pushforward.shift != d as i64 {
            return Err(EngineError::BadBlowup(format!(
                "center pushforward shift {} != codimension {}",
                center_pushforward.shift, d
            )));
        }
        // The exceptional projective bundle P(N): with z = c_1(O(1)) the
        // defining relation is z^d + c_1(N) z^(d-1) + ... + c_d(N) = 0,
        // which is the bundle relation for the dual Chern data.
        let exc_bundle = projective_bundle(center.clone(), &normal.dual(&center), "zz_exc")?;

        let mut model = BlowupModel {
            ambient,
            center,
            center_pullback,
            center_pushforward,
            normal,
            exc_bundle,
            codim: d,
            presented: Arc::new(PresentedRing::new(vec![], vec![], 0)?),
            gen_meanings: Vec::new(),
            exceptional_name: exceptional_name.to_string(),
            basis_values: Vec::new(),
        };
        model.emit_presentation()?;
        Ok(model)
    }

    pub fn zero(&self) -> CoordElem {
        CoordElem {
            ambient: self.ambient.zero(),
            exc: vec![self.center.zero(); self.codim - 1],
        }
    }

    /// f^*: lift an ambient class.
    pub fn lift(&self, y: &RingElement) -> Result<CoordElem> {
        let mut z = self.zero();
        z.ambient = self.ambient.normal_form(y)?;
        Ok(z)
    }

    pub fn add(&self, a: &CoordElem, b: &CoordElem) -> Result<CoordElem> {
        Ok(CoordElem {
            ambient: self.ambient.add(&a.ambient, &b.ambient)?,
            exc: a
                .exc
                .iter()
                .zip(&b.exc)
                .map(|(x, y)| self.center.add(x, y))
                .collect::<Result<_>>()?,
        })
    }

    pub fn sub(&self, a: &CoordElem, b: &CoordElem) -> Result<CoordElem> {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &CoordElem) -> CoordElem {
        CoordElem {
            ambient: self.ambient.neg(&a.ambient),
            exc: a.exc.iter().map(|x| self.center.neg(x)).collect(),
        }
    }

    pub fn scale(&self, a: &CoordElem, k: &Rat) -> CoordElem {
        CoordElem {
            ambient: self.ambient.scale(&a.ambient, k),
            exc: a.exc.iter().map(|x| self.center.scale(x, k)).collect(),
        }
    }

    /// Split an exceptional-bundle element into its z-coordinates over the
    /// center: `t = sum_i z^i g^*(u_i)`.
    fn z_parts(&self, t: &RingElement) -> Result<Vec<RingElement>> {
        let total = &self.exc_bundle.total;
        let t = total.normal_form(t)?;
        let mut parts = vec![self.center.zero(); self.codim];
        for (m, c) in &t.terms {
            let z = m.0[0] as usize;
            let center_mono = Monomial(m.0[1..].to_vec());
            let piece = self
                .center
                .from_terms(vec![(center_mono, c.clone())]);
            parts[z] = self.center.add(&parts[z], &piece)?;
        }
        Ok(parts)
    }

    /// j_*: insert an exceptional-bundle class, reducing the top
    /// z-coordinate through the normalization identity.
    pub fn jstar(&self, t: &RingElement) -> Result<CoordElem> {
        let d = self.codim;
        let parts = self.z_parts(t)?;
        let mut out = self.zero();
        // r <= d-2 slots carry -u_r directly.
        for r in 0..=(d - 2) {
            out.exc[r] = self.center.neg(&parts[r]);
        }
        // j_*(z^(d-1) g^* u) = f^*(i_* u) - sum_k j_*(z^(d-1-k) g^*(c_k u)).
        let u = &parts[d - 1];
        if !u.is_zero() {
            let pushed = self.center_pushforward.apply(u)?;
            out.ambient = self.ambient.add(&out.ambient, &pushed)?;
            for k in 1..=(d - 1) {
                let ck = &self.normal.chern[k - 1];
                let cu = self.center.mul(ck, u)?;
                out.exc[d - 1 - k] = self.center.add(&out.exc[d - 1 - k], &cu)?;
            }
        }
        Ok(out)
    }

    /// `j_*(g^* x)` for a center class x.
    pub fn jstar_center(&self, x: &RingElement) -> Result<CoordElem> {
        let g = self.exc_bundle.pullback.apply(x)?;
        self.jstar(&g)
    }

    /// The exceptional divisor class `E = j_*(1)`.
    pub fn exceptional_class(&self) -> Result<CoordElem> {
        self.jstar(&self.exc_bundle.total.one())
    }

    /// The element of A(P(N)) encoded by the tuple's exceptional slots:
    /// `t = sum_r z^r g^* exc[r]`.
    fn tuple_exc_elem(&self, a: &CoordElem) -> Result<RingElement> {
        let total = &self.exc_bundle.total;
        let z = total.gen_elem("zz_exc")?;
        let mut t = total.zero();
        for (r, x) in a.exc.iter().enumerate() {
            let gx = self.exc_bundle.pullback.apply(x)?;
            let zp = total.pow(&z, r as u32)?;
            t = total.add(&t, &total.mul(&zp, &gx)?)?;
        }
        Ok(t)
    }

    pub fn mul(&self, a: &CoordElem, b: &CoordElem) -> Result<CoordElem> {
        let total = &self.exc_bundle.total;
        let ta = self.tuple_exc_elem(a)?;
        let tb = self.tuple_exc_elem(b)?;
        let gia = self
            .exc_bundle
            .pullback
            .apply(&self.center_pullback.apply(&a.ambient)?)?;
        let gib = self
            .exc_bundle
            .pullback
            .apply(&self.center_pullback.apply(&b.ambient)?)?;
        let z = total.gen_elem("zz_exc")?;
        // s = t_b g^*i^*a + t_a g^*i^*b + z t_a t_b; value = f^*(ab) - j_*(s).
        let mut s = total.mul(&tb, &gia)?;
        s = total.add(&s, &total.mul(&ta, &gib)?)?;
        s = total.add(&s, &total.mul(&z, &total.mul(&ta, &tb)?)?)?;
        let ab = self.ambient.mul(&a.ambient, &b.ambient)?;
        let js = self.jstar(&s)?;
        self.sub(&self.lift(&ab)?, &js)
    }

    pub fn pow(&self, a: &CoordElem, n: u32) -> Result<CoordElem> {
        let mut out = self.lift(&self.ambient.one())?;
        for _ in 0..n {
            out = self.mul(&out, a)?;
        }
        Ok(out)
    }

    /// f_*: projection to the ambient coordinate.
    pub fn push_down(&self, a: &CoordElem) -> RingElement {
        a.ambient.clone()
    }

    /// j^*: restriction to the exceptional bundle.
    pub fn j_restrict(&self, a: &CoordElem) -> Result<RingElement> {
        let total = &self.exc_bundle.total;
        let gia = self
            .exc_bundle
            .pullback
            .apply(&self.center_pullback.apply(&a.ambient)?)?;
        let t = self.tuple_exc_elem(a)?;
        let z = total.gen_elem("zz_exc")?;
        total.add(&gia, &total.mul(&z, &t)?)
    }

    /// gamma_r = z^r + z^(r-1) g^*c_1 + ... + g^*c_r in A(P(N)).
    fn gamma(&self, r: usize) -> Result<RingElement> {
        let total = &self.exc_bundle.total;
        let z = total.gen_elem("zz_exc")?;
        let mut out = total.pow(&z, r as u32)?;
        for k in 1..=r {
            let ck = self.exc_bundle.pullback.apply(&self.normal.chern[k - 1])?;
            let zp = total.pow(&z, (r - k) as u32)?;
            out = total.add(&out, &total.mul(&zp, &ck)?)?;
        }
        Ok(out)
    }

    /// The decomposition extraction `(f_* a; g_*(gamma_(c-r) . j^* a))`.
    /// Round-tripping through the coordinates is the identity.
    pub fn extract(&self, a: &CoordElem) -> Result<CoordElem> {
        let c = self.codim - 2;
        let j = self.j_restrict(a)?;
        let mut exc = Vec::with_capacity(c + 1);
        for r in 0..=c {
            let gam = self.gamma(c - r)?;
            let prod = self.exc_bundle.total.mul(&gam, &j)?;
            exc.push(self.exc_bundle.pushforward.apply(&prod)?);
        }
        Ok(CoordElem {
            ambient: self.push_down(a),
            exc,
        })
    }

    /// Strict transform of an ambient class.
    pub fn strict_transform(
        &self,
        v: &RingElement,
        v_cap_x: Option<&RingElement>,
        case: TransformCase,
    ) -> Result<CoordElem> {
        match case {
            TransformCase::ExpectedDim => self.lift(v),
            TransformCase::ExcessOne => {
                let cap = v_cap_x.ok_or_else(|| {
                    EngineError::BadTransformCase(
                        "excess-one transform needs the center intersection class".into(),
                    )
                })?;
                let correction = self.jstar_center(cap)?;
                self.sub(&self.lift(v)?, &correction)
            }
        }
    }

    // ----- derived presentation -----

    fn model_dims(&self, degree: usize) -> Vec<usize> {
        // Coordinates: ambient degree q, then center degrees q-1-r.
        let mut dims = vec![if degree <= self.ambient.top_degree() {
            self.ambient.basis(degree).len()
        } else {
            0
        }];
        for r in 0..=(self.codim - 2) {
            let d = degree as i64 - 1 - r as i64;
            dims.push(if d >= 0 && d as usize <= self.center.top_degree() {
                self.center.basis(d as usize).len()
            } else {
                0
            });
        }
        dims
    }

    /// Flatten a coordinate tuple into its degree-d coordinate vector.
    fn coord_vector(&self, a: &CoordElem, degree: usize) -> Result<Vec<Rat>> {
        let mut v = Vec::new();
        let amb_part = self
            .ambient
            .graded_parts(&a.ambient)
            .into_iter()
            .find(|(d, _)| *d == degree)
            .map(|(_, e)| e)
            .unwrap_or_else(|| self.ambient.zero());
        if degree <= self.ambient.top_degree() {
            v.extend(self.ambient.coords(&amb_part, degree)?);
        }
        for r in 0..=(self.codim - 2) {
            let d = degree as i64 - 1 - r as i64;
            if d < 0 || d as usize > self.center.top_degree() {
                continue;
            }
            let d = d as usize;
            let part = self
                .center
                .graded_parts(&a.exc[r])
                .into_iter()
                .find(|(dd, _)| *dd == d)
                .map(|(_, e)| e)
                .unwrap_or_else(|| self.center.zero());
            v.extend(self.center.coords(&part, d)?);
        }
        Ok(v)
    }

    fn meaning_value(&self, g: &EmittedGen) -> Result<CoordElem> {
        match g {
            EmittedGen::Ambient(i) => {
                let name = &self.ambient.generators()[*i].name;
                self.lift(&self.ambient.gen_elem(name)?)
            }
            EmittedGen::Exceptional => self.exceptional_class(),
            EmittedGen::JStar(m) => {
                let x = self.center.from_terms(vec![(m.clone(), Rat::one())]);
                self.jstar_center(&x)
            }
        }
    }

    fn emit_presentation(&mut self) -> Result<()> {
        let d = self.codim;
        // Generators: ambient generators via f^*, the exceptional divisor,
        // then j_* g^* of center basis monomials of degree <= d-1 that are
        // not plain i^*-images of ambient monomials (those are products of
        // earlier generators already).
        let mut gens: Vec<GeneratorSpec> = self.ambient.generators().to_vec();
        let mut meanings: Vec<EmittedGen> = (0..gens.len()).map(EmittedGen::Ambient).collect();
        gens.push(GeneratorSpec::new(&self.exceptional_name, 1));
        meanings.push(EmittedGen::Exceptional);
        for deg in 1..=(d - 1).min(self.center.top_degree()) {
            // i^*-images of ambient monomials of this degree that are single
            // center monomials with unit coefficient.
            let mut image_monos: Vec<Monomial> = Vec::new();
            if deg <= self.ambient.top_degree() {
                for am in self.ambient.monomials(deg) {
                    let e = self.ambient.from_terms(vec![(am.clone(), Rat::one())]);
                    let img = self.center_pullback.apply(&e)?;
                    if img.terms.len() == 1 {
                        let (m, c) = img.terms.iter().next().unwrap();
                        if c.is_one() {
                            image_monos.push(m.clone());
                        }
                    }
                }
            }
            for m in self.center.basis(deg) {
                if image_monos.contains(m) {
                    continue;
                }
                let name = jstar_gen_name(&self.center, m);
                gens.push(GeneratorSpec::new(&name, deg + 1));
                meanings.push(EmittedGen::JStar(m.clone()));
            }
        }
        // Uniqueness of emitted names.
        {
            let mut seen = std::collections::HashSet::new();
            for g in &gens {
                if !seen.insert(g.name.clone()) {
                    return Err(EngineError::NameClash(g.name.clone()));
                }
            }
        }

        let top = self.ambient.top_degree();
        let gen_degrees: Vec<usize> = gens.iter().map(|g| g.degree).collect();
        let gen_values: Vec<CoordElem> = meanings
            .iter()
            .map(|m| self.meaning_value(m))
            .collect::<Result<_>>()?;

        // Harvest relations degree by degree: kernel of the evaluation map,
        // reduced modulo products of lower-degree relations.
        let mut relations: Vec<RawElement> = Vec::new();
        // Cache monomial values: exponent vector -> CoordElem.
        let mut value_cache: HashMap<Vec<u32>, CoordElem> = HashMap::new();
        value_cache.insert(vec![0; gens.len()], self.lift(&self.ambient.one())?);

        for degree in 1..=top {
            let monos = enumerate_monomials(&gen_degrees, degree);
            // Evaluate every monomial in the model (reusing a divisor step).
            let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(monos.len());
            for m in &monos {
                let val = self.eval_monomial(m, &gen_values, &mut value_cache)?;
                columns.push(self.coord_vector(&val, degree)?);
            }
            let nrows = columns.first().map(|c| c.len()).unwrap_or(0);
            // Kernel of the matrix whose columns are the evaluations.
            let mut mat = RationalMatrix::zero(nrows, monos.len());
            for (j, col) in columns.iter().enumerate() {
                for (i, v) in col.iter().enumerate() {
                    *mat.at_mut(i, j) = v.clone();
                }
            }
            let kernel = kernel_basis(&mat);
            // Span of lower-degree relations times complementary monomials.
            let mono_index: HashMap<&Vec<u32>, usize> = monos
                .iter()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let mut red = SparseReducer::new();
            for rel in &relations {
                let rel_deg: usize = rel[0]
                    .0
                    .iter()
                    .zip(&gen_degrees)
                    .map(|(&e, &gd)| e as usize * gd)
                    .sum();
                if rel_deg >= degree {
                    continue;
                }
                for mu in enumerate_monomials(&gen_degrees, degree - rel_deg) {
                    let mut row: Vec<(usize, Rat)> = rel
                        .iter()
                        .map(|(exps, c)| {
                            let prod: Vec<u32> =
                                exps.iter().zip(&mu).map(|(a, b)| a + b).collect();
                            (mono_index[&prod], c.clone())
                        })
                        .collect();
                    row.sort_by_key(|(i, _)| *i);
                    red.add_row(row);
                }
            }
            for k in kernel {
                let row: Vec<(usize, Rat)> = k
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (i, v.clone()))
                    .collect();
                let rem = red.remainder(row);
                if rem.is_empty() {
                    continue;
                }
                red.add_row(rem.clone());
                relations.push(
                    rem.into_iter()
                        .map(|(i, c)| (monos[i].clone(), c))
                        .collect(),
                );
            }
        }

        let presented = Arc::new(PresentedRing::new(gens, relations, top)?);

        // Hilbert function must match the model's coordinate dimensions, and
        // the presented basis values must be invertible degree by degree.
        let mut basis_values = Vec::with_capacity(top + 1);
        for degree in 0..=top {
            let model_dim: usize = self.model_dims(degree).iter().sum();
            let pres_dim = presented.basis(degree).len();
            if model_dim != pres_dim {
                return Err(EngineError::PresentationMismatch(format!(
                    "degree {degree}: model dimension {model_dim}, presented dimension {pres_dim}"
                )));
            }
            let mut mat = RationalMatrix::zero(model_dim, pres_dim);
            for (j, m) in presented.basis(degree).iter().enumerate() {
                let val = self.eval_monomial(&m.0, &gen_values, &mut value_cache)?;
                for (i, v) in self.coord_vector(&val, degree)?.iter().enumerate() {
                    *mat.at_mut(i, j) = v.clone();
                }
            }
            basis_values.push(mat);
        }

        self.presented = presented;
        self.gen_meanings = meanings;
        self.basis_values = basis_values;
        Ok(())
    }

    fn eval_monomial(
        &self,
        exps: &[u32],
        gen_values: &[CoordElem],
        cache: &mut HashMap<Vec<u32>, CoordElem>,
    ) -> Result<CoordElem> {
        if let Some(v) = cache.get(exps) {
            return Ok(v.clone());
        }
        // Peel off one generator and recurse.
        let i = exps.iter().position(|&e| e > 0).unwrap();
        let mut rest = exps.to_vec();
        rest[i] -= 1;
        let tail = self.eval_monomial(&rest, gen_values, cache)?;
        let v = self.mul(&gen_values[i], &tail)?;
        cache.insert(exps.to_vec(), v.clone());
        Ok(v)
    }

    /// Express a coordinate tuple in the derived presentation.
    pub fn to_presented(&self, a: &CoordElem) -> Result<RingElement> {
        let mut out = self.presented.zero();
        for degree in 0..=self.ambient.top_degree() {
            let v = self.coord_vector(a, degree)?;
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let mat = &self.basis_values[degree];
            let coeffs = solve(mat, &v).ok_or_else(|| {
                EngineError::PresentationMismatch(format!(
                    "degree-{degree} class not expressible in the presentation"
                ))
            })?;
            let terms: Vec<(Monomial, Rat)> = self
                .presented
                .basis(degree)
                .iter()
                .cloned()
                .zip(coeffs)
                .collect();
            out = self.presented.add(&out, &self.presented.from_terms(terms))?;
        }
        Ok(out)
    }

    /// Evaluate a presented-ring element back into model coordinates.
    pub fn from_presented(&self, e: &RingElement) -> Result<CoordElem> {
        if e.ring_id != self.presented.id() {
            return Err(EngineError::RingMismatch);
        }
        let gen_values: Vec<CoordElem> = self
            .gen_meanings
            .iter()
            .map(|m| self.meaning_value(m))
            .collect::<Result<_>>()?;
        let mut cache = HashMap::new();
        cache.insert(
            vec![0; self.presented.generators().len()],
            self.lift(&self.ambient.one())?,
        );
        let mut out = self.zero();
        for (m, c) in &e.terms {
            let v = self.eval_monomial(&m.0, &gen_values, &mut cache)?;
            out = self.add(&out, &self.scale(&v, c))?;
        }
        Ok(out)
    }
}

fn jstar_gen_name(center: &PresentedRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let g = &center.generators()[i].name;
        if e == 1 {
            parts.push(g.clone());
        } else {
            parts.push(format!("{g}{e}"));
        }
    }
    format!("{}_s", parts.join("_"))
}

fn enumerate_monomials(degrees: &[usize], total: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; degrees.len()];
    fn rec(
        degrees: &[usize],
        gen: usize,
        remaining: usize,
        exps: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if gen == degrees.len() {
            if remaining == 0 {
                out.push(exps.clone());
            }
            return;
        }
        let gd = degrees[gen];
        for e in 0..=(remaining / gd) as u32 {
            exps[gen] = e;
            rec(degrees, gen + 1, remaining - gd * e as usize, exps, out);
        }
        exps[gen] = 0;
    }
    rec(degrees, 0, total, &mut exps, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    /// Blowup of P^3 at a point: ambient Q[h]/(h^4) top 3, center the point
    /// ring, i^*(h) = 0, i_*(1) = h^3, N of rank 3 with vanishing Chern
    /// classes (they live in positive degrees of the point ring).
    fn p3_point_blowup() -> BlowupModel {
        let ambient = Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("h", 1)],
                vec![vec![(vec![4], rat_int(1))]],
                3,
            )
            .unwrap(),
        );
        let point = Arc::new(PresentedRing::new(vec![], vec![], 0).unwrap());
        let i_pull = Arc::new(
            RingMorphism::new(
                ambient.clone(),
                point.clone(),
                vec![("h".into(), point.zero())],
            )
            .unwrap(),
        );
        let h3 = ambient.parse_element("h^3").unwrap();
        let i_push = Arc::new(
            GradedLinearMap::from_entries(
                point.clone(),
                ambient.clone(),
                3,
                vec![(point.one(), h3)],
                None,
            )
            .unwrap(),
        );
        let normal = BundleData::new(&point, 3, vec![]).unwrap();
        BlowupModel::new(ambient, point, i_pull, i_push, normal, "E").unwrap()
    }

    #[test]
    fn p3_blowup_dimensions() {
        let m = p3_point_blowup();
        assert_eq!(m.presented.hilbert_function(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn p3_blowup_round_trip_on_coordinates() {
        let m = p3_point_blowup();
        // Basis tuples: every unit coordinate vector.
        for degree in 0..=3usize {
            for b in m.presented.basis(degree) {
                let e = m
                    .presented
                    .from_terms(vec![(b.clone(), Rat::one())]);
                let coord = m.from_presented(&e).unwrap();
                let ext = m.extract(&coord).unwrap();
                assert_eq!(ext, coord, "round trip at degree {degree}");
                // And back through the presentation.
                assert_eq!(m.to_presented(&coord).unwrap(), e);
            }
        }
    }

    #[test]
    fn p3_blowup_exceptional_products() {
        let m = p3_point_blowup();
        // f_*(E) = 0 and f_* f^* = id.
        let e = m.exceptional_class().unwrap();
        assert!(m.push_down(&e).is_zero());
        let h = m.ambient.parse_element("h").unwrap();
        let lifted = m.lift(&h).unwrap();
        assert_eq!(m.push_down(&lifted), h);
        // f^*h . E = 0 since the point misses a general hyperplane:
        // i^*(h) = 0 makes the product rule collapse.
        let prod = m.mul(&lifted, &e).unwrap();
        assert_eq!(prod, m.zero());
        // E^3: on the blowup of a point in P^3, E^3 = h^3 ... with the sign
        // from E^2 = -j_*(z): E^3 = j_*(z^2) = f^*(i_* 1) = h^3.
        let e3 = m.pow(&e, 3).unwrap();
        assert_eq!(m.push_down(&e3), m.ambient.parse_element("h^3").unwrap());
    }

    #[test]
    fn strict_transform_cases() {
        let m = p3_point_blowup();
        let h = m.ambient.parse_element("h").unwrap();
        // Expected-dimension case: plain pullback.
        let t = m
            .strict_transform(&h, None, TransformCase::ExpectedDim)
            .unwrap();
        assert_eq!(t, m.lift(&h).unwrap());
        // Excess-one: a hyperplane through the point.
        let one = m.center.one();
        let t2 = m
            .strict_transform(&h, Some(&one), TransformCase::ExcessOne)
            .unwrap();
        let expect = m
            .sub(&m.lift(&h).unwrap(), &m.exceptional_class().unwrap())
            .unwrap();
        assert_eq!(t2, expect);
        // Missing intersection data is an error.
        assert!(m
            .strict_transform(&h, None, TransformCase::ExcessOne)
            .is_err());
    }

    #[test]
    fn codimension_one_rejected() {
        let ambient = Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("h", 1)],
                vec![vec![(vec![2], rat_int(1))]],
                1,
            )
            .unwrap(),
        );
        let point = Arc::new(PresentedRing::new(vec![], vec![], 0).unwrap());
        let i_pull = Arc::new(
            RingMorphism::new(
                ambient.clone(),
                point.clone(),
                vec![("h".into(), point.zero())],
            )
            .unwrap(),
        );
        let i_push = Arc::new(
            GradedLinearMap::from_entries(
                point.clone(),
                ambient.clone(),
                1,
                vec![(point.one(), ambient.parse_element("h").unwrap())],
                None,
            )
            .unwrap(),
        );
        let normal = BundleData::new(&point, 1, vec![]).unwrap();
        assert!(matches!(
            BlowupModel::new(ambient, point, i_pull, i_push, normal, "E"),
            Err(EngineError::BadBlowup(_))
        ));
    }
}
