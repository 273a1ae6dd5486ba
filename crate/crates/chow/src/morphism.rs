//! Pullback ring homomorphisms and pushforward graded linear maps.
//!
//! Pullbacks are ring maps given by degree-preserving generator images;
//! construction fails unless every source relation maps to zero (that check
//! is itself the verification step for presented-ring isomorphism claims).
//!
//! Pushforwards are not ring maps. They are linear maps with a fixed degree
//! shift, specified by a value table on canonical basis monomials, the same
//! format the source material uses. Tables may be declared partially:
//! applying the map to an undeclared monomial is an error, never silently
//! zero. Declared entries may have arbitrary homogeneous left sides; the
//! constructor solves the induced linear system for basis-monomial images
//! and, when a companion pullback maps target generators to plain source
//! generators, extends the table by the projection formula over those
//! generators.

use crate::error::{EngineError, Result};
use crate::rational::Rat;
use crate::ring::{Monomial, PresentedRing, RingElement};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug)]
pub struct RingMorphism {
    pub source: Arc<PresentedRing>,
    pub target: Arc<PresentedRing>,
    /// One target element per source generator.
    pub images: Vec<RingElement>,
}

impl RingMorphism {
    /// Build and validate: images degree-preserving, every source relation
    /// maps to zero.
    pub fn new(
        source: Arc<PresentedRing>,
        target: Arc<PresentedRing>,
        images: Vec<(String, RingElement)>,
    ) -> Result<Self> {
        let mut by_gen: Vec<Option<RingElement>> = vec![None; source.generators().len()];
        for (name, img) in images {
            let i = source.gen_index(&name)?;
            let img = target.normal_form(&img)?;
            if !img.is_zero() {
                match target.element_degree(&img) {
                    Some(d) if d == source.generators()[i].degree => {}
                    _ => {
                        return Err(EngineError::DegreePreservationViolated {
                            name,
                            expected: source.generators()[i].degree,
                        })
                    }
                }
            }
            by_gen[i] = Some(img);
        }
        for (i, slot) in by_gen.iter().enumerate() {
            if slot.is_none() {
                return Err(EngineError::Other(format!(
                    "missing image for generator `{}`",
                    source.generators()[i].name
                )));
            }
        }
        let m = RingMorphism {
            source: source.clone(),
            target,
            images: by_gen.into_iter().map(|x| x.unwrap()).collect(),
        };
        for rel in source.relations() {
            let img = m.apply(rel)?;
            if !img.is_zero() {
                return Err(EngineError::RelationViolation {
                    relation: source.fmt_element(rel),
                    witness: m.target.fmt_element(&img),
                });
            }
        }
        Ok(m)
    }

    pub fn identity(ring: Arc<PresentedRing>) -> Self {
        let images = ring
            .generators()
            .iter()
            .map(|g| ring.gen_elem(&g.name).unwrap())
            .collect();
        RingMorphism {
            source: ring.clone(),
            target: ring,
            images,
        }
    }

    fn apply_mono(&self, m: &Monomial) -> Result<RingElement> {
        let mut out = self.target.one();
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                let p = self.target.pow(&self.images[i], e)?;
                out = self.target.mul(&out, &p)?;
            }
        }
        Ok(out)
    }

    /// Substitution followed by normal form; multiplicative by construction.
    pub fn apply(&self, e: &RingElement) -> Result<RingElement> {
        if e.ring_id != self.source.id() {
            return Err(EngineError::RingMismatch);
        }
        let mut out = self.target.zero();
        for (m, c) in &e.terms {
            let img = self.apply_mono(m)?;
            out = self.target.add(&out, &self.target.scale(&img, c))?;
        }
        Ok(out)
    }

    /// For each target generator mapped to exactly one source generator
    /// with coefficient 1, record source-gen -> target-gen.
    fn plain_gen_map(&self) -> HashMap<usize, usize> {
        let mut out = HashMap::new();
        for (tgt_gen, img) in self.images.iter().enumerate() {
            if img.terms.len() != 1 {
                continue;
            }
            let (m, c) = img.terms.iter().next().unwrap();
            if !c.is_one() {
                continue;
            }
            let nz: Vec<(usize, u32)> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect();
            if let [(src_gen, 1)] = nz[..] {
                out.entry(src_gen).or_insert(tgt_gen);
            }
        }
        out
    }
}

#[derive(Debug)]
pub struct GradedLinearMap {
    pub source: Arc<PresentedRing>,
    pub target: Arc<PresentedRing>,
    pub shift: i64,
    /// Images of source basis monomials; absent entries are use-time errors.
    pub images: HashMap<Monomial, RingElement>,
}

impl GradedLinearMap {
    /// Directly from a full (or partial) basis-monomial table.
    pub fn from_basis_images(
        source: Arc<PresentedRing>,
        target: Arc<PresentedRing>,
        shift: i64,
        images: HashMap<Monomial, RingElement>,
    ) -> Result<Self> {
        let map = GradedLinearMap {
            source,
            target,
            shift,
            images,
        };
        map.validate_degrees()?;
        Ok(map)
    }

    fn validate_degrees(&self) -> Result<()> {
        for (m, img) in &self.images {
            if img.is_zero() {
                continue;
            }
            let d = self.source.mono_degree(m) as i64 + self.shift;
            match self.target.element_degree(img) {
                Some(t) if t as i64 == d => {}
                _ => {
                    return Err(EngineError::PushforwardDegreeMismatch {
                        monomial: self.source.fmt_mono(m),
                        expected: d.max(0) as usize,
                    })
                }
            }
            if d < 0 {
                return Err(EngineError::PushforwardDegreeMismatch {
                    monomial: self.source.fmt_mono(m),
                    expected: 0,
                });
            }
        }
        Ok(())
    }

    /// Build from `(lhs, rhs)` entry constraints, optionally extending by
    /// the projection formula over the plain generators of `via` (a
    /// pullback from the target ring into the source ring).
    pub fn from_entries(
        source: Arc<PresentedRing>,
        target: Arc<PresentedRing>,
        shift: i64,
        entries: Vec<(RingElement, RingElement)>,
        via: Option<&RingMorphism>,
    ) -> Result<Self> {
        if let Some(v) = via {
            if v.source.id() != target.id() || v.target.id() != source.id() {
                return Err(EngineError::Other(
                    "`via` pullback must map the pushforward target into its source".into(),
                ));
            }
        }
        // src gen index -> tgt gen index for projection-formula factoring.
        let pulled: HashMap<usize, usize> = via.map(|v| v.plain_gen_map()).unwrap_or_default();

        // Normalize entries, group by source degree.
        let mut eqs_by_degree: HashMap<usize, Vec<(RingElement, RingElement)>> = HashMap::new();
        for (lhs, rhs) in entries {
            let lhs = source.normal_form(&lhs)?;
            let rhs = target.normal_form(&rhs)?;
            if lhs.is_zero() {
                if !rhs.is_zero() {
                    return Err(EngineError::InconsistentEntries(format!(
                        "zero left side with nonzero image {}",
                        target.fmt_element(&rhs)
                    )));
                }
                continue;
            }
            let d = source.element_degree(&lhs).ok_or_else(|| {
                EngineError::BadEntry(source.fmt_element(&lhs))
            })?;
            eqs_by_degree.entry(d).or_default().push((lhs, rhs));
        }

        let mut images: HashMap<Monomial, RingElement> = HashMap::new();
        for d in 0..=source.top_degree() {
            // Pass 1: projection-formula extension from lower degrees.
            for m in source.basis(d) {
                if images.contains_key(m) {
                    continue;
                }
                let mut base_exps = vec![0u32; target.generators().len()];
                let mut fiber = m.clone();
                let mut nontrivial = false;
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        if let Some(&tgt) = pulled.get(&i) {
                            base_exps[tgt] += e;
                            fiber.0[i] = 0;
                            nontrivial = true;
                        }
                    }
                }
                if !nontrivial {
                    continue;
                }
                // The fiber factor has strictly smaller degree; reduce it and
                // push its basis terms through already-known images.
                let fiber_elem = source.from_terms(vec![(fiber, Rat::one())]);
                let mut img = Some(target.zero());
                for (fm, fc) in &fiber_elem.terms {
                    match images.get(fm) {
                        Some(v) => {
                            let acc = img.take().unwrap();
                            img = Some(target.add(&acc, &target.scale(v, fc))?);
                        }
                        None => {
                            img = None;
                            break;
                        }
                    }
                }
                if let Some(v) = img {
                    let beta = target.from_terms(vec![(Monomial(base_exps), Rat::one())]);
                    images.insert(m.clone(), target.mul(&beta, &v)?);
                }
            }

            // Pass 2: solve this degree's declared equations for the
            // remaining unknown basis monomials.
            let Some(eqs) = eqs_by_degree.remove(&d) else {
                continue;
            };
            let basis: Vec<Monomial> = source.basis(d).to_vec();
            let pos: HashMap<&Monomial, usize> =
                basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
            // Row representation: coefficient vector over unknowns + residual.
            struct Row {
                coeffs: Vec<Rat>,
                rhs: RingElement,
            }
            let mut rows: Vec<Row> = Vec::new();
            for (lhs, rhs) in eqs {
                let mut coeffs = vec![Rat::zero(); basis.len()];
                let mut rhs_adj = rhs.clone();
                for (m, c) in &lhs.terms {
                    let i = pos[m];
                    if let Some(known) = images.get(m) {
                        rhs_adj = target.sub(&rhs_adj, &target.scale(known, c))?;
                    } else {
                        coeffs[i] = c.clone();
                    }
                }
                rows.push(Row {
                    coeffs,
                    rhs: rhs_adj,
                });
            }
            // Gaussian elimination over the unknown columns.
            let mut pivot_of_row: Vec<Option<usize>> = vec![None; rows.len()];
            for r in 0..rows.len() {
                let Some(p) = rows[r].coeffs.iter().position(|c| !c.is_zero()) else {
                    if !rows[r].rhs.is_zero() {
                        return Err(EngineError::InconsistentEntries(
                            target.fmt_element(&rows[r].rhs),
                        ));
                    }
                    continue;
                };
                let inv = rows[r].coeffs[p].clone();
                for c in rows[r].coeffs.iter_mut() {
                    *c = c.clone() / &inv;
                }
                rows[r].rhs = target.scale(&rows[r].rhs, &(Rat::one() / &inv));
                pivot_of_row[r] = Some(p);
                for r2 in 0..rows.len() {
                    if r2 == r || rows[r2].coeffs[p].is_zero() {
                        continue;
                    }
                    let f = rows[r2].coeffs[p].clone();
                    for c in 0..basis.len() {
                        let v = rows[r2].coeffs[c].clone() - &f * &rows[r].coeffs[c];
                        rows[r2].coeffs[c] = v;
                    }
                    let scaled = target.scale(&rows[r].rhs, &f);
                    rows[r2].rhs = target.sub(&rows[r2].rhs, &scaled)?;
                }
            }
            for (r, pivot) in pivot_of_row.iter().enumerate() {
                let Some(p) = pivot else { continue };
                let tail_nonzero = rows[r]
                    .coeffs
                    .iter()
                    .enumerate()
                    .any(|(c, v)| c != *p && !v.is_zero());
                if tail_nonzero {
                    // Underdetermined combination; leave the monomials
                    // undeclared rather than guessing.
                    continue;
                }
                images.insert(basis[*p].clone(), rows[r].rhs.clone());
            }
        }

        Self::from_basis_images(source, target, shift, images)
    }

    pub fn apply(&self, e: &RingElement) -> Result<RingElement> {
        if e.ring_id != self.source.id() {
            return Err(EngineError::RingMismatch);
        }
        let e = self.source.normal_form(e)?;
        let mut out = self.target.zero();
        for (m, c) in &e.terms {
            let img = self
                .images
                .get(m)
                .ok_or_else(|| EngineError::UndeclaredPushforward(self.source.fmt_mono(m)))?;
            out = self.target.add(&out, &self.target.scale(img, c))?;
        }
        Ok(out)
    }

    pub fn image_of(&self, m: &Monomial) -> Option<&RingElement> {
        self.images.get(m)
    }

    /// Total on every basis monomial of every degree?
    pub fn is_total(&self) -> bool {
        (0..=self.source.top_degree())
            .all(|d| self.source.basis(d).iter().all(|m| self.images.contains_key(m)))
    }
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub context: String,
    pub lhs: String,
    pub rhs: String,
}

/// Exhaustively verify `push(pull(a) * b) == a * push(b)` over basis pairs.
/// Pairs whose pushforward values are undeclared are skipped.
pub fn check_projection_formula(
    pull: &RingMorphism,
    push: &GradedLinearMap,
) -> Result<Vec<Violation>> {
    if pull.source.id() != push.target.id() || pull.target.id() != push.source.id() {
        return Err(EngineError::Other(
            "projection formula needs maps between the same ring pair, opposite directions".into(),
        ));
    }
    let base = &pull.source;
    let total = &push.source;
    let mut violations = Vec::new();
    for da in 0..=base.top_degree() {
        for a in base.basis(da) {
            let a_elem = base.from_terms(vec![(a.clone(), Rat::one())]);
            let pa = pull.apply(&a_elem)?;
            // Products of degree beyond the total truncation are not
            // representable upstairs; the formula is checked inside the
            // degree window only.
            for db in 0..=(total.top_degree().saturating_sub(da)) {
                for b in total.basis(db) {
                    let b_elem = total.from_terms(vec![(b.clone(), Rat::one())]);
                    let (lhs, rhs) = match (
                        push.apply(&total.mul(&pa, &b_elem)?),
                        push.apply(&b_elem),
                    ) {
                        (Ok(l), Ok(pb)) => (l, base.mul(&a_elem, &pb)?),
                        _ => continue, // undeclared somewhere: cannot check
                    };
                    if lhs != rhs {
                        violations.push(Violation {
                            context: format!(
                                "a = {}, b = {}",
                                base.fmt_mono(a),
                                total.fmt_mono(b)
                            ),
                            lhs: base.fmt_element(&lhs),
                            rhs: base.fmt_element(&rhs),
                        });
                    }
                }
            }
        }
    }
    Ok(violations)
}

/// Verify `(1/n) push(pull(a)) == a` over every basis monomial of the
/// pullback source; an empty list certifies the pullback injective.
pub fn verify_finite_cover(
    pull: &RingMorphism,
    push: &GradedLinearMap,
    n: &Rat,
) -> Result<Vec<Violation>> {
    if pull.source.id() != push.target.id() || pull.target.id() != push.source.id() {
        return Err(EngineError::Other(
            "finite-cover check needs maps between the same ring pair, opposite directions".into(),
        ));
    }
    if n.is_zero() {
        return Err(EngineError::Other("cover degree must be nonzero".into()));
    }
    let base = &pull.source;
    let mut violations = Vec::new();
    let inv = Rat::one() / n;
    for d in 0..=base.top_degree() {
        for a in base.basis(d) {
            let a_elem = base.from_terms(vec![(a.clone(), Rat::one())]);
            let round = match push.apply(&pull.apply(&a_elem)?) {
                Ok(v) => base.scale(&v, &inv),
                Err(e) => {
                    violations.push(Violation {
                        context: format!("a = {}", base.fmt_mono(a)),
                        lhs: format!("error: {e}"),
                        rhs: base.fmt_element(&a_elem),
                    });
                    continue;
                }
            };
            if round != a_elem {
                violations.push(Violation {
                    context: format!("a = {}", base.fmt_mono(a)),
                    lhs: base.fmt_element(&round),
                    rhs: base.fmt_element(&a_elem),
                });
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::ring::GeneratorSpec;

    fn theta_ring() -> Arc<PresentedRing> {
        Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("T", 1)],
                vec![vec![(vec![3], rat_int(1))]],
                2,
            )
            .unwrap(),
        )
    }

    /// S(C_J): Q[K, xi, T]/(K^2, xi K, xi^2 + K T, (xi - 3/2 K) T^2, T^3).
    pub(crate) fn curve_ring() -> Arc<PresentedRing> {
        Arc::new(
            PresentedRing::new(
                vec![
                    GeneratorSpec::new("K", 1),
                    GeneratorSpec::new("xi", 1),
                    GeneratorSpec::new("T", 1),
                ],
                vec![
                    vec![(vec![2, 0, 0], rat_int(1))],
                    vec![(vec![1, 1, 0], rat_int(1))],
                    vec![(vec![0, 2, 0], rat_int(1)), (vec![1, 0, 1], rat_int(1))],
                    vec![
                        (vec![0, 1, 2], rat_int(1)),
                        (vec![1, 0, 2], rat(-3, 2)),
                    ],
                    vec![(vec![0, 0, 3], rat_int(1))],
                ],
                3,
            )
            .unwrap(),
        )
    }

    fn base_inclusion(j: &Arc<PresentedRing>, cj: &Arc<PresentedRing>) -> RingMorphism {
        RingMorphism::new(
            j.clone(),
            cj.clone(),
            vec![("T".into(), cj.gen_elem("T").unwrap())],
        )
        .unwrap()
    }

    /// The curve-fibration pushforward: 1 -> 0, K -> 2, xi -> 3, xi^2 -> -2T,
    /// extended T-linearly.
    pub(crate) fn curve_pushforward(
        j: &Arc<PresentedRing>,
        cj: &Arc<PresentedRing>,
    ) -> GradedLinearMap {
        let inc = base_inclusion(j, cj);
        GradedLinearMap::from_entries(
            cj.clone(),
            j.clone(),
            -1,
            vec![
                (cj.one(), j.zero()),
                (cj.gen_elem("K").unwrap(), j.constant(rat_int(2))),
                (cj.gen_elem("xi").unwrap(), j.constant(rat_int(3))),
                (
                    cj.parse_element("xi^2").unwrap(),
                    j.parse_element("-2*T").unwrap(),
                ),
            ],
            Some(&inc),
        )
        .unwrap()
    }

    #[test]
    fn curve_ring_hilbert() {
        assert_eq!(curve_ring().hilbert_function(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn identity_morphism_round_trips() {
        let r = curve_ring();
        let id = RingMorphism::identity(r.clone());
        let e = r.parse_element("xi^2 + K*T - 2").unwrap();
        assert_eq!(id.apply(&e).unwrap(), e);
    }

    #[test]
    fn pullback_of_one_is_one() {
        let j = theta_ring();
        let cj = curve_ring();
        let inc = base_inclusion(&j, &cj);
        assert_eq!(inc.apply(&j.one()).unwrap(), cj.one());
    }

    #[test]
    fn relation_violation_reported() {
        // K -> T is not degree-violating but breaks K^2 = 0? No: T^2 != 0, so
        // the relation K^2 maps to T^2 != 0 and construction must fail.
        let cj = curve_ring();
        let bad = RingMorphism::new(
            cj.clone(),
            cj.clone(),
            vec![
                ("K".into(), cj.gen_elem("T").unwrap()),
                ("xi".into(), cj.gen_elem("xi").unwrap()),
                ("T".into(), cj.gen_elem("T").unwrap()),
            ],
        );
        match bad {
            Err(EngineError::RelationViolation { relation, witness }) => {
                assert_eq!(relation, "K^2");
                assert_eq!(witness, "T^2");
            }
            other => panic!("expected relation violation, got {other:?}"),
        }
    }

    #[test]
    fn degree_preservation_enforced() {
        let cj = curve_ring();
        let bad = RingMorphism::new(
            cj.clone(),
            cj.clone(),
            vec![
                ("K".into(), cj.parse_element("K*T").unwrap()),
                ("xi".into(), cj.gen_elem("xi").unwrap()),
                ("T".into(), cj.gen_elem("T").unwrap()),
            ],
        );
        assert!(matches!(
            bad,
            Err(EngineError::DegreePreservationViolated { .. })
        ));
    }

    #[test]
    fn pushforward_table_extends_linearly() {
        let j = theta_ring();
        let cj = curve_ring();
        let push = curve_pushforward(&j, &cj);
        assert!(push.is_total());
        // xi T -> 3T, K T -> 2T, K T^2 -> 2T^2, xi^2 -> -2T (declared).
        let cases = [
            ("xi*T", "3*T"),
            ("K*T", "2*T"),
            ("K*T^2", "2*T^2"),
            ("xi^2", "-2*T"),
            ("T", "0"),
            ("T^2", "0"),
            ("K*xi", "0"),
        ];
        for (lhs, rhs) in cases {
            let v = push.apply(&cj.parse_element(lhs).unwrap()).unwrap();
            assert_eq!(v, j.parse_element(rhs).unwrap(), "pushforward of {lhs}");
        }
    }

    #[test]
    fn partial_table_errors_at_use() {
        let j = theta_ring();
        let cj = curve_ring();
        let partial = GradedLinearMap::from_entries(
            cj.clone(),
            j.clone(),
            -1,
            vec![(cj.gen_elem("K").unwrap(), j.constant(rat_int(2)))],
            None,
        )
        .unwrap();
        let e = cj.gen_elem("xi").unwrap();
        assert!(matches!(
            partial.apply(&e),
            Err(EngineError::UndeclaredPushforward(_))
        ));
    }

    #[test]
    fn inconsistent_entries_rejected() {
        let j = theta_ring();
        let cj = curve_ring();
        let bad = GradedLinearMap::from_entries(
            cj.clone(),
            j.clone(),
            -1,
            vec![
                (cj.gen_elem("K").unwrap(), j.constant(rat_int(2))),
                (cj.gen_elem("K").unwrap(), j.constant(rat_int(3))),
            ],
            None,
        );
        assert!(matches!(bad, Err(EngineError::InconsistentEntries(_))));
    }

    #[test]
    fn projection_formula_for_curve_fibration() {
        let j = theta_ring();
        let cj = curve_ring();
        let inc = base_inclusion(&j, &cj);
        let push = curve_pushforward(&j, &cj);
        let violations = check_projection_formula(&inc, &push).unwrap();
        assert!(violations.is_empty(), "{violations:?}");
    }

    #[test]
    fn corrupted_pushforward_breaks_projection_formula() {
        let j = theta_ring();
        let cj = curve_ring();
        let inc = base_inclusion(&j, &cj);
        let mut push = curve_pushforward(&j, &cj);
        // Corrupt one image by +T.
        let key = cj
            .basis(1)
            .iter()
            .find(|m| cj.fmt_mono(m) == "K")
            .unwrap()
            .clone();
        let t = j.gen_elem("T").unwrap();
        let old = push.images[&key].clone();
        push.images.insert(key, j.add(&old, &t).unwrap());
        let violations = check_projection_formula(&inc, &push).unwrap();
        assert!(!violations.is_empty());
    }

    #[test]
    fn finite_cover_identity_and_doubling() {
        let j = theta_ring();
        let id = RingMorphism::identity(j.clone());
        // Identity "cover" with n = 1.
        let images: HashMap<_, _> = (0..=j.top_degree())
            .flat_map(|d| j.basis(d).iter().cloned().collect::<Vec<_>>())
            .map(|m| {
                let e = j.from_terms(vec![(m.clone(), Rat::one())]);
                (m, e)
            })
            .collect();
        let push_id =
            GradedLinearMap::from_basis_images(j.clone(), j.clone(), 0, images.clone()).unwrap();
        assert!(verify_finite_cover(&id, &push_id, &rat_int(1))
            .unwrap()
            .is_empty());
        // Doubling map: images scaled by 2, n = 2.
        let doubled: HashMap<_, _> = images
            .iter()
            .map(|(m, e)| (m.clone(), j.scale(e, &rat_int(2))))
            .collect();
        let push2 = GradedLinearMap::from_basis_images(j.clone(), j.clone(), 0, doubled).unwrap();
        assert!(verify_finite_cover(&id, &push2, &rat_int(2))
            .unwrap()
            .is_empty());
        assert!(!verify_finite_cover(&id, &push2, &rat_int(1))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn bundle_projection_is_not_a_finite_cover() {
        // pi_*(pi^*(1)) = 0 != 1: the fibration pair fails the cover check.
        let j = theta_ring();
        let cj = curve_ring();
        let inc = base_inclusion(&j, &cj);
        let push = curve_pushforward(&j, &cj);
        let violations = verify_finite_cover(&inc, &push, &rat_int(1)).unwrap();
        assert!(!violations.is_empty());
    }
}
