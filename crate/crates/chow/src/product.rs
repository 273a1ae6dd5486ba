//! Fiber products of presented rings over a common base, base-change
//! pushforwards along the second projection, and formal class adjunction.

use crate::error::{EngineError, Result};
use crate::morphism::{GradedLinearMap, RingMorphism};
use crate::rational::Rat;
use crate::ring::{Monomial, PresentedRing, RawElement, RingElement};
use num_traits::One;
use std::collections::HashMap;
use std::sync::Arc;

pub struct FiberProduct {
    pub ring: Arc<PresentedRing>,
    /// a -> product and b -> product (the two projection pullbacks).
    pub inj_a: Arc<RingMorphism>,
    pub inj_b: Arc<RingMorphism>,
    n_a: usize,
}

/// Tensor the two rings over the base: generators are the disjoint union,
/// relations are inherited, and each base generator's two images are
/// identified. The truncation degree is the fiber-product dimension
/// `(top(a) - top(base)) + (top(b) - top(base)) + top(base)`.
pub fn fiber_product_over_base(
    a: &Arc<PresentedRing>,
    b: &Arc<PresentedRing>,
    base: &Arc<PresentedRing>,
    pa: &RingMorphism,
    pb: &RingMorphism,
) -> Result<FiberProduct> {
    if pa.source.id() != base.id() || pa.target.id() != a.id() {
        return Err(EngineError::Other(
            "first base map must go from the base into the first factor".into(),
        ));
    }
    if pb.source.id() != base.id() || pb.target.id() != b.id() {
        return Err(EngineError::Other(
            "second base map must go from the base into the second factor".into(),
        ));
    }
    for g in a.generators() {
        if b.gen_index(&g.name).is_ok() {
            return Err(EngineError::NameClash(g.name.clone()));
        }
    }
    let n_a = a.generators().len();
    let n_b = b.generators().len();
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());

    let pad_a = |m: &Monomial| -> Vec<u32> {
        let mut v = m.0.clone();
        v.extend(std::iter::repeat(0).take(n_b));
        v
    };
    let pad_b = |m: &Monomial| -> Vec<u32> {
        let mut v = vec![0u32; n_a];
        v.extend_from_slice(&m.0);
        v
    };

    let rel_top = (a.top_degree() - base.top_degree())
        + (b.top_degree() - base.top_degree())
        + base.top_degree();

    let mut rels: Vec<RawElement> = Vec::new();
    for r in a.relations() {
        rels.push(r.terms.iter().map(|(m, c)| (pad_a(m), c.clone())).collect());
    }
    for r in b.relations() {
        rels.push(r.terms.iter().map(|(m, c)| (pad_b(m), c.clone())).collect());
    }
    // Factor classes above each factor's truncation degree vanish there and
    // must vanish in the product too.
    for d in (a.top_degree() + 1)..=rel_top {
        for m in crate::bundle::enumerate_free_monomials(a, d) {
            rels.push(vec![(pad_a(&Monomial(m)), Rat::one())]);
        }
    }
    for d in (b.top_degree() + 1)..=rel_top {
        for m in crate::bundle::enumerate_free_monomials(b, d) {
            rels.push(vec![(pad_b(&Monomial(m)), Rat::one())]);
        }
    }
    // Identifications pa(z) = pb(z) for every base generator z.
    for (i, _g) in base.generators().iter().enumerate() {
        let img_a = &pa.images[i];
        let img_b = &pb.images[i];
        let mut raw: RawElement =
            img_a.terms.iter().map(|(m, c)| (pad_a(m), c.clone())).collect();
        raw.extend(img_b.terms.iter().map(|(m, c)| (pad_b(m), -c.clone())));
        rels.push(raw);
    }

    let ring = Arc::new(PresentedRing::new(gens, rels, rel_top)?);

    let inj_a = RingMorphism::new(
        a.clone(),
        ring.clone(),
        a.generators()
            .iter()
            .map(|g| (g.name.clone(), ring.gen_elem(&g.name).unwrap()))
            .collect(),
    )?;
    let inj_b = RingMorphism::new(
        b.clone(),
        ring.clone(),
        b.generators()
            .iter()
            .map(|g| (g.name.clone(), ring.gen_elem(&g.name).unwrap()))
            .collect(),
    )?;

    Ok(FiberProduct {
        ring,
        inj_a: Arc::new(inj_a),
        inj_b: Arc::new(inj_b),
        n_a,
    })
}

impl FiberProduct {
    /// Base change: from a pushforward `pi: a -> base` build the pushforward
    /// along the second projection, `product -> b`, via
    /// `(pi x 1)_*(alpha (x) beta) = pb(pi_*(alpha)) . beta`.
    pub fn base_change_pushforward(
        &self,
        pi: &GradedLinearMap,
        pb: &RingMorphism,
    ) -> Result<GradedLinearMap> {
        let a_ring = &pi.source;
        let base = &pi.target;
        if pb.source.id() != base.id() {
            return Err(EngineError::Other(
                "base-change pullback must start at the pushforward target".into(),
            ));
        }
        let b_ring = &pb.target;
        let n_a = self.n_a;
        let mut images: HashMap<Monomial, RingElement> = HashMap::new();
        for d in 0..=self.ring.top_degree() {
            for m in self.ring.basis(d) {
                let ma = Monomial(m.0[..n_a].to_vec());
                let mb = Monomial(m.0[n_a..].to_vec());
                let a_elem = a_ring.from_terms(vec![(ma, Rat::one())]);
                let Ok(pushed) = pi.apply(&a_elem) else {
                    continue; // undeclared upstream: leave undeclared here
                };
                let in_b = pb.apply(&pushed)?;
                let b_elem = b_ring.from_terms(vec![(mb, Rat::one())]);
                images.insert(m.clone(), b_ring.mul(&in_b, &b_elem)?);
            }
        }
        GradedLinearMap::from_basis_images(self.ring.clone(), b_ring.clone(), pi.shift, images)
    }
}

/// Extend a ring by one formal class of the given degree, with optional
/// extra relations (expressed over the extended generator list).
pub fn adjoin_class(
    ring: &Arc<PresentedRing>,
    name: &str,
    degree: usize,
    extra_rels: Vec<RawElement>,
) -> Result<Arc<PresentedRing>> {
    if ring.gen_index(name).is_ok() {
        return Err(EngineError::NameClash(name.to_string()));
    }
    let mut gens = ring.generators().to_vec();
    gens.push(crate::ring::GeneratorSpec::new(name, degree));
    let mut rels: Vec<RawElement> = ring
        .relations()
        .iter()
        .map(|r| {
            r.terms
                .iter()
                .map(|(m, c)| {
                    let mut v = m.0.clone();
                    v.push(0);
                    (v, c.clone())
                })
                .collect()
        })
        .collect();
    rels.extend(extra_rels);
    Ok(Arc::new(PresentedRing::new(gens, rels, ring.top_degree())?))
}

/// Extend a pushforward to an adjoined ring: inherited entries are imported
/// as constraints and the declared table supplies the images involving the
/// new class. `via` is a pullback from the target into the extended ring
/// used for projection-formula completion.
pub fn extend_pushforward(
    old: &GradedLinearMap,
    new_ring: &Arc<PresentedRing>,
    declared: Vec<(RingElement, RingElement)>,
    via: Option<&RingMorphism>,
) -> Result<GradedLinearMap> {
    let n_old = old.source.generators().len();
    if new_ring.generators().len() < n_old {
        return Err(EngineError::Other(
            "extended ring has fewer generators than the original".into(),
        ));
    }
    let extra = new_ring.generators().len() - n_old;
    let mut entries: Vec<(RingElement, RingElement)> = Vec::new();
    for (m, img) in &old.images {
        let mut exps = m.0.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        let lhs = new_ring.from_terms(vec![(Monomial(exps), Rat::one())]);
        entries.push((lhs, img.clone()));
    }
    entries.extend(declared);
    GradedLinearMap::from_entries(
        new_ring.clone(),
        old.target.clone(),
        old.shift,
        entries,
        via,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::ring::GeneratorSpec;

    fn theta_ring(name: &str) -> Arc<PresentedRing> {
        Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new(name, 1)],
                vec![vec![(vec![3], rat_int(1))]],
                2,
            )
            .unwrap(),
        )
    }

    fn curve_over(base: &Arc<PresentedRing>) -> (Arc<PresentedRing>, RingMorphism, GradedLinearMap) {
        use crate::rational::rat;
        let cj = Arc::new(
            PresentedRing::new(
                vec![
                    GeneratorSpec::new("K", 1),
                    GeneratorSpec::new("xi", 1),
                    GeneratorSpec::new("TC", 1),
                ],
                vec![
                    vec![(vec![2, 0, 0], rat_int(1))],
                    vec![(vec![1, 1, 0], rat_int(1))],
                    vec![(vec![0, 2, 0], rat_int(1)), (vec![1, 0, 1], rat_int(1))],
                    vec![(vec![0, 1, 2], rat_int(1)), (vec![1, 0, 2], rat(-3, 2))],
                    vec![(vec![0, 0, 3], rat_int(1))],
                ],
                3,
            )
            .unwrap(),
        );
        let pa = RingMorphism::new(
            base.clone(),
            cj.clone(),
            vec![("T".into(), cj.gen_elem("TC").unwrap())],
        )
        .unwrap();
        let push = GradedLinearMap::from_entries(
            cj.clone(),
            base.clone(),
            -1,
            vec![
                (cj.one(), base.zero()),
                (cj.gen_elem("K").unwrap(), base.constant(rat_int(2))),
                (cj.gen_elem("xi").unwrap(), base.constant(rat_int(3))),
                (
                    cj.parse_element("xi^2").unwrap(),
                    base.parse_element("-2*T").unwrap(),
                ),
            ],
            Some(&pa),
        )
        .unwrap();
        (cj, pa, push)
    }

    #[test]
    fn base_change_pushforward_values() {
        let base = theta_ring("T");
        let (cj, pa, pi) = curve_over(&base);
        // Second factor: a small ring with one divisor class.
        let b = Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("S", 1), GeneratorSpec::new("TB", 1)],
                vec![vec![(vec![0, 3], rat_int(1))], vec![(vec![4, 0], rat_int(1))]],
                5,
            )
            .unwrap(),
        );
        let pb = RingMorphism::new(
            base.clone(),
            b.clone(),
            vec![("T".into(), b.gen_elem("TB").unwrap())],
        )
        .unwrap();
        let fp = fiber_product_over_base(&cj, &b, &base, &pa, &pb).unwrap();
        // top = (3-2) + (5-2) + 2 = 6.
        assert_eq!(fp.ring.top_degree(), 6);
        let push = fp.base_change_pushforward(&pi, &pb).unwrap();
        // pi_*(xi (x) S) = 3 S.
        let e = fp.ring.parse_element("xi*S").unwrap();
        assert_eq!(
            push.apply(&e).unwrap(),
            b.parse_element("3*S").unwrap()
        );
        // pi_*(1 (x) beta) = 0.
        let e = fp.ring.parse_element("S^2").unwrap();
        assert!(push.apply(&e).unwrap().is_zero());
        // pi_*(K (x) beta) = 2 beta.
        let e = fp.ring.parse_element("K*S^2").unwrap();
        assert_eq!(push.apply(&e).unwrap(), b.parse_element("2*S^2").unwrap());
        // Identification TC = TB inside the product.
        let tc = fp.ring.parse_element("TC").unwrap();
        let tb = fp.ring.parse_element("TB").unwrap();
        assert_eq!(tc, tb);
    }

    #[test]
    fn name_clash_detected() {
        let base = theta_ring("T");
        let (cj, pa, _) = curve_over(&base);
        let err = fiber_product_over_base(&cj, &cj, &base, &pa, &pa);
        assert!(matches!(err, Err(EngineError::NameClash(_))));
    }

    #[test]
    fn adjoin_nilpotent_class_keeps_hilbert() {
        let base = theta_ring("T");
        // Adjoin A with A = 0 (degree-1 relation).
        let n = base.generators().len();
        let mut exps = vec![0u32; n + 1];
        exps[n] = 1;
        let ext = adjoin_class(&base, "A", 1, vec![vec![(exps, Rat::one())]]).unwrap();
        assert_eq!(ext.hilbert_function(), base.hilbert_function());
    }

    #[test]
    fn adjoin_reproduces_product_of_curves() {
        // Free ring on p1, p2 with their squares killed, then adjoin the
        // diagonal with its relations: Hilbert (1,3,1), degree-2 basis p1 p2.
        let free = Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("p1", 1), GeneratorSpec::new("p2", 1)],
                vec![
                    vec![(vec![2, 0], rat_int(1))],
                    vec![(vec![0, 2], rat_int(1))],
                ],
                2,
            )
            .unwrap(),
        );
        let rels = vec![
            // 2 D p1 - p1 p2
            vec![
                (vec![1, 0, 1], rat_int(2)),
                (vec![1, 1, 0], rat_int(-1)),
            ],
            // D (p1 - p2)
            vec![
                (vec![1, 0, 1], rat_int(1)),
                (vec![0, 1, 1], rat_int(-1)),
            ],
            // 2 D^2 + p1 p2
            vec![(vec![0, 0, 2], rat_int(2)), (vec![1, 1, 0], rat_int(1))],
        ];
        let ext = adjoin_class(&free, "D", 1, rels).unwrap();
        assert_eq!(ext.hilbert_function(), vec![1, 3, 1]);
    }

    #[test]
    fn extend_pushforward_with_declared_entries() {
        let base = theta_ring("T");
        let (cj, pa, pi) = curve_over(&base);
        let ext = adjoin_class(&cj, "A", 2, vec![]).unwrap();
        let pa_ext = RingMorphism::new(
            base.clone(),
            ext.clone(),
            vec![("T".into(), ext.gen_elem("TC").unwrap())],
        )
        .unwrap();
        let a_elem = ext.gen_elem("A").unwrap();
        let declared = vec![(a_elem.clone(), base.parse_element("5*T").unwrap())];
        let pi_ext = extend_pushforward(&pi, &ext, declared, Some(&pa_ext)).unwrap();
        assert_eq!(
            pi_ext.apply(&a_elem).unwrap(),
            base.parse_element("5*T").unwrap()
        );
        // Inherited values survive.
        assert_eq!(
            pi_ext.apply(&ext.gen_elem("K").unwrap()).unwrap(),
            base.constant(rat_int(2))
        );
        // A*TC extends T-linearly: pi(A T) = 5 T^2.
        let at = ext.parse_element("A*TC").unwrap();
        assert_eq!(pi_ext.apply(&at).unwrap(), base.parse_element("5*T^2").unwrap());
        // A^2 exceeds the truncation degree and is zero, not an error.
        let a2 = ext.parse_element("A^2").unwrap();
        assert!(a2.is_zero());
        // A*xi was never declared and is a use-time error.
        let ax = ext.parse_element("A*xi").unwrap();
        assert!(matches!(
            pi_ext.apply(&ax),
            Err(EngineError::UndeclaredPushforward(_))
        ));
    }
}
