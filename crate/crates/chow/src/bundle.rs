//! Projective-bundle rings.
//!
//! For a rank-r bundle with total Chern class `1 + c_1 + ... + c_r` over a
//! base ring, the total ring adjoins the relative hyperplane class `z` with
//! the single extra relation
//!
//! ```text
//! z^r - c_1 z^(r-1) + c_2 z^(r-2) - ... + (-1)^r c_r = 0
//! ```
//!
//! The sign convention is pinned once and validated by the case corpus: with
//! c_1 = -T, c_2 = 1/2 T^2 the relation reads H^4 + H^3 T + 1/2 H^2 T^2.
//! The hyperplane generator is declared first, so canonical forms push high
//! hyperplane powers down and every basis monomial has the shape
//! `z^i * (base basis monomial)` with `i < r`; the bundle pushforward reads
//! off the `z^(r-1)` coordinate.

use crate::error::{EngineError, Result};
use crate::morphism::{GradedLinearMap, RingMorphism};
use crate::rational::Rat;
use crate::ring::{GeneratorSpec, Monomial, PresentedRing, RawElement, RingElement};
use num_traits::One;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct BundleData {
    pub rank: usize,
    /// c_1 .. c_rank over the base ring; entries may be zero.
    pub chern: Vec<RingElement>,
}

impl BundleData {
    pub fn new(base: &PresentedRing, rank: usize, chern: Vec<RingElement>) -> Result<Self> {
        if rank == 0 {
            return Err(EngineError::BadBundle("rank must be positive".into()));
        }
        if chern.len() > rank {
            return Err(EngineError::BadBundle(format!(
                "{} Chern classes for a rank-{rank} bundle",
                chern.len()
            )));
        }
        let mut padded = chern;
        while padded.len() < rank {
            padded.push(base.zero());
        }
        for (i, c) in padded.iter().enumerate() {
            let c = base.normal_form(c)?;
            if !c.is_zero() && base.element_degree(&c) != Some(i + 1) {
                return Err(EngineError::BadBundle(format!(
                    "c_{} must be homogeneous of degree {}",
                    i + 1,
                    i + 1
                )));
            }
        }
        Ok(BundleData {
            rank,
            chern: padded,
        })
    }

    /// Chern data of the dual bundle: c_i -> (-1)^i c_i.
    pub fn dual(&self, base: &PresentedRing) -> BundleData {
        let chern = self
            .chern
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 0 {
                    base.neg(c) // c_{i+1}, odd index
                } else {
                    c.clone()
                }
            })
            .collect();
        BundleData {
            rank: self.rank,
            chern,
        }
    }
}

#[derive(Debug)]
pub struct ProjectiveBundleRing {
    pub base: Arc<PresentedRing>,
    pub total: Arc<PresentedRing>,
    /// base -> total ring map.
    pub pullback: Arc<RingMorphism>,
    /// total -> base, shift -(rank-1).
    pub pushforward: Arc<GradedLinearMap>,
    pub hyperplane: String,
    pub rank: usize,
}

pub fn projective_bundle(
    base: Arc<PresentedRing>,
    bundle: &BundleData,
    hyperplane: &str,
) -> Result<ProjectiveBundleRing> {
    if base.gen_index(hyperplane).is_ok() {
        return Err(EngineError::NameClash(hyperplane.to_string()));
    }
    let rank = bundle.rank;
    let top = base.top_degree() + rank - 1;

    // Hyperplane first, then the base generators.
    let mut gens = vec![GeneratorSpec::new(hyperplane, 1)];
    gens.extend(base.generators().iter().cloned());

    let shift_exps = |exps: &[u32]| -> Vec<u32> {
        let mut v = Vec::with_capacity(exps.len() + 1);
        v.push(0);
        v.extend_from_slice(exps);
        v
    };

    let mut rels: Vec<RawElement> = base
        .relations()
        .iter()
        .map(|r| {
            r.terms
                .iter()
                .map(|(m, c)| (shift_exps(&m.0), c.clone()))
                .collect()
        })
        .collect();
    // Base classes above the base truncation degree are zero downstairs and
    // must stay zero upstairs: impose the truncation ideal monomial-wise.
    for d in (base.top_degree() + 1)..=top {
        for m in enumerate_free_monomials(&base, d) {
            rels.push(vec![(shift_exps(&m), Rat::one())]);
        }
    }

    // Grothendieck relation: sum over i of (-1)^i c_i z^(rank-i).
    let mut groth: RawElement = Vec::new();
    {
        let mut lead = vec![0u32; gens.len()];
        lead[0] = rank as u32;
        groth.push((lead, Rat::one()));
    }
    for (i, c) in bundle.chern.iter().enumerate() {
        let sign = if (i + 1) % 2 == 1 {
            -Rat::one()
        } else {
            Rat::one()
        };
        for (m, coeff) in &c.terms {
            let mut exps = shift_exps(&m.0);
            exps[0] = (rank - i - 1) as u32;
            groth.push((exps, &sign * coeff));
        }
    }
    rels.push(groth);

    let total = Arc::new(PresentedRing::new(gens, rels, top)?);

    // Sanity: the graded pieces must be free over the base on 1, z, ..,
    // z^(rank-1).
    for d in 0..=top {
        let expect: usize = (0..rank)
            .filter(|i| d >= *i && d - i <= base.top_degree())
            .map(|i| base.basis(d - i).len())
            .sum();
        if total.basis(d).len() != expect {
            return Err(EngineError::BadBundle(format!(
                "projective-bundle freeness failed in degree {d}"
            )));
        }
    }

    let pullback = RingMorphism::new(
        base.clone(),
        total.clone(),
        base.generators()
            .iter()
            .map(|g| (g.name.clone(), total.gen_elem(&g.name).unwrap()))
            .collect(),
    )?;

    // Basis monomials are z^i * (base monomial); pushforward keeps the
    // z^(rank-1) coordinate.
    let mut images: HashMap<Monomial, RingElement> = HashMap::new();
    for d in 0..=top {
        for m in total.basis(d) {
            let zexp = m.0[0] as usize;
            let base_mono = Monomial(m.0[1..].to_vec());
            let img = if zexp == rank - 1 {
                base.from_terms(vec![(base_mono, Rat::one())])
            } else {
                base.zero()
            };
            images.insert(m.clone(), img);
        }
    }
    let pushforward = GradedLinearMap::from_basis_images(
        total.clone(),
        base.clone(),
        -((rank as i64) - 1),
        images,
    )?;

    Ok(ProjectiveBundleRing {
        base,
        total,
        pullback: Arc::new(pullback),
        pushforward: Arc::new(pushforward),
        hyperplane: hyperplane.to_string(),
        rank,
    })
}

/// All exponent vectors of the given weighted degree over a ring's
/// generators (ignoring its relations).
pub(crate) fn enumerate_free_monomials(ring: &PresentedRing, degree: usize) -> Vec<Vec<u32>> {
    let degrees: Vec<usize> = ring.generators().iter().map(|g| g.degree).collect();
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
        for e in 0..=(remaining / degrees[gen]) as u32 {
            exps[gen] = e;
            rec(degrees, gen + 1, remaining - degrees[gen] * e as usize, exps, out);
        }
        exps[gen] = 0;
    }
    rec(&degrees, 0, degree, &mut exps, &mut out);
    out
}

/// `pi_*(z^(rank-1+k))`: the degree-k Segre-type class of the bundle.
pub fn bundle_pushforward_values(pb: &ProjectiveBundleRing, k: usize) -> Result<RingElement> {
    let z = pb.total.gen_elem(&pb.hyperplane)?;
    let p = pb.total.pow(&z, (pb.rank - 1 + k) as u32)?;
    pb.pushforward.apply(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn theta_base() -> Arc<PresentedRing> {
        Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("T", 1)],
                vec![vec![(vec![3], rat_int(1))]],
                2,
            )
            .unwrap(),
        )
    }

    /// P_xi = P(pi_*(K ox xi)) over Q[T]/(T^3): rank 4, c = (-T, T^2/2, 0, 0).
    pub(crate) fn extension_space() -> ProjectiveBundleRing {
        let base = theta_base();
        let c1 = base.parse_element("-T").unwrap();
        let c2 = base.parse_element("1/2*T^2").unwrap();
        let bundle = BundleData::new(&base, 4, vec![c1, c2]).unwrap();
        projective_bundle(base, &bundle, "H").unwrap()
    }

    #[test]
    fn extension_space_matches_known_presentation() {
        let pb = extension_space();
        assert_eq!(pb.total.hilbert_function(), vec![1, 2, 3, 3, 2, 1]);
        // The Grothendieck relation with the pinned sign convention.
        let rel = pb
            .total
            .parse_element("H^4 + H^3*T + 1/2*H^2*T^2")
            .unwrap();
        assert!(rel.is_zero());
    }

    #[test]
    fn rank_one_projectivization_is_the_base() {
        let base = theta_base();
        let c1 = base.gen_elem("T").unwrap();
        let bundle = BundleData::new(&base, 1, vec![c1]).unwrap();
        let pb = projective_bundle(base.clone(), &bundle, "z").unwrap();
        assert_eq!(pb.total.hilbert_function(), base.hilbert_function());
        // z is identified with c_1.
        let z = pb.total.gen_elem("z").unwrap();
        let t = pb.total.gen_elem("T").unwrap();
        assert_eq!(z, t);
    }

    #[test]
    fn point_base_gives_projective_space() {
        let point = Arc::new(PresentedRing::new(vec![], vec![], 0).unwrap());
        let bundle = BundleData::new(&point, 4, vec![]).unwrap();
        let pb = projective_bundle(point, &bundle, "z").unwrap();
        assert_eq!(pb.total.hilbert_function(), vec![1, 1, 1, 1]);
        let z4 = pb.total.parse_element("z^4").unwrap();
        assert!(z4.is_zero());
    }

    #[test]
    fn pushforward_normalization() {
        let pb = extension_space();
        // k = 0 -> 1.
        assert_eq!(bundle_pushforward_values(&pb, 0).unwrap(), pb.base.one());
        // pi_*(H^i) = 0 for i < 3.
        for i in 0..3u32 {
            let h = pb.total.parse_element("H").unwrap();
            let p = pb.total.pow(&h, i).unwrap();
            assert!(pb.pushforward.apply(&p).unwrap().is_zero());
        }
        // pi_*(H^4) = -T: reduce H^4 and extract the z^3 coordinate.
        let seg1 = bundle_pushforward_values(&pb, 1).unwrap();
        assert_eq!(seg1, pb.base.parse_element("-T").unwrap());
    }

    #[test]
    fn zero_chern_segre_vanishes() {
        let point = Arc::new(PresentedRing::new(vec![], vec![], 0).unwrap());
        let bundle = BundleData::new(&point, 4, vec![]).unwrap();
        let pb = projective_bundle(point, &bundle, "z").unwrap();
        assert!(bundle_pushforward_values(&pb, 1).unwrap().is_zero());
    }

    #[test]
    fn name_clash_rejected() {
        let base = theta_base();
        let bundle = BundleData::new(&base, 2, vec![]).unwrap();
        assert!(matches!(
            projective_bundle(base, &bundle, "T"),
            Err(EngineError::NameClash(_))
        ));
    }

    #[test]
    fn chern_degree_validated() {
        let base = theta_base();
        let bad = BundleData::new(&base, 2, vec![base.parse_element("T^2").unwrap()]);
        assert!(matches!(bad, Err(EngineError::BadBundle(_))));
        let _ = rat(1, 2);
    }
}
