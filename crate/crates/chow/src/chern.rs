//! Characteristic-class calculus: Chern <-> Chern-character conversions,
//! the Todd factor for a relative canonical class, Grothendieck-Riemann-Roch
//! pushforward along curve fibrations, twisted kappa classes, and the formal
//! tautological ring in which kappa identities are verified symbolically.

use crate::error::{EngineError, Result};
use crate::morphism::{check_projection_formula, GradedLinearMap, RingMorphism};
use crate::rational::{rat, rat_int, Rat};
use crate::ring::{GeneratorSpec, Monomial, PresentedRing, RingElement};
use num_traits::{One, Zero};
use std::sync::Arc;

/// Graded pieces of a characteristic class, indexed by degree.
#[derive(Debug, Clone)]
pub struct CharClass {
    pub parts: Vec<RingElement>,
}

impl CharClass {
    pub fn zero(ring: &PresentedRing, cutoff: usize) -> Self {
        CharClass {
            parts: vec![ring.zero(); cutoff + 1],
        }
    }

    pub fn cutoff(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn part(&self, d: usize) -> &RingElement {
        &self.parts[d]
    }

    pub fn add(&self, ring: &PresentedRing, other: &CharClass) -> Result<CharClass> {
        let n = self.cutoff().min(other.cutoff());
        let mut parts = Vec::with_capacity(n + 1);
        for d in 0..=n {
            parts.push(ring.add(&self.parts[d], &other.parts[d])?);
        }
        Ok(CharClass { parts })
    }

    pub fn mul(&self, ring: &PresentedRing, other: &CharClass) -> Result<CharClass> {
        let n = self.cutoff().min(other.cutoff());
        let mut parts = vec![ring.zero(); n + 1];
        for i in 0..=self.cutoff() {
            if self.parts[i].is_zero() {
                continue;
            }
            for j in 0..=other.cutoff() {
                if i + j > n {
                    break;
                }
                let p = ring.mul(&self.parts[i], &other.parts[j])?;
                parts[i + j] = ring.add(&parts[i + j], &p)?;
            }
        }
        Ok(CharClass { parts })
    }
}

/// Validate and pad a Chern list (`c_1..c_k`, homogeneous, degree i).
fn check_chern(ring: &PresentedRing, chern: &[RingElement], cutoff: usize) -> Result<Vec<RingElement>> {
    let mut out = Vec::with_capacity(cutoff);
    for (i, c) in chern.iter().enumerate() {
        let c = ring.normal_form(c)?;
        if !c.is_zero() && ring.element_degree(&c) != Some(i + 1) {
            return Err(EngineError::BadBundle(format!(
                "c_{} must be homogeneous of degree {}",
                i + 1,
                i + 1
            )));
        }
        out.push(c);
    }
    while out.len() < cutoff {
        out.push(ring.zero());
    }
    Ok(out)
}

/// Chern classes to Chern character:
/// `ch = rank + p_1 + p_2/2! + p_3/3! + ...` with the power sums given by
/// Newton's identities `p_k = e_1 p_(k-1) - e_2 p_(k-2) + ... + (-1)^(k-1) k e_k`.
pub fn chern_to_character(
    ring: &PresentedRing,
    rank: Rat,
    chern: &[RingElement],
    cutoff: usize,
) -> Result<CharClass> {
    let e = check_chern(ring, chern, cutoff)?;
    let mut p: Vec<RingElement> = Vec::with_capacity(cutoff + 1);
    p.push(ring.zero()); // p_0 unused
    for k in 1..=cutoff {
        let mut acc = ring.zero();
        for i in 1..k {
            let sign = if (i + 1) % 2 == 0 { Rat::one() } else { -Rat::one() };
            let term = ring.mul(&e[i - 1], &p[k - i])?;
            acc = ring.add(&acc, &ring.scale(&term, &sign))?;
        }
        let sign = if (k + 1) % 2 == 0 { Rat::one() } else { -Rat::one() };
        let last = ring.scale(&e[k - 1], &(sign * rat_int(k as i64)));
        acc = ring.add(&acc, &last)?;
        p.push(acc);
    }
    let mut parts = Vec::with_capacity(cutoff + 1);
    parts.push(ring.constant(rank));
    let mut factorial = Rat::one();
    for (k, pk) in p.iter().enumerate().skip(1) {
        factorial *= rat_int(k as i64);
        parts.push(ring.scale(pk, &(Rat::one() / &factorial)));
    }
    Ok(CharClass { parts })
}

/// Inverse of `chern_to_character`: recover `(rank, c_1..c_cutoff)`.
pub fn character_to_chern(
    ring: &PresentedRing,
    ch: &CharClass,
) -> Result<(Rat, Vec<RingElement>)> {
    let cutoff = ch.cutoff();
    let rank_part = &ch.parts[0];
    let rank = if rank_part.is_zero() {
        Rat::zero()
    } else {
        let (m, c) = rank_part.terms.iter().next().unwrap();
        if !m.is_one() || rank_part.terms.len() != 1 {
            return Err(EngineError::Other("ch_0 must be a rational".into()));
        }
        c.clone()
    };
    // p_k = k! ch_k; k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i, e_0 = 1.
    let mut p: Vec<RingElement> = vec![ring.zero()];
    let mut factorial = Rat::one();
    for k in 1..=cutoff {
        factorial *= rat_int(k as i64);
        p.push(ring.scale(&ch.parts[k], &factorial));
    }
    let mut e: Vec<RingElement> = vec![ring.one()];
    for k in 1..=cutoff {
        let mut acc = ring.zero();
        for i in 1..=k {
            // k e_k = sum_i (-1)^(i-1) e_(k-i) p_i
            let sign = if i % 2 == 1 { Rat::one() } else { -Rat::one() };
            let term = ring.mul(&e[k - i], &p[i])?;
            acc = ring.add(&acc, &ring.scale(&term, &sign))?;
        }
        e.push(ring.scale(&acc, &(Rat::one() / rat_int(k as i64))));
    }
    Ok((rank, e[1..].to_vec()))
}

/// Todd class of the line bundle dual to `K`:
/// `1 - K/2 + K^2/12 + 0 - K^4/720 + ...` (the Bernoulli series evaluated
/// at `-K`).
pub fn todd_inverse_canonical(
    ring: &PresentedRing,
    k_class: &RingElement,
    cutoff: usize,
) -> Result<CharClass> {
    let k = ring.normal_form(k_class)?;
    if !k.is_zero() && ring.element_degree(&k) != Some(1) {
        return Err(EngineError::Other("canonical class must have degree 1".into()));
    }
    // B_n^+ for n = 0..6.
    let bernoulli = [
        rat_int(1),
        rat(1, 2),
        rat(1, 6),
        rat_int(0),
        rat(-1, 30),
        rat_int(0),
        rat(1, 42),
    ];
    if cutoff + 1 > bernoulli.len() {
        return Err(EngineError::Other(
            "Todd series implemented up to degree 6".into(),
        ));
    }
    let mut parts = Vec::with_capacity(cutoff + 1);
    let mut power = ring.one(); // (-K)^n
    let mut factorial = Rat::one();
    for n in 0..=cutoff {
        if n > 0 {
            power = ring.mul(&power, &ring.neg(&k))?;
            factorial *= rat_int(n as i64);
        }
        parts.push(ring.scale(&power, &(bernoulli[n].clone() / &factorial)));
    }
    Ok(CharClass { parts })
}

/// A relative-dimension-one fibration with its pullback/pushforward pair,
/// relative canonical class, and optionally the Chern classes of a rank-2
/// bundle on the total space (for kappa classes).
pub struct FibrationData {
    pub total: Arc<PresentedRing>,
    pub base: Arc<PresentedRing>,
    pub pullback: Arc<RingMorphism>,
    pub pushforward: Arc<GradedLinearMap>,
    pub canonical: RingElement,
    pub c1: Option<RingElement>,
    pub c2: Option<RingElement>,
}

impl FibrationData {
    pub fn new(
        total: Arc<PresentedRing>,
        base: Arc<PresentedRing>,
        pullback: Arc<RingMorphism>,
        pushforward: Arc<GradedLinearMap>,
        canonical: RingElement,
        c1: Option<RingElement>,
        c2: Option<RingElement>,
    ) -> Result<Self> {
        if pullback.source.id() != base.id() || pullback.target.id() != total.id() {
            return Err(EngineError::BadFibration(
                "pullback must map the base into the total space".into(),
            ));
        }
        if pushforward.source.id() != total.id() || pushforward.target.id() != base.id() {
            return Err(EngineError::BadFibration(
                "pushforward must map the total space onto the base".into(),
            ));
        }
        if pushforward.shift != -1 {
            return Err(EngineError::BadFibration(format!(
                "curve fibrations push with shift -1, got {}",
                pushforward.shift
            )));
        }
        let canonical = total.normal_form(&canonical)?;
        if !canonical.is_zero() && total.element_degree(&canonical) != Some(1) {
            return Err(EngineError::BadFibration(
                "canonical class must be homogeneous of degree 1".into(),
            ));
        }
        // Projection formula over the declared part of the table.
        let violations = check_projection_formula(&pullback, &pushforward)?;
        if let Some(v) = violations.first() {
            return Err(EngineError::BadFibration(format!(
                "projection formula fails at {}: {} != {}",
                v.context, v.lhs, v.rhs
            )));
        }
        Ok(FibrationData {
            total,
            base,
            pullback,
            pushforward,
            canonical,
            c1,
            c2,
        })
    }
}

/// GRR pushforward for a curve fibration:
/// `ch(pi_! E) = pi_*(ch(E) . td(K^dual))`, graded piece by graded piece.
pub fn grr_push(f: &FibrationData, ch_bundle: &CharClass) -> Result<CharClass> {
    let cutoff = ch_bundle.cutoff();
    let todd = todd_inverse_canonical(&f.total, &f.canonical, cutoff.min(6))?;
    let integrand = ch_bundle.mul(&f.total, &todd)?;
    let out_cut = integrand.cutoff().saturating_sub(1).min(f.base.top_degree());
    let mut parts = Vec::with_capacity(out_cut + 1);
    for d in 0..=out_cut {
        parts.push(f.pushforward.apply(&integrand.parts[d + 1])?);
    }
    Ok(CharClass { parts })
}

/// Twisted kappa class: `kappa_{a,b,c} = pi_*(K^(a+1) c_1^b c_2^c)`.
pub fn kappa(f: &FibrationData, a: i64, b: u32, c: u32) -> Result<RingElement> {
    if a < -1 {
        return Err(EngineError::Other("kappa index a must be >= -1".into()));
    }
    let total = &f.total;
    let mut e = total.pow(&f.canonical, (a + 1) as u32)?;
    if b > 0 {
        let c1 = f
            .c1
            .as_ref()
            .ok_or_else(|| EngineError::BadFibration("fibration carries no c1".into()))?;
        e = total.mul(&e, &total.pow(c1, b)?)?;
    }
    if c > 0 {
        let c2 = f
            .c2
            .as_ref()
            .ok_or_else(|| EngineError::BadFibration("fibration carries no c2".into()))?;
        e = total.mul(&e, &total.pow(c2, c)?)?;
    }
    f.pushforward.apply(&e)
}

/// Name of the formal kappa symbol, e.g. `km120` for indices (-1, 2, 0).
pub fn kappa_symbol(a: i64, b: u32, c: u32) -> String {
    let a_part = if a < 0 {
        format!("m{}", -a)
    } else {
        a.to_string()
    };
    format!("k{a_part}{b}{c}")
}

/// The formal tautological ring at the given cutoff: a free truncated ring
/// on kappa symbols of degree `a+b+2c` between 1 and `cutoff`, together with
/// the genus-2, fiber-degree-3 universal fibration over it. The total space
/// extends the base by formal `K, c1, c2` with the relations `K^2 = 0` (the
/// square of the relative canonical vanishes in these families) and the
/// truncation. The pushforward is defined symbol-wise:
/// `pi_*(K^(a+1) c1^b c2^c) = kappa_{a,b,c}`, with the degree-0 values
/// `pi_*(K) = 2`, `pi_*(c1) = 3`, `pi_*(1) = 0`.
pub fn formal_taut_ring(cutoff: usize) -> Result<(Arc<PresentedRing>, FibrationData)> {
    if cutoff > 4 {
        return Err(EngineError::Other("tautological cutoff capped at 4".into()));
    }
    // All index triples of degree 1..=cutoff (a >= -1; K^2 = 0 makes a >= 1
    // symbols unreachable, but they are still part of the ring).
    let mut symbols: Vec<(i64, u32, u32)> = Vec::new();
    for deg in 1..=(cutoff as i64) {
        for a in -1..=deg {
            for b in 0..=(deg - a).max(0) {
                let rem = deg - a - b;
                if rem >= 0 && rem % 2 == 0 {
                    let c = rem / 2;
                    symbols.push((a, b as u32, c as u32));
                }
            }
        }
    }
    symbols.sort_by_key(|&(a, b, c)| (a + b as i64 + 2 * c as i64, a, b, c));
    let base_gens: Vec<GeneratorSpec> = symbols
        .iter()
        .map(|&(a, b, c)| {
            GeneratorSpec::new(&kappa_symbol(a, b, c), (a + b as i64 + 2 * c as i64) as usize)
        })
        .collect();
    let base = Arc::new(PresentedRing::new(base_gens.clone(), vec![], cutoff)?);

    let mut total_gens = base_gens;
    total_gens.push(GeneratorSpec::new("K", 1));
    total_gens.push(GeneratorSpec::new("c1", 1));
    total_gens.push(GeneratorSpec::new("c2", 2));
    let nk = total_gens.len() - 3;
    let mut k_sq = vec![0u32; total_gens.len()];
    k_sq[nk] = 2;
    let total = Arc::new(PresentedRing::new(
        total_gens,
        vec![vec![(k_sq, Rat::one())]],
        cutoff + 1,
    )?);

    let pullback = Arc::new(RingMorphism::new(
        base.clone(),
        total.clone(),
        base.generators()
            .iter()
            .map(|g| (g.name.clone(), total.gen_elem(&g.name).unwrap()))
            .collect(),
    )?);

    // Table entries on the fiber monomials K^alpha c1^beta c2^gamma.
    let mut entries: Vec<(RingElement, RingElement)> = Vec::new();
    entries.push((total.one(), base.zero()));
    for alpha in 0..=1i64 {
        for beta in 0..=(cutoff as i64 + 1) {
            for gamma in 0..=((cutoff as i64 + 1) / 2) {
                let deg = alpha + beta + 2 * gamma;
                if deg == 0 || deg > cutoff as i64 + 1 {
                    continue;
                }
                let mut exps = vec![0u32; total.generators().len()];
                exps[nk] = alpha as u32;
                exps[nk + 1] = beta as u32;
                exps[nk + 2] = gamma as u32;
                let lhs = total.from_terms(vec![(Monomial(exps), Rat::one())]);
                let (a, b, c) = (alpha - 1, beta as u32, gamma as u32);
                let out_deg = a + b as i64 + 2 * c as i64;
                let rhs = if out_deg < 0 {
                    base.zero()
                } else if out_deg == 0 {
                    // pi(K) = 2g - 2 = 2; pi(c1) = fiber degree 3.
                    if alpha == 1 {
                        base.constant(rat_int(2))
                    } else {
                        base.constant(rat_int(3))
                    }
                } else {
                    base.gen_elem(&kappa_symbol(a, b, c))?
                };
                entries.push((lhs, rhs));
            }
        }
    }
    let pushforward = Arc::new(GradedLinearMap::from_entries(
        total.clone(),
        base.clone(),
        -1,
        entries,
        Some(&pullback),
    )?);

    let canonical = total.gen_elem("K")?;
    let c1 = total.gen_elem("c1")?;
    let c2 = total.gen_elem("c2")?;
    let fib = FibrationData::new(
        total,
        base.clone(),
        pullback,
        pushforward,
        canonical,
        Some(c1),
        Some(c2),
    )?;
    Ok((base, fib))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_ring() -> Arc<PresentedRing> {
        Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("T", 1)],
                vec![vec![(vec![3], Rat::one())]],
                2,
            )
            .unwrap(),
        )
    }

    #[test]
    fn line_bundle_character_is_exponential() {
        let r = Arc::new(PresentedRing::new(vec![GeneratorSpec::new("L", 1)], vec![], 3).unwrap());
        let l = r.gen_elem("L").unwrap();
        let ch = chern_to_character(&r, Rat::one(), &[l], 3).unwrap();
        assert_eq!(ch.parts[0], r.one());
        assert_eq!(ch.parts[1], r.parse_element("L").unwrap());
        assert_eq!(ch.parts[2], r.parse_element("1/2*L^2").unwrap());
        assert_eq!(ch.parts[3], r.parse_element("1/6*L^3").unwrap());
    }

    #[test]
    fn rank_two_character() {
        let r = Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("a", 1), GeneratorSpec::new("b", 2)],
                vec![],
                2,
            )
            .unwrap(),
        );
        let c1 = r.gen_elem("a").unwrap();
        let c2 = r.gen_elem("b").unwrap();
        let ch = chern_to_character(&r, rat_int(2), &[c1, c2], 2).unwrap();
        assert_eq!(ch.parts[0], r.constant(rat_int(2)));
        assert_eq!(ch.parts[1], r.parse_element("a").unwrap());
        assert_eq!(ch.parts[2], r.parse_element("1/2*a^2 - b").unwrap());
    }

    #[test]
    fn character_inversion_round_trip() {
        let r = Arc::new(
            PresentedRing::new(
                vec![GeneratorSpec::new("a", 1), GeneratorSpec::new("b", 2)],
                vec![],
                4,
            )
            .unwrap(),
        );
        let c1 = r.parse_element("3*a").unwrap();
        let c2 = r.parse_element("b + a^2").unwrap();
        let ch = chern_to_character(&r, rat_int(2), &[c1.clone(), c2.clone()], 4).unwrap();
        let (rank, chern) = character_to_chern(&r, &ch).unwrap();
        assert_eq!(rank, rat_int(2));
        assert_eq!(chern[0], c1);
        assert_eq!(chern[1], c2);
        assert!(chern[2].is_zero());
        assert!(chern[3].is_zero());
    }

    #[test]
    fn constant_character_has_no_chern() {
        let r = theta_ring();
        let ch = CharClass {
            parts: vec![r.constant(rat_int(5)), r.zero(), r.zero()],
        };
        let (rank, chern) = character_to_chern(&r, &ch).unwrap();
        assert_eq!(rank, rat_int(5));
        assert!(chern.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn inversion_of_four_minus_theta() {
        let r = theta_ring();
        let ch = CharClass {
            parts: vec![
                r.constant(rat_int(4)),
                r.parse_element("-T").unwrap(),
                r.zero(),
            ],
        };
        let (rank, chern) = character_to_chern(&r, &ch).unwrap();
        assert_eq!(rank, rat_int(4));
        assert_eq!(chern[0], r.parse_element("-T").unwrap());
        assert_eq!(chern[1], r.parse_element("1/2*T^2").unwrap());
    }

    #[test]
    fn todd_series_coefficients() {
        let r = Arc::new(PresentedRing::new(vec![GeneratorSpec::new("K", 1)], vec![], 2).unwrap());
        let k = r.gen_elem("K").unwrap();
        let td = todd_inverse_canonical(&r, &k, 2).unwrap();
        assert_eq!(td.parts[0], r.one());
        assert_eq!(td.parts[1], r.parse_element("-1/2*K").unwrap());
        assert_eq!(td.parts[2], r.parse_element("1/12*K^2").unwrap());
        // K = 0 -> 1.
        let td0 = todd_inverse_canonical(&r, &r.zero(), 2).unwrap();
        assert_eq!(td0.parts[0], r.one());
        assert!(td0.parts[1].is_zero());
    }

    #[test]
    fn formal_ring_lambda_identities() {
        let (base, fib) = formal_taut_ring(1).unwrap();
        let total = fib.total.clone();
        let c1 = total.gen_elem("c1").unwrap();
        let k = total.gen_elem("K").unwrap();
        // det E: Lambda(0,1,0) = 1/2 (km120 - k010).
        let ch = chern_to_character(&total, Rat::one(), &[c1.clone()], 2).unwrap();
        let g = grr_push(&fib, &ch).unwrap();
        assert_eq!(
            g.parts[1],
            base.parse_element("1/2*km120 - 1/2*k010").unwrap()
        );
        // K (x) det E: Lambda(1,1,0) = 1/2 (km120 + k010).
        let kc = total.add(&k, &c1).unwrap();
        let ch = chern_to_character(&total, Rat::one(), &[kc], 2).unwrap();
        let g = grr_push(&fib, &ch).unwrap();
        assert_eq!(
            g.parts[1],
            base.parse_element("1/2*km120 + 1/2*k010").unwrap()
        );
        // E itself: Lambda(0,0,1) = Lambda(0,1,0) - km101.
        let c2 = total.gen_elem("c2").unwrap();
        let ch = chern_to_character(&total, rat_int(2), &[c1, c2], 2).unwrap();
        let g = grr_push(&fib, &ch).unwrap();
        assert_eq!(
            g.parts[1],
            base.parse_element("1/2*km120 - 1/2*k010 - km101").unwrap()
        );
        // Degree-0 part: rank of pi_! E = 3 + 2(1 - 2) = 1.
        assert_eq!(g.parts[0], base.one());
    }

    #[test]
    fn kappa_values_on_formal_ring() {
        let (base, fib) = formal_taut_ring(2).unwrap();
        assert_eq!(kappa(&fib, -1, 2, 0).unwrap(), base.gen_elem("km120").unwrap());
        assert_eq!(kappa(&fib, 0, 1, 0).unwrap(), base.gen_elem("k010").unwrap());
        // Negative output degree: pi_*(1) = 0.
        assert!(kappa(&fib, -1, 0, 0).unwrap().is_zero());
        // K^2 = 0 makes a >= 1 kappas vanish.
        assert!(kappa(&fib, 1, 0, 0).unwrap().is_zero());
    }

    #[test]
    fn grr_additivity() {
        let (_, fib) = formal_taut_ring(2).unwrap();
        let total = fib.total.clone();
        let c1 = total.gen_elem("c1").unwrap();
        let c2 = total.gen_elem("c2").unwrap();
        let k = total.gen_elem("K").unwrap();
        let cha = chern_to_character(&total, rat_int(2), &[c1.clone(), c2], 3).unwrap();
        let chb = chern_to_character(&total, Rat::one(), &[k], 3).unwrap();
        let sum = cha.add(&total, &chb).unwrap();
        let ga = grr_push(&fib, &cha).unwrap();
        let gb = grr_push(&fib, &chb).unwrap();
        let gs = grr_push(&fib, &sum).unwrap();
        for d in 0..=gs.cutoff() {
            let expect = fib.base.add(&ga.parts[d], &gb.parts[d]).unwrap();
            assert_eq!(gs.parts[d], expect, "degree {d}");
        }
    }
}
