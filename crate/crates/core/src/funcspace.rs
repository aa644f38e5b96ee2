//! The evaluation space V = Σ ε_i ⟨1, φ1, …, φ1^{ℓ_i}⟩ φ2^i.
//!
//! A `VSpec` fixes the orientation (which coordinate plays φ1), the locality
//! r (the number of φ2 powers available, at most v(φ1) − 1), the flags ε_i
//! and the degree caps ℓ_i. Because the φ2 exponents stay below v(φ1) and
//! the two valuations are coprime, every basis monomial has a distinct pole
//! order and the sum is direct, so dim V = Σ ε_i (1 + ℓ_i).

use thiserror::Error;

use crate::curve::{Orientation, SepCurve};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FuncSpaceError {
    #[error("locality {r} is outside 1..={max}")]
    LocalityOutOfRange { r: u64, max: u64 },
    #[error("expected {expected} flags and caps, got {got_eps} flags and {got_ells} caps")]
    LengthMismatch { expected: u64, got_eps: usize, got_ells: usize },
    #[error("at least one epsilon flag must be set")]
    EmptySpace,
    #[error("basis monomials do not have pairwise distinct pole orders")]
    DirectSumViolation,
    #[error("the Weierstrass semigroup is not certified to be the generated one; assert it to proceed")]
    UncertifiedSemigroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VSpec {
    orientation: Orientation,
    r: u64,
    epsilons: Vec<bool>,
    ells: Vec<u64>,
}

impl VSpec {
    pub fn new(
        curve: &SepCurve,
        orientation: Orientation,
        r: Option<u64>,
        epsilons: Vec<bool>,
        mut ells: Vec<u64>,
    ) -> Result<VSpec, FuncSpaceError> {
        let v1 = curve.phi1_valuation(orientation);
        let max_r = v1.saturating_sub(1);
        let r = r.unwrap_or(max_r);
        if r < 1 || r > max_r {
            return Err(FuncSpaceError::LocalityOutOfRange { r, max: max_r });
        }
        if epsilons.len() as u64 != r || ells.len() as u64 != r {
            return Err(FuncSpaceError::LengthMismatch {
                expected: r,
                got_eps: epsilons.len(),
                got_ells: ells.len(),
            });
        }
        if !epsilons.iter().any(|&e| e) {
            return Err(FuncSpaceError::EmptySpace);
        }
        for (i, &e) in epsilons.iter().enumerate() {
            if !e {
                ells[i] = 0;
            }
        }
        let spec = VSpec { orientation, r, epsilons, ells };
        // Constructive direct-sum check; guaranteed by coprimality, but cheap.
        let mut orders = spec.pole_orders(curve);
        orders.sort_unstable();
        if orders.windows(2).any(|w| w[0] == w[1]) {
            return Err(FuncSpaceError::DirectSumViolation);
        }
        Ok(spec)
    }

    /// The complete space V_m: every monomial φ2^i φ1^j with i < r and pole
    /// order at most m. Flags ε_i = 1 for i ≤ min(r−1, ⌊m/v(φ2)⌋) and caps
    /// ℓ_i = ⌊(m − i·v(φ2)) / v(φ1)⌋.
    pub fn complete(
        curve: &SepCurve,
        orientation: Orientation,
        r: Option<u64>,
        m: u64,
    ) -> Result<VSpec, FuncSpaceError> {
        let v1 = curve.phi1_valuation(orientation);
        let v2 = curve.phi2_valuation(orientation);
        let max_r = v1.saturating_sub(1);
        let r = r.unwrap_or(max_r);
        if r < 1 || r > max_r {
            return Err(FuncSpaceError::LocalityOutOfRange { r, max: max_r });
        }
        let s_max = (r - 1).min(m / v2);
        let mut epsilons = vec![false; r as usize];
        let mut ells = vec![0u64; r as usize];
        for i in 0..=s_max {
            epsilons[i as usize] = true;
            ells[i as usize] = (m - i * v2) / v1;
        }
        VSpec::new(curve, orientation, Some(r), epsilons, ells)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn locality(&self) -> u64 {
        self.r
    }

    pub fn epsilons(&self) -> &[bool] {
        &self.epsilons
    }

    pub fn ells(&self) -> &[u64] {
        &self.ells
    }

    pub fn epsilon(&self, i: usize) -> bool {
        self.epsilons.get(i).copied().unwrap_or(false)
    }

    pub fn ell(&self, i: usize) -> u64 {
        self.ells.get(i).copied().unwrap_or(0)
    }

    /// Basis monomials as (φ2 exponent, φ1 exponent), φ2 exponent ascending,
    /// φ1 exponent ascending within it.
    pub fn basis(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, &e) in self.epsilons.iter().enumerate() {
            if !e {
                continue;
            }
            for j in 0..=self.ells[i] {
                out.push((i as u64, j));
            }
        }
        out
    }

    /// Pole orders of the basis monomials, in basis order.
    pub fn pole_orders(&self, curve: &SepCurve) -> Vec<u64> {
        let v1 = curve.phi1_valuation(self.orientation);
        let v2 = curve.phi2_valuation(self.orientation);
        self.basis().iter().map(|&(i, j)| i * v2 + j * v1).collect()
    }

    /// m(V) = max over active i of ℓ_i·v(φ1) + i·v(φ2).
    pub fn pole_bound(&self, curve: &SepCurve) -> u64 {
        let v1 = curve.phi1_valuation(self.orientation);
        let v2 = curve.phi2_valuation(self.orientation);
        self.epsilons
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(|(i, _)| self.ells[i] * v1 + i as u64 * v2)
            .max()
            .expect("at least one epsilon is set")
    }

    /// ℓ(V) = Σ ε_i (1 + ℓ_i).
    pub fn dim(&self) -> u64 {
        self.epsilons
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(|(i, _)| 1 + self.ells[i])
            .sum()
    }

    /// V is complete when it equals the complete space of its own pole bound.
    pub fn is_complete(&self, curve: &SepCurve) -> bool {
        match VSpec::complete(curve, self.orientation, Some(self.r), self.pole_bound(curve)) {
            Ok(full) => full == *self,
            Err(_) => false,
        }
    }

    /// Whether V is the full space of functions with pole order ≤ m(V) at Q.
    /// Needs the semigroup certificate: true iff V is complete, uses the full
    /// locality r = v(φ1) − 1, and m(V) < v(φ2)·(v(φ1) − 1).
    pub fn equals_riemann_space(&self, curve: &SepCurve) -> Result<bool, FuncSpaceError> {
        if !curve.weierstrass_certificate().is_certified() {
            return Err(FuncSpaceError::UncertifiedSemigroup);
        }
        let v1 = curve.phi1_valuation(self.orientation);
        let v2 = curve.phi2_valuation(self.orientation);
        Ok(self.r == v1 - 1
            && self.pole_bound(curve) < v2 * (v1 - 1)
            && self.is_complete(curve))
    }

    /// ℓ(mQ) − ℓ(V) with m = m(V), computed by semigroup counting. Needs the
    /// semigroup certificate.
    pub fn riemann_gap(&self, curve: &SepCurve) -> Result<u64, FuncSpaceError> {
        if !curve.weierstrass_certificate().is_certified() {
            return Err(FuncSpaceError::UncertifiedSemigroup);
        }
        let iota = curve.semigroup().iota(self.pole_bound(curve) as i64);
        Ok(iota - self.dim())
    }

    /// Closed form of the gap for complete spaces with full locality:
    /// 0 below v(φ2)(v(φ1)−1), else 1 + ⌊(m − v(φ2)(v(φ1)−1)) / v(φ1)⌋.
    /// Returns `None` when the hypotheses do not hold.
    pub fn riemann_gap_closed_form(&self, curve: &SepCurve) -> Option<u64> {
        let v1 = curve.phi1_valuation(self.orientation);
        let v2 = curve.phi2_valuation(self.orientation);
        if self.r != v1 - 1 || !self.is_complete(curve) {
            return None;
        }
        let m = self.pole_bound(curve);
        let threshold = v2 * (v1 - 1);
        Some(if m < threshold { 0 } else { 1 + (m - threshold) / v1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{Field, UniPoly};

    fn curve(p: u64, m: u32, a: &[u64], b: &[u64]) -> SepCurve {
        let f = Field::new(p, m, None).unwrap();
        SepCurve::new(
            f.clone(),
            UniPoly::from_values(&f, a).unwrap(),
            UniPoly::from_values(&f, b).unwrap(),
        )
        .unwrap()
    }

    fn hermitian16() -> SepCurve {
        curve(2, 4, &[0, 0, 0, 0, 0, 1], &[0, 1, 0, 0, 1])
    }

    fn elliptic() -> SepCurve {
        curve(13, 1, &[0, 0, 1], &[2, 0, 0, 1]).with_asserted_semigroup()
    }

    fn kondo() -> SepCurve {
        curve(2, 6, &[0, 1, 1], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1])
    }

    fn quotient() -> SepCurve {
        curve(2, 6, &[0, 0, 0, 1], &[0, 1, 0, 0, 0, 0, 0, 0, 1])
    }

    fn explicit(c: &SepCurve, o: Orientation, ells: &[u64]) -> VSpec {
        VSpec::new(c, o, None, vec![true; ells.len()], ells.to_vec()).unwrap()
    }

    #[test]
    fn pole_bound_examples() {
        let c = hermitian16();
        let v = explicit(&c, Orientation::Y, &[16, 15, 14]);
        assert_eq!(v.pole_bound(&c), 66);
        assert_eq!(v.dim(), 48);

        let c = elliptic();
        let v = explicit(&c, Orientation::Y, &[2, 2]);
        assert_eq!(v.pole_bound(&c), 8);
        assert_eq!(v.dim(), 6);

        let v = VSpec::new(&c, Orientation::Y, Some(1), vec![true], vec![0]).unwrap();
        assert_eq!(v.pole_bound(&c), 0);
        assert_eq!(v.dim(), 1);
    }

    #[test]
    fn completion_examples() {
        let c = kondo();
        let v = VSpec::complete(&c, Orientation::Y, None, 50).unwrap();
        assert_eq!(v.ells(), &[5, 5, 5, 4, 4, 4, 4, 4]);
        assert_eq!(v.dim(), 43);

        let c = quotient();
        let v = VSpec::complete(&c, Orientation::Y, None, 50).unwrap();
        assert_eq!(v.ells(), &[6, 5, 5, 5, 4, 4, 4]);
        assert_eq!(v.dim(), 40);

        let v = VSpec::complete(&c, Orientation::X, None, 50).unwrap();
        assert_eq!(v.ells(), &[16, 14]);
        assert_eq!(v.dim(), 32);
        assert_eq!(v.pole_bound(&c), 50);
    }

    #[test]
    fn completeness() {
        let c = elliptic();
        let v = explicit(&c, Orientation::Y, &[2, 2]);
        assert!(v.is_complete(&c));

        let c = hermitian16();
        let v = explicit(&c, Orientation::Y, &[13, 13, 13]);
        assert_eq!(v.pole_bound(&c), 62);
        assert!(!v.is_complete(&c));
        let full = VSpec::complete(&c, Orientation::Y, None, 62).unwrap();
        assert_eq!(full.ells(), &[15, 14, 13]);

        let v = VSpec::complete(&c, Orientation::Y, None, 0).unwrap();
        assert!(v.is_complete(&c));
        assert_eq!(v.dim(), 1);
    }

    #[test]
    fn riemann_space_comparison() {
        let c = elliptic();
        let v = explicit(&c, Orientation::Y, &[2, 2]);
        // m = 8 ≥ a(b−1) = 4: gap = 1 + ⌊4/3⌋ = 2.
        assert!(!v.equals_riemann_space(&c).unwrap());
        assert_eq!(v.riemann_gap(&c).unwrap(), 2);
        assert_eq!(v.riemann_gap_closed_form(&c), Some(2));

        // Complete space below the threshold coincides with the Riemann space.
        let small = VSpec::complete(&c, Orientation::Y, None, 3).unwrap();
        assert!(small.equals_riemann_space(&c).unwrap());
        assert_eq!(small.riemann_gap(&c).unwrap(), 0);

        let c = kondo();
        let v = VSpec::complete(&c, Orientation::Y, None, 50).unwrap();
        assert_eq!(v.riemann_gap(&c).unwrap(), 4);
        assert_eq!(v.riemann_gap_closed_form(&c), Some(4));

        let c16 = hermitian16();
        let v = explicit(&c16, Orientation::Y, &[16, 15, 14]);
        assert!(v.is_complete(&c16));
        assert_eq!(v.riemann_gap(&c16).unwrap(), 13);
        assert_eq!(v.riemann_gap_closed_form(&c16), Some(13));
    }

    #[test]
    fn uncertified_semigroup_is_an_error() {
        let c = curve(13, 1, &[0, 0, 1], &[2, 0, 0, 1]); // no assertion
        let v = explicit(&c, Orientation::Y, &[2, 2]);
        assert_eq!(
            v.riemann_gap(&c).unwrap_err(),
            FuncSpaceError::UncertifiedSemigroup
        );
        assert!(v.equals_riemann_space(&c).is_err());
    }

    #[test]
    fn construction_errors() {
        let c = elliptic();
        assert!(matches!(
            VSpec::new(&c, Orientation::Y, Some(5), vec![true; 5], vec![0; 5]),
            Err(FuncSpaceError::LocalityOutOfRange { r: 5, max: 2 })
        ));
        assert!(matches!(
            VSpec::new(&c, Orientation::Y, None, vec![false, false], vec![0, 0]),
            Err(FuncSpaceError::EmptySpace)
        ));
        assert!(matches!(
            VSpec::new(&c, Orientation::Y, None, vec![true], vec![0, 0]),
            Err(FuncSpaceError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn completion_contains_every_valid_space() {
        let c = quotient();
        for o in [Orientation::Y, Orientation::X] {
            let max_r = c.phi1_valuation(o) - 1;
            for r in 1..=max_r {
                let eps: Vec<bool> = (0..r).map(|i| i % 2 == 0).collect();
                let ells: Vec<u64> = (0..r).map(|i| (i * 3 + 2) % 7).collect();
                let v = match VSpec::new(&c, o, Some(r), eps, ells) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                let m = v.pole_bound(&c);
                let full = VSpec::complete(&c, o, Some(r), m).unwrap();
                // monomial-wise containment
                let full_basis = full.basis();
                for mono in v.basis() {
                    assert!(full_basis.contains(&mono), "{mono:?} missing from V_{m}");
                }
                assert!(full.pole_bound(&c) <= m);
            }
        }
    }

    #[test]
    fn riemann_equality_matches_semigroup_counting() {
        let c = kondo();
        for m in 0..=20u64 {
            let v = VSpec::complete(&c, Orientation::Y, None, m).unwrap();
            if v.equals_riemann_space(&c).unwrap() {
                // compare against the space's own pole bound: completion may
                // fall short of the requested m when m needs a barred exponent
                let mv = v.pole_bound(&c);
                let orders = v.pole_orders(&c);
                assert_eq!(orders.len() as u64, c.semigroup().iota(mv as i64));
                for h in orders {
                    assert!(c.semigroup().contains(h as i64));
                    assert!(h <= mv);
                }
            }
        }
    }
}
