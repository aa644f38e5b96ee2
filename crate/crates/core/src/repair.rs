//! Local recovery of one erased coordinate.
//!
//! Inside a totally split fibre every function of V restricts to a
//! polynomial of degree < r in φ2, so r in-fibre symbols determine the
//! erased one by Lagrangian interpolation. When the fibre polynomial has
//! vanishing power sums (and the characteristic or the ε_0 flag cooperates)
//! the whole fibre sums to zero on every codeword, and the erased symbol is
//! simply the negated sum of its companions.

use thiserror::Error;

use crate::code::LrcCode;
use crate::galois::FieldElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepairError {
    #[error("position {0} is out of range")]
    PositionOutOfRange(usize),
    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("symbol at position {0} is needed but missing")]
    MissingSymbol(usize),
    #[error("two recovery symbols share a φ2 value; the fibre data is corrupt")]
    DuplicateAbscissa,
    #[error("one-addition recovery does not apply: {0}")]
    NotApplicable(String),
    #[error("recovery paths disagree at position {0}; input is not a codeword")]
    CrossCheckMismatch(usize),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RepairMethod {
    Lagrange,
    OneAddition,
}

impl RepairMethod {
    pub fn label(self) -> &'static str {
        match self {
            RepairMethod::Lagrange => "lagrange",
            RepairMethod::OneAddition => "one-addition",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RepairResult {
    pub value: FieldElement,
    pub method: RepairMethod,
    pub symbols_read: usize,
}

impl LrcCode {
    fn check_position(&self, symbols: &[Option<FieldElement>], position: usize) -> Result<(), RepairError> {
        let n = self.points().len();
        if symbols.len() != n {
            return Err(RepairError::LengthMismatch { expected: n, got: symbols.len() });
        }
        if position >= n {
            return Err(RepairError::PositionOutOfRange(position));
        }
        Ok(())
    }

    /// The r companion positions used to repair `position`, smallest φ2
    /// canonical value first. In-fibre points are already φ2-sorted, so this
    /// is the first r other positions of the fibre block.
    pub fn recovery_set(&self, position: usize) -> Vec<usize> {
        let (fibre_idx, in_idx) = self.recovery_map(position);
        let size = self.fibres()[fibre_idx].points.len();
        let base = position - in_idx;
        (0..size)
            .filter(|&j| j != in_idx)
            .take(self.locality() as usize)
            .map(|j| base + j)
            .collect()
    }

    /// Interpolate the degree < r restriction of the codeword's function to
    /// the fibre and evaluate it at the erased point. Reads exactly r symbols.
    pub fn recover_lagrange(
        &self,
        symbols: &[Option<FieldElement>],
        position: usize,
    ) -> Result<RepairResult, RepairError> {
        self.check_position(symbols, position)?;
        let field = self.curve().field().clone();
        let orientation = self.orientation();
        let target_x = self.points()[position].phi2(orientation);
        let set = self.recovery_set(position);
        let mut xs = Vec::with_capacity(set.len());
        let mut ys = Vec::with_capacity(set.len());
        for &p in &set {
            xs.push(self.points()[p].phi2(orientation));
            ys.push(symbols[p].ok_or(RepairError::MissingSymbol(p))?);
        }
        let mut value = FieldElement::ZERO;
        for j in 0..xs.len() {
            let mut term = ys[j];
            for l in 0..xs.len() {
                if l == j {
                    continue;
                }
                let denom = field.sub(xs[j], xs[l]);
                let ratio = field
                    .div(field.sub(target_x, xs[l]), denom)
                    .map_err(|_| RepairError::DuplicateAbscissa)?;
                term = field.mul(term, ratio);
            }
            value = field.add(value, term);
        }
        Ok(RepairResult { value, method: RepairMethod::Lagrange, symbols_read: xs.len() })
    }

    /// The erased symbol as the negated sum of all its fibre companions.
    /// Reads fibre size − 1 symbols, which exceeds r when r < v(φ1) − 1.
    pub fn recover_one_addition(
        &self,
        symbols: &[Option<FieldElement>],
        position: usize,
    ) -> Result<RepairResult, RepairError> {
        self.check_position(symbols, position)?;
        let check = self.curve().one_addition_applicable(self.vspec());
        if !check.applicable {
            return Err(RepairError::NotApplicable(check.reason));
        }
        let field = self.curve().field().clone();
        let (fibre_idx, in_idx) = self.recovery_map(position);
        let size = self.fibres()[fibre_idx].points.len();
        let base = position - in_idx;
        let mut sum = FieldElement::ZERO;
        for j in 0..size {
            if j == in_idx {
                continue;
            }
            let s = symbols[base + j].ok_or(RepairError::MissingSymbol(base + j))?;
            sum = field.add(sum, s);
        }
        Ok(RepairResult {
            value: field.neg(sum),
            method: RepairMethod::OneAddition,
            symbols_read: size - 1,
        })
    }

    /// One-addition when applicable, Lagrange otherwise.
    pub fn repair(
        &self,
        symbols: &[Option<FieldElement>],
        position: usize,
    ) -> Result<RepairResult, RepairError> {
        if self.curve().one_addition_applicable(self.vspec()).applicable {
            self.recover_one_addition(symbols, position)
        } else {
            self.recover_lagrange(symbols, position)
        }
    }

    /// Run both paths when both apply and insist they agree; useful for
    /// verification sweeps.
    pub fn repair_cross_checked(
        &self,
        symbols: &[Option<FieldElement>],
        position: usize,
    ) -> Result<RepairResult, RepairError> {
        let lagrange = self.recover_lagrange(symbols, position)?;
        match self.recover_one_addition(symbols, position) {
            Ok(one_add) => {
                if one_add.value != lagrange.value {
                    return Err(RepairError::CrossCheckMismatch(position));
                }
                Ok(one_add)
            }
            Err(RepairError::NotApplicable(_)) => Ok(lagrange),
            Err(e) => Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{FibreSelection, LrcCode};
    use crate::curve::{Orientation, SepCurve};
    use crate::funcspace::VSpec;
    use crate::galois::{Field, UniPoly};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn curve(p: u64, m: u32, a: &[u64], b: &[u64]) -> SepCurve {
        let f = Field::new(p, m, None).unwrap();
        SepCurve::new(
            f.clone(),
            UniPoly::from_values(&f, a).unwrap(),
            UniPoly::from_values(&f, b).unwrap(),
        )
        .unwrap()
    }

    fn rational_code() -> LrcCode {
        let c = curve(13, 1, &[0, 1], &[0, 0, 0, 1]);
        let v = VSpec::new(&c, Orientation::Y, None, vec![true, true], vec![0, 0]).unwrap();
        LrcCode::build(c, v, FibreSelection::Explicit(vec![1, 8, 12])).unwrap()
    }

    fn hermitian_code() -> LrcCode {
        let c = curve(2, 4, &[0, 0, 0, 0, 0, 1], &[0, 1, 0, 0, 1]);
        let v = VSpec::new(&c, Orientation::Y, None, vec![true; 3], vec![13, 13, 13]).unwrap();
        LrcCode::build(c, v, FibreSelection::AllSplit).unwrap()
    }

    fn elliptic_code() -> LrcCode {
        let c = curve(13, 1, &[0, 0, 1], &[2, 0, 0, 1]).with_asserted_semigroup();
        let v = VSpec::complete(&c, Orientation::Y, None, 8).unwrap();
        LrcCode::build(c, v, FibreSelection::AllSplit).unwrap()
    }

    fn random_message(code: &LrcCode, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
        let f = code.curve().field().clone();
        (0..code.dim_v())
            .map(|_| f.element(rng.gen_range(0..u64::from(f.q()))).unwrap())
            .collect()
    }

    #[test]
    fn recovery_sets() {
        let code = rational_code();
        // fibre over y=1 is the first block, x-values (1, 3, 9)
        let xs: Vec<u32> = code.points()[..3].iter().map(|p| p.x.value()).collect();
        assert_eq!(xs, vec![1, 3, 9]);
        assert_eq!(code.recovery_set(2), vec![0, 1]);
        assert_eq!(code.recovery_set(0), vec![1, 2]);

        let c = curve(2, 6, &[0, 1, 1], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let v = VSpec::complete(&c, Orientation::Y, None, 50).unwrap();
        let kondo = LrcCode::build(c, v, FibreSelection::AllSplit).unwrap();
        for pos in [0usize, 17, 125] {
            assert_eq!(kondo.recovery_set(pos).len(), 8);
        }
    }

    #[test]
    fn lagrange_worked_example() {
        let code = rational_code();
        let f = code.curve().field().clone();
        // f = 1 + 2x gives (3, 7, 6) on the first fibre; erase the third
        let msg = vec![f.element(1).unwrap(), f.element(2).unwrap()];
        let cw = code.encode(&msg).unwrap();
        let mut symbols: Vec<Option<FieldElement>> = cw.iter().map(|&v| Some(v)).collect();
        symbols[2] = None;
        let res = code.recover_lagrange(&symbols, 2).unwrap();
        assert_eq!(res.value.value(), 6);
        assert_eq!(res.method, RepairMethod::Lagrange);
        assert_eq!(res.symbols_read, 2);
    }

    #[test]
    fn constant_codeword_recovers_constant() {
        let code = elliptic_code();
        let f = code.curve().field().clone();
        let mut msg = vec![FieldElement::ZERO; code.dim_v() as usize];
        msg[0] = f.element(7).unwrap();
        let cw = code.encode(&msg).unwrap();
        for pos in 0..code.n() as usize {
            let mut symbols: Vec<Option<FieldElement>> = cw.iter().map(|&v| Some(v)).collect();
            symbols[pos] = None;
            let res = code.repair(&symbols, pos).unwrap();
            assert_eq!(res.value, cw[pos]);
            assert_eq!(res.method, RepairMethod::Lagrange);
        }
    }

    #[test]
    fn one_addition_dispatch_and_agreement() {
        let code = hermitian_code();
        assert!(code.curve().one_addition_applicable(code.vspec()).applicable);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let msg = random_message(&code, &mut rng);
            let cw = code.encode(&msg).unwrap();
            let pos = rng.gen_range(0..cw.len());
            let mut symbols: Vec<Option<FieldElement>> = cw.iter().map(|&v| Some(v)).collect();
            symbols[pos] = None;
            let res = code.repair(&symbols, pos).unwrap();
            assert_eq!(res.method, RepairMethod::OneAddition);
            assert_eq!(res.value, cw[pos]);
            assert_eq!(res.symbols_read, 3);
            let cross = code.repair_cross_checked(&symbols, pos).unwrap();
            assert_eq!(cross.value, cw[pos]);
        }
    }

    #[test]
    fn elliptic_reports_not_applicable() {
        let code = elliptic_code();
        let cw = code.encode(&vec![FieldElement::ZERO; 6]).unwrap();
        let symbols: Vec<Option<FieldElement>> = cw.iter().map(|&v| Some(v)).collect();
        match code.recover_one_addition(&symbols, 0) {
            Err(RepairError::NotApplicable(reason)) => {
                assert!(reason.contains("does not divide"), "{reason}");
            }
            other => panic!("expected NotApplicable, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_over_random_messages() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for code in [rational_code(), elliptic_code(), hermitian_code()] {
            for _ in 0..100 {
                let msg = random_message(&code, &mut rng);
                let cw = code.encode(&msg).unwrap();
                let pos = rng.gen_range(0..cw.len());
                let mut symbols: Vec<Option<FieldElement>> =
                    cw.iter().map(|&v| Some(v)).collect();
                symbols[pos] = None;
                let res = code.repair(&symbols, pos).unwrap();
                assert_eq!(res.value, cw[pos]);
            }
        }
    }

    #[test]
    fn locality_certificate_by_rank() {
        // two codewords agreeing on a recovery set agree at the position:
        // rank(G on R ∪ {e}) = rank(G on R) for every position
        for code in [rational_code(), elliptic_code()] {
            for e in 0..code.n() as usize {
                let set = code.recovery_set(e);
                let with: Vec<usize> =
                    set.iter().copied().chain(std::iter::once(e)).collect();
                let g = code.generator();
                assert_eq!(
                    g.select_columns(&set).rank(),
                    g.select_columns(&with).rank(),
                    "position {e}"
                );
            }
        }
    }

    #[test]
    fn missing_symbol_detected() {
        let code = rational_code();
        let symbols: Vec<Option<FieldElement>> = vec![None; 9];
        assert!(matches!(
            code.recover_lagrange(&symbols, 0),
            Err(RepairError::MissingSymbol(_))
        ));
        assert!(matches!(
            code.recover_lagrange(&symbols[..4], 0),
            Err(RepairError::LengthMismatch { expected: 9, got: 4 })
        ));
        assert!(matches!(
            code.recover_lagrange(&symbols, 99),
            Err(RepairError::PositionOutOfRange(99))
        ));
    }
}
