//! The numerical semigroup H = ⟨a,b⟩ for coprime generators, together with
//! the counting functions behind every parameter bound: membership, the
//! enumeration h_1 = 0 < h_2 < …, and ι(m) = #{ members ≤ m }.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generators {a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("generators must be positive")]
    ZeroGenerator,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// H = ⟨a,b⟩ with gcd(a,b) = 1. Genus (a−1)(b−1)/2, conductor (a−1)(b−1);
/// every integer at or above the conductor belongs to H.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    a: u64,
    b: u64,
    genus: u64,
    conductor: u64,
    /// Members strictly below the conductor, ascending. There are exactly
    /// conductor − genus of them.
    small_members: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn new(a: u64, b: u64) -> Result<NumericalSemigroup, SemigroupError> {
        if a == 0 || b == 0 {
            return Err(SemigroupError::ZeroGenerator);
        }
        if gcd(a, b) != 1 {
            return Err(SemigroupError::NotCoprime { a, b });
        }
        let conductor = (a - 1) * (b - 1);
        let genus = conductor / 2;
        let mut member = vec![false; conductor as usize + 1];
        member[0] = true;
        for i in 0..member.len() {
            if member[i] {
                if i as u64 + a <= conductor {
                    member[i + a as usize] = true;
                }
                if i as u64 + b <= conductor {
                    member[i + b as usize] = true;
                }
            }
        }
        let small_members: Vec<u64> = (0..conductor).filter(|&n| member[n as usize]).collect();
        debug_assert_eq!(small_members.len() as u64, conductor - genus);
        Ok(NumericalSemigroup { a, b, genus, conductor, small_members })
    }

    pub fn generators(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Membership: is n = λa + μb for some λ, μ ≥ 0? Negative n never is.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        if n >= self.conductor {
            return true;
        }
        self.small_members.binary_search(&n).is_ok()
    }

    /// The t-th smallest member (1-based): h_1 = 0.
    pub fn element_at(&self, t: u64) -> u64 {
        assert!(t >= 1, "member indices are 1-based");
        let idx = t - 1;
        if (idx as usize) < self.small_members.len() {
            self.small_members[idx as usize]
        } else {
            self.conductor + (idx - self.small_members.len() as u64)
        }
    }

    /// ι(m) = #{ members ≤ m }; 0 for negative m, and m + 1 − genus once m
    /// is past the conductor.
    pub fn iota(&self, m: i64) -> u64 {
        if m < 0 {
            return 0;
        }
        let m = m as u64;
        if m >= self.conductor {
            return m + 1 - self.genus;
        }
        match self.small_members.binary_search(&m) {
            Ok(i) => i as u64 + 1,
            Err(i) => i as u64,
        }
    }

    /// The gaps (non-members), all below the conductor; there are `genus` of them.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&n| !self.contains(n as i64)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent membership oracle by direct double enumeration.
    fn brute_contains(a: u64, b: u64, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        (0..=n / a).any(|lam| (n - lam * a) % b == 0)
    }

    #[test]
    fn construction_rejects_bad_generators() {
        assert_eq!(
            NumericalSemigroup::new(2, 4).unwrap_err(),
            SemigroupError::NotCoprime { a: 2, b: 4 }
        );
        assert_eq!(
            NumericalSemigroup::new(0, 3).unwrap_err(),
            SemigroupError::ZeroGenerator
        );
    }

    #[test]
    fn membership_2_9() {
        let h = NumericalSemigroup::new(2, 9).unwrap();
        assert!(!h.contains(7));
        assert!(h.contains(11));
        assert!(h.contains(0));
        for n in -5..40 {
            assert_eq!(h.contains(n), brute_contains(2, 9, n), "n={n}");
        }
    }

    #[test]
    fn only_gap_of_2_3_is_one() {
        let h = NumericalSemigroup::new(2, 3).unwrap();
        assert_eq!(h.genus(), 1);
        assert!(!h.contains(1));
        assert_eq!(h.gaps(), vec![1]);
    }

    #[test]
    fn element_enumeration() {
        let h = NumericalSemigroup::new(2, 3).unwrap();
        let first: Vec<u64> = (1..=6).map(|t| h.element_at(t)).collect();
        assert_eq!(first, vec![0, 2, 3, 4, 5, 6]);

        let h = NumericalSemigroup::new(2, 9).unwrap();
        assert_eq!(h.element_at(2), 2);
        assert_eq!(h.element_at(3), 4);
        assert_eq!(h.element_at(5), 8);
        assert_eq!(h.element_at(1), 0);
    }

    #[test]
    fn iota_values() {
        let h = NumericalSemigroup::new(4, 5).unwrap();
        assert_eq!(h.iota(2), 1);
        let h = NumericalSemigroup::new(2, 3).unwrap();
        assert_eq!(h.iota(5), 5);
        assert_eq!(h.iota(0), 1);
        assert_eq!(h.iota(-3), 0);
    }

    #[test]
    fn iota_and_element_at_are_mutually_inverse() {
        for (a, b) in [(2u64, 3u64), (2, 9), (4, 5), (3, 8), (5, 7), (1, 4)] {
            let h = NumericalSemigroup::new(a, b).unwrap();
            for t in 1..60 {
                assert_eq!(h.iota(h.element_at(t) as i64), t);
            }
            for m in 0..80i64 {
                let t = h.iota(m);
                if t > 0 {
                    assert!(h.element_at(t) as i64 <= m);
                }
                assert!(h.element_at(t + 1) as i64 > m);
                // ι moves by steps of 0 or 1
                let step = h.iota(m) - h.iota(m - 1);
                assert!(step <= 1);
            }
        }
    }

    #[test]
    fn riemann_roch_tail() {
        for (a, b) in [(2u64, 3u64), (2, 9), (4, 5), (3, 8), (7, 9)] {
            let h = NumericalSemigroup::new(a, b).unwrap();
            let g = h.genus();
            for m in (2 * g) as i64..(2 * g + 30) as i64 {
                assert_eq!(h.iota(m), (m as u64) + 1 - g);
            }
            assert_eq!(h.gaps().len() as u64, g);
        }
    }

    #[test]
    fn degenerate_generator_one() {
        let h = NumericalSemigroup::new(1, 3).unwrap();
        assert_eq!(h.genus(), 0);
        assert_eq!(h.conductor(), 0);
        for n in 0..10 {
            assert!(h.contains(n));
        }
        assert_eq!(h.element_at(4), 3);
        assert_eq!(h.iota(9), 10);
    }
}
