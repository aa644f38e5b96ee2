//! The separated-variable curve A(Y) = B(X) over GF(q).
//!
//! Only the coprime-degree case gcd(deg A, deg B) = 1 is accepted. Writing
//! a = deg A and b = deg B, the functions x and y then have a single common
//! pole Q with pole orders v(x) = a and v(y) = b, and the semigroup ⟨a,b⟩
//! sits inside the Weierstrass semigroup at Q. Certificates record when
//! ⟨a,b⟩ is known to be the whole semigroup.

use std::sync::OnceLock;

use thiserror::Error;

use crate::funcspace::VSpec;
use crate::galois::{Field, FieldElement, UniPoly};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("defining polynomials must be nonzero")]
    ZeroPolynomial,
    #[error("defining polynomials must have degree at least 1")]
    ConstantPolynomial,
    #[error("degrees {a} and {b} are not coprime")]
    DegreesNotCoprime { a: u64, b: u64 },
    #[error("power sums need polynomial degree at least 2, got {degree}")]
    DegreeTooSmall { degree: usize },
}

impl From<SemigroupError> for CurveError {
    fn from(e: SemigroupError) -> Self {
        match e {
            SemigroupError::NotCoprime { a, b } => CurveError::DegreesNotCoprime { a, b },
            SemigroupError::ZeroGenerator => CurveError::ConstantPolynomial,
        }
    }
}

/// Which coordinate is held constant on a fibre: `Y` groups points by their
/// y-value (φ1 = y, φ2 = x), `X` groups by the x-value (φ1 = x, φ2 = y).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Y,
    X,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Y => Orientation::X,
            Orientation::X => Orientation::Y,
        }
    }
}

/// Why A(Y) − B(X) is known to be absolutely irreducible.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// gcd(deg A, deg B) = 1 already forces absolute irreducibility.
    CoprimeDegrees,
    /// One side is a linearized polynomial with nonzero linear term and the
    /// other degree is ≥ 2 and prime to the characteristic.
    Linearized,
    UserAsserted,
}

/// Whether the Weierstrass semigroup at Q is known to equal ⟨a,b⟩.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WeierstrassCertificate {
    /// Only ⟨a,b⟩ ⊆ H is guaranteed; counting functions may undershoot.
    CoprimeAssumed,
    /// B is linearized with nonzero linear coefficient, a ≥ 2, a ∤ char.
    LinearizedB,
    /// Mirror image: A is linearized with nonzero linear coefficient,
    /// b ≥ 2, b ∤ char.
    LinearizedA,
    /// min(a,b) = 1, so some coordinate has pole order one and H is all of ℕ.
    PoleOrderOne,
    UserAsserted,
}

impl WeierstrassCertificate {
    pub fn is_certified(self) -> bool {
        !matches!(self, WeierstrassCertificate::CoprimeAssumed)
    }

    pub fn label(self) -> &'static str {
        match self {
            WeierstrassCertificate::CoprimeAssumed => "coprime-assumed",
            WeierstrassCertificate::LinearizedB => "linearized-B",
            WeierstrassCertificate::LinearizedA => "linearized-A",
            WeierstrassCertificate::PoleOrderOne => "pole-order-one",
            WeierstrassCertificate::UserAsserted => "user-asserted",
        }
    }
}

/// An affine rational point (x, y) with A(y) = B(x).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    /// The coordinate that is constant on fibres of the given orientation.
    pub fn phi1(&self, orientation: Orientation) -> FieldElement {
        match orientation {
            Orientation::Y => self.y,
            Orientation::X => self.x,
        }
    }

    /// The coordinate that separates the points inside a fibre.
    pub fn phi2(&self, orientation: Orientation) -> FieldElement {
        match orientation {
            Orientation::Y => self.x,
            Orientation::X => self.y,
        }
    }
}

/// A nonempty fibre of φ1, its points ordered by the φ2 canonical value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibre {
    pub base: FieldElement,
    pub orientation: Orientation,
    pub points: Vec<AffinePoint>,
    /// True when the fibre carries the full v(φ1) distinct rational points.
    pub totally_split: bool,
}

/// Power sums π_1..π_{s−2} of the roots of the φ2-defining polynomial,
/// computed from its coefficients alone (the constant term never enters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    pub orientation: Orientation,
    pub degree: usize,
    pub pi: Vec<FieldElement>,
}

/// Outcome of the one-addition applicability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneAdditionCheck {
    pub applicable: bool,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct SepCurve {
    field: Field,
    a_poly: UniPoly,
    b_poly: UniPoly,
    a: u64,
    b: u64,
    semigroup: NumericalSemigroup,
    irreducibility: IrreducibilityCertificate,
    weierstrass: WeierstrassCertificate,
    points: OnceLock<Vec<AffinePoint>>,
}

fn is_power_of(mut e: u64, p: u64) -> bool {
    if e == 0 {
        return false;
    }
    while e % p == 0 {
        e /= p;
    }
    e == 1
}

/// All exponents with nonzero coefficient are powers of the characteristic
/// (so in particular there is no constant term).
fn is_linearized(poly: &UniPoly, p: u64) -> bool {
    poly.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .all(|(e, _)| is_power_of(e as u64, p))
}

impl SepCurve {
    pub fn new(field: Field, a_poly: UniPoly, b_poly: UniPoly) -> Result<SepCurve, CurveError> {
        let a = match a_poly.degree() {
            None => return Err(CurveError::ZeroPolynomial),
            Some(0) => return Err(CurveError::ConstantPolynomial),
            Some(d) => d as u64,
        };
        let b = match b_poly.degree() {
            None => return Err(CurveError::ZeroPolynomial),
            Some(0) => return Err(CurveError::ConstantPolynomial),
            Some(d) => d as u64,
        };
        let semigroup = NumericalSemigroup::new(a, b)?;
        let p = u64::from(field.p());

        let lin_b = is_linearized(&b_poly, p)
            && !b_poly.coeff(1).is_zero()
            && a >= 2
            && a % p != 0;
        let lin_a = is_linearized(&a_poly, p)
            && !a_poly.coeff(1).is_zero()
            && b >= 2
            && b % p != 0;
        let weierstrass = if a.min(b) == 1 {
            WeierstrassCertificate::PoleOrderOne
        } else if lin_b {
            WeierstrassCertificate::LinearizedB
        } else if lin_a {
            WeierstrassCertificate::LinearizedA
        } else {
            WeierstrassCertificate::CoprimeAssumed
        };
        let irreducibility = if lin_a || lin_b {
            IrreducibilityCertificate::Linearized
        } else {
            IrreducibilityCertificate::CoprimeDegrees
        };

        Ok(SepCurve {
            field,
            a_poly,
            b_poly,
            a,
            b,
            semigroup,
            irreducibility,
            weierstrass,
            points: OnceLock::new(),
        })
    }

    /// Record a user assertion that the Weierstrass semigroup at Q is ⟨a,b⟩.
    pub fn with_asserted_semigroup(mut self) -> SepCurve {
        if !self.weierstrass.is_certified() {
            self.weierstrass = WeierstrassCertificate::UserAsserted;
        }
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn a_poly(&self) -> &UniPoly {
        &self.a_poly
    }

    pub fn b_poly(&self) -> &UniPoly {
        &self.b_poly
    }

    /// v(x) = deg A.
    pub fn v_x(&self) -> u64 {
        self.a
    }

    /// v(y) = deg B.
    pub fn v_y(&self) -> u64 {
        self.b
    }

    pub fn phi1_valuation(&self, orientation: Orientation) -> u64 {
        match orientation {
            Orientation::Y => self.b,
            Orientation::X => self.a,
        }
    }

    pub fn phi2_valuation(&self, orientation: Orientation) -> u64 {
        match orientation {
            Orientation::Y => self.a,
            Orientation::X => self.b,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn genus(&self) -> u64 {
        self.semigroup.genus()
    }

    pub fn irreducibility_certificate(&self) -> IrreducibilityCertificate {
        self.irreducibility
    }

    pub fn weierstrass_certificate(&self) -> WeierstrassCertificate {
        self.weierstrass
    }

    /// Pole order at Q of the monomial x^i y^j.
    pub fn valuation(&self, x_exp: u64, y_exp: u64) -> u64 {
        x_exp * self.a + y_exp * self.b
    }

    /// All affine rational points, sorted by (y, x) canonical values.
    pub fn points(&self) -> &[AffinePoint] {
        self.points.get_or_init(|| self.enumerate_points())
    }

    fn enumerate_points(&self) -> Vec<AffinePoint> {
        let f = &self.field;
        // Bucket the x side by its B-value, then walk the y side.
        let mut bx: Vec<(u32, u32)> = f
            .elements()
            .map(|x| (self.b_poly.eval(f, x).value(), x.value()))
            .collect();
        bx.sort_unstable();
        let mut pts = Vec::new();
        for y in f.elements() {
            let target = self.a_poly.eval(f, y).value();
            let start = bx.partition_point(|&(v, _)| v < target);
            for &(v, x) in &bx[start..] {
                if v != target {
                    break;
                }
                pts.push(AffinePoint { x: f.element(u64::from(x)).unwrap(), y });
            }
        }
        pts
    }

    /// Nonempty fibres of φ1, sorted by base canonical value; points inside a
    /// fibre are sorted by their φ2 canonical value.
    pub fn fibres(&self, orientation: Orientation) -> Vec<Fibre> {
        let idx: Box<dyn Fn(&AffinePoint) -> (u32, u32)> = match orientation {
            Orientation::Y => Box::new(|p: &AffinePoint| (p.y.value(), p.x.value())),
            Orientation::X => Box::new(|p: &AffinePoint| (p.x.value(), p.y.value())),
        };
        let mut pts: Vec<AffinePoint> = self.points().to_vec();
        pts.sort_by_key(|p| idx(p));
        let size = self.phi1_valuation(orientation) as usize;
        let mut fibres: Vec<Fibre> = Vec::new();
        for p in pts {
            let base = p.phi1(orientation);
            match fibres.last_mut() {
                Some(f) if f.base == base => f.points.push(p),
                _ => fibres.push(Fibre {
                    base,
                    orientation,
                    points: vec![p],
                    totally_split: false,
                }),
            }
        }
        for f in &mut fibres {
            f.totally_split = f.points.len() == size;
        }
        fibres
    }

    /// Newton–Girard power sums of the roots of the φ2-defining polynomial
    /// (B for Y-fibres, A for X-fibres): π_1 = σ_1 and
    /// π_i = (−1)^{i−1} i σ_i − Σ_{j=1}^{i−1} (−1)^j π_{i−j} σ_j,
    /// with σ_i = (−1)^i λ_{s−i} read off the monic normalization.
    pub fn power_sums(&self, orientation: Orientation) -> Result<PowerSums, CurveError> {
        let poly = match orientation {
            Orientation::Y => &self.b_poly,
            Orientation::X => &self.a_poly,
        };
        let s = poly.degree().expect("curve polynomials are nonzero");
        if s < 2 {
            return Err(CurveError::DegreeTooSmall { degree: s });
        }
        let f = &self.field;
        let lead_inv = f.inv(poly.coeff(s)).expect("leading coefficient is nonzero");
        let count = s - 2;
        let mut sigma = Vec::with_capacity(count);
        for i in 1..=count {
            let lam = f.mul(poly.coeff(s - i), lead_inv);
            sigma.push(if i % 2 == 1 { f.neg(lam) } else { lam });
        }
        let mut pi: Vec<FieldElement> = Vec::with_capacity(count);
        for i in 1..=count {
            let mut acc = f.mul(f.from_int(i as u64), sigma[i - 1]);
            if (i - 1) % 2 == 1 {
                acc = f.neg(acc);
            }
            for j in 1..i {
                let mut t = f.mul(pi[i - j - 1], sigma[j - 1]);
                if j % 2 == 1 {
                    t = f.neg(t);
                }
                acc = f.sub(acc, t);
            }
            pi.push(acc);
        }
        Ok(PowerSums { orientation, degree: s, pi })
    }

    /// Conditions under which one erased fibre symbol is the negated sum of
    /// the rest: the power sums π_1..π_{s−2} of the φ2-defining polynomial
    /// must vanish, and either the characteristic divides its degree or the
    /// function space avoids the φ2-free part (ε_0 = 0).
    pub fn one_addition_applicable(&self, vspec: &VSpec) -> OneAdditionCheck {
        let orientation = vspec.orientation();
        let sums = match self.power_sums(orientation) {
            Ok(s) => s,
            Err(_) => {
                return OneAdditionCheck {
                    applicable: false,
                    reason: "fibre polynomial has degree below 2".into(),
                }
            }
        };
        if let Some(i) = sums.pi.iter().position(|v| !v.is_zero()) {
            return OneAdditionCheck {
                applicable: false,
                reason: format!("power sum pi_{} of the fibre polynomial is nonzero", i + 1),
            };
        }
        let p = u64::from(self.field.p());
        let s = sums.degree as u64;
        if s % p == 0 {
            return OneAdditionCheck {
                applicable: true,
                reason: format!("power sums vanish and char {p} divides degree {s}"),
            };
        }
        if !vspec.epsilon(0) {
            return OneAdditionCheck {
                applicable: true,
                reason: "power sums vanish and the space has epsilon_0 = 0".into(),
            };
        }
        OneAdditionCheck {
            applicable: false,
            reason: format!(
                "power sums vanish but char {p} does not divide degree {s} and epsilon_0 = 1"
            ),
        }
    }
}
