//! Locally recoverable evaluation codes from plane curves with separated
//! variables.
//!
//! The construction starts from an affine curve `A(Y) = B(X)` over a small
//! finite field, with `gcd(deg A, deg B) = 1`. Grouping the rational points
//! of the curve into fibres of one coordinate gives evaluation codes in which
//! every codeword symbol can be rebuilt from the other symbols of its fibre:
//! by Lagrange interpolation in general, and by a single addition when the
//! defining polynomial has vanishing root power sums.
//!
//! The crate is organised along the objects of that construction:
//!
//! * [`galois`] — exact arithmetic in GF(p^m) with a canonical integer
//!   encoding, univariate polynomials, root finding.
//! * [`semigroup`] — the numerical semigroup ⟨a,b⟩ and its counting
//!   functions (membership, `h_t`, `ι`).
//! * [`curve`] — the curve itself: validity certificates, point and fibre
//!   enumeration, pole orders, Newton–Girard power sums.
//! * [`funcspace`] — the space of functions that gets evaluated: flags,
//!   degree caps, pole bound `m(V)`, completeness.
//! * [`code`] — the code: generator matrix, exact dimension, distance /
//!   defect / generalized-weight bounds, brute-force oracles, erasure
//!   decoding.
//! * [`repair`] — local recovery of one erased symbol.
//! * [`storesim`] — a deterministic simulated storage cluster that accounts
//!   repair bandwidth.
//! * [`config`] — the JSON code description shared by the CLI and the
//!   browser demo, plus the codeword text format.
//! * [`cases`] — built-in reference cases with known parameter values.

pub mod cases;
pub mod code;
pub mod config;
pub mod curve;
pub mod funcspace;
pub mod galois;
pub mod matrix;
pub mod repair;
pub mod semigroup;
pub mod storesim;

pub use code::{FibreSelection, GonalityPolicy, LrcCode, ParamReport, WorkCaps};
pub use curve::{Orientation, SepCurve};
pub use funcspace::VSpec;
pub use galois::{Field, FieldElement, UniPoly};
pub use semigroup::NumericalSemigroup;
