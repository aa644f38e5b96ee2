//! The evaluation code C(P, V): generator matrix, exact dimension by rank,
//! distance / defect / generalized-weight bounds, exhaustive oracles, and
//! erasure decoding.
//!
//! Evaluation points are the totally split fibres of φ1, flattened in
//! canonical order, so each fibre occupies a consecutive block of v(φ1)
//! columns and every column belongs to exactly one fibre.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::curve::{AffinePoint, Fibre, Orientation, SepCurve};
use crate::funcspace::VSpec;
use crate::galois::FieldElement;
use crate::matrix::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("no totally split fibres to evaluate on")]
    NoSplitFibres,
    #[error("fibre over base {base} is not totally split")]
    FibreNotSplit { base: u64 },
    #[error("no fibre lies over base {base}")]
    UnknownFibreBase { base: u64 },
    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("gonality certification required but unavailable for this curve")]
    UncertifiedGonality,
    #[error("{what} needs {required} steps, above the cap {cap}")]
    WorkCapExceeded { what: &'static str, required: u64, cap: u64 },
    #[error("erasure pattern is ambiguous: a nonzero codeword vanishes on every known position")]
    Ambiguous { certificate: Vec<FieldElement> },
    #[error("known symbols are not consistent with any codeword")]
    NotInCode,
}

/// Which fibres to evaluate on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FibreSelection {
    /// Every totally split fibre (the maximal, divisor-friendly choice).
    AllSplit,
    /// Split fibres over the listed base values (canonical integers).
    Explicit(Vec<u64>),
}

/// Work limits for the exhaustive oracles.
#[derive(Clone, Copy, Debug)]
pub struct WorkCaps {
    /// Cap on q^k for codeword enumeration.
    pub max_codewords: u64,
    /// Cap on 2^n for the subset-rank scan.
    pub max_subsets: u64,
}

impl Default for WorkCaps {
    fn default() -> Self {
        WorkCaps { max_codewords: 1 << 26, max_subsets: 1 << 24 }
    }
}

/// How to resolve the gonality sequence γ_t:
/// 1. certified γ_t = h_t when the semigroup is certified and the curve is
///    rational, elliptic or hyperelliptic (genus ≤ 1 or min(a,b) = 2);
/// 2. a user-supplied override table;
/// 3. the always-valid floor γ_t ≥ t − 1.
#[derive(Clone, Debug, Default)]
pub struct GonalityPolicy {
    pub overrides: BTreeMap<u64, u64>,
    /// Error out instead of falling back to the floor.
    pub require_certified: bool,
}

const RUNG_CERTIFIED: &str = "certified-semigroup";
const RUNG_OVERRIDE: &str = "override-table";
const RUNG_FLOOR: &str = "floor";

/// A numeric bound together with the rule that produced it and the
/// certification rung of any gonality value it used.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Bound {
    pub value: u64,
    pub rule: String,
    pub certification: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GhwRow {
    pub t: u64,
    pub lower: u64,
    pub lower_certification: String,
    /// Locality-aware Singleton-type upper bound.
    pub upper_singleton: u64,
    /// Best fibre-divisor upper bound applying at this t, when any.
    pub upper_fibre_sum: Option<u64>,
    pub upper: u64,
}

/// d_t ≤ n − μ·v(φ1) obtained by dropping μ whole fibres.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FibreSumUpper {
    pub mu: u64,
    pub t: u64,
    pub upper: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RankBracket {
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RankIndices {
    pub mds_rank: RankBracket,
    pub opt_rank: RankBracket,
    /// Whether d_{k−r} ≤ n − r − 1 was confirmed (None when k ≤ r or unknown).
    pub locality_support_check: Option<bool>,
}

/// Closed-form defect bound for complete spaces with certified semigroup.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DefectClosedForm {
    pub value: u64,
    /// 'a' below the v(φ2)(v(φ1)−1) threshold, 'b' at or above it.
    pub case: char,
    /// The route through the distance bound can only tighten the closed form.
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KernelTerm {
    pub phi2_exp: u64,
    pub phi1_exp: u64,
    pub coeff: u32,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KernelFunction {
    pub terms: Vec<KernelTerm>,
    pub display: String,
}

/// Everything the construction can say about the code without brute force.
#[derive(Clone, Debug, Serialize)]
pub struct ParamReport {
    pub n: u64,
    pub dim_v: u64,
    pub k: u64,
    pub locality: u64,
    pub m: u64,
    pub w: u64,
    pub genus: u64,
    pub semigroup_certificate: String,
    pub abundant: bool,
    /// Evaluating the degree-ℓ_0 fibre product would vanish everywhere.
    pub abundant_by_fibre_product: bool,
    pub d_lower: Bound,
    pub d_upper: Option<Bound>,
    pub defect_upper: i64,
    pub defect_closed_form: Option<DefectClosedForm>,
    pub ghw: Vec<GhwRow>,
    pub fibre_sum_uppers: Vec<FibreSumUpper>,
    pub rank_indices: RankIndices,
    pub kernel: Vec<KernelFunction>,
}

#[derive(Clone, Debug)]
pub struct LrcCode {
    curve: SepCurve,
    vspec: VSpec,
    fibres: Vec<Fibre>,
    points: Vec<AffinePoint>,
    basis: Vec<(u64, u64)>,
    gen: Matrix,
    rank: usize,
    kernel: Matrix,
}

impl LrcCode {
    pub fn build(
        curve: SepCurve,
        vspec: VSpec,
        selection: FibreSelection,
    ) -> Result<LrcCode, CodeError> {
        let orientation = vspec.orientation();
        let all = curve.fibres(orientation);
        let fibres: Vec<Fibre> = match selection {
            FibreSelection::AllSplit => {
                all.into_iter().filter(|f| f.totally_split).collect()
            }
            FibreSelection::Explicit(bases) => {
                let mut bases = bases;
                bases.sort_unstable();
                bases.dedup();
                let mut out = Vec::with_capacity(bases.len());
                for base in bases {
                    let fibre = all
                        .iter()
                        .find(|f| u64::from(f.base.value()) == base)
                        .ok_or(CodeError::UnknownFibreBase { base })?;
                    if !fibre.totally_split {
                        return Err(CodeError::FibreNotSplit { base });
                    }
                    out.push(fibre.clone());
                }
                out
            }
        };
        if fibres.is_empty() {
            return Err(CodeError::NoSplitFibres);
        }
        let points: Vec<AffinePoint> =
            fibres.iter().flat_map(|f| f.points.iter().copied()).collect();

        let field = curve.field().clone();
        let basis = vspec.basis();
        let rows: Vec<Vec<FieldElement>> = basis
            .iter()
            .map(|&(i, j)| {
                points
                    .iter()
                    .map(|p| {
                        let phi2 = field.pow(p.phi2(orientation), i);
                        let phi1 = field.pow(p.phi1(orientation), j);
                        field.mul(phi2, phi1)
                    })
                    .collect()
            })
            .collect();
        let gen = Matrix::from_rows(field, rows);
        let kernel = gen.left_kernel();
        let rank = gen.rows() - kernel.rows();
        Ok(LrcCode { curve, vspec, fibres, points, basis, gen, rank, kernel })
    }

    pub fn curve(&self) -> &SepCurve {
        &self.curve
    }

    pub fn vspec(&self) -> &VSpec {
        &self.vspec
    }

    pub fn orientation(&self) -> Orientation {
        self.vspec.orientation()
    }

    pub fn fibres(&self) -> &[Fibre] {
        &self.fibres
    }

    pub fn points(&self) -> &[AffinePoint] {
        &self.points
    }

    /// Basis monomials as (φ2 exponent, φ1 exponent), in row order.
    pub fn basis(&self) -> &[(u64, u64)] {
        &self.basis
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// RREF basis of the evaluation kernel (functions vanishing on P),
    /// expressed in basis-monomial coordinates.
    pub fn kernel_matrix(&self) -> &Matrix {
        &self.kernel
    }

    pub fn n(&self) -> u64 {
        self.points.len() as u64
    }

    pub fn dim_v(&self) -> u64 {
        self.basis.len() as u64
    }

    /// Exact dimension, computed by rank.
    pub fn k(&self) -> u64 {
        self.rank as u64
    }

    pub fn locality(&self) -> u64 {
        self.vspec.locality()
    }

    pub fn pole_bound(&self) -> u64 {
        self.vspec.pole_bound(&self.curve)
    }

    /// ι(m − n): the abundance predicted by semigroup counting.
    pub fn w(&self) -> u64 {
        self.curve
            .semigroup()
            .iota(self.pole_bound() as i64 - self.n() as i64)
    }

    /// Fibre index and in-fibre index of a position. Every selected fibre
    /// contributes exactly v(φ1) consecutive columns.
    pub fn recovery_map(&self, position: usize) -> (usize, usize) {
        let size = self.curve.phi1_valuation(self.orientation()) as usize;
        (position / size, position % size)
    }

    pub fn fibre_of(&self, position: usize) -> &Fibre {
        &self.fibres[self.recovery_map(position).0]
    }

    /// Text export: a `# q=.. n=.. rows=.. k=..` header line, then one row
    /// per line of space-separated canonical integers.
    pub fn generator_export(&self) -> String {
        let mut out = format!(
            "# q={} n={} rows={} k={}\n",
            self.gen.field().q(),
            self.n(),
            self.dim_v(),
            self.k()
        );
        for r in 0..self.gen.rows() {
            let row: Vec<String> =
                self.gen.row(r).iter().map(|v| v.value().to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// message · G.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        if message.len() != self.basis.len() {
            return Err(CodeError::LengthMismatch {
                expected: self.basis.len(),
                got: message.len(),
            });
        }
        Ok(self.gen.vec_mul(message))
    }

    fn resolve_gonality(
        &self,
        t: u64,
        policy: &GonalityPolicy,
    ) -> Result<(u64, &'static str), CodeError> {
        let curve = &self.curve;
        let (a, b) = curve.semigroup().generators();
        let certified_shape = curve.genus() <= 1 || a.min(b) == 2;
        if curve.weierstrass_certificate().is_certified() && certified_shape {
            return Ok((curve.semigroup().element_at(t), RUNG_CERTIFIED));
        }
        if let Some(&g) = policy.overrides.get(&t) {
            return Ok((g, RUNG_OVERRIDE));
        }
        if policy.require_certified {
            return Err(CodeError::UncertifiedGonality);
        }
        Ok((t - 1, RUNG_FLOOR))
    }

    /// Lower and upper generalized-weight bounds for t = 1..=t_max.
    pub fn ghw_bounds(
        &self,
        t_max: u64,
        policy: &GonalityPolicy,
    ) -> Result<Vec<GhwRow>, CodeError> {
        let n = self.n();
        let k = self.k();
        let r = self.locality();
        let m = self.pole_bound();
        let w = self.w();
        let t_max = t_max.min(k);
        let fibre_uppers = self.fibre_sum_uppers();
        let mut rows = Vec::new();
        let mut running = 0u64;
        for t in 1..=t_max {
            let (gamma, rung) = self.resolve_gonality(w + t, policy)?;
            let goppa = n as i64 - m as i64 + gamma as i64;
            let lower = (goppa.max(t as i64) as u64).max(running);
            running = lower;
            let upper_singleton = n + t + 1 - k - (k - t + 1).div_ceil(r);
            let upper_fibre_sum = fibre_uppers
                .iter()
                .filter(|e| e.t == t)
                .map(|e| e.upper)
                .min();
            let upper = upper_fibre_sum.map_or(upper_singleton, |u| u.min(upper_singleton));
            rows.push(GhwRow {
                t,
                lower,
                lower_certification: rung.to_string(),
                upper_singleton,
                upper_fibre_sum,
                upper,
            });
        }
        Ok(rows)
    }

    /// All d_t ≤ n − μ·v(φ1) entries. Vanishing on μ whole fibres is achieved
    /// by the subcode τ_μ·{g : τ_μ·g ∈ V} with τ_μ the product of the fibre
    /// equations, whose dimension is Σ ε_i·(1 + ℓ_i − μ)⁺ minus the
    /// abundance. (Counting semigroup elements ι(m − μ·v(φ1)) instead, as
    /// the source result does, overstates the subcode dimension whenever V
    /// is a proper subspace of the full pole-order-m space; the cap-based
    /// count is the one an exhaustive scan confirms.)
    pub fn fibre_sum_uppers(&self) -> Vec<FibreSumUpper> {
        let v1 = self.curve.phi1_valuation(self.orientation());
        let m = self.pole_bound();
        let k = self.k();
        let abundance = self.dim_v() - k;
        let u = self.fibres.len() as u64;
        let mut out = Vec::new();
        for mu in 1..=u {
            if mu * v1 >= m {
                break;
            }
            let shifted_dim: u64 = self
                .vspec
                .epsilons()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e)
                .map(|(i, _)| (self.vspec.ell(i) + 1).saturating_sub(mu))
                .sum();
            let t = shifted_dim.saturating_sub(abundance);
            if t >= 1 && t <= k {
                out.push(FibreSumUpper { mu, t, upper: self.n() - mu * v1 });
            }
        }
        out
    }

    /// Rank indices from exact generalized weights.
    pub fn rank_indices_exact(&self, exact: &[u64]) -> RankIndices {
        let n = self.n();
        let k = self.k();
        let r = self.locality();
        let mds = exact
            .iter()
            .zip(1..)
            .find(|&(&d, t)| d == n - k + t)
            .map(|(_, t)| t);
        let opt = exact
            .iter()
            .zip(1..)
            .find(|&(&d, t)| k + d + (k - t + 1).div_ceil(r) == n + t + 1)
            .map(|(_, t)| t);
        let locality_support_check = (k > r).then(|| {
            exact
                .get((k - r - 1) as usize)
                .map(|&d| d <= n - r - 1)
                .unwrap_or(true)
        });
        RankIndices {
            mds_rank: RankBracket {
                lower: mds.unwrap_or(k).max(k.saturating_sub(r) + 1),
                upper: mds.unwrap_or(k),
                exact: mds,
            },
            opt_rank: RankBracket {
                lower: opt.unwrap_or(1),
                upper: opt.unwrap_or(k),
                exact: opt,
            },
            locality_support_check,
        }
    }

    /// Rank index brackets from bound rows alone.
    pub fn rank_indices_from_bounds(&self, rows: &[GhwRow]) -> RankIndices {
        let n = self.n();
        let k = self.k();
        let r = self.locality();
        let mds_candidate = rows
            .iter()
            .find(|row| row.lower <= n - k + row.t && n - k + row.t <= row.upper)
            .map(|row| row.t);
        let opt_candidate = rows
            .iter()
            .find(|row| row.upper == row.upper_singleton && row.lower <= row.upper_singleton)
            .map(|row| row.t);
        RankIndices {
            mds_rank: RankBracket {
                lower: mds_candidate.unwrap_or(k).max(k.saturating_sub(r) + 1),
                upper: k,
                exact: None,
            },
            opt_rank: RankBracket {
                lower: opt_candidate.unwrap_or(1),
                upper: k,
                exact: None,
            },
            locality_support_check: None,
        }
    }

    fn kernel_functions(&self) -> Vec<KernelFunction> {
        let (phi2_name, phi1_name) = match self.orientation() {
            Orientation::Y => ("x", "y"),
            Orientation::X => ("y", "x"),
        };
        (0..self.kernel.rows())
            .map(|row| {
                let mut terms = Vec::new();
                let mut parts = Vec::new();
                for (idx, &(i, j)) in self.basis.iter().enumerate() {
                    let c = self.kernel.at(row, idx);
                    if c.is_zero() {
                        continue;
                    }
                    terms.push(KernelTerm { phi2_exp: i, phi1_exp: j, coeff: c.value() });
                    let mut body = String::new();
                    if c != FieldElement::ONE || (i == 0 && j == 0) {
                        body.push_str(&format!("{}·", c.value()));
                    }
                    match i {
                        0 => {}
                        1 => body.push_str(phi2_name),
                        _ => body.push_str(&format!("{phi2_name}^{i}")),
                    }
                    match j {
                        0 => {}
                        1 => body.push_str(phi1_name),
                        _ => body.push_str(&format!("{phi1_name}^{j}")),
                    }
                    if body.ends_with('·') {
                        body.pop();
                    }
                    parts.push(body);
                }
                KernelFunction { terms, display: parts.join(" + ") }
            })
            .collect()
    }

    /// The full parameter report.
    pub fn params(&self, policy: &GonalityPolicy) -> Result<ParamReport, CodeError> {
        let n = self.n();
        let k = self.k();
        let dim_v = self.dim_v();
        let r = self.locality();
        let m = self.pole_bound();
        let w = self.w();
        let curve = &self.curve;
        let v1 = curve.phi1_valuation(self.orientation());
        let v2 = curve.phi2_valuation(self.orientation());
        let genus = curve.genus();

        let (gamma, rung) = self.resolve_gonality(w + 1, policy)?;
        let d_lower_value = (n as i64 - m as i64 + gamma as i64).max(1) as u64;
        let d_lower = Bound {
            value: d_lower_value,
            rule: "generalized-goppa".into(),
            certification: rung.to_string(),
        };

        let ell0 = self.vspec.ell(0);
        let eps0 = self.vspec.epsilon(0);
        let abundant_by_fibre_product = eps0 && ell0 * v1 >= n;
        let d_upper = (eps0 && ell0 * v1 < n).then(|| Bound {
            value: n - ell0 * v1,
            rule: "fibre-product-weight".into(),
            certification: "exact-witness".into(),
        });

        let defect_upper =
            n as i64 + 2 - (k as i64 + d_lower_value as i64 + k.div_ceil(r) as i64);

        let defect_closed_form = (self.vspec.is_complete(curve)
            && curve.weierstrass_certificate().is_certified()
            && r == v1 - 1
            && m < n)
            .then(|| {
                let threshold = v2 * (v1 - 1);
                let (case, value) = if m < threshold {
                    ('a', genus as i64 + 1 - (m + 1 - genus).div_ceil(v1 - 1) as i64)
                } else {
                    let ell_last = (m - threshold) / v1;
                    (
                        'b',
                        genus as i64 + 2 + ell_last as i64
                            - (m - genus - ell_last).div_ceil(v1 - 1) as i64,
                    )
                };
                DefectClosedForm {
                    value: value.max(0) as u64,
                    case,
                    consistent: defect_upper <= value,
                }
            });

        let ghw = self.ghw_bounds(k.min(8), policy)?;
        let rank_indices = self.rank_indices_from_bounds(&ghw);

        Ok(ParamReport {
            n,
            dim_v,
            k,
            locality: r,
            m,
            w,
            genus,
            semigroup_certificate: curve.weierstrass_certificate().label().into(),
            abundant: k < dim_v,
            abundant_by_fibre_product,
            d_lower,
            d_upper,
            defect_upper,
            defect_closed_form,
            ghw,
            fibre_sum_uppers: self.fibre_sum_uppers(),
            rank_indices,
            kernel: self.kernel_functions(),
        })
    }

    // ---- exhaustive oracles ----

    /// Nonzero rows of the RREF of G: a basis of the code itself.
    fn row_basis(&self) -> Matrix {
        let red = self.gen.reduce();
        let rows: Vec<Vec<FieldElement>> = (0..self.rank)
            .map(|r| red.rref.row(r).to_vec())
            .collect();
        Matrix::from_rows(self.gen.field().clone(), rows)
    }

    /// Exact minimum distance. Uses the subset-rank scan when 2^n fits the
    /// cap (cross-checked by codeword enumeration when that also fits),
    /// otherwise codeword enumeration alone.
    pub fn brute_min_distance(&self, caps: &WorkCaps) -> Result<u64, CodeError> {
        let n = self.n();
        let subsets = (n < 63).then(|| 1u64 << n);
        let codewords = u64::from(self.gen.field().q()).checked_pow(self.rank as u32);
        match subsets {
            Some(s) if s <= caps.max_subsets => {
                let d = self.brute_weight_hierarchy(1, caps)?[0];
                if let Some(c) = codewords {
                    if c <= caps.max_codewords {
                        let direct = self.min_weight_by_enumeration();
                        assert_eq!(d, direct, "subset-rank and codeword scans disagree");
                    }
                }
                Ok(d)
            }
            _ => match codewords {
                Some(c) if c <= caps.max_codewords => Ok(self.min_weight_by_enumeration()),
                _ => Err(CodeError::WorkCapExceeded {
                    what: "minimum distance search",
                    required: subsets.or(codewords).unwrap_or(u64::MAX),
                    cap: caps.max_subsets,
                }),
            },
        }
    }

    /// Exact weight hierarchy d_1..d_{t_max} by the support characterization:
    /// n − d_t is the largest support size whose columns span at most k − t
    /// dimensions.
    pub fn brute_weight_hierarchy(
        &self,
        t_max: u64,
        caps: &WorkCaps,
    ) -> Result<Vec<u64>, CodeError> {
        let n = self.n();
        let k = self.k();
        let t_max = t_max.min(k);
        let required = if n < 63 { 1u64 << n } else { u64::MAX };
        if required > caps.max_subsets {
            return Err(CodeError::WorkCapExceeded {
                what: "subset-rank scan",
                required,
                cap: caps.max_subsets,
            });
        }
        let basis = self.row_basis();
        let columns: Vec<Vec<FieldElement>> =
            (0..basis.cols()).map(|c| basis.column(c)).collect();
        let mut best = vec![usize::MAX; self.rank + 1]; // MAX marks "not seen"
        let mut echelon = Echelon::new(basis.field().clone(), self.rank);
        subset_scan(&columns, 0, 0, &mut echelon, &mut best);
        // largest size with rank at most ρ
        let mut best_le = vec![0usize; self.rank + 1];
        let mut acc = 0usize;
        for (rank, slot) in best.iter().enumerate() {
            if *slot != usize::MAX {
                acc = acc.max(*slot);
            }
            best_le[rank] = acc;
        }
        Ok((1..=t_max)
            .map(|t| n - best_le[(k - t) as usize] as u64)
            .collect())
    }

    fn min_weight_by_enumeration(&self) -> u64 {
        let basis = self.row_basis();
        let field = basis.field().clone();
        let n = basis.cols();
        let k = basis.rows();
        let elements: Vec<FieldElement> = field.elements().collect();
        let mut buffers: Vec<Vec<FieldElement>> = vec![vec![FieldElement::ZERO; n]; k + 1];
        let mut best = n as u64;

        fn rec(
            level: usize,
            any_nonzero: bool,
            basis: &Matrix,
            elements: &[FieldElement],
            buffers: &mut [Vec<FieldElement>],
            best: &mut u64,
        ) {
            let k = basis.rows();
            if level == k {
                if any_nonzero {
                    let w = buffers[level].iter().filter(|v| !v.is_zero()).count() as u64;
                    if w < *best {
                        *best = w;
                    }
                }
                return;
            }
            let field = basis.field().clone();
            for &c in elements {
                let (head, tail) = buffers.split_at_mut(level + 1);
                let parent = &head[level];
                let child = &mut tail[0];
                if c.is_zero() {
                    child.copy_from_slice(parent);
                } else {
                    for (i, slot) in child.iter_mut().enumerate() {
                        *slot = field.add(parent[i], field.mul(c, basis.at(level, i)));
                    }
                }
                rec(level + 1, any_nonzero || !c.is_zero(), basis, elements, buffers, best);
            }
        }

        rec(0, false, &basis, &elements, &mut buffers, &mut best);
        best
    }

    /// Fill erased positions from the known ones. Unique exactly when no
    /// nonzero codeword is supported inside the erased set; otherwise the
    /// ambiguity certificate is such a codeword.
    pub fn erasure_decode(
        &self,
        symbols: &[Option<FieldElement>],
    ) -> Result<Vec<FieldElement>, CodeError> {
        let n = self.points.len();
        if symbols.len() != n {
            return Err(CodeError::LengthMismatch { expected: n, got: symbols.len() });
        }
        let known: Vec<usize> = (0..n).filter(|&i| symbols[i].is_some()).collect();
        let g_known = self.gen.select_columns(&known);
        if g_known.rank() < self.rank {
            let ker = g_known.left_kernel();
            for row in 0..ker.rows() {
                let cw = self.gen.vec_mul(ker.row(row));
                if cw.iter().any(|v| !v.is_zero()) {
                    return Err(CodeError::Ambiguous { certificate: cw });
                }
            }
            unreachable!("rank deficit implies a kernel member outside the code kernel");
        }
        let rhs: Vec<FieldElement> = known.iter().map(|&i| symbols[i].unwrap()).collect();
        let message = g_known.solve_left(&rhs).ok_or(CodeError::NotInCode)?;
        Ok(self.gen.vec_mul(&message))
    }
}

struct Echelon {
    field: crate::galois::Field,
    pivots: Vec<Option<Vec<FieldElement>>>,
    rank: usize,
}

impl Echelon {
    fn new(field: crate::galois::Field, dim: usize) -> Echelon {
        Echelon { field, pivots: vec![None; dim], rank: 0 }
    }

    /// Insert a column; returns the pivot slot it occupied, or None when the
    /// column was dependent on the current ones.
    fn push(&mut self, col: &[FieldElement]) -> Option<usize> {
        let mut v = col.to_vec();
        for pos in 0..v.len() {
            if v[pos].is_zero() {
                continue;
            }
            match &self.pivots[pos] {
                Some(pv) => {
                    let factor = self
                        .field
                        .div(v[pos], pv[pos])
                        .expect("pivot entries are nonzero");
                    for i in pos..v.len() {
                        let delta = self.field.mul(factor, pv[i]);
                        v[i] = self.field.sub(v[i], delta);
                    }
                }
                None => {
                    self.pivots[pos] = Some(v);
                    self.rank += 1;
                    return Some(pos);
                }
            }
        }
        None
    }

    fn pop(&mut self, token: Option<usize>) {
        if let Some(pos) = token {
            self.pivots[pos] = None;
            self.rank -= 1;
        }
    }
}

/// Depth-first scan over all column subsets, recording per exact rank the
/// largest subset size seen.
fn subset_scan(
    columns: &[Vec<FieldElement>],
    idx: usize,
    size: usize,
    echelon: &mut Echelon,
    best: &mut [usize],
) {
    if idx == columns.len() {
        if best[echelon.rank] == usize::MAX || best[echelon.rank] < size {
            best[echelon.rank] = size;
        }
        return;
    }
    subset_scan(columns, idx + 1, size, echelon, best);
    let token = echelon.push(&columns[idx]);
    subset_scan(columns, idx + 1, size + 1, echelon, best);
    echelon.pop(token);
}
