//! A desk-scale simulated storage cluster: codeword symbols are spread over
//! virtual nodes, node failures erase everything they held, and repairs are
//! accounted symbol by symbol against the no-locality baseline of k reads
//! per lost symbol.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::LrcCode;
use crate::galois::FieldElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("a cluster needs at least one node")]
    LayoutInfeasible,
    #[error("object {index} has {got} symbols, expected {expected}")]
    ObjectLength { index: usize, expected: usize, got: usize },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FailurePattern {
    SingleNode,
    RandomNodes(usize),
}

/// Round-robin placement. Fibres occupy consecutive positions, so as long as
/// the cluster has at least v(φ1) nodes no two symbols of one fibre share a
/// node, and any single node failure is locally repairable.
#[derive(Copy, Clone, Debug)]
pub struct ClusterLayout {
    node_count: usize,
    n: usize,
}

impl ClusterLayout {
    pub fn new(node_count: usize, n: usize) -> Result<ClusterLayout, SimError> {
        if node_count == 0 {
            return Err(SimError::LayoutInfeasible);
        }
        Ok(ClusterLayout { node_count, n })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn node_of(&self, position: usize) -> usize {
        position % self.node_count
    }

    pub fn positions_on(&self, node: usize) -> Vec<usize> {
        (0..self.n).filter(|p| self.node_of(*p) == node).collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairStats {
    pub failures: u64,
    pub local_repairs: u64,
    pub global_fallbacks: u64,
    pub unrecoverable: u64,
    pub symbols_read: u64,
    /// k reads per lost symbol: what repairing without locality would cost.
    pub baseline_symbols_read: u64,
    /// Repaired values that differed from the stored original; always 0
    /// unless something is broken.
    pub repair_mismatches: u64,
}

impl RepairStats {
    /// baseline / actual reads, rounded to two decimals.
    pub fn saving_ratio(&self) -> Option<f64> {
        if self.symbols_read == 0 {
            return None;
        }
        let ratio = self.baseline_symbols_read as f64 / self.symbols_read as f64;
        Some((ratio * 100.0).round() / 100.0)
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("stats serialize");
        value["saving_ratio"] = match self.saving_ratio() {
            Some(r) => serde_json::json!(r),
            None => serde_json::Value::Null,
        };
        serde_json::to_string_pretty(&value).expect("stats serialize")
    }
}

impl fmt::Display for RepairStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "failures             {}", self.failures)?;
        writeln!(f, "locally repaired     {}", self.local_repairs)?;
        writeln!(f, "global fallbacks     {}", self.global_fallbacks)?;
        writeln!(f, "unrecoverable        {}", self.unrecoverable)?;
        writeln!(f, "symbols read         {}", self.symbols_read)?;
        writeln!(f, "baseline reads       {}", self.baseline_symbols_read)?;
        match self.saving_ratio() {
            Some(r) => writeln!(f, "bandwidth saving     {r:.2}x"),
            None => writeln!(f, "bandwidth saving     n/a"),
        }
    }
}

/// Erase every symbol stored on the failed nodes and repair object by object:
/// a symbol whose fibre lost only it is repaired locally; fibres with two or
/// more losses route their symbols through full erasure decoding.
pub fn simulate(
    code: &LrcCode,
    objects: &[Vec<FieldElement>],
    node_count: usize,
    pattern: FailurePattern,
    seed: u64,
) -> Result<RepairStats, SimError> {
    let n = code.n() as usize;
    let layout = ClusterLayout::new(node_count, n)?;
    for (index, obj) in objects.iter().enumerate() {
        if obj.len() != n {
            return Err(SimError::ObjectLength { index, expected: n, got: obj.len() });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let failed: Vec<usize> = match pattern {
        FailurePattern::SingleNode => vec![rng.gen_range(0..node_count)],
        FailurePattern::RandomNodes(e) => {
            let e = e.min(node_count);
            let mut nodes = sample(&mut rng, node_count, e).into_vec();
            nodes.sort_unstable();
            nodes
        }
    };

    let mut stats = RepairStats::default();
    for object in objects {
        let erased: Vec<usize> =
            (0..n).filter(|&p| failed.contains(&layout.node_of(p))).collect();
        if erased.is_empty() {
            continue;
        }
        stats.failures += erased.len() as u64;
        stats.baseline_symbols_read += code.k() * erased.len() as u64;

        let mut symbols: Vec<Option<FieldElement>> =
            object.iter().map(|&v| Some(v)).collect();
        for &p in &erased {
            symbols[p] = None;
        }
        let mut fibre_losses = vec![0usize; code.fibres().len()];
        for &p in &erased {
            fibre_losses[code.recovery_map(p).0] += 1;
        }

        let mut needs_global = false;
        for &p in &erased {
            if fibre_losses[code.recovery_map(p).0] == 1 {
                let res = code.repair(&symbols, p).expect("local repair on split fibre");
                stats.local_repairs += 1;
                stats.symbols_read += res.symbols_read as u64;
                if res.value != object[p] {
                    stats.repair_mismatches += 1;
                }
            } else {
                needs_global = true;
            }
        }
        if needs_global {
            let global_count = erased
                .iter()
                .filter(|&&p| fibre_losses[code.recovery_map(p).0] > 1)
                .count() as u64;
            // one decode per object, reading every surviving symbol
            stats.symbols_read += (n - erased.len()) as u64;
            match code.erasure_decode(&symbols) {
                Ok(decoded) => {
                    stats.global_fallbacks += global_count;
                    for &p in &erased {
                        if fibre_losses[code.recovery_map(p).0] > 1
                            && decoded[p] != object[p]
                        {
                            stats.repair_mismatches += 1;
                        }
                    }
                }
                Err(_) => stats.unrecoverable += global_count,
            }
        }
    }
    Ok(stats)
}
