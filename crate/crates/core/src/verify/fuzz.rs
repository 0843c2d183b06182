//! Seeded campaigns of checkers over random instances.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::instance::{random_space, random_table};
use super::{run_checkers, Checker, Instance, TheoremReport, Verdict};
use crate::algebra::{make_zmod, Side};
use crate::funcspace::DEFAULT_BUDGET;
use crate::ideals::{IdealConfig, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub instances: usize,
    pub max_points: usize,
    pub max_carrier: usize,
    /// Element-set budget per instance.
    pub budget: u64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig { seed: 0, instances: 200, max_points: 4, max_carrier: 4, budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub config: FuzzConfig,
    /// Sorted by (checker id, seed).
    pub reports: Vec<TheoremReport>,
    pub counts: BTreeMap<Verdict, usize>,
}

impl CampaignSummary {
    /// Failures not already flagged as documented discrepancies.
    pub fn unexpected_failures(&self) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Fail && r.discrepancy.is_none())
    }
}

/// Instance `i` of the campaign seeded by `seed`: a random explicit space,
/// ℤ_n or a random unital magma, and a random side with both ideal modes.
pub fn campaign_instance(cfg: &FuzzConfig, i: usize) -> Instance {
    let seed = cfg.seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(i as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let space = random_space(&mut rng, cfg.max_points.max(1));
    let max_carrier = cfg.max_carrier.max(2);
    let y = if rng.random_bool(0.5) { make_zmod(rng.random_range(2..=max_carrier)) } else { random_table(&mut rng, max_carrier) };
    let mode = if y.has_add() && rng.random_bool(0.5) { Mode::Ring } else { Mode::Multiplicative };
    let side = [Side::Right, Side::Left, Side::TwoSided][rng.random_range(0..3)];
    Instance::new(space, y).with_config(IdealConfig::new(side, mode)).with_seed(seed)
}

pub fn fuzz_campaign(cfg: &FuzzConfig, checkers: &[&Checker]) -> CampaignSummary {
    let run = |i: usize| run_checkers(checkers, &campaign_instance(cfg, i), cfg.budget);
    #[cfg(feature = "parallel")]
    let nested: Vec<Vec<TheoremReport>> = {
        use rayon::prelude::*;
        (0..cfg.instances).into_par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let nested: Vec<Vec<TheoremReport>> = (0..cfg.instances).map(run).collect();
    let mut reports: Vec<TheoremReport> = nested.into_iter().flatten().collect();
    reports.sort_by(|a, b| a.checker_id.cmp(&b.checker_id).then(a.instance.seed().cmp(&b.instance.seed())));
    let mut counts = BTreeMap::new();
    for r in &reports {
        *counts.entry(r.verdict).or_insert(0) += 1;
    }
    CampaignSummary { config: cfg.clone(), reports, counts }
}
