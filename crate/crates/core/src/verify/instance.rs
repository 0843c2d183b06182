//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{make_zmod, AlgebraTable, Side};
use crate::pointset::PointSet;
use crate::topology::{validate_topology, ExplicitSpace, SequenceSpace, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceKind {
    /// Random subbasis on at most `max_points` points, closed under ∪ and ∩.
    ExplicitRandom,
    Discrete(usize),
    /// Sierpiński space plus `n` isolated points.
    SierpinskiSum(usize),
    Sequence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    Zmod(usize),
    /// ℤ_n for a random n in 2..=max_carrier.
    RandomZmod,
    /// Random unital magma with two-sided zero 0 and unit 1, no addition.
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub seed: u64,
    pub space: SpaceKind,
    pub algebra: AlgebraKind,
    pub max_points: usize,
    pub max_carrier: usize,
}

impl InstanceSpec {
    pub fn new(seed: u64, space: SpaceKind, algebra: AlgebraKind) -> Self {
        InstanceSpec { seed, space, algebra, max_points: 6, max_carrier: 6 }
    }

    pub fn bounded(mut self, max_points: usize, max_carrier: usize) -> Self {
        self.max_points = max_points;
        self.max_carrier = max_carrier;
        self
    }
}

/// Deterministic in `spec`.
pub fn random_instance(spec: &InstanceSpec) -> (Space, AlgebraTable) {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let space = match spec.space {
        SpaceKind::ExplicitRandom => Space::Explicit(random_space(&mut rng, spec.max_points.max(1))),
        SpaceKind::Discrete(n) => Space::Explicit(ExplicitSpace::discrete(n)),
        SpaceKind::SierpinskiSum(n) => {
            let s = ExplicitSpace::sierpinski();
            Space::Explicit(if n == 0 { s } else { s.disjoint_sum(&ExplicitSpace::discrete(n)).expect("small") })
        }
        SpaceKind::Sequence => Space::Sequence(SequenceSpace),
    };
    let max_carrier = spec.max_carrier.max(2);
    let algebra = match spec.algebra {
        AlgebraKind::Zmod(n) => make_zmod(n),
        AlgebraKind::RandomZmod => make_zmod(rng.random_range(2..=max_carrier)),
        AlgebraKind::Table => random_table(&mut rng, max_carrier),
    };
    (space, algebra)
}

pub(crate) fn random_space(rng: &mut ChaCha8Rng, max_points: usize) -> ExplicitSpace {
    let n = rng.random_range(1..=max_points);
    let k = rng.random_range(0..=n + 1);
    let full = (1u64 << n) - 1;
    let subbasis: Vec<PointSet> = (0..k).map(|_| PointSet::from_bits(rng.random_range(0..=full))).collect();
    validate_topology(n, &subbasis, true).expect("closure of a subbasis is a topology")
}

pub(crate) fn random_table(rng: &mut ChaCha8Rng, max_carrier: usize) -> AlgebraTable {
    let m = rng.random_range(2..=max_carrier);
    let commutative = rng.random_bool(0.5);
    let mut mul = vec![vec![0usize; m]; m];
    for a in 0..m {
        for b in 0..m {
            mul[a][b] = match (a, b) {
                (0, _) | (_, 0) => 0,
                (1, _) => b,
                (_, 1) => a,
                _ if commutative && b < a => mul[b][a],
                _ => rng.random_range(0..m),
            };
        }
    }
    let name = format!("M{m}#{:04x}", rng.random::<u16>());
    AlgebraTable::from_tables(name, &mul, None, 0, Some(Side::TwoSided)).expect("0 absorbs by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instance() {
        let spec = InstanceSpec::new(42, SpaceKind::ExplicitRandom, AlgebraKind::Table);
        assert_eq!(random_instance(&spec), random_instance(&spec));
    }

    #[test]
    fn exact_kinds() {
        let spec = InstanceSpec::new(1, SpaceKind::Discrete(3), AlgebraKind::Zmod(2));
        let (s, y) = random_instance(&spec);
        assert_eq!(s, Space::Explicit(ExplicitSpace::discrete(3)));
        assert_eq!(y, make_zmod(2));
    }

    #[test]
    fn random_spaces_validate() {
        for seed in 0..100 {
            let spec = InstanceSpec::new(seed, SpaceKind::ExplicitRandom, AlgebraKind::Table);
            let (Space::Explicit(s), y) = random_instance(&spec) else { panic!() };
            assert!(validate_topology(s.point_count(), s.opens(), false).is_ok());
            assert!(y.flags().has_unit);
        }
    }
}
