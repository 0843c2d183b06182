//! Finite discrete algebras `Y` given by operation tables.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest carrier accepted for a table.
pub const MAX_CARRIER: usize = 64;

/// Element of a finite algebra.
pub type Val = u8;

/// Which side a distinguished element acts from. For the zero, `Left`
/// means `0·a = 0`, `Right` means `a·0 = 0`; for a unit, `Left` means
/// `1·a = a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn covers(self, other: Side) -> bool {
        self == Side::TwoSided || self == other
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("carrier size {0} outside 2..={MAX_CARRIER}")]
    CarrierSize(usize),
    #[error("{table} table is not {m}×{m}")]
    Ragged { table: &'static str, m: usize },
    #[error("{table} table entry {value} at ({a},{b}) is outside the carrier")]
    EntryOutOfRange { table: &'static str, a: usize, b: usize, value: usize },
    #[error("element {zero} is not a {side} null element (fails at {witness})")]
    ZeroNotAbsorbing { zero: usize, side: Side, witness: usize },
    #[error("no element of the table is absorbing on either side")]
    NoZero,
    #[error("zero {zero} is not an additive identity (fails at {witness})")]
    AddIdentity { zero: usize, witness: usize },
    #[error("nilpotents are only defined for associative multiplication (witness {0:?})")]
    NonAssociativeNilpotentQuery((Val, Val, Val)),
}

/// Hypothesis flags, each re-derivable by exhaustive scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFlags {
    pub associative: bool,
    pub commutative: bool,
    pub has_add: bool,
    pub additive_associative: bool,
    pub additive_commutative: bool,
    pub distributive: bool,
    pub has_unit: bool,
    /// `1 + 1 = 0`.
    pub char_two: bool,
    pub zero_divisor_free: bool,
    /// Associative, unital, distributive, with an abelian additive group.
    pub is_ring: bool,
    /// Ring in which every nonzero element is invertible.
    pub is_division_ring: bool,
    pub associativity_witness: Option<(Val, Val, Val)>,
    pub commutativity_witness: Option<(Val, Val)>,
    pub distributivity_witness: Option<(Val, Val, Val)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAlgebra", into = "RawAlgebra")]
pub struct AlgebraTable {
    name: String,
    m: usize,
    mul: Vec<Val>,
    add: Option<Vec<Val>>,
    zero: Val,
    zero_side: Side,
    unit: Option<(Val, Side)>,
    flags: StructureFlags,
}

#[derive(Serialize, Deserialize)]
struct RawAlgebra {
    name: String,
    mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    add: Option<Vec<Vec<usize>>>,
    zero: usize,
    zero_side: Side,
}

impl TryFrom<RawAlgebra> for AlgebraTable {
    type Error = AlgebraError;
    fn try_from(r: RawAlgebra) -> Result<Self, Self::Error> {
        AlgebraTable::from_tables(r.name, &r.mul, r.add.as_deref(), r.zero, Some(r.zero_side))
    }
}

impl From<AlgebraTable> for RawAlgebra {
    fn from(t: AlgebraTable) -> Self {
        RawAlgebra {
            mul: t.mul_rows(),
            add: t.add_rows(),
            zero: t.zero as usize,
            zero_side: t.zero_side,
            name: t.name,
        }
    }
}

fn placeholder_flags() -> StructureFlags {
    StructureFlags {
        associative: false,
        commutative: false,
        has_add: false,
        additive_associative: false,
        additive_commutative: false,
        distributive: false,
        has_unit: false,
        char_two: false,
        zero_divisor_free: false,
        is_ring: false,
        is_division_ring: false,
        associativity_witness: None,
        commutativity_witness: None,
        distributivity_witness: None,
    }
}

fn flatten(
    table: &'static str,
    m: usize,
    rows: &[Vec<usize>],
) -> Result<Vec<Val>, AlgebraError> {
    if rows.len() != m || rows.iter().any(|r| r.len() != m) {
        return Err(AlgebraError::Ragged { table, m });
    }
    let mut out = Vec::with_capacity(m * m);
    for (a, row) in rows.iter().enumerate() {
        for (b, &value) in row.iter().enumerate() {
            if value >= m {
                return Err(AlgebraError::EntryOutOfRange { table, a, b, value });
            }
            out.push(value as Val);
        }
    }
    Ok(out)
}

impl AlgebraTable {
    /// Build from row-major tables. When `zero_side` is `None` the strongest
    /// side on which `zero` absorbs is detected. A unit is detected
    /// automatically (two-sided preferred).
    pub fn from_tables(
        name: impl Into<String>,
        mul: &[Vec<usize>],
        add: Option<&[Vec<usize>]>,
        zero: usize,
        zero_side: Option<Side>,
    ) -> Result<Self, AlgebraError> {
        let m = mul.len();
        if !(2..=MAX_CARRIER).contains(&m) {
            return Err(AlgebraError::CarrierSize(m));
        }
        let mul = flatten("mul", m, mul)?;
        let add = add.map(|rows| flatten("add", m, rows)).transpose()?;
        if zero >= m {
            return Err(AlgebraError::EntryOutOfRange { table: "zero", a: 0, b: 0, value: zero });
        }
        let z = zero as Val;
        let at = |a: usize, b: usize| mul[a * m + b];
        let left_fail = (0..m).find(|&a| at(zero, a) != z);
        let right_fail = (0..m).find(|&a| at(a, zero) != z);
        let zero_side = match zero_side {
            Some(side) => {
                let fail = match side {
                    Side::Left => left_fail,
                    Side::Right => right_fail,
                    Side::TwoSided => left_fail.or(right_fail),
                };
                if let Some(witness) = fail {
                    return Err(AlgebraError::ZeroNotAbsorbing { zero, side, witness });
                }
                side
            }
            None => match (left_fail, right_fail) {
                (None, None) => Side::TwoSided,
                (None, Some(_)) => Side::Left,
                (Some(_), None) => Side::Right,
                (Some(_), Some(_)) => return Err(AlgebraError::NoZero),
            },
        };
        if let Some(add) = &add {
            if let Some(witness) =
                (0..m).find(|&a| add[zero * m + a] != a as Val || add[a * m + zero] != a as Val)
            {
                return Err(AlgebraError::AddIdentity { zero, witness });
            }
        }
        let is_left_unit = |e: usize| (0..m).all(|a| at(e, a) == a as Val);
        let is_right_unit = |e: usize| (0..m).all(|a| at(a, e) == a as Val);
        let unit = (0..m)
            .find(|&e| is_left_unit(e) && is_right_unit(e))
            .map(|e| (e as Val, Side::TwoSided))
            .or_else(|| (0..m).find(|&e| is_left_unit(e)).map(|e| (e as Val, Side::Left)))
            .or_else(|| (0..m).find(|&e| is_right_unit(e)).map(|e| (e as Val, Side::Right)));
        let mut t = AlgebraTable {
            name: name.into(),
            m,
            mul,
            add,
            zero: z,
            zero_side,
            unit,
            flags: placeholder_flags(),
        };
        t.flags = t.scan_flags();
        Ok(t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn zero(&self) -> Val {
        self.zero
    }

    pub fn zero_side(&self) -> Side {
        self.zero_side
    }

    pub fn unit(&self) -> Option<Val> {
        self.unit.map(|(u, _)| u)
    }

    pub fn unit_side(&self) -> Option<Side> {
        self.unit.map(|(_, s)| s)
    }

    pub fn has_add(&self) -> bool {
        self.add.is_some()
    }

    pub fn flags(&self) -> &StructureFlags {
        &self.flags
    }

    #[inline]
    pub fn mul(&self, a: Val, b: Val) -> Val {
        self.mul[a as usize * self.m + b as usize]
    }

    #[inline]
    pub fn add(&self, a: Val, b: Val) -> Option<Val> {
        self.add.as_ref().map(|t| t[a as usize * self.m + b as usize])
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.m).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn add_rows(&self) -> Option<Vec<Vec<usize>>> {
        self.add
            .as_ref()
            .map(|t| t.chunks(self.m).map(|r| r.iter().map(|&v| v as usize).collect()).collect())
    }

    pub fn elements(&self) -> impl Iterator<Item = Val> {
        0..self.m as Val
    }

    /// Additive inverse of `a`, if the addition table provides one.
    pub fn neg(&self, a: Val) -> Option<Val> {
        self.elements().find(|&b| self.add(a, b) == Some(self.zero))
    }

    fn scan_flags(&self) -> StructureFlags {
        let els: Vec<Val> = self.elements().collect();
        let mut associativity_witness = None;
        'a: for &a in &els {
            for &b in &els {
                for &c in &els {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        associativity_witness = Some((a, b, c));
                        break 'a;
                    }
                }
            }
        }
        let mut commutativity_witness = None;
        'c: for &a in &els {
            for &b in &els {
                if self.mul(a, b) != self.mul(b, a) {
                    commutativity_witness = Some((a, b));
                    break 'c;
                }
            }
        }
        let (mut add_assoc, mut add_comm, mut distributivity_witness) = (false, false, None);
        let mut char_two = false;
        let mut group = false;
        if let Some(add) = &self.add {
            let p = |a: Val, b: Val| add[a as usize * self.m + b as usize];
            add_assoc = els
                .iter()
                .all(|&a| els.iter().all(|&b| els.iter().all(|&c| p(p(a, b), c) == p(a, p(b, c)))));
            add_comm = els.iter().all(|&a| els.iter().all(|&b| p(a, b) == p(b, a)));
            group = els.iter().all(|&a| self.neg(a).is_some());
            'd: for &a in &els {
                for &b in &els {
                    for &c in &els {
                        let left = self.mul(a, p(b, c)) != p(self.mul(a, b), self.mul(a, c));
                        let right = self.mul(p(b, c), a) != p(self.mul(b, a), self.mul(c, a));
                        if left || right {
                            distributivity_witness = Some((a, b, c));
                            break 'd;
                        }
                    }
                }
            }
            if let Some(u) = self.unit() {
                char_two = p(u, u) == self.zero;
            }
        }
        let has_add = self.add.is_some();
        let distributive = has_add && distributivity_witness.is_none();
        let zero_divisor_free = self.zero_divisors().is_empty();
        let has_unit = self.unit_side() == Some(Side::TwoSided);
        let associative = associativity_witness.is_none();
        let is_ring = associative && has_unit && add_assoc && add_comm && group && distributive;
        let is_division_ring = is_ring
            && els.iter().filter(|&&a| a != self.zero).all(|&a| {
                let u = self.unit.unwrap().0;
                els.iter().any(|&b| self.mul(a, b) == u && self.mul(b, a) == u)
            });
        StructureFlags {
            associative,
            commutative: commutativity_witness.is_none(),
            has_add,
            additive_associative: add_assoc,
            additive_commutative: add_comm,
            distributive,
            has_unit,
            char_two,
            zero_divisor_free,
            is_ring,
            is_division_ring,
            associativity_witness,
            commutativity_witness,
            distributivity_witness,
        }
    }

    /// All `(a, b)` with `a ≠ 0`, `b ≠ 0`, `a·b = 0`, sorted.
    pub fn zero_divisors(&self) -> Vec<(Val, Val)> {
        let mut out = Vec::new();
        for a in self.elements().filter(|&a| a != self.zero) {
            for b in self.elements().filter(|&b| b != self.zero) {
                if self.mul(a, b) == self.zero {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn idempotents(&self) -> Vec<Val> {
        self.elements().filter(|&a| self.mul(a, a) == a).collect()
    }

    /// Elements with `a^k = 0` for some `k ≤ m`; needs associativity.
    pub fn nilpotents(&self) -> Result<Vec<Val>, AlgebraError> {
        if let Some(w) = self.flags.associativity_witness {
            return Err(AlgebraError::NonAssociativeNilpotentQuery(w));
        }
        Ok(self
            .elements()
            .filter(|&a| {
                let mut p = a;
                for _ in 0..self.m {
                    if p == self.zero {
                        return true;
                    }
                    p = self.mul(p, a);
                }
                p == self.zero
            })
            .collect())
    }
}

impl fmt::Display for AlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// ℤ_n with both operations.
pub fn make_zmod(n: usize) -> AlgebraTable {
    assert!((2..=MAX_CARRIER).contains(&n), "zmod modulus {n} outside 2..={MAX_CARRIER}");
    let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a * b % n).collect()).collect();
    let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    AlgebraTable::from_tables(format!("Z{n}"), &mul, Some(&add), 0, Some(Side::TwoSided))
        .expect("zmod tables are valid")
}

pub fn zero_divisors(y: &AlgebraTable) -> Vec<(Val, Val)> {
    y.zero_divisors()
}

pub fn structure_flags(y: &AlgebraTable) -> StructureFlags {
    y.flags().clone()
}

pub fn idempotents_nilpotents(y: &AlgebraTable) -> Result<(Vec<Val>, Vec<Val>), AlgebraError> {
    Ok((y.idempotents(), y.nilpotents()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn is_prime(n: usize) -> bool {
        n >= 2 && (2..n).all(|d| n % d != 0)
    }

    #[test]
    fn zmod2_tables() {
        let y = make_zmod(2);
        assert_eq!(y.mul_rows(), vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(y.add_rows(), Some(vec![vec![0, 1], vec![1, 0]]));
        assert!(y.flags().char_two);
        assert_eq!(y.unit(), Some(1));
    }

    #[test]
    fn zero_divisor_examples() {
        assert!(make_zmod(3).flags().zero_divisor_free);
        assert_eq!(zero_divisors(&make_zmod(3)), vec![]);
        assert_eq!(zero_divisors(&make_zmod(4)), vec![(2, 2)]);
        assert_eq!(zero_divisors(&make_zmod(6)), vec![(2, 3), (3, 2), (3, 4), (4, 3)]);
    }

    #[test]
    fn flags_for_z3() {
        let f = structure_flags(&make_zmod(3));
        assert!(!f.char_two);
        assert!(f.distributive);
        assert!(f.is_ring && f.is_division_ring);
        assert!(!make_zmod(4).flags().is_division_ring);
    }

    #[test]
    fn non_associative_magma_detected() {
        // (1·2)·2 = 1 but 1·(2·2) = 0.
        let mul = vec![vec![0, 0, 0], vec![0, 0, 2], vec![0, 1, 1]];
        let y = AlgebraTable::from_tables("M", &mul, None, 0, None).unwrap();
        let f = y.flags();
        assert!(!f.associative);
        let (a, b, c) = f.associativity_witness.unwrap();
        assert_ne!(y.mul(y.mul(a, b), c), y.mul(a, y.mul(b, c)));
        assert!(matches!(y.nilpotents(), Err(AlgebraError::NonAssociativeNilpotentQuery(_))));
    }

    #[test]
    fn idempotent_nilpotent_examples() {
        assert_eq!(idempotents_nilpotents(&make_zmod(4)).unwrap(), (vec![0, 1], vec![0, 2]));
        assert_eq!(idempotents_nilpotents(&make_zmod(2)).unwrap(), (vec![0, 1], vec![0]));
        assert_eq!(make_zmod(6).idempotents(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn zmod_zero_divisor_freeness_tracks_primality() {
        for n in 2..=12 {
            assert_eq!(make_zmod(n).flags().zero_divisor_free, is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn one_sided_zero_detection() {
        // 0·a = 0 for all a, but 1·0 = 1.
        let mul = vec![vec![0, 0], vec![1, 1]];
        let y = AlgebraTable::from_tables("L", &mul, None, 0, None).unwrap();
        assert_eq!(y.zero_side(), Side::Left);
        assert!(matches!(
            AlgebraTable::from_tables("L", &mul, None, 0, Some(Side::TwoSided)),
            Err(AlgebraError::ZeroNotAbsorbing { .. })
        ));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            AlgebraTable::from_tables("x", &[vec![0]], None, 0, None),
            Err(AlgebraError::CarrierSize(1))
        );
        assert!(matches!(
            AlgebraTable::from_tables("x", &[vec![0, 0], vec![0]], None, 0, None),
            Err(AlgebraError::Ragged { .. })
        ));
        let add = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            AlgebraTable::from_tables("x", &[vec![0, 0], vec![0, 1]], Some(&add), 0, None),
            Err(AlgebraError::AddIdentity { .. })
        ));
    }

    #[test]
    fn serde_round_trip() {
        let y = make_zmod(5);
        let json = serde_json::to_string(&y).unwrap();
        let back: AlgebraTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, y);
    }

    proptest! {
        #[test]
        fn nilpotent_powers_reach_zero_within_carrier(n in 2usize..=16) {
            let y = make_zmod(n);
            for a in y.nilpotents().unwrap() {
                let mut p = a;
                let mut k = 1;
                while p != 0 {
                    p = y.mul(p, a);
                    k += 1;
                }
                prop_assert!(k <= n);
            }
        }

        #[test]
        fn zero_divisors_empty_iff_flag(n in 2usize..=16) {
            let y = make_zmod(n);
            prop_assert_eq!(y.zero_divisors().is_empty(), y.flags().zero_divisor_free);
        }
    }
}
