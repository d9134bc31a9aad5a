//! Admissible (p, q) per type for the finite-group comparison.

use serde::Serialize;

use crate::rootsys::{Family, RootSystem, Weight};

/// When the q restriction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QCondition {
    Never,
    Always,
    /// Only for λ in the root lattice.
    RootLattice,
}

/// Per-type lower bounds: p > `p_above`, and q > `q_above` when `q_condition` applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Gate {
    #[serde(rename = "type")]
    pub type_name: String,
    pub p_above: i64,
    pub q_above: i64,
    pub q_condition: QCondition,
}

/// Outcome of checking one parameter set against the gate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateVerdict {
    pub admissible: bool,
    pub rule: String,
}

impl Table1Gate {
    pub fn for_type(family: Family, rank: usize) -> Self {
        let (p_above, q_condition) = match family {
            Family::A | Family::B | Family::D => (3, QCondition::Never),
            Family::C => (3, QCondition::RootLattice),
            Family::E if rank == 6 => (3, QCondition::Never),
            Family::E if rank == 7 => (3, QCondition::Always),
            Family::E => (5, QCondition::Never),
            Family::F => (3, QCondition::Always),
            Family::G => (5, QCondition::Never),
        };
        Table1Gate {
            type_name: format!("{}{rank}", family.letter()),
            p_above,
            q_above: 5,
            q_condition,
        }
    }

    pub fn rule(&self) -> String {
        let base = format!("{}: p > {}", self.type_name, self.p_above);
        match self.q_condition {
            QCondition::Never => base,
            QCondition::Always => format!("{base}, q > {}", self.q_above),
            QCondition::RootLattice => format!("{base} (q > {} if λ ∈ ZΦ)", self.q_above),
        }
    }

    /// Checks p and q = p^r; `lambda` decides the root-lattice condition when given.
    pub fn check(&self, rs: &RootSystem, p: i64, r: u32, lambda: Option<&Weight>) -> GateVerdict {
        let q = p.checked_pow(r).unwrap_or(i64::MAX);
        let q_applies = match self.q_condition {
            QCondition::Never => false,
            QCondition::Always => true,
            QCondition::RootLattice => lambda.map_or(true, |l| rs.in_root_lattice(l)),
        };
        GateVerdict {
            admissible: p > self.p_above && (!q_applies || q > self.q_above),
            rule: self.rule(),
        }
    }
}
