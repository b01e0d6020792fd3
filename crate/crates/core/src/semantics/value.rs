use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A Belnap truth value.
///
/// Internally a pair of "told true" and "told false" bits: `t = (1,0)`,
/// `b = (1,1)`, `n = (0,0)`, `f = (0,1)`. The truth order has `f` at the
/// bottom, `t` at the top, and `b`, `n` incomparable in between.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TruthValue {
    T,
    B,
    N,
    F,
}

impl TruthValue {
    /// Enumeration order for valuations.
    pub const ALL: [TruthValue; 4] = [TruthValue::T, TruthValue::B, TruthValue::N, TruthValue::F];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn told_true(self) -> bool {
        matches!(self, TruthValue::T | TruthValue::B)
    }

    pub fn told_false(self) -> bool {
        matches!(self, TruthValue::F | TruthValue::B)
    }

    fn from_bits(told_true: bool, told_false: bool) -> TruthValue {
        match (told_true, told_false) {
            (true, false) => TruthValue::T,
            (true, true) => TruthValue::B,
            (false, false) => TruthValue::N,
            (false, true) => TruthValue::F,
        }
    }

    /// Truth-order meet.
    pub fn meet(self, other: TruthValue) -> TruthValue {
        TruthValue::from_bits(
            self.told_true() && other.told_true(),
            self.told_false() || other.told_false(),
        )
    }

    /// Truth-order join.
    pub fn join(self, other: TruthValue) -> TruthValue {
        TruthValue::from_bits(
            self.told_true() || other.told_true(),
            self.told_false() && other.told_false(),
        )
    }

    /// Swaps `t` and `f`; fixes `b` and `n`.
    pub fn negate(self) -> TruthValue {
        TruthValue::from_bits(self.told_false(), self.told_true())
    }

    /// `self <= other` in the truth order.
    pub fn truth_le(self, other: TruthValue) -> bool {
        self.meet(other) == self
    }

    pub fn symbol(self) -> char {
        match self {
            TruthValue::T => 't',
            TruthValue::B => 'b',
            TruthValue::N => 'n',
            TruthValue::F => 'f',
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for TruthValue {
    type Err = String;

    fn from_str(s: &str) -> Result<TruthValue, String> {
        match s {
            "t" => Ok(TruthValue::T),
            "b" => Ok(TruthValue::B),
            "n" => Ok(TruthValue::N),
            "f" => Ok(TruthValue::F),
            other => Err(format!("unknown truth value `{other}`")),
        }
    }
}
