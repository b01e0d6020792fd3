use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The four logics, identified by which of the two negation laws they keep.
///
/// | logic | non-contradiction | excluded middle |
/// |-------|-------------------|-----------------|
/// | CL    | yes               | yes             |
/// | LP    | no                | yes             |
/// | K3    | yes               | no              |
/// | BDL   | no                | no              |
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LogicId {
    #[serde(rename = "CL")]
    Cl,
    #[serde(rename = "LP")]
    Lp,
    #[serde(rename = "K3")]
    K3,
    #[serde(rename = "BDL")]
    Bdl,
}

impl LogicId {
    pub const ALL: [LogicId; 4] = [LogicId::Cl, LogicId::Lp, LogicId::K3, LogicId::Bdl];

    /// Law of non-contradiction: `~A, A |- #`.
    pub fn lnc(self) -> bool {
        matches!(self, LogicId::Cl | LogicId::K3)
    }

    /// Law of excluded middle: `~# |- A, ~A`.
    pub fn lem(self) -> bool {
        matches!(self, LogicId::Cl | LogicId::Lp)
    }

    pub fn from_flags(lnc: bool, lem: bool) -> LogicId {
        match (lnc, lem) {
            (true, true) => LogicId::Cl,
            (false, true) => LogicId::Lp,
            (true, false) => LogicId::K3,
            (false, false) => LogicId::Bdl,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LogicId::Cl => "CL",
            LogicId::Lp => "LP",
            LogicId::K3 => "K3",
            LogicId::Bdl => "BDL",
        }
    }

    /// Every consequence of `self` is a consequence of `other`.
    pub fn included_in(self, other: LogicId) -> bool {
        (!self.lnc() || other.lnc()) && (!self.lem() || other.lem())
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LogicId {
    type Err = String;

    fn from_str(s: &str) -> Result<LogicId, String> {
        match s.to_ascii_lowercase().as_str() {
            "cl" => Ok(LogicId::Cl),
            "lp" => Ok(LogicId::Lp),
            "k3" => Ok(LogicId::K3),
            "bdl" => Ok(LogicId::Bdl),
            _ => Err(format!("unknown logic `{s}` (expected cl, lp, k3 or bdl)")),
        }
    }
}
