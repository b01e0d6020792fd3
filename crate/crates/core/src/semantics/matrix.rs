use super::{LogicId, TruthValue};

type Unary = [TruthValue; 4];
type BinaryTable = [[TruthValue; 4]; 4];

/// A logical matrix: carrier, designated values, and one table per
/// connective. Tables are total over all four values; only the carrier
/// part is meaningful for a restricted logic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    logic: LogicId,
    carrier: Vec<TruthValue>,
    designated: Vec<TruthValue>,
    not: Unary,
    and: BinaryTable,
    or: BinaryTable,
    implies: BinaryTable,
    falsum: TruthValue,
}

/// The fixed matrix of a logic.
///
/// Carriers are `{t,f}` (CL), `{t,b,f}` (LP), `{t,n,f}` (K3) and
/// `{t,b,n,f}` (BDL); the designated values are `{t,b}` intersected with the
/// carrier. `&` and `|` are truth-order meet and join, `~` swaps `t`/`f`,
/// and `a -> c` is `c` when `a` is designated and `t` otherwise.
pub fn logic_matrix(id: LogicId) -> Matrix {
    use TruthValue::*;
    let carrier: Vec<TruthValue> = TruthValue::ALL
        .into_iter()
        .filter(|v| match v {
            T | F => true,
            B => !id.lnc(),
            N => !id.lem(),
        })
        .collect();
    let designated = carrier.iter().copied().filter(|v| v.told_true()).collect();
    let mut not = [T; 4];
    let mut and = [[T; 4]; 4];
    let mut or = [[T; 4]; 4];
    let mut implies = [[T; 4]; 4];
    for a in TruthValue::ALL {
        not[a.index()] = a.negate();
        for b in TruthValue::ALL {
            and[a.index()][b.index()] = a.meet(b);
            or[a.index()][b.index()] = a.join(b);
            implies[a.index()][b.index()] = if a.told_true() { b } else { T };
        }
    }
    Matrix {
        logic: id,
        carrier,
        designated,
        not,
        and,
        or,
        implies,
        falsum: F,
    }
}

impl Matrix {
    pub fn logic(&self) -> LogicId {
        self.logic
    }

    pub fn carrier(&self) -> &[TruthValue] {
        &self.carrier
    }

    pub fn designated_values(&self) -> &[TruthValue] {
        &self.designated
    }

    pub fn is_designated(&self, v: TruthValue) -> bool {
        self.designated.contains(&v)
    }

    pub fn in_carrier(&self, v: TruthValue) -> bool {
        self.carrier.contains(&v)
    }

    pub fn negate(&self, a: TruthValue) -> TruthValue {
        self.not[a.index()]
    }

    pub fn conj(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        self.and[a.index()][b.index()]
    }

    pub fn disj(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        self.or[a.index()][b.index()]
    }

    pub fn implies(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        self.implies[a.index()][b.index()]
    }

    pub fn falsum(&self) -> TruthValue {
        self.falsum
    }

    /// Checks carrier closure, the falsum conditions and every designation
    /// biconditional cell by cell. Returns one message per violation.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let d = |v: TruthValue| self.is_designated(v);
        let carrier = &self.carrier;

        if !self.designated.iter().all(|v| carrier.contains(v)) {
            out.push("designated values outside the carrier".into());
        }
        if !self.in_carrier(self.falsum) {
            out.push("# is outside the carrier".into());
        }
        if d(self.falsum) {
            out.push("# is designated".into());
        }
        if !d(self.negate(self.falsum)) {
            out.push("~# is not designated".into());
        }
        for &a in carrier {
            let na = self.negate(a);
            if !self.in_carrier(na) {
                out.push(format!("~{a} leaves the carrier"));
            }
            if d(self.negate(na)) != d(a) {
                out.push(format!("~~{a} designation differs from {a}"));
            }
            for &b in carrier {
                let nb = self.negate(b);
                let (and, or, imp) = (self.conj(a, b), self.disj(a, b), self.implies(a, b));
                for (name, v) in [("&", and), ("|", or), ("->", imp)] {
                    if !self.in_carrier(v) {
                        out.push(format!("{a} {name} {b} leaves the carrier"));
                    }
                }
                if d(and) != (d(a) && d(b)) {
                    out.push(format!("{a} & {b}: designation is not conjunctive"));
                }
                if d(or) != (d(a) || d(b)) {
                    out.push(format!("{a} | {b}: designation is not disjunctive"));
                }
                if d(imp) != (!d(a) || d(b)) {
                    out.push(format!("{a} -> {b}: designation is not material"));
                }
                if d(self.negate(and)) != (d(na) || d(nb)) {
                    out.push(format!("~({a} & {b}) breaks the De Morgan condition"));
                }
                if d(self.negate(or)) != (d(na) && d(nb)) {
                    out.push(format!("~({a} | {b}) breaks the De Morgan condition"));
                }
                if d(self.negate(imp)) != (d(a) && d(nb)) {
                    out.push(format!(
                        "~({a} -> {b}) is not designated exactly with {a} and ~{b}"
                    ));
                }
            }
        }
        out
    }
}
