use std::fmt;

use super::{Binary, Formula, Sequent};

const PREC_IMPLIES: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_NOT: u8 = 4;
const PREC_ATOM: u8 = 5;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Atom(_) | Formula::Falsum => PREC_ATOM,
        Formula::Not(_) => PREC_NOT,
        Formula::And(..) => PREC_AND,
        Formula::Or(..) => PREC_OR,
        Formula::Implies(..) => PREC_IMPLIES,
    }
}

fn write_child(out: &mut fmt::Formatter<'_>, child: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(out, "({child})")
    } else {
        write!(out, "{child}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p) => write!(out, "{p}"),
            Formula::Falsum => out.write_str("#"),
            Formula::Not(a) => {
                out.write_str("~")?;
                write_child(out, a, precedence(a) < PREC_NOT)
            }
            _ => {
                let (op, lhs, rhs) = self.as_binary().expect("binary node");
                let prec = precedence(self);
                let right_assoc = op == Binary::Implies;
                let lp = precedence(lhs);
                let rp = precedence(rhs);
                write_child(out, lhs, lp < prec || (lp == prec && right_assoc))?;
                write!(out, " {} ", op.token())?;
                write_child(out, rhs, rp < prec || (rp == prec && !right_assoc))
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

/// Concrete syntax with the fewest parentheses the grammar allows.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

fn write_side<'a>(
    out: &mut fmt::Formatter<'_>,
    side: impl Iterator<Item = &'a Formula>,
) -> fmt::Result {
    for (i, f) in side.enumerate() {
        if i > 0 {
            out.write_str(", ")?;
        }
        write!(out, "{f}")?;
    }
    Ok(())
}

impl fmt::Display for Sequent {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_side(out, self.left().iter())?;
        if self.left().is_empty() {
            out.write_str("|-")?;
        } else {
            out.write_str(" |-")?;
        }
        if !self.right().is_empty() {
            out.write_str(" ")?;
        }
        write_side(out, self.right().iter())
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}
