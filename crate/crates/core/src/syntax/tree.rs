//! Structured tree encoding of formulas.
//!
//! Every node is an object whose first field is `tag` (`atom`, `falsum`,
//! `not`, `and`, `or`, `implies`). Atoms carry `name`; connectives carry
//! `children` as an array. Field order is fixed: `tag`, then `name` or
//! `children`.

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Atom, Formula};

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Atom {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Atom, D::Error> {
        let name = String::deserialize(deserializer)?;
        Atom::new(&name).map_err(D::Error::custom)
    }
}

impl Formula {
    pub fn tag(&self) -> &'static str {
        match self {
            Formula::Atom(_) => "atom",
            Formula::Falsum => "falsum",
            Formula::Not(_) => "not",
            Formula::And(..) => "and",
            Formula::Or(..) => "or",
            Formula::Implies(..) => "implies",
        }
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Formula::Atom(p) => {
                let mut node = serializer.serialize_struct("Formula", 2)?;
                node.serialize_field("tag", "atom")?;
                node.serialize_field("name", p)?;
                node.end()
            }
            Formula::Falsum => {
                let mut node = serializer.serialize_struct("Formula", 1)?;
                node.serialize_field("tag", "falsum")?;
                node.end()
            }
            _ => {
                let mut node = serializer.serialize_struct("Formula", 2)?;
                node.serialize_field("tag", self.tag())?;
                node.serialize_field("children", &self.children())?;
                node.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    tag: String,
    #[serde(default)]
    name: Option<Atom>,
    #[serde(default)]
    children: Vec<Formula>,
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Formula, D::Error> {
        let raw = RawNode::deserialize(deserializer)?;
        let arity = match raw.tag.as_str() {
            "atom" | "falsum" => 0,
            "not" => 1,
            "and" | "or" | "implies" => 2,
            other => return Err(D::Error::custom(format!("unknown formula tag `{other}`"))),
        };
        if raw.children.len() != arity {
            return Err(D::Error::custom(format!(
                "`{}` takes {arity} children, got {}",
                raw.tag,
                raw.children.len()
            )));
        }
        if (raw.tag == "atom") != raw.name.is_some() {
            return Err(D::Error::custom(
                "`name` is required on atoms and only on atoms",
            ));
        }
        let mut children = raw.children.into_iter();
        let mut next = || children.next().expect("arity checked");
        Ok(match raw.tag.as_str() {
            "atom" => Formula::Atom(raw.name.expect("checked")),
            "falsum" => Formula::Falsum,
            "not" => Formula::not(next()),
            "and" => Formula::and(next(), next()),
            "or" => Formula::or(next(), next()),
            _ => Formula::implies(next(), next()),
        })
    }
}
