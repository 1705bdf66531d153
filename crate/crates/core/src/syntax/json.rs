//! JSON export of formula trees.
//!
//! Every language shares one node schema, tagged by `"tag"`:
//!
//! ```json
//! {"tag":"imp","idx":2,"lhs":{"tag":"atom","name":"p"},"rhs":{"tag":"bot"}}
//! ```
//!
//! `idx` is present on typed implications and boxes and absent otherwise.

use serde::{Deserialize, Serialize};

use super::render::{Shape, Syntax};
use super::{Index, ModalFormula, PropFormula, UntypedModal, UntypedProp};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase", deny_unknown_fields)]
pub enum AstNode {
    Atom {
        name: String,
    },
    Top,
    Bot,
    Not {
        arg: Box<AstNode>,
    },
    And {
        lhs: Box<AstNode>,
        rhs: Box<AstNode>,
    },
    Or {
        lhs: Box<AstNode>,
        rhs: Box<AstNode>,
    },
    Imp {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        idx: Option<u32>,
        lhs: Box<AstNode>,
        rhs: Box<AstNode>,
    },
    Box {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        idx: Option<u32>,
        arg: Box<AstNode>,
    },
}

fn to_node<F: Syntax>(f: &F) -> AstNode {
    let b = |x: &F| Box::new(to_node(x));
    match f.shape() {
        Shape::Atom(p) => AstNode::Atom {
            name: p.to_string(),
        },
        Shape::Top => AstNode::Top,
        Shape::Bot => AstNode::Bot,
        Shape::Not(a) => AstNode::Not { arg: b(a) },
        Shape::And(x, y) => AstNode::And {
            lhs: b(x),
            rhs: b(y),
        },
        Shape::Or(x, y) => AstNode::Or {
            lhs: b(x),
            rhs: b(y),
        },
        Shape::Imp(n, x, y) => AstNode::Imp {
            idx: n.map(Index::get),
            lhs: b(x),
            rhs: b(y),
        },
        Shape::Box(n, a) => AstNode::Box {
            idx: n.map(Index::get),
            arg: b(a),
        },
    }
}

/// Error converting a JSON node into a specific language.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AstError {
    #[error("node `{0}` is not allowed in this language")]
    Foreign(&'static str),
    #[error("node `{0}` is missing its index")]
    MissingIndex(&'static str),
    #[error("node `{0}` must not carry an index")]
    UnexpectedIndex(&'static str),
    #[error(transparent)]
    IllTyped(#[from] super::IllTyped),
}

impl AstNode {
    pub fn to_prop(&self) -> Result<PropFormula, AstError> {
        let f = match self {
            AstNode::Atom { name } => PropFormula::Atom(name.clone()),
            AstNode::Top => PropFormula::Top,
            AstNode::Bot => PropFormula::Bot,
            AstNode::Not { .. } => return Err(AstError::Foreign("not")),
            AstNode::Box { .. } => return Err(AstError::Foreign("box")),
            AstNode::And { lhs, rhs } => PropFormula::and(lhs.to_prop()?, rhs.to_prop()?),
            AstNode::Or { lhs, rhs } => PropFormula::or(lhs.to_prop()?, rhs.to_prop()?),
            AstNode::Imp { idx: None, .. } => return Err(AstError::MissingIndex("imp")),
            AstNode::Imp {
                idx: Some(n),
                lhs,
                rhs,
            } => PropFormula::try_imp(*n, lhs.to_prop()?, rhs.to_prop()?)?,
        };
        Ok(f)
    }

    pub fn to_modal(&self) -> Result<ModalFormula, AstError> {
        let f = match self {
            AstNode::Atom { name } => ModalFormula::Atom(name.clone()),
            AstNode::Top => ModalFormula::Top,
            AstNode::Bot => ModalFormula::Bot,
            AstNode::Not { arg } => ModalFormula::not(arg.to_modal()?),
            AstNode::And { lhs, rhs } => ModalFormula::and(lhs.to_modal()?, rhs.to_modal()?),
            AstNode::Or { lhs, rhs } => ModalFormula::or(lhs.to_modal()?, rhs.to_modal()?),
            AstNode::Imp { idx: Some(_), .. } => return Err(AstError::UnexpectedIndex("imp")),
            AstNode::Imp {
                idx: None,
                lhs,
                rhs,
            } => ModalFormula::imp(lhs.to_modal()?, rhs.to_modal()?),
            AstNode::Box { idx: None, .. } => return Err(AstError::MissingIndex("box")),
            AstNode::Box { idx: Some(n), arg } => ModalFormula::try_boxed(*n, arg.to_modal()?)?,
        };
        Ok(f)
    }

    pub fn to_untyped_prop(&self) -> Result<UntypedProp, AstError> {
        Ok(match self {
            AstNode::Atom { name } => UntypedProp::Atom(name.clone()),
            AstNode::Top => UntypedProp::Top,
            AstNode::Bot => UntypedProp::Bot,
            AstNode::Not { .. } => return Err(AstError::Foreign("not")),
            AstNode::Box { .. } => return Err(AstError::Foreign("box")),
            AstNode::And { lhs, rhs } => {
                UntypedProp::and(lhs.to_untyped_prop()?, rhs.to_untyped_prop()?)
            }
            AstNode::Or { lhs, rhs } => {
                UntypedProp::or(lhs.to_untyped_prop()?, rhs.to_untyped_prop()?)
            }
            AstNode::Imp { idx: Some(_), .. } => return Err(AstError::UnexpectedIndex("imp")),
            AstNode::Imp {
                idx: None,
                lhs,
                rhs,
            } => UntypedProp::imp(lhs.to_untyped_prop()?, rhs.to_untyped_prop()?),
        })
    }

    pub fn to_untyped_modal(&self) -> Result<UntypedModal, AstError> {
        Ok(match self {
            AstNode::Atom { name } => UntypedModal::Atom(name.clone()),
            AstNode::Top => UntypedModal::Top,
            AstNode::Bot => UntypedModal::Bot,
            AstNode::Not { arg } => UntypedModal::Not(Box::new(arg.to_untyped_modal()?)),
            AstNode::And { lhs, rhs } => {
                UntypedModal::and(lhs.to_untyped_modal()?, rhs.to_untyped_modal()?)
            }
            AstNode::Or { lhs, rhs } => {
                UntypedModal::or(lhs.to_untyped_modal()?, rhs.to_untyped_modal()?)
            }
            AstNode::Imp { idx: Some(_), .. } => return Err(AstError::UnexpectedIndex("imp")),
            AstNode::Imp {
                idx: None,
                lhs,
                rhs,
            } => UntypedModal::imp(lhs.to_untyped_modal()?, rhs.to_untyped_modal()?),
            AstNode::Box { idx: Some(_), .. } => return Err(AstError::UnexpectedIndex("box")),
            AstNode::Box { idx: None, arg } => UntypedModal::boxed(arg.to_untyped_modal()?),
        })
    }
}

macro_rules! serde_via_ast {
    ($t:ty, $conv:ident) => {
        impl From<&$t> for AstNode {
            fn from(f: &$t) -> Self {
                to_node(f)
            }
        }

        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                to_node(self).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                AstNode::deserialize(d)?
                    .$conv()
                    .map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_ast!(PropFormula, to_prop);
serde_via_ast!(ModalFormula, to_modal);
serde_via_ast!(UntypedProp, to_untyped_prop);
serde_via_ast!(UntypedModal, to_untyped_modal);

/// Serde adapter writing formulas as their text rendering, used by the proof
/// file formats where hand-written proofs are the norm.
pub mod as_text {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<F: Display, S: Serializer>(f: &F, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(f)
    }

    pub fn deserialize<'de, F, D>(d: D) -> Result<F, D::Error>
    where
        F: FromStr,
        F::Err: Display,
        D: Deserializer<'de>,
    {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Like [`as_text`] for a list of formulas.
pub mod as_text_vec {
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<F: Display, S: Serializer>(fs: &[F], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(fs.len()))?;
        for f in fs {
            seq.serialize_element(&f.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, F, D>(d: D) -> Result<Vec<F>, D::Error>
    where
        F: FromStr,
        F::Err: Display,
        D: Deserializer<'de>,
    {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_modal, parse_prop};

    #[test]
    fn imp_node_layout() {
        let f = parse_prop("p ->1 F").unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"tag":"imp","idx":1,"lhs":{"tag":"atom","name":"p"},"rhs":{"tag":"bot"}}"#
        );
        let back: PropFormula = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn modal_nodes_and_rejection() {
        let f = parse_modal("~[]0 p -> T").unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains(r#""tag":"not""#));
        assert!(json.contains(r#""tag":"box","idx":0"#));
        assert_eq!(serde_json::from_str::<ModalFormula>(&json).unwrap(), f);
        let bad = r#"{"tag":"box","idx":0,"arg":{"tag":"box","idx":0,"arg":{"tag":"top"}}}"#;
        assert!(serde_json::from_str::<ModalFormula>(bad).is_err());
        let typed_in_prop = r#"{"tag":"imp","lhs":{"tag":"top"},"rhs":{"tag":"top"}}"#;
        assert!(serde_json::from_str::<PropFormula>(typed_in_prop).is_err());
        assert!(serde_json::from_str::<UntypedProp>(typed_in_prop).is_ok());
    }
}
