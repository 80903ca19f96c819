//! JSON input documents.
//!
//! Two shapes are accepted:
//!
//! ```json
//! {"variables": ["x","y","z","w"], "J": null, "I": "(x*z, x*w, y*z, y*w)"}
//! {"variables": ["a","b","c","d"], "facets": [["a","b","c"], ["b","c","d"]]}
//! ```
//!
//! The facet form is analyzed through its Stanley–Reisner ideal.

use std::io::Read;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{stanley_reisner, SimplicialComplex};
use crate::ideal::{make_context, SquarefreeIdeal, VariableContext};
use crate::parse::parse_ideal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub variables: Vec<String>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    #[serde(rename = "I", default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<String>>>,
}

/// A document with every expression parsed against its variables.
#[derive(Debug, Clone)]
pub struct Case {
    pub ctx: Arc<VariableContext>,
    pub quotient: Option<SquarefreeIdeal>,
    pub ideal: SquarefreeIdeal,
    pub complex: Option<SimplicialComplex>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: InputDocument = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("malformed input document: {e}")))?;
        match (&doc.ideal, &doc.facets) {
            (Some(_), None) => {}
            (None, Some(_)) if doc.quotient.is_none() => {}
            (None, Some(_)) => {
                return Err(Error::Input("\"J\" cannot be combined with \"facets\"".into()))
            }
            _ => {
                return Err(Error::Input(
                    "exactly one of \"I\" and \"facets\" must be present".into(),
                ))
            }
        }
        Ok(doc)
    }

    /// Reads from a file, or from stdin when `path` is `None` or `-`.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let text = match path {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))?,
            _ => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
                buf
            }
        };
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn resolve(&self) -> Result<Case> {
        let ctx = make_context(&self.variables)?;
        let quotient = self.quotient.as_deref().map(|q| parse_ideal(q, &ctx)).transpose()?;
        if let Some(facets) = &self.facets {
            let faces = facets
                .iter()
                .map(|f| ctx.varset_by_names(f))
                .collect::<Result<Vec<_>>>()?;
            let complex = SimplicialComplex::new(&ctx, faces)?;
            let ideal = stanley_reisner(&ctx, &complex)?;
            return Ok(Case { ctx, quotient, ideal, complex: Some(complex) });
        }
        let text = self.ideal.as_deref().expect("validated on load");
        let ideal = parse_ideal(text, &ctx)?;
        Ok(Case { ctx, quotient, ideal, complex: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_form() {
        let doc = InputDocument::from_json(
            r#"{"variables":["x","y","z","w"],"J":null,"I":"(x*z,x*w,y*z,y*w)"}"#,
        )
        .unwrap();
        let case = doc.resolve().unwrap();
        assert_eq!(case.ideal.to_string(), "(x*z, x*w, y*z, y*w)");
        assert!(case.quotient.is_none());
        assert!(case.complex.is_none());
    }

    #[test]
    fn facet_form() {
        let doc = InputDocument::from_json(
            r#"{"variables":["a","b","c","d"],"facets":[["a","b","c"],["b","c","d"]]}"#,
        )
        .unwrap();
        let case = doc.resolve().unwrap();
        assert_eq!(case.ideal.to_string(), "(a*d)");
        assert_eq!(case.complex.unwrap().facets().len(), 2);
    }

    #[test]
    fn rejections() {
        for bad in [
            r#"{"I": 5}"#,
            r#"{"variables":["x"],"I":5}"#,
            r#"{"variables":["x"]}"#,
            r#"{"variables":["x"],"I":"(x)","facets":[["x"]]}"#,
            r#"{"variables":["x"],"J":"(x)","facets":[["x"]]}"#,
            r#"{"variables":["x"],"I":"(x)","extra":1}"#,
            r#"{"variables":["x"],"I":"(x)""#,
        ] {
            assert!(matches!(InputDocument::from_json(bad), Err(Error::Input(_))), "{bad}");
        }
        let doc = InputDocument::from_json(r#"{"variables":["x","x"],"I":"(x)"}"#).unwrap();
        assert!(matches!(doc.resolve(), Err(Error::Input(_))));
        let doc = InputDocument::from_json(r#"{"variables":["x"],"I":"(x*q)"}"#).unwrap();
        assert!(matches!(doc.resolve(), Err(Error::Parse { .. })));
        let doc = InputDocument::from_json(r#"{"variables":["a"],"facets":[["b"]]}"#).unwrap();
        assert!(matches!(doc.resolve(), Err(Error::Input(_))));
    }

    #[test]
    fn json_round_trip_is_stable() {
        let text = r#"{"variables":["x","y"],"J":"(x*y)","I":"(x, y)"}"#;
        let once = InputDocument::from_json(text).unwrap().to_json();
        let twice = InputDocument::from_json(&once).unwrap().to_json();
        assert_eq!(once, twice);
    }
}
