//! JSON documents for symbols, shared by the `durfee` binary and its tests.

use anyhow::{bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};

use durfee_core::{balanced_numbers, DurfeeSymbol, Flavor, KMarkedSymbol, Partition, PartitionPair};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorDoc {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub weight: u64,
    pub ranks: Vec<i64>,
    pub balanced_numbers: Vec<usize>,
}

/// A k-marked symbol on the wire. `vectors[0]` is vector 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolDocument {
    pub flavor: String,
    pub d: u32,
    pub vectors: Vec<VectorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived: Option<Derived>,
}

impl SymbolDocument {
    pub fn from_symbol(s: &KMarkedSymbol) -> Self {
        SymbolDocument {
            flavor: s.flavor().to_string(),
            d: s.d(),
            vectors: s
                .vectors()
                .iter()
                .map(|v| VectorDoc {
                    alpha: v.alpha.parts().to_vec(),
                    beta: v.beta.parts().to_vec(),
                })
                .collect(),
            derived: Some(Derived {
                weight: s.weight(),
                ranks: s.ranks(),
                balanced_numbers: balanced_numbers(s),
            }),
        }
    }

    pub fn from_durfee(s: &DurfeeSymbol) -> Self {
        SymbolDocument::from_symbol(&s.to_marked())
    }

    /// Validates the symbol and, when present, the derived fields.
    pub fn to_symbol(&self) -> Result<KMarkedSymbol> {
        let flavor: Flavor = self.flavor.parse().map_err(anyhow::Error::msg)?;
        let vectors = self
            .vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let alpha = Partition::new(v.alpha.clone())
                    .with_context(|| format!("vector {} alpha", i + 1))?;
                let beta = Partition::new(v.beta.clone())
                    .with_context(|| format!("vector {} beta", i + 1))?;
                Ok(PartitionPair::new(alpha, beta))
            })
            .collect::<Result<Vec<_>>>()?;
        let s = KMarkedSymbol::new(vectors, self.d, flavor)?;
        if let Some(derived) = &self.derived {
            let fresh = SymbolDocument::from_symbol(&s).derived.expect("always derived");
            ensure!(
                *derived == fresh,
                "derived fields disagree with the symbol: given {derived:?}, computed {fresh:?}"
            );
        }
        Ok(s)
    }

    pub fn to_durfee(&self) -> Result<DurfeeSymbol> {
        match self.to_symbol()?.as_durfee() {
            Some(ds) => Ok(ds),
            None => bail!("expected a Durfee symbol (one vector), got {} vectors", self.vectors.len()),
        }
    }

    /// One-line JSON.
    pub fn render(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn render_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed symbol document")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use durfee_core::enumerate_kmarked;

    #[test]
    fn documents_round_trip_over_corpora() {
        for flavor in [Flavor::Ordinary, Flavor::Odd] {
            for k in 1..=3 {
                for n in 0..=9 {
                    for s in enumerate_kmarked(n, k, flavor) {
                        let doc = SymbolDocument::from_symbol(&s);
                        let back = SymbolDocument::parse(&doc.render()).unwrap();
                        assert_eq!(back, doc);
                        assert_eq!(back.to_symbol().unwrap(), s);
                    }
                }
            }
        }
    }

    #[test]
    fn derived_fields_are_checked() {
        let text = r#"{"flavor":"ordinary","d":1,"vectors":[{"alpha":[1],"beta":[]}],
            "derived":{"weight":2,"ranks":[5],"balanced_numbers":[0]}}"#;
        let err = SymbolDocument::parse(text).unwrap().to_symbol().unwrap_err();
        assert!(err.to_string().contains("derived"));
        let bare = r#"{"flavor":"ordinary","d":1,"vectors":[{"alpha":[1],"beta":[]}]}"#;
        assert_eq!(SymbolDocument::parse(bare).unwrap().to_symbol().unwrap().ranks(), vec![1]);
    }

    #[test]
    fn invalid_documents_are_rejected() {
        let bad = r#"{"flavor":"ordinary","d":1,"vectors":[{"alpha":[2],"beta":[]}]}"#;
        assert!(SymbolDocument::parse(bad).unwrap().to_symbol().is_err());
        let flavor = r#"{"flavor":"even","d":1,"vectors":[]}"#;
        assert!(SymbolDocument::parse(flavor).unwrap().to_symbol().is_err());
        assert!(SymbolDocument::parse("{").is_err());
    }
}
