//! JSON structure documents.
//!
//! Every top-level document carries a `"kind"` tag:
//!
//! ```json
//! {"kind": "group", "names": ["0", "1"], "table": [[0, 1], [1, 0]]}
//! {"kind": "heap", "names": ["a", "b"], "table": [[[0, 1], [1, 0]], [[1, 0], [0, 1]]]}
//! {"kind": "truss", "heap": {...}, "mul": [[0, 0], [0, 1]]}
//! {"kind": "truss", "builtin": "TZ4"}
//! {"kind": "truss", "ring": "Z2xZ2"}
//! {"kind": "module", "truss": {...}, "heap": {...}, "action": [[...]]}
//! {"kind": "free-module", "truss": {...}, "generators": 2, "window": 5}
//! {"kind": "symmetric-word", "coeffs": {"a": 1, "b": -1, "c": 1}}
//! ```
//!
//! Nested heaps may also be given as `{"group": "Z2xZ3"}` or as a binary
//! group table, and nested trusses may omit the tag.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteGroup, FiniteHeap, ValidationOptions};
use crate::error::{Error, Result};
use crate::tmodule::FiniteModule;
use crate::truss::{BuiltinTruss, FiniteRing, FiniteTruss};
use crate::words::{Alphabet, SymmetricWord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Group {
        names: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Heap {
        names: Vec<String>,
        table: Vec<Vec<Vec<usize>>>,
    },
    Truss(TrussSpec),
    Module {
        truss: TrussSpec,
        heap: HeapSpec,
        action: Vec<Vec<usize>>,
    },
    FreeModule {
        truss: TrussSpec,
        generators: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        window: Option<u32>,
    },
    SymmetricWord {
        coeffs: BTreeMap<String, i64>,
    },
}

/// A heap given by a ternary table, a group table, or a group spec string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HeapSpec {
    Ternary {
        names: Vec<String>,
        table: Vec<Vec<Vec<usize>>>,
    },
    Group {
        names: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Named {
        group: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TrussSpec {
    Builtin { builtin: String },
    Ring { ring: String },
    Table { heap: HeapSpec, mul: Vec<Vec<usize>> },
}

/// A truss resolved from a document: table-backed or symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyTruss {
    Finite(FiniteTruss),
    Builtin(BuiltinTruss),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("structure document: {e}")))
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group { .. } => "group",
            Document::Heap { .. } => "heap",
            Document::Truss(_) => "truss",
            Document::Module { .. } => "module",
            Document::FreeModule { .. } => "free-module",
            Document::SymmetricWord { .. } => "symmetric-word",
        }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        Document::Group {
            names: g.names().to_vec(),
            table: g.rows(),
        }
    }

    pub fn from_heap(h: &FiniteHeap) -> Self {
        Document::Heap {
            names: h.names().to_vec(),
            table: h.table(),
        }
    }

    pub fn from_truss(t: &FiniteTruss) -> Self {
        Document::Truss(TrussSpec::from_finite(t))
    }

    pub fn from_module(m: &FiniteModule) -> Self {
        Document::Module {
            truss: TrussSpec::from_finite(m.truss()),
            heap: HeapSpec::from_heap(m.heap()),
            action: m.action_rows(),
        }
    }

    pub fn from_symmetric_word(w: &SymmetricWord, alphabet: &Alphabet) -> Self {
        Document::SymmetricWord {
            coeffs: w.to_named(alphabet),
        }
    }
}

impl HeapSpec {
    pub fn from_heap(h: &FiniteHeap) -> Self {
        HeapSpec::Ternary {
            names: h.names().to_vec(),
            table: h.table(),
        }
    }

    pub fn build(&self) -> Result<FiniteHeap> {
        match self {
            HeapSpec::Ternary { names, table } => {
                FiniteHeap::from_table(names.clone(), table, None, &ValidationOptions::default())
            }
            HeapSpec::Group { names, table } => {
                Ok(FiniteHeap::from_group(&FiniteGroup::from_table(names.clone(), table)?))
            }
            HeapSpec::Named { group } => Ok(FiniteHeap::from_group(parse_ring(group)?.additive())),
        }
    }
}

impl TrussSpec {
    pub fn from_finite(t: &FiniteTruss) -> Self {
        TrussSpec::Table {
            heap: HeapSpec::from_heap(t.heap()),
            mul: t.mul_rows(),
        }
    }

    pub fn build(&self) -> Result<AnyTruss> {
        match self {
            TrussSpec::Builtin { builtin } => {
                let b = BuiltinTruss::parse(builtin)?;
                Ok(match b {
                    BuiltinTruss::TZn(n) => AnyTruss::Finite(FiniteTruss::from_ring(&FiniteRing::zn(n as usize))),
                    other => AnyTruss::Builtin(other),
                })
            }
            TrussSpec::Ring { ring } => Ok(AnyTruss::Finite(FiniteTruss::from_ring(&parse_ring(ring)?))),
            TrussSpec::Table { heap, mul } => Ok(AnyTruss::Finite(FiniteTruss::new(heap.build()?, mul)?)),
        }
    }

    pub fn build_finite(&self) -> Result<FiniteTruss> {
        match self.build()? {
            AnyTruss::Finite(t) => Ok(t),
            AnyTruss::Builtin(b) => Err(Error::Mismatch(format!("{b} is not a table-backed truss"))),
        }
    }
}

/// Builds the module of a `module` document, validating every table.
pub fn build_module(doc: &Document) -> Result<FiniteModule> {
    match doc {
        Document::Module { truss, heap, action } => {
            FiniteModule::new(truss.build_finite()?, heap.build()?, action)
        }
        other => Err(Error::Mismatch(format!("expected a module document, got {}", other.kind()))),
    }
}

/// Parses ring specs such as `Z4`, `Z2xZ3` (direct sum) and `Z2^3`.
pub fn parse_ring(spec: &str) -> Result<FiniteRing> {
    let spec = spec.trim();
    let mut acc: Option<FiniteRing> = None;
    for part in spec.split(['x', '+']) {
        let part = part.trim();
        let (base, power) = match part.split_once('^') {
            Some((b, p)) => (b, p.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in `{part}`")))?),
            None => (part, 1),
        };
        let n: usize = base
            .strip_prefix('Z')
            .and_then(|d| d.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Parse(format!("unknown ring `{part}`; expected Zn, Zn^k or products with x")))?;
        if power == 0 {
            return Err(Error::Parse(format!("zero exponent in `{part}`")));
        }
        for _ in 0..power {
            let z = FiniteRing::zn(n);
            acc = Some(match acc {
                None => z,
                Some(r) => r.direct_sum(&z),
            });
        }
    }
    acc.ok_or_else(|| Error::Parse(format!("empty ring spec `{spec}`")))
}

/// Reads a symmetric word document into a word over `alphabet`.
pub fn symmetric_word(doc: &Document, alphabet: &Alphabet) -> Result<SymmetricWord> {
    match doc {
        Document::SymmetricWord { coeffs } => SymmetricWord::from_named(alphabet, coeffs),
        other => Err(Error::Mismatch(format!("expected a symmetric-word document, got {}", other.kind()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_and_heap_round_trip() {
        let g = FiniteGroup::dihedral(3);
        let doc = Document::from_group(&g);
        let back = Document::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        let h = FiniteHeap::from_group(&g);
        let Document::Heap { names, table } = Document::parse(&Document::from_heap(&h).to_json()).unwrap() else {
            panic!("heap document expected");
        };
        let h2 = FiniteHeap::from_table(names, &table, None, &ValidationOptions::default()).unwrap();
        assert!(h2.same_operation(&h));
    }

    #[test]
    fn truss_specs() {
        let doc = Document::parse(r#"{"kind":"truss","builtin":"TZ4"}"#).unwrap();
        let Document::Truss(spec) = doc else { panic!() };
        assert_eq!(spec.build_finite().unwrap().len(), 4);
        let doc = Document::parse(r#"{"kind":"truss","ring":"Z2xZ3"}"#).unwrap();
        let Document::Truss(spec) = doc else { panic!() };
        assert_eq!(spec.build_finite().unwrap().len(), 6);
        let spec = TrussSpec::Builtin { builtin: "TZ".into() };
        assert_eq!(spec.build().unwrap(), AnyTruss::Builtin(BuiltinTruss::TZ));
        assert!(spec.build_finite().is_err());
    }

    #[test]
    fn module_round_trip() {
        let m = FiniteModule::from_r_module(&crate::tmodule::RModule::power(&FiniteRing::zn(2), 2).unwrap());
        let doc = Document::from_module(&m);
        let back = Document::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        let named = Document::parse(
            r#"{"kind":"module","truss":{"ring":"Z2"},"heap":{"group":"Z2"},"action":[[0,0],[0,1]]}"#,
        )
        .unwrap();
        assert_eq!(named.kind(), "module");
    }

    #[test]
    fn ring_specs() {
        assert_eq!(parse_ring("Z4").unwrap().order(), 4);
        assert_eq!(parse_ring("Z2^3").unwrap().order(), 8);
        assert_eq!(parse_ring("Z2 x Z3").unwrap().order(), 6);
        assert!(parse_ring("Q8").is_err());
    }
}
