//! JSON documents exchanged by the command-line tool: instances, solutions and reports.
//!
//! Printing is canonical (pretty JSON, fields in declaration order, maps sorted, trailing
//! newline), so printing a parsed printout reproduces it byte for byte.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use arbpack_core::engine::{Arborescence, Outcome, Packing};
use arbpack_core::hypercore::TrimmedArc;
use arbpack_core::matroid::{shared, ExplicitMatroid, FreeMatroid, PartitionMatroid, UniformMatroid};
use arbpack_core::verify::{ConditionViolation, Witness};
use arbpack_core::{ElementId, MixedHypergraph, NodeId, NodeSet, PackingMode, Shape, SharedMatroid, Weight};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("malformed document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{at}: {message}")]
    Invalid { at: String, message: String },
}

fn invalid(at: impl Into<String>, message: impl fmt::Display) -> DocError {
    DocError::Invalid { at: at.into(), message: message.to_string() }
}

/// An exact weight, written as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational(pub Weight);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            s.serialize_i64(*self.0.numer())
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Exact;

        impl serde::de::Visitor<'_> for Exact {
            type Value = Rational;

            fn expecting(&self, f: &mut core::fmt::Formatter) -> core::fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: serde::de::Error>(self, n: i64) -> Result<Rational, E> {
                Ok(Rational(Weight::from_integer(n)))
            }

            fn visit_u64<E: serde::de::Error>(self, n: u64) -> Result<Rational, E> {
                i64::try_from(n)
                    .map(|n| Rational(Weight::from_integer(n)))
                    .map_err(|_| E::custom(format!("{n} is too large for a weight")))
            }

            fn visit_f64<E: serde::de::Error>(self, x: f64) -> Result<Rational, E> {
                Err(E::custom(format!("{x} is not exact; write weights as integers or \"p/q\" strings")))
            }

            fn visit_str<E: serde::de::Error>(self, t: &str) -> Result<Rational, E> {
                Weight::from_str(t.trim())
                    .map(Rational)
                    .map_err(|_| E::custom(format!("`{t}` is not a rational number")))
            }
        }

        d.deserialize_any(Exact)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DyperedgeDoc {
    pub id: String,
    pub tail: Vec<String>,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperedgeDoc {
    pub id: String,
    pub members: Vec<String>,
}

/// The matroid on the roots, referring to roots by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MatroidDoc {
    #[default]
    Free,
    Uniform { rank: usize },
    /// `blocks` partition the roots; block `i` may contribute `capacities[i]` roots.
    Partition { blocks: Vec<Vec<String>>, capacities: Vec<usize> },
    Explicit { bases: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub vertices: Vec<String>,
    pub roots: Vec<String>,
    #[serde(default)]
    pub dyperedges: Vec<DyperedgeDoc>,
    #[serde(default)]
    pub hyperedges: Vec<HyperedgeDoc>,
    /// Missing elements weigh zero.
    #[serde(default)]
    pub weights: BTreeMap<String, Rational>,
    #[serde(default)]
    pub matroid: MatroidDoc,
}

/// A parsed and checked instance. Elements are the dyperedges in document order followed by
/// the hyperedges.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: MixedHypergraph,
    pub matroid: SharedMatroid,
    pub weights: Vec<Weight>,
}

fn print_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents always serialize");
    text.push('\n');
    text
}

impl InstanceDoc {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn print(&self) -> String {
        print_json(self)
    }

    /// Builds the hypergraph and matroid, rejecting anything that is not rooted.
    pub fn build(&self) -> Result<Instance, DocError> {
        let mut h = MixedHypergraph::new();
        for (i, v) in self.vertices.iter().enumerate() {
            h.add_vertex(v.as_str()).map_err(|e| invalid(format!("vertices[{i}]"), e))?;
        }
        for (i, r) in self.roots.iter().enumerate() {
            h.add_root(r.as_str()).map_err(|e| invalid(format!("roots[{i}]"), e))?;
        }
        let node = |at: String, label: &str| -> Result<NodeId, DocError> {
            h.node(label).ok_or_else(|| invalid(at, format!("unknown node `{label}`")))
        };
        let mut shapes = Vec::new();
        for (i, a) in self.dyperedges.iter().enumerate() {
            let tail = a
                .tail
                .iter()
                .enumerate()
                .map(|(j, t)| node(format!("dyperedges[{i}].tail[{j}]"), t))
                .collect::<Result<Vec<_>, _>>()?;
            let head = node(format!("dyperedges[{i}].head"), &a.head)?;
            shapes.push((format!("dyperedges[{i}]"), a.id.as_str(), Ok((tail, head))));
        }
        for (i, e) in self.hyperedges.iter().enumerate() {
            let members = e
                .members
                .iter()
                .enumerate()
                .map(|(j, m)| node(format!("hyperedges[{i}].members[{j}]"), m))
                .collect::<Result<Vec<_>, _>>()?;
            shapes.push((format!("hyperedges[{i}]"), e.id.as_str(), Err(members)));
        }
        let mut locations = Vec::new();
        for (at, id, shape) in shapes {
            let added = match shape {
                Ok((tail, head)) => h.add_dyperedge(id, tail, head),
                Err(members) => h.add_hyperedge(id, members),
            };
            added.map_err(|e| invalid(at.clone(), e))?;
            locations.push(at);
        }
        if let arbpack_core::hypercore::Rootedness::NotRooted { root, element } = h.check_rooted() {
            return Err(invalid(
                locations[element.0].clone(),
                format!(
                    "`{}` breaks root `{}`: roots take no entering or undirected elements and are left only by \
                     dyperedges whose whole tail is the root",
                    h.element(element).label,
                    h.label(root)
                ),
            ));
        }
        let mut weights = vec![Weight::from_integer(0); h.element_count()];
        for (id, w) in &self.weights {
            let e = h.element_by_label(id).ok_or_else(|| invalid(format!("weights.{id}"), "unknown element"))?;
            weights[e.0] = w.0;
        }
        let matroid = self.build_matroid(&h)?;
        Ok(Instance { graph: h, matroid, weights })
    }

    fn build_matroid(&self, h: &MixedHypergraph) -> Result<SharedMatroid, DocError> {
        let n = h.root_count();
        let position = |at: String, label: &str| -> Result<usize, DocError> {
            h.node(label)
                .and_then(|r| h.root_position(r))
                .ok_or_else(|| invalid(at, format!("`{label}` is not a root")))
        };
        Ok(match &self.matroid {
            MatroidDoc::Free => shared(FreeMatroid::new(n)),
            MatroidDoc::Uniform { rank } => {
                if *rank > n {
                    return Err(invalid("matroid.rank", format!("rank {rank} exceeds the {n} roots")));
                }
                shared(UniformMatroid::new(n, *rank))
            }
            MatroidDoc::Partition { blocks, capacities } => {
                if blocks.len() != capacities.len() {
                    return Err(invalid("matroid.capacities", "one capacity per block is required"));
                }
                let mut parts = Vec::new();
                for (i, (block, &cap)) in blocks.iter().zip(capacities).enumerate() {
                    let members = block
                        .iter()
                        .enumerate()
                        .map(|(j, r)| position(format!("matroid.blocks[{i}][{j}]"), r))
                        .collect::<Result<Vec<_>, _>>()?;
                    parts.push((members, cap));
                }
                shared(PartitionMatroid::new(n, &parts).map_err(|e| invalid("matroid", e))?)
            }
            MatroidDoc::Explicit { bases } => {
                let mut sets = Vec::new();
                for (i, basis) in bases.iter().enumerate() {
                    let members = basis
                        .iter()
                        .enumerate()
                        .map(|(j, r)| position(format!("matroid.bases[{i}][{j}]"), r))
                        .collect::<Result<Vec<_>, _>>()?;
                    sets.push(members);
                }
                shared(ExplicitMatroid::new(n, &sets).map_err(|e| invalid("matroid", e))?)
            }
        })
    }

    /// The document of a hypergraph, listing every weight.
    pub fn describe(h: &MixedHypergraph, matroid: MatroidDoc, weights: &[Weight]) -> Self {
        let names = |nodes: &[NodeId]| nodes.iter().map(|&n| h.label(n).to_string()).collect();
        let mut dyperedges = Vec::new();
        let mut hyperedges = Vec::new();
        for (_, element) in h.elements() {
            match &element.shape {
                Shape::Dyperedge(a) => dyperedges.push(DyperedgeDoc {
                    id: element.label.clone(),
                    tail: names(&a.tail),
                    head: h.label(a.head).to_string(),
                }),
                Shape::Hyperedge(e) => {
                    hyperedges.push(HyperedgeDoc { id: element.label.clone(), members: names(&e.members) })
                }
            }
        }
        InstanceDoc {
            vertices: h.vertices().map(|v| h.label(v).to_string()).collect(),
            roots: h.roots().map(|r| h.label(r).to_string()).collect(),
            dyperedges,
            hyperedges,
            weights: h.elements().map(|(id, e)| (e.label.clone(), Rational(weights[id.0]))).collect(),
            matroid,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Optimal,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcDoc {
    pub element: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArborescenceDoc {
    pub root: String,
    pub arcs: Vec<ArcDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BisetDoc {
    pub outer: Vec<String>,
    pub inner: Vec<String>,
}

/// A violated inequality: `lhs < rhs` on the given set or biset subpartition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub condition: String,
    pub lhs: i64,
    pub rhs: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bisets: Option<Vec<BisetDoc>>,
}

fn set_names(h: &MixedHypergraph, set: &NodeSet) -> Vec<String> {
    set.ones().map(|n| h.label(NodeId(n)).to_string()).collect()
}

impl WitnessDoc {
    pub fn describe(h: &MixedHypergraph, v: &ConditionViolation) -> Self {
        let mut doc =
            WitnessDoc { condition: v.condition.name().into(), lhs: v.lhs, rhs: v.rhs, set: None, component: None, bisets: None };
        match &v.witness {
            Witness::Set(x) => doc.set = Some(set_names(h, x)),
            Witness::Subpartition { component, bisets } => {
                doc.component = Some(set_names(h, component));
                doc.bisets = Some(
                    bisets
                        .iter()
                        .map(|b| BisetDoc { outer: set_names(h, b.outer()), inner: set_names(h, b.inner()) })
                        .collect(),
                );
            }
        }
        doc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDoc {
    pub mode: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Rational>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub arborescences: Vec<ArborescenceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

impl SolutionDoc {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn print(&self) -> String {
        print_json(self)
    }

    pub fn describe(h: &MixedHypergraph, mode: PackingMode, outcome: &Outcome, witness: Option<&ConditionViolation>) -> Self {
        let mut doc = SolutionDoc {
            mode: mode.name().into(),
            status: Status::Infeasible,
            weight: None,
            arborescences: Vec::new(),
            witness: witness.map(|v| WitnessDoc::describe(h, v)),
        };
        if let Outcome::Optimal { packing, weight } = outcome {
            doc.status = Status::Optimal;
            doc.weight = Some(Rational(*weight));
            doc.arborescences = packing
                .arborescences
                .iter()
                .map(|b| ArborescenceDoc {
                    root: h.label(b.root).into(),
                    arcs: b
                        .arcs
                        .iter()
                        .map(|a| ArcDoc {
                            element: h.element(a.element).label.clone(),
                            from: h.label(a.from).into(),
                            to: h.label(a.to).into(),
                        })
                        .collect(),
                })
                .collect();
        }
        doc
    }

    /// The packing named by the document, in the ids of `h`.
    pub fn packing(&self, h: &MixedHypergraph) -> Result<Packing, DocError> {
        let node = |at: String, label: &str| h.node(label).ok_or_else(|| invalid(at, format!("unknown node `{label}`")));
        let mut arborescences = Vec::new();
        for (i, b) in self.arborescences.iter().enumerate() {
            let root = node(format!("arborescences[{i}].root"), &b.root)?;
            let mut arcs = Vec::new();
            for (j, a) in b.arcs.iter().enumerate() {
                let at = format!("arborescences[{i}].arcs[{j}]");
                let element: ElementId = h
                    .element_by_label(&a.element)
                    .ok_or_else(|| invalid(format!("{at}.element"), format!("unknown element `{}`", a.element)))?;
                arcs.push(TrimmedArc { element, from: node(format!("{at}.from"), &a.from)?, to: node(format!("{at}.to"), &a.to)? });
            }
            arborescences.push(Arborescence::new(root, arcs));
        }
        Ok(Packing { arborescences })
    }
}

/// Verdicts of `validate` and `check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub command: String,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver: Option<Status>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
}

impl ReportDoc {
    pub fn new(command: &str, mode: PackingMode) -> Self {
        ReportDoc {
            command: command.into(),
            mode: mode.name().into(),
            valid: None,
            violation: None,
            condition: None,
            holds: None,
            witness: None,
            solver: None,
            agrees: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn print(&self) -> String {
        print_json(self)
    }
}
