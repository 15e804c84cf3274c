//! JSON formats for instances, answers, formulas and gadget instances.
//!
//! Instance: `{"g": {"n": 4, "edges": [[0,1],[1,2]]}, "h": {...}, "lists": [[..],..]}`.
//! Without `"h"` the file describes a list automorphism problem and `h` is a
//! copy of `g`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hardness::{Cnf1in3, GadgetInstance};
use crate::instance::{ListInstance, SolveResult};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl GraphJson {
    fn of(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().map(|(a, b)| [a, b]).collect() }
    }

    fn build(&self, name: &str) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1]))).map_err(|e| match e {
            Error::InvalidGraph(m) => Error::InvalidGraph(format!("{name}: {m}")),
            other => other,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct InstanceJson {
    g: GraphJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h: Option<GraphJson>,
    lists: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct GadgetJson<'a> {
    #[serde(flatten)]
    instance: InstanceJson,
    variables: &'a [[usize; 4]],
    clauses: &'a [[usize; 8]],
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
enum ResultJson {
    Yes { mapping: Vec<usize> },
    No,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MappingJson {
    Bare(Vec<usize>),
    Answer(ResultJson),
}

fn from_json<T: DeserializeOwned>(bytes: &[u8]) -> Result<T> {
    serde_json::from_slice(bytes).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parses and validates an instance file.
pub fn parse_instance(bytes: &[u8]) -> Result<ListInstance> {
    let raw: InstanceJson = from_json(bytes)?;
    let g = raw.g.build("g")?;
    let h = match &raw.h {
        Some(h) => h.build("h")?,
        None => g.clone(),
    };
    ListInstance::new(g, h, raw.lists)
}

fn instance_json(inst: &ListInstance, always_h: bool) -> InstanceJson {
    let h = (always_h || !inst.is_automorphism_instance()).then(|| GraphJson::of(inst.h()));
    InstanceJson { g: GraphJson::of(inst.g()), h, lists: inst.lists().to_vec() }
}

/// One-line JSON; `"h"` is left out when it equals `g`.
pub fn emit_instance(inst: &ListInstance) -> String {
    serde_json::to_string(&instance_json(inst, false)).expect("instance serializes")
}

/// As [`emit_instance`], always writing `"h"`.
pub fn emit_instance_with_h(inst: &ListInstance) -> String {
    serde_json::to_string(&instance_json(inst, true)).expect("instance serializes")
}

/// Answer JSON and the matching exit code (0 yes, 1 no).
pub fn emit_result(r: &SolveResult) -> (String, i32) {
    let (json, code) = match r {
        SolveResult::Yes(m) => (ResultJson::Yes { mapping: m.0.clone() }, 0),
        SolveResult::No => (ResultJson::No, 1),
    };
    (serde_json::to_string(&json).expect("result serializes"), code)
}

/// Parses an answer file or a bare JSON array. A `no` answer has no mapping.
pub fn parse_mapping(bytes: &[u8]) -> Result<Option<Vec<usize>>> {
    Ok(match from_json::<MappingJson>(bytes)? {
        MappingJson::Bare(m) | MappingJson::Answer(ResultJson::Yes { mapping: m }) => Some(m),
        MappingJson::Answer(ResultJson::No) => None,
    })
}

pub fn parse_cnf(bytes: &[u8]) -> Result<Cnf1in3> {
    let f: Cnf1in3 = from_json(bytes)?;
    f.validate()?;
    Ok(f)
}

pub fn emit_cnf(f: &Cnf1in3) -> String {
    serde_json::to_string(f).expect("formula serializes")
}

/// Instance JSON plus the `"variables"` and `"clauses"` vertex tables; still
/// readable by [`parse_instance`].
pub fn emit_gadget(gi: &GadgetInstance) -> String {
    let json =
        GadgetJson { instance: instance_json(&gi.instance, false), variables: &gi.variables, clauses: &gi.clauses };
    serde_json::to_string(&json).expect("gadget serializes")
}
