use serde::{Deserialize, Serialize};

use super::ParseError;
use crate::graph::Graph;

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// `{"n": <n>, "edges": [[u, v], ...]}` with 0-based ids and edges sorted
/// lexicographically, each written with its smaller endpoint first.
pub fn encode_json(graph: &Graph) -> String {
    let doc = GraphDoc {
        n: graph.n(),
        edges: graph.edges().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&doc).expect("graph document serializes")
}

pub fn decode_json(text: &str) -> Result<Graph, ParseError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    Ok(Graph::new(
        doc.n,
        doc.edges.into_iter().map(|[u, v]| (u, v)),
    )?)
}
