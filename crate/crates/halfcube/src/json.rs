//! Graph file format: a single JSON object
//! `{"name":…,"n":…,"labels":[…],"edges":[[i,j],…]}` with 0-based indices,
//! `i < j`, edges sorted lexicographically. Output is byte-stable.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn to_json(g: &Graph) -> String {
    let mut s = serde_json::to_string(g).expect("graph serialization cannot fail");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> Result<Graph, IoError> {
    let g: Graph = serde_json::from_str(s)?;
    Ok(g.revalidate()?)
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<(), IoError> {
    Ok(fs::write(path, to_json(g))?)
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    from_json(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn byte_stable_format() {
        let g = Graph::build("K2", vec!["a".into(), "b".into()], &[(0, 1)]).unwrap();
        assert_eq!(
            to_json(&g),
            "{\"name\":\"K2\",\"n\":2,\"labels\":[\"a\",\"b\"],\"edges\":[[0,1]]}\n"
        );
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.neighbors(0), &[1]);
    }

    #[test]
    fn rejects_invalid_json_graph() {
        assert!(from_json("{\"name\":\"x\",\"n\":2,\"labels\":[\"a\",\"a\"],\"edges\":[]}").is_err());
    }
}
