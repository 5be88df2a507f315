//! Plain edge-list files: one `u v` pair of 0-based node ids per line.
//! Blank lines and lines starting with `#` are ignored. The order is one
//! more than the largest node id.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Node};

pub fn read_edge_list<R: Read>(reader: R) -> Result<Graph> {
    let mut edges: Vec<(Node, Node)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut max_id: Option<Node> = None;
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let mut fields = text.split_whitespace();
        let mut node = |what: &str| -> Result<Node> {
            let field = fields
                .next()
                .ok_or_else(|| parse_err(format!("missing {what} node id")))?;
            field
                .parse::<Node>()
                .map_err(|e| parse_err(format!("bad node id {field:?}: {e}")))
        };
        let a = node("first")?;
        let b = node("second")?;
        if let Some(extra) = fields.next() {
            return Err(parse_err(format!("unexpected trailing field {extra:?}")));
        }
        if a == b {
            return Err(parse_err(format!("self-loop at node {a}")));
        }
        if !seen.insert(Edge::new(a, b)) {
            return Err(parse_err(format!("duplicate edge {}", Edge::new(a, b))));
        }
        max_id = max_id.max(Some(a.max(b)));
        edges.push((a, b));
    }
    let order = max_id.map_or(0, |m| m as usize + 1);
    Graph::from_edges(order, edges)
}

pub fn write_edge_list<W: Write>(g: &Graph, writer: W) -> Result<()> {
    let mut w = BufWriter::new(writer);
    for e in g.edges() {
        writeln!(w, "{} {}", e.u, e.v)?;
    }
    w.flush()?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<Graph> {
    read_edge_list(File::open(path)?)
}

pub fn save(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    write_edge_list(g, File::create(path)?)
}
