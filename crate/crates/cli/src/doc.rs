//! JSON input documents.
//!
//! Every document is one JSON object with a `kind` field:
//!
//! ```json
//! {"kind": "rank-table", "ground": ["a", "b"],
//!  "ranks": [{"set": [], "rank": 0}, {"set": ["a"], "rank": 1},
//!            {"set": ["b"], "rank": 0}, {"set": ["a", "b"], "rank": 1}]}
//! {"kind": "rooted-graph", "vertices": ["r", "x"], "root": "r",
//!  "edges": [{"label": "e", "ends": ["r", "x"]}]}
//! {"kind": "tree", "vertices": ["x", "y"], "edges": [{"label": "e", "ends": ["x", "y"]}]}
//! {"kind": "uniform", "ground": ["a", "b", "c"], "k": 2}
//! ```
//!
//! Errors carry the line of the offending value.

use std::fmt;
use std::fs;
use std::io::Read;
use std::path::Path;

use rankdual_core::ground::subsets_by_size;
use rankdual_core::{
    branching_greedoid, pruning_antimatroid, uniform_matroid, GroundSet, RankTable, RootedGraph,
    Subset, Tree,
};
use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub line: Option<usize>,
    pub message: String,
}

impl DocError {
    fn at(line: Option<usize>, message: impl Into<String>) -> Self {
        DocError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for DocError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    RankTable(RankTable),
    RootedGraph(RootedGraph),
    Tree(Tree),
    Uniform { table: RankTable, k: usize },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::RankTable(_) => "rank-table",
            Document::RootedGraph(_) => "rooted-graph",
            Document::Tree(_) => "tree",
            Document::Uniform { .. } => "uniform",
        }
    }

    /// The rank table a document denotes: the table itself, the branching
    /// greedoid of a rooted graph, the pruning antimatroid of a tree, or a
    /// uniform matroid.
    pub fn to_table(&self) -> RankTable {
        match self {
            Document::RankTable(t) => t.clone(),
            Document::RootedGraph(g) => branching_greedoid(g),
            Document::Tree(t) => pruning_antimatroid(t),
            Document::Uniform { table, .. } => table.clone(),
        }
    }
}

/// Path segment used to find a value's line after validation fails.
#[derive(Debug, Clone, Copy)]
enum Seg<'a> {
    Key(&'a str),
    Index(usize),
}

struct Source<'a> {
    text: &'a str,
}

impl<'a> Source<'a> {
    fn line_of(&self, path: &[Seg<'_>]) -> Option<usize> {
        let offset = locate(self.text, path)?;
        Some(self.text[..offset].matches('\n').count() + 1)
    }

    fn err(&self, path: &[Seg<'_>], message: impl Into<String>) -> DocError {
        DocError::at(self.line_of(path), message)
    }
}

pub fn parse(text: &str) -> Result<Document, DocError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| DocError::at(Some(e.line()).filter(|&l| l > 0), e.to_string()))?;
    let src = Source { text };
    let obj = value
        .as_object()
        .ok_or_else(|| src.err(&[], "document must be a JSON object"))?;
    let kind = obj
        .get("kind")
        .ok_or_else(|| src.err(&[], "missing field \"kind\""))?
        .as_str()
        .ok_or_else(|| src.err(&[Seg::Key("kind")], "\"kind\" must be a string"))?;
    match kind {
        "rank-table" => {
            allow_fields(&src, obj, &["kind", "ground", "ranks"])?;
            parse_rank_table(&src, obj).map(Document::RankTable)
        }
        "rooted-graph" => {
            allow_fields(&src, obj, &["kind", "vertices", "root", "edges"])?;
            let vertices = strings(&src, obj, "vertices")?;
            let root = field(&src, obj, "root")?
                .as_str()
                .ok_or_else(|| src.err(&[Seg::Key("root")], "\"root\" must be a string"))?;
            let edges = edges(&src, obj)?;
            RootedGraph::new(vertices, root, edges)
                .map(Document::RootedGraph)
                .map_err(|e| src.err(&[Seg::Key("edges")], e.to_string()))
        }
        "tree" => {
            allow_fields(&src, obj, &["kind", "vertices", "edges"])?;
            let vertices = strings(&src, obj, "vertices")?;
            let edges = edges(&src, obj)?;
            Tree::new(vertices, edges)
                .map(Document::Tree)
                .map_err(|e| src.err(&[Seg::Key("edges")], e.to_string()))
        }
        "uniform" => {
            allow_fields(&src, obj, &["kind", "ground", "k"])?;
            let ground = strings(&src, obj, "ground")?;
            let k = field(&src, obj, "k")?
                .as_u64()
                .ok_or_else(|| src.err(&[Seg::Key("k")], "\"k\" must be a nonnegative integer"))?;
            let k = usize::try_from(k)
                .map_err(|_| src.err(&[Seg::Key("k")], "\"k\" is too large"))?;
            uniform_matroid(ground, k)
                .map(|table| Document::Uniform { table, k })
                .map_err(|e| src.err(&[Seg::Key("ground")], e.to_string()))
        }
        other => Err(src.err(
            &[Seg::Key("kind")],
            format!(
                "unknown kind {other:?}; expected rank-table, rooted-graph, tree or uniform"
            ),
        )),
    }
}

fn allow_fields(src: &Source<'_>, obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), DocError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(src.err(&[Seg::Key(k)], format!("unknown field {k:?}"))),
        None => Ok(()),
    }
}

fn field<'v>(src: &Source<'_>, obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value, DocError> {
    obj.get(key)
        .ok_or_else(|| src.err(&[], format!("missing field {key:?}")))
}

fn string_array(src: &Source<'_>, value: &Value, path: &[Seg<'_>]) -> Result<Vec<String>, DocError> {
    let items = value
        .as_array()
        .ok_or_else(|| src.err(path, "expected an array of strings"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str().map(str::to_owned).ok_or_else(|| {
                let mut p = path.to_vec();
                p.push(Seg::Index(i));
                src.err(&p, "expected a string")
            })
        })
        .collect()
}

fn strings(src: &Source<'_>, obj: &Map<String, Value>, key: &str) -> Result<Vec<String>, DocError> {
    string_array(src, field(src, obj, key)?, &[Seg::Key(key)])
}

fn edges(src: &Source<'_>, obj: &Map<String, Value>) -> Result<Vec<(String, String, String)>, DocError> {
    let items = field(src, obj, "edges")?
        .as_array()
        .ok_or_else(|| src.err(&[Seg::Key("edges")], "\"edges\" must be an array"))?;
    let mut out = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let at = [Seg::Key("edges"), Seg::Index(i)];
        let e = item
            .as_object()
            .ok_or_else(|| src.err(&at, "edge must be an object with \"label\" and \"ends\""))?;
        allow_fields(src, e, &["label", "ends"]).map_err(|err| src.err(&at, err.message))?;
        let label = e
            .get("label")
            .and_then(Value::as_str)
            .ok_or_else(|| src.err(&at, "edge needs a string \"label\""))?;
        let ends = e
            .get("ends")
            .ok_or_else(|| src.err(&at, "edge needs \"ends\""))
            .and_then(|v| string_array(src, v, &at))?;
        let [u, v] = <[String; 2]>::try_from(ends)
            .map_err(|_| src.err(&at, "\"ends\" must name exactly two vertices"))?;
        out.push((label.to_owned(), u, v));
    }
    Ok(out)
}

fn parse_rank_table(src: &Source<'_>, obj: &Map<String, Value>) -> Result<RankTable, DocError> {
    let labels = strings(src, obj, "ground")?;
    let ground =
        GroundSet::new(labels).map_err(|e| src.err(&[Seg::Key("ground")], e.to_string()))?;
    let ranks = field(src, obj, "ranks")?
        .as_array()
        .ok_or_else(|| src.err(&[Seg::Key("ranks")], "\"ranks\" must be an array"))?;
    let mut seen: Vec<Option<usize>> = vec![None; ground.subset_count()];
    let mut values = vec![0i64; ground.subset_count()];
    for (i, entry) in ranks.iter().enumerate() {
        let at = [Seg::Key("ranks"), Seg::Index(i)];
        let e = entry
            .as_object()
            .ok_or_else(|| src.err(&at, "entry must be an object with \"set\" and \"rank\""))?;
        allow_fields(src, e, &["set", "rank"]).map_err(|err| src.err(&at, err.message))?;
        let set = e
            .get("set")
            .ok_or_else(|| src.err(&at, "entry needs \"set\""))
            .and_then(|v| string_array(src, v, &at))?;
        let rank = match e.get("rank") {
            None => return Err(src.err(&at, "entry needs \"rank\"")),
            Some(v) => v
                .as_i64()
                .ok_or_else(|| src.err(&at, format!("rank {v} is not a 64-bit integer")))?,
        };
        let s = ground
            .subset(&set)
            .map_err(|e| src.err(&at, format!("set {set:?}: {e}")))?;
        if let Some(first) = seen[s.index()] {
            let first_line = src
                .line_of(&[Seg::Key("ranks"), Seg::Index(first)])
                .map_or(String::new(), |l| format!(" (first given on line {l})"));
            return Err(src.err(
                &at,
                format!("duplicate subset {}{first_line}", ground.show(s)),
            ));
        }
        seen[s.index()] = Some(i);
        values[s.index()] = rank;
    }
    if let Some(m) = seen.iter().position(Option::is_none) {
        let total = ground.subset_count();
        return Err(src.err(
            &[Seg::Key("ranks")],
            format!(
                "missing subset {} ({} of {total} subsets given)",
                ground.show(Subset(m as u32)),
                seen.iter().filter(|s| s.is_some()).count()
            ),
        ));
    }
    RankTable::from_values(ground, values).map_err(|e| src.err(&[Seg::Key("ranks")], e.to_string()))
}

/// Reads a document from a file, or from standard input when `path` is `-`.
pub fn read_document(path: &Path) -> anyhow::Result<Document> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?
    };
    parse(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

/// Rank-table document text: one entry per line, subsets by cardinality and
/// then position.
pub fn rank_table_json(t: &RankTable) -> String {
    let g = t.ground();
    let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
    let set = |s: Subset| {
        g.labels_of(s)
            .into_iter()
            .map(quote)
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = String::from("{\n  \"kind\": \"rank-table\",\n");
    out.push_str(&format!("  \"ground\": [{}],\n", set(g.full())));
    out.push_str("  \"ranks\": [\n");
    let order = subsets_by_size(g.len());
    for (k, &s) in order.iter().enumerate() {
        let sep = if k + 1 == order.len() { "" } else { "," };
        out.push_str(&format!(
            "    {{\"set\": [{}], \"rank\": {}}}{sep}\n",
            set(s),
            t.rank(s)
        ));
    }
    out.push_str("  ]\n}\n");
    out
}

// ---------------------------------------------------------------------------
// minimal scanner used only to map a validated path back to a byte offset

fn skip_ws(b: &[u8], mut i: usize) -> usize {
    while i < b.len() && b[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

fn skip_string(b: &[u8], mut i: usize) -> Option<usize> {
    i += 1;
    while i < b.len() {
        match b[i] {
            b'\\' => i += 2,
            b'"' => return Some(i + 1),
            _ => i += 1,
        }
    }
    None
}

fn skip_value(b: &[u8], i: usize) -> Option<usize> {
    let i = skip_ws(b, i);
    match *b.get(i)? {
        b'"' => skip_string(b, i),
        open @ (b'{' | b'[') => {
            let close = if open == b'{' { b'}' } else { b']' };
            let mut j = skip_ws(b, i + 1);
            if b.get(j) == Some(&close) {
                return Some(j + 1);
            }
            loop {
                if open == b'{' {
                    j = skip_string(b, skip_ws(b, j))?;
                    j = skip_ws(b, j) + 1;
                }
                j = skip_ws(b, skip_value(b, j)?);
                match *b.get(j)? {
                    b',' => j += 1,
                    c if c == close => return Some(j + 1),
                    _ => return None,
                }
            }
        }
        _ => {
            let mut j = i;
            while j < b.len() && !matches!(b[j], b',' | b'}' | b']') && !b[j].is_ascii_whitespace() {
                j += 1;
            }
            Some(j)
        }
    }
}

/// Byte offset of the value at `path` in well-formed JSON `text`.
fn locate(text: &str, path: &[Seg<'_>]) -> Option<usize> {
    let b = text.as_bytes();
    let mut i = skip_ws(b, 0);
    for seg in path {
        match *seg {
            Seg::Key(key) => {
                if b.get(i) != Some(&b'{') {
                    return None;
                }
                let mut j = i + 1;
                loop {
                    j = skip_ws(b, j);
                    if b.get(j) != Some(&b'"') {
                        return None;
                    }
                    let end = skip_string(b, j)?;
                    let name: String = serde_json::from_str(&text[j..end]).ok()?;
                    let colon = skip_ws(b, end);
                    let start = skip_ws(b, colon + 1);
                    if name == key {
                        i = start;
                        break;
                    }
                    j = skip_ws(b, skip_value(b, start)?);
                    if b.get(j) != Some(&b',') {
                        return None;
                    }
                    j += 1;
                }
            }
            Seg::Index(n) => {
                if b.get(i) != Some(&b'[') {
                    return None;
                }
                let mut j = skip_ws(b, i + 1);
                for _ in 0..n {
                    j = skip_ws(b, skip_value(b, j)?);
                    if b.get(j) != Some(&b',') {
                        return None;
                    }
                    j = skip_ws(b, j + 1);
                }
                i = j;
            }
        }
    }
    Some(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rankdual_core::fixtures::three_edge_greedoid;

    #[test]
    fn round_trip_three_edge_greedoid() {
        let t = three_edge_greedoid();
        let text = rank_table_json(&t);
        assert_eq!(parse(&text).unwrap(), Document::RankTable(t));
        assert!(text.contains("{\"set\": [\"b\", \"c\"], \"rank\": 1}"));
    }

    #[test]
    fn empty_ground() {
        let t = parse(r#"{"kind":"rank-table","ground":[],"ranks":[{"set":[],"rank":0}]}"#)
            .unwrap()
            .to_table();
        assert_eq!(t.n(), 0);
        assert_eq!(t.values(), &[0]);
        assert_eq!(parse(&rank_table_json(&t)).unwrap().to_table(), t);
    }

    #[test]
    fn locate_finds_entries() {
        let text = "{\"a\": 1,\n \"b\": [\n  {\"x\": \"]\"},\n  [1, 2],\n  3\n ]}";
        let src = Source { text };
        assert_eq!(src.line_of(&[Seg::Key("b")]), Some(2));
        assert_eq!(src.line_of(&[Seg::Key("b"), Seg::Index(0)]), Some(3));
        assert_eq!(src.line_of(&[Seg::Key("b"), Seg::Index(2)]), Some(5));
        assert_eq!(src.line_of(&[Seg::Key("c")]), None);
    }

    fn table_text(entries: &[&str]) -> String {
        let mut s = String::from("{\n\"kind\": \"rank-table\",\n\"ground\": [\"a\", \"b\"],\n\"ranks\": [\n");
        s.push_str(&entries.join(",\n"));
        s.push_str("\n]\n}\n");
        s
    }

    #[test]
    fn errors_name_the_line() {
        let ok = [
            r#"{"set": [], "rank": 0}"#,
            r#"{"set": ["a"], "rank": 1}"#,
            r#"{"set": ["b"], "rank": 1}"#,
            r#"{"set": ["b", "a"], "rank": 2}"#,
        ];
        assert!(parse(&table_text(&ok)).is_ok());

        let mut dup = ok;
        dup[2] = r#"{"set": ["a"], "rank": 1}"#;
        let e = parse(&table_text(&dup)).unwrap_err();
        assert_eq!(e.line, Some(7));
        assert!(e.message.contains("duplicate subset {a} (first given on line 6)"), "{e}");

        let e = parse(&table_text(&ok[..3])).unwrap_err();
        assert_eq!(e.line, Some(4));
        assert!(e.message.contains("missing subset {a,b}"), "{e}");

        let mut unknown = ok;
        unknown[1] = r#"{"set": ["z"], "rank": 1}"#;
        let e = parse(&table_text(&unknown)).unwrap_err();
        assert_eq!(e.line, Some(6));
        assert!(e.message.contains("unknown label \"z\""), "{e}");

        let mut repeated = ok;
        repeated[3] = r#"{"set": ["a", "a"], "rank": 2}"#;
        assert_eq!(parse(&table_text(&repeated)).unwrap_err().line, Some(8));

        let mut bad_rank = ok;
        bad_rank[0] = r#"{"set": [], "rank": 0.5}"#;
        assert_eq!(parse(&table_text(&bad_rank)).unwrap_err().line, Some(5));

        let syntax = "{\n\"kind\": \"rank-table\",\n\"ground\": [\"a\" \"b\"]\n}";
        assert_eq!(parse(syntax).unwrap_err().line, Some(3));
    }

    #[test]
    fn structures_and_kinds() {
        let g = parse(
            r#"{"kind": "rooted-graph", "vertices": ["r", "x", "y"], "root": "r",
                "edges": [{"label": "a", "ends": ["r", "x"]}, {"label": "b", "ends": ["x", "y"]}]}"#,
        )
        .unwrap();
        assert_eq!(g.kind(), "rooted-graph");
        assert_eq!(g.to_table().values(), &[0, 1, 0, 2]);

        let t = parse(
            r#"{"kind": "tree", "vertices": ["x", "y", "z"],
                "edges": [{"label": "a", "ends": ["x", "y"]}, {"label": "b", "ends": ["y", "z"]}]}"#,
        )
        .unwrap();
        assert_eq!(t.to_table().values(), &[0, 1, 1, 2]);

        let u = parse(r#"{"kind": "uniform", "ground": ["a", "b", "c"], "k": 2}"#).unwrap();
        assert_eq!(u.to_table().total_rank(), 2);

        let cyclic = "{\"kind\": \"tree\", \"vertices\": [\"x\", \"y\", \"z\"],\n\"edges\": [\n{\"label\": \"a\", \"ends\": [\"x\", \"y\"]}, {\"label\": \"b\", \"ends\": [\"y\", \"z\"]}, {\"label\": \"c\", \"ends\": [\"x\", \"z\"]}]}";
        assert_eq!(parse(cyclic).unwrap_err().line, Some(2));

        let e = parse(r#"{"kind": "matrix"}"#).unwrap_err();
        assert!(e.message.contains("unknown kind"));
        let e = parse("{\"kind\": \"uniform\",\n\"ground\": [], \"k\": 0, \"extra\": 1}").unwrap_err();
        assert_eq!(e.line, Some(2));
    }
}
