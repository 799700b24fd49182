//! The JSON interchange format.
//!
//! Every document carries `"version": "coalglab/1"`. Scalars are strings:
//! `"p/q"` in lowest terms over the rationals, residues in `[0, p)` over
//! GF(p). Keys are emitted sorted, so serializing a parsed document is
//! canonical.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use coalglab::comodule::DimensionVector;
use coalglab::embeddings::{FreeModule, QuiverRep};
use coalglab::exactlin::{Field, Matrix, Scalar, Subspace};
use coalglab::{Coalgebra, Comodule, Quiver};
use serde_json::{json, Map, Value};

pub const VERSION: &str = "coalglab/1";

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("{source_name}: line {line}, column {column}: {msg}")]
    Syntax {
        source_name: String,
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error(transparent)]
    Core(#[from] coalglab::Error),
}

pub type DocResult<T> = std::result::Result<T, DocError>;

/// A JSON value together with its path from the document root, for
/// diagnostics.
#[derive(Clone, Copy)]
pub struct Node<'a> {
    value: &'a Value,
    path: &'a str,
}

fn schema<T>(path: &str, msg: impl Into<String>) -> DocResult<T> {
    Err(DocError::Schema {
        path: path.to_string(),
        msg: msg.into(),
    })
}

impl<'a> Node<'a> {
    pub fn root(value: &'a Value) -> Node<'a> {
        Node { value, path: "$" }
    }

    fn with<R>(&self, value: &Value, suffix: String, f: impl FnOnce(Node<'_>) -> DocResult<R>) -> DocResult<R> {
        let path = format!("{}{suffix}", self.path);
        f(Node { value, path: &path })
    }

    pub fn get<R>(&self, key: &str, f: impl FnOnce(Node<'_>) -> DocResult<R>) -> DocResult<R> {
        let obj = self.object()?;
        match obj.get(key) {
            Some(v) => self.with(v, format!(".{key}"), f),
            None => schema(self.path, format!("missing key {key:?}")),
        }
    }

    pub fn has(&self, key: &str) -> bool {
        self.value.get(key).is_some()
    }

    pub fn object(&self) -> DocResult<&'a Map<String, Value>> {
        match self.value.as_object() {
            Some(o) => Ok(o),
            None => schema(self.path, "expected an object"),
        }
    }

    pub fn items<R>(&self, mut f: impl FnMut(Node<'_>) -> DocResult<R>) -> DocResult<Vec<R>> {
        let Some(arr) = self.value.as_array() else {
            return schema(self.path, "expected an array");
        };
        arr.iter()
            .enumerate()
            .map(|(i, v)| self.with(v, format!("[{i}]"), &mut f))
            .collect()
    }

    /// A fixed-length array, as a vector of child paths and values.
    pub fn tuple<R>(&self, len: usize, f: impl FnOnce(&[Node<'_>]) -> DocResult<R>) -> DocResult<R> {
        let Some(arr) = self.value.as_array() else {
            return schema(self.path, format!("expected an array of length {len}"));
        };
        if arr.len() != len {
            return schema(self.path, format!("expected {len} entries, found {}", arr.len()));
        }
        let paths: Vec<String> = (0..len).map(|i| format!("{}[{i}]", self.path)).collect();
        let nodes: Vec<Node<'_>> = arr.iter().zip(&paths).map(|(v, p)| Node { value: v, path: p }).collect();
        f(&nodes)
    }

    pub fn str(&self) -> DocResult<&'a str> {
        match self.value.as_str() {
            Some(s) => Ok(s),
            None => schema(self.path, "expected a string"),
        }
    }

    pub fn usize(&self) -> DocResult<usize> {
        match self.value.as_u64() {
            Some(n) => Ok(n as usize),
            None => schema(self.path, "expected a non-negative integer"),
        }
    }

    pub fn index(&self, len: usize) -> DocResult<usize> {
        let i = self.usize()?;
        if i >= len {
            return schema(self.path, format!("index {i} out of range (size {len})"));
        }
        Ok(i)
    }

    pub fn scalar(&self, field: Field) -> DocResult<Scalar> {
        let s = self.str()?;
        field.parse_scalar(s).or_else(|e| schema(self.path, e.to_string()))
    }

    pub fn field(&self) -> DocResult<Field> {
        let s = self.str()?;
        s.parse().or_else(|e: coalglab::Error| schema(self.path, e.to_string()))
    }

    pub fn version(&self) -> DocResult<()> {
        self.get("version", |v| {
            let s = v.str()?;
            if s != VERSION {
                return schema(v.path, format!("unsupported version {s:?}; expected {VERSION:?}"));
            }
            Ok(())
        })
    }

    pub fn matrix(&self, field: Field, rows: usize, cols: usize) -> DocResult<Matrix> {
        let data = self.items(|row| {
            let entries = row.items(|x| x.scalar(field))?;
            if entries.len() != cols {
                return schema(row.path, format!("expected {cols} columns, found {}", entries.len()));
            }
            Ok(entries)
        })?;
        if data.len() != rows {
            return schema(self.path, format!("expected {rows} rows, found {}", data.len()));
        }
        Ok(Matrix::from_rows(field, cols, data))
    }
}

/// Parses JSON text, reporting syntax errors by line and column.
pub fn parse_json(text: &str, source_name: &str) -> DocResult<Value> {
    serde_json::from_str(text).map_err(|e| DocError::Syntax {
        source_name: source_name.to_string(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

/// Reads a document from a file, or from standard input for `-`.
pub fn read_json(path: &str) -> DocResult<(Value, Option<PathBuf>)> {
    if path == "-" {
        let mut text = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut text)
            .map_err(|e| DocError::Io("<stdin>".into(), e))?;
        return Ok((parse_json(&text, "<stdin>")?, None));
    }
    let text = std::fs::read_to_string(path).map_err(|e| DocError::Io(path.to_string(), e))?;
    let dir = Path::new(path).parent().map(Path::to_path_buf);
    Ok((parse_json(&text, path)?, dir))
}

/// Canonical text of a document: sorted keys, two-space indent, arrays of
/// scalars on one line, trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = String::new();
    write_value(&mut s, v, 0);
    s.push('\n');
    s
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(o) => o.is_empty(),
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(a) if is_flat(v) => {
            let parts: Vec<String> = a.iter().map(|x| serde_json::to_string(x).expect("values serialize")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        _ if is_flat(v) => out.push_str(&serde_json::to_string(v).expect("values serialize")),
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(o) => {
            out.push_str("{\n");
            for (i, (k, x)) in o.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < o.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => unreachable!(),
    }
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| scalars(r)).collect())
}

// Coalgebras: {"version", "field", "basis", "delta": [[i, j, k, "s"]], "counit"}.

pub fn coalgebra_to_value(c: &Coalgebra) -> Value {
    let mut delta = Vec::new();
    for i in 0..c.dim() {
        for (j, k, mu) in c.delta(i) {
            delta.push(json!([i, j, k, mu.to_string()]));
        }
    }
    json!({
        "version": VERSION,
        "field": c.field().to_string(),
        "basis": c.labels(),
        "delta": delta,
        "counit": scalars(c.counit()),
    })
}

pub fn coalgebra_from(node: Node<'_>) -> DocResult<Coalgebra> {
    node.version()?;
    let field = node.get("field", |n| n.field())?;
    let basis = node.get("basis", |n| n.items(|l| l.str().map(str::to_string)))?;
    let n = basis.len();
    let mut delta = vec![Vec::new(); n];
    let terms = node.get("delta", |d| {
        d.items(|t| {
            t.tuple(4, |e| Ok((e[0].index(n)?, e[1].index(n)?, e[2].index(n)?, e[3].scalar(field)?)))
        })
    })?;
    for (i, j, k, mu) in terms {
        delta[i].push((j, k, mu));
    }
    let counit = node.get("counit", |c| {
        let v = c.items(|x| x.scalar(field))?;
        if v.len() != n {
            return schema(c.path, format!("expected {n} counit values, found {}", v.len()));
        }
        Ok(v)
    })?;
    Ok(Coalgebra::new(field, basis, delta, counit)?)
}

// Comodules: {"version", "coalgebra": path-or-inline, "dim", "rho": [[s, i, t, "c"]]}.

pub fn comodule_to_value(m: &Comodule) -> Value {
    let rho: Vec<Value> = m
        .rho_terms()
        .into_iter()
        .map(|(s, i, t, c)| json!([s, i, t, c.to_string()]))
        .collect();
    json!({
        "version": VERSION,
        "coalgebra": coalgebra_to_value(m.coalgebra()),
        "dim": m.dim(),
        "rho": rho,
    })
}

/// Parses a comodule; a string `coalgebra` is a path relative to `base`.
pub fn comodule_from(node: Node<'_>, base: Option<&Path>) -> DocResult<Comodule> {
    node.version()?;
    let c = node.get("coalgebra", |n| match n.value {
        Value::String(p) => {
            let path = match base {
                Some(b) => b.join(p),
                None => PathBuf::from(p),
            };
            let path = path.to_string_lossy().into_owned();
            let (v, _) = read_json(&path)?;
            coalgebra_from(Node::root(&v))
        }
        _ => coalgebra_from(n),
    })?;
    let c = Arc::new(c);
    let dim = node.get("dim", |n| n.usize())?;
    let nc = c.dim();
    let f = c.field();
    let rho = node.get("rho", |r| {
        r.items(|t| t.tuple(4, |e| Ok((e[0].index(dim)?, e[1].index(nc)?, e[2].index(dim)?, e[3].scalar(f)?))))
    })?;
    Ok(Comodule::new(c, dim, rho)?)
}

// Quivers: {"version", "vertices", "arrows": [[label, src, tgt]]}; endpoints
// are vertex indices or labels.

pub fn quiver_to_value(q: &Quiver) -> Value {
    let arrows: Vec<Value> = q.arrows().iter().map(|(l, s, t)| json!([l, s, t])).collect();
    json!({
        "version": VERSION,
        "vertices": q.vertices(),
        "arrows": arrows,
    })
}

pub fn quiver_from(node: Node<'_>) -> DocResult<Quiver> {
    node.version()?;
    let vertices = node.get("vertices", |n| n.items(|l| l.str().map(str::to_string)))?;
    let endpoint = |n: &Node<'_>| -> DocResult<usize> {
        match n.value {
            Value::String(s) => match vertices.iter().position(|v| v == s) {
                Some(i) => Ok(i),
                None => schema(n.path, format!("unknown vertex {s:?}")),
            },
            _ => n.index(vertices.len()),
        }
    };
    let arrows = node.get("arrows", |a| {
        a.items(|t| t.tuple(3, |e| Ok((e[0].str()?.to_string(), endpoint(&e[1])?, endpoint(&e[2])?))))
    })?;
    Ok(Quiver::new(vertices, arrows)?)
}

// Dimension vectors: {"version", "entries": {label: count}}.

pub fn dimvec_to_value(d: &DimensionVector) -> Value {
    json!({ "version": VERSION, "entries": d.entries() })
}

pub fn dimvec_from(node: Node<'_>) -> DocResult<DimensionVector> {
    node.version()?;
    node.get("entries", |e| {
        let mut d = DimensionVector::default();
        for (label, v) in e.object()? {
            let path = format!("{}.{label}", e.path);
            let count = Node { value: v, path: &path }.usize()?;
            d.add(label, count);
        }
        Ok(d)
    })
}

// Subspaces: {"version", "field", "ambient", "dim", "basis": [[scalars]]},
// the basis in reduced row echelon form.

pub fn subspace_to_value(s: &Subspace) -> Value {
    json!({
        "version": VERSION,
        "field": s.field().to_string(),
        "ambient": s.ambient_dim(),
        "dim": s.dim(),
        "basis": matrix_value(s.basis()),
    })
}

pub fn subspace_from(node: Node<'_>) -> DocResult<Subspace> {
    node.version()?;
    let field = node.get("field", |n| n.field())?;
    let ambient = node.get("ambient", |n| n.usize())?;
    let rows = node.get("basis", |b| b.items(|r| r.items(|x| x.scalar(field))))?;
    if let Some(bad) = rows.iter().position(|r| r.len() != ambient) {
        return schema(&format!("{}.basis[{bad}]", node.path), format!("expected {ambient} entries"));
    }
    Ok(Subspace::span(field, ambient, &rows))
}

// Free modules: {"version", "field", "dim", "generators": [matrix]}.

pub fn module_to_value(m: &FreeModule) -> Value {
    json!({
        "version": VERSION,
        "field": m.field().to_string(),
        "dim": m.dim(),
        "generators": m.gens().iter().map(matrix_value).collect::<Vec<_>>(),
    })
}

pub fn module_from(node: Node<'_>) -> DocResult<FreeModule> {
    node.version()?;
    let field = node.get("field", |n| n.field())?;
    let dim = node.get("dim", |n| n.usize())?;
    let gens = node.get("generators", |g| g.items(|m| m.matrix(field, dim, dim)))?;
    Ok(FreeModule::new(field, dim, gens)?)
}

// Quiver representations: {"version", "field", "quiver", "dims", "maps"}.

pub fn rep_to_value(r: &QuiverRep) -> Value {
    json!({
        "version": VERSION,
        "field": r.field().to_string(),
        "quiver": quiver_to_value(r.quiver()),
        "dims": r.dims(),
        "maps": r.maps().iter().map(matrix_value).collect::<Vec<_>>(),
    })
}

pub fn rep_from(node: Node<'_>) -> DocResult<QuiverRep> {
    node.version()?;
    let field = node.get("field", |n| n.field())?;
    let q = node.get("quiver", quiver_from)?;
    let dims = node.get("dims", |d| d.items(|x| x.usize()))?;
    if dims.len() != q.vertices().len() {
        return schema(node.path, "one dimension per vertex expected");
    }
    let arrows = q.arrows().to_vec();
    let maps = node.get("maps", |m| {
        let mut i = 0;
        let out = m.items(|x| {
            let Some((_, s, t)) = arrows.get(i) else {
                return schema(x.path, "more maps than arrows");
            };
            i += 1;
            x.matrix(field, dims[*t], dims[*s])
        })?;
        Ok(out)
    })?;
    Ok(QuiverRep::new(q, field, dims, maps)?)
}

/// The kind of a document, told apart by its keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Coalgebra,
    Comodule,
    Quiver,
    DimensionVector,
    Subspace,
    Module,
    Representation,
}

pub fn kind_of(v: &Value) -> Option<Kind> {
    let has = |k: &str| v.get(k).is_some();
    Some(if has("rho") {
        Kind::Comodule
    } else if has("delta") {
        Kind::Coalgebra
    } else if has("maps") {
        Kind::Representation
    } else if has("generators") {
        Kind::Module
    } else if has("arrows") {
        Kind::Quiver
    } else if has("entries") {
        Kind::DimensionVector
    } else if has("ambient") {
        Kind::Subspace
    } else {
        return None;
    })
}

/// Re-serializes any document in canonical form.
pub fn canonicalize(v: &Value, base: Option<&Path>) -> DocResult<Value> {
    let node = Node::root(v);
    Ok(match kind_of(v) {
        Some(Kind::Coalgebra) => coalgebra_to_value(&coalgebra_from(node)?),
        Some(Kind::Comodule) => comodule_to_value(&comodule_from(node, base)?),
        Some(Kind::Quiver) => quiver_to_value(&quiver_from(node)?),
        Some(Kind::DimensionVector) => dimvec_to_value(&dimvec_from(node)?),
        Some(Kind::Subspace) => subspace_to_value(&subspace_from(node)?),
        Some(Kind::Module) => module_to_value(&module_from(node)?),
        Some(Kind::Representation) => rep_to_value(&rep_from(node)?),
        None => return schema("$", "unrecognized document"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use coalglab::coalgebra::path_coalgebra;

    fn round_trip(text: &str) -> String {
        let v = parse_json(text, "test").unwrap();
        to_text(&canonicalize(&v, None).unwrap())
    }

    #[test]
    fn grouplike_document_round_trips() {
        let c = Coalgebra::grouplike_line(Field::Rational, "g");
        let text = to_text(&coalgebra_to_value(&c));
        assert_eq!(round_trip(&text), text);
        assert!(text.contains("\"field\": \"Q\""));
    }

    #[test]
    fn fractions_are_reduced() {
        let text = r#"{"version":"coalglab/1","field":"Q","basis":["g"],
            "delta":[[0,0,0,"2/2"]],"counit":["2/4"]}"#;
        let out = round_trip(text);
        assert!(out.contains("\"1/2\""), "{out}");
        assert!(out.contains("\"1\""));
    }

    #[test]
    fn non_coassociative_parses_then_fails_check() {
        let text = r#"{"version":"coalglab/1","field":"GF:3","basis":["g"],
            "delta":[[0,0,0,"2"]],"counit":["1"]}"#;
        let v = parse_json(text, "test").unwrap();
        let c = coalgebra_from(Node::root(&v)).unwrap();
        assert!(!c.check().is_ok());
    }

    #[test]
    fn diagnostics_name_line_and_path() {
        let e = parse_json("{\n  \"version\": \n}", "x.json").unwrap_err();
        assert!(matches!(e, DocError::Syntax { line: 3, .. }), "{e}");
        let v = parse_json(
            r#"{"version":"coalglab/1","field":"Q","basis":["g"],"delta":[[0,0,5,"1"]],"counit":["1"]}"#,
            "x",
        )
        .unwrap();
        let e = coalgebra_from(Node::root(&v)).unwrap_err();
        assert_eq!(e.to_string(), "$.delta[0][2]: index 5 out of range (size 1)");
        let v = parse_json(r#"{"version":"coalglab/2"}"#, "x").unwrap();
        assert!(coalgebra_from(Node::root(&v)).unwrap_err().to_string().contains("unsupported version"));
    }

    #[test]
    fn documents_round_trip() {
        let f = Field::Prime(7);
        let q = Quiver::kronecker(2);
        let c = Arc::new(path_coalgebra(f, &q, 1).unwrap());
        let m = Comodule::regular(c.clone());
        let v = comodule_to_value(&m);
        assert_eq!(comodule_from(Node::root(&v), None).unwrap(), m);
        let qv = quiver_to_value(&q);
        assert!(quiver_from(Node::root(&qv)).unwrap().same_shape(&q));
        let s = c.span_of(&["a", "x1"]).unwrap();
        assert_eq!(subspace_from(Node::root(&subspace_to_value(&s))).unwrap(), s);
        let d = DimensionVector::from_pairs(&[("a", 1), ("b", 2)]);
        assert_eq!(dimvec_from(Node::root(&dimvec_to_value(&d))).unwrap(), d);
        let by_label = parse_json(
            r#"{"version":"coalglab/1","vertices":["a","b"],"arrows":[["x","a","b"]]}"#,
            "x",
        )
        .unwrap();
        assert!(quiver_from(Node::root(&by_label)).unwrap().same_shape(&Quiver::single_arrow()));
    }
}
