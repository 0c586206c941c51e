//! The HGX structure-constant file format: line-oriented, hand-writable,
//! diffable. `#` starts a comment, blocks open with `[kind name ...]`,
//! tables are lines like `m: x * y = y + 2*1` and
//! `delta: x = x (x) 1 + 1 (x) x`. Tokens are whitespace-separated; the
//! lone token `(x)` is the tensor symbol, `0` the zero element, and scalar
//! coefficients follow the shared exact-scalar syntax (`a/b`, `t+1`, ...)
//! with parentheses around multi-term finite-field coefficients.
//!
//! Parsing is total: malformed input produces line-tagged diagnostics,
//! never a panic. Parsing validates references and dimensions; axioms are
//! checked by the `verify` machinery, so deliberately broken fixtures stay
//! representable.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::field::{FieldSpec, FiniteField, Scalar};
use crate::galois::ComoduleAlgebraData;
use crate::hopf::{AlgebraData, CoalgebraData, HopfAlgebraData};
use crate::linalg::{tensor_index, vec_zero, Matrix, Vector};
use crate::Error;

#[derive(Debug, Clone)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(w, "line {}: {}", self.line, self.message)
    }
}

/// A named object of a document.
#[derive(Debug, Clone)]
pub enum HgxObject {
    Hopf(Arc<HopfAlgebraData>),
    Algebra(Arc<AlgebraData>),
    ComoduleAlgebra {
        hopf_name: String,
        data: Arc<ComoduleAlgebraData>,
    },
    /// A module-algebra action of a Hopf algebra on an algebra: one matrix
    /// per Hopf basis element.
    Action {
        hopf_name: String,
        algebra_name: String,
        matrices: Vec<Matrix>,
    },
    /// A left module over a named algebra or comodule algebra.
    Module {
        over_name: String,
        dim: usize,
        labels: Vec<String>,
        matrices: Vec<Matrix>,
    },
    Character {
        hopf_name: String,
        values: Vector,
    },
    Cocycle {
        hopf_name: String,
        base_name: String,
        omega: Vec<Matrix>,
        sigma: Vec<Vec<Vector>>,
    },
}

impl HgxObject {
    pub fn kind(&self) -> &'static str {
        match self {
            HgxObject::Hopf(_) => "hopf",
            HgxObject::Algebra(_) => "algebra",
            HgxObject::ComoduleAlgebra { .. } => "comodule-algebra",
            HgxObject::Action { .. } => "action",
            HgxObject::Module { .. } => "module",
            HgxObject::Character { .. } => "character",
            HgxObject::Cocycle { .. } => "cocycle",
        }
    }
}

#[derive(Debug, Clone)]
pub struct HgxDocument {
    pub field: FieldSpec,
    /// Objects in declaration order.
    pub objects: Vec<(String, HgxObject)>,
}

impl HgxDocument {
    pub fn get(&self, name: &str) -> Option<&HgxObject> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

struct RawBlock {
    line: usize,
    kind: String,
    name: String,
    refs: Vec<String>,
    basis: Vec<String>,
    generators: Vec<String>,
    /// (line, key, lhs tokens, rhs tokens)
    table_lines: Vec<(usize, String, Vec<String>, Vec<String>)>,
}

fn tokenize(line: &str) -> Vec<String> {
    line.split_whitespace().map(|s| s.to_string()).collect()
}

fn comment_start(line: &str) -> Option<usize> {
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'#' && (i == 0 || bytes[i - 1].is_ascii_whitespace()) {
            return Some(i);
        }
    }
    None
}

struct Parser<'a> {
    field: Option<FieldSpec>,
    diags: Vec<Diagnostic>,
    objects: Vec<(String, HgxObject)>,
    names: HashMap<String, usize>,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&mut self, line: usize, msg: impl Into<String>) {
        self.diags.push(Diagnostic {
            line,
            message: msg.into(),
        });
    }

    fn parse(mut self) -> Result<HgxDocument, Vec<Diagnostic>> {
        let mut current: Option<RawBlock> = None;
        for (idx, raw_line) in self.text.lines().enumerate() {
            let lineno = idx + 1;
            // comments start at `#` at the beginning of a line or after
            // whitespace, so labels like `b0#x` survive
            let line = match comment_start(raw_line) {
                Some(p) => &raw_line[..p],
                None => raw_line,
            };
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if trimmed.starts_with('[') {
                if let Some(block) = current.take() {
                    self.finish_block(block);
                }
                current = self.parse_header(lineno, trimmed);
                continue;
            }
            let tokens = tokenize(trimmed);
            if tokens.is_empty() {
                continue;
            }
            if tokens[0] == "field" {
                if self.field.is_some() {
                    self.err(lineno, "duplicate field declaration");
                    continue;
                }
                self.field = self.parse_field(lineno, &tokens[1..]);
                continue;
            }
            let Some(block) = current.as_mut() else {
                self.err(lineno, format!("statement `{}` outside any block", tokens[0]));
                continue;
            };
            if tokens[0] == "basis" {
                if !block.basis.is_empty() {
                    self.err(lineno, "duplicate basis line");
                    continue;
                }
                block.basis = tokens[1..].to_vec();
                if block.basis.is_empty() {
                    self.err(lineno, "empty basis");
                }
                continue;
            }
            if tokens[0] == "generators:" {
                block.generators = tokens[1..].to_vec();
                continue;
            }
            // key: lhs = rhs
            let Some(key) = tokens[0].strip_suffix(':') else {
                self.err(lineno, format!("unrecognized statement `{}`", tokens[0]));
                continue;
            };
            let rest = &tokens[1..];
            let Some(eq) = rest.iter().position(|t| t == "=") else {
                self.err(lineno, "missing `=`");
                continue;
            };
            block.table_lines.push((
                lineno,
                key.to_string(),
                rest[..eq].to_vec(),
                rest[eq + 1..].to_vec(),
            ));
        }
        if let Some(block) = current.take() {
            self.finish_block(block);
        }
        if self.field.is_none() && self.diags.is_empty() {
            self.diags.push(Diagnostic {
                line: 1,
                message: "no field declaration".into(),
            });
        }
        if self.diags.is_empty() {
            Ok(HgxDocument {
                field: self.field.unwrap(),
                objects: self.objects,
            })
        } else {
            Err(self.diags)
        }
    }

    fn parse_field(&mut self, line: usize, tokens: &[String]) -> Option<FieldSpec> {
        match tokens.first().map(|s| s.as_str()) {
            Some("rational") => Some(FieldSpec::Rational),
            Some("finite") => {
                let mut p = None;
                let mut d = 1usize;
                let mut modulus: Option<Vec<u64>> = None;
                for t in &tokens[1..] {
                    if let Some(v) = t.strip_prefix("p=") {
                        p = v.parse::<u64>().ok();
                    } else if let Some(v) = t.strip_prefix("d=") {
                        match v.parse::<usize>() {
                            Ok(x) => d = x,
                            Err(_) => {
                                self.err(line, format!("bad degree `{v}`"));
                                return None;
                            }
                        }
                    } else if let Some(v) = t.strip_prefix("modulus=") {
                        match parse_modulus(v) {
                            Ok(m) => modulus = Some(m),
                            Err(e) => {
                                self.err(line, format!("bad modulus: {e}"));
                                return None;
                            }
                        }
                    } else {
                        self.err(line, format!("unknown field parameter `{t}`"));
                        return None;
                    }
                }
                let Some(p) = p else {
                    self.err(line, "finite field needs p=<prime>");
                    return None;
                };
                match FiniteField::new(p, d, modulus) {
                    Ok(f) => Some(FieldSpec::Finite(f)),
                    Err(e) => {
                        self.err(line, format!("{e}"));
                        None
                    }
                }
            }
            _ => {
                self.err(line, "field must be `rational` or `finite p=.. d=..`");
                None
            }
        }
    }

    fn parse_header(&mut self, line: usize, text: &str) -> Option<RawBlock> {
        let inner = text.trim_start_matches('[');
        let Some(inner) = inner.strip_suffix(']') else {
            self.err(line, "unterminated block header");
            return None;
        };
        let tokens = tokenize(inner);
        if tokens.len() < 2 {
            self.err(line, "block header needs a kind and a name");
            return None;
        }
        let kind = tokens[0].clone();
        let name = tokens[1].clone();
        let known = [
            "hopf",
            "algebra",
            "comodule-algebra",
            "action",
            "module",
            "character",
            "cocycle",
        ];
        if !known.contains(&kind.as_str()) {
            self.err(line, format!("unknown block kind `{kind}`"));
            return None;
        }
        if self.names.contains_key(&name) {
            self.err(line, format!("duplicate object name `{name}`"));
            return None;
        }
        // connective words: over X | of X on Y
        let mut refs = Vec::new();
        let mut i = 2;
        while i < tokens.len() {
            match tokens[i].as_str() {
                "over" | "of" | "on" | "into" => {
                    if i + 1 < tokens.len() {
                        refs.push(tokens[i + 1].clone());
                        i += 2;
                    } else {
                        self.err(line, format!("dangling `{}` in header", tokens[i]));
                        return None;
                    }
                }
                other => {
                    self.err(line, format!("unexpected header token `{other}`"));
                    return None;
                }
            }
        }
        Some(RawBlock {
            line,
            kind,
            name,
            refs,
            basis: Vec::new(),
            generators: Vec::new(),
            table_lines: Vec::new(),
        })
    }

    /// Parse a linear combination over `labels` (vector-valued line).
    fn parse_lincomb(
        &mut self,
        line: usize,
        field: &FieldSpec,
        labels: &[String],
        tokens: &[String],
    ) -> Option<Vector> {
        let n = labels.len();
        let mut out = vec_zero(field, n);
        if tokens.len() == 1 && tokens[0] == "0" {
            return Some(out);
        }
        let mut i = 0;
        let mut sign = 1i64;
        let mut expect_term = true;
        while i < tokens.len() {
            match tokens[i].as_str() {
                "+" => {
                    if expect_term {
                        self.err(line, "unexpected `+`");
                        return None;
                    }
                    sign = 1;
                    expect_term = true;
                    i += 1;
                }
                "-" => {
                    if expect_term {
                        // leading minus on a term
                        sign = -sign;
                        i += 1;
                    } else {
                        sign = -1;
                        expect_term = true;
                        i += 1;
                    }
                }
                _ => {
                    // [coef *] label
                    let (coef, label_idx_tok) =
                        if i + 1 < tokens.len() && tokens[i + 1] == "*" {
                            let c = self.parse_scalar_token(line, field, &tokens[i])?;
                            (c, i + 2)
                        } else {
                            (field.one(), i)
                        };
                    if label_idx_tok >= tokens.len() {
                        self.err(line, "coefficient without a basis label");
                        return None;
                    }
                    let label = &tokens[label_idx_tok];
                    let Some(pos) = labels.iter().position(|l| l == label) else {
                        self.err(line, format!("unknown basis label `{label}`"));
                        return None;
                    };
                    let mut c = coef;
                    if sign < 0 {
                        c = c.neg();
                    }
                    out[pos] = out[pos].add(&c);
                    sign = 1;
                    expect_term = false;
                    i = label_idx_tok + 1;
                }
            }
        }
        if expect_term {
            self.err(line, "dangling sign at end of expression");
            return None;
        }
        Some(out)
    }

    /// Parse a sum of tensor pairs `[coef *] a (x) b` over two label sets.
    fn parse_tensor_comb(
        &mut self,
        line: usize,
        field: &FieldSpec,
        left_labels: &[String],
        right_labels: &[String],
        tokens: &[String],
    ) -> Option<Vector> {
        let nr = right_labels.len();
        let mut out = vec_zero(field, left_labels.len() * nr);
        if tokens.len() == 1 && tokens[0] == "0" {
            return Some(out);
        }
        let mut i = 0;
        let mut sign = 1i64;
        let mut expect_term = true;
        while i < tokens.len() {
            match tokens[i].as_str() {
                "+" => {
                    if expect_term {
                        self.err(line, "unexpected `+`");
                        return None;
                    }
                    sign = 1;
                    expect_term = true;
                    i += 1;
                }
                "-" => {
                    sign = -sign;
                    if !expect_term {
                        sign = -1;
                        expect_term = true;
                    }
                    i += 1;
                }
                _ => {
                    let (coef, mut j) = if i + 1 < tokens.len() && tokens[i + 1] == "*" {
                        let c = self.parse_scalar_token(line, field, &tokens[i])?;
                        (c, i + 2)
                    } else {
                        (field.one(), i)
                    };
                    if j + 2 >= tokens.len() || tokens[j + 1] != "(x)" {
                        self.err(line, "expected `a (x) b` tensor pair");
                        return None;
                    }
                    let la = &tokens[j];
                    let lb = &tokens[j + 2];
                    let Some(pa) = left_labels.iter().position(|l| l == la) else {
                        self.err(line, format!("unknown basis label `{la}`"));
                        return None;
                    };
                    let Some(pb) = right_labels.iter().position(|l| l == lb) else {
                        self.err(line, format!("unknown basis label `{lb}`"));
                        return None;
                    };
                    let mut c = coef;
                    if sign < 0 {
                        c = c.neg();
                    }
                    let idx = tensor_index(pa, pb, nr);
                    out[idx] = out[idx].add(&c);
                    sign = 1;
                    expect_term = false;
                    j += 3;
                    i = j;
                }
            }
        }
        if expect_term {
            self.err(line, "dangling sign at end of expression");
            return None;
        }
        Some(out)
    }

    fn parse_scalar_token(
        &mut self,
        line: usize,
        field: &FieldSpec,
        token: &str,
    ) -> Option<Scalar> {
        let inner = token
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(token);
        match Scalar::parse(field, inner) {
            Ok(s) => Some(s),
            Err(e) => {
                self.err(line, format!("{e}"));
                None
            }
        }
    }

    fn finish_block(&mut self, block: RawBlock) {
        let Some(field) = self.field.clone() else {
            self.err(block.line, "block appears before the field declaration");
            return;
        };
        match block.kind.as_str() {
            "hopf" => self.build_hopf(&field, block),
            "algebra" => self.build_algebra(&field, block),
            "comodule-algebra" => self.build_comodule(&field, block),
            "action" => self.build_action(&field, block),
            "module" => self.build_module(&field, block),
            "character" => self.build_character(&field, block),
            "cocycle" => self.build_cocycle(&field, block),
            _ => unreachable!(),
        }
    }

    fn install(&mut self, name: String, obj: HgxObject) {
        self.names.insert(name.clone(), self.objects.len());
        self.objects.push((name, obj));
    }

    /// Collect an algebra core (basis + unit + multiplication + generators).
    fn algebra_core(
        &mut self,
        field: &FieldSpec,
        block: &RawBlock,
    ) -> Option<(Vec<String>, Matrix, Vector, Option<Vec<Vector>>)> {
        let labels = block.basis.clone();
        if labels.is_empty() {
            self.err(block.line, format!("block `{}` has no basis", block.name));
            return None;
        }
        let n = labels.len();
        let mut mult = Matrix::zero(field.clone(), n, n * n);
        let mut seen = vec![false; n * n];
        let mut unit: Option<Vector> = None;
        for (line, key, lhs, rhs) in &block.table_lines {
            match key.as_str() {
                "m" => {
                    if lhs.len() != 3 || lhs[1] != "*" {
                        self.err(*line, "product line must be `m: a * b = ...`");
                        continue;
                    }
                    let (Some(i), Some(j)) = (
                        labels.iter().position(|l| *l == lhs[0]),
                        labels.iter().position(|l| *l == lhs[2]),
                    ) else {
                        self.err(*line, "unknown basis label in product");
                        continue;
                    };
                    let Some(v) = self.parse_lincomb(*line, field, &labels, rhs) else {
                        continue;
                    };
                    let col = tensor_index(i, j, n);
                    if seen[col] {
                        self.err(*line, "duplicate product line");
                        continue;
                    }
                    seen[col] = true;
                    for (r, x) in v.iter().enumerate() {
                        mult.set(r, col, x.clone());
                    }
                }
                "unit" => {
                    if !lhs.is_empty() {
                        self.err(*line, "unit line must be `unit: = ...`? use `unit: ...` with `=` only");
                        continue;
                    }
                    unit = self.parse_lincomb(*line, field, &labels, rhs);
                }
                _ => {}
            }
        }
        if !seen.iter().all(|&s| s) {
            let missing = seen.iter().position(|&s| !s).unwrap();
            self.err(
                block.line,
                format!(
                    "incomplete multiplication table in `{}` (missing {} * {})",
                    block.name,
                    labels[missing / n],
                    labels[missing % n]
                ),
            );
            return None;
        }
        let Some(unit) = unit else {
            self.err(block.line, format!("block `{}` has no unit line", block.name));
            return None;
        };
        let gens = if block.generators.is_empty() {
            None
        } else {
            let mut out = Vec::new();
            for g in &block.generators {
                let Some(pos) = labels.iter().position(|l| l == g) else {
                    self.err(block.line, format!("unknown generator label `{g}`"));
                    return None;
                };
                out.push(crate::hopf::basis_vec(field, n, pos));
            }
            Some(out)
        };
        Some((labels, mult, unit, gens))
    }

    fn build_algebra(&mut self, field: &FieldSpec, block: RawBlock) {
        let Some((labels, mult, unit, gens)) = self.algebra_core(field, &block) else {
            return;
        };
        match AlgebraData::new(field.clone(), labels, mult, unit) {
            Ok(mut a) => {
                if let Some(g) = gens {
                    a = a.with_generators(g);
                }
                self.install(block.name, HgxObject::Algebra(Arc::new(a)));
            }
            Err(e) => self.err(block.line, format!("{e}")),
        }
    }

    fn build_hopf(&mut self, field: &FieldSpec, block: RawBlock) {
        let Some((labels, mult, unit, gens)) = self.algebra_core(field, &block) else {
            return;
        };
        let n = labels.len();
        let mut comult = Matrix::zero(field.clone(), n * n, n);
        let mut counit = Matrix::zero(field.clone(), 1, n);
        let mut antipode = Matrix::zero(field.clone(), n, n);
        let mut seen_d = vec![false; n];
        let mut seen_e = vec![false; n];
        let mut seen_s = vec![false; n];
        for (line, key, lhs, rhs) in &block.table_lines {
            match key.as_str() {
                "delta" => {
                    if lhs.len() != 1 {
                        self.err(*line, "comultiplication line must be `delta: a = ...`");
                        continue;
                    }
                    let Some(i) = labels.iter().position(|l| *l == lhs[0]) else {
                        self.err(*line, "unknown basis label");
                        continue;
                    };
                    let Some(v) = self.parse_tensor_comb(*line, field, &labels, &labels, rhs)
                    else {
                        continue;
                    };
                    seen_d[i] = true;
                    for (r, x) in v.iter().enumerate() {
                        comult.set(r, i, x.clone());
                    }
                }
                "counit" => {
                    if lhs.len() != 1 {
                        self.err(*line, "counit line must be `counit: a = <scalar>`");
                        continue;
                    }
                    let Some(i) = labels.iter().position(|l| *l == lhs[0]) else {
                        self.err(*line, "unknown basis label");
                        continue;
                    };
                    if rhs.len() != 1 {
                        self.err(*line, "counit value must be a single scalar");
                        continue;
                    }
                    let Some(s) = self.parse_scalar_token(*line, field, &rhs[0]) else {
                        continue;
                    };
                    seen_e[i] = true;
                    counit.set(0, i, s);
                }
                "antipode" => {
                    if lhs.len() != 1 {
                        self.err(*line, "antipode line must be `antipode: a = ...`");
                        continue;
                    }
                    let Some(i) = labels.iter().position(|l| *l == lhs[0]) else {
                        self.err(*line, "unknown basis label");
                        continue;
                    };
                    let Some(v) = self.parse_lincomb(*line, field, &labels, rhs) else {
                        continue;
                    };
                    seen_s[i] = true;
                    for (r, x) in v.iter().enumerate() {
                        antipode.set(r, i, x.clone());
                    }
                }
                "m" | "unit" => {}
                other => self.err(*line, format!("unknown table key `{other}` in hopf block")),
            }
        }
        let first_missing = [(&seen_d, "delta"), (&seen_e, "counit"), (&seen_s, "antipode")]
            .iter()
            .flat_map(|(seen, what)| {
                seen.iter()
                    .enumerate()
                    .filter(|(_, s)| !**s)
                    .map(move |(i, _)| (i, *what))
            })
            .next();
        if let Some((i, what)) = first_missing {
            self.err(
                block.line,
                format!("missing {what} line for `{}` in `{}`", labels[i], block.name),
            );
            return;
        }
        let alg = match AlgebraData::new(field.clone(), labels.clone(), mult, unit) {
            Ok(mut a) => {
                if let Some(g) = gens {
                    a = a.with_generators(g);
                }
                a
            }
            Err(e) => {
                self.err(block.line, format!("{e}"));
                return;
            }
        };
        let co = match CoalgebraData::new(field.clone(), labels, comult, counit) {
            Ok(c) => c,
            Err(e) => {
                self.err(block.line, format!("{e}"));
                return;
            }
        };
        match HopfAlgebraData::new(alg, co, antipode) {
            Ok(h) => self.install(block.name, HgxObject::Hopf(h)),
            Err(e) => self.err(block.line, format!("{e}")),
        }
    }

    fn lookup_hopf(&mut self, line: usize, name: &str) -> Option<Arc<HopfAlgebraData>> {
        match self.names.get(name).map(|&i| &self.objects[i].1) {
            Some(HgxObject::Hopf(h)) => Some(Arc::clone(h)),
            Some(o) => {
                self.err(line, format!("`{name}` is a {}, expected a hopf object", o.kind()));
                None
            }
            None => {
                self.err(line, format!("reference to undeclared object `{name}`"));
                None
            }
        }
    }

    fn lookup_algebra(&mut self, line: usize, name: &str) -> Option<Arc<AlgebraData>> {
        match self.names.get(name).map(|&i| &self.objects[i].1) {
            Some(HgxObject::Algebra(a)) => Some(Arc::clone(a)),
            Some(HgxObject::ComoduleAlgebra { data, .. }) => Some(Arc::clone(&data.algebra)),
            Some(o) => {
                self.err(line, format!("`{name}` is a {}, expected an algebra", o.kind()));
                None
            }
            None => {
                self.err(line, format!("reference to undeclared object `{name}`"));
                None
            }
        }
    }

    fn build_comodule(&mut self, field: &FieldSpec, block: RawBlock) {
        if block.refs.len() != 1 {
            self.err(
                block.line,
                "comodule-algebra header must be `[comodule-algebra NAME over HOPF]`",
            );
            return;
        }
        let Some(hopf) = self.lookup_hopf(block.line, &block.refs[0].clone()) else {
            return;
        };
        let Some((labels, mult, unit, gens)) = self.algebra_core(field, &block) else {
            return;
        };
        let n = labels.len();
        let nh = hopf.dim();
        let mut coaction = Matrix::zero(field.clone(), n * nh, n);
        let mut seen = vec![false; n];
        for (line, key, lhs, rhs) in &block.table_lines {
            if key != "rho" {
                if key != "m" && key != "unit" {
                    self.err(*line, format!("unknown table key `{key}` in comodule block"));
                }
                continue;
            }
            if lhs.len() != 1 {
                self.err(*line, "coaction line must be `rho: a = ...`");
                continue;
            }
            let Some(i) = labels.iter().position(|l| *l == lhs[0]) else {
                self.err(*line, "unknown basis label");
                continue;
            };
            let Some(v) = self.parse_tensor_comb(*line, field, &labels, hopf.labels(), rhs)
            else {
                continue;
            };
            seen[i] = true;
            for (r, x) in v.iter().enumerate() {
                coaction.set(r, i, x.clone());
            }
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            self.err(
                block.line,
                format!("missing rho line for `{}` in `{}`", labels[i], block.name),
            );
            return;
        }
        let alg = match AlgebraData::new(field.clone(), labels, mult, unit) {
            Ok(mut a) => {
                if let Some(g) = gens {
                    a = a.with_generators(g);
                }
                Arc::new(a)
            }
            Err(e) => {
                self.err(block.line, format!("{e}"));
                return;
            }
        };
        match ComoduleAlgebraData::new(alg, hopf, coaction) {
            Ok(c) => self.install(
                block.name,
                HgxObject::ComoduleAlgebra {
                    hopf_name: block.refs[0].clone(),
                    data: c,
                },
            ),
            Err(e) => self.err(block.line, format!("{e}")),
        }
    }

    fn build_action(&mut self, field: &FieldSpec, block: RawBlock) {
        if block.refs.len() != 2 {
            self.err(block.line, "action header must be `[action NAME of HOPF on ALGEBRA]`");
            return;
        }
        let Some(hopf) = self.lookup_hopf(block.line, &block.refs[0].clone()) else {
            return;
        };
        let Some(alg) = self.lookup_algebra(block.line, &block.refs[1].clone()) else {
            return;
        };
        let nh = hopf.dim();
        let na = alg.dim;
        let mut matrices = vec![Matrix::zero(field.clone(), na, na); nh];
        let mut seen = vec![vec![false; na]; nh];
        for (line, key, lhs, rhs) in &block.table_lines {
            if key != "act" {
                self.err(*line, format!("unknown table key `{key}` in action block"));
                continue;
            }
            // act: h on a = ...
            if lhs.len() != 3 || lhs[1] != "on" {
                self.err(*line, "action line must be `act: h on a = ...`");
                continue;
            }
            let Some(hi) = hopf.labels().iter().position(|l| *l == lhs[0]) else {
                self.err(*line, format!("unknown hopf basis label `{}`", lhs[0]));
                continue;
            };
            let Some(ai) = alg.labels.iter().position(|l| *l == lhs[2]) else {
                self.err(*line, format!("unknown algebra basis label `{}`", lhs[2]));
                continue;
            };
            let Some(v) = self.parse_lincomb(*line, field, &alg.labels, rhs) else {
                continue;
            };
            seen[hi][ai] = true;
            for (r, x) in v.iter().enumerate() {
                matrices[hi].set(r, ai, x.clone());
            }
        }
        for (hi, row) in seen.iter().enumerate() {
            if let Some(ai) = row.iter().position(|&s| !s) {
                self.err(
                    block.line,
                    format!(
                        "missing action line for `{} on {}`",
                        hopf.labels()[hi],
                        alg.labels[ai]
                    ),
                );
                return;
            }
        }
        self.install(
            block.name,
            HgxObject::Action {
                hopf_name: block.refs[0].clone(),
                algebra_name: block.refs[1].clone(),
                matrices,
            },
        );
    }

    fn build_module(&mut self, field: &FieldSpec, block: RawBlock) {
        if block.refs.len() != 1 {
            self.err(block.line, "module header must be `[module NAME over ALGEBRA]`");
            return;
        }
        let Some(alg) = self.lookup_algebra(block.line, &block.refs[0].clone()) else {
            return;
        };
        let labels = block.basis.clone();
        if labels.is_empty() {
            self.err(block.line, "module block has no basis");
            return;
        }
        let m = labels.len();
        let na = alg.dim;
        let mut matrices = vec![Matrix::zero(field.clone(), m, m); na];
        let mut seen = vec![vec![false; m]; na];
        for (line, key, lhs, rhs) in &block.table_lines {
            if key != "act" {
                self.err(*line, format!("unknown table key `{key}` in module block"));
                continue;
            }
            if lhs.len() != 3 || lhs[1] != "on" {
                self.err(*line, "module line must be `act: a on m = ...`");
                continue;
            }
            let Some(ai) = alg.labels.iter().position(|l| *l == lhs[0]) else {
                self.err(*line, format!("unknown algebra basis label `{}`", lhs[0]));
                continue;
            };
            let Some(mi) = labels.iter().position(|l| *l == lhs[2]) else {
                self.err(*line, format!("unknown module basis label `{}`", lhs[2]));
                continue;
            };
            let Some(v) = self.parse_lincomb(*line, field, &labels, rhs) else {
                continue;
            };
            seen[ai][mi] = true;
            for (r, x) in v.iter().enumerate() {
                matrices[ai].set(r, mi, x.clone());
            }
        }
        for (ai, row) in seen.iter().enumerate() {
            if let Some(mi) = row.iter().position(|&s| !s) {
                self.err(
                    block.line,
                    format!(
                        "missing module line for `{} on {}`",
                        alg.labels[ai], labels[mi]
                    ),
                );
                return;
            }
        }
        self.install(
            block.name,
            HgxObject::Module {
                over_name: block.refs[0].clone(),
                dim: m,
                labels,
                matrices,
            },
        );
    }

    fn build_character(&mut self, field: &FieldSpec, block: RawBlock) {
        if block.refs.len() != 1 {
            self.err(block.line, "character header must be `[character NAME of HOPF]`");
            return;
        }
        let Some(hopf) = self.lookup_hopf(block.line, &block.refs[0].clone()) else {
            return;
        };
        let nh = hopf.dim();
        let mut values = vec_zero(field, nh);
        let mut seen = vec![false; nh];
        for (line, key, lhs, rhs) in &block.table_lines {
            if key != "chi" {
                self.err(*line, format!("unknown table key `{key}` in character block"));
                continue;
            }
            if lhs.len() != 1 || rhs.len() != 1 {
                self.err(*line, "character line must be `chi: h = <scalar>`");
                continue;
            }
            let Some(hi) = hopf.labels().iter().position(|l| *l == lhs[0]) else {
                self.err(*line, format!("unknown hopf basis label `{}`", lhs[0]));
                continue;
            };
            let Some(s) = self.parse_scalar_token(*line, field, &rhs[0]) else {
                continue;
            };
            seen[hi] = true;
            values[hi] = s;
        }
        if let Some(hi) = seen.iter().position(|&s| !s) {
            self.err(
                block.line,
                format!("missing character value for `{}`", hopf.labels()[hi]),
            );
            return;
        }
        self.install(
            block.name,
            HgxObject::Character {
                hopf_name: block.refs[0].clone(),
                values,
            },
        );
    }

    fn build_cocycle(&mut self, field: &FieldSpec, block: RawBlock) {
        if block.refs.len() != 2 {
            self.err(
                block.line,
                "cocycle header must be `[cocycle NAME of HOPF into ALGEBRA]`",
            );
            return;
        }
        let Some(hopf) = self.lookup_hopf(block.line, &block.refs[0].clone()) else {
            return;
        };
        let Some(base) = self.lookup_algebra(block.line, &block.refs[1].clone()) else {
            return;
        };
        let nh = hopf.dim();
        let nb = base.dim;
        let mut omega = vec![Matrix::zero(field.clone(), nb, nb); nh];
        let mut sigma = vec![vec![vec_zero(field, nb); nh]; nh];
        let mut seen_o = vec![vec![false; nb]; nh];
        let mut seen_s = vec![vec![false; nh]; nh];
        for (line, key, lhs, rhs) in &block.table_lines {
            match key.as_str() {
                "omega" => {
                    if lhs.len() != 3 || lhs[1] != "on" {
                        self.err(*line, "action line must be `omega: h on b = ...`");
                        continue;
                    }
                    let Some(hi) = hopf.labels().iter().position(|l| *l == lhs[0]) else {
                        self.err(*line, "unknown hopf basis label");
                        continue;
                    };
                    let Some(bi) = base.labels.iter().position(|l| *l == lhs[2]) else {
                        self.err(*line, "unknown base label");
                        continue;
                    };
                    let Some(v) = self.parse_lincomb(*line, field, &base.labels, rhs) else {
                        continue;
                    };
                    seen_o[hi][bi] = true;
                    for (r, x) in v.iter().enumerate() {
                        omega[hi].set(r, bi, x.clone());
                    }
                }
                "sigma" => {
                    if lhs.len() != 3 || lhs[1] != "," {
                        self.err(*line, "cocycle line must be `sigma: h , k = ...`");
                        continue;
                    }
                    let (Some(hi), Some(ki)) = (
                        hopf.labels().iter().position(|l| *l == lhs[0]),
                        hopf.labels().iter().position(|l| *l == lhs[2]),
                    ) else {
                        self.err(*line, "unknown hopf basis label");
                        continue;
                    };
                    let Some(v) = self.parse_lincomb(*line, field, &base.labels, rhs) else {
                        continue;
                    };
                    seen_s[hi][ki] = true;
                    sigma[hi][ki] = v;
                }
                other => self.err(*line, format!("unknown table key `{other}` in cocycle block")),
            }
        }
        for (hi, row) in seen_o.iter().enumerate() {
            if let Some(bi) = row.iter().position(|&s| !s) {
                self.err(
                    block.line,
                    format!(
                        "missing omega line for `{} on {}`",
                        hopf.labels()[hi],
                        base.labels[bi]
                    ),
                );
                return;
            }
        }
        for (hi, row) in seen_s.iter().enumerate() {
            if let Some(ki) = row.iter().position(|&s| !s) {
                self.err(
                    block.line,
                    format!(
                        "missing sigma line for `{} , {}`",
                        hopf.labels()[hi],
                        hopf.labels()[ki]
                    ),
                );
                return;
            }
        }
        self.install(
            block.name,
            HgxObject::Cocycle {
                hopf_name: block.refs[0].clone(),
                base_name: block.refs[1].clone(),
                omega,
                sigma,
            },
        );
    }
}

fn parse_modulus(text: &str) -> Result<Vec<u64>, Error> {
    // polynomial in t with nonnegative integer coefficients, e.g. t^2+t+1
    let mut coeffs: Vec<u64> = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        let (coef, exp) = if let Some(idx) = term.find('t') {
            let cpart = term[..idx].trim().trim_end_matches('*').trim();
            let after = term[idx + 1..].trim();
            let exp: usize = if after.is_empty() {
                1
            } else if let Some(e) = after.strip_prefix('^') {
                e.parse()
                    .map_err(|_| Error::InvalidScalar(format!("bad exponent `{term}`")))?
            } else {
                return Err(Error::InvalidScalar(format!("bad modulus term `{term}`")));
            };
            let coef: u64 = if cpart.is_empty() {
                1
            } else {
                cpart
                    .parse()
                    .map_err(|_| Error::InvalidScalar(format!("bad coefficient `{cpart}`")))?
            };
            (coef, exp)
        } else {
            (
                term.parse()
                    .map_err(|_| Error::InvalidScalar(format!("bad modulus term `{term}`")))?,
                0,
            )
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += coef;
    }
    Ok(coeffs)
}

/// Parse a document. Totality: any input yields either a document or a list
/// of diagnostics with line numbers.
pub fn parse_hgx(text: &str) -> Result<HgxDocument, Vec<Diagnostic>> {
    Parser {
        field: None,
        diags: Vec::new(),
        objects: Vec::new(),
        names: HashMap::new(),
        text,
    }
    .parse()
}

// ---------------------------------------------------------------------------
// emission
// ---------------------------------------------------------------------------

fn emit_scalar(s: &Scalar) -> String {
    let text = format!("{s}");
    if text.len() > 1 && (text.contains('+') || text[1..].contains('-')) {
        format!("({text})")
    } else {
        text
    }
}

fn emit_lincomb(v: &[Scalar], labels: &[String]) -> String {
    let mut terms = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            terms.push(labels[i].clone());
        } else {
            terms.push(format!("{} * {}", emit_scalar(c), labels[i]));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn emit_tensor_comb(v: &[Scalar], left: &[String], right: &[String]) -> String {
    let nr = right.len();
    let mut terms = Vec::new();
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j) = (idx / nr, idx % nr);
        if c.is_one() {
            terms.push(format!("{} (x) {}", left[i], right[j]));
        } else {
            terms.push(format!("{} * {} (x) {}", emit_scalar(c), left[i], right[j]));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn emit_field(field: &FieldSpec) -> String {
    match field {
        FieldSpec::Rational => "field rational".into(),
        FieldSpec::Finite(f) => {
            let modulus: Vec<String> = f
                .modulus()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| match (e, c) {
                    (0, c) => format!("{c}"),
                    (1, 1) => "t".into(),
                    (1, c) => format!("{c}*t"),
                    (e, 1) => format!("t^{e}"),
                    (e, c) => format!("{c}*t^{e}"),
                })
                .collect();
            format!(
                "field finite p={} d={} modulus={}",
                f.characteristic(),
                f.degree(),
                modulus.join("+")
            )
        }
    }
}

fn emit_algebra_core(out: &mut String, alg: &AlgebraData) {
    out.push_str(&format!("basis {}\n", alg.labels.join(" ")));
    out.push_str(&format!("unit: = {}\n", emit_lincomb(&alg.unit, &alg.labels)));
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            out.push_str(&format!(
                "m: {} * {} = {}\n",
                alg.labels[i],
                alg.labels[j],
                emit_lincomb(&alg.basis_product(i, j), &alg.labels)
            ));
        }
    }
    if let Some(gens) = &alg.generators {
        let mut names = Vec::new();
        for g in gens {
            if let Some(pos) = (0..alg.dim).find(|&i| *g == alg.basis_vector(i)) {
                names.push(alg.labels[pos].clone());
            }
        }
        if names.len() == gens.len() && !names.is_empty() {
            out.push_str(&format!("generators: {}\n", names.join(" ")));
        }
    }
}

pub fn emit_hopf(out: &mut String, name: &str, h: &HopfAlgebraData) {
    out.push_str(&format!("[hopf {name}]\n"));
    emit_algebra_core(out, &h.algebra);
    let labels = h.labels();
    for i in 0..h.dim() {
        out.push_str(&format!(
            "delta: {} = {}\n",
            labels[i],
            emit_tensor_comb(&h.coalgebra.comult.col(i), labels, labels)
        ));
    }
    for i in 0..h.dim() {
        out.push_str(&format!(
            "counit: {} = {}\n",
            labels[i],
            emit_scalar(h.coalgebra.counit.get(0, i))
        ));
    }
    for i in 0..h.dim() {
        out.push_str(&format!(
            "antipode: {} = {}\n",
            labels[i],
            emit_lincomb(&h.antipode.col(i), labels)
        ));
    }
    out.push('\n');
}

pub fn emit_comodule(out: &mut String, name: &str, hopf_name: &str, c: &ComoduleAlgebraData) {
    out.push_str(&format!("[comodule-algebra {name} over {hopf_name}]\n"));
    emit_algebra_core(out, &c.algebra);
    for i in 0..c.algebra.dim {
        out.push_str(&format!(
            "rho: {} = {}\n",
            c.algebra.labels[i],
            emit_tensor_comb(&c.coaction.col(i), &c.algebra.labels, c.hopf.labels())
        ));
    }
    out.push('\n');
}

pub fn emit_algebra(out: &mut String, name: &str, a: &AlgebraData) {
    out.push_str(&format!("[algebra {name}]\n"));
    emit_algebra_core(out, a);
    out.push('\n');
}

pub fn emit_action(
    out: &mut String,
    name: &str,
    hopf_name: &str,
    hopf: &HopfAlgebraData,
    algebra_name: &str,
    algebra: &AlgebraData,
    matrices: &[Matrix],
) {
    out.push_str(&format!("[action {name} of {hopf_name} on {algebra_name}]\n"));
    for (hi, m) in matrices.iter().enumerate() {
        for ai in 0..algebra.dim {
            out.push_str(&format!(
                "act: {} on {} = {}\n",
                hopf.labels()[hi],
                algebra.labels[ai],
                emit_lincomb(&m.col(ai), &algebra.labels)
            ));
        }
    }
    out.push('\n');
}

/// Serialize a whole document; `parse_hgx` of the result reproduces the same
/// tables.
pub fn emit_document(doc: &HgxDocument) -> String {
    let mut out = String::new();
    out.push_str(&emit_field(&doc.field));
    out.push_str("\n\n");
    for (name, obj) in &doc.objects {
        match obj {
            HgxObject::Hopf(h) => emit_hopf(&mut out, name, h),
            HgxObject::Algebra(a) => emit_algebra(&mut out, name, a),
            HgxObject::ComoduleAlgebra { hopf_name, data } => {
                emit_comodule(&mut out, name, hopf_name, data)
            }
            HgxObject::Action {
                hopf_name,
                algebra_name,
                matrices,
            } => {
                // references were validated at construction
                let hopf = match doc.get(hopf_name) {
                    Some(HgxObject::Hopf(h)) => Arc::clone(h),
                    _ => continue,
                };
                let algebra = match doc.get(algebra_name) {
                    Some(HgxObject::Algebra(a)) => Arc::clone(a),
                    Some(HgxObject::ComoduleAlgebra { data, .. }) => Arc::clone(&data.algebra),
                    _ => continue,
                };
                emit_action(
                    &mut out,
                    name,
                    hopf_name,
                    &hopf,
                    algebra_name,
                    &algebra,
                    matrices,
                );
            }
            HgxObject::Module {
                over_name,
                labels,
                matrices,
                ..
            } => {
                out.push_str(&format!("[module {name} over {over_name}]\n"));
                out.push_str(&format!("basis {}\n", labels.join(" ")));
                let over = match doc.get(over_name) {
                    Some(HgxObject::Algebra(a)) => Arc::clone(a),
                    Some(HgxObject::ComoduleAlgebra { data, .. }) => Arc::clone(&data.algebra),
                    _ => continue,
                };
                for (ai, m) in matrices.iter().enumerate() {
                    for mi in 0..labels.len() {
                        out.push_str(&format!(
                            "act: {} on {} = {}\n",
                            over.labels[ai],
                            labels[mi],
                            emit_lincomb(&m.col(mi), labels)
                        ));
                    }
                }
                out.push('\n');
            }
            HgxObject::Character { hopf_name, values } => {
                out.push_str(&format!("[character {name} of {hopf_name}]\n"));
                let hopf = match doc.get(hopf_name) {
                    Some(HgxObject::Hopf(h)) => Arc::clone(h),
                    _ => continue,
                };
                for (hi, v) in values.iter().enumerate() {
                    out.push_str(&format!(
                        "chi: {} = {}\n",
                        hopf.labels()[hi],
                        emit_scalar(v)
                    ));
                }
                out.push('\n');
            }
            HgxObject::Cocycle {
                hopf_name,
                base_name,
                omega,
                sigma,
            } => {
                out.push_str(&format!("[cocycle {name} of {hopf_name} into {base_name}]\n"));
                let hopf = match doc.get(hopf_name) {
                    Some(HgxObject::Hopf(h)) => Arc::clone(h),
                    _ => continue,
                };
                let base = match doc.get(base_name) {
                    Some(HgxObject::Algebra(a)) => Arc::clone(a),
                    Some(HgxObject::ComoduleAlgebra { data, .. }) => Arc::clone(&data.algebra),
                    _ => continue,
                };
                for (hi, m) in omega.iter().enumerate() {
                    for bi in 0..base.dim {
                        out.push_str(&format!(
                            "omega: {} on {} = {}\n",
                            hopf.labels()[hi],
                            base.labels[bi],
                            emit_lincomb(&m.col(bi), &base.labels)
                        ));
                    }
                }
                for (hi, row) in sigma.iter().enumerate() {
                    for (ki, v) in row.iter().enumerate() {
                        out.push_str(&format!(
                            "sigma: {} , {} = {}\n",
                            hopf.labels()[hi],
                            hopf.labels()[ki],
                            emit_lincomb(v, &base.labels)
                        ));
                    }
                }
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{additive_hopf, artin_schreier_comodule, builtin_trig, trig_hopf};

    #[test]
    fn minimal_document() {
        let text = "\
field rational

[hopf K]
basis 1
unit: = 1
m: 1 * 1 = 1
delta: 1 = 1 (x) 1
counit: 1 = 1
antipode: 1 = 1
";
        let doc = parse_hgx(text).unwrap();
        assert_eq!(doc.objects.len(), 1);
        match doc.get("K") {
            Some(HgxObject::Hopf(h)) => assert!(h.check_hopf_axioms().all_passed()),
            _ => panic!("expected a hopf object"),
        }
    }

    #[test]
    fn artin_schreier_round_trip() {
        let h = additive_hopf(2, 1).unwrap();
        let s = artin_schreier_comodule(&h, &h.field().one()).unwrap();
        let doc = HgxDocument {
            field: h.field().clone(),
            objects: vec![
                ("H".into(), HgxObject::Hopf(Arc::clone(&h))),
                (
                    "S".into(),
                    HgxObject::ComoduleAlgebra {
                        hopf_name: "H".into(),
                        data: Arc::clone(&s),
                    },
                ),
            ],
        };
        let text = emit_document(&doc);
        let parsed = parse_hgx(&text).unwrap_or_else(|d| {
            panic!("round trip failed: {}", d[0]);
        });
        match parsed.get("S") {
            Some(HgxObject::ComoduleAlgebra { data, .. }) => {
                assert_eq!(data.coaction, s.coaction);
                assert_eq!(data.algebra.mult, s.algebra.mult);
                assert!(data.axiom_report().all_passed());
            }
            _ => panic!("expected a comodule algebra"),
        }
        // emission is deterministic
        assert_eq!(text, emit_document(&doc));
    }

    #[test]
    fn rational_hopf_round_trip() {
        let h = trig_hopf().unwrap();
        let doc = HgxDocument {
            field: h.field().clone(),
            objects: vec![("Htrig".into(), HgxObject::Hopf(Arc::clone(&h)))],
        };
        let text = emit_document(&doc);
        let parsed = parse_hgx(&text).unwrap();
        match parsed.get("Htrig") {
            Some(HgxObject::Hopf(p)) => {
                assert_eq!(p.algebra.mult, h.algebra.mult);
                assert_eq!(p.coalgebra.comult, h.coalgebra.comult);
                assert_eq!(p.antipode, h.antipode);
            }
            _ => panic!("expected hopf"),
        }
    }

    #[test]
    fn dual_hopf_labels_round_trip() {
        // dual labels carry a `*` suffix; whitespace tokenization keeps them
        let trig = builtin_trig().unwrap();
        let doc = HgxDocument {
            field: trig.dual.field().clone(),
            objects: vec![
                ("Hd".into(), HgxObject::Hopf(Arc::clone(&trig.dual))),
                (
                    "A".into(),
                    HgxObject::ComoduleAlgebra {
                        hopf_name: "Hd".into(),
                        data: Arc::clone(&trig.comodule),
                    },
                ),
            ],
        };
        let text = emit_document(&doc);
        let parsed = parse_hgx(&text).unwrap_or_else(|d| panic!("{}", d[0]));
        match parsed.get("A") {
            Some(HgxObject::ComoduleAlgebra { data, .. }) => {
                assert_eq!(data.coaction, trig.comodule.coaction);
            }
            _ => panic!("expected comodule algebra"),
        }
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let text = "\
field rational

[hopf K]
basis 1
unit: = 1
m: 1 * 1 = 1 + zz
delta: 1 = 1 (x) 1
counit: 1 = 1
antipode: 1 = 1
";
        let err = parse_hgx(text).unwrap_err();
        assert!(err.iter().any(|d| d.line == 6 && d.message.contains("zz")));
        // undeclared reference
        let text = "\
field rational

[comodule-algebra S over H]
basis 1
unit: = 1
m: 1 * 1 = 1
rho: 1 = 1 (x) 1
";
        let err = parse_hgx(text).unwrap_err();
        assert!(err.iter().any(|d| d.message.contains("undeclared")));
        // incomplete table
        let text = "\
field finite p=2 d=1

[algebra B]
basis e0 e1
unit: = e0 + e1
m: e0 * e0 = e0
";
        let err = parse_hgx(text).unwrap_err();
        assert!(err.iter().any(|d| d.message.contains("incomplete")));
    }

    #[test]
    fn parser_is_total_on_fuzz_corpus() {
        // pseudo-random token soup must never panic
        let fragments = [
            "field", "rational", "finite", "p=2", "d=1", "[hopf", "H]", "[algebra", "basis",
            "unit:", "m:", "delta:", "counit:", "antipode:", "rho:", "chi:", "sigma:", "omega:",
            "act:", "=", "*", "+", "-", "(x)", "1", "x", "t+1", "1/2", "]", "[", "over", "of",
            "on", ",", "generators:", "0", "-3/7", "p=4", "d=0", "modulus=t^2", "##", "e0",
        ];
        let mut state: u64 = 12345;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..10_000 {
            let len = (next() % 40) as usize;
            let mut text = String::new();
            for _ in 0..len {
                text.push_str(fragments[(next() % fragments.len() as u64) as usize]);
                if next() % 4 == 0 {
                    text.push('\n');
                } else {
                    text.push(' ');
                }
            }
            let _ = parse_hgx(&text);
        }
    }
}

#[cfg(test)]
mod crossed_product_export_tests {
    use super::*;
    use crate::builtins::{additive_hopf, artin_schreier_comodule};
    use crate::cleft::{crossed_product, extract_sigma, find_total_integral};
    use crate::galois::coinvariants;

    #[test]
    fn crossed_products_reingest() {
        // labels of a crossed product contain `#`; the comment rule must not
        // swallow them
        let h = additive_hopf(2, 1).unwrap();
        let s = artin_schreier_comodule(&h, &h.field().one()).unwrap();
        let coinv = coinvariants(&s).unwrap();
        let t = find_total_integral(&s, 1 << 20).unwrap().found().unwrap();
        let sigma = extract_sigma(&s, &coinv, &t).unwrap();
        let crossed = crossed_product(&sigma).unwrap();
        let doc = HgxDocument {
            field: h.field().clone(),
            objects: vec![
                ("H".into(), HgxObject::Hopf(Arc::clone(&h))),
                (
                    "X".into(),
                    HgxObject::ComoduleAlgebra {
                        hopf_name: "H".into(),
                        data: Arc::clone(&crossed),
                    },
                ),
            ],
        };
        let text = emit_document(&doc);
        let parsed = parse_hgx(&text).unwrap_or_else(|d| panic!("{}", d[0]));
        match parsed.get("X") {
            Some(HgxObject::ComoduleAlgebra { data, .. }) => {
                assert_eq!(data.algebra.mult, crossed.algebra.mult);
                assert_eq!(data.coaction, crossed.coaction);
                assert!(data.axiom_report().all_passed());
            }
            _ => panic!("crossed product did not round trip"),
        }
        // and real comments still work
        let commented = format!("# leading comment\n{text}# trailing comment line\n");
        assert!(parse_hgx(&commented).is_ok());
    }
}
