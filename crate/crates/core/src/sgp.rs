//! Reading and writing Cayley tables.
//!
//! Two formats are supported:
//!
//! * plain text (".sgp"): UTF-8, `#`-lines are comments, first token is the
//!   order `n`, followed by exactly `n * n` entries row-major;
//! * structured JSON: an object `{"order": n, "table": [[...], ...]}` with an
//!   optional `"labels"` array.
//!
//! Both parsers reject trailing garbage. Group-action tables use the same
//! token grammar with a two-number header (point count, group order).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Serialization mirror of a semigroup table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl RawTable {
    pub fn from_semigroup(s: &FiniteSemigroup) -> RawTable {
        RawTable {
            order: s.order(),
            table: (0..s.order()).map(|a| s.row(a).to_vec()).collect(),
            labels: s.labels().map(|ls| ls.to_vec()),
        }
    }

    pub fn into_semigroup(self) -> Result<FiniteSemigroup> {
        let s = FiniteSemigroup::new(self.order, &self.table)?;
        match self.labels {
            Some(labels) => s.with_labels(labels),
            None => Ok(s),
        }
    }
}

fn tokens(input: &str) -> impl Iterator<Item = &str> {
    input
        .lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .flat_map(|line| line.split_whitespace())
}

fn parse_usize(tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("expected {what}, found {tok:?}")))
}

/// Parses the plain-text table format.
pub fn parse_text(input: &str) -> Result<FiniteSemigroup> {
    let mut toks = tokens(input);
    let order = parse_usize(
        toks.next()
            .ok_or_else(|| Error::Parse("empty input".into()))?,
        "the order",
    )?;
    if order == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    let mut flat = Vec::with_capacity(order * order);
    for _ in 0..order * order {
        let tok = toks.next().ok_or_else(|| {
            Error::Parse(format!(
                "table ended early: expected {} entries",
                order * order
            ))
        })?;
        flat.push(parse_usize(tok, "a table entry")?);
    }
    if let Some(extra) = toks.next() {
        return Err(Error::Parse(format!(
            "trailing garbage after table: {extra:?}"
        )));
    }
    FiniteSemigroup::from_flat(order, flat)
}

/// Renders the plain-text table format; output re-parses to an equal table.
pub fn format_text(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", s.order()));
    out.push_str(&s.to_string());
    out
}

/// Parses the structured JSON format.
pub fn parse_json(input: &str) -> Result<FiniteSemigroup> {
    let raw: RawTable = serde_json::from_str(input)
        .map_err(|e| Error::Parse(format!("invalid JSON table: {e}")))?;
    raw.into_semigroup()
}

pub fn format_json(s: &FiniteSemigroup) -> String {
    serde_json::to_string_pretty(&RawTable::from_semigroup(s)).expect("table serializes")
}

/// Dispatches on the first non-space byte: `{` means JSON, anything else the
/// plain-text format.
pub fn parse_auto(input: &str) -> Result<FiniteSemigroup> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

/// A parsed right-action table: `rows[x][g]` is the image of point `x` under
/// group element `g`. Validation against a concrete group happens in
/// [`crate::gset::GSet::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    pub points: usize,
    pub group_order: usize,
    pub rows: Vec<Vec<usize>>,
}

/// Parses an action table: header `m g`, then `m * g` point ids.
pub fn parse_action_text(input: &str) -> Result<ActionTable> {
    let mut toks = tokens(input);
    let points = parse_usize(
        toks.next()
            .ok_or_else(|| Error::Parse("empty input".into()))?,
        "the point count",
    )?;
    let group_order = parse_usize(
        toks.next()
            .ok_or_else(|| Error::Parse("missing group order".into()))?,
        "the group order",
    )?;
    if points == 0 || group_order == 0 {
        return Err(Error::Parse("action dimensions must be positive".into()));
    }
    let mut rows = Vec::with_capacity(points);
    for _ in 0..points {
        let mut row = Vec::with_capacity(group_order);
        for _ in 0..group_order {
            let tok = toks
                .next()
                .ok_or_else(|| Error::Parse("action table ended early".into()))?;
            let v = parse_usize(tok, "a point id")?;
            if v >= points {
                return Err(Error::Parse(format!("point id {v} out of range")));
            }
            row.push(v);
        }
        rows.push(row);
    }
    if let Some(extra) = toks.next() {
        return Err(Error::Parse(format!(
            "trailing garbage after action table: {extra:?}"
        )));
    }
    Ok(ActionTable {
        points,
        group_order,
        rows,
    })
}
