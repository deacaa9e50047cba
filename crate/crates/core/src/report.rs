//! Versioned report types shared by the command line and the harnesses, and
//! their CSV encodings. Wall time is recorded only when requested so that
//! reports are byte-identical across runs.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::constructions::Provenance;
use crate::error::{Error, Result};

/// Identifies the JSON layout; bumped on any incompatible change.
pub const SCHEMA: &str = "shallowcc.report/1";

/// Parameters the toolkit can compute for a single graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    /// Clique cover number.
    Beta,
    /// Neighbourhood clique cover number.
    NbrBeta,
    /// Clique cover width.
    Ccw,
    BetaHat,
    Grad,
    /// Largest clique cover width over the shallow minors.
    KT,
    PT,
    ST,
    /// Leaves of a largest induced star.
    S,
    /// Side of a largest balanced induced biclique.
    P,
    Degeneracy,
}

impl Param {
    pub const ALL: [Param; 11] = [
        Param::Beta,
        Param::NbrBeta,
        Param::Ccw,
        Param::BetaHat,
        Param::Grad,
        Param::KT,
        Param::PT,
        Param::ST,
        Param::S,
        Param::P,
        Param::Degeneracy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::Beta => "beta",
            Param::NbrBeta => "nbr_beta",
            Param::Ccw => "ccw",
            Param::BetaHat => "beta_hat",
            Param::Grad => "grad",
            Param::KT => "k_t",
            Param::PT => "p_t",
            Param::ST => "s_t",
            Param::S => "s",
            Param::P => "p",
            Param::Degeneracy => "degeneracy",
        }
    }

    /// Whether the value depends on the minor depth.
    pub fn uses_depth(self) -> bool {
        matches!(self, Param::BetaHat | Param::Grad | Param::KT | Param::PT | Param::ST)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Param> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Param::ALL.iter().map(|p| p.name()).collect();
                Error::validation(format!("unknown parameter {s}; expected one of {}", names.join(", ")))
            })
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Direction of a value that may not be exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    Exact,
    LowerBound,
    UpperBound,
}

/// Exact nonnegative rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Value(pub Ratio<u64>);

impl Value {
    pub fn int(v: usize) -> Value {
        Value(Ratio::from_integer(v as u64))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Value", 3)?;
        s.serialize_field("num", self.0.numer())?;
        s.serialize_field("den", self.0.denom())?;
        s.serialize_field("text", &self.to_string())?;
        s.end()
    }
}

/// One computed parameter. `id` is the reference used by CSV rows.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParamResult {
    pub id: String,
    pub param: Param,
    pub t: Option<usize>,
    pub value: Value,
    pub bound: Bound,
    pub exhaustive: bool,
    /// Minor models examined, for minor-maximized parameters.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub models: Option<u64>,
    pub witness: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

/// A computation that produced no value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamError {
    pub param: Param,
    pub t: Option<usize>,
    pub kind: &'static str,
    pub message: String,
}

impl ParamError {
    pub fn new(param: Param, t: Option<usize>, err: &Error) -> ParamError {
        ParamError {
            param,
            t,
            kind: err.kind(),
            message: err.to_string(),
        }
    }
}

/// Where a graph came from; enough to rebuild it.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Input {
    File { path: String, format: String },
    Construct { provenance: Provenance },
    Corpus { spec: String, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Requested {
    pub params: Vec<Param>,
    pub t: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSize {
    pub n: usize,
    pub m: usize,
}

/// Output of `compute` for one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParamReport {
    pub schema: &'static str,
    pub version: &'static str,
    pub input: Input,
    pub graph_id: String,
    pub graph: GraphSize,
    pub requested: Requested,
    pub caps: Caps,
    pub results: Vec<ParamResult>,
    pub errors: Vec<ParamError>,
}

impl ParamReport {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Fixed column order of the value table.
pub const VALUE_COLUMNS: [&str; 8] = [
    "graph_id",
    "n",
    "m",
    "param",
    "value_num",
    "value_den",
    "exhaustive",
    "witness_ref",
];

#[derive(Serialize)]
struct ValueRow<'a> {
    graph_id: &'a str,
    n: usize,
    m: usize,
    param: String,
    value_num: u64,
    value_den: u64,
    exhaustive: bool,
    witness_ref: &'a str,
}

/// A graph's results, ready for the value table.
pub struct ValueTable<'a> {
    pub graph_id: &'a str,
    pub graph: GraphSize,
    pub results: &'a [ParamResult],
}

/// Writes the value table; parameters with a depth are named `param@t`.
pub fn write_value_csv<W: Write>(out: W, tables: &[ValueTable<'_>]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(VALUE_COLUMNS).map_err(csv_error)?;
    for table in tables {
        for r in table.results {
            w.serialize(ValueRow {
                graph_id: table.graph_id,
                n: table.graph.n,
                m: table.graph.m,
                param: match r.t {
                    Some(t) => format!("{}@{t}", r.param),
                    None => r.param.to_string(),
                },
                value_num: *r.value.0.numer(),
                value_den: *r.value.0.denom(),
                exhaustive: r.exhaustive,
                witness_ref: &r.id,
            })
            .map_err(csv_error)?;
        }
    }
    w.flush().map_err(|e| Error::validation(format!("writing csv: {e}")))
}

pub(crate) fn csv_error(e: csv::Error) -> Error {
    Error::validation(format!("writing csv: {e}"))
}

/// Writes serializable rows under a header row.
pub(crate) fn write_rows<W: Write, R: Serialize>(out: W, rows: &[R]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(csv_error)?;
    }
    w.flush().map_err(|e| Error::validation(format!("writing csv: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_names_round_trip() {
        for p in Param::ALL {
            assert_eq!(p.name().parse::<Param>().unwrap(), p);
        }
        assert!("bogus".parse::<Param>().is_err());
    }

    #[test]
    fn value_text() {
        assert_eq!(Value(Ratio::new(3, 2)).to_string(), "3/2");
        assert_eq!(Value::int(4).to_string(), "4");
        assert_eq!(
            serde_json::to_string(&Value(Ratio::new(6, 4))).unwrap(),
            r#"{"num":3,"den":2,"text":"3/2"}"#
        );
    }

    #[test]
    fn value_csv_layout() {
        let r = ParamResult {
            id: "g#grad@1".into(),
            param: Param::Grad,
            t: Some(1),
            value: Value(Ratio::new(3, 2)),
            bound: Bound::Exact,
            exhaustive: true,
            models: Some(10),
            witness: serde_json::Value::Null,
            wall_ms: None,
        };
        let mut buf = Vec::new();
        write_value_csv(
            &mut buf,
            &[ValueTable {
                graph_id: "g",
                graph: GraphSize { n: 4, m: 6 },
                results: &[r],
            }],
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "graph_id,n,m,param,value_num,value_den,exhaustive,witness_ref\ng,4,6,grad@1,3,2,true,g#grad@1\n"
        );
    }
}
