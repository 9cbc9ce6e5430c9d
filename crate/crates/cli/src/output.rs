//! Reports and their JSON / CSV rendering. Floats are written like C's
//! `%.15g`.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{Map, Value};

pub fn fmt15(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if (-5..15).contains(&exp) {
        trim_zeros(format!("{:.*}", (14 - exp) as usize, x))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa.to_string()), exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

struct Sig15;

impl Formatter for Sig15 {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        w.write_all(fmt15(v).as_bytes())
    }
}

/// One-line JSON with `%.15g` floats; non-finite numbers become `null`.
pub fn to_json(v: &impl Serialize) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig15);
    v.serialize(&mut ser).expect("serializing to memory");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn xy(z: cap_core::C64) -> Value {
    nums(&[z.re, z.im])
}

/// Rows for CSV output.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| fmt15(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// What a command produced: JSON fields in order, the same data as a table,
/// and the ν-constancy deviation of the solves behind it.
#[derive(Debug, Clone)]
pub struct Report {
    pub fields: Map<String, Value>,
    pub table: Table,
    pub nu_deviation: f64,
    pub n: usize,
}

impl Report {
    pub fn new(fields: Map<String, Value>, table: Table, nu_deviation: f64, n: usize) -> Self {
        Self { fields, table, nu_deviation, n }
    }

    pub fn to_json(&self, wall_time: Option<f64>) -> String {
        let mut m = self.fields.clone();
        m.insert("nu_deviation".into(), num(self.nu_deviation));
        m.insert("n".into(), Value::from(self.n));
        if let Some(t) = wall_time {
            m.insert("wall_time_s".into(), num(t));
        }
        let mut s = to_json(&Value::Object(m));
        s.push('\n');
        s
    }
}
