use num_rational::BigRational;

use crate::error::{Error, Result};

/// 17 significant digits: enough to round-trip any `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Exact rational as `num/den`, always with a denominator.
pub fn fmt_rational(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// A comma-separated table with a header row.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// LF-terminated CSV text.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are UTF-8")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut rd = csv::ReaderBuilder::new().from_reader(text.as_bytes());
        let header: Vec<String> =
            rd.headers().map_err(|e| Error::Parse(e.to_string()))?.iter().map(String::from).collect();
        if header.is_empty() {
            return Err(Error::Parse("empty CSV".into()));
        }
        let rows = rd
            .records()
            .map(|r| r.map(|r| r.iter().map(String::from).collect()).map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<_>>()?;
        Ok(Table { header, rows })
    }

    /// Column `name` parsed as floats.
    pub fn column_f64(&self, name: &str) -> Result<Vec<f64>> {
        let k = self
            .header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Parse(format!("no column '{name}'")))?;
        self.rows
            .iter()
            .map(|r| r[k].parse::<f64>().map_err(|e| Error::Parse(format!("{}: {e}", r[k]))))
            .collect()
    }
}
