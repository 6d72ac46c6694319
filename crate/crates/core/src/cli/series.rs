use std::io::{self, Write};

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

/// Sampled observables with the metadata needed to rerun them.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    /// Named columns in output order, each as long as `times`.
    pub columns: Vec<(String, Vec<f64>)>,
    /// `key: value` pairs written as `#` comment lines.
    pub metadata: Vec<(String, String)>,
}

impl TimeSeries {
    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    pub fn metadata(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn write_csv(&self, mut w: impl Write) -> io::Result<()> {
        for (k, v) in &self.metadata {
            writeln!(w, "# {k}: {v}")?;
        }
        let header: Vec<&str> = std::iter::once("t")
            .chain(self.columns.iter().map(|(n, _)| n.as_str()))
            .collect();
        writeln!(w, "{}", header.join(","))?;
        for (i, t) in self.times.iter().enumerate() {
            let row: Vec<String> = std::iter::once(*t)
                .chain(self.columns.iter().map(|(_, v)| v[i]))
                .map(format_number)
                .collect();
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII plus UTF-8 metadata")
    }
}
