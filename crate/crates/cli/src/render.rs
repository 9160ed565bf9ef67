//! Text, JSON and CSV renderings of computed values.

use serde_json::{json, Map, Value as Json};

use polyb::exactmath::{BiPoly, Integer, Rational, UniPoly};

#[derive(Debug, Clone)]
pub enum Output {
    Int(Integer),
    Rat(Rational),
    Poly(UniPoly),
    BiPoly(BiPoly),
}

impl Output {
    pub fn text(&self) -> String {
        match self {
            Output::Int(v) => v.to_string(),
            Output::Rat(v) => v.to_string(),
            Output::Poly(p) => p.to_string(),
            Output::BiPoly(p) => p.to_string(),
        }
    }

    /// Scalars as decimal strings; polynomials as `{"vars", "terms"}`.
    pub fn json(&self) -> Json {
        match self {
            Output::Int(v) => Json::String(v.to_string()),
            Output::Rat(v) => Json::String(v.to_string()),
            Output::Poly(p) => {
                let terms: Vec<Json> = p
                    .terms_desc()
                    .map(|(d, c)| json!({"exps": [d], "coeff": c.to_string()}))
                    .collect();
                json!({"vars": ["x"], "terms": terms})
            }
            Output::BiPoly(p) => {
                let terms: Vec<Json> = p
                    .terms_graded()
                    .into_iter()
                    .map(|((dx, dy), c)| json!({"exps": [dx, dy], "coeff": c.to_string()}))
                    .collect();
                json!({"vars": ["x", "y"], "terms": terms})
            }
        }
    }
}

/// `{"target", "params", "value"}`.
pub fn value_record(target: &str, params: &[(&str, String)], value: &Output) -> Json {
    let params: Map<String, Json> = params
        .iter()
        .map(|(name, v)| {
            let v = v
                .parse::<u64>()
                .map(Json::from)
                .unwrap_or_else(|_| Json::String(v.clone()));
            (name.to_string(), v)
        })
        .collect();
    json!({"target": target, "params": params, "value": value.json()})
}

/// Writes CSV rows to a string.
pub fn csv_rows<I, R>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    for row in rows {
        let fields: Vec<String> = row.into_iter().collect();
        w.write_record(&fields).expect("writing CSV to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing CSV to memory")).expect("CSV is UTF-8")
}
