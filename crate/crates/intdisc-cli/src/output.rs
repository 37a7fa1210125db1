//! Ordered key/value reports rendered either as `key = value` lines or JSON.

use serde_json::{Map, Number, Value};

#[derive(Default, Debug, Clone)]
pub struct Report {
    entries: Map<String, Value>,
}

/// A float as JSON; non-finite values become strings.
pub fn num(x: f64) -> Value {
    Number::from_f64(x).map(Value::Number).unwrap_or_else(|| Value::String(x.to_string()))
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn put(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.entries.insert(key.to_string(), v.into());
        self
    }

    pub fn float(&mut self, key: &str, x: f64) -> &mut Self {
        self.put(key, num(x))
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.entries)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.entries).expect("serializable");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        for (k, v) in &self.entries {
            flatten(k, v, &mut out);
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&format!("{prefix}.{k}"), x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix} = {s}\n")),
        other => out.push_str(&format!("{prefix} = {other}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_and_json_share_numbers() {
        let mut r = Report::new();
        r.float("x", 0.1 + 0.2).put("name", "2|4").put("rows", serde_json::json!([{ "a": 1 }, { "a": 2 }]));
        let plain = r.render(false);
        assert_eq!(plain, "x = 0.30000000000000004\nname = 2|4\nrows.0.a = 1\nrows.1.a = 2\n");
        let json: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(json["x"].as_f64().unwrap(), 0.1 + 0.2);
        assert_eq!(num(f64::INFINITY), Value::String("inf".into()));
    }
}
