//! Plain text rendering of JSON reports.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) if s.is_empty() => "(identity)".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, lines: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, lines);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            lines.push((prefix.to_string(), joined.join(" ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, lines);
            }
        }
        _ => lines.push((prefix.to_string(), scalar(v))),
    }
}

/// Aligned table of an array of flat objects; columns in key order.
pub fn table(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return "(no rows)\n".into();
    };
    let columns: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| columns.iter().map(|c| scalar(&r[c.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<&str>| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(columns.iter().map(|c| c.as_str()).collect());
    for r in &cells {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

/// `key: value` lines; a `result.rows` array becomes a table at the end.
pub fn render_text(report: &Value) -> String {
    let mut report = report.clone();
    let rows = report
        .get_mut("result")
        .and_then(|r| r.as_object_mut())
        .and_then(|r| r.remove("rows"));
    let mut lines = Vec::new();
    flatten("", &report, &mut lines);
    let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out: String = lines
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect();
    if let Some(Value::Array(rows)) = rows {
        out.push('\n');
        out += &table(&rows);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_nested_values() {
        let v = json!({"command":"solve","result":{"verdict":"conjugate","witness":""},"stats":null});
        let text = render_text(&v);
        assert!(text.contains("result.witness  (identity)"));
        assert!(text.contains("stats"));
    }

    #[test]
    fn renders_tables() {
        let rows = vec![json!({"a": "x", "bb": 1}), json!({"a": "long", "bb": null})];
        assert_eq!(table(&rows), "a     bb\nx     1\nlong  -\n");
        assert_eq!(table(&[]), "(no rows)\n");
    }
}
