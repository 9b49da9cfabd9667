use serde_json::Value;

use super::Format;

pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(doc).expect("serializable")),
        Format::Table => {
            let mut out = String::new();
            table(doc, "", &mut out);
            out
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Object(m) if m.contains_key("num") && m.contains_key("den") => {
            let (n, d) = (scalar(&m["num"]), scalar(&m["den"]));
            if d == "1" {
                n
            } else {
                format!("{n}/{d}")
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            a.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

fn is_rational(v: &Value) -> bool {
    v.as_object()
        .is_some_and(|m| m.contains_key("num") && m.contains_key("den"))
}

fn table(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(m) if !is_rational(v) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                table(x, &key, out);
            }
        }
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(Value::is_object) => {
            out.push_str(&format!("{prefix}:\n"));
            grid(rows, out);
        }
        other => out.push_str(&format!("{prefix}: {}\n", scalar(other))),
    }
}

fn grid(rows: &[Value], out: &mut String) {
    let mut header: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("object rows").keys() {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| header.iter().map(|h| r.get(h).map_or("-".into(), scalar)).collect())
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            cells
                .iter()
                .map(|c| c[i].chars().count())
                .chain([header[i].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:<w$}"))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(&header));
    for c in &cells {
        out.push_str(&line(c));
    }
}
