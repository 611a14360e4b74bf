//! Plain-text view of a result document: one `key: value` line per scalar
//! field, nested objects indented, short arrays inline.

use serde_json::Value;

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) => {
            let parts: Option<Vec<String>> = a.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", "))).filter(|s| s.len() <= 100)
        }
        Value::Object(m) if m.is_empty() => Some("{}".into()),
        Value::Object(_) => None,
    }
}

fn walk(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        // first field goes on the bullet line
                        let mut inner = String::new();
                        walk(x, depth + 1, &mut inner);
                        match inner.get(pad.len() + 2..) {
                            Some(rest) if !rest.is_empty() => out.push_str(&format!("{pad}- {rest}")),
                            _ => out.push_str(&format!("{pad}- {{}}\n")),
                        }
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_layout() {
        let v = json!({ "a": 1, "b": { "c": [1, "2/3"] }, "d": [{ "e": true, "f": null }, {}] });
        assert_eq!(
            text(&v),
            "a: 1\nb:\n  c: [1, 2/3]\nd:\n  - e: true\n    f: none\n  - {}\n"
        );
    }
}
