use serde::Serialize;
use serde_json::{Map, Value};

/// One invocation's structured record.
#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub status: Status,
    pub diagnostics: Vec<String>,
    /// Insertion order of `inputs` and `outputs` for the text form; JSON
    /// objects are key-sorted.
    #[serde(skip)]
    order: Vec<(bool, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

impl CommandResult {
    pub fn new(command: impl Into<String>) -> Self {
        CommandResult {
            command: command.into(),
            inputs: Map::new(),
            outputs: Map::new(),
            status: Status::Ok,
            diagnostics: Vec::new(),
            order: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        if self.inputs.insert(key.to_string(), value.into()).is_none() {
            self.order.push((true, key.to_string()));
        }
        self
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        if self.outputs.insert(key.to_string(), value.into()).is_none() {
            self.order.push((false, key.to_string()));
        }
        self
    }

    pub fn diagnostic(&mut self, msg: impl Into<String>) -> &mut Self {
        self.diagnostics.push(msg.into());
        self
    }

    pub fn fail(&mut self, msg: impl Into<String>) -> &mut Self {
        self.status = Status::Error;
        self.diagnostic(msg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    /// `key=value` lines: command, inputs (`input.` prefix), outputs,
    /// status, diagnostics.
    pub fn to_text(&self) -> String {
        let mut out = format!("command={}\n", self.command);
        for (is_input, key) in &self.order {
            let (prefix, map) = if *is_input {
                ("input.", &self.inputs)
            } else {
                ("", &self.outputs)
            };
            out.push_str(&format!("{prefix}{key}={}\n", plain(&map[key])));
        }
        out.push_str(&format!(
            "status={}\n",
            match self.status {
                Status::Ok => "ok",
                Status::Error => "error",
            }
        ));
        for d in &self.diagnostics {
            out.push_str(&format!("diagnostic={d}\n"));
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// A float with 17 significant digits.
pub fn float(x: f64) -> Value {
    Value::String(format!("{x:.16e}"))
}

pub fn floats(xs: &[f64]) -> Value {
    Value::String(xs.iter().map(|x| format!("{x:.16e}")).collect::<Vec<_>>().join(","))
}

pub fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(|x| Value::String(x.to_string())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_keeps_insertion_order() {
        let mut r = CommandResult::new("g2 eval");
        r.input("curve", "2/1,3/1,5/1")
            .output("h0", "-16/1")
            .output("all_zero", true);
        assert_eq!(
            r.to_text(),
            "command=g2 eval\ninput.curve=2/1,3/1,5/1\nh0=-16/1\nall_zero=true\nstatus=ok\n"
        );
        let j: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(j["outputs"]["h0"], "-16/1");
        assert_eq!(j["status"], "ok");
    }

    #[test]
    fn floats_have_17_digits() {
        assert_eq!(float(0.1), Value::String("1.0000000000000001e-1".into()));
    }
}
