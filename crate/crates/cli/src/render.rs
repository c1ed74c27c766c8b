use coskel_core::cubical_cat0::{Cat0Certificate, Cat0Evidence};
use coskel_core::{Coefficients, Group, HomologyProfile};
use serde_json::{json, Value};

use crate::{usage, Failure, Output};

/// A rendered command result and its exit status.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub status: u8,
}

impl Report {
    pub fn new(json: Value, text: String, status: u8) -> Self {
        Report {
            json,
            text,
            csv: None,
            status,
        }
    }

    pub fn render(&self, out: Output) -> Result<String, Failure> {
        match out {
            Output::Text => Ok(self.text.clone()),
            Output::Json => Ok(serde_json::to_string_pretty(&self.json).expect("serializable") + "\n"),
            Output::Csv => self
                .csv
                .clone()
                .ok_or_else(|| usage("csv output is only available for tables and homology")),
        }
    }
}

fn ring(coeff: Coefficients) -> String {
    match coeff {
        Coefficients::Integers => "Z".into(),
        Coefficients::Rationals => "Q".into(),
        Coefficients::PrimeField(p) => format!("F{p}"),
    }
}

/// `Z^2 + Z/2`, or `0`.
pub fn group(coeff: Coefficients, g: &Group) -> String {
    let mut parts = Vec::new();
    match g.rank {
        0 => {}
        1 => parts.push(ring(coeff)),
        r => parts.push(format!("{}^{r}", ring(coeff))),
    }
    parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Degrees `−1..=dim`, plus anything nonzero outside that range.
fn degrees(h: &HomologyProfile, dim: i32) -> Vec<i32> {
    let mut ds: Vec<i32> = (-1..=dim.max(-1)).collect();
    ds.extend(h.nonzero_degrees());
    ds.sort_unstable();
    ds.dedup();
    ds
}

pub fn profile_json(h: &HomologyProfile, dim: i32) -> Value {
    let groups: Vec<Value> = degrees(h, dim)
        .into_iter()
        .map(|i| json!({ "degree": i, "rank": h.rank(i), "torsion": h.torsion(i) }))
        .collect();
    json!({ "coeff": h.coeff, "groups": groups })
}

pub fn profile_text(h: &HomologyProfile, dim: i32, co: bool) -> String {
    let name = if co { "H^" } else { "H_" };
    degrees(h, dim)
        .into_iter()
        .map(|i| format!("{name}{i} = {}\n", group(h.coeff, &h.group(i))))
        .collect()
}

pub fn profile_csv(h: &HomologyProfile, dim: i32) -> String {
    let mut s = String::from("degree,rank,torsion\n");
    for i in degrees(h, dim) {
        let t: Vec<String> = h.torsion(i).iter().map(u64::to_string).collect();
        s += &format!("{i},{},{}\n", h.rank(i), t.join(" "));
    }
    s
}

pub fn certificate(c: &Cat0Certificate) -> String {
    let why = match &c.evidence {
        Cat0Evidence::Disconnected => "complex is disconnected".to_string(),
        Cat0Evidence::NonFlagLink { vertex, clique } => {
            format!(
                "link of {vertex} is not flag, clique {{{}}} spans no face",
                clique.join(", ")
            )
        }
        Cat0Evidence::Homology { degree, group: g } => {
            format!("H_{degree} = {}", group(Coefficients::Integers, g))
        }
        Cat0Evidence::Collapse { flag_links, steps } => {
            format!(
                "{flag_links} flag vertex links, collapsed to a point in {} steps",
                steps.len()
            )
        }
        Cat0Evidence::Stuck {
            flag_links,
            remaining,
        } => {
            format!("{flag_links} flag vertex links, collapse stuck with {remaining} faces left")
        }
    };
    format!("{:?}: {why}", c.verdict)
}
