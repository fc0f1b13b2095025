//! JSON and TSV renderings. Every output type serializes to JSON and has a
//! TSV form carrying the same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use weylab_core::characters::{Character, Decomposition};
use weylab_core::embed::EmbeddingSpec;
use weylab_core::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

pub trait Render: Serialize {
    fn tsv(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
                s.push('\n');
                s
            }
            Format::Tsv => self.tsv(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMult {
    pub wt: String,
    pub mult: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub highest: String,
    pub dim: u128,
    pub weights: Vec<WeightMult>,
}

impl CharacterOut {
    pub fn new(highest: &Weight, ch: &Character) -> CharacterOut {
        CharacterOut {
            ty: ch.cartan_type().to_string(),
            highest: highest.to_string(),
            dim: ch.dim(),
            weights: ch
                .iter()
                .map(|(w, &m)| WeightMult {
                    wt: w.to_string(),
                    mult: m,
                })
                .collect(),
        }
    }
}

impl Render for CharacterOut {
    fn tsv(&self) -> String {
        let mut s = format!("# type={} highest={} dim={}\nwt\tmult\n", self.ty, self.highest, self.dim);
        for w in &self.weights {
            let _ = writeln!(s, "{}\t{}", w.wt, w.mult);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub hw: String,
    pub mult: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionOut {
    pub factors: Vec<Factor>,
}

impl DecompositionOut {
    pub fn new(d: &Decomposition) -> DecompositionOut {
        DecompositionOut {
            factors: d
                .iter()
                .map(|(w, &m)| Factor {
                    hw: w.to_string(),
                    mult: m,
                })
                .collect(),
        }
    }
}

impl Render for DecompositionOut {
    fn tsv(&self) -> String {
        let mut s = String::from("hw\tmult\n");
        for f in &self.factors {
            let _ = writeln!(s, "{}\t{}", f.hw, f.mult);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingOut {
    pub x: String,
    pub delta: String,
    pub dim: u128,
    pub form: String,
    pub ambient: String,
    pub theta: Vec<String>,
}

impl EmbeddingOut {
    pub fn new(spec: &EmbeddingSpec) -> EmbeddingOut {
        EmbeddingOut {
            x: spec.x_type.to_string(),
            delta: spec.delta.to_string(),
            dim: spec.dim,
            form: spec.form.to_string(),
            ambient: spec.ambient.to_string(),
            theta: spec.theta.iter().map(|t| t.to_string()).collect(),
        }
    }
}

impl Render for EmbeddingOut {
    fn tsv(&self) -> String {
        format!(
            "x\t{}\ndelta\t{}\ndim\t{}\nform\t{}\nambient\t{}\ntheta\t{}\n",
            self.x,
            self.delta,
            self.dim,
            self.form,
            self.ambient,
            self.theta.join(";")
        )
    }
}

/// A restriction: the embedding used and the factors found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionOut {
    pub embedding: EmbeddingOut,
    pub lambda: String,
    pub factors: Vec<Factor>,
}

impl Render for RestrictionOut {
    fn tsv(&self) -> String {
        let mut s = self.embedding.tsv();
        let _ = writeln!(s, "lambda\t{}", self.lambda);
        s.push_str(&DecompositionOut { factors: self.factors.clone() }.tsv());
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOut {
    pub row: String,
    pub status: String,
    pub checks: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn checks_cell(checks: &BTreeMap<String, bool>) -> String {
    if checks.is_empty() {
        return String::from("-");
    }
    checks
        .iter()
        .map(|(k, v)| format!("{}={}", k, v))
        .collect::<Vec<_>>()
        .join(";")
}

impl Render for ReportOut {
    fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\n",
            self.row,
            self.status,
            checks_cell(&self.checks),
            self.note.as_deref().unwrap_or("-")
        )
    }
}

impl Render for Vec<ReportOut> {
    fn tsv(&self) -> String {
        let mut s = String::from("row\tstatus\tchecks\tnote\n");
        for r in self {
            s.push_str(&r.tsv());
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRow {
    pub level: usize,
    pub dim: u128,
    pub distinct: usize,
    pub shapes: Vec<String>,
    pub factor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternOut {
    pub case: String,
    pub labels: BTreeMap<usize, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelsOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub delta: String,
    pub subset: String,
    pub ell: usize,
    pub levels: Vec<LevelRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub patterns: Vec<PatternOut>,
}

impl Render for LevelsOut {
    fn tsv(&self) -> String {
        let mut s = format!(
            "# type={} delta={} subset={} ell={}\nlevel\tdim\tdistinct\tshapes\tfactor\n",
            self.ty, self.delta, self.subset, self.ell
        );
        for l in &self.levels {
            let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}", l.level, l.dim, l.distinct, l.shapes.join(";"), l.factor);
        }
        if let Some(ext) = &self.extension {
            let _ = writeln!(s, "# extension={}\ncase\tlabels", ext);
            for p in &self.patterns {
                let labels: Vec<String> = p.labels.iter().map(|(n, a)| format!("{}={}", n, a)).collect();
                let _ = writeln!(s, "{}\t{}", p.case, labels.join(";"));
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub weight: String,
    pub p: u64,
    pub dim: u128,
    pub form: String,
    pub ambient: String,
}

impl Render for FormOut {
    fn tsv(&self) -> String {
        format!("{} → ambient {}\n", self.form, self.ambient)
    }
}

/// A single scalar answer (dimension, multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub weight: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    pub p: u64,
    pub value: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cite: Option<String>,
}

impl Render for ScalarOut {
    fn tsv(&self) -> String {
        format!("{}\n", self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOut {
    #[serde(rename = "type")]
    pub ty: String,
    pub weight: String,
    pub size: usize,
    pub orbit: Vec<String>,
}

impl Render for OrbitOut {
    fn tsv(&self) -> String {
        let mut s = format!("# type={} weight={} size={}\n", self.ty, self.weight, self.size);
        for w in &self.orbit {
            s.push_str(w);
            s.push('\n');
        }
        s
    }
}

impl Render for Vec<crate::FixtureRow> {
    fn tsv(&self) -> String {
        let mut s = String::from("type\tweight\tp\tdim\tform\tcite\n");
        for r in self {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.ty,
                r.weight,
                r.p,
                r.dim,
                r.form.as_deref().unwrap_or("-"),
                r.cite
            );
        }
        s
    }
}

/// Structured error object for the error stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub error: String,
    pub message: String,
}
