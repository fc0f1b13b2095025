//! Modular dimension data, loaded from JSON and checked against the Weyl
//! dimension formula at `p = 0`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use weylab_core::embed::{ambient_group, FormType};
use weylab_core::verify::{check_fixtures, fixture_lookup, DimFixture};
use weylab_core::{SimpleType, Weight};

use crate::Error;

const BUNDLED: &str = include_str!("../data/fixtures.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    #[serde(rename = "type")]
    pub ty: String,
    pub weight: String,
    pub p: u64,
    pub dim: u128,
    pub cite: String,
    /// Form type where the sign criterion does not apply (`p = 2`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Fixtures {
    pub rows: Vec<FixtureRow>,
    pub dims: Vec<DimFixture>,
}

impl Fixtures {
    pub fn bundled() -> Fixtures {
        Fixtures::parse(BUNDLED).expect("bundled fixtures are valid")
    }

    pub fn load(path: &Path) -> Result<Fixtures, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
        Fixtures::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Fixtures, Error> {
        let rows: Vec<FixtureRow> = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut dims = Vec::with_capacity(rows.len());
        for r in &rows {
            let x_type: SimpleType = r.ty.parse()?;
            let weight: Weight = r.weight.parse()?;
            if let Some(f) = &r.form {
                f.parse::<FormType>()?;
            }
            dims.push(DimFixture {
                x_type,
                weight,
                p: r.p,
                dim: r.dim,
                cite: r.cite.clone(),
            });
        }
        check_fixtures(&dims)?;
        Ok(Fixtures { rows, dims })
    }

    pub fn lookup(&self, ty: SimpleType, w: &Weight, p: u64) -> Result<(&DimFixture, &FixtureRow), Error> {
        let d = fixture_lookup(&self.dims, ty, w, p)?;
        let i = self.dims.iter().position(|x| std::ptr::eq(x, d)).expect("same slice");
        Ok((d, &self.rows[i]))
    }

    /// Form override recorded for a `(type, weight, p)` row.
    pub fn form(&self, ty: SimpleType, w: &Weight, p: u64) -> Option<FormType> {
        self.lookup(ty, w, p).ok()?.1.form.as_ref()?.parse().ok()
    }

    /// Ambient group of `V_X(w)` at `p` taken from the fixture's dimension
    /// and form.
    pub fn ambient(&self, ty: SimpleType, w: &Weight, p: u64) -> Result<Option<SimpleType>, Error> {
        let (d, row) = self.lookup(ty, w, p)?;
        match &row.form {
            Some(f) => Ok(Some(ambient_group(d.dim, f.parse()?, 0)?)),
            None => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_rows_load() {
        let f = Fixtures::bundled();
        let a3: SimpleType = "A3".parse().unwrap();
        assert_eq!(f.lookup(a3, &"0,2,0".parse().unwrap(), 3).unwrap().0.dim, 19);
        assert!(f.lookup(a3, &"0,2,0".parse().unwrap(), 11).is_err());
        let d4: SimpleType = "D4".parse().unwrap();
        assert_eq!(
            f.ambient(d4, &"0,1,0,0".parse().unwrap(), 2).unwrap(),
            Some("D13".parse().unwrap())
        );
    }

    #[test]
    fn inconsistent_p0_row_rejected() {
        let text = r#"[{"type":"A5","weight":"0,0,1,0,0","p":0,"dim":21,"cite":"x"}]"#;
        assert!(Fixtures::parse(text).is_err());
    }
}
