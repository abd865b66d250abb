//! The JSON interchange format:
//!
//! ```json
//! {"n_left":2,"n_right":2,"cells":[["R","G"],["B",null]]}
//! ```

use serde::{Deserialize, Serialize};

use super::{Color, Coloring};
use crate::error::Error;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawColoring {
    n_left: usize,
    n_right: usize,
    cells: Vec<Vec<Option<String>>>,
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let cells = (0..self.n_left())
            .map(|u| self.row(u).iter().map(|c| c.map(|c| c.code().to_string())).collect())
            .collect();
        RawColoring { n_left: self.n_left(), n_right: self.n_right(), cells }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawColoring::deserialize(d)?;
        from_raw(raw).map_err(serde::de::Error::custom)
    }
}

fn from_raw(raw: RawColoring) -> Result<Coloring, Error> {
    if raw.cells.len() != raw.n_left {
        return Err(Error::Malformed(format!("expected {} rows, found {}", raw.n_left, raw.cells.len())));
    }
    let mut rows = Vec::with_capacity(raw.n_left);
    for (i, row) in raw.cells.into_iter().enumerate() {
        if row.len() != raw.n_right {
            return Err(Error::RaggedRow { row: i, expected: raw.n_right, found: row.len() });
        }
        let parsed = row
            .into_iter()
            .map(|cell| match cell {
                None => Ok(None),
                Some(code) => match code.as_str() {
                    "R" => Ok(Some(Color::Red)),
                    "G" => Ok(Some(Color::Green)),
                    "B" => Ok(Some(Color::Blue)),
                    _ => Err(Error::UnknownColor(code)),
                },
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(parsed);
    }
    Coloring::from_rows(rows, raw.n_right)
}

pub fn read_coloring(bytes: &[u8]) -> Result<Coloring, Error> {
    let raw: RawColoring = serde_json::from_slice(bytes).map_err(|e| Error::Malformed(e.to_string()))?;
    from_raw(raw)
}

pub fn write_coloring(c: &Coloring) -> Vec<u8> {
    serde_json::to_vec(c).expect("coloring serialization is infallible")
}
