//! File formats: Cayley-table JSON and real-set JSON.
//!
//! Table files look like `{"n": 6, "table": [[..]..], "labels": [..]?}`.
//! Real sets are `{"D": [cell..], "E": [cell..], "mirrored": false?}` where a
//! cell is `{"point": num}` or `{"lo": num, "hi": num, "lo_closed": bool,
//! "hi_closed": bool}` and a number is `{"q": "p/q", "roots": {"2": "p/q"}}`.

use crate::error::{Error, Result};
use crate::magma::FiniteMagma;
use crate::realline::{parse_rational, Cell, CellSet, ExactReal, RealError, UnitPeriodicRealSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct MagmaFile {
    n: usize,
    table: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn magma_from_str(text: &str) -> Result<FiniteMagma> {
    let f: MagmaFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad table file: {e}")))?;
    if f.table.len() != f.n {
        return Err(Error::InvalidTable(format!(
            "declared n = {} but table has {} rows",
            f.n,
            f.table.len()
        )));
    }
    FiniteMagma::from_rows(f.table, f.labels)
}

pub fn magma_to_string(m: &FiniteMagma) -> String {
    let f = MagmaFile {
        n: m.size(),
        table: m.rows(),
        labels: m.labels().map(|l| l.to_vec()),
    };
    serde_json::to_string_pretty(&f).expect("serializable")
}

pub fn load_magma(path: &Path) -> Result<FiniteMagma> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path:?}: {e}")))?;
    magma_from_str(&text)
}

#[derive(Serialize, Deserialize, Default)]
pub struct NumDto {
    #[serde(default)]
    pub q: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub roots: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellDto {
    Point {
        point: NumDto,
    },
    Interval {
        lo: NumDto,
        hi: NumDto,
        lo_closed: bool,
        hi_closed: bool,
    },
}

#[derive(Serialize, Deserialize, Default)]
pub struct RealSetDto {
    #[serde(rename = "D", default)]
    pub d: Vec<CellDto>,
    #[serde(rename = "E", default)]
    pub e: Vec<CellDto>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub mirrored: bool,
}

pub fn num_from_dto(dto: &NumDto) -> Result<ExactReal> {
    let q = if dto.q.is_empty() { "0" } else { &dto.q };
    let mut out = ExactReal::from_rational(parse_rational(q).map_err(Error::Parse)?);
    for (m, c) in &dto.roots {
        let m: u64 = m
            .parse()
            .map_err(|_| Error::Parse(format!("bad radicand {m:?}")))?;
        let c = parse_rational(c).map_err(Error::Parse)?;
        out = out + ExactReal::sqrt_term(m, c);
    }
    Ok(out)
}

pub fn num_to_dto(x: &ExactReal) -> NumDto {
    NumDto {
        q: x.rational_part().to_string(),
        roots: x
            .surd_terms()
            .iter()
            .map(|(m, c)| (m.to_string(), c.to_string()))
            .collect(),
    }
}

pub fn cell_from_dto(dto: &CellDto) -> Result<Cell> {
    Ok(match dto {
        CellDto::Point { point } => Cell::point(num_from_dto(point)?),
        CellDto::Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        } => Cell::interval(num_from_dto(lo)?, num_from_dto(hi)?, *lo_closed, *hi_closed),
    })
}

pub fn cell_to_dto(c: &Cell) -> CellDto {
    match c {
        Cell::Point(v) => CellDto::Point { point: num_to_dto(v) },
        Cell::Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        } => CellDto::Interval {
            lo: num_to_dto(lo),
            hi: num_to_dto(hi),
            lo_closed: *lo_closed,
            hi_closed: *hi_closed,
        },
    }
}

pub fn real_set_from_str(text: &str) -> Result<UnitPeriodicRealSet> {
    let dto: RealSetDto =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad real set: {e}")))?;
    real_set_from_dto(&dto)
}

pub fn real_set_from_dto(dto: &RealSetDto) -> Result<UnitPeriodicRealSet> {
    let d: Vec<Cell> = dto.d.iter().map(cell_from_dto).collect::<Result<_>>()?;
    let e: Vec<Cell> = dto.e.iter().map(cell_from_dto).collect::<Result<_>>()?;
    UnitPeriodicRealSet::from_cellsets(
        CellSet::from_cells(&d),
        CellSet::from_cells(&e),
        dto.mirrored,
    )
    .map_err(|e: RealError| Error::Parse(e.to_string()))
}

pub fn real_set_to_dto(a: &UnitPeriodicRealSet) -> RealSetDto {
    RealSetDto {
        d: a.d().cells().iter().map(cell_to_dto).collect(),
        e: a.e().cells().iter().map(cell_to_dto).collect(),
        mirrored: a.is_mirrored(),
    }
}

pub fn load_real_set(path: &Path) -> Result<UnitPeriodicRealSet> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path:?}: {e}")))?;
    real_set_from_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::builders::cyclic;

    #[test]
    fn magma_round_trip() {
        let z6 = cyclic(6);
        let text = magma_to_string(&z6);
        let back = magma_from_str(&text).unwrap();
        assert_eq!(back, z6);
        assert!(magma_from_str("{\"n\": 2, \"table\": [[0,1]]}").is_err());
        assert!(magma_from_str("{\"n\": 1, \"table\": [[3]]}").is_err());
    }

    #[test]
    fn real_set_round_trip() {
        let text = r#"{
            "D": [{"point": {"q": "0"}}],
            "E": [{"point": {"q": "0", "roots": {"2": "1"}}},
                  {"lo": {"q": "9/2"}, "hi": {"q": "24/5"}, "lo_closed": true, "hi_closed": false}]
        }"#;
        let a = real_set_from_str(text).unwrap();
        assert!(a.membership(&ExactReal::from_int(-3)));
        assert!(a.membership(&ExactReal::sqrt_of(2)));
        let dto = real_set_to_dto(&a);
        let again = real_set_from_dto(&dto).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn invalid_real_sets_are_rejected() {
        let text = r#"{"D": [{"point": {"q": "3/2"}}], "E": []}"#;
        assert!(real_set_from_str(text).is_err());
    }
}
