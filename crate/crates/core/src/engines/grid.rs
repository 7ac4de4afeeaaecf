use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{abc, abcd, cab, multi, GridFamily, Rows};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Cells {
    /// `rows[n][I]`.
    Flat(Rows),
    /// `cube[n][I1][I2]`.
    Cube(abcd::Cube),
}

/// Exact values of one recurrence family for every in-domain index with
/// `n <= n_max`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGrid {
    family: GridFamily,
    n_max: usize,
    cells: Cells,
}

pub(super) fn build(family: GridFamily, n_max: usize) -> TableGrid {
    let cells = match family {
        GridFamily::Abc | GridFamily::Cab => Cells::Flat(abc::avoiders(n_max)),
        GridFamily::AbcOne => Cells::Flat(abc::one_occurrence(n_max, &abc::avoiders(n_max))),
        GridFamily::AbcTwo => {
            let p = abc::avoiders(n_max);
            let p1 = abc::one_occurrence(n_max, &p);
            Cells::Flat(abc::two_occurrences(n_max, &p, &p1))
        }
        GridFamily::CabOne => Cells::Flat(cab::one_occurrence(n_max, &abc::avoiders(n_max))),
        GridFamily::Abcd => Cells::Cube(abcd::avoiders(n_max)),
        GridFamily::AbcdI1 | GridFamily::AbcdI2 => {
            let cube = abcd::avoiders(n_max);
            let rows = cube
                .iter()
                .enumerate()
                .map(|(n, layer)| {
                    let one = 1.min(n);
                    (0..=n)
                        .map(|i| match family {
                            GridFamily::AbcdI1 => layer[i][one].clone(),
                            _ => layer[one][i].clone(),
                        })
                        .collect()
                })
                .collect();
            Cells::Flat(rows)
        }
        GridFamily::AbcBac => Cells::Flat(multi::avoiders(n_max)),
    };
    TableGrid { family, n_max, cells }
}

#[derive(Serialize, Deserialize)]
struct GridDoc {
    family: String,
    n_max: usize,
    cells: Vec<CellDoc>,
}

#[derive(Serialize, Deserialize)]
struct CellDoc {
    n: usize,
    #[serde(rename = "I")]
    index: CellIndex,
    value: String,
}

#[derive(Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
enum CellIndex {
    One(usize),
    Two([usize; 2]),
}

/// Leading key columns and the padded values of one printed row.
type LayoutRow<'a> = (Vec<usize>, Vec<Option<&'a BigInt>>);

impl TableGrid {
    pub fn family(&self) -> GridFamily {
        self.family
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn provenance(&self) -> &'static str {
        self.family.provenance()
    }

    /// Value at `(n, index)`, or `None` outside `0 <= index <= n <= n_max`
    /// or when `index` has the wrong arity.
    pub fn get(&self, n: usize, index: &[usize]) -> Option<&BigInt> {
        if n > self.n_max || index.iter().any(|&i| i > n) {
            return None;
        }
        match (&self.cells, index) {
            (Cells::Flat(rows), [i]) => Some(&rows[n][*i]),
            (Cells::Cube(cube), [i1, i2]) => Some(&cube[n][*i1][*i2]),
            _ => None,
        }
    }

    /// Every in-domain cell, in increasing `n` then increasing index.
    pub fn cells(&self) -> Vec<(usize, Vec<usize>, &BigInt)> {
        let mut out = Vec::new();
        match &self.cells {
            Cells::Flat(rows) => {
                for (n, row) in rows.iter().enumerate() {
                    for (i, v) in row.iter().enumerate() {
                        out.push((n, vec![i], v));
                    }
                }
            }
            Cells::Cube(cube) => {
                for (n, layer) in cube.iter().enumerate() {
                    for (i1, row) in layer.iter().enumerate() {
                        for (i2, v) in row.iter().enumerate() {
                            out.push((n, vec![i1, i2], v));
                        }
                    }
                }
            }
        }
        out
    }

    /// The sequence `n -> value(n, index)` and the `n` it starts at.
    ///
    /// It starts at `n = max(index)`, except that an index of all zeros and
    /// ones starts at `n = 0`, where the `I = 0` and `I = 1` columns are
    /// identified (so the `I = 1` column of `abc` is the full Catalan
    /// sequence `1, 1, 2, 5, ...`).
    pub fn column(&self, index: &[usize]) -> Result<(usize, Vec<BigInt>)> {
        if index.len() != self.family.index_arity() {
            return Err(Error::InvalidInput(format!(
                "family {} takes {} index value(s), got {}",
                self.family,
                self.family.index_arity(),
                index.len()
            )));
        }
        let top = index.iter().copied().max().unwrap_or(0);
        let start = if top <= 1 { 0 } else { top };
        let values = (start..=self.n_max)
            .map(|n| {
                let clamped: Vec<usize> = index.iter().map(|&i| i.min(n)).collect();
                self.get(n, &clamped).cloned().expect("clamped index is in domain")
            })
            .collect();
        Ok((start, values))
    }

    fn width(&self) -> usize {
        self.n_max + 1
    }

    /// Header and ragged rows as printed, with `None` for cells outside the
    /// domain.
    fn layout(&self) -> (Vec<String>, Vec<LayoutRow<'_>>) {
        fn pad(row: &[BigInt], width: usize) -> Vec<Option<&BigInt>> {
            (0..width).map(|i| row.get(i)).collect()
        }
        let width = self.width();
        match &self.cells {
            Cells::Flat(rows) => {
                let mut header = vec!["n".to_string()];
                header.extend((0..width).map(|i| format!("I={i}")));
                let body = rows.iter().enumerate().map(|(n, row)| (vec![n], pad(row, width))).collect();
                (header, body)
            }
            Cells::Cube(cube) => {
                let mut header = vec!["n".to_string(), "I1".to_string()];
                header.extend((0..width).map(|i| format!("I2={i}")));
                let body = cube
                    .iter()
                    .enumerate()
                    .flat_map(|(n, layer)| {
                        layer.iter().enumerate().map(move |(i1, row)| (vec![n, i1], row))
                    })
                    .map(|(key, row)| (key, pad(row, width)))
                    .collect();
                (header, body)
            }
        }
    }

    /// CSV with a header row; out-of-domain cells are empty.
    pub fn to_csv(&self) -> String {
        let (header, body) = self.layout();
        let mut out = header.join(",");
        out.push('\n');
        for (key, values) in body {
            let fields: Vec<String> = key
                .iter()
                .map(|k| k.to_string())
                .chain(values.iter().map(|v| v.map(|x| x.to_string()).unwrap_or_default()))
                .collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// Right-aligned columns, blank outside the domain.
    pub fn to_plain(&self) -> String {
        let (header, body) = self.layout();
        let rows: Vec<Vec<String>> = std::iter::once(header)
            .chain(body.into_iter().map(|(key, values)| {
                key.iter()
                    .map(|k| k.to_string())
                    .chain(values.iter().map(|v| v.map(|x| x.to_string()).unwrap_or_default()))
                    .collect()
            }))
            .collect();
        let ncols = rows[0].len();
        let widths: Vec<usize> =
            (0..ncols).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &rows {
            let line: Vec<String> =
                row.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        out
    }

    /// `{family, n_max, cells: [{n, I, value}]}` with decimal-string values;
    /// `I` is a number, or `[I1, I2]` for the full `abcd` grid.
    pub fn to_json(&self) -> String {
        let doc = GridDoc {
            family: self.family.name().to_string(),
            n_max: self.n_max,
            cells: self
                .cells()
                .into_iter()
                .map(|(n, idx, v)| CellDoc {
                    n,
                    index: match idx[..] {
                        [i] => CellIndex::One(i),
                        [i1, i2] => CellIndex::Two([i1, i2]),
                        _ => unreachable!("grids have one or two indices"),
                    },
                    value: v.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("grid documents always serialize")
    }

    /// Reads a document written by [`TableGrid::to_json`]. Every in-domain
    /// cell must be present exactly once.
    pub fn from_json(text: &str) -> Result<TableGrid> {
        let doc: GridDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let family: GridFamily = doc.family.parse()?;
        let n_max = doc.n_max;
        let mut slots: Vec<Vec<Vec<Option<BigInt>>>> = (0..=n_max)
            .map(|n| {
                let inner = if family.index_arity() == 2 { n + 1 } else { 1 };
                vec![vec![None; inner]; n + 1]
            })
            .collect();
        for cell in doc.cells {
            let (a, b) = match cell.index {
                CellIndex::One(i) if family.index_arity() == 1 => (i, 0),
                CellIndex::Two([i1, i2]) if family.index_arity() == 2 => (i1, i2),
                _ => return Err(Error::Parse(format!("cell at n = {} has the wrong index arity", cell.n))),
            };
            let slot = slots
                .get_mut(cell.n)
                .and_then(|layer| layer.get_mut(a))
                .and_then(|row| row.get_mut(b))
                .ok_or_else(|| Error::Parse(format!("cell at n = {} is out of domain", cell.n)))?;
            let value: BigInt = cell
                .value
                .parse()
                .map_err(|_| Error::Parse(format!("{:?} is not an integer", cell.value)))?;
            if slot.replace(value).is_some() {
                return Err(Error::Parse(format!("duplicate cell at n = {}", cell.n)));
            }
        }
        let missing = || Error::Parse("grid document is missing cells".into());
        let mut cube = Vec::with_capacity(slots.len());
        for layer in slots {
            let mut rows = Vec::with_capacity(layer.len());
            for row in layer {
                rows.push(row.into_iter().collect::<Option<Vec<_>>>().ok_or_else(missing)?);
            }
            cube.push(rows);
        }
        let cells = if family.index_arity() == 2 {
            Cells::Cube(cube)
        } else {
            Cells::Flat(cube.into_iter().map(|layer| layer.into_iter().map(|mut r| r.remove(0)).collect()).collect())
        };
        Ok(TableGrid { family, n_max, cells })
    }
}

#[cfg(test)]
mod tests {
    use super::super::build_table;
    use super::*;

    #[test]
    fn csv_is_ragged() {
        let csv = build_table(GridFamily::Abc, 3).to_csv();
        assert_eq!(csv, "n,I=0,I=1,I=2,I=3\n0,1,,,\n1,1,1,,\n2,2,2,1,\n3,5,5,3,1\n");
        assert_eq!(build_table(GridFamily::Abc, 0).to_csv(), "n,I=0\n0,1\n");
    }

    #[test]
    fn abcd_csv_has_one_row_per_i1() {
        let csv = build_table(GridFamily::Abcd, 2).to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,I1,I2=0,I2=1,I2=2");
        assert_eq!(lines.len(), 1 + 1 + 2 + 3);
        assert_eq!(lines[6], "2,2,2,2,1");
    }

    #[test]
    fn plain_text_aligns() {
        let text = build_table(GridFamily::Abc, 2).to_plain();
        assert_eq!(text, "n  I=0  I=1  I=2\n0    1\n1    1    1\n2    2    2    1\n");
    }

    #[test]
    fn json_round_trip() {
        for family in GridFamily::ALL {
            let grid = build_table(family, 7);
            let back = TableGrid::from_json(&grid.to_json()).unwrap();
            assert_eq!(back, grid, "{family}");
        }
    }

    #[test]
    fn json_rejects_incomplete_documents() {
        let mut doc: serde_json::Value = serde_json::from_str(&build_table(GridFamily::Abc, 3).to_json()).unwrap();
        doc["cells"].as_array_mut().unwrap().pop();
        assert!(TableGrid::from_json(&doc.to_string()).is_err());
        assert!(TableGrid::from_json("{").is_err());
    }

    #[test]
    fn columns() {
        let abc = build_table(GridFamily::Abc, 6);
        let (start, catalan) = abc.column(&[1]).unwrap();
        assert_eq!(start, 0);
        let expect: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132].into_iter().map(BigInt::from).collect();
        assert_eq!(catalan, expect);
        assert_eq!(abc.column(&[3]).unwrap().0, 3);
        let cube = build_table(GridFamily::Abcd, 4);
        let (_, a) = cube.column(&[1, 1]).unwrap();
        assert_eq!(a, [1, 1, 2, 6, 23].into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert!(cube.column(&[1]).is_err());
    }

    #[test]
    fn get_checks_domain() {
        let g = build_table(GridFamily::Abcd, 3);
        assert!(g.get(3, &[1, 1]).is_some());
        assert!(g.get(3, &[1]).is_none());
        assert!(g.get(2, &[3, 1]).is_none());
        assert!(g.get(4, &[0, 0]).is_none());
    }
}
