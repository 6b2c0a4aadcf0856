//! Text and JSON formats for matroids.
//!
//! * JSON: `{"kind": "...", ...}`, see [`MatroidSpec`].
//! * Graph files: `p <vertices> <edges>` then one `e <u> <v>` line per edge.
//! * GF(p) matrix files: `gf <p> <rows> <cols>` then row-major residues.
//!
//! Lines starting with `#` or `c ` are comments in both text formats.

use serde::{Deserialize, Serialize};

use super::{ElementSet, GfMatrix, Graph, Matroid, PointedMatroid, Step};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatroidSpec {
    Empty,
    Uniform {
        rank: usize,
        size: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Linear {
        p: u32,
        rows: Vec<Vec<i64>>,
    },
    SparsePaving {
        rank: usize,
        size: usize,
        circuit_hyperplanes: Vec<Vec<usize>>,
    },
    Paving {
        rank: usize,
        size: usize,
        blocks: Vec<Vec<usize>>,
    },
    Bases {
        size: usize,
        bases: Vec<Vec<usize>>,
    },
    LatticePath {
        lower: String,
        upper: String,
    },
    Dual {
        of: Box<MatroidSpec>,
    },
    Delete {
        of: Box<MatroidSpec>,
        elements: Vec<usize>,
    },
    Contract {
        of: Box<MatroidSpec>,
        elements: Vec<usize>,
    },
    Relax {
        of: Box<MatroidSpec>,
        set: Vec<usize>,
    },
    FreeExtension {
        of: Box<MatroidSpec>,
    },
    ParallelExtension {
        of: Box<MatroidSpec>,
        element: usize,
    },
    DirectSum {
        parts: Vec<MatroidSpec>,
    },
    Thicken {
        of: Box<MatroidSpec>,
        k: usize,
    },
    Stretch {
        of: Box<MatroidSpec>,
        k: usize,
    },
    Tensor {
        of: Box<MatroidSpec>,
        with: Box<MatroidSpec>,
        point: usize,
    },
    TwoSum {
        left: Box<MatroidSpec>,
        left_point: usize,
        right: Box<MatroidSpec>,
        right_point: usize,
    },
    DeltaSum {
        first: Box<MatroidSpec>,
        first_triangle: [usize; 3],
        second: Box<MatroidSpec>,
        second_triangle: [usize; 3],
    },
}

fn to_set(v: &[usize], n: usize) -> Result<ElementSet> {
    if let Some(&e) = v.iter().find(|&&e| e >= n) {
        return Err(Error::ElementOutOfRange { element: e, size: n });
    }
    Ok(v.iter().copied().collect())
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid> {
        use MatroidSpec::*;
        Ok(match self {
            Empty => Matroid::empty(),
            Uniform { rank, size } => Matroid::uniform(*rank, *size)?,
            Graphic { vertices, edges } => {
                Matroid::graphic(Graph::new(*vertices, edges.iter().map(|e| (e[0], e[1])).collect())?)?
            }
            Linear { p, rows } => Matroid::linear(GfMatrix::from_signed_rows(*p, rows)?)?,
            SparsePaving {
                rank,
                size,
                circuit_hyperplanes,
            } => {
                let sets = circuit_hyperplanes
                    .iter()
                    .map(|c| to_set(c, *size))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::sparse_paving(*rank, *size, sets)?
            }
            Paving { rank, size, blocks } => {
                let sets = blocks.iter().map(|c| to_set(c, *size)).collect::<Result<Vec<_>>>()?;
                Matroid::paving_partition(*rank, *size, sets)?
            }
            Bases { size, bases } => {
                let sets = bases.iter().map(|c| to_set(c, *size)).collect::<Result<Vec<_>>>()?;
                Matroid::basis_list(*size, sets)?
            }
            LatticePath { lower, upper } => Matroid::lattice_path(Step::parse_path(lower)?, Step::parse_path(upper)?)?,
            Dual { of } => of.build()?.dual(),
            Delete { of, elements } => {
                let m = of.build()?;
                let s = to_set(elements, m.ground_size())?;
                m.minor(s, ElementSet::EMPTY)?
            }
            Contract { of, elements } => {
                let m = of.build()?;
                let s = to_set(elements, m.ground_size())?;
                m.minor(ElementSet::EMPTY, s)?
            }
            Relax { of, set } => {
                let m = of.build()?;
                let s = to_set(set, m.ground_size())?;
                m.relax(s)?
            }
            FreeExtension { of } => of.build()?.free_extension()?,
            ParallelExtension { of, element } => of.build()?.parallel_extension(*element)?,
            DirectSum { parts } => {
                let ms = parts.iter().map(MatroidSpec::build).collect::<Result<Vec<_>>>()?;
                Matroid::direct_sum(&ms)?
            }
            Thicken { of, k } => of.build()?.thicken(*k)?,
            Stretch { of, k } => of.build()?.stretch(*k)?,
            Tensor { of, with, point } => of.build()?.tensor(&PointedMatroid::new(with.build()?, *point)?)?,
            TwoSum {
                left,
                left_point,
                right,
                right_point,
            } => Matroid::two_sum(
                &PointedMatroid::new(left.build()?, *left_point)?,
                &PointedMatroid::new(right.build()?, *right_point)?,
            )?,
            DeltaSum {
                first,
                first_triangle,
                second,
                second_triangle,
            } => Matroid::delta_sum(&first.build()?, &second.build()?, *first_triangle, *second_triangle)?,
        })
    }

    pub fn from_json(s: &str) -> Result<MatroidSpec> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matroid specs always serialize")
    }
}

/// Parses and builds a matroid from its JSON description.
pub fn matroid_from_json(s: &str) -> Result<Matroid> {
    MatroidSpec::from_json(s)?.build()
}

fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#') && !l.starts_with("c "))
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.ok_or_else(|| Error::Parse(format!("line {line}: missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: bad {what}")))
}

pub fn parse_graph(s: &str) -> Result<Graph> {
    let mut lines = content_lines(s);
    let (ln, header) = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("p") {
        return Err(Error::Parse(format!("line {ln}: expected 'p <vertices> <edges>'")));
    }
    let vertices: usize = parse_num(tok.next(), ln, "vertex count")?;
    let edge_count: usize = parse_num(tok.next(), ln, "edge count")?;
    let mut edges = Vec::with_capacity(edge_count);
    for (ln, line) in lines {
        let mut tok = line.split_whitespace();
        if tok.next() != Some("e") {
            return Err(Error::Parse(format!("line {ln}: expected 'e <u> <v>'")));
        }
        let u: usize = parse_num(tok.next(), ln, "endpoint")?;
        let v: usize = parse_num(tok.next(), ln, "endpoint")?;
        if u >= vertices || v >= vertices {
            return Err(Error::Parse(format!("line {ln}: endpoint out of range")));
        }
        edges.push((u, v));
    }
    if edges.len() != edge_count {
        return Err(Error::Parse(format!(
            "header declares {edge_count} edges but {} were given",
            edges.len()
        )));
    }
    Graph::new(vertices, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn parse_gf_matrix(s: &str) -> Result<GfMatrix> {
    let mut lines = content_lines(s);
    let (ln, header) = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("gf") {
        return Err(Error::Parse(format!("line {ln}: expected 'gf <p> <rows> <cols>'")));
    }
    let p: u32 = parse_num(tok.next(), ln, "field order")?;
    let rows: usize = parse_num(tok.next(), ln, "row count")?;
    let cols: usize = parse_num(tok.next(), ln, "column count")?;
    let mut entries = Vec::with_capacity(rows * cols);
    for (ln, line) in lines {
        for t in line.split_whitespace() {
            entries.push(parse_num::<u32>(Some(t), ln, "residue")?);
        }
    }
    GfMatrix::new(p, rows, cols, entries).map_err(|e| Error::Parse(e.to_string()))
}

pub fn write_gf_matrix(m: &GfMatrix) -> String {
    let mut out = format!("gf {} {} {}\n", m.p(), m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.entry(r, c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
