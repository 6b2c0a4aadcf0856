use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde::Deserialize;
use tutte::engines::{DcOptions, Engine};
use tutte::families::{self, PavingSpec, TensorInputs};
use tutte::matroid::io::{matroid_from_json, parse_gf_matrix, parse_graph, MatroidSpec};
use tutte::matroid::Matroid;
use tutte::{BiPoly, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Subset,
    Dc,
    Activities,
    Coboundary,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Subset => Engine::Subset,
            EngineArg::Dc => Engine::Dc,
            EngineArg::Activities => Engine::Activities,
            EngineArg::Coboundary => Engine::Coboundary,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Uniform,
    Cycle,
    SparsePaving,
    Paving,
    Catalan,
    Grid2,
    Grid,
    Complete,
    CompleteBipartite,
    Pg,
    Ag,
    Qcone,
    Wheel,
    Whirl,
    Thicken,
    Stretch,
    Tensor,
    #[value(name = "1sum")]
    OneSum,
    #[value(name = "2sum")]
    TwoSum,
    #[value(name = "3sum")]
    ThreeSum,
}

#[derive(Args, Debug, Default)]
pub struct InputArgs {
    /// Closed-form family
    #[arg(long, value_enum, group = "input")]
    pub family: Option<Family>,
    /// Matroid description in JSON
    #[arg(long, value_name = "FILE", group = "input")]
    pub matroid: Option<PathBuf>,
    /// Graph in edge-list format
    #[arg(long, value_name = "FILE", group = "input")]
    pub graph: Option<PathBuf>,
    /// Matrix over GF(p)
    #[arg(long, value_name = "FILE", group = "input")]
    pub matrix: Option<PathBuf>,

    /// Size, spokes, rungs, vertices or first side, depending on the family
    #[arg(long)]
    pub n: Option<usize>,
    /// Second side of a bipartite graph, or rows of a grid
    #[arg(long)]
    pub m: Option<usize>,
    /// Rank (or corank for stretch)
    #[arg(long)]
    pub r: Option<usize>,
    /// Thickening or stretching factor
    #[arg(long)]
    pub k: Option<usize>,
    /// Field order for geometries and q-cones
    #[arg(long)]
    pub q: Option<u64>,
    /// Projective or affine dimension
    #[arg(long)]
    pub dim: Option<u32>,
    /// Number of circuit-hyperplanes
    #[arg(long)]
    pub lambda: Option<u64>,
    /// Paving block profile as JSON: {"rank": r, "size": n, "blocks": [[size, count], ...]}
    #[arg(long, value_name = "FILE")]
    pub spec: Option<PathBuf>,
    /// Polynomial operands: polynomial text, JSON triples, or a matroid JSON
    #[arg(long = "poly", value_name = "FILE")]
    pub polys: Vec<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("--{flag} is required for {family:?}")))
}

/// Rank and size of the matroid a Tutte polynomial belongs to.
pub fn rank_and_size(t: &BiPoly) -> Result<(usize, usize)> {
    let rank = t.terms().map(|((i, _), _)| i as usize).max().unwrap_or(0);
    let two = BigInt::from(2);
    let v = t.eval_int(&two, &two);
    let bits = v.bits();
    if bits == 0 || v != BigInt::one() << (bits - 1) {
        return Err(Error::InvalidParameters("T(2,2) is not a power of two".into()));
    }
    Ok((rank, (bits - 1) as usize))
}

#[derive(Deserialize)]
struct PavingFile {
    rank: usize,
    size: usize,
    blocks: Vec<(usize, u64)>,
}

pub struct Inputs<'a> {
    pub args: &'a InputArgs,
    pub engine: Engine,
    pub opts: DcOptions,
}

impl Inputs<'_> {
    pub fn matroid(&self) -> Result<Option<Matroid>> {
        let a = self.args;
        if let Some(p) = &a.matroid {
            return matroid_from_json(&read(p)?).map(Some);
        }
        if let Some(p) = &a.graph {
            return Matroid::graphic(parse_graph(&read(p)?)?).map(Some);
        }
        if let Some(p) = &a.matrix {
            return Matroid::linear(parse_gf_matrix(&read(p)?)?).map(Some);
        }
        Ok(None)
    }

    fn operand(&self, path: &Path) -> Result<BiPoly> {
        let s = read(path)?;
        let trimmed = s.trim_start();
        if trimmed.starts_with('{') {
            let m = MatroidSpec::from_json(&s)?.build()?;
            return self.engine.run(&m, &self.opts);
        }
        if trimmed.starts_with('[') {
            let triples: Vec<(u32, u32, String)> =
                serde_json::from_str(&s).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            return BiPoly::from_json_triples(&triples);
        }
        s.parse()
    }

    fn operands(&self, count: Option<usize>, family: Family) -> Result<Vec<BiPoly>> {
        let polys = &self.args.polys;
        if let Some(c) = count {
            if polys.len() != c {
                return Err(Error::Parse(format!(
                    "{family:?} needs {c} --poly operands, got {}",
                    polys.len()
                )));
            }
        } else if polys.is_empty() {
            return Err(Error::Parse(format!("{family:?} needs --poly operands")));
        }
        polys.iter().map(|p| self.operand(p)).collect()
    }

    pub fn family(&self, family: Family) -> Result<BiPoly> {
        let a = self.args;
        let n = || need(a.n, "n", family);
        let r = || need(a.r, "r", family);
        let k = || need(a.k, "k", family);
        let q = || need(a.q, "q", family);
        let dim = || need(a.dim, "dim", family);
        match family {
            Family::Uniform => families::uniform(r()?, n()?),
            Family::Cycle => families::cycle(n()?),
            Family::SparsePaving => families::sparse_paving(r()?, n()?, need(a.lambda, "lambda", family)?),
            Family::Paving => {
                let path = a
                    .spec
                    .as_ref()
                    .ok_or_else(|| Error::Parse("--spec is required for Paving".into()))?;
                let f: PavingFile =
                    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                families::paving(&PavingSpec::new(f.rank, f.size, f.blocks))
            }
            Family::Catalan => families::catalan(n()?),
            Family::Grid2 => families::grid2(n()?),
            Family::Grid => tutte::engines::transfer_grid(need(a.m, "m", family)?, n()?),
            Family::Complete => families::complete_graph(n()?),
            Family::CompleteBipartite => families::complete_bipartite(n()?, need(a.m, "m", family)?),
            Family::Pg => families::projective(dim()?, q()?),
            Family::Ag => families::affine(dim()?, q()?),
            Family::Wheel => families::wheel(n()?),
            Family::Whirl => families::whirl(n()?),
            Family::Qcone | Family::Thicken | Family::Stretch => {
                let t = self.operands(Some(1), family)?.remove(0);
                let (rank, size) = rank_and_size(&t)?;
                match family {
                    Family::Qcone => {
                        let rank = a.r.unwrap_or(rank);
                        let rank =
                            u32::try_from(rank).map_err(|_| Error::InvalidParameters("rank too large".into()))?;
                        families::q_cone(&t, rank, q()?)
                    }
                    Family::Thicken => families::thicken_poly(&t, a.r.unwrap_or(rank), k()?),
                    _ => families::stretch_poly(&t, a.r.unwrap_or(size - rank), k()?),
                }
            }
            Family::Tensor => {
                let mut ops = self.operands(Some(3), family)?;
                let t_m = ops.remove(0);
                let (rank, size) = rank_and_size(&t_m)?;
                families::tensor_poly(&TensorInputs {
                    t_m,
                    rank: a.r.unwrap_or(rank),
                    size: a.n.unwrap_or(size),
                    t_n_delete: ops.remove(0),
                    t_n_contract: ops.remove(0),
                })
            }
            Family::OneSum => Ok(families::one_sum(&self.operands(None, family)?)),
            Family::TwoSum => {
                let ops = self.operands(Some(4), family)?;
                families::two_sum_poly(&ops[0], &ops[1], &ops[2], &ops[3])
            }
            Family::ThreeSum => {
                let ops = self.operands(Some(10), family)?;
                let first: [BiPoly; 5] = std::array::from_fn(|i| ops[i].clone());
                let second: [BiPoly; 5] = std::array::from_fn(|i| ops[5 + i].clone());
                families::delta_sum_poly(&first, &second)
            }
        }
    }

    /// The Tutte polynomial of whichever input was given.
    pub fn polynomial(&self) -> Result<BiPoly> {
        if let Some(f) = self.args.family {
            return self.family(f);
        }
        match self.matroid()? {
            Some(m) => self.engine.run(&m, &self.opts),
            None => Err(Error::Parse(
                "one of --family, --matroid, --graph or --matrix is required".into(),
            )),
        }
    }
}
