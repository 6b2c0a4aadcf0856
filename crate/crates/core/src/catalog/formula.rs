//! Closed-form computation paths: expressions over the family formulas.

use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::engines::transfer_grid;
use crate::error::{Error, Result};
use crate::families::{self, PavingSpec, TensorInputs};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Formula {
    Literal {
        poly: String,
    },
    Uniform {
        rank: usize,
        size: usize,
    },
    Cycle {
        n: usize,
    },
    Multilink {
        n: usize,
    },
    SparsePaving {
        rank: usize,
        size: usize,
        count: u64,
    },
    Paving {
        rank: usize,
        size: usize,
        blocks: Vec<(usize, u64)>,
    },
    Catalan {
        n: usize,
    },
    Grid2 {
        n: usize,
    },
    GridTransfer {
        rows: usize,
        cols: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        n: usize,
        m: usize,
    },
    Projective {
        dim: u32,
        q: u64,
    },
    Affine {
        dim: u32,
        q: u64,
    },
    Wheel {
        n: usize,
    },
    Whirl {
        n: usize,
    },
    Steiner {
        t: usize,
        k: usize,
        v: usize,
    },
    Relax {
        of: Box<Formula>,
    },
    Unrelax {
        of: Box<Formula>,
    },
    Dual {
        of: Box<Formula>,
    },
    FreeExtension {
        of: Box<Formula>,
    },
    QCone {
        of: Box<Formula>,
        rank: u32,
        q: u64,
    },
    Thicken {
        of: Box<Formula>,
        rank: usize,
        k: usize,
    },
    Stretch {
        of: Box<Formula>,
        corank: usize,
        k: usize,
    },
    Tensor {
        of: Box<Formula>,
        rank: usize,
        size: usize,
        delete: Box<Formula>,
        contract: Box<Formula>,
    },
    TwoSum {
        left_contract: Box<Formula>,
        left_delete: Box<Formula>,
        right_contract: Box<Formula>,
        right_delete: Box<Formula>,
    },
    /// Minors in the order `\p\s\q, \p/s\q, /p\s\q, /p/s/q, \p\s/q`.
    DeltaSum {
        first: Vec<Formula>,
        second: Vec<Formula>,
    },
    OneSum {
        parts: Vec<Formula>,
    },
    Sum {
        terms: Vec<Formula>,
    },
    Product {
        factors: Vec<Formula>,
    },
}

fn five(v: &[Formula]) -> Result<[BiPoly; 5]> {
    if v.len() != 5 {
        return Err(Error::InvalidParameters(format!(
            "a delta-sum side needs 5 minors, got {}",
            v.len()
        )));
    }
    Ok([v[0].eval()?, v[1].eval()?, v[2].eval()?, v[3].eval()?, v[4].eval()?])
}

fn list(v: &[Formula]) -> String {
    v.iter().map(Formula::label).collect::<Vec<_>>().join(", ")
}

impl Formula {
    pub fn literal(s: &str) -> Formula {
        Formula::Literal { poly: s.to_string() }
    }

    pub fn eval(&self) -> Result<BiPoly> {
        use Formula::*;
        match self {
            Literal { poly } => poly.parse(),
            Uniform { rank, size } => families::uniform(*rank, *size),
            Cycle { n } => families::cycle(*n),
            Multilink { n } => families::multilink(*n),
            SparsePaving { rank, size, count } => families::sparse_paving(*rank, *size, *count),
            Paving { rank, size, blocks } => families::paving(&PavingSpec::new(*rank, *size, blocks.iter().copied())),
            Catalan { n } => families::catalan(*n),
            Grid2 { n } => families::grid2(*n),
            GridTransfer { rows, cols } => transfer_grid(*rows, *cols),
            Complete { n } => families::complete_graph(*n),
            CompleteBipartite { n, m } => families::complete_bipartite(*n, *m),
            Projective { dim, q } => families::projective(*dim, *q),
            Affine { dim, q } => families::affine(*dim, *q),
            Wheel { n } => families::wheel(*n),
            Whirl { n } => families::whirl(*n),
            Steiner { t, k, v } => families::steiner_sparse(*t, *k, *v),
            Relax { of } => Ok(families::relax_poly(&of.eval()?)),
            Unrelax { of } => Ok(families::unrelax_poly(&of.eval()?)),
            Dual { of } => Ok(of.eval()?.swap_xy()),
            FreeExtension { of } => {
                let t = of.eval()?;
                let at1 = t.compose(&BiPoly::one(), &BiPoly::y());
                families::free_ext_poly(&t, &at1)
            }
            QCone { of, rank, q } => families::q_cone(&of.eval()?, *rank, *q),
            Thicken { of, rank, k } => families::thicken_poly(&of.eval()?, *rank, *k),
            Stretch { of, corank, k } => families::stretch_poly(&of.eval()?, *corank, *k),
            Tensor {
                of,
                rank,
                size,
                delete,
                contract,
            } => families::tensor_poly(&TensorInputs {
                t_m: of.eval()?,
                rank: *rank,
                size: *size,
                t_n_delete: delete.eval()?,
                t_n_contract: contract.eval()?,
            }),
            TwoSum {
                left_contract,
                left_delete,
                right_contract,
                right_delete,
            } => families::two_sum_poly(
                &left_contract.eval()?,
                &left_delete.eval()?,
                &right_contract.eval()?,
                &right_delete.eval()?,
            ),
            DeltaSum { first, second } => families::delta_sum_poly(&five(first)?, &five(second)?),
            OneSum { parts } => Ok(families::one_sum(
                &parts.iter().map(Formula::eval).collect::<Result<Vec<_>>>()?,
            )),
            Sum { terms } => terms.iter().try_fold(BiPoly::zero(), |acc, f| Ok(&acc + &f.eval()?)),
            Product { factors } => factors.iter().try_fold(BiPoly::one(), |acc, f| Ok(&acc * &f.eval()?)),
        }
    }

    /// Compact one-line description.
    pub fn label(&self) -> String {
        use Formula::*;
        match self {
            Literal { poly } => format!("({poly})"),
            Uniform { rank, size } => format!("uniform({rank},{size})"),
            Cycle { n } => format!("cycle({n})"),
            Multilink { n } => format!("multilink({n})"),
            SparsePaving { rank, size, count } => format!("sparse_paving({rank},{size},{count})"),
            Paving { rank, size, blocks } => {
                let b: Vec<String> = blocks.iter().map(|(k, c)| format!("{c}x{k}")).collect();
                format!("paving({rank},{size};{})", b.join(","))
            }
            Catalan { n } => format!("catalan({n})"),
            Grid2 { n } => format!("grid2({n})"),
            GridTransfer { rows, cols } => format!("transfer_grid({rows},{cols})"),
            Complete { n } => format!("complete({n})"),
            CompleteBipartite { n, m } => format!("complete_bipartite({n},{m})"),
            Projective { dim, q } => format!("pg({dim},{q})"),
            Affine { dim, q } => format!("ag({dim},{q})"),
            Wheel { n } => format!("wheel({n})"),
            Whirl { n } => format!("whirl({n})"),
            Steiner { t, k, v } => format!("steiner({t},{k},{v})"),
            Relax { of } => format!("relax({})", of.label()),
            Unrelax { of } => format!("unrelax({})", of.label()),
            Dual { of } => format!("dual({})", of.label()),
            FreeExtension { of } => format!("free_ext({})", of.label()),
            QCone { of, rank, q } => format!("qcone({},{rank},{q})", of.label()),
            Thicken { of, rank, k } => format!("thicken({},{rank},{k})", of.label()),
            Stretch { of, corank, k } => format!("stretch({},{corank},{k})", of.label()),
            Tensor {
                of, delete, contract, ..
            } => {
                format!("tensor({}; {}, {})", of.label(), delete.label(), contract.label())
            }
            TwoSum {
                left_contract,
                left_delete,
                right_contract,
                right_delete,
            } => format!(
                "2sum({}, {}; {}, {})",
                left_contract.label(),
                left_delete.label(),
                right_contract.label(),
                right_delete.label()
            ),
            DeltaSum { first, second } => format!("3sum([{}]; [{}])", list(first), list(second)),
            OneSum { parts } => format!("1sum({})", list(parts)),
            Sum { terms } => terms.iter().map(Formula::label).collect::<Vec<_>>().join(" + "),
            Product { factors } => factors.iter().map(Formula::label).collect::<Vec<_>>().join(" * "),
        }
    }
}
