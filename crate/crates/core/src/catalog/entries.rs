//! The named matroids with their recipes and reference polynomials.

use super::formula::Formula;
use super::{CatalogEntry, Flags};
use crate::matroid::io::MatroidSpec;
use crate::matroid::Graph;

fn b(f: Formula) -> Box<Formula> {
    Box::new(f)
}

fn bs(m: MatroidSpec) -> Box<MatroidSpec> {
    Box::new(m)
}

fn uni(rank: usize, size: usize) -> MatroidSpec {
    MatroidSpec::Uniform { rank, size }
}

fn graphic(g: Graph) -> MatroidSpec {
    MatroidSpec::Graphic {
        vertices: g.vertex_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    }
}

fn linear(p: u32, rows: &[&[i64]]) -> MatroidSpec {
    MatroidSpec::Linear {
        p,
        rows: rows.iter().map(|r| r.to_vec()).collect(),
    }
}

/// `[I | A]` over GF(p).
fn standard(p: u32, a: &[&[i64]]) -> MatroidSpec {
    let k = a.len();
    let rows = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = vec![0; k];
            row[i] = 1;
            row.extend_from_slice(r);
            row
        })
        .collect();
    MatroidSpec::Linear { p, rows }
}

/// Converts sets labelled from 1 to zero-based element lists.
fn one_based(sets: &[&[usize]]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|e| e - 1).collect()).collect()
}

fn sparse(rank: usize, size: usize, chs: Vec<Vec<usize>>) -> MatroidSpec {
    MatroidSpec::SparsePaving {
        rank,
        size,
        circuit_hyperplanes: chs,
    }
}

fn relax(of: MatroidSpec, set: &[usize]) -> MatroidSpec {
    MatroidSpec::Relax {
        of: bs(of),
        set: set.to_vec(),
    }
}

fn dual(of: MatroidSpec) -> MatroidSpec {
    MatroidSpec::Dual { of: bs(of) }
}

fn sp(rank: usize, size: usize, count: u64) -> Formula {
    Formula::SparsePaving { rank, size, count }
}

fn lit(s: &str) -> Formula {
    Formula::literal(s)
}

fn sum(terms: Vec<Formula>) -> Formula {
    Formula::Sum { terms }
}

fn times(factor: &str, f: Formula) -> Formula {
    Formula::Product {
        factors: vec![lit(factor), f],
    }
}

#[derive(Clone, Copy, Default)]
struct F {
    self_dual: bool,
    sparse_paving: bool,
    paving: bool,
    fields: Option<&'static str>,
}

const REGULAR: Option<&str> = Some("every field");

fn flags(f: F) -> Flags {
    Flags {
        self_dual: f.self_dual,
        sparse_paving: f.sparse_paving,
        paving: f.paving || f.sparse_paving,
        representable_fields: f.fields.map(str::to_string),
    }
}

struct Builder(Vec<CatalogEntry>);

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn add(
        &mut self,
        name: &str,
        description: &str,
        recipe: MatroidSpec,
        alternatives: Vec<MatroidSpec>,
        formulas: Vec<Formula>,
        ground_truth: &str,
        provenance: &[&str],
        f: F,
    ) {
        self.0.push(CatalogEntry {
            name: name.to_string(),
            description: description.to_string(),
            recipe,
            alternative_recipes: alternatives,
            formulas,
            ground_truth: ground_truth.parse().expect("catalog polynomial parses"),
            provenance: provenance.iter().map(|s| s.to_string()).collect(),
            flags: flags(f),
            erratum: None,
        });
    }

    fn erratum(&mut self, note: &str) {
        if let Some(last) = self.0.last_mut() {
            last.erratum = Some(note.to_string());
        }
    }
}

fn fano() -> MatroidSpec {
    linear(
        2,
        &[&[1, 0, 0, 1, 1, 0, 1], &[0, 1, 0, 1, 0, 1, 1], &[0, 0, 1, 0, 1, 1, 1]],
    )
}

/// Lines of [`fano`], zero-based.
fn fano_lines() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 3],
        vec![0, 2, 4],
        vec![1, 2, 5],
        vec![0, 5, 6],
        vec![1, 4, 6],
        vec![2, 3, 6],
        vec![3, 4, 5],
    ]
}

fn non_fano() -> MatroidSpec {
    relax(fano(), &[3, 4, 5])
}

/// Cube points `1..=8` with point `i` at the binary vector `i - 1`.
fn cube() -> MatroidSpec {
    let rows: Vec<Vec<i64>> = std::iter::once(vec![1; 8])
        .chain((0..3).map(|bit| (0..8).map(|i| (i >> bit) & 1).collect()))
        .collect();
    MatroidSpec::Linear { p: 2, rows }
}

const CUBE_FACES: [&[usize]; 6] = [
    &[1, 2, 3, 4],
    &[1, 2, 5, 6],
    &[1, 4, 5, 8],
    &[2, 3, 6, 7],
    &[3, 4, 7, 8],
    &[5, 6, 7, 8],
];
const CUBE_DIAGONALS: [&[usize]; 6] = [
    &[1, 2, 7, 8],
    &[2, 3, 5, 8],
    &[3, 4, 5, 6],
    &[1, 4, 6, 7],
    &[1, 3, 5, 7],
    &[2, 4, 6, 8],
];
const CUBE_TWISTED: [&[usize]; 2] = [&[1, 3, 6, 8], &[2, 4, 5, 7]];

fn cube_planes() -> Vec<Vec<usize>> {
    let all: Vec<&[usize]> = CUBE_FACES
        .iter()
        .chain(&CUBE_DIAGONALS)
        .chain(&CUBE_TWISTED)
        .copied()
        .collect();
    one_based(&all)
}

fn zero(s: &[usize]) -> Vec<usize> {
    s.iter().map(|e| e - 1).collect()
}

fn ag32_prime() -> MatroidSpec {
    relax(cube(), &zero(CUBE_TWISTED[1]))
}

fn r8_chain() -> MatroidSpec {
    relax(ag32_prime(), &zero(CUBE_TWISTED[0]))
}

fn k4_minus_edge() -> Graph {
    Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("valid graph")
}

fn wheel_graph(n: usize) -> MatroidSpec {
    graphic(Graph::wheel(n))
}

fn whirl_spec(n: usize) -> MatroidSpec {
    relax(wheel_graph(n), &(0..n).collect::<Vec<_>>())
}

fn h_graph() -> Graph {
    Graph::complete_bipartite(2, 4).contract_edge(0)
}

fn h_formula() -> Formula {
    sum(vec![
        Formula::CompleteBipartite { n: 2, m: 4 },
        times("-x", Formula::CompleteBipartite { n: 2, m: 3 }),
    ])
}

fn pappus_lines() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2],
        vec![3, 4, 5],
        vec![6, 7, 8],
        vec![0, 4, 8],
        vec![1, 3, 8],
        vec![0, 5, 7],
        vec![2, 3, 7],
        vec![1, 5, 6],
        vec![2, 4, 6],
    ]
}

fn pappus() -> MatroidSpec {
    sparse(3, 9, pappus_lines())
}

/// Cyclic Steiner triple system on 13 points.
fn sts13() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for base in [[0, 1, 4], [0, 2, 7]] {
        for s in 0..13 {
            let mut t: Vec<usize> = base.iter().map(|x| (x + s) % 13).collect();
            t.sort_unstable();
            out.push(t);
        }
    }
    out
}

/// Hexads of S(5,6,12): the orbit of `{inf, 1, 3, 4, 5, 9}` under
/// `PSL(2, 11)` acting on the projective line, with `inf` labelled 11.
fn witt_hexads() -> Vec<Vec<usize>> {
    const P: i64 = 11;
    const INF: i64 = 11;
    let inv = |v: i64| (1..P).find(|w| v * w % P == 1).expect("nonzero residue");
    let apply = |[a, b, c, d]: [i64; 4], x: i64| -> i64 {
        if x == INF {
            return if c == 0 { INF } else { a * inv(c) % P };
        }
        let den = (c * x + d) % P;
        if den == 0 {
            INF
        } else {
            (a * x + b) % P * inv(den) % P
        }
    };
    let base = [INF, 1, 3, 4, 5, 9];
    let mut hexads = std::collections::BTreeSet::new();
    for a in 0..P {
        for bb in 0..P {
            for c in 0..P {
                for d in 0..P {
                    if (a * d - bb * c).rem_euclid(P) != 1 {
                        continue;
                    }
                    let mut h: Vec<usize> = base.iter().map(|&x| apply([a, bb, c, d], x) as usize).collect();
                    h.sort_unstable();
                    hexads.insert(h);
                }
            }
        }
    }
    hexads.into_iter().collect()
}

pub(super) fn build() -> Vec<CatalogEntry> {
    let mut c = Builder(Vec::new());
    let sd = F {
        self_dual: true,
        ..F::default()
    };

    c.add(
        "U24",
        "uniform matroid U_{2,4}, the 2-whirl",
        uni(2, 4),
        vec![],
        vec![Formula::Uniform { rank: 2, size: 4 }, Formula::Whirl { n: 2 }],
        "x^2+2x+2y+y^2",
        &["uniform matroid formula"],
        F {
            sparse_paving: true,
            fields: Some("fields with at least 3 elements"),
            ..sd
        },
    );
    c.add(
        "U25",
        "uniform matroid U_{2,5}",
        uni(2, 5),
        vec![dual(uni(3, 5))],
        vec![
            Formula::Uniform { rank: 2, size: 5 },
            Formula::Dual {
                of: b(Formula::Uniform { rank: 3, size: 5 }),
            },
        ],
        "x^2+3x+3y+2y^2+y^3",
        &["uniform matroid formula"],
        F {
            sparse_paving: true,
            fields: Some("fields with at least 4 elements"),
            ..F::default()
        },
    );
    c.add(
        "U35",
        "uniform matroid U_{3,5}",
        uni(3, 5),
        vec![dual(uni(2, 5))],
        vec![
            Formula::Uniform { rank: 3, size: 5 },
            Formula::Dual {
                of: b(Formula::Uniform { rank: 2, size: 5 }),
            },
        ],
        "x^3+2x^2+3x+3y+y^2",
        &["uniform matroid formula"],
        F {
            sparse_paving: true,
            fields: Some("fields with at least 4 elements"),
            ..F::default()
        },
    );
    c.add(
        "U36",
        "uniform matroid U_{3,6}",
        uni(3, 6),
        vec![MatroidSpec::FreeExtension { of: bs(uni(3, 5)) }],
        vec![
            Formula::Uniform { rank: 3, size: 6 },
            Formula::FreeExtension {
                of: b(Formula::Uniform { rank: 3, size: 5 }),
            },
        ],
        "x^3+3x^2+6x+6y+3y^2+y^3",
        &["uniform matroid formula"],
        F {
            sparse_paving: true,
            fields: Some("fields with at least 4 elements"),
            ..sd
        },
    );
    c.add(
        "W3",
        "wheel W_3, the cycle matroid of K_4",
        wheel_graph(3),
        vec![graphic(Graph::complete(4))],
        vec![Formula::Wheel { n: 3 }, Formula::Complete { n: 4 }, sp(3, 6, 4)],
        "x^3+3x^2+2x+4xy+2y+3y^2+y^3",
        &["sparse paving formula with 4 circuit-hyperplanes", "wheel recurrence"],
        F {
            sparse_paving: true,
            fields: REGULAR,
            ..sd
        },
    );
    c.add(
        "W4",
        "wheel W_4",
        wheel_graph(4),
        vec![],
        vec![Formula::Wheel { n: 4 }],
        "x^4+4x^3+6x^2+3x+4x^2y+4xy^2+9xy+3y+6y^2+4y^3+y^4",
        &["wheel recurrence"],
        F { fields: REGULAR, ..sd },
    );
    c.add(
        "Whirl2",
        "whirl W^2, isomorphic to U_{2,4}",
        uni(2, 4),
        vec![],
        vec![Formula::Whirl { n: 2 }],
        "x^2+2x+2y+y^2",
        &["uniform matroid formula"],
        F {
            sparse_paving: true,
            fields: Some("fields with at least 3 elements"),
            ..sd
        },
    );
    c.add(
        "Whirl3",
        "whirl W^3, the wheel W_3 with its rim relaxed",
        whirl_spec(3),
        vec![],
        vec![
            Formula::Whirl { n: 3 },
            Formula::Relax {
                of: b(Formula::Wheel { n: 3 }),
            },
            sp(3, 6, 3),
        ],
        "x^3+3x^2+3x+3xy+3y+3y^2+y^3",
        &["relaxation of the wheel W_3"],
        F {
            sparse_paving: true,
            fields: Some("fields with at least 3 elements"),
            ..sd
        },
    );
    c.add(
        "Whirl4",
        "whirl W^4, the wheel W_4 with its rim relaxed",
        whirl_spec(4),
        vec![],
        vec![
            Formula::Whirl { n: 4 },
            Formula::Relax {
                of: b(Formula::Wheel { n: 4 }),
            },
        ],
        "x^4+4x^3+6x^2+4x+4x^2y+4xy^2+8xy+4y+6y^2+4y^3+y^4",
        &["relaxation of the wheel W_4"],
        F {
            fields: Some("fields with at least 3 elements"),
            ..sd
        },
    );
    let k4e_chs = vec![vec![0, 1, 3], vec![0, 2, 4]];
    c.add(
        "Q6",
        "free extension of M(K_4 - e)",
        MatroidSpec::FreeExtension {
            of: bs(graphic(k4_minus_edge())),
        },
        vec![sparse(3, 6, k4e_chs.clone())],
        vec![
            Formula::FreeExtension { of: b(sp(3, 5, 2)) },
            Formula::Unrelax {
                of: b(Formula::Unrelax {
                    of: b(Formula::Uniform { rank: 3, size: 6 }),
                }),
            },
            sp(3, 6, 2),
        ],
        "x^3+3x^2+4x+2xy+4y+3y^2+y^3",
        &[
            "free extension formula",
            "sparse paving formula with 2 circuit-hyperplanes",
        ],
        F {
            sparse_paving: true,
            ..sd
        },
    );
    c.add(
        "P6",
        "relaxation of one circuit-hyperplane of Q6",
        relax(
            MatroidSpec::FreeExtension {
                of: bs(graphic(k4_minus_edge())),
            },
            &k4e_chs[0],
        ),
        vec![sparse(3, 6, vec![k4e_chs[1].clone()])],
        vec![Formula::Relax { of: b(sp(3, 6, 2)) }, sp(3, 6, 1)],
        "x^3+3x^2+5x+xy+5y+3y^2+y^3",
        &["sparse paving formula with 1 circuit-hyperplane"],
        F {
            sparse_paving: true,
            ..sd
        },
    );
    c.add(
        "R6",
        "2-sum of two copies of U_{2,4}",
        MatroidSpec::TwoSum {
            left: bs(uni(2, 4)),
            left_point: 0,
            right: bs(uni(2, 4)),
            right_point: 0,
        },
        vec![],
        vec![
            Formula::TwoSum {
                left_contract: b(Formula::Uniform { rank: 1, size: 3 }),
                left_delete: b(Formula::Uniform { rank: 2, size: 3 }),
                right_contract: b(Formula::Uniform { rank: 1, size: 3 }),
                right_delete: b(Formula::Uniform { rank: 2, size: 3 }),
            },
            sp(3, 6, 2),
        ],
        "x^3+3x^2+4x+2xy+4y+3y^2+y^3",
        &["2-sum formula", "sparse paving formula with 2 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: Some("fields with at least 3 elements"),
            ..sd
        },
    );
    c.add(
        "K4-e",
        "cycle matroid of K_4 minus an edge",
        graphic(k4_minus_edge()),
        vec![sparse(3, 5, k4e_chs)],
        vec![sp(3, 5, 2)],
        "x^3+2x^2+x+2xy+y+y^2",
        &["sparse paving formula with 2 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: REGULAR,
            ..F::default()
        },
    );
    let fano_fields = Some("fields of characteristic 2");
    let non_fano_fields = Some("fields of characteristic other than 2");
    c.add(
        "F7",
        "Fano plane",
        fano(),
        vec![sparse(3, 7, fano_lines())],
        vec![
            sp(3, 7, 7),
            Formula::Projective { dim: 2, q: 2 },
            Formula::Steiner { t: 2, k: 3, v: 7 },
        ],
        "x^3+4x^2+3x+7xy+3y+6y^2+3y^3+y^4",
        &["sparse paving formula with 7 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: fano_fields,
            ..F::default()
        },
    );
    c.add(
        "F7*",
        "dual of the Fano plane",
        dual(fano()),
        vec![dual(sparse(3, 7, fano_lines()))],
        vec![sp(4, 7, 7), Formula::Dual { of: b(sp(3, 7, 7)) }],
        "x^4+3x^3+6x^2+3x+7xy+3y+4y^2+y^3",
        &["duality applied to the Fano plane"],
        F {
            sparse_paving: true,
            fields: fano_fields,
            ..F::default()
        },
    );
    c.add(
        "F7-",
        "non-Fano matroid, the Fano plane with one line relaxed",
        non_fano(),
        vec![linear(
            3,
            &[&[1, 0, 0, 1, 1, 0, 1], &[0, 1, 0, 1, 0, 1, 1], &[0, 0, 1, 0, 1, 1, 1]],
        )],
        vec![
            sp(3, 7, 6),
            Formula::Relax {
                of: b(Formula::Projective { dim: 2, q: 2 }),
            },
        ],
        "x^3+4x^2+4x+6xy+4y+6y^2+3y^3+y^4",
        &["sparse paving formula with 6 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: non_fano_fields,
            ..F::default()
        },
    );
    c.add(
        "(F7-)*",
        "dual of the non-Fano matroid",
        dual(non_fano()),
        vec![],
        vec![sp(4, 7, 6), Formula::Dual { of: b(sp(3, 7, 6)) }],
        "x^4+3x^3+6x^2+4x+6xy+4y+4y^2+y^3",
        &["duality applied to the non-Fano matroid"],
        F {
            sparse_paving: true,
            fields: non_fano_fields,
            ..F::default()
        },
    );
    c.add(
        "P7",
        "ternary rank-3 sparse paving matroid P_7",
        standard(3, &[&[1, 0, 1, 1], &[1, 1, 0, 1], &[2, 1, 1, 0]]),
        vec![],
        vec![sp(3, 7, 5)],
        "x^3+4x^2+5x+5xy+5y+6y^2+3y^3+y^4",
        &["sparse paving formula with 5 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: Some("every field except GF(2)"),
            ..F::default()
        },
    );
    c.add(
        "P8",
        "ternary rank-4 sparse paving matroid P_8",
        standard(3, &[&[0, 1, 1, -1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[-1, 1, 1, 0]]),
        vec![],
        vec![sp(4, 8, 10)],
        "x^4+4x^3+10x^2+10x+10xy+10y+10y^2+4y^3+y^4",
        &["sparse paving formula with 10 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: non_fano_fields,
            ..sd
        },
    );
    c.add(
        "Q3",
        "rank-3 ternary Dowling geometry",
        linear(
            3,
            &[
                &[1, 0, 0, 1, 1, 1, 1, 0, 0],
                &[0, 1, 0, 1, -1, 0, 0, 1, 1],
                &[0, 0, 1, 0, 0, 1, -1, -1, 1],
            ],
        ),
        vec![],
        vec![Formula::Paving {
            rank: 3,
            size: 9,
            blocks: vec![(4, 3), (3, 4), (2, 6)],
        }],
        "x^3+6x^2+8x+3xy^2+10xy+8y+12y^2+10y^3+6y^4+3y^5+y^6",
        &["paving formula"],
        F {
            paving: true,
            fields: non_fano_fields,
            ..F::default()
        },
    );
    c.add(
        "Whirl3+",
        "whirl W^3 with an element added in parallel to a rim element",
        MatroidSpec::ParallelExtension {
            of: bs(whirl_spec(3)),
            element: 0,
        },
        vec![],
        vec![sum(vec![
            Formula::Whirl { n: 3 },
            Formula::Product {
                factors: vec![lit("y"), Formula::Uniform { rank: 2, size: 4 }],
            },
            Formula::OneSum {
                parts: vec![
                    Formula::Uniform { rank: 1, size: 3 },
                    Formula::Uniform { rank: 0, size: 2 },
                ],
            },
        ])],
        "x^3+3x^2+3x+x^2y+5xy+xy^2+3y+5y^2+3y^3+y^4",
        &["deletion-contraction reduction to W^3, U_{2,4} and U_{1,3} + U_{0,2}"],
        F {
            fields: Some("fields with at least 3 elements"),
            ..F::default()
        },
    );
    c.add(
        "AG(3,2)",
        "binary affine cube",
        cube(),
        vec![sparse(4, 8, cube_planes())],
        vec![
            sp(4, 8, 14),
            Formula::Affine { dim: 3, q: 2 },
            Formula::Steiner { t: 3, k: 4, v: 8 },
        ],
        "x^4+4x^3+10x^2+6x+14xy+6y+10y^2+4y^3+y^4",
        &["sparse paving formula with 14 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: fano_fields,
            ..sd
        },
    );
    c.add(
        "AG(3,2)'",
        "AG(3,2) with the twisted plane {2,4,5,7} relaxed",
        ag32_prime(),
        vec![],
        vec![
            sp(4, 8, 13),
            Formula::Relax {
                of: b(Formula::Affine { dim: 3, q: 2 }),
            },
        ],
        "x^4+4x^3+10x^2+7x+13xy+7y+10y^2+4y^3+y^4",
        &["relaxation of AG(3,2)"],
        F {
            sparse_paving: true,
            ..sd
        },
    );
    c.add(
        "R8",
        "real affine cube, AG(3,2)' with the twisted plane {1,3,6,8} relaxed",
        standard(3, &[&[-1, 1, 1, 1], &[1, -1, 1, 1], &[1, 1, -1, 1], &[1, 1, 1, -1]]),
        vec![r8_chain()],
        vec![
            sp(4, 8, 12),
            Formula::Relax {
                of: b(Formula::Relax {
                    of: b(Formula::Affine { dim: 3, q: 2 }),
                }),
            },
        ],
        "x^4+4x^3+10x^2+8x+12xy+8y+10y^2+4y^3+y^4",
        &[
            "relaxation of AG(3,2)'",
            "sparse paving formula for the real affine cube",
        ],
        F {
            sparse_paving: true,
            fields: non_fano_fields,
            ..sd
        },
    );
    let d1 = zero(CUBE_DIAGONALS[0]);
    c.add(
        "F8",
        "AG(3,2)' with the diagonal plane {1,2,7,8} relaxed; also the 3-sum of F7 and F7-",
        relax(ag32_prime(), &d1),
        vec![MatroidSpec::DeltaSum {
            first: bs(fano()),
            first_triangle: [0, 3, 1],
            second: bs(non_fano()),
            second_triangle: [0, 3, 1],
        }],
        vec![
            sp(4, 8, 12),
            Formula::DeltaSum {
                first: vec![
                    lit("x^3+x^2+x+y"),
                    lit("x^2+2xy+y^2"),
                    lit("x^2+2xy+y^2"),
                    lit("y^3+y^2+y+x"),
                    lit("x^2+2xy+y^2"),
                ],
                second: vec![
                    lit("x^3+x^2+x+y"),
                    lit("x^2+x+xy+y+y^2"),
                    lit("x^2+2xy+y^2"),
                    lit("y^3+y^2+y+x"),
                    lit("x^2+2xy+y^2"),
                ],
            },
        ],
        "x^4+4x^3+10x^2+8x+12xy+8y+10y^2+4y^3+y^4",
        &["3-sum formula on the minors of F7 and F7-", "relaxation of AG(3,2)'"],
        F {
            sparse_paving: true,
            fields: Some("no field"),
            ..sd
        },
    );
    c.add(
        "Q8",
        "R8 with the diagonal plane {1,2,7,8} relaxed",
        relax(r8_chain(), &d1),
        vec![],
        vec![sp(4, 8, 11), Formula::Relax { of: b(sp(4, 8, 12)) }],
        "x^4+4x^3+10x^2+7x+11xy+7y+10y^2+4y^3+y^4",
        &["relaxation of R8"],
        F {
            sparse_paving: true,
            fields: Some("no field"),
            ..sd
        },
    );
    c.erratum(
        "the reference x and y coefficients 7 contradict the 11 circuit-hyperplanes; \
         relaxing R8 gives 9x + 11xy + 9y, and the reference polynomial has 55 bases instead of 59",
    );
    let l8: Vec<&[usize]> = CUBE_FACES.iter().chain(&CUBE_TWISTED).copied().collect();
    c.add(
        "L8",
        "cube faces and twisted planes as circuit-hyperplanes",
        sparse(4, 8, one_based(&l8)),
        vec![],
        vec![sp(4, 8, 8)],
        "x^4+4x^3+10x^2+12x+8xy+12y+10y^2+4y^3+y^4",
        &["sparse paving formula with 8 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            ..sd
        },
    );
    c.add(
        "S8",
        "binary self-dual matroid S_8",
        standard(2, &[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 1]]),
        vec![],
        vec![sum(vec![sp(3, 7, 7), h_formula()])],
        "x^4+4x^3+7x^2+4x+10xy+3xy^2+3x^2y+4y+7y^2+4y^3+y^4",
        &["deletion-contraction on the fourth column: F7 plus H"],
        F {
            fields: fano_fields,
            ..sd
        },
    );
    c.add(
        "T8",
        "ternary sparse paving matroid [I_4 | J_4 - I_4]",
        standard(3, &[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 0]]),
        vec![],
        vec![sp(4, 8, 11)],
        "x^4+4x^3+10x^2+9x+11xy+9y+10y^2+4y^3+y^4",
        &["sparse paving formula with 11 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: Some("fields of characteristic 3"),
            ..sd
        },
    );
    c.add(
        "J",
        "ternary self-dual matroid J",
        standard(3, &[&[1, 0, 0, 1], &[1, 1, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 1]]),
        vec![],
        vec![sum(vec![
            sp(4, 7, 5),
            Formula::Thicken {
                of: b(Formula::Cycle { n: 4 }),
                rank: 3,
                k: 2,
            },
            times(
                "-y",
                Formula::Thicken {
                    of: b(Formula::Cycle { n: 3 }),
                    rank: 2,
                    k: 2,
                },
            ),
        ])],
        "x^4+4x^3+7x^2+6x+3x^2y+3xy^2+8xy+6y+7y^2+4y^3+y^4",
        &["deletion-contraction on element 2"],
        sd,
    );
    let vamos: Vec<&[usize]> = vec![
        &[1, 2, 3, 4],
        &[1, 2, 5, 6],
        &[1, 2, 7, 8],
        &[3, 4, 5, 6],
        &[3, 4, 7, 8],
    ];
    let mut vamos_plus = vamos.clone();
    vamos_plus.push(&[5, 6, 7, 8]);
    c.add(
        "V8",
        "Vamos matroid",
        sparse(4, 8, one_based(&vamos)),
        vec![relax(sparse(4, 8, one_based(&vamos_plus)), &[4, 5, 6, 7])],
        vec![sp(4, 8, 5), Formula::Relax { of: b(sp(4, 8, 6)) }],
        "x^4+4x^3+10x^2+15x+5xy+15y+10y^2+4y^3+y^4",
        &["sparse paving formula with 5 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: Some("no field"),
            ..sd
        },
    );
    c.add(
        "V8+",
        "Vamos matroid with {5,6,7,8} added as a hyperplane",
        sparse(4, 8, one_based(&vamos_plus)),
        vec![],
        vec![sp(4, 8, 6)],
        "x^4+4x^3+10x^2+14x+6xy+14y+10y^2+4y^3+y^4",
        &["sparse paving formula with 6 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            ..sd
        },
    );
    c.add(
        "R9",
        "ternary Reid geometry",
        standard(3, &[&[1, 1, 1, 1, 1, 1], &[1, -1, -1, -1, 1, 0], &[0, 0, 1, -1, 1, -1]]),
        vec![],
        vec![Formula::Paving {
            rank: 3,
            size: 9,
            blocks: vec![(3, 7), (4, 2), (2, 3)],
        }],
        "x^3+6x^2+8x+11xy+2xy^2+8y+13y^2+10y^3+6y^4+3y^5+y^6",
        &["internal and external activities", "paving formula"],
        F {
            paving: true,
            fields: Some("fields of characteristic 3"),
            ..F::default()
        },
    );
    c.add(
        "R10",
        "regular matroid R_10",
        standard(
            2,
            &[
                &[1, 1, 0, 0, 1],
                &[1, 1, 1, 0, 0],
                &[0, 1, 1, 1, 0],
                &[0, 0, 1, 1, 1],
                &[1, 0, 0, 1, 1],
            ],
        ),
        vec![],
        vec![sum(vec![
            Formula::CompleteBipartite { n: 3, m: 3 },
            Formula::Dual {
                of: b(Formula::CompleteBipartite { n: 3, m: 3 }),
            },
        ])],
        "x^5+5x^4+15x^3+20x^2+10x+15x^2y+30xy+15xy^2+10y+20y^2+15y^3+5y^4+y^5",
        &["deletions are M(K_{3,3}) and contractions are M*(K_{3,3})"],
        F { fields: REGULAR, ..sd },
    );
    c.add(
        "R12",
        "regular matroid R_12",
        standard(
            2,
            &[
                &[1, 1, 1, 0, 0, 0],
                &[1, 1, 0, 1, 0, 0],
                &[1, 0, 0, 0, 1, 0],
                &[0, 1, 0, 0, 0, 1],
                &[0, 0, 1, 0, 1, 1],
                &[0, 0, 0, 1, 1, 1],
            ],
        ),
        vec![],
        vec![],
        "x^6+6x^5+19x^4+35x^3+35x^2+14x+2x^4y+19x^3y+53x^2y+17x^2y^2+56xy+53xy^2+19xy^3+2xy^4+14y+35y^2+35y^3+19y^4+6y^5+y^6",
        &["computed from its binary representation"],
        F { fields: REGULAR, ..sd },
    );
    c.add(
        "Pappus",
        "Pappus configuration",
        pappus(),
        vec![],
        vec![sp(3, 9, 9)],
        "x^3+6x^2+12x+9xy+12y+15y^2+10y^3+6y^4+3y^5+y^6",
        &["sparse paving formula with 9 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            ..F::default()
        },
    );
    c.add(
        "nonPappus",
        "Pappus configuration with the line {7,8,9} relaxed",
        relax(pappus(), &[6, 7, 8]),
        vec![],
        vec![sp(3, 9, 8), Formula::Relax { of: b(sp(3, 9, 9)) }],
        "x^3+6x^2+13x+8xy+13y+15y^2+10y^3+6y^4+3y^5+y^6",
        &["relaxation of the Pappus matroid"],
        F {
            sparse_paving: true,
            fields: Some("no field"),
            ..F::default()
        },
    );
    c.add(
        "nonDesargues",
        "Desargues configuration with the line of perspectivity relaxed",
        sparse(
            3,
            10,
            vec![
                vec![0, 1, 4],
                vec![0, 2, 5],
                vec![0, 3, 6],
                vec![2, 3, 7],
                vec![1, 3, 8],
                vec![1, 2, 9],
                vec![5, 6, 7],
                vec![4, 6, 8],
                vec![4, 5, 9],
            ],
        ),
        vec![],
        vec![sp(3, 10, 9)],
        "x^3+7x^2+19x+9xy+19y+21y^2+15y^3+10y^4+6y^5+3y^6+y^7",
        &["sparse paving formula with 9 circuit-hyperplanes"],
        F {
            sparse_paving: true,
            fields: Some("no field"),
            ..F::default()
        },
    );
    c.add(
        "S(2,3,13)",
        "cyclic Steiner triple system on 13 points",
        sparse(3, 13, sts13()),
        vec![],
        vec![Formula::Steiner { t: 2, k: 3, v: 13 }, sp(3, 13, 26)],
        "x^3+10x^2+29x+26xy+29y+45y^2+36y^3+28y^4+21y^5+15y^6+10y^7+6y^8+3y^9+y^10",
        &["Steiner system formula"],
        F {
            sparse_paving: true,
            ..F::default()
        },
    );
    c.add(
        "S(5,6,12)",
        "small Witt design",
        sparse(6, 12, witt_hexads()),
        vec![],
        vec![Formula::Steiner { t: 5, k: 6, v: 12 }, sp(6, 12, 132)],
        "x^6+6x^5+21x^4+56x^3+126x^2+120x+132xy+120y+126y^2+56y^3+21y^4+6y^5+y^6",
        &["Steiner system formula"],
        F {
            sparse_paving: true,
            ..sd
        },
    );
    c.add(
        "PG(2,2)",
        "projective plane over GF(2)",
        linear(
            2,
            &[&[1, 0, 1, 0, 1, 0, 1], &[0, 1, 1, 0, 0, 1, 1], &[0, 0, 0, 1, 1, 1, 1]],
        ),
        vec![],
        vec![
            Formula::Projective { dim: 2, q: 2 },
            Formula::QCone {
                of: b(Formula::Uniform { rank: 2, size: 3 }),
                rank: 2,
                q: 2,
            },
        ],
        "x^3+4x^2+3x+7xy+3y+6y^2+3y^3+y^4",
        &["q-cone of the three-point line"],
        F {
            sparse_paving: true,
            fields: fano_fields,
            ..F::default()
        },
    );
    c.add(
        "PG(2,3)",
        "projective plane over GF(3)",
        linear(
            3,
            &[
                &[1, 0, 0, 1, 2, 2, 1, 1, 0, 0, 1, 1, 2],
                &[0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1],
                &[0, 0, 1, 0, 1, 2, 1, 2, 1, 2, 2, 1, 0],
            ],
        ),
        vec![],
        vec![
            Formula::Projective { dim: 2, q: 3 },
            Formula::QCone {
                of: b(Formula::Uniform { rank: 2, size: 4 }),
                rank: 2,
                q: 3,
            },
        ],
        "x^3+10x^2+13xy^2+26xy+16x+16y+32y^2+36y^3+28y^4+21y^5+15y^6+10y^7+6y^8+3y^9+y^10",
        &["coboundary polynomial of PG(2,3)"],
        F {
            paving: true,
            fields: Some("fields of characteristic 3"),
            ..F::default()
        },
    );
    c.add(
        "AG(2,3)",
        "affine plane over GF(3)",
        linear(
            3,
            &[
                &[0, 0, 0, 1, 1, 1, 2, 2, 2],
                &[0, 1, 2, 0, 1, 2, 0, 1, 2],
                &[1, 1, 1, 1, 1, 1, 1, 1, 1],
            ],
        ),
        vec![],
        vec![
            Formula::Affine { dim: 2, q: 3 },
            Formula::Steiner { t: 2, k: 3, v: 9 },
            sp(3, 9, 12),
        ],
        "x^3+6x^2+12xy+9x+9y+15y^2+10y^3+6y^4+3y^5+y^6",
        &["coboundary polynomial of AG(2,3)"],
        F {
            sparse_paving: true,
            fields: Some("fields of characteristic 3"),
            ..F::default()
        },
    );
    c.add(
        "K5",
        "cycle matroid of the complete graph K_5",
        graphic(Graph::complete(5)),
        vec![],
        vec![Formula::Complete { n: 5 }],
        "x^4+6x^3+11x^2+6x+10x^2y+20xy+15xy^2+5xy^3+6y+15y^2+15y^3+10y^4+4y^5+y^6",
        &["complete graph formula"],
        F {
            fields: REGULAR,
            ..F::default()
        },
    );
    c.add(
        "K33",
        "cycle matroid of the complete bipartite graph K_{3,3}",
        graphic(Graph::complete_bipartite(3, 3)),
        vec![],
        vec![Formula::CompleteBipartite { n: 3, m: 3 }],
        "x^5+4x^4+10x^3+11x^2+5x+9x^2y+15xy+6xy^2+5y+9y^2+5y^3+y^4",
        &["complete bipartite graph formula"],
        F {
            fields: REGULAR,
            ..F::default()
        },
    );
    c.add(
        "L22",
        "the 2 x 2 grid graph, a 4-cycle",
        graphic(Graph::grid(2, 2)),
        vec![graphic(Graph::cycle(4))],
        vec![
            Formula::Grid2 { n: 2 },
            Formula::GridTransfer { rows: 2, cols: 2 },
            Formula::Cycle { n: 4 },
        ],
        "x^3+x^2+x+y",
        &["initial condition of the ladder recurrence"],
        F {
            sparse_paving: true,
            fields: REGULAR,
            ..F::default()
        },
    );
    c.add(
        "M3",
        "Catalan lattice path matroid M_3",
        MatroidSpec::LatticePath {
            lower: "EEENNN".into(),
            upper: "ENENEN".into(),
        },
        vec![],
        vec![Formula::Catalan { n: 3 }],
        "x^3y+x^2y+x^2y^2+xy^2+xy^3",
        &["Catalan matroid formula"],
        F {
            fields: Some("every sufficiently large field"),
            ..sd
        },
    );
    c.add(
        "H",
        "K_{2,4} with an edge contracted",
        graphic(h_graph()),
        vec![],
        vec![h_formula()],
        "x^4+3x^3+3x^2+x+3xy+3x^2y+3xy^2+y+y^2+y^3",
        &["deletion-contraction on an edge of K_{2,4}"],
        F {
            fields: REGULAR,
            ..F::default()
        },
    );
    c.0
}
