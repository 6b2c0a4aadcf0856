//! Named matroids with construction recipes and their reference Tutte
//! polynomials. Verification runs every available path and reports any
//! disagreement with the reference polynomial as an erratum candidate.

mod entries;
mod formula;

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

pub use formula::Formula;

use crate::bipoly::BiPoly;
use crate::engines::{DcOptions, Engine};
use crate::error::{Error, Result};
use crate::matroid::io::MatroidSpec;
use crate::matroid::Matroid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub self_dual: bool,
    pub sparse_paving: bool,
    pub paving: bool,
    pub representable_fields: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub recipe: MatroidSpec,
    /// Further constructions of an isomorphic matroid.
    pub alternative_recipes: Vec<MatroidSpec>,
    pub formulas: Vec<Formula>,
    /// The reference polynomial, verbatim.
    pub ground_truth: BiPoly,
    pub provenance: Vec<String>,
    pub flags: Flags,
    /// Known discrepancy between the reference polynomial and the recipe.
    pub erratum: Option<String>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<Matroid> {
        self.recipe.build()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "description": self.description,
            "recipe": self.recipe.to_json(),
            "alternative_recipes": self.alternative_recipes.iter().map(MatroidSpec::to_json).collect::<Vec<_>>(),
            "formulas": self.formulas,
            "polynomial": self.ground_truth.to_json_triples(),
            "provenance": self.provenance,
            "flags": self.flags,
            "erratum": self.erratum,
        })
    }
}

static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();

/// All entries, in a fixed order.
pub fn entries() -> &'static [CatalogEntry] {
    CATALOG.get_or_init(entries::build)
}

pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name.as_str()).collect()
}

/// Finds an entry by name, ignoring ASCII case.
pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    entries()
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// The whole catalog as one JSON document.
pub fn to_json() -> String {
    let v: Vec<serde_json::Value> = entries().iter().map(CatalogEntry::to_json_value).collect();
    serde_json::to_string_pretty(&v).expect("catalog serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathResult {
    pub path: String,
    pub polynomial: Option<BiPoly>,
    pub error: Option<String>,
    pub matches_ground_truth: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every path succeeded and reproduced the reference polynomial.
    Pass,
    /// Some path produced a polynomial different from the reference one.
    ErratumCandidate,
    /// No disagreement, but some path failed to produce a polynomial.
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub ground_truth: BiPoly,
    pub paths: Vec<PathResult>,
    /// All successful paths produced the same polynomial.
    pub paths_agree: bool,
    pub verdict: Verdict,
}

impl VerifyReport {
    pub fn successful_paths(&self) -> usize {
        self.paths.iter().filter(|p| p.polynomial.is_some()).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {:?}\n", self.name, self.verdict);
        for p in &self.paths {
            let status = match (&p.polynomial, &p.error) {
                (Some(_), _) if p.matches_ground_truth => "match".to_string(),
                (Some(t), _) => format!("MISMATCH {}", t.to_text()),
                (None, Some(e)) => format!("error: {e}"),
                (None, None) => "no result".to_string(),
            };
            out.push_str(&format!("  {:<40} {}\n", p.path, status));
        }
        out
    }
}

enum Job<'a> {
    Engine(Engine, &'a MatroidSpec, Option<usize>),
    Formula(&'a Formula),
}

/// Runs the given engines on the recipe and every alternative recipe, and
/// evaluates every closed form.
pub fn verify_entry(entry: &CatalogEntry, engines: &[Engine], opts: &DcOptions) -> VerifyReport {
    let mut jobs = Vec::new();
    for &e in engines {
        jobs.push(Job::Engine(e, &entry.recipe, None));
    }
    for (i, alt) in entry.alternative_recipes.iter().enumerate() {
        for &e in engines {
            jobs.push(Job::Engine(e, alt, Some(i + 1)));
        }
    }
    jobs.extend(entry.formulas.iter().map(Job::Formula));
    let paths: Vec<PathResult> = jobs
        .par_iter()
        .map(|job| {
            let (path, result) = match job {
                Job::Engine(e, spec, alt) => {
                    let label = match alt {
                        None => e.name().to_string(),
                        Some(i) => format!("{}[alt {i}]", e.name()),
                    };
                    (label, spec.build().and_then(|m| e.run(&m, opts)))
                }
                Job::Formula(f) => (format!("formula {}", f.label()), f.eval()),
            };
            match result {
                Ok(t) => PathResult {
                    path,
                    matches_ground_truth: t == entry.ground_truth,
                    polynomial: Some(t),
                    error: None,
                },
                Err(e) => PathResult {
                    path,
                    polynomial: None,
                    error: Some(e.to_string()),
                    matches_ground_truth: false,
                },
            }
        })
        .collect();
    let computed: Vec<&BiPoly> = paths.iter().filter_map(|p| p.polynomial.as_ref()).collect();
    let paths_agree = computed.windows(2).all(|w| w[0] == w[1]);
    let verdict = if paths.iter().any(|p| p.polynomial.is_some() && !p.matches_ground_truth) {
        Verdict::ErratumCandidate
    } else if computed.len() < paths.len() || computed.is_empty() {
        Verdict::Incomplete
    } else {
        Verdict::Pass
    };
    VerifyReport {
        name: entry.name.clone(),
        ground_truth: entry.ground_truth.clone(),
        paths,
        paths_agree,
        verdict,
    }
}

pub fn verify(name: &str, engines: &[Engine]) -> Result<VerifyReport> {
    Ok(verify_entry(lookup(name)?, engines, &DcOptions::default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{tutte_dc, tutte_subset};
    use crate::families::relax_poly;
    use crate::matroid::{bases, ElementSet};
    use num_bigint::BigInt;

    fn gt(name: &str) -> BiPoly {
        lookup(name).unwrap().ground_truth.clone()
    }

    #[test]
    fn corpus_size_and_unique_names() {
        let names = names();
        assert_eq!(names.len(), 48);
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }

    #[test]
    fn lookup_examples() {
        assert_eq!(gt("F7"), "x^3+4x^2+3x+7xy+3y+6y^2+3y^3+y^4".parse().unwrap());
        let r10 = gt("R10");
        assert_eq!(r10.swap_xy(), r10);
        let np = gt("nonPappus");
        assert_eq!(np.coeff(1, 0), BigInt::from(13));
        assert_eq!(np.coeff(1, 1), BigInt::from(8));
        assert_eq!(lookup("f7").unwrap().name, "F7");
        assert!(matches!(lookup("F9"), Err(Error::UnknownEntry(_))));
    }

    #[test]
    fn every_entry_reproduces_its_polynomial() {
        let reports: Vec<(bool, VerifyReport)> = entries()
            .par_iter()
            .map(|e| {
                (
                    e.erratum.is_some(),
                    verify_entry(e, &[Engine::Subset, Engine::Dc], &DcOptions::default()),
                )
            })
            .collect();
        let failures: Vec<String> = reports
            .iter()
            .filter(|(erratum, r)| !erratum && r.verdict != Verdict::Pass)
            .map(|(_, r)| r.to_text())
            .collect();
        assert!(failures.is_empty(), "{}", failures.join("\n"));
        for (_, r) in reports.iter().filter(|(erratum, _)| *erratum) {
            assert_eq!(r.verdict, Verdict::ErratumCandidate, "{}", r.name);
            assert!(r.paths_agree, "{}", r.name);
        }
    }

    #[test]
    fn verify_reports_paths() {
        let r = verify("Q6", &[Engine::Subset, Engine::Dc]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.paths_agree);
        assert!(r.paths.iter().any(|p| p.path.contains("free_ext")));
        assert!(r.paths.iter().any(|p| p.path.contains("unrelax")));
        let u = verify("U24", &Engine::ALL).unwrap();
        assert_eq!(u.verdict, Verdict::Pass);
        assert!(u.successful_paths() >= 4);
    }

    #[test]
    fn mismatches_are_reported_not_raised() {
        let mut e = lookup("F7").unwrap().clone();
        e.ground_truth = &e.ground_truth + &BiPoly::x();
        let r = verify_entry(&e, &[Engine::Subset], &DcOptions::default());
        assert_eq!(r.verdict, Verdict::ErratumCandidate);
        assert!(r.paths_agree);
        assert!(r.to_text().contains("MISMATCH"));
    }

    #[test]
    fn tutte_equivalent_pairs() {
        assert_eq!(gt("Q6"), gt("R6"));
        assert_eq!(gt("R8"), gt("F8"));
        assert_eq!(
            names().iter().filter(|n| lookup(n).unwrap().erratum.is_some()).count(),
            1
        );
        assert_eq!(gt("PG(2,2)"), gt("F7"));
        assert_eq!(gt("Whirl2"), gt("U24"));
    }

    #[test]
    fn dual_pairs_swap_variables() {
        for (a, b) in [("F7", "F7*"), ("F7-", "(F7-)*"), ("U25", "U35")] {
            assert_eq!(gt(a).swap_xy(), gt(b), "{a} / {b}");
        }
    }

    #[test]
    fn self_dual_flags_are_symmetric() {
        for e in entries().iter().filter(|e| e.flags.self_dual) {
            assert_eq!(e.ground_truth.swap_xy(), e.ground_truth, "{}", e.name);
        }
    }

    fn is_paving(m: &Matroid) -> bool {
        let r = m.full_rank();
        r == 0 || crate::matroid::k_subsets(m.ground_size(), r - 1).all(|s| m.is_independent(s))
    }

    #[test]
    fn structural_flags() {
        for e in entries() {
            let m = e.build().unwrap();
            assert_eq!(is_paving(&m), e.flags.paving, "paving flag of {}", e.name);
            let sparse = is_paving(&m) && is_paving(&m.dual());
            assert_eq!(sparse, e.flags.sparse_paving, "sparse paving flag of {}", e.name);
        }
    }

    #[test]
    fn basis_counts() {
        let one = BigInt::from(1);
        for e in entries() {
            let m = e.build().unwrap();
            let count = BigInt::from(bases(&m).unwrap().len());
            if e.erratum.is_some() {
                assert_ne!(e.ground_truth.eval_int(&one, &one), count, "{}", e.name);
                continue;
            }
            assert_eq!(e.ground_truth.eval_int(&one, &one), count, "{}", e.name);
            let two = BigInt::from(2);
            assert_eq!(
                e.ground_truth.eval_int(&two, &two),
                BigInt::from(1u64) << m.ground_size(),
                "{}",
                e.name
            );
        }
    }

    #[test]
    fn at_least_two_paths_for_small_entries() {
        for e in entries() {
            let m = e.build().unwrap();
            if m.ground_size() <= 13 {
                let paths = 2 * (1 + e.alternative_recipes.len()) + e.formulas.len();
                assert!(paths >= 2, "{}", e.name);
            }
        }
    }

    #[test]
    fn relaxing_circuit_hyperplanes() {
        let e = lookup("Pappus").unwrap();
        let m = e.build().unwrap();
        let t = tutte_subset(&m).unwrap();
        let line: ElementSet = [0usize, 4, 8].into_iter().collect();
        assert_eq!(tutte_subset(&m.relax(line).unwrap()).unwrap(), relax_poly(&t));
    }

    #[test]
    fn s8_minors() {
        let s8 = lookup("S8").unwrap().build().unwrap();
        assert_eq!(tutte_dc(&s8.contract(3).unwrap()).unwrap(), gt("F7"));
        assert_eq!(tutte_dc(&s8.delete(3).unwrap()).unwrap(), gt("H"));
    }

    #[test]
    fn r10_minors_are_k33() {
        let r10 = lookup("R10").unwrap().build().unwrap();
        let k33 = gt("K33");
        for e in 0..10 {
            assert_eq!(tutte_dc(&r10.delete(e).unwrap()).unwrap(), k33);
            assert_eq!(tutte_dc(&r10.contract(e).unwrap()).unwrap(), k33.swap_xy());
        }
    }

    #[test]
    fn witt_design_is_a_steiner_system() {
        let e = lookup("S(5,6,12)").unwrap();
        let MatroidSpec::SparsePaving {
            circuit_hyperplanes, ..
        } = &e.recipe
        else {
            panic!("unexpected recipe");
        };
        assert_eq!(circuit_hyperplanes.len(), 132);
        let mut seen = std::collections::HashSet::new();
        for h in circuit_hyperplanes {
            let set: ElementSet = h.iter().copied().collect();
            for f in crate::matroid::k_subsets(12, 5).filter(|f| f.is_subset(set)) {
                assert!(seen.insert(f.bits()));
            }
        }
        assert_eq!(seen.len(), 792);
    }

    #[test]
    fn json_document() {
        let doc: serde_json::Value = serde_json::from_str(&to_json()).unwrap();
        let arr = doc.as_array().unwrap();
        assert_eq!(arr.len(), 48);
        let f7 = arr.iter().find(|v| v["name"] == "F7").unwrap();
        let spec = MatroidSpec::from_json(f7["recipe"].as_str().unwrap()).unwrap();
        assert_eq!(spec, lookup("F7").unwrap().recipe);
        let triples: Vec<(u32, u32, String)> = serde_json::from_value(f7["polynomial"].clone()).unwrap();
        assert_eq!(BiPoly::from_json_triples(&triples).unwrap(), gt("F7"));
        assert_eq!(f7["flags"]["sparse_paving"], true);
    }
}
