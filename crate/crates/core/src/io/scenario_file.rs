//! The JSON scenario format.
//!
//! ```json
//! {
//!   "group": {"kind": "cyclic", "n": 2},
//!   "ambient": {"dim": 1, "genus": 0},
//!   "sheaf": {"kind": "general", "rank": 1, "degree": 0},
//!   "strata": [
//!     {"id": "P0", "dim": 0, "stabilizer": [0, 1],
//!      "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
//!      "sheaf": [{"character": "trivial", "rank": 1}]}
//!   ]
//! }
//! ```
//!
//! Characters map each stabilizer element (by its index in the acting group)
//! to a root of unity `[N, k] = ζ_N^k`, or are the string `"trivial"`.
//! Class-function literals map element indices to an integer, a `"p/q"`
//! string or a cyclotomic `[N, ["c0", "c1", …]]`; every class must be hit.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

use crate::chevalley_weil::{CurveNumbers, Scenario, SheafKind, SurfaceInvariants};
use crate::cyclotomic::{parse_rational, Cyclotomic, Rational};
use crate::group::{FiniteGroup, Subgroup};
use crate::ramification::{NormalEigen, SheafEigen, Stratum, StratumDim};
use crate::repring::{CharacterTable, ClassFunction, LinearCharacter};
use crate::{Error, Result};

/// An error together with the line of the scenario file it concerns.
#[derive(Clone, Debug, PartialEq)]
pub struct LocatedError {
    pub line: Option<usize>,
    pub error: Error,
}

impl fmt::Display for LocatedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.error),
            None => write!(f, "{}", self.error),
        }
    }
}

impl std::error::Error for LocatedError {}

impl From<Error> for LocatedError {
    fn from(error: Error) -> Self {
        LocatedError { line: None, error }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileDoc {
    group: GroupDoc,
    #[serde(default)]
    character_table: Option<TableDoc>,
    ambient: AmbientDoc,
    strata: Vec<StratumDoc>,
    sheaf: SheafDoc,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum GroupDoc {
    Cyclic { n: usize },
    AbelianProduct { orders: Vec<usize> },
    Cayley { table: Vec<Vec<usize>> },
    Permutations { generators: Vec<Vec<Vec<usize>>> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    #[serde(default)]
    names: Vec<String>,
    rows: Vec<BTreeMap<String, ValueDoc>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AmbientDoc {
    Curve(CurveAmbientDoc),
    Surface(SurfaceAmbientDoc),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveAmbientDoc {
    dim: Dim1,
    genus: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceAmbientDoc {
    dim: Dim2,
    #[serde(rename = "chi_O")]
    chi_o: i64,
    #[serde(rename = "K2")]
    k2: i64,
    #[serde(default)]
    curves: BTreeMap<String, CurveNumbersDoc>,
}

#[derive(Deserialize)]
#[serde(try_from = "u8")]
struct Dim1;

impl TryFrom<u8> for Dim1 {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        if v == 1 { Ok(Dim1) } else { Err(format!("expected dim 1, got {v}")) }
    }
}

#[derive(Deserialize)]
#[serde(try_from = "u8")]
struct Dim2;

impl TryFrom<u8> for Dim2 {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        if v == 2 { Ok(Dim2) } else { Err(format!("expected dim 2, got {v}")) }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveNumbersDoc {
    #[serde(rename = "KC")]
    k_dot_c: i64,
    #[serde(rename = "C2")]
    self_intersection: i64,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum SheafDoc {
    General {
        rank: u32,
        #[serde(default)]
        degree: Option<i64>,
        #[serde(default)]
        euler: Option<ValueDoc>,
    },
    CanonicalPower { n: i64 },
    Cotangent,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DimDoc {
    Number(u8),
    Word(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumDoc {
    id: String,
    dim: DimDoc,
    stabilizer: Vec<usize>,
    #[serde(default)]
    normal: Vec<NormalDoc>,
    #[serde(default)]
    sheaf: Vec<SheafPieceDoc>,
    #[serde(default)]
    genus: u32,
    #[serde(default)]
    ambient_equivariant_chi: Option<BTreeMap<String, ValueDoc>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NormalDoc {
    character: CharacterDoc,
    #[serde(default = "one")]
    multiplicity: u32,
    #[serde(default)]
    degree: i64,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SheafPieceDoc {
    character: CharacterDoc,
    rank: u32,
    #[serde(default)]
    degree: i64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CharacterDoc {
    Named(String),
    Roots(BTreeMap<String, (u64, i64)>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ValueDoc {
    Integer(i64),
    Text(String),
    Cyclotomic(Cyclotomic),
}

impl ValueDoc {
    fn to_cyclotomic(&self) -> Result<Cyclotomic> {
        Ok(match self {
            ValueDoc::Integer(n) => Cyclotomic::from_integer(*n),
            ValueDoc::Text(s) => Cyclotomic::from_rational(parse_rational(s)?),
            ValueDoc::Cyclotomic(c) => c.clone(),
        })
    }

    fn to_rational(&self) -> Result<Rational> {
        self.to_cyclotomic()?.to_rational()
    }
}

/// 1-based line of the first occurrence of `needle` in `source`.
fn line_of(source: &str, needle: &str) -> Option<usize> {
    source
        .find(needle)
        .map(|at| source[..at].matches('\n').count() + 1)
}

fn stratum_line(source: &str, id: &str) -> Option<usize> {
    let quoted = format!("\"{id}\"");
    source
        .match_indices(&quoted)
        .find(|(at, _)| {
            let before = source[..*at].trim_end();
            before.ends_with(':') && before[..before.len() - 1].trim_end().ends_with("\"id\"")
        })
        .map(|(at, _)| source[..at].matches('\n').count() + 1)
}

// Map keys arrive as strings, and untagged enums cannot coerce them to integers.
fn element_index(key: &str) -> Result<usize> {
    key.trim()
        .parse()
        .map_err(|_| Error::invalid(format!("{key:?} is not an element index")))
}

fn build_group(doc: &GroupDoc) -> Result<Arc<FiniteGroup>> {
    match doc {
        GroupDoc::Cyclic { n } => FiniteGroup::cyclic(*n),
        GroupDoc::AbelianProduct { orders } => FiniteGroup::abelian_product(orders),
        GroupDoc::Cayley { table } => FiniteGroup::from_cayley_table(table),
        GroupDoc::Permutations { generators } => FiniteGroup::from_permutation_generators(generators),
    }
}

/// A class function on `h.local()` from a literal keyed by parent indices
/// of members of `h`.
fn class_function_on(h: &Subgroup, literal: &BTreeMap<String, ValueDoc>) -> Result<ClassFunction> {
    let local = h.local();
    let mut values: Vec<Option<Cyclotomic>> = vec![None; local.num_classes()];
    for (key, v) in literal {
        let g = element_index(key)?;
        let l = h.to_local(g).ok_or_else(|| {
            Error::invalid(format!("class-function literal names element {g}, which is outside its group"))
        })?;
        let class = local.class_of(l);
        let v = v.to_cyclotomic()?;
        match &values[class] {
            Some(prev) if *prev != v => {
                return Err(Error::invalid(format!(
                    "class-function literal gives conjugate elements different values ({prev} and {v})"
                )))
            }
            _ => values[class] = Some(v),
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(class, v)| {
            v.ok_or_else(|| {
                Error::invalid(format!(
                    "class-function literal misses the class of element {}",
                    h.to_parent(local.class_representative(class))
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(Arc::clone(local), values)
}

fn character_on(h: &Subgroup, doc: &CharacterDoc) -> Result<LinearCharacter> {
    match doc {
        CharacterDoc::Named(name) if name == "trivial" => Ok(LinearCharacter::trivial(h.local())),
        CharacterDoc::Named(name) => Err(Error::InvalidCharacter(format!(
            "unknown character name {name:?}; use \"trivial\" or an element → [N, k] map"
        ))),
        CharacterDoc::Roots(map) => {
            let mut roots = vec![None; h.order()];
            for (key, &root) in map {
                let g = element_index(key)?;
                let l = h.to_local(g).ok_or_else(|| {
                    Error::InvalidCharacter(format!("element {g} is not in the stabilizer"))
                })?;
                roots[l] = Some(root);
            }
            let roots = roots
                .into_iter()
                .enumerate()
                .map(|(l, r)| {
                    r.ok_or_else(|| {
                        Error::InvalidCharacter(format!("no value for stabilizer element {}", h.to_parent(l)))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            LinearCharacter::from_roots(h.local(), &roots)
        }
    }
}

fn build_stratum(group: &Arc<FiniteGroup>, doc: &StratumDoc) -> Result<Stratum> {
    let dim = match &doc.dim {
        DimDoc::Number(0) => StratumDim::Point,
        DimDoc::Number(1) => StratumDim::Curve,
        DimDoc::Word(w) if w == "ambient" => StratumDim::Ambient,
        DimDoc::Number(n) => return Err(Error::stratum(&doc.id, format!("unsupported dim {n}"))),
        DimDoc::Word(w) => return Err(Error::stratum(&doc.id, format!("unsupported dim {w:?}"))),
    };
    let stabilizer = group.subgroup(&doc.stabilizer)?;
    let normal = doc
        .normal
        .iter()
        .map(|n| {
            Ok(NormalEigen {
                character: character_on(&stabilizer, &n.character)?,
                multiplicity: n.multiplicity,
                degree: n.degree,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let sheaf = doc
        .sheaf
        .iter()
        .map(|s| {
            Ok(SheafEigen {
                character: character_on(&stabilizer, &s.character)?,
                rank: s.rank,
                degree: s.degree,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ambient_equivariant_chi = doc
        .ambient_equivariant_chi
        .as_ref()
        .map(|lit| class_function_on(&stabilizer, lit))
        .transpose()?;
    Ok(Stratum {
        id: doc.id.clone(),
        dim,
        stabilizer,
        normal,
        sheaf,
        genus: doc.genus,
        ambient_equivariant_chi,
    })
}

fn at_line(line: Option<usize>) -> impl Fn(Error) -> LocatedError {
    move |error| LocatedError { line, error }
}

/// Parses and validates a scenario file. Errors carry the line they
/// concern where one can be found.
pub fn parse_scenario(source: &str) -> std::result::Result<Scenario, LocatedError> {
    let doc: FileDoc = serde_json::from_str(source).map_err(|e| LocatedError {
        line: Some(e.line()),
        error: Error::InvalidInput(e.to_string()),
    })?;
    let group = build_group(&doc.group).map_err(at_line(line_of(source, "\"group\"")))?;

    let table_line = line_of(source, "\"character_table\"");
    let table = match &doc.character_table {
        Some(t) => {
            let whole = group.whole();
            let rows = t
                .rows
                .iter()
                .map(|r| class_function_on(&whole, r))
                .collect::<Result<Vec<_>>>()
                .map_err(at_line(table_line))?;
            CharacterTable::from_rows(&group, t.names.clone(), rows).map_err(at_line(table_line))?
        }
        None => CharacterTable::abelian(&group).map_err(at_line(line_of(source, "\"group\"")))?,
    };

    let mut strata = Vec::with_capacity(doc.strata.len());
    for s in &doc.strata {
        strata.push(build_stratum(&group, s).map_err(at_line(stratum_line(source, &s.id)))?);
    }

    let sheaf_line = line_of(source, "\"sheaf\"");
    let ambient_line = line_of(source, "\"ambient\"");
    let (kind, rank, euler) = match &doc.sheaf {
        SheafDoc::General { rank, degree, euler } => {
            (SheafKind::General, *rank, (*degree, euler.as_ref()))
        }
        SheafDoc::CanonicalPower { n } => (SheafKind::CanonicalPower(*n), 1, (None, None)),
        SheafDoc::Cotangent => (SheafKind::Cotangent, 2, (None, None)),
    };

    let locate = |e: Error| -> LocatedError {
        let line = match &e {
            Error::InvalidStratum { id, .. } | Error::EmptyHZ(id) => stratum_line(source, id),
            Error::InvalidTable(_) => table_line,
            Error::HypothesisViolation(_) => sheaf_line,
            _ => None,
        };
        LocatedError { line, error: e }
    };

    let scenario = match doc.ambient {
        AmbientDoc::Curve(c) => {
            let degree = match (kind, euler) {
                (SheafKind::General, (Some(d), None)) => d,
                (SheafKind::General, _) => {
                    return Err(LocatedError {
                        line: sheaf_line,
                        error: Error::invalid("on a curve the sheaf is given by rank and degree"),
                    })
                }
                _ => {
                    return Err(LocatedError {
                        line: sheaf_line,
                        error: Error::invalid("sheaf presets are defined on surfaces"),
                    })
                }
            };
            let _ = c.dim;
            Scenario::on_curve(table, c.genus, rank, degree, strata).map_err(locate)?
        }
        AmbientDoc::Surface(s) => {
            let _ = s.dim;
            let invariants = SurfaceInvariants {
                chi_o: s.chi_o,
                k2: s.k2,
                curves: s
                    .curves
                    .iter()
                    .map(|(id, c)| {
                        (id.clone(), CurveNumbers { k_dot_c: c.k_dot_c, self_intersection: c.self_intersection })
                    })
                    .collect(),
            };
            match kind {
                SheafKind::General => {
                    let euler = match euler {
                        (None, Some(v)) => v.to_rational().map_err(at_line(sheaf_line))?,
                        _ => {
                            return Err(LocatedError {
                                line: sheaf_line,
                                error: Error::invalid("on a surface a general sheaf is given by rank and euler"),
                            })
                        }
                    };
                    Scenario::on_surface(table, Some(invariants), rank, euler, strata).map_err(locate)?
                }
                preset => {
                    let base = Scenario {
                        group: Arc::clone(&group),
                        table,
                        ambient_dim: 2,
                        ambient_genus: None,
                        global_euler: Rational::from_integer(0.into()),
                        sheaf_rank: 0,
                        strata,
                        surface_invariants: Some(invariants),
                        sheaf_kind: SheafKind::General,
                    };
                    if let Some(z) = base.strata.iter().find(|z| !z.sheaf.is_empty()) {
                        return Err(LocatedError {
                            line: stratum_line(source, &z.id),
                            error: Error::stratum(&z.id, "sheaf data is derived from the preset and must be omitted"),
                        });
                    }
                    base.with_sheaf_preset(preset).map_err(locate)?
                }
            }
        }
    };
    let _ = ambient_line;
    Ok(scenario)
}

#[cfg(test)]
mod tests {
    use super::*;

    const ANTIPODE: &str = r#"{
  "group": {"kind": "cyclic", "n": 2},
  "ambient": {"dim": 1, "genus": 0},
  "sheaf": {"kind": "general", "rank": 1, "degree": 0},
  "strata": [
    {"id": "P0", "dim": 0, "stabilizer": [0, 1],
     "normal": [{"character": {"0": [1, 0], "1": [2, 1]}, "multiplicity": 1}],
     "sheaf": [{"character": "trivial", "rank": 1}]},
    {"id": "Pinf", "dim": 0, "stabilizer": [0, 1],
     "normal": [{"character": {"0": [1, 0], "1": [2, 1]}}],
     "sheaf": [{"character": "trivial", "rank": 1}]}
  ]
}"#;

    #[test]
    fn parses_a_curve_scenario() {
        let s = parse_scenario(ANTIPODE).unwrap();
        assert_eq!(s.strata.len(), 2);
        assert_eq!(s.global_euler, Rational::from_integer(1.into()));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let bad = ANTIPODE.replace("\"genus\": 0", "\"genus\": 0, \"colour\": 3");
        let err = parse_scenario(&bad).unwrap_err();
        assert!(matches!(err.error, Error::InvalidInput(_)));
        let bad = ANTIPODE.replace("\"multiplicity\": 1}", "\"multiplicity\": 1, \"x\": 0}");
        assert_eq!(parse_scenario(&bad).unwrap_err().line, Some(7));
    }

    #[test]
    fn stratum_errors_point_at_the_stratum() {
        let bad = ANTIPODE.replace("\"1\": [2, 1]}}]", "\"1\": [1, 0]}}]");
        let err = parse_scenario(&bad).unwrap_err();
        assert!(matches!(err.error, Error::InvalidStratum { ref id, .. } if id == "Pinf"));
        assert_eq!(err.line, Some(9));
    }

    #[test]
    fn non_closed_stabilizer() {
        let g3 = ANTIPODE.replace("\"n\": 2", "\"n\": 3").replace("[0, 1],\n     \"normal\": [{\"character\": {\"0\": [1, 0], \"1\": [2, 1]}, \"multiplicity\": 1}]", "[0, 1],\n     \"normal\": []");
        let err = parse_scenario(&g3).unwrap_err();
        assert!(matches!(err.error, Error::NotAGroup(_)));
        assert_eq!(err.line, Some(6));
    }

    #[test]
    fn class_function_literals_must_cover_classes() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let lit = BTreeMap::from([("0".to_string(), ValueDoc::Integer(1))]);
        assert!(class_function_on(&g.whole(), &lit).is_err());
        let lit = BTreeMap::from([("0".to_string(), ValueDoc::Integer(1)), ("1".to_string(), ValueDoc::Text("-1/2".into()))]);
        let cf = class_function_on(&g.whole(), &lit).unwrap();
        assert_eq!(cf.at(1), &Cyclotomic::from_rational(crate::cyclotomic::rational(-1, 2)));
    }
}
