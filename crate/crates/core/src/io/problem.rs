use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;
use thiserror::Error;

use crate::symplectic::{BaseKind, HolonomyEntry, HolonomyProblem, ProblemError, TwistWord};
use crate::ZMatrix;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum InputError {
    /// Not JSON, wrong schema, or a word that does not follow the letter grammar.
    #[error("malformed problem file: {0}")]
    Malformed(String),
    #[error("invalid problem: {0}")]
    Invalid(#[from] ProblemError),
}

impl InputError {
    pub fn exit_code(&self) -> u8 {
        match self {
            InputError::Malformed(_) => super::EXIT_MALFORMED,
            InputError::Invalid(_) => super::EXIT_FAILURE,
        }
    }
}

/// On-disk problem description.
///
/// ```json
/// {
///   "schema_version": 1,
///   "fiber_genus": 2,
///   "base": {"type": "closed", "genus": 1},
///   "holonomy": [{"word": "Ta1"}, {"matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}]
/// }
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema_version: u32,
    pub fiber_genus: usize,
    pub base: BaseSpec,
    pub holonomy: Vec<EntrySpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseSpec {
    #[serde(rename = "type")]
    pub kind: BaseKind,
    pub genus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum EntrySpec {
    /// Row-major integer matrix; entries may exceed 64 bits.
    Matrix(Vec<Vec<Number>>),
    /// Whitespace-separated twist letters, leftmost acting first.
    Word(String),
}

pub(crate) fn int_to_json(x: &BigInt) -> Number {
    x.to_string().parse().expect("decimal integer is a JSON number")
}

pub(crate) fn int_from_json(n: &Number) -> Result<BigInt, String> {
    let text = n.to_string();
    if text.contains(['.', 'e', 'E']) {
        return Err(format!("{text} is not an integer"));
    }
    text.parse().map_err(|_| format!("{text} is not an integer"))
}

pub(crate) fn matrix_to_json(m: &ZMatrix) -> Vec<Vec<Number>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(int_to_json).collect())
        .collect()
}

impl EntrySpec {
    fn to_entry(&self, index: usize) -> Result<HolonomyEntry, InputError> {
        let malformed = |msg: String| InputError::Malformed(format!("holonomy entry {index}: {msg}"));
        match self {
            EntrySpec::Word(w) => w
                .parse::<TwistWord>()
                .map(HolonomyEntry::Word)
                .map_err(|e| malformed(e.to_string())),
            EntrySpec::Matrix(rows) => {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(int_from_json).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(malformed)?;
                ZMatrix::from_rows(rows)
                    .map(HolonomyEntry::Matrix)
                    .map_err(|e| malformed(e.to_string()))
            }
        }
    }

    fn from_entry(e: &HolonomyEntry) -> Self {
        match e {
            HolonomyEntry::Word(w) => EntrySpec::Word(w.to_string()),
            HolonomyEntry::Matrix(m) => EntrySpec::Matrix(matrix_to_json(m)),
        }
    }
}

impl ProblemFile {
    pub fn from_problem(p: &HolonomyProblem) -> Self {
        ProblemFile {
            schema_version: SCHEMA_VERSION,
            fiber_genus: p.fiber_genus(),
            base: BaseSpec {
                kind: p.base(),
                genus: p.base_genus(),
            },
            holonomy: p.entries().iter().map(EntrySpec::from_entry).collect(),
        }
    }

    pub fn to_problem(&self) -> Result<HolonomyProblem, InputError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(InputError::Malformed(format!(
                "unsupported schema_version {}, expected {SCHEMA_VERSION}",
                self.schema_version
            )));
        }
        let entries = self
            .holonomy
            .iter()
            .enumerate()
            .map(|(i, e)| e.to_entry(i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HolonomyProblem::new(
            self.fiber_genus,
            self.base.kind,
            self.base.genus,
            entries,
        )?)
    }
}

pub fn parse_problem(bytes: &[u8]) -> Result<HolonomyProblem, InputError> {
    let text = std::str::from_utf8(bytes).map_err(|e| InputError::Malformed(format!("not UTF-8: {e}")))?;
    let file: ProblemFile = serde_json::from_str(text).map_err(|e| InputError::Malformed(e.to_string()))?;
    file.to_problem()
}

pub fn serialize_problem(p: &HolonomyProblem) -> String {
    let mut out = serde_json::to_string_pretty(&ProblemFile::from_problem(p)).expect("problem serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::SymplecticError;
    use proptest::prelude::*;

    fn parse(s: &str) -> Result<HolonomyProblem, InputError> {
        parse_problem(s.as_bytes())
    }

    #[test]
    fn commuting_words_are_valid() {
        let p = parse(
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "closed", "genus": 1},
                "holonomy": [{"word": "Ta1"}, {"word": "Ta1"}]}"#,
        )
        .unwrap();
        assert_eq!(p.base(), BaseKind::Closed);
        assert_eq!(p.matrices()[0], p.matrices()[1]);
    }

    #[test]
    fn non_symplectic_matrix_names_entry() {
        let err = parse(
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "one_boundary", "genus": 1},
                "holonomy": [{"word": ""}, {"matrix": [[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}]}"#,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            InputError::Invalid(ProblemError::Entry {
                index: 1,
                source: SymplecticError::NotSymplectic
            })
        ));
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("entry 1"));
    }

    #[test]
    fn wrong_entry_count() {
        let err = parse(
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "one_boundary", "genus": 1},
                "holonomy": [{"word": "Ta1"}, {"word": "Tb1"}, {"word": "Tc1"}]}"#,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("expected 2g = 2 holonomy entries, got 3"));
    }

    #[test]
    fn malformed_inputs() {
        let cases = [
            "not json",
            r#"{"schema_version": 2, "fiber_genus": 2, "base": {"type": "closed", "genus": 1}, "holonomy": []}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "open", "genus": 1}, "holonomy": []}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "closed", "genus": 1}, "holonomy": [], "x": 1}"#,
            r#"{"schema_version": 1, "fiber_genus": 2.0, "base": {"type": "closed", "genus": 1}, "holonomy": []}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "one_boundary", "genus": 1},
                "holonomy": [{"word": "Ta1 Tx2"}, {"word": "Ta1"}]}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "one_boundary", "genus": 1},
                "holonomy": [{"word": "Ta1"}, {"matrix": [[1.5]]}]}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "one_boundary", "genus": 1},
                "holonomy": [{"word": "Ta1"}, {"matrix": [[1, 0], [0]]}]}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "one_boundary", "genus": 1},
                "holonomy": [{"word": "Ta1", "matrix": []}, {"word": ""}]}"#,
        ];
        for c in cases {
            let err = parse(c).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{c}: {err}");
        }
        assert_eq!(parse_problem(&[0xff, 0xfe]).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn semantic_errors_exit_one() {
        let cases = [
            r#"{"schema_version": 1, "fiber_genus": 1, "base": {"type": "closed", "genus": 1}, "holonomy": [{"word": ""}, {"word": ""}]}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "closed", "genus": 0}, "holonomy": []}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "closed", "genus": 1}, "holonomy": [{"word": "Ta3"}, {"word": ""}]}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "closed", "genus": 1}, "holonomy": [{"word": "Ta1"}, {"word": "Tb1"}]}"#,
            r#"{"schema_version": 1, "fiber_genus": 2, "base": {"type": "closed", "genus": 1}, "holonomy": [{"matrix": [[1]]}, {"word": ""}]}"#,
        ];
        for c in cases {
            let err = parse(c).unwrap_err();
            assert_eq!(err.exit_code(), 1, "{c}: {err}");
        }
    }

    #[test]
    fn big_integers_survive() {
        let mut rows = vec![vec!["0".to_string(); 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = "1".into();
        }
        // Shear a1 += k·b1 with k beyond 64 bits: [[1, k], [0, 1]] is symplectic.
        let k = "123456789012345678901234567890";
        rows[0][1] = k.into();
        let json = format!(
            r#"{{"schema_version": 1, "fiber_genus": 2, "base": {{"type": "one_boundary", "genus": 1}},
                "holonomy": [{{"matrix": [{}]}}, {{"word": ""}}]}}"#,
            rows.iter().map(|r| format!("[{}]", r.join(","))).collect::<Vec<_>>().join(",")
        );
        let p = parse(&json).unwrap();
        assert_eq!(p.matrices()[0].matrix()[(0, 1)], k.parse::<BigInt>().unwrap());
        let out = serialize_problem(&p);
        assert!(out.contains(k));
        assert_eq!(parse(&out).unwrap(), p);
    }

    fn letter() -> impl Strategy<Value = String> {
        (prop::sample::select(vec!["a1", "a2", "b1", "b2", "c1", "a3", "b3", "c2"]), any::<bool>())
            .prop_map(|(c, inv)| format!("T{c}{}", if inv { "^-1" } else { "" }))
    }

    fn word() -> impl Strategy<Value = String> {
        prop::collection::vec(letter(), 0..5).prop_map(|ls| ls.join(" "))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn parse_serialize_round_trip(ws in prop::collection::vec(word(), 2..=4), as_matrix in any::<bool>()) {
            let g = ws.len() / 2;
            let entries: Vec<EntrySpec> = ws[..2 * g].iter().map(|w| EntrySpec::Word(w.clone())).collect();
            let file = ProblemFile {
                schema_version: 1,
                fiber_genus: 3,
                base: BaseSpec { kind: BaseKind::OneBoundary, genus: g },
                holonomy: entries,
            };
            let p = file.to_problem().unwrap();
            let p = if as_matrix {
                HolonomyProblem::from_matrices(BaseKind::OneBoundary, p.matrices().to_vec()).unwrap()
            } else {
                p
            };
            let text = serialize_problem(&p);
            prop_assert_eq!(parse(&text).unwrap(), p);
        }
    }
}
