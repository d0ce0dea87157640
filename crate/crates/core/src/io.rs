//! JSON forms of seeds and words.
//!
//! Seed: `{"labels": [..]?, "lambda": [[..]], "n_basis": [[..]]?, "basis": [[..]]?}`
//! with entries given as integers or `"p/q"` strings; matrices are row lists and
//! `basis` holds the `e_i` as columns (identity if omitted).
//!
//! Word: either a string in composition notation or a list of steps in
//! application order, `{"mut": {"k": "3", "sign": "+"}}` or
//! `{"iso": {"perm": [2, 1, ..], "sign": "-", "matrix": [[..]]?}}` with a
//! one-based `perm`.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{ClusterWord, FixedData, IsoSpec, LatticeError, MutationStep, Seed, Sign, WordStep};
use crate::linalg::{IntMatrix, Rat, RatMatrix};
use crate::notation::{format_word, parse_word, NotationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("json: {0}")]
    Json(String),
    #[error("bad number {0:?}")]
    BadNumber(String),
    #[error("bad step: {0}")]
    BadStep(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Notation(#[from] NotationError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    pub fn to_rat(&self) -> Result<Rat, IoError> {
        match self {
            Num::Int(i) => Ok(Rat::from_integer((*i).into())),
            Num::Text(s) => s
                .trim()
                .parse::<Rat>()
                .map_err(|_| IoError::BadNumber(s.clone())),
        }
    }

    pub fn from_rat(r: &Rat) -> Num {
        match (r.is_integer(), r.to_integer().to_i64()) {
            (true, Some(i)) => Num::Int(i),
            _ => Num::Text(r.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub lambda: Vec<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_basis: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<i64>>>,
}

fn rat_matrix(rows: &[Vec<Num>]) -> Result<RatMatrix, IoError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(Num::to_rat).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(LatticeError::DimensionMismatch("matrix must be square".into()).into());
    }
    Ok(RatMatrix::from_rows(rows))
}

fn num_rows(m: &RatMatrix) -> Vec<Vec<Num>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(Num::from_rat).collect())
        .collect()
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows_i64()
}

impl SeedJson {
    pub fn build(&self) -> Result<Seed, IoError> {
        let lambda = rat_matrix(&self.lambda)?;
        let labels = self
            .labels
            .clone()
            .unwrap_or_else(|| (1..=lambda.rows()).map(|i| i.to_string()).collect());
        let nb = self.n_basis.as_deref().map(rat_matrix).transpose()?;
        let fixed = FixedData::new(labels, &lambda, nb)?;
        match &self.basis {
            None => Ok(fixed.initial_seed()),
            Some(b) => Ok(Seed::from_basis(&fixed, IntMatrix::from_rows_i64(b))?),
        }
    }

    pub fn from_seed(seed: &Seed) -> SeedJson {
        let f = seed.fixed();
        let basis = seed.basis();
        SeedJson {
            labels: Some(f.labels().to_vec()),
            lambda: num_rows(&f.lambda().to_rat()),
            n_basis: f.n_basis().map(num_rows),
            basis: (*basis != IntMatrix::identity(seed.rank())).then(|| int_rows(basis)),
        }
    }
}

pub fn seed_from_json(text: &str) -> Result<Seed, IoError> {
    serde_json::from_str::<SeedJson>(text)?.build()
}

/// Seed summary for output: the seed itself plus its exchange matrix.
#[derive(Clone, Debug, Serialize)]
pub struct SeedReport {
    #[serde(flatten)]
    pub seed: SeedJson,
    pub exchange_matrix: Vec<Vec<i64>>,
}

pub fn seed_report(seed: &Seed) -> SeedReport {
    SeedReport {
        seed: SeedJson::from_seed(seed),
        exchange_matrix: int_rows(&seed.exchange_matrix()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MutJson {
    pub k: Num,
    pub sign: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsoJson {
    pub perm: Vec<usize>,
    #[serde(default = "plus")]
    pub sign: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<i64>>>,
}

fn plus() -> String {
    "+".into()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepJson {
    Mut(MutJson),
    Iso(IsoJson),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordJson {
    Notation(String),
    Steps(Vec<StepJson>),
}

fn parse_sign(s: &str) -> Result<Sign, IoError> {
    match s {
        "+" | "+1" | "plus" => Ok(Sign::Plus),
        "-" | "-1" | "minus" => Ok(Sign::Minus),
        _ => Err(IoError::BadStep(format!("sign {s:?}"))),
    }
}

fn sign_str(s: Sign) -> String {
    match s {
        Sign::Plus => "+".into(),
        Sign::Minus => "-".into(),
    }
}

impl StepJson {
    fn build(&self, seed: &Seed) -> Result<WordStep, IoError> {
        let n = seed.rank();
        match self {
            StepJson::Mut(m) => {
                let label = match &m.k {
                    Num::Int(i) => i.to_string(),
                    Num::Text(s) => s.clone(),
                };
                let k = seed
                    .fixed()
                    .index_of(&label)
                    .ok_or(NotationError::UnknownDirection(label))?;
                Ok(WordStep::Mutation(MutationStep::new(k, parse_sign(&m.sign)?)))
            }
            StepJson::Iso(iso) => {
                if iso.perm.len() != n || iso.perm.iter().any(|&p| p == 0 || p > n) {
                    return Err(IoError::BadStep(format!("perm {:?}", iso.perm)));
                }
                Ok(WordStep::Isomorphism(IsoSpec {
                    perm: iso.perm.iter().map(|p| p - 1).collect(),
                    sign: parse_sign(&iso.sign)?,
                    matrix: iso.matrix.as_deref().map(IntMatrix::from_rows_i64),
                }))
            }
        }
    }

    fn from_step(seed: &Seed, s: &WordStep) -> StepJson {
        match s {
            WordStep::Mutation(m) => StepJson::Mut(MutJson {
                k: Num::Text(seed.fixed().labels()[m.k].clone()),
                sign: sign_str(m.sign),
            }),
            WordStep::Isomorphism(iso) => StepJson::Iso(IsoJson {
                perm: iso.perm.iter().map(|p| p + 1).collect(),
                sign: sign_str(iso.sign),
                matrix: iso.matrix.as_ref().map(int_rows),
            }),
        }
    }
}

impl WordJson {
    pub fn build(&self, seed: &Seed) -> Result<ClusterWord, IoError> {
        match self {
            WordJson::Notation(s) => Ok(parse_word(seed, s, None)?),
            WordJson::Steps(steps) => {
                let steps = steps
                    .iter()
                    .map(|s| s.build(seed))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ClusterWord::new(seed, steps))
            }
        }
    }

    pub fn from_word(word: &ClusterWord) -> WordJson {
        WordJson::Steps(
            word.steps
                .iter()
                .map(|s| StepJson::from_step(&word.source, s))
                .collect(),
        )
    }

    pub fn notation(word: &ClusterWord) -> String {
        format_word(word)
    }
}

pub fn word_from_json(seed: &Seed, text: &str) -> Result<ClusterWord, IoError> {
    serde_json::from_str::<WordJson>(text)?.build(seed)
}

/// Parse a word given either as JSON or as bare notation text.
pub fn word_from_text(seed: &Seed, text: &str) -> Result<ClusterWord, IoError> {
    let t = text.trim();
    if t.starts_with('[') || t.starts_with('"') {
        word_from_json(seed, t)
    } else {
        Ok(parse_word(seed, t, None)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2: &str = r#"{"lambda": [[0, 1], [-1, 0]]}"#;

    #[test]
    fn seed_round_trip() {
        let s = seed_from_json(A2).unwrap();
        assert_eq!(s.rank(), 2);
        let t = s.mutate_at(0, Sign::Plus).unwrap();
        let j = serde_json::to_string(&SeedJson::from_seed(&t)).unwrap();
        assert_eq!(seed_from_json(&j).unwrap(), t);
    }

    #[test]
    fn fractional_n_basis() {
        let j = r#"{"lambda": [[0, 2], [-2, 0]], "n_basis": [["1/2", 0], [0, 1]]}"#;
        let s = seed_from_json(j).unwrap();
        assert!(s.fixed().n_basis().is_some());
        let bad = r#"{"lambda": [[0, 1], [-1, 0]], "n_basis": [["1/3", 0], [0, 1]]}"#;
        assert!(seed_from_json(bad).is_err());
        assert!(seed_from_json(r#"{"lambda": [[0, "x"], [0, 0]]}"#).is_err());
    }

    #[test]
    fn words() {
        let s = seed_from_json(A2).unwrap();
        let w = word_from_json(
            &s,
            r#"[{"mut": {"k": 1, "sign": "+"}}, {"iso": {"perm": [2, 1]}}]"#,
        )
        .unwrap();
        assert_eq!(format_word(&w), "(1,2) o m1+");
        let v = word_from_text(&s, "(1,2) o m1+").unwrap();
        assert_eq!(v.steps, w.steps);
        let j = serde_json::to_string(&WordJson::from_word(&w)).unwrap();
        assert_eq!(word_from_json(&s, &j).unwrap().steps, w.steps);
        assert!(word_from_json(&s, r#"[{"iso": {"perm": [1, 3]}}]"#).is_err());
        assert!(word_from_json(&s, r#"[{"mut": {"k": 1, "sign": "?"}}]"#).is_err());
    }
}
