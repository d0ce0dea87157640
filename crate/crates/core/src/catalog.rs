//! The ten appendix datasets and the checks run against them: root data,
//! group relations as trivial cluster transformations, and actions on `T_{K*}`.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::{
    perm_from_cycles, ClusterWord, IsoSpec, LatticeError, Seed, Sign, WordStep,
};
use crate::linalg::{IntMatrix, Rat};
use crate::notation::{parse_lincomb, parse_word, to_bigint, NotationError};
use crate::symbolic::{evaluate_word_with, triviality, EvalOptions, SymbolicError, Verdict};
use crate::toric::{
    analyze, boundary_data, classify_quotient, k_circ_basis, seed_from_vectors,
    smooth_complete_fan, KPairing, ToricError, ToricSeedData, TypeLabel, V2,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("pullback of z^{0} is not a monomial")]
    NotMonomial(String),
    #[error("word does not return to its source seed")]
    NotAutomorphism,
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Notation(#[from] NotationError),
}

/// `z^{α_i} ↦ z^{coeff·α_root + delta·δ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootImage {
    pub coeff: i64,
    pub root: usize,
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ExpectedAction {
    /// `s_i(α_j) = α_j + (α_i·α_j) α_i`, sign `+`.
    Reflection(usize),
    /// Images of the root characters and the sign read off `δ`.
    Roots { sign: i64, images: Vec<RootImage> },
}

#[derive(Clone, Debug)]
pub struct GeneratorDef {
    pub name: String,
    /// Composition notation, see [`crate::notation`].
    pub notation: String,
    pub sigma: Option<IsoSpec>,
    pub action: ExpectedAction,
}

impl GeneratorDef {
    pub fn is_reflection(&self) -> bool {
        matches!(self.action, ExpectedAction::Reflection(_))
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: TypeLabel,
    pub vectors: ToricSeedData,
    pub seed: Seed,
    pub roots: Vec<Vec<i64>>,
    pub delta: Vec<i64>,
    /// Printed decompositions of `δ` in the roots.
    pub delta_decomp: Vec<Vec<i64>>,
    pub norms: Vec<i64>,
    /// Printed Dynkin edges `(i, j, α_i·α_j)`.
    pub edges: Vec<(usize, usize, i64)>,
    /// Vertices of the representative Fano polygon as drawn.
    pub polygon: Vec<V2>,
    pub generators: Vec<GeneratorDef>,
    /// Relations among the non-reflection generators, as generator-name words.
    pub aut_relations: Vec<Vec<String>>,
    /// Relations stated for the group that are not checked here.
    pub untested: Vec<String>,
}

fn v(x: i64, y: i64) -> V2 {
    [x, y]
}

fn rep(w: V2, k: usize) -> Vec<V2> {
    vec![w; k]
}

const UP: V2 = [0, 1];
const LEFT: V2 = [-1, 0];
const DOWN: V2 = [0, -1];
const RIGHT: V2 = [1, 0];

fn perm_images(sign: i64, idx: &[usize]) -> ExpectedAction {
    ExpectedAction::Roots {
        sign,
        images: idx
            .iter()
            .map(|&r| RootImage {
                coeff: sign,
                root: r,
                delta: 0,
            })
            .collect(),
    }
}

fn words(list: &[&str]) -> Vec<Vec<String>> {
    list.iter()
        .map(|w| w.split_whitespace().map(str::to_string).collect())
        .collect()
}

struct Builder {
    label: TypeLabel,
    vectors: Vec<V2>,
    roots: Vec<&'static str>,
    delta: &'static str,
    delta_decomp: Vec<Vec<i64>>,
    norms: Vec<i64>,
    edges: Vec<(usize, usize, i64)>,
    polygon: Vec<V2>,
    reflections: Vec<&'static str>,
    others: Vec<(&'static str, &'static str, Option<(&'static str, Vec<&'static str>)>, ExpectedAction)>,
    aut_relations: Vec<Vec<String>>,
    untested: Vec<String>,
}

impl Builder {
    fn simply_laced(label: TypeLabel, vectors: Vec<V2>, roots: Vec<&'static str>) -> Builder {
        let r = roots.len();
        Builder {
            label,
            vectors,
            roots,
            delta: "",
            delta_decomp: Vec::new(),
            norms: vec![-2; r],
            edges: Vec::new(),
            polygon: Vec::new(),
            reflections: Vec::new(),
            others: Vec::new(),
            aut_relations: Vec::new(),
            untested: Vec::new(),
        }
    }

    fn edges(mut self, e: &[(usize, usize)]) -> Builder {
        self.edges = e.iter().map(|&(i, j)| (i, j, 1)).collect();
        self
    }

    fn build(self) -> Result<CatalogEntry, CatalogError> {
        let data = ToricSeedData::new(self.vectors);
        let (_, seed) = seed_from_vectors(&data)?;
        let n = data.len();
        let roots = self
            .roots
            .iter()
            .map(|r| parse_lincomb(r, n))
            .collect::<Result<Vec<_>, _>>()?;
        let delta = parse_lincomb(self.delta, n)?;
        let mut generators: Vec<GeneratorDef> = self
            .reflections
            .iter()
            .enumerate()
            .map(|(i, w)| GeneratorDef {
                name: format!("s{i}"),
                notation: w.to_string(),
                sigma: None,
                action: ExpectedAction::Reflection(i),
            })
            .collect();
        for (name, notation, sigma, action) in self.others {
            let sigma = match sigma {
                None => None,
                Some((cycles, images)) => {
                    let perm = perm_from_cycles(cycles, n)?;
                    let cols = images
                        .iter()
                        .map(|s| parse_lincomb(s, n).map(|c| to_bigint(&c)))
                        .collect::<Result<Vec<_>, _>>()?;
                    Some(IsoSpec {
                        perm,
                        sign: Sign::Plus,
                        matrix: Some(IntMatrix::from_cols(&cols)),
                    })
                }
            };
            generators.push(GeneratorDef {
                name: name.to_string(),
                notation: notation.to_string(),
                sigma,
                action,
            });
        }
        Ok(CatalogEntry {
            label: self.label,
            vectors: data,
            seed,
            roots,
            delta,
            delta_decomp: self.delta_decomp,
            norms: self.norms,
            edges: self.edges,
            polygon: self.polygon,
            generators,
            aut_relations: self.aut_relations,
            untested: self.untested,
        })
    }
}

pub fn catalog_entry(label: TypeLabel) -> Result<CatalogEntry, CatalogError> {
    use TypeLabel::*;
    let b = match label {
        E8 => {
            let mut vs = rep(UP, 6);
            vs.push(LEFT);
            vs.extend(rep(DOWN, 3));
            vs.push(RIGHT);
            let mut b = Builder::simply_laced(
                E8,
                vs,
                vec![
                    "e6-e5", "e5-e4", "e4-e3", "e3-e2", "e2-e1", "e1+e8", "e9-e8", "e10-e9",
                    "e7+e11",
                ],
            )
            .edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]);
            b.delta = "e1+e2+e3+e4+e5+e6+3e7+2e8+2e9+2e10+3e11";
            b.delta_decomp = vec![vec![1, 2, 3, 4, 5, 6, 4, 2, 3]];
            b.reflections = vec![
                "(5,6)",
                "(4,5)",
                "(3,4)",
                "(2,3)",
                "(1,2)",
                "m1- o (1,8) o m1+",
                "(8,9)",
                "(9,10)",
                "m7- o (7,11) o m7+",
            ];
            b.polygon = vec![[-3, 2], [-3, -1], [3, -1], [3, 2]];
            b
        }
        E7 => {
            let mut vs = rep(UP, 4);
            vs.push(LEFT);
            vs.extend(rep(DOWN, 2));
            vs.extend(rep(RIGHT, 3));
            let mut b = Builder::simply_laced(
                E7,
                vs,
                vec!["e4-e3", "e3-e2", "e2-e1", "e1+e6", "e5+e8", "e9-e8", "e10-e9", "e7-e6"],
            )
            .edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]);
            b.delta = "e1+e2+e3+e4+3e5+2e6+2e7+e8+e9+e10";
            b.delta_decomp = vec![vec![1, 2, 3, 4, 3, 2, 1, 2]];
            b.reflections = vec![
                "(3,4)",
                "(2,3)",
                "(1,2)",
                "m1- o (1,6) o m1+",
                "m5- o (5,8) o m5+",
                "(8,9)",
                "(9,10)",
                "(6,7)",
            ];
            b.others = vec![(
                "i",
                "m5- o -(1,5)(2,8)(3,9)(4,10) o m5+",
                None,
                perm_images(-1, &[6, 5, 4, 3, 2, 1, 0, 7]),
            )];
            b.aut_relations = words(&["i i"]);
            b.polygon = vec![[-1, 2], [-1, -1], [3, -1], [3, 2]];
            b
        }
        E6 => {
            let mut vs = rep(UP, 3);
            vs.push(LEFT);
            vs.extend(rep(DOWN, 3));
            vs.extend(rep(RIGHT, 2));
            let mut b = Builder::simply_laced(
                E6,
                vs,
                vec!["e9-e8", "e3-e2", "e2-e1", "e1+e5", "e6-e5", "e7-e6", "e4+e8"],
            )
            .edges(&[(0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]);
            b.delta = "e1+e2+e3+2e4+e5+e6+e7+e8+e9";
            b.delta_decomp = vec![vec![1, 1, 2, 3, 2, 1, 2]];
            b.reflections = vec![
                "(8,9)",
                "(2,3)",
                "(1,2)",
                "m1- o (1,5) o m1+",
                "(5,6)",
                "(6,7)",
                "m4- o (4,8) o m4+",
            ];
            b.others = vec![
                ("i1", "-(1,5)(2,6)(3,7)", None, perm_images(-1, &[0, 5, 4, 3, 2, 1, 6])),
                (
                    "i2",
                    "m4- o -(1,4)(2,8)(3,9) o m4+",
                    None,
                    perm_images(-1, &[1, 0, 6, 3, 4, 5, 2]),
                ),
            ];
            b.aut_relations = words(&["i1 i1", "i2 i2", "i1 i2 i1 i2 i1 i2"]);
            b.polygon = vec![[-1, 1], [-1, -1], [2, -1], [2, 1]];
            b
        }
        E5 => {
            let mut vs = rep(UP, 2);
            vs.extend(rep(LEFT, 2));
            vs.extend(rep(DOWN, 2));
            vs.extend(rep(RIGHT, 2));
            let mut b = Builder::simply_laced(
                E5,
                vs,
                vec!["e2-e1", "e6-e5", "e1+e5", "e3+e7", "e4-e3", "e8-e7"],
            )
            .edges(&[(1, 2), (2, 3), (3, 4), (3, 5), (0, 2)]);
            b.delta = "e1+e2+e3+e4+e5+e6+e7+e8";
            b.delta_decomp = vec![vec![1, 1, 2, 2, 1, 1]];
            b.reflections = vec![
                "(1,2)",
                "(5,6)",
                "m1- o (1,5) o m1+",
                "m3- o (3,7) o m3+",
                "(3,4)",
                "(7,8)",
            ];
            b.others = vec![
                ("i1", "-(1,5)(2,6)", None, perm_images(-1, &[1, 0, 2, 3, 4, 5])),
                ("i2", "-(1,3)(2,4)(5,7)(6,8)", None, perm_images(-1, &[4, 5, 3, 2, 0, 1])),
            ];
            b.aut_relations = words(&["i1 i1", "i2 i2", "i1 i2 i1 i2 i1 i2 i1 i2"]);
            b.polygon = vec![[-1, 1], [-1, -1], [1, -1], [1, 1]];
            b
        }
        E4 => {
            let vs = vec![UP, v(-1, 1), LEFT, DOWN, DOWN, RIGHT, RIGHT];
            let mut b = Builder::simply_laced(
                E4,
                vs,
                vec!["e2+e4+e6", "e5-e4", "e1+e4", "e3+e6", "e7-e6"],
            )
            .edges(&[(1, 2), (2, 3), (3, 4), (4, 0), (0, 1)]);
            b.delta = "e1+e2+e3+e4+e5+e6+e7";
            b.delta_decomp = vec![vec![1, 1, 1, 1, 1]];
            b.reflections = vec![
                "m2- o m4- o (4,6) o m4+ o m2+",
                "(4,5)",
                "m1- o (1,4) o m1+",
                "m3- o (3,6) o m3+",
                "(6,7)",
            ];
            b.others = vec![
                (
                    "i1",
                    "sigma o m4+",
                    Some((
                        "(1,7,5,3,2)(4,6)",
                        vec!["e7", "e1+e6", "e2+e6", "-e6", "e3", "e4", "e5"],
                    )),
                    perm_images(1, &[3, 4, 0, 1, 2]),
                ),
                ("i2", "-(1,3)(4,6)(5,7)", None, perm_images(-1, &[0, 4, 3, 2, 1])),
            ];
            b.aut_relations = words(&["i1 i1 i1 i1 i1", "i2 i2", "i1 i2 i1 i2"]);
            b.polygon = vec![[-1, 1], [-1, -1], [0, -1], [1, 0], [1, 1]];
            b
        }
        E3 => {
            let vs = vec![UP, v(-1, 1), LEFT, DOWN, v(1, -1), RIGHT];
            let mut b = Builder::simply_laced(
                E3,
                vs,
                vec!["e1+e4", "e2+e5", "e3+e6", "e1+e3+e5", "e2+e4+e6"],
            );
            b.edges = vec![(0, 1, 1), (1, 2, 1), (2, 0, 1), (3, 4, 2)];
            b.delta = "e1+e2+e3+e4+e5+e6";
            b.delta_decomp = vec![vec![1, 1, 1, 0, 0], vec![0, 0, 0, 1, 1]];
            b.reflections = vec![
                "m1- o (1,4) o m1+",
                "m2- o (2,5) o m2+",
                "m3- o (3,6) o m3+",
                "m1- o m3- o (3,5) o m3+ o m1+",
                "m2- o m4- o (4,6) o m4+ o m2+",
            ];
            b.others = vec![
                ("i1", "(1,2,3,4,5,6)", None, perm_images(1, &[2, 0, 1, 4, 3])),
                ("i2", "-(1,4)(2,3)(5,6)", None, perm_images(-1, &[0, 2, 1, 4, 3])),
            ];
            b.aut_relations = words(&["i1 i1 i1 i1 i1 i1", "i2 i2", "i1 i2 i1 i2"]);
            b.polygon = vec![[0, 1], [-1, 0], [-1, -1], [0, -1], [1, 0], [1, 1]];
            b
        }
        E2 => {
            let vs = vec![v(-1, 2), LEFT, DOWN, v(1, -1), RIGHT];
            let mut b = Builder::simply_laced(
                E2,
                vs,
                vec!["e1+e3+e4", "e2+e5", "e1+3e3-e4+2e5", "e2-2e3+2e4-e5"],
            );
            b.norms = vec![-2, -2, -14, -14];
            b.edges = vec![(0, 1, 2), (2, 3, 14)];
            b.delta = "e1+e2+e3+e4+e5";
            b.delta_decomp = vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]];
            b.reflections = vec!["m1- o m3- o (3,4) o m3+ o m1+", "m2- o (2,5) o m2+"];
            let sigma = ("(1,5,3,4,2)", vec!["e4+e5", "e1+e4", "-e4", "e2", "e3"]);
            b.others = vec![
                (
                    "t",
                    "sigma o m3+",
                    Some(sigma.clone()),
                    ExpectedAction::Roots {
                        sign: 1,
                        images: vec![
                            RootImage { coeff: 1, root: 1, delta: 0 },
                            RootImage { coeff: 1, root: 0, delta: 0 },
                            RootImage { coeff: 1, root: 2, delta: 1 },
                            RootImage { coeff: 1, root: 3, delta: -1 },
                        ],
                    },
                ),
                (
                    "i",
                    "-(2,5)(3,4) o sigma o m3+",
                    Some(sigma),
                    perm_images(-1, &[1, 0, 3, 2]),
                ),
            ];
            b.aut_relations = words(&["i i"]);
            b.untested = vec![
                "presentation of the semidirect product with the translation t".into(),
            ];
            b.polygon = vec![[0, 1], [-1, 0], [-1, -1], [1, 0], [1, 1]];
            b
        }
        E1 => {
            let vs = vec![v(-1, 2), v(-1, -1), v(1, -1), RIGHT];
            let mut b = Builder::simply_laced(E1, vs, vec!["e1+2e3-e4", "e2-e3+2e4"]);
            b.norms = vec![-8, -8];
            b.edges = vec![(0, 1, 8)];
            b.delta = "e1+e2+e3+e4";
            b.delta_decomp = vec![vec![1, 1]];
            b.others = vec![
                (
                    "t",
                    "sigma o m3+",
                    Some(("(1,3,4,2)", vec!["e3", "e1+2e4", "-e4", "e2"])),
                    ExpectedAction::Roots {
                        sign: 1,
                        images: vec![
                            RootImage { coeff: 1, root: 0, delta: 1 },
                            RootImage { coeff: 1, root: 1, delta: -1 },
                        ],
                    },
                ),
                ("i", "-(1,2)(3,4)", None, perm_images(-1, &[1, 0])),
            ];
            b.aut_relations = words(&["i i", "i t i t"]);
            b.polygon = vec![[0, 1], [-1, 0], [-1, -1], [1, 0]];
            b
        }
        E1Prime => {
            let vs = vec![v(-1, 2), LEFT, v(1, -2), RIGHT];
            let mut b = Builder::simply_laced(E1Prime, vs, vec!["e1+e3", "e2+e4"]);
            b.edges = vec![(0, 1, 2)];
            b.delta = "e1+e2+e3+e4";
            b.delta_decomp = vec![vec![1, 1]];
            b.reflections = vec!["m1- o (1,3) o m1+", "m2- o (2,4) o m2+"];
            b.others = vec![
                ("i1", "(1,2,3,4)", None, perm_images(1, &[1, 0])),
                ("i2", "-(1,3)", None, perm_images(-1, &[0, 1])),
            ];
            b.aut_relations = words(&["i1 i1 i1 i1", "i2 i2", "i1 i2 i1 i2"]);
            b.untested = vec![
                "relations of W(A1(1)) x D8 beyond generator orders, the dihedral relation and conjugation of reflections".into(),
            ];
            b.polygon = vec![[1, 1], [-1, 0], [-1, -1], [1, 0]];
            b
        }
        E0 => {
            let vs = vec![v(-1, 2), v(-1, -1), v(2, -1)];
            let mut b = Builder::simply_laced(E0, vs, vec!["e1+e2+e3"]);
            b.norms = vec![0];
            b.delta = "e1+e2+e3";
            b.delta_decomp = vec![vec![1]];
            b.others = vec![
                ("i1", "(1,2,3)", None, perm_images(1, &[0])),
                ("i2", "-(1,2)", None, perm_images(-1, &[0])),
            ];
            b.aut_relations = words(&["i1 i1 i1", "i2 i2", "i1 i2 i1 i2"]);
            b.polygon = vec![[0, 1], [-1, -1], [1, 0]];
            b
        }
    };
    b.build()
}

pub fn catalog_entry_by_name(name: &str) -> Result<CatalogEntry, CatalogError> {
    let label = name
        .parse::<TypeLabel>()
        .map_err(|_| CatalogError::UnknownLabel(name.to_string()))?;
    catalog_entry(label)
}

impl CatalogEntry {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Gram matrix built from the printed norms and Dynkin edges.
    pub fn gram_expected(&self) -> IntMatrix {
        let r = self.roots.len();
        let mut g = IntMatrix::zeros(r, r);
        for (i, &n) in self.norms.iter().enumerate() {
            g.set(i, i, BigInt::from(n));
        }
        for &(i, j, w) in &self.edges {
            g.set(i, j, BigInt::from(w));
            g.set(j, i, BigInt::from(w));
        }
        g
    }

    pub fn generator(&self, name: &str) -> Result<&GeneratorDef, CatalogError> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| CatalogError::InvalidWord(format!("no generator {name}")))
    }

    pub fn generator_word(&self, name: &str) -> Result<ClusterWord, CatalogError> {
        let g = self.generator(name)?;
        Ok(parse_word(&self.seed, &g.notation, g.sigma.as_ref())?)
    }

    /// A word in generator names, `g1 g2 ...` in group notation; `g^-1` is an inverse.
    /// Steps are applied in the listed order.
    pub fn word_of(&self, tokens: &[String]) -> Result<ClusterWord, CatalogError> {
        let mut steps: Vec<WordStep> = Vec::new();
        for t in tokens {
            let (name, inv) = match t.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (t.as_str(), false),
            };
            let mut w = self.generator_word(name)?;
            if inv {
                w = w.inverse()?;
            }
            if w.source != self.seed {
                return Err(CatalogError::InvalidWord(format!("{name} is not based at the seed")));
            }
            steps.extend(w.steps);
        }
        Ok(ClusterWord::new(&self.seed, steps))
    }

    /// Relations generated from the printed Gram plus the listed automorphism relations.
    pub fn relations(&self) -> Vec<Relation> {
        let gram = self.gram_expected();
        let refl: Vec<usize> = self
            .generators
            .iter()
            .filter_map(|g| match g.action {
                ExpectedAction::Reflection(i) => Some(i),
                _ => None,
            })
            .collect();
        let mut out = Vec::new();
        for &i in &refl {
            out.push(Relation::new(format!("s{i}^2"), &[format!("s{i}"), format!("s{i}")]));
        }
        for (a, &i) in refl.iter().enumerate() {
            for &j in &refl[a + 1..] {
                let m = match gram.get(i, j).to_i64() {
                    Some(0) => 2,
                    Some(1) => 3,
                    _ => continue,
                };
                let toks: Vec<String> =
                    (0..m).flat_map(|_| [format!("s{i}"), format!("s{j}")]).collect();
                out.push(Relation::new(format!("(s{i} s{j})^{m}"), &toks));
            }
        }
        for r in &self.aut_relations {
            out.push(Relation::new(compact_name(r), r));
        }
        for g in self.generators.iter().filter(|g| !g.is_reflection()) {
            let ExpectedAction::Roots { images, .. } = &g.action else {
                continue;
            };
            for &i in &refl {
                let img = images[i];
                if img.delta != 0 || !refl.contains(&img.root) {
                    continue;
                }
                let toks = vec![
                    g.name.clone(),
                    format!("s{i}"),
                    format!("{}^-1", g.name),
                    format!("s{}", img.root),
                ];
                out.push(Relation::new(
                    format!("{} s{i} {}^-1 = s{}", g.name, g.name, img.root),
                    &toks,
                ));
            }
        }
        out
    }

    /// Printed orders of the non-reflection generators, read off `g^k` relations.
    pub fn generator_orders(&self) -> Vec<(String, usize)> {
        self.aut_relations
            .iter()
            .filter(|r| r.iter().all(|t| *t == r[0]))
            .map(|r| (r[0].clone(), r.len()))
            .collect()
    }

    fn pairing(&self) -> Result<KPairing, CatalogError> {
        let fan = smooth_complete_fan(&self.vectors)?;
        let bd = boundary_data(&self.vectors, &fan)?;
        Ok(KPairing::new(&self.vectors, &bd)?)
    }

    /// Gram matrix of the roots under the `K°` pairing.
    pub fn gram_computed(&self) -> Result<IntMatrix, CatalogError> {
        let roots: Vec<Vec<BigInt>> = self.roots.iter().map(|r| to_bigint(r)).collect();
        Ok(self.pairing()?.gram(&roots)?)
    }
}

fn compact_name(tokens: &[String]) -> String {
    // collapse (g h)^k and g^k
    let n = tokens.len();
    for p in 1..=n / 2 {
        if n.is_multiple_of(p) && (0..n).all(|i| tokens[i] == tokens[i % p]) {
            let base = tokens[..p].join(" ");
            return if p == 1 {
                format!("{base}^{}", n / p)
            } else {
                format!("({base})^{}", n / p)
            };
        }
    }
    tokens.join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub tokens: Vec<String>,
}

impl Relation {
    fn new(name: String, tokens: &[String]) -> Relation {
        Relation {
            name,
            tokens: tokens.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u128,
}

impl Check {
    fn new(check: impl Into<String>, ok: bool, witness: Option<String>, t: Duration) -> Check {
        Check {
            check: check.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: if ok { None } else { witness },
            millis: t.as_millis(),
        }
    }

    fn from_result(check: impl Into<String>, r: Result<(), String>, t: Duration) -> Check {
        match r {
            Ok(()) => Check::new(check, true, None, t),
            Err(w) => Check::new(check, false, Some(w), t),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub label: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub untested: Vec<String>,
}

impl Report {
    pub fn new(label: impl Into<String>) -> Report {
        Report {
            label: label.into(),
            checks: Vec::new(),
            untested: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.untested.extend(other.untested);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let s = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{s} {} {} ({} ms)", self.label, c.check, c.millis)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn fmt_vec<T: fmt::Display>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn combo(entry: &CatalogEntry, coeffs: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; entry.rank()];
    for (c, r) in coeffs.iter().zip(&entry.roots) {
        for (o, x) in out.iter_mut().zip(r) {
            *o += c * x;
        }
    }
    out
}

pub fn verify_root_basis(entry: &CatalogEntry) -> Report {
    let mut rep = Report::new(entry.label.to_string());
    let t = Instant::now();
    let bad: Vec<usize> = entry
        .roots
        .iter()
        .enumerate()
        .filter(|(_, r)| {
            let sx: i64 = r.iter().zip(&entry.vectors.vectors).map(|(a, w)| a * w[0]).sum();
            let sy: i64 = r.iter().zip(&entry.vectors.vectors).map(|(a, w)| a * w[1]).sum();
            sx != 0 || sy != 0
        })
        .map(|(i, _)| i)
        .collect();
    rep.checks.push(Check::new(
        "roots in K°",
        bad.is_empty(),
        Some(format!("alpha_{bad:?} not in K°")),
        t.elapsed(),
    ));

    let t = Instant::now();
    let analysis = analyze(&entry.vectors, false);
    match &analysis {
        Ok(a) => {
            rep.checks.push(Check::new(
                "delta",
                a.null_root.delta == entry.delta,
                Some(format!(
                    "computed {} printed {}",
                    fmt_vec(&a.null_root.delta),
                    fmt_vec(&entry.delta)
                )),
                t.elapsed(),
            ));
            let (sx, sy) = a
                .null_root
                .c
                .iter()
                .zip(&entry.vectors.vectors)
                .fold((0, 0), |(x, y), (c, w)| (x + c * w[0], y + c * w[1]));
            rep.checks.push(Check::new(
                "sum c_i w_i = 0",
                sx == 0 && sy == 0,
                Some(format!("({sx},{sy})")),
                t.elapsed(),
            ));
            let t = Instant::now();
            let label = classify_quotient(&a.quotient_gram);
            rep.checks.push(Check::new(
                "classification",
                label.as_ref().ok() == Some(&entry.label),
                Some(format!("{label:?}")),
                t.elapsed(),
            ));
        }
        Err(e) => rep.checks.push(Check::new(
            "null root",
            false,
            Some(e.to_string()),
            t.elapsed(),
        )),
    }

    let t = Instant::now();
    let r = (|| -> Result<(), String> {
        let p = entry.pairing().map_err(|e| e.to_string())?;
        let d = to_bigint(&entry.delta);
        let dd = p.pair(&d, &d).map_err(|e| e.to_string())?;
        if !dd.is_zero() {
            return Err(format!("delta^2 = {dd}"));
        }
        Ok(())
    })();
    rep.checks.push(Check::from_result("delta^2 = 0", r, t.elapsed()));

    let t = Instant::now();
    let r = entry
        .gram_computed()
        .map_err(|e| e.to_string())
        .and_then(|g| {
            let want = entry.gram_expected();
            if g == want {
                Ok(())
            } else {
                Err(format!("computed {:?} printed {:?}", g.to_rows_i64(), want.to_rows_i64()))
            }
        });
    rep.checks.push(Check::from_result("gram vs dynkin", r, t.elapsed()));

    for (k, dec) in entry.delta_decomp.iter().enumerate() {
        let t = Instant::now();
        let s = combo(entry, dec);
        rep.checks.push(Check::new(
            format!("delta decomposition {}", k + 1),
            s == entry.delta,
            Some(format!("sum is {}", fmt_vec(&s))),
            t.elapsed(),
        ));
    }

    let t = Instant::now();
    let kb = k_circ_basis(&entry.vectors);
    let rm = IntMatrix::from_cols(&entry.roots.iter().map(|r| to_bigint(r)).collect::<Vec<_>>());
    let rank = rm.to_rat().rank();
    rep.checks.push(Check::new(
        "roots span K° over Q",
        rank == kb.cols(),
        Some(format!("rank {rank}, K° rank {}", kb.cols())),
        t.elapsed(),
    ));
    rep
}

/// True iff the word is a trivial cluster transformation.
pub fn verify_relation(word: &ClusterWord, opts: &EvalOptions) -> Result<bool, CatalogError> {
    Ok(triviality(word, opts)?.is_trivial())
}

/// Every relation of the entry, checked in parallel; results in list order.
pub fn verify_relations(entry: &CatalogEntry, opts: &EvalOptions) -> Report {
    let rels = entry.relations();
    let checks: Vec<Check> = rels
        .par_iter()
        .map(|rel| {
            let t = Instant::now();
            let r = entry
                .word_of(&rel.tokens)
                .and_then(|w| Ok(triviality(&w, opts)?))
                .map_err(|e| e.to_string())
                .and_then(|v| match v {
                    Verdict::Trivial => Ok(()),
                    v => Err(format!("{v:?}")),
                });
            Check::from_result(format!("relation {}", rel.name), r, t.elapsed())
        })
        .collect();
    let mut rep = Report::new(entry.label.to_string());
    rep.checks = checks;
    for (g, k) in entry.generator_orders() {
        let t = Instant::now();
        let r = (|| -> Result<(), String> {
            for j in 1..k {
                let toks = vec![g.clone(); j];
                let w = entry.word_of(&toks).map_err(|e| e.to_string())?;
                if verify_relation(&w, opts).map_err(|e| e.to_string())? {
                    return Err(format!("{g}^{j} is trivial"));
                }
            }
            Ok(())
        })();
        rep.checks.push(Check::from_result(format!("order of {g} is {k}"), r, t.elapsed()));
    }
    rep.untested = entry.untested.clone();
    rep
}

/// The induced map on `K°`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TkAction {
    /// Basis of `K°`, columns in initial `N°` coordinates.
    pub basis: IntMatrix,
    /// Exponent of the pullback of `z^{basis_j}`, same coordinates.
    pub images: IntMatrix,
    /// `w(z^δ) = z^{sign·δ}`.
    pub sign: i64,
}

impl TkAction {
    /// Exponent of the pullback of `z^v`, `v ∈ K°`.
    pub fn apply(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let rhs: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let c = self.basis.to_rat().solve(&rhs)?;
        if self.basis.to_rat().mul_vec(&c) != rhs || c.iter().any(|x| !x.is_integer()) {
            return None;
        }
        let c: Vec<BigInt> = c.into_iter().map(|x| x.to_integer()).collect();
        Some(self.images.mul_vec(&c))
    }
}

/// Restrict the pullback of an automorphism word to the characters of `K°`.
pub fn action_on_tk(
    entry: &CatalogEntry,
    word: &ClusterWord,
    opts: &EvalOptions,
) -> Result<TkAction, CatalogError> {
    if word.target()? != word.source {
        return Err(CatalogError::NotAutomorphism);
    }
    let fixed = word.source.fixed().clone();
    let m = evaluate_word_with(word, opts)?;
    let basis = k_circ_basis(&entry.vectors);
    let mut cols = Vec::with_capacity(basis.cols());
    for j in 0..basis.cols() {
        let b = basis.col(j);
        let ch: Vec<i64> = fixed
            .to_character_coords(&b)
            .iter()
            .map(|x| x.to_i64().expect("small exponent"))
            .collect();
        let f = m.pullback_monomial(&ch);
        let fmt_b = || fmt_vec(&b);
        if !f.factors.is_empty() || !f.coeff.is_one() {
            return Err(CatalogError::NotMonomial(fmt_b()));
        }
        let img = fixed.from_character_coords(&to_bigint(&f.mono));
        if img.iter().any(|x| !x.is_integer()) {
            return Err(CatalogError::NotMonomial(fmt_b()));
        }
        cols.push(img.into_iter().map(|x| x.to_integer()).collect::<Vec<_>>());
    }
    let mut act = TkAction {
        basis,
        images: IntMatrix::from_cols(&cols),
        sign: 0,
    };
    let d = to_bigint(&entry.delta);
    let dimg = act
        .apply(&d)
        .ok_or_else(|| CatalogError::InvalidWord("delta is not in K°".into()))?;
    act.sign = if dimg == d {
        1
    } else if dimg.iter().zip(&d).all(|(a, b)| *a == -b.clone()) {
        -1
    } else {
        return Err(CatalogError::InvalidWord(format!(
            "delta is sent to {}",
            fmt_vec(&dimg)
        )));
    };
    Ok(act)
}

fn expected_images(
    entry: &CatalogEntry,
    action: &ExpectedAction,
    gram: &IntMatrix,
) -> (i64, Vec<Vec<i64>>) {
    let r = entry.roots.len();
    match action {
        ExpectedAction::Reflection(i) => {
            let imgs = (0..r)
                .map(|j| {
                    let c = gram.get(*i, j).to_i64().expect("small");
                    let mut coeffs = vec![0i64; r];
                    coeffs[j] += 1;
                    coeffs[*i] += c;
                    combo(entry, &coeffs)
                })
                .collect();
            (1, imgs)
        }
        ExpectedAction::Roots { sign, images } => {
            let imgs = images
                .iter()
                .map(|im| {
                    let mut coeffs = vec![0i64; r];
                    coeffs[im.root] = im.coeff;
                    combo(entry, &coeffs)
                        .iter()
                        .zip(&entry.delta)
                        .map(|(a, d)| a + im.delta * d)
                        .collect()
                })
                .collect();
            (*sign, imgs)
        }
    }
}

/// Compare every generator's action on `K°` with the printed formula.
pub fn verify_actions(entry: &CatalogEntry, opts: &EvalOptions) -> Report {
    let mut rep = Report::new(entry.label.to_string());
    let printed = entry.gram_expected();
    let computed = entry.gram_computed().ok();
    let mut actions: Vec<(String, TkAction)> = Vec::new();
    let results: Vec<(Check, Option<(String, TkAction)>)> = entry
        .generators
        .par_iter()
        .map(|g| {
            let t = Instant::now();
            let res = (|| -> Result<TkAction, String> {
                let w = entry.generator_word(&g.name).map_err(|e| e.to_string())?;
                let act = action_on_tk(entry, &w, opts).map_err(|e| e.to_string())?;
                let mut grams = vec![&printed];
                if g.is_reflection() {
                    grams.push(computed.as_ref().ok_or("no computed gram")?);
                }
                for gram in grams {
                    let (sign, imgs) = expected_images(entry, &g.action, gram);
                    if sign != act.sign {
                        return Err(format!("sign {} expected {sign}", act.sign));
                    }
                    for (j, want) in imgs.iter().enumerate() {
                        let got = act
                            .apply(&to_bigint(&entry.roots[j]))
                            .ok_or("root not in K°")?;
                        if got != to_bigint(want) {
                            return Err(format!(
                                "alpha_{j} -> {} expected {}",
                                fmt_vec(&got),
                                fmt_vec(want)
                            ));
                        }
                    }
                }
                Ok(act)
            })();
            match res {
                Ok(a) => (
                    Check::new(format!("action of {}", g.name), true, None, t.elapsed()),
                    Some((g.name.clone(), a)),
                ),
                Err(e) => (
                    Check::new(format!("action of {}", g.name), false, Some(e), t.elapsed()),
                    None,
                ),
            }
        })
        .collect();
    for (c, a) in results {
        rep.checks.push(c);
        actions.extend(a);
    }

    let t = Instant::now();
    let mut clash = None;
    for (a, (n1, x)) in actions.iter().enumerate() {
        for (n2, y) in &actions[a + 1..] {
            if x.images == y.images && x.sign == y.sign {
                clash = Some(format!("{n1} and {n2} act identically"));
            }
        }
    }
    rep.checks.push(Check::new(
        "generators act distinctly",
        clash.is_none(),
        clash,
        t.elapsed(),
    ));

    let t = Instant::now();
    let r = (|| -> Result<(), String> {
        for (n1, x) in &actions {
            for (n2, y) in &actions {
                let w = entry
                    .word_of(&[n1.clone(), n2.clone()])
                    .map_err(|e| e.to_string())?;
                let a = action_on_tk(entry, &w, opts).map_err(|e| e.to_string())?;
                if a.sign != x.sign * y.sign {
                    return Err(format!("sgn({n1} {n2}) = {}", a.sign));
                }
            }
        }
        Ok(())
    })();
    rep.checks.push(Check::from_result("sgn multiplicative", r, t.elapsed()));
    rep
}

/// Rank-two seed with `ε = [[0,1],[-1,0]]` and the word `σ ∘ μ_1^+`, of order five.
pub fn pentagon_step() -> ClusterWord {
    let fixed = crate::lattice::FixedData::from_lambda(&IntMatrix::from_rows_i64(&[
        vec![0, 1],
        vec![-1, 0],
    ]))
    .expect("valid form");
    let seed = fixed.initial_seed();
    let sigma = IsoSpec {
        perm: vec![1, 0],
        sign: Sign::Plus,
        matrix: Some(IntMatrix::from_rows_i64(&[vec![0, 1], vec![-1, 0]])),
    };
    parse_word(&seed, "sigma o m1+", Some(&sigma)).expect("valid word")
}

pub fn all_entries() -> Vec<CatalogEntry> {
    TypeLabel::ALL
        .iter()
        .map(|&l| catalog_entry(l).expect("catalog data is valid"))
        .collect()
}

/// Which types have their relation list in the acceptance suite.
pub fn has_full_presentation(label: TypeLabel) -> bool {
    !matches!(label, TypeLabel::E2 | TypeLabel::E1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_build() {
        for e in all_entries() {
            for g in &e.generators {
                let w = e.generator_word(&g.name).unwrap();
                assert_eq!(w.target().unwrap(), e.seed, "{} {}", e.label, g.name);
            }
        }
    }

    #[test]
    fn e7_generators() {
        let e = catalog_entry(TypeLabel::E7).unwrap();
        assert_eq!(e.generator("s3").unwrap().notation, "m1- o (1,6) o m1+");
        let w = e.generator_word("i").unwrap();
        assert_eq!(w.steps.len(), 3);
    }

    #[test]
    fn root_data_all_types() {
        for l in TypeLabel::ALL {
            let rep = verify_root_basis(&catalog_entry(l).unwrap());
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn e7_braid_and_square() {
        let e = catalog_entry(TypeLabel::E7).unwrap();
        let opts = EvalOptions::default();
        let sq = e.word_of(&["s3".into(), "s3".into()]).unwrap();
        assert!(verify_relation(&sq, &opts).unwrap());
        let t: Vec<String> = ["s0", "s1", "s0", "s1", "s0", "s1"].map(String::from).to_vec();
        assert!(verify_relation(&e.word_of(&t).unwrap(), &opts).unwrap());
        let t: Vec<String> = ["s0", "s1", "s0", "s1"].map(String::from).to_vec();
        assert!(!verify_relation(&e.word_of(&t).unwrap(), &opts).unwrap());
    }

    #[test]
    fn e2_translation() {
        let e = catalog_entry(TypeLabel::E2).unwrap();
        let w = e.generator_word("t").unwrap();
        let a = action_on_tk(&e, &w, &EvalOptions::default()).unwrap();
        assert_eq!(a.sign, 1);
        let got = a.apply(&to_bigint(&e.roots[2])).unwrap();
        let want: Vec<i64> = e.roots[2].iter().zip(&e.delta).map(|(a, d)| a + d).collect();
        assert_eq!(got, to_bigint(&want));
    }

    #[test]
    fn conjugated_word_has_same_action() {
        let e = catalog_entry(TypeLabel::E7).unwrap();
        let opts = EvalOptions::default();
        let s0 = e.generator_word("s0").unwrap();
        let direct = action_on_tk(&e, &s0, &opts).unwrap();
        let m = parse_word(&e.seed, "m1+", None).unwrap();
        let conj = m.inverse().unwrap().then(&s0).unwrap().then(&m).unwrap();
        let a = action_on_tk(&e, &conj, &opts).unwrap();
        assert_eq!(a.images, direct.images);
        assert_eq!(a.sign, direct.sign);
    }

    #[test]
    fn relation_names() {
        let e = catalog_entry(TypeLabel::E6).unwrap();
        let names: Vec<String> = e.relations().into_iter().map(|r| r.name).collect();
        assert!(names.contains(&"s0^2".to_string()));
        assert!(names.contains(&"(s0 s6)^3".to_string()));
        assert!(names.contains(&"(s0 s1)^2".to_string()));
        assert!(names.contains(&"(i1 i2)^3".to_string()));
        assert!(names.contains(&"i1 s1 i1^-1 = s5".to_string()));
    }

    #[test]
    fn unknown_label() {
        assert!(matches!(
            catalog_entry_by_name("E9"),
            Err(CatalogError::UnknownLabel(_))
        ));
    }
}
