//! JSON shapes emitted under `--json`. Every type deserializes from what it
//! serializes to. Exact numbers (coefficients, big integers) are strings in
//! expression syntax.

use ckstar::bialgebra::{coefficient_text, Graded};
use ckstar::permutative_reps::Decomposition;
use ckstar::{
    AbelianGroup, AlgebraElement, Classification, GaussianRational, Tensor, ZeroOneMatrix,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<u8>>,
}

impl From<&ZeroOneMatrix> for MatrixJson {
    fn from(a: &ZeroOneMatrix) -> Self {
        MatrixJson {
            n: a.n(),
            rows: a.rows(),
        }
    }
}

impl TryFrom<&MatrixJson> for ZeroOneMatrix {
    type Error = ckstar::Error;

    fn try_from(m: &MatrixJson) -> ckstar::Result<Self> {
        if m.rows.len() != m.n {
            return Err(ckstar::Error::Shape {
                rows: m.rows.len(),
                cols: m.rows.iter().map(Vec::len).collect(),
            });
        }
        ZeroOneMatrix::from_rows(&m.rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub nondegenerate: bool,
    pub irreducible: bool,
    pub permutation: bool,
    pub simple_ck: bool,
}

impl From<Classification> for ClassifyJson {
    fn from(c: Classification) -> Self {
        ClassifyJson {
            nondegenerate: c.nondegenerate,
            irreducible: c.irreducible,
            permutation: c.permutation,
            simple_ck: c.simple_ck,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorJson {
    pub left: MatrixJson,
    pub right: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub text: String,
}

impl From<&AbelianGroup> for GroupJson {
    fn from(g: &AbelianGroup) -> Self {
        GroupJson {
            free_rank: g.free_rank,
            torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
            text: g.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTheoryJson {
    pub k0: GroupJson,
    pub k1: GroupJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smith_diagonal: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coefficient: String,
    pub monomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub context: MatrixJson,
    pub terms: Vec<TermJson>,
    pub text: String,
}

impl From<&AlgebraElement> for ElementJson {
    fn from(x: &AlgebraElement) -> Self {
        ElementJson {
            context: x.context().into(),
            terms: x
                .terms()
                .map(|(m, c)| TermJson {
                    coefficient: coefficient_text(c),
                    monomial: m.to_string(),
                })
                .collect(),
            text: x.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub contexts: Vec<String>,
    pub coefficient: String,
    pub monomials: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub arity: usize,
    pub terms: Vec<TensorTermJson>,
}

impl From<&Tensor> for TensorJson {
    fn from(t: &Tensor) -> Self {
        TensorJson {
            arity: t.arity(),
            terms: t
                .terms()
                .map(|(ctxs, ms, c)| TensorTermJson {
                    contexts: ctxs.iter().map(|a| a.to_string()).collect(),
                    coefficient: coefficient_text(c),
                    monomials: ms.iter().map(|m| m.to_string()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounitJson {
    pub value: String,
}

impl From<&GaussianRational> for CounitJson {
    fn from(c: &GaussianRational) -> Self {
        CounitJson {
            value: coefficient_text(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugePartJson {
    /// `z^log(q)`, with `q` a positive rational.
    pub phase: String,
    pub base: String,
    pub element: ElementJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeJson {
    pub power: i64,
    pub parts: Vec<GaugePartJson>,
}

impl GaugeJson {
    /// Parts of a gauged single-context element.
    pub fn new(power: i64, ctx: &ZeroOneMatrix, g: &Graded<GaussianRational>) -> Self {
        GaugeJson {
            power,
            parts: g
                .parts()
                .map(|(q, x)| GaugePartJson {
                    phase: q.to_string(),
                    base: q.base().to_string(),
                    element: (&x.component(ctx)).into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberJson {
    pub family: String,
    pub member: bool,
    pub delta_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub word: Vec<u32>,
    pub primitive: bool,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub context: MatrixJson,
    pub components: Vec<ComponentJson>,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        DecompositionJson {
            context: d.context().into(),
            components: d
                .components()
                .map(|(w, k)| ComponentJson {
                    word: w.letters().to_vec(),
                    primitive: w.is_primitive(),
                    multiplicity: k,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub depth: usize,
    pub components: usize,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordsJson {
    pub length: usize,
    pub count: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<Vec<u32>>>,
}
