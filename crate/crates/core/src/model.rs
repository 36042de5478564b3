//! Model data: basis, metric, grading, potentials; file ingestion and
//! serialization; structural validation.
//!
//! A model file is a UTF-8 JSON document. Rationals are strings `"p/q"` or
//! `"n"`; series are term lists `{coeff, t_exp, q_exp}`. The genus-1
//! potential is optional — the solver can reconstruct it.

use std::path::Path;
use std::sync::Arc;

use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg;
use crate::rat::{self, Rat};
use crate::series::{Monomial, TruncatedSeries, VarShape};

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
}

fn schema<T>(msg: impl Into<String>) -> Result<T, ModelError> {
    Err(ModelError::Schema(msg.into()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisEntry {
    pub label: String,
    pub p: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NovikovDoc {
    pub count: usize,
    pub charges: Vec<Vec<i64>>,
    pub max_degree: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub t_exp: Vec<u16>,
    pub q_exp: Vec<u16>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelDoc {
    pub name: String,
    pub dimension: i64,
    pub basis: Vec<BasisEntry>,
    pub eta: Vec<Vec<String>>,
    pub c1_matrix: Vec<Vec<String>>,
    pub euler_const: Vec<String>,
    pub novikov: NovikovDoc,
    pub t_degree: i64,
    pub chi: String,
    pub c1_cdm1: String,
    pub intersections_c_dm1: Vec<String>,
    #[serde(rename = "F0")]
    pub f0: Vec<TermDoc>,
    #[serde(rename = "F1", skip_serializing_if = "Option::is_none", default)]
    pub f1: Option<Vec<TermDoc>>,
}

/// A quantum-cohomology model on the small phase space. Immutable after
/// load; derived fields (`eta_inv`, `b`) are computed during construction.
#[derive(Debug, Clone)]
pub struct FrobeniusModel {
    pub name: String,
    pub d: i64,
    pub n: usize,
    pub labels: Vec<String>,
    pub p: Vec<i64>,
    /// b_α = p_α − (d−1)/2 (half-integers in general).
    pub b: Vec<Rat>,
    pub eta: linalg::Matrix,
    pub eta_inv: linalg::Matrix,
    /// C_α^β with c₁(X)∪γ_α = Σ_β C_α^β γ_β.
    pub c1_matrix: linalg::Matrix,
    /// Coefficients of c₁(X) in the basis.
    pub euler_const: Vec<Rat>,
    pub chi: Rat,
    /// ∫_X c₁ ∪ c_{d−1} (defined as 0 for the point).
    pub c1_cdm1: Rat,
    /// ∫_X γ_α ∪ c_{d−1} per basis element.
    pub intersections_c_dm1: Vec<Rat>,
    pub shape: Arc<VarShape>,
    pub f0: TruncatedSeries,
    pub f1: Option<TruncatedSeries>,
}

fn parse_matrix(doc: &[Vec<String>], n: usize, what: &str) -> Result<linalg::Matrix, ModelError> {
    if doc.len() != n || doc.iter().any(|row| row.len() != n) {
        return schema(format!("{what} must be {n}×{n}"));
    }
    doc.iter()
        .map(|row| {
            row.iter()
                .map(|s| rat::parse(s).map_err(ModelError::Schema))
                .collect()
        })
        .collect()
}

fn parse_vector(doc: &[String], n: usize, what: &str) -> Result<Vec<Rat>, ModelError> {
    if doc.len() != n {
        return schema(format!("{what} must have length {n}"));
    }
    doc.iter()
        .map(|s| rat::parse(s).map_err(ModelError::Schema))
        .collect()
}

fn parse_terms(
    doc: &[TermDoc],
    shape: &Arc<VarShape>,
    what: &str,
) -> Result<TruncatedSeries, ModelError> {
    let mut terms = Vec::with_capacity(doc.len());
    for t in doc {
        if t.t_exp.len() != shape.n_t || t.q_exp.len() != shape.n_q {
            return schema(format!("{what}: exponent vector length mismatch"));
        }
        let m = Monomial {
            t: t.t_exp.iter().copied().collect(),
            q: t.q_exp.iter().copied().collect(),
        };
        if m.t_degree() > shape.trunc_t || m.q_degree() > shape.max_q {
            return schema(format!(
                "{what}: term {} exceeds the declared truncation",
                m.render()
            ));
        }
        let c = rat::parse(&t.coeff).map_err(ModelError::Schema)?;
        terms.push((m, c));
    }
    Ok(TruncatedSeries::from_terms(shape.clone(), terms))
}

fn series_terms(s: &TruncatedSeries) -> Vec<TermDoc> {
    s.iter()
        .map(|(m, c)| TermDoc {
            coeff: rat::render(c),
            t_exp: m.t.to_vec(),
            q_exp: m.q.to_vec(),
        })
        .collect()
}

impl FrobeniusModel {
    pub fn from_doc(doc: &ModelDoc) -> Result<Self, ModelError> {
        let n = doc.basis.len();
        if n == 0 {
            return schema("empty basis");
        }
        let d = doc.dimension;
        if d < 0 {
            return schema("dimension must be ≥ 0");
        }
        let labels: Vec<String> = doc.basis.iter().map(|b| b.label.clone()).collect();
        let p: Vec<i64> = doc.basis.iter().map(|b| b.p).collect();
        if p[0] != 0 {
            return schema("γ1 must be the identity class (p = 0)");
        }
        // b_α = p_α − (d−1)/2
        let half = rat::frac(1, 2);
        let b: Vec<Rat> = p
            .iter()
            .map(|&pa| rat::int(pa) - (rat::int(d - 1) * half.clone()))
            .collect();

        let eta = parse_matrix(&doc.eta, n, "eta")?;
        for i in 0..n {
            for j in 0..n {
                if eta[i][j] != eta[j][i] {
                    return schema("eta is not symmetric");
                }
                if !eta[i][j].is_zero() && b[i].clone() + b[j].clone() != rat::one() {
                    return schema(format!(
                        "grading violation: eta[{i}][{j}] ≠ 0 but b_{} + b_{} ≠ 1",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        let Some(eta_inv) = linalg::invert(&eta) else {
            return schema("eta is singular");
        };

        let c1_matrix = parse_matrix(&doc.c1_matrix, n, "c1_matrix")?;
        // C_{αβ} = Σ_μ C_α^μ η_{μβ} must be symmetric.
        let c_low = linalg::mat_mul(&c1_matrix, &eta);
        for i in 0..n {
            for j in 0..i {
                if c_low[i][j] != c_low[j][i] {
                    return schema("C_{αβ} = Σ C_α^μ η_{μβ} is not symmetric");
                }
            }
        }
        let euler_const = parse_vector(&doc.euler_const, n, "euler_const")?;
        if euler_const != c1_matrix[0] {
            return schema("euler_const must agree with c1_matrix applied to the identity row");
        }

        if doc.novikov.charges.len() != n
            || doc
                .novikov
                .charges
                .iter()
                .any(|row| row.len() != doc.novikov.count)
        {
            return schema("novikov.charges must be N×count");
        }
        if doc.t_degree < 3 {
            return schema("t_degree must be ≥ 3");
        }
        let shape = Arc::new(VarShape::new(
            n,
            doc.novikov.count,
            doc.t_degree,
            doc.novikov.max_degree,
            doc.novikov.charges.clone(),
        ));

        let chi = rat::parse(&doc.chi).map_err(ModelError::Schema)?;
        let c1_cdm1 = rat::parse(&doc.c1_cdm1).map_err(ModelError::Schema)?;
        let intersections_c_dm1 = parse_vector(&doc.intersections_c_dm1, n, "intersections_c_dm1")?;

        let f0 = parse_terms(&doc.f0, &shape, "F0")?;
        let f1 = match &doc.f1 {
            Some(terms) => {
                let s = parse_terms(terms, &shape, "F1")?;
                if s.iter().any(|(m, _)| m.t[0] != 0) {
                    return schema("F1 must not depend on t1 (string equation)");
                }
                Some(s)
            }
            None => None,
        };

        Ok(FrobeniusModel {
            name: doc.name.clone(),
            d,
            n,
            labels,
            p,
            b,
            eta,
            eta_inv,
            c1_matrix,
            euler_const,
            chi,
            c1_cdm1,
            intersections_c_dm1,
            shape,
            f0,
            f1,
        })
    }

    pub fn to_doc(&self) -> ModelDoc {
        ModelDoc {
            name: self.name.clone(),
            dimension: self.d,
            basis: self
                .labels
                .iter()
                .zip(&self.p)
                .map(|(label, &p)| BasisEntry {
                    label: label.clone(),
                    p,
                })
                .collect(),
            eta: self
                .eta
                .iter()
                .map(|row| row.iter().map(rat::render).collect())
                .collect(),
            c1_matrix: self
                .c1_matrix
                .iter()
                .map(|row| row.iter().map(rat::render).collect())
                .collect(),
            euler_const: self.euler_const.iter().map(rat::render).collect(),
            novikov: NovikovDoc {
                count: self.shape.n_q,
                charges: self.shape.charges.clone(),
                max_degree: self.shape.max_q,
            },
            t_degree: self.shape.trunc_t,
            chi: rat::render(&self.chi),
            c1_cdm1: rat::render(&self.c1_cdm1),
            intersections_c_dm1: self.intersections_c_dm1.iter().map(rat::render).collect(),
            f0: series_terms(&self.f0),
            f1: self.f1.as_ref().map(series_terms),
        }
    }

    pub fn load(path: &Path) -> Result<Self, ModelError> {
        let text = std::fs::read_to_string(path)?;
        let doc: ModelDoc = serde_json::from_str(&text)?;
        Self::from_doc(&doc)
    }

    pub fn save(&self, path: &Path) -> Result<(), ModelError> {
        let doc = self.to_doc();
        let text = serde_json::to_string_pretty(&doc)?;
        std::fs::write(path, text)?;
        Ok(())
    }

    /// Constant-maps contribution to the genus-1 potential:
    /// −(1/24) Σ_α t^α ∫_X γ_α ∪ c_{d−1}(X).
    pub fn genus1_classical_part(&self) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.shape.clone());
        let scale = rat::frac(-1, 24);
        for alpha in 0..self.n {
            let w = &self.intersections_c_dm1[alpha];
            if !w.is_zero() {
                let m = Monomial::var(self.n, self.shape.n_q, alpha);
                s = s.add(&TruncatedSeries::monomial(
                    self.shape.clone(),
                    m,
                    w * &scale,
                ));
            }
        }
        s
    }

    /// Clone with a different genus-1 potential.
    pub fn with_f1(&self, f1: TruncatedSeries) -> Self {
        let mut m = self.clone();
        m.f1 = Some(f1);
        m
    }

    /// Clone with `+1` added to one F1 slot (negative testing).
    pub fn mutate_f1(&self, slot: &Monomial) -> Result<Self, ModelError> {
        let Some(f1) = &self.f1 else {
            return schema("model has no F1 to mutate");
        };
        let bump = TruncatedSeries::monomial(self.shape.clone(), slot.clone(), rat::one());
        Ok(self.with_f1(f1.add(&bump)))
    }

    /// Clone with both truncation bounds replaced. Series terms beyond the
    /// new bounds are dropped; validity windows shrink accordingly.
    pub fn with_truncation(&self, trunc_t: i64, max_q: i64) -> Self {
        let shape = Arc::new(VarShape::new(
            self.n,
            self.shape.n_q,
            trunc_t,
            max_q,
            self.shape.charges.clone(),
        ));
        let recut = |s: &TruncatedSeries| {
            TruncatedSeries::from_terms(
                shape.clone(),
                s.iter().map(|(m, c)| (m.clone(), c.clone())),
            )
        };
        let mut m = self.clone();
        m.f0 = recut(&self.f0);
        m.f1 = self.f1.as_ref().map(recut);
        m.shape = shape;
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    #[test]
    fn point_model_loads() {
        let doc = models::builtin_doc("point", 8, 0).unwrap();
        let m = FrobeniusModel::from_doc(&doc).unwrap();
        assert_eq!(m.n, 1);
        assert_eq!(m.d, 0);
        assert_eq!(m.b[0], rat::frac(1, 2));
        assert_eq!(m.f1.as_ref().map(|s| s.len()), Some(0));
    }

    #[test]
    fn p1_grading() {
        let m = models::builtin("p1", 8, 3).unwrap();
        assert_eq!(m.b, vec![rat::int(0), rat::int(1)]);
        assert_eq!(m.eta_inv[0][1], rat::int(1));
        assert_eq!(m.eta_inv[0][0], rat::int(0));
    }

    #[test]
    fn grading_violation_rejected() {
        let mut doc = models::builtin_doc("p1", 8, 3).unwrap();
        doc.basis[1].p = 2; // breaks b_α = 1 − b_β against the off-diagonal eta
        let err = FrobeniusModel::from_doc(&doc).unwrap_err();
        assert!(err.to_string().contains("grading violation"));
    }

    #[test]
    fn singular_eta_rejected() {
        let mut doc = models::builtin_doc("p1", 8, 3).unwrap();
        doc.eta = vec![vec!["0".into(), "0".into()], vec!["0".into(), "0".into()]];
        let err = FrobeniusModel::from_doc(&doc).unwrap_err();
        // All-zero eta first trips the grading check tied to nonzero entries?
        // No: zero entries skip it, so the singularity check reports.
        assert!(err.to_string().contains("singular"));
    }

    #[test]
    fn f1_with_t1_dependence_rejected() {
        let mut doc = models::builtin_doc("p1", 8, 3).unwrap();
        doc.f1 = Some(vec![TermDoc {
            coeff: "1".into(),
            t_exp: vec![1, 0],
            q_exp: vec![0],
        }]);
        let err = FrobeniusModel::from_doc(&doc).unwrap_err();
        assert!(err.to_string().contains("t1"));
    }

    #[test]
    fn round_trip_through_document() {
        for name in ["point", "p1", "p2", "p1-classical", "p2-classical"] {
            let doc = models::builtin_doc(name, 8, 3).unwrap();
            let m = FrobeniusModel::from_doc(&doc).unwrap();
            let doc2 = m.to_doc();
            let m2 = FrobeniusModel::from_doc(&doc2).unwrap();
            assert_eq!(
                serde_json::to_value(&doc2).unwrap(),
                serde_json::to_value(&m2.to_doc()).unwrap(),
                "document round trip for {name}"
            );
            // Coefficientwise equality of the potentials.
            assert_eq!(m.f0.len(), m2.f0.len());
            for (mono, c) in m.f0.iter() {
                assert_eq!(m2.f0.coeff(mono), c.clone());
            }
        }
    }

    #[test]
    fn classical_genus1_parts() {
        let p1 = models::builtin("p1", 8, 3).unwrap();
        let s = p1.genus1_classical_part();
        let m = Monomial::parse("t2", 2, 1).unwrap();
        assert_eq!(s.coeff(&m), rat::frac(-1, 24));
        assert_eq!(s.len(), 1);

        let p2 = models::builtin("p2", 8, 3).unwrap();
        let s = p2.genus1_classical_part();
        let m = Monomial::parse("t2", 3, 1).unwrap();
        assert_eq!(s.coeff(&m), rat::frac(-1, 8));

        let pt = models::builtin("point", 8, 0).unwrap();
        assert!(pt.genus1_classical_part().is_empty());
    }
}
