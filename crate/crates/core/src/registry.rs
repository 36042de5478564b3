//! Data-driven identity registry: every universal equation is one entry
//! with an instance enumerator and a residual evaluator, so suites can be
//! listed, filtered, and reported uniformly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::appendix;
use crate::calculus::{basis, delta, epow, Engine, FE};
use crate::getzler;
use crate::identities as ids;
use crate::model::FrobeniusModel;
use crate::report::{ResidualRecord, SuiteReport};
use crate::series::{Monomial, TruncatedSeries};
use crate::solver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Core,
    Derivations,
    Applications,
    Appendix,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "axioms" => Suite::Axioms,
            "core" => Suite::Core,
            "derivations" => Suite::Derivations,
            "applications" => Suite::Applications,
            "appendix" => Suite::Appendix,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Core => "core",
            Suite::Derivations => "derivations",
            Suite::Applications => "applications",
            Suite::Appendix => "appendix",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub suite: Suite,
    pub k_max: i64,
    /// Inject +1 into this F1 slot before running (negative testing).
    pub mutate_f1: Option<Monomial>,
    /// Solve for F1 when genus-1 identities need it and the model has none.
    pub autosolve: bool,
    pub jobs: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            suite: Suite::All,
            k_max: 3,
            mutate_f1: None,
            autosolve: true,
            jobs: None,
        }
    }
}

pub struct IdentityDef {
    pub name: &'static str,
    pub suite: Suite,
    pub needs_f1: bool,
    pub enumerate: fn(&FrobeniusModel, &RunOptions) -> Vec<Vec<i64>>,
    pub eval: fn(&Engine, &[i64]) -> Vec<TruncatedSeries>,
}

/// Pool of representative fields for identities quantified over arbitrary
/// vector fields: the basis fields, low Euler powers, and Δ.
fn pool_fe(model: &FrobeniusModel, id: i64) -> FE {
    let n = model.n as i64;
    match id {
        x if x < n => basis(x as usize),
        x if x == n => epow(1),
        x if x == n + 1 => epow(2),
        x if x == n + 2 => epow(3),
        _ => delta(),
    }
}

fn pool_size(model: &FrobeniusModel) -> i64 {
    model.n as i64 + 4
}

fn tuples(ranges: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &r in ranges {
        let mut next = Vec::with_capacity(out.len() * r as usize);
        for prefix in &out {
            for v in 0..r {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn basis_tuples(model: &FrobeniusModel, k: usize) -> Vec<Vec<i64>> {
    tuples(&vec![model.n as i64; k])
}

fn one(series: TruncatedSeries) -> Vec<TruncatedSeries> {
    vec![series]
}

fn p(params: &[i64], i: usize) -> usize {
    params[i] as usize
}

/// The full identity table.
pub fn registry() -> &'static [IdentityDef] {
    static TABLE: std::sync::OnceLock<Vec<IdentityDef>> = std::sync::OnceLock::new();
    TABLE.get_or_init(build_registry)
}

fn build_registry() -> Vec<IdentityDef> {
    let mut t: Vec<IdentityDef> = Vec::new();

    // -- axioms ------------------------------------------------------------
    t.push(IdentityDef {
        name: "string_metric",
        suite: Suite::Axioms,
        needs_f1: false,
        enumerate: |m, _| basis_tuples(m, 2),
        eval: |e, q| one(ids::string_metric_residual(e, p(q, 0), p(q, 1))),
    });
    t.push(IdentityDef {
        name: "string_vanishing_g0",
        suite: Suite::Axioms,
        needs_f1: false,
        enumerate: |m, _| {
            let mut v = basis_tuples(m, 3);
            v.extend(basis_tuples(m, 4));
            v
        },
        eval: |e, q| {
            let idx: Vec<usize> = q.iter().map(|&x| x as usize).collect();
            one(ids::string_vanishing_residual(e, 0, &idx))
        },
    });
    t.push(IdentityDef {
        name: "string_vanishing_g1",
        suite: Suite::Axioms,
        needs_f1: true,
        enumerate: |m, _| {
            let mut v = vec![vec![]];
            v.extend(basis_tuples(m, 1));
            v
        },
        eval: |e, q| {
            let idx: Vec<usize> = q.iter().map(|&x| x as usize).collect();
            one(ids::string_vanishing_residual(e, 1, &idx))
        },
    });
    t.push(IdentityDef {
        name: "wdvv",
        suite: Suite::Axioms,
        needs_f1: false,
        enumerate: |m, _| basis_tuples(m, 4),
        eval: |e, q| one(ids::wdvv_residual(e, p(q, 0), p(q, 1), p(q, 2), p(q, 3))),
    });
    t.push(IdentityDef {
        name: "quasihom_g0",
        suite: Suite::Axioms,
        needs_f1: false,
        enumerate: |m, _| {
            let mut v = vec![vec![]];
            for k in 1..=3usize {
                v.extend(basis_tuples(m, k));
            }
            v
        },
        eval: |e, q| {
            let idx: Vec<usize> = q.iter().map(|&x| x as usize).collect();
            one(ids::quasihom_residual(e, 0, &idx))
        },
    });
    t.push(IdentityDef {
        name: "quasihom_g1",
        suite: Suite::Axioms,
        needs_f1: true,
        enumerate: |m, _| {
            let mut v = vec![vec![]];
            for k in 1..=3usize {
                v.extend(basis_tuples(m, k));
            }
            v
        },
        eval: |e, q| {
            let idx: Vec<usize> = q.iter().map(|&x| x as usize).collect();
            one(ids::quasihom_residual(e, 1, &idx))
        },
    });
    t.push(IdentityDef {
        name: "borisov",
        suite: Suite::Axioms,
        needs_f1: false,
        enumerate: |_, _| vec![vec![]],
        eval: |e, _| one(ids::borisov_residual(e)),
    });

    // -- core --------------------------------------------------------------
    t.push(IdentityDef {
        name: "derivative_rule",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, _| {
            let ps = pool_size(m);
            let mut v = Vec::new();
            for g in 0..2 {
                for w in 0..ps {
                    for a in 0..ps {
                        v.push(vec![g, w, a]);
                    }
                }
            }
            // one two-argument spot per genus
            v.push(vec![0, ps - 1, 0, 1]);
            v.push(vec![1, ps - 1, 0, 1]);
            v
        },
        eval: |e, q| {
            let genus = q[0] as u8;
            if genus == 1 && e.model.f1.is_none() {
                return vec![TruncatedSeries::zero(e.model.shape.clone())];
            }
            let w = e.field(&pool_fe(&e.model, q[1]));
            let fields: Vec<_> = q[2..]
                .iter()
                .map(|&id| e.field(&pool_fe(&e.model, id)))
                .collect();
            let refs: Vec<&crate::calculus::VectorField> =
                fields.iter().map(|f| f.as_ref()).collect();
            one(e.derivative_rule_residual(genus, &w, &refs))
        },
    });
    t.push(IdentityDef {
        name: "derivative_of_product",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, _| tuples(&[pool_size(m), pool_size(m), pool_size(m)]),
        eval: |e, q| {
            ids::derivative_qp_residual(
                e,
                &pool_fe(&e.model, q[0]),
                &pool_fe(&e.model, q[1]),
                &pool_fe(&e.model, q[2]),
            )
        },
    });
    t.push(IdentityDef {
        name: "euler_four_point",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, _| tuples(&[pool_size(m), pool_size(m)]),
        eval: |e, q| {
            ids::fourpoint_euler_residual(e, &pool_fe(&e.model, q[0]), &pool_fe(&e.model, q[1]))
        },
    });
    t.push(IdentityDef {
        name: "nabla_euler",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, _| tuples(&[pool_size(m)]),
        eval: |e, q| ids::nabla_euler_residual(e, &pool_fe(&e.model, q[0])),
    });
    t.push(IdentityDef {
        name: "nabla_euler_power",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max + 1 {
                for id in 0..m.n as i64 {
                    v.push(vec![k, id]);
                }
            }
            v
        },
        eval: |e, q| ids::nabla_euler_power_residual(e, q[0], &pool_fe(&e.model, q[1])),
    });
    t.push(IdentityDef {
        name: "euler_power_bracket",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |_, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max + 1 {
                for m in 0..=o.k_max + 1 {
                    v.push(vec![k, m]);
                }
            }
            v
        },
        eval: |e, q| ids::euler_bracket_residual(e, q[0], q[1]),
    });
    t.push(IdentityDef {
        name: "wdvv_first_derivative",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, _| basis_tuples(m, 5),
        eval: |e, q| {
            let v = [
                basis(p(q, 0)),
                basis(p(q, 1)),
                basis(p(q, 2)),
                basis(p(q, 3)),
                basis(p(q, 4)),
            ];
            one(ids::wdvv_first_derivative_residual(e, &v))
        },
    });
    t.push(IdentityDef {
        name: "wdvv_second_derivative",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, _| basis_tuples(m, 6),
        eval: |e, q| {
            let v = [
                basis(p(q, 0)),
                basis(p(q, 1)),
                basis(p(q, 2)),
                basis(p(q, 3)),
                basis(p(q, 4)),
                basis(p(q, 5)),
            ];
            one(ids::wdvv_second_derivative_residual(e, &v))
        },
    });
    t.push(IdentityDef {
        name: "power_reduction_4pt",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max {
                for abm in basis_tuples(m, 3) {
                    // quantum powers of E and of a mixed divisor field
                    v.push([vec![0, k], abm.clone()].concat());
                    v.push([vec![1, k], abm].concat());
                }
            }
            v
        },
        eval: |e, q| {
            let field = if q[0] == 0 { epow(1) } else { mixed_field(e) };
            one(ids::power_reduction_4pt_residual(
                e,
                &field,
                q[1],
                p(q, 2),
                p(q, 3),
                p(q, 4),
            ))
        },
    });
    t.push(IdentityDef {
        name: "power_reduction_5pt",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max {
                for abms in basis_tuples(m, 4) {
                    v.push([vec![0, k], abms].concat());
                }
            }
            v
        },
        eval: |e, q| {
            one(ids::power_reduction_5pt_residual(
                e,
                &epow(1),
                q[1],
                p(q, 2),
                p(q, 3),
                p(q, 4),
                p(q, 5),
            ))
        },
    });
    t.push(IdentityDef {
        name: "observation_products",
        suite: Suite::Core,
        needs_f1: true,
        enumerate: |m, _| {
            let small = m.n as i64 + 1; // basis fields and E
            let mut v = Vec::new();
            for g in 0..2 {
                for t3 in tuples(&vec![small; 3]) {
                    v.push([vec![g], t3].concat());
                }
            }
            v.push(vec![0, 0, 1, small - 1, 0]);
            v.push(vec![1, 0, 1, small - 1, 0]);
            v
        },
        eval: |e, q| {
            let fields: Vec<FE> = q[1..].iter().map(|&id| pool_fe(&e.model, id)).collect();
            ids::observation1_residuals(e, q[0] as u8, &fields)
        },
    });
    t.push(IdentityDef {
        name: "observation_graded_products",
        suite: Suite::Core,
        needs_f1: true,
        enumerate: |m, _| {
            let small = m.n as i64 + 1;
            let mut v = Vec::new();
            for g in 0..2 {
                for t4 in tuples(&vec![small; 4]) {
                    v.push([vec![g], t4].concat());
                }
            }
            v
        },
        eval: |e, q| {
            let fields: Vec<FE> = q[1..].iter().map(|&id| pool_fe(&e.model, id)).collect();
            ids::observation2_residuals(e, q[0] as u8, &fields)
        },
    });
    t.push(IdentityDef {
        name: "phi_consistency",
        suite: Suite::Core,
        needs_f1: false,
        enumerate: |_, o| (0..=(o.k_max + 2)).map(|k| vec![k]).collect(),
        eval: |e, q| one(e.phi(q[0]).sub(&crate::phi::phi_alt(e, q[0]))),
    });
    t.push(IdentityDef {
        name: "gap_base",
        suite: Suite::Core,
        needs_f1: true,
        enumerate: |_, _| vec![vec![0], vec![1]],
        eval: |e, q| one(e.gap(q[0]).as_ref().clone()),
    });
    t.push(IdentityDef {
        name: "gap_recursion",
        suite: Suite::Core,
        needs_f1: true,
        enumerate: |_, o| (1..=(o.k_max + 2)).map(|k| vec![k]).collect(),
        eval: |e, q| one(crate::phi::gap_recursion_residual(e, q[0])),
    });

    // -- derivations ---------------------------------------------------------
    t.push(IdentityDef {
        name: "reduction_4pt",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max {
                for abm in basis_tuples(m, 3) {
                    v.push([vec![k], abm].concat());
                }
            }
            v
        },
        eval: |e, q| {
            one(ids::reduction_4pt_residual(
                e,
                q[0],
                p(q, 1),
                p(q, 2),
                p(q, 3),
            ))
        },
    });
    t.push(IdentityDef {
        name: "reduction_4pt_vector",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max {
                for ab in basis_tuples(m, 2) {
                    v.push([vec![k], ab].concat());
                }
            }
            v
        },
        eval: |e, q| ids::reduction_4pt_vector_residual(e, q[0], p(q, 1), p(q, 2)),
    });
    t.push(IdentityDef {
        name: "simplification_pairing",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, _| tuples(&[pool_size(m), m.n as i64, m.n as i64, m.n as i64]),
        eval: |e, q| {
            let v = [
                pool_fe(&e.model, q[0]),
                basis(p(q, 1)),
                basis(p(q, 2)),
                basis(p(q, 3)),
            ];
            one(ids::simplification_pairing_residual(e, &v))
        },
    });
    t.push(IdentityDef {
        name: "simplification_half_delta",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, _| tuples(&[pool_size(m)]),
        eval: |e, q| ids::simplification_half_delta_residuals(e, &pool_fe(&e.model, q[0])),
    });
    t.push(IdentityDef {
        name: "simplification_g_pair",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, _| basis_tuples(m, 4),
        eval: |e, q| {
            let v = [
                basis(p(q, 0)),
                basis(p(q, 1)),
                basis(p(q, 2)),
                basis(p(q, 3)),
            ];
            one(ids::simplification_g_pair_residual(e, &v))
        },
    });
    t.push(IdentityDef {
        name: "simplification_g_outer",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, _| basis_tuples(m, 4),
        eval: |e, q| {
            let v = [
                basis(p(q, 0)),
                basis(p(q, 1)),
                basis(p(q, 2)),
                basis(p(q, 3)),
            ];
            one(ids::simplification_g_outer_residual(e, &v))
        },
    });
    t.push(IdentityDef {
        name: "phi_derivative_formula",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max + 1 {
                for a in 0..m.n as i64 {
                    v.push(vec![k, a]);
                }
            }
            v
        },
        eval: |e, q| one(crate::phi::dphi_residual(e, p(q, 1), q[0])),
    });
    t.push(IdentityDef {
        name: "phi_virasoro",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |_, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max + 1 {
                for m in 0..=o.k_max + 1 {
                    if k + m > 0 {
                        v.push(vec![k, m]);
                    }
                }
            }
            v
        },
        eval: |e, q| one(crate::phi::virasoro_type_phi_residual(e, q[0], q[1])),
    });
    t.push(IdentityDef {
        name: "unit_slot_g0",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, _| basis_tuples(m, 3),
        eval: |e, q| {
            let v = [basis(0), basis(p(q, 0)), basis(p(q, 1)), basis(p(q, 2))];
            one(getzler::g0(e, &v))
        },
    });
    t.push(IdentityDef {
        name: "unit_slot_g1",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, _| basis_tuples(m, 3),
        eval: |e, q| {
            let v = [basis(0), basis(p(q, 0)), basis(p(q, 1)), basis(p(q, 2))];
            one(getzler::g1(e, &v))
        },
    });
    t.push(IdentityDef {
        name: "getzler_relation",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, _| tuples(&vec![pool_size(m); 4]),
        eval: |e, q| {
            let v = [
                pool_fe(&e.model, q[0]),
                pool_fe(&e.model, q[1]),
                pool_fe(&e.model, q[2]),
                pool_fe(&e.model, q[3]),
            ];
            one(getzler::getzler_full(e, &v))
        },
    });
    t.push(IdentityDef {
        name: "g1_one_euler",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, o| k_with_triples(m, o.k_max),
        eval: |e, q| {
            let v = triple(q);
            one(
                getzler::g1(e, &[epow(q[0]), v[0].clone(), v[1].clone(), v[2].clone()])
                    .sub(&ids::g1_one_euler_closed(e, q[0], &v)),
            )
        },
    });
    t.push(IdentityDef {
        name: "g0_one_euler",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, o| k_with_triples(m, o.k_max),
        eval: |e, q| {
            let v = triple(q);
            one(
                getzler::g0(e, &[epow(q[0]), v[0].clone(), v[1].clone(), v[2].clone()])
                    .sub(&ids::g0_one_euler_closed(e, q[0], &v)),
            )
        },
    });
    t.push(IdentityDef {
        name: "getzler_one_euler",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, o| k_with_triples(m, o.k_max),
        eval: |e, q| one(ids::getzler_one_euler_residual(e, q[0], &triple(q))),
    });
    t.push(IdentityDef {
        name: "g1_one_euler_alt",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, o| k_with_triples(m, o.k_max),
        eval: |e, q| {
            let v = triple(q);
            one(
                getzler::g1(e, &[epow(q[0]), v[0].clone(), v[1].clone(), v[2].clone()])
                    .sub(&ids::g1_one_euler_alt_closed(e, q[0], &v)),
            )
        },
    });
    t.push(IdentityDef {
        name: "g1_two_euler",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, o| kk_with_pairs(m, o.k_max),
        eval: |e, q| {
            let (va, vb) = (basis(p(q, 2)), basis(p(q, 3)));
            one(
                getzler::g1(e, &[epow(q[0]), epow(q[1]), va.clone(), vb.clone()])
                    .sub(&ids::g1_two_euler_closed(e, q[0], q[1], &va, &vb)),
            )
        },
    });
    t.push(IdentityDef {
        name: "g1_two_euler_alt",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, o| kk_with_pairs(m, o.k_max),
        eval: |e, q| {
            let (va, vb) = (basis(p(q, 2)), basis(p(q, 3)));
            one(
                getzler::g1(e, &[epow(q[0]), epow(q[1]), va.clone(), vb.clone()])
                    .sub(&ids::g1_two_euler_alt_closed(e, q[0], q[1], &va, &vb)),
            )
        },
    });
    t.push(IdentityDef {
        name: "g0_two_euler",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, o| kk_with_pairs(m, o.k_max),
        eval: |e, q| {
            let (va, vb) = (basis(p(q, 2)), basis(p(q, 3)));
            one(
                getzler::g0(e, &[epow(q[0]), epow(q[1]), va.clone(), vb.clone()])
                    .sub(&ids::g0_two_euler_closed(e, q[0], q[1], &va, &vb)),
            )
        },
    });
    t.push(IdentityDef {
        name: "getzler_two_euler",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, o| kk_with_pairs(m, o.k_max),
        eval: |e, q| {
            one(ids::getzler_two_euler_residual(
                e,
                q[0],
                q[1],
                &basis(p(q, 2)),
                &basis(p(q, 3)),
            ))
        },
    });
    t.push(IdentityDef {
        name: "g1_three_euler",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, o| kkk_with_alpha(m, o.k_max),
        eval: |e, q| {
            let ks = [q[0], q[1], q[2]];
            let va = basis(p(q, 3));
            one(
                getzler::g1(e, &[epow(q[0]), epow(q[1]), epow(q[2]), va.clone()])
                    .sub(&ids::g1_three_euler_closed(e, &ks, &va)),
            )
        },
    });
    t.push(IdentityDef {
        name: "g0_three_euler",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |m, o| kkk_with_alpha(m, o.k_max),
        eval: |e, q| {
            let ks = [q[0], q[1], q[2]];
            let va = basis(p(q, 3));
            one(
                getzler::g0(e, &[epow(q[0]), epow(q[1]), epow(q[2]), va.clone()])
                    .sub(&ids::g0_three_euler_closed(e, &ks, &va)),
            )
        },
    });
    t.push(IdentityDef {
        name: "getzler_three_euler",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, o| kkk_with_alpha(m, o.k_max),
        eval: |e, q| {
            one(ids::getzler_three_euler_residual(
                e,
                &[q[0], q[1], q[2]],
                &basis(p(q, 3)),
            ))
        },
    });
    t.push(IdentityDef {
        name: "g1_four_euler",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |_, o| tuples(&vec![o.k_max + 1; 4]),
        eval: |e, q| {
            let ks = [q[0], q[1], q[2], q[3]];
            one(
                getzler::g1(e, &[epow(q[0]), epow(q[1]), epow(q[2]), epow(q[3])])
                    .sub(&ids::g1_four_euler_closed(e, &ks)),
            )
        },
    });
    t.push(IdentityDef {
        name: "g0_four_euler",
        suite: Suite::Derivations,
        needs_f1: false,
        enumerate: |_, o| tuples(&vec![o.k_max + 1; 4]),
        eval: |e, q| {
            let ks = [q[0], q[1], q[2], q[3]];
            one(
                getzler::g0(e, &[epow(q[0]), epow(q[1]), epow(q[2]), epow(q[3])])
                    .sub(&ids::g0_four_euler_closed(e, &ks)),
            )
        },
    });
    t.push(IdentityDef {
        name: "getzler_four_euler",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |_, o| tuples(&vec![o.k_max + 1; 4]),
        eval: |e, q| {
            one(ids::getzler_four_euler_residual(
                e,
                &[q[0], q[1], q[2], q[3]],
            ))
        },
    });
    t.push(IdentityDef {
        name: "euler_chain",
        suite: Suite::Derivations,
        needs_f1: true,
        enumerate: |m, _| (0..m.n as i64).map(|a| vec![1, 1, 1, a]).collect(),
        eval: |e, q| ids::euler_chain_residual(e, q[0], q[1], q[2], p(q, 3)),
    });

    // -- applications --------------------------------------------------------
    t.push(IdentityDef {
        name: "gap_derivative_reduction",
        suite: Suite::Applications,
        needs_f1: true,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max + 1 {
                for a in 0..m.n as i64 {
                    v.push(vec![k, a]);
                }
            }
            v
        },
        eval: |e, q| one(ids::gap_derivative_reduction_residual(e, q[0], p(q, 1))),
    });
    t.push(IdentityDef {
        name: "gap_antisymmetric_reduction",
        suite: Suite::Applications,
        needs_f1: true,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max {
                for mm in 0..=o.k_max {
                    if k + mm == 0 {
                        continue;
                    }
                    for a in 0..m.n as i64 {
                        v.push(vec![k, mm, a]);
                    }
                }
            }
            v
        },
        eval: |e, q| one(ids::gap_antisymmetric_residual(e, q[0], q[1], p(q, 2))),
    });
    t.push(IdentityDef {
        name: "gap_normalized_reduction",
        suite: Suite::Applications,
        needs_f1: true,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max {
                for mm in 1..=o.k_max {
                    if k + mm < 2 {
                        continue;
                    }
                    for a in 0..m.n as i64 {
                        v.push(vec![k, mm, a]);
                    }
                }
            }
            v
        },
        eval: |e, q| one(ids::gap_normalized_residual(e, q[0], q[1], p(q, 2))),
    });
    t.push(IdentityDef {
        name: "gap_delta_splitting",
        suite: Suite::Applications,
        needs_f1: true,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k1 in 0..=o.k_max {
                for k2 in 0..=o.k_max {
                    for a in 0..m.n as i64 {
                        v.push(vec![k1, k2, a]);
                    }
                }
            }
            v
        },
        eval: |e, q| one(ids::gap_delta_splitting_residual(e, q[0], q[1], p(q, 2))),
    });
    t.push(IdentityDef {
        name: "gap_delta_annihilation",
        suite: Suite::Applications,
        needs_f1: true,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 0..=o.k_max {
                for a in 0..m.n as i64 {
                    v.push(vec![k, a]);
                }
            }
            v
        },
        eval: |e, q| one(ids::gap_delta_annihilation_residual(e, q[0], p(q, 1))),
    });
    t.push(IdentityDef {
        name: "delta_square_reduction",
        suite: Suite::Applications,
        needs_f1: true,
        enumerate: |m, o| {
            let mut v = Vec::new();
            for k in 1..=o.k_max {
                for mu in 0..m.n as i64 {
                    v.push(vec![k, mu]);
                }
            }
            v
        },
        eval: |e, q| one(ids::delta_square_reduction_residual(e, q[0], p(q, 1))),
    });
    t.push(IdentityDef {
        name: "delta_square_value",
        suite: Suite::Applications,
        needs_f1: true,
        enumerate: |_, _| vec![vec![]],
        eval: |e, _| one(ids::delta_square_value_residual(e)),
    });
    t.push(IdentityDef {
        name: "semisimplicity_symmetric",
        suite: Suite::Applications,
        needs_f1: false,
        enumerate: |_, _| vec![vec![]],
        eval: |e, _| {
            // Symmetry of A is universal; the invertibility verdict is
            // model-dependent and reported separately.
            let (a, _invertible) = getzler::semisimplicity_matrix(e);
            let shape = e.model.shape.clone();
            let mut comps = Vec::new();
            for i in 0..e.n() {
                for j in 0..i {
                    comps.push(TruncatedSeries::constant(
                        shape.clone(),
                        a[i][j].clone() - a[j][i].clone(),
                    ));
                }
            }
            comps
        },
    });

    // -- appendix ------------------------------------------------------------
    macro_rules! appendix_simple {
        ($name:literal, $f:path, $kmin:literal) => {
            t.push(IdentityDef {
                name: $name,
                suite: Suite::Appendix,
                needs_f1: false,
                enumerate: |m, o| {
                    let mut v = Vec::new();
                    for k in $kmin..=o.k_max {
                        for abm in basis_tuples(m, 3) {
                            v.push([vec![k], abm].concat());
                        }
                    }
                    v
                },
                eval: |e, q| one($f(e, q[0], p(q, 1), p(q, 2), p(q, 3))),
            });
        };
    }
    macro_rules! appendix_with_i {
        ($name:literal, $f:path) => {
            t.push(IdentityDef {
                name: $name,
                suite: Suite::Appendix,
                needs_f1: false,
                enumerate: |m, o| {
                    let mut v = Vec::new();
                    for k in 1..=o.k_max {
                        for i in 1..=k {
                            for abm in basis_tuples(m, 3) {
                                v.push([vec![k, i], abm].concat());
                            }
                        }
                    }
                    v
                },
                eval: |e, q| one($f(e, q[0], q[1], p(q, 2), p(q, 3), p(q, 4))),
            });
        };
    }
    appendix_simple!("appendix_a1", appendix::a01, 0);
    appendix_simple!("appendix_a2", appendix::a02, 0);
    appendix_simple!("appendix_a3", appendix::a03, 0);
    appendix_simple!("appendix_a4", appendix::a04, 0);
    appendix_with_i!("appendix_a5", appendix::a05);
    appendix_with_i!("appendix_a6", appendix::a06);
    appendix_with_i!("appendix_a7", appendix::a07);
    appendix_with_i!("appendix_a8", appendix::a08);
    appendix_simple!("appendix_a9", appendix::a09, 1);
    appendix_simple!("appendix_a10", appendix::a10, 0);
    appendix_simple!("appendix_a11", appendix::a11, 0);
    appendix_simple!("appendix_a12", appendix::a12, 0);
    appendix_simple!("appendix_a13", appendix::a13, 1);
    appendix_simple!("appendix_s1", appendix::s01, 0);
    appendix_with_i!("appendix_s2", appendix::s02);

    t
}

fn triple(q: &[i64]) -> [FE; 3] {
    [
        basis(q[1] as usize),
        basis(q[2] as usize),
        basis(q[3] as usize),
    ]
}

fn k_with_triples(m: &FrobeniusModel, k_max: i64) -> Vec<Vec<i64>> {
    let mut v = Vec::new();
    for k in 0..=k_max {
        for abm in basis_tuples(m, 3) {
            v.push([vec![k], abm].concat());
        }
    }
    v
}

fn kk_with_pairs(m: &FrobeniusModel, k_max: i64) -> Vec<Vec<i64>> {
    let mut v = Vec::new();
    for k1 in 0..=k_max {
        for k2 in 0..=k_max {
            for ab in basis_tuples(m, 2) {
                v.push([vec![k1, k2], ab].concat());
            }
        }
    }
    v
}

fn kkk_with_alpha(m: &FrobeniusModel, k_max: i64) -> Vec<Vec<i64>> {
    let mut v = Vec::new();
    for k1 in 0..=k_max {
        for k2 in 0..=k_max {
            for k3 in 0..=k_max {
                for a in 0..m.n as i64 {
                    v.push(vec![k1, k2, k3, a]);
                }
            }
        }
    }
    v
}

/// A quantum power base that is not the Euler field: the divisor direction
/// plus the unit, exercising the arbitrary-field power reductions.
fn mixed_field(e: &Engine) -> FE {
    // Use the second basis direction; for one-dimensional models fall back
    // to the unit.
    if e.n() > 1 {
        basis(1)
    } else {
        basis(0)
    }
}

/// Run one suite against a model. When genus-1 identities are selected and
/// the model carries no F1, the potential is reconstructed first (gap
/// criterion) unless `autosolve` is disabled.
pub fn run_suite(model: &FrobeniusModel, opts: &RunOptions) -> SuiteReport {
    let mut working = model.clone();
    let selected: Vec<&IdentityDef> = registry()
        .iter()
        .filter(|d| opts.suite.includes(d.suite))
        .collect();
    let needs_f1 = selected.iter().any(|d| d.needs_f1);
    let mut notes: Vec<ResidualRecord> = Vec::new();
    if needs_f1 && working.f1.is_none() && opts.autosolve {
        match solver::solve_f1(&working, solver::Method::L1) {
            Ok(report) => match report.f1 {
                Some(f1) => working.f1 = Some(f1),
                None => notes.push(ResidualRecord::failed(
                    "autosolve_f1",
                    vec![],
                    format!(
                        "genus-1 potential underdetermined (free slots: {})",
                        report.unconstrained.join(", ")
                    ),
                )),
            },
            Err(err) => notes.push(ResidualRecord::failed(
                "autosolve_f1",
                vec![],
                err.to_string(),
            )),
        }
    }
    if let Some(slot) = &opts.mutate_f1 {
        match working.mutate_f1(slot) {
            Ok(m) => working = m,
            Err(err) => notes.push(ResidualRecord::failed("mutate_f1", vec![], err.to_string())),
        }
    }

    let engine = Engine::new(working);
    let have_f1 = engine.model.f1.is_some();
    let mut instances: Vec<(&IdentityDef, Vec<i64>)> = Vec::new();
    for def in &selected {
        if def.needs_f1 && !have_f1 {
            notes.push(ResidualRecord::failed(
                def.name,
                vec![],
                "skipped: model has no genus-1 potential".into(),
            ));
            continue;
        }
        for params in (def.enumerate)(&engine.model, opts) {
            instances.push((def, params));
        }
    }

    let eval_one = |(def, params): &(&IdentityDef, Vec<i64>)| -> ResidualRecord {
        let components = (def.eval)(&engine, params);
        ResidualRecord::from_residual(
            def.name,
            params.clone(),
            &components,
            engine.model.shape.max_q,
        )
    };

    let mut records: Vec<ResidualRecord> = if let Some(jobs) = opts.jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool");
        pool.install(|| instances.par_iter().map(eval_one).collect())
    } else {
        instances.par_iter().map(eval_one).collect()
    };
    let mut all = notes;
    all.append(&mut records);
    SuiteReport {
        model: engine.model.name.clone(),
        suite: opts.suite.name().to_string(),
        records: all,
    }
}

/// The frobenius-model axiom report: the axioms suite at default caps.
pub fn validate_axioms(model: &FrobeniusModel) -> SuiteReport {
    run_suite(
        model,
        &RunOptions {
            suite: Suite::Axioms,
            ..Default::default()
        },
    )
}
