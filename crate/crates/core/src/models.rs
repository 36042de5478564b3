//! Built-in model generators and the genus-0 recursion for plane curves.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::model::{BasisEntry, FrobeniusModel, ModelDoc, ModelError, NovikovDoc, TermDoc};
use crate::rat::{self, Rat};

pub const BUILTIN_NAMES: [&str; 5] = ["point", "p1", "p2", "p1-classical", "p2-classical"];

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Number of rational plane curves of degree d through 3d−1 general points.
///
/// N₁ = 1 and
/// N_d = Σ_{d₁+d₂=d} N_{d₁} N_{d₂} [d₁²d₂² C(3d−4, 3d₁−2) − d₁³d₂ C(3d−4, 3d₁−1)].
pub fn kontsevich_n(d: i64) -> Rat {
    assert!(d >= 1, "degree must be ≥ 1");
    let mut table: Vec<Rat> = vec![rat::zero(); (d + 1) as usize];
    table[1] = rat::one();
    for m in 2..=d {
        let mut acc = rat::zero();
        for d1 in 1..m {
            let d2 = m - d1;
            let c1 = binom(3 * m - 4, 3 * d1 - 2);
            let c2 = binom(3 * m - 4, 3 * d1 - 1);
            let w = rat::int(d1 * d1 * d2 * d2) * Rat::from_integer(c1)
                - rat::int(d1 * d1 * d1 * d2) * Rat::from_integer(c2);
            acc += table[d1 as usize].clone() * table[d2 as usize].clone() * w;
        }
        table[m as usize] = acc;
    }
    table[d as usize].clone()
}

fn term(coeff: Rat, t_exp: Vec<u16>, q_exp: Vec<u16>) -> TermDoc {
    TermDoc {
        coeff: rat::render(&coeff),
        t_exp,
        q_exp,
    }
}

fn point_doc(trunc_t: i64) -> ModelDoc {
    ModelDoc {
        name: "point".into(),
        dimension: 0,
        basis: vec![BasisEntry {
            label: "1".into(),
            p: 0,
        }],
        eta: vec![vec!["1".into()]],
        c1_matrix: vec![vec!["0".into()]],
        euler_const: vec!["0".into()],
        novikov: NovikovDoc {
            count: 0,
            charges: vec![vec![]],
            max_degree: 0,
        },
        t_degree: trunc_t,
        chi: "1".into(),
        c1_cdm1: "0".into(),
        intersections_c_dm1: vec!["0".into()],
        f0: vec![term(rat::frac(1, 6), vec![3], vec![])],
        f1: Some(vec![]),
    }
}

fn p1_doc(trunc_t: i64, d_max: i64, classical: bool) -> ModelDoc {
    let mut f0 = vec![term(rat::frac(1, 2), vec![2, 1], vec![0])];
    if !classical && d_max >= 1 {
        // One simple cover; the divisor dependence e^{t2} is carried by the
        // Novikov charge on t2.
        f0.push(term(rat::one(), vec![0, 0], vec![1]));
    }
    ModelDoc {
        name: if classical { "p1-classical" } else { "p1" }.into(),
        dimension: 1,
        basis: vec![
            BasisEntry {
                label: "1".into(),
                p: 0,
            },
            BasisEntry {
                label: "w".into(),
                p: 1,
            },
        ],
        eta: vec![vec!["0".into(), "1".into()], vec!["1".into(), "0".into()]],
        c1_matrix: vec![vec!["0".into(), "2".into()], vec!["0".into(), "0".into()]],
        euler_const: vec!["0".into(), "2".into()],
        novikov: NovikovDoc {
            count: 1,
            charges: vec![vec![0], vec![1]],
            max_degree: d_max,
        },
        t_degree: trunc_t,
        chi: "2".into(),
        c1_cdm1: "2".into(),
        intersections_c_dm1: vec!["0".into(), "1".into()],
        f0,
        f1: Some(vec![term(rat::frac(-1, 24), vec![0, 1], vec![0])]),
    }
}

fn p2_doc(trunc_t: i64, d_max: i64, classical: bool) -> ModelDoc {
    let mut f0 = vec![
        term(rat::frac(1, 2), vec![2, 0, 1], vec![0]),
        term(rat::frac(1, 2), vec![1, 2, 0], vec![0]),
    ];
    let mut truncated = false;
    if !classical {
        for d in 1..=d_max {
            let texp = 3 * d - 1;
            if texp > trunc_t {
                truncated = true;
                continue;
            }
            let coeff = kontsevich_n(d) / Rat::from_integer(factorial(texp));
            f0.push(term(coeff, vec![0, 0, texp as u16], vec![d as u16]));
        }
    }
    if truncated {
        eprintln!(
            "warning: p2 generation at t_degree {trunc_t} cannot hold all degree-≤{d_max} terms \
             (needs t_degree ≥ {})",
            3 * d_max - 1
        );
    }
    // F1 is left to the solver for the quantum model; the classical variant
    // carries the constant-maps part only.
    let f1 = if classical {
        Some(vec![term(rat::frac(-1, 8), vec![0, 1, 0], vec![0])])
    } else {
        None
    };
    ModelDoc {
        name: if classical { "p2-classical" } else { "p2" }.into(),
        dimension: 2,
        basis: vec![
            BasisEntry {
                label: "1".into(),
                p: 0,
            },
            BasisEntry {
                label: "h".into(),
                p: 1,
            },
            BasisEntry {
                label: "pt".into(),
                p: 2,
            },
        ],
        eta: vec![
            vec!["0".into(), "0".into(), "1".into()],
            vec!["0".into(), "1".into(), "0".into()],
            vec!["1".into(), "0".into(), "0".into()],
        ],
        c1_matrix: vec![
            vec!["0".into(), "3".into(), "0".into()],
            vec!["0".into(), "0".into(), "3".into()],
            vec!["0".into(), "0".into(), "0".into()],
        ],
        euler_const: vec!["0".into(), "3".into(), "0".into()],
        novikov: NovikovDoc {
            count: 1,
            charges: vec![vec![0], vec![1], vec![0]],
            max_degree: d_max,
        },
        t_degree: trunc_t,
        chi: "3".into(),
        c1_cdm1: "9".into(),
        intersections_c_dm1: vec!["0".into(), "3".into(), "0".into()],
        f0,
        f1,
    }
}

pub fn builtin_doc(name: &str, trunc_t: i64, d_max: i64) -> Result<ModelDoc, ModelError> {
    if trunc_t < 3 {
        return Err(ModelError::Schema("t_degree must be ≥ 3".into()));
    }
    match name {
        "point" => Ok(point_doc(trunc_t)),
        "p1" => Ok(p1_doc(trunc_t, d_max, false)),
        "p1-classical" => Ok(p1_doc(trunc_t, 0, true)),
        "p2" => Ok(p2_doc(trunc_t, d_max, false)),
        "p2-classical" => Ok(p2_doc(trunc_t, 0, true)),
        other => Err(ModelError::Schema(format!(
            "unknown builtin model {other:?} (available: {})",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}

pub fn builtin(name: &str, trunc_t: i64, d_max: i64) -> Result<FrobeniusModel, ModelError> {
    FrobeniusModel::from_doc(&builtin_doc(name, trunc_t, d_max)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_curve_counts() {
        assert_eq!(kontsevich_n(1), rat::int(1));
        assert_eq!(kontsevich_n(2), rat::int(1));
        assert_eq!(kontsevich_n(3), rat::int(12));
        assert_eq!(kontsevich_n(4), rat::int(620));
        assert_eq!(kontsevich_n(5), rat::int(87304));
    }

    #[test]
    fn p2_potential_slots() {
        let m = builtin("p2", 8, 3).unwrap();
        // q³ slot: N₃ q³ (t3)^8 / 8!
        let mono = crate::series::Monomial::parse("t3^8*q^3", 3, 1).unwrap();
        let expect = rat::int(12) / Rat::from_integer(factorial(8));
        assert_eq!(m.f0.coeff(&mono), expect);
    }

    #[test]
    fn classical_variants_have_no_quantum_terms() {
        let m = builtin("p2-classical", 8, 3).unwrap();
        assert!(m.f0.iter().all(|(mono, _)| mono.q_degree() == 0));
        assert!(m.f1.is_some());
    }
}
