//! Residual evaluators for the universal equations: the string and WDVV
//! families, quasi-homogeneity, the observation chains, the reduction
//! lemmas, the one/two/three/four-Euler-slot expansions of the genus-one
//! relation, and the gap-function consequences.
//!
//! Every evaluator returns LHS − RHS of one displayed equation; a residual
//! passes when no coefficient inside its validity window is nonzero.
//! Vector-valued identities return one series per basis component.

use crate::calculus::{basis, delta, epow, g_of, prod, raised, s3, s4, Engine, FE};
use crate::rat::{self, Rat};
use crate::series::TruncatedSeries;

fn zero(e: &Engine) -> TruncatedSeries {
    TruncatedSeries::zero(e.model.shape.clone())
}

/// υ^j: the j-th quantum power of an arbitrary field (υ⁰ is the unit).
pub fn fe_pow(v: &FE, j: i64) -> FE {
    if j == 0 {
        epow(0)
    } else {
        prod(std::iter::repeat(v.clone()).take(j as usize))
    }
}

fn corr0(e: &Engine, slots: &[FE]) -> TruncatedSeries {
    e.correlation(0, slots).as_ref().clone()
}

fn corr1(e: &Engine, slots: &[FE]) -> TruncatedSeries {
    e.correlation(1, slots).as_ref().clone()
}

fn sc(s: &TruncatedSeries, k: i64) -> TruncatedSeries {
    s.scale(&rat::int(k))
}

// ---------------------------------------------------------------------------
// axioms
// ---------------------------------------------------------------------------

/// ⟨⟨γ₁γ_αγ_β⟩⟩₀ − η_{αβ}.
pub fn string_metric_residual(e: &Engine, a: usize, b: usize) -> TruncatedSeries {
    let c = corr0(e, &[basis(0), basis(a), basis(b)]);
    let eta = TruncatedSeries::constant(e.model.shape.clone(), e.model.eta[a][b].clone());
    c.sub(&eta)
}

/// ⟨⟨γ₁ γ_{a₁} ··· γ_{a_k}⟩⟩_g, which must vanish for k ≥ 3 at genus 0 and
/// for every k at genus ≥ 1.
pub fn string_vanishing_residual(e: &Engine, genus: u8, idx: &[usize]) -> TruncatedSeries {
    let mut slots = vec![basis(0)];
    slots.extend(idx.iter().map(|&a| basis(a)));
    match genus {
        0 => corr0(e, &slots),
        _ => corr1(e, &slots),
    }
}

/// ⟨⟨{γa∘γb}γcγd⟩⟩₀ − ⟨⟨{γa∘γc}γbγd⟩⟩₀.
pub fn wdvv_residual(e: &Engine, a: usize, b: usize, c: usize, d: usize) -> TruncatedSeries {
    let lhs = corr0(e, &[prod([basis(a), basis(b)]), basis(c), basis(d)]);
    let rhs = corr0(e, &[prod([basis(a), basis(c)]), basis(b), basis(d)]);
    lhs.sub(&rhs)
}

/// Quasi-homogeneity at genus g with k basis insertions:
/// ⟨⟨E γ_{a₁}···γ_{a_k}⟩⟩_g − Σ_i b_{a_i} ⟨⟨···⟩⟩_g
/// + (2g+k−2)(b₁+1)⟨⟨···⟩⟩_g − δ_{g,0} ∂^k(½ Σ C_{αβ}t^αt^β),
/// with the k = 0 base case using (3−d)(1−g)F_g and the genus-1 constant.
pub fn quasihom_residual(e: &Engine, genus: u8, idx: &[usize]) -> TruncatedSeries {
    let m = &e.model;
    let k = idx.len();
    let gslots: Vec<FE> = idx.iter().map(|&a| basis(a)).collect();
    let mut with_e = vec![epow(1)];
    with_e.extend(gslots.iter().cloned());
    let corr = |slots: &[FE]| match genus {
        0 => corr0(e, slots),
        _ => corr1(e, slots),
    };
    let mut res = corr(&with_e);

    if k == 0 {
        // ⟨⟨E⟩⟩_g = (3−d)(1−g)F_g + ½δ_{g,0}ΣC_{αβ}t^αt^β − (1/24)δ_{g,1}∫c₁∪c_{d−1}
        let fg = match genus {
            0 => m.f0.clone(),
            _ => m.f1.clone().expect("genus-1 check requires F1"),
        };
        let w = rat::int((3 - m.d) * (1 - genus as i64));
        res = res.sub(&fg.scale(&w));
        if genus == 0 {
            res = res.sub(&c_quadratic(e));
        } else {
            let c = rat::frac(-1, 24) * m.c1_cdm1.clone();
            res = res.sub(&TruncatedSeries::constant(m.shape.clone(), c));
        }
        return res;
    }

    let base = corr(&gslots);
    for &a in idx {
        res = res.sub(&base.scale(&m.b[a]));
    }
    let w = Rat::from(rat::int(2 * genus as i64 + k as i64 - 2)) * (m.b[0].clone() + rat::one());
    res = res.add(&base.scale(&w));
    if genus == 0 {
        let mut quad = c_quadratic(e);
        for &a in idx {
            quad = quad.deriv(a);
        }
        res = res.sub(&quad);
    }
    res
}

/// ½ Σ_{αβ} C_{αβ} t^α t^β with C_{αβ} = Σ_μ C_α^μ η_{μβ}.
fn c_quadratic(e: &Engine) -> TruncatedSeries {
    let m = &e.model;
    let c_low = crate::linalg::mat_mul(&m.c1_matrix, &m.eta);
    let mut acc = zero(e);
    let half = rat::frac(1, 2);
    for a in 0..m.n {
        for b in 0..m.n {
            if !num::Zero::is_zero(&c_low[a][b]) {
                let mono = crate::series::Monomial::var(m.n, m.shape.n_q, a)
                    .mul(&crate::series::Monomial::var(m.n, m.shape.n_q, b));
                acc = acc.add(&TruncatedSeries::monomial(
                    m.shape.clone(),
                    mono,
                    c_low[a][b].clone() * half.clone(),
                ));
            }
        }
    }
    acc
}

/// Σ_α b_α(1−b_α) − ((b₁+1)/6)χ(X) + (1/6)∫c₁∪c_{d−1}.
pub fn borisov_residual(e: &Engine) -> TruncatedSeries {
    let m = &e.model;
    let mut acc = rat::zero();
    for a in 0..m.n {
        acc += m.b[a].clone() * (rat::one() - m.b[a].clone());
    }
    acc -= (m.b[0].clone() + rat::one()) * m.chi.clone() * rat::frac(1, 6);
    acc += m.c1_cdm1.clone() * rat::frac(1, 6);
    TruncatedSeries::constant(m.shape.clone(), acc)
}

// ---------------------------------------------------------------------------
// the operator calculus (§-level universal equations)
// ---------------------------------------------------------------------------

/// ∇_U(V∘W) − (∇_U V)∘W − V∘(∇_U W) − Σ_α⟨⟨UVWγ^α⟩⟩₀γ_α.
pub fn derivative_qp_residual(e: &Engine, u: &FE, v: &FE, w: &FE) -> Vec<TruncatedSeries> {
    let fu = e.field(u);
    let fv = e.field(v);
    let fw = e.field(w);
    let vw = e.quantum_product(&fv, &fw);
    let mut res = e.nabla(&fu, &vw);
    res = res.sub(&e.quantum_product(&e.nabla(&fu, &fv), &fw));
    res = res.sub(&e.quantum_product(&fv, &e.nabla(&fu, &fw)));
    let correction: Vec<TruncatedSeries> = (0..e.n())
        .map(|alpha| corr0(e, &[u.clone(), v.clone(), w.clone(), raised(alpha)]))
        .collect();
    (0..e.n())
        .map(|alpha| res.comp(alpha).sub(&correction[alpha]))
        .collect()
}

/// Σ_α⟨⟨Eυ₁υ₂γ^α⟩⟩₀γ_α − G(υ₁)∘υ₂ − υ₁∘G(υ₂) + G(υ₁∘υ₂) + b₁υ₁∘υ₂.
pub fn fourpoint_euler_residual(e: &Engine, v1: &FE, v2: &FE) -> Vec<TruncatedSeries> {
    let f1 = e.field(v1);
    let f2 = e.field(v2);
    let p12 = e.quantum_product(&f1, &f2);
    let mut rhs = e.quantum_product(&e.g_operator(&f1), &f2);
    rhs = rhs.add(&e.quantum_product(&f1, &e.g_operator(&f2)));
    rhs = rhs.sub(&e.g_operator(&p12));
    rhs = rhs.sub(&p12.scale(&e.model.b[0]));
    (0..e.n())
        .map(|alpha| {
            corr0(e, &[epow(1), v1.clone(), v2.clone(), raised(alpha)]).sub(rhs.comp(alpha))
        })
        .collect()
}

/// ∇_υE + G(υ) − (b₁+1)υ.
pub fn nabla_euler_residual(e: &Engine, v: &FE) -> Vec<TruncatedSeries> {
    let fv = e.field(v);
    let mut res = e.nabla(&fv, &e.euler_field());
    res = res.add(&e.g_operator(&fv));
    let b1p1 = e.model.b[0].clone() + rat::one();
    res = res.sub(&fv.scale(&b1p1));
    res.comps().to_vec()
}

/// ∇_υE^k − Σ_i G(E^{i−1})∘υ∘E^{k−i} + Σ_i G(υ∘E^{k−i})∘E^{i−1} − kυ∘E^{k−1}.
pub fn nabla_euler_power_residual(e: &Engine, k: i64, v: &FE) -> Vec<TruncatedSeries> {
    let fv = e.field(v);
    let ek = e.euler_power(k);
    let mut res = e.nabla(&fv, &ek);
    for i in 1..=k {
        let t1 = e.field(&prod([g_of(epow(i - 1)), v.clone(), epow(k - i)]));
        res = res.sub(&t1);
        let t2 = e.field(&prod([g_of(prod([v.clone(), epow(k - i)])), epow(i - 1)]));
        res = res.add(&t2);
    }
    if k > 0 {
        let t3 = e.field(&prod([v.clone(), epow(k - 1)]));
        res = res.sub(&t3.scale(&rat::int(k)));
    }
    res.comps().to_vec()
}

/// [E^k, E^m] − (m−k)E^{m+k−1}.
pub fn euler_bracket_residual(e: &Engine, k: i64, m: i64) -> Vec<TruncatedSeries> {
    let ek = e.euler_power(k);
    let em = e.euler_power(m);
    let mut res = e.lie_bracket(&ek, &em);
    if m + k >= 1 {
        let target = e.euler_power(m + k - 1);
        res = res.sub(&target.scale(&rat::int(m - k)));
    }
    res.comps().to_vec()
}

/// First WDVV derivative (five slots):
/// ⟨⟨{υ1∘υ2}υ3υ4υ5⟩⟩₀ − ⟨⟨{υ1∘υ3}υ2υ4υ5⟩⟩₀ − ⟨⟨{υ2∘υ5}υ1υ3υ4⟩⟩₀
/// + ⟨⟨{υ3∘υ5}υ1υ2υ4⟩⟩₀.
pub fn wdvv_first_derivative_residual(e: &Engine, v: &[FE; 5]) -> TruncatedSeries {
    let t = |x: usize, y: usize, rest: [usize; 3]| {
        corr0(
            e,
            &[
                prod([v[x].clone(), v[y].clone()]),
                v[rest[0]].clone(),
                v[rest[1]].clone(),
                v[rest[2]].clone(),
            ],
        )
    };
    t(0, 1, [2, 3, 4])
        .sub(&t(0, 2, [1, 3, 4]))
        .sub(&t(1, 4, [0, 2, 3]))
        .add(&t(2, 4, [0, 1, 3]))
}

/// Second WDVV derivative (six slots).
pub fn wdvv_second_derivative_residual(e: &Engine, v: &[FE; 6]) -> TruncatedSeries {
    let pair = |x: usize, y: usize, rest: [usize; 4]| {
        corr0(
            e,
            &[
                prod([v[x].clone(), v[y].clone()]),
                v[rest[0]].clone(),
                v[rest[1]].clone(),
                v[rest[2]].clone(),
                v[rest[3]].clone(),
            ],
        )
    };
    let split = |left: [usize; 3], right: [usize; 3]| {
        let mut acc = zero(e);
        for rho in 0..e.n() {
            let a = corr0(
                e,
                &[
                    v[left[0]].clone(),
                    v[left[1]].clone(),
                    v[left[2]].clone(),
                    raised(rho),
                ],
            );
            let b = corr0(
                e,
                &[
                    basis(rho),
                    v[right[0]].clone(),
                    v[right[1]].clone(),
                    v[right[2]].clone(),
                ],
            );
            acc = acc.add(&a.mul(&b));
        }
        acc
    };
    let mut res = pair(0, 1, [2, 3, 4, 5]);
    res = res.sub(&split([0, 2, 5], [1, 3, 4]));
    res = res.sub(&split([0, 2, 4], [1, 3, 5]));
    res = res.sub(&pair(1, 3, [0, 2, 4, 5]));
    res = res.sub(&pair(0, 2, [1, 3, 4, 5]));
    res = res.add(&split([0, 1, 5], [2, 3, 4]));
    res = res.add(&split([0, 1, 4], [2, 3, 5]));
    res = res.add(&pair(2, 3, [0, 1, 4, 5]));
    res
}

/// Four-point reduction for quantum powers of an arbitrary field:
/// ⟨⟨υ^kγaγbγm⟩⟩₀ + Σ_{i=1}^{k−1}⟨⟨υ^{k−i}{γa∘γb∘υ^{i−1}}υγm⟩⟩₀
/// − Σ_{i=1}^{k}⟨⟨{υ^{k−i}∘γa}{γb∘υ^{i−1}}υγm⟩⟩₀.
pub fn power_reduction_4pt_residual(
    e: &Engine,
    v: &FE,
    k: i64,
    a: usize,
    b: usize,
    m: usize,
) -> TruncatedSeries {
    let mut res = corr0(e, &[fe_pow(v, k), basis(a), basis(b), basis(m)]);
    for i in 1..k {
        res = res.add(&corr0(
            e,
            &[
                fe_pow(v, k - i),
                prod([basis(a), basis(b), fe_pow(v, i - 1)]),
                v.clone(),
                basis(m),
            ],
        ));
    }
    for i in 1..=k {
        res = res.sub(&corr0(
            e,
            &[
                prod([fe_pow(v, k - i), basis(a)]),
                prod([basis(b), fe_pow(v, i - 1)]),
                v.clone(),
                basis(m),
            ],
        ));
    }
    res
}

/// Five-point reduction for quantum powers of an arbitrary field.
pub fn power_reduction_5pt_residual(
    e: &Engine,
    v: &FE,
    k: i64,
    a: usize,
    b: usize,
    m: usize,
    s: usize,
) -> TruncatedSeries {
    let mut res = corr0(e, &[fe_pow(v, k), basis(a), basis(b), basis(m), basis(s)]);
    let contracted = |left: &[FE], right: &[FE]| {
        let mut acc = zero(e);
        for rho in 0..e.n() {
            let mut ls = left.to_vec();
            ls.push(raised(rho));
            let mut rs = vec![basis(rho)];
            rs.extend_from_slice(right);
            acc = acc.add(&corr0(e, &ls).mul(&corr0(e, &rs)));
        }
        acc
    };
    for i in 1..k {
        let vi = fe_pow(v, i - 1);
        let vki = fe_pow(v, k - i);
        res = res.add(&contracted(
            &[vki.clone(), basis(s), v.clone()],
            &[basis(a), prod([basis(b), vi.clone()]), basis(m)],
        ));
        res = res.add(&corr0(
            e,
            &[
                vki.clone(),
                prod([basis(a), basis(b), vi.clone()]),
                v.clone(),
                basis(m),
                basis(s),
            ],
        ));
        res = res.add(&contracted(
            &[vki.clone(), basis(m), v.clone()],
            &[basis(a), prod([basis(b), vi.clone()]), basis(s)],
        ));
        res = res.sub(&contracted(
            &[vki.clone(), basis(a), basis(s)],
            &[prod([basis(b), vi.clone()]), v.clone(), basis(m)],
        ));
        res = res.sub(&contracted(
            &[vki.clone(), basis(a), basis(m)],
            &[prod([basis(b), vi.clone()]), v.clone(), basis(s)],
        ));
    }
    for i in 1..=k {
        res = res.sub(&corr0(
            e,
            &[
                prod([fe_pow(v, k - i), basis(a)]),
                prod([basis(b), fe_pow(v, i - 1)]),
                v.clone(),
                basis(m),
                basis(s),
            ],
        ));
    }
    res
}

/// The three-way product-shuffling chain, checked as two differences.
pub fn observation1_residuals(e: &Engine, genus: u8, v: &[FE]) -> Vec<TruncatedSeries> {
    assert!(v.len() >= 3);
    let rest = &v[3..];
    let corr = |first: FE, second: FE| {
        let mut slots = vec![first, second];
        slots.extend_from_slice(rest);
        match genus {
            0 => corr0(e, &slots),
            _ => corr1(e, &slots),
        }
    };
    let mut x1 = zero(e);
    let mut x2 = zero(e);
    let mut x3 = zero(e);
    for mu in 0..e.n() {
        x1 = x1.add(&corr(
            prod([v[0].clone(), raised(mu)]),
            prod([v[1].clone(), v[2].clone(), basis(mu)]),
        ));
        x2 = x2.add(&corr(
            prod([v[0].clone(), basis(mu)]),
            prod([v[1].clone(), v[2].clone(), raised(mu)]),
        ));
        x3 = x3.add(&corr(
            prod([v[0].clone(), v[1].clone(), raised(mu)]),
            prod([v[2].clone(), basis(mu)]),
        ));
    }
    vec![x1.sub(&x2), x1.sub(&x3)]
}

/// The four-way G-twisted product-shuffling chain, checked as three
/// differences.
pub fn observation2_residuals(e: &Engine, genus: u8, v: &[FE]) -> Vec<TruncatedSeries> {
    assert!(v.len() >= 4);
    let rest = &v[4..];
    let corr = |first: FE, second: FE| {
        let mut slots = vec![first, second];
        slots.extend_from_slice(rest);
        match genus {
            0 => corr0(e, &slots),
            _ => corr1(e, &slots),
        }
    };
    let mut y = vec![zero(e), zero(e), zero(e), zero(e)];
    for mu in 0..e.n() {
        y[0] = y[0].add(&corr(
            g_of(prod([v[0].clone(), v[1].clone(), raised(mu)])),
            prod([v[2].clone(), v[3].clone(), basis(mu)]),
        ));
        y[1] = y[1].add(&corr(
            g_of(prod([v[0].clone(), v[1].clone(), basis(mu)])),
            prod([v[2].clone(), v[3].clone(), raised(mu)]),
        ));
        y[2] = y[2].add(&corr(
            g_of(prod([v[0].clone(), v[1].clone(), v[2].clone(), raised(mu)])),
            prod([v[3].clone(), basis(mu)]),
        ));
        y[3] = y[3].add(&corr(
            g_of(prod([v[0].clone(), raised(mu)])),
            prod([v[1].clone(), v[2].clone(), v[3].clone(), basis(mu)]),
        ));
    }
    vec![y[0].sub(&y[1]), y[0].sub(&y[2]), y[0].sub(&y[3])]
}

// ---------------------------------------------------------------------------
// reduction lemmas
// ---------------------------------------------------------------------------

/// Euler-power 4-point reduction to 3-point functions.
pub fn reduction_4pt_residual(
    e: &Engine,
    m: i64,
    a: usize,
    b: usize,
    mu: usize,
) -> TruncatedSeries {
    let mut res = corr0(e, &[epow(m), basis(a), basis(b), basis(mu)]);
    for i in 1..=m {
        res = res.add(&corr0(
            e,
            &[
                g_of(epow(m - i)),
                prod([epow(i - 1), basis(a), basis(b)]),
                basis(mu),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                g_of(prod([epow(i - 1), basis(a), basis(b)])),
                epow(m - i),
                basis(mu),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                g_of(prod([epow(m - i), basis(a)])),
                prod([epow(i - 1), basis(b)]),
                basis(mu),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                g_of(prod([epow(i - 1), basis(b)])),
                prod([epow(m - i), basis(a)]),
                basis(mu),
            ],
        ));
    }
    res
}

/// Vector form of the Euler-power 4-point reduction.
pub fn reduction_4pt_vector_residual(
    e: &Engine,
    m: i64,
    a: usize,
    b: usize,
) -> Vec<TruncatedSeries> {
    let mut rhs = crate::calculus::VectorField::zero(&e.model);
    for i in 1..=m {
        rhs = rhs.sub(&e.field(&prod([g_of(epow(m - i)), epow(i - 1), basis(a), basis(b)])));
        rhs = rhs.sub(&e.field(&prod([
            g_of(prod([epow(i - 1), basis(a), basis(b)])),
            epow(m - i),
        ])));
        rhs = rhs.add(&e.field(&prod([
            g_of(prod([epow(m - i), basis(a)])),
            epow(i - 1),
            basis(b),
        ])));
        rhs = rhs.add(&e.field(&prod([
            g_of(prod([epow(i - 1), basis(b)])),
            epow(m - i),
            basis(a),
        ])));
    }
    (0..e.n())
        .map(|nu| corr0(e, &[epow(m), basis(a), basis(b), raised(nu)]).sub(rhs.comp(nu)))
        .collect()
}

/// ⟨⟨G(υ1∘υ2)υ3υ4⟩⟩₀ − ⟨⟨υ1υ2{υ3∘υ4}⟩⟩₀ + ⟨⟨υ1υ2G(υ3∘υ4)⟩⟩₀.
pub fn simplification_pairing_residual(e: &Engine, v: &[FE; 4]) -> TruncatedSeries {
    corr0(
        e,
        &[
            g_of(prod([v[0].clone(), v[1].clone()])),
            v[2].clone(),
            v[3].clone(),
        ],
    )
    .sub(&corr0(
        e,
        &[
            v[0].clone(),
            v[1].clone(),
            prod([v[2].clone(), v[3].clone()]),
        ],
    ))
    .add(&corr0(
        e,
        &[
            v[0].clone(),
            v[1].clone(),
            g_of(prod([v[2].clone(), v[3].clone()])),
        ],
    ))
}

/// Σ_μ G(υ∘γ^μ)∘γ_μ − ½Δ∘υ and Σ_μ G(υ∘γ_μ)∘γ^μ − ½Δ∘υ (vector residuals).
pub fn simplification_half_delta_residuals(e: &Engine, v: &FE) -> Vec<TruncatedSeries> {
    let mut up = crate::calculus::VectorField::zero(&e.model);
    let mut down = crate::calculus::VectorField::zero(&e.model);
    for mu in 0..e.n() {
        up = up.add(&e.field(&prod([g_of(prod([v.clone(), raised(mu)])), basis(mu)])));
        down = down.add(&e.field(&prod([g_of(prod([v.clone(), basis(mu)])), raised(mu)])));
    }
    let half_delta_v = e.field(&prod([delta(), v.clone()])).scale(&rat::frac(1, 2));
    let mut out: Vec<TruncatedSeries> = (0..e.n())
        .map(|alpha| up.comp(alpha).sub(half_delta_v.comp(alpha)))
        .collect();
    out.extend((0..e.n()).map(|alpha| down.comp(alpha).sub(half_delta_v.comp(alpha))));
    out
}

/// Σ_μ⟨⟨G(υ1∘υ2∘υ3∘γ^μ)G(γ_μ)υ4⟩⟩₀ − Σ_μ⟨⟨{G(υ4∘γ^μ)∘G(γ_μ)∘υ1}υ2υ3⟩⟩₀.
pub fn simplification_g_pair_residual(e: &Engine, v: &[FE; 4]) -> TruncatedSeries {
    let mut res = zero(e);
    for mu in 0..e.n() {
        res = res.add(&corr0(
            e,
            &[
                g_of(prod([v[0].clone(), v[1].clone(), v[2].clone(), raised(mu)])),
                g_of(basis(mu)),
                v[3].clone(),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([
                    g_of(prod([v[3].clone(), raised(mu)])),
                    g_of(basis(mu)),
                    v[0].clone(),
                ]),
                v[1].clone(),
                v[2].clone(),
            ],
        ));
    }
    res
}

/// Σ_μ⟨⟨{G(υ1∘γ^μ)∘G(υ2∘γ_μ)}υ3υ4⟩⟩₀ − Σ_μ⟨⟨{G(υ1∘υ2∘γ^μ)∘G(γ_μ)}υ3υ4⟩⟩₀.
pub fn simplification_g_outer_residual(e: &Engine, v: &[FE; 4]) -> TruncatedSeries {
    let mut res = zero(e);
    for mu in 0..e.n() {
        res = res.add(&corr0(
            e,
            &[
                prod([
                    g_of(prod([v[0].clone(), raised(mu)])),
                    g_of(prod([v[1].clone(), basis(mu)])),
                ]),
                v[2].clone(),
                v[3].clone(),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([
                    g_of(prod([v[0].clone(), v[1].clone(), raised(mu)])),
                    g_of(basis(mu)),
                ]),
                v[2].clone(),
                v[3].clone(),
            ],
        ));
    }
    res
}

// ---------------------------------------------------------------------------
// one Euler slot
// ---------------------------------------------------------------------------

/// All terms of the genus-1 part with one Euler-power slot except the
/// leading −24{υ1∘υ2∘υ3}⟨⟨E^k⟩⟩₁.
pub fn g1_one_euler_tail(e: &Engine, k: i64, v: &[FE; 3]) -> TruncatedSeries {
    let mut acc = zero(e);
    if k > 0 {
        acc = acc.add(&sc(
            &corr1(
                e,
                &[prod([
                    epow(k - 1),
                    v[0].clone(),
                    v[1].clone(),
                    v[2].clone(),
                ])],
            ),
            24 * k,
        ));
    }
    for g in s3() {
        let (x, y, z) = (v[g[0]].clone(), v[g[1]].clone(), v[g[2]].clone());
        acc = acc.add(&sc(
            &corr1(
                e,
                &[prod([epow(k), x.clone()]), prod([y.clone(), z.clone()])],
            ),
            12,
        ));
        acc = acc.sub(&sc(
            &corr1(e, &[prod([epow(k), x.clone(), y.clone()]), z.clone()]),
            12,
        ));
        for i in 1..=k {
            acc = acc.add(&sc(
                &corr1(
                    e,
                    &[prod([
                        g_of(prod([epow(i - 1), x.clone()])),
                        epow(k - i),
                        y.clone(),
                        z.clone(),
                    ])],
                ),
                12,
            ));
            acc = acc.sub(&sc(
                &corr1(
                    e,
                    &[prod([
                        g_of(prod([epow(i - 1), x.clone(), y.clone()])),
                        epow(k - i),
                        z.clone(),
                    ])],
                ),
                12,
            ));
        }
    }
    acc
}

/// Genus-1 part with one Euler-power slot, closed form.
pub fn g1_one_euler_closed(e: &Engine, k: i64, v: &[FE; 3]) -> TruncatedSeries {
    let lead = e.apply(
        &prod([v[0].clone(), v[1].clone(), v[2].clone()]),
        &corr1(e, &[epow(k)]),
    );
    g1_one_euler_tail(e, k, v).sub(&sc(&lead, 24))
}

/// All terms of the genus-0 part with one Euler-power slot except the
/// leading +24{υ1∘υ2∘υ3}Φ_k.
pub fn g0_one_euler_tail(e: &Engine, k: i64, v: &[FE; 3]) -> TruncatedSeries {
    let n = e.n();
    let mut acc = zero(e);
    let triple = prod([v[0].clone(), v[1].clone(), v[2].clone()]);
    if k > 0 {
        acc = acc.sub(&sc(
            &corr0(
                e,
                &[
                    prod([delta(), epow(k - 1)]),
                    v[0].clone(),
                    v[1].clone(),
                    v[2].clone(),
                ],
            ),
            4 * k,
        ));
    }
    for g in s3() {
        let (x, y, z) = (v[g[0]].clone(), v[g[1]].clone(), v[g[2]].clone());
        for i in 1..=k {
            for mu in 0..n {
                acc = acc.add(
                    &corr0(
                        e,
                        &[
                            g_of(prod([epow(k - i), x.clone()])),
                            basis(mu),
                            raised(mu),
                            prod([epow(i - 1), y.clone(), z.clone()]),
                        ],
                    )
                    .scale(&rat::frac(1, 2)),
                );
                acc = acc.sub(
                    &corr0(
                        e,
                        &[
                            g_of(prod([epow(k - i), x.clone(), y.clone()])),
                            basis(mu),
                            raised(mu),
                            prod([epow(i - 1), z.clone()]),
                        ],
                    )
                    .scale(&rat::frac(1, 2)),
                );
            }
        }
        if k > 0 {
            for mu in 0..n {
                acc = acc.add(&sc(
                    &corr0(
                        e,
                        &[
                            g_of(prod([epow(k - 1), x.clone(), raised(mu)])),
                            y.clone(),
                            z.clone(),
                            basis(mu),
                        ],
                    ),
                    2 * k,
                ));
                acc = acc.sub(
                    &corr0(
                        e,
                        &[
                            prod([epow(k - 1), x.clone()]),
                            basis(mu),
                            raised(mu),
                            prod([y.clone(), z.clone()]),
                        ],
                    )
                    .scale(&(Rat::from(rat::int(k)) * rat::frac(1, 2))),
                );
            }
        }
        for i in 1..k {
            for mu in 0..n {
                acc = acc.add(&sc(
                    &corr0(
                        e,
                        &[
                            prod([
                                g_of(prod([epow(k - i - 1), x.clone(), raised(mu)])),
                                g_of(basis(mu)),
                            ]),
                            epow(i - 1),
                            prod([y.clone(), z.clone()]),
                        ],
                    ),
                    2 * (k - 3 * i),
                ));
            }
            acc = acc.sub(
                &corr0(
                    e,
                    &[
                        prod([delta(), epow(i - 1)]),
                        g_of(prod([epow(k - i - 1), x.clone(), y.clone()])),
                        z.clone(),
                    ],
                )
                .scale(&(Rat::from(rat::int(i)) * rat::frac(1, 2))),
            );
            acc = acc.sub(
                &corr0(
                    e,
                    &[
                        prod([delta(), epow(i - 1)]),
                        g_of(prod([epow(k - i - 1), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                )
                .scale(&(Rat::from(rat::int(k - i)) * rat::frac(1, 2))),
            );
        }
    }
    for i in 1..k {
        acc = acc.sub(&sc(
            &corr0(
                e,
                &[
                    g_of(prod([delta(), epow(k - i - 1)])),
                    epow(i - 1),
                    triple.clone(),
                ],
            ),
            4 * k,
        ));
    }
    if k > 1 {
        acc = acc.add(&sc(
            &corr0(e, &[delta(), epow(k - 2), triple.clone()]),
            5 * k * (k - 1),
        ));
    }
    acc
}

/// Genus-0 part with one Euler-power slot, closed form.
pub fn g0_one_euler_closed(e: &Engine, k: i64, v: &[FE; 3]) -> TruncatedSeries {
    let lead = e.apply(&prod([v[0].clone(), v[1].clone(), v[2].clone()]), &e.phi(k));
    g0_one_euler_tail(e, k, v).add(&sc(&lead, 24))
}

/// Theorem form: 24{υ1∘υ2∘υ3}(⟨⟨E^k⟩⟩₁ − Φ_k) − (genus-1 tail + genus-0 tail).
pub fn getzler_one_euler_residual(e: &Engine, k: i64, v: &[FE; 3]) -> TruncatedSeries {
    let lead = e.apply(&prod([v[0].clone(), v[1].clone(), v[2].clone()]), &e.gap(k));
    sc(&lead, 24)
        .sub(&g1_one_euler_tail(e, k, v))
        .sub(&g0_one_euler_tail(e, k, v))
}

/// The alternative closed form of the genus-1 part with one Euler slot.
pub fn g1_one_euler_alt_closed(e: &Engine, k: i64, v: &[FE; 3]) -> TruncatedSeries {
    let n = e.n();
    let mut acc = sc(
        &e.apply(
            &prod([v[0].clone(), v[1].clone(), v[2].clone()]),
            &corr1(e, &[epow(k)]),
        ),
        -24,
    );
    if k > 0 {
        acc = acc.add(&sc(
            &corr1(
                e,
                &[prod([
                    epow(k - 1),
                    v[0].clone(),
                    v[1].clone(),
                    v[2].clone(),
                ])],
            ),
            24 * k,
        ));
    }
    for g in s3() {
        let (x, y, z) = (v[g[0]].clone(), v[g[1]].clone(), v[g[2]].clone());
        acc = acc.add(&sc(
            &e.apply(
                &prod([x.clone(), y.clone()]),
                &corr1(e, &[prod([epow(k), z.clone()])]),
            ),
            12,
        ));
        acc = acc.sub(&sc(
            &e.apply(&x, &corr1(e, &[prod([epow(k), y.clone(), z.clone()])])),
            12,
        ));
    }
    for mu in 0..n {
        let left = corr0(e, &[v[0].clone(), v[1].clone(), v[2].clone(), raised(mu)]);
        let right = corr1(e, &[prod([basis(mu), epow(k)])]);
        acc = acc.add(&sc(&left.mul(&right), 72));
    }
    acc
}

// ---------------------------------------------------------------------------
// two Euler slots
// ---------------------------------------------------------------------------

/// Genus-1 tail with two Euler-power slots (everything except the two
/// leading gap-type derivative terms).
pub fn g1_two_euler_tail(e: &Engine, k1: i64, k2: i64, va: &FE, vb: &FE) -> TruncatedSeries {
    let kk = k1 + k2;
    let mut acc = zero(e);
    // +24 Σ_{h∈S₂} ⟨⟨{E^{k_{h1}}∘υa}{E^{k_{h2}}∘υb}⟩⟩₁
    for (ha, hb) in [(k1, k2), (k2, k1)] {
        acc = acc.add(&sc(
            &corr1(
                e,
                &[prod([epow(ha), va.clone()]), prod([epow(hb), vb.clone()])],
            ),
            24,
        ));
    }
    for (x, y) in [(va.clone(), vb.clone()), (vb.clone(), va.clone())] {
        // −24 ⟨⟨{E^{K̂}∘υ_{g1}} υ_{g2}⟩⟩₁
        acc = acc.sub(&sc(
            &corr1(e, &[prod([epow(kk), x.clone()]), y.clone()]),
            24,
        ));
        // +24 Σ_m Σ_{i=1}^{k_m} ⟨⟨G(E^{i−1}∘υ_{g1})∘E^{K̂−i}∘υ_{g2}⟩⟩₁
        for km in [k1, k2] {
            for i in 1..=km {
                acc = acc.add(&sc(
                    &corr1(
                        e,
                        &[prod([
                            g_of(prod([epow(i - 1), x.clone()])),
                            epow(kk - i),
                            y.clone(),
                        ])],
                    ),
                    24,
                ));
            }
        }
        // −24 Σ_{i=1}^{K̂} ⟨⟨G(E^{i−1}∘υ_{g1})∘E^{K̂−i}∘υ_{g2}⟩⟩₁
        for i in 1..=kk {
            acc = acc.sub(&sc(
                &corr1(
                    e,
                    &[prod([
                        g_of(prod([epow(i - 1), x.clone()])),
                        epow(kk - i),
                        y.clone(),
                    ])],
                ),
                24,
            ));
        }
    }
    acc
}

/// Genus-1 part with two Euler-power slots, closed form.
pub fn g1_two_euler_closed(e: &Engine, k1: i64, k2: i64, va: &FE, vb: &FE) -> TruncatedSeries {
    let kk = k1 + k2;
    let mut acc = g1_two_euler_tail(e, k1, k2, va, vb);
    acc = acc.add(&sc(
        &e.apply(&prod([va.clone(), vb.clone()]), &corr1(e, &[epow(kk)])),
        24,
    ));
    for km in [k1, k2] {
        acc = acc.sub(&sc(
            &e.apply(
                &prod([epow(kk - km), va.clone(), vb.clone()]),
                &corr1(e, &[epow(km)]),
            ),
            24,
        ));
    }
    acc
}

/// The equivalent rearrangement of the two-Euler genus-1 part.
pub fn g1_two_euler_alt_closed(e: &Engine, k1: i64, k2: i64, va: &FE, vb: &FE) -> TruncatedSeries {
    let kk = k1 + k2;
    let mut acc = sc(
        &e.apply(&prod([va.clone(), vb.clone()]), &corr1(e, &[epow(kk)])),
        24,
    );
    for km in [k1, k2] {
        acc = acc.sub(&sc(
            &e.apply(
                &prod([epow(kk - km), va.clone(), vb.clone()]),
                &corr1(e, &[epow(km)]),
            ),
            24,
        ));
    }
    for (x, y) in [(va.clone(), vb.clone()), (vb.clone(), va.clone())] {
        for (ha, hb) in [(k1, k2), (k2, k1)] {
            acc = acc.add(&sc(
                &e.apply(
                    &prod([epow(ha), x.clone()]),
                    &corr1(e, &[prod([epow(hb), y.clone()])]),
                ),
                12,
            ));
        }
        acc = acc.sub(&sc(
            &e.apply(&x, &corr1(e, &[prod([epow(kk), y.clone()])])),
            24,
        ));
        for km in [k1, k2] {
            for i in 1..=km {
                acc = acc.add(&sc(
                    &corr1(
                        e,
                        &[prod([
                            g_of(prod([epow(i - 1), x.clone()])),
                            epow(kk - i),
                            y.clone(),
                        ])],
                    ),
                    12,
                ));
            }
        }
    }
    for km in [k1, k2] {
        for i in 1..=km {
            acc = acc.sub(&sc(
                &corr1(
                    e,
                    &[prod([
                        g_of(prod([epow(i - 1), va.clone(), vb.clone()])),
                        epow(kk - i),
                    ])],
                ),
                24,
            ));
        }
    }
    if kk > 0 {
        acc = acc.add(&sc(
            &corr1(e, &[prod([epow(kk - 1), va.clone(), vb.clone()])]),
            24 * kk,
        ));
    }
    acc
}

/// Genus-0 tail with two Euler-power slots.
pub fn g0_two_euler_tail(e: &Engine, k1: i64, k2: i64, va: &FE, vb: &FE) -> TruncatedSeries {
    let n = e.n();
    let kk = k1 + k2;
    let mut acc = zero(e);
    for (x, y) in [(va.clone(), vb.clone()), (vb.clone(), va.clone())] {
        // −Σ_{i=1}^{K̂} ⟨⟨G(E^{i−1}∘υ_{g1}) γ^μ γ_μ {E^{K̂−i}∘υ_{g2}}⟩⟩₀
        for i in 1..=kk {
            for mu in 0..n {
                acc = acc.sub(&corr0(
                    e,
                    &[
                        g_of(prod([epow(i - 1), x.clone()])),
                        raised(mu),
                        basis(mu),
                        prod([epow(kk - i), y.clone()]),
                    ],
                ));
            }
        }
        // +Σ_m Σ_{i=1}^{k_m} ⟨⟨same⟩⟩₀
        for km in [k1, k2] {
            for i in 1..=km {
                for mu in 0..n {
                    acc = acc.add(&corr0(
                        e,
                        &[
                            g_of(prod([epow(i - 1), x.clone()])),
                            raised(mu),
                            basis(mu),
                            prod([epow(kk - i), y.clone()]),
                        ],
                    ));
                }
            }
        }
        for i in 1..=k1 {
            for j in 1..=k2 {
                // −⟨⟨{Δ∘E^{i+j−2}} G(E^{K̂−i−j}∘υ_{g1}) υ_{g2}⟩⟩₀
                acc = acc.sub(&corr0(
                    e,
                    &[
                        prod([delta(), epow(i + j - 2)]),
                        g_of(prod([epow(kk - i - j), x.clone()])),
                        y.clone(),
                    ],
                ));
                // +6 Σ_μ ⟨⟨{G(E^{i+j−2}∘υ_{g1}∘γ^μ)∘G(γ_μ)} E^{K̂−i−j} υ_{g2}⟩⟩₀
                for mu in 0..n {
                    acc = acc.add(&sc(
                        &corr0(
                            e,
                            &[
                                prod([
                                    g_of(prod([epow(i + j - 2), x.clone(), raised(mu)])),
                                    g_of(basis(mu)),
                                ]),
                                epow(kk - i - j),
                                y.clone(),
                            ],
                        ),
                        6,
                    ));
                }
            }
        }
    }
    if k1 > 0 && k2 > 0 {
        acc = acc.sub(&sc(
            &corr0(e, &[delta(), epow(kk - 2), prod([va.clone(), vb.clone()])]),
            2 * k1 * k2,
        ));
    }
    acc
}

/// Genus-0 part with two Euler-power slots, closed form.
pub fn g0_two_euler_closed(e: &Engine, k1: i64, k2: i64, va: &FE, vb: &FE) -> TruncatedSeries {
    let kk = k1 + k2;
    let mut acc = g0_two_euler_tail(e, k1, k2, va, vb);
    acc = acc.sub(&sc(
        &e.apply(&prod([va.clone(), vb.clone()]), &e.phi(kk)),
        24,
    ));
    for km in [k1, k2] {
        acc = acc.add(&sc(
            &e.apply(&prod([epow(kk - km), va.clone(), vb.clone()]), &e.phi(km)),
            24,
        ));
    }
    acc
}

/// Theorem form with two Euler-power slots.
pub fn getzler_two_euler_residual(
    e: &Engine,
    k1: i64,
    k2: i64,
    va: &FE,
    vb: &FE,
) -> TruncatedSeries {
    let kk = k1 + k2;
    let mut lhs = sc(&e.apply(&prod([va.clone(), vb.clone()]), &e.gap(kk)), 24);
    for km in [k1, k2] {
        lhs = lhs.sub(&sc(
            &e.apply(&prod([epow(kk - km), va.clone(), vb.clone()]), &e.gap(km)),
            24,
        ));
    }
    lhs.add(&g1_two_euler_tail(e, k1, k2, va, vb))
        .add(&g0_two_euler_tail(e, k1, k2, va, vb))
}

// ---------------------------------------------------------------------------
// three and four Euler slots
// ---------------------------------------------------------------------------

/// Genus-1 part with three Euler-power slots, closed form.
pub fn g1_three_euler_closed(e: &Engine, ks: &[i64; 3], va: &FE) -> TruncatedSeries {
    let kt: i64 = ks.iter().sum();
    let mut acc = sc(&e.apply(va, &corr1(e, &[epow(kt)])), -24);
    for &ki in ks {
        acc = acc.add(&sc(
            &e.apply(&prod([epow(ki), va.clone()]), &corr1(e, &[epow(kt - ki)])),
            24,
        ));
        acc = acc.sub(&sc(
            &e.apply(&prod([epow(kt - ki), va.clone()]), &corr1(e, &[epow(ki)])),
            24,
        ));
    }
    acc
}

/// Genus-0 part with three Euler-power slots, closed form.
pub fn g0_three_euler_closed(e: &Engine, ks: &[i64; 3], va: &FE) -> TruncatedSeries {
    let kt: i64 = ks.iter().sum();
    let mut acc = sc(&e.apply(va, &e.phi(kt)), 24);
    for &ki in ks {
        acc = acc.sub(&sc(
            &e.apply(&prod([epow(ki), va.clone()]), &e.phi(kt - ki)),
            24,
        ));
        acc = acc.add(&sc(
            &e.apply(&prod([epow(kt - ki), va.clone()]), &e.phi(ki)),
            24,
        ));
    }
    acc
}

/// Theorem form with three Euler-power slots.
pub fn getzler_three_euler_residual(e: &Engine, ks: &[i64; 3], va: &FE) -> TruncatedSeries {
    let kt: i64 = ks.iter().sum();
    let mut res = e.apply(va, &e.gap(kt));
    for &ki in ks {
        res = res.sub(&e.apply(&prod([epow(ki), va.clone()]), &e.gap(kt - ki)));
        res = res.add(&e.apply(&prod([epow(kt - ki), va.clone()]), &e.gap(ki)));
    }
    res
}

/// Genus-1 part with four Euler-power slots, closed form.
pub fn g1_four_euler_closed(e: &Engine, ks: &[i64; 4]) -> TruncatedSeries {
    let kt: i64 = ks.iter().sum();
    let mut acc = zero(e);
    if kt > 0 {
        acc = acc.add(&sc(&corr1(e, &[epow(kt - 1)]), 36 * kt));
    }
    for &ki in ks {
        acc = acc.sub(&sc(&e.apply(&epow(ki), &corr1(e, &[epow(kt - ki)])), 24));
    }
    for h in s4() {
        let a = ks[h[0]] + ks[h[1]];
        let b = ks[h[2]] + ks[h[3]];
        acc = acc.add(&sc(&e.apply(&epow(a), &corr1(e, &[epow(b)])), 3));
    }
    acc
}

/// Genus-0 part with four Euler-power slots, closed form.
pub fn g0_four_euler_closed(e: &Engine, ks: &[i64; 4]) -> TruncatedSeries {
    let kt: i64 = ks.iter().sum();
    let mut acc = zero(e);
    if kt > 0 {
        acc = acc.sub(&e.phi(kt - 1).scale(&rat::int(36 * kt)));
    }
    for &ki in ks {
        acc = acc.add(&sc(&e.apply(&epow(ki), &e.phi(kt - ki)), 24));
    }
    for h in s4() {
        let a = ks[h[0]] + ks[h[1]];
        let b = ks[h[2]] + ks[h[3]];
        acc = acc.sub(&sc(&e.apply(&epow(a), &e.phi(b)), 3));
    }
    acc
}

/// Theorem form with four Euler-power slots.
pub fn getzler_four_euler_residual(e: &Engine, ks: &[i64; 4]) -> TruncatedSeries {
    let kt: i64 = ks.iter().sum();
    let mut res = zero(e);
    if kt > 0 {
        res = res.add(&e.gap(kt - 1).scale(&rat::int(12 * kt)));
    }
    for &ki in ks {
        res = res.sub(&sc(&e.apply(&epow(ki), &e.gap(kt - ki)), 8));
    }
    for h in s4() {
        let a = ks[h[0]] + ks[h[1]];
        let b = ks[h[2]] + ks[h[3]];
        res = res.add(&e.apply(&epow(a), &e.gap(b)));
    }
    res
}

// ---------------------------------------------------------------------------
// gap-function consequences
// ---------------------------------------------------------------------------

/// γ_α(gap_k) − ½k(k−1){E^{k−2}∘γ_α}(gap₂).
pub fn gap_derivative_reduction_residual(e: &Engine, k: i64, a: usize) -> TruncatedSeries {
    let mut res = e.apply(&basis(a), &e.gap(k));
    if k >= 2 {
        let w = Rat::from(rat::int(k * (k - 1))) * rat::frac(1, 2);
        res = res.sub(&e.apply(&prod([epow(k - 2), basis(a)]), &e.gap(2)).scale(&w));
    }
    res
}

/// ((m−k)/(m+k))γ_α(gap_{m+k}) − {E^k∘γ_α}(gap_m) + {E^m∘γ_α}(gap_k).
pub fn gap_antisymmetric_residual(e: &Engine, k: i64, m: i64, a: usize) -> TruncatedSeries {
    assert!(k + m > 0);
    let w = rat::frac(m - k, m + k);
    e.apply(&basis(a), &e.gap(m + k))
        .scale(&w)
        .sub(&e.apply(&prod([epow(k), basis(a)]), &e.gap(m)))
        .add(&e.apply(&prod([epow(m), basis(a)]), &e.gap(k)))
}

/// {E^k∘γ_α}(gap_m)/m − ((m−1)/((m+k)(m+k−1)))γ_α(gap_{m+k}).
pub fn gap_normalized_residual(e: &Engine, k: i64, m: i64, a: usize) -> TruncatedSeries {
    assert!(m > 0 && m + k >= 2);
    let lhs = e
        .apply(&prod([epow(k), basis(a)]), &e.gap(m))
        .scale(&rat::frac(1, m));
    let w = rat::frac(m - 1, (m + k) * (m + k - 1));
    lhs.sub(&e.apply(&basis(a), &e.gap(m + k)).scale(&w))
}

/// {Δ∘γ_α}(gap_{k₁+k₂}) − {Δ∘E^{k₁}∘γ_α}(gap_{k₂}) − {Δ∘E^{k₂}∘γ_α}(gap_{k₁}).
pub fn gap_delta_splitting_residual(e: &Engine, k1: i64, k2: i64, a: usize) -> TruncatedSeries {
    e.apply(&prod([delta(), basis(a)]), &e.gap(k1 + k2))
        .sub(&e.apply(&prod([delta(), epow(k1), basis(a)]), &e.gap(k2)))
        .sub(&e.apply(&prod([delta(), epow(k2), basis(a)]), &e.gap(k1)))
}

/// (Δ∘γ_α)(gap_k).
pub fn gap_delta_annihilation_residual(e: &Engine, k: i64, a: usize) -> TruncatedSeries {
    e.apply(&prod([delta(), basis(a)]), &e.gap(k))
}

/// The Δ²-contracted genus-1 reduction, for k ≥ 1.
pub fn delta_square_reduction_residual(e: &Engine, k: i64, mu: usize) -> TruncatedSeries {
    assert!(k >= 1);
    let n = e.n();
    let d2 = prod([delta(), delta()]);
    let mut res = sc(&corr1(e, &[prod([d2.clone(), epow(k - 1), basis(mu)])]), 24);
    for a in 0..n {
        res = res.sub(&sc(
            &corr0(
                e,
                &[
                    prod([delta(), epow(k - 1)]),
                    basis(a),
                    raised(a),
                    prod([delta(), basis(mu)]),
                ],
            ),
            5,
        ));
        res = res.sub(&sc(
            &corr0(
                e,
                &[
                    prod([delta(), epow(k - 1)]),
                    basis(a),
                    prod([raised(a), basis(mu)]),
                    delta(),
                ],
            ),
            2,
        ));
        for b in 0..n {
            res = res.add(&sc(
                &corr0(
                    e,
                    &[
                        prod([delta(), epow(k - 1)]),
                        g_of(prod([raised(a), raised(b), basis(mu)])),
                        basis(a),
                        basis(b),
                    ],
                ),
                6,
            ));
            res = res.add(&sc(
                &corr0(
                    e,
                    &[
                        prod([delta(), epow(k - 1), basis(mu)]),
                        g_of(prod([raised(a), raised(b)])),
                        basis(a),
                        basis(b),
                    ],
                ),
                6,
            ));
        }
    }
    for i in 1..k {
        for a in 0..n {
            res = res.add(&sc(
                &corr0(
                    e,
                    &[
                        prod([
                            g_of(prod([delta(), epow(i - 1), raised(a)])),
                            g_of(basis(a)),
                        ]),
                        epow(k - i - 1),
                        prod([delta(), basis(mu)]),
                    ],
                ),
                6,
            ));
        }
        res = res.sub(&sc(
            &corr0(
                e,
                &[
                    g_of(prod([delta(), epow(i - 1)])),
                    epow(k - i - 1),
                    prod([d2.clone(), basis(mu)]),
                ],
            ),
            4,
        ));
        res = res.add(&sc(
            &corr0(
                e,
                &[
                    g_of(prod([delta(), epow(i - 1), basis(mu)])),
                    epow(k - i - 1),
                    d2.clone(),
                ],
            ),
            3,
        ));
    }
    if k >= 2 {
        res = res.sub(&sc(
            &corr0(
                e,
                &[prod([delta(), delta(), delta()]), epow(k - 2), basis(mu)],
            ),
            k - 1,
        ));
    }
    res
}

/// ⟨⟨Δ²⟩⟩₁ − (7/24)Σ_μ⟨⟨Δγ_μγ^μΔ⟩⟩₀ + ½Σ_{α,β}⟨⟨ΔG(γ^α∘γ^β)γ_αγ_β⟩⟩₀.
pub fn delta_square_value_residual(e: &Engine) -> TruncatedSeries {
    let n = e.n();
    let mut res = corr1(e, &[prod([delta(), delta()])]);
    for mu in 0..n {
        res =
            res.sub(&corr0(e, &[delta(), basis(mu), raised(mu), delta()]).scale(&rat::frac(7, 24)));
    }
    for a in 0..n {
        for b in 0..n {
            res = res.add(
                &corr0(
                    e,
                    &[
                        delta(),
                        g_of(prod([raised(a), raised(b)])),
                        basis(a),
                        basis(b),
                    ],
                )
                .scale(&rat::frac(1, 2)),
            );
        }
    }
    res
}

/// Consistency of the three-slot closed form against the two-slot closed
/// form evaluated with an Euler power substituted into a general slot.
pub fn euler_chain_residual(
    e: &Engine,
    k1: i64,
    k2: i64,
    k3: i64,
    a: usize,
) -> Vec<TruncatedSeries> {
    let via_two = g1_two_euler_closed(e, k1, k2, &epow(k3), &basis(a));
    let direct = g1_three_euler_closed(e, &[k1, k2, k3], &basis(a));
    let g0_via_two = g0_two_euler_closed(e, k1, k2, &epow(k3), &basis(a));
    let g0_direct = g0_three_euler_closed(e, &[k1, k2, k3], &basis(a));
    vec![via_two.sub(&direct), g0_via_two.sub(&g0_direct)]
}
