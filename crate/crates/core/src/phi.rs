//! The genus-0 functions Φ_k, their two defining formulas, the explicit
//! first-derivative formula, and the Virasoro-type relation they satisfy.
//!
//! Φ₀ and Φ₁ are closed constants; for k ≥ 2 two independent routes exist
//! (the b-weighted three-sum definition and the Δ-based form) and the test
//! suite keeps them in agreement on every builtin model.

use crate::calculus::{basis, delta, epow, g_of, prod, raised, Engine};
use crate::rat::{self, Rat};
use crate::series::TruncatedSeries;

/// Φ_k via the b-weighted three-sum definition.
pub fn phi_primary(e: &Engine, k: i64) -> TruncatedSeries {
    let n = e.n();
    let zero = TruncatedSeries::zero(e.model.shape.clone());
    if k == 0 {
        return zero;
    }
    if k == 1 {
        let c = rat::frac(-1, 24) * e.model.c1_cdm1.clone();
        return TruncatedSeries::constant(e.model.shape.clone(), c);
    }
    let mut acc = zero;

    // −(1/24) Σ_m Σ_{α,β,σ} b_α ⟨⟨γ1 E^m γ^α⟩⟩₀ ⟨⟨γ_α E^{k−1−m} γ^β⟩⟩₀ ⟨⟨γ_β γ_σ γ^σ⟩⟩₀
    let tail: Vec<TruncatedSeries> = (0..n)
        .map(|beta| {
            let mut s = TruncatedSeries::zero(e.model.shape.clone());
            for sigma in 0..n {
                s = s.add(&e.correlation(0, &[basis(beta), basis(sigma), raised(sigma)]));
            }
            s
        })
        .collect();
    let c24 = rat::frac(-1, 24);
    for m in 0..k {
        for alpha in 0..n {
            let first = e.correlation(0, &[basis(0), epow(m), raised(alpha)]);
            if first.is_empty() {
                continue;
            }
            for beta in 0..n {
                let mid = e.correlation(0, &[basis(alpha), epow(k - 1 - m), raised(beta)]);
                let term = first.mul(&mid).mul(&tail[beta]);
                acc = acc.add(&term.scale(&(c24.clone() * e.model.b[alpha].clone())));
            }
        }
    }

    // −(1/4) Σ_m Σ_{α,β} b_α b_β ⟨⟨γ_α E^m γ^β⟩⟩₀ ⟨⟨γ_β E^{k−1−m} γ^α⟩⟩₀
    let c4 = rat::frac(-1, 4);
    for m in 0..k {
        for alpha in 0..n {
            for beta in 0..n {
                let a = e.correlation(0, &[basis(alpha), epow(m), raised(beta)]);
                let b = e.correlation(0, &[basis(beta), epow(k - 1 - m), raised(alpha)]);
                let w = c4.clone() * e.model.b[alpha].clone() * e.model.b[beta].clone();
                acc = acc.add(&a.mul(&b).scale(&w));
            }
        }
    }

    // +(k/12) Σ_σ ⟨⟨γ_σ E^{k−1} γ^σ⟩⟩₀
    let ck = Rat::from(rat::int(k)) * rat::frac(1, 12);
    for sigma in 0..n {
        let c = e.correlation(0, &[basis(sigma), epow(k - 1), raised(sigma)]);
        acc = acc.add(&c.scale(&ck));
    }
    acc
}

/// Φ_k via the Δ-based alternative; k ∈ {0,1} delegate to the closed
/// constants.
pub fn phi_alt(e: &Engine, k: i64) -> TruncatedSeries {
    if k <= 1 {
        return phi_primary(e, k);
    }
    let n = e.n();
    let mut acc = TruncatedSeries::zero(e.model.shape.clone());
    // −Σ_{i=0}^{k−1} ⟨⟨G(E^i) Δ E^{k−i−1}⟩⟩₀
    for i in 0..k {
        let c = e.correlation(0, &[g_of(epow(i)), delta(), epow(k - 1 - i)]);
        acc = acc.sub(&c);
    }
    // −k Σ_μ ⟨⟨E^{k−1} γ_μ γ^μ⟩⟩₀
    for mu in 0..n {
        let c = e.correlation(0, &[epow(k - 1), basis(mu), raised(mu)]);
        acc = acc.sub(&c.scale(&rat::int(k)));
    }
    // +6 Σ_{i=0}^{k−1} Σ_μ ⟨⟨G(E^i ∘ γ^μ) G(γ_μ) E^{k−i−1}⟩⟩₀
    for i in 0..k {
        for mu in 0..n {
            let c = e.correlation(
                0,
                &[
                    g_of(prod([epow(i), raised(mu)])),
                    g_of(basis(mu)),
                    epow(k - 1 - i),
                ],
            );
            acc = acc.add(&c.scale(&rat::int(6)));
        }
    }
    acc.scale(&rat::frac(1, 24))
}

/// Explicit formula for γ_α Φ_k (the seven-group right side, divided by 24).
pub fn dphi_explicit(e: &Engine, alpha: usize, k: i64) -> TruncatedSeries {
    let n = e.n();
    let mut acc = TruncatedSeries::zero(e.model.shape.clone());
    if k <= 1 {
        return acc;
    }
    let ga = basis(alpha);

    // −Σ_{i=1}^{k−1} ⟨⟨G(E^i) {E^{k−i−1}∘γ_α} γ_μ γ^μ⟩⟩₀
    for i in 1..k {
        for mu in 0..n {
            let c = e.correlation(
                0,
                &[
                    g_of(epow(i)),
                    prod([epow(k - i - 1), ga.clone()]),
                    basis(mu),
                    raised(mu),
                ],
            );
            acc = acc.sub(&c);
        }
    }
    // −Σ_{i=0}^{k−2} (k−i−1) ⟨⟨{G(E^i)∘E^{k−i−2}} Δ γ_α⟩⟩₀
    for i in 0..=k - 2 {
        let c = e.correlation(
            0,
            &[prod([g_of(epow(i)), epow(k - i - 2)]), delta(), ga.clone()],
        );
        acc = acc.sub(&c.scale(&rat::int(k - i - 1)));
    }
    // +Σ_{i=0}^{k−2} (−k+2i+2) ⟨⟨G(Δ∘E^{k−i−2}) E^i γ_α⟩⟩₀
    for i in 0..=k - 2 {
        let c = e.correlation(
            0,
            &[g_of(prod([delta(), epow(k - i - 2)])), epow(i), ga.clone()],
        );
        acc = acc.add(&c.scale(&rat::int(-k + 2 * i + 2)));
    }
    // −Σ_{i=1}^{k−1} Σ_{j=1}^{i} ⟨⟨G(E^{k−i−1}∘Δ) G(E^{i−j}∘γ_α) E^{j−1}⟩⟩₀
    for i in 1..k {
        for j in 1..=i {
            let c = e.correlation(
                0,
                &[
                    g_of(prod([epow(k - i - 1), delta()])),
                    g_of(prod([epow(i - j), ga.clone()])),
                    epow(j - 1),
                ],
            );
            acc = acc.sub(&c);
        }
    }
    // −Σ_{i=1}^{k−1} Σ_{j=1}^{i} ⟨⟨{G(E^{k−i−1})∘Δ} G(E^{i−j}∘γ_α) E^{j−1}⟩⟩₀
    for i in 1..k {
        for j in 1..=i {
            let c = e.correlation(
                0,
                &[
                    prod([g_of(epow(k - i - 1)), delta()]),
                    g_of(prod([epow(i - j), ga.clone()])),
                    epow(j - 1),
                ],
            );
            acc = acc.sub(&c);
        }
    }
    // +12 Σ_{i=1}^{k−1} i ⟨⟨{G(E^{k−i−1}∘γ^μ)∘G(γ_μ)} E^{i−1} γ_α⟩⟩₀
    for i in 1..k {
        for mu in 0..n {
            let c = e.correlation(
                0,
                &[
                    prod([g_of(prod([epow(k - i - 1), raised(mu)])), g_of(basis(mu))]),
                    epow(i - 1),
                    ga.clone(),
                ],
            );
            acc = acc.add(&c.scale(&rat::int(12 * i)));
        }
    }
    // −k(k−1) ⟨⟨Δ E^{k−2} γ_α⟩⟩₀
    let c = e.correlation(0, &[delta(), epow(k - 2), ga.clone()]);
    acc = acc.sub(&c.scale(&rat::int(k * (k - 1))));

    acc.scale(&rat::frac(1, 24))
}

/// Residual of the explicit derivative formula against direct
/// differentiation of Φ_k.
pub fn dphi_residual(e: &Engine, alpha: usize, k: i64) -> TruncatedSeries {
    let direct = e.apply(&basis(alpha), &e.phi(k));
    dphi_explicit(e, alpha, k).sub(&direct)
}

/// E^kΦ_m − E^mΦ_k − (m−k)Φ_{k+m−1}.
pub fn virasoro_type_phi_residual(e: &Engine, k: i64, m: i64) -> TruncatedSeries {
    let lhs = e
        .apply(&epow(k), &e.phi(m))
        .sub(&e.apply(&epow(m), &e.phi(k)));
    let rhs = e.phi(k + m - 1).scale(&rat::int(m - k));
    lhs.sub(&rhs)
}

/// γ₁(⟨⟨E^k⟩⟩₁ − Φ_k) − k(⟨⟨E^{k−1}⟩⟩₁ − Φ_{k−1}).
pub fn gap_recursion_residual(e: &Engine, k: i64) -> TruncatedSeries {
    assert!(k >= 1);
    let lhs = e.apply(&basis(0), &e.gap(k));
    lhs.sub(&e.gap(k - 1).scale(&rat::int(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::Engine;
    use crate::models;
    use crate::rat::frac;
    use crate::series::Monomial;

    fn engine(name: &str) -> Engine {
        let d_max = if name == "point" { 0 } else { 3 };
        Engine::new(models::builtin(name, 8, d_max).unwrap())
    }

    #[test]
    fn phi_zero_and_one() {
        for name in ["point", "p1", "p2"] {
            let e = engine(name);
            assert!(e.phi(0).is_empty(), "Φ0 must vanish on {name}");
        }
        let p1 = engine("p1");
        assert_eq!(p1.phi(1).coeff(&Monomial::unit(2, 1)), frac(-1, 12));
        let p2 = engine("p2");
        assert_eq!(p2.phi(1).coeff(&Monomial::unit(3, 1)), frac(-3, 8));
    }

    #[test]
    fn both_formulas_agree() {
        for name in ["point", "p1"] {
            let e = engine(name);
            for k in 0..=5 {
                let a = e.phi(k);
                let b = phi_alt(&e, k);
                assert!(
                    a.sub(&b).is_zero_on_window(),
                    "Φ_{k} disagreement on {name}"
                );
            }
        }
    }

    #[test]
    fn explicit_derivative_matches_direct() {
        let e = engine("p1");
        for k in 0..=4 {
            for alpha in 0..e.n() {
                let r = dphi_residual(&e, alpha, k);
                assert!(
                    r.is_zero_on_window(),
                    "dΦ_{k}/dt{} residual: {r}",
                    alpha + 1
                );
            }
        }
    }

    #[test]
    fn virasoro_type_relation() {
        let e = engine("p1");
        for k in 0..=3 {
            for m in 0..=3 {
                if k + m == 0 {
                    continue;
                }
                let r = virasoro_type_phi_residual(&e, k, m);
                assert!(r.is_zero_on_window(), "(k,m)=({k},{m}): {r}");
            }
        }
        // k = m vanishes identically by antisymmetry.
        let r = virasoro_type_phi_residual(&e, 2, 2);
        assert!(r.is_empty());
    }

    #[test]
    fn gamma1_applied_to_phi2_gives_twice_phi1() {
        // The (k,m) = (0,2) case of the Virasoro-type relation.
        let e = engine("p2");
        let lhs = e.apply(&basis(0), &e.phi(2));
        let rhs = e.phi(1).scale(&crate::rat::int(2));
        assert!(lhs.sub(&rhs).is_zero_on_window());
    }

    #[test]
    fn gap_vanishes_for_line_and_point() {
        for name in ["point", "p1"] {
            let e = engine(name);
            for k in 0..=3 {
                assert!(
                    e.gap(k).is_zero_on_window(),
                    "gap({k}) nonzero on {name}: {}",
                    e.gap(k)
                );
            }
        }
    }

    #[test]
    fn gap_recursion() {
        let e = engine("p1");
        for k in 1..=5 {
            let r = gap_recursion_residual(&e, k);
            assert!(r.is_zero_on_window(), "gap recursion k={k}: {r}");
        }
    }
}
