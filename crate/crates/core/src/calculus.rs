//! Vector fields on the small phase space and the operator calculus:
//! correlation functions, quantum product, the grading operator, Euler
//! powers, covariant derivative, Lie bracket, and the field Δ.
//!
//! Identity evaluators build their arguments as [`FE`] expression trees;
//! the [`Engine`] hash-conses evaluated fields and correlators so the large
//! symmetrized sums share work. All values are exact; validity windows
//! propagate through every operation.

use std::collections::HashMap;
use std::sync::Arc;

use num::Zero;
use parking_lot::RwLock;

use crate::model::FrobeniusModel;
use crate::rat::{self, Rat};
use crate::series::TruncatedSeries;

/// A vector field Σ_α f_α γ_α given by its component functions.
#[derive(Debug, Clone)]
pub struct VectorField {
    comps: Vec<TruncatedSeries>,
}

impl VectorField {
    pub fn new(comps: Vec<TruncatedSeries>) -> Self {
        assert!(!comps.is_empty());
        VectorField { comps }
    }

    pub fn zero(model: &FrobeniusModel) -> Self {
        VectorField {
            comps: (0..model.n)
                .map(|_| TruncatedSeries::zero(model.shape.clone()))
                .collect(),
        }
    }

    /// Constant field with the given basis coefficients.
    pub fn constant(model: &FrobeniusModel, coeffs: &[Rat]) -> Self {
        VectorField {
            comps: coeffs
                .iter()
                .map(|c| TruncatedSeries::constant(model.shape.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn comp(&self, alpha: usize) -> &TruncatedSeries {
        &self.comps[alpha]
    }

    pub fn comps(&self) -> &[TruncatedSeries] {
        &self.comps
    }

    pub fn valid_t(&self) -> i64 {
        self.comps.iter().map(|c| c.valid_t()).min().unwrap()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &TruncatedSeries)> {
        self.comps
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_empty())
            .map(|(i, s)| (i, s))
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        VectorField {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> VectorField {
        VectorField {
            comps: self.comps.iter().map(|s| s.scale(c)).collect(),
        }
    }
}

/// Field expressions: the vocabulary the paper's identities are written in.
/// Quantum products are kept sorted (the product is commutative) so that
/// syntactically different spellings of the same field share cache entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FE {
    /// γ_{α+1}
    Basis(u8),
    /// γ^{α+1} = Σ_μ η^{μα} γ_μ
    Raised(u8),
    /// k-th quantum power of the Euler field; E⁰ = γ₁
    EPow(u8),
    /// Δ = Σ_α γ^α ∘ γ_α
    Delta,
    /// grading operator applied componentwise
    G(Box<FE>),
    /// quantum product of two or more factors
    Prod(Vec<FE>),
}

pub fn basis(alpha: usize) -> FE {
    FE::Basis(alpha as u8)
}

pub fn raised(alpha: usize) -> FE {
    FE::Raised(alpha as u8)
}

pub fn epow(k: i64) -> FE {
    assert!(k >= 0);
    FE::EPow(k as u8)
}

pub fn delta() -> FE {
    FE::Delta
}

pub fn g_of(x: FE) -> FE {
    FE::G(Box::new(x))
}

/// Quantum product of the given factors (flattened and sorted).
pub fn prod(factors: impl IntoIterator<Item = FE>) -> FE {
    let mut flat = Vec::new();
    for f in factors {
        match f {
            FE::Prod(inner) => flat.extend(inner),
            other => flat.push(other),
        }
    }
    assert!(!flat.is_empty());
    if flat.len() == 1 {
        return flat.pop().unwrap();
    }
    flat.sort();
    FE::Prod(flat)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out.sort();
    out
}

/// The 6 permutations of three symbols, in lexicographic order.
pub fn s3() -> &'static [Vec<usize>] {
    static S3: std::sync::OnceLock<Vec<Vec<usize>>> = std::sync::OnceLock::new();
    S3.get_or_init(|| permutations(3))
}

/// The 24 permutations of four symbols, in lexicographic order.
pub fn s4() -> &'static [Vec<usize>] {
    static S4: std::sync::OnceLock<Vec<Vec<usize>>> = std::sync::OnceLock::new();
    S4.get_or_init(|| permutations(4))
}

type Cache<K, V> = Arc<RwLock<HashMap<K, Arc<V>>>>;

fn fresh_cache<K, V>() -> Cache<K, V> {
    Arc::new(RwLock::new(HashMap::new()))
}

/// Evaluation context for one model: hash-consed fields, correlators,
/// derivative tensors of the potentials, and the Φ_k ladder. All caches are
/// write-once (idempotent fills), so shared read access from parallel
/// workers is safe.
///
/// Genus-0 caches depend only on F₀; [`Engine::with_f1`] shares them across
/// candidate genus-1 potentials and only re-creates the genus-1 caches. The
/// solver leans on this when it builds one residual column per ansatz slot.
pub struct Engine {
    pub model: FrobeniusModel,
    fields: Cache<FE, VectorField>,
    corr0: Cache<Vec<FE>, TruncatedSeries>,
    corr1: Cache<Vec<FE>, TruncatedSeries>,
    tensors0: Cache<Vec<u8>, TruncatedSeries>,
    tensors1: Cache<Vec<u8>, TruncatedSeries>,
    phis: Cache<i64, TruncatedSeries>,
    gaps: Cache<i64, TruncatedSeries>,
}

impl Engine {
    pub fn new(model: FrobeniusModel) -> Self {
        Engine {
            model,
            fields: fresh_cache(),
            corr0: fresh_cache(),
            corr1: fresh_cache(),
            tensors0: fresh_cache(),
            tensors1: fresh_cache(),
            phis: fresh_cache(),
            gaps: fresh_cache(),
        }
    }

    /// Same model with a different genus-1 potential. Everything derived
    /// from F₀ alone (fields, genus-0 correlators and tensors, Φ_k) is
    /// shared with `self`; genus-1 caches start empty.
    pub fn with_f1(&self, f1: TruncatedSeries) -> Self {
        Engine {
            model: self.model.with_f1(f1),
            fields: self.fields.clone(),
            corr0: self.corr0.clone(),
            corr1: fresh_cache(),
            tensors0: self.tensors0.clone(),
            tensors1: fresh_cache(),
            phis: self.phis.clone(),
            gaps: fresh_cache(),
        }
    }

    pub fn n(&self) -> usize {
        self.model.n
    }

    fn zero_series(&self) -> TruncatedSeries {
        TruncatedSeries::zero(self.model.shape.clone())
    }

    /// ∂^k F_g for a sorted multi-index, cached. The order of derivatives
    /// does not matter; keys are canonical (sorted ascending).
    fn tensor(&self, genus: u8, sorted_idx: &[u8]) -> Arc<TruncatedSeries> {
        let cache = match genus {
            0 => &self.tensors0,
            1 => &self.tensors1,
            _ => unreachable!("only genus 0 and 1 are supported"),
        };
        let key = sorted_idx.to_vec();
        if let Some(hit) = cache.read().get(&key) {
            return hit.clone();
        }
        let value = if sorted_idx.is_empty() {
            let base = match genus {
                0 => self.model.f0.clone(),
                _ => self
                    .model
                    .f1
                    .clone()
                    .expect("genus-1 correlator requested but the model has no F1"),
            };
            Arc::new(base)
        } else {
            let parent = self.tensor(genus, &sorted_idx[..sorted_idx.len() - 1]);
            Arc::new(parent.deriv(sorted_idx[sorted_idx.len() - 1] as usize))
        };
        cache.write().entry(key).or_insert(value).clone()
    }

    /// Correlation function of evaluated vector fields (uncached path).
    pub fn correlation_fields(&self, genus: u8, fields: &[&VectorField]) -> TruncatedSeries {
        assert!(!fields.is_empty(), "correlators need at least one field");
        let mut acc = self.zero_series();
        // Walk the cartesian product of the fields' nonzero components.
        let lists: Vec<Vec<(usize, &TruncatedSeries)>> =
            fields.iter().map(|f| f.nonzero().collect()).collect();
        if lists.iter().any(|l| l.is_empty()) {
            // A zero field annihilates, but the window still shrinks.
            let v = fields.iter().map(|f| f.valid_t()).min().unwrap();
            return acc.with_valid_t(v - fields.len() as i64);
        }
        let mut choice = vec![0usize; lists.len()];
        loop {
            let mut idx: Vec<u8> = choice
                .iter()
                .zip(&lists)
                .map(|(&c, l)| l[c].0 as u8)
                .collect();
            idx.sort_unstable();
            let mut term: TruncatedSeries = self.tensor(genus, &idx).as_ref().clone();
            for (&c, l) in choice.iter().zip(&lists) {
                term = term.mul(l[c].1);
            }
            acc = acc.add(&term);
            // Advance the odometer.
            let mut pos = 0;
            loop {
                if pos == lists.len() {
                    return acc;
                }
                choice[pos] += 1;
                if choice[pos] < lists[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Correlation function of expression fields, cached by the sorted
    /// argument list (correlators are symmetric in their slots).
    pub fn correlation(&self, genus: u8, fields: &[FE]) -> Arc<TruncatedSeries> {
        let cache = match genus {
            0 => &self.corr0,
            1 => &self.corr1,
            _ => unreachable!("only genus 0 and 1 are supported"),
        };
        let mut key: Vec<FE> = fields.to_vec();
        key.sort();
        if let Some(hit) = cache.read().get(&key) {
            return hit.clone();
        }
        let evaluated: Vec<Arc<VectorField>> = key.iter().map(|f| self.field(f)).collect();
        let refs: Vec<&VectorField> = evaluated.iter().map(|f| f.as_ref()).collect();
        let value = Arc::new(self.correlation_fields(genus, &refs));
        cache.write().entry(key).or_insert(value).clone()
    }

    /// Evaluate a field expression, hash-consed.
    pub fn field(&self, fe: &FE) -> Arc<VectorField> {
        if let Some(hit) = self.fields.read().get(fe) {
            return hit.clone();
        }
        let value = Arc::new(self.eval_field(fe));
        self.fields
            .write()
            .entry(fe.clone())
            .or_insert(value)
            .clone()
    }

    fn eval_field(&self, fe: &FE) -> VectorField {
        let m = &self.model;
        match fe {
            FE::Basis(a) => {
                let mut coeffs = vec![rat::zero(); m.n];
                coeffs[*a as usize] = rat::one();
                VectorField::constant(m, &coeffs)
            }
            FE::Raised(a) => {
                let coeffs: Vec<Rat> = (0..m.n)
                    .map(|mu| m.eta_inv[mu][*a as usize].clone())
                    .collect();
                VectorField::constant(m, &coeffs)
            }
            FE::EPow(0) => self.eval_field(&FE::Basis(0)),
            FE::EPow(k) => {
                let prev = self.field(&FE::EPow(k - 1));
                self.quantum_product(&self.euler_field(), &prev)
            }
            FE::Delta => {
                let mut acc = VectorField::zero(m);
                for alpha in 0..m.n {
                    let ga = self.field(&FE::Basis(alpha as u8));
                    let gra = self.field(&FE::Raised(alpha as u8));
                    acc = acc.add(&self.quantum_product(&gra, &ga));
                }
                acc
            }
            FE::G(inner) => self.g_operator(&self.field(inner)),
            FE::Prod(factors) => {
                let mut acc = self.field(&factors[0]).as_ref().clone();
                for f in &factors[1..] {
                    acc = self.quantum_product(&acc, &self.field(f));
                }
                acc
            }
        }
    }

    /// The Euler field E = c₁(X) + Σ_α (b₁+1−b_α) t^α γ_α.
    pub fn euler_field(&self) -> VectorField {
        let m = &self.model;
        let mut comps = Vec::with_capacity(m.n);
        let b1p1 = m.b[0].clone() + rat::one();
        for alpha in 0..m.n {
            let mut s = TruncatedSeries::constant(m.shape.clone(), m.euler_const[alpha].clone());
            let coeff = b1p1.clone() - m.b[alpha].clone();
            if !coeff.is_zero() {
                let mono = crate::series::Monomial::var(m.n, m.shape.n_q, alpha);
                s = s.add(&TruncatedSeries::monomial(m.shape.clone(), mono, coeff));
            }
            comps.push(s);
        }
        VectorField::new(comps)
    }

    /// k-th quantum power of the Euler field (cached, left fold).
    pub fn euler_power(&self, k: i64) -> Arc<VectorField> {
        self.field(&epow(k))
    }

    /// V ∘ W = Σ_α ⟨⟨V W γ^α⟩⟩₀ γ_α.
    pub fn quantum_product(&self, v: &VectorField, w: &VectorField) -> VectorField {
        let m = &self.model;
        let mut lowered = Vec::with_capacity(m.n);
        for mu in 0..m.n {
            let gmu = self.field(&FE::Basis(mu as u8));
            lowered.push(self.correlation_fields(0, &[v, w, &gmu]));
        }
        let comps = (0..m.n)
            .map(|alpha| {
                let mut acc = self.zero_series();
                for mu in 0..m.n {
                    let coef = &m.eta_inv[alpha][mu];
                    if !coef.is_zero() {
                        acc = acc.add(&lowered[mu].scale(coef));
                    }
                }
                // Preserve the window even when all summands vanish.
                let v_min = lowered.iter().map(|s| s.valid_t()).min().unwrap();
                let w = acc.valid_t().min(v_min);
                acc.with_valid_t(w)
            })
            .collect();
        VectorField::new(comps)
    }

    /// Grading operator: multiplies the γ_α-component by b_α.
    pub fn g_operator(&self, v: &VectorField) -> VectorField {
        let comps = v
            .comps()
            .iter()
            .enumerate()
            .map(|(alpha, s)| s.scale(&self.model.b[alpha]))
            .collect();
        VectorField::new(comps)
    }

    /// Δ = Σ_α γ^α ∘ γ_α (cached).
    pub fn delta_field(&self) -> Arc<VectorField> {
        self.field(&FE::Delta)
    }

    /// Directional derivative of a scalar function along a field.
    pub fn dir_deriv(&self, w: &VectorField, f: &TruncatedSeries) -> TruncatedSeries {
        let mut acc = self.zero_series().with_valid_t(f.valid_t() - 1);
        for (beta, comp) in w.nonzero() {
            acc = acc.add(&comp.mul(&f.deriv(beta)));
        }
        let bound = acc.valid_t().min(w.valid_t()).min(f.valid_t() - 1);
        acc.with_valid_t(bound)
    }

    /// ∇_W V: componentwise directional derivative of V's coefficients.
    pub fn nabla(&self, w: &VectorField, v: &VectorField) -> VectorField {
        VectorField::new(v.comps().iter().map(|c| self.dir_deriv(w, c)).collect())
    }

    /// [V, W] = ∇_V W − ∇_W V.
    pub fn lie_bracket(&self, v: &VectorField, w: &VectorField) -> VectorField {
        self.nabla(v, w).sub(&self.nabla(w, v))
    }

    /// W⟨⟨V₁···V_k⟩⟩_g − ⟨⟨W V₁···V_k⟩⟩_g − Σ_i ⟨⟨···(∇_W V_i)···⟩⟩_g.
    pub fn derivative_rule_residual(
        &self,
        genus: u8,
        w: &VectorField,
        fields: &[&VectorField],
    ) -> TruncatedSeries {
        let base = self.correlation_fields(genus, fields);
        let mut res = self.dir_deriv(w, &base);
        let mut with_w: Vec<&VectorField> = vec![w];
        with_w.extend_from_slice(fields);
        res = res.sub(&self.correlation_fields(genus, &with_w));
        for i in 0..fields.len() {
            let nabla_vi = self.nabla(w, fields[i]);
            let mut slots: Vec<&VectorField> = fields.to_vec();
            slots[i] = &nabla_vi;
            res = res.sub(&self.correlation_fields(genus, &slots));
        }
        res
    }

    /// ⟨⟨E^k⟩⟩₁ − Φ_k, the genus-1 Virasoro gap (cached).
    pub fn gap(&self, k: i64) -> Arc<TruncatedSeries> {
        if let Some(hit) = self.gaps.read().get(&k) {
            return hit.clone();
        }
        let ek1 = self.correlation(1, &[epow(k)]);
        let value = Arc::new(ek1.sub(&self.phi(k)));
        self.gaps.write().entry(k).or_insert(value).clone()
    }

    /// Φ_k via the b-weighted three-sum formula (cached). See [`crate::phi`]
    /// for the alternative route and the derivative formula.
    pub fn phi(&self, k: i64) -> Arc<TruncatedSeries> {
        if let Some(hit) = self.phis.read().get(&k) {
            return hit.clone();
        }
        let value = Arc::new(crate::phi::phi_primary(self, k));
        self.phis.write().entry(k).or_insert(value).clone()
    }

    /// Apply a field expression (as a derivation) to a scalar function.
    pub fn apply(&self, fe: &FE, f: &TruncatedSeries) -> TruncatedSeries {
        self.dir_deriv(&self.field(fe), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use crate::rat::{frac, int};
    use crate::series::Monomial;

    fn engine(name: &str) -> Engine {
        Engine::new(models::builtin(name, 8, 3).unwrap())
    }

    #[test]
    fn three_point_with_identity_is_eta() {
        for name in ["point", "p1", "p2", "p2-classical"] {
            let e = engine(name);
            for a in 0..e.n() {
                for b in 0..e.n() {
                    let c = e.correlation(0, &[basis(0), basis(a), basis(b)]);
                    let expect =
                        TruncatedSeries::constant(e.model.shape.clone(), e.model.eta[a][b].clone());
                    assert!(
                        c.sub(&expect).is_zero_on_window(),
                        "string 3-point failed on {name} at ({a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn p1_triple_omega_correlator() {
        let e = engine("p1");
        let c = e.correlation(0, &[basis(1), basis(1), basis(1)]);
        let q = Monomial::parse("q", 2, 1).unwrap();
        assert_eq!(c.coeff(&q), int(1));
        assert_eq!(c.coeff(&Monomial::unit(2, 1)), int(0));
    }

    #[test]
    fn point_genus1_euler_correlator_vanishes() {
        let e = engine("point");
        let c = e.correlation(1, &[epow(1)]);
        assert!(c.is_zero_on_window());
    }

    #[test]
    fn identity_is_quantum_unit() {
        let e = engine("p2");
        for v in [basis(1), basis(2), epow(1), delta()] {
            let lhs = e.field(&prod([basis(0), v.clone()]));
            let rhs = e.field(&v);
            for alpha in 0..e.n() {
                assert!(
                    lhs.comp(alpha).sub(rhs.comp(alpha)).is_zero_on_window(),
                    "γ1 ∘ {v:?} ≠ {v:?} in component {alpha}"
                );
            }
        }
    }

    #[test]
    fn p1_omega_squared_at_origin() {
        let e = engine("p1");
        let sq = e.field(&prod([basis(1), basis(1)]));
        let q = Monomial::parse("q", 2, 1).unwrap();
        assert_eq!(sq.comp(0).coeff(&q), int(1));
        assert!(sq.comp(1).is_empty());
    }

    #[test]
    fn euler_field_components() {
        let e = engine("p2");
        let eu = e.euler_field();
        // E = t1 γ1 + 3 γ2 − t3 γ3
        assert_eq!(
            eu.comp(0).coeff(&Monomial::parse("t1", 3, 1).unwrap()),
            int(1)
        );
        assert_eq!(eu.comp(1).coeff(&Monomial::unit(3, 1)), int(3));
        assert_eq!(
            eu.comp(2).coeff(&Monomial::parse("t3", 3, 1).unwrap()),
            int(-1)
        );
        let pt = engine("point");
        let eu = pt.euler_field();
        assert_eq!(
            eu.comp(0).coeff(&Monomial::parse("t1", 1, 0).unwrap()),
            int(1)
        );
        assert_eq!(eu.comp(0).len(), 1);
    }

    #[test]
    fn p1_euler_square_at_origin() {
        let e = engine("p1");
        let e2 = e.euler_power(2);
        let q = Monomial::parse("q", 2, 1).unwrap();
        assert_eq!(e2.comp(0).coeff(&q), int(4));
    }

    #[test]
    fn g_operator_scales_by_grading() {
        let e = engine("p2");
        let g1 = e.field(&g_of(basis(0)));
        assert_eq!(g1.comp(0).coeff(&Monomial::unit(3, 1)), frac(-1, 2));
        // G twice is componentwise b².
        let gg = e.g_operator(&e.g_operator(&e.field(&basis(2))));
        assert_eq!(gg.comp(2).coeff(&Monomial::unit(3, 1)), frac(9, 4));
    }

    #[test]
    fn nabla_of_constant_field_vanishes() {
        let e = engine("p2");
        let v = e.field(&epow(1));
        let c = e.field(&basis(2));
        let n = e.nabla(&v, &c);
        for alpha in 0..e.n() {
            assert!(n.comp(alpha).is_zero_on_window());
        }
    }

    #[test]
    fn nabla_euler_rule() {
        // ∇_υ E = −G(υ) + (b₁+1)υ for basis υ.
        for name in ["p1", "p2"] {
            let e = engine(name);
            let b1p1 = e.model.b[0].clone() + rat::one();
            for a in 0..e.n() {
                let upsilon = e.field(&basis(a));
                let lhs = e.nabla(&upsilon, &e.euler_field());
                let rhs = e
                    .g_operator(&upsilon)
                    .scale(&int(-1))
                    .add(&upsilon.scale(&b1p1));
                for alpha in 0..e.n() {
                    assert!(
                        lhs.comp(alpha).sub(rhs.comp(alpha)).is_zero_on_window(),
                        "∇_γ{}E failed on {name} component {alpha}",
                        a + 1
                    );
                }
            }
        }
    }

    #[test]
    fn bracket_antisymmetry_and_euler_powers() {
        let e = engine("p1");
        let e2 = e.euler_power(2);
        let self_bracket = e.lie_bracket(&e2, &e2);
        for alpha in 0..e.n() {
            assert!(self_bracket.comp(alpha).is_zero_on_window());
        }
        // [E, E²] = E² (Euler-power bracket with k=1, m=2).
        let e1 = e.euler_power(1);
        let br = e.lie_bracket(&e1, &e2);
        for alpha in 0..e.n() {
            assert!(br.comp(alpha).sub(e2.comp(alpha)).is_zero_on_window());
        }
    }

    #[test]
    fn delta_field_values() {
        let pt = engine("point");
        let d = pt.delta_field();
        assert_eq!(d.comp(0).coeff(&Monomial::unit(1, 0)), int(1));

        let p1 = engine("p1");
        let d = p1.delta_field();
        // Δ = 2ω on the line: both γ^1∘γ1 and γ^2∘γ2 reduce to ω.
        assert_eq!(d.comp(1).coeff(&Monomial::unit(2, 1)), int(2));
        assert!(d.comp(0).is_zero_on_window());
        // Δ ∘ γ1 = Δ.
        let dd = p1.field(&prod([delta(), basis(0)]));
        for alpha in 0..p1.n() {
            assert!(dd.comp(alpha).sub(d.comp(alpha)).is_zero_on_window());
        }
    }

    #[test]
    fn raise_then_lower_is_identity() {
        // Lowering the raised basis fields with η must return the basis.
        for name in ["p1", "p2"] {
            let e = engine(name);
            for alpha in 0..e.n() {
                let raised_field = e.field(&raised(alpha));
                let mut lowered = vec![rat::zero(); e.n()];
                for (mu, comp) in raised_field.nonzero() {
                    for beta in 0..e.n() {
                        lowered[beta] = lowered[beta].clone()
                            + comp.coeff(&Monomial::unit(e.n(), e.model.shape.n_q))
                                * e.model.eta[mu][beta].clone();
                    }
                }
                for beta in 0..e.n() {
                    let expect = if beta == alpha { int(1) } else { int(0) };
                    assert_eq!(lowered[beta], expect, "{name} α={alpha} β={beta}");
                }
            }
        }
    }

    #[test]
    fn derivative_rule_for_composite_fields() {
        let e = engine("p1");
        let w = e.euler_field();
        let v = e.euler_power(2);
        let res = e.derivative_rule_residual(0, &w, &[&v]);
        assert!(res.is_zero_on_window(), "residual {res}");
        let res1 = e.derivative_rule_residual(1, &w, &[&v]);
        assert!(res1.is_zero_on_window());
    }
}
