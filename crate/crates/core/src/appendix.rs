//! The auxiliary reduction identities behind the one-Euler-slot expansion:
//! thirteen registry entries plus two supplementary ones. Each evaluator
//! returns LHS − RHS of one displayed identity, with the symmetrization over
//! the three distinguished basis slots written as a literal 6-term loop.

use crate::calculus::{basis, delta, epow, g_of, prod, raised, s3, Engine, FE};
use crate::rat::{self};
use crate::series::TruncatedSeries;

fn zero(e: &Engine) -> TruncatedSeries {
    TruncatedSeries::zero(e.model.shape.clone())
}

fn corr0(e: &Engine, slots: &[FE]) -> TruncatedSeries {
    e.correlation(0, slots).as_ref().clone()
}

fn sc(s: &TruncatedSeries, k: i64) -> TruncatedSeries {
    s.scale(&rat::int(k))
}

fn fr(s: &TruncatedSeries, num: i64, den: i64) -> TruncatedSeries {
    s.scale(&rat::frac(num, den))
}

/// Apply `f` to every S₃ arrangement of the three distinguished slots and
/// sum the results.
fn sym3(
    e: &Engine,
    v: &[FE; 3],
    mut f: impl FnMut(&FE, &FE, &FE) -> TruncatedSeries,
) -> TruncatedSeries {
    let mut acc = zero(e);
    for g in s3() {
        acc = acc.add(&f(&v[g[0]], &v[g[1]], &v[g[2]]));
    }
    acc
}

/// Five-slot correlator with the quantum volume field against the one-Euler
/// reduction (first appendix identity).
pub fn a01(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let v = [basis(a), basis(b), basis(s)];
    let b1 = e.model.b[0].clone();
    let triple = prod([basis(a), basis(b), basis(s)]);
    let mut res = corr0(e, &[epow(k), basis(a), basis(b), basis(s), delta()]);

    // group 1
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([g_of(epow(k - i)), delta()]),
                    x.clone(),
                    y.clone(),
                    prod([epow(i - 1), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    // group 2
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            t = t.add(&corr0(
                e,
                &[
                    g_of(prod([delta(), epow(k - i)])),
                    x.clone(),
                    y.clone(),
                    prod([epow(i - 1), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    // group 3
    if k > 0 {
        let t = sym3(e, &v, |x, y, z| {
            corr0(
                e,
                &[
                    delta(),
                    x.clone(),
                    y.clone(),
                    prod([epow(k - 1), z.clone()]),
                ],
            )
        });
        res = res.add(&t.scale(&(b1.clone() * rat::frac(1, 3))));
    }
    // group 4
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(k - i)]),
                    x.clone(),
                    y.clone(),
                    prod([epow(i - 1), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 3)
    }));
    // group 5
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    g_of(epow(k - i)),
                    delta(),
                    x.clone(),
                    prod([epow(i - 1), y.clone(), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    // group 6
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(i - 1)]),
                    x.clone(),
                    y.clone(),
                    g_of(prod([epow(k - i), z.clone()])),
                ],
            ));
        }
        fr(&t, 1, 2)
    }));
    // group 7
    if k > 0 {
        res = res.sub(&sym3(e, &v, |x, y, z| {
            fr(
                &corr0(
                    e,
                    &[
                        prod([delta(), epow(k - 1)]),
                        x.clone(),
                        y.clone(),
                        g_of(z.clone()),
                    ],
                ),
                1,
                3,
            )
        }));
        // group 8
        res = res.sub(&sym3(e, &v, |x, y, z| {
            fr(
                &corr0(
                    e,
                    &[
                        delta(),
                        x.clone(),
                        prod([epow(k - 1), y.clone()]),
                        g_of(z.clone()),
                    ],
                ),
                1,
                6,
            )
        }));
    }
    // group 9
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(i - 1)]),
                    x.clone(),
                    y.clone(),
                    prod([g_of(epow(k - i)), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    // group 10
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), delta(), epow(j - 1)]),
                        g_of(prod([epow(i - j - 1), x.clone(), y.clone()])),
                        z.clone(),
                    ],
                ));
            }
        }
        fr(&t, 1, 6)
    }));
    // group 11
    {
        let t = sym3(e, &v, |x, y, z| {
            let mut t = zero(e);
            for i in 1..k {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(k - i - 1)]),
                        g_of(prod([epow(i - 1), x.clone(), y.clone()])),
                        z.clone(),
                    ],
                ));
            }
            t
        });
        res = res.sub(&t.scale(&(b1.clone() * rat::frac(1, 6))));
    }
    // group 12
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        epow(k - i),
                        g_of(prod([epow(j - 1), x.clone(), y.clone()])),
                        g_of(prod([delta(), epow(i - j - 1), z.clone()])),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    // group 13
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(i - 1)]),
                    g_of(prod([epow(k - i - 1), x.clone(), y.clone()])),
                    g_of(z.clone()),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    // group 14
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([delta(), epow(k - i)])), epow(j - 1)]),
                        g_of(prod([epow(i - j - 1), x.clone(), y.clone()])),
                        z.clone(),
                    ],
                ));
            }
        }
        fr(&t, 1, 3)
    }));
    // group 15
    {
        let mut t = zero(e);
        for i in 1..k {
            for j in 1..=(k - i) {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i - j)), epow(i + j - 2)]),
                        delta(),
                        triple.clone(),
                    ],
                ));
            }
        }
        res = res.add(&sc(&t, 2));
    }
    // group 16
    {
        let t = sym3(e, &v, |x, y, z| {
            let mut t = zero(e);
            for i in 1..k {
                for j in 1..=(k - i) {
                    t = t.add(&corr0(
                        e,
                        &[
                            prod([delta(), epow(k - j - 1)]),
                            g_of(prod([epow(j - 1), x.clone(), y.clone()])),
                            z.clone(),
                        ],
                    ));
                }
            }
            t
        });
        res = res.add(&t.scale(&((b1.clone() + rat::int(2)) * rat::frac(1, 6))));
    }
    // group 17
    {
        let t = sym3(e, &v, |x, y, z| {
            let mut t = zero(e);
            for i in 1..k {
                for j in 1..=(k - i) {
                    t = t.add(&corr0(
                        e,
                        &[
                            prod([delta(), epow(k - j - 1)]),
                            g_of(prod([epow(j - 1), x.clone()])),
                            prod([y.clone(), z.clone()]),
                        ],
                    ));
                }
            }
            t
        });
        res = res.sub(&t.scale(&((b1.clone() + rat::int(4)) * rat::frac(1, 6))));
    }
    // group 18
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), delta(), epow(j - 1)]),
                        g_of(prod([epow(i - j - 1), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 6)
    }));
    // group 19
    {
        let t = sym3(e, &v, |x, y, z| {
            let mut t = zero(e);
            for i in 1..k {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(i - 1)]),
                        g_of(prod([epow(k - i - 1), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
            t
        });
        res = res.add(&t.scale(&(b1.clone() * rat::frac(1, 6))));
    }
    // group 20
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([epow(k - i), x.clone()]),
                        g_of(prod([delta(), epow(j - 1), y.clone()])),
                        g_of(prod([epow(i - j - 1), z.clone()])),
                    ],
                ));
            }
        }
        t
    }));
    // group 21
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([epow(i - 1), x.clone()]),
                    g_of(prod([delta(), epow(k - i - 1), y.clone()])),
                    g_of(z.clone()),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    // group 22
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([delta(), epow(k - i)])), epow(j - 1)]),
                        g_of(prod([epow(i - j - 1), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 2, 3)
    }));
    // group 23
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([g_of(prod([delta(), epow(i - 1)])), epow(k - i - 1)]),
                    prod([x.clone(), y.clone()]),
                    g_of(z.clone()),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    // group 24
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(k - i - 1), x.clone()]),
                    g_of(prod([epow(i - 1), y.clone()])),
                    g_of(z.clone()),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    // group 25
    {
        let t = sym3(e, &v, |x, y, z| {
            let mut t = zero(e);
            for i in 1..k {
                for j in 1..=(k - i) {
                    t = t.add(&corr0(
                        e,
                        &[
                            epow(k - i - j),
                            g_of(prod([delta(), epow(i + j - 2), x.clone()])),
                            prod([y.clone(), z.clone()]),
                        ],
                    ));
                }
            }
            t
        });
        res = res.add(&t.scale(&(b1.clone() * rat::frac(1, 6))));
    }
    // group 26
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(j - 1)]),
                        g_of(prod([delta(), epow(i - j - 1), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 3)
    }));
    // group 27
    {
        let t = sym3(e, &v, |x, y, z| {
            let mut t = zero(e);
            for i in 1..k {
                t = t.add(&corr0(
                    e,
                    &[
                        epow(k - i - 1),
                        g_of(prod([delta(), epow(i - 1), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
            t
        });
        res = res.add(&t.scale(&(b1.clone() * rat::frac(1, 6))));
    }
    // group 28
    {
        let mut t = zero(e);
        for i in 1..k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([delta(), epow(i - j - 1)])), g_of(epow(k - i))]),
                        epow(j - 1),
                        triple.clone(),
                    ],
                ));
            }
        }
        res = res.add(&t);
    }
    // group 29
    {
        let t = sym3(e, &v, |x, y, z| {
            let mut t = zero(e);
            for i in 1..k {
                for j in 1..=(k - i) {
                    t = t.add(&corr0(
                        e,
                        &[
                            epow(k - i - j),
                            g_of(prod([delta(), x.clone(), y.clone(), epow(i + j - 2)])),
                            z.clone(),
                        ],
                    ));
                }
            }
            t
        });
        res = res.sub(&t.scale(&(b1.clone() * rat::frac(1, 6))));
    }
    res
}

/// Symmetrized product of a 4-point function with the trace 4-point
/// function (second appendix identity).
pub fn a02(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let v = [basis(a), basis(b), basis(s)];
    let triple = prod([basis(a), basis(b), basis(s)]);
    let mut res = sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for mu in 0..n {
            let left = corr0(e, &[epow(k), x.clone(), y.clone(), raised(mu)]);
            if left.is_empty() {
                continue;
            }
            for rho in 0..n {
                let right = corr0(e, &[basis(mu), z.clone(), basis(rho), raised(rho)]);
                t = t.add(&left.mul(&right));
            }
        }
        fr(&t, 1, 2)
    });

    // 1
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), x.clone(), y.clone()]),
                        basis(mu),
                        raised(mu),
                        prod([epow(i - 1), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    // 2
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(prod([epow(k - i), x.clone(), y.clone()])),
                        basis(mu),
                        raised(mu),
                        prod([epow(i - 1), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    // 3
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([epow(k - i), x.clone()])), y.clone()]),
                        basis(mu),
                        raised(mu),
                        prod([epow(i - 1), z.clone()]),
                    ],
                ));
            }
        }
        t
    }));
    // 4
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), delta(), epow(j - 1)]),
                        g_of(prod([epow(i - j - 1), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    // 5
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(j - 1)]),
                        g_of(prod([delta(), epow(i - j - 1), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    // 6
    {
        let mut t = zero(e);
        for i in 2..=k {
            t = t.add(&sc(
                &corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(i - 2)]),
                        delta(),
                        triple.clone(),
                    ],
                ),
                i - 1,
            ));
        }
        res = res.sub(&sc(&t, 3));
    }
    // 7
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..=(k - i) {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(j - 1)]),
                        g_of(prod([epow(i - 1), x.clone(), y.clone()])),
                        g_of(prod([epow(k - i - j), z.clone()])),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    // 8
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..=(k - i) {
                t = t.add(&corr0(
                    e,
                    &[
                        epow(k - i - j),
                        g_of(prod([epow(i - 1), x.clone(), y.clone()])),
                        g_of(prod([delta(), epow(j - 1), z.clone()])),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    // 9
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            if k - i > 0 {
                t = t.add(&sc(
                    &corr0(
                        e,
                        &[
                            prod([delta(), epow(k - i - 1)]),
                            g_of(prod([epow(i - 1), x.clone(), y.clone()])),
                            z.clone(),
                        ],
                    ),
                    k - i,
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    // 10
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(j - 1), x.clone()]),
                        g_of(prod([epow(k - i), y.clone()])),
                        g_of(prod([epow(i - j - 1), z.clone()])),
                    ],
                ));
            }
        }
        t
    }));
    // 11
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([epow(i - j - 1), x.clone()]),
                        g_of(prod([epow(k - i), y.clone()])),
                        g_of(prod([delta(), epow(j - 1), z.clone()])),
                    ],
                ));
            }
        }
        t
    }));
    // 12
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for _j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(i - 2)]),
                        g_of(prod([epow(k - i), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        t
    }));
    res
}

/// Symmetrized double-raised 4-point contraction (third appendix identity).
pub fn a03(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let v = [basis(a), basis(b), basis(s)];
    let triple = prod([basis(a), basis(b), basis(s)]);
    let mut res = sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for mu in 0..n {
            for rho in 0..n {
                let left = corr0(e, &[epow(k), x.clone(), raised(mu), raised(rho)]);
                if left.is_empty() {
                    continue;
                }
                let right = corr0(e, &[basis(mu), basis(rho), y.clone(), z.clone()]);
                t = t.add(&left.mul(&right));
            }
        }
        t
    });

    // 1
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), x.clone(), raised(mu)]),
                        y.clone(),
                        z.clone(),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        t
    }));
    // 2
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(prod([epow(i - 1), x.clone(), raised(mu)])),
                        y.clone(),
                        z.clone(),
                        prod([epow(k - i), basis(mu)]),
                    ],
                ));
            }
        }
        t
    }));
    // 3
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([epow(k - i), x.clone()])), raised(mu)]),
                        y.clone(),
                        z.clone(),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        t
    }));
    // 4
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([epow(i - 1), raised(mu)])), x.clone()]),
                        y.clone(),
                        z.clone(),
                        prod([epow(k - i), basis(mu)]),
                    ],
                ));
            }
        }
        t
    }));
    // 5
    {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..=(k - i) {
                for mu in 0..n {
                    t = t.add(&corr0(
                        e,
                        &[
                            g_of(prod([
                                epow(i + j - 2),
                                basis(a),
                                basis(b),
                                basis(s),
                                raised(mu),
                            ])),
                            g_of(basis(mu)),
                            epow(k - i - j),
                        ],
                    ));
                }
            }
        }
        res = res.add(&sc(&t, 6));
    }
    // 6
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..=(k - i) {
                for mu in 0..n {
                    t = t.add(&corr0(
                        e,
                        &[
                            prod([
                                g_of(prod([epow(k - j - 1), x.clone(), y.clone(), raised(mu)])),
                                g_of(basis(mu)),
                            ]),
                            epow(j - 1),
                            z.clone(),
                        ],
                    ));
                }
            }
        }
        sc(&t, 3)
    }));
    // 7
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..=(k - i) {
                for mu in 0..n {
                    t = t.add(&corr0(
                        e,
                        &[
                            prod([
                                g_of(prod([epow(k - j - 1), x.clone(), raised(mu)])),
                                g_of(basis(mu)),
                            ]),
                            epow(j - 1),
                            prod([y.clone(), z.clone()]),
                        ],
                    ));
                }
            }
        }
        sc(&t, 2)
    }));
    // 8
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..=(k - i) {
                for mu in 0..n {
                    t = t.add(&corr0(
                        e,
                        &[
                            prod([
                                g_of(prod([epow(i + j - 2), x.clone(), raised(mu)])),
                                g_of(basis(mu)),
                            ]),
                            epow(k - i - j),
                            prod([y.clone(), z.clone()]),
                        ],
                    ));
                }
            }
        }
        t
    }));
    // 9
    {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..=(k - i) {
                for mu in 0..n {
                    t = t.add(&corr0(
                        e,
                        &[
                            prod([g_of(prod([epow(k - j - 1), raised(mu)])), g_of(basis(mu))]),
                            epow(j - 1),
                            triple.clone(),
                        ],
                    ));
                }
            }
        }
        res = res.sub(&sc(&t, 6));
    }
    res
}

/// Trace-contracted 4-point against the distinguished 4-point (fourth
/// appendix identity).
pub fn a04(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let mut res = zero(e);
    for rho in 0..n {
        for mu in 0..n {
            let left = corr0(e, &[epow(k), basis(rho), raised(rho), raised(mu)]);
            if left.is_empty() {
                continue;
            }
            let right = corr0(e, &[basis(mu), basis(a), basis(b), basis(s)]);
            res = res.add(&left.mul(&right));
        }
    }
    for i in 1..=k {
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), delta(), epow(i - 1)]),
                basis(a),
                basis(b),
                basis(s),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(prod([delta(), epow(i - 1)])), epow(k - i)]),
                basis(a),
                basis(b),
                basis(s),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[prod([delta(), epow(k - 1)]), basis(a), basis(b), basis(s)],
        ));
    }
    res
}

fn fixed_perm(v: &[FE; 3]) -> (FE, FE, FE) {
    (v[0].clone(), v[1].clone(), v[2].clone())
}

/// Graded-volume slot rewrite (fifth appendix identity), per (k, i).
pub fn a05(e: &Engine, k: i64, i: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let v = [basis(a), basis(b), basis(s)];
    let (x, y, z) = fixed_perm(&v);
    let mut res = corr0(
        e,
        &[
            prod([g_of(epow(k - i)), delta()]),
            x.clone(),
            y.clone(),
            prod([epow(i - 1), z.clone()]),
        ],
    );
    res = res.sub(&corr0(
        e,
        &[
            prod([g_of(epow(k - i)), delta(), epow(i - 1)]),
            basis(a),
            basis(b),
            basis(s),
        ],
    ));
    for j in 1..i {
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), epow(i - j - 1)]),
                delta(),
                g_of(prod([epow(j - 1), basis(a), basis(b), basis(s)])),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), delta(), epow(j - 1)]),
                g_of(prod([epow(i - j - 1), y.clone(), z.clone()])),
                x.clone(),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), delta(), epow(i - j - 1)]),
                g_of(prod([epow(j - 1), x.clone(), z.clone()])),
                y.clone(),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), delta(), epow(j - 1)]),
                g_of(prod([epow(i - j - 1), z.clone()])),
                prod([x.clone(), y.clone()]),
            ],
        ));
    }
    res
}

/// Wrapped graded-volume slot rewrite (sixth appendix identity).
pub fn a06(e: &Engine, k: i64, i: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let v = [basis(a), basis(b), basis(s)];
    let (x, y, z) = fixed_perm(&v);
    let head = g_of(prod([delta(), epow(k - i)]));
    let mut res = corr0(
        e,
        &[
            head.clone(),
            x.clone(),
            y.clone(),
            prod([epow(i - 1), z.clone()]),
        ],
    );
    res = res.sub(&corr0(
        e,
        &[
            prod([head.clone(), epow(i - 1)]),
            basis(a),
            basis(b),
            basis(s),
        ],
    ));
    for j in 1..i {
        res = res.add(&corr0(
            e,
            &[
                head.clone(),
                epow(i - j - 1),
                g_of(prod([epow(j - 1), basis(a), basis(b), basis(s)])),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([head.clone(), epow(j - 1)]),
                g_of(prod([epow(i - j - 1), y.clone(), z.clone()])),
                x.clone(),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([head.clone(), epow(i - j - 1)]),
                g_of(prod([epow(j - 1), x.clone(), z.clone()])),
                y.clone(),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                prod([head.clone(), epow(j - 1)]),
                g_of(prod([epow(i - j - 1), z.clone()])),
                prod([x.clone(), y.clone()]),
            ],
        ));
    }
    res
}

/// Volume-times-Euler slot rewrite (seventh appendix identity).
pub fn a07(e: &Engine, k: i64, i: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let v = [basis(a), basis(b), basis(s)];
    let (x, y, z) = fixed_perm(&v);
    let mut res = corr0(
        e,
        &[
            prod([delta(), epow(k - i)]),
            x.clone(),
            y.clone(),
            prod([epow(i - 1), z.clone()]),
        ],
    );
    res = res.sub(&corr0(
        e,
        &[prod([delta(), epow(k - 1)]), basis(a), basis(b), basis(s)],
    ));
    for j in 1..i {
        res = res.add(&corr0(
            e,
            &[
                delta(),
                epow(k - j - 1),
                g_of(prod([epow(j - 1), basis(a), basis(b), basis(s)])),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([delta(), epow(k - i + j - 1)]),
                g_of(prod([epow(i - j - 1), y.clone(), z.clone()])),
                x.clone(),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([delta(), epow(k - j - 1)]),
                g_of(prod([epow(j - 1), x.clone(), z.clone()])),
                y.clone(),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                prod([delta(), epow(k - i + j - 1)]),
                g_of(prod([epow(i - j - 1), z.clone()])),
                prod([x.clone(), y.clone()]),
            ],
        ));
    }
    res
}

/// Product-slot rewrite for the graded Euler factor (eighth appendix
/// identity).
pub fn a08(e: &Engine, k: i64, i: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let v = [basis(a), basis(b), basis(s)];
    let (x, y, z) = fixed_perm(&v);
    let triple = prod([basis(a), basis(b), basis(s)]);
    let mut res = corr0(
        e,
        &[
            g_of(epow(k - i)),
            delta(),
            x.clone(),
            prod([epow(i - 1), y.clone(), z.clone()]),
        ],
    );
    res = res.sub(&corr0(
        e,
        &[
            prod([delta(), epow(i - 1)]),
            prod([y.clone(), z.clone()]),
            x.clone(),
            g_of(epow(k - i)),
        ],
    ));
    for j in 1..i {
        res = res.sub(&corr0(
            e,
            &[
                prod([g_of(prod([delta(), epow(i - j - 1)])), g_of(epow(k - i))]),
                epow(j - 1),
                triple.clone(),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), epow(i - j - 1)]),
                delta(),
                g_of(prod([epow(j - 1), basis(a), basis(b), basis(s)])),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), delta(), epow(j - 1)]),
                g_of(prod([epow(i - j - 1), y.clone(), z.clone()])),
                x.clone(),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), epow(i - j - 1)]),
                g_of(prod([delta(), epow(j - 1), x.clone()])),
                prod([y.clone(), z.clone()]),
            ],
        ));
    }
    res
}

/// Graded-slot exchange with the volume field (ninth appendix identity).
pub fn a09(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let v = [basis(a), basis(b), basis(s)];
    let (x, y, z) = fixed_perm(&v);
    let mut res = corr0(
        e,
        &[
            prod([epow(k - 1), y.clone()]),
            delta(),
            x.clone(),
            g_of(z.clone()),
        ],
    );
    res = res.sub(&corr0(
        e,
        &[
            prod([delta(), epow(k - 1)]),
            x.clone(),
            y.clone(),
            g_of(z.clone()),
        ],
    ));
    for i in 1..k {
        res = res.sub(&corr0(
            e,
            &[
                prod([g_of(prod([delta(), epow(k - i - 1)])), epow(i - 1)]),
                prod([x.clone(), y.clone()]),
                g_of(z.clone()),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([delta(), epow(k - i - 1)]),
                g_of(prod([epow(i - 1), x.clone(), y.clone()])),
                g_of(z.clone()),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                prod([delta(), epow(i - 1)]),
                g_of(prod([epow(k - i - 1), y.clone()])),
                prod([x.clone(), g_of(z.clone())]),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                epow(k - i - 1),
                g_of(prod([delta(), epow(i - 1), x.clone()])),
                prod([y.clone(), g_of(z.clone())]),
            ],
        ));
    }
    res
}

/// First product-slot reduction of graded 4-point functions (tenth
/// appendix identity).
pub fn a10(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let v = [basis(a), basis(b), basis(s)];
    let mut res = zero(e);
    // left side
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([
                            g_of(prod([epow(k - i), x.clone()])),
                            epow(i - 1),
                            raised(mu),
                        ]),
                        y.clone(),
                        z.clone(),
                        basis(mu),
                    ],
                ));
            }
        }
        t
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(i - 1), raised(mu)]),
                        prod([x.clone(), y.clone()]),
                        z.clone(),
                        basis(mu),
                    ],
                ));
            }
        }
        fr(&t, 1, 6)
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(i - 1), x.clone(), raised(mu)]),
                        y.clone(),
                        z.clone(),
                        basis(mu),
                    ],
                ));
            }
        }
        fr(&t, 1, 3)
    }));
    // right side
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([epow(k - i), x.clone()])), y.clone()]),
                        basis(mu),
                        raised(mu),
                        prod([epow(i - 1), z.clone()]),
                    ],
                ));
            }
        }
        t
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(i - 1)]),
                    g_of(prod([epow(k - i), x.clone()])),
                    y.clone(),
                    z.clone(),
                ],
            ));
        }
        t
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(prod([epow(k - i), x.clone()])),
                        y.clone(),
                        prod([z.clone(), raised(mu)]),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        t
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(i - 1)]),
                    prod([x.clone(), y.clone()]),
                    z.clone(),
                    g_of(epow(k - i)),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(epow(k - i)),
                        prod([x.clone(), y.clone(), raised(mu)]),
                        z.clone(),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        fr(&t, 1, 3)
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(i - 1)]),
                    x.clone(),
                    y.clone(),
                    prod([g_of(epow(k - i)), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 6)
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(epow(k - i)),
                        prod([x.clone(), y.clone()]),
                        prod([z.clone(), raised(mu)]),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        fr(&t, 1, 6)
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([delta(), epow(i - j - 1)])), epow(j - 1)]),
                        g_of(prod([epow(k - i), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        t
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(i - j - 1), x.clone()]),
                        g_of(prod([epow(k - i), y.clone()])),
                        g_of(prod([epow(j - 1), z.clone()])),
                    ],
                ));
            }
        }
        t
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for _j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(i - 2)]),
                        g_of(prod([epow(k - i), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        t
    }));
    res
}

/// Second product-slot reduction (eleventh appendix identity).
pub fn a11(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let v = [basis(a), basis(b), basis(s)];
    let triple = prod([basis(a), basis(b), basis(s)]);
    let mut res = zero(e);
    {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(i - 1)]),
                        basis(mu),
                        raised(mu),
                        triple.clone(),
                    ],
                ));
            }
        }
        res = res.sub(&sc(&t, 2));
    }
    {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([delta(), epow(i - j - 1)])), g_of(epow(k - i))]),
                        epow(j - 1),
                        triple.clone(),
                    ],
                ));
            }
        }
        res = res.sub(&sc(&t, 2));
    }
    {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(epow(k - i)),
                        epow(i - j - 1),
                        g_of(prod([delta(), epow(j - 1), basis(a), basis(b), basis(s)])),
                    ],
                ));
            }
        }
        res = res.add(&sc(&t, 2));
    }
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(epow(k - i)),
                        x.clone(),
                        prod([y.clone(), z.clone(), raised(mu)]),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        fr(&t, 1, 3)
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(epow(k - i)),
                        prod([x.clone(), y.clone()]),
                        prod([z.clone(), raised(mu)]),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        fr(&t, 1, 3)
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            t = t.add(&corr0(
                e,
                &[
                    g_of(epow(k - i)),
                    prod([delta(), epow(i - 1)]),
                    prod([x.clone(), y.clone()]),
                    z.clone(),
                ],
            ));
        }
        fr(&t, 1, 3)
    }));
    res
}

/// Third product-slot reduction (twelfth appendix identity).
pub fn a12(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let v = [basis(a), basis(b), basis(s)];
    let mut res = sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(prod([epow(k - i), x.clone()])),
                        y.clone(),
                        prod([z.clone(), raised(mu)]),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        t
    });
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(i - 1)]),
                    g_of(prod([epow(k - i), x.clone()])),
                    y.clone(),
                    z.clone(),
                ],
            ));
        }
        fr(&t, 1, 2)
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(prod([epow(k - i), x.clone()])),
                        basis(mu),
                        raised(mu),
                        prod([epow(i - 1), y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([delta(), epow(i - j - 1)])), epow(j - 1)]),
                        g_of(prod([epow(k - i), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(i - j - 1)]),
                        g_of(prod([epow(k - i), x.clone()])),
                        g_of(prod([epow(j - 1), y.clone(), z.clone()])),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for _j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([delta(), epow(i - 2)]),
                        g_of(prod([epow(k - i), x.clone()])),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        fr(&t, 1, 2)
    }));
    res
}

/// Fourth product-slot reduction (thirteenth appendix identity); k ≥ 1.
pub fn a13(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let v = [basis(a), basis(b), basis(s)];
    let triple = prod([basis(a), basis(b), basis(s)]);
    let mut res = zero(e);
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for mu in 0..n {
            t = t.add(&corr0(
                e,
                &[
                    prod([g_of(prod([epow(k - 1), raised(mu)])), x.clone()]),
                    y.clone(),
                    z.clone(),
                    basis(mu),
                ],
            ));
        }
        t
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for mu in 0..n {
            t = t.add(&corr0(
                e,
                &[
                    prod([epow(k - 1), x.clone()]),
                    basis(mu),
                    raised(mu),
                    prod([y.clone(), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 2)
    }));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for j in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    epow(k - j - 1),
                    g_of(prod([delta(), epow(j - 1), x.clone()])),
                    prod([y.clone(), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 2)
    }));
    {
        let mut t = zero(e);
        for j in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    g_of(prod([delta(), epow(k - j - 1)])),
                    epow(j - 1),
                    triple.clone(),
                ],
            ));
        }
        res = res.add(&sc(&t, 3));
    }
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for j in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(k - j - 1)]),
                    g_of(prod([epow(j - 1), x.clone()])),
                    prod([y.clone(), z.clone()]),
                ],
            ));
        }
        fr(&t, 1, 2)
    }));
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for j in 1..k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([
                            g_of(prod([epow(k - j - 1), x.clone(), raised(mu)])),
                            g_of(basis(mu)),
                        ]),
                        epow(j - 1),
                        prod([y.clone(), z.clone()]),
                    ],
                ));
            }
        }
        t
    }));
    {
        let mut t = zero(e);
        for j in 1..k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(prod([epow(k - j - 1), raised(mu)])), g_of(basis(mu))]),
                        epow(j - 1),
                        triple.clone(),
                    ],
                ));
            }
        }
        res = res.sub(&sc(&t, 6));
    }
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for j in 1..k {
            t = t.add(&corr0(
                e,
                &[
                    prod([delta(), epow(k - j - 1)]),
                    g_of(prod([epow(j - 1), x.clone(), y.clone()])),
                    z.clone(),
                ],
            ));
        }
        fr(&t, 1, 2)
    }));
    res = res.add(&sc(
        &corr0(
            e,
            &[prod([delta(), epow(k - 1)]), basis(a), basis(b), basis(s)],
        ),
        3,
    ));
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for mu in 0..n {
            t = t.add(&corr0(
                e,
                &[
                    g_of(prod([epow(k - 1), x.clone(), raised(mu)])),
                    y.clone(),
                    z.clone(),
                    basis(mu),
                ],
            ));
        }
        t
    }));
    res
}

/// Supplementary: graded-Euler-volume product expansion.
pub fn s01(e: &Engine, k: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let v = [basis(a), basis(b), basis(s)];
    let triple = prod([basis(a), basis(b), basis(s)]);
    let mut res = zero(e);
    for i in 1..=k {
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), epow(i - 1), delta()]),
                basis(a),
                basis(b),
                basis(s),
            ],
        ));
    }
    for i in 1..k {
        for mu in 0..n {
            res = res.add(&corr0(
                e,
                &[
                    prod([epow(i - 1), basis(a), basis(b), basis(s)]),
                    basis(mu),
                    raised(mu),
                    g_of(epow(k - i)),
                ],
            ));
        }
    }
    res = res.sub(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(i - 1), x.clone(), raised(mu)]),
                        y.clone(),
                        z.clone(),
                        basis(mu),
                    ],
                ));
            }
        }
        fr(&t, 1, 3)
    }));
    {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(i - 1)]),
                        basis(mu),
                        raised(mu),
                        triple.clone(),
                    ],
                ));
            }
        }
        res = res.sub(&t);
    }
    {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        g_of(epow(k - i)),
                        epow(i - j - 1),
                        g_of(prod([delta(), epow(j - 1), basis(a), basis(b), basis(s)])),
                    ],
                ));
            }
        }
        res = res.add(&t);
    }
    res = res.add(&sym3(e, &v, |x, y, z| {
        let mut t = zero(e);
        for i in 1..=k {
            for mu in 0..n {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), raised(mu)]),
                        prod([x.clone(), y.clone()]),
                        z.clone(),
                        prod([epow(i - 1), basis(mu)]),
                    ],
                ));
            }
        }
        fr(&t, 1, 6)
    }));
    {
        let mut t = zero(e);
        for i in 1..=k {
            for j in 1..i {
                t = t.add(&corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(i - j - 1)]),
                        delta(),
                        g_of(prod([epow(j - 1), basis(a), basis(b), basis(s)])),
                    ],
                ));
            }
        }
        res = res.add(&t);
    }
    {
        let mut t = zero(e);
        for i in 2..=k {
            t = t.add(&sc(
                &corr0(
                    e,
                    &[
                        prod([g_of(epow(k - i)), epow(i - 2)]),
                        delta(),
                        triple.clone(),
                    ],
                ),
                i - 1,
            ));
        }
        res = res.sub(&t);
    }
    res
}

/// Supplementary: trace-slot exchange for graded product slots, per (k, i).
pub fn s02(e: &Engine, k: i64, i: i64, a: usize, b: usize, s: usize) -> TruncatedSeries {
    let n = e.n();
    let v = [basis(a), basis(b), basis(s)];
    let (x, y, z) = fixed_perm(&v);
    let mut res = zero(e);
    for mu in 0..n {
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), x.clone(), y.clone()]),
                basis(mu),
                raised(mu),
                prod([epow(i - 1), z.clone()]),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([epow(i - 1), basis(a), basis(b), basis(s)]),
                basis(mu),
                raised(mu),
                g_of(epow(k - i)),
            ],
        ));
        res = res.sub(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), raised(mu)]),
                prod([x.clone(), y.clone()]),
                z.clone(),
                prod([epow(i - 1), basis(mu)]),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                g_of(epow(k - i)),
                prod([x.clone(), y.clone()]),
                prod([epow(i - 1), basis(mu)]),
                prod([z.clone(), raised(mu)]),
            ],
        ));
    }
    for j in 1..i {
        res = res.sub(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), epow(i - j - 1)]),
                delta(),
                g_of(prod([epow(j - 1), basis(a), basis(b), basis(s)])),
            ],
        ));
        res = res.add(&corr0(
            e,
            &[
                prod([g_of(epow(k - i)), delta(), epow(j - 1)]),
                g_of(prod([epow(i - j - 1), z.clone()])),
                prod([x.clone(), y.clone()]),
            ],
        ));
    }
    res
}
