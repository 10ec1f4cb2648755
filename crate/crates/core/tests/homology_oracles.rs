mod common;

use common::*;
use gorenstein_core::homology::{
    dual_star, ext_dim, ext_dims, ext_vanishing_certificate, is_gorenstein_projective,
    is_projective, is_self_injective, is_self_orthogonal, projective_cover, stable_hom_dim, syzygy,
    transpose, vs_dual, ExtContext, GpVerdict, Resolution, Verdict,
};
use gorenstein_core::{hom_dim, is_isomorphic, Matrix, Representation, Side};
use proptest::prelude::*;

/// `dim Ext^1(X, N)` from extension cocycles: tuples `c_a: X_s -> N_t` whose
/// middle term `[[N(a), c_a], [0, X(a)]]` satisfies every relation, modulo
/// the coboundaries `N(a) h_s - h_t X(a)`.
fn ext1_by_cocycles(x: &Representation, n: &Representation) -> usize {
    let alg = x.algebra();
    let f = alg.field();
    let q = alg.quiver();
    let offsets: Vec<usize> = q
        .arrows()
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += n.dim_at(a.target) * x.dim_at(a.source);
            Some(o)
        })
        .collect();
    let cdim: usize = q.arrows().iter().map(|a| n.dim_at(a.target) * x.dim_at(a.source)).sum();
    let path_matrix = |m: &Representation, arrows: &[usize], start: usize| -> Matrix {
        let mut acc = Matrix::identity(f, m.dim_at(start));
        for &a in arrows {
            acc = m.action(a).mul(&acc);
        }
        acc
    };
    let mut columns = Vec::new();
    for k in 0..cdim {
        // unit cocycle
        let c: Vec<Matrix> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let (r, cc) = (n.dim_at(arr.target), x.dim_at(arr.source));
                let mut m = Matrix::zeros(f, r, cc);
                if k >= offsets[a] && k < offsets[a] + r * cc {
                    let e = k - offsets[a];
                    m.set(e / cc, e % cc, 1);
                }
                m
            })
            .collect();
        let mut image = Vec::new();
        for rel in alg.relations() {
            let (_, p0) = &rel.terms()[0];
            let (s, t) = (p0.source, q.path_target(p0));
            let mut total = Matrix::zeros(f, n.dim_at(t), x.dim_at(s));
            for (lambda, p) in rel.terms() {
                let arrows = &p.arrows;
                for j in 0..arrows.len() {
                    let before = path_matrix(x, &arrows[..j], p.source);
                    let mid_source = q.arrow(arrows[j]).target;
                    let after = path_matrix(n, &arrows[j + 1..], mid_source);
                    let term = after.mul(&c[arrows[j]]).mul(&before);
                    total = total.add(&term.scale(*lambda));
                }
            }
            image.extend(total.to_rows().into_iter().flatten());
        }
        columns.push(image);
    }
    let rows = columns.first().map_or(0, Vec::len);
    let rank = if rows == 0 || cdim == 0 {
        0
    } else {
        Matrix::from_columns(f, rows, &columns).rank()
    };
    let cocycles = cdim - rank;
    let vertex_maps: usize = (0..alg.vertex_count()).map(|v| x.dim_at(v) * n.dim_at(v)).sum();
    let coboundaries = vertex_maps - hom_dim(x, n).unwrap();
    cocycles - coboundaries
}

#[test]
fn ext1_matches_cocycle_oracle() {
    for c in corpus() {
        for m in &c.modules {
            for n in &c.modules {
                assert_eq!(ext_dim(m, n, 1).unwrap(), ext1_by_cocycles(m, n), "{}", c.name);
            }
        }
    }
    for alg in [square(3), truncated(3, 2), linear(4, 5)] {
        let ms: Vec<Representation> = (0..alg.vertex_count())
            .flat_map(|v| {
                [
                    Representation::simple(&alg, v).unwrap(),
                    Representation::projective(&alg, v).unwrap(),
                ]
            })
            .collect();
        for m in &ms {
            for n in &ms {
                assert_eq!(ext_dim(m, n, 1).unwrap(), ext1_by_cocycles(m, n));
            }
        }
    }
}

#[test]
fn higher_ext_matches_shifted_cocycle_oracle() {
    for c in corpus() {
        for m in c.modules.iter().take(6) {
            for n in &c.modules {
                let dims = ext_dims(m, n, 6).unwrap();
                for (i, &d) in dims.iter().enumerate() {
                    let shifted = syzygy(m, i);
                    assert_eq!(d, ext1_by_cocycles(&shifted, n), "{} degree {}", c.name, i + 1);
                }
            }
        }
    }
}

#[test]
fn cyclic_simples_shift_around_the_cycle() {
    for n in [3usize, 4, 5, 8] {
        let alg = cyclic(n, 2);
        for j in 0..n {
            let s = Representation::simple(&alg, j).unwrap();
            let cover = projective_cover(&s);
            assert_eq!(cover.vertices, vec![j]);
            let omega = syzygy(&s, 1);
            let next = Representation::simple(&alg, (j + 1) % n).unwrap();
            assert!(is_isomorphic(&omega, &next).unwrap().is_yes());
            assert!(is_isomorphic(&syzygy(&s, n), &s).unwrap().is_yes());
            assert!(!is_projective(&s));
            assert_eq!(stable_hom_dim(&s, &s).unwrap(), 1);
            let dims = ext_dims(&s, &s, n + 1).unwrap();
            for (i, &d) in dims.iter().enumerate() {
                assert_eq!(d, usize::from(i + 1 == n), "n = {n}, degree {}", i + 1);
            }
        }
    }
}

#[test]
fn ext_from_projectives_vanishes() {
    let alg = cyclic(5, 3);
    let lambda = Representation::regular(&alg, Side::Left);
    for v in 0..5 {
        let p = Representation::projective(&alg, v).unwrap();
        assert!(is_projective(&p));
        assert_eq!(ext_dims(&p, &lambda, 4).unwrap(), vec![0; 4]);
        assert_eq!(stable_hom_dim(&p, &lambda).unwrap(), 0);
        assert!(transpose(&p).is_zero());
    }
    assert!(is_projective(&Representation::zero(&alg)));
}

#[test]
fn resolutions_are_exact_and_minimal() {
    for c in corpus() {
        for m in &c.modules {
            let mut r = Resolution::with_length(m, 5);
            assert!(r.verify(), "{}", c.name);
            for k in 0..5 {
                let mut tops = vec![0; c.algebra.vertex_count()];
                for &v in &r.term(k).vertices {
                    tops[v] += 1;
                }
                assert_eq!(tops, r.syzygy(k).top_dims());
            }
        }
    }
}

#[test]
fn transpose_of_cyclic_simple() {
    for n in [4usize, 5] {
        let alg = cyclic(n, 2);
        let op = alg.opposite();
        for j in 0..n {
            let s = Representation::simple(&alg, j).unwrap();
            let tr = transpose(&s);
            assert!(tr.algebra().same_as(&op));
            // Ω² S(j) = S(j+2); its dual has top at j+1 over the opposite algebra
            let expected = Representation::simple(&op, (j + 1) % n).unwrap();
            assert!(is_isomorphic(&tr, &expected).unwrap().is_yes(), "n = {n}, j = {j}");
            let via_syzygy = dual_star(&syzygy(&s, 2));
            assert!(is_isomorphic(&tr, &via_syzygy).unwrap().is_yes());
        }
    }
}

#[test]
fn double_transpose_preserves_stable_hom() {
    for c in corpus() {
        for m in &c.modules {
            let trtr = transpose(&transpose(m));
            assert!(trtr.algebra().same_as(&c.algebra));
            for x in &c.modules {
                assert_eq!(
                    stable_hom_dim(&trtr, x).unwrap(),
                    stable_hom_dim(m, x).unwrap(),
                    "{}",
                    c.name
                );
            }
        }
    }
}

#[test]
fn star_of_projectives_is_projective() {
    for c in corpus() {
        let op = c.algebra.opposite();
        for v in 0..c.algebra.vertex_count() {
            let p = Representation::projective(&c.algebra, v).unwrap();
            let ps = dual_star(&p);
            let expected = Representation::projective(&op, v).unwrap();
            assert!(is_isomorphic(&ps, &expected).unwrap().is_yes());
        }
    }
}

#[test]
fn vector_space_duality() {
    let l4 = cyclic(4, 2);
    let right = Representation::regular(&l4, Side::Right);
    let d = vs_dual(&right);
    assert!(is_isomorphic(&d, &Representation::regular(&l4, Side::Left)).unwrap().is_yes());
    for c in corpus() {
        for m in &c.modules {
            let dd = vs_dual(&vs_dual(m));
            assert_eq!(&dd, m);
        }
    }
    let s = Representation::simple(&l4, 2).unwrap();
    assert_eq!(vs_dual(&s), Representation::simple(&l4.opposite(), 2).unwrap());
    for n in [3, 4, 5, 8] {
        assert!(is_self_injective(&cyclic(n, 2)));
    }
    assert!(!is_self_injective(&a2(2)));
    assert!(!is_self_injective(&linear(3, 2)));
    assert!(is_self_injective(&semisimple(3, 2)));
    assert!(is_self_injective(&truncated(3, 2)));
}

#[test]
fn certificates_for_cyclic_simples() {
    let alg = cyclic(5, 2);
    let lambda = Representation::regular(&alg, Side::Left);
    let s = Representation::simple(&alg, 0).unwrap();
    let cert = ext_vanishing_certificate(&s, &lambda, 64, ExtContext::AgainstRegular).unwrap();
    assert_eq!(cert.verdict, Verdict::CertifiedVanishing { repeat: (0, 5) });
    assert!(cert.witness.as_ref().unwrap().verify());
    assert_eq!(cert.ext_dims, vec![0; 5]);

    let so = is_self_orthogonal(&s, 64).unwrap();
    assert_eq!(so.verdict, Verdict::NonzeroAt { degree: 5, dim: 1 });
    let short = is_self_orthogonal(&s, 3).unwrap();
    assert_eq!(short.verdict, Verdict::UnknownBeyond { bound: 3 });
    assert_eq!(short.vanishing_range(), 3);

    let gp = is_gorenstein_projective(&s, 64).unwrap();
    assert_eq!(gp.verdict, GpVerdict::Certified);
    assert!(is_self_orthogonal(&s, 0).is_err());
}

#[test]
fn certificates_for_projectives_and_zero() {
    let alg = cyclic(4, 2);
    let p = Representation::projective(&alg, 1).unwrap();
    let so = is_self_orthogonal(&p, 64).unwrap();
    assert_eq!(so.verdict, Verdict::CertifiedVanishing { repeat: (1, 2) });
    assert_eq!(is_gorenstein_projective(&p, 64).unwrap().verdict, GpVerdict::Certified);
    let z = Representation::zero(&alg);
    let so = is_self_orthogonal(&z, 64).unwrap();
    assert_eq!(so.verdict, Verdict::CertifiedVanishing { repeat: (0, 1) });
    assert_eq!(is_gorenstein_projective(&z, 64).unwrap().verdict, GpVerdict::Certified);
}

#[test]
fn hereditary_simple_is_not_gorenstein_projective() {
    let alg = a2(2);
    let s1 = Representation::simple(&alg, 0).unwrap();
    let lambda = Representation::regular(&alg, Side::Left);
    assert_eq!(ext_dim(&s1, &lambda, 1).unwrap(), 1);
    let gp = is_gorenstein_projective(&s1, 64).unwrap();
    assert_eq!(gp.verdict, GpVerdict::NotGorensteinProjective);
    assert_eq!(gp.module.verdict, Verdict::NonzeroAt { degree: 1, dim: 1 });
    let s2 = Representation::simple(&alg, 1).unwrap();
    assert!(is_projective(&s2));
    assert_eq!(is_gorenstein_projective(&s2, 64).unwrap().verdict, GpVerdict::Certified);
}

#[test]
fn self_injective_ext_against_regular_vanishes() {
    for c in corpus() {
        if !is_self_injective(&c.algebra) {
            continue;
        }
        let lambda = Representation::regular(&c.algebra, Side::Left);
        for m in &c.modules {
            assert_eq!(ext_dims(m, &lambda, 6).unwrap(), vec![0; 6]);
        }
    }
}

fn gp_modules() -> Vec<(usize, Representation)> {
    corpus()
        .iter()
        .enumerate()
        .flat_map(|(k, c)| {
            c.modules
                .iter()
                .filter(|m| is_gorenstein_projective(m, 64).unwrap().verdict == GpVerdict::Certified)
                .map(move |m| (k, m.clone()))
        })
        .collect()
}

#[test]
fn star_is_involutive_on_gorenstein_projectives() {
    for (_, m) in gp_modules() {
        let mss = dual_star(&dual_star(&m));
        match is_isomorphic(&mss, &m).unwrap() {
            gorenstein_core::Isomorphism::Yes(w) => assert!(w.verify()),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn star_preserves_ext_tables_on_gorenstein_projectives() {
    for (_, m) in gp_modules() {
        let ms = dual_star(&m);
        assert_eq!(ext_dims(&m, &m, 6).unwrap(), ext_dims(&ms, &ms, 6).unwrap());
    }
}

#[test]
fn dimension_shift_equals_stable_hom() {
    for c in corpus() {
        let lambda = Representation::regular(&c.algebra, Side::Left);
        for m in &c.modules {
            let cert = ext_vanishing_certificate(m, &lambda, 64, ExtContext::AgainstRegular).unwrap();
            if !cert.verdict.is_certified() {
                continue;
            }
            let mut r = Resolution::new(m);
            for n in &c.modules {
                let dims = ext_dims(m, n, 6).unwrap();
                for i in 1..=6 {
                    let omega = r.syzygy(i).clone();
                    assert_eq!(dims[i - 1], stable_hom_dim(&omega, n).unwrap(), "{} i = {i}", c.name);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn dimension_shift(c in 0usize..4, i in 0usize..64, j in 0usize..64, deg in 1usize..5) {
        let ms = &corpus()[c].modules;
        let (m, n) = (&ms[i % ms.len()], &ms[j % ms.len()]);
        let omega = syzygy(m, 1);
        prop_assert_eq!(ext_dim(m, n, deg + 1).unwrap(), ext_dim(&omega, n, deg).unwrap());
    }

    #[test]
    fn syzygy_is_additive(c in 0usize..4, i in 0usize..64, j in 0usize..64) {
        let ms = &corpus()[c].modules;
        let (m, n) = (&ms[i % ms.len()], &ms[j % ms.len()]);
        let lhs = syzygy(&m.direct_sum(n).unwrap(), 1);
        let rhs = syzygy(m, 1).direct_sum(&syzygy(n, 1)).unwrap();
        prop_assert!(is_isomorphic(&lhs, &rhs).unwrap().is_yes());
    }

    #[test]
    fn stable_hom_bounded_by_hom(c in 0usize..4, i in 0usize..64, j in 0usize..64) {
        let ms = &corpus()[c].modules;
        let (m, n) = (&ms[i % ms.len()], &ms[j % ms.len()]);
        prop_assert!(stable_hom_dim(m, n).unwrap() <= hom_dim(m, n).unwrap());
    }

    #[test]
    fn stable_hom_survives_syzygy_on_gorenstein_projectives(i in 0usize..256, j in 0usize..256) {
        let gp = gp_modules();
        let (cm, m) = &gp[i % gp.len()];
        let (cn, n) = &gp[j % gp.len()];
        prop_assume!(cm == cn);
        prop_assert_eq!(
            stable_hom_dim(m, n).unwrap(),
            stable_hom_dim(&syzygy(m, 1), &syzygy(n, 1)).unwrap()
        );
    }

    #[test]
    fn certified_vanishing_persists(i in 0usize..256) {
        let all: Vec<&Representation> = corpus().iter().flat_map(|c| c.modules.iter()).collect();
        let m = all[i % all.len()];
        let lambda = Representation::regular(m.algebra(), Side::Left);
        let cert = ext_vanishing_certificate(m, &lambda, 64, ExtContext::AgainstRegular).unwrap();
        if let Verdict::CertifiedVanishing { repeat: (_, b) } = cert.verdict {
            for k in b + 1..=b + 3 {
                prop_assert_eq!(ext_dim(m, &lambda, k).unwrap(), 0);
            }
        }
    }
}
