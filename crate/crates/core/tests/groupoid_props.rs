use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use simplie::field::{FieldSpec, Matrix, Scalar};
use simplie::fixtures;
use simplie::groupoid::{Bisection, FiniteGroupoid};
use simplie::steinberg::{in_matrix_commutator_span, matrix_trace_membership, AlgebraElement, SteinbergAlgebra};

fn field_of(p: u64) -> FieldSpec {
    if p == 0 {
        FieldSpec::Rationals
    } else {
        FieldSpec::prime(p).unwrap()
    }
}

fn corpus_index() -> impl Strategy<Value = usize> {
    0..fixtures::groupoid_corpus().len()
}

fn bisection_corpus() -> &'static [(FiniteGroupoid, Vec<Bisection>)] {
    static CACHE: OnceLock<Vec<(FiniteGroupoid, Vec<Bisection>)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        fixtures::groupoid_corpus()
            .into_iter()
            .map(|(_, g)| {
                let all = g.all_bisections();
                (g, all)
            })
            .collect()
    })
}

fn element(alg: &SteinbergAlgebra<'_>, coeffs: &[i64]) -> AlgebraElement {
    let f = alg.field();
    alg.element((0..alg.dim()).map(|i| f.from_i64(coeffs[i % coeffs.len()])).collect())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn convolution_is_associative_and_unital(
        gi in corpus_index(),
        p in prop::sample::select(vec![0u64, 2, 3]),
        a in prop::collection::vec(-3i64..=3, 1..24),
        b in prop::collection::vec(-3i64..=3, 1..24),
        c in prop::collection::vec(-3i64..=3, 1..24),
    ) {
        let (_, g) = &fixtures::groupoid_corpus()[gi];
        let alg = SteinbergAlgebra::new(g, field_of(p));
        let (x, y, z) = (element(&alg, &a), element(&alg, &b), element(&alg, &c));
        let xy_z = alg.convolve(&alg.convolve(&x, &y).unwrap(), &z).unwrap();
        let x_yz = alg.convolve(&x, &alg.convolve(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        prop_assert_eq!(alg.convolve(&x, &alg.identity()).unwrap(), x.clone());
        prop_assert_eq!(alg.convolve(&alg.identity(), &x).unwrap(), x.clone());
        let dist = alg.convolve(&x, &y.add(&z)).unwrap();
        prop_assert_eq!(dist, alg.convolve(&x, &y).unwrap().add(&alg.convolve(&x, &z).unwrap()));
    }

    #[test]
    fn bisections_form_an_inverse_semigroup(gi in corpus_index(), picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let (g, all) = &bisection_corpus()[gi];
        prop_assume!(!all.is_empty());
        let u = &all[picks[0].index(all.len())];
        let v = &all[picks[1].index(all.len())];
        let w = &all[picks[2].index(all.len())];
        let uv_w = g.bisection_product(&g.bisection_product(u, v).unwrap(), w).unwrap();
        let u_vw = g.bisection_product(u, &g.bisection_product(v, w).unwrap()).unwrap();
        prop_assert_eq!(uv_w, u_vw);
        let inv = g.bisection_inverse(u).unwrap();
        let uiu = g.bisection_product(&g.bisection_product(u, &inv).unwrap(), u).unwrap();
        prop_assert_eq!(&uiu, u);

        // Indicators of bisections multiply like the bisections.
        let alg = SteinbergAlgebra::new(g, FieldSpec::Rationals);
        let prod = alg
            .convolve(&alg.indicator(u.arrows().iter().copied()), &alg.indicator(v.arrows().iter().copied()))
            .unwrap();
        let uv = g.bisection_product(u, v).unwrap();
        prop_assert_eq!(prod, alg.indicator(uv.arrows().iter().copied()));
    }

    #[test]
    fn trace_zero_iff_commutator(
        p in prop::sample::select(vec![2u64, 3, 5]),
        d in 1usize..=3,
        entries in prop::collection::vec(0i64..5, 9),
    ) {
        let f = field_of(p);
        let m = Matrix::new(f, d, d, entries[..d * d].iter().map(|&x| f.from_i64(x)).collect()).unwrap();
        let by_span = in_matrix_commutator_span(&m).unwrap();
        prop_assert_eq!(by_span, m.trace().unwrap().is_zero());
        prop_assert_eq!(matrix_trace_membership(&m).unwrap(), by_span);
    }
}

#[test]
fn center_computations_agree_on_corpus() {
    for (name, g) in fixtures::groupoid_corpus() {
        for p in [0, 2, 3] {
            let alg = SteinbergAlgebra::new(&g, field_of(p));
            let a = alg.center_by_class_functions();
            let b = alg.center_by_commutant();
            assert_eq!(a, b, "{name} over {p}");
            assert_eq!(
                a.dim(),
                g.orbits()
                    .iter()
                    .map(|o| {
                        let u = *o.iter().next().unwrap();
                        // conjugacy classes of the isotropy group at u
                        let iso: Vec<usize> = (0..g.arrow_count())
                            .filter(|&x| g.src(x) == u && g.rng(x) == u)
                            .collect();
                        let mut classes: Vec<BTreeSet<usize>> = Vec::new();
                        for &x in &iso {
                            if classes.iter().any(|c| c.contains(&x)) {
                                continue;
                            }
                            classes.push(iso.iter().filter_map(|&y| g.conjugate(y, x)).collect());
                        }
                        classes.len()
                    })
                    .sum::<usize>(),
                "{name}: one central element per isotropy conjugacy class per orbit"
            );
        }
    }
}

#[test]
fn invariant_unit_subsets_give_class_functions() {
    for (name, g) in fixtures::groupoid_corpus() {
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let n = g.unit_count();
        for m in 0u32..(1 << n) {
            let units: BTreeSet<usize> = (0..n).filter(|u| m >> u & 1 == 1).collect();
            let f = alg.indicator(units.iter().map(|&u| g.unit_arrow(u)));
            assert_eq!(alg.is_class_function(&f), g.is_invariant(&units), "{name} {units:?}");
        }
    }
}

#[test]
fn central_elements_have_invariant_unit_support() {
    for (name, g) in fixtures::groupoid_corpus() {
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let center = alg.center_basis().unwrap();
        let f = FieldSpec::Rationals;
        let mut combos: Vec<Vec<Scalar>> = center.basis().to_vec();
        combos.push(
            center
                .basis()
                .iter()
                .enumerate()
                .fold(vec![f.zero(); alg.dim()], |acc, (i, v)| {
                    acc.iter()
                        .zip(v)
                        .map(|(a, b)| a + &(&f.from_i64(i as i64 + 2) * b))
                        .collect()
                }),
        );
        for v in combos {
            let support: BTreeSet<usize> = (0..g.unit_count()).filter(|&u| !v[g.unit_arrow(u)].is_zero()).collect();
            assert!(g.is_invariant(&support), "{name}: unit support {support:?}");
        }
    }
}

#[test]
fn double_commutator_nonzero_for_simple_nonsingleton() {
    for (name, g) in fixtures::effective_minimal_groupoids() {
        if g.is_singleton() {
            continue;
        }
        for p in [0, 2, 3, 5] {
            let alg = SteinbergAlgebra::new(&g, field_of(p));
            assert!(alg.double_commutator_subspace().dim() > 0, "{name} over {p}");
        }
    }
}

#[test]
fn doc_round_trip() {
    for (name, g) in fixtures::groupoid_corpus() {
        let json = serde_json::to_string(&g.to_doc()).unwrap();
        let back = FiniteGroupoid::from_doc(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, g, "{name}");
    }
}
