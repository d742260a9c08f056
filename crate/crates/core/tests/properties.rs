use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use proptest::prelude::*;

use coxeter_ehrhart::linalg::{
    chi, format_rational, integer_kernel_basis, parse_rational, rank, relative_volume, LatticeFlat,
};
use coxeter_ehrhart::oracle::{count_points, zonotope_contains, DEFAULT_MAX_BOX};
use coxeter_ehrhart::quasi::{evaluate_polynomial, interpolate};
use coxeter_ehrhart::signed_graph::{graph_from_roots, roots_from_graph, EdgeItem, SignedGraph};
use coxeter_ehrhart::zonotope::{ehrhart_almost_integral, independent_subsets};
use coxeter_ehrhart::{positive_roots, IntVector, RatVector, RootFamily, ZonotopeSpec};

fn small_vector(d: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, d)
}

fn nonzero_vector(d: usize) -> impl Strategy<Value = IntVector> {
    small_vector(d).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0)).prop_map(|v| IntVector::from_i64(&v))
}

fn vectors(d: usize, max: usize) -> impl Strategy<Value = Vec<IntVector>> {
    prop::collection::vec(nonzero_vector(d), 1..=max)
}

fn shift(d: usize) -> impl Strategy<Value = RatVector> {
    prop::collection::vec((1i64..=3).prop_flat_map(|q| (0..q, Just(q))), d).prop_map(|v| RatVector::from_ratios(&v))
}

fn almost_integral(max_gens: usize) -> impl Strategy<Value = ZonotopeSpec> {
    (1usize..=3).prop_flat_map(move |d| {
        (vectors(d, max_gens), shift(d)).prop_map(|(g, s)| ZonotopeSpec::new(g, s).unwrap())
    })
}

fn small(x: &BigInt) -> i64 {
    i64::try_from(x).unwrap()
}

/// Solve `Σ λ_i w_i = p` over the rationals, if the `w_i` are independent.
fn coordinates(w: &[IntVector], p: &[i64]) -> Option<Vec<Rational64>> {
    let d = p.len();
    let k = w.len();
    let mut rows: Vec<Vec<Rational64>> = (0..d)
        .map(|i| {
            let mut row: Vec<Rational64> = w.iter().map(|v| Rational64::from(small(&v.entries()[i]))).collect();
            row.push(Rational64::from(p[i]));
            row
        })
        .collect();
    for (r, c) in (0..k).enumerate() {
        let pivot = (r..d).find(|&i| !rows[i][c].is_zero())?;
        rows.swap(r, pivot);
        let lead = rows[r][c];
        for x in rows[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..d {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    if rows[k..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some(rows[..k].iter().map(|row| row[k]).collect())
}

/// Lattice points of the half-open parallelepiped `Σ [0, 1) w_i`.
fn parallelepiped_points(w: &[IntVector]) -> u64 {
    let d = w[0].dim();
    let bounds: Vec<(i64, i64)> = (0..d)
        .map(|i| {
            let (mut lo, mut hi) = (0, 0);
            for v in w {
                let x = small(&v.entries()[i]);
                if x < 0 {
                    lo += x;
                } else {
                    hi += x;
                }
            }
            (lo, hi)
        })
        .collect();
    let mut p: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    let mut count = 0;
    loop {
        if let Some(lambda) = coordinates(w, &p) {
            if lambda.iter().all(|l| *l >= Rational64::zero() && *l < Rational64::one()) {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                return count;
            }
            if p[i] < bounds[i].1 {
                p[i] += 1;
                break;
            }
            p[i] = bounds[i].0;
            i += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relative_volume_counts_parallelepiped_points(w in (1usize..=3).prop_flat_map(|d| vectors(d, d))) {
        prop_assume!(rank(&w).unwrap() == w.len());
        let vol = relative_volume(&w).unwrap();
        prop_assert_eq!(vol, BigInt::from(parallelepiped_points(&w)));
    }

    #[test]
    fn relative_volume_is_unimodular_invariant(w in (2usize..=3).prop_flat_map(|d| vectors(d, d)), c in -3i64..=3) {
        prop_assume!(w.len() >= 2 && rank(&w).unwrap() == w.len());
        let mut sheared = w.clone();
        sheared[0] = w[0].add(&w[1].scaled(&c.into()));
        prop_assert_eq!(relative_volume(&sheared).unwrap(), relative_volume(&w).unwrap());
        let mut scaled = w.clone();
        scaled[1] = w[1].scaled(&BigInt::from(-2));
        prop_assert_eq!(relative_volume(&scaled).unwrap(), relative_volume(&w).unwrap() * 2);
    }

    #[test]
    fn kernel_is_saturated_and_orthogonal(w in (1usize..=4).prop_flat_map(|d| (Just(d), vectors(d, 4)))) {
        let (d, w) = w;
        let kernel = integer_kernel_basis(&w, d).unwrap();
        prop_assert_eq!(kernel.len(), d - rank(&w).unwrap());
        for f in &kernel {
            for u in &w {
                prop_assert!(f.dot(u).is_zero());
            }
        }
        if !kernel.is_empty() {
            prop_assert_eq!(relative_volume(&kernel).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn chi_invariances(
        (v, w, z) in (1usize..=3).prop_flat_map(|d| (shift(d), vectors(d, 3), small_vector(d))),
        t in 1u64..=7,
    ) {
        let base = chi(&v, &w, t).unwrap();
        let moved = v.add_int(&IntVector::from_i64(&z));
        prop_assert_eq!(chi(&moved, &w, t).unwrap(), base);
        let negated: Vec<IntVector> = w.iter().map(IntVector::neg).collect();
        prop_assert_eq!(chi(&v, &negated, t).unwrap(), base);
        let period = v.denominator_lcm();
        let period = u64::try_from(&period).unwrap();
        prop_assert_eq!(chi(&v, &w, t + period).unwrap(), base);
        prop_assert_eq!(chi(&v, &w, period).unwrap(), 1);
        let flat = LatticeFlat::new(&v, &w).unwrap();
        prop_assert!(flat.pairings().iter().all(|p| *p >= BigRational::zero() && *p < BigRational::one()));
    }

    #[test]
    fn zonotope_formula_matches_oracle(z in almost_integral(4), t in 1u64..=4) {
        let q = ehrhart_almost_integral(&z).unwrap();
        let lcm = z.shift().denominator_lcm();
        prop_assert!(lcm.is_multiple_of(&BigInt::from(q.period())));
        let count = count_points(&z, t, DEFAULT_MAX_BOX).unwrap();
        prop_assert_eq!(q.evaluate(t), BigRational::from_integer(count.into()));
    }

    #[test]
    fn zonotope_json_round_trip(z in almost_integral(4)) {
        prop_assert_eq!(ZonotopeSpec::from_json(&z.to_json()).unwrap(), z);
    }

    #[test]
    fn generators_are_inside(z in almost_integral(4), t in 1u64..=3) {
        // t·v + Σ t·u_i over any subset is a vertex-type point of the dilate
        if z.shift().is_integral() {
            let mut p = z.shift().scaled(&t.into());
            for u in z.generators().iter().step_by(2) {
                p = p.add_int(&u.scaled(&t.into()));
            }
            let p = IntVector::new(p.entries().iter().map(|x| x.to_integer()).collect());
            prop_assert!(zonotope_contains(&z, t, &p).unwrap().verdict);
        }
    }

    #[test]
    fn independent_subsets_are_exactly_the_independent_ones(w in vectors(3, 5)) {
        let listed: Vec<Vec<usize>> = independent_subsets(&w).collect();
        let mut expected = 0;
        for mask in 0u32..(1 << w.len()) {
            let subset: Vec<IntVector> = (0..w.len()).filter(|k| mask >> k & 1 == 1).map(|k| w[k].clone()).collect();
            if subset.is_empty() || rank(&subset).unwrap() == subset.len() {
                expected += 1;
            }
        }
        prop_assert_eq!(listed.len(), expected);
        for s in &listed {
            let subset: Vec<IntVector> = s.iter().map(|&k| w[k].clone()).collect();
            prop_assert!(s.windows(2).all(|p| p[0] < p[1]));
            prop_assert!(subset.is_empty() || rank(&subset).unwrap() == subset.len());
        }
    }

    #[test]
    fn rational_text_round_trip(p in -1000i64..=1000, q in 1i64..=1000) {
        let x = BigRational::new(p.into(), q.into());
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn interpolation_inverts_evaluation(coeffs in prop::collection::vec(-50i64..=50, 1..=6)) {
        let coeffs: Vec<BigRational> = coeffs.into_iter().map(|c| BigRational::from_integer(c.into())).collect();
        let pts: Vec<_> = (0..coeffs.len() as i64)
            .map(|t| {
                let t = BigRational::from_integer((2 * t + 1).into());
                (t.clone(), evaluate_polynomial(&coeffs, &t))
            })
            .collect();
        let mut trimmed = coeffs.clone();
        while trimmed.last().is_some_and(Zero::is_zero) {
            trimmed.pop();
        }
        prop_assert_eq!(interpolate(&pts), trimmed);
    }
}

fn signed_graph_strategy() -> impl Strategy<Value = SignedGraph> {
    (1usize..=4).prop_flat_map(|n| {
        let mut items = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                items.push(EdgeItem::Positive(i, j));
                items.push(EdgeItem::Negative(i, j));
            }
            items.push(EdgeItem::Halfedge(i));
            items.push(EdgeItem::NegativeLoop(i));
        }
        prop::sample::subsequence(items.clone(), 0..=items.len())
            .prop_map(move |chosen| SignedGraph::new(n, chosen).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph_root_round_trip(g in signed_graph_strategy()) {
        let roots = roots_from_graph(&g);
        prop_assert_eq!(graph_from_roots(g.vertex_count(), &roots).unwrap(), g.clone());
        prop_assert_eq!(roots.len(), g.len());
    }

    #[test]
    fn pseudoforests_are_independent(g in signed_graph_strategy()) {
        let roots = roots_from_graph(&g);
        let independent = roots.is_empty() || rank(&roots).unwrap() == roots.len();
        prop_assert_eq!(g.classify().stats().is_some(), independent);
        if let Some(s) = g.classify().stats() {
            let vol = if roots.is_empty() { BigInt::one() } else { relative_volume(&roots).unwrap() };
            // halfedges have volume 1, loops 2e_i and unbalanced cycles contribute 2 each
            prop_assert_eq!(vol, BigInt::one() << (s.pc + s.lc));
            prop_assert_eq!(s.edge_count + s.tc, g.vertex_count());
        }
    }

    #[test]
    fn switching_preserves_structure(g in signed_graph_strategy(), m in 0usize..4, t in prop::sample::select(vec![1u64, 3, 5])) {
        prop_assume!(m < g.vertex_count());
        let n = g.vertex_count();
        let s = g.switch_vertex(m);
        prop_assert_eq!(s.switch_vertex(m), g.clone());
        prop_assert_eq!(s.classify(), g.classify());
        let half = RatVector::constant(n, BigRational::new(1.into(), 2.into()));
        let (a, b) = (roots_from_graph(&g), roots_from_graph(&s));
        if g.classify().stats().is_some() {
            prop_assert_eq!(chi(&half, &a, t).unwrap(), chi(&half, &b, t).unwrap());
            if !a.is_empty() {
                prop_assert_eq!(relative_volume(&a).unwrap(), relative_volume(&b).unwrap());
            }
        }
    }
}

#[test]
fn standard_permutahedra_grow_with_t() {
    for family in RootFamily::ALL {
        for n in 1..=4 {
            let set = positive_roots(family, n).unwrap();
            let q = coxeter_ehrhart::zonotope::ehrhart_standard_coxeter(family, n).unwrap();
            let values: Vec<BigRational> = (1..=8).map(|t| q.evaluate(t)).collect();
            assert!(values.windows(2).all(|w| w[0] <= w[1]), "{family}{n}");
            assert!(q.period() <= 2);
            assert_eq!(q.period() == 1, family.is_integral(n));
            assert_eq!(q.constituent(0)[0], BigRational::one(), "{family}{n} even constant term");
            if q.period() == 2 {
                assert!(q.constituent(1).first().is_none_or(Zero::is_zero), "{family}{n} odd constant term");
            }
            // the leading coefficient is the volume, shared by both constituents
            let dim = if set.roots.is_empty() { 0 } else { rank(&set.roots).unwrap() };
            assert_eq!(q.constituent(0).get(dim), q.constituent(1).get(dim));
            assert_eq!(q.degree(), Some(dim));
        }
    }
}
