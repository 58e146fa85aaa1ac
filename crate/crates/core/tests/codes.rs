use std::collections::HashSet;

use pcyclic_core::codes::*;
use pcyclic_core::expsums::{s_direct, s_fast, t_fast};
use pcyclic_core::gf::{FieldElement, FieldOptions};
use pcyclic_core::Budget;

fn pairs(size: u64) -> impl Iterator<Item = (FieldElement, FieldElement)> {
    (0..size * size).map(move |i| (FieldElement((i / size) as u32), FieldElement((i % size) as u32)))
}

#[test]
fn codewords_are_pairwise_distinct() {
    let code = CyclicCode::new(3, 4, 1).unwrap();
    let words: HashSet<Vec<u16>> = pairs(81).map(|(a, b)| code.codeword(a, b)).collect();
    assert_eq!(words.len(), 6561);
}

#[test]
fn cyclic_shift_stays_in_code() {
    let code = CyclicCode::new(3, 4, 1).unwrap();
    for (a, b) in pairs(81) {
        let (a2, b2) = code.shift_pair(a, b);
        assert_eq!(shift_right(&code.codeword(a, b)), code.codeword(a2, b2));
    }
    let word = code.codeword(FieldElement(5), FieldElement(11));
    let mut w = word.clone();
    for _ in 0..code.length() {
        w = shift_right(&w);
    }
    assert_eq!(w, word);
}

#[test]
fn weight_matches_character_sum_formula() {
    let code = CyclicCode::new(3, 4, 1).unwrap();
    let fam = code.family();
    let f = code.field();
    let (p, pm) = (3i128, 81i128);
    for (a, b) in pairs(81) {
        let total = (1..p as i64)
            .map(|u| f.from_prime(u))
            .map(|u| s_direct(fam, f.mul(u, a), f.mul(u, b)))
            .reduce(|x, y| x.add(&y))
            .unwrap();
        let v = total.as_rational().expect("rational");
        let expect = pm - pm / p - v / (2 * p);
        assert_eq!(v % (2 * p), 0);
        assert_eq!(code.codeword_weight(a, b) as i128, expect);
    }
}

#[test]
fn distribution_independent_of_modulus_and_primitive_element() {
    let b = Budget::default();
    let base = weight_distribution_brute(&CyclicCode::new(3, 4, 1).unwrap(), &b).unwrap();
    let other_modulus = FieldOptions { modulus_index: 1, ..FieldOptions::default() };
    let other_primitive = FieldOptions { primitive_index: 1, ..FieldOptions::default() };
    for opts in [other_modulus, other_primitive] {
        let code = CyclicCode::with_options(3, 4, 1, opts).unwrap();
        let base_code = CyclicCode::new(3, 4, 1).unwrap();
        let (f, g) = (code.field(), base_code.field());
        assert!(f.modulus() != g.modulus() || f.primitive_element() != g.primitive_element());
        let dist = weight_distribution_brute(&code, &b).unwrap();
        assert!(dist.same_multiset(&base));
    }
}

#[test]
fn brute_distributions_satisfy_first_moment() {
    for (p, m, k) in [(3, 4, 1), (3, 3, 1), (5, 3, 1), (3, 5, 2), (5, 4, 1)] {
        let code = CyclicCode::new(p, m, k).unwrap();
        let dist = weight_distribution_brute(&code, &Budget::default()).unwrap();
        assert!(dist.satisfies_pless_first_moment(code.params()), "{p},{m},{k}");
        assert_eq!(dist.frequency(0), 1);
    }
}

#[test]
fn engines_agree_beyond_the_examples() {
    let b = Budget::default();
    for (p, m, k) in [(5, 4, 1), (3, 4, 3), (5, 4, 3)] {
        let code = CyclicCode::new(p, m, k).unwrap();
        let report = code_report(&code, &Engine::ALL, &b);
        assert!(report.first_error().is_none(), "{p},{m},{k}");
        assert!(report.all_agree(), "{p},{m},{k}: {report}");
    }
}

#[test]
fn minimum_distance_of_first_example() {
    let code = CyclicCode::new(3, 6, 4).unwrap();
    let report = code_report(&code, &[Engine::Brute], &Budget::default());
    assert_eq!(report.summary_line(), "[728, 12, 414]");
}

// The per-case reductions of Σ_u S(uα, uβ), checked rather than assumed.

#[test]
fn unit_multiples_leave_s_fixed_when_k_is_even() {
    let code = CyclicCode::new(3, 6, 4).unwrap();
    let fam = code.family();
    let f = code.field();
    let two = f.from_prime(2);
    for i in (0..729u32).step_by(3) {
        for j in 0..729u32 {
            let (a, b) = (FieldElement(i), FieldElement(j));
            assert_eq!(s_fast(fam, f.mul(two, a), f.mul(two, b)), s_fast(fam, a, b));
        }
    }
}

#[test]
fn odd_k_rank_deficient_pairs_reduce_to_the_twisted_sum() {
    let code = CyclicCode::new(3, 4, 1).unwrap();
    let fam = code.family();
    let f = code.field();
    let s = fam.params().s;
    for (a, b) in pairs(81).skip(1) {
        if fam.rank(a, b).unwrap() != s - 1 {
            continue;
        }
        let (a2, b2) = fam.twist(a, b);
        let total = (1..3).map(|u| s_fast(fam, f.mul(f.from_prime(u), a), f.mul(f.from_prime(u), b)));
        let total = total.reduce(|x, y| x + y).unwrap();
        assert_eq!(total, t_fast(fam, a2, b2).scale(2));
    }
}
