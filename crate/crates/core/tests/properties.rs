use pcyclic_core::expsums::{gauss_sum, t_direct, t_fast, CyclotomicInteger};
use pcyclic_core::gf::{FieldElement, FiniteField};
use pcyclic_core::quadforms::{diagonalize, FormFamily, SymMatrix};
use proptest::prelude::*;
use std::sync::OnceLock;

fn small() -> &'static FormFamily {
    static F: OnceLock<FormFamily> = OnceLock::new();
    F.get_or_init(|| FormFamily::new(3, 4, 1).unwrap())
}

fn case_a() -> &'static FormFamily {
    static F: OnceLock<FormFamily> = OnceLock::new();
    F.get_or_init(|| FormFamily::new(3, 6, 4).unwrap())
}

fn f125() -> &'static FiniteField {
    static F: OnceLock<FiniteField> = OnceLock::new();
    F.get_or_init(|| FiniteField::new(5, 3).unwrap())
}

/// Tr_1^d on an element of the subfield F_{p^d}.
fn subfield_trace(f: &FiniteField, y: FieldElement, d: u32) -> FieldElement {
    (0..d).fold(FieldElement::ZERO, |acc, i| f.add(acc, f.frobenius(y, i)))
}

#[test]
fn gauss_sum_squares_to_signed_prime() {
    for p in [3u32, 5, 7, 11] {
        let g = gauss_sum(p);
        let p_star = if p % 4 == 1 { p as i128 } else { -(p as i128) };
        assert_eq!(g.mul(&g), CyclotomicInteger::from_int(p, p_star));
    }
}

#[test]
fn field_construction_is_deterministic() {
    let a = FiniteField::new(3, 6).unwrap();
    let b = FiniteField::new(3, 6).unwrap();
    assert_eq!(a.modulus(), b.modulus());
    assert_eq!(a.primitive_element(), b.primitive_element());
    assert!((0..728).all(|e| a.exp(e) == b.exp(e)));
}

#[test]
fn at_least_one_of_the_paired_ranks_is_full() {
    for fam in [small(), case_a()] {
        let s = fam.params().s;
        let size = fam.field_size();
        for i in 1..size * size {
            let (a, b) = (fam.element(i / size), fam.element(i % size));
            let (a2, b2) = fam.twist(a, b);
            let r = fam.rank(a, b).unwrap().max(fam.rank(a2, b2).unwrap());
            assert_eq!(r, s, "({a:?}, {b:?})");
        }
    }
}

#[test]
fn psi_preimages_count_the_radical() {
    let fam = small();
    let f = fam.field();
    let q = fam.params().q;
    let s = fam.params().s;
    for a in f.nonzero_elements() {
        let mut hits = vec![0u64; f.size() as usize];
        for x in f.nonzero_elements() {
            hits[fam.psi(a, x).unwrap().code() as usize] += 1;
        }
        for b in f.elements() {
            let r = fam.rank(a, b).unwrap();
            assert_eq!(hits[b.code() as usize], q.pow(s - r) - 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms(a in 0u32..125, b in 0u32..125, c in 0u32..125) {
        let f = f125();
        let (a, b, c) = (FieldElement(a), FieldElement(b), FieldElement(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.add(a, b), f.add_digits(a, b));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
    }

    #[test]
    fn trace_is_transitive(x in 0u32..729, d in prop::sample::select(vec![1u32, 2, 3, 6])) {
        let f = FiniteField::new(3, 6).unwrap();
        let x = FieldElement(x);
        let rel = f.trace(x, d).unwrap();
        prop_assert!(f.in_subfield(rel, d));
        prop_assert_eq!(subfield_trace(&f, rel, d).code(), f.abs_trace(x));
    }

    #[test]
    fn quadratic_character_is_multiplicative(i in 0u64..8, j in 0u64..8) {
        let f = FiniteField::new(3, 6).unwrap();
        // F_9* is generated by π^91.
        let (x, y) = (f.exp(91 * i), f.exp(91 * j));
        let chi = |z| f.quadratic_character(z, 2).unwrap();
        prop_assert_eq!(chi(f.mul(x, y)), chi(x) * chi(y));
    }

    #[test]
    fn minimal_polynomial_vanishes_on_conjugates(x in 1u32..125) {
        let f = f125();
        let x = FieldElement(x);
        let poly = f.minimal_polynomial(x);
        for c in f.conjugates(x) {
            prop_assert!(f.eval(&poly, c).is_zero());
        }
        prop_assert!(poly.is_irreducible());
    }

    #[test]
    fn gram_matrix_reproduces_form(a in 0u32..729, b in 0u32..729, coords in prop::collection::vec(0u64..9, 3)) {
        let fam = case_a();
        let f = fam.field();
        let (a, b) = (FieldElement(a), FieldElement(b));
        // F_9 = {0} ∪ {π^(91 i)}.
        let xs: Vec<FieldElement> = coords.iter().map(|&c| if c == 0 { FieldElement::ZERO } else { f.exp(91 * c) }).collect();
        let x = xs.iter().zip(fam.gram_basis()).fold(FieldElement::ZERO, |acc, (&c, &e)| f.add(acc, f.mul(c, e)));
        prop_assert_eq!(fam.gram_matrix(a, b).eval(f, &xs), fam.form_value(a, b, x));
    }

    #[test]
    fn phi_rank_equals_gram_rank(a in 0u32..729, b in 0u32..729) {
        prop_assume!(a != 0 || b != 0);
        let fam = case_a();
        let (a, b) = (FieldElement(a), FieldElement(b));
        let gram = fam.gram_matrix(a, b);
        prop_assert_eq!(fam.rank(a, b).unwrap() as usize, gram.rank(fam.field()));
        prop_assert_eq!(diagonalize(fam.field(), &gram).rank(), gram.rank(fam.field()));
    }

    #[test]
    fn discriminant_class_survives_reordering(a in 0u32..81, b in 0u32..81, perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        prop_assume!(a != 0 || b != 0);
        let fam = small();
        let f = fam.field();
        let gram: SymMatrix = fam.gram_matrix(FieldElement(a), FieldElement(b));
        let d1 = diagonalize(f, &gram);
        let d2 = diagonalize(f, &gram.permuted(&perm));
        prop_assert_eq!(d1.rank(), d2.rank());
        prop_assert_eq!(d1.discriminant_character(f, 1).unwrap(), d2.discriminant_character(f, 1).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn fast_t_matches_direct_on_random_pairs(a in 0u32..729, b in 0u32..729) {
        let fam = case_a();
        let (a, b) = (FieldElement(a), FieldElement(b));
        prop_assert_eq!(t_fast(fam, a, b).cyclotomic(), t_direct(fam, a, b));
    }
}
