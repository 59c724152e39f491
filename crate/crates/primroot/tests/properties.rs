//! Exhaustive sweeps of the library's invariants at fixed desk-scale
//! bounds. Wherever a claim has a cheap independent formulation (repeated
//! multiplication for orders, full-scan primality, direct root scanning),
//! the sweep checks the library against that oracle rather than against
//! itself.

use num_bigint::BigInt;
use primroot::{
    compose_coprime_orders, count_primitive_roots, decompose_with_witnesses, divides,
    element_of_order, exists_smaller_power_eq_1, fermat_poly, geometric_series_poly, is_prime,
    is_primitive_root, least_divisor, number_of_powers, order, order_fast, primitive_root,
    totient, witness_with_order, all_powers, Error, FieldElement, IntPolynomial, Prime,
};

// ---------------------------------------------------------------------------
// independent oracles
// ---------------------------------------------------------------------------

fn naive_is_prime(n: u64) -> bool {
    n >= 2 && (2..n).all(|d| n % d != 0)
}

/// Order by repeated multiplication, no trace machinery.
fn naive_order(a: u64, p: u64) -> u64 {
    assert!(a % p != 0);
    let mut cur = a % p;
    let mut k = 1;
    while cur != 1 {
        cur = cur * a % p; // desk-scale p: products stay far below 2^64
        k += 1;
    }
    k
}

fn primes_up_to(bound: u64) -> Vec<Prime> {
    (2..=bound)
        .filter(|&n| is_prime(n))
        .map(|n| Prime::new(n).unwrap())
        .collect()
}

fn prime_factorization(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            let mut m = 0;
            while n % q == 0 {
                n /= q;
                m += 1;
            }
            out.push((q, m));
        }
        q += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn elements(p: Prime) -> impl Iterator<Item = FieldElement> {
    (1..p.value()).map(move |a| p.element(a).unwrap())
}

// ---------------------------------------------------------------------------
// fieldcore invariants
// ---------------------------------------------------------------------------

#[test]
fn fermat_little_theorem_exhaustive_to_211() {
    for p in primes_up_to(211) {
        for a in elements(p) {
            assert_eq!(a.pow(p.value() - 1).residue(), 1, "a={:?}", a);
        }
    }
}

#[test]
fn inverse_roundtrip_exhaustive_to_211() {
    for p in primes_up_to(211) {
        for a in elements(p) {
            assert_eq!(a.mul(a.inv().unwrap()).unwrap(), p.one(), "a={:?}", a);
        }
    }
}

#[test]
fn integral_domain_exhaustive_to_97() {
    for p in primes_up_to(97) {
        for a in elements(p) {
            for b in elements(p) {
                assert!(!a.mul(b).unwrap().is_zero(), "a={:?} b={:?}", a, b);
            }
        }
    }
}

#[test]
fn least_divisor_is_prime_and_divides_to_10000() {
    for k in 2..=10_000u64 {
        let d = least_divisor(2, k).unwrap();
        assert!(naive_is_prime(d), "k={} d={}", k, d);
        assert_eq!(k % d, 0, "k={} d={}", k, d);
    }
}

// ---------------------------------------------------------------------------
// order invariants
// ---------------------------------------------------------------------------

#[test]
fn order_matches_naive_oracle_and_divides_group_to_211() {
    for p in primes_up_to(211) {
        let pm1 = p.value() - 1;
        for a in elements(p) {
            let o = order(a).unwrap();
            assert_eq!(o, naive_order(a.residue(), p.value()), "a={:?}", a);
            assert!((1..=pm1).contains(&o), "a={:?}", a);
            assert!(divides(o, pm1).unwrap(), "a={:?}", a);
        }
    }
}

#[test]
fn order_of_inverse_equals_order_to_211() {
    for p in primes_up_to(211) {
        for a in elements(p) {
            assert_eq!(order(a.inv().unwrap()), order(a), "a={:?}", a);
        }
    }
}

#[test]
fn smallest_power_equal_one_is_the_order_to_97() {
    for p in primes_up_to(97) {
        for a in elements(p) {
            let o = order(a).unwrap();
            for n in 1..=p.value() - 1 {
                let hits_one = a.pow(n).residue() == 1;
                let smaller = exists_smaller_power_eq_1(a, n);
                assert_eq!(smaller, o < n, "a={:?} n={}", a, n);
                if hits_one && !smaller {
                    assert_eq!(o, n, "a={:?} n={}", a, n);
                }
            }
        }
    }
}

#[test]
fn powers_repeat_with_period_order_to_61() {
    // restatement of the trace-concatenation argument:
    // a^(ord*t + r) = a^r for every t and 0 <= r < ord
    for p in primes_up_to(61) {
        for a in elements(p) {
            let o = order(a).unwrap();
            for t in 0..=3u64 {
                for r in 0..o {
                    assert_eq!(a.pow(o * t + r), a.pow(r), "a={:?} t={} r={}", a, t, r);
                }
            }
        }
    }
}

#[test]
fn order_fast_equals_trace_order_to_211() {
    for p in primes_up_to(211) {
        for a in elements(p) {
            assert_eq!(order_fast(a), order(a), "a={:?}", a);
        }
    }
}

#[test]
fn power_trace_shape_to_61() {
    for p in primes_up_to(61) {
        for a in elements(p) {
            let trace = all_powers(a).unwrap();
            let entries = trace.entries();
            assert!((1..=p.value() - 1).contains(&trace.len()));
            for (i, e) in entries.iter().enumerate() {
                assert_eq!(*e, a.pow(i as u64 + 1), "a={:?} i={}", a, i);
            }
            // exactly one 1, and it is the last entry
            assert_eq!(entries.last().unwrap().residue(), 1);
            assert!(entries[..entries.len() - 1]
                .iter()
                .all(|e| e.residue() != 1));
        }
    }
}

// ---------------------------------------------------------------------------
// polycong invariants
// ---------------------------------------------------------------------------

#[test]
fn fermat_poly_has_d_roots_for_every_divisor_to_211() {
    for p in primes_up_to(211) {
        for d in divisors(p.value() - 1) {
            let count = fermat_poly(d).unwrap().count_roots(p).unwrap();
            assert_eq!(count, d, "p={} d={}", p.value(), d);
        }
    }
}

#[test]
fn fermat_times_geometric_is_fermat_of_product() {
    for c in 1..=12u64 {
        for d in 1..=12u64 {
            let lhs = &fermat_poly(d).unwrap() * &geometric_series_poly(c, d).unwrap();
            assert_eq!(lhs, fermat_poly(c * d).unwrap(), "c={} d={}", c, d);
        }
    }
}

#[test]
fn nontrivial_linear_polynomials_have_exactly_one_root() {
    for p in primes_up_to(31) {
        for a0 in 0..p.value() {
            for a1 in 1..p.value() {
                let poly = IntPolynomial::from_i64(&[a0 as i64, a1 as i64]);
                let roots = poly.roots(p).unwrap();
                assert_eq!(roots.len(), 1, "p={} a0={} a1={}", p.value(), a0, a1);
                assert_eq!(roots[0], poly.root_of_linear(p).unwrap());
            }
        }
    }
    // integer coefficients outside [0, p) behave the same after reduction
    let poly = IntPolynomial::from_i64(&[-9, 22]);
    let p = Prime::new(7).unwrap();
    assert_eq!(poly.count_roots(p), Ok(1));
    assert_eq!(poly.roots(p).unwrap()[0], poly.root_of_linear(p).unwrap());
}

// ---------------------------------------------------------------------------
// orderconstruct invariants
// ---------------------------------------------------------------------------

#[test]
fn divisors_of_prime_powers_are_prime_powers() {
    for q in [2u64, 3, 5, 7, 11, 13] {
        for n in 0..=6u32 {
            let qn = q.pow(n);
            for x in (1..=qn).filter(|x| qn % x == 0) {
                let k = number_of_powers(x, q).unwrap();
                assert_eq!(x, q.pow(k as u32), "q={} n={} x={}", q, n, x);
            }
        }
    }
}

#[test]
fn order_is_prime_power_lemma_to_211() {
    for p in primes_up_to(211) {
        for (q, max_n) in prime_factorization(p.value() - 1) {
            for n in 1..=max_n as u32 {
                let qn = q.pow(n);
                let lower = qn / q;
                for a in elements(p) {
                    if a.pow(qn).residue() == 1 && a.pow(lower).residue() != 1 {
                        assert_eq!(
                            order(a),
                            Ok(qn),
                            "p={} q={} n={} a={}",
                            p.value(),
                            q,
                            n,
                            a.residue()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn witness_has_exact_prime_power_order_to_211() {
    for p in primes_up_to(211) {
        for (q, max_n) in prime_factorization(p.value() - 1) {
            for n in 1..=max_n {
                let w = witness_with_order(Prime::new(q).unwrap(), n, p).unwrap();
                let qn = q.pow(n as u32);
                assert_eq!(order(w), Ok(qn), "p={} q={} n={}", p.value(), q, n);
                assert_eq!(naive_order(w.residue(), p.value()), qn);
            }
        }
    }
}

#[test]
fn solution_count_of_pow_equation_matches_fermat_poly_roots_to_211() {
    // cross-module: the x with x^(q^n) = 1 are exactly the roots of
    // -1 + x^(q^n), and there are q^n of them
    for p in primes_up_to(211) {
        for (q, max_n) in prime_factorization(p.value() - 1) {
            for n in 1..=max_n as u32 {
                let qn = q.pow(n);
                let direct = elements(p).filter(|x| x.pow(qn).residue() == 1).count() as u64;
                let by_poly = fermat_poly(qn).unwrap().count_roots(p).unwrap();
                assert_eq!(direct, by_poly, "p={} q^n={}", p.value(), qn);
                assert_eq!(direct, qn, "p={} q^n={}", p.value(), qn);
            }
        }
    }
}

#[test]
fn product_of_coprime_orders_multiplies_to_101() {
    for p in primes_up_to(101) {
        let m = p.value();
        let orders: Vec<u64> = std::iter::once(0)
            .chain((1..m).map(|a| naive_order(a, m)))
            .collect();
        for a in elements(p) {
            for b in elements(p) {
                let (oa, ob) = (orders[a.residue() as usize], orders[b.residue() as usize]);
                let composed = compose_coprime_orders(a, b);
                if primroot::coprime(oa, ob) {
                    let ab = composed.unwrap();
                    assert_eq!(
                        orders[ab.residue() as usize],
                        oa * ob,
                        "a={:?} b={:?}",
                        a,
                        b
                    );
                } else {
                    assert_eq!(
                        composed,
                        Err(Error::NotCoprime { left: oa, right: ob }),
                        "a={:?} b={:?}",
                        a,
                        b
                    );
                }
            }
        }
    }
}

#[test]
fn power_of_one_chains_upward_to_61() {
    // once a^(q^i) = 1, every higher tower level a^(q^j) is 1 too
    for p in primes_up_to(61) {
        for q in [2u64, 3, 5, 7, 11, 13] {
            for i in 0..=4u32 {
                let qi = q.pow(i);
                for a in elements(p) {
                    if a.pow(qi).residue() == 1 {
                        for j in i..=i + 4 {
                            assert_eq!(
                                a.pow(q.pow(j)).residue(),
                                1,
                                "p={} q={} i={} j={} a={}",
                                p.value(),
                                q,
                                i,
                                j,
                                a.residue()
                            );
                        }
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// proot invariants
// ---------------------------------------------------------------------------

#[test]
fn main_theorem_every_prime_below_10000() {
    for p in primes_up_to(9999) {
        let root = primitive_root(p);
        assert_eq!(order(root), Ok(p.value() - 1), "p={}", p.value());
        assert!(is_primitive_root(root), "p={}", p.value());
    }
}

#[test]
fn constructed_element_has_requested_order_to_500() {
    for p in primes_up_to(500) {
        for k in divisors(p.value() - 1) {
            let e = element_of_order(k, p).unwrap();
            assert_eq!(order(e), Ok(k), "p={} k={}", p.value(), k);
            assert_eq!(naive_order(e.residue(), p.value()), k);
        }
    }
}

#[test]
fn peel_recursion_side_conditions_to_500() {
    for p in primes_up_to(500) {
        let pm1 = p.value() - 1;
        let trail = decompose_with_witnesses(p);
        let mut k = pm1;
        for (factor, witness) in trail.factors().iter().zip(trail.witnesses()) {
            let qn = factor.value();
            assert_eq!(k % qn, 0, "p={} k={} q^n={}", p.value(), k, qn);
            let k1 = k / qn; // >= 1 because q^n | k
            // the remaining cofactor still divides p-1 and is coprime to q^n
            assert!(divides(k1, pm1).unwrap(), "p={} k1={}", p.value(), k1);
            assert!(primroot::coprime(qn, k1), "p={} k1={}", p.value(), k1);
            assert!(!witness.is_zero());
            k = k1;
        }
        assert_eq!(k, 1, "p={}: peel did not exhaust p-1", p.value());
        let product: u64 = trail.factors().iter().map(|f| f.value()).product();
        assert_eq!(product, pm1);
    }
}

#[test]
fn generator_oracle_agrees_with_order_to_211() {
    for p in primes_up_to(211) {
        for a in elements(p) {
            assert_eq!(
                is_primitive_root(a),
                order(a) == Ok(p.value() - 1),
                "a={:?}",
                a
            );
        }
        assert!(!is_primitive_root(p.zero()));
    }
}

#[test]
fn primitive_root_count_is_totient_of_group_size_to_500() {
    for p in primes_up_to(500) {
        assert_eq!(
            count_primitive_roots(p),
            totient(p.value() - 1).unwrap(),
            "p={}",
            p.value()
        );
    }
}

#[test]
fn divide_by_x_plus_a_coefficients_can_outgrow_machine_words() {
    // degree-40 polynomial divided by a large shift: quotient coefficients
    // reach hundreds of bits and must stay exact
    let coeffs: Vec<i64> = (0..=40).map(|i| if i == 40 { 1 } else { 7 }).collect();
    let poly = IntPolynomial::from_i64(&coeffs);
    let a = BigInt::from(2_000_000_011i64);
    let (quotient, remainder) = poly.divide_by_x_plus_a(&a).unwrap();
    let rebuilt = &(&IntPolynomial::new(vec![a, BigInt::from(1)]) * &quotient)
        + &IntPolynomial::new(vec![remainder]);
    assert_eq!(rebuilt.normalized(), poly.normalized());
    assert!(quotient.coeffs().iter().any(|c| c.bits() > 128));
}
