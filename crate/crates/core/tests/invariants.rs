//! Property tests for structural invariants that hold for every parameter,
//! not just the grid the acceptance suite walks.

use std::sync::OnceLock;

use proptest::prelude::*;
use qksl_core::clifford::{spinor_rank, Clifford};
use qksl_core::killing::{expected_eigenvalues, laplace_matrix, Quartic};
use qksl_core::rep_spaces::{primitive_dim, PrimitiveCalculus};
use qksl_core::scalars::{binomial, q};
use qksl_core::wolf::{check_trace_identity, wolf_row, wolf_table, Regularity};
use qksl_core::{RatMatrix, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..7, 1i64..4).prop_map(|(a, b)| q(a, b))
}

fn pc3() -> &'static PrimitiveCalculus {
    static PC: OnceLock<PrimitiveCalculus> = OnceLock::new();
    PC.get_or_init(|| PrimitiveCalculus::new(3).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spinor_ranks_add_up(n in 1usize..13) {
        let total: i64 = (0..=n as i32).map(|r| spinor_rank(n, r)).sum();
        prop_assert_eq!(total, 1i64 << (2 * n));
    }

    // Λ•E = ⊕_s ⊕_k L^k Λ^s_∘E with k ≤ n − s
    #[test]
    fn lefschetz_decomposition_counts(n in 1usize..13) {
        let total: i64 = (0..=n as i32).map(|s| (n as i64 - s as i64 + 1) * primitive_dim(n, s) as i64).sum();
        prop_assert_eq!(total, 1i64 << (2 * n));
        for s in 0..=n as i64 {
            prop_assert_eq!(primitive_dim(n, s as i32) as i64, binomial(2 * n as i64, s) - binomial(2 * n as i64, s - 2));
        }
    }

    #[test]
    fn laplace_spectrum(n in 2usize..31) {
        let spectrum = laplace_matrix(n).unwrap();
        let ev: Vec<Rational> = spectrum.eigenfunctions.iter().map(|f| f.eigenvalue.clone()).collect();
        prop_assert_eq!(ev, expected_eigenvalues(n).to_vec());
    }

    #[test]
    fn wolf_table_for_any_n(n in 2usize..60) {
        for (k, entry) in wolf_table(n).unwrap().iter().enumerate() {
            let tr = check_trace_identity(entry).unwrap();
            let sum = entry.ideals.iter().zip(&tr.l).fold(q(0, 1), |acc, (i, l)| acc + q(i.dim as i64, 1) * (q(1, 1) - l));
            prop_assert_eq!(sum, q(2 * entry.n as i64, 1));
            let rho: Vec<Rational> = tr.l.iter().map(|l| (q(1, 1) - l) / q(2, 1)).collect();
            prop_assert_eq!(&rho, &entry.rho_tabulated);
            let verdict = wolf_row(entry).unwrap().verdict;
            prop_assert_eq!(verdict == Regularity::Degenerate, k == 0);
        }
    }

    // {η⌟, e∧_∘} = η(e) + 1/(n−s+1) η^♭∧_∘ e^#⌟ on Λ¹_∘E at n = 3
    #[test]
    fn anticommutator_on_random_vectors(
        e in proptest::collection::vec(rational(), 6),
        eta in proptest::collection::vec(rational(), 6),
    ) {
        let pc = pc3();
        let s = 1;
        let lhs = &(&pc.contract(&eta, s + 1).unwrap() * &pc.wedge_circ(&e, s).unwrap())
            + &(&pc.wedge_circ(&e, s - 1).unwrap() * &pc.contract(&eta, s).unwrap());
        let pairing = eta.iter().zip(&e).fold(q(0, 1), |acc, (a, b)| acc + a * b);
        let corr = &pc.wedge_circ(&pc.e.flat(&eta), s - 1).unwrap() * &pc.contract_sharp(&e, s).unwrap();
        let mut rhs = RatMatrix::scalar(pc.dim(s), pairing).labeled(lhs.codomain().clone(), lhs.domain().clone());
        rhs.add_scaled(&q(1, 3), &corr).unwrap();
        prop_assert!(lhs.same_entries(&rhs));
    }

    // 𝔎_{e₁,e₂} is symmetric in (e₁, e₂) and lies in 𝔰𝔭(E): σ(𝔎x, y) = σ(𝔎y, x)
    #[test]
    fn quartic_endomorphisms(
        seed in any::<u64>(),
        e1 in proptest::collection::vec(rational(), 4),
        e2 in proptest::collection::vec(rational(), 4),
    ) {
        static CL: OnceLock<Clifford> = OnceLock::new();
        let cl = CL.get_or_init(|| Clifford::new(2).unwrap());
        let k = Quartic::random(4, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(k.is_symmetric());
        let a = k.endo(cl, &e1, &e2);
        prop_assert!(a.same_entries(&k.endo(cl, &e2, &e1)));
        for i in 0..4 {
            for j in 0..4 {
                let (x, y) = (a.column(i), a.column(j));
                let unit = |k: usize| (0..4).map(|t| q((t == k) as i64, 1)).collect::<Vec<_>>();
                prop_assert_eq!(cl.pc.e.sigma(&x, &unit(j)), cl.pc.e.sigma(&y, &unit(i)));
            }
        }
    }
}
