use duptilt::linalg::{EchelonBasis, Mat};
use proptest::prelude::*;

const PRIMES: [u32; 4] = [2, 3, 5, 7];

fn mat(max: usize) -> impl Strategy<Value = Mat> {
    (0..PRIMES.len(), 1..=max, 1..=max).prop_flat_map(|(k, r, c)| {
        let p = PRIMES[k];
        prop::collection::vec(0..p, r * c).prop_map(move |d| Mat::from_data(p, r, c, d))
    })
}

proptest! {
    #[test]
    fn rank_nullity(a in mat(6)) {
        prop_assert_eq!(a.rank() + a.kernel_basis().rows(), a.cols());
    }

    #[test]
    fn kernel_is_annihilated(a in mat(6)) {
        let k = a.kernel_basis();
        if k.rows() > 0 {
            prop_assert!(a.mul(&k.transpose()).is_zero());
        }
        let l = a.left_kernel_basis();
        if l.rows() > 0 {
            prop_assert!(l.mul(&a).is_zero());
        }
    }

    #[test]
    fn rank_of_transpose(a in mat(6)) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn solve_recovers_consistent_systems(a in mat(5), seed in 0u32..1000) {
        let p = a.modulus();
        let x = Mat::from_data(p, a.cols(), 1, (0..a.cols() as u32).map(|i| (seed + 7 * i) % p).collect());
        let b = a.mul(&x);
        let y = a.solve(&b).unwrap();
        prop_assert_eq!(a.mul(&y), b.clone());
        let bl = x.transpose().mul(&a.transpose());
        let z = a.transpose().solve_left(&bl).unwrap();
        prop_assert_eq!(z.mul(&a.transpose()), bl);
    }

    #[test]
    fn inverse_of_invertible(a in mat(5)) {
        if let Some(inv) = a.inverse() {
            prop_assert!(a.mul(&inv).is_identity());
            prop_assert!(inv.mul(&a).is_identity());
        } else {
            prop_assert!(!a.is_square() || a.rank() < a.rows());
        }
    }

    #[test]
    fn echelon_coordinates(a in mat(5)) {
        let e = EchelonBasis::new(&a);
        prop_assert_eq!(e.dim(), a.rank());
        for i in 0..a.rows() {
            prop_assert!(e.contains(a.row(i)));
        }
    }

    #[test]
    fn multiplication_is_associative(a in mat(4), s in 0u32..100) {
        let p = a.modulus();
        let n = a.cols();
        let b = Mat::from_data(p, n, n, (0..(n * n) as u32).map(|i| (s * 3 + i * i) % p).collect());
        let c = Mat::from_data(p, n, 2, (0..(2 * n) as u32).map(|i| (s + 5 * i) % p).collect());
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}
