mod common;

#[test]
fn jacobi_orthogonality_exact() {
    for (a, b) in [(0, 0), (1, 1)] {
        common::check_jacobi_orthogonality(8, a, b).unwrap();
    }
}

#[test]
fn skew_orthogonality_exact() {
    for n in 1..=10 {
        common::check_skew_orthogonality(n).unwrap();
    }
}
