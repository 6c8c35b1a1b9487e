//! Sample linkage classes in P³ used by the tests, the benches and the CLI.

use std::sync::Arc;

use crate::character::AdmissibleCharacter;
use crate::linkage::LinkageClass;

fn gamma(pairs: &[(i64, i64)]) -> AdmissibleCharacter {
    AdmissibleCharacter::from_pairs(pairs.iter().copied())
        .expect("fixture characters are admissible")
}

/// Two skew lines: `s0 = s1 = t1 = 2`, `e = -2`, self-dual.
pub fn two_skew_lines() -> Arc<LinkageClass> {
    let g = gamma(&[(0, -1), (1, -1), (2, 3), (3, -1)]);
    Arc::new(LinkageClass::self_dual(3, g, 2, -2).expect("valid class"))
}

/// Four skew lines on a smooth quadric: `s0 = 2`, `s1 = t1 = 4`, `e = -1`, self-dual.
pub fn four_lines_on_quadric() -> Arc<LinkageClass> {
    let g = gamma(&[(0, -1), (1, -1), (4, 5), (5, -3)]);
    Arc::new(LinkageClass::self_dual(3, g, 4, -1).expect("valid class"))
}

/// A rational curve of degree 10 with maximal rank: `s0 = s1 = t1 = 5`, `e = -1`.
pub fn rational_degree_ten() -> Arc<LinkageClass> {
    let g = gamma(&[
        (0, -1),
        (1, -1),
        (2, -1),
        (3, -1),
        (4, -1),
        (5, 4),
        (6, 7),
        (7, -6),
    ]);
    Arc::new(LinkageClass::new(3, g, 5, -1, None).expect("valid class"))
}

/// A class with `s0 = 2`, `s1 = 3`, `t1 = 5`, `e = -1` and no dual.
pub fn synthetic_s1_below_t1() -> Arc<LinkageClass> {
    let g = gamma(&[(0, -1), (1, -1), (3, 2)]);
    Arc::new(LinkageClass::new(3, g, 5, -1, None).expect("valid class"))
}

/// Looks a fixture up by its CLI name.
pub fn by_name(name: &str) -> Option<Arc<LinkageClass>> {
    match name {
        "two-skew-lines" => Some(two_skew_lines()),
        "four-lines-on-quadric" => Some(four_lines_on_quadric()),
        "rational-degree-ten" => Some(rational_degree_ten()),
        "synthetic" => Some(synthetic_s1_below_t1()),
        _ => None,
    }
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 4] = [
    "two-skew-lines",
    "four-lines-on-quadric",
    "rational-degree-ten",
    "synthetic",
];
