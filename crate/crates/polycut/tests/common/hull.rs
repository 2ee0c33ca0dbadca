//! Exact convex-hull facet oracle for points on the moment curve.
//!
//! Vertex `t` (1-based) maps to the integer point `(t, t^2, ..., t^d)`.
//! A d-subset spans a facet of the hull iff every remaining point lies
//! strictly on one side of its affine hyperplane, decided by the sign of
//! an exact i128 determinant. At oracle scale (d <= 5, n <= 20) the
//! Hadamard bound keeps the values many orders of magnitude below
//! overflow. Independent of the evenness-condition implementation.

use std::collections::BTreeSet;

use itertools::Itertools;

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0i128;
    for (col, &lead) in m[0].iter().enumerate() {
        if lead == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total += sign * lead * det(&minor);
    }
    total
}

fn diff(a: &[i128], b: &[i128]) -> Vec<i128> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Facets of the convex hull of the n moment-curve points in dimension d,
/// as sorted 1-based vertex sets.
pub fn moment_hull_facets(d: usize, n: usize) -> BTreeSet<Vec<u32>> {
    assert!(d >= 2 && n > d, "need at least d + 1 points in dimension d >= 2");
    assert!(d <= 5 && n <= 20, "oracle scale");
    let points: Vec<Vec<i128>> = (1..=n as i128)
        .map(|t| (1..=d as u32).map(|k| t.pow(k)).collect())
        .collect();

    let mut facets = BTreeSet::new();
    for subset in (0..n).combinations(d) {
        let mut side = 0i128;
        let mut is_facet = true;
        for q in 0..n {
            if subset.contains(&q) {
                continue;
            }
            let base = &points[subset[0]];
            let mut rows: Vec<Vec<i128>> = subset[1..]
                .iter()
                .map(|&s| diff(&points[s], base))
                .collect();
            rows.push(diff(&points[q], base));
            let value = det(&rows);
            assert_ne!(value, 0, "moment-curve points are in general position");
            let sign = value.signum();
            if side == 0 {
                side = sign;
            } else if sign != side {
                is_facet = false;
                break;
            }
        }
        if is_facet {
            facets.insert(subset.iter().map(|&i| (i + 1) as u32).collect());
        }
    }
    facets
}
