use super::GroupPresentation;

/// Relator-by-generator matrix of exponent sums.
pub fn exponent_matrix(p: &GroupPresentation) -> Vec<Vec<i64>> {
    let n = p.generators().len();
    p.relators()
        .iter()
        .map(|r| (0..n).map(|g| r.exponent_sum(g)).collect())
        .collect()
}

/// Diagonal of the Smith normal form: nonnegative, each entry dividing the
/// next, length `min(rows, cols)`.
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> Vec<i64> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i64>> = matrix.to_vec();
    let size = rows.min(cols);
    let mut diag = Vec::with_capacity(size);
    for t in 0..size {
        loop {
            // Smallest nonzero entry of the remaining block goes to (t, t).
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs());
            let Some((pi, pj)) = pivot else {
                diag.resize(size, 0);
                return diag;
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility by folding an offending row into row t.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        m[t][j] += m[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// Invariant factors of the abelianization, one per generator: the Smith
/// diagonal padded with zeros for generators beyond the relator count.
/// The group is `⊕ Z/d_i`, with `d_i = 0` meaning a free `Z` summand.
pub fn abelianize(p: &GroupPresentation) -> Vec<i64> {
    let n = p.generators().len();
    let mut d = smith_normal_form(&exponent_matrix(p));
    d.resize(n, 0);
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        match m.len() {
            0 => 1,
            1 => m[0][0],
            n => (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| [&r[..j], &r[j + 1..]].concat())
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * det(&minor)
                })
                .sum(),
        }
    }

    /// Determinantal divisors: `D_k` is the gcd of all `k × k` minors and the
    /// `k`-th invariant factor is `D_k / D_{k-1}`.
    fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<i64> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut prev = 1;
        let mut out = Vec::new();
        for k in 1..=rows.min(cols) {
            let mut dk = 0;
            for rs in (0..rows).combinations(k) {
                for cs in (0..cols).combinations(k) {
                    let sub: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| m[i][j]).collect())
                        .collect();
                    dk = gcd(dk, det(&sub));
                }
            }
            if dk == 0 {
                out.resize(rows.min(cols), 0);
                return out;
            }
            out.push(dk / prev);
            prev = dk;
        }
        out
    }

    #[test]
    fn known_forms() {
        assert_eq!(smith_normal_form(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_normal_form(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_normal_form(&[vec![0, 0, 0]]), vec![0]);
        assert!(smith_normal_form(&[]).is_empty());
    }

    #[test]
    fn abelianization_pads_with_free_summands() {
        let p = GroupPresentation::parse("a, b, c : a b⁻¹, b c⁻¹").unwrap();
        assert_eq!(abelianize(&p), vec![1, 1, 0]);
        let p = GroupPresentation::parse("a, b : a a, b b b").unwrap();
        assert_eq!(abelianize(&p), vec![1, 6]);
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(
            m in prop::collection::vec(prop::collection::vec(-4i64..5, 3), 1..4)
        ) {
            prop_assert_eq!(smith_normal_form(&m), invariant_factors_by_minors(&m));
        }
    }
}
