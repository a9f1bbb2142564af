//! Small integer and mod-2 linear algebra.

/// Row-style Hermite normal form; returns the nonzero rows, a basis of the row lattice.
pub fn hnf_rows(mut rows: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut pivot = 0;
    for col in 0..n {
        if pivot == rows.len() {
            break;
        }
        loop {
            // smallest nonzero |entry| in this column at or below `pivot`
            let best = (pivot..rows.len()).filter(|&r| rows[r][col] != 0).min_by_key(|&r| rows[r][col].abs());
            let Some(b) = best else { break };
            rows.swap(pivot, b);
            let mut done = true;
            for r in pivot + 1..rows.len() {
                if rows[r][col] != 0 {
                    let q = rows[r][col].div_euclid(rows[pivot][col]);
                    let p = rows[pivot].clone();
                    for (x, y) in rows[r].iter_mut().zip(&p) {
                        *x -= q * y;
                    }
                    if rows[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot][col] == 0 {
            continue;
        }
        if rows[pivot][col] < 0 {
            for x in rows[pivot].iter_mut() {
                *x = -*x;
            }
        }
        for r in 0..pivot {
            let q = rows[r][col].div_euclid(rows[pivot][col]);
            if q != 0 {
                let p = rows[pivot].clone();
                for (x, y) in rows[r].iter_mut().zip(&p) {
                    *x -= q * y;
                }
            }
        }
        pivot += 1;
    }
    rows.truncate(pivot);
    rows
}

/// Z-basis of `{x ∈ Z^n : M x = 0}` for `M` given by rows.
pub fn integer_kernel(m: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    // rows of [Mᵀ | I], reduced on the first m columns by unimodular row operations
    let rows_m = m.len();
    let aug: Vec<Vec<i128>> = (0..n)
        .map(|j| {
            let mut r: Vec<i128> = m.iter().map(|row| row[j] as i128).collect();
            r.extend((0..n).map(|k| i128::from(k == j)));
            r
        })
        .collect();
    let reduced = hnf_rows_prefix(aug, rows_m);
    reduced
        .into_iter()
        .filter(|r| r[..rows_m].iter().all(|&x| x == 0))
        .map(|r| r[rows_m..].iter().map(|&x| i64::try_from(x).expect("small kernel vector")).collect())
        .collect()
}

/// Echelon form on the first `k` columns only, keeping every row.
fn hnf_rows_prefix(mut rows: Vec<Vec<i128>>, k: usize) -> Vec<Vec<i128>> {
    let mut pivot = 0;
    for col in 0..k {
        loop {
            let best = (pivot..rows.len()).filter(|&r| rows[r][col] != 0).min_by_key(|&r| rows[r][col].abs());
            let Some(b) = best else { break };
            rows.swap(pivot, b);
            let mut done = true;
            for r in pivot + 1..rows.len() {
                if rows[r][col] != 0 {
                    let q = rows[r][col].div_euclid(rows[pivot][col]);
                    let p = rows[pivot].clone();
                    for (x, y) in rows[r].iter_mut().zip(&p) {
                        *x -= q * y;
                    }
                    if rows[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    rows
}

/// One solution of `A x = b` over F2, rows of `A` given as bit vectors.
pub fn solve_mod2(a: &[Vec<u8>], b: &[u8], n: usize) -> Option<Vec<u8>> {
    let mut rows: Vec<(Vec<u8>, u8)> = a.iter().zip(b).map(|(r, &v)| (r.iter().map(|x| x & 1).collect(), v & 1)).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0[col] == 1) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i].0[col] == 1 {
                let (pr, pv) = rows[r].clone();
                for (x, y) in rows[i].0.iter_mut().zip(&pr) {
                    *x ^= y;
                }
                rows[i].1 ^= pv;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|(_, v)| *v == 1) {
        return None;
    }
    let mut x = vec![0u8; n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i].1;
    }
    Some(x)
}
