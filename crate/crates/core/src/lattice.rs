//! Integer matrices: Smith invariants and row-span membership.

/// Invariant factors (the nonzero diagonal of the Smith form), each dividing
/// the next.
pub fn smith_invariants(rows: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| pad(r, cols)).collect();
    let m = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(cols) {
        // pick the smallest nonzero entry in the remaining block as pivot
        let Some((pi, pj)) = smallest(&a, t, cols) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for row in a.iter_mut() {
                        let v = row[t];
                        row[j] -= q * v;
                    }
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // the pivot must divide the whole remaining block
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % a[t][t] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[i][j];
                            a[t][j] += v;
                        }
                    }
                }
            }
            if let Some((pi, pj)) = smallest(&a, t, cols) {
                if a[pi][pj].abs() < a[t][t].abs() || a[t][t] == 0 {
                    a.swap(t, pi);
                    for row in a.iter_mut() {
                        row.swap(t, pj);
                    }
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn pad(r: &[i64], cols: usize) -> Vec<i64> {
    let mut v = r.to_vec();
    v.resize(cols, 0);
    v
}

fn smallest(a: &[Vec<i64>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().take(cols).skip(t) {
            if v != 0 && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn rank(rows: &[Vec<i64>], cols: usize) -> usize {
    smith_invariants(rows, cols).len()
}

/// Row echelon (Hermite-style) basis of the integer row span.
pub fn hermite_rows(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| pad(r, cols)).collect();
    let mut out = Vec::new();
    for j in 0..cols {
        loop {
            let live: Vec<usize> = (0..a.len()).filter(|&i| a[i][j] != 0).collect();
            if live.len() <= 1 {
                if let Some(&i) = live.first() {
                    let mut r = a.remove(i);
                    if r[j] < 0 {
                        r.iter_mut().for_each(|x| *x = -*x);
                    }
                    out.push(r);
                }
                break;
            }
            let p = *live.iter().min_by_key(|&&i| a[i][j].abs()).expect("nonempty");
            for &i in &live {
                if i != p {
                    let q = a[i][j] / a[p][j];
                    for k in 0..cols {
                        let v = a[p][k];
                        a[i][k] -= q * v;
                    }
                }
            }
        }
    }
    out
}

/// Is `v` an integer combination of `rows`?
pub fn in_row_span(rows: &[Vec<i64>], v: &[i64]) -> bool {
    let cols = v.len();
    let basis = hermite_rows(rows, cols);
    let mut v = v.to_vec();
    for b in &basis {
        let j = b.iter().position(|&x| x != 0).expect("basis rows are nonzero");
        if v[j] % b[j] != 0 {
            return false;
        }
        let q = v[j] / b[j];
        for k in 0..cols {
            v[k] -= q * b[k];
        }
    }
    v.iter().all(|&x| x == 0)
}
