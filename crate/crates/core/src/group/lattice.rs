//! Integer row-lattice routines.
//!
//! A subgroup `H` of `Z(d_1) ⊕ … ⊕ Z(d_k)` is identified with its preimage
//! lattice `L` in `ℤ^k`, which always contains `d_1 ℤ ⊕ … ⊕ d_k ℤ`. The
//! Hermite normal form of `L` is then a set-level canonical form for `H`.

use crate::arith::ext_gcd;

pub(crate) type Row = Vec<i128>;

fn axpy(target: &mut [i128], q: i128, source: &[i128]) {
    for (t, s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
}

/// Hermite normal form of the lattice spanned by `gens` and `moduli[i] * e_i`.
///
/// The result is a full `k × k` upper-triangular basis with positive pivots,
/// every pivot dividing its modulus, and entries above a pivot in `[0, pivot)`.
pub(crate) fn canonical_basis(gens: &[Row], moduli: &[i128]) -> Vec<Row> {
    let k = moduli.len();
    let reduce_tail = |row: &mut Row, from: usize| {
        for c in from..k {
            row[c] = row[c].rem_euclid(moduli[c]);
        }
    };

    let mut work: Vec<Row> = gens
        .iter()
        .map(|g| {
            let mut r = g.clone();
            reduce_tail(&mut r, 0);
            r
        })
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();

    let mut basis: Vec<Row> = Vec::with_capacity(k);
    for c in 0..k {
        let mut pivot = vec![0i128; k];
        pivot[c] = moduli[c];
        let mut rest = Vec::with_capacity(work.len());
        for v in work {
            if v[c] == 0 {
                rest.push(v);
                continue;
            }
            let (g, a, b) = ext_gcd(pivot[c], v[c]);
            let (pv, vv) = (pivot[c] / g, v[c] / g);
            let mut next = vec![0i128; k];
            let mut other = vec![0i128; k];
            for j in c..k {
                next[j] = a * pivot[j] + b * v[j];
                other[j] = vv * pivot[j] - pv * v[j];
            }
            debug_assert_eq!(other[c], 0);
            reduce_tail(&mut next, c + 1);
            reduce_tail(&mut other, c + 1);
            pivot = next;
            if other.iter().any(|&x| x != 0) {
                rest.push(other);
            }
        }
        if pivot[c] < 0 {
            pivot.iter_mut().for_each(|x| *x = -*x);
            reduce_tail(&mut pivot, c + 1);
        }
        basis.push(pivot);
        work = rest;
    }
    debug_assert!(work.is_empty());
    reduce_above_pivots(&mut basis, &(0..k).collect::<Vec<_>>());
    basis
}

fn reduce_above_pivots(rows: &mut [Row], pivot_cols: &[usize]) {
    for (j, &c) in pivot_cols.iter().enumerate() {
        for i in 0..j {
            let q = rows[i][c].div_euclid(rows[j][c]);
            if q != 0 {
                let src = rows[j].clone();
                axpy(&mut rows[i], q, &src);
            }
        }
    }
}

/// General row Hermite normal form over ℤ. Returns the nonzero rows together
/// with the pivot column of each.
pub(crate) fn hermite(mut rows: Vec<Row>, ncols: usize) -> (Vec<Row>, Vec<usize>) {
    let mut r = 0;
    let mut pivot_cols = Vec::new();
    for c in 0..ncols {
        loop {
            let best = (r..rows.len())
                .filter(|&i| rows[i][c] != 0)
                .min_by_key(|&i| rows[i][c].abs());
            let Some(p) = best else { break };
            rows.swap(r, p);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][c] != 0 {
                    let q = rows[i][c].div_euclid(rows[r][c]);
                    let src = rows[r].clone();
                    axpy(&mut rows[i], q, &src);
                    clean &= rows[i][c] == 0;
                }
            }
            if clean {
                if rows[r][c] < 0 {
                    rows[r].iter_mut().for_each(|x| *x = -*x);
                }
                pivot_cols.push(c);
                r += 1;
                break;
            }
        }
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    reduce_above_pivots(&mut rows, &pivot_cols);
    (rows, pivot_cols)
}

/// Coefficients `x` with `x · basis = v` for a square upper-triangular basis,
/// or `None` when `v` is not in the lattice.
pub(crate) fn coordinates(basis: &[Row], v: &[i128]) -> Option<Vec<i128>> {
    let k = basis.len();
    let mut rem = v.to_vec();
    let mut x = vec![0i128; k];
    for c in 0..k {
        let p = basis[c][c];
        if rem[c] % p != 0 {
            return None;
        }
        let q = rem[c] / p;
        x[c] = q;
        if q != 0 {
            axpy(&mut rem, q, &basis[c]);
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    Some(x)
}

/// Smith normal form `U · A · V = diag(s)`; only the column transform `V` is kept.
pub(crate) struct Smith {
    pub diagonal: Vec<i128>,
    pub right: Vec<Row>,
}

pub(crate) fn smith(mut a: Vec<Row>, ncols: usize) -> Smith {
    let n = a.len();
    let m = ncols;
    let mut v: Vec<Row> = (0..m)
        .map(|i| (0..m).map(|j| i128::from(i == j)).collect())
        .collect();

    let swap_cols = |a: &mut Vec<Row>, v: &mut Vec<Row>, x: usize, y: usize| {
        if x != y {
            a.iter_mut().for_each(|r| r.swap(x, y));
            v.iter_mut().for_each(|r| r.swap(x, y));
        }
    };
    // col_j -= q * col_t
    let col_sub = |a: &mut Vec<Row>, v: &mut Vec<Row>, j: usize, q: i128, t: usize| {
        for r in a.iter_mut() {
            r[j] -= q * r[t];
        }
        for r in v.iter_mut() {
            r[j] -= q * r[t];
        }
    };

    for t in 0..n.min(m) {
        let best = (t..n)
            .flat_map(|i| (t..m).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..n {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    let src = a[t].clone();
                    axpy(&mut a[i], q, &src);
                    dirty |= a[i][t] != 0;
                }
            }
            for j in t + 1..m {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    col_sub(&mut a, &mut v, j, q, t);
                    dirty |= a[t][j] != 0;
                }
            }
            if dirty {
                let col = (t + 1..n).filter(|&i| a[i][t] != 0).map(|i| (i, t));
                let row = (t + 1..m).filter(|&j| a[t][j] != 0).map(|j| (t, j));
                if let Some((i, j)) = col.chain(row).min_by_key(|&(i, j)| a[i][j].abs()) {
                    if a[i][j].abs() < a[t][t].abs() {
                        a.swap(t, i);
                        swap_cols(&mut a, &mut v, t, j);
                    }
                }
                continue;
            }
            let pivot = a[t][t];
            let offender = (t + 1..n).find(|&i| (t + 1..m).any(|j| a[i][j] % pivot != 0));
            match offender {
                Some(i) => {
                    let src = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&src) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            a[t].iter_mut().for_each(|x| *x = -*x);
        }
    }

    let diagonal = (0..n.min(m)).map(|i| a[i][i]).collect();
    Smith { diagonal, right: v }
}
