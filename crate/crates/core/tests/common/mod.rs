//! Helpers shared by the integration suites: margin enumeration for the
//! free product setting and brute-force routes to compare against.

#![allow(dead_code)]

use quiver_moduli::{
    is_simple_dim, is_theta_stable_with, DimVector, Quiver, SubdimTable, TorusKnotDims, Weight,
};

/// All ways to write `n` as an ordered sum of `parts` nonnegative integers.
pub fn compositions(n: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; parts];
    fn fill(remaining: u64, slot: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slot + 1 == current.len() {
            current[slot] = remaining;
            out.push(current.clone());
            return;
        }
        for value in 0..=remaining {
            current[slot] = value;
            fill(remaining - value, slot + 1, current, out);
        }
    }
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    fill(n, 0, &mut current, &mut out);
    out
}

/// Every margin pair (a; b) with p and q entries and common total `n`.
pub fn margin_pairs(p: usize, q: usize, n: u64) -> Vec<TorusKnotDims> {
    let mut out = Vec::new();
    for a in compositions(n, p) {
        for b in compositions(n, q) {
            out.push(TorusKnotDims::new(a.clone(), b).expect("equal margin sums"));
        }
    }
    out
}

/// All p x q nonnegative integer matrices with row sums `a` and column
/// sums `b`.
pub fn contingency_tables(a: &[u64], b: &[u64]) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut col_left = b.to_vec();
    fn fill_row(
        a: &[u64],
        row_index: usize,
        slot: usize,
        remaining: u64,
        row: &mut Vec<u64>,
        rows: &mut Vec<Vec<u64>>,
        col_left: &mut Vec<u64>,
        out: &mut Vec<Vec<Vec<u64>>>,
    ) {
        if slot + 1 == col_left.len() {
            if remaining > col_left[slot] {
                return;
            }
            row.push(remaining);
            col_left[slot] -= remaining;
            rows.push(row.clone());
            descend(a, row_index + 1, rows, col_left, out);
            rows.pop();
            col_left[slot] += remaining;
            row.pop();
            return;
        }
        for value in 0..=remaining.min(col_left[slot]) {
            row.push(value);
            col_left[slot] -= value;
            fill_row(a, row_index, slot + 1, remaining - value, row, rows, col_left, out);
            col_left[slot] += value;
            row.pop();
        }
    }
    fn descend(
        a: &[u64],
        row_index: usize,
        rows: &mut Vec<Vec<u64>>,
        col_left: &mut Vec<u64>,
        out: &mut Vec<Vec<Vec<u64>>>,
    ) {
        if row_index == a.len() {
            if col_left.iter().all(|&c| c == 0) {
                out.push(rows.clone());
            }
            return;
        }
        let mut row = Vec::new();
        fill_row(
            a,
            row_index,
            0,
            a[row_index],
            &mut row,
            rows,
            col_left,
            out,
        );
    }
    if a.is_empty() || b.is_empty() {
        return out;
    }
    descend(a, 0, &mut rows, &mut col_left, &mut out);
    out
}

/// The interaction-quiver route to stability, run existentially: some
/// multiplicity table with the given margins must be a simple dimension
/// vector of `gamma`.
pub fn gamma_route_stable(gamma: &Quiver, dims: &TorusKnotDims) -> bool {
    contingency_tables(dims.a(), dims.b()).iter().any(|table| {
        let flat: Vec<u64> = table.iter().flatten().copied().collect();
        is_simple_dim(gamma, &DimVector::new(flat)).expect("gamma dims line up")
    })
}

/// Stability through the generic subdimension recursion, with the zero
/// vector counted as unstable rather than an error.
pub fn schofield_stable(table: &mut SubdimTable, theta: &Weight, alpha: &DimVector) -> bool {
    if alpha.is_zero() {
        return false;
    }
    is_theta_stable_with(table, theta, alpha).expect("valid stability input")
}

/// All decompositions drawn from `stables` (distinct parts, positive
/// multiplicities) whose composite dimension vector has total at most
/// `max_total`.
pub fn decompositions_up_to(
    stables: &[DimVector],
    max_total: u64,
) -> Vec<Vec<(u64, DimVector)>> {
    let mut out = Vec::new();
    let mut current: Vec<(u64, DimVector)> = Vec::new();
    fn extend(
        stables: &[DimVector],
        from: usize,
        budget: u64,
        current: &mut Vec<(u64, DimVector)>,
        out: &mut Vec<Vec<(u64, DimVector)>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        for (offset, beta) in stables[from..].iter().enumerate() {
            let size = beta.total();
            if size == 0 || size > budget {
                continue;
            }
            let mut mult = 1;
            while mult * size <= budget {
                current.push((mult, beta.clone()));
                extend(stables, from + offset + 1, budget - mult * size, current, out);
                current.pop();
                mult += 1;
            }
        }
    }
    extend(stables, 0, max_total, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2).len(), 5);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn tables_hit_known_counts() {
        // Margins (2,2;2,2): [[2,0],[0,2]], [[1,1],[1,1]], [[0,2],[2,0]].
        assert_eq!(contingency_tables(&[2, 2], &[2, 2]).len(), 3);
        // Margins (2,1;1,1,1): place the odd column, 3 ways.
        assert_eq!(contingency_tables(&[2, 1], &[1, 1, 1]).len(), 3);
        for table in contingency_tables(&[2, 1], &[1, 1, 1]) {
            assert_eq!(table[0].iter().sum::<u64>(), 2);
            assert_eq!(table[1].iter().sum::<u64>(), 1);
            for j in 0..3 {
                assert_eq!(table[0][j] + table[1][j], 1);
            }
        }
    }

    #[test]
    fn decomposition_enumeration_is_bounded() {
        let stables = vec![
            DimVector::new(vec![1, 1]),
            DimVector::new(vec![2, 2]),
        ];
        let decomps = decompositions_up_to(&stables, 4);
        // (1,1) with multiplicity 1 or 2, (2,2) once, and nothing else.
        assert_eq!(decomps.len(), 3);
        for parts in decomps {
            let total: u64 = parts.iter().map(|(m, b)| m * b.total()).sum();
            assert!(total <= 4);
        }
    }
}
