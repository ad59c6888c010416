use crate::algebra::{Monomial, Var};

use super::partition::Partition;

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries in `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// The monomial `prod_i x_i^{#occurrences of i}`.
    pub fn weight(&self) -> Monomial {
        Monomial::from_exps(
            self.rows
                .iter()
                .flatten()
                .map(|&entry| (Var::x(entry as usize), 1)),
        )
    }
}

/// All semistandard tableaux of the given shape with entries `<= n`,
/// by row-by-row backtracking with column-strictness pruning.
pub fn semistandard_tableaux(shape: &Partition, n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    visit_tableaux(shape, n, &mut |rows| {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.to_vec(),
        })
    });
    out
}

/// Calls `visit` once per semistandard filling. Entries are chosen cell by
/// cell in row-major order; each candidate is at least the entry to its
/// left and strictly greater than the entry above.
pub(crate) fn visit_tableaux(shape: &Partition, n: usize, visit: &mut impl FnMut(&[Vec<u8>])) {
    if shape.len() > n {
        return;
    }
    let mut rows: Vec<Vec<u8>> = shape
        .parts()
        .iter()
        .map(|&len| Vec::with_capacity(len as usize))
        .collect();
    fill(shape, n, 0, 0, &mut rows, visit);
}

fn fill(
    shape: &Partition,
    n: usize,
    row: usize,
    col: usize,
    rows: &mut Vec<Vec<u8>>,
    visit: &mut impl FnMut(&[Vec<u8>]),
) {
    if row == shape.len() {
        visit(rows);
        return;
    }
    if col == shape.part(row + 1) as usize {
        fill(shape, n, row + 1, 0, rows, visit);
        return;
    }
    let min_row = if col > 0 { rows[row][col - 1] } else { 1 };
    let min_col = if row > 0 && col < rows[row - 1].len() {
        rows[row - 1][col] + 1
    } else {
        1
    };
    for entry in min_row.max(min_col)..=(n as u8) {
        rows[row].push(entry);
        fill(shape, n, row, col + 1, rows, visit);
        rows[row].pop();
    }
}
