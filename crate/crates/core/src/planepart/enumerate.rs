use num::BigRational;

use crate::algebra::{Monomial, Polynomial, Var};

use super::{Constraint, EnumerationCaps, PPClass, PlanePartError, PlanePartition, WeightRule};

/// All plane partitions in the class's box satisfying its constraints, in
/// a deterministic order (cells filled row-major, values ascending).
pub fn enumerate_pp(
    class: &PPClass,
    caps: EnumerationCaps,
) -> Result<Vec<PlanePartition>, PlanePartError> {
    let mut out = Vec::new();
    visit(class, caps, &mut |pp| out.push(pp.clone()))?;
    Ok(out)
}

/// `sum_P q^{weight(P)}` over the enumerated class.
pub fn gf_enumerate(
    class: &PPClass,
    weight: WeightRule,
    caps: EnumerationCaps,
) -> Result<Polynomial, PlanePartError> {
    let mut gf = Polynomial::zero();
    visit(class, caps, &mut |pp| {
        let e = match weight {
            WeightRule::Size => pp.size(),
            WeightRule::OrbitCount => pp.occupied_orbits(),
        };
        gf += &Polynomial::term(
            Monomial::var(Var::Q, e as u32),
            BigRational::from_integer(1.into()),
        );
    })?;
    Ok(gf)
}

fn visit(
    class: &PPClass,
    caps: EnumerationCaps,
    f: &mut impl FnMut(&PlanePartition),
) -> Result<(), PlanePartError> {
    if class.rows > caps.max_rows || class.cols > caps.max_cols || class.max_height > caps.max_height
    {
        return Err(PlanePartError::BoxTooLarge {
            rows: class.rows,
            cols: class.cols,
            max_height: class.max_height,
            caps,
        });
    }
    let mut heights = vec![vec![0u32; class.cols]; class.rows];
    fill(class, 0, 0, &mut heights, f);
    Ok(())
}

/// Monotone-matrix backtracking: each cell is bounded by its upper and left
/// neighbors; symmetry forces the lower triangle; column strictness prunes
/// in place. Row-length and diagonal parities are checked at the leaves.
fn fill(
    class: &PPClass,
    i: usize,
    j: usize,
    heights: &mut Vec<Vec<u32>>,
    f: &mut impl FnMut(&PlanePartition),
) {
    if i == class.rows {
        if leaf_ok(class, heights) {
            let pp = PlanePartition::new(heights.clone());
            f(&pp);
        }
        return;
    }
    if j == class.cols {
        fill(class, i + 1, 0, heights, f);
        return;
    }

    let mut upper = class.max_height;
    if i > 0 {
        upper = upper.min(heights[i - 1][j]);
    }
    if j > 0 {
        upper = upper.min(heights[i][j - 1]);
    }

    let above = if i > 0 { Some(heights[i - 1][j]) } else { None };
    let strict_ok = |val: u32| {
        !class.has(Constraint::ColumnStrict)
            || val == 0
            || above.map_or(true, |limit| val < limit)
    };

    if class.has(Constraint::Symmetric) && i > j {
        let forced = heights[j][i];
        if forced <= upper && strict_ok(forced) {
            heights[i][j] = forced;
            fill(class, i, j + 1, heights, f);
            heights[i][j] = 0;
        }
        return;
    }

    for val in 0..=upper {
        if !strict_ok(val) {
            continue;
        }
        heights[i][j] = val;
        fill(class, i, j + 1, heights, f);
        heights[i][j] = 0;
    }
}

fn leaf_ok(class: &PPClass, heights: &[Vec<u32>]) -> bool {
    for c in &class.constraints {
        let ok = match c {
            Constraint::Symmetric | Constraint::ColumnStrict => true, // enforced during fill
            Constraint::AllRowsEvenLength => heights
                .iter()
                .all(|row| row.iter().filter(|&&h| h > 0).count() % 2 == 0),
            Constraint::DiagonalPartsEven => {
                (0..class.rows.min(class.cols)).all(|i| heights[i][i] % 2 == 0)
            }
            Constraint::DiagonalLevelsEven => (1..=class.max_height).all(|k| {
                (0..class.rows.min(class.cols))
                    .filter(|&i| heights[i][i] >= k)
                    .count()
                    % 2
                    == 0
            }),
            Constraint::AllHeightsEven => heights.iter().flatten().all(|&h| h % 2 == 0),
        };
        if !ok {
            return false;
        }
    }
    true
}
