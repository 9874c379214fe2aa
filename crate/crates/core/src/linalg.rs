//! Small exact row-reduction kernels over the rationals.

use num_traits::Zero;

use crate::weight::{Rational, Weight};

/// Reduces `rows` to echelon form in place and returns the rank.
fn row_reduce(rows: &mut [Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(prow) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(vectors: &[Weight]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    row_reduce(&mut rows)
}

/// Whether `x` lies in the rational span of `basis`.
pub fn in_span(basis: &[Weight], x: &Weight) -> bool {
    if x.is_zero() {
        return true;
    }
    let r = rank(basis);
    let mut with_x: Vec<Weight> = basis.to_vec();
    with_x.push(x.clone());
    rank(&with_x) == r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_a2_roots() {
        let roots = [
            Weight::from_ints(&[1, -1, 0]),
            Weight::from_ints(&[0, 1, -1]),
            Weight::from_ints(&[1, 0, -1]),
        ];
        assert_eq!(rank(&roots), 2);
        assert!(in_span(&roots, &Weight::from_ints(&[2, -1, -1])));
        assert!(!in_span(&roots, &Weight::from_ints(&[1, 0, 0])));
    }
}
