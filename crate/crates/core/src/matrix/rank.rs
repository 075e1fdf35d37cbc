use super::Matrix;
use crate::Rational;

/// Rank over ℚ by exact Gaussian elimination. The pivot in each column is the
/// first nonzero entry among the remaining rows; there is no tolerance.
pub fn rational_rank(m: &Matrix<Rational>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        a.swap_rows(rank, p);
        let pivot = a.get(rank, col).clone();
        for i in rank + 1..rows {
            let lead = a.get(i, col);
            if lead.is_zero() {
                continue;
            }
            let factor = lead / &pivot;
            for j in col..cols {
                let v = a.get(i, j) - &(&factor * a.get(rank, j));
                a.data[i * cols + j] = v;
            }
        }
        rank += 1;
    }
    rank
}
