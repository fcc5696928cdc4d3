//! Fixtures shared by the benchmarks.

use cydouble::WciModel;

/// Complete intersections of quadrics in `P^n` for growing `n`, paired with
/// the truncation order that reaches their top Chern class.
pub fn quadric_intersections(max_codim: usize) -> Vec<(WciModel, usize)> {
    (1..=max_codim)
        .map(|c| {
            let m = WciModel::new(vec![1; c + 4], vec![2; c]).expect("threefold");
            (m, 3)
        })
        .collect()
}
