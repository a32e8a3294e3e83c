//! Small named presentations and solutions used by tests, the CLI and the demo.

use crate::presentation::{parse_presentation, Presentation};
use crate::ybe::Solution;

/// Structure monoid of the four-element irretractable solution.
pub const IRRETRACTABLE_TEXT: &str = "\
atoms: x1 x2 x3 x4
rel: x1 x2 = x3 x3
rel: x1 x3 = x2 x4
rel: x2 x1 = x4 x4
rel: x2 x3 = x3 x1
rel: x1 x4 = x4 x2
rel: x3 x2 = x4 x1
";

/// Complemented but incomplete: nothing closes `x0^-1 x1`.
pub const INCOMPLETE_TEXT: &str = "\
atoms: x0 x1 x2
rel: x0 x2 = x2 x1
rel: x1 x2 = x2 x0
";

pub fn irretractable() -> Presentation {
    parse_presentation(IRRETRACTABLE_TEXT).expect("fixture parses")
}

pub fn incomplete() -> Presentation {
    parse_presentation(INCOMPLETE_TEXT).expect("fixture parses")
}

/// The irretractable solution on four points, as one-line image tables.
///
/// Transcribed from cycle notation:
/// σ1=(2,3), σ2=(1,4), σ3=(1,2,4,3), σ4=(1,3,4,2);
/// γ1=(2,4), γ2=(1,3), γ3=(1,4,3,2), γ4=(1,2,3,4).
pub fn irretractable_solution() -> Solution {
    Solution::from_one_based(
        4,
        &[
            vec![1, 3, 2, 4],
            vec![4, 2, 3, 1],
            vec![2, 4, 1, 3],
            vec![3, 1, 4, 2],
        ],
        &[
            vec![1, 4, 3, 2],
            vec![3, 2, 1, 4],
            vec![4, 1, 2, 3],
            vec![2, 3, 4, 1],
        ],
    )
    .expect("fixture is well formed")
}

/// `r(x, y) = (y, x)` on `n` points.
pub fn trivial_solution(n: usize) -> Solution {
    let id: Vec<usize> = (0..n).collect();
    Solution::new(n, vec![id.clone(); n], vec![id; n]).expect("identity maps are in range")
}
