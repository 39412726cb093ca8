use super::Complex;
use crate::error::{Error, Result};
use crate::moment::Simplex;

/// Replaces `F` by the low-dimensional faces that already force its
/// extensions: triangles and edges for `d = 3`, triangles for `d = 4`.
pub fn skeleton_reduce(f: &Complex) -> Result<Complex> {
    let keep: Vec<Simplex> = match f.d() {
        3 => f
            .simplices()
            .iter()
            .flat_map(|&s| match s.len() {
                4 => s.subsets(3),
                2 | 3 => vec![s],
                _ => Vec::new(),
            })
            .collect(),
        4 => f
            .simplices()
            .iter()
            .flat_map(|&s| {
                if s.len() >= 3 {
                    s.subsets(3)
                } else {
                    Vec::new()
                }
            })
            .collect(),
        d => {
            return Err(Error::Unsupported(format!(
                "skeleton reduction in dimension {d}"
            )))
        }
    };
    Complex::new(f.n(), f.d(), keep)
}
