use crate::error::Result;
use crate::extension::Complex;
use crate::geometry::visible_facets;
use crate::moment::Simplex;
use crate::simplex;

/// Three 5-simplices on `[8]` to which no further 5-simplex can be added.
pub fn rambau_example() -> Complex {
    Complex::new(
        8,
        5,
        vec![
            simplex![1, 2, 3, 4, 5, 6],
            simplex![3, 4, 5, 6, 7, 8],
            simplex![1, 2, 3, 6, 7, 8],
        ],
    )
    .expect("the family is pairwise non-overlapping")
}

/// Adds vertex `n + 1`, coned over every facet of `C(n, D)` visible from it.
pub fn lift_n(f: &Complex) -> Result<Complex> {
    let (n, d) = (f.n(), f.d());
    let q = n + 1;
    let mut simplices = f.simplices().to_vec();
    simplices.extend(
        visible_facets(Simplex::ground(n), d, q)?
            .into_iter()
            .map(|s| s.with(q)),
    );
    Complex::new(q, d, simplices)
}

/// Joins every member with the new vertex `n + 1`, one dimension up.
pub fn lift_d(f: &Complex) -> Result<Complex> {
    let q = f.n() + 1;
    Complex::new(
        q,
        f.d() + 1,
        f.simplices().iter().map(|s| s.with(q)).collect(),
    )
}
