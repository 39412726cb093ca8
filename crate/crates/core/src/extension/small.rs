use super::{check_result, Complex, ExtensionResult, Strategy};
use crate::error::{Error, Result};
use crate::moment::Simplex;
use crate::triangulation::{cone, Triangulation};

/// Extension on `n ≤ d + 2` vertices: the full simplex, or the triangulation
/// `∂σ * ⟨τ⟩` of the Radon partition `[n] = σ ∪ τ` that avoids a part already
/// covered by `F`.
pub fn extend_small(f: &Complex) -> Result<ExtensionResult> {
    let (n, d) = (f.n(), f.d());
    let ground = Simplex::ground(n);
    if n as usize == d + 1 {
        let t = Triangulation::new(n, d, vec![ground])?;
        check_result(&t, f.simplices(), "small extension")?;
        return Ok(ExtensionResult {
            triangulation: t,
            strategy: Strategy::SmallN,
            steps: vec![format!("full simplex {ground}")],
            ops: 0,
        });
    }
    if n as usize != d + 2 {
        return Err(Error::Precondition(format!(
            "small extension needs n ∈ {{d+1, d+2}}, got n={n}, d={d}"
        )));
    }
    let odds = Simplex::from_iter_unchecked((1..=n).step_by(2));
    let evens = ground.difference(odds);
    let covered = |part: Simplex| f.simplices().iter().any(|&s| part.is_subset(s));
    let mut ops = 0u64;
    let (sigma, tau) = [(odds, evens), (evens, odds)]
        .into_iter()
        .find(|&(part, _)| {
            ops += 1;
            !covered(part)
        })
        .ok_or_else(|| {
            Error::InternalConsistency(format!(
                "both Radon parts {odds} and {evens} lie in members of {f}"
            ))
        })?;
    let facets: Vec<Simplex> = sigma.facets().map(|s| s.union(tau)).collect();
    let t = Triangulation::new(n, d, facets)?;
    check_result(&t, f.simplices(), "small extension")?;
    Ok(ExtensionResult {
        triangulation: t,
        strategy: Strategy::SmallN,
        steps: vec![format!(
            "Radon partition {odds} | {evens}: cone ∂{sigma} over {tau}"
        )],
        ops,
    })
}

/// Triangulation of `conv(V)` containing the `d`-simplex `σ`, obtained by
/// coning over the remaining vertices in increasing order.
pub fn extend_single(sigma: Simplex, vertices: Simplex, d: usize) -> Result<Triangulation> {
    if sigma.len() != d + 1 {
        return Err(Error::Precondition(format!("{sigma} is not a {d}-simplex")));
    }
    if !sigma.is_subset(vertices) {
        return Err(Error::Precondition(format!(
            "{sigma} is not a subset of {vertices}"
        )));
    }
    let mut t = Triangulation::on_vertices(sigma.max().expect("nonempty"), sigma, d, vec![sigma])?;
    for q in vertices.difference(sigma).vertices() {
        t = cone(&t, q)?;
    }
    check_result(&t, &[sigma], "single-simplex extension")?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn square_with_a_fixed_diagonal() {
        let c = Complex::new(4, 2, vec![simplex![1, 2, 3], simplex![1, 3, 4]]).unwrap();
        let r = extend_small(&c).unwrap();
        assert_eq!(
            r.triangulation.facets(),
            &[simplex![1, 2, 3], simplex![1, 3, 4]]
        );
    }

    #[test]
    fn five_points_in_three_space() {
        let c = Complex::new(5, 3, vec![simplex![1, 2, 3, 4]]).unwrap();
        let r = extend_small(&c).unwrap();
        assert_eq!(
            r.triangulation.facets(),
            &[
                simplex![1, 2, 3, 4],
                simplex![1, 2, 4, 5],
                simplex![2, 3, 4, 5]
            ]
        );
    }

    #[test]
    fn full_simplex() {
        let r = extend_small(&Complex::empty(6, 5).unwrap()).unwrap();
        assert_eq!(r.triangulation.facets(), &[Simplex::ground(6)]);
    }

    #[test]
    fn too_many_vertices() {
        assert!(extend_small(&Complex::empty(7, 4).unwrap()).is_err());
    }

    #[test]
    fn single_triangle_in_pentagon() {
        let t = extend_single(simplex![2, 3, 4], Simplex::ground(5), 2).unwrap();
        assert!(t.contains_facet(simplex![2, 3, 4]));
        assert_eq!(t.facets().len(), 3);
    }

    #[test]
    fn single_simplex_alone() {
        let s = simplex![1, 4, 6, 9];
        let t = extend_single(s, s, 3).unwrap();
        assert_eq!(t.facets(), &[s]);
        assert!(extend_single(simplex![1, 4], s, 3).is_err());
    }

    #[test]
    fn single_simplex_at_the_rambau_dimension() {
        let s = simplex![1, 2, 3, 4, 5, 6];
        let t = extend_single(s, Simplex::ground(8), 5).unwrap();
        assert!(t.contains_facet(s));
        assert_eq!(t.vertices(), Simplex::ground(8));
    }
}
