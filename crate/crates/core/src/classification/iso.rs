//! Isomorphism of the `λ = 2` algebras `family5_mod(α, β, γ)`.

use crate::error::{Error, Result};
use crate::field::{Matrix, Qi, Scalar};

use super::catalog::family5_mod;

pub type Triple = [Qi; 3];

fn check_constraint(t: &Triple) -> Result<()> {
    if Qi::int(2) * t[0].clone() != t[1].clone() + t[2].clone() {
        return Err(Error::BadParameters(format!("({}, {}, {}) violates 2 alpha = beta + gamma", t[0], t[1], t[2])));
    }
    Ok(())
}

/// Whether the triples are proportional.
pub fn collinear(t: &Triple, u: &Triple) -> bool {
    (0..3).all(|i| (0..3).all(|j| (t[i].clone() * u[j].clone() - t[j].clone() * u[i].clone()).is_zero()))
        && t.iter().all(Scalar::is_zero) == u.iter().all(Scalar::is_zero)
}

/// `family5_mod(t) ≅ family5_mod(u)`: the triples are collinear.
pub fn iso_family5(t: &Triple, u: &Triple) -> Result<bool> {
    check_constraint(t)?;
    check_constraint(u)?;
    Ok(collinear(t, u))
}

/// A diagonal change of basis carrying `family5_mod(t)` onto `family5_mod(u)`, if one exists.
///
/// Under `e_v -> s_v f_v` the constants become `c_{a,b} s_{a+b} / (s_a s_b)`. Keeping
/// `e_0` and the products `e_r e_-r = e_0` forces `s_-r = 1 / s_r`, after which all
/// three of `α, β, γ` are multiplied by `s_1^2 / s_2`; the candidates tried are
/// `s_1 = ±1` with `s_2` read off from a nonzero coordinate.
pub fn diagonal_isomorphism(t: &Triple, u: &Triple) -> Result<Option<Matrix<Qi>>> {
    let a = family5_mod(&t[0], &t[1], &t[2])?;
    let b = family5_mod(&u[0], &u[1], &u[2])?;
    let ratio = match (0..3).find(|&i| !t[i].is_zero()) {
        Some(i) if !u[i].is_zero() => u[i].clone() / t[i].clone(),
        Some(_) => return Ok(None),
        None => Qi::one(),
    };
    // basis order e-2, e-1, e0, e1, e2
    for s1 in [Qi::one(), -Qi::one()] {
        let s2 = s1.clone() * s1.clone() / ratio.clone();
        let diag = [s2.inv().expect("nonzero"), s1.inv().expect("nonzero"), Qi::one(), s1.clone(), s2];
        let p = Matrix::diagonal(&diag);
        if a.is_isomorphism(&b, &p) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> Triple {
        [Qi::int(a), Qi::int(b), Qi::int(c)]
    }

    #[test]
    fn worked_examples() {
        assert!(iso_family5(&t(1, 2, 0), &t(2, 4, 0)).unwrap());
        assert!(!iso_family5(&t(1, 2, 0), &t(1, 0, 2)).unwrap());
        assert!(iso_family5(&t(0, 0, 0), &t(0, 0, 0)).unwrap());
        assert!(iso_family5(&t(1, 1, 0), &t(1, 2, 0)).is_err());
    }

    #[test]
    fn collinearity_matches_diagonal_search() {
        let grid: Vec<Triple> = (-2..=2)
            .flat_map(|b| (-2..=2).filter(move |c| (b + c) % 2 == 0).map(move |c| t((b + c) / 2, b, c)))
            .collect();
        for x in &grid {
            for y in &grid {
                let iso = iso_family5(x, y).unwrap();
                let found = diagonal_isomorphism(x, y).unwrap();
                assert_eq!(iso, found.is_some(), "{x:?} {y:?}");
            }
        }
    }

    #[test]
    fn equivalence_relation_on_grid() {
        let grid: Vec<Triple> = (-3..=3)
            .flat_map(|b| (-3..=3).filter(move |c| (b + c) % 2 == 0).map(move |c| t((b + c) / 2, b, c)))
            .collect();
        for x in &grid {
            assert!(iso_family5(x, x).unwrap());
            for y in &grid {
                assert_eq!(iso_family5(x, y).unwrap(), iso_family5(y, x).unwrap());
                for z in &grid {
                    if iso_family5(x, y).unwrap() && iso_family5(y, z).unwrap() {
                        assert!(iso_family5(x, z).unwrap());
                    }
                }
            }
        }
    }
}
