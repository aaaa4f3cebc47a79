//! Small algebras, representations and corepresentations with integer
//! structure constants, used by tests, examples and the bindings.

use crate::algebra::{Corepresentation, Op, Representation, Tensor3, TriasAlgebra};
use crate::linalg::Field;

/// `d = 1`, all three products equal to multiplication in `K`.
pub fn scalar<K: Field>(field: K) -> TriasAlgebra<K> {
    let t = Tensor3::filled([1, 1, 1], field.one());
    TriasAlgebra::from_associative(field, 1, t).expect("shape is fixed")
}

/// `K[x]/(x²)` with all products equal; basis `1, x`.
pub fn dual_numbers<K: Field>(field: K) -> TriasAlgebra<K> {
    let mut t = Tensor3::zeros(&field, [2, 2, 2]);
    t.set(0, 0, 0, field.one());
    t.set(0, 1, 1, field.one());
    t.set(1, 0, 1, field.one());
    TriasAlgebra::from_associative(field, 2, t).expect("shape is fixed")
}

/// The diagonal algebra `K × K` with all products equal.
pub fn diagonal<K: Field>(field: K) -> TriasAlgebra<K> {
    let mut t = Tensor3::zeros(&field, [2, 2, 2]);
    t.set(0, 0, 0, field.one());
    t.set(1, 1, 1, field.one());
    TriasAlgebra::from_associative(field, 2, t).expect("shape is fixed")
}

/// A two-dimensional algebra with three distinct products built from the
/// functional `φ(e_0) = 1, φ(e_1) = 0`: `x ⊣ y = φ(y)x`, `x ⊢ y = φ(x)y`,
/// `x ⊥ y = φ(x)φ(y)e_0`.
pub fn phi2<K: Field>(field: K) -> TriasAlgebra<K> {
    let phi = [1i64, 0];
    let left = Tensor3::from_fn([2, 2, 2], |x, y, k| field.from_i64(phi[y] * i64::from(x == k)));
    let right = Tensor3::from_fn([2, 2, 2], |x, y, k| field.from_i64(phi[x] * i64::from(y == k)));
    let middle = Tensor3::from_fn([2, 2, 2], |x, y, k| field.from_i64(phi[x] * phi[y] * i64::from(k == 0)));
    TriasAlgebra::new(field, 2, [left, right, middle]).expect("shape is fixed")
}

/// Two-dimensional nilpotent algebra: `e_0 * e_0 = c_* e_1` for each product,
/// all other products zero.
pub fn nil2<K: Field>(field: K, coeffs: [i64; 3]) -> TriasAlgebra<K> {
    let products = Op::ALL.map(|op| {
        let mut t = Tensor3::zeros(&field, [2, 2, 2]);
        t.set(0, 0, 1, field.from_i64(coeffs[op.index()]));
        t
    });
    TriasAlgebra::new(field, 2, products).expect("shape is fixed")
}

/// The ground field as a module through a functional `φ` that is
/// multiplicative for all three products: `a * x = φ(a)x = x * a`.
pub fn character<K: Field>(alg: &TriasAlgebra<K>, phi: &[i64]) -> Representation<K> {
    let f = alg.field().clone();
    let d = alg.dim();
    let l = Tensor3::from_fn([d, 1, 1], |a, _, _| f.from_i64(phi[a]));
    let r = Tensor3::from_fn([1, d, 1], |_, a, _| f.from_i64(phi[a]));
    Representation::new(f, d, 1, [l.clone(), l.clone(), l], [r.clone(), r.clone(), r]).expect("shape is fixed")
}

/// Named algebras of dimension at most two.
pub fn small_algebras<K: Field>(field: &K) -> Vec<(&'static str, TriasAlgebra<K>)> {
    vec![
        ("abelian1", TriasAlgebra::abelian(field.clone(), 1)),
        ("abelian2", TriasAlgebra::abelian(field.clone(), 2)),
        ("scalar", scalar(field.clone())),
        ("dual", dual_numbers(field.clone())),
        ("diagonal", diagonal(field.clone())),
        ("phi2", phi2(field.clone())),
        ("nil2", nil2(field.clone(), [1, 2, 3])),
        ("scalar+abelian1", scalar(field.clone()).direct_sum(&TriasAlgebra::abelian(field.clone(), 1)).expect("same field")),
    ]
}

/// Representations of dimension at most two for a given algebra.
pub fn small_representations<K: Field>(alg: &TriasAlgebra<K>) -> Vec<(String, Representation<K>)> {
    let f = alg.field().clone();
    let d = alg.dim();
    let mut out = vec![
        ("zero1".to_string(), Representation::zero(f.clone(), d, 1)),
        ("zero2".to_string(), Representation::zero(f.clone(), d, 2)),
    ];
    if d <= 2 {
        out.push(("adjoint".to_string(), Representation::adjoint(alg)));
    }
    for phi in multiplicative_functionals(alg) {
        let name = format!("character{phi:?}");
        out.push((name, character(alg, &phi)));
    }
    out
}

/// Corepresentations of dimension at most two: trivial, zero and opposites.
pub fn small_corepresentations<K: Field>(alg: &TriasAlgebra<K>) -> Vec<(String, Corepresentation<K>)> {
    let f = alg.field().clone();
    let d = alg.dim();
    let mut out = vec![
        ("trivial".to_string(), Corepresentation::trivial(f.clone(), d)),
        ("zero2".to_string(), Corepresentation::zero(f, d, 2)),
    ];
    for (name, rep) in small_representations(alg) {
        if rep.dim() <= 2 && !rep.is_zero() {
            out.push((format!("op:{name}"), Corepresentation::opposite(&rep)));
        }
    }
    out
}

/// 0/1 functionals that are multiplicative for all three products.
fn multiplicative_functionals<K: Field>(alg: &TriasAlgebra<K>) -> Vec<Vec<i64>> {
    let d = alg.dim();
    let f = alg.field();
    let mut out = Vec::new();
    for mask in 1u32..(1 << d) {
        let phi: Vec<i64> = (0..d).map(|i| i64::from(mask >> i & 1)).collect();
        let ok = Op::ALL.iter().all(|&op| {
            (0..d).all(|a| {
                (0..d).all(|b| {
                    let prod = alg.mul_basis(op, a, b);
                    let mut lhs = f.zero();
                    for (c, v) in prod.iter().enumerate() {
                        f.add_mul_assign(&mut lhs, v, &f.from_i64(phi[c]));
                    }
                    lhs == f.from_i64(phi[a] * phi[b])
                })
            })
        });
        if ok {
            out.push(phi);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    #[test]
    fn fixtures_are_valid() {
        for (name, alg) in small_algebras(&Rationals) {
            assert!(alg.check_axioms().is_empty(), "{name}");
            for (rname, rep) in small_representations(&alg) {
                assert!(rep.check(&alg).unwrap().is_empty(), "{name}/{rname}");
            }
            for (cname, corep) in small_corepresentations(&alg) {
                assert!(corep.check(&alg).unwrap().is_empty(), "{name}/{cname}");
            }
        }
    }

    #[test]
    fn phi2_products_are_distinct() {
        let a = phi2(Rationals);
        assert_ne!(a.product(Op::Left), a.product(Op::Right));
        assert_ne!(a.product(Op::Left), a.product(Op::Middle));
        assert_eq!(multiplicative_functionals(&a), vec![vec![1, 0]]);
    }
}
