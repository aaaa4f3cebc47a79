mod common;

use proptest::prelude::*;
use triassoc::algebra::Op;
use triassoc::complexes::circ_product;
use triassoc::trees::{enumerate, PlanarTree, TreeCatalog};

#[test]
fn level_sizes_match_the_counting_oracle() {
    for n in 0..=6 {
        assert_eq!(enumerate(n).len() as u64, common::tree_count(n + 1), "degree {n}");
    }
    assert_eq!(common::tree_count(7), 903);
}

#[test]
fn levels_have_no_duplicates_and_correct_degrees() {
    for n in 0..=5 {
        let level = enumerate(n);
        let set: std::collections::HashSet<_> = level.iter().collect();
        assert_eq!(set.len(), level.len());
        assert!(level.iter().all(|t| t.degree() == n));
    }
}

/// Counts of failures per identity family over all trees of degree `n`:
/// `[d d, s s, d_j s_j = d_{j+1} s_j = id, d_i s_j (i < j), d_i s_j (i > j + 1)]`.
fn identity_failures(cat: &TreeCatalog, n: usize) -> [usize; 5] {
    let mut fails = [0; 5];
    for psi in cat.trees(n) {
        if n >= 2 {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = psi.face(j).unwrap().face(i).unwrap();
                    fails[0] += usize::from(lhs != psi.face(i).unwrap().face(j - 1).unwrap());
                }
            }
        }
        for j in 0..=n {
            for i in 0..=j {
                let lhs = psi.degeneracy(j).unwrap().degeneracy(i).unwrap();
                fails[1] += usize::from(lhs != psi.degeneracy(i).unwrap().degeneracy(j + 1).unwrap());
            }
        }
        for j in 0..=n {
            let s = psi.degeneracy(j).unwrap();
            for i in 0..=n + 1 {
                let lhs = s.face(i).unwrap();
                if i == j || i == j + 1 {
                    fails[2] += usize::from(&lhs != psi);
                } else if i < j {
                    fails[3] += usize::from(lhs != psi.face(i).unwrap().degeneracy(j - 1).unwrap());
                } else {
                    fails[4] += usize::from(lhs != psi.face(i - 1).unwrap().degeneracy(j).unwrap());
                }
            }
        }
    }
    fails
}

#[test]
fn face_and_degeneracy_identities_exhaustive() {
    let cat = TreeCatalog::up_to(6);
    for n in 0..=5 {
        let [dd, ss, id, _, _] = identity_failures(&cat, n);
        assert_eq!((dd, ss, id), (0, 0, 0), "degree {n}");
    }
}

/// The mixed identities `d_i s_j = s_{j-1} d_i` (i < j) and
/// `d_i s_j = s_j d_{i-1}` (i > j + 1) do not hold for these maps: deleting
/// a leaf can contract the vertex that the degeneracy would grow.
#[test]
fn mixed_identities_fail_on_contracting_faces() {
    let cat = TreeCatalog::up_to(5);
    let counts: Vec<[usize; 2]> = (0..=4).map(|n| {
        let f = identity_failures(&cat, n);
        [f[3], f[4]]
    }).collect();
    assert_eq!(counts, vec![[0, 0], [0, 0], [2, 2], [9, 9], [44, 44]]);
    let psi: PlanarTree = "(* (* *))".parse().unwrap();
    let lhs = psi.degeneracy(1).unwrap().face(3).unwrap();
    let rhs = psi.face(2).unwrap().degeneracy(1).unwrap();
    assert_eq!(lhs.to_string(), "(* (* *))");
    assert_eq!(rhs.to_string(), "(* * *)");
}

#[test]
fn circ_rows_over_degree_three() {
    use Op::*;
    let t3 = enumerate(3);
    let first: Vec<Op> = t3.iter().map(|t| circ_product(t, 0).unwrap()).collect();
    let last: Vec<Op> = t3.iter().map(|t| circ_product(t, 3).unwrap()).collect();
    assert_eq!(first, vec![Left, Left, Right, Right, Right, Left, Middle, Middle, Right, Right, Middle]);
    assert_eq!(last, vec![Left, Left, Left, Right, Right, Left, Left, Middle, Middle, Right, Middle]);
}

fn tree_of_degree(max: usize) -> impl Strategy<Value = PlanarTree> {
    (0..=max).prop_flat_map(|n| {
        let level = enumerate(n);
        (0..level.len()).prop_map(move |i| level[i].clone())
    })
}

proptest! {
    #[test]
    fn face_after_degeneracy_is_identity(psi in tree_of_degree(5), j in 0usize..6) {
        let j = j % (psi.degree() + 1);
        let s = psi.degeneracy(j).unwrap();
        prop_assert_eq!(s.degree(), psi.degree() + 1);
        prop_assert_eq!(&s.face(j).unwrap(), &psi);
        prop_assert_eq!(&s.face(j + 1).unwrap(), &psi);
    }

    #[test]
    fn graft_and_decompose_are_inverse(a in tree_of_degree(3), b in tree_of_degree(3), c in tree_of_degree(2)) {
        let g = PlanarTree::graft(vec![a.clone(), b.clone(), c.clone()]).unwrap();
        prop_assert_eq!(g.decompose(), &[a.clone(), b.clone(), c.clone()][..]);
        prop_assert_eq!(g.leaves(), a.leaves() + b.leaves() + c.leaves());
        prop_assert_eq!(PlanarTree::graft(g.decompose().to_vec()).unwrap(), g);
    }

    #[test]
    fn text_form_roundtrips(psi in tree_of_degree(5)) {
        let back: PlanarTree = psi.to_string().parse().unwrap();
        prop_assert_eq!(back, psi);
    }

    #[test]
    fn faces_land_one_degree_down(psi in tree_of_degree(5)) {
        prop_assume!(psi.degree() >= 1);
        for i in 0..=psi.degree() {
            prop_assert_eq!(psi.face(i).unwrap().degree(), psi.degree() - 1);
        }
        prop_assert!(psi.face(psi.degree() + 1).is_err());
    }
}
