use ptorus::dcat::{dictionary_pair, tabulated_pairs, ObjTag};
use ptorus::mcg::MappingClassGroup;

const CAP: usize = 10_000;

#[test]
fn every_tabulated_pair_matches_its_intersection_number() {
    for n in 2..=5 {
        let group = MappingClassGroup::shared(n).unwrap();
        let pairs = tabulated_pairs(n);
        assert!(!pairs.is_empty());
        for (e, f) in pairs {
            let (expected, actual) = dictionary_pair(&group, e, f, CAP).unwrap();
            assert_eq!(expected, actual, "n = {n}, ({e}, {f})");
        }
    }
}

#[test]
fn n_two_keeps_only_the_support_rows() {
    let pairs = tabulated_pairs(2);
    assert!(pairs.contains(&(ObjTag::PsiOx(1), ObjTag::Ox(2))));
    assert!(pairs.contains(&(ObjTag::OG(2, -1), ObjTag::OY)));
    assert!(!pairs.contains(&(ObjTag::PsiOx(1), ObjTag::Ox(1))));
}
