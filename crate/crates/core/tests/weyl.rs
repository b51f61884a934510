use unipotent_e6::rootdata::{build_cartan_e6, generate_root_system, RootSystem};
use unipotent_e6::weyl::*;
use unipotent_e6::Case;

fn rs() -> RootSystem {
    generate_root_system(&build_cartan_e6()).unwrap()
}

#[test]
fn e6_group_and_table() {
    let rs = rs();
    let wd = WeylData::build(&rs, Case::Untwisted).unwrap();
    assert_eq!(wd.group.order(), 51840);
    assert_eq!(wd.classes.len(), 25);
    assert_eq!(wd.group.max_length(), 36);
    assert_eq!(wd.table.fake_degrees.degrees, vec![2, 5, 6, 8, 9, 12]);
    assert_eq!(degrees_from_poincare(&wd.group).unwrap(), vec![2, 5, 6, 8, 9, 12]);
    assert_eq!(wd.table.dimension_sum_of_squares(), 51840);
    // 25 characters, none tagged: the (d, b) pairs of W(E6) are distinct.
    assert!(wd.table.labels.iter().all(|l| l.tag.is_none()));
    assert_eq!(wd.table.labels[0], CharLabel::new(1, 0));
    assert_eq!(*wd.table.labels.last().unwrap(), CharLabel::new(90, 8));
}

#[test]
fn f4_group_and_table() {
    let rs = rs();
    let wd = WeylData::build(&rs, Case::Twisted).unwrap();
    assert_eq!(wd.group.order(), 1152);
    assert_eq!(wd.classes.len(), 25);
    assert_eq!(wd.table.fake_degrees.degrees, vec![2, 6, 8, 12]);
    assert_eq!(wd.table.dimension_sum_of_squares(), 1152);
    let tagged = wd.table.labels.iter().filter(|l| l.tag.is_some()).count();
    assert!(tagged > 0 && tagged % 2 == 0);
    assert!(wd.table.position(&CharLabel::tagged(6, 6, Tag::Prime)).is_some());
    assert!(wd.table.position(&CharLabel::tagged(6, 6, Tag::DoublePrime)).is_some());
}

#[test]
fn fixed_points_of_sigma_form_f4() {
    let rs = rs();
    let w = WeylData::build(&rs, Case::Untwisted).unwrap();
    let f = WeylData::build(&rs, Case::Twisted).unwrap();
    assert_eq!(check_fixed_points(&w.group, &f.group, Case::Twisted).unwrap(), 1152);
    let f4: Vec<Vec<usize>> = F4_COXETER_MATRIX.iter().map(|r| r.to_vec()).collect();
    assert_eq!(f.system.coxeter_matrix, f4);
}
