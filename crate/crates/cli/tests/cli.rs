use std::process::{Command, Output};

fn rrca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrca")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn group_info_lists_irreps() {
    let o = rrca(&["group", "info", "G4"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("order 24"));
    assert!(s.contains("irrep 7 phi_{3,2} dim 3"));
}

#[test]
fn verma_reports_dimension_and_degrees() {
    let o = rrca(&["verma", "G4", "phi_1_4", "--hyperplane", "k1_1-k1_2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("dimension 24, generator degrees [-1, -1, 0, 0, 1, 1]"));
}

#[test]
fn euler_families_at_hyperplane() {
    let o = rrca(&["euler-families", "G4", "--hyperplane", "k1_1-k1_2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("{2,3,4} {phi_{1,4}, phi_{1,8}, phi_{2,5}} -4*k"));
    assert_eq!(s.lines().count(), 4);
}

#[test]
fn gordon_then_compare() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.toml");
    let b = dir.path().join("b.toml");
    let a_s = a.to_str().unwrap();
    let b_s = b.to_str().unwrap();
    let o = rrca(&["gordon", "G4", "--hyperplane", "k1_1-k1_2", "--family", "2,3,4", "--gset", "y1,y2,g2",
        "--p-exclude", "2,3,5", "--seed", "4", "--output", a_s]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // a family run is a subset of the shipped full record
    let o = rrca(&["compare", a_s]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = rrca(&["gordon", "G4", "--hyperplane", "k1_1-2*k1_2", "--output", b_s]);
    assert!(o.status.success());
    let o = rrca(&["compare", b_s]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = rrca(&["compare", b_s, a_s]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("SimpleDims"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["group", "info", "G99"][..],
        &["verma", "G4", "8"],
        &["verma", "G4", "phi_{9,9}"],
        &["gordon", "G4"],
        &["gordon", "G4", "--hyperplane", "k1_1-k1_2", "--gset", "z1"],
        &["euler-families", "G4", "--params", "q=1"],
        &["gordon", "G4", "--hyperplane", "k1_1-k1_2", "--seed", "18446744073709551615"],
        &["frobnicate"],
    ] {
        assert_eq!(rrca(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unreadable_record_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("junk.toml");
    std::fs::write(&p, "Group = 3").unwrap();
    assert_eq!(rrca(&["compare", p.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(rrca(&["compare", "/nonexistent/record.toml"]).status.code(), Some(1));
}

#[test]
fn group_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let shipped = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/C2.grp");
    std::fs::copy(shipped, dir.path().join("Z2.grp")).unwrap();
    assert_eq!(rrca(&["group", "info", "Z2"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_rrca"))
        .args(["group", "info", "Z2"])
        .env("RRCA_GROUP_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("order 2"));
}
