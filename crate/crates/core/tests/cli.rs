//! Golden-output tests for the command-line front end. Set `UPDATE_GOLDEN=1`
//! to rewrite the expected files after an intentional change.

use std::path::PathBuf;

use triassoc::cli::{run, Outcome};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn invoke(args: &str) -> Outcome {
    let mut argv = vec!["triassoc".to_string()];
    for a in args.split_whitespace() {
        argv.push(if a.ends_with(".trias") { data(a) } else { a.to_string() });
    }
    run(argv)
}

const CASES: &[(&str, &str)] = &[
    ("trees0", "trees 0"),
    ("trees3", "trees 3"),
    ("trees3_records", "--records trees 3"),
    ("check_abelian2", "check abelian2.trias"),
    ("check_onesided", "check onesided.trias"),
    ("check_phi2", "check phi2.trias"),
    ("check_phi2_records", "--records check phi2.trias"),
    ("cohomology_assoc1", "cohomology assoc1.trias adjoint --n 1"),
    ("cohomology_phi2_chi", "cohomology phi2.trias chi --n 2"),
    ("cohomology_dual_records", "--records cohomology dual.trias adjoint --n 2"),
    ("cohomology_dual_fp", "--records --field p:1009 cohomology dual.trias adjoint --n 2"),
    ("homology_phi2_triv", "homology phi2.trias triv --n 2"),
    ("homology_phi2_op", "--records homology phi2.trias op:chi --n 2"),
    ("uea_abelian2", "uea abelian2.trias"),
    ("uea_phi2_records", "--records uea phi2.trias"),
    ("deform_check", "deform phi2.trias check t2"),
    ("deform_check_broken", "deform phi2.trias check broken"),
    ("deform_infinitesimal", "deform phi2.trias infinitesimal t2"),
    ("deform_obstruct", "deform phi2.trias obstruct t2"),
    ("deform_extend", "deform dual.trias extend t2"),
    ("deform_rigidity", "--records deform phi2.trias rigidity"),
    ("deform_rigid", "deform assoc1.trias rigidity"),
    ("deform_sample", "--seed 3 deform dual.trias sample --max-order 2"),
    ("free", "--records free 1 4"),
];

fn render(o: &Outcome) -> String {
    format!("{}{}[exit {}]\n", o.stdout, o.stderr, o.code)
}

#[test]
fn golden_outputs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let got = render(&invoke(args));
        let path = dir.join(format!("{name}.out"));
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if got != want {
            mismatches.push(format!("{name}:\n--- expected\n{want}--- got\n{got}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn the_documented_examples() {
    let o = invoke("check abelian2.trias");
    assert_eq!((o.stdout.as_str(), o.code), ("11/11 axioms hold\n", 0));
    let o = invoke("uea abelian2.trias");
    assert_eq!((o.stdout.as_str(), o.code), ("gr: 1, 12, 28; total 41; pbw: true\n", 0));
    let o = invoke("trees 3");
    assert_eq!(o.stdout.lines().count(), 12);
    let o = invoke("--records trees 4");
    assert_eq!(o.stdout.lines().count(), 45);
}

#[test]
fn exit_codes() {
    assert_eq!(invoke("check onesided.trias").code, 1);
    let o = invoke("check malformed.trias");
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("line 4"), "{}", o.stderr);
    assert_eq!(invoke("cohomology dual.trias adjoint --n 9").code, 2);
    assert_eq!(invoke("--budget 100 cohomology dual.trias adjoint --n 3").code, 2);
    assert_eq!(invoke("--n-max 7 trees 1").code, 1);
    assert_eq!(invoke("--field p:8 check dual.trias").code, 1);
    assert_eq!(invoke("cohomology dual.trias nosuchrep").code, 1);
    assert_eq!(invoke("cohomology onesided.trias adjoint").code, 1);
    assert_eq!(invoke("frobnicate").code, 1);
    assert_eq!(invoke("--help").code, 0);
}

#[test]
fn validation_failures_name_the_axiom() {
    let o = invoke("cohomology onesided.trias adjoint");
    assert!(o.stderr.contains("axiom (2)"), "{}", o.stderr);
}

#[test]
fn records_are_deterministic_and_field_independent() {
    for args in ["cohomology phi2.trias adjoint --n 2", "homology phi2.trias triv --n 3", "uea dual.trias", "deform phi2.trias rigidity"] {
        let a = invoke(&format!("--records {args}"));
        let b = invoke(&format!("--records {args}"));
        assert_eq!(a, b);
        let p = invoke(&format!("--records --field p:1009 {args}"));
        assert_eq!(a.stdout.replace("field=q", "field=p:1009"), p.stdout, "{args}");
    }
}
