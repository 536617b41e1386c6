use std::fs;
use std::path::Path;
use std::process::Command;

use amalgadim::family::{generate, FamilySpec};
use amalgadim::io::{format_graph, read_amalgam, read_graph};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn amalgadim(dir: &Path, args: &[&str]) -> Out {
    amalgadim_env(dir, args, &[])
}

fn amalgadim_env(dir: &Path, args: &[&str], env: &[(&str, &str)]) -> Out {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_amalgadim"));
    cmd.current_dir(dir).args(args);
    for var in ["THREADS", "TIMEOUT", "NODES", "FORMAT", "SEED", "O"] {
        cmd.env_remove(format!("AMALGADIM_{var}"));
    }
    cmd.envs(env.iter().copied());
    let out = cmd.output().unwrap();
    Out {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn value<'a>(out: &'a Out, key: &str) -> &'a str {
    out.stdout
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no `{key}` in\n{}", out.stdout))
}

#[test]
fn dim_of_generated_families() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        amalgadim(d, &["gen", "complete", "5", "-o", "k5.gr"]).code,
        0
    );
    let k5 = amalgadim(d, &["dim", "k5.gr"]);
    assert_eq!(k5.code, 0);
    assert_eq!(value(&k5, "dim_l"), "4");
    assert_eq!(value(&k5, "basis"), "u1,u2,u3,u4");
    assert_eq!(amalgadim(d, &["gen", "path:7", "-o", "p7.gr"]).code, 0);
    assert_eq!(value(&amalgadim(d, &["dim", "p7.gr"]), "dim_l"), "1");
}

#[test]
fn dim_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("bad.gr"), "v a\nv b\ne a b\nnonsense here\n").unwrap();
    let bad = amalgadim(d, &["dim", "bad.gr"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("bad.gr:4"), "{}", bad.stderr);

    fs::write(d.join("split.gr"), "v a\nv b\nv c\nv d\ne a b\ne c d\n").unwrap();
    assert_eq!(amalgadim(d, &["dim", "split.gr"]).code, 3);

    amalgadim(d, &["gen", "complete:6", "-o", "k6.gr"]);
    let tight = amalgadim(d, &["--nodes", "1", "dim", "k6.gr"]);
    assert_eq!(tight.code, 4);
    assert_eq!(value(&tight, "dim_l"), "timeout");
    assert_eq!(value(&tight, "n"), "6");

    assert_eq!(amalgadim(d, &["dim", "missing.gr"]).code, 2);
    assert_eq!(amalgadim(d, &["frobnicate"]).code, 2);
    assert_eq!(amalgadim(d, &["--threads", "0", "dim", "k6.gr"]).code, 2);
}

#[test]
fn amalgamate_writes_host_with_provenance() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        amalgadim(d, &["gen", "one-plus-one", "-o", "opo.amg"]).code,
        0
    );
    let out = amalgadim(d, &["amalgamate", "opo.amg", "-o", "H.gr"]);
    assert_eq!(out.code, 0);
    assert_eq!(value(&out, "n_H"), "5");
    assert_eq!(value(&out, "n"), "2");
    assert_eq!(value(&out, "isometric"), "false");
    let host = fs::read_to_string(d.join("H.gr")).unwrap();
    assert!(host.lines().any(|l| l.starts_with("# from p1.")));
    let dim = amalgadim(d, &["dim", "H.gr"]);
    assert_eq!(value(&dim, "dim_l"), "2");
}

#[test]
fn amalgamate_two_k4_and_bad_map() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    amalgadim(d, &["gen", "complete:4", "-o", "k4.gr"]);
    amalgadim(d, &["gen", "complete:2", "-o", "k2.gr"]);
    let spec =
        "j k2.gr\npart 1 k4.gr\npart 2 k4.gr\nmap 1 u1 u1\nmap 1 u2 u2\nmap 2 u1 u3\nmap 2 u2 u4\n";
    fs::write(d.join("k4s.amg"), spec).unwrap();
    let out = amalgadim(d, &["amalgamate", "k4s.amg", "-o", "H.gr"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(value(&out, "n_H"), "6");
    assert_eq!(value(&out, "isometric"), "true");

    fs::write(
        d.join("broken.amg"),
        spec.replace("map 2 u2 u4", "map 2 u2 u9"),
    )
    .unwrap();
    assert_eq!(
        amalgadim(d, &["amalgamate", "broken.amg", "-o", "x.gr"]).code,
        5
    );
    fs::write(
        d.join("garbled.amg"),
        spec.replace("map 2 u2 u4", "mop 2 u2 u4"),
    )
    .unwrap();
    assert_eq!(
        amalgadim(d, &["amalgamate", "garbled.amg", "-o", "x.gr"]).code,
        2
    );
}

#[test]
fn bounds_on_generated_constructions() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        amalgadim(d, &["gen", "watermelon", "4", "-o", "w4.amg"]).code,
        0
    );
    let w = amalgadim(d, &["bounds", "w4.amg", "--exact"]);
    assert_eq!(w.code, 0);
    assert_eq!(value(&w, "exact"), "5");
    assert_eq!(value(&w, "upper_iso"), "na");
    assert_eq!(value(&w, "lower_le_exact"), "true");

    amalgadim(d, &["gen", "wheel-prism", "8", "-o", "wp.amg"]);
    let wp = amalgadim(d, &["bounds", "wp.amg", "--exact"]);
    assert_eq!((value(&wp, "lower"), value(&wp, "exact")), ("2", "2"));
    let without = amalgadim(d, &["bounds", "wp.amg"]);
    assert_eq!(value(&without, "exact"), "na");

    let tight = amalgadim(d, &["--nodes", "1", "bounds", "w4.amg", "--exact"]);
    assert_eq!(tight.code, 4);
    assert_eq!(value(&tight, "exact"), "timeout");
    assert_eq!(value(&tight, "n_H"), "65");
}

#[test]
fn every_catalogue_construction_generates() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cases: &[&[&str]] = &[
        &["one-plus-one"],
        &["spider", "3"],
        &["wheel-prism", "5"],
        &["crude-tight", "2", "4,4"],
        &["fan-chain", "9", "3"],
        &["fan-chain-spaced", "2", "2"],
        &["chi", "cycle:5", "3"],
        &["subdivided-join", "path:3", "2"],
        &["join-kbar", "cycle:5", "2,2"],
        &["sum-tight"],
        &["sum-tight-second", "5"],
        &["k5-pair"],
        &["k5-c5-covers"],
        &["k4-gadget"],
        &["fan-pair"],
        &["lower-tight-join"],
        &["odd-paths", "3,5,7"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let out_name = format!("c{i}.amg");
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["-o", &out_name]);
        let out = amalgadim(d, &full);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        let again = amalgadim(d, &["amalgamate", &out_name, "-o", "h.gr"]);
        assert_eq!(value(&again, "n_H"), value(&out, "n_H"), "{args:?}");
    }
    assert_eq!(
        amalgadim(d, &["gen", "no-such-thing", "-o", "x.gr"]).code,
        2
    );
    assert_eq!(amalgadim(d, &["gen", "spider", "x", "-o", "x.amg"]).code, 2);
}

#[test]
fn emitted_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    amalgadim(d, &["gen", "fan", "1", "9", "-o", "f.gr"]);
    let g = read_graph(&d.join("f.gr")).unwrap();
    assert_eq!((g.order(), g.size()), (10, 17));
    assert_eq!(
        format_graph(&g, &[]),
        format_graph(&generate(&FamilySpec::Fan(1, 9)).unwrap(), &[])
    );

    amalgadim(d, &["gen", "k5-c5-covers", "-o", "k.amg"]);
    amalgadim(d, &["amalgamate", "k.amg", "-o", "H.gr"]);
    let am = read_amalgam(&d.join("k.amg")).unwrap();
    let host = read_graph(&d.join("H.gr")).unwrap();
    assert_eq!(host.names(), am.host().names());
    assert_eq!(host.edges(), am.host().edges());
}

#[test]
fn verify_paper_filter() {
    let dir = tempfile::tempdir().unwrap();
    let out = amalgadim(dir.path(), &["verify-paper", "--filter", "wheel-prism"]);
    let dims: Vec<&str> = out
        .stdout
        .lines()
        .filter(|l| l.contains("| dim_l(H) |"))
        .collect();
    assert_eq!(dims.len(), 9);
    for n in 5..=12 {
        let row = dims
            .iter()
            .find(|l| l.contains(&format!("wheel-prism n={n} ")))
            .unwrap();
        assert!(row.starts_with("PASS"), "{row}");
    }
    assert!(dims
        .iter()
        .any(|l| l.starts_with("FAIL") && l.contains("n=4 ")));
    assert_eq!(out.code, 1);

    let ok = amalgadim(dir.path(), &["verify-paper", "--filter", "one-plus-one"]);
    assert_eq!(ok.code, 0);
    assert_eq!(value(&ok, "fail"), "0");
}

#[test]
fn tsv_format_and_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    amalgadim(d, &["gen", "cycle:5", "-o", "c5.gr"]);
    let flag = amalgadim(d, &["--format", "tsv", "dim", "c5.gr"]);
    assert!(flag.stdout.contains("dim_l\t2\n"));
    let env = amalgadim_env(d, &["dim", "c5.gr"], &[("AMALGADIM_FORMAT", "tsv")]);
    assert_eq!(env.stdout, flag.stdout);
    let nodes = amalgadim_env(d, &["dim", "c5.gr"], &[("AMALGADIM_NODES", "1")]);
    assert_eq!(nodes.code, 4);
}

#[test]
fn fuzz_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = amalgadim(d, &["fuzz", "40", "12", "--seed", "7"]);
    let b = amalgadim(d, &["fuzz", "40", "12", "--seed", "7"]);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(value(&a, "cases"), "40");
    assert_eq!(value(&a, "invariant_violations"), "0");
    let c = amalgadim(
        d,
        &[
            "--threads",
            "4",
            "fuzz",
            "40",
            "12",
            "--seed",
            "7",
            "-o",
            "bundles",
        ],
    );
    assert_eq!(c.code, 0);
    let count: usize = value(&c, "bundles").parse().unwrap();
    let written = fs::read_dir(d.join("bundles"))
        .map(|r| r.count())
        .unwrap_or(0);
    assert_eq!(written, count);
    for e in fs::read_dir(d.join("bundles"))
        .into_iter()
        .flatten()
        .flatten()
    {
        assert!(e.path().join("H.gr").exists() && e.path().join("report.tsv").exists());
    }
}

#[test]
fn output_independent_of_threads() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    amalgadim(d, &["gen", "chi", "complete:4", "4", "-o", "chi.amg"]);
    amalgadim(d, &["gen", "prism:9", "-o", "p9.gr"]);
    for args in [&["bounds", "chi.amg", "--exact"][..], &["dim", "p9.gr"][..]] {
        let one = amalgadim(d, &[&["--threads", "1"][..], args].concat());
        let four = amalgadim(d, &[&["--threads", "4"][..], args].concat());
        assert_eq!(one.code, 0);
        assert_eq!(one.stdout, four.stdout);
    }
}
