use std::process::Command;

use hfalg::hf::{kpair, print_hf, von_neumann, HfSet};
use hfalg_cli::{cmd_hf, cmd_term, verify, verify_all, Params, Status, THEOREM_IDS};

fn hfalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hfalg")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn hf_command() {
    assert_eq!(cmd_hf("ord(3)").unwrap(), "{{},{{}},{{},{{}}}}  rank=3  ordinal=yes");
    assert_eq!(cmd_hf("pow({})").unwrap(), "{{}}  rank=1  ordinal=yes");
    assert_eq!(cmd_hf("kpair({},{{}})").unwrap(), "{{{}},{{},{{}}}}  rank=3  ordinal=no");
    let (code, _, err) = hfalg(&["hf", "{{}"]);
    assert_eq!(code, 2);
    assert!(err.contains("offset 3"), "{err}");
}

#[test]
fn term_command() {
    let sig = hfalg_cli::builtin_signature("sig-0st.txt");
    let out = cmd_term(&sig, "s t 0", false).unwrap();
    assert!(out.contains("height  2") && out.contains("tokens  3") && out.contains("tree    s(t(0))"), "{out}");
    let (code, out, _) = hfalg(&["term", "sig-0plus.txt", "+ 0 0"]);
    assert_eq!(code, 0);
    assert!(out.contains("height  1"));
    let (code, _, err) = hfalg(&["term", "sig-0plus.txt", "+ 0"]);
    assert_eq!(code, 2);
    assert!(err.contains("1 argument(s) still expected"), "{err}");
    let (code, out, _) = hfalg(&["term", "--compact", "sig-0st.txt", "st0"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn signature_files_on_disk() {
    let dir = std::env::temp_dir().join(format!("hfalg-sig-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("custom.txt");
    std::fs::write(&path, "z 0\nf 1\n").unwrap();
    let (code, out, _) = hfalg(&["vnn", "build", path.to_str().unwrap(), "f z"]);
    // z^V = (ord 0), f^V(z^V) = ({z^V}, ord 1), tuples as sets of Kuratowski pairs
    let z = HfSet::singleton(kpair(&von_neumann(0), &von_neumann(0)));
    let fz = HfSet::pair(kpair(&von_neumann(0), &HfSet::singleton(z)), kpair(&von_neumann(1), &von_neumann(1)));
    assert_eq!((code, out.trim()), (0, print_hf(&fz).as_str()));
    std::fs::write(&path, "z 0\nz 1\n").unwrap();
    let (code, _, err) = hfalg(&["term", path.to_str().unwrap(), "z"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = hfalg(&["term", "no-such-file.txt", "z"]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn vnn_commands() {
    let (_, built, _) = hfalg(&["vnn", "build", "sig-1s.txt", "s 1"]);
    let (code, out, _) = hfalg(&["vnn", "classify", "sig-1s.txt", built.trim()]);
    assert_eq!(code, 0);
    assert!(out.contains("VNN_S   yes"), "{out}");
    let (_, out, _) = hfalg(&["vnn", "classify", "sig-1s.txt", "{}"]);
    assert!(out.contains("D_S     no") && out.contains("fails   (i)"), "{out}");
}

#[test]
fn small_commands() {
    assert_eq!(hfalg(&["expset", "--bound", "100"]).1.trim(), "{1, 2, 6, 42}");
    assert_eq!(hfalg(&["homcount", "6", "3"]).1.trim(), "1");
    assert_eq!(hfalg(&["homcount", "6", "4"]).1.trim(), "0");
    assert!(hfalg(&["goodprimes"]).1.contains("rejected 1807 = 13·139"));
    let (code, out, _) = hfalg(&["sb", "sb-2n.txt"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("D ∩ [0, 64] = {1, 2, 4, 8, 16, 32, 64}"));
}

#[test]
fn report_lines_and_exit_codes() {
    let (code, out, _) = hfalg(&["verify", "goodprimes"]);
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    let fields: Vec<&str> = first.split(' ').collect();
    assert_eq!(fields[..2], ["goodprimes", "pass"]);
    assert!(fields[2].parse::<u64>().is_ok());
    assert!(out.lines().skip(1).all(|l| l.starts_with("    ")));

    // a bound beyond what H(n) supports is reported as a failure
    let (code, out, _) = hfalg(&["verify", "d1s-iso", "--bound", "40"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("d1s-iso fail"));
    let (code, _, err) = hfalg(&["verify", "no-such-theorem"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown theorem"));
}

#[test]
fn flags_override_defaults() {
    let p = Params { window: Some(20), bound: Some(5), ..Params::default() };
    let r = verify("sb", &p).unwrap();
    assert!(r.passed());
    assert!(r.witnesses.iter().any(|w| w.contains("D ∩ [0, 20] = {1, 2, 4, 8, 16}")));
    let sig = hfalg_cli::builtin_signature("sig-1s.txt");
    let p = Params { sig: Some(("sig-1s.txt".into(), sig)), height: Some(5), ..Params::default() };
    for id in ["trees", "thm-valg", "ons-subalg", "vnn-char", "thm-rec-alg-fragment"] {
        let r = verify(id, &p).unwrap();
        assert!(r.passed(), "{r}");
    }
    // a binary symbol is outside the scope of the trees claim
    let plus = hfalg_cli::builtin_signature("sig-0plus.txt");
    let r = verify("trees", &Params { sig: Some(("plus".into(), plus)), ..Params::default() }).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.witnesses.iter().any(|w| w.contains("precondition")));
}

#[test]
fn verify_all_is_ordered_and_green() {
    let reports = verify_all();
    let ids: Vec<&str> = reports.iter().map(|r| r.theorem_id.as_str()).collect();
    assert_eq!(ids, THEOREM_IDS);
    for r in &reports {
        assert!(r.passed(), "{r}");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["status"], "pass");
    }
}
