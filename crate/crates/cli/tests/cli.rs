use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ldd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ldd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn cliques_decompose_and_verify() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.txt");
    let rep = path(&dir, "r.json");
    let out = ldd(&["gen", "--family", "cliques", "--n", "64", "--t", "8", "--out", s(&g)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(path(&dir, "g.txt.meta.json").exists());
    let out = ldd(&[
        "decompose",
        "--diam",
        "4",
        "--epsilon",
        "1/64",
        "--input",
        s(&g),
        "--report",
        s(&rep),
    ]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(json["part_count"], 6);
    assert_eq!(json["e0_size"], 56);
    assert_eq!(json["input"]["family"], "cliques");
    let out = ldd(&["verify", "--input", s(&g), "--report", s(&rep)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("ok"));
}

#[test]
fn tampered_report_exits_one() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.txt");
    let rep = path(&dir, "r.json");
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "gnp",
            "--n",
            "30",
            "--p",
            "0.5",
            "--seed",
            "4",
            "--out",
            s(&g)
        ])),
        0
    );
    assert_eq!(
        code(&ldd(&[
            "decompose",
            "--diam",
            "3",
            "--epsilon",
            "0.05",
            "--input",
            s(&g),
            "--report",
            s(&rep)
        ])),
        0
    );
    let mut json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&rep).unwrap()).unwrap();
    let first = json["parts"][0][0].clone();
    json["e0"].as_array_mut().unwrap().push(first);
    fs::write(&rep, json.to_string()).unwrap();
    assert_eq!(code(&ldd(&["verify", "--input", s(&g), "--report", s(&rep)])), 1);
}

#[test]
fn covers_and_hypergraphs() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.txt");
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "gnp",
            "--n",
            "40",
            "--p",
            "0.6",
            "--seed",
            "1",
            "--out",
            s(&g)
        ])),
        0
    );
    for diam in ["3", "5", "6"] {
        let rep = path(&dir, &format!("c{diam}.json"));
        let out = ldd(&[
            "cover",
            "--diam",
            diam,
            "--epsilon",
            "1/10",
            "--input",
            s(&g),
            "--report",
            s(&rep),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(code(&ldd(&["verify", "--input", s(&g), "--report", s(&rep)])), 0);
    }
    // minimum degree 1 on a path is below 0.9 * 3
    let p = path(&dir, "p.txt");
    fs::write(&p, "3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(
        code(&ldd(&["cover", "--diam", "6", "--epsilon", "0.9", "--input", s(&p)])),
        2
    );

    let h = path(&dir, "h.txt");
    let rep = path(&dir, "h.json");
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "hypergraph",
            "--k",
            "3",
            "--n",
            "12",
            "--p",
            "0.3",
            "--out",
            s(&h)
        ])),
        0
    );
    let out = ldd(&[
        "decompose",
        "--hyper",
        "--diam",
        "3",
        "--epsilon",
        "1/200",
        "--input",
        s(&h),
        "--report",
        s(&rep),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&ldd(&["verify", "--input", s(&h), "--report", s(&rep)])), 0);
    assert_eq!(
        code(&ldd(&[
            "decompose",
            "--hyper",
            "--diam",
            "4",
            "--epsilon",
            "0.1",
            "--input",
            s(&h)
        ])),
        2
    );
}

#[test]
fn oracles_and_caps() {
    let dir = TempDir::new().unwrap();
    let k = path(&dir, "k.txt");
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "kneser",
            "--n",
            "5",
            "--k",
            "2",
            "--out",
            s(&k)
        ])),
        0
    );
    let out = ldd(&["chromatic", "--input", s(&k)]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "3"));
    let big = path(&dir, "big.txt");
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "kneser",
            "--n",
            "12",
            "--k",
            "3",
            "--out",
            s(&big)
        ])),
        0
    );
    assert_eq!(code(&ldd(&["chromatic", "--input", s(&big)])), 3);
    assert_eq!(code(&ldd(&["oracle", "--diam", "2", "--input", s(&big)])), 3);

    let c = path(&dir, "c6.txt");
    fs::write(&c, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
    let out = ldd(&["oracle", "--diam", "3", "--input", s(&c)]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "6"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.txt");
    assert_eq!(code(&ldd(&["gen", "--family", "hk", "--k", "2", "--out", s(&g)])), 2);
    assert_eq!(
        code(&ldd(&["gen", "--family", "cliques", "--n", "10", "--out", s(&g)])),
        2
    );
    assert_eq!(
        code(&ldd(&["gen", "--family", "blowup", "--r", "2", "--out", s(&g)])),
        2
    );
    fs::write(&g, "3 1\n0 7\n").unwrap();
    assert_eq!(
        code(&ldd(&[
            "decompose",
            "--diam",
            "3",
            "--epsilon",
            "0.1",
            "--input",
            s(&g)
        ])),
        2
    );
    fs::write(&g, "3 1\n0 1\n").unwrap();
    assert_eq!(
        code(&ldd(&[
            "decompose",
            "--diam",
            "5",
            "--epsilon",
            "0.1",
            "--input",
            s(&g)
        ])),
        2
    );
    assert_eq!(
        code(&ldd(&["decompose", "--diam", "3", "--epsilon", "0", "--input", s(&g)])),
        2
    );
    assert_eq!(
        code(&ldd(&["decompose", "--diam", "3", "--epsilon", "2", "--input", s(&g)])),
        2
    );
    assert_eq!(
        code(&ldd(&[
            "verify",
            "--input",
            s(&g),
            "--report",
            s(&path(&dir, "missing.json"))
        ])),
        2
    );
}

#[test]
fn blowup_and_diam5_generation() {
    let dir = TempDir::new().unwrap();
    let base = path(&dir, "base.txt");
    fs::write(&base, "2 1\n0 1\n").unwrap();
    let out_path = path(&dir, "b.txt");
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "blowup",
            "--r",
            "3",
            "--input",
            s(&base),
            "--out",
            s(&out_path)
        ])),
        0
    );
    let text = fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.lines().next().unwrap().trim(), "6 9");
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(path(&dir, "b.txt.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["spec"]["family"], "blowup");

    let d5 = path(&dir, "d5.txt");
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "diam5",
            "--k",
            "1",
            "--d",
            "2",
            "--out",
            s(&d5)
        ])),
        0
    );
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(path(&dir, "d5.txt.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["n"], 32);
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "diam5",
            "--k",
            "1",
            "--d",
            "2",
            "--partition",
            "0,1,0,1",
            "--out",
            s(&d5)
        ])),
        0
    );
    assert_eq!(
        code(&ldd(&[
            "gen",
            "--family",
            "diam5",
            "--k",
            "1",
            "--d",
            "2",
            "--partition",
            "0,5,0,1",
            "--out",
            s(&d5)
        ])),
        2
    );
}
