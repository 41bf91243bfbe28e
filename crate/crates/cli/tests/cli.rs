use std::path::PathBuf;
use std::process::{Command, Output};

fn lace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lace")).args(args).output().expect("spawn lace")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn operator_examples() {
    let cases: [(&[&str], &str); 6] = [
        (&["op", "--kind", "Dr", "--n", "3", "--r", "3", "--h", "1"], "1 + 34x + 19x^2"),
        (&["op", "--kind", "D", "--n", "2", "--h", "1"], "1 + x"),
        (&["op", "--kind", "U", "--n", "2", "--r", "1", "--h", "1+3x"], "1 + 3x"),
        (&["op", "--kind", "D", "--n", "3", "--h", "1"], "1 + 4x + x^2"),
        (&["op", "--kind", "DF", "--n", "3", "--F", "colored", "--r", "3", "--h", "1"], "1 + 34x + 19x^2"),
        (&["op", "--kind", "EF", "--n", "2", "--h", "0,0,1"], "x + 2x^2"),
    ];
    for (args, expected) in cases {
        let o = lace(args);
        assert_eq!(code(&o), 0, "{args:?}");
        assert_eq!(stdout(&o).trim(), expected, "{args:?}");
    }
}

#[test]
fn operator_with_certificate() {
    let o = lace(&["op", "--kind", "Dr", "--n", "3", "--r", "3", "--h", "1,0,0,1", "--certify"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let (poly, cert) = text.split_once('\n').unwrap();
    assert_eq!(poly, "1 + 53x + 53x^2 + x^3");
    let v: serde_json::Value = serde_json::from_str(cert).unwrap();
    assert_eq!(v["certificate"]["verdict"], "real_rooted");
    assert_eq!(v["config"]["width"], "1/1048576");
}

#[test]
fn certify_examples() {
    let o = lace(&["certify", "strong-lace", "--F", "colored", "--r", "3", "--n", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["certificate"]["verdict"], "strong_interlacing");

    let o = lace(&["certify", "main-thm", "--F", "barycentric", "--n", "3", "--h", "1,0,0,1", "--variant", "a"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["certificate"]["verdict"], "interlacing_sym_decomp");
    assert_eq!(v["config"]["variant"], "a");

    let cube = scratch("cube3.zono", "1 0 0\n0 1 0\n0 0 1\n");
    let o = lace(&["certify", "zonotope", "--file", cube.to_str().unwrap(), "--r", "2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["certificate"]["verdict"], "certified");
    assert!(v["certificate"]["subject"].as_str().unwrap().contains("1 + 16x + 7x^2"));
}

#[test]
fn negative_verdict_exits_one() {
    let o = lace(&["certify", "strong-lace", "--F", "trivial", "--n", "3"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["certificate"]["verdict"], "not_strong_interlacing");
}

#[test]
fn complex_examples() {
    let tri = scratch("tri.cx", "# a triangle\n1 2 3\n");
    let o = lace(&["complex", "sd", "--in", tri.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 6);
    let sd = scratch("sd_tri.cx", &stdout(&o));
    let o = lace(&["complex", "hvec", "--in", sd.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "1 4 1");
    let o = lace(&["complex", "fvec", "--in", sd.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "1 7 12 6");

    let o = lace(&["complex", "extract-ftriangle", "--kind", "esd", "--r", "2", "--d", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "ftriangle d=3\n0: 1\n1: 1 1\n2: 1 3 2\n3: 1 6 9 4");

    let o = lace(&["complex", "skeleton", "--in", tri.to_str().unwrap(), "--k", "0"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn extracted_ftriangle_feeds_the_certifier() {
    let o = lace(&["complex", "extract-ftriangle", "--kind", "esd", "--r", "5", "--d", "5"]);
    let f = scratch("esd5.ftri", &stdout(&o));
    let o = lace(&["certify", "strong-lace", "--F", f.to_str().unwrap(), "--n", "5"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn zonotope_commands() {
    let square = scratch("square.zono", "# [0,2]^2\n2 0\n0 2\n");
    let s = square.to_str().unwrap();
    let run = |args: &[&str]| stdout(&lace(args)).trim().to_string();
    assert_eq!(run(&["zonotope", "count", "--file", s]), "9");
    assert_eq!(run(&["zonotope", "interior", "--file", s]), "1");
    assert_eq!(run(&["zonotope", "ehrhart", "--file", s]), "1 + 4x + 4x^2");
    assert_eq!(run(&["zonotope", "hstar", "--file", s]), "1 + 6x + x^2");
    assert_eq!(run(&["zonotope", "hstar-r", "--file", s, "--r", "1"]), "1 + 6x + x^2");
}

#[test]
fn random_batches_are_deterministic_and_ordered() {
    let args = ["certify", "main-thm", "--F", "colored", "--r", "2", "--n", "4", "--random", "40", "--seed", "11"];
    let a = lace(&args);
    let b = lace(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["config"]["seed"], 11);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 40);

    let c = lace(&["certify", "skeleton", "--F", "barycentric", "--n", "3", "--random", "5", "--seed", "3"]);
    assert_eq!(code(&c), 0);
    assert_eq!(json(&c)["certificates"].as_array().unwrap().len(), 5);
}

#[test]
fn randomized_commands_need_a_seed() {
    assert_eq!(code(&lace(&["certify", "main-thm", "--n", "3", "--random", "4"])), 2);
    assert_eq!(code(&lace(&["certify", "skeleton", "--n", "3", "--random", "4"])), 2);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("lace-cli-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = lace(&["certify", "strong-lace", "--F", "barycentric", "--n", "4", "--out", p]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["config"]["output"], p);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn exit_code_matrix() {
    let bad_poly = scratch("bad.cx", "1 2 x\n");
    let not_uniform = scratch("tiny.ftri", "ftriangle d=1\n0: 1\n1: 1 1\n");
    let cases: [(&[&str], i32); 10] = [
        (&["op", "--kind", "D", "--n", "2", "--h", "1,,2"], 2),
        (&["op", "--kind", "D", "--n", "2", "--h", "1/0"], 2),
        (&["op", "--kind", "Q", "--n", "2", "--h", "1"], 2),
        (&["complex", "hvec", "--in", bad_poly.to_str().unwrap()], 2),
        (&["complex", "hvec", "--in", "/nonexistent/file.cx"], 2),
        (&["op", "--kind", "D", "--n", "2", "--h", "0,0,0,1"], 3),
        (&["op", "--kind", "U", "--n", "2", "--r", "0", "--h", "1"], 3),
        (&["certify", "main-thm", "--F", not_uniform.to_str().unwrap(), "--n", "3", "--h", "1"], 3),
        (&["certify", "skeleton", "--n", "2", "--gamma", "1,-1,0,0"], 3),
        (&["certify", "main-thm", "--F", "barycentric", "--n", "3", "--h", "1,0,0,1"], 0),
    ];
    for (args, expected) in cases {
        let o = lace(args);
        assert_eq!(code(&o), expected, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn inconsistent_ftriangle_is_a_mismatch() {
    let text = stdout(&lace(&["complex", "extract-ftriangle", "--kind", "sd", "--d", "3"]));
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let last = lines.pop().unwrap();
    let mut fields: Vec<u64> = last[3..].split_whitespace().map(|x| x.parse().unwrap()).collect();
    fields[1] += 1;
    lines.push(format!("3: {}", fields.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")));
    let bad = scratch("bad.ftri", &lines.join("\n"));
    let o = lace(&["certify", "strong-lace", "--F", bad.to_str().unwrap(), "--n", "3"]);
    assert_eq!(code(&o), 4, "{}", String::from_utf8_lossy(&o.stderr));
}
