use std::path::PathBuf;
use std::process::Command;

fn pkit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pkit"))
}

fn doc(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn defect_on_positron() {
    let p = doc("w3.pk", "handlebody W3 = positron 3;\n");
    let out = pkit().args(["defect"]).arg(&p).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"][0]["verdict"], "PC");
    assert_eq!(v["results"][0]["total_defect"], 0);
}

#[test]
fn whitehead_reports_the_tb_difference() {
    let p = doc("u.pk", "handlebody U = unknot 0;\n");
    let out = pkit().args(["whitehead"]).arg(&p).args(["--handle", "U", "--n", "3"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["tb_difference"], 2);
}

#[test]
fn render_writes_svg_to_a_file() {
    let p = doc("r.pk", "handlebody U = unknot 0;\n");
    let target = p.with_extension("svg");
    let status = pkit().args(["render"]).arg(&p).arg("--out").arg(&target).status().unwrap();
    assert!(status.success());
    let svg = std::fs::read_to_string(&target).unwrap();
    assert_eq!(svg.matches(r#"class="cusp"#).count(), 2);
    let json = pkit().args(["render"]).arg(&p).args(["--format", "json"]).output().unwrap();
    assert!(String::from_utf8(json.stdout).unwrap().contains("\"svg\""));
}

#[test]
fn exit_codes_and_diagnostics() {
    let bad = doc("bad.pk", "handlebody U = unknot 0;\nhandlebody V = sum U Q;\n");
    let out = pkit().args(["defect"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.pk:2:22"));

    let clean = doc("clean.pk", "handlebody U = unknot -2;\n");
    let out = pkit().args(["reduce"]).arg(&clean).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("E-NODEFECT"));

    let out = pkit().args(["frobnicate"]).arg(&clean).output().unwrap();
    assert_eq!(out.status.code(), Some(64));
    let out = pkit().args(["defect"]).arg(&clean).args(["--format", "svg"]).output().unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn budget_comes_from_the_environment() {
    let p = doc("b.pk", "handlebody U = unknot 0;\n");
    let out = pkit().env("PKIT_BUDGET", "77").args(["defect"]).arg(&p).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["params"]["budget"], 77);
    let out = pkit().env("PKIT_BUDGET", "77").args(["defect"]).arg(&p).args(["--budget", "5"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["params"]["budget"], 5);
}
