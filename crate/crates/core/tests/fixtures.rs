use std::path::{Path, PathBuf};

use origami::geom::Tolerance;
use origami::script::{execute, parse};

fn fixtures(sub: &str) -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(sub);
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "fold"))
        .collect();
    v.sort();
    assert!(!v.is_empty());
    v
}

#[test]
fn good_fixtures_parse_and_run() {
    for path in fixtures("") {
        let src = std::fs::read_to_string(&path).unwrap();
        let script = parse(&src).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(parse(&script.to_string()).unwrap().to_string(), script.to_string());
        let state = execute(&script, &Tolerance::default()).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(state.trace().len(), script.len());
    }
}

#[test]
fn trisection_fixture_is_nine_statements() {
    let src = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/trisect60.fold")).unwrap();
    assert_eq!(parse(&src).unwrap().len(), 9);
}

#[test]
fn broken_fixtures_fail_with_their_header() {
    for path in fixtures("broken") {
        let src = std::fs::read_to_string(&path).unwrap();
        let header = src.lines().next().unwrap();
        let (_, want) = header.split_once(" error=").unwrap();
        let (kind, pos) = want.split_once(" at ").unwrap();
        let got = match parse(&src) {
            Err(e) => (e.kind.code(), e.pos.to_string()),
            Ok(script) => {
                let e = execute(&script, &Tolerance::default()).unwrap_err();
                (e.code(), e.pos.to_string())
            }
        };
        assert_eq!(got, (kind, pos.to_string()), "{}", path.display());
    }
}
