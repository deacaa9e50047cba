//! The compute report layout is pinned by a golden file. Set
//! `UPDATE_GOLDEN=1` to rewrite it after an intentional schema change.

use std::path::PathBuf;

use serde_json::Value;
use shallowcc::constructions::Family;
use shallowcc::harness::{cmd_compute, provenance_id};
use shallowcc::report::{Param, SCHEMA};
use shallowcc::Caps;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn c5_report(caps: &Caps) -> String {
    let family = Family::parse("cycle", &[("n".into(), "5".into())], 0).unwrap();
    let graph = family.build(0).unwrap().graph;
    let input = shallowcc::report::Input::Construct {
        provenance: family.provenance(0),
    };
    let id = provenance_id(&family, 0);
    cmd_compute(input, &id, &graph, &Param::ALL, &[0, 1], caps, false).to_json()
}

#[test]
fn compute_report_matches_golden() {
    let caps = Caps::default().sequential();
    let text = c5_report(&caps);
    let path = golden("compute_c5.json");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let expected = std::fs::read_to_string(&path).expect("golden file present");
    assert_eq!(text, expected);
}

#[test]
fn report_fields() {
    let v: Value = serde_json::from_str(&c5_report(&Caps::default())).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    for key in ["version", "input", "graph_id", "graph", "requested", "caps", "results", "errors"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let results = v["results"].as_array().unwrap();
    // Six depth-free parameters once, five depth parameters at two depths.
    assert_eq!(results.len(), 6 + 5 * 2);
    for r in results {
        let (num, den) = (r["value"]["num"].as_u64().unwrap(), r["value"]["den"].as_u64().unwrap());
        assert!(den > 0);
        let text = r["value"]["text"].as_str().unwrap();
        if den == 1 {
            assert_eq!(text, num.to_string());
        } else {
            assert_eq!(text, format!("{num}/{den}"));
        }
        assert!(["exact", "lower-bound", "upper-bound"].contains(&r["bound"].as_str().unwrap()));
        assert_eq!(r["t"].is_null(), !Param::ALL.iter().any(|p| p.uses_depth() && r["param"] == p.name()));
    }
}

#[test]
fn parallel_report_equals_sequential_apart_from_caps() {
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v["caps"]["parallel"] = Value::Null;
        v
    };
    assert_eq!(
        strip(c5_report(&Caps::default())),
        strip(c5_report(&Caps::default().sequential()))
    );
}
