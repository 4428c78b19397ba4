use std::fs;
use std::path::PathBuf;

use tourney::constructions::{build_g, lemma32_counterexample, remark3_t11, remark4_h9, GParams, LEMMA32_VARIANTS};
use tourney::format::{parse, serialize_labeled};
use tourney::LabeledTournament;

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(name: &str, built: &LabeledTournament) {
    let text = fixture(name);
    assert_eq!(serialize_labeled(built), text, "{name} drifted from its golden file");
    assert_eq!(&parse(&text).unwrap(), built);
}

#[test]
fn builders_match_golden_files() {
    assert_golden("remark3_t11.trn", &remark3_t11());
    assert_golden("remark4_h9.trn", &remark4_h9());
    for k in 1..=3 {
        assert_golden(&format!("g_k{k}.trn"), &build_g(GParams::new(k)).unwrap());
    }
    for v in LEMMA32_VARIANTS {
        assert_golden(&format!("lemma32_v{v}.trn"), &lemma32_counterexample(v, None).unwrap());
    }
}

#[test]
fn order_eleven_file_has_the_listed_in_neighbourhoods() {
    let lt = parse(&fixture("remark3_t11.trn")).unwrap();
    let lists: [(&str, &[&str]); 11] = [
        ("x0", &["u1", "u2", "u3", "u4", "z"]),
        ("x1", &["x0", "z", "u3", "u4", "v2"]),
        ("x2", &["x0", "x1", "z", "u3", "u4"]),
        ("x3", &["x0", "x1", "x2", "v1", "v2"]),
        ("z", &["x3", "u1", "u2", "u3", "u4"]),
        ("u1", &["x1", "x2", "x3", "u4", "v2"]),
        ("u2", &["x1", "x2", "x3", "u1", "v1"]),
        ("u3", &["x3", "u1", "u2", "v1", "v2"]),
        ("u4", &["x3", "u2", "u3", "v1", "v2"]),
        ("v1", &["x0", "x1", "x2", "z", "u1"]),
        ("v2", &["x0", "x2", "z", "v1", "u2"]),
    ];
    for (v, ins) in lists {
        let mut want: Vec<usize> = ins.iter().map(|n| lt.v(n)).collect();
        want.sort_unstable();
        assert_eq!(lt.tournament.in_set(lt.v(v)).to_vec(), want, "N-({v})");
    }
    assert_eq!(lt.block("S").len(), 2);
    assert!(lt.block("S").contains(lt.v("v1")) && lt.block("S").contains(lt.v("v2")));
}

#[test]
fn order_nine_file_has_the_listed_arcs() {
    let lt = parse(&fixture("remark4_h9.trn")).unwrap();
    let t = &lt.tournament;
    let arc = |a: &str, b: &str| t.has_arc(lt.v(a), lt.v(b)).unwrap();
    let to = |from: &[&str], into: &[&str]| {
        for a in from {
            for b in into {
                assert!(arc(a, b), "{a} -> {b}");
            }
        }
    };
    let (a, b) = (["a1", "a2"], ["b1", "b2"]);
    to(&["x"], &["u", "v", "z"]);
    to(&["u", "v", "z"], &["y"]);
    to(&b, &["u", "v"]);
    to(&["u", "v"], &a);
    to(&["y"], &["a1", "a2", "b1", "b2"]);
    to(&["a1", "a2", "b1", "b2"], &["x"]);
    to(&a, &["z"]);
    to(&["z"], &b);
    for (p, q) in [("x", "y"), ("u", "v"), ("v", "z"), ("z", "u"), ("a1", "a2"), ("b1", "b2"), ("a1", "b1"), ("a2", "b2"), ("b2", "a1"), ("a2", "b1")] {
        assert!(arc(p, q), "{p} -> {q}");
    }
}
