use serde_json::Value;
use star_anagrams_web::{classify, perfect_star, shape_census};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn classify_returns_summary_and_figure() {
    let v = parse(&classify("earth", "hater"));
    assert_eq!(v["class"], "perfect");
    assert_eq!(v["summary"], "perfect, O_rot=5, O_ref=5, S=2");
    assert_eq!(v["path"], serde_json::json!([4, 1, 3, 0, 2]));
    assert!(v["svg"].as_str().unwrap().starts_with("<svg"));

    let v = parse(&classify("EARTH", "HEART"));
    assert_eq!(v["class"], "non-star");
    assert!(v["o_rot"].is_null());
}

#[test]
fn classify_reports_errors_as_json() {
    let v = parse(&classify("EARTH", "MOON"));
    assert!(v["error"].as_str().unwrap().contains("not anagrams"));
    assert!(parse(&classify("", "")).get("error").is_some());
}

#[test]
fn perfect_star_includes_inverse() {
    let v = parse(&perfect_star(7, -3));
    assert_eq!(v["inverse_step"], 2);
    assert_eq!(v["valid_edge_lengths"], serde_json::json!([2, 3]));
    assert_eq!(v["path"], serde_json::json!([0, 4, 1, 5, 2, 6, 3]));
    assert!(parse(&perfect_star(6, 2)).get("error").is_some());
}

#[test]
fn census_matches_table_rows() {
    for (n, row) in [(5, [0, 0, 1, 1]), (7, [0, 3, 2, 5]), (8, [12, 14, 1, 27])] {
        let v = parse(&shape_census(n));
        let got = ["asymmetric", "symmetric", "perfect", "total"].map(|k| v[k].as_u64().unwrap());
        assert_eq!(got, row);
        assert_eq!(v["shapes"].as_array().unwrap().len() as u64, row[3]);
    }
    assert!(parse(&shape_census(10)).get("error").is_some());
    assert!(parse(&shape_census(4)).get("error").is_some());
}
