use std::collections::BTreeSet;

use star_anagrams::render::{node_position, render_polygon, FigureSpec, RenderOptions};
use star_anagrams::{classify_anagram, AnagramPair, Path};

struct Chord {
    from: usize,
    to: usize,
    step: i32,
    length: f64,
}

fn nearest_node(x: f64, y: f64, n: usize, r: f64) -> usize {
    (0..n)
        .min_by(|&a, &b| {
            let da = dist(node_position(a, n, r), (x, y));
            let db = dist(node_position(b, n, r), (x, y));
            da.total_cmp(&db)
        })
        .unwrap()
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn chords(svg: &str, n: usize, r: f64) -> Vec<Chord> {
    let doc = roxmltree::Document::parse(svg).unwrap();
    doc.descendants()
        .filter(|e| e.attribute("class") == Some("chord"))
        .map(|e| {
            let f = |a: &str| e.attribute(a).unwrap().parse::<f64>().unwrap();
            let (x1, y1, x2, y2) = (f("x1"), f("y1"), f("x2"), f("y2"));
            let from = nearest_node(x1, y1, n, r);
            let to = nearest_node(x2, y2, n, r);
            assert_eq!(dist(node_position(from, n, r), (x1, y1)), 0.0);
            assert_eq!(dist(node_position(to, n, r), (x2, y2)), 0.0);
            assert_eq!(
                e.attribute("data-from").unwrap().parse::<usize>().unwrap(),
                from
            );
            assert_eq!(
                e.attribute("data-to").unwrap().parse::<usize>().unwrap(),
                to
            );
            Chord {
                from,
                to,
                step: e.attribute("data-step").unwrap().parse().unwrap(),
                length: dist((x1, y1), (x2, y2)),
            }
        })
        .collect()
}

fn render(first: &str, second: &str, path: Path) -> String {
    let spec = FigureSpec::new(
        AnagramPair::new(first, second).unwrap(),
        path,
        RenderOptions {
            show_steps: true,
            show_indices: true,
            caption: Some("a < b & \"c\"".into()),
            ..RenderOptions::default()
        },
    )
    .unwrap();
    render_polygon(&spec)
}

#[test]
fn earth_hater_draws_a_pentagram() {
    let pair = AnagramPair::new("EARTH", "HATER").unwrap();
    let c = classify_anagram(&pair, None).unwrap();
    let svg = render("EARTH", "HATER", c.path.clone());
    let found = chords(&svg, 5, 100.0);
    let set: BTreeSet<(usize, usize)> = found
        .iter()
        .map(|c| (c.from.min(c.to), c.from.max(c.to)))
        .collect();
    let expected: BTreeSet<(usize, usize)> = [(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)]
        .into_iter()
        .collect();
    assert_eq!(set, expected);
    let first = found[0].length;
    for chord in &found {
        assert!((chord.length - first).abs() <= 1e-9 * first);
    }
}

#[test]
fn chord_length_grows_with_step_size() {
    let n = 12;
    let nodes = vec![0, 2, 5, 1, 6, 11, 4, 9, 3, 10, 7, 8];
    let path = Path::new(nodes).unwrap();
    let word: String = (0..n).map(|i| (b'A' + i as u8) as char).collect();
    let second: String = path
        .nodes()
        .iter()
        .map(|&i| word.as_bytes()[i] as char)
        .collect();
    let svg = render(&word, &second, path.clone());
    let found = chords(&svg, n, 100.0);
    let steps = path.steps();
    for (chord, &s) in found.iter().zip(steps.as_slice()) {
        assert_eq!(chord.step, s);
    }
    for a in &found {
        for b in &found {
            if a.step.abs() < b.step.abs() {
                assert!(a.length < b.length);
            } else if a.step.abs() == b.step.abs() {
                assert!((a.length - b.length).abs() <= 1e-9 * a.length);
            }
        }
    }
}

#[test]
fn figures_are_well_formed_xml() {
    let svg = render(
        "MOORWORT",
        "ROOTWORM",
        Path::new(vec![2, 0, 1, 7, 5, 3, 4, 6]).unwrap(),
    );
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    let texts: Vec<&str> = doc
        .descendants()
        .filter(|e| e.attribute("class") == Some("letter"))
        .filter_map(|e| e.text())
        .collect();
    assert_eq!(texts.len(), 8);
    assert!(doc.descendants().any(|e| e.text() == Some("a < b & \"c\"")));
}
