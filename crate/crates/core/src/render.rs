//! SVG figures of unicursal polygons and gallery trees of whole reports.
//!
//! Node `k` sits at angle `90° - k·360°/N` on a circle centred at the origin,
//! so node 0 is at the top and labels run clockwise. Coordinates are written
//! with Rust's shortest round-trip float formatting, so parsing a figure
//! recovers the exact chord endpoints.

use std::fmt::Write as _;
use std::path::{Path as FsPath, PathBuf};

use crate::classify::StarClass;
use crate::corpus::{CorpusReport, StarRecord};
use crate::enumerate::AnagramPair;
use crate::error::{Error, Result};
use crate::path::Path;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub show_steps: bool,
    pub show_indices: bool,
    pub caption: Option<String>,
    pub radius: f64,
    pub font_size: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_steps: false,
            show_indices: false,
            caption: None,
            radius: 100.0,
            font_size: 16.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pair: AnagramPair,
    path: Path,
    pub options: RenderOptions,
}

impl FigureSpec {
    pub fn new(pair: AnagramPair, path: Path, options: RenderOptions) -> Result<Self> {
        if path.len() != pair.len() {
            return Err(Error::NotPermutation {
                nodes: path.into_nodes(),
                len: pair.len(),
            });
        }
        Ok(FigureSpec {
            pair,
            path,
            options,
        })
    }

    pub fn pair(&self) -> &AnagramPair {
        &self.pair
    }

    pub fn path(&self) -> &Path {
        &self.path
    }
}

/// Position of node `k` of `n` on a circle of `radius`, in SVG coordinates (y down).
pub fn node_position(k: usize, n: usize, radius: f64) -> (f64, f64) {
    let angle = (90.0 - k as f64 * 360.0 / n as f64).to_radians();
    (radius * angle.cos(), -radius * angle.sin())
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

pub fn render_polygon(spec: &FigureSpec) -> String {
    let opts = &spec.options;
    let n = spec.path.len();
    let r = opts.radius;
    let font = opts.font_size;
    let margin = r + 2.5 * font;
    let caption_band = if opts.caption.is_some() {
        2.0 * font
    } else {
        0.0
    };
    let letters = spec.pair.first().as_bytes();
    let nodes = spec.path.nodes();
    let steps = spec.path.steps();

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        -margin,
        -margin,
        2.0 * margin,
        2.0 * margin + caption_band,
        2.0 * margin,
        2.0 * margin + caption_band
    );
    let _ = writeln!(svg, "<title>{}</title>", escape(&spec.pair.to_string()));
    let _ = writeln!(
        svg,
        r##"<circle class="rim" cx="0" cy="0" r="{r}" fill="none" stroke="#bbbbbb" stroke-width="1"/>"##
    );

    svg.push_str(
        "<g class=\"chords\" stroke=\"#b22222\" stroke-width=\"2\" stroke-linecap=\"round\">\n",
    );
    for k in 0..n {
        let (from, to) = (nodes[k], nodes[(k + 1) % n]);
        let (x1, y1) = node_position(from, n, r);
        let (x2, y2) = node_position(to, n, r);
        let _ = writeln!(
            svg,
            r#"<line class="chord" data-from="{from}" data-to="{to}" data-step="{}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#,
            steps.as_slice()[k]
        );
    }
    svg.push_str("</g>\n");

    svg.push_str("<g class=\"nodes\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">\n");
    for (k, &letter) in letters.iter().enumerate() {
        let (x, y) = node_position(k, n, r);
        let (lx, ly) = node_position(k, n, r + 1.2 * font);
        let _ = writeln!(
            svg,
            r#"<circle class="node" data-node="{k}" cx="{x}" cy="{y}" r="{}" fill="black"/>"#,
            0.2 * font
        );
        let _ = writeln!(
            svg,
            r#"<text class="letter" data-node="{k}" x="{lx}" y="{ly}" font-size="{font}">{}</text>"#,
            letter as char
        );
        if opts.show_indices {
            let (ix, iy) = node_position(k, n, r - 1.0 * font);
            let _ = writeln!(
                svg,
                r##"<text class="index" data-node="{k}" x="{ix}" y="{iy}" font-size="{}" fill="#666666">{k}</text>"##,
                0.6 * font
            );
        }
    }
    svg.push_str("</g>\n");

    if opts.show_steps {
        svg.push_str("<g class=\"steps\" font-family=\"sans-serif\" fill=\"#1f4fbf\" text-anchor=\"middle\" dominant-baseline=\"central\">\n");
        for k in 0..n {
            let (from, to) = (nodes[k], nodes[(k + 1) % n]);
            let (x1, y1) = node_position(from, n, r);
            let (x2, y2) = node_position(to, n, r);
            // a third of the way along the chord, so diameters do not collide at the centre
            let (x, y) = (x1 + (x2 - x1) / 3.0, y1 + (y2 - y1) / 3.0);
            let _ = writeln!(
                svg,
                r#"<text class="step" data-from="{from}" data-to="{to}" x="{x}" y="{y}" font-size="{}">{}</text>"#,
                0.8 * font,
                steps.as_slice()[k]
            );
        }
        svg.push_str("</g>\n");
    }

    if let Some(caption) = &opts.caption {
        let _ = writeln!(
            svg,
            r#"<text class="caption" x="0" y="{}" font-family="sans-serif" font-size="{font}" text-anchor="middle">{}</text>"#,
            margin + font,
            escape(caption)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn record_figure(record: &StarRecord, class: StarClass) -> Result<String> {
    let caption = match record.perfect_step {
        Some(s) => format!(
            "{} \u{2192} {}  {{{}/{}}}",
            record.first,
            record.second,
            record.path.len(),
            s.unsigned_abs()
        ),
        None => format!(
            "{} \u{2192} {}  {}  O_rot={} O_ref={}",
            record.first, record.second, class, record.o_rot, record.o_ref
        ),
    };
    let spec = FigureSpec::new(
        record.pair()?,
        record.path.clone(),
        RenderOptions {
            show_steps: true,
            caption: Some(caption),
            ..RenderOptions::default()
        },
    )?;
    Ok(render_polygon(&spec))
}

/// Relative location of a star's figure inside a gallery.
pub fn figure_location(
    len: usize,
    class: StarClass,
    cluster: usize,
    record: &StarRecord,
) -> PathBuf {
    [
        len.to_string(),
        class.as_str().to_string(),
        cluster.to_string(),
        format!("{}-{}.svg", record.first, record.second),
    ]
    .iter()
    .collect()
}

/// Writes one figure per star under `<out>/<N>/<class>/<cluster>/` (clusters
/// numbered from 1 within each length and class), an `index.html` per length
/// and a top-level `index.html`. Returns every file written, sorted.
pub fn render_gallery(report: &CorpusReport, out_dir: impl AsRef<FsPath>) -> Result<Vec<PathBuf>> {
    let out_dir = out_dir.as_ref();
    let mut jobs: Vec<(PathBuf, &StarRecord, StarClass)> = Vec::new();
    let mut pages: Vec<(PathBuf, String)> = Vec::new();
    let mut top = String::from(
        "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>Star anagrams</title></head><body>\n<h1>Star anagrams</h1>\n<ul>\n",
    );

    for summary in &report.lengths {
        if summary.stars() == 0 {
            continue;
        }
        let len = summary.len;
        let _ = writeln!(
            top,
            "<li><a href=\"{len}/index.html\">N = {len}</a>: {} stars</li>",
            summary.stars()
        );
        let mut page = format!(
            "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>N = {len}</title></head><body>\n<h1>Star anagrams, N = {len}</h1>\n"
        );
        for class in StarClass::STARS.into_iter().rev() {
            let Some(bucket) = summary.bucket(class).filter(|b| b.count > 0) else {
                continue;
            };
            let _ = writeln!(
                page,
                "<h2>{class}: {} stars in {} clusters</h2>",
                bucket.count,
                bucket.clusters.len()
            );
            for (i, cluster) in bucket.clusters.iter().enumerate() {
                let index = i + 1;
                let _ = writeln!(
                    page,
                    "<h3>Cluster {index} <code>{}</code></h3>\n<div>",
                    escape(&cluster.key.to_key_string())
                );
                for m in &cluster.members {
                    let rel = figure_location(len, class, index, m);
                    let href: PathBuf = rel.iter().skip(1).collect();
                    let _ = writeln!(
                        page,
                        "<img src=\"{}\" alt=\"{}-{}\" width=\"240\">",
                        href.to_string_lossy().replace('\\', "/"),
                        m.first,
                        m.second
                    );
                    jobs.push((out_dir.join(rel), m, class));
                }
                page.push_str("</div>\n");
            }
        }
        page.push_str("</body></html>\n");
        pages.push((out_dir.join(len.to_string()).join("index.html"), page));
    }
    top.push_str("</ul>\n</body></html>\n");
    pages.push((out_dir.join("index.html"), top));

    let write_figure = |(file, record, class): &(PathBuf, &StarRecord, StarClass)| -> Result<()> {
        let svg = record_figure(record, *class)?;
        if let Some(parent) = file.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(file, svg)?;
        Ok(())
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        jobs.par_iter().try_for_each(write_figure)?;
    }
    #[cfg(not(feature = "parallel"))]
    jobs.iter().try_for_each(write_figure)?;

    for (file, html) in &pages {
        if let Some(parent) = file.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(file, html)?;
    }

    let mut written: Vec<PathBuf> = jobs
        .into_iter()
        .map(|(f, _, _)| f)
        .chain(pages.into_iter().map(|(f, _)| f))
        .collect();
    written.sort();
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure(a: &str, b: &str, nodes: &[usize], options: RenderOptions) -> String {
        let spec = FigureSpec::new(
            AnagramPair::new(a, b).unwrap(),
            Path::new(nodes.to_vec()).unwrap(),
            options,
        )
        .unwrap();
        render_polygon(&spec)
    }

    fn attr_values(svg: &str, class: &str, attr: &str) -> Vec<String> {
        svg.lines()
            .filter(|l| l.contains(&format!("class=\"{class}\"")))
            .map(|l| {
                let start = l.find(&format!(" {attr}=\"")).unwrap() + attr.len() + 3;
                l[start..].split('"').next().unwrap().to_string()
            })
            .collect()
    }

    #[test]
    fn node_zero_at_top_and_clockwise() {
        let (x, y) = node_position(0, 8, 1.0);
        assert!(x.abs() < 1e-12 && (y + 1.0).abs() < 1e-12);
        let (x, y) = node_position(2, 8, 1.0);
        assert!((x - 1.0).abs() < 1e-12 && y.abs() < 1e-12);
    }

    #[test]
    fn triangle_has_three_chords() {
        let svg = figure("CAT", "CAT", &[0, 1, 2], RenderOptions::default());
        assert_eq!(svg.matches("class=\"chord\"").count(), 3);
    }

    #[test]
    fn step_labels_follow_the_path() {
        let opts = RenderOptions {
            show_steps: true,
            ..RenderOptions::default()
        };
        let svg = figure("DEANSHIP", "PINHEADS", &[7, 6, 3, 5, 1, 2, 0, 4], opts);
        let labels: Vec<String> = svg
            .lines()
            .filter(|l| l.contains("class=\"step\""))
            .map(|l| {
                l.rsplit('>')
                    .nth(1)
                    .unwrap()
                    .trim_end_matches("</text")
                    .to_string()
            })
            .collect();
        assert_eq!(labels, ["-1", "-3", "2", "4", "1", "-2", "4", "3"]);
        assert_eq!(attr_values(&svg, "chord", "data-step").len(), 8);
    }

    #[test]
    fn captions_are_escaped() {
        let opts = RenderOptions {
            caption: Some("a<b & c".into()),
            ..RenderOptions::default()
        };
        let svg = figure("EARTH", "HATER", &[4, 1, 3, 0, 2], opts);
        assert!(svg.contains("a&lt;b &amp; c"));
    }

    #[test]
    fn mismatched_path_length_is_rejected() {
        assert!(FigureSpec::new(
            AnagramPair::new("EARTH", "HATER").unwrap(),
            Path::new(vec![0, 1, 2]).unwrap(),
            RenderOptions::default()
        )
        .is_err());
    }
}
