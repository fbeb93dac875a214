//! SVG renderings of the layouts. Numbers are printed with two decimals so
//! that output is byte-stable.

use std::f64::consts::TAU;
use std::fmt::Write;

use textproj_core::layout::{PhraseNet, TextFlowLayout, TreemapLayout, WordCloudLayout};

const STREAM_COLORS: &[&str] = &[
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7", "#9c755f",
    "#bab0ac",
];

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

pub fn escape(s: &str) -> String {
    let mut o = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => o.push_str("&amp;"),
            '<' => o.push_str("&lt;"),
            '>' => o.push_str("&gt;"),
            '"' => o.push_str("&quot;"),
            '\'' => o.push_str("&#39;"),
            _ => o.push(c),
        }
    }
    o
}

fn open(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\">\n",
        w = num(width),
        h = num(height)
    )
}

pub fn word_cloud(layout: &WordCloudLayout) -> String {
    let mut s = open(layout.width, layout.height);
    for (i, w) in layout.words.iter().enumerate() {
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"{}\"><title>{}: {}</title>{}</text>",
            num(w.x),
            num(w.y),
            num(w.font_size),
            STREAM_COLORS[i % STREAM_COLORS.len()],
            escape(&w.word),
            w.frequency,
            escape(&w.word)
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Nodes on a circle in alphabetical order; label size follows word
/// frequency and edge width follows weight.
pub fn phrase_net(net: &PhraseNet, width: f64, height: f64) -> String {
    let mut s = open(width, height);
    s.push_str(
        "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#888\"/></marker></defs>\n",
    );
    let n = net.nodes.len().max(1) as f64;
    let (cx, cy) = (width / 2.0, height / 2.0);
    let r = 0.4 * width.min(height);
    let pos = |i: usize| {
        let a = TAU * i as f64 / n;
        (cx + r * a.cos(), cy + r * a.sin())
    };
    let index = |w: &str| net.nodes.iter().position(|x| x.word == w).unwrap_or(0);
    let max_w = net.edges.iter().map(|e| e.weight).max().unwrap_or(1) as f64;
    for e in &net.edges {
        let (x1, y1) = pos(index(&e.from));
        let (x2, y2) = pos(index(&e.to));
        let _ = writeln!(
            s,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888\" stroke-width=\"{}\" marker-end=\"url(#arrow)\"><title>{} {} {} ({})</title></line>",
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            num(1.0 + 5.0 * e.weight as f64 / max_w),
            escape(&e.from),
            escape(&e.connector),
            escape(&e.to),
            e.weight
        );
    }
    let max_f = net.nodes.iter().map(|x| x.frequency).max().unwrap_or(1).max(1) as f64;
    for (i, node) in net.nodes.iter().enumerate() {
        let (x, y) = pos(i);
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
            num(x),
            num(y),
            num(10.0 + 20.0 * node.frequency as f64 / max_f),
            escape(&node.word)
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn treemap(layout: &TreemapLayout) -> String {
    let mut s = open(layout.width, layout.height);
    for r in &layout.rects {
        let b = &r.rect;
        let _ = writeln!(
            s,
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"rgb({},{},{})\" stroke=\"#fff\"><title>{}: {}%</title></rect>",
            num(b.x),
            num(b.y),
            num(b.width),
            num(b.height),
            r.fill.0,
            r.fill.1,
            r.fill.2,
            escape(&r.id),
            num(100.0 * r.value)
        );
        if b.width > 40.0 && b.height > 14.0 {
            let _ = writeln!(
                s,
                "  <text x=\"{}\" y=\"{}\" font-size=\"11\">{}</text>",
                num(b.x + 3.0),
                num(b.y + 12.0),
                escape(&r.id)
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Streams as filled bands between evenly spaced version columns.
pub fn text_flow(layout: &TextFlowLayout, width: f64, height: f64) -> String {
    let mut s = open(width, height);
    let margin = 40.0;
    let cols = layout.versions.len();
    let x_of = |v: usize| margin + (width - 2.0 * margin) * v as f64 / (cols.max(2) - 1) as f64;
    let unit = if layout.max_total > 0.0 {
        (height - 2.0 * margin) / layout.max_total
    } else {
        0.0
    };
    let y_of = |off: f64| height / 2.0 - off * unit;
    for (i, st) in layout.streams.iter().enumerate() {
        let mut pts: Vec<String> = Vec::new();
        for (v, p) in st.points.iter().enumerate() {
            pts.push(format!("{},{}", num(x_of(v)), num(y_of(p.offset + p.thickness))));
        }
        for (v, p) in st.points.iter().enumerate().rev() {
            pts.push(format!("{},{}", num(x_of(v)), num(y_of(p.offset))));
        }
        let _ = writeln!(
            s,
            "  <polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.85\"><title>{}</title></polygon>",
            pts.join(" "),
            STREAM_COLORS[i % STREAM_COLORS.len()],
            escape(&st.term)
        );
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"{}\">{}</text>",
            num(4.0),
            num(margin / 2.0 + 14.0 * i as f64),
            STREAM_COLORS[i % STREAM_COLORS.len()],
            escape(&st.term)
        );
    }
    for (v, label) in layout.versions.iter().enumerate() {
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
            num(x_of(v)),
            num(height - 8.0),
            escape(label)
        );
    }
    s.push_str("</svg>\n");
    s
}
