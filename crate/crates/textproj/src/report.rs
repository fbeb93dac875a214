//! Static HTML report bundle: one `index.html` with inline SVGs and tables,
//! next to the JSON results and SVG files it was built from.

use std::fmt::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::analysis::{ClonesReport, CodingReport, CorpusSummary, NGramReport, PosReport, TopicsReport};
use crate::error::Result;
use crate::io::{read_json, read_text, to_json, write_text};
use crate::svg::escape;

pub const CORPUS_FILE: &str = "corpus_summary.json";
pub const CLONES_FILE: &str = "clones.json";
pub const NGRAM_FILE: &str = "ngram.json";
pub const TOPICS_FILE: &str = "topics.json";
pub const POS_FILE: &str = "pos.json";
pub const CODING_FILE: &str = "coding.json";
pub const ER_FILE: &str = "er.dot";
pub const SVG_FILES: &[&str] = &["wordcloud.svg", "phrasenet.svg", "treemap.svg", "textflow.svg"];

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportInputs {
    pub corpus: Option<CorpusSummary>,
    pub clones: Option<ClonesReport>,
    pub ngram: Option<NGramReport>,
    pub topics: Option<TopicsReport>,
    pub pos: Option<PosReport>,
    pub coding: Option<CodingReport>,
    /// File name to SVG text.
    pub svgs: Vec<(String, String)>,
    /// Problems to show on the index page, e.g. skipped visualizations.
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub written: Vec<String>,
    pub missing: Vec<String>,
}

fn load_opt<T: DeserializeOwned>(dir: &Path, name: &str) -> Result<Option<T>> {
    let p = dir.join(name);
    if p.is_file() {
        read_json(&p).map(Some)
    } else {
        Ok(None)
    }
}

impl ReportInputs {
    /// Reads whichever result files exist in `dir`.
    pub fn load(dir: &Path) -> Result<Self> {
        let mut svgs = Vec::new();
        for name in SVG_FILES {
            let p = dir.join(name);
            if p.is_file() {
                svgs.push((name.to_string(), read_text(&p)?));
            }
        }
        Ok(ReportInputs {
            corpus: load_opt(dir, CORPUS_FILE)?,
            clones: load_opt(dir, CLONES_FILE)?,
            ngram: load_opt(dir, NGRAM_FILE)?,
            topics: load_opt(dir, TOPICS_FILE)?,
            pos: load_opt(dir, POS_FILE)?,
            coding: load_opt(dir, CODING_FILE)?,
            svgs,
            notes: Vec::new(),
        })
    }

    pub fn is_empty(&self) -> bool {
        self.corpus.is_none()
            && self.clones.is_none()
            && self.ngram.is_none()
            && self.topics.is_none()
            && self.pos.is_none()
            && self.coding.is_none()
            && self.svgs.is_empty()
    }
}

fn table(out: &mut String, header: &[&str], rows: Vec<Vec<String>>) {
    out.push_str("<table>\n<tr>");
    for h in header {
        let _ = write!(out, "<th>{}</th>", escape(h));
    }
    out.push_str("</tr>\n");
    for r in rows {
        out.push_str("<tr>");
        for c in r {
            let _ = write!(out, "<td>{}</td>", escape(&c));
        }
        out.push_str("</tr>\n");
    }
    out.push_str("</table>\n");
}

fn pct(x: f64) -> String {
    format!("{:.1} %", 100.0 * x)
}

fn section(out: &mut String, title: &str, file: &str) {
    let _ = writeln!(out, "<h2>{}</h2>\n<p><a href=\"{f}\">{f}</a></p>", escape(title), f = escape(file));
}

/// Writes the bundle into `dir`, listing absent analyses instead of
/// failing on them.
pub fn render_report(dir: &Path, inputs: &ReportInputs) -> Result<ReportSummary> {
    let mut summary = ReportSummary::default();
    let mut body = String::new();
    let put = |name: &str, text: String, summary: &mut ReportSummary| -> Result<()> {
        write_text(&dir.join(name), &text)?;
        summary.written.push(name.to_string());
        Ok(())
    };

    if let Some(c) = &inputs.corpus {
        put(CORPUS_FILE, to_json(c), &mut summary)?;
        section(&mut body, "Corpus", CORPUS_FILE);
        table(
            &mut body,
            &["Document", "Class", "Version", "Lines", "Tokens"],
            c.documents
                .iter()
                .map(|d| {
                    vec![
                        d.id.clone(),
                        d.source_class.to_string(),
                        d.version.clone().unwrap_or_default(),
                        d.lines.to_string(),
                        d.tokens.to_string(),
                    ]
                })
                .collect(),
        );
        for e in &c.ingest_errors {
            let _ = writeln!(body, "<p class=\"note\">skipped {}: {:?}</p>", escape(&e.path), e.problem);
        }
    } else {
        summary.missing.push("corpus".into());
    }

    if let Some(c) = &inputs.clones {
        put(CLONES_FILE, to_json(c), &mut summary)?;
        section(&mut body, "Clones", CLONES_FILE);
        let _ = writeln!(
            body,
            "<p>min_length {}, max_gap {}; coverage {}, {} groups, {} instances</p>",
            c.config.min_length,
            c.config.max_gap,
            pct(c.stats.clone_coverage),
            c.stats.clone_group_count,
            c.stats.clone_instance_count
        );
        table(
            &mut body,
            &["Document", "Clone cov.", "Clone groups", "Clones", "Lines"],
            c.stats
                .documents
                .iter()
                .map(|d| {
                    vec![
                        d.document_id.clone(),
                        pct(d.clone_coverage),
                        d.clone_group_count.to_string(),
                        d.clone_instance_count.to_string(),
                        d.total_lines.to_string(),
                    ]
                })
                .collect(),
        );
    } else {
        summary.missing.push("clones".into());
    }

    if let Some(n) = &inputs.ngram {
        put(NGRAM_FILE, to_json(n), &mut summary)?;
        section(&mut body, "N-grams", NGRAM_FILE);
        table(
            &mut body,
            &["Document", "Words", "Cross-entropy", "Shuffled"],
            n.naturalness
                .iter()
                .map(|r| {
                    vec![
                        r.document_id.clone(),
                        r.tokens.to_string(),
                        format!("{:.3}", r.cross_entropy),
                        format!("{:.3}", r.shuffled_cross_entropy),
                    ]
                })
                .collect(),
        );
        if !n.categories.is_empty() {
            table(
                &mut body,
                &["Document", "Category", "Low confidence"],
                n.categories
                    .iter()
                    .map(|r| vec![r.document_id.clone(), r.category.clone(), r.low_confidence.to_string()])
                    .collect(),
            );
        }
    } else {
        summary.missing.push("ngram".into());
    }

    if let Some(t) = &inputs.topics {
        put(TOPICS_FILE, to_json(t), &mut summary)?;
        section(&mut body, "Topics", TOPICS_FILE);
        table(
            &mut body,
            &["Topic", "Top words"],
            t.topics
                .iter()
                .map(|s| {
                    let words: Vec<&str> = s.top_words.iter().map(|w| w.0.as_str()).collect();
                    vec![s.topic.to_string(), words.join(", ")]
                })
                .collect(),
        );
    } else {
        summary.missing.push("topics".into());
    }

    if let Some(p) = &inputs.pos {
        put(POS_FILE, to_json(p), &mut summary)?;
        put(ER_FILE, p.er.to_dot(), &mut summary)?;
        section(&mut body, "Terms, entities and smells", POS_FILE);
        let _ = writeln!(
            body,
            "<p>{} entities, {} relationships (<a href=\"{ER_FILE}\">{ER_FILE}</a>), {} passive-voice findings</p>",
            p.er.entities.len(),
            p.er.relationships.len(),
            p.smells.len()
        );
        table(
            &mut body,
            &["Term", "Count"],
            p.terms.iter().map(|t| vec![t.term.clone(), t.count.to_string()]).collect(),
        );
    } else {
        summary.missing.push("pos".into());
    }

    if let Some(c) = &inputs.coding {
        put(CODING_FILE, to_json(c), &mut summary)?;
        section(&mut body, "Coding", CODING_FILE);
        let _ = writeln!(
            body,
            "<p>{} violations; {} of {} codes occur at least {} times</p>",
            c.validation.violations.len(),
            c.condensed.nodes.len(),
            c.counts.len(),
            c.min_occurrence
        );
        table(
            &mut body,
            &["Code", "Occurrences"],
            c.counts.iter().map(|(k, v)| vec![k.clone(), v.to_string()]).collect(),
        );
        if let Some(a) = &c.agreement {
            let _ = writeln!(
                body,
                "<p>agreement {} vs {}: p_o {:.3}, kappa {:.3}</p>",
                escape(&a.coders.0),
                escape(&a.coders.1),
                a.agreement.percent_agreement,
                a.agreement.kappa
            );
        }
    } else {
        summary.missing.push("coding".into());
    }

    for name in SVG_FILES {
        match inputs.svgs.iter().find(|(n, _)| n == name) {
            Some((_, svg)) => {
                put(name, svg.clone(), &mut summary)?;
                section(&mut body, name.trim_end_matches(".svg"), name);
                let _ = writeln!(body, "<div class=\"figure\">\n{}</div>", svg.trim_end());
            }
            None => summary.missing.push(name.to_string()),
        }
    }

    let mut html = String::from(
        "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>textproj report</title>\n<style>\nbody{font-family:sans-serif;margin:2em;max-width:70em}\ntable{border-collapse:collapse;margin:1em 0}\ntd,th{border:1px solid #ccc;padding:2px 6px;text-align:left}\n.note{color:#a33}\n</style>\n</head>\n<body>\n<h1>textproj report</h1>\n",
    );
    if inputs.is_empty() {
        html.push_str("<p>no analyses</p>\n");
    }
    for n in &inputs.notes {
        let _ = writeln!(html, "<p class=\"note\">{}</p>", escape(n));
    }
    if !summary.missing.is_empty() && !inputs.is_empty() {
        let _ = writeln!(html, "<p class=\"note\">not included: {}</p>", escape(&summary.missing.join(", ")));
    }
    html.push_str(&body);
    html.push_str("</body>\n</html>\n");
    write_text(&dir.join("index.html"), &html)?;
    summary.written.push("index.html".into());
    Ok(summary)
}
