use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{CloneError, CloneGroup, CloneInstance};
use crate::corpus::TokenizedCorpus;
use crate::editdist::{self, EditOp};

/// One line-level difference of an instance against the first instance.
/// Line numbers refer to the respective documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum LineEdit {
    Changed {
        skeleton_line: u32,
        instance_line: u32,
        skeleton: String,
        instance: String,
    },
    Deleted {
        skeleton_line: u32,
        skeleton: String,
    },
    Inserted {
        instance_line: u32,
        instance: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDiff {
    pub instance: CloneInstance,
    pub edits: Vec<LineEdit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneDiff {
    pub group_id: usize,
    pub skeleton: CloneInstance,
    /// One entry per instance after the first.
    pub instances: Vec<InstanceDiff>,
}

impl CloneDiff {
    pub fn is_empty(&self) -> bool {
        self.instances.iter().all(|d| d.edits.is_empty())
    }
}

fn instance_lines(
    corpus: &TokenizedCorpus,
    inst: &CloneInstance,
) -> Result<Vec<(u32, String)>, CloneError> {
    let doc = corpus
        .document(&inst.document_id)
        .ok_or_else(|| CloneError::UnknownDocument(inst.document_id.clone()))?;
    let mut out: Vec<(u32, String)> = Vec::new();
    for t in &doc.tokens[inst.start_token..inst.end_token] {
        match out.last_mut() {
            Some((line, text)) if *line == t.line => {
                text.push(' ');
                text.push_str(&t.normalized);
            }
            _ => out.push((t.line, t.normalized.clone())),
        }
    }
    Ok(out)
}

/// Line-level edit script of every instance against the first instance.
pub fn diff_instances(corpus: &TokenizedCorpus, group: &CloneGroup) -> Result<CloneDiff, CloneError> {
    let skeleton = &group.instances[0];
    let base = instance_lines(corpus, skeleton)?;
    let base_text: Vec<&str> = base.iter().map(|(_, s)| s.as_str()).collect();
    let mut instances = Vec::with_capacity(group.instances.len() - 1);
    for inst in &group.instances[1..] {
        let lines = instance_lines(corpus, inst)?;
        let text: Vec<&str> = lines.iter().map(|(_, s)| s.as_str()).collect();
        let edits = editdist::script(&base_text, &text)
            .into_iter()
            .filter_map(|op| match op {
                EditOp::Keep(..) => None,
                EditOp::Replace(i, j) => Some(LineEdit::Changed {
                    skeleton_line: base[i].0,
                    instance_line: lines[j].0,
                    skeleton: base[i].1.clone(),
                    instance: lines[j].1.clone(),
                }),
                EditOp::Delete(i) => Some(LineEdit::Deleted {
                    skeleton_line: base[i].0,
                    skeleton: base[i].1.clone(),
                }),
                EditOp::Insert(j) => Some(LineEdit::Inserted {
                    instance_line: lines[j].0,
                    instance: lines[j].1.clone(),
                }),
            })
            .collect();
        instances.push(InstanceDiff {
            instance: inst.clone(),
            edits,
        });
    }
    Ok(CloneDiff {
        group_id: group.id,
        skeleton: skeleton.clone(),
        instances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clones::{detect_exact_clones, detect_gapped_clones};
    use alloc::format;

    #[test]
    fn exact_group_has_empty_diff() {
        let text = "one two three four five six\nx\none two three four five six";
        let c = TokenizedCorpus::from_texts([("a", text)]);
        let g = detect_exact_clones(&c, 3).unwrap();
        let d = diff_instances(&c, &g[0]).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.instances.len(), 1);
    }

    #[test]
    fn gapped_fixture_edit_script() {
        let common_a = "alpha beta gamma delta epsilon\nzeta eta theta iota kappa";
        let common_b = "lambda mu nu xi omicron\npi rho sigma tau upsilon";
        let text = format!(
            "{common_a}\nfirst variant line here\n{common_b}\nfiller\n{common_a}\nsecond other words now\n{common_b}"
        );
        let c = TokenizedCorpus::from_texts([("a", text.as_str())]);
        let g = detect_gapped_clones(&c, 8, 1).unwrap();
        assert_eq!(g.len(), 1);
        let d = diff_instances(&c, &g[0]).unwrap();
        assert_eq!(
            d.instances[0].edits,
            [LineEdit::Changed {
                skeleton_line: 3,
                instance_line: 9,
                skeleton: "first variant line here".into(),
                instance: "second other words now".into(),
            }]
        );
    }

    #[test]
    fn inserted_line_reported() {
        let common_a = "alpha beta gamma delta epsilon\nzeta eta theta iota kappa";
        let common_b = "lambda mu nu xi omicron\npi rho sigma tau upsilon";
        let text = format!("{common_a}\n{common_b}\nfiller\n{common_a}\nextra line\n{common_b}");
        let c = TokenizedCorpus::from_texts([("a", text.as_str())]);
        let g = detect_gapped_clones(&c, 8, 1).unwrap();
        assert_eq!(g.len(), 1);
        let d = diff_instances(&c, &g[0]).unwrap();
        assert_eq!(
            d.instances[0].edits,
            [LineEdit::Inserted {
                instance_line: 8,
                instance: "extra line".into(),
            }]
        );
    }
}
