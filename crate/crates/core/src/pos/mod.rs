//! Part-of-speech tagging and the analyses built on it.
//!
//! Taggers implement [`Tagger`]; [`BaselineTagger`] is a deterministic
//! lexicon-and-suffix tagger over the Penn Treebank tag set.

mod baseline;
mod extract;
mod lexicon;
mod sentences;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::corpus::{tokenize_text, Token, TokenizerConfig};

pub use baseline::BaselineTagger;
pub use extract::{
    detect_passive, extract_er, extract_terms, merge_graphs, Entity, ErGraph, Relationship,
    SmellFinding, SmellKind, Term,
};
pub use sentences::{split_sentences, ABBREVIATIONS};

macro_rules! tags {
    ($($variant:ident => $s:literal),* $(,)?) => {
        /// Penn Treebank part-of-speech and punctuation tags.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Tag {
            $($variant),*
        }

        impl Tag {
            pub const ALL: &'static [Tag] = &[$(Tag::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(Tag::$variant => $s),*
                }
            }
        }

        impl FromStr for Tag {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($s => Ok(Tag::$variant),)*
                    other => Err(other.into()),
                }
            }
        }
    };
}

tags! {
    Cc => "CC", Cd => "CD", Dt => "DT", Ex => "EX", Fw => "FW", In => "IN",
    Jj => "JJ", Jjr => "JJR", Jjs => "JJS", Ls => "LS", Md => "MD",
    Nn => "NN", Nns => "NNS", Nnp => "NNP", Nnps => "NNPS", Pdt => "PDT",
    Pos => "POS", Prp => "PRP", PrpS => "PRP$", Rb => "RB", Rbr => "RBR",
    Rbs => "RBS", Rp => "RP", Sym => "SYM", To => "TO", Uh => "UH",
    Vb => "VB", Vbd => "VBD", Vbg => "VBG", Vbn => "VBN", Vbp => "VBP",
    Vbz => "VBZ", Wdt => "WDT", Wp => "WP", WpS => "WP$", Wrb => "WRB",
    Period => ".", Comma => ",", Colon => ":", Lrb => "-LRB-", Rrb => "-RRB-",
    OpenQuote => "``", CloseQuote => "''", Hash => "#", Dollar => "$",
}

impl Tag {
    pub fn is_noun(self) -> bool {
        matches!(self, Tag::Nn | Tag::Nns | Tag::Nnp | Tag::Nnps)
    }

    pub fn is_verb(self) -> bool {
        matches!(
            self,
            Tag::Vb | Tag::Vbd | Tag::Vbg | Tag::Vbn | Tag::Vbp | Tag::Vbz
        )
    }

    pub fn is_adjective(self) -> bool {
        matches!(self, Tag::Jj | Tag::Jjr | Tag::Jjs)
    }

    pub fn is_adverb(self) -> bool {
        matches!(self, Tag::Rb | Tag::Rbr | Tag::Rbs)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Tag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse()
            .map_err(|e| serde::de::Error::custom(alloc::format!("unknown tag `{e}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedToken {
    pub token: Token,
    pub tag: Tag,
}

/// Assigns one tag per token of a single sentence.
pub trait Tagger {
    fn tag(&self, sentence: &[Token]) -> Vec<Tag>;
}

/// Tags `sentence` and pairs every token with its tag.
pub fn tag<T: Tagger + ?Sized>(tagger: &T, sentence: &[Token]) -> Vec<TaggedToken> {
    let tags = tagger.tag(sentence);
    assert_eq!(tags.len(), sentence.len(), "tagger must return one tag per token");
    sentence
        .iter()
        .cloned()
        .zip(tags)
        .map(|(token, tag)| TaggedToken { token, tag })
        .collect()
}

/// Tokenizes `text` with punctuation kept, splits it into sentences and
/// tags each one.
pub fn tag_text<T: Tagger + ?Sized>(tagger: &T, document_id: &str, text: &str) -> Vec<Vec<TaggedToken>> {
    let stream = tokenize_text(document_id, text, &TokenizerConfig::default());
    split_sentences(&stream.tokens)
        .into_iter()
        .map(|r| tag(tagger, &stream.tokens[r]))
        .collect()
}

/// `word_TAG` rendering of a tagged sentence.
pub fn render_tagged(sentence: &[TaggedToken]) -> String {
    let mut out = String::new();
    for (i, t) in sentence.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&t.token.surface);
        out.push('_');
        out.push_str(t.tag.as_str());
    }
    out
}
