use alloc::string::String;
use alloc::vec::Vec;

use super::lexicon::{closed_class, irregular, noun_exception, regular_verb, VerbForm};
use super::{Tag, Tagger};
use crate::corpus::Token;

/// Deterministic lexicon-and-suffix tagger.
///
/// Each token is tagged left to right by the first matching rule:
///
/// 1. punctuation by character;
/// 2. numbers as `CD`;
/// 3. closed-class lexicon (determiners, prepositions, pronouns, modals,
///    auxiliaries, common adverbs and adjectives);
/// 4. lexicon verbs, disambiguated by the neighbouring tags;
/// 5. all-caps words as `NNP`, capitalized words inside a sentence as `NNP`;
/// 6. suffixes: `-ed`, `-ing`, nominal `-tion -sion -ness -ment -ity -ance
///    -ence`, verbal `-ize -ise -ate`, adjectival `-ive -al -able -ible -ous
///    -ful -less -ic`, adverbial `-ly`, plural `-s`;
/// 7. lowercase hyphenated words as `JJ`;
/// 8. otherwise `NN`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BaselineTagger;

impl Tagger for BaselineTagger {
    fn tag(&self, sentence: &[Token]) -> Vec<Tag> {
        let lower: Vec<String> = sentence.iter().map(|t| t.surface.to_lowercase()).collect();
        let mut tags = Vec::with_capacity(sentence.len());
        for i in 0..sentence.len() {
            let ctx = Ctx {
                tokens: sentence,
                lower: &lower,
                tags: &tags,
                i,
            };
            let t = ctx.tag();
            tags.push(t);
        }
        tags
    }
}

const BE_HAVE: &[&str] = &[
    "am", "are", "be", "been", "being", "get", "gets", "got", "had", "has", "have", "having",
    "is", "was", "were",
];

/// Verb forms that double as past participles.
const BARE_PARTICIPLES: &[&str] = &["become", "come", "cut", "hit", "let", "put", "read", "run", "set"];

struct Ctx<'a> {
    tokens: &'a [Token],
    lower: &'a [String],
    tags: &'a [Tag],
    i: usize,
}

impl Ctx<'_> {
    fn prev(&self) -> Option<Tag> {
        self.tags.last().copied()
    }

    /// Index of the previous token that is not an adverb.
    fn prev_non_adverb(&self) -> Option<usize> {
        (0..self.i).rev().find(|&j| !self.tags[j].is_adverb())
    }

    fn after_be_or_have(&self) -> bool {
        self.prev_non_adverb()
            .is_some_and(|j| BE_HAVE.contains(&self.lower[j].as_str()))
    }

    fn next_closed(&self) -> Option<Tag> {
        self.lower.get(self.i + 1).and_then(|w| closed_class(w))
    }

    fn sentence_initial(&self) -> bool {
        !self.tokens[..self.i].iter().any(Token::is_word)
    }

    fn prev_is_modifier(&self) -> bool {
        matches!(
            self.prev(),
            Some(Tag::Dt | Tag::Jj | Tag::Jjr | Tag::Jjs | Tag::PrpS | Tag::Cd | Tag::Pos | Tag::Pdt)
        )
    }

    fn prev_is_subject(&self) -> bool {
        self.prev()
            .is_some_and(|t| t.is_noun() || matches!(t, Tag::Prp | Tag::Wdt | Tag::Ex))
    }

    fn tag(&self) -> Tag {
        let tok = &self.tokens[self.i];
        if !tok.is_word() {
            return self.punct(&tok.surface);
        }
        let w = self.lower[self.i].as_str();
        if !w.chars().any(char::is_alphanumeric) {
            return Tag::Colon;
        }
        if w.chars().all(|c| c.is_ascii_digit() || c == '-') {
            return Tag::Cd;
        }
        if w == "s" && self.i > 0 && self.tokens[self.i - 1].surface == "'" {
            return Tag::Pos;
        }
        if let Some(t) = closed_class(w) {
            return t;
        }
        if let Some(t) = irregular(w) {
            return match t {
                Tag::Vb if BARE_PARTICIPLES.contains(&w) && self.after_be_or_have() => Tag::Vbn,
                Tag::Vb => self.base_verb(),
                Tag::Vbz => self.third_singular(),
                Tag::Vbg => self.gerund(),
                Tag::Vbn if matches!(w, "sent" | "built" | "held" | "kept" | "left" | "meant"
                    | "found" | "made" | "said" | "sold" | "told" | "brought" | "bought"
                    | "thought" | "caught" | "taught" | "lost" | "paid" | "heard" | "understood"
                    | "got" | "led" | "fed" | "met" | "dealt") => self.participle(),
                other => other,
            };
        }
        if let Some(form) = regular_verb(w) {
            return match form {
                VerbForm::Base => self.base_verb(),
                VerbForm::ThirdSingular => self.third_singular(),
                VerbForm::PastParticiple => self.participle(),
                VerbForm::Gerund => self.gerund(),
            };
        }
        let surface = tok.surface.as_str();
        let letters: Vec<char> = surface.chars().filter(|c| c.is_alphabetic()).collect();
        if letters.len() >= 2 && letters.iter().all(|c| c.is_uppercase()) {
            return Tag::Nnp;
        }
        if surface.chars().next().is_some_and(char::is_uppercase) && !self.sentence_initial() {
            let upper_prefix = letters.iter().take_while(|c| c.is_uppercase()).count();
            if upper_prefix >= 2 && surface.ends_with('s') && upper_prefix + 1 == letters.len() {
                return Tag::Nnps;
            }
            return Tag::Nnp;
        }
        if noun_exception(w) {
            return Tag::Nn;
        }
        if let Some(t) = self.suffix(w) {
            return t;
        }
        if w.contains('-') && w.chars().any(char::is_alphabetic) {
            return Tag::Jj;
        }
        Tag::Nn
    }

    fn punct(&self, s: &str) -> Tag {
        match s {
            "." | "?" | "!" => Tag::Period,
            "," => Tag::Comma,
            ":" | ";" | "-" | "–" | "—" => Tag::Colon,
            "(" | "[" | "{" | "<" => Tag::Lrb,
            ")" | "]" | "}" | ">" => Tag::Rrb,
            "#" => Tag::Hash,
            "$" => Tag::Dollar,
            "\"" | "“" | "”" => {
                let open = self.tokens[..self.i].iter().filter(|t| t.surface == s).count() % 2 == 0;
                if open {
                    Tag::OpenQuote
                } else {
                    Tag::CloseQuote
                }
            }
            "'" | "’" => {
                if self.tokens.get(self.i + 1).is_some_and(|t| t.surface == "s") {
                    Tag::Pos
                } else {
                    Tag::CloseQuote
                }
            }
            _ => Tag::Sym,
        }
    }

    fn base_verb(&self) -> Tag {
        if self.prev_is_modifier() || self.prev() == Some(Tag::In) {
            return Tag::Nn;
        }
        let governor = self.prev_non_adverb().map(|j| self.tags[j]);
        if matches!(governor, Some(Tag::To | Tag::Md)) {
            return Tag::Vb;
        }
        match self.prev() {
            Some(Tag::Prp | Tag::Nns | Tag::Nnps | Tag::Wdt) => Tag::Vbp,
            Some(Tag::Nn | Tag::Nnp) => Tag::Nn,
            _ if matches!(
                self.next_closed(),
                Some(Tag::Dt | Tag::PrpS | Tag::Prp | Tag::Pdt | Tag::Cd)
            ) =>
            {
                Tag::Vb
            }
            _ => Tag::Nn,
        }
    }

    fn third_singular(&self) -> Tag {
        if self.prev_is_modifier()
            || matches!(self.prev(), Some(t) if t.is_verb() || matches!(t, Tag::In | Tag::To))
        {
            return Tag::Nns;
        }
        let next_is_function = matches!(
            self.next_closed(),
            Some(
                Tag::Dt | Tag::In | Tag::To | Tag::Rb | Tag::Prp | Tag::PrpS | Tag::Cd | Tag::Pdt
                    | Tag::Jjr | Tag::Jjs | Tag::Rp
            )
        );
        if next_is_function || self.prev_is_subject() {
            Tag::Vbz
        } else {
            Tag::Nns
        }
    }

    fn participle(&self) -> Tag {
        if self.after_be_or_have() {
            return Tag::Vbn;
        }
        match self.prev() {
            Some(t) if t.is_noun() || matches!(t, Tag::Prp | Tag::Wdt) => Tag::Vbd,
            _ => Tag::Vbn,
        }
    }

    fn gerund(&self) -> Tag {
        if self.prev_is_modifier() {
            Tag::Nn
        } else {
            Tag::Vbg
        }
    }

    fn suffix(&self, w: &str) -> Option<Tag> {
        let long = |suf: &str| w.len() > suf.len() + 2 && w.ends_with(suf);
        if long("ed") && !w.ends_with("eed") {
            return Some(self.participle());
        }
        if long("ing") {
            return Some(self.gerund());
        }
        const NOUN: &[&str] = &["tion", "sion", "ness", "ment", "ity", "ance", "ence"];
        const VERB: &[&str] = &["ize", "ise", "ate"];
        const ADJ: &[&str] = &["ive", "al", "able", "ible", "ous", "ful", "less", "ic"];
        let plural = w.strip_suffix('s').filter(|s| s.len() > 2);
        let plural_of = |sufs: &[&str]| {
            plural.is_some_and(|p| sufs.iter().any(|s| p.len() > s.len() + 2 && p.ends_with(s)))
        };
        if NOUN.iter().any(|s| long(s)) {
            return Some(Tag::Nn);
        }
        if plural_of(NOUN) {
            return Some(Tag::Nns);
        }
        if VERB.iter().any(|s| long(s)) {
            return Some(self.base_verb_unknown());
        }
        if plural_of(VERB) {
            return Some(self.third_singular());
        }
        if ADJ.iter().any(|s| long(s)) {
            return Some(Tag::Jj);
        }
        if long("ly") {
            return Some(Tag::Rb);
        }
        if w.len() > 3 && w.ends_with('s') && !(w.ends_with("ss") || w.ends_with("us") || w.ends_with("is")) {
            let verb_like = self.prev_is_subject() && matches!(self.next_closed(), Some(Tag::Dt | Tag::PrpS));
            return Some(if verb_like { Tag::Vbz } else { Tag::Nns });
        }
        None
    }

    /// Like [`Self::base_verb`] but without the noun fallbacks for nouns.
    fn base_verb_unknown(&self) -> Tag {
        if self.prev_is_modifier() || self.prev() == Some(Tag::In) {
            return Tag::Nn;
        }
        match self.prev_non_adverb().map(|j| self.tags[j]) {
            Some(Tag::To | Tag::Md) => Tag::Vb,
            Some(Tag::Prp | Tag::Nns | Tag::Nnps) => Tag::Vbp,
            _ => Tag::Vb,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pos::{render_tagged, tag_text};
    use alloc::vec;

    fn tags(text: &str) -> Vec<&'static str> {
        tag_text(&BaselineTagger, "t", text)
            .into_iter()
            .flatten()
            .map(|t| t.tag.as_str())
            .collect()
    }

    #[test]
    fn table_one_sentence() {
        let s = "The Hypertext Transfer Protocol (HTTP) is an application-level\n   protocol with the lightness and speed necessary for distributed,\n   collaborative, hypermedia information systems.";
        let tagged = tag_text(&BaselineTagger, "rfc1945", s);
        assert_eq!(tagged.len(), 1);
        assert_eq!(
            render_tagged(&tagged[0]),
            "The_DT Hypertext_NNP Transfer_NN Protocol_NNP (_-LRB- HTTP_NNP )_-RRB- is_VBZ an_DT \
             application-level_JJ protocol_NN with_IN the_DT lightness_NN and_CC speed_NN \
             necessary_JJ for_IN distributed_VBN ,_, collaborative_JJ ,_, hypermedia_NN \
             information_NN systems_NNS ._."
        );
    }

    #[test]
    fn single_words() {
        assert_eq!(tags("The"), ["DT"]);
        assert_eq!(tags("protocol"), ["NN"]);
        assert_eq!(tags("lightness"), ["NN"]);
    }

    #[test]
    fn verbs_in_context() {
        assert_eq!(tags("Server stores message"), ["NN", "VBZ", "NN"]);
        assert_eq!(tags("The server stores the message."), ["DT", "NN", "VBZ", "DT", "NN", "."]);
        assert_eq!(tags("the client sends requests"), ["DT", "NN", "VBZ", "NNS"]);
        assert_eq!(tags("a request to be applied"), ["DT", "NN", "TO", "VB", "VBN"]);
        assert_eq!(tags("clients must not use it"), ["NNS", "MD", "RB", "VB", "PRP"]);
        assert_eq!(tags("the server stored data"), ["DT", "NN", "VBD", "NN"]);
    }

    #[test]
    fn suffix_rules() {
        assert_eq!(
            tags("quickly normalize tested running extensible"),
            ["RB", "VB", "VBN", "VBG", "JJ"]
        );
        assert_eq!(tags("the implementations"), ["DT", "NNS"]);
        assert_eq!(tags("the 1945 URIs"), ["DT", "CD", "NNPS"]);
    }

    #[test]
    fn one_tag_per_token() {
        let s = "Hello, world! (It's a test) -- with \"quotes\" and $5 #1";
        let toks = crate::corpus::tokenize_text("d", s, &Default::default()).tokens;
        assert_eq!(BaselineTagger.tag(&toks).len(), toks.len());
        assert_eq!(BaselineTagger.tag(&[]), vec![]);
    }
}
