use alloc::vec::Vec;
use core::ops::Range;

use crate::corpus::Token;

/// Words that end in a period without ending a sentence, lowercase and
/// without the period.
pub const ABBREVIATIONS: &[&str] = &[
    "al", "approx", "cf", "dr", "e", "eg", "etc", "fig", "g", "i", "ie", "inc", "jr", "ltd",
    "mr", "mrs", "ms", "no", "nr", "prof", "sec", "sect", "sr", "st", "vol", "vs",
];

fn is_abbreviation(tok: &Token) -> bool {
    let w = tok.surface.to_lowercase();
    ABBREVIATIONS.binary_search(&w.as_str()).is_ok()
        || (tok.surface.chars().count() == 1 && tok.surface.chars().all(char::is_uppercase))
}

/// Token ranges of the sentences in `tokens`.
///
/// A sentence ends at `.`, `?` or `!` followed by whitespace and a token
/// starting with an uppercase letter, unless the period closes a listed
/// abbreviation. A blank line also ends a sentence.
pub fn split_sentences(tokens: &[Token]) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 0..tokens.len() {
        let t = &tokens[i];
        let Some(next) = tokens.get(i + 1) else {
            break;
        };
        let terminal = matches!(t.surface.as_str(), "." | "?" | "!")
            && next.start > t.end
            && next.surface.chars().next().is_some_and(char::is_uppercase)
            && !(t.surface == "." && i > 0 && tokens[i - 1].end == t.start && is_abbreviation(&tokens[i - 1]));
        let paragraph = next.line > t.line + 1;
        if terminal || paragraph {
            out.push(start..i + 1);
            start = i + 1;
        }
    }
    if start < tokens.len() {
        out.push(start..tokens.len());
    }
    out
}
