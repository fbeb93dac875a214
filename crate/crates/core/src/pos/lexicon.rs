//! Word lists for the baseline tagger. All entries are lowercase.

use super::Tag;

/// Tag of closed-class and otherwise fixed words.
pub fn closed_class(word: &str) -> Option<Tag> {
    use Tag::*;
    Some(match word {
        "a" | "an" | "the" | "this" | "that" | "these" | "those" | "each" | "every" | "any"
        | "some" | "no" | "another" | "either" | "neither" | "all" | "both" => Dt,
        "and" | "or" | "but" | "nor" | "plus" => Cc,
        "of" | "in" | "on" | "at" | "by" | "for" | "with" | "from" | "into" | "onto" | "upon"
        | "within" | "without" | "about" | "above" | "below" | "between" | "among" | "through"
        | "during" | "before" | "after" | "since" | "until" | "against" | "across" | "over"
        | "under" | "via" | "per" | "than" | "because" | "if" | "unless" | "whether" | "while"
        | "although" | "though" | "as" | "like" | "except" | "beyond" | "toward" | "towards"
        | "behind" | "besides" | "despite" | "throughout" | "whereas" => In,
        "to" => To,
        "can" | "could" | "may" | "might" | "must" | "shall" | "should" | "will" | "would" => Md,
        "i" | "you" | "he" | "she" | "it" | "we" | "they" | "me" | "him" | "us" | "them"
        | "itself" | "themselves" | "himself" | "herself" | "ourselves" | "yourself" => Prp,
        "one" | "two" | "three" | "four" | "five" | "six" | "seven" | "eight" | "nine" | "ten"
        | "zero" | "twenty" | "hundred" | "thousand" => Cd,
        "my" | "your" | "his" | "her" | "its" | "our" | "their" => PrpS,
        "which" | "whatever" | "whichever" => Wdt,
        "who" | "whom" | "what" => Wp,
        "whose" => WpS,
        "when" | "where" | "why" | "how" | "whenever" | "wherever" => Wrb,
        "there" => Ex,
        "be" => Vb,
        "is" => Vbz,
        "are" | "am" => Vbp,
        "was" | "were" => Vbd,
        "been" => Vbn,
        "being" => Vbg,
        "has" => Vbz,
        "have" => Vbp,
        "had" => Vbd,
        "having" => Vbg,
        "does" => Vbz,
        "do" => Vbp,
        "did" => Vbd,
        "not" | "also" | "only" | "then" | "thus" | "therefore" | "however" | "otherwise"
        | "always" | "never" | "often" | "usually" | "already" | "still" | "just" | "even"
        | "very" | "too" | "again" | "here" | "now" | "further" | "furthermore" | "instead"
        | "perhaps" | "rather" | "quite" | "hence" | "else" | "once" | "soon" | "yet"
        | "merely" | "simply" | "typically" | "generally" | "currently" | "together"
        | "away" | "later" | "ever" | "almost" | "indeed" | "so" => Rb,
        "more" | "less" | "fewer" => Jjr,
        "most" | "least" | "best" => Jjs,
        "such" => Pdt,
        "out" | "off" | "up" | "down" => Rp,
        "etc" => Fw,
        "necessary" | "new" | "old" | "same" | "other" | "different" | "many" | "much"
        | "several" | "few" | "own" | "first" | "last" | "next" | "previous" | "current"
        | "valid" | "invalid" | "simple" | "complex" | "common" | "whole" | "full" | "single"
        | "multiple" | "particular" | "specific" | "general" | "main" | "high" | "low"
        | "large" | "small" | "long" | "short" | "good" | "bad" | "open" | "free" | "secure"
        | "public" | "private" | "remote" | "local" | "empty" | "complete" | "correct"
        | "certain" | "various" | "unknown" | "separate" | "appropriate" | "ordinary"
        | "primary" | "secondary" | "temporary" | "arbitrary" | "binary" | "proper"
        | "due" | "able" | "unable" | "present" | "absent" | "similar"
        | "explicit" | "implicit" | "original" | "final" | "initial" | "early" | "late"
        | "true" | "false" | "mandatory" | "optional" | "recent" | "entire" | "extra"
        | "major" | "minor" | "exact" | "direct" | "indirect" | "strict" | "clear" | "safe"
        | "unsafe" | "prior" | "subsequent" | "relevant" | "sufficient" | "efficient"
        | "consistent" | "dependent" | "independent" | "distinct" | "fast" | "slow"
        | "easy" | "hard" | "following" | "corresponding" | "existing"
        | "missing" | "remaining" | "underlying" | "interesting" | "outstanding" => Jj,
        _ => return None,
    })
}

/// Nouns whose suffix would otherwise mislead the rules.
pub fn noun_exception(word: &str) -> bool {
    matches!(
        word,
        "interval" | "signal" | "terminal" | "proposal" | "approval" | "removal"
            | "retrieval" | "arrival" | "portal" | "journal" | "total" | "material" | "manual"
            | "archive" | "table" | "variable" | "cable" | "size" | "state" | "date" | "update"
            | "candidate" | "certificate" | "template" | "rate" | "gate" | "delegate" | "estimate"
            | "family" | "assembly" | "reply" | "supply" | "anomaly" | "string" | "thing"
            | "something" | "nothing" | "anything" | "everything" | "king" | "ring" | "status"
            | "class" | "process" | "access" | "address" | "success" | "analysis" | "basis"
            | "axis" | "thesis" | "bus" | "corpus" | "campus" | "bonus" | "series" | "news"
            | "means" | "species" | "speed" | "need" | "seed" | "feed" | "bed"
            | "comment" | "element" | "argument" | "document" | "segment" | "fragment"
            | "statement" | "requirement" | "agreement" | "environment" | "management"
            | "attachment" | "payment" | "moment" | "content" | "context" | "text" | "time"
            | "data" | "version" | "user" | "server" | "client" | "header" | "body"
            | "identifier" | "parameter" | "character" | "number" | "order" | "type" | "field"
            | "value" | "entity" | "method" | "message" | "protocol" | "resource" | "mailbox"
            | "command" | "system" | "network" | "proxy" | "gateway" | "cache"
    )
}

/// Verbs inflected regularly, sorted for binary search.
pub const REGULAR_VERBS: &[&str] = &[
    "accept", "access", "add", "allow", "append", "apply", "arrive", "ask", "attempt",
    "authenticate", "cache", "call", "cause", "change", "check", "close", "compare",
    "complete", "connect", "consider", "consist", "contain", "continue", "convert", "copy",
    "correspond", "create", "decide", "declare", "decode", "define", "delete", "deliver",
    "depend", "describe", "design", "determine", "differ", "disable", "discard", "discuss",
    "display", "distribute", "encode", "ensure", "enter", "establish", "examine", "exist",
    "expect", "expire", "explain", "express", "extend", "fail", "fetch", "fill", "follow",
    "force", "format", "forward", "generate", "handle", "help", "identify", "ignore",
    "implement", "improve", "include", "indicate", "inform", "initiate", "insert", "install",
    "intend", "interpret", "introduce", "involve", "issue", "list", "load", "locate", "look",
    "maintain", "mark", "match", "modify", "move", "need", "note", "notify", "obtain",
    "occur", "offer", "open", "operate", "parse", "pass", "perform", "permit", "place",
    "point", "post", "prefer", "prepare", "prevent", "print", "proceed", "process", "produce",
    "provide", "publish", "receive", "recognize", "record", "redirect", "reduce", "refer",
    "register", "reject", "relate", "release", "rely", "remain", "remove", "rename",
    "replace", "report", "represent", "request", "require", "reserve", "resolve", "respond",
    "restrict", "result", "retrieve", "return", "reuse", "search", "select", "serve",
    "specify", "start", "store", "submit", "subscribe", "succeed", "suggest", "support",
    "terminate", "transfer", "transmit", "treat", "try", "update", "use", "validate",
    "verify", "view", "want", "wish", "work",
];

/// Irregular inflected forms.
pub fn irregular(word: &str) -> Option<Tag> {
    use Tag::*;
    Some(match word {
        "sent" | "built" | "held" | "kept" | "left" | "meant" | "found" | "made" | "said"
        | "sold" | "told" | "brought" | "bought" | "thought" | "caught" | "taught" | "lost"
        | "paid" | "heard" | "understood" | "got" | "led" | "fed" | "met" | "dealt" => Vbn,
        "been" | "done" | "given" | "taken" | "known" | "written" | "shown" | "seen"
        | "chosen" | "driven" | "broken" | "forgotten" | "hidden" | "spoken" | "begun"
        | "gotten" | "drawn" | "grown" | "thrown" | "withdrawn" | "undertaken" | "overridden"
        | "forbidden" => Vbn,
        "gave" | "took" | "knew" | "wrote" | "showed" | "saw" | "chose" | "began" | "came"
        | "went" | "became" | "ran" | "grew" | "drew" | "threw" | "spoke" | "broke" => Vbd,
        "make" | "take" | "give" | "get" | "put" | "set" | "send" | "build" | "hold" | "keep"
        | "mean" | "find" | "know" | "write" | "show" | "see" | "choose" | "begin" | "come"
        | "go" | "become" | "run" | "read" | "leave" | "lead" | "say" | "tell" | "bring"
        | "understand" | "let" | "cut" | "hit" | "override" => Vb,
        "makes" | "takes" | "gives" | "gets" | "puts" | "sets" | "sends" | "builds" | "holds"
        | "keeps" | "means" | "finds" | "knows" | "writes" | "shows" | "sees" | "chooses"
        | "begins" | "comes" | "goes" | "becomes" | "runs" | "reads" | "leaves" | "leads"
        | "says" | "tells" | "brings" | "understands" | "lets" | "overrides" => Vbz,
        "making" | "taking" | "giving" | "getting" | "putting" | "setting" | "sending"
        | "building" | "holding" | "keeping" | "meaning" | "finding" | "knowing" | "writing"
        | "showing" | "seeing" | "choosing" | "beginning" | "coming" | "going" | "becoming"
        | "running" | "reading" | "leaving" | "leading" | "saying" | "telling" | "bringing" => {
            Vbg
        }
        _ => return None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerbForm {
    Base,
    ThirdSingular,
    PastParticiple,
    Gerund,
}

fn is_base(s: &str) -> bool {
    REGULAR_VERBS.binary_search(&s).is_ok()
}

/// Inflection of a regular lexicon verb, if `word` is one.
pub fn regular_verb(word: &str) -> Option<VerbForm> {
    if is_base(word) {
        return Some(VerbForm::Base);
    }
    let with = |stem: &str, tail: &str| {
        let mut s = alloc::string::String::from(stem);
        s.push_str(tail);
        is_base(&s)
    };
    if let Some(stem) = word.strip_suffix("ies") {
        if with(stem, "y") {
            return Some(VerbForm::ThirdSingular);
        }
    }
    if let Some(stem) = word.strip_suffix("es") {
        if is_base(stem) {
            return Some(VerbForm::ThirdSingular);
        }
    }
    if let Some(stem) = word.strip_suffix('s') {
        if is_base(stem) {
            return Some(VerbForm::ThirdSingular);
        }
    }
    if let Some(stem) = word.strip_suffix("ied") {
        if with(stem, "y") {
            return Some(VerbForm::PastParticiple);
        }
    }
    if let Some(stem) = word.strip_suffix("ed") {
        if is_base(stem) || with(stem, "e") {
            return Some(VerbForm::PastParticiple);
        }
        // doubled final consonant: submitted, preferred
        let b = stem.as_bytes();
        if b.len() >= 2 && b[b.len() - 1] == b[b.len() - 2] && is_base(&stem[..stem.len() - 1]) {
            return Some(VerbForm::PastParticiple);
        }
    }
    if let Some(stem) = word.strip_suffix("ing") {
        let b = stem.as_bytes();
        if is_base(stem)
            || with(stem, "e")
            || (b.len() >= 2 && b[b.len() - 1] == b[b.len() - 2] && is_base(&stem[..stem.len() - 1]))
        {
            return Some(VerbForm::Gerund);
        }
    }
    None
}
