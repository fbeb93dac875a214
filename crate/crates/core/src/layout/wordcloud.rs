use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{LayoutError, Rect};

/// Box width per character as a fraction of the font size.
pub const CHAR_WIDTH: f64 = 0.6;
/// Distance between successive spiral turns.
const TURN_SPACING: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct WordCloudConfig {
    pub max_words: usize,
    pub width: f64,
    pub height: f64,
    pub min_font: f64,
    pub max_font: f64,
    pub seed: u64,
}

impl Default for WordCloudConfig {
    fn default() -> Self {
        WordCloudConfig {
            max_words: 50,
            width: 800.0,
            height: 600.0,
            min_font: 12.0,
            max_font: 72.0,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlacedWord {
    pub word: String,
    pub frequency: usize,
    pub font_size: f64,
    /// Centre of the box.
    pub x: f64,
    pub y: f64,
    pub bbox: Rect,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WordCloudLayout {
    pub width: f64,
    pub height: f64,
    /// Placed words by descending frequency, ties by word.
    pub words: Vec<PlacedWord>,
    /// Selected words that found no free spot.
    pub skipped: Vec<String>,
}

/// Places the `max_words` most frequent non-stop words.
///
/// Font size falls linearly from `max_font` to `min_font` over the dense
/// rank of the distinct frequencies. Words are placed in rank order at the
/// first free point of an Archimedean spiral around the canvas centre whose
/// starting angle is drawn from `seed`.
pub fn word_cloud(
    frequencies: &BTreeMap<String, usize>,
    stopwords: &BTreeSet<String>,
    config: &WordCloudConfig,
) -> Result<WordCloudLayout, LayoutError> {
    if config.max_words == 0 {
        return Err(LayoutError::ZeroWords);
    }
    if !(config.width > 0.0 && config.height > 0.0) {
        return Err(LayoutError::BadCanvas);
    }
    if !(config.min_font > 0.0 && config.min_font <= config.max_font) {
        return Err(LayoutError::BadFontRange);
    }
    let mut ranked: Vec<(&str, usize)> = frequencies
        .iter()
        .filter(|(w, &f)| f > 0 && !stopwords.contains(w.as_str()))
        .map(|(w, &f)| (w.as_str(), f))
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));
    ranked.truncate(config.max_words);
    if ranked.is_empty() {
        return Err(LayoutError::NoWords);
    }
    let mut distinct: Vec<usize> = ranked.iter().map(|r| r.1).collect();
    distinct.dedup();
    let span = (distinct.len() - 1).max(1) as f64;
    let size_of = |f: usize| {
        let rank = distinct.iter().position(|&d| d == f).unwrap_or(0) as f64;
        config.max_font - (config.max_font - config.min_font) * rank / span
    };

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let phase: f64 = rng.random_range(0.0..TAU);
    let (cx, cy) = (config.width / 2.0, config.height / 2.0);
    let max_r = libm::hypot(cx, cy);
    let a = TURN_SPACING / TAU;

    let mut words: Vec<PlacedWord> = Vec::new();
    let mut skipped = Vec::new();
    for (i, &(word, frequency)) in ranked.iter().enumerate() {
        let font_size = size_of(frequency);
        let w = word.chars().count() as f64 * font_size * CHAR_WIDTH;
        let h = font_size;
        let mut theta = 0.0;
        let mut spot = None;
        loop {
            let r = a * theta;
            if r > max_r {
                break;
            }
            let x = cx + r * libm::cos(theta + phase);
            let y = cy + r * libm::sin(theta + phase);
            let bbox = Rect {
                x: x - w / 2.0,
                y: y - h / 2.0,
                width: w,
                height: h,
            };
            if bbox.within(config.width, config.height) && !words.iter().any(|p| p.bbox.intersects(&bbox)) {
                spot = Some((x, y, bbox));
                break;
            }
            if i == 0 {
                break;
            }
            theta += (2.0 / r.max(1.0)).min(0.5);
        }
        match spot {
            Some((x, y, bbox)) => words.push(PlacedWord {
                word: String::from(word),
                frequency,
                font_size,
                x,
                y,
                bbox,
            }),
            None if i == 0 => {
                return Err(LayoutError::CanvasTooSmall {
                    word: String::from(word),
                    width: config.width,
                    height: config.height,
                })
            }
            None => skipped.push(String::from(word)),
        }
    }
    Ok(WordCloudLayout {
        width: config.width,
        height: config.height,
        words,
        skipped,
    })
}
