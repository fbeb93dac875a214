use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{LayoutError, Rect};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreemapItem {
    pub id: String,
    pub size: f64,
    /// Metric in `0..=1`, e.g. clone coverage.
    pub color: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rgb(pub u8, pub u8, pub u8);

/// Linear colour scale between two endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Palette {
    pub low: Rgb,
    pub high: Rgb,
}

impl Default for Palette {
    /// Green at 0, red at 1.
    fn default() -> Self {
        Palette {
            low: Rgb(0, 255, 0),
            high: Rgb(255, 0, 0),
        }
    }
}

impl Palette {
    pub fn color(&self, value: f64) -> Rgb {
        let v = value.clamp(0.0, 1.0);
        let mix = |a: u8, b: u8| libm::round(a as f64 + (b as f64 - a as f64) * v) as u8;
        Rgb(
            mix(self.low.0, self.high.0),
            mix(self.low.1, self.high.1),
            mix(self.low.2, self.high.2),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreemapRect {
    pub id: String,
    pub rect: Rect,
    pub value: f64,
    pub fill: Rgb,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreemapLayout {
    pub width: f64,
    pub height: f64,
    /// In layout order: descending size, ties by id.
    pub rects: Vec<TreemapRect>,
}

/// Worst aspect ratio of a row of areas laid along a side of length `side`.
fn worst(row: &[f64], side: f64) -> f64 {
    let sum: f64 = row.iter().sum();
    let (min, max) = row
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &a| (lo.min(a), hi.max(a)));
    let s2 = side * side;
    let t2 = sum * sum;
    (s2 * max / t2).max(t2 / (s2 * min))
}

/// Squarified treemap: rectangle areas are proportional to item sizes and
/// together tile the `width` x `height` canvas.
pub fn treemap(
    items: &[TreemapItem],
    width: f64,
    height: f64,
    palette: &Palette,
) -> Result<TreemapLayout, LayoutError> {
    if items.is_empty() {
        return Err(LayoutError::EmptyTreemap);
    }
    if !(width > 0.0 && height > 0.0) {
        return Err(LayoutError::BadCanvas);
    }
    for it in items {
        if !(it.size > 0.0 && it.size.is_finite()) {
            return Err(LayoutError::NonPositiveSize(it.id.clone()));
        }
        if !(0.0..=1.0).contains(&it.color) {
            return Err(LayoutError::ColorOutOfRange(it.id.clone()));
        }
    }
    let mut order: Vec<&TreemapItem> = items.iter().collect();
    order.sort_by(|a, b| b.size.total_cmp(&a.size).then_with(|| a.id.cmp(&b.id)));
    let total: f64 = order.iter().map(|i| i.size).sum();
    let scale = width * height / total;
    let areas: Vec<f64> = order.iter().map(|i| i.size * scale).collect();

    let mut rects = Vec::with_capacity(areas.len());
    let mut free = Rect { x: 0.0, y: 0.0, width, height };
    let mut i = 0;
    while i < areas.len() {
        let side = free.width.min(free.height);
        let mut end = i + 1;
        while end < areas.len() && worst(&areas[i..=end], side) <= worst(&areas[i..end], side) {
            end += 1;
        }
        let row = &areas[i..end];
        let row_sum: f64 = row.iter().sum();
        let last_row = end == areas.len();
        if free.width >= free.height {
            // Column on the left edge.
            let w = if last_row { free.width } else { row_sum / free.height };
            let mut y = free.y;
            for (k, &a) in row.iter().enumerate() {
                let h = if k + 1 == row.len() { free.y + free.height - y } else { a / w };
                rects.push(Rect { x: free.x, y, width: w, height: h });
                y += h;
            }
            free = Rect { x: free.x + w, width: free.width - w, ..free };
        } else {
            let h = if last_row { free.height } else { row_sum / free.width };
            let mut x = free.x;
            for (k, &a) in row.iter().enumerate() {
                let w = if k + 1 == row.len() { free.x + free.width - x } else { a / h };
                rects.push(Rect { x, y: free.y, width: w, height: h });
                x += w;
            }
            free = Rect { y: free.y + h, height: free.height - h, ..free };
        }
        i = end;
    }
    Ok(TreemapLayout {
        width,
        height,
        rects: order
            .iter()
            .zip(rects)
            .map(|(it, rect)| TreemapRect {
                id: it.id.clone(),
                rect,
                value: it.color,
                fill: palette.color(it.color),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn item(id: &str, size: f64) -> TreemapItem {
        TreemapItem { id: id.into(), size, color: 0.5 }
    }

    #[test]
    fn single_item_fills_canvas() {
        let l = treemap(&[item("a", 3.0)], 100.0, 50.0, &Palette::default()).unwrap();
        assert_eq!(l.rects[0].rect, Rect { x: 0.0, y: 0.0, width: 100.0, height: 50.0 });
    }

    #[test]
    fn equal_halves() {
        let l = treemap(&[item("a", 1.0), item("b", 1.0)], 100.0, 50.0, &Palette::default()).unwrap();
        for r in &l.rects {
            assert!((r.rect.area() - 2500.0).abs() < 1e-9);
        }
        assert!(!l.rects[0].rect.intersects(&l.rects[1].rect));
    }

    #[test]
    fn classic_squarify_example() {
        let sizes = [6.0, 6.0, 4.0, 3.0, 2.0, 2.0, 1.0];
        let items: Vec<TreemapItem> = sizes.iter().enumerate().map(|(i, &s)| item(&alloc::format!("{i}"), s)).collect();
        let l = treemap(&items, 6.0, 4.0, &Palette::default()).unwrap();
        for (r, s) in l.rects.iter().zip(sizes) {
            assert!((r.rect.area() - s).abs() < 1e-9, "{r:?}");
        }
        // First row: the two 6s stacked in a 3-wide column.
        assert_eq!(l.rects[0].rect, Rect { x: 0.0, y: 0.0, width: 3.0, height: 2.0 });
        assert_eq!(l.rects[1].rect, Rect { x: 0.0, y: 2.0, width: 3.0, height: 2.0 });
    }

    #[test]
    fn palette_endpoints() {
        let p = Palette::default();
        assert_eq!(p.color(0.0), Rgb(0, 255, 0));
        assert_eq!(p.color(1.0), Rgb(255, 0, 0));
        assert_eq!(p.color(0.716), Rgb(183, 72, 0));
    }

    #[test]
    fn invalid_inputs() {
        let p = Palette::default();
        assert_eq!(treemap(&[], 1.0, 1.0, &p), Err(LayoutError::EmptyTreemap));
        assert_eq!(
            treemap(&[item("z", 0.0)], 1.0, 1.0, &p),
            Err(LayoutError::NonPositiveSize("z".into()))
        );
        let mut bad = item("c", 1.0);
        bad.color = 1.5;
        assert_eq!(treemap(&[bad], 1.0, 1.0, &p), Err(LayoutError::ColorOutOfRange("c".into())));
    }
}
