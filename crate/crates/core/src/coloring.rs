//! Edge colorings, the interval-property verifier, and the unique-color
//! counting bound `t <= (m + k) / 2`.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("declared color count must be at least 1")]
    ZeroColors,
    #[error("edge {edge} has color {color}, outside 1..={t}")]
    ColorOutOfRange { edge: usize, color: Color, t: Color },
    #[error("coloring covers {colors} edges but the graph has {edges}")]
    SizeMismatch { colors: usize, edges: usize },
    #[error("coloring is not an interval coloring: {0}")]
    NotInterval(String),
    #[error("unique-color count k = {k} exceeds edge count m = {m}")]
    TooManyUnique { k: usize, m: usize },
    #[error("malformed coloring text: {0}")]
    Malformed(String),
}

/// Colors `1..=t` assigned to edges by index, with `t` declared up front so
/// that "every color is used" is a real condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    t: Color,
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(t: Color, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if t == 0 {
            return Err(ColoringError::ZeroColors);
        }
        if let Some((edge, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > t) {
            return Err(ColoringError::ColorOutOfRange { edge, color, t });
        }
        Ok(EdgeColoring { t, colors })
    }

    pub fn t(&self) -> Color {
        self.t
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> Color {
        self.colors[e]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Palette reversal `c -> t + 1 - c`, which preserves the interval
    /// property.
    pub fn reversed(&self) -> EdgeColoring {
        EdgeColoring {
            t: self.t,
            colors: self.colors.iter().map(|&c| self.t + 1 - c).collect(),
        }
    }

    /// Parses `"t; e0:c0 e1:c1 ..."`. Every edge index `0..len` must appear
    /// exactly once; order is free.
    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let cleaned: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join("\n");
        let mut tokens = cleaned
            .split(|c: char| c.is_whitespace() || c == ';' || c == ',')
            .filter(|t| !t.is_empty());
        let head = tokens
            .next()
            .ok_or_else(|| ColoringError::Malformed("empty input".into()))?;
        let t: Color = head.parse().map_err(|_| {
            ColoringError::Malformed(format!("color count {head:?} is not an integer"))
        })?;
        let mut pairs = Vec::new();
        for tok in tokens {
            let (e, c) = tok.split_once(':').ok_or_else(|| {
                ColoringError::Malformed(format!("entry {tok:?} is not edge:color"))
            })?;
            let e: usize = e
                .parse()
                .map_err(|_| ColoringError::Malformed(format!("bad edge index in {tok:?}")))?;
            let c: Color = c
                .parse()
                .map_err(|_| ColoringError::Malformed(format!("bad color in {tok:?}")))?;
            pairs.push((e, c));
        }
        let mut colors = vec![0; pairs.len()];
        for (e, c) in pairs {
            match colors.get_mut(e) {
                Some(slot @ 0) => *slot = c,
                Some(_) => return Err(ColoringError::Malformed(format!("edge {e} colored twice"))),
                None => {
                    return Err(ColoringError::Malformed(format!(
                        "edge index {e} beyond the listed entries"
                    )))
                }
            }
        }
        EdgeColoring::new(t, colors)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{};", self.t);
        for (e, c) in self.colors.iter().enumerate() {
            out.push_str(&format!(" {e}:{c}"));
        }
        out
    }
}

impl fmt::Display for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    AdjacentSameColor {
        vertex: usize,
        color: Color,
        edges: (usize, usize),
    },
    ColorUnused {
        color: Color,
    },
    PaletteNotInterval {
        vertex: usize,
        min: Color,
        max: Color,
        degree: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AdjacentSameColor {
                vertex,
                color,
                edges,
            } => write!(
                f,
                "edges {} and {} share color {color} at vertex {vertex}",
                edges.0, edges.1
            ),
            Violation::ColorUnused { color } => write!(f, "color {color} is not used"),
            Violation::PaletteNotInterval {
                vertex,
                min,
                max,
                degree,
            } => write!(
                f,
                "vertex {vertex} of degree {degree} sees colors spanning {min}..={max}"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Palette {
    pub min: Color,
    pub max: Color,
    /// Number of distinct colors at the vertex.
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub is_proper: bool,
    pub all_colors_used: bool,
    /// `None` for isolated vertices.
    pub palettes: Vec<Option<Palette>>,
    pub interval_ok: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks properness, color coverage and per-vertex contiguity. A palette
/// is an interval iff its colors are distinct and `max - min = d(v) - 1`.
pub fn verify_interval(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    if c.len() != g.edge_count() {
        return Err(ColoringError::SizeMismatch {
            colors: c.len(),
            edges: g.edge_count(),
        });
    }
    let t = c.t();
    let mut violations = Vec::new();
    let mut palettes = Vec::with_capacity(g.vertex_count());
    let mut is_proper = true;
    let mut contiguous = true;
    // last edge seen with each color at the current vertex
    let mut seen: Vec<Option<usize>> = vec![None; t as usize + 1];
    for v in 0..g.vertex_count() {
        let inc = g.incident(v);
        if inc.is_empty() {
            palettes.push(None);
            continue;
        }
        let mut distinct = 0;
        let mut clash = false;
        let (mut min, mut max) = (Color::MAX, 0);
        for &(_, e) in inc {
            let col = c.color(e);
            min = min.min(col);
            max = max.max(col);
            match seen[col as usize] {
                Some(prev) => {
                    clash = true;
                    violations.push(Violation::AdjacentSameColor {
                        vertex: v,
                        color: col,
                        edges: (prev, e),
                    });
                }
                None => distinct += 1,
            }
            seen[col as usize] = Some(e);
        }
        for &(_, e) in inc {
            seen[c.color(e) as usize] = None;
        }
        if clash {
            is_proper = false;
        }
        if clash || (max - min) as usize != inc.len() - 1 {
            contiguous = false;
            if !clash {
                violations.push(Violation::PaletteNotInterval {
                    vertex: v,
                    min,
                    max,
                    degree: inc.len(),
                });
            }
        }
        palettes.push(Some(Palette {
            min,
            max,
            size: distinct,
        }));
    }
    let mut used = vec![false; t as usize + 1];
    for &col in c.colors() {
        used[col as usize] = true;
    }
    let unused: Vec<Color> = (1..=t).filter(|&col| !used[col as usize]).collect();
    let all_colors_used = unused.is_empty();
    violations.extend(
        unused
            .into_iter()
            .map(|color| Violation::ColorUnused { color }),
    );
    Ok(VerificationReport {
        is_proper,
        all_colors_used,
        palettes,
        interval_ok: is_proper && all_colors_used && contiguous,
        violations,
    })
}

/// Edges whose color class is a singleton, as `(edge, color)` sorted by
/// color. Only meaningful for interval colorings.
pub fn unique_color_edges(
    g: &Graph,
    c: &EdgeColoring,
) -> Result<Vec<(usize, Color)>, ColoringError> {
    let report = verify_interval(g, c)?;
    if !report.interval_ok {
        let why = report
            .first_violation()
            .map(ToString::to_string)
            .unwrap_or_default();
        return Err(ColoringError::NotInterval(why));
    }
    Ok(singleton_colors(c))
}

pub(crate) fn color_multiplicities(c: &EdgeColoring) -> Vec<usize> {
    let mut count = vec![0usize; c.t() as usize + 1];
    for &col in c.colors() {
        count[col as usize] += 1;
    }
    count
}

pub(crate) fn singleton_colors(c: &EdgeColoring) -> Vec<(usize, Color)> {
    let count = color_multiplicities(c);
    let mut out: Vec<(usize, Color)> = c
        .colors()
        .iter()
        .enumerate()
        .filter(|(_, &col)| count[col as usize] == 1)
        .map(|(e, &col)| (e, col))
        .collect();
    out.sort_by_key(|&(_, col)| col);
    out
}

/// `(m + k) / 2` as an exact rational.
pub fn counting_bound(m: usize, k: usize) -> Result<Ratio<i64>, ColoringError> {
    if k > m {
        return Err(ColoringError::TooManyUnique { k, m });
    }
    Ok(Ratio::new((m + k) as i64, 2))
}
