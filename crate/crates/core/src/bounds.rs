//! Known upper bounds on the number of colors in an interval coloring, and
//! the `t >= Δ` lower bound.
//!
//! Values are exact rationals; only [`BoundReport::ceiling`] is floored.

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphClassProfile};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("graph has no edges, so no interval coloring is defined")]
    Edgeless,
}

fn serialize_ratio<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    Kamalian,
    GiaroKubaleMalafiejski,
    Axenovich,
    Planar,
    Outerplanar,
    TriangleFree,
    Diameter,
    BipartiteDiameter,
    EdgeCount,
}

impl BoundName {
    pub const ALL: [BoundName; 9] = [
        BoundName::Kamalian,
        BoundName::GiaroKubaleMalafiejski,
        BoundName::Axenovich,
        BoundName::Planar,
        BoundName::Outerplanar,
        BoundName::TriangleFree,
        BoundName::Diameter,
        BoundName::BipartiteDiameter,
        BoundName::EdgeCount,
    ];

    pub fn anchor(self) -> &'static str {
        match self {
            BoundName::Kamalian => "Kamalian (1990): W(G) <= 2|V(G)| - 3 for G with at least one edge",
            BoundName::GiaroKubaleMalafiejski => {
                "Giaro, Kubale, Malafiejski (2001): W(G) <= 2|V(G)| - 4 for |V(G)| >= 3"
            }
            BoundName::Axenovich => "Axenovich (2002): W(G) <= 11|V(G)|/6 for planar G",
            BoundName::Planar => {
                "planar bound (Axenovich's conjecture, confirmed): W(G) <= (3|V(G)| - 4)/2 for planar G, |V(G)| >= 2"
            }
            BoundName::Outerplanar => "outerplanar bound: W(G) <= |V(G)| - 1 for outerplanar G, |V(G)| >= 2",
            BoundName::TriangleFree => {
                "Asratian, Kamalian (1987): t <= |V(G)| - 1 for triangle-free G"
            }
            BoundName::Diameter => {
                "Asratian, Kamalian: W(G) <= (diam(G) + 1)(Δ(G) - 1) + 1 for connected G"
            }
            BoundName::BipartiteDiameter => {
                "Asratian, Kamalian: W(G) <= diam(G)(Δ(G) - 1) + 1 for connected bipartite G"
            }
            BoundName::EdgeCount => "every color is used, so t <= |E(G)|",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: BoundName,
    pub applicable: bool,
    #[serde(serialize_with = "serialize_ratio")]
    pub value: Rational,
    pub anchor: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bounds: Vec<BoundEntry>,
    /// Floor of the smallest applicable upper bound.
    pub ceiling: u32,
    /// Δ(G): an interval coloring is a proper Δ-edge-coloring at least.
    pub lower: u32,
    /// Set when the graph is regular of odd order, which forces
    /// χ'(G) = Δ(G) + 1 and so rules out every interval coloring.
    pub class_two_obstruction: bool,
}

impl BoundReport {
    pub fn entry(&self, name: BoundName) -> &BoundEntry {
        self.bounds
            .iter()
            .find(|b| b.name == name)
            .expect("every bound is listed")
    }

    /// Floor of the named entry, if it applies.
    pub fn applicable_floor(&self, name: BoundName) -> Option<i64> {
        let e = self.entry(name);
        e.applicable.then(|| e.value.floor().to_integer())
    }
}

pub fn upper_bounds(g: &Graph, p: &GraphClassProfile) -> Result<BoundReport, BoundsError> {
    let flags: Vec<(BoundName, bool)> = BoundName::ALL
        .iter()
        .map(|&name| (name, applies(name, g, p)))
        .collect();
    bound_report_with(g, p, &flags)
}

/// Builds the report with applicability decided by the caller. Used to
/// check that switching bounds on never raises the ceiling.
pub fn bound_report_with(
    g: &Graph,
    p: &GraphClassProfile,
    flags: &[(BoundName, bool)],
) -> Result<BoundReport, BoundsError> {
    if g.edge_count() == 0 {
        return Err(BoundsError::Edgeless);
    }
    let bounds: Vec<BoundEntry> = BoundName::ALL
        .iter()
        .map(|&name| BoundEntry {
            name,
            applicable: flags
                .iter()
                .find(|(n, _)| *n == name)
                .map(|&(_, on)| on)
                .unwrap_or(false),
            value: value(name, g, p),
            anchor: name.anchor(),
        })
        .collect();
    let edge_cap = Rational::from_integer(g.edge_count() as i64);
    let ceiling = bounds
        .iter()
        .filter(|b| b.applicable)
        .map(|b| b.value)
        .fold(edge_cap, |a, b| a.min(b))
        .floor()
        .to_integer()
        .max(0) as u32;
    Ok(BoundReport {
        bounds,
        ceiling,
        lower: lower_bounds(g, p),
        class_two_obstruction: odd_order_regular(g),
    })
}

fn applies(name: BoundName, g: &Graph, p: &GraphClassProfile) -> bool {
    let n = g.vertex_count();
    match name {
        BoundName::Kamalian | BoundName::EdgeCount => true,
        BoundName::GiaroKubaleMalafiejski => n >= 3,
        BoundName::Axenovich => p.is_planar,
        BoundName::Planar => p.is_planar && n >= 2,
        BoundName::Outerplanar => p.is_outerplanar && n >= 2,
        BoundName::TriangleFree => p.is_triangle_free,
        BoundName::Diameter => p.is_connected,
        BoundName::BipartiteDiameter => p.is_connected && p.is_bipartite,
    }
}

fn value(name: BoundName, g: &Graph, p: &GraphClassProfile) -> Rational {
    let n = g.vertex_count() as i64;
    let delta = p.max_degree as i64;
    // diameter bounds carry their formula value only when finite
    let diam = p.diameter.finite().map(|d| d as i64);
    let int = Rational::from_integer;
    match name {
        BoundName::Kamalian => int(2 * n - 3),
        BoundName::GiaroKubaleMalafiejski => int(2 * n - 4),
        BoundName::Axenovich => Rational::new(11 * n, 6),
        BoundName::Planar => Rational::new(3 * n - 4, 2),
        BoundName::Outerplanar | BoundName::TriangleFree => int(n - 1),
        BoundName::Diameter => diam.map_or(int(0), |d| int((d + 1) * (delta - 1) + 1)),
        BoundName::BipartiteDiameter => diam.map_or(int(0), |d| int(d * (delta - 1) + 1)),
        BoundName::EdgeCount => int(g.edge_count() as i64),
    }
}

/// Δ(G).
pub fn lower_bounds(g: &Graph, _p: &GraphClassProfile) -> u32 {
    g.max_degree() as u32
}

/// A Δ-regular graph (Δ >= 1) of odd order has more edges than Δ matchings
/// can cover, hence no proper Δ-edge-coloring.
pub fn odd_order_regular(g: &Graph) -> bool {
    let n = g.vertex_count();
    let d = g.max_degree();
    n % 2 == 1 && d > 0 && (0..n).all(|v| g.incident(v).len() == d)
}
