//! Edge and face colors.
//!
//! Colors are small integers with a fixed global order; the textual names
//! (`a1`, `a2`, ... for edges, `f1`, `f2`, ... and `inf` for faces) are
//! display aliases only. The distinguished face color [`FaceColor::Infinite`]
//! marks the infinite faces of an embedding and sorts after every finite
//! color.

use std::fmt;

use serde::{Deserialize, Serialize};

/// An edge color (orbit of edges under the acting group).
pub type EdgeColor = u8;

/// A face color. All infinite faces share the single `Infinite` color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FaceColor {
    Finite(u8),
    Infinite,
}

impl FaceColor {
    pub fn is_infinite(self) -> bool {
        matches!(self, FaceColor::Infinite)
    }
}

impl fmt::Display for FaceColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceColor::Finite(k) => write!(f, "f{}", k + 1),
            FaceColor::Infinite => write!(f, "inf"),
        }
    }
}

/// Renders an edge color as `a<k>`, 1-based.
pub fn edge_color_name(c: EdgeColor) -> String {
    format!("a{}", c + 1)
}

/// Parses `a<k>` back into an edge color.
pub fn parse_edge_color(s: &str) -> Option<EdgeColor> {
    let n: u8 = s.strip_prefix('a')?.parse().ok()?;
    if n == 0 {
        return None;
    }
    Some(n - 1)
}

/// Parses `f<k>` or `inf` back into a face color.
pub fn parse_face_color(s: &str) -> Option<FaceColor> {
    if s == "inf" {
        return Some(FaceColor::Infinite);
    }
    let n: u8 = s.strip_prefix('f')?.parse().ok()?;
    if n == 0 {
        return None;
    }
    Some(FaceColor::Finite(n - 1))
}

/// The color alphabet of a labeling scheme: which edge and face colors occur.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSet {
    pub edge_colors: Vec<EdgeColor>,
    pub face_colors: Vec<FaceColor>,
}

impl ColorSet {
    pub fn has_infinite(&self) -> bool {
        self.face_colors.iter().any(|c| c.is_infinite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_color_order_puts_infinite_last() {
        assert!(FaceColor::Finite(5) < FaceColor::Infinite);
        assert!(FaceColor::Finite(0) < FaceColor::Finite(1));
    }

    #[test]
    fn color_names_round_trip() {
        assert_eq!(parse_edge_color(&edge_color_name(3)), Some(3));
        assert_eq!(parse_face_color("inf"), Some(FaceColor::Infinite));
        assert_eq!(parse_face_color("f2"), Some(FaceColor::Finite(1)));
        assert_eq!(parse_face_color("g2"), None);
    }
}
