//! Drawing tilings as SVG or as a character raster.
//!
//! A plane partition is viewed as a stack of unit cubes. The cube corner
//! `(I, J, H)` (row, column, height) projects to the oblique point
//! `(a + J - I, a + H - I)`, and oblique `(x, y)` sits at the cartesian point
//! `x * (sqrt(3)/2, -1/2) + y * (0, 1)`.

use std::fmt::Write;

use super::{LozengeTiling, PlanePartition};

/// The three lozenge orientations.
///
/// `Falling` lozenges have their non-vertical edges along the oblique
/// x-axis (pointing down-right), `Rising` ones along the `x + y` diagonal
/// (pointing up-right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Horizontal,
    Falling,
    Rising,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Horizontal => "horizontal",
            Orientation::Falling => "falling",
            Orientation::Rising => "rising",
        }
    }

    fn fill(self) -> &'static str {
        match self {
            Orientation::Horizontal => "#f2c14e",
            Orientation::Falling => "#5b8e7d",
            Orientation::Rising => "#bc4b51",
        }
    }

    fn glyph(self) -> char {
        match self {
            Orientation::Horizontal => '█',
            Orientation::Falling => '▒',
            Orientation::Rising => '░',
        }
    }
}

/// One lozenge, as four oblique lattice points in drawing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub orientation: Orientation,
    pub vertices: [(i64, i64); 4],
}

impl Face {
    fn min_vertex(&self) -> (i64, i64) {
        *self.vertices.iter().min().expect("four vertices")
    }

    /// The two unit triangles as `(strip, k)`: strip `s` is the band
    /// `s <= x <= s + 1`, and within it triangle `k` is centred at height
    /// `(k - s) / 2`.
    fn triangles(&self) -> [(i64, i64); 2] {
        let (mx, my) = self.min_vertex();
        match self.orientation {
            Orientation::Horizontal => [(mx, 2 * my), (mx + 1, 2 * my + 1)],
            Orientation::Falling => [(mx, 2 * my), (mx, 2 * my + 1)],
            Orientation::Rising => [(mx, 2 * my + 1), (mx, 2 * my + 2)],
        }
    }
}

/// All `ab + bc + ca` lozenges of the tiling, sorted.
pub fn faces(tiling: &LozengeTiling) -> Vec<Face> {
    let pp = tiling
        .to_plane_partition()
        .expect("a LozengeTiling always encodes a plane partition");
    faces_of(&pp)
}

fn faces_of(pp: &PlanePartition) -> Vec<Face> {
    let d = pp.dims();
    let (a, b, c) = (d.a(), d.b(), d.c());
    let ai = a as i64;
    let proj = |i: usize, j: usize, h: usize| (ai + j as i64 - i as i64, ai + h as i64 - i as i64);
    // entry with the walls of the box as sentinels
    let height = |i: usize, j: usize| -> usize {
        if i == 0 || j == 0 {
            c
        } else if i > a || j > b {
            0
        } else {
            pp.entry(i, j)
        }
    };

    let mut out = Vec::with_capacity(a * b + b * c + c * a);
    for i in 1..=a {
        for j in 1..=b {
            let h = pp.entry(i, j);
            out.push(Face {
                orientation: Orientation::Horizontal,
                vertices: [
                    proj(i, j, h),
                    proj(i, j - 1, h),
                    proj(i - 1, j - 1, h),
                    proj(i - 1, j, h),
                ],
            });
        }
    }
    for i in 0..=a {
        for j in 1..=b {
            for h in height(i + 1, j)..height(i, j) {
                out.push(Face {
                    orientation: Orientation::Falling,
                    vertices: [
                        proj(i, j - 1, h),
                        proj(i, j, h),
                        proj(i, j, h + 1),
                        proj(i, j - 1, h + 1),
                    ],
                });
            }
        }
    }
    for j in 0..=b {
        for i in 1..=a {
            for h in height(i, j + 1)..height(i, j) {
                out.push(Face {
                    orientation: Orientation::Rising,
                    vertices: [
                        proj(i, j, h),
                        proj(i - 1, j, h),
                        proj(i - 1, j, h + 1),
                        proj(i, j, h + 1),
                    ],
                });
            }
        }
    }
    out.sort();
    out
}

fn cartesian((x, y): (i64, i64)) -> (f64, f64) {
    let x = x as f64;
    (x * 3f64.sqrt() / 2.0, y as f64 - x / 2.0)
}

/// Plain SVG 1.1, one `<polygon>` per lozenge with `class` set to the
/// orientation name.
pub fn render_svg(tiling: &LozengeTiling) -> String {
    const SCALE: f64 = 40.0;
    const MARGIN: f64 = 10.0;
    let d = tiling.dims();
    let faces = faces(tiling);

    let corners = [
        (0, 0),
        (d.b() as i64, 0),
        (d.x_max() + 1, d.a() as i64),
        (d.x_max() + 1, d.y_max() + 1),
        (d.a() as i64, d.y_max() + 1),
        (0, d.c() as i64),
    ];
    let pts: Vec<(f64, f64)> = corners.iter().copied().map(cartesian).collect();
    let max_x = pts.iter().map(|p| p.0).fold(f64::MIN, f64::max);
    let min_y = pts.iter().map(|p| p.1).fold(f64::MAX, f64::min);
    let max_y = pts.iter().map(|p| p.1).fold(f64::MIN, f64::max);
    let to_svg = |p: (i64, i64)| {
        let (x, y) = cartesian(p);
        (MARGIN + x * SCALE, MARGIN + (max_y - y) * SCALE)
    };
    let width = max_x * SCALE + 2.0 * MARGIN;
    let height = (max_y - min_y) * SCALE + 2.0 * MARGIN;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(
        s,
        r#"<title>lozenge tiling a={} b={} c={}</title>"#,
        d.a(),
        d.b(),
        d.c()
    );
    let _ = writeln!(s, r##"<g stroke="#222222" stroke-width="1" stroke-linejoin="round">"##);
    for face in &faces {
        let points: Vec<String> = face
            .vertices
            .iter()
            .map(|&v| {
                let (x, y) = to_svg(v);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            s,
            r#"<polygon class="{}" fill="{}" points="{}"/>"#,
            face.orientation.name(),
            face.orientation.fill(),
            points.join(" ")
        );
    }
    let _ = writeln!(s, "</g>");
    let outline: Vec<String> = corners
        .iter()
        .map(|&v| {
            let (x, y) = to_svg(v);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        s,
        r##"<polygon class="outline" fill="none" stroke="#000000" stroke-width="2" points="{}"/>"##,
        outline.join(" ")
    );
    let _ = writeln!(s, "</svg>");
    s
}

/// Character raster: every unit triangle becomes two identical glyphs, `█`
/// for horizontal, `▒` for falling and `░` for rising lozenges. Column `s`
/// is the strip `s <= x <= s + 1`; rows run from top to bottom in steps of
/// half a lattice unit.
pub fn render_ascii(tiling: &LozengeTiling) -> String {
    let cells: Vec<(i64, i64, Orientation)> = faces(tiling)
        .iter()
        .flat_map(|f| f.triangles().map(|(s, k)| (s, k - s, f.orientation)))
        .collect();
    let strips = tiling.dims().x_max() + 1;
    let top = cells.iter().map(|c| c.1).max().unwrap_or(0);
    let bottom = cells.iter().map(|c| c.1).min().unwrap_or(0);
    let rows = (top - bottom + 1) as usize;
    let mut grid = vec![vec![' '; strips as usize]; rows];
    for (s, level, o) in cells {
        grid[(top - level) as usize][s as usize] = o.glyph();
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.iter().flat_map(|&ch| [ch, ch]).collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pp::BoxDims;
    use std::collections::HashSet;

    fn tiling(a: usize, b: usize, c: usize, rows: &[Vec<usize>]) -> LozengeTiling {
        let d = BoxDims::new(a, b, c).unwrap();
        PlanePartition::from_rows(d, rows).unwrap().to_tiling()
    }

    #[test]
    fn unit_hexagon_has_three_lozenges() {
        let t = tiling(1, 1, 1, &[vec![0]]);
        let f = faces(&t);
        assert_eq!(f.len(), 3);
        let kinds: HashSet<Orientation> = f.iter().map(|x| x.orientation).collect();
        assert_eq!(kinds.len(), 3);
        assert_eq!(render_ascii(&t).lines().count(), 3);
    }

    #[test]
    fn faces_cover_the_hexagon_once() {
        let rows = vec![vec![2, 1], vec![1, 1], vec![1, 0]];
        let t = tiling(3, 2, 2, &rows);
        let f = faces(&t);
        assert_eq!(f.len(), 3 * 2 + 2 * 2 + 2 * 3);
        let mut seen = HashSet::new();
        for face in &f {
            for tri in face.triangles() {
                assert!(seen.insert(tri), "triangle {tri:?} covered twice");
            }
        }
        // the hexagon holds 2(ab + bc + ca) unit triangles
        assert_eq!(seen.len(), 2 * (6 + 4 + 6));
        let horizontal_min: Vec<(i64, i64)> = f
            .iter()
            .filter(|x| x.orientation == Orientation::Horizontal)
            .map(|x| {
                let (mx, my) = x.min_vertex();
                (mx + 1, my)
            })
            .collect();
        let mut expected: Vec<(i64, i64)> = t.horizontals().iter().map(|p| (p.x, p.y)).collect();
        expected.sort();
        let mut got = horizontal_min;
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn output_is_deterministic() {
        let t = tiling(2, 3, 2, &[vec![2, 1, 0], vec![1, 1, 0]]);
        assert_eq!(render_svg(&t), render_svg(&t));
        assert_eq!(render_ascii(&t), render_ascii(&t));
    }

    #[test]
    fn svg_counts_orientations() {
        let d = BoxDims::new(3, 5, 4).unwrap();
        let svg = render_svg(&PlanePartition::zero(d).to_tiling());
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches(r#"class="horizontal""#).count(), 15);
        assert_eq!(svg.matches(r#"class="falling""#).count(), 5 * 4);
        assert_eq!(svg.matches(r#"class="rising""#).count(), 4 * 3);
        assert_eq!(svg.matches("<polygon").count(), 15 + 20 + 12 + 1);
    }
}
