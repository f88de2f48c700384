//! SVG drawings of representations.

use std::fmt::Write;

use epg::grid::crossing_points;
use epg::Rep;

/// Drawing parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Pixels per grid unit.
    pub cell_size: u32,
    /// Largest perpendicular shift of a path, in pixels; paths are spread
    /// over `[-path_offset, path_offset]` so overlapping strokes stay apart.
    pub path_offset: f64,
    /// Write each vertex label next to the start of its path.
    pub labels: bool,
    /// Mark every point where two paths cross.
    pub crossings: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { cell_size: 24, path_offset: 3.0, labels: true, crossings: false }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<(), String> {
        if self.cell_size == 0 {
            return Err("cell size must be positive".into());
        }
        if !(self.path_offset >= 0.0 && self.path_offset < f64::from(self.cell_size) / 2.0) {
            return Err(format!("path offset must lie in [0, {})", f64::from(self.cell_size) / 2.0));
        }
        Ok(())
    }
}

const SPREAD: usize = 7;
const MARGIN: f64 = 24.0;

/// Renders one polyline per path. Colours and offsets depend only on the
/// position of the vertex in label order, so the output is byte-stable.
pub fn render_svg(rep: &Rep, opts: &RenderOptions) -> String {
    let cell = f64::from(opts.cell_size);
    let corners = rep.iter().flat_map(|(_, p)| p.corners().iter());
    let (mut x0, mut x1, mut y0, mut y1) = (0, 0, 0, 0);
    for (i, c) in corners.enumerate() {
        if i == 0 {
            (x0, x1, y0, y1) = (c.x, c.x, c.y, c.y);
        }
        (x0, x1, y0, y1) = (x0.min(c.x), x1.max(c.x), y0.min(c.y), y1.max(c.y));
    }
    let width = (x1 - x0) as f64 * cell + 2.0 * MARGIN;
    let height = (y1 - y0) as f64 * cell + 2.0 * MARGIN;
    let sx = |x: f64| MARGIN + (x - x0 as f64) * cell;
    let sy = |y: f64| MARGIN + (y1 as f64 - y) * cell;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (i, (label, path)) in rep.iter().enumerate() {
        let shift = opts.path_offset * ((i % SPREAD) as f64 - (SPREAD / 2) as f64) / (SPREAD / 2) as f64;
        let hue = (i as f64 * 137.508) % 360.0;
        let points: Vec<String> = path
            .corners()
            .iter()
            .map(|c| format!("{:.2},{:.2}", sx(c.x as f64) + shift, sy(c.y as f64) - shift))
            .collect();
        writeln!(
            out,
            r#"<polyline data-vertex="{}" points="{}" fill="none" stroke="hsl({hue:.1},70%,42%)" stroke-width="2"/>"#,
            escape(label),
            points.join(" ")
        )
        .unwrap();
        if opts.labels {
            let s = path.start();
            writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="10" font-family="sans-serif" fill="hsl({hue:.1},70%,32%)">{}</text>"#,
                sx(s.x as f64) + shift + 3.0,
                sy(s.y as f64) - shift - 3.0,
                escape(label)
            )
            .unwrap();
        }
    }
    if opts.crossings {
        let paths: Vec<_> = rep.iter().map(|(_, p)| p).collect();
        for (i, p) in paths.iter().enumerate() {
            for q in &paths[i + 1..] {
                for c in crossing_points(p, q) {
                    writeln!(
                        out,
                        r#"<circle class="crossing" cx="{:.2}" cy="{:.2}" r="4" fill="none" stroke="black"/>"#,
                        sx(c.x as f64),
                        sy(c.y as f64)
                    )
                    .unwrap();
                }
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use epg::bipartite::construct_comb;
    use epg::grid::make_pretzel;

    #[test]
    fn empty_representation() {
        let svg = render_svg(&Rep::new(), &RenderOptions::default());
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("<polyline"));
    }

    #[test]
    fn one_polyline_per_path_and_stable() {
        let rep = construct_comb(3, 10);
        let opts = RenderOptions::default();
        let svg = render_svg(&rep, &opts);
        assert_eq!(svg.matches("<polyline").count(), 13);
        assert_eq!(svg, render_svg(&rep, &opts));
    }

    #[test]
    fn pretzel_crossings_are_marked() {
        let (p, q) = make_pretzel(3);
        let rep: Rep = [("P1".to_string(), p), ("P2".to_string(), q)].into_iter().collect();
        let opts = RenderOptions { crossings: true, ..RenderOptions::default() };
        assert_eq!(render_svg(&rep, &opts).matches(r#"class="crossing""#).count(), 12);
    }

    #[test]
    fn option_checks() {
        assert!(RenderOptions::default().validate().is_ok());
        assert!(RenderOptions { cell_size: 0, ..RenderOptions::default() }.validate().is_err());
        assert!(RenderOptions { cell_size: 10, path_offset: 5.0, ..RenderOptions::default() }.validate().is_err());
    }
}
