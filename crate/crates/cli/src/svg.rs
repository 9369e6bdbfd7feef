//! Just enough SVG for curves over the unit square and density heatmaps.

use std::fmt::Write;

pub struct Svg {
    size: f64,
    body: String,
}

impl Svg {
    /// A square canvas of `size` pixels showing `[0, 1]²`, `y` pointing down.
    pub fn new(size: f64) -> Self {
        Svg {
            size,
            body: String::new(),
        }
    }

    fn px(&self, v: f64) -> f64 {
        (v * self.size * 1e3).round() / 1e3
    }

    pub fn comment(&mut self, text: &str) {
        let _ = writeln!(self.body, "<!-- {} -->", text.replace("--", "- -"));
    }

    pub fn rect(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str, opacity: f64) {
        let _ = writeln!(
            self.body,
            r#"<path d="M{} {}h{}v{}h{}Z" fill="{fill}" fill-opacity="{opacity:.4}"/>"#,
            self.px(x),
            self.px(y),
            self.px(w),
            self.px(h),
            -self.px(w)
        );
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], stroke: &str, width: f64, label: &str) {
        if pts.is_empty() {
            return;
        }
        let mut d = String::new();
        for (k, &(x, y)) in pts.iter().enumerate() {
            let _ = write!(
                d,
                "{}{} {}",
                if k == 0 { "M" } else { " L" },
                self.px(x),
                self.px(y)
            );
        }
        let _ = writeln!(
            self.body,
            r#"<path id="{label}" d="{d}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#
        );
    }

    pub fn finish(self) -> String {
        let s = self.size;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n\
             <path d=\"M0 0H{s}V{s}H0Z\" fill=\"white\" stroke=\"black\"/>\n{}</svg>\n",
            self.body
        )
    }
}
