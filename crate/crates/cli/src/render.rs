//! Derived artifacts: the eigenvalue table (`eigenvalues.csv`) and a bar
//! plot of the spectrum (`spectrum.svg`). Both are rendered purely from
//! data already present in the report, never from any other input, and use
//! fixed formatting so identical reports yield identical bytes.

use std::path::Path;

/// One spectrum entry: the raw value, its magnitude relative to the scale
/// of the whole spectrum, and a classification label that selects the bar
/// color.
pub struct SpectrumRow {
    pub value: f64,
    pub relative: f64,
    pub class: &'static str,
}

pub fn classify_levi(value: f64, norm: f64, tol_psd: f64, tol_ker: f64) -> &'static str {
    if value < -tol_psd * norm {
        "negative"
    } else if value.abs() < tol_ker * norm {
        "near-zero"
    } else {
        "positive"
    }
}

fn color(class: &str) -> &'static str {
    match class {
        "negative" => "#c0392b",
        "near-zero" => "#e67e22",
        _ => "#2e7d32",
    }
}

pub fn write_csv(out: &Path, rows: &[SpectrumRow]) -> std::io::Result<()> {
    let mut body = String::from("index,eigenvalue,relative_magnitude,class\n");
    for (i, row) in rows.iter().enumerate() {
        body.push_str(&format!(
            "{i},{:e},{:e},{}\n",
            row.value, row.relative, row.class
        ));
    }
    std::fs::write(out.join("eigenvalues.csv"), body)
}

/// Bar plot of relative magnitudes on a log10 scale spanning [1e-12, 1].
/// `cut` draws the near-zero threshold as a dashed line.
pub fn write_svg(out: &Path, title: &str, rows: &[SpectrumRow], cut: Option<f64>) -> std::io::Result<()> {
    const W: f64 = 640.0;
    const H: f64 = 360.0;
    const LEFT: f64 = 70.0;
    const RIGHT: f64 = 20.0;
    const TOP: f64 = 50.0;
    const BOTTOM: f64 = 40.0;
    const FLOOR_EXP: f64 = -12.0;

    let plot_w = W - LEFT - RIGHT;
    let plot_h = H - TOP - BOTTOM;
    // log-magnitude in [0, 1]: 1e-12 (or less) at the axis, 1 at the top
    let unit = |rel: f64| -> f64 {
        let exp = rel.max(1e-300).log10().clamp(FLOOR_EXP, 0.0);
        (exp - FLOOR_EXP) / -FLOOR_EXP
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\" \
         font-family=\"monospace\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{W}\" height=\"{H}\" fill=\"#ffffff\"/>\n"
    ));
    svg.push_str(&format!(
        "  <text x=\"{LEFT}\" y=\"24\" font-size=\"14\">{}</text>\n",
        xml_escape(title)
    ));

    // horizontal gridlines every 4 decades
    for k in 0..=3 {
        let exp = -4.0 * k as f64;
        let y = TOP + plot_h * (1.0 - unit(10f64.powf(exp)));
        svg.push_str(&format!(
            "  <line x1=\"{LEFT}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" \
             stroke=\"#dddddd\"/>\n",
            LEFT + plot_w
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">1e{exp:.0}</text>\n",
            LEFT - 8.0,
            y + 4.0
        ));
    }

    if let Some(c) = cut {
        let y = TOP + plot_h * (1.0 - unit(c));
        svg.push_str(&format!(
            "  <line x1=\"{LEFT}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" \
             stroke=\"#e67e22\" stroke-dasharray=\"6 4\"/>\n",
            LEFT + plot_w
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" fill=\"#e67e22\" text-anchor=\"end\">near-zero cut</text>\n",
            LEFT + plot_w,
            y - 6.0
        ));
    }

    let n = rows.len().max(1) as f64;
    let slot = plot_w / n;
    let bar_w = (slot * 0.6).min(60.0);
    for (i, row) in rows.iter().enumerate() {
        let h = (plot_h * unit(row.relative)).max(2.0);
        let x = LEFT + slot * (i as f64 + 0.5) - bar_w / 2.0;
        let y = TOP + plot_h - h;
        svg.push_str(&format!(
            "  <rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{bar_w:.2}\" height=\"{h:.2}\" \
             fill=\"{}\"><title>eigenvalue {i}: {:e}</title></rect>\n",
            color(row.class),
            row.value
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{i}</text>\n",
            x + bar_w / 2.0,
            TOP + plot_h + 16.0
        ));
    }

    svg.push_str(&format!(
        "  <line x1=\"{LEFT}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#333333\"/>\n",
        TOP + plot_h,
        LEFT + plot_w,
        TOP + plot_h
    ));
    svg.push_str("</svg>\n");
    std::fs::write(out.join("spectrum.svg"), svg)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
