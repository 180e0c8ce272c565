use std::fmt::Write;

/// One styled polyline.
#[derive(Clone, Debug)]
pub struct Layer {
    pub points: Vec<(f64, f64)>,
    pub color: &'static str,
    pub width: f64,
    pub dashed: bool,
}

/// Renders polylines in the window `[0, w] × [0, h]` of the `(X, Y)` plane,
/// `Y` pointing up.
pub fn render(layers: &[Layer], w: f64, h: f64) -> String {
    let px = 600.0;
    let scale = px / w.max(h);
    let (pw, ph) = (w * scale, h * scale);
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{pw:.1}" height="{ph:.1}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(s, r#"<g transform="translate(0,{h}) scale(1,-1)" fill="none">"#).unwrap();
    for l in layers {
        if l.points.len() < 2 {
            continue;
        }
        let pts: Vec<String> = l
            .points
            .iter()
            .filter(|p| p.0.is_finite() && p.1.is_finite())
            .map(|p| format!("{:.5},{:.5}", p.0, p.1))
            .collect();
        let dash = if l.dashed { format!(r#" stroke-dasharray="{:.4}""#, 4.0 / scale) } else { String::new() };
        writeln!(
            s,
            r#"<polyline points="{}" stroke="{}" stroke-width="{:.5}"{dash}/>"#,
            pts.join(" "),
            l.color,
            l.width / scale
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}
