//! Canonical serialization: fixed attribute order, fixed numeric formatting,
//! byte-identical output for structurally equal documents.

use super::{FillRule, PathCommand, PathElement, SvgDocument};

/// Formats a coordinate with at most three fractional digits, trimming
/// trailing zeros (`10.0` -> `"10"`, `0.05` -> `"0.05"`).
pub fn format_number(v: f64) -> String {
    let mut s = format!("{v:.3}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Serializes a command list as a `d` attribute value.
pub fn serialize_path_data(commands: &[PathCommand]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for cmd in commands {
        match *cmd {
            PathCommand::MoveTo(p) => {
                parts.push(format!("M {} {}", format_number(p.x), format_number(p.y)));
            }
            PathCommand::LineTo(p) => {
                parts.push(format!("L {} {}", format_number(p.x), format_number(p.y)));
            }
            PathCommand::QuadTo { ctrl, to } => {
                parts.push(format!(
                    "Q {} {} {} {}",
                    format_number(ctrl.x),
                    format_number(ctrl.y),
                    format_number(to.x),
                    format_number(to.y)
                ));
            }
            PathCommand::CubicTo { ctrl1, ctrl2, to } => {
                parts.push(format!(
                    "C {} {} {} {} {} {}",
                    format_number(ctrl1.x),
                    format_number(ctrl1.y),
                    format_number(ctrl2.x),
                    format_number(ctrl2.y),
                    format_number(to.x),
                    format_number(to.y)
                ));
            }
            PathCommand::ArcTo {
                rx,
                ry,
                x_rotation,
                large_arc,
                sweep,
                to,
            } => {
                parts.push(format!(
                    "A {} {} {} {} {} {} {}",
                    format_number(rx),
                    format_number(ry),
                    format_number(x_rotation),
                    u8::from(large_arc),
                    u8::from(sweep),
                    format_number(to.x),
                    format_number(to.y)
                ));
            }
            PathCommand::ClosePath => parts.push("Z".to_string()),
        }
    }
    parts.join(" ")
}

/// Serializes one element as a canonical `<path .../>` fragment.
pub fn serialize_element(el: &PathElement) -> String {
    let commands: Vec<PathCommand> = el.commands().copied().collect();
    let mut out = String::from("<path d=\"");
    out.push_str(&serialize_path_data(&commands));
    out.push('"');
    match el.fill {
        Some(c) => {
            out.push_str(" fill=\"");
            out.push_str(&c.to_hex());
            out.push('"');
        }
        None => out.push_str(" fill=\"none\""),
    }
    if el.fill_rule == FillRule::EvenOdd {
        out.push_str(" fill-rule=\"evenodd\"");
    }
    if el.opacity < 1.0 {
        out.push_str(" opacity=\"");
        out.push_str(&format_number(el.opacity));
        out.push('"');
    }
    if let Some(stroke) = el.stroke {
        out.push_str(" stroke=\"");
        out.push_str(&stroke.color.to_hex());
        out.push_str("\" stroke-width=\"");
        out.push_str(&format_number(stroke.width));
        out.push('"');
    }
    out.push_str("/>");
    out
}

/// Serializes a document to canonical SVG text. Parsing the output yields a
/// model equal to the input (for coordinates within the 3-decimal format).
pub fn serialize_document(doc: &SvgDocument) -> String {
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
        format_number(doc.width),
        format_number(doc.height),
        format_number(doc.view_box[0]),
        format_number(doc.view_box[1]),
        format_number(doc.view_box[2]),
        format_number(doc.view_box[3]),
    );
    if let Some(desc) = &doc.prompt_metadata {
        out.push_str("  <desc>");
        out.push_str(&escape_text(desc));
        out.push_str("</desc>\n");
    }
    for el in &doc.elements {
        out.push_str("  ");
        out.push_str(&serialize_element(el));
        out.push('\n');
    }
    out.push_str("</svg>\n");
    out
}

fn escape_text(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::svg::{parse_document, ParseMode, Point, Rgba, Stroke, Subpath};

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(10.0), "10");
        assert_eq!(format_number(0.05), "0.05");
        assert_eq!(format_number(1.2345), "1.234");
        assert_eq!(format_number(-0.0001), "0");
        assert_eq!(format_number(-3.5), "-3.5");
        assert_eq!(format_number(224.0), "224");
    }

    #[test]
    fn element_serialization_is_canonical() {
        let el = PathElement {
            subpaths: vec![Subpath {
                commands: vec![
                    PathCommand::MoveTo(Point::new(0.0, 0.0)),
                    PathCommand::LineTo(Point::new(10.0, 0.0)),
                    PathCommand::ClosePath,
                ],
                closed: true,
            }],
            fill: Some(Rgba::opaque(255, 0, 0)),
            fill_rule: FillRule::EvenOdd,
            opacity: 0.5,
            stroke: Some(Stroke {
                color: Rgba::BLACK,
                width: 2.0,
            }),
            source_index: 0,
        };
        assert_eq!(
            serialize_element(&el),
            "<path d=\"M 0 0 L 10 0 Z\" fill=\"#ff0000\" fill-rule=\"evenodd\" \
             opacity=\"0.5\" stroke=\"#000000\" stroke-width=\"2\"/>"
        );
    }

    #[test]
    fn round_trip_reproduces_model() {
        let src = r##"<svg viewBox="0 0 224 224" width="224" height="224">
            <desc>two shapes</desc>
            <path d="M10 10 C 20 10 30 20 30 30 Q 30 40 20 40 Z" fill="#336699" opacity="0.75"/>
            <path d="M100 100 A 20 10 45 1 0 140 100 Z" fill-rule="evenodd"/>
        </svg>"##;
        let first = parse_document(src, ParseMode::Strict).unwrap().document;
        let text = serialize_document(&first);
        let second = parse_document(&text, ParseMode::Strict).unwrap().document;
        assert_eq!(first, second);
        // Determinism: equal models produce identical bytes.
        assert_eq!(text, serialize_document(&second));
    }
}
