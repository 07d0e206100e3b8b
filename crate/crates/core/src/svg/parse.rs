//! XML-level parsing of the restricted SVG subset.

use super::color::parse_paint;
use super::path_data::parse_path_data;
use super::{split_subpaths, FillRule, PathElement, Stroke, SvgDocument, SvgError};

/// Strict mode rejects anything outside the supported subset; lenient mode
/// drops it and records a warning. Corpus ingestion wants lenient, generated
/// fragments want strict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    Strict,
    #[default]
    Lenient,
}

/// A note about content that was dropped or ignored in lenient mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub message: String,
}

impl std::fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

/// A parsed document plus whatever lenient mode had to drop.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub document: SvgDocument,
    pub warnings: Vec<ParseWarning>,
}

struct Ctx {
    mode: ParseMode,
    warnings: Vec<ParseWarning>,
}

impl Ctx {
    /// Rejects in strict mode, warns in lenient mode.
    fn unsupported(&mut self, what: &str) -> Result<(), SvgError> {
        match self.mode {
            ParseMode::Strict => Err(SvgError::UnsupportedFeature(what.to_string())),
            ParseMode::Lenient => {
                self.warn(format!("dropped unsupported {what}"));
                Ok(())
            }
        }
    }

    fn warn(&mut self, message: String) {
        self.warnings.push(ParseWarning { message });
    }
}

/// Parses UTF-8 SVG text into the document model.
pub fn parse_document(text: &str, mode: ParseMode) -> Result<Parsed, SvgError> {
    let xml = roxmltree::Document::parse(text)
        .map_err(|e| SvgError::XmlMalformed(e.to_string()))?;
    let root = xml.root_element();
    if root.tag_name().name() != "svg" {
        return Err(SvgError::XmlMalformed(format!(
            "root element is <{}>, expected <svg>",
            root.tag_name().name()
        )));
    }
    let mut ctx = Ctx {
        mode,
        warnings: Vec::new(),
    };

    let view_box = root
        .attribute("viewBox")
        .map(parse_view_box)
        .transpose()?;
    let width = root
        .attribute("width")
        .map(|v| parse_length(v, &mut ctx))
        .transpose()?
        .flatten();
    let height = root
        .attribute("height")
        .map(|v| parse_length(v, &mut ctx))
        .transpose()?
        .flatten();

    let view_box = match (view_box, width, height) {
        (Some(vb), _, _) => vb,
        (None, Some(w), Some(h)) => [0.0, 0.0, w, h],
        (None, _, _) => {
            ctx.warn("no viewBox or width/height; defaulting to 224x224".into());
            [0.0, 0.0, 224.0, 224.0]
        }
    };
    let width = width.unwrap_or(view_box[2]);
    let height = height.unwrap_or(view_box[3]);
    if !(view_box[2] > 0.0 && view_box[3] > 0.0 && width > 0.0 && height > 0.0) {
        return Err(SvgError::XmlMalformed(
            "non-positive document dimensions".into(),
        ));
    }

    for attr in root.attributes() {
        match attr.name() {
            "viewBox" | "width" | "height" | "version" | "baseProfile" | "id" | "xmlns" => {}
            name if attr.namespace().is_some() => {
                // Namespaced attributes (xmlns:*, xml:*) carry no paint.
                let _ = name;
            }
            "preserveAspectRatio" => {
                if attr.value() != "xMidYMid meet" && attr.value() != "xMidYMid" {
                    ctx.unsupported(&format!("preserveAspectRatio=\"{}\"", attr.value()))?;
                }
            }
            name => ctx.unsupported(&format!("<svg> attribute {name}"))?,
        }
    }

    let mut doc = SvgDocument {
        width,
        height,
        view_box,
        elements: Vec::new(),
        prompt_metadata: None,
    };
    parse_children(root, &mut ctx, &mut doc)?;
    doc.reindex();

    if !doc.elements.iter().any(PathElement::is_paintable) {
        return Err(SvgError::EmptyDocument);
    }
    Ok(Parsed {
        document: doc,
        warnings: ctx.warnings,
    })
}

/// Parses a generated code fragment: either a full `<svg>` document or one
/// or more bare elements that get an implicit 224x224 wrapper. Always strict.
pub fn parse_fragment(text: &str) -> Result<Vec<PathElement>, SvgError> {
    let trimmed = text.trim();
    let wrapped;
    let source = if trimmed.starts_with("<svg") || trimmed.starts_with("<?xml") {
        trimmed
    } else {
        wrapped = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 224 224\">{trimmed}</svg>"
        );
        &wrapped
    };
    let parsed = parse_document(source, ParseMode::Strict)?;
    Ok(parsed.document.elements)
}

fn parse_children(
    node: roxmltree::Node,
    ctx: &mut Ctx,
    doc: &mut SvgDocument,
) -> Result<(), SvgError> {
    for child in node.children() {
        if !child.is_element() {
            continue;
        }
        match child.tag_name().name() {
            "path" => {
                if let Some(el) = parse_path_element(child, ctx)? {
                    doc.elements.push(el);
                }
            }
            "desc" => {
                if doc.prompt_metadata.is_none() {
                    doc.prompt_metadata = child.text().map(|t| t.trim().to_string());
                }
            }
            "title" | "metadata" => {}
            "g" => {
                ctx.unsupported("<g> grouping (children parsed, attributes ignored)")?;
                parse_children(child, ctx, doc)?;
            }
            name => ctx.unsupported(&format!("<{name}> element"))?,
        }
    }
    Ok(())
}

fn parse_path_element(
    node: roxmltree::Node,
    ctx: &mut Ctx,
) -> Result<Option<PathElement>, SvgError> {
    let Some(d) = node.attribute("d") else {
        return match ctx.mode {
            ParseMode::Strict => Err(SvgError::BadPathData("<path> without d".into())),
            ParseMode::Lenient => {
                ctx.warn("dropped <path> without d".into());
                Ok(None)
            }
        };
    };
    let commands = match parse_path_data(d).and_then(|cmds| {
        if cmds.is_empty() {
            Err(SvgError::BadPathData("empty path data".into()))
        } else {
            Ok(cmds)
        }
    }) {
        Ok(cmds) => cmds,
        Err(e) => {
            return match ctx.mode {
                ParseMode::Strict => Err(e),
                ParseMode::Lenient => {
                    ctx.warn(format!("dropped <path>: {e}"));
                    Ok(None)
                }
            };
        }
    };
    let subpaths = split_subpaths(&commands)?;

    let mut fill = Some(super::Rgba::BLACK);
    let mut fill_rule = FillRule::NonZero;
    let mut opacity: f64 = 1.0;
    let mut fill_opacity: f64 = 1.0;
    let mut stroke_paint = None;
    let mut stroke_width: f64 = 1.0;

    for attr in node.attributes() {
        match attr.name() {
            "d" | "id" => {}
            "fill" => fill = parse_paint(attr.value())?,
            "fill-rule" => {
                fill_rule = match attr.value() {
                    "nonzero" => FillRule::NonZero,
                    "evenodd" => FillRule::EvenOdd,
                    other => {
                        ctx.unsupported(&format!("fill-rule=\"{other}\""))?;
                        FillRule::NonZero
                    }
                }
            }
            "opacity" => opacity = parse_opacity(attr.value())?,
            "fill-opacity" => fill_opacity = parse_opacity(attr.value())?,
            "stroke" => stroke_paint = parse_paint(attr.value())?,
            "stroke-width" => {
                stroke_width = attr
                    .value()
                    .trim()
                    .parse()
                    .map_err(|_| SvgError::BadNumber(attr.value().to_string()))?;
            }
            name => ctx.unsupported(&format!("<path> attribute {name}"))?,
        }
    }

    Ok(Some(PathElement {
        subpaths,
        fill,
        fill_rule,
        opacity: (opacity * fill_opacity).clamp(0.0, 1.0),
        stroke: stroke_paint.map(|color| Stroke {
            color,
            width: stroke_width.max(0.0),
        }),
        source_index: 0,
    }))
}

fn parse_view_box(value: &str) -> Result<[f64; 4], SvgError> {
    let nums: Vec<f64> = value
        .split([' ', ',', '\t', '\n'])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| SvgError::BadNumber(format!("viewBox {value:?}")))?;
    if nums.len() != 4 {
        return Err(SvgError::BadNumber(format!("viewBox {value:?}")));
    }
    Ok([nums[0], nums[1], nums[2], nums[3]])
}

fn parse_length(value: &str, ctx: &mut Ctx) -> Result<Option<f64>, SvgError> {
    let v = value.trim();
    let v = v.strip_suffix("px").unwrap_or(v).trim();
    match v.parse::<f64>() {
        Ok(n) => Ok(Some(n)),
        Err(_) => {
            ctx.unsupported(&format!("length {value:?}"))?;
            Ok(None)
        }
    }
}

fn parse_opacity(value: &str) -> Result<f64, SvgError> {
    let v = value.trim();
    let n: f64 = if let Some(pct) = v.strip_suffix('%') {
        pct.trim()
            .parse::<f64>()
            .map(|p| p / 100.0)
            .map_err(|_| SvgError::BadNumber(value.to_string()))?
    } else {
        v.parse()
            .map_err(|_| SvgError::BadNumber(value.to_string()))?
    };
    Ok(n.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::svg::Rgba;

    const TRIANGLE: &str =
        r##"<svg viewBox="0 0 224 224"><path d="M0 0 L10 0 L10 10 Z" fill="#000"/></svg>"##;

    #[test]
    fn parses_minimal_document() {
        let parsed = parse_document(TRIANGLE, ParseMode::Strict).unwrap();
        let doc = parsed.document;
        assert_eq!(doc.elements.len(), 1);
        assert_eq!(doc.elements[0].subpaths.len(), 1);
        assert_eq!(doc.elements[0].subpaths[0].commands.len(), 4);
        assert_eq!(doc.view_box, [0.0, 0.0, 224.0, 224.0]);
        assert_eq!(doc.width, 224.0);
    }

    #[test]
    fn strict_rejects_gradient() {
        let svg = r##"<svg viewBox="0 0 10 10"><linearGradient id="g"/><path d="M0 0 L1 0 L1 1 Z"/></svg>"##;
        match parse_document(svg, ParseMode::Strict) {
            Err(SvgError::UnsupportedFeature(name)) => assert!(name.contains("linearGradient")),
            other => panic!("expected UnsupportedFeature, got {other:?}"),
        }
    }

    #[test]
    fn lenient_drops_gradient_with_warning() {
        let svg = r##"<svg viewBox="0 0 10 10"><linearGradient id="g"/><path d="M0 0 L1 0 L1 1 Z"/></svg>"##;
        let parsed = parse_document(svg, ParseMode::Lenient).unwrap();
        assert_eq!(parsed.document.elements.len(), 1);
        assert_eq!(parsed.warnings.len(), 1);
        assert!(parsed.warnings[0].message.contains("linearGradient"));
    }

    #[test]
    fn empty_document_is_an_error() {
        let svg = r#"<svg viewBox="0 0 10 10"></svg>"#;
        assert!(matches!(
            parse_document(svg, ParseMode::Lenient),
            Err(SvgError::EmptyDocument)
        ));
        let invisible = r#"<svg viewBox="0 0 10 10"><path d="M0 0 L1 1" fill="none"/></svg>"#;
        assert!(matches!(
            parse_document(invisible, ParseMode::Lenient),
            Err(SvgError::EmptyDocument)
        ));
    }

    #[test]
    fn malformed_xml_is_an_error() {
        assert!(matches!(
            parse_document("<svg><path", ParseMode::Lenient),
            Err(SvgError::XmlMalformed(_))
        ));
    }

    #[test]
    fn fill_opacity_folds_into_opacity() {
        let svg = r##"<svg viewBox="0 0 10 10"><path d="M0 0 H10 V10 H0 Z" opacity="0.5" fill-opacity="0.5"/></svg>"##;
        let parsed = parse_document(svg, ParseMode::Strict).unwrap();
        assert!((parsed.document.elements[0].opacity - 0.25).abs() < 1e-12);
    }

    #[test]
    fn stroke_parses_with_width() {
        let svg = r##"<svg viewBox="0 0 10 10"><path d="M0 0 L10 10" fill="none" stroke="#ff0000" stroke-width="2"/></svg>"##;
        let parsed = parse_document(svg, ParseMode::Strict).unwrap();
        let el = &parsed.document.elements[0];
        assert_eq!(el.fill, None);
        assert_eq!(
            el.stroke,
            Some(Stroke {
                color: Rgba::opaque(255, 0, 0),
                width: 2.0
            })
        );
    }

    #[test]
    fn lenient_recurses_into_groups() {
        let svg = r##"<svg viewBox="0 0 10 10"><g fill="red"><path d="M0 0 H5 V5 H0 Z"/></g></svg>"##;
        let parsed = parse_document(svg, ParseMode::Lenient).unwrap();
        assert_eq!(parsed.document.elements.len(), 1);
        assert!(!parsed.warnings.is_empty());
        assert!(matches!(
            parse_document(svg, ParseMode::Strict),
            Err(SvgError::UnsupportedFeature(_))
        ));
    }

    #[test]
    fn desc_becomes_prompt_metadata() {
        let svg = r##"<svg viewBox="0 0 10 10"><desc>a red square</desc><path d="M0 0 H5 V5 H0 Z"/></svg>"##;
        let parsed = parse_document(svg, ParseMode::Strict).unwrap();
        assert_eq!(
            parsed.document.prompt_metadata.as_deref(),
            Some("a red square")
        );
    }

    #[test]
    fn fragment_gets_implicit_wrapper() {
        let els = parse_fragment("<path d=\"M0 0 L10 0 L10 10 Z\" fill=\"#123456\"/>").unwrap();
        assert_eq!(els.len(), 1);
        assert_eq!(els[0].fill, Some(Rgba::opaque(0x12, 0x34, 0x56)));
    }

    #[test]
    fn fragment_may_hold_multiple_elements() {
        let els =
            parse_fragment("<path d=\"M0 0 H5 V5 H0 Z\"/><path d=\"M10 10 H15 V15 H10 Z\"/>")
                .unwrap();
        assert_eq!(els.len(), 2);
        assert_eq!(els[1].source_index, 1);
    }

    #[test]
    fn fragment_rejects_unsupported_attributes() {
        assert!(parse_fragment("<path d=\"M0 0 H5 V5 Z\" transform=\"scale(2)\"/>").is_err());
    }

    #[test]
    fn document_order_is_paint_order() {
        let svg = r##"<svg viewBox="0 0 10 10"><path d="M0 0 H1 V1 Z" fill="red"/><path d="M2 2 H3 V3 Z" fill="blue"/></svg>"##;
        let parsed = parse_document(svg, ParseMode::Strict).unwrap();
        assert_eq!(parsed.document.elements[0].fill, Some(Rgba::opaque(255, 0, 0)));
        assert_eq!(parsed.document.elements[1].fill, Some(Rgba::opaque(0, 0, 255)));
        assert_eq!(parsed.document.elements[0].source_index, 0);
        assert_eq!(parsed.document.elements[1].source_index, 1);
    }
}
