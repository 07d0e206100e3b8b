//! Restricted-SVG document model: parsing, canonical serialization, and
//! subpath splitting.
//!
//! The supported subset is `<path>` elements with solid fill, fill-rule,
//! opacity (fill-opacity is folded in), and solid strokes. Everything else
//! is rejected in strict mode or dropped with a recorded warning in lenient
//! mode. All path commands are normalized to absolute on parse, so the
//! model never carries relative coordinates.

mod color;
mod parse;
mod path_data;
mod ser;

pub use color::Rgba;
pub use parse::{parse_document, parse_fragment, Parsed, ParseMode, ParseWarning};
pub use path_data::parse_path_data;
pub use ser::{format_number, serialize_document, serialize_element, serialize_path_data};

use thiserror::Error;

/// Errors produced by parsing and model construction.
#[derive(Debug, Error)]
pub enum SvgError {
    #[error("malformed XML: {0}")]
    XmlMalformed(String),
    #[error("unsupported feature: {0}")]
    UnsupportedFeature(String),
    #[error("document has no paintable elements")]
    EmptyDocument,
    #[error("path data does not start with a MoveTo")]
    NoInitialMoveTo,
    #[error("bad path data: {0}")]
    BadPathData(String),
    #[error("bad color value: {0}")]
    BadColor(String),
    #[error("bad number: {0}")]
    BadNumber(String),
}

/// A 2-D point in user units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// One drawing command, always absolute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PathCommand {
    MoveTo(Point),
    LineTo(Point),
    QuadTo {
        ctrl: Point,
        to: Point,
    },
    CubicTo {
        ctrl1: Point,
        ctrl2: Point,
        to: Point,
    },
    ArcTo {
        rx: f64,
        ry: f64,
        x_rotation: f64,
        large_arc: bool,
        sweep: bool,
        to: Point,
    },
    ClosePath,
}

impl PathCommand {
    /// The point the pen ends at, if the command moves it.
    pub fn endpoint(&self) -> Option<Point> {
        match *self {
            PathCommand::MoveTo(p) | PathCommand::LineTo(p) => Some(p),
            PathCommand::QuadTo { to, .. }
            | PathCommand::CubicTo { to, .. }
            | PathCommand::ArcTo { to, .. } => Some(to),
            PathCommand::ClosePath => None,
        }
    }

    pub fn is_move_to(&self) -> bool {
        matches!(self, PathCommand::MoveTo(_))
    }

    /// True when every coordinate in the command is finite.
    pub fn is_finite(&self) -> bool {
        match *self {
            PathCommand::MoveTo(p) | PathCommand::LineTo(p) => p.is_finite(),
            PathCommand::QuadTo { ctrl, to } => ctrl.is_finite() && to.is_finite(),
            PathCommand::CubicTo { ctrl1, ctrl2, to } => {
                ctrl1.is_finite() && ctrl2.is_finite() && to.is_finite()
            }
            PathCommand::ArcTo {
                rx,
                ry,
                x_rotation,
                to,
                ..
            } => rx.is_finite() && ry.is_finite() && x_rotation.is_finite() && to.is_finite(),
            PathCommand::ClosePath => true,
        }
    }
}

/// One MoveTo-initiated command run within a path.
#[derive(Debug, Clone, PartialEq)]
pub struct Subpath {
    pub commands: Vec<PathCommand>,
    pub closed: bool,
}

impl Subpath {
    /// The initial MoveTo target.
    pub fn start_point(&self) -> Point {
        match self.commands.first() {
            Some(PathCommand::MoveTo(p)) => *p,
            _ => Point::default(),
        }
    }
}

/// Interior-pixel rule for self-overlapping geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FillRule {
    #[default]
    NonZero,
    EvenOdd,
}

/// Solid stroke paint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stroke {
    pub color: Rgba,
    pub width: f64,
}

/// A `<path>` element: ordered subpaths plus paint attributes.
#[derive(Debug, Clone, PartialEq)]
pub struct PathElement {
    pub subpaths: Vec<Subpath>,
    /// Solid fill color; `None` renders no fill.
    pub fill: Option<Rgba>,
    pub fill_rule: FillRule,
    /// Effective element opacity in [0, 1] (`opacity` x `fill-opacity`).
    pub opacity: f64,
    pub stroke: Option<Stroke>,
    /// Position in the containing document, unique per document.
    pub source_index: usize,
}

impl PathElement {
    /// A black-filled element over the given subpaths, for tests and fixtures.
    pub fn filled(subpaths: Vec<Subpath>, fill: Rgba) -> Self {
        Self {
            subpaths,
            fill: Some(fill),
            fill_rule: FillRule::NonZero,
            opacity: 1.0,
            stroke: None,
            source_index: 0,
        }
    }

    /// All commands of all subpaths in order.
    pub fn commands(&self) -> impl Iterator<Item = &PathCommand> {
        self.subpaths.iter().flat_map(|sp| sp.commands.iter())
    }

    /// True when the element could put ink on the canvas.
    pub fn is_paintable(&self) -> bool {
        !self.subpaths.is_empty() && (self.fill.is_some() || self.stroke.is_some())
    }
}

/// A parsed SVG document. Element order equals paint order.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgDocument {
    pub width: f64,
    pub height: f64,
    /// `[min_x, min_y, width, height]` in user units.
    pub view_box: [f64; 4],
    pub elements: Vec<PathElement>,
    /// Free-form prompt text carried in a `<desc>` child.
    pub prompt_metadata: Option<String>,
}

impl SvgDocument {
    /// An empty document over a square canvas of the given side length.
    pub fn with_canvas(side: f64) -> Self {
        Self {
            width: side,
            height: side,
            view_box: [0.0, 0.0, side, side],
            elements: Vec::new(),
            prompt_metadata: None,
        }
    }

    /// Builds a document over a 224x224 canvas from pre-parsed elements,
    /// reassigning source indices by position.
    pub fn from_elements(elements: Vec<PathElement>) -> Self {
        let mut doc = Self::with_canvas(224.0);
        doc.elements = elements;
        doc.reindex();
        doc
    }

    /// Reassigns `source_index` to each element's current position.
    pub fn reindex(&mut self) {
        for (i, el) in self.elements.iter_mut().enumerate() {
            el.source_index = i;
        }
    }
}

/// Splits a normalized absolute command list into subpaths, one per MoveTo.
///
/// Concatenating the returned command lists reproduces the input exactly.
pub fn split_subpaths(commands: &[PathCommand]) -> Result<Vec<Subpath>, SvgError> {
    if commands.is_empty() {
        return Ok(Vec::new());
    }
    if !commands[0].is_move_to() {
        return Err(SvgError::NoInitialMoveTo);
    }
    let mut subpaths = Vec::new();
    let mut current: Vec<PathCommand> = Vec::new();
    for cmd in commands {
        if cmd.is_move_to() && !current.is_empty() {
            subpaths.push(finish_subpath(current));
            current = Vec::new();
        }
        current.push(*cmd);
    }
    subpaths.push(finish_subpath(current));
    Ok(subpaths)
}

fn finish_subpath(commands: Vec<PathCommand>) -> Subpath {
    let closed = matches!(commands.last(), Some(PathCommand::ClosePath));
    Subpath { commands, closed }
}
