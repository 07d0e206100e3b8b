//! Parser for the `d` attribute of `<path>` elements.
//!
//! Accepts the full SVG 1.1 path grammar (M/L/H/V/C/S/Q/T/A/Z, upper and
//! lower case, implicit command repetition) and emits absolute commands
//! only. H/V become LineTo, S/T become CubicTo/QuadTo with the reflected
//! control point, and a ClosePath followed by more drawing commands gets an
//! implicit MoveTo back to the subpath start, matching SVG semantics.

use super::{PathCommand, Point, SvgError};

struct Tokenizer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Tokenizer<'a> {
    fn new(data: &'a str) -> Self {
        Self {
            bytes: data.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r' | 0x0c)) {
            self.pos += 1;
        }
    }

    fn skip_ws_comma(&mut self) {
        self.skip_ws();
        if self.peek() == Some(b',') {
            self.pos += 1;
            self.skip_ws();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.bytes.len()
    }

    /// True when the next non-separator byte starts a number.
    fn at_number(&mut self) -> bool {
        self.skip_ws_comma();
        matches!(self.peek(), Some(b'0'..=b'9' | b'-' | b'+' | b'.'))
    }

    fn command_letter(&mut self) -> Option<u8> {
        self.skip_ws_comma();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Some(c)
            }
            _ => None,
        }
    }

    fn number(&mut self) -> Result<f64, SvgError> {
        self.skip_ws_comma();
        let start = self.pos;
        if matches!(self.peek(), Some(b'+' | b'-')) {
            self.pos += 1;
        }
        let mut saw_digit = false;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
            saw_digit = true;
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            while matches!(self.peek(), Some(b'0'..=b'9')) {
                self.pos += 1;
                saw_digit = true;
            }
        }
        if !saw_digit {
            return Err(SvgError::BadPathData(format!(
                "expected number at byte {start}"
            )));
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            self.pos += 1;
            if matches!(self.peek(), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            let mut exp_digit = false;
            while matches!(self.peek(), Some(b'0'..=b'9')) {
                self.pos += 1;
                exp_digit = true;
            }
            if !exp_digit {
                return Err(SvgError::BadPathData(format!(
                    "bad exponent at byte {start}"
                )));
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<f64>()
            .map_err(|_| SvgError::BadPathData(format!("unparseable number {text:?}")))
    }

    /// Arc flags are single characters and may be packed ("00", "11").
    fn flag(&mut self) -> Result<bool, SvgError> {
        self.skip_ws_comma();
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(false)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(true)
            }
            other => Err(SvgError::BadPathData(format!(
                "expected arc flag, found {other:?}"
            ))),
        }
    }
}

/// Parses path data into absolute commands.
pub fn parse_path_data(data: &str) -> Result<Vec<PathCommand>, SvgError> {
    let mut tok = Tokenizer::new(data);
    let mut out: Vec<PathCommand> = Vec::new();
    let mut cur = Point::default();
    let mut subpath_start = Point::default();
    // Reflection state for S/T smooth commands.
    let mut prev_cubic_ctrl2: Option<Point> = None;
    let mut prev_quad_ctrl: Option<Point> = None;
    let mut command: Option<u8> = None;
    let mut closed_pending = false;

    while !tok.at_end() {
        if let Some(letter) = tok.command_letter() {
            command = Some(letter);
        } else if command.is_none() {
            return Err(SvgError::BadPathData(
                "path data must start with a command letter".into(),
            ));
        } else if !tok.at_number() {
            return Err(SvgError::BadPathData(format!(
                "unexpected character {:?}",
                tok.peek().map(char::from)
            )));
        }
        let cmd = command.ok_or_else(|| SvgError::BadPathData("missing command".into()))?;
        let relative = cmd.is_ascii_lowercase();
        let upper = cmd.to_ascii_uppercase();

        // A drawing command right after Z restarts the subpath at its start.
        if closed_pending && upper != b'M' && upper != b'Z' {
            out.push(PathCommand::MoveTo(subpath_start));
            cur = subpath_start;
        }
        closed_pending = false;

        let rel = |tok: &mut Tokenizer, base: Point| -> Result<Point, SvgError> {
            let x = tok.number()?;
            let y = tok.number()?;
            Ok(if relative {
                Point::new(base.x + x, base.y + y)
            } else {
                Point::new(x, y)
            })
        };

        match upper {
            b'M' => {
                // A relative m as the very first command is absolute.
                let first_of_path = out.is_empty();
                let base = if first_of_path && relative {
                    Point::default()
                } else {
                    cur
                };
                let p = rel(&mut tok, base)?;
                out.push(PathCommand::MoveTo(p));
                cur = p;
                subpath_start = p;
                // Extra coordinate pairs are implicit LineTo.
                command = Some(if relative { b'l' } else { b'L' });
                prev_cubic_ctrl2 = None;
                prev_quad_ctrl = None;
            }
            b'L' => {
                let p = rel(&mut tok, cur)?;
                out.push(PathCommand::LineTo(p));
                cur = p;
                prev_cubic_ctrl2 = None;
                prev_quad_ctrl = None;
            }
            b'H' => {
                let x = tok.number()?;
                let p = Point::new(if relative { cur.x + x } else { x }, cur.y);
                out.push(PathCommand::LineTo(p));
                cur = p;
                prev_cubic_ctrl2 = None;
                prev_quad_ctrl = None;
            }
            b'V' => {
                let y = tok.number()?;
                let p = Point::new(cur.x, if relative { cur.y + y } else { y });
                out.push(PathCommand::LineTo(p));
                cur = p;
                prev_cubic_ctrl2 = None;
                prev_quad_ctrl = None;
            }
            b'C' => {
                let ctrl1 = rel(&mut tok, cur)?;
                let ctrl2 = rel(&mut tok, cur)?;
                let to = rel(&mut tok, cur)?;
                out.push(PathCommand::CubicTo { ctrl1, ctrl2, to });
                cur = to;
                prev_cubic_ctrl2 = Some(ctrl2);
                prev_quad_ctrl = None;
            }
            b'S' => {
                let ctrl1 = match prev_cubic_ctrl2 {
                    Some(c) => Point::new(2.0 * cur.x - c.x, 2.0 * cur.y - c.y),
                    None => cur,
                };
                let ctrl2 = rel(&mut tok, cur)?;
                let to = rel(&mut tok, cur)?;
                out.push(PathCommand::CubicTo { ctrl1, ctrl2, to });
                cur = to;
                prev_cubic_ctrl2 = Some(ctrl2);
                prev_quad_ctrl = None;
            }
            b'Q' => {
                let ctrl = rel(&mut tok, cur)?;
                let to = rel(&mut tok, cur)?;
                out.push(PathCommand::QuadTo { ctrl, to });
                cur = to;
                prev_quad_ctrl = Some(ctrl);
                prev_cubic_ctrl2 = None;
            }
            b'T' => {
                let ctrl = match prev_quad_ctrl {
                    Some(c) => Point::new(2.0 * cur.x - c.x, 2.0 * cur.y - c.y),
                    None => cur,
                };
                let to = rel(&mut tok, cur)?;
                out.push(PathCommand::QuadTo { ctrl, to });
                cur = to;
                prev_quad_ctrl = Some(ctrl);
                prev_cubic_ctrl2 = None;
            }
            b'A' => {
                let rx = tok.number()?;
                let ry = tok.number()?;
                let x_rotation = tok.number()?;
                let large_arc = tok.flag()?;
                let sweep = tok.flag()?;
                let to = rel(&mut tok, cur)?;
                out.push(PathCommand::ArcTo {
                    rx: rx.abs(),
                    ry: ry.abs(),
                    x_rotation,
                    large_arc,
                    sweep,
                    to,
                });
                cur = to;
                prev_cubic_ctrl2 = None;
                prev_quad_ctrl = None;
            }
            b'Z' => {
                out.push(PathCommand::ClosePath);
                cur = subpath_start;
                closed_pending = true;
                prev_cubic_ctrl2 = None;
                prev_quad_ctrl = None;
                // Z takes no arguments; a following number needs a new letter.
                command = None;
            }
            other => {
                return Err(SvgError::BadPathData(format!(
                    "unknown command letter {:?}",
                    char::from(other)
                )));
            }
        }
        if let Some(last) = out.last() {
            if !last.is_finite() {
                return Err(SvgError::BadPathData(
                    "non-finite coordinate in path data".into(),
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn relative_move_and_line_become_absolute() {
        let cmds = parse_path_data("m10 10 l5 0").unwrap();
        assert_eq!(
            cmds,
            vec![
                PathCommand::MoveTo(pt(10.0, 10.0)),
                PathCommand::LineTo(pt(15.0, 10.0)),
            ]
        );
    }

    #[test]
    fn horizontal_vertical_normalize_to_line_to() {
        let cmds = parse_path_data("M0 0 H10 V10 h-10 Z").unwrap();
        assert_eq!(
            cmds,
            vec![
                PathCommand::MoveTo(pt(0.0, 0.0)),
                PathCommand::LineTo(pt(10.0, 0.0)),
                PathCommand::LineTo(pt(10.0, 10.0)),
                PathCommand::LineTo(pt(0.0, 10.0)),
                PathCommand::ClosePath,
            ]
        );
    }

    #[test]
    fn implicit_line_to_after_move() {
        let cmds = parse_path_data("M0 0 10 10 20 0").unwrap();
        assert_eq!(cmds.len(), 3);
        assert_eq!(cmds[1], PathCommand::LineTo(pt(10.0, 10.0)));
        assert_eq!(cmds[2], PathCommand::LineTo(pt(20.0, 0.0)));
    }

    #[test]
    fn smooth_cubic_reflects_control_point() {
        let cmds = parse_path_data("M0 0 C 0 10 10 10 10 0 S 20 -10 20 0").unwrap();
        match cmds[2] {
            PathCommand::CubicTo { ctrl1, .. } => {
                // Reflection of (10,10) around (10,0).
                assert_eq!(ctrl1, pt(10.0, -10.0));
            }
            ref other => panic!("expected cubic, got {other:?}"),
        }
    }

    #[test]
    fn arc_flags_may_be_packed() {
        let cmds = parse_path_data("M0 0 A 5 5 0 01 10 0").unwrap();
        match cmds[1] {
            PathCommand::ArcTo {
                large_arc, sweep, ..
            } => {
                assert!(!large_arc);
                assert!(sweep);
            }
            ref other => panic!("expected arc, got {other:?}"),
        }
    }

    #[test]
    fn draw_after_close_starts_new_subpath_at_start() {
        let cmds = parse_path_data("M0 0 L10 0 Z L5 5").unwrap();
        assert_eq!(
            cmds,
            vec![
                PathCommand::MoveTo(pt(0.0, 0.0)),
                PathCommand::LineTo(pt(10.0, 0.0)),
                PathCommand::ClosePath,
                PathCommand::MoveTo(pt(0.0, 0.0)),
                PathCommand::LineTo(pt(5.0, 5.0)),
            ]
        );
    }

    #[test]
    fn scientific_notation_and_commas() {
        let cmds = parse_path_data("M1e1,2E0 L.5,-0.25").unwrap();
        assert_eq!(cmds[0], PathCommand::MoveTo(pt(10.0, 2.0)));
        assert_eq!(cmds[1], PathCommand::LineTo(pt(0.5, -0.25)));
    }

    #[test]
    fn leading_digit_without_command_is_an_error() {
        assert!(parse_path_data("10 10 L0 0").is_err());
    }

    #[test]
    fn truncated_arguments_are_an_error() {
        assert!(parse_path_data("M0 0 L10").is_err());
        assert!(parse_path_data("M0 0 C 1 2 3 4 5").is_err());
    }
}
