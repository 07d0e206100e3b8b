//! Solid color values and the paint grammar subset used by the corpus.

use super::SvgError;

/// 8-bit RGBA color, not premultiplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rgba {
    pub r: u8,
    pub g: u8,
    pub b: u8,
    pub a: u8,
}

impl Rgba {
    pub const BLACK: Rgba = Rgba::opaque(0, 0, 0);
    pub const WHITE: Rgba = Rgba::opaque(255, 255, 255);

    pub const fn new(r: u8, g: u8, b: u8, a: u8) -> Self {
        Self { r, g, b, a }
    }

    pub const fn opaque(r: u8, g: u8, b: u8) -> Self {
        Self { r, g, b, a: 255 }
    }

    /// Canonical hex form: `#rrggbb`, or `#rrggbbaa` when translucent.
    pub fn to_hex(self) -> String {
        if self.a == 255 {
            format!("#{:02x}{:02x}{:02x}", self.r, self.g, self.b)
        } else {
            format!("#{:02x}{:02x}{:02x}{:02x}", self.r, self.g, self.b, self.a)
        }
    }
}

/// Parses a paint value. `Ok(None)` means no paint (`none` / `transparent`).
pub fn parse_paint(value: &str) -> Result<Option<Rgba>, SvgError> {
    let v = value.trim();
    if v.eq_ignore_ascii_case("none") || v.eq_ignore_ascii_case("transparent") {
        return Ok(None);
    }
    parse_color(v).map(Some)
}

fn parse_color(v: &str) -> Result<Rgba, SvgError> {
    if let Some(hex) = v.strip_prefix('#') {
        return parse_hex(hex).ok_or_else(|| SvgError::BadColor(v.to_string()));
    }
    let lower = v.to_ascii_lowercase();
    if let Some(args) = lower
        .strip_prefix("rgb(")
        .or_else(|| lower.strip_prefix("rgba("))
    {
        let args = args
            .strip_suffix(')')
            .ok_or_else(|| SvgError::BadColor(v.to_string()))?;
        return parse_rgb_args(args).ok_or_else(|| SvgError::BadColor(v.to_string()));
    }
    named_color(&lower).ok_or_else(|| SvgError::BadColor(v.to_string()))
}

fn parse_hex(hex: &str) -> Option<Rgba> {
    let nib = |c: u8| -> Option<u8> {
        match c {
            b'0'..=b'9' => Some(c - b'0'),
            b'a'..=b'f' => Some(c - b'a' + 10),
            b'A'..=b'F' => Some(c - b'A' + 10),
            _ => None,
        }
    };
    let b = hex.as_bytes();
    match b.len() {
        3 | 4 => {
            let mut v = [0u8; 4];
            for (i, &c) in b.iter().enumerate() {
                let n = nib(c)?;
                v[i] = n << 4 | n;
            }
            let a = if b.len() == 4 { v[3] } else { 255 };
            Some(Rgba::new(v[0], v[1], v[2], a))
        }
        6 | 8 => {
            let mut v = [0u8; 4];
            for i in 0..b.len() / 2 {
                v[i] = nib(b[2 * i])? << 4 | nib(b[2 * i + 1])?;
            }
            let a = if b.len() == 8 { v[3] } else { 255 };
            Some(Rgba::new(v[0], v[1], v[2], a))
        }
        _ => None,
    }
}

fn parse_rgb_args(args: &str) -> Option<Rgba> {
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    if parts.len() != 3 && parts.len() != 4 {
        return None;
    }
    let channel = |s: &str| -> Option<u8> {
        if let Some(pct) = s.strip_suffix('%') {
            let p: f64 = pct.trim().parse().ok()?;
            Some((p / 100.0 * 255.0).round().clamp(0.0, 255.0) as u8)
        } else {
            let n: f64 = s.parse().ok()?;
            Some(n.round().clamp(0.0, 255.0) as u8)
        }
    };
    let r = channel(parts[0])?;
    let g = channel(parts[1])?;
    let b = channel(parts[2])?;
    let a = if parts.len() == 4 {
        let f: f64 = parts[3].parse().ok()?;
        (f.clamp(0.0, 1.0) * 255.0).round() as u8
    } else {
        255
    };
    Some(Rgba::new(r, g, b, a))
}

fn named_color(name: &str) -> Option<Rgba> {
    let (r, g, b) = match name {
        "black" => (0, 0, 0),
        "white" => (255, 255, 255),
        "red" => (255, 0, 0),
        "green" => (0, 128, 0),
        "blue" => (0, 0, 255),
        "yellow" => (255, 255, 0),
        "cyan" | "aqua" => (0, 255, 255),
        "magenta" | "fuchsia" => (255, 0, 255),
        "gray" | "grey" => (128, 128, 128),
        "silver" => (192, 192, 192),
        "maroon" => (128, 0, 0),
        "olive" => (128, 128, 0),
        "lime" => (0, 255, 0),
        "navy" => (0, 0, 128),
        "teal" => (0, 128, 128),
        "purple" => (128, 0, 128),
        "orange" => (255, 165, 0),
        "pink" => (255, 192, 203),
        "brown" => (165, 42, 42),
        _ => return None,
    };
    Some(Rgba::opaque(r, g, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_forms() {
        assert_eq!(parse_paint("#000").unwrap(), Some(Rgba::BLACK));
        assert_eq!(
            parse_paint("#FF8000").unwrap(),
            Some(Rgba::opaque(255, 128, 0))
        );
        assert_eq!(
            parse_paint("#ff800080").unwrap(),
            Some(Rgba::new(255, 128, 0, 128))
        );
    }

    #[test]
    fn none_and_transparent_mean_no_paint() {
        assert_eq!(parse_paint("none").unwrap(), None);
        assert_eq!(parse_paint("transparent").unwrap(), None);
    }

    #[test]
    fn rgb_functional_notation() {
        assert_eq!(
            parse_paint("rgb(10, 20, 30)").unwrap(),
            Some(Rgba::opaque(10, 20, 30))
        );
        assert_eq!(
            parse_paint("rgba(10, 20, 30, 0.5)").unwrap(),
            Some(Rgba::new(10, 20, 30, 128))
        );
        assert_eq!(
            parse_paint("rgb(100%, 0%, 50%)").unwrap(),
            Some(Rgba::opaque(255, 0, 128))
        );
    }

    #[test]
    fn unknown_color_is_an_error() {
        assert!(parse_paint("notacolor").is_err());
        assert!(parse_paint("#12345").is_err());
    }

    #[test]
    fn hex_round_trip() {
        for c in [Rgba::BLACK, Rgba::new(1, 2, 3, 4), Rgba::opaque(200, 100, 50)] {
            assert_eq!(parse_paint(&c.to_hex()).unwrap(), Some(c));
        }
    }
}
