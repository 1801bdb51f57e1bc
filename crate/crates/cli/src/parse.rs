//! Shape expressions.
//!
//! ```text
//! expr    := literal | named | shape [fill] | family [fill]
//! shape   := "(" ints ")" ["/" "(" ints ")"]
//! family  := A(n) | B(n) | L(n) | Lstar(n) | S(n) | Sstar(n) | square(n)
//!          | stair(N) | stair(N;mu) | hook(m,n) | antihook(m,n)
//! fill    := checker(a,b)
//! literal := "[" row ("," row)* "]"     row := "[" ("_" | int) ("," …)* "]"
//! named   := square2x2_13 | antistair3_13 | A12(n) | S12(n)
//! ```
//!
//! `L*` and `S*` are accepted for `Lstar` and `Sstar`. A family without a
//! fill is read at `checker(1,3)`; a bare shape needs one.

use smzv_core::closed_forms::{special_tableau, special_values};
use smzv_core::expr::ZetaExpr;
use smzv_core::shapes::{checkerboard_fill, make_family, Family, FamilySpec, Partition, SkewShape, Tableau};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ParseError {
    #[error("parse error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Core(#[from] smzv_core::Error),
}

pub type Result<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq)]
pub enum ShapeExpr {
    Literal(Tableau),
    Shape { shape: SkewShape, a: u32, b: u32 },
    Family(FamilySpec),
    Named(String),
}

impl ShapeExpr {
    pub fn tableau(&self) -> Result<Tableau> {
        Ok(match self {
            ShapeExpr::Literal(t) => t.clone(),
            ShapeExpr::Shape { shape, a, b } => checkerboard_fill(shape, *a, *b)?,
            ShapeExpr::Family(spec) => make_family(spec)?,
            ShapeExpr::Named(name) => special_tableau(name)?,
        })
    }

    /// Closed form, when the expression names a family or a special value.
    pub fn closed_form(&self) -> Result<ZetaExpr> {
        match self {
            ShapeExpr::Family(spec) => Ok(smzv_core::closed_forms::closed_form(spec)?),
            ShapeExpr::Named(name) => Ok(special_values(name)?),
            _ => Err(smzv_core::Error::NoReductionAvailable(self.to_string()).into()),
        }
    }
}

impl std::fmt::Display for ShapeExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ShapeExpr::Literal(t) => write!(f, "{}", t.to_literal()),
            ShapeExpr::Shape { shape, a, b } => write!(f, "{shape} checker({a},{b})"),
            ShapeExpr::Family(spec) => write!(f, "{spec}"),
            ShapeExpr::Named(name) => f.write_str(name),
        }
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("number out of range")
        })
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || b"_*".contains(&self.s[self.pos])) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    /// Comma-separated integers up to `close`, which is consumed.
    fn ints(&mut self, close: u8) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat(close) {
                return Ok(out);
            }
            if !self.eat(b',') {
                return self.err(format!("expected ',' or '{}'", close as char));
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn partition(c: &Cursor, parts: Vec<u32>, zeros: bool) -> Result<Partition> {
    let p = if zeros {
        Partition::with_zeros(parts)
    } else {
        Partition::new(parts)
    };
    p.map_err(|e| ParseError::Syntax {
        pos: c.pos,
        msg: e.to_string(),
    })
}

fn literal(c: &mut Cursor) -> Result<Tableau> {
    c.expect(b'[')?;
    let mut rows = Vec::new();
    loop {
        c.expect(b'[')?;
        let mut row = Vec::new();
        loop {
            if c.eat(b'_') {
                row.push(None);
            } else {
                row.push(Some(c.int()?));
            }
            if c.eat(b']') {
                break;
            }
            c.expect(b',')?;
        }
        rows.push(row);
        if c.eat(b']') {
            break;
        }
        c.expect(b',')?;
    }
    Ok(Tableau::from_rows(&rows)?)
}

fn fill(c: &mut Cursor) -> Result<Option<(u32, u32)>> {
    if c.at_end() {
        return Ok(None);
    }
    let start = c.pos;
    if c.ident() != "checker" {
        c.pos = start;
        return c.err("expected checker(a,b)");
    }
    c.expect(b'(')?;
    let v = c.ints(b')')?;
    match v[..] {
        [a, b] => Ok(Some((a, b))),
        _ => c.err("checker takes two entries"),
    }
}

fn family(c: &mut Cursor, name: &str) -> Result<Family> {
    let start = c.pos;
    c.expect(b'(')?;
    if name == "stair" {
        let n = c.int()?;
        let mu = if c.eat(b';') { c.ints(b')')? } else {
            c.expect(b')')?;
            Vec::new()
        };
        let mu = partition(c, mu, true)?;
        return Ok(Family::Stair { n, mu });
    }
    let args = c.ints(b')')?;
    let one = || match args[..] {
        [n] => Ok(n),
        _ => Err(ParseError::Syntax {
            pos: start,
            msg: format!("{name} takes one argument"),
        }),
    };
    let two = || match args[..] {
        [m, n] => Ok((m, n)),
        _ => Err(ParseError::Syntax {
            pos: start,
            msg: format!("{name} takes two arguments"),
        }),
    };
    Ok(match name {
        "A" => Family::A(one()?),
        "B" => Family::B(one()?),
        "L" => Family::L(one()?),
        "Lstar" | "L*" => Family::LStar(one()?),
        "S" => Family::S(one()?),
        "Sstar" | "S*" => Family::SStar(one()?),
        "square" => Family::Square(one()?),
        "hook" => {
            let (m, n) = two()?;
            Family::Hook { m, n }
        }
        "antihook" => {
            let (m, n) = two()?;
            Family::AntiHook { m, n }
        }
        _ => {
            c.pos = start;
            return c.err(format!("unknown family {name:?}"));
        }
    })
}

/// Parses an expression without building the tableau.
pub fn parse_expr(text: &str) -> Result<ShapeExpr> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let name_ok = special_values(trimmed).is_ok();
    if name_ok {
        return Ok(ShapeExpr::Named(trimmed.to_string()));
    }
    let mut c = Cursor { s: text.as_bytes(), pos: 0 };
    let expr = match c.peek() {
        Some(b'[') => ShapeExpr::Literal(literal(&mut c)?),
        Some(b'(') => {
            c.pos += 1;
            let outer = c.ints(b')')?;
            let outer = partition(&c, outer, false)?;
            let inner = if c.eat(b'/') {
                c.expect(b'(')?;
                let v = c.ints(b')')?;
                partition(&c, v, true)?
            } else {
                Partition::empty()
            };
            let shape = SkewShape::new(outer, inner)?;
            match fill(&mut c)? {
                Some((a, b)) => ShapeExpr::Shape { shape, a, b },
                None => return c.err("a shape needs a fill such as checker(1,3)"),
            }
        }
        _ => {
            let name = c.ident();
            if name.is_empty() {
                return c.err("expected a shape, family or literal");
            }
            let kind = family(&mut c, &name)?;
            let (a, b) = fill(&mut c)?.unwrap_or((1, 3));
            ShapeExpr::Family(FamilySpec { kind, a, b })
        }
    };
    if !c.at_end() {
        return c.err("unexpected trailing input");
    }
    Ok(expr)
}

/// Parses an expression and builds its tableau.
pub fn parse_shape_expr(text: &str) -> Result<Tableau> {
    parse_expr(text)?.tableau()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> Tableau {
        parse_shape_expr(text).unwrap()
    }

    #[test]
    fn stair_three() {
        let want = Tableau::from_rows(&[
            vec![Some(3), Some(1), Some(3)],
            vec![Some(1), Some(3)],
            vec![Some(3)],
        ])
        .unwrap();
        assert_eq!(t("stair(3) checker(1,3)"), want);
        assert_eq!(t("stair(3)"), want);
        assert_eq!(t("(3,2,1) checker(1,3)"), want);
    }

    #[test]
    fn literal_is_a_of_one() {
        assert_eq!(t("[[_,1],[1,3]]"), t("A(1) checker(1,3)"));
        assert_eq!(t("[[_,_,1],[1,3]]").to_literal(), "[[_,_,1],[1,3]]");
    }

    #[test]
    fn not_checkerboardable() {
        assert!(matches!(
            parse_shape_expr("(3,1) checker(1,3)"),
            Err(ParseError::Core(smzv_core::Error::NotCheckerboardable(_)))
        ));
    }

    #[test]
    fn families() {
        assert_eq!(t("stair(5;2,2,1) checker(2,3)").num_cells(), 10);
        assert_eq!(t("hook(4,3)").num_cells(), 7);
        assert_eq!(t("antihook(4,3)").num_cells(), 7);
        assert_eq!(t("L*(2)"), t("Lstar(2) checker(1,3)"));
        assert_eq!(t("S*(1) checker(2,3)"), t("Sstar(1) checker(2,3)"));
        assert_eq!(t("(5,4,3)/(3,1) checker(1,3)").num_cells(), 8);
        assert!(matches!(parse_expr("A12(2)"), Ok(ShapeExpr::Named(_))));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_expr("hook(4,3) checker(1"),
            Err(ParseError::Syntax {
                pos: 19,
                msg: "expected ',' or ')'".into()
            })
        );
        assert!(matches!(parse_expr("foo(1)"), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_expr("(3,2)"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_expr("   "), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_expr("[[1,2],[3]] x"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn round_trip() {
        for text in [
            "A(3) checker(1,3)",
            "B(0) checker(2,3)",
            "Lstar(2) checker(1,2)",
            "Sstar(2) checker(2,2)",
            "stair(5;2,2,1) checker(1,3)",
            "stair(4) checker(1,3)",
            "hook(4,3) checker(1,3)",
            "antihook(3,4) checker(2,3)",
            "square(2) checker(1,3)",
            "(5,4,3)/(3,1) checker(1,3)",
            "[[_,_,1],[1,3]]",
            "square2x2_13",
        ] {
            let e = parse_expr(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }
}
