//! A small construction language for building polytopes from the command
//! line and in tests.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr := "simplex(" int ")"
//!       | "polygon(" int ")"
//!       | "cube(" int ")"
//!       | "dodecahedron"
//!       | "product(" expr "," expr ")"
//!       | "vc(" expr ["," int] ")"
//!       | "truncate(" expr "," "[" int {"," int} "]" ")"
//!       | "consum(" expr "," int "," expr "," int ["," "[" int {"," int} "]"] ")"
//! ```
//!
//! `vc` without an index builds the canonical-form-minimal cut class, so
//! builds stay deterministic; the trailing permutation of `consum` selects
//! a gluing other than the order-preserving default.

use crate::complex::VertexSet;
use crate::construct;
use crate::error::Error;
use crate::polytope::DualPolytope;

/// AST of the construction language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionExpr {
    Simplex(usize),
    Polygon(usize),
    Cube(usize),
    Dodecahedron,
    Product(Box<ConstructionExpr>, Box<ConstructionExpr>),
    Truncate(Box<ConstructionExpr>, VertexSet),
    VertexCut(Box<ConstructionExpr>, Option<usize>),
    ConnectedSum {
        left: Box<ConstructionExpr>,
        left_facet: usize,
        right: Box<ConstructionExpr>,
        right_facet: usize,
        gluing: Option<Vec<usize>>,
    },
}

impl std::fmt::Display for ConstructionExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConstructionExpr::Simplex(n) => write!(f, "simplex({n})"),
            ConstructionExpr::Polygon(k) => write!(f, "polygon({k})"),
            ConstructionExpr::Cube(n) => write!(f, "cube({n})"),
            ConstructionExpr::Dodecahedron => write!(f, "dodecahedron"),
            ConstructionExpr::Product(a, b) => write!(f, "product({a},{b})"),
            ConstructionExpr::Truncate(a, face) => {
                let verts: Vec<String> = face.iter().map(|v| v.to_string()).collect();
                write!(f, "truncate({a},[{}])", verts.join(","))
            }
            ConstructionExpr::VertexCut(a, None) => write!(f, "vc({a})"),
            ConstructionExpr::VertexCut(a, Some(i)) => write!(f, "vc({a},{i})"),
            ConstructionExpr::ConnectedSum { left, left_facet, right, right_facet, gluing } => {
                write!(f, "consum({left},{left_facet},{right},{right_facet}")?;
                if let Some(g) = gluing {
                    let parts: Vec<String> = g.iter().map(|v| v.to_string()).collect();
                    write!(f, ",[{}]", parts.join(","))?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses a construction expression; errors carry the byte position.
pub fn parse(text: &str) -> Result<ConstructionExpr, Error> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(expr)
}

/// Evaluates the AST recursively.
pub fn build(expr: &ConstructionExpr) -> Result<DualPolytope, Error> {
    match expr {
        ConstructionExpr::Simplex(n) => construct::simplex_dual(*n),
        ConstructionExpr::Polygon(k) => construct::polygon_dual(*k),
        ConstructionExpr::Cube(n) => construct::cube_dual(*n),
        ConstructionExpr::Dodecahedron => Ok(construct::dodecahedron_dual()),
        ConstructionExpr::Product(a, b) => construct::product(&build(a)?, &build(b)?),
        ConstructionExpr::Truncate(a, face) => construct::truncate(&build(a)?, face),
        ConstructionExpr::VertexCut(a, Some(i)) => construct::vertex_cut(&build(a)?, *i),
        ConstructionExpr::VertexCut(a, None) => {
            let classes = construct::vertex_cut_classes(&build(a)?)?;
            Ok(classes.into_iter().next().expect("polytopes have facets"))
        }
        ConstructionExpr::ConnectedSum { left, left_facet, right, right_facet, gluing } => {
            construct::connected_sum(
                &build(left)?,
                *left_facet,
                &build(right)?,
                *right_facet,
                gluing.as_deref(),
            )
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, ch: u8) -> Result<(), Error> {
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", ch as char)))
        }
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<&'a str, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an identifier"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii"))
    }

    fn int(&mut self) -> Result<usize, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn int_list(&mut self) -> Result<Vec<usize>, Error> {
        self.expect(b'[')?;
        let mut out = vec![self.int()?];
        while self.eat(b',') {
            out.push(self.int()?);
        }
        self.expect(b']')?;
        Ok(out)
    }

    fn expr(&mut self) -> Result<ConstructionExpr, Error> {
        let at = self.pos;
        let name = self.ident()?;
        match name {
            "dodecahedron" => Ok(ConstructionExpr::Dodecahedron),
            "simplex" | "polygon" | "cube" => {
                self.expect(b'(')?;
                let n = self.int()?;
                self.expect(b')')?;
                Ok(match name {
                    "simplex" => ConstructionExpr::Simplex(n),
                    "polygon" => ConstructionExpr::Polygon(n),
                    _ => ConstructionExpr::Cube(n),
                })
            }
            "product" => {
                self.expect(b'(')?;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                Ok(ConstructionExpr::Product(Box::new(a), Box::new(b)))
            }
            "vc" => {
                self.expect(b'(')?;
                let a = self.expr()?;
                let idx = if self.eat(b',') { Some(self.int()?) } else { None };
                self.expect(b')')?;
                Ok(ConstructionExpr::VertexCut(Box::new(a), idx))
            }
            "truncate" => {
                self.expect(b'(')?;
                let a = self.expr()?;
                self.expect(b',')?;
                let face = self.int_list()?;
                self.expect(b')')?;
                Ok(ConstructionExpr::Truncate(Box::new(a), VertexSet::new(face)))
            }
            "consum" => {
                self.expect(b'(')?;
                let left = self.expr()?;
                self.expect(b',')?;
                let left_facet = self.int()?;
                self.expect(b',')?;
                let right = self.expr()?;
                self.expect(b',')?;
                let right_facet = self.int()?;
                let gluing = if self.eat(b',') { Some(self.int_list()?) } else { None };
                self.expect(b')')?;
                Ok(ConstructionExpr::ConnectedSum {
                    left: Box::new(left),
                    left_facet,
                    right: Box::new(right),
                    right_facet,
                    gluing,
                })
            }
            other => {
                self.pos = at;
                Err(self.err(format!("unknown constructor '{other}'")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn parse_examples() {
        let expr = parse("vc(product(simplex(2),simplex(1)))").unwrap();
        assert_eq!(
            expr,
            ConstructionExpr::VertexCut(
                Box::new(ConstructionExpr::Product(
                    Box::new(ConstructionExpr::Simplex(2)),
                    Box::new(ConstructionExpr::Simplex(1)),
                )),
                None
            )
        );

        let expr = parse(" truncate( cube(3) , [0, 1, 2] ) ").unwrap();
        assert_eq!(
            expr,
            ConstructionExpr::Truncate(
                Box::new(ConstructionExpr::Cube(3)),
                VertexSet::new(vec![0, 1, 2])
            )
        );

        let expr = parse("consum(cube(3),0,cube(3),0,[2,0,1])").unwrap();
        assert!(matches!(expr, ConstructionExpr::ConnectedSum { gluing: Some(_), .. }));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse("vc(simplex(2)").unwrap_err();
        assert!(matches!(err, Error::Parse { position: 13, .. }), "{err:?}");
        let err = parse("frustum(2)").unwrap_err();
        assert!(matches!(err, Error::Parse { position: 0, .. }));
        let err = parse("cube(3) extra").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "vc(product(simplex(2),simplex(1)))",
            "truncate(cube(3),[0,1,2])",
            "consum(cube(3),0,cube(3),0,[1,0,2])",
            "vc(cube(3),4)",
            "dodecahedron",
        ] {
            let expr = parse(text).unwrap();
            assert_eq!(parse(&expr.to_string()).unwrap(), expr);
        }
    }

    #[test]
    fn build_examples() {
        let cube = build(&parse("cube(3)").unwrap()).unwrap();
        let chain = build(&parse("product(product(simplex(1),simplex(1)),simplex(1))").unwrap())
            .unwrap();
        assert!(are_isomorphic(cube.complex(), chain.complex()).is_some());

        let q = build(&parse("truncate(product(polygon(5),simplex(1)),[0,5])").unwrap()).unwrap();
        assert_eq!(q.m(), 8);
    }
}
