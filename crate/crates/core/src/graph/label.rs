use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::Element;

/// Vertex label. Ring elements keep their value, line-graph vertices keep
/// both endpoint labels, so provenance survives any chain of transforms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// An element of `Z_n`, or a plain vertex number.
    Int(u64),
    /// `re + im·i` in `Z_n[i]`.
    Gaussian { re: u64, im: u64 },
    /// An element of a direct product.
    Tuple(Vec<Label>),
    /// A line-graph vertex: the edge between two labelled vertices.
    Edge(Box<Label>, Box<Label>),
}

impl Label {
    pub fn edge(a: Label, b: Label) -> Label {
        Label::Edge(Box::new(a), Box::new(b))
    }
}

impl From<&Element> for Label {
    fn from(e: &Element) -> Self {
        match e {
            Element::Zn { value, .. } => Label::Int(*value),
            Element::Gaussian(g) => Label::Gaussian { re: g.re(), im: g.im() },
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Gaussian { re, im } => write!(f, "{re}+{im}i"),
            Label::Tuple(items) => {
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, ")")
            }
            Label::Edge(a, b) => write!(f, "{{{a},{b}}}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { bytes: s.as_bytes(), pos: 0 };
        let label = p.label()?;
        if p.pos != p.bytes.len() {
            return Err(p.error("trailing input"));
        }
        Ok(label)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("label `{}`: {what} at byte {}", String::from_utf8_lossy(self.bytes), self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected a number"))
    }

    fn label(&mut self) -> Result<Label> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let mut items = vec![self.label()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    items.push(self.label()?);
                }
                self.expect(b')')?;
                Ok(Label::Tuple(items))
            }
            Some(b'{') => {
                self.pos += 1;
                let a = self.label()?;
                self.expect(b',')?;
                let b = self.label()?;
                self.expect(b'}')?;
                Ok(Label::edge(a, b))
            }
            _ => {
                let re = self.number()?;
                if self.peek() == Some(b'+') {
                    self.pos += 1;
                    let im = self.number()?;
                    self.expect(b'i')?;
                    Ok(Label::Gaussian { re, im })
                } else {
                    Ok(Label::Int(re))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let l = Label::edge(
            Label::Gaussian { re: 2, im: 0 },
            Label::Tuple(vec![Label::Int(1), Label::edge(Label::Int(3), Label::Int(4))]),
        );
        let s = l.to_string();
        assert_eq!(s, "{2+0i,(1,{3,4})}");
        assert_eq!(s.parse::<Label>().unwrap(), l);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "1+", "1+2", "(1,2", "{1}", "x", "12 "] {
            assert!(bad.parse::<Label>().is_err(), "{bad:?}");
        }
    }
}
