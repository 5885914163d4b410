//! Textual group specifications.
//!
//! ```text
//! spec := atom ( "x" atom )*
//! atom := "C"n | "D"n | "S"n | "Q8" | "ES("p",+)" | "ES("p",-)"
//!       | "AGL1("p")" | "wr(" spec "," n ")"
//! ```
//!
//! Whitespace is ignored. `D`n is the dihedral group of order `2n`.

use std::fmt;

use crate::constructions::{self, ExtraspecialType};
use crate::error::{GroupError, Result};
use crate::group::{Group, OrderGuard};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion8,
    Extraspecial(u64, ExtraspecialType),
    Affine(u64),
    Wreath(Box<SpecExpr>, usize),
}

/// A parsed spec: a direct product of one or more atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecExpr(pub Vec<Atom>);

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Quaternion8 => write!(f, "Q8"),
            Atom::Extraspecial(p, ExtraspecialType::Plus) => write!(f, "ES({p},+)"),
            Atom::Extraspecial(p, ExtraspecialType::Minus) => write!(f, "ES({p},-)"),
            Atom::Affine(p) => write!(f, "AGL1({p})"),
            Atom::Wreath(inner, n) => write!(f, "wr({inner},{n})"),
        }
    }
}

impl fmt::Display for SpecExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            src,
        }
    }

    /// Byte offset in the original text of the current token.
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(GroupError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(format!("expected `{c}`, found `{x}`")),
            None => self.err(format!("expected `{c}`, found end of input")),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d as usize)) {
                Some(v) => v,
                None => return self.err("number too large"),
            };
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        if value == 0 {
            self.pos = start;
            return self.err("parameter must be positive");
        }
        Ok(value)
    }

    fn spec(&mut self) -> Result<SpecExpr> {
        let mut atoms = vec![self.atom()?];
        while self.peek() == Some('x') {
            self.pos += 1;
            atoms.push(self.atom()?);
        }
        Ok(SpecExpr(atoms))
    }

    fn word(&mut self) -> String {
        let mut w = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphabetic()) {
            w.push(c);
            self.pos += 1;
        }
        w
    }

    fn unknown(&mut self, start: usize) -> GroupError {
        // swallow the rest of the token for the message
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let token: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        GroupError::UnknownAtom(token)
    }

    fn atom(&mut self) -> Result<Atom> {
        let start = self.pos;
        if self.peek().is_none() {
            return self.err("expected a group atom, found end of input");
        }
        let word = self.word();
        let atom = match word.as_str() {
            "C" => Atom::Cyclic(self.number()?),
            "D" => Atom::Dihedral(self.number()?),
            "S" => Atom::Symmetric(self.number()?),
            "Q" => {
                let n = self.number()?;
                if n != 8 {
                    self.pos = start;
                    return Err(self.unknown(start));
                }
                Atom::Quaternion8
            }
            "ES" => {
                self.expect('(')?;
                let p = self.number()? as u64;
                self.expect(',')?;
                let kind = match self.peek() {
                    Some('+') => ExtraspecialType::Plus,
                    Some('-') => ExtraspecialType::Minus,
                    _ => return self.err("expected `+` or `-`"),
                };
                self.pos += 1;
                self.expect(')')?;
                Atom::Extraspecial(p, kind)
            }
            "AGL" => {
                if self.number()? != 1 {
                    return Err(self.unknown(start));
                }
                self.expect('(')?;
                let p = self.number()? as u64;
                self.expect(')')?;
                Atom::Affine(p)
            }
            "wr" => {
                self.expect('(')?;
                let inner = self.spec()?;
                self.expect(',')?;
                let n = self.number()?;
                self.expect(')')?;
                Atom::Wreath(Box::new(inner), n)
            }
            "" => return self.err(format!("expected a group atom, found `{}`", self.peek().unwrap())),
            _ => {
                self.pos = start;
                return Err(self.unknown(start));
            }
        };
        Ok(atom)
    }
}

impl SpecExpr {
    pub fn parse(text: &str) -> Result<SpecExpr> {
        let mut p = Parser::new(text);
        let spec = p.spec()?;
        if let Some(c) = p.peek() {
            return p.err(format!("unexpected trailing `{c}`"));
        }
        Ok(spec)
    }

    pub fn build(&self, guard: OrderGuard) -> Result<Group> {
        let mut groups = self.0.iter().map(|a| a.build(guard));
        let mut acc = groups.next().expect("spec has at least one atom")?;
        for g in groups {
            acc = constructions::direct_product(&acc, &g?, guard)?;
        }
        Ok(acc.with_name(self.to_string()))
    }
}

impl Atom {
    pub fn build(&self, guard: OrderGuard) -> Result<Group> {
        let g = match self {
            Atom::Cyclic(n) => constructions::cyclic(*n, guard)?,
            Atom::Dihedral(n) => constructions::dihedral(*n, guard)?,
            Atom::Symmetric(n) => constructions::symmetric(*n, guard)?,
            Atom::Quaternion8 => {
                guard.check(8)?;
                constructions::quaternion8()
            }
            Atom::Extraspecial(p, kind) => constructions::extraspecial(*p, *kind, guard)?,
            Atom::Affine(p) => constructions::affine_prime(*p, guard)?,
            Atom::Wreath(inner, n) => constructions::wreath_cyclic(&inner.build(guard)?, *n, guard)?,
        };
        Ok(g.with_name(self.to_string()))
    }
}

/// A spec string in normalized form together with the group it denotes.
#[derive(Debug)]
pub struct GroupSpec {
    pub expression: String,
    pub group: Group,
}

impl GroupSpec {
    pub fn parse(text: &str, guard: OrderGuard) -> Result<GroupSpec> {
        let expr = SpecExpr::parse(text)?;
        let group = expr.build(guard)?;
        Ok(GroupSpec {
            expression: expr.to_string(),
            group,
        })
    }

    /// Wraps an already-built group (e.g. one read from a generator file).
    pub fn from_group(group: Group) -> GroupSpec {
        GroupSpec {
            expression: group.name().to_string(),
            group,
        }
    }
}

/// Parses with the default order guard.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    GroupSpec::parse(text, OrderGuard::default())
}
