//! Words over named generators: `*` for composition, `^` for integer powers,
//! parentheses for grouping, and the literal `-1`. Whitespace insignificant.
//!
//! Examples: `a*f^2*a^-1`, `(a*f)^2`, `i*j`, `-1`.

use crate::error::Error;
use crate::group::{FiniteGroup, GroupElem};
use crate::Result;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Star,
    Caret,
    Int(i64),
    Open,
    Close,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                if c == '-' {
                    i += 1;
                    // "-j" and friends are names in their own right
                    if i < chars.len() && chars[i].is_ascii_alphabetic() {
                        while i < chars.len()
                            && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                        {
                            i += 1;
                        }
                        out.push(Token::Name(chars[start..i].iter().collect()));
                        continue;
                    }
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n: i64 = text
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {text:?}")))?;
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Name(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a HashMap<String, GroupElem>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := factor (('*')? factor)*  — juxtaposition also composes
    fn expr(&mut self) -> Result<GroupElem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs)?;
                }
                Some(Token::Name(_)) | Some(Token::Open) | Some(Token::Int(_)) => {
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // factor := atom ('^' int)?
    fn factor(&mut self) -> Result<GroupElem> {
        let atom = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Token::Int(e)) => power(&atom, e),
                other => Err(Error::Parse(format!("expected exponent, got {other:?}"))),
            }
        } else {
            Ok(atom)
        }
    }

    // atom := name | '(' expr ')' | '1' | '-1'
    fn atom(&mut self) -> Result<GroupElem> {
        match self.next() {
            Some(Token::Name(n)) => self
                .names
                .get(&n)
                .cloned()
                .ok_or(Error::UnknownName(n)),
            Some(Token::Open) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(e),
                    other => Err(Error::Parse(format!("expected ')', got {other:?}"))),
                }
            }
            Some(Token::Int(1)) => self
                .names
                .get("1")
                .cloned()
                .ok_or_else(|| Error::UnknownName("1".into())),
            Some(Token::Int(-1)) => self
                .names
                .get("-1")
                .cloned()
                .ok_or_else(|| Error::UnknownName("-1".into())),
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn power(e: &GroupElem, exp: i64) -> Result<GroupElem> {
    let mut base = if exp < 0 { e.inv()? } else { e.clone() };
    let mut n = exp.unsigned_abs();
    let mut acc = e.identity_like();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.mul(&base)?;
        }
        base = base.mul(&base)?;
        n >>= 1;
    }
    Ok(acc)
}

/// Evaluate a word against a name → element map.
pub fn eval(input: &str, names: &HashMap<String, GroupElem>) -> Result<GroupElem> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        names,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing tokens after position {}",
            p.pos
        )));
    }
    Ok(e)
}

/// Evaluate a word inside a group, resolving names through the group's
/// generator map; returns the element index.
pub fn eval_in_group(
    input: &str,
    group: &FiniteGroup,
    names: &HashMap<String, GroupElem>,
) -> Result<usize> {
    let e = eval(input, names)?;
    group
        .index_of(&e)
        .ok_or_else(|| Error::InvalidArgument(format!("{input:?} is not in {}", group.name)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{constants, Quaternion};

    fn names() -> HashMap<String, GroupElem> {
        let mut m = HashMap::new();
        m.insert("1".into(), GroupElem::Quat(Quaternion::one()));
        m.insert("-1".into(), GroupElem::Quat(Quaternion::one().neg()));
        m.insert("i".into(), GroupElem::Quat(Quaternion::i()));
        m.insert("j".into(), GroupElem::Quat(Quaternion::j()));
        m.insert("k".into(), GroupElem::Quat(Quaternion::k()));
        m.insert("a".into(), GroupElem::Quat(constants::a()));
        m.insert("f".into(), GroupElem::Quat(constants::f()));
        m.insert("t".into(), GroupElem::Quat(constants::t()));
        m
    }

    #[test]
    fn words() {
        let n = names();
        assert_eq!(
            eval("i*j", &n).unwrap(),
            GroupElem::Quat(Quaternion::k())
        );
        assert_eq!(
            eval("t^5", &n).unwrap(),
            GroupElem::Quat(Quaternion::one().neg())
        );
        assert_eq!(
            eval("(a*f)^2", &n).unwrap(),
            eval("a^3", &n).unwrap()
        );
        assert_eq!(eval("a*f^2*a^-1", &n).unwrap(), {
            let a = constants::a();
            let f2 = constants::f().pow(2).unwrap();
            GroupElem::Quat(a.mul(&f2).mul(&a.inv().unwrap()))
        });
        assert_eq!(eval("-1", &n).unwrap(), GroupElem::Quat(Quaternion::one().neg()));
        assert!(eval("q*w", &n).is_err());
        assert!(eval("", &n).is_err());
    }
}
