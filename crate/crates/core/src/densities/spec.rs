//! Text grammar for laws:
//!
//! ```text
//! law   := exp(b=N) | unif(tau=N) | ig(mu=N,b=N) | levy([mu=N,]b=N) | trunc(law,tau=N)
//! ```
//!
//! Keyword arguments may appear in any order; whitespace is ignored between
//! tokens. A truncated law cannot wrap another truncated law.

use super::{Exponential, InverseGaussian, Law, Levy, Truncated, Uniform};
use crate::error::ParseError;
use crate::{Error, Result};

/// Parses a law from its text spec, e.g. `trunc(levy(mu=0,b=1),tau=2)`.
pub fn parse_law(text: &str) -> Result<Law> {
    let mut p = Parser { src: text, pos: 0 };
    let law = p.law(true)?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(law)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse(ParseError::new(msg, self.pos))
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a name"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| !(c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-')))
            .unwrap_or(rest.len());
        let v: f64 = rest[..len].parse().map_err(|_| self.error("expected a number"))?;
        if !v.is_finite() {
            return Err(self.error("number out of range"));
        }
        self.pos += len;
        Ok(v)
    }

    /// `key=value` pairs up to the closing parenthesis.
    fn kwargs(&mut self, allowed: &[&str]) -> Result<Vec<(String, f64)>> {
        let mut out: Vec<(String, f64)> = Vec::new();
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            let key = self.ident()?;
            if !allowed.contains(&key) {
                return Err(Error::Parse(ParseError::new(format!("unknown argument '{key}'"), at)));
            }
            if out.iter().any(|(k, _)| k == key) {
                return Err(Error::Parse(ParseError::new(format!("duplicate argument '{key}'"), at)));
            }
            self.expect('=')?;
            out.push((key.to_string(), self.number()?));
            self.skip_ws();
            if self.rest().starts_with(',') {
                self.pos += 1;
                continue;
            }
            self.expect(')')?;
            return Ok(out);
        }
    }

    fn law(&mut self, allow_trunc: bool) -> Result<Law> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        self.expect('(')?;
        let at = |e: Error| match e {
            Error::InvalidParameter(m) => Error::Parse(ParseError::new(m, start)),
            other => other,
        };
        let law: Law = match name {
            "exp" => {
                let a = self.kwargs(&["b"])?;
                Exponential::new(required(&a, "b", start)?).map_err(at)?.into()
            }
            "unif" => {
                let a = self.kwargs(&["tau"])?;
                Uniform::new(required(&a, "tau", start)?).map_err(at)?.into()
            }
            "ig" => {
                let a = self.kwargs(&["mu", "b"])?;
                InverseGaussian::new(required(&a, "mu", start)?, required(&a, "b", start)?).map_err(at)?.into()
            }
            "levy" => {
                let a = self.kwargs(&["mu", "b"])?;
                let mu = lookup(&a, "mu").unwrap_or(0.0);
                Levy::new(mu, required(&a, "b", start)?).map_err(at)?.into()
            }
            "trunc" if allow_trunc => {
                let base = self.law(false)?;
                self.expect(',')?;
                let a = self.kwargs(&["tau"])?;
                Truncated::new(base, required(&a, "tau", start)?).map_err(at)?.into()
            }
            "trunc" => return Err(Error::Parse(ParseError::new("nested truncation", start))),
            other => {
                return Err(Error::Parse(ParseError::new(format!("unknown law '{other}'"), start)));
            }
        };
        Ok(law)
    }
}

fn lookup(args: &[(String, f64)], key: &str) -> Option<f64> {
    args.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
}

fn required(args: &[(String, f64)], key: &str, at: usize) -> Result<f64> {
    lookup(args, key).ok_or_else(|| Error::Parse(ParseError::new(format!("missing argument '{key}'"), at)))
}
