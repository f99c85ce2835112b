//! Canonical text form of polynomials and its parser.
//!
//! Top-level terms are separated by ` + ` / ` - `; compound coefficients are
//! parenthesised, e.g. `(c1-1)*z^3 - c1*zb^3`.

use super::{CPoly, CoeffText, MPoly, Mono, ParamRing, Rat, Ring, Vars};
use crate::error::{AlgebraError, Result};

/// Sign and body of `coeff * mono`.
pub fn format_term(coeff: &CoeffText, mono: &str) -> (bool, String) {
    match coeff {
        CoeffText::Atom { negative, magnitude } => {
            let body = if mono.is_empty() {
                magnitude.clone()
            } else if magnitude == "1" {
                mono.to_string()
            } else {
                format!("{magnitude}*{mono}")
            };
            (*negative, body)
        }
        CoeffText::Compound(s) => {
            let body = if mono.is_empty() { format!("({s})") } else { format!("({s})*{mono}") };
            (false, body)
        }
    }
}

pub fn join_terms(parts: &[(bool, String)], spaced: bool) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        match (i, neg, spaced) {
            (0, true, _) => s.push('-'),
            (0, false, _) => {}
            (_, true, true) => s.push_str(" - "),
            (_, false, true) => s.push_str(" + "),
            (_, true, false) => s.push('-'),
            (_, false, false) => s.push('+'),
        }
        s.push_str(body);
    }
    s
}

pub fn monomial_text(vars: &[String], m: &Mono) -> String {
    let mut parts = Vec::new();
    for (name, &k) in vars.iter().zip(&m.0) {
        match k {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

pub fn render<R: Ring>(p: &MPoly<R>) -> String {
    let parts: Vec<(bool, String)> = p
        .terms()
        .map(|(m, c)| format_term(&c.text(), &monomial_text(p.vars(), m)))
        .collect();
    join_terms(&parts, true)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let ch = cs[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Int(cs[st..i].iter().collect()));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Sym(ch));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
}

type P = MPoly<CPoly>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat('/') {
                let d = self.factor()?;
                let k = d
                    .terms()
                    .next()
                    .filter(|(m, _)| d.num_terms() == 1 && m.degree() == 0)
                    .and_then(|(_, c)| c.constant_value())
                    .ok_or_else(|| AlgebraError::Parse("division by a non-constant".into()))?;
                if k.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                acc = acc.scale(&CPoly::constant(k.recip()));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<P> {
        let base = self.primary()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(s)) => {
                    self.pos += 1;
                    let e: u32 = s.parse().map_err(|_| AlgebraError::Parse("bad exponent".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(AlgebraError::Parse("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<P> {
        let tok = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| AlgebraError::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Int(s) => Ok(P::constant(self.vars, CPoly::constant(s.parse::<Rat>()?))),
            Tok::Ident(name) => {
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    return Ok(P::var(self.vars, i));
                }
                match name.as_str() {
                    "c" | "c1" => Ok(P::constant(self.vars, CPoly::param(0))),
                    "c2" => Ok(P::constant(self.vars, CPoly::param(1))),
                    _ => Err(AlgebraError::Parse(format!("unknown symbol {name:?}"))),
                }
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(AlgebraError::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Tok::Sym('-') => Ok(self.primary()?.neg()),
            Tok::Sym(c) => Err(AlgebraError::Parse(format!("unexpected {c:?}"))),
        }
    }
}

/// Parses text over ℚ[c₁, c₂] in the given variables (`c` is accepted for `c1`).
pub fn parse_cpoly(s: &str, vars: &Vars) -> Result<MPoly<CPoly>> {
    let mut p = Parser { toks: lex(s)?, pos: 0, vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(AlgebraError::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

/// Parses text with rational coefficients; parameters are rejected.
pub fn parse_rat(s: &str, vars: &Vars) -> Result<MPoly<Rat>> {
    parse_cpoly(s, vars)?.try_map_coeffs(|c| {
        c.constant_value()
            .ok_or_else(|| AlgebraError::Parse(format!("parameter in rational polynomial: {c}")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::mpoly::vars;

    #[test]
    fn renders_canonical_example() {
        let v = vars(&["z", "zb"]);
        let c = CPoly::param(0);
        let p = MPoly::from_terms(
            &v,
            [
                (Mono(vec![3, 0]), c.sub(&CPoly::one())),
                (Mono(vec![0, 3]), c.neg()),
            ],
        );
        assert_eq!(render(&p), "(c1-1)*z^3 - c1*zb^3");
        assert_eq!(parse_cpoly(&render(&p), &v).unwrap(), p);
        let zzb = MPoly::<Rat>::monomial(&v, Mono(vec![1, 1]), Rat::one());
        assert_eq!(render(&zzb), "z*zb");
    }

    #[test]
    fn parses_fractions_and_powers() {
        let v = vars(&["x", "y"]);
        let p = parse_rat("-3/2*x^2*y + (x - y)^2 - 1", &v).unwrap();
        assert_eq!(render(&p), "-3/2*x^2*y + x^2 - 2*x*y + y^2 - 1");
        assert!(parse_rat("c*x", &v).is_err());
        assert!(parse_rat("x/y", &v).is_err());
    }
}
