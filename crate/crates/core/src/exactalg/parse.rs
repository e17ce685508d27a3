use num_bigint::BigInt;

use super::field::{FieldSpec, Rat};
use super::{ExactError, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ExactError> {
    let mut out = vec![];
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            out.push(Tok::Int(txt.parse().unwrap()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(ExactError::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a FieldSpec,
}

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

    fn expr(&mut self) -> Result<Scalar, ExactError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ExactError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                acc = acc.checked_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ExactError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ExactError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.toks.get(self.pos) {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| ExactError::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    e
                }
                _ => return Err(ExactError::Parse("expected integer exponent".into())),
            };
            let r = base.pow(e);
            return if neg { r.inv() } else { Ok(r) };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ExactError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Scalar::from_rat(self.field, &Rat::from_integer(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Scalar::variable(self.field, &name)
                    .ok_or_else(|| ExactError::Parse(format!("unknown symbol {name} in {}", self.field)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(ExactError::Parse("missing )".into()));
                }
                Ok(v)
            }
            other => Err(ExactError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(crate) fn parse_scalar(field: &FieldSpec, text: &str) -> Result<Scalar, ExactError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ExactError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, field };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ExactError::Parse(format!("trailing input in {text:?}")));
    }
    Ok(v)
}

/// Parse a field description as printed by `FieldSpec`'s `Display`.
pub fn parse_field(text: &str) -> Result<FieldSpec, ExactError> {
    let t = text.trim();
    if let Some(p) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let p: u64 = p.trim().parse().map_err(|_| ExactError::Parse(format!("bad prime in {t}")))?;
        return FieldSpec::prime_field(p);
    }
    if t == "Q" {
        return Ok(FieldSpec::rationals());
    }
    // peel the outermost bracket group from the right
    if let Some(stripped) = t.strip_suffix(']') {
        let open = matching_open(stripped, '[', ']')?;
        let base = parse_field(&stripped[..open])?;
        let vars: Vec<&str> = stripped[open + 1..].split(',').map(|s| s.trim()).collect();
        return Ok(FieldSpec::poly_ring(&base, &vars));
    }
    if let Some(stripped) = t.strip_suffix(')') {
        let open = matching_open(stripped, '(', ')')?;
        let head = &stripped[..open];
        let inner = stripped[open + 1..].trim();
        if head == "Q" {
            if let Some(n) = inner.strip_prefix('z').and_then(|s| s.parse::<u32>().ok()) {
                return Ok(FieldSpec::cyclotomic(n));
            }
            return Err(ExactError::Parse(format!("unknown number field {t}")));
        }
        if let Some(h) = head.strip_suffix('/') {
            // Q[a]/(modulus)
            let h = h.trim();
            let name = h
                .strip_prefix("Q[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| ExactError::Parse(format!("bad number field {t}")))?;
            let ring = FieldSpec::poly_ring(&FieldSpec::rationals(), &[name]);
            let m = parse_scalar(&ring, inner)?;
            let terms = m.poly_terms().unwrap();
            let deg = terms.iter().map(|(k, _)| k[0]).max().unwrap_or(0) as usize;
            let mut modulus = vec![Rat::from_integer(0.into()); deg + 1];
            for (k, c) in terms {
                modulus[k[0] as usize] = c.to_rational().unwrap();
            }
            return FieldSpec::number_field(name, modulus);
        }
        let base = parse_field(head)?;
        return FieldSpec::rational_functions(&base, inner);
    }
    Err(ExactError::Parse(format!("unrecognised field {t}")))
}

fn matching_open(s: &str, open: char, close: char) -> Result<usize, ExactError> {
    let mut depth = 1i32;
    for (i, c) in s.char_indices().rev() {
        if c == close {
            depth += 1;
        } else if c == open {
            depth -= 1;
            if depth == 0 {
                return Ok(i);
            }
        }
    }
    Err(ExactError::Parse(format!("unbalanced {open} in {s}")))
}
