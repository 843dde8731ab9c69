//! Presentation files.
//!
//! ```text
//! file      := { statement }
//! statement := "name" ident ";" | "prime" int ";" | "class" int ";"
//!            | "generators" ident { "," ident } ";"
//!            | "relators" [ relator { "," relator } ] ";"
//! relator   := product [ "=" product ]
//! product   := factor { "*" factor }
//! factor    := atom [ "^" [ "-" ] int ]
//! atom      := ident | "[" product { "," product } "]" | "(" product ")"
//! ```
//!
//! Brackets are left-normed commutators. `#` starts a comment.

use std::fmt;

use pgroup_core::{FpPresentation, FreeWord};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Expr {
    Gen(String),
    Power(Box<Expr>, i64),
    Product(Vec<Expr>),
    Comm(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relator {
    pub lhs: Expr,
    /// Right-hand side of a relation `lhs = rhs`.
    pub rhs: Option<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub name: String,
    pub prime: u32,
    pub class_cap: Option<u32>,
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, k) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_') {
                s.push(bump(&mut chars));
            }
            out.push(Token { tok: Tok::Ident(s), line: l, col: k });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(bump(&mut chars));
            }
            let n = s.parse().map_err(|_| ParseError {
                line: l,
                col: k,
                message: format!("integer {s} is too large"),
            })?;
            out.push(Token { tok: Tok::Int(n), line: l, col: k });
        } else if "^*,[]()=;-".contains(c) {
            bump(&mut chars);
            out.push(Token { tok: Tok::Sym(c), line: l, col: k });
        } else {
            return Err(ParseError {
                line: l,
                col: k,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    generators: Option<Vec<String>>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let t = &self.toks[self.pos];
        Err(ParseError {
            line: t.line,
            col: t.col,
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}', found {}", self.peek()))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.pos += 1;
                Ok(s)
            }
            t => self.error(format!("expected a name, found {t}")),
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(n)
            }
            ref t => self.error(format!("expected an integer, found {t}")),
        }
    }

    fn file(&mut self) -> Result<PresentationFile, ParseError> {
        let mut name = None;
        let mut prime = None;
        let mut class_cap = None;
        let mut relators = None;
        while *self.peek() != Tok::End {
            let keyword = self.ident()?;
            let duplicate = match keyword.as_str() {
                "name" => name.replace(self.ident()?).is_some(),
                "prime" => {
                    let p = self.int()?;
                    prime.replace(u32::try_from(p).unwrap_or(u32::MAX)).is_some()
                }
                "class" => {
                    let c = self.int()?;
                    class_cap.replace(u32::try_from(c).unwrap_or(u32::MAX)).is_some()
                }
                "generators" => {
                    let mut gens = vec![self.ident()?];
                    while self.eat(',') {
                        let g = self.ident()?;
                        if gens.contains(&g) {
                            self.pos -= 1;
                            return self.error(format!("generator {g} declared twice"));
                        }
                        gens.push(g);
                    }
                    self.generators.replace(gens).is_some()
                }
                "relators" => {
                    if self.generators.is_none() {
                        return self.error("relators must follow the generators statement");
                    }
                    let mut rels = Vec::new();
                    if *self.peek() != Tok::Sym(';') {
                        rels.push(self.relator()?);
                        while self.eat(',') {
                            rels.push(self.relator()?);
                        }
                    }
                    relators.replace(rels).is_some()
                }
                other => {
                    self.pos -= 1;
                    return self.error(format!("unknown statement '{other}'"));
                }
            };
            if duplicate {
                self.pos -= 1;
                return self.error(format!("'{keyword}' given twice"));
            }
            self.expect(';')?;
        }
        let Some(prime) = prime else {
            return self.error("missing 'prime' statement");
        };
        let Some(generators) = self.generators.take() else {
            return self.error("missing 'generators' statement");
        };
        Ok(PresentationFile {
            name: name.unwrap_or_else(|| "unnamed".into()),
            prime,
            class_cap,
            generators,
            relators: relators.unwrap_or_default(),
        })
    }

    fn relator(&mut self) -> Result<Relator, ParseError> {
        let lhs = self.product()?;
        let rhs = if self.eat('=') { Some(self.product()?) } else { None };
        Ok(Relator { lhs, rhs })
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.atom()?;
        if !self.eat('^') {
            return Ok(atom);
        }
        let negative = self.eat('-');
        let at = self.pos;
        let n = self.int()?;
        if n == 0 {
            self.pos = at;
            return self.error("zero exponent");
        }
        let Ok(n) = i64::try_from(n) else {
            self.pos = at;
            return self.error("exponent is too large");
        };
        Ok(Expr::Power(Box::new(atom), if negative { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let known = self.generators.as_ref().is_some_and(|g| g.contains(&name));
                if !known {
                    return self.error(format!("unknown generator '{name}'"));
                }
                self.pos += 1;
                Ok(Expr::Gen(name))
            }
            Tok::Sym('[') => {
                self.pos += 1;
                let mut args = vec![self.product()?];
                while self.eat(',') {
                    args.push(self.product()?);
                }
                if args.len() < 2 {
                    return self.error("a commutator needs at least two entries");
                }
                self.expect(']')?;
                Ok(Expr::Comm(args))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.product()?;
                self.expect(')')?;
                Ok(inner)
            }
            t => self.error(format!("expected a generator, '[' or '(', found {t}")),
        }
    }
}

pub fn parse_presentation(text: &str) -> Result<PresentationFile, ParseError> {
    let toks = lex(text)?;
    Parser {
        toks,
        pos: 0,
        generators: None,
    }
    .file()
}

impl Expr {
    pub fn to_word(&self, generators: &[String]) -> FreeWord {
        match self {
            Expr::Gen(g) => FreeWord::gen(
                generators
                    .iter()
                    .position(|x| x == g)
                    .expect("names are resolved by the parser"),
            ),
            Expr::Power(base, k) => base.to_word(generators).pow(*k),
            Expr::Product(fs) => fs
                .iter()
                .fold(FreeWord::identity(), |acc, f| acc.mul(f.to_word(generators))),
            Expr::Comm(args) => FreeWord::comm(args.iter().map(|a| a.to_word(generators)).collect()),
        }
    }
}

impl PresentationFile {
    pub fn to_fp(&self) -> pgroup_core::Result<FpPresentation> {
        let mut relators = Vec::new();
        let mut relations = Vec::new();
        for r in &self.relators {
            let lhs = r.lhs.to_word(&self.generators);
            match &r.rhs {
                None => relators.push(lhs),
                Some(rhs) => relations.push((lhs, rhs.to_word(&self.generators))),
            }
        }
        FpPresentation::new(self.prime, self.generators.clone(), relators, relations)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::Power(base, k) => match **base {
                Expr::Gen(_) | Expr::Comm(_) => write!(f, "{base}^{k}"),
                _ => write!(f, "({base})^{k}"),
            },
            Expr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    match x {
                        Expr::Product(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            Expr::Comm(args) => {
                write!(f, "[")?;
                for (i, x) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rhs {
            None => write!(f, "{}", self.lhs),
            Some(rhs) => write!(f, "{} = {}", self.lhs, rhs),
        }
    }
}

/// Canonical text of a presentation file.
pub fn format_presentation(file: &PresentationFile) -> String {
    let mut out = format!("name {};\nprime {};\n", file.name, file.prime);
    if let Some(c) = file.class_cap {
        out.push_str(&format!("class {c};\n"));
    }
    out.push_str(&format!("generators {};\n", file.generators.join(", ")));
    if !file.relators.is_empty() {
        out.push_str("relators\n");
        for (i, r) in file.relators.iter().enumerate() {
            let sep = if i + 1 == file.relators.len() { ";" } else { "," };
            out.push_str(&format!("  {r}{sep}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_one(rel: &str) -> Relator {
        let text = format!("prime 5; generators a, b, u1; relators {rel};");
        parse_presentation(&text).unwrap().relators.remove(0)
    }

    #[test]
    fn shapes() {
        assert_eq!(
            parse_one("a^5").lhs,
            Expr::Power(Box::new(Expr::Gen("a".into())), 5)
        );
        let r = parse_one("[b,a,a,a,b]*[a,u1]");
        let Expr::Product(fs) = r.lhs else { panic!() };
        assert!(matches!(&fs[0], Expr::Comm(args) if args.len() == 5));
        assert!(matches!(&fs[1], Expr::Comm(args) if args.len() == 2));
        let r = parse_one("[b,a]^5 = [b,a,a,a,b]");
        assert!(matches!(r.lhs, Expr::Power(_, 5)));
        assert!(matches!(r.rhs, Some(Expr::Comm(_))));
        assert!(matches!(parse_one("(a*b)^-2").lhs, Expr::Power(_, -2)));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_presentation("prime 5;\ngenerators a;\nrelators a^0;").unwrap_err();
        assert_eq!((e.line, e.col), (3, 12));
        assert!(e.message.contains("zero exponent"));
        let e = parse_presentation("prime 5; generators a;\nrelators [a, c];").unwrap_err();
        assert_eq!((e.line, e.col), (2, 14));
        assert!(e.message.contains("unknown generator"));
        let e = parse_presentation("prime 5; generators a; relators [a];").unwrap_err();
        assert!(e.message.contains("two entries"));
        let e = parse_presentation("prime 5; generators a, a;").unwrap_err();
        assert!(e.message.contains("twice"));
        let e = parse_presentation("generators a;").unwrap_err();
        assert!(e.message.contains("prime"));
        let e = parse_presentation("prime 5; generators a; relators a*;").unwrap_err();
        assert_eq!((e.line, e.col), (1, 35));
        assert!(e.message.contains("found ';'"));
        let e = parse_presentation("prime 5; generators a; relators a*").unwrap_err();
        assert!(e.message.contains("end of input"));
        let e = parse_presentation("prime 5; generators a; relators a$;").unwrap_err();
        assert_eq!((e.line, e.col), (1, 34));
    }

    #[test]
    fn words_are_left_normed() {
        let file = parse_presentation("prime 3; generators a, b; relators [b,a,a], (a*b)^2;").unwrap();
        let fp = file.to_fp().unwrap();
        assert_eq!(fp.relators[0], FreeWord::comm_of_gens(&[1, 0, 0]));
        assert_eq!(fp.relators[1], FreeWord::gen(0).mul(FreeWord::gen(1)).pow(2));
    }

    #[test]
    fn nested_products_round_trip() {
        let text = "prime 3; generators a, b; relators (a*b)*a, ((a*b)^2)^-1, [a*b, (b^2)^2];";
        let file = parse_presentation(text).unwrap();
        assert_eq!(parse_presentation(&format_presentation(&file)).unwrap(), file);
    }
}
