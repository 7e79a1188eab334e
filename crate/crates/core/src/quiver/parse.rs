//! The line-oriented presentation format.
//!
//! ```text
//! field Q
//! vertices 1 2 3 4
//! arrow a : 1 -> 2
//! arrow b : 2 -> 4
//! relations
//!   b*a - 2 d*c
//! end
//! cap 16
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Arrow, Path, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| is_ident_char(c) || c == '-' || c == '.')
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut field: Option<FieldSpec> = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    let mut cap: Option<usize> = None;
    let mut in_relations = false;
    let mut relations_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len() + 1;
        if in_relations {
            if trimmed == "end" {
                in_relations = false;
            } else {
                relation_lines.push((lineno, line.to_string()));
            }
            continue;
        }
        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(k) => (&trimmed[..k], trimmed[k..].trim()),
            None => (trimmed, ""),
        };
        let rest_col = indent + (trimmed.len() - rest.len());
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(syntax(lineno, indent, "duplicate field declaration"));
                }
                field = Some(rest.parse()?);
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(lineno, indent, "duplicate vertices declaration"));
                }
                let mut vs: Vec<String> = Vec::new();
                for v in rest.split_whitespace() {
                    if !is_label(v) {
                        return Err(syntax(lineno, rest_col, format!("invalid vertex label {v:?}")));
                    }
                    if vs.iter().any(|w| w == v) {
                        return Err(syntax(lineno, rest_col, format!("duplicate vertex {v}")));
                    }
                    vs.push(v.to_string());
                }
                vertices = Some(vs);
            }
            "arrow" => {
                let vs = vertices
                    .as_ref()
                    .ok_or_else(|| syntax(lineno, indent, "arrow declared before vertices"))?;
                let (label, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(lineno, rest_col, "expected `arrow <label> : <source> -> <target>`"))?;
                let label = label.trim();
                if label.is_empty()
                    || !label.starts_with(is_ident_start)
                    || !label.chars().all(is_ident_char)
                {
                    return Err(syntax(lineno, rest_col, format!("invalid arrow label {label:?}")));
                }
                if label.starts_with("e_") {
                    return Err(syntax(lineno, rest_col, "arrow labels may not start with `e_`"));
                }
                if arrows.iter().any(|a| a.label == label) {
                    return Err(syntax(lineno, rest_col, format!("duplicate arrow {label}")));
                }
                let (s, t) = ends.split_once("->").ok_or_else(|| {
                    syntax(lineno, rest_col + rest.find(':').unwrap_or(0) + 1, "expected `->`")
                })?;
                let (s, t) = (s.trim(), t.trim());
                let find = |v: &str| {
                    vs.iter()
                        .position(|w| w == v)
                        .ok_or_else(|| Error::UnknownVertex(format!("{v} (line {lineno})")))
                };
                arrows.push(Arrow {
                    label: label.to_string(),
                    source: find(s)?,
                    target: find(t)?,
                });
            }
            "relations" => {
                if !rest.is_empty() {
                    return Err(syntax(lineno, rest_col, "unexpected text after `relations`"));
                }
                in_relations = true;
                relations_line = lineno;
            }
            "cap" => {
                let n: usize = rest
                    .parse()
                    .map_err(|_| syntax(lineno, rest_col, "cap must be a natural number"))?;
                if n == 0 {
                    return Err(syntax(lineno, rest_col, "cap must be positive"));
                }
                cap = Some(n);
            }
            "end" => return Err(syntax(lineno, indent, "`end` without `relations`")),
            other => return Err(syntax(lineno, indent, format!("unknown keyword {other:?}"))),
        }
    }
    if in_relations {
        return Err(syntax(relations_line, 1, "`relations` block is not closed by `end`"));
    }
    let vertices = vertices.ok_or_else(|| syntax(1, 1, "missing `vertices` declaration"))?;
    let field = field.unwrap_or(FieldSpec::Rationals);
    if !field.is_field() {
        return Err(Error::NotAField(field.descriptor()));
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for (lineno, line) in relation_lines {
        relations.push(parse_relation_line(&field, &quiver, &line, lineno)?);
    }
    let mut p = Presentation::new(field, quiver, relations);
    if let Some(c) = cap {
        p = p.with_cap(c);
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Star,
    Slash,
    Plus,
    Minus,
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            // allow vertex labels with digits after `e_`
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((col, Tok::Int(s.parse().unwrap())));
        } else {
            let t = match c {
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                _ => return Err(syntax(lineno, col, format!("unexpected character {c:?}"))),
            };
            out.push((col, t));
            i += 1;
        }
    }
    Ok(out)
}

struct TermParser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    lineno: usize,
    end_col: usize,
    quiver: &'a Quiver,
}

impl TermParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        syntax(self.lineno, self.col(), msg)
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>> {
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return Ok(None);
        };
        self.pos += 1;
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(d)) if d != BigInt::from(0) => {
                    self.pos += 1;
                    Ok(Some(BigRational::new(n, d)))
                }
                _ => Err(self.err("expected a nonzero denominator")),
            }
        } else {
            Ok(Some(BigRational::from_integer(n)))
        }
    }

    /// `x*y*z`, read right to left.
    fn path(&mut self) -> Result<Path> {
        let mut names: Vec<(usize, String)> = Vec::new();
        loop {
            match self.peek().cloned() {
                Some(Tok::Ident(s)) => {
                    names.push((self.col(), s));
                    self.pos += 1;
                }
                _ => return Err(self.err("expected an arrow label")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        resolve_path(self.quiver, &names)
    }
}

fn resolve_path(q: &Quiver, names: &[(usize, String)]) -> Result<Path> {
    if let [(_, only)] = names {
        if q.arrow_index(only).is_none() {
            if let Some(v) = only.strip_prefix("e_").and_then(|l| q.vertex_index(l)) {
                return Ok(Path::trivial(v));
            }
        }
    }
    let mut arrows = Vec::with_capacity(names.len());
    for (_, n) in names.iter().rev() {
        let a = q
            .arrow_index(n)
            .ok_or_else(|| Error::UnknownArrow(n.clone()))?;
        arrows.push(a);
    }
    Path::from_arrows(q, arrows)
}

pub(crate) fn parse_relation_line(field: &FieldSpec, q: &Quiver, line: &str, lineno: usize) -> Result<Relation> {
    let toks = tokenize(line, lineno)?;
    let mut p = TermParser {
        toks,
        pos: 0,
        lineno,
        end_col: line.chars().count() + 1,
        quiver: q,
    };
    let mut terms: Vec<(Scalar, Path)> = Vec::new();
    let mut first = true;
    while p.pos < p.toks.len() || first {
        let mut negative = false;
        match p.peek() {
            Some(Tok::Plus) => p.pos += 1,
            Some(Tok::Minus) => {
                negative = true;
                p.pos += 1;
            }
            _ if !first => return Err(p.err("expected `+` or `-`")),
            _ => {}
        }
        first = false;
        let coeff = p.coefficient()?;
        if coeff.is_some() && p.peek() == Some(&Tok::Star) {
            p.pos += 1;
        }
        let path = p.path()?;
        let mut c = match coeff {
            Some(r) => field.from_rational(&r)?,
            None => field.one(),
        };
        if negative {
            c = -c;
        }
        terms.push((c, path));
    }
    Relation::new(q, terms)
}

/// Parses a single path such as `d*c`, or `e_1` for a trivial path.
pub fn parse_path(q: &Quiver, text: &str) -> Result<Path> {
    let toks = tokenize(text, 1)?;
    let mut p = TermParser {
        toks,
        pos: 0,
        lineno: 1,
        end_col: text.chars().count() + 1,
        quiver: q,
    };
    let path = p.path()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after path"));
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIAMOND: &str = "field Q\nvertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n";

    #[test]
    fn diamond_with_relation() {
        let text = format!("{DIAMOND}relations\n  b*a\nend\n");
        let p = parse_presentation(&text).unwrap();
        assert_eq!(p.quiver().vertex_count(), 4);
        assert_eq!(p.quiver().arrow_count(), 4);
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.relations()[0].display(p.quiver()), "b*a");
    }

    #[test]
    fn linear_combination_with_coefficients() {
        let text = format!("{DIAMOND}relations\n b*a - 2 d*c\nend\n");
        let p = parse_presentation(&text).unwrap();
        let r = &p.relations()[0];
        assert_eq!(r.terms().len(), 2);
        assert_eq!(r.terms()[1].0, p.field().from_i64(-2));
        assert_eq!(r.display(p.quiver()), "b*a - 2 d*c");
        let text = format!("{DIAMOND}relations\n 1/2*b*a + 3/4 d*c\nend\n");
        let p = parse_presentation(&text).unwrap();
        assert_eq!(p.relations()[0].terms()[0].0.to_string(), "1/2");
    }

    #[test]
    fn single_vertex() {
        let p = parse_presentation("field Q\nvertices 1\n").unwrap();
        assert_eq!(p.quiver().vertex_count(), 1);
        assert!(p.relations().is_empty());
    }

    #[test]
    fn non_composable() {
        let text = format!("{DIAMOND}relations\n b*c\nend\n");
        assert_eq!(parse_presentation(&text).unwrap_err().name(), "NonComposablePath");
    }

    #[test]
    fn unknown_vertex_and_syntax_positions() {
        let e = parse_presentation("field Q\nvertices 1 2\narrow a : 1 -> 7\n").unwrap_err();
        assert_eq!(e.name(), "UnknownVertex");
        let text = format!("{DIAMOND}relations\n b*a ?\nend\n");
        match parse_presentation(&text).unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (8, 6)),
            other => panic!("unexpected {other:?}"),
        }
        let e = parse_presentation("field Q\nvertices 1\nrelations\n").unwrap_err();
        assert_eq!(e.name(), "SyntaxError");
    }

    #[test]
    fn text_roundtrip() {
        let text = format!("{DIAMOND}relations\n b*a - 1/3 d*c\nend\ncap 5\n");
        let p = parse_presentation(&text).unwrap();
        let again = parse_presentation(&p.to_text()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn trivial_paths() {
        let p = parse_presentation(DIAMOND).unwrap();
        assert_eq!(parse_path(p.quiver(), "e_3").unwrap(), Path::trivial(2));
        assert_eq!(parse_path(p.quiver(), "d*c").unwrap().display(p.quiver()), "d*c");
    }
}
