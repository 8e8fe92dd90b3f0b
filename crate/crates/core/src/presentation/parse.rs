use super::{Presentation, Word};
use crate::error::{Error, Result};

/// Character cursor over one line, tracking 1-based columns.
struct Cursor {
    chars: Vec<char>,
    pos: usize,
    /// Column of `chars[0]` in the source line.
    base: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize, base: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            base,
            line,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.base + self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected `{c}`, found `{found}`")),
                None => self.err(format!("expected `{c}`, found end of line")),
            }
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return match self.peek() {
                Some(c) => self.err(format!("expected generator name, found `{c}`")),
                None => self.err("expected generator name, found end of line"),
            };
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = digits;
            return match self.peek() {
                Some(c) => self.err(format!("expected integer, found `{c}`")),
                None => self.err("expected integer, found end of line"),
            };
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }
}

fn parse_word(cur: &mut Cursor, names: &[String]) -> Result<Word> {
    let mut syllables = Vec::new();
    loop {
        cur.skip_ws();
        let g = if cur.peek() == Some('1') {
            cur.pos += 1;
            None
        } else {
            let col = cur.pos;
            let name = cur.ident()?;
            match names.iter().position(|n| *n == name) {
                Some(g) => Some(g),
                None => {
                    cur.pos = col;
                    return cur.err(format!("unknown generator `{name}`"));
                }
            }
        };
        let e = if cur.eat('^') { cur.integer()? } else { 1 };
        if let Some(g) = g {
            syllables.push((g, e));
        }
        if !cur.eat('*') {
            break;
        }
    }
    Ok(Word::from_syllables(syllables))
}

/// A relator: `w` or `u = v` (stored as `u v⁻¹`).
fn parse_relator(cur: &mut Cursor, names: &[String]) -> Result<Word> {
    let lhs = parse_word(cur, names)?;
    if cur.eat('=') {
        let rhs = parse_word(cur, names)?;
        Ok(lhs.multiply(&rhs.inverse()))
    } else {
        Ok(lhs)
    }
}

struct Field<'a> {
    line: usize,
    column: usize,
    body: &'a str,
}

/// Parses the line-based presentation format:
///
/// ```text
/// gens: x y
/// mu: 1
/// abel: x=(3) y=(2)
/// rels: x^2*y^-3
/// ```
///
/// `#` starts a comment. Relators are `*`-separated powers `name^k`, with
/// `1` for the identity and `u=v` for relations; several `rels:` lines
/// accumulate. The result is validated by [`Presentation::new`].
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut gens: Option<Field> = None;
    let mut mu: Option<Field> = None;
    let mut abel: Option<Field> = None;
    let mut rels: Vec<Field> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(Error::Syntax {
                line,
                column: col,
                message: "expected `key: value`".into(),
            });
        };
        let key = content[..colon].trim();
        let body = &content[colon + 1..];
        let field = Field {
            line,
            column: content[..colon + 1].chars().count() + 1,
            body,
        };
        let slot = match key {
            "gens" => &mut gens,
            "mu" => &mut mu,
            "abel" => &mut abel,
            "rels" => {
                rels.push(field);
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    column: content.len() - content.trim_start().len() + 1,
                    message: format!("unknown key `{other}`"),
                })
            }
        };
        if slot.is_some() {
            return Err(Error::Syntax {
                line,
                column: 1,
                message: format!("repeated key `{key}`"),
            });
        }
        *slot = Some(field);
    }

    let missing = |k: &str| Error::InvalidPresentation(format!("missing `{k}:` line"));
    let gens = gens.ok_or_else(|| missing("gens"))?;
    let mu_field = mu.ok_or_else(|| missing("mu"))?;
    let abel = abel.ok_or_else(|| missing("abel"))?;

    let mut names = Vec::new();
    let mut cur = Cursor::new(gens.body, gens.line, gens.column);
    while !cur.at_end() {
        let n = cur.ident()?;
        if cur.peek().is_some_and(|c| !c.is_whitespace()) {
            return cur.err("generator names must be separated by spaces");
        }
        if names.contains(&n) {
            return Err(Error::DuplicateGenerator(n));
        }
        names.push(n);
    }

    let mut cur = Cursor::new(mu_field.body, mu_field.line, mu_field.column);
    let mu = cur.integer()?;
    if !cur.at_end() {
        return cur.err("trailing input after mu");
    }
    if mu < 1 {
        return Err(Error::InvalidPresentation("mu must be at least 1".into()));
    }
    let mu = mu as usize;

    let mut vectors: Vec<Option<Vec<i64>>> = vec![None; names.len()];
    let mut cur = Cursor::new(abel.body, abel.line, abel.column);
    while !cur.at_end() {
        let col = cur.pos;
        let n = cur.ident()?;
        let Some(g) = names.iter().position(|x| *x == n) else {
            cur.pos = col;
            return cur.err(format!("unknown generator `{n}`"));
        };
        cur.expect('=')?;
        cur.expect('(')?;
        let mut v = vec![cur.integer()?];
        while cur.eat(',') {
            v.push(cur.integer()?);
        }
        cur.expect(')')?;
        if v.len() != mu {
            cur.pos = col;
            return cur.err(format!("vector for `{n}` has length {}, expected {mu}", v.len()));
        }
        if vectors[g].replace(v).is_some() {
            cur.pos = col;
            return cur.err(format!("abelianization of `{n}` given twice"));
        }
    }
    let vectors = vectors
        .into_iter()
        .zip(&names)
        .map(|(v, n)| v.ok_or_else(|| Error::InvalidPresentation(format!("no abelianization for `{n}`"))))
        .collect::<Result<Vec<_>>>()?;

    let mut relators = Vec::new();
    for f in &rels {
        let mut cur = Cursor::new(f.body, f.line, f.column);
        if cur.at_end() {
            continue;
        }
        loop {
            relators.push(parse_relator(&mut cur, &names)?);
            if cur.at_end() {
                break;
            }
            cur.expect(',')?;
        }
    }

    Presentation::new(names, relators, mu, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_group() {
        let p = parse_presentation("gens: x y\nmu: 1\nabel: x=(3) y=(2)\nrels: x^2*y^-3").unwrap();
        assert_eq!(p.num_generators(), 2);
        assert_eq!(p.relators(), &[Word::from_syllables([(0, 2), (1, -3)])]);
        assert_eq!(p.abelianization(), &[vec![3], vec![2]]);
    }

    #[test]
    fn unknot_group() {
        let p = parse_presentation("gens: x\nmu: 1\nabel: x=(1)\nrels:").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn dangling_caret_is_a_syntax_error() {
        let e = parse_presentation("gens: x\nmu: 1\nabel: x=(0)\nrels: x^").unwrap_err();
        assert_eq!(
            e,
            Error::Syntax {
                line: 4,
                column: 9,
                message: "expected integer, found end of line".into()
            }
        );
    }

    #[test]
    fn relation_syntax_and_comments() {
        let text = "# torus knot\ngens: x y\nmu: 1\nabel: x=(3) y=(2)\nrels: x^2 = y^3  # same relator\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.relators(), &[Word::from_syllables([(0, 2), (1, -3)])]);
    }

    #[test]
    fn multiple_relators_and_lines() {
        let text = "gens: m1 x y\nmu: 2\nabel: m1=(1,0) x=(3,3) y=(2,2)\nrels: x^2*m1*x^-2*m1^-1,\nrels: x^2*y^-3\n";
        // a trailing comma on the first rels line is an error
        assert!(matches!(parse_presentation(text), Err(Error::Syntax { line: 4, .. })));
        let text = text.replace("m1^-1,", "m1^-1");
        assert_eq!(parse_presentation(&text).unwrap().relators().len(), 2);
    }

    #[test]
    fn reports_semantic_errors() {
        assert_eq!(
            parse_presentation("gens: x x\nmu: 1\nabel: x=(1)\n").unwrap_err(),
            Error::DuplicateGenerator("x".into())
        );
        assert!(matches!(
            parse_presentation("gens: x y\nmu: 1\nabel: x=(1) y=(1)\nrels: x*y").unwrap_err(),
            Error::RelatorNotInKernel { index: 1, .. }
        ));
        assert!(matches!(
            parse_presentation("gens: x\nmu: 1\nabel: x=(1)\nrels: z").unwrap_err(),
            Error::Syntax { line: 4, column: 7, .. }
        ));
    }
}
