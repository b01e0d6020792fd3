//! Recursive-descent parser for formulas and sequents.
//!
//! ```text
//! sequent  := list? "|-" list?
//! list     := formula ("," formula)*
//! formula  := or ("->" formula)?          right associative
//! or       := and ("|" and)*              left associative
//! and      := unary ("&" unary)*          left associative
//! unary    := "~" unary | primary
//! primary  := atom | "#" | "(" formula ")"
//! atom     := [a-z][a-z0-9_]*
//! ```

use super::{Atom, Formula, FormulaSet, ParseError, Sequent};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Atom(String),
    Falsum,
    Not,
    And,
    Or,
    Implies,
    LParen,
    RParen,
    Comma,
    Turnstile,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Atom(name) => format!("atom `{name}`"),
            Token::Falsum => "`#`".into(),
            Token::Not => "`~`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Comma => "`,`".into(),
            Token::Turnstile => "`|-`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'#' => Token::Falsum,
            b'~' => Token::Not,
            b'&' => Token::And,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b',' => Token::Comma,
            b'|' if bytes.get(i + 1) == Some(&b'-') => {
                i += 1;
                Token::Turnstile
            }
            b'|' => Token::Or,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Token::Implies
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len()
                    && matches!(bytes[i + 1], b'a'..=b'z' | b'0'..=b'9' | b'_')
                {
                    i += 1;
                }
                Token::Atom(text[start..=i].to_string())
            }
            _ => {
                let len = text[start..].chars().next().map_or(1, char::len_utf8);
                return Err(ParseError::UnknownToken {
                    offset: start,
                    text: text[start..start + len].to_string(),
                });
            }
        };
        i += 1;
        tokens.push((start, token));
    }
    tokens.push((text.len(), Token::End));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

const PRIMARY_START: &[&str] = &["atom", "`#`", "`~`", "`(`"];

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Token {
        let token = self.tokens[self.pos].1.clone();
        if token != Token::End {
            self.pos += 1;
        }
        token
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Unexpected {
            offset: self.offset(),
            found: self.peek().describe(),
            expected: expected.to_vec(),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Token::Implies {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Token::Or {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Token::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Token::Falsum => {
                self.bump();
                Ok(Formula::Falsum)
            }
            Token::Atom(_) => match self.bump() {
                Token::Atom(name) => Ok(Formula::Atom(Atom::new(&name)?)),
                _ => unreachable!(),
            },
            Token::LParen => {
                self.bump();
                let inner = self.formula()?;
                if *self.peek() != Token::RParen {
                    return Err(self.unexpected(&["`)`", "`&`", "`|`", "`->`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected(PRIMARY_START)),
        }
    }

    fn formula_list(&mut self, stop: &Token) -> Result<FormulaSet, ParseError> {
        let mut out = FormulaSet::new();
        if self.peek() == stop {
            return Ok(out);
        }
        loop {
            out.insert(self.formula()?);
            if *self.peek() == Token::Comma {
                self.bump();
            } else {
                return Ok(out);
            }
        }
    }
}

/// Parses a single formula under the precedence `~` > `&` > `|` > `->`.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let f = parser.formula()?;
    if *parser.peek() != Token::End {
        return Err(parser.unexpected(&["`&`", "`|`", "`->`", "end of input"]));
    }
    Ok(f)
}

/// Parses `F1, ..., Fm |- G1, ..., Gn`; either side may be empty and
/// repeated formulas collapse.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let tokens = tokenize(text)?;
    if !tokens.iter().any(|(_, t)| *t == Token::Turnstile) {
        return Err(ParseError::MissingTurnstile);
    }
    let mut parser = Parser { tokens, pos: 0 };
    let left = parser.formula_list(&Token::Turnstile)?;
    if *parser.peek() != Token::Turnstile {
        return Err(parser.unexpected(&["`,`", "`&`", "`|`", "`->`", "`|-`"]));
    }
    parser.bump();
    let right = parser.formula_list(&Token::End)?;
    if *parser.peek() != Token::End {
        return Err(parser.unexpected(&["`,`", "`&`", "`|`", "`->`", "end of input"]));
    }
    Ok(Sequent::new(left, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(name: &str) -> Formula {
        Formula::atom(name).unwrap()
    }

    #[test]
    fn precedence_not_and_implies() {
        let f = parse_formula("~p & q -> #").unwrap();
        let expected = Formula::implies(
            Formula::and(Formula::not(atom("p")), atom("q")),
            Formula::Falsum,
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn single_atom() {
        assert_eq!(parse_formula("p").unwrap(), atom("p"));
        assert_eq!(parse_formula("  foo_2 ").unwrap(), atom("foo_2"));
    }

    #[test]
    fn negated_parenthesised_implication() {
        assert_eq!(
            parse_formula("~(p -> q)").unwrap(),
            Formula::not(Formula::implies(atom("p"), atom("q")))
        );
    }

    #[test]
    fn associativity() {
        assert_eq!(
            parse_formula("p -> q -> r").unwrap(),
            Formula::implies(atom("p"), Formula::implies(atom("q"), atom("r")))
        );
        assert_eq!(
            parse_formula("p & q & r").unwrap(),
            Formula::and(Formula::and(atom("p"), atom("q")), atom("r"))
        );
        assert_eq!(
            parse_formula("p | q | r").unwrap(),
            Formula::or(Formula::or(atom("p"), atom("q")), atom("r"))
        );
        assert_eq!(
            parse_formula("p | q & r").unwrap(),
            Formula::or(atom("p"), Formula::and(atom("q"), atom("r")))
        );
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_formula("p & ") {
            Err(ParseError::Unexpected {
                offset, expected, ..
            }) => {
                assert_eq!(offset, 4);
                assert!(expected.contains(&"atom"));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_formula("p $ q") {
            Err(ParseError::UnknownToken { offset, text }) => {
                assert_eq!(offset, 2);
                assert_eq!(text, "$");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_formula("P"),
            Err(ParseError::UnknownToken { offset: 0, .. })
        ));
        assert!(matches!(
            parse_formula("(p"),
            Err(ParseError::Unexpected { offset: 2, .. })
        ));
        assert!(matches!(
            parse_formula("p q"),
            Err(ParseError::Unexpected { offset: 2, .. })
        ));
        assert!(matches!(
            parse_formula("p |- q"),
            Err(ParseError::Unexpected { offset: 2, .. })
        ));
    }

    #[test]
    fn sequents() {
        let s = parse_sequent("p, ~p |- #").unwrap();
        assert_eq!(s.left().len(), 2);
        assert!(s.left().contains(&atom("p")));
        assert!(s.left().contains(&Formula::not(atom("p"))));
        assert_eq!(s.right().iter().collect::<Vec<_>>(), vec![&Formula::Falsum]);

        let s = parse_sequent("|- p -> p").unwrap();
        assert!(s.left().is_empty());
        assert_eq!(s.right().len(), 1);

        let s = parse_sequent("p, p |- p").unwrap();
        assert_eq!(s.left().len(), 1);
        assert_eq!(s.right().len(), 1);

        let s = parse_sequent("|-").unwrap();
        assert!(s.left().is_empty() && s.right().is_empty());

        let s = parse_sequent("p | q |-").unwrap();
        assert_eq!(s.left().len(), 1);
        assert!(s.right().is_empty());
    }

    #[test]
    fn sequent_errors() {
        assert_eq!(parse_sequent("p, q"), Err(ParseError::MissingTurnstile));
        assert!(matches!(
            parse_sequent("p, |- q"),
            Err(ParseError::Unexpected { offset: 3, .. })
        ));
        assert!(matches!(
            parse_sequent("p |- q |- r"),
            Err(ParseError::Unexpected { offset: 7, .. })
        ));
    }
}
