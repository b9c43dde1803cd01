//! Parsing of transcribed grids whose entries may be linear expressions.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::array::{ArrayError, Position, SparseSquareArray};
use crate::cycles::CellSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error("cannot parse entry {0:?}")]
    BadToken(String),
    #[error("entry {token:?} needs a value for {var}")]
    MissingVariable { token: String, var: char },
    #[error("entry {0:?} evaluates to 0")]
    ZeroEntry(String),
    #[error("grid rows have unequal length")]
    Ragged,
    #[error(transparent)]
    Array(#[from] ArrayError),
}

/// Values substituted for the symbols of a template.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub k: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    One,
    M,
    N,
    K,
    Nk,
}

/// `sum(coef * var)`, possibly wrapped as `-( ... )`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    source: String,
    terms: Vec<(i64, Var)>,
}

impl Expr {
    pub fn parse(token: &str) -> Result<Self, TemplateError> {
        let bad = || TemplateError::BadToken(token.to_string());
        let (negated, body) = match token.strip_prefix("-(") {
            Some(rest) => (true, rest.strip_suffix(')').ok_or_else(bad)?),
            None => (false, token),
        };
        let bytes = body.as_bytes();
        let mut terms = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: Option<i64> = if i > start {
                Some(body[start..i].parse().map_err(|_| bad())?)
            } else {
                None
            };
            let var = if body[i..].starts_with("nk") || body[i..].starts_with("kn") {
                i += 2;
                Var::Nk
            } else {
                match bytes.get(i) {
                    Some(b'm') => {
                        i += 1;
                        Var::M
                    }
                    Some(b'n') => {
                        i += 1;
                        Var::N
                    }
                    Some(b'k') => {
                        i += 1;
                        Var::K
                    }
                    _ => Var::One,
                }
            };
            if var == Var::One && coef.is_none() {
                return Err(bad());
            }
            terms.push((sign * coef.unwrap_or(1), var));
        }
        if terms.is_empty() {
            return Err(bad());
        }
        if negated {
            for t in &mut terms {
                t.0 = -t.0;
            }
        }
        Ok(Self {
            source: token.to_string(),
            terms,
        })
    }

    /// True when the expression mentions no symbol.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|&(_, v)| v == Var::One)
    }

    pub fn eval(&self, p: Params) -> Result<i64, TemplateError> {
        let need = |val: Option<i64>, var: char| {
            val.ok_or(TemplateError::MissingVariable {
                token: self.source.clone(),
                var,
            })
        };
        let mut total = 0;
        for &(c, v) in &self.terms {
            let x = match v {
                Var::One => 1,
                Var::M => need(p.m, 'm')?,
                Var::N => need(p.n, 'n')?,
                Var::K => need(p.k, 'k')?,
                Var::Nk => need(p.n, 'n')? * need(p.k, 'k')?,
            };
            total += c * x;
        }
        Ok(total)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Empty,
    Mark(String),
    Value { expr: Expr, highlighted: bool },
}

/// A square grid of entries, cycle marks and empty cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    order: usize,
    cells: Vec<(Position, Token)>,
}

/// A template after substitution: numeric entries plus named cell sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instantiated {
    pub array: SparseSquareArray,
    pub masks: BTreeMap<String, CellSet>,
}

/// Name of the mask formed by `*`-suffixed entries.
pub const HIGHLIGHT_MASK: &str = "S1";

impl Template {
    pub fn parse(text: &str) -> Result<Self, TemplateError> {
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        let order = rows.len();
        let mut cells = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(TemplateError::Ragged);
            }
            for (c, &tok) in row.iter().enumerate() {
                let token = match tok {
                    "." => Token::Empty,
                    "H" | "K" => Token::Mark(tok.to_string()),
                    _ => {
                        let (body, highlighted) = match tok.strip_suffix('*') {
                            Some(b) => (b, true),
                            None => (tok, false),
                        };
                        Token::Value {
                            expr: Expr::parse(body)?,
                            highlighted,
                        }
                    }
                };
                cells.push((Position::new(r + 1, c + 1), token));
            }
        }
        Ok(Self { order, cells })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// True when some entry mentions a symbol.
    pub fn is_parametric(&self) -> bool {
        self.cells.iter().any(|(_, t)| matches!(t, Token::Value { expr, .. } if !expr.is_constant()))
    }

    pub fn instantiate(&self, p: Params) -> Result<Instantiated, TemplateError> {
        let mut array = SparseSquareArray::new(self.order);
        let mut masks: BTreeMap<String, CellSet> = BTreeMap::new();
        for (pos, tok) in &self.cells {
            match tok {
                Token::Empty => {}
                Token::Mark(name) => {
                    masks
                        .entry(name.clone())
                        .or_insert_with(|| CellSet::new(self.order))
                        .insert(*pos);
                }
                Token::Value { expr, highlighted } => {
                    let v = expr.eval(p)?;
                    if v == 0 {
                        return Err(TemplateError::ZeroEntry(expr.source.clone()));
                    }
                    array.insert(*pos, v)?;
                    if *highlighted {
                        masks
                            .entry(HIGHLIGHT_MASK.to_string())
                            .or_insert_with(|| CellSet::new(self.order))
                            .insert(*pos);
                    }
                }
            }
        }
        Ok(Instantiated { array, masks })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(tok: &str, m: i64, n: i64, k: i64) -> i64 {
        Expr::parse(tok)
            .unwrap()
            .eval(Params {
                m: Some(m),
                n: Some(n),
                k: Some(k),
            })
            .unwrap()
    }

    #[test]
    fn expressions() {
        assert_eq!(ev("17", 0, 0, 0), 17);
        assert_eq!(ev("-48", 0, 0, 0), -48);
        assert_eq!(ev("-(6m+1)", 4, 0, 0), -25);
        assert_eq!(ev("10m-3", 4, 0, 0), 37);
        assert_eq!(ev("-10m", 4, 0, 0), -40);
        assert_eq!(ev("nk-4", 0, 19, 3), 53);
        assert_eq!(ev("kn", 0, 30, 3), 90);
        assert_eq!(ev("-(nk-10)", 0, 34, 3), -92);
        assert_eq!(ev("10k-4", 0, 0, 5), 46);
        assert_eq!(ev("14k", 0, 0, 7), 98);
    }

    #[test]
    fn bad_tokens() {
        for t in ["", "x", "-(3", "3m+", "m m", "--3"] {
            assert!(Expr::parse(t).is_err(), "{t}");
        }
    }

    #[test]
    fn missing_variable() {
        let e = Expr::parse("nk-4").unwrap();
        assert!(matches!(
            e.eval(Params::default()),
            Err(TemplateError::MissingVariable { var: 'n', .. })
        ));
    }

    #[test]
    fn grid_with_marks() {
        let t = Template::parse("1* H\nK -(2m)").unwrap();
        let inst = t
            .instantiate(Params {
                m: Some(3),
                ..Params::default()
            })
            .unwrap();
        assert_eq!(inst.array.get(Position::new(2, 2)), Some(-6));
        assert_eq!(inst.masks["H"].len(), 1);
        assert!(inst.masks[HIGHLIGHT_MASK].contains(Position::new(1, 1)));
        assert!(t.is_parametric());
    }
}
