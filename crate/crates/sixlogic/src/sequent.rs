//! Two-sided sequents and value-indexed n-sequents.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::formula::{lex, Formula, ParseError, Parser, Token};
use crate::value::TruthValue;

/// An ordinary sequent: a pair of finite formula sets.
///
/// Sides are kept deduplicated and structurally ordered, so equality and
/// hashing are well-defined; either side may be empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Sequent {
    pub left: BTreeSet<Formula>,
    pub right: BTreeSet<Formula>,
}

impl Sequent {
    pub fn new(
        left: impl IntoIterator<Item = Formula>,
        right: impl IntoIterator<Item = Formula>,
    ) -> Sequent {
        Sequent {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
        }
    }

    pub fn empty() -> Sequent {
        Sequent::default()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// Some formula occurs on both sides.
    pub fn has_common_formula(&self) -> bool {
        self.left.intersection(&self.right).next().is_some()
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        for f in self.left.iter().chain(self.right.iter()) {
            acc.extend(f.vars());
        }
        acc
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.left.iter().chain(self.right.iter())
    }

    /// This sequent with `f` added on the left.
    pub fn with_left(&self, f: Formula) -> Sequent {
        let mut s = self.clone();
        s.left.insert(f);
        s
    }

    /// This sequent with `f` added on the right.
    pub fn with_right(&self, f: Formula) -> Sequent {
        let mut s = self.clone();
        s.right.insert(f);
        s
    }

    /// Componentwise union.
    pub fn union(&self, other: &Sequent) -> Sequent {
        Sequent {
            left: self.left.union(&other.left).cloned().collect(),
            right: self.right.union(&other.right).cloned().collect(),
        }
    }

    /// Componentwise subset test.
    pub fn subset_of(&self, other: &Sequent) -> bool {
        self.left.is_subset(&other.left) && self.right.is_subset(&other.right)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |set: &BTreeSet<Formula>| {
            set.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if self.is_empty() {
            write!(f, "=>")?;
        } else if self.left.is_empty() {
            write!(f, "=> {}", join(&self.right))?;
        } else if self.right.is_empty() {
            write!(f, "{} =>", join(&self.left))?;
        } else {
            write!(f, "{} => {}", join(&self.left), join(&self.right))?;
        }
        Ok(())
    }
}

impl FromStr for Sequent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequent(s)
    }
}

/// An n-sequent: one finite formula set per truth value of the matrix.
///
/// Cell `i` corresponds to value `i` in the matrix's canonical value order
/// (for the six-valued matrix: `0, 1/3, n, b, 2/3, 1`). Equivalently a set
/// of signed formulas `value : formula`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NSequent {
    cells: Vec<BTreeSet<Formula>>,
}

impl NSequent {
    /// An n-sequent with `n` empty cells.
    pub fn new(n: usize) -> NSequent {
        NSequent {
            cells: vec![BTreeSet::new(); n],
        }
    }

    /// The six-valued axiom `T : f`, placing `f` in every cell.
    pub fn axiom6(f: Formula) -> NSequent {
        let mut ns = NSequent::new(6);
        for cell in &mut ns.cells {
            cell.insert(f.clone());
        }
        ns
    }

    pub fn width(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, i: usize) -> &BTreeSet<Formula> {
        &self.cells[i]
    }

    pub fn insert(&mut self, i: usize, f: Formula) {
        self.cells[i].insert(f);
    }

    /// Insert into the cell of a six-valued truth value.
    pub fn insert_at(&mut self, v: TruthValue, f: Formula) {
        self.insert(v.index(), f);
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|c| c.is_empty())
    }

    /// Signed-formula view: `(cell index, formula)` pairs.
    pub fn signed_formulas(&self) -> impl Iterator<Item = (usize, &Formula)> {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(i, cell)| cell.iter().map(move |f| (i, f)))
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        for (_, f) in self.signed_formulas() {
            acc.extend(f.vars());
        }
        acc
    }

    /// Componentwise subset test (this grows into `other` by weakening).
    pub fn subset_of(&self, other: &NSequent) -> bool {
        self.width() == other.width()
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(a, b)| a.is_subset(b))
    }

    /// Remove one signed formula, if present.
    pub fn without(&self, i: usize, f: &Formula) -> NSequent {
        let mut ns = self.clone();
        ns.cells[i].remove(f);
        ns
    }

    pub fn with(&self, i: usize, f: Formula) -> NSequent {
        let mut ns = self.clone();
        ns.cells[i].insert(f);
        ns
    }
}

impl fmt::Display for NSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, cell) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, " || ")?;
            }
            let mut first = true;
            for formula in cell {
                if !first {
                    write!(f, ", ")?;
                }
                write!(f, "{formula}")?;
                first = false;
            }
        }
        Ok(())
    }
}

fn formula_list(p: &mut Parser) -> Result<Vec<Formula>, ParseError> {
    let mut formulas = Vec::new();
    if matches!(
        p.peek(),
        None | Some(Token::Arrow) | Some(Token::CellSep) | Some(Token::Semicolon)
    ) {
        return Ok(formulas);
    }
    formulas.push(p.formula()?);
    while matches!(p.peek(), Some(Token::Comma)) {
        p.bump();
        formulas.push(p.formula()?);
    }
    Ok(formulas)
}

/// Parse `Γ => Δ` with comma-separated formulas; both sides may be empty,
/// so `=>` alone is the empty sequent. `⇒` is accepted for `=>`.
pub fn parse_sequent(src: &str) -> Result<Sequent, ParseError> {
    parse_sequent_impl(src, false)
}

/// Like [`parse_sequent`] but allowing single uppercase metavariables, for
/// rule schemas.
pub fn parse_schema_sequent(src: &str) -> Result<Sequent, ParseError> {
    parse_sequent_impl(src, true)
}

fn parse_sequent_impl(src: &str, allow_metavars: bool) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(lex(src, true)?, allow_metavars);
    let left = formula_list(&mut p)?;
    match p.bump() {
        Some(Token::Arrow) => {}
        _ => return Err(p.error("expected `=>`")),
    }
    let right = formula_list(&mut p)?;
    p.expect_end()?;
    Ok(Sequent::new(left, right))
}

/// Parse a six-valued n-sequent, either in cell form
/// `Γ0 || Γ1 || Γ2 || Γ3 || Γ4 || Γ5` (cells in the value order
/// `0, 1/3, n, b, 2/3, 1`) or in signed-list form `0: f; 2/3: g, h`.
pub fn parse_nsequent(src: &str) -> Result<NSequent, ParseError> {
    let mut p = Parser::new(lex(src, true)?, false);
    let mut ns = NSequent::new(6);
    if src.contains("||") {
        for i in 0..6 {
            for f in formula_list(&mut p)? {
                ns.insert(i, f);
            }
            if i < 5 {
                match p.bump() {
                    Some(Token::CellSep) => {}
                    _ => return Err(p.error("expected `||` (six cells required)")),
                }
            }
        }
        p.expect_end()?;
        return Ok(ns);
    }
    // signed list form; empty input is the empty n-sequent
    loop {
        match p.peek() {
            None => break,
            Some(Token::Value(_)) | Some(Token::Ident(_)) => {
                let v = match p.bump() {
                    Some(Token::Value(name)) => name,
                    Some(Token::Ident(name)) => name,
                    _ => unreachable!(),
                };
                let value: TruthValue = v
                    .parse()
                    .map_err(|e: crate::value::ParseTruthValueError| p.error(e.to_string()))?;
                match p.bump() {
                    Some(Token::Colon) => {}
                    _ => return Err(p.error("expected `:` after truth value")),
                }
                for f in formula_list(&mut p)? {
                    ns.insert_at(value, f);
                }
                match p.peek() {
                    Some(Token::Semicolon) => {
                        p.bump();
                    }
                    None => break,
                    _ => return Err(p.error("expected `;` between signed groups")),
                }
            }
            _ => return Err(p.error("expected `value: formulas` group")),
        }
    }
    Ok(ns)
}

/// Parse a sequent file: one sequent per line. Blank lines and lines whose
/// first character is `#` are skipped (`#` is only a comment marker at line
/// start; write a leading space or parentheses for a sequent that begins
/// with nabla).
pub fn parse_sequent_file(src: &str) -> Result<Vec<(usize, Sequent)>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let s = parse_sequent(line).map_err(|e| ParseError {
            pos: e.pos,
            msg: format!("line {}: {}", lineno + 1, e.msg),
        })?;
        out.push((lineno + 1, s));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn sequent_parsing_and_display() {
        let s = parse_sequent("p | q => ~(~p & ~q)").unwrap();
        assert_eq!(s.left.len(), 1);
        assert_eq!(s.right.len(), 1);
        assert!(s.left.contains(&f("p | q")));

        let empty = parse_sequent("=>").unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.to_string(), "=>");

        let left_only = parse_sequent("p, q =>").unwrap();
        assert_eq!(left_only.left.len(), 2);
        assert!(left_only.right.is_empty());

        let s = parse_sequent("p, ~p => q").unwrap();
        assert_eq!(parse_sequent(&s.to_string()).unwrap(), s);

        assert!(parse_sequent("p q => r").is_err());
        assert!(parse_sequent("p => q => r").is_err());
    }

    #[test]
    fn sequent_sides_deduplicate() {
        let s = parse_sequent("p, p => q, q, q").unwrap();
        assert_eq!(s.left.len(), 1);
        assert_eq!(s.right.len(), 1);
    }

    #[test]
    fn unicode_arrow() {
        assert_eq!(
            parse_sequent("p ⇒ ∇p").unwrap(),
            parse_sequent("p => #p").unwrap()
        );
    }

    #[test]
    fn nsequent_cell_form() {
        let ns = parse_nsequent("p || || q, r || || || p").unwrap();
        assert_eq!(ns.cell(0).len(), 1);
        assert!(ns.cell(1).is_empty());
        assert_eq!(ns.cell(2).len(), 2);
        assert_eq!(ns.cell(5), &[f("p")].into_iter().collect());
        assert_eq!(parse_nsequent(&ns.to_string()).unwrap(), ns);
        assert!(parse_nsequent("p || q").is_err(), "six cells required");
    }

    #[test]
    fn nsequent_signed_form() {
        let ns = parse_nsequent("0: p; 2/3: q, #p; b: r").unwrap();
        assert!(ns.cell(TruthValue::Zero.index()).contains(&f("p")));
        assert!(ns.cell(TruthValue::TwoThirds.index()).contains(&f("#p")));
        assert!(ns.cell(TruthValue::B.index()).contains(&f("r")));
        assert!(ns.cell(TruthValue::N.index()).is_empty());
        assert!(parse_nsequent("").unwrap().is_empty());
        assert!(parse_nsequent("5: p").is_err());
    }

    #[test]
    fn axiom_has_formula_in_every_cell() {
        let ns = NSequent::axiom6(f("p & q"));
        for i in 0..6 {
            assert!(ns.cell(i).contains(&f("p & q")));
        }
    }

    #[test]
    fn sequent_file_comments() {
        let text = "# header comment\np => #p\n\n => #p | ~#p\n";
        let seqs = parse_sequent_file(text).unwrap();
        assert_eq!(seqs.len(), 2);
        assert_eq!(seqs[0].0, 2);
        assert_eq!(seqs[1].1, parse_sequent("=> #p | ~#p").unwrap());
        assert!(parse_sequent_file("p =>\nbad line\n").is_err());
    }
}
