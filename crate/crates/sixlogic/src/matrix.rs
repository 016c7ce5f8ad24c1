//! Finite logical matrices and valuation evaluation.
//!
//! A matrix is a finite set of truth values, a designated subset, and one
//! total operation table per connective. The container is value-agnostic:
//! values are opaque indices with display names, so matrices other than
//! the shipped six-valued one (two-valued Boolean, small chains) can be
//! assembled in tests.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::formula::Formula;
use crate::value::TruthValue;

/// An opaque truth value of some [`FiniteMatrix`]: an index into its value list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Val(pub u8);

impl Val {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<TruthValue> for Val {
    fn from(v: TruthValue) -> Val {
        Val(v.index() as u8)
    }
}

impl TryFrom<Val> for TruthValue {
    type Error = ();

    fn try_from(v: Val) -> Result<TruthValue, ()> {
        TruthValue::from_index(v.index()).ok_or(())
    }
}

/// The connectives of the formula language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connective {
    And,
    Or,
    Neg,
    Nabla,
}

impl Connective {
    pub const ALL: [Connective; 4] = [
        Connective::And,
        Connective::Or,
        Connective::Neg,
        Connective::Nabla,
    ];

    pub fn arity(self) -> usize {
        match self {
            Connective::And | Connective::Or => 2,
            Connective::Neg | Connective::Nabla => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Neg => "~",
            Connective::Nabla => "#",
        }
    }

    /// Build the compound formula `f(args...)`.
    pub fn apply(self, args: &[Formula]) -> Formula {
        match (self, args) {
            (Connective::And, [a, b]) => Formula::and(a.clone(), b.clone()),
            (Connective::Or, [a, b]) => Formula::or(a.clone(), b.clone()),
            (Connective::Neg, [a]) => Formula::neg(a.clone()),
            (Connective::Nabla, [a]) => Formula::nabla(a.clone()),
            _ => panic!("arity mismatch applying {self:?}"),
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A total operation table for one connective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpTable {
    Unary(Vec<Val>),
    /// Row index = first argument, column index = second argument.
    Binary(Vec<Vec<Val>>),
}

/// Errors raised when assembling an ill-formed matrix.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("a matrix needs at least two truth values")]
    TooFewValues,
    #[error("designated set must be a nonempty proper subset of the values")]
    BadDesignated,
    #[error("table for {0} has the wrong shape")]
    TableShape(Connective),
    #[error("table for {0} contains an out-of-range value")]
    TableEntry(Connective),
    #[error("duplicate value name `{0}`")]
    DuplicateName(String),
}

/// A finite logical matrix: values, designated subset, operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMatrix {
    names: Vec<String>,
    designated: Vec<bool>,
    tables: BTreeMap<Connective, OpTable>,
}

impl FiniteMatrix {
    pub fn new(
        names: Vec<String>,
        designated: Vec<Val>,
        tables: BTreeMap<Connective, OpTable>,
    ) -> Result<FiniteMatrix, MatrixError> {
        let n = names.len();
        if n < 2 {
            return Err(MatrixError::TooFewValues);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(MatrixError::DuplicateName(name.clone()));
            }
        }
        let mut flags = vec![false; n];
        for v in designated {
            if v.index() >= n {
                return Err(MatrixError::BadDesignated);
            }
            flags[v.index()] = true;
        }
        let count = flags.iter().filter(|d| **d).count();
        if count == 0 || count == n {
            return Err(MatrixError::BadDesignated);
        }
        for (&conn, table) in &tables {
            let in_range = |v: &Val| v.index() < n;
            match (conn.arity(), table) {
                (1, OpTable::Unary(col)) => {
                    if col.len() != n {
                        return Err(MatrixError::TableShape(conn));
                    }
                    if !col.iter().all(in_range) {
                        return Err(MatrixError::TableEntry(conn));
                    }
                }
                (2, OpTable::Binary(rows)) => {
                    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                        return Err(MatrixError::TableShape(conn));
                    }
                    if !rows.iter().flatten().all(in_range) {
                        return Err(MatrixError::TableEntry(conn));
                    }
                }
                _ => return Err(MatrixError::TableShape(conn)),
            }
        }
        Ok(FiniteMatrix {
            names,
            designated: flags,
            tables,
        })
    }

    pub fn value_count(&self) -> usize {
        self.names.len()
    }

    pub fn values(&self) -> impl Iterator<Item = Val> + Clone {
        (0..self.names.len() as u8).map(Val)
    }

    pub fn is_designated(&self, v: Val) -> bool {
        self.designated[v.index()]
    }

    pub fn name(&self, v: Val) -> &str {
        &self.names[v.index()]
    }

    pub fn value_by_name(&self, name: &str) -> Option<Val> {
        self.names
            .iter()
            .position(|n| n == name.trim())
            .map(|i| Val(i as u8))
    }

    pub fn connectives(&self) -> impl Iterator<Item = Connective> + '_ {
        self.tables.keys().copied()
    }

    pub fn has_connective(&self, c: Connective) -> bool {
        self.tables.contains_key(&c)
    }

    /// Apply a connective's table.
    pub fn op(&self, c: Connective, args: &[Val]) -> Result<Val, EvalError> {
        match self.tables.get(&c) {
            None => Err(EvalError::UnknownConnective(c)),
            Some(OpTable::Unary(col)) => Ok(col[args[0].index()]),
            Some(OpTable::Binary(rows)) => Ok(rows[args[0].index()][args[1].index()]),
        }
    }
}

/// The six-valued matrix: lattice meet/join for `&`/`|`, the De Morgan
/// negation, the nabla table, designated set `{b, 2/3, 1}`.
pub fn m6() -> &'static FiniteMatrix {
    static M6: OnceLock<FiniteMatrix> = OnceLock::new();
    M6.get_or_init(|| {
        let vals = TruthValue::ALL;
        let binary = |f: fn(TruthValue, TruthValue) -> TruthValue| {
            OpTable::Binary(
                vals.iter()
                    .map(|&x| vals.iter().map(|&y| Val::from(f(x, y))).collect())
                    .collect(),
            )
        };
        let unary = |f: fn(TruthValue) -> TruthValue| {
            OpTable::Unary(vals.iter().map(|&x| Val::from(f(x))).collect())
        };
        let tables = BTreeMap::from([
            (Connective::And, binary(TruthValue::inf)),
            (Connective::Or, binary(TruthValue::sup)),
            (Connective::Neg, unary(TruthValue::neg)),
            (Connective::Nabla, unary(TruthValue::nabla)),
        ]);
        FiniteMatrix::new(
            vals.iter().map(|v| v.name().to_string()).collect(),
            vals.iter()
                .filter(|v| v.is_designated())
                .map(|&v| Val::from(v))
                .collect(),
            tables,
        )
        .expect("the six-valued matrix is well-formed")
    })
}

/// A total map from variable names to matrix values.
///
/// Iteration order is lexicographic in the variable name, which keeps
/// enumeration deterministic and counterexamples reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    map: BTreeMap<String, Val>,
}

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn from_pairs<V: Into<Val>>(
        pairs: impl IntoIterator<Item = (impl Into<String>, V)>,
    ) -> Assignment {
        Assignment {
            map: pairs
                .into_iter()
                .map(|(k, v)| (k.into(), v.into()))
                .collect(),
        }
    }

    pub fn set(&mut self, var: impl Into<String>, v: impl Into<Val>) {
        self.map.insert(var.into(), v.into());
    }

    pub fn get(&self, var: &str) -> Option<Val> {
        self.map.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Val)> {
        self.map.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// Render with a matrix's value names, e.g. `p=b, q=1/3`.
    pub fn display(&self, m: &FiniteMatrix) -> String {
        self.map
            .iter()
            .map(|(k, &v)| format!("{k}={}", m.name(v)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Evaluation failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("variable `{0}` has no assigned value")]
    MissingVariable(String),
    #[error("connective `{0}` has no table in this matrix")]
    UnknownConnective(Connective),
}

/// Homomorphic extension of an assignment to a formula.
pub fn eval(f: &Formula, a: &Assignment, m: &FiniteMatrix) -> Result<Val, EvalError> {
    match f {
        Formula::Var(name) => a
            .get(name)
            .ok_or_else(|| EvalError::MissingVariable(name.clone())),
        Formula::Neg(x) => {
            let v = eval(x, a, m)?;
            m.op(Connective::Neg, &[v])
        }
        Formula::Nabla(x) => {
            let v = eval(x, a, m)?;
            m.op(Connective::Nabla, &[v])
        }
        Formula::And(x, y) => {
            let vx = eval(x, a, m)?;
            let vy = eval(y, a, m)?;
            m.op(Connective::And, &[vx, vy])
        }
        Formula::Or(x, y) => {
            let vx = eval(x, a, m)?;
            let vy = eval(y, a, m)?;
            m.op(Connective::Or, &[vx, vy])
        }
    }
}

/// Evaluate over the six-valued matrix, with six-valued types at the boundary.
pub fn eval6(f: &Formula, a: &Assignment) -> Result<TruthValue, EvalError> {
    let v = eval(f, a, m6())?;
    Ok(TruthValue::try_from(v).expect("m6 values are six-valued"))
}

/// Iterator over all assignments of matrix values to the given variables,
/// in lexicographic variable order with the last variable cycling fastest.
pub fn assignments<'a>(
    vars: &'a [String],
    m: &'a FiniteMatrix,
) -> impl Iterator<Item = Assignment> + 'a {
    let n = m.value_count();
    let total: usize = n.checked_pow(vars.len() as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut code| {
        let mut a = Assignment::new();
        for var in vars.iter().rev() {
            a.set(var.clone(), Val((code % n) as u8));
            code /= n;
        }
        a
    })
}

/// A two-valued Boolean matrix over `{&, |, ~}` with values `f < t` and
/// `t` designated. Mostly useful in tests.
pub fn boolean_matrix() -> FiniteMatrix {
    let f = Val(0);
    let t = Val(1);
    let tables = BTreeMap::from([
        (
            Connective::And,
            OpTable::Binary(vec![vec![f, f], vec![f, t]]),
        ),
        (
            Connective::Or,
            OpTable::Binary(vec![vec![f, t], vec![t, t]]),
        ),
        (Connective::Neg, OpTable::Unary(vec![t, f])),
    ]);
    FiniteMatrix::new(vec!["f".into(), "t".into()], vec![t], tables)
        .expect("the Boolean matrix is well-formed")
}
