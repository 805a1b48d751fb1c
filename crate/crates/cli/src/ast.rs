//! Parsed commands and expressions.

use std::collections::BTreeMap;

use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Re,
    Im,
    Conj,
    Abs2,
    Sqrt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// An integer literal (rationals arise through division).
    Number(BigRational),
    /// `3i`
    Imag(BigRational),
    /// `i`
    ImagUnit,
    /// `n` or its alias `omega`
    Index,
    /// `n^(p/q)`
    IndexPower(BigRational),
    /// `class mod m { e0; …; e_{m−1} }`; entries are closed scalar
    /// expressions, one polynomial per residue class
    ClassGerm(Vec<Expr>),
    /// `patch{k: v, …}`: the finite-support sequence with those values
    Patch(BTreeMap<u64, BigRational>),
    /// `wave { breaks = […]; coeffs = […] }`
    Wave {
        breaks: Vec<Expr>,
        coeffs: Vec<Expr>,
    },
    /// `op { grid = […]; matrix = [[…], …] }`
    Operator {
        grid: Vec<Expr>,
        matrix: Vec<Vec<Expr>>,
    },
    Name(String),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Let(String, Expr),
    Show(String),
    Classify(Expr),
    Cmp(Expr, Expr),
    Heisenberg(String, String, String),
    Wintner(String, String, Expr),
    Fuzz {
        suite: String,
        cases: u64,
        seed: Option<u64>,
    },
    EvalAt(Expr, u64),
}
