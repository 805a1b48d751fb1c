//! Expression evaluation and command execution against a session.
//!
//! A session fixes the filter, the truncation order for `sqrt`, the default
//! fuzz seed, and the name bindings. All bound values share the session
//! filter; names bind once (no shadowing).

use std::collections::BTreeMap;

use num_rational::BigRational;

use rpa_core::scalars::Germ;
use rpa_core::suites::{run_suite, SuiteReport};
use rpa_core::{Classification, FilterSpec, Grid, GridOperator, RpaComplex, RpaReal, StepWave};

use crate::ast::{BinOp, Command, Expr, Func};
use crate::errors::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Real(RpaReal),
    Complex(RpaComplex),
    Wave(StepWave),
    Operator(GridOperator),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Real(_) => "scalar",
            Value::Complex(_) => "complex scalar",
            Value::Wave(_) => "wave",
            Value::Operator(_) => "operator",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    None,
    Value(Value),
    Classification(Classification),
    Cmp(&'static str),
    Heisenberg {
        holds: bool,
        residual: RpaReal,
        classification: Classification,
    },
    Wintner {
        trace: RpaComplex,
        nonzero: bool,
    },
    Fuzz(SuiteReport),
    Scalar {
        re: BigRational,
        im: Option<BigRational>,
    },
}

pub struct Session {
    pub filter: FilterSpec,
    pub trunc: u32,
    pub seed: u64,
    bindings: BTreeMap<String, Value>,
}

impl Session {
    pub fn new(filter: FilterSpec, trunc: u32, seed: u64) -> Self {
        Session {
            filter,
            trunc,
            seed,
            bindings: BTreeMap::new(),
        }
    }

    fn lookup(&self, name: &str) -> Result<&Value, CliError> {
        self.bindings
            .get(name)
            .ok_or_else(|| CliError::Name(name.to_string()))
    }

    fn lookup_operator(&self, name: &str) -> Result<&GridOperator, CliError> {
        match self.lookup(name)? {
            Value::Operator(op) => Ok(op),
            other => Err(CliError::Type(format!(
                "`{name}` is a {}, expected an operator",
                other.type_name()
            ))),
        }
    }

    fn lookup_wave(&self, name: &str) -> Result<&StepWave, CliError> {
        match self.lookup(name)? {
            Value::Wave(w) => Ok(w),
            other => Err(CliError::Type(format!(
                "`{name}` is a {}, expected a wave",
                other.type_name()
            ))),
        }
    }

    pub fn execute(&mut self, cmd: &Command) -> Result<Output, CliError> {
        match cmd {
            Command::Let(name, expr) => {
                if self.bindings.contains_key(name) {
                    return Err(CliError::DuplicateName(name.clone()));
                }
                let value = eval(expr, self)?;
                self.bindings.insert(name.clone(), value);
                Ok(Output::None)
            }
            Command::Show(name) => Ok(Output::Value(self.lookup(name)?.clone())),
            Command::Classify(expr) => {
                let value = eval(expr, self)?;
                let real = as_real(value, "classify")?;
                Ok(Output::Classification(real.classify()))
            }
            Command::Cmp(lhs, rhs) => {
                let a = as_real(eval(lhs, self)?, "cmp")?;
                let b = as_real(eval(rhs, self)?, "cmp")?;
                let verdict = match a.partial_cmp_elem(&b)? {
                    Some(std::cmp::Ordering::Equal) => "eq",
                    Some(std::cmp::Ordering::Less) => "lt",
                    Some(std::cmp::Ordering::Greater) => "gt",
                    None => "incomparable",
                };
                Ok(Output::Cmp(verdict))
            }
            Command::Heisenberg(a, b, psi) => {
                let a = self.lookup_operator(a)?.clone();
                let b = self.lookup_operator(b)?.clone();
                let psi = self.lookup_wave(psi)?.clone();
                let (holds, residual) = a.heisenberg_holds(&b, &psi)?;
                let classification = residual.classify();
                Ok(Output::Heisenberg {
                    holds,
                    residual,
                    classification,
                })
            }
            Command::Wintner(a, b, c) => {
                let a = self.lookup_operator(a)?.clone();
                let b = self.lookup_operator(b)?.clone();
                let c = as_complex(eval(c, self)?, "wintner scalar")?;
                let residual = a.wintner_residual(&b, &c)?;
                Ok(Output::Wintner {
                    trace: residual.trace(),
                    nonzero: !residual.is_zero(),
                })
            }
            Command::Fuzz { suite, cases, seed } => {
                let seed = seed.unwrap_or(self.seed);
                let report = run_suite(suite, *cases, seed)
                    .ok_or_else(|| CliError::UnknownSuite(suite.clone()))?;
                Ok(Output::Fuzz(report))
            }
            Command::EvalAt(expr, index) => {
                if *index == 0 {
                    return Err(CliError::BadIndex(0));
                }
                match eval(expr, self)? {
                    Value::Real(x) => Ok(Output::Scalar {
                        re: x.eval_at(*index)?,
                        im: None,
                    }),
                    Value::Complex(z) => {
                        let (re, im) = z.eval_at(*index)?;
                        Ok(Output::Scalar { re, im: Some(im) })
                    }
                    other => Err(CliError::Type(format!(
                        "evalat expects a scalar, got a {}",
                        other.type_name()
                    ))),
                }
            }
        }
    }
}

fn as_complex(v: Value, what: &str) -> Result<RpaComplex, CliError> {
    match v {
        Value::Real(x) => Ok(RpaComplex::from_real(x)),
        Value::Complex(z) => Ok(z),
        other => Err(CliError::Type(format!(
            "{what} expects a scalar, got a {}",
            other.type_name()
        ))),
    }
}

fn as_real(v: Value, what: &str) -> Result<RpaReal, CliError> {
    match v {
        Value::Real(x) => Ok(x),
        Value::Complex(z) if z.im_part().is_zero() => Ok(z.re_part().clone()),
        Value::Complex(_) => Err(CliError::Type(format!(
            "{what} expects a real scalar, got one with nonzero imaginary part"
        ))),
        other => Err(CliError::Type(format!(
            "{what} expects a real scalar, got a {}",
            other.type_name()
        ))),
    }
}

/// Simplifies Real-closed results: a complex value with exactly zero
/// imaginary part presents as a real one.
fn demote(z: RpaComplex) -> Value {
    if z.im_part().is_zero() {
        Value::Real(z.re_part().clone())
    } else {
        Value::Complex(z)
    }
}

pub fn eval(expr: &Expr, session: &Session) -> Result<Value, CliError> {
    let filter = session.filter.clone();
    match expr {
        Expr::Number(r) => Ok(Value::Real(RpaReal::embed(r.clone(), filter))),
        Expr::Imag(r) => Ok(Value::Complex(RpaComplex::embed(
            BigRational::from_integer(0.into()),
            r.clone(),
            filter,
        ))),
        Expr::ImagUnit => Ok(Value::Complex(RpaComplex::i(filter))),
        Expr::Index => Ok(Value::Real(RpaReal::omega(filter))),
        Expr::IndexPower(exp) => {
            let germ = Germ::uniform(rpa_core::PuiseuxPoly::monomial(
                exp.clone(),
                BigRational::from_integer(1.into()),
            ));
            Ok(Value::Real(RpaReal::new(filter, germ)?))
        }
        Expr::ClassGerm(entries) => {
            let polys = entries
                .iter()
                .map(|e| class_entry_poly(e, session.trunc))
                .collect::<Result<Vec<_>, _>>()?;
            let germ = Germ::new(entries.len() as u64, polys);
            Ok(Value::Real(RpaReal::new(filter, germ)?))
        }
        Expr::Patch(map) => Ok(Value::Real(RpaReal::from_spec(Germ::zero(), map, filter)?)),
        Expr::Wave { breaks, coeffs } => {
            let points = breaks
                .iter()
                .map(|e| as_real(eval(e, session)?, "wave breakpoint"))
                .collect::<Result<Vec<_>, _>>()?;
            let grid = Grid::new(points)?;
            let coeffs = coeffs
                .iter()
                .map(|e| as_complex(eval(e, session)?, "wave coefficient"))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Value::Wave(StepWave::new(grid, coeffs)?))
        }
        Expr::Operator { grid, matrix } => {
            let points = grid
                .iter()
                .map(|e| as_real(eval(e, session)?, "grid breakpoint"))
                .collect::<Result<Vec<_>, _>>()?;
            let grid = Grid::new(points)?;
            let matrix = matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| as_complex(eval(e, session)?, "matrix entry"))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Value::Operator(GridOperator::new(grid, matrix)?))
        }
        Expr::Name(name) => Ok(session.lookup(name)?.clone()),
        Expr::Neg(inner) => match eval(inner, session)? {
            Value::Real(x) => Ok(Value::Real(-&x)),
            Value::Complex(z) => Ok(Value::Complex(-&z)),
            Value::Wave(w) => Ok(Value::Wave(
                w.scalar_mul(&RpaComplex::from_ints(-1, 0, filter))?,
            )),
            Value::Operator(op) => Ok(Value::Operator(
                op.scalar_mul(&RpaComplex::from_ints(-1, 0, filter))?,
            )),
        },
        Expr::Binary(op, lhs, rhs) => {
            let lhs = eval(lhs, session)?;
            let rhs = eval(rhs, session)?;
            eval_binary(op, lhs, rhs)
        }
        Expr::Call(func, arg) => {
            let arg = eval(arg, session)?;
            match func {
                Func::Re => Ok(Value::Real(as_complex(arg, "re")?.re_part().clone())),
                Func::Im => Ok(Value::Real(as_complex(arg, "im")?.im_part().clone())),
                Func::Conj => Ok(demote(as_complex(arg, "conj")?.conj())),
                Func::Abs2 => Ok(Value::Real(as_complex(arg, "abs2")?.abs_squared())),
                Func::Sqrt => {
                    let x = as_real(arg, "sqrt")?;
                    Ok(Value::Real(x.sqrt_nonneg(session.trunc)?))
                }
            }
        }
    }
}

/// Class-literal entries are closed scalar expressions over `n`; names and
/// nested literals would mix filters, so they are rejected. Entries are
/// evaluated under the Fréchet filter, where germs are untouched.
fn class_entry_poly(entry: &Expr, trunc: u32) -> Result<rpa_core::PuiseuxPoly, CliError> {
    validate_class_entry(entry)?;
    let scratch = Session::new(FilterSpec::Frechet, trunc, 0);
    let value = eval(entry, &scratch)?;
    let real = as_real(value, "class entry")?;
    debug_assert_eq!(real.germ().modulus(), 1);
    Ok(real.germ().class_poly(0).clone())
}

fn validate_class_entry(entry: &Expr) -> Result<(), CliError> {
    match entry {
        Expr::Number(_) | Expr::Imag(_) | Expr::ImagUnit | Expr::Index | Expr::IndexPower(_) => {
            Ok(())
        }
        Expr::Neg(inner) => validate_class_entry(inner),
        Expr::Binary(_, lhs, rhs) => {
            validate_class_entry(lhs)?;
            validate_class_entry(rhs)
        }
        Expr::Call(_, arg) => validate_class_entry(arg),
        Expr::Name(_) => Err(CliError::Type(
            "names are not allowed inside class literals".into(),
        )),
        _ => Err(CliError::Type(
            "class entries must be plain scalar expressions".into(),
        )),
    }
}

fn eval_binary(op: &BinOp, lhs: Value, rhs: Value) -> Result<Value, CliError> {
    use Value::{Complex, Operator, Real, Wave};
    match (&lhs, &rhs) {
        (Real(a), Real(b)) => {
            let result = match op {
                BinOp::Add => a.checked_add(b)?,
                BinOp::Sub => a.checked_sub(b)?,
                BinOp::Mul => a.checked_mul(b)?,
                BinOp::Div => a.checked_div(b)?,
            };
            Ok(Real(result))
        }
        (Real(_) | Complex(_), Real(_) | Complex(_)) => {
            let a = as_complex(lhs, "operand")?;
            let b = as_complex(rhs, "operand")?;
            let result = match op {
                BinOp::Add => a.checked_add(&b)?,
                BinOp::Sub => a.checked_sub(&b)?,
                BinOp::Mul => a.checked_mul(&b)?,
                BinOp::Div => a.checked_div(&b)?,
            };
            Ok(demote(result))
        }
        (Wave(a), Wave(b)) => match op {
            BinOp::Add => Ok(Wave(a.add(b)?)),
            BinOp::Sub => {
                let minus = b.scalar_mul(&RpaComplex::from_ints(-1, 0, b.filter().clone()))?;
                Ok(Wave(a.add(&minus)?))
            }
            BinOp::Mul => Ok(Wave(a.pointwise_mul(b)?)),
            BinOp::Div => Err(CliError::Type("waves cannot be divided".into())),
        },
        (Real(_) | Complex(_), Wave(w)) if *op == BinOp::Mul => {
            let c = as_complex(lhs, "scalar")?;
            Ok(Wave(w.scalar_mul(&c)?))
        }
        (Wave(w), Real(_) | Complex(_)) => {
            let c = as_complex(rhs, "scalar")?;
            match op {
                BinOp::Mul => Ok(Wave(w.scalar_mul(&c)?)),
                BinOp::Div => Ok(Wave(w.scalar_mul(&c.try_invert()?)?)),
                _ => Err(CliError::Type(
                    "waves support scalar `*` and `/` only".into(),
                )),
            }
        }
        (Operator(a), Operator(b)) => match op {
            BinOp::Add => Ok(Operator(a.add(b)?)),
            BinOp::Sub => Ok(Operator(a.sub(b)?)),
            BinOp::Mul => Ok(Operator(a.matmul(b)?)),
            BinOp::Div => Err(CliError::Type("operators cannot be divided".into())),
        },
        (Real(_) | Complex(_), Operator(o)) if *op == BinOp::Mul => {
            let c = as_complex(lhs, "scalar")?;
            Ok(Operator(o.scalar_mul(&c)?))
        }
        (Operator(o), Real(_) | Complex(_)) => {
            let c = as_complex(rhs, "scalar")?;
            match op {
                BinOp::Mul => Ok(Operator(o.scalar_mul(&c)?)),
                BinOp::Div => Ok(Operator(o.scalar_mul(&c.try_invert()?)?)),
                _ => Err(CliError::Type(
                    "operators support scalar `*` and `/` only".into(),
                )),
            }
        }
        (Operator(o), Wave(w)) if *op == BinOp::Mul => Ok(Wave(o.apply(w)?)),
        _ => Err(CliError::Type(format!(
            "operator `{op:?}` is not defined between {} and {}",
            lhs.type_name(),
            rhs.type_name()
        ))),
    }
}
