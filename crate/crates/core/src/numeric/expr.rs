use std::fmt;
use std::sync::Arc;

pub type Node = Arc<Expression>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    Exp,
    Log,
    Sin,
    Cos,
    Sqrt,
}

impl Function {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "exp" => Some(Function::Exp),
            "log" => Some(Function::Log),
            "sin" => Some(Function::Sin),
            "cos" => Some(Function::Cos),
            "sqrt" => Some(Function::Sqrt),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Function::Exp => "exp",
            Function::Log => "log",
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Sqrt => "sqrt",
        }
    }

    pub fn apply(self, v: f64) -> f64 {
        match self {
            Function::Exp => v.exp(),
            Function::Log => v.ln(),
            Function::Sin => v.sin(),
            Function::Cos => v.cos(),
            Function::Sqrt => v.sqrt(),
        }
    }
}

/// Syntax tree of a concrete `F(x, y)`. Children are shared, so derivative
/// trees reuse the subtrees they are built from.
#[derive(Debug, Clone, PartialEq)]
pub enum Expression {
    Number(f64),
    X,
    Y,
    Neg(Node),
    Add(Node, Node),
    Sub(Node, Node),
    Mul(Node, Node),
    Div(Node, Node),
    /// Integer powers only.
    Pow(Node, i32),
    Call(Function, Node),
}

impl Expression {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            Expression::Number(v) => *v,
            Expression::X => x,
            Expression::Y => y,
            Expression::Neg(a) => -a.eval(x, y),
            Expression::Add(a, b) => a.eval(x, y) + b.eval(x, y),
            Expression::Sub(a, b) => a.eval(x, y) - b.eval(x, y),
            Expression::Mul(a, b) => a.eval(x, y) * b.eval(x, y),
            Expression::Div(a, b) => a.eval(x, y) / b.eval(x, y),
            Expression::Pow(a, k) => a.eval(x, y).powi(*k),
            Expression::Call(f, a) => f.apply(a.eval(x, y)),
        }
    }

    pub fn as_number(&self) -> Option<f64> {
        match self {
            Expression::Number(v) => Some(*v),
            _ => None,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expression::Add(..) | Expression::Sub(..) => 1,
            Expression::Mul(..) | Expression::Div(..) => 2,
            Expression::Neg(..) => 3,
            Expression::Pow(..) => 4,
            Expression::Number(v) if *v < 0.0 => 3,
            _ => 5,
        }
    }
}

struct Wrapped<'a>(&'a Expression, u8);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Number(v) => write!(f, "{v}"),
            Expression::X => f.write_str("x"),
            Expression::Y => f.write_str("y"),
            Expression::Neg(a) => write!(f, "-{}", Wrapped(a, 3)),
            Expression::Add(a, b) => write!(f, "{} + {}", Wrapped(a, 1), Wrapped(b, 2)),
            Expression::Sub(a, b) => write!(f, "{} - {}", Wrapped(a, 1), Wrapped(b, 2)),
            Expression::Mul(a, b) => write!(f, "{}*{}", Wrapped(a, 2), Wrapped(b, 3)),
            Expression::Div(a, b) => write!(f, "{}/{}", Wrapped(a, 2), Wrapped(b, 3)),
            Expression::Pow(a, k) => write!(f, "{}^{k}", Wrapped(a, 5)),
            Expression::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

// Constructors with constant folding and the identities 0+a, 1*a, a^1, ...

pub fn number(v: f64) -> Node {
    Arc::new(Expression::Number(v))
}

fn is(node: &Expression, v: f64) -> bool {
    node.as_number() == Some(v)
}

pub fn neg(a: Node) -> Node {
    match &*a {
        Expression::Number(v) if *v == 0.0 => number(0.0),
        Expression::Number(v) => number(-v),
        Expression::Neg(inner) => inner.clone(),
        _ => Arc::new(Expression::Neg(a)),
    }
}

pub fn add(a: Node, b: Node) -> Node {
    match (a.as_number(), b.as_number()) {
        (Some(u), Some(v)) => number(u + v),
        (Some(0.0), _) => b,
        (_, Some(0.0)) => a,
        _ => Arc::new(Expression::Add(a, b)),
    }
}

pub fn sub(a: Node, b: Node) -> Node {
    match (a.as_number(), b.as_number()) {
        (Some(u), Some(v)) => number(u - v),
        (Some(0.0), _) => neg(b),
        (_, Some(0.0)) => a,
        _ => Arc::new(Expression::Sub(a, b)),
    }
}

pub fn mul(a: Node, b: Node) -> Node {
    if is(&a, 0.0) || is(&b, 0.0) {
        return number(0.0);
    }
    match (a.as_number(), b.as_number()) {
        (Some(u), Some(v)) => number(u * v),
        (Some(1.0), _) => b,
        (_, Some(1.0)) => a,
        (Some(-1.0), _) => neg(b),
        (_, Some(-1.0)) => neg(a),
        _ => Arc::new(Expression::Mul(a, b)),
    }
}

pub fn div(a: Node, b: Node) -> Node {
    if is(&a, 0.0) {
        return number(0.0);
    }
    match (a.as_number(), b.as_number()) {
        (Some(u), Some(v)) if v != 0.0 => number(u / v),
        (_, Some(1.0)) => a,
        _ => Arc::new(Expression::Div(a, b)),
    }
}

pub fn pow(a: Node, k: i32) -> Node {
    match (a.as_number(), k) {
        (_, 0) => number(1.0),
        (_, 1) => a,
        (Some(v), _) => number(v.powi(k)),
        _ => Arc::new(Expression::Pow(a, k)),
    }
}

pub fn call(f: Function, a: Node) -> Node {
    match a.as_number() {
        Some(v) => number(f.apply(v)),
        None => Arc::new(Expression::Call(f, a)),
    }
}
