use std::collections::HashMap;
use std::sync::Arc;

use super::expr::{self, Expression, Function, Node};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    X,
    Y,
}

/// First derivative of `e` with respect to `v`, with constant folding only.
pub fn derivative(e: &Node, v: Variable) -> Node {
    match &**e {
        Expression::Number(_) => expr::number(0.0),
        Expression::X => expr::number(if v == Variable::X { 1.0 } else { 0.0 }),
        Expression::Y => expr::number(if v == Variable::Y { 1.0 } else { 0.0 }),
        Expression::Neg(a) => expr::neg(derivative(a, v)),
        Expression::Add(a, b) => expr::add(derivative(a, v), derivative(b, v)),
        Expression::Sub(a, b) => expr::sub(derivative(a, v), derivative(b, v)),
        Expression::Mul(a, b) => expr::add(
            expr::mul(derivative(a, v), b.clone()),
            expr::mul(a.clone(), derivative(b, v)),
        ),
        Expression::Div(a, b) => {
            // (a/b)' = a'/b - a*b'/b^2
            let da = derivative(a, v);
            let db = derivative(b, v);
            expr::sub(
                expr::div(da, b.clone()),
                expr::div(expr::mul(a.clone(), db), expr::pow(b.clone(), 2)),
            )
        }
        Expression::Pow(a, k) => expr::mul(
            expr::mul(expr::number(f64::from(*k)), expr::pow(a.clone(), k - 1)),
            derivative(a, v),
        ),
        Expression::Call(f, a) => {
            let da = derivative(a, v);
            let outer = match f {
                Function::Exp => e.clone(),
                Function::Log => expr::div(expr::number(1.0), a.clone()),
                Function::Sin => expr::call(Function::Cos, a.clone()),
                Function::Cos => expr::neg(expr::call(Function::Sin, a.clone())),
                Function::Sqrt => expr::div(expr::number(0.5), e.clone()),
            };
            expr::mul(outer, da)
        }
    }
}

/// Memoized table of mixed partials of one expression.
///
/// `(i, j)` is reached from `(i-1, j)` by an x-derivative, or from `(0, j-1)`
/// by a y-derivative when `i = 0`, so every partial is built once.
#[derive(Debug, Clone)]
pub struct PartialCache {
    cache: HashMap<(u32, u32), Node>,
}

impl PartialCache {
    pub fn new(e: &Expression) -> Self {
        let mut cache = HashMap::new();
        cache.insert((0, 0), Arc::new(e.clone()));
        PartialCache { cache }
    }

    pub fn get(&mut self, i: u32, j: u32) -> Node {
        if let Some(node) = self.cache.get(&(i, j)) {
            return node.clone();
        }
        let node = if i > 0 {
            derivative(&self.get(i - 1, j), Variable::X)
        } else {
            derivative(&self.get(0, j - 1), Variable::Y)
        };
        self.cache.insert((i, j), node.clone());
        node
    }
}

pub fn mixed_partial(e: &Expression, i: u32, j: u32) -> Expression {
    Arc::unwrap_or_clone(PartialCache::new(e).get(i, j))
}
