use std::fmt;
use std::sync::Arc;

/// An evaluable function `[0,1] -> [0,1]`.
///
/// Negations and chain components are stored as unary maps; whether a map
/// actually satisfies the range, monotonicity and boundary requirements of
/// its role is validated by the consuming type (sampling-based).
#[derive(Clone)]
pub struct UnaryMap {
    name: String,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl UnaryMap {
    pub fn new(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        UnaryMap { name: name.into(), f: Arc::new(f) }
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The identity map `t -> t`.
    pub fn identity() -> Self {
        UnaryMap::new("t", |t| t)
    }
}

impl fmt::Debug for UnaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnaryMap({})", self.name)
    }
}
