use std::fmt;
use std::sync::Arc;

use crate::cmat::Mat2;

/// A time-indexed matrix: `t ↦ M(t)`.
pub trait Generator: Send + Sync {
    fn at(&self, t: f64) -> Mat2;
}

impl<F> Generator for F
where
    F: Fn(f64) -> Mat2 + Send + Sync,
{
    fn at(&self, t: f64) -> Mat2 {
        self(t)
    }
}

/// Shared, cheaply clonable generator handle.
#[derive(Clone)]
pub struct SharedGenerator(Arc<dyn Generator>);

impl SharedGenerator {
    pub fn new(g: impl Generator + 'static) -> Self {
        Self(Arc::new(g))
    }

    pub fn constant(m: Mat2) -> Self {
        Self::new(move |_t: f64| m)
    }

    pub fn at(&self, t: f64) -> Mat2 {
        self.0.at(t)
    }
}

impl Generator for SharedGenerator {
    fn at(&self, t: f64) -> Mat2 {
        self.0.at(t)
    }
}

impl fmt::Debug for SharedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SharedGenerator")
    }
}
