//! Propagator families selectable by name.
//!
//! Each family maps a pair of times `(t, s)` to a 2×2 propagator. The
//! registry is populated with the eigenframe propagator, the five
//! frame-transformed propagators, the numerically integrated time-ordered
//! propagator, and the scaled hyperbolic propagator; more can be registered.

use std::fmt;
use std::sync::Arc;

use crate::brach::{eigenframe_propagator, optimal_hamiltonian, OptimalQubitParams};
use crate::cmat::Mat2;
use crate::error::{Error, Result};
use crate::frames::{transformed_propagator, FrameLabel};
use crate::hyper::{hyper_propagator, HyperbolicParams};
use crate::propnum::{schrodinger_propagate, IntegratorConfig};

pub trait PropagatorFamily: Send + Sync {
    fn name(&self) -> &str;
    fn propagator(&self, t: f64, s: f64) -> Result<Mat2>;
    fn is_unitary(&self) -> bool {
        true
    }
}

pub struct EigenframeFamily(pub OptimalQubitParams);

impl PropagatorFamily for EigenframeFamily {
    fn name(&self) -> &str {
        "eigenframe"
    }

    fn propagator(&self, t: f64, s: f64) -> Result<Mat2> {
        Ok(eigenframe_propagator(&self.0, t, s))
    }
}

/// `Q W(t) W†(s) Q⁻¹` in closed form.
pub struct FrameFamily {
    pub label: FrameLabel,
    pub params: OptimalQubitParams,
}

impl PropagatorFamily for FrameFamily {
    fn name(&self) -> &str {
        self.label.as_str()
    }

    fn propagator(&self, t: f64, s: f64) -> Result<Mat2> {
        transformed_propagator(self.label, &self.params, t, s)
    }
}

/// Time-ordered propagator of the optimal Hamiltonian by adaptive integration.
pub struct NumericalFamily {
    pub params: OptimalQubitParams,
    pub config: IntegratorConfig,
}

impl PropagatorFamily for NumericalFamily {
    fn name(&self) -> &str {
        "numerical"
    }

    fn propagator(&self, t: f64, s: f64) -> Result<Mat2> {
        let p = self.params;
        let res = schrodinger_propagate(
            &move |x: f64| optimal_hamiltonian(&p, x),
            s,
            t,
            &self.config,
        )?;
        if !res.accepted {
            return Err(Error::InvalidArgument(format!(
                "integrator ran out of steps at t = {}",
                res.t_reached
            )));
        }
        Ok(res.propagator)
    }
}

pub struct HyperbolicFamily(pub HyperbolicParams);

impl PropagatorFamily for HyperbolicFamily {
    fn name(&self) -> &str {
        "hyperbolic"
    }

    fn propagator(&self, t: f64, s: f64) -> Result<Mat2> {
        let m = hyper_propagator(&self.0, t, s);
        m.ensure_finite("hyperbolic propagator")?;
        Ok(m)
    }

    fn is_unitary(&self) -> bool {
        false
    }
}

/// Name-keyed collection of families; lookup ignores ASCII case.
#[derive(Clone, Default)]
pub struct FamilyRegistry {
    entries: Vec<Arc<dyn PropagatorFamily>>,
}

impl fmt::Debug for FamilyRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

impl FamilyRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_defaults(p: &OptimalQubitParams) -> Self {
        let mut reg = Self::new();
        reg.register(Arc::new(EigenframeFamily(*p)));
        for label in &FrameLabel::PROPAGATOR_FRAMES[1..] {
            reg.register(Arc::new(FrameFamily {
                label: *label,
                params: *p,
            }));
        }
        reg.register(Arc::new(NumericalFamily {
            params: *p,
            config: IntegratorConfig::with_tolerance(1e-12),
        }));
        reg.register(Arc::new(HyperbolicFamily(HyperbolicParams {
            amplitude: p.amplitude,
            frequency: p.frame_frequency,
        })));
        reg
    }

    /// Adds a family, replacing any existing one with the same name.
    pub fn register(&mut self, family: Arc<dyn PropagatorFamily>) {
        match self
            .entries
            .iter()
            .position(|f| f.name().eq_ignore_ascii_case(family.name()))
        {
            Some(i) => self.entries[i] = family,
            None => self.entries.push(family),
        }
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn PropagatorFamily>> {
        self.entries
            .iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
            .cloned()
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|f| f.name()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brach::optimal_time_ordered_propagator;

    fn registry() -> FamilyRegistry {
        FamilyRegistry::with_defaults(&OptimalQubitParams::on_solution(1.0, 1.0))
    }

    #[test]
    fn default_names() {
        assert_eq!(
            registry().names(),
            [
                "eigenframe",
                "T",
                "T-inv",
                "S",
                "S-inv",
                "V",
                "numerical",
                "hyperbolic"
            ]
        );
    }

    #[test]
    fn lookup_is_case_insensitive() {
        let reg = registry();
        assert_eq!(reg.get("t-INV").unwrap().name(), "T-inv");
        assert!(matches!(reg.get("Z"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn every_family_is_identity_at_equal_times() {
        let reg = registry();
        for name in reg.names() {
            let u = reg.get(name).unwrap().propagator(0.4, 0.4).unwrap();
            assert!(u.approx_eq(&Mat2::identity(), 1e-15), "{name}");
        }
    }

    #[test]
    fn numerical_family_is_time_ordered() {
        let p = OptimalQubitParams::on_solution(1.0, 1.0);
        let u = registry()
            .get("numerical")
            .unwrap()
            .propagator(1.2, 0.1)
            .unwrap();
        assert!(u.approx_eq(&optimal_time_ordered_propagator(&p, 1.2, 0.1), 1e-9));
    }

    #[test]
    fn unitarity_flags() {
        let reg = registry();
        assert!(!reg.get("hyperbolic").unwrap().is_unitary());
        assert!(reg.get("V").unwrap().is_unitary());
        let m = reg.get("hyperbolic").unwrap().propagator(1.0, 0.0).unwrap();
        assert!(m.unitarity_residual() > 0.1);
    }

    #[test]
    fn register_replaces_by_name() {
        struct Fixed;
        impl PropagatorFamily for Fixed {
            fn name(&self) -> &str {
                "V"
            }
            fn propagator(&self, _t: f64, _s: f64) -> Result<Mat2> {
                Ok(Mat2::pauli_x())
            }
        }
        let mut reg = registry();
        reg.register(Arc::new(Fixed));
        assert_eq!(reg.names().len(), 8);
        assert_eq!(
            reg.get("v").unwrap().propagator(0.0, 0.0).unwrap(),
            Mat2::pauli_x()
        );
    }
}
