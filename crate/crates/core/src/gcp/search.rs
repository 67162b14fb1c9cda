//! Bounded conjugator search over balls in the Cayley graph.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{theorem4_bound, ConjugacyInstance, ConstantsProfile, GcpError};
use crate::groups::{BallOptions, Elem, GroupError, Layers, Parallelism, DEFAULT_MAX_ELEMENTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Exhausting the radius only yields `Inconclusive`.
    #[default]
    Heuristic,
    /// Exhausting the bound radius of a certified profile yields
    /// `NotConjugate`.
    Certified,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_elements: usize,
    pub max_radius: usize,
    pub parallelism: Parallelism,
    pub mode: Mode,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_elements: DEFAULT_MAX_ELEMENTS,
            max_radius: 8,
            parallelism: Parallelism::serial(),
            mode: Mode::Heuristic,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub elements_enumerated: usize,
    pub candidates_checked: usize,
    pub wall_time: Duration,
    /// Largest radius whose sphere was fully enumerated.
    pub radius_reached: Option<usize>,
    /// The element cap stopped the enumeration.
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Conjugate { witness: Elem },
    /// No conjugator exists (within a certified radius, or anywhere when
    /// the whole finite group was enumerated).
    NotConjugate { radius: BigUint },
    /// No conjugator within `radius`; nothing is claimed beyond it.
    Inconclusive { radius: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

impl Decision {
    pub fn witness(&self) -> Option<&Elem> {
        match &self.verdict {
            Verdict::Conjugate { witness } => Some(witness),
            _ => None,
        }
    }
}

pub fn verify_conjugator(inst: &ConjugacyInstance, x: &Elem) -> Result<bool, GcpError> {
    inst.group().check(x)?;
    Ok(inst.is_conjugated_by(x))
}

/// `a_i x = x b_i` for all `i`, which avoids inverting each candidate.
fn conjugates(inst: &ConjugacyInstance, x: &Elem) -> bool {
    let g = inst.group();
    inst.a().iter().zip(inst.b()).all(|(a, b)| g.mul(a, x) == g.mul(x, b))
}

fn found(inst: &ConjugacyInstance, witness: Elem, stats: SearchStats) -> Decision {
    assert!(
        inst.is_conjugated_by(&witness),
        "search returned a non-conjugator"
    );
    Decision {
        verdict: Verdict::Conjugate { witness },
        stats,
    }
}

/// Searches `B_radius(1)` layer by layer and returns the first conjugator
/// in enumeration order. On exhaustion the verdict is `NotConjugate` when
/// `certified` is set, else `Inconclusive`. Hitting the element cap always
/// gives `Inconclusive` for the last complete radius.
pub fn solve_bounded(
    inst: &ConjugacyInstance,
    radius: &BigUint,
    certified: bool,
    config: &SearchConfig,
) -> Result<Decision, GcpError> {
    let start = Instant::now();
    let g = inst.group();
    // radii beyond usize can never be exhausted under the cap anyway
    let r = radius.to_usize().unwrap_or(usize::MAX);
    let options = BallOptions {
        max_elements: config.max_elements.max(1),
        parallelism: config.parallelism.clone(),
    };
    let mut layers = Layers::new(g, r, options);
    let mut stats = SearchStats::default();
    let mut depth = 0usize;
    while let Some(layer) = layers.next() {
        let layer = match layer {
            Ok(l) => l,
            Err(GroupError::ResourceLimit { .. }) => {
                stats.truncated = true;
                stats.elements_enumerated = layers.produced();
                stats.wall_time = start.elapsed();
                let searched = stats.radius_reached.unwrap_or(0);
                return Ok(Decision {
                    verdict: Verdict::Inconclusive {
                        radius: BigUint::from(searched),
                    },
                    stats,
                });
            }
            Err(e) => return Err(e.into()),
        };
        let hit = config
            .parallelism
            .position_first(&layer, |x| conjugates(inst, x));
        stats.elements_enumerated = layers.produced();
        match hit {
            Some(i) => {
                stats.candidates_checked += i + 1;
                stats.radius_reached = Some(depth);
                stats.wall_time = start.elapsed();
                let witness = layer.into_iter().nth(i).expect("index in layer");
                return Ok(found(inst, witness, stats));
            }
            None => stats.candidates_checked += layer.len(),
        }
        stats.radius_reached = Some(depth);
        depth += 1;
    }
    stats.wall_time = start.elapsed();
    let whole_group = layers.exhausted() || g.order() == Some(layers.produced());
    let verdict = if certified || whole_group {
        Verdict::NotConjugate {
            radius: radius.clone(),
        }
    } else {
        Verdict::Inconclusive {
            radius: radius.clone(),
        }
    };
    Ok(Decision { verdict, stats })
}

/// Heuristic search up to `config.max_radius` without any bound.
pub fn search(inst: &ConjugacyInstance, config: &SearchConfig) -> Result<Decision, GcpError> {
    solve_bounded(inst, &BigUint::from(config.max_radius), false, config)
}

/// Computes the bound radius `R` for the instance and searches.
///
/// Certified mode with a certified profile searches the whole of `B_R(1)`.
/// Otherwise the search runs to `min(R, max_radius)`; since the balls are
/// enumerated incrementally, one pass gives the same answer as iterative
/// deepening over radii 1, 2, 4, ...
///
/// A bound too large to represent is treated as infinite.
pub fn solve(
    inst: &ConjugacyInstance,
    profile: &ConstantsProfile,
    config: &SearchConfig,
) -> Result<Decision, GcpError> {
    profile.validate()?;
    let size = inst.group().alphabet().len() as u64;
    let cap = BigUint::from(config.max_radius);
    let bound = match theorem4_bound(inst.mu() as u64, size, profile) {
        Ok(b) => Some(b.radius),
        // a bound this large can never be exhausted; search heuristically
        Err(GcpError::BoundOverflow) => None,
        Err(e) => return Err(e),
    };
    match bound {
        Some(r) if config.mode == Mode::Certified && profile.certified => {
            solve_bounded(inst, &r, true, config)
        }
        Some(r) => solve_bounded(inst, &r.min(cap), false, config),
        None => solve_bounded(inst, &cap, false, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog::*;
    use crate::groups::Group;

    fn decide(inst: &ConjugacyInstance, r: u32, certified: bool) -> Decision {
        solve_bounded(inst, &BigUint::from(r), certified, &SearchConfig::default()).unwrap()
    }

    #[test]
    fn bounded_examples() {
        let g = modular_group();
        let inst = ConjugacyInstance::parse(&g, &["s t"], &["t s"]).unwrap();
        let d = decide(&inst, 1, false);
        assert_eq!(d.witness(), Some(&g.parse_elem("s").unwrap()));

        let inst = ConjugacyInstance::parse(&g, &["s t", "t"], &["s t", "t"]).unwrap();
        assert_eq!(decide(&inst, 5, false).witness(), Some(&g.identity()));

        let inst = ConjugacyInstance::parse(&g, &["t"], &["t t"]).unwrap();
        let d = decide(&inst, 4, false);
        assert_eq!(
            d.verdict,
            Verdict::Inconclusive {
                radius: BigUint::from(4u32)
            }
        );
        assert_eq!(d.stats.radius_reached, Some(4));
        assert_eq!(d.stats.elements_enumerated, g.ball(4).unwrap().len());
        assert!(matches!(decide(&inst, 4, true).verdict, Verdict::NotConjugate { .. }));
    }

    #[test]
    fn cap_gives_inconclusive() {
        let g = modular_group();
        let inst = ConjugacyInstance::parse(&g, &["t"], &["t t"]).unwrap();
        let config = SearchConfig {
            max_elements: 10,
            ..SearchConfig::default()
        };
        let d = solve_bounded(&inst, &BigUint::from(6u32), true, &config).unwrap();
        assert!(d.stats.truncated);
        // ball sizes are 1, 4, 8, 14: radius 2 is the last one under the cap
        assert_eq!(
            d.verdict,
            Verdict::Inconclusive {
                radius: BigUint::from(2u32)
            }
        );
    }

    #[test]
    fn exhausting_a_finite_group_is_definite() {
        let g = s3();
        let inst = ConjugacyInstance::parse(&g, &["a"], &["a b a b"]).unwrap();
        let d = decide(&inst, 10, false);
        assert!(matches!(d.verdict, Verdict::NotConjugate { .. }));
        assert_eq!(d.stats.elements_enumerated, 6);
    }

    #[test]
    fn solve_examples() {
        let g = free_as_product(&["p", "q"]).unwrap();
        let profile = ConstantsProfile::new()
            .with_chi(1, 1)
            .with_theta(1, 1)
            .with_eta(1, 0, 1, 1)
            .with_monotone_extend(true);
        let inst = ConjugacyInstance::parse(&g, &["p", "q"], &["q^-1 p q", "q"]).unwrap();
        let d = solve(&inst, &profile, &SearchConfig::default()).unwrap();
        assert_eq!(d.witness(), Some(&g.parse_elem("q").unwrap()));

        let inst = ConjugacyInstance::parse(&g, &["p"], &["p"]).unwrap();
        let d = solve(&inst, &profile, &SearchConfig::default()).unwrap();
        assert_eq!(d.witness(), Some(&g.identity()));
        assert_eq!(d.stats.radius_reached, Some(0));

        let inst = ConjugacyInstance::parse(&g, &["p"], &["q"]).unwrap();
        assert!(matches!(
            solve(&inst, &ConstantsProfile::new(), &SearchConfig::default()),
            Err(GcpError::MissingConstant(_))
        ));
    }

    #[test]
    fn degenerate_profile() {
        let g = free_as_product(&["p", "q"]).unwrap();
        let inst = ConjugacyInstance::parse(&g, &["p"], &["q"]).unwrap();
        let mut profile = ConstantsProfile::new()
            .with_chi(1, 0)
            .with_theta(1, 0)
            .with_eta(1, 0, 0, 0);
        profile.certified = true;
        let config = SearchConfig {
            mode: Mode::Certified,
            ..SearchConfig::default()
        };
        assert!(matches!(
            solve(&inst, &profile, &config),
            Err(GcpError::InvalidProfile(_))
        ));
        profile.allow_degenerate = true;
        let d = solve(&inst, &profile, &config).unwrap();
        assert_eq!(
            d.verdict,
            Verdict::NotConjugate {
                radius: BigUint::from(0u32)
            }
        );
    }

    #[test]
    fn uncertified_profile_stays_heuristic() {
        let g = modular_group();
        let inst = ConjugacyInstance::parse(&g, &["t"], &["t t"]).unwrap();
        let profile = ConstantsProfile::new()
            .with_chi(1, 1)
            .with_theta(1, 3)
            .with_eta(1, 0, 1, 3);
        let config = SearchConfig {
            mode: Mode::Certified,
            max_radius: 3,
            ..SearchConfig::default()
        };
        let d = solve(&inst, &profile, &config).unwrap();
        assert_eq!(
            d.verdict,
            Verdict::Inconclusive {
                radius: BigUint::from(3u32)
            }
        );
    }

    #[test]
    fn verify_examples() {
        let g = modular_group();
        let inst = ConjugacyInstance::parse(&g, &["s t"], &["t s"]).unwrap();
        assert!(verify_conjugator(&inst, &g.parse_elem("s").unwrap()).unwrap());
        assert!(!verify_conjugator(&inst, &g.identity()).unwrap());
        let f = Group::free(&["p", "q"]).unwrap();
        let inst2 = ConjugacyInstance::parse(&f, &["p"], &["q^-1 p q"]).unwrap();
        assert!(verify_conjugator(&inst2, &f.parse_elem("q").unwrap()).unwrap());
        assert!(verify_conjugator(&inst, &Elem::Finite(9)).is_err());
    }

    #[test]
    fn parallel_matches_serial() {
        let g = modular_group();
        let x = g.parse_elem("t s t s t^-1").unwrap();
        let a = vec![g.parse_elem("s t").unwrap(), g.parse_elem("t").unwrap()];
        let b = a.iter().map(|e| g.conj(e, &x)).collect();
        let inst = ConjugacyInstance::new(&g, a, b).unwrap();
        let serial = decide(&inst, 6, false);
        let config = SearchConfig {
            parallelism: Parallelism::with_workers(4),
            ..SearchConfig::default()
        };
        let par = solve_bounded(&inst, &BigUint::from(6u32), false, &config).unwrap();
        assert_eq!(serial.verdict, par.verdict);
        assert_eq!(serial.stats.candidates_checked, par.stats.candidates_checked);
    }
}
