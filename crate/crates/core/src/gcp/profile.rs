//! User supplied values for the constants the bounds depend on.
//!
//! File format:
//!
//! ```json
//! {"chi":{"0":0,"1":2},"eta":{"1,0,2":5},"theta":{"1":3},"certified":false}
//! ```
//!
//! With `"monotone_extend":true` a lookup at a missing key falls back to
//! the largest defined key below it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::GcpError;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstantsProfile {
    chi: BTreeMap<u64, u64>,
    eta: BTreeMap<(u64, u64, u64), u64>,
    theta: BTreeMap<u64, u64>,
    /// The user attests that every value is a valid upper bound.
    pub certified: bool,
    pub monotone_extend: bool,
    /// Accept a profile whose constants are all zero.
    pub allow_degenerate: bool,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct RawProfile {
    #[serde(default)]
    chi: BTreeMap<String, u64>,
    #[serde(default)]
    eta: BTreeMap<String, u64>,
    #[serde(default)]
    theta: BTreeMap<String, u64>,
    #[serde(default)]
    certified: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    monotone_extend: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    allow_degenerate: bool,
}

fn parse_key(key: &str) -> Result<u64, GcpError> {
    key.trim()
        .parse()
        .map_err(|_| GcpError::InvalidProfile(format!("bad key `{key}`")))
}

impl ConstantsProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_chi(mut self, k: u64, value: u64) -> Self {
        self.chi.insert(k, value);
        self
    }

    pub fn with_eta(mut self, lambda: u64, c: u64, k: u64, value: u64) -> Self {
        self.eta.insert((lambda, c, k), value);
        self
    }

    pub fn with_theta(mut self, mu: u64, value: u64) -> Self {
        self.theta.insert(mu, value);
        self
    }

    pub fn with_monotone_extend(mut self, on: bool) -> Self {
        self.monotone_extend = on;
        self
    }

    pub fn from_json(text: &str) -> Result<Self, GcpError> {
        let raw: RawProfile =
            serde_json::from_str(text).map_err(|e| GcpError::InvalidProfile(e.to_string()))?;
        let mut p = ConstantsProfile {
            certified: raw.certified,
            monotone_extend: raw.monotone_extend,
            allow_degenerate: raw.allow_degenerate,
            ..Self::default()
        };
        for (k, v) in raw.chi {
            p.chi.insert(parse_key(&k)?, v);
        }
        for (k, v) in raw.theta {
            p.theta.insert(parse_key(&k)?, v);
        }
        for (k, v) in raw.eta {
            let parts = k.split(',').map(parse_key).collect::<Result<Vec<_>, _>>()?;
            match parts[..] {
                [l, c, kk] => p.eta.insert((l, c, kk), v),
                _ => return Err(GcpError::InvalidProfile(format!("bad eta key `{k}`"))),
            };
        }
        p.validate()?;
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        let raw = RawProfile {
            chi: self.chi.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            eta: self
                .eta
                .iter()
                .map(|((l, c, k), v)| (format!("{l},{c},{k}"), *v))
                .collect(),
            theta: self.theta.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            certified: self.certified,
            monotone_extend: self.monotone_extend,
            allow_degenerate: self.allow_degenerate,
        };
        serde_json::to_string(&raw).expect("profile serializes")
    }

    /// `chi` and `theta` must be nondecreasing; an all-zero profile is
    /// rejected unless `allow_degenerate` is set.
    pub fn validate(&self) -> Result<(), GcpError> {
        let monotone = |m: &BTreeMap<u64, u64>| m.values().zip(m.values().skip(1)).all(|(a, b)| a <= b);
        if !monotone(&self.chi) {
            return Err(GcpError::InvalidProfile("chi is not nondecreasing".into()));
        }
        if !monotone(&self.theta) {
            return Err(GcpError::InvalidProfile("theta is not nondecreasing".into()));
        }
        let defined = !(self.chi.is_empty() && self.eta.is_empty() && self.theta.is_empty());
        let all_zero = self
            .chi
            .values()
            .chain(self.eta.values())
            .chain(self.theta.values())
            .all(|&v| v == 0);
        if defined && all_zero && !self.allow_degenerate {
            return Err(GcpError::InvalidProfile(
                "all constants are zero; set allow_degenerate to force".into(),
            ));
        }
        Ok(())
    }

    fn lookup<K: Ord + Copy>(
        &self,
        map: &BTreeMap<K, u64>,
        key: K,
        fits: impl Fn(&K) -> bool,
    ) -> Option<u64> {
        if let Some(v) = map.get(&key) {
            return Some(*v);
        }
        if !self.monotone_extend {
            return None;
        }
        map.range(..=key).rev().find(|(k, _)| fits(k)).map(|(_, v)| *v)
    }

    pub fn chi(&self, k: u64) -> Result<u64, GcpError> {
        self.lookup(&self.chi, k, |_| true)
            .ok_or_else(|| GcpError::MissingConstant(format!("chi({k})")))
    }

    pub fn eta(&self, lambda: u64, c: u64, k: u64) -> Result<u64, GcpError> {
        self.lookup(&self.eta, (lambda, c, k), |&(l, cc, _)| l == lambda && cc == c)
            .ok_or_else(|| GcpError::MissingConstant(format!("eta({lambda},{c},{k})")))
    }

    pub fn theta(&self, mu: u64) -> Result<u64, GcpError> {
        self.lookup(&self.theta, mu, |_| true)
            .ok_or_else(|| GcpError::MissingConstant(format!("theta({mu})")))
    }
}
