use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ConstantsProfile, GcpError};

/// Bit budget for a single bound; anything larger is reported as overflow.
const MAX_BOUND_BITS: u64 = 1 << 32;

/// `(|X|^chi + 1)^(|X|^mu + 1)` for an explicit `chi`.
pub fn relative_length_bound_for(
    chi: u64,
    mu: u64,
    alphabet_size: u64,
) -> Result<BigUint, GcpError> {
    let chi = u32::try_from(chi).map_err(|_| GcpError::BoundOverflow)?;
    let mu = u32::try_from(mu).map_err(|_| GcpError::BoundOverflow)?;
    let exponent = alphabet_size
        .checked_pow(mu)
        .and_then(|v| v.checked_add(1))
        .and_then(|v| u32::try_from(v).ok())
        .ok_or(GcpError::BoundOverflow)?;
    let base = BigUint::from(alphabet_size).pow(chi) + BigUint::one();
    if base.bits().saturating_mul(u64::from(exponent)) > MAX_BOUND_BITS {
        return Err(GcpError::BoundOverflow);
    }
    Ok(base.pow(exponent))
}

/// Bound on the relative length of a conjugator of minimal relative length.
pub fn relative_length_bound(
    mu: u64,
    alphabet_size: u64,
    profile: &ConstantsProfile,
) -> Result<BigUint, GcpError> {
    relative_length_bound_for(profile.chi(mu)?, mu, alphabet_size)
}

/// The relative bound together with `g(mu) = max(theta(mu), eta(1, 0, chi(mu)))`
/// and the search radius `relative · g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub relative: BigUint,
    pub g: u64,
    pub radius: BigUint,
}

/// Bound on `|x|_X` for some conjugator.
pub fn theorem4_bound(
    mu: u64,
    alphabet_size: u64,
    profile: &ConstantsProfile,
) -> Result<Bounds, GcpError> {
    let chi = profile.chi(mu)?;
    let eta = profile.eta(1, 0, chi)?;
    let theta = profile.theta(mu)?;
    let relative = relative_length_bound_for(chi, mu, alphabet_size)?;
    let g = theta.max(eta);
    let radius = if g == 0 {
        BigUint::zero()
    } else {
        &relative * BigUint::from(g)
    };
    Ok(Bounds {
        relative,
        g,
        radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_relative_bounds() {
        assert_eq!(relative_length_bound_for(1, 1, 2).unwrap(), BigUint::from(27u32));
        assert_eq!(relative_length_bound_for(0, 0, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(relative_length_bound_for(2, 1, 3).unwrap(), BigUint::from(10000u32));
        let p = ConstantsProfile::new().with_chi(1, 1);
        assert_eq!(relative_length_bound(1, 2, &p).unwrap(), BigUint::from(27u32));
        assert_eq!(
            relative_length_bound(2, 2, &p),
            Err(GcpError::MissingConstant("chi(2)".into()))
        );
    }

    #[test]
    fn pinned_theorem4_bounds() {
        let p = ConstantsProfile::new().with_chi(1, 1).with_theta(1, 2).with_eta(1, 0, 1, 3);
        let b = theorem4_bound(1, 2, &p).unwrap();
        assert_eq!(b.relative, BigUint::from(27u32));
        assert_eq!(b.radius, BigUint::from(81u32));
        let p = ConstantsProfile::new().with_chi(1, 1).with_theta(1, 1).with_eta(1, 0, 1, 1);
        assert_eq!(theorem4_bound(1, 2, &p).unwrap().radius, BigUint::from(27u32));
        let p = ConstantsProfile::new().with_chi(1, 1).with_theta(1, 0).with_eta(1, 0, 1, 0);
        assert_eq!(theorem4_bound(1, 2, &p).unwrap().radius, BigUint::zero());
    }

    #[test]
    fn huge_exponents_overflow() {
        assert_eq!(relative_length_bound_for(3, 40, 6), Err(GcpError::BoundOverflow));
        // about 750 kbit, still exact
        assert!(relative_length_bound_for(6, 6, 6).is_ok());
    }
}
