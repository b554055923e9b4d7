//! The patch-growth recurrence for the order-5 cubic tiling and its exact
//! closed form.
//!
//! Growing a ball of tiles outward one layer at a time, the boundary tiles
//! of the n-th patch fall into three kinds according to how many 2-faces
//! they expose (one, two, or three), and the kind counts satisfy a linear
//! recurrence with an exactly solvable matrix. The patch totals grow like
//! powers of `15 + 4*sqrt(14)`, roughly 30 per layer, which is what defeats
//! the cubic volume bound of a normal tiling.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::tiling::quadint::QuadIntZ14;

/// Boundary-tile census of the n-th patch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthState {
    /// Patch index, starting at 1.
    pub n: u64,
    /// Tiles exposing one 2-face.
    pub one_face: BigUint,
    /// Tiles exposing two 2-faces.
    pub two_face: BigUint,
    /// Tiles exposing three 2-faces.
    pub three_face: BigUint,
}

impl GrowthState {
    /// The first patch: the twenty tiles around the starting vertex, all
    /// exposing three 2-faces.
    pub fn initial() -> Self {
        GrowthState {
            n: 1,
            one_face: BigUint::zero(),
            two_face: BigUint::zero(),
            three_face: BigUint::from(20u32),
        }
    }

    pub fn boundary_total(&self) -> BigUint {
        &self.one_face + &self.two_face + &self.three_face
    }
}

/// One layer of growth: applies the exact transition matrix
/// `[[1,2,3],[2,5,9],[4,12,25]]` to the boundary census.
pub fn growth_step(state: &GrowthState) -> GrowthState {
    let (a, b, c) = (&state.one_face, &state.two_face, &state.three_face);
    GrowthState {
        n: state.n + 1,
        one_face: a + b * 2u32 + c * 3u32,
        two_face: a * 2u32 + b * 5u32 + c * 9u32,
        three_face: a * 4u32 + b * 12u32 + c * 25u32,
    }
}

/// Total number of tiles in the n-th patch, by running the recurrence and
/// accumulating every layer's boundary. This is the oracle the closed form
/// is checked against.
pub fn patch_total_by_recurrence(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::Parameter("patch index starts at 1".into()));
    }
    let mut state = GrowthState::initial();
    let mut total = state.boundary_total();
    for _ in 1..n {
        state = growth_step(&state);
        total += state.boundary_total();
    }
    Ok(total)
}

/// Closed form for the patch total:
/// `(5/7) * ((9 / (2*sqrt(14))) * ((15+4*sqrt(14))^n - (15-4*sqrt(14))^n) - 8n)`.
///
/// Writing `(15+4*sqrt(14))^n = t + u*sqrt(14)`, the difference of the two
/// conjugate powers is `2u*sqrt(14)`, so the expression collapses to
/// `5 * (9u - 8n) / 7` in plain integers. The division by 7 must be exact;
/// anything else is an arithmetic bug.
pub fn growth_closed_form(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::Parameter("patch index starts at 1".into()));
    }
    let power = QuadIntZ14::growth_unit().pow(n);
    let numerator = BigInt::from(9) * power.u - BigInt::from(8) * BigInt::from(n);
    if numerator.is_negative() || !(&numerator % BigInt::from(7)).is_zero() {
        return Err(Error::Internal(format!(
            "closed form numerator {numerator} for n = {n} is not a nonnegative multiple of 7"
        )));
    }
    let value = BigInt::from(5) * (numerator / BigInt::from(7));
    Ok(value.to_biguint().expect("nonnegative by construction"))
}

/// Smallest patch index whose tile count exceeds the volume bound
/// `(2 n U)^3 / u^3` available to a normal tiling with inradius `u` and
/// circumradius `U`. Exact rational comparison throughout; terminates
/// because the patch totals grow exponentially while the bound is cubic.
pub fn normality_crossing(inradius: &BigRational, circumradius: &BigRational) -> Result<u64> {
    if !inradius.is_positive() || circumradius < inradius {
        return Err(Error::Parameter(
            "radii must satisfy 0 < u <= U".into(),
        ));
    }
    let ratio_cubed = {
        let r = circumradius / inradius;
        &r * &r * &r
    };
    let mut state = GrowthState::initial();
    let mut total = state.boundary_total();
    for n in 1u64.. {
        let bound = BigRational::from_integer(BigInt::from(8 * n * n * n)) * &ratio_cubed;
        let tiles = BigRational::from_integer(BigInt::from(total.clone()));
        if tiles > bound {
            return Ok(n);
        }
        state = growth_step(&state);
        total += state.boundary_total();
    }
    unreachable!("exponential growth overtakes any cubic bound")
}
