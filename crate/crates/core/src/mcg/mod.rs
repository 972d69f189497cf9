//! Mapping classes of the punctured torus: Dehn twists along `A` and the
//! `B_k`, half twists along the midline arcs, their geometric action on
//! curves and their induced action on `π_1`.
//!
//! Words are applied left to right: `T1 H2` means "do `T1`, then `H2`".

mod class;
pub mod maps;
mod splice;

use thiserror::Error;

use crate::freegroup::{FreeAutomorphism, FreeGroupError, ReducedWord};
use crate::perm::Permutation;
use crate::surface::{
    intersection_number, minimal_representative, word_of_path, CurveOnSurface, SurfaceError, TorusModel,
};

pub use class::{Handedness, MappingClass, MappingClassGroup, OuterClass, Twist, TwistGenerator};
pub use splice::splice_twist;

use maps::{map_curve, HalfTwistMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum McgError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("generator power must be nonzero")]
    ZeroPower,
    #[error("mapping classes of different surfaces ({left} and {right} punctures)")]
    GroupMismatch { left: usize, right: usize },
    #[error("map moves the basepoint")]
    BasepointMoved,
    #[error("map does not permute the punctures")]
    PunctureNotPreserved,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// `T_c^sign (x)` for a simple loop `c`, tightened.
pub fn dehn_twist_action(
    group: &MappingClassGroup,
    c: &CurveOnSurface,
    x: &CurveOnSurface,
    sign: i64,
    max_iterations: usize,
) -> Result<CurveOnSurface, McgError> {
    let m = group.model();
    let y = splice_twist(m, c, x, sign * group.handedness().dehn)?;
    Ok(minimal_representative(m, &y, max_iterations)?)
}

/// `H_k^sign (x)`, tightened.
pub fn half_twist_action(
    group: &MappingClassGroup,
    k: usize,
    x: &CurveOnSurface,
    sign: i64,
    max_iterations: usize,
) -> Result<CurveOnSurface, McgError> {
    group.check_twist(Twist::H(k))?;
    let m = group.model();
    let f = HalfTwistMap::new(m, k, group.handedness().half, sign < 0);
    let y = map_curve(m, &f, x)?;
    Ok(minimal_representative(m, &y, max_iterations)?)
}

/// The action on `π_1` of the Dehn twist along an arbitrary simple loop.
pub fn loop_twist_class(group: &MappingClassGroup, c: &CurveOnSurface, sign: i64) -> Result<OuterClass, McgError> {
    let m = group.model();
    let e = sign * group.handedness().dehn;
    let trace = |e: i64| -> Result<Vec<ReducedWord>, McgError> {
        (0..m.rank())
            .map(|g| {
                let based = CurveOnSurface::closed(m, m.based_generator(g))?;
                let image = splice_twist(m, c, &based, e)?;
                if image.vertices()[0] != m.basepoint() {
                    return Err(McgError::BasepointMoved);
                }
                Ok(word_of_path(m, image.vertices())?)
            })
            .collect()
    };
    let aut = FreeAutomorphism::new(trace(e)?, trace(-e)?)?;
    Ok(OuterClass { aut, perm: Permutation::identity(m.n()) })
}

/// Whether the twists along `gamma` and `delta`, which must meet exactly
/// once, satisfy the braid relation.
pub fn braid_check(group: &MappingClassGroup, gamma: &CurveOnSurface, delta: &CurveOnSurface) -> Result<bool, McgError> {
    let i = intersection_number(group.model(), gamma, delta)?;
    if i != 1 {
        return Err(McgError::Precondition(format!("curves meet {i} times, not once")));
    }
    let g = loop_twist_class(group, gamma, 1)?;
    let d = loop_twist_class(group, delta, 1)?;
    Ok(g.then(&d).then(&g).same_class(&d.then(&g).then(&d)))
}

/// Whether twists along two disjoint loops commute.
pub fn commute_check(group: &MappingClassGroup, gamma: &CurveOnSurface, delta: &CurveOnSurface) -> Result<bool, McgError> {
    let g = loop_twist_class(group, gamma, 1)?;
    let d = loop_twist_class(group, delta, 1)?;
    Ok(g.then(&d).same_class(&d.then(&g)))
}

/// The handedness conventions under which, for this `n`,
/// `τ_b T_i τ_b T_i^-1 = T_{i-1} T_i^-2 T_{i+1}` holds for every `i` and
/// `b ∈ {-2..2}`, and the half twists satisfy the braid relation.
pub fn calibrate(n: usize) -> Result<Vec<Handedness>, McgError> {
    let mut good = Vec::new();
    for h in Handedness::all() {
        let group = std::sync::Arc::new(MappingClassGroup::new(n, h)?);
        let mut ok = true;
        'outer: for i in 1..=n {
            let prev = if i == 1 { n } else { i - 1 };
            let next = i % n + 1;
            let rhs = group.class(vec![
                TwistGenerator::new(Twist::T(prev), 1),
                TwistGenerator::new(Twist::T(i), -2),
                TwistGenerator::new(Twist::T(next), 1),
            ])?;
            for b in -2..=2 {
                let tau = group.tau(i, b, 1)?;
                let t = group.twist(Twist::T(i), 1)?;
                let lhs = t.inverse().then(&tau)?.then(&t)?.then(&tau)?;
                if !lhs.equal(&rhs)? {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            good.push(h);
        }
    }
    Ok(good)
}

/// `T_c` applied to based loops agrees with the generator `T_k` when
/// `c = B_k`; used to cross-check the two twist constructions.
pub fn splice_matches_generator(group: &MappingClassGroup, twist: Twist) -> Result<bool, McgError> {
    let m: &TorusModel = group.model();
    let c = match twist {
        Twist::Y => m.curve_a(),
        Twist::T(k) => m.curve_b(k)?,
        Twist::H(_) => return Err(McgError::Precondition("half twists have no core loop".into())),
    };
    let spliced = loop_twist_class(group, &c, 1)?;
    Ok(spliced.same_class(group.step_class(twist, 1)?))
}
