use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::freegroup::{peripheral_check, FreeAutomorphism, PeripheralStructure, ReducedWord};
use crate::perm::Permutation;
use crate::surface::geometry::q;
use crate::surface::{minimal_representative, word_of_path, CurveOnSurface, TorusModel};

use super::maps::{map_curve, map_vertices, HalfTwistMap, PlMap, Shear};
use super::McgError;

/// A generator of the mapping class group. Indices are one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    /// Dehn twist along `A`.
    Y,
    /// Dehn twist along `B_k`.
    T(usize),
    /// Half twist along the midline arc from `p_k` to `p_{k+1}`.
    H(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistGenerator {
    pub twist: Twist,
    pub power: i64,
}

impl TwistGenerator {
    pub fn new(twist: Twist, power: i64) -> Self {
        TwistGenerator { twist, power }
    }

    pub fn inverse(self) -> Self {
        TwistGenerator { twist: self.twist, power: -self.power }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Y => write!(f, "TY"),
            Twist::T(k) => write!(f, "T{k}"),
            Twist::H(k) => write!(f, "H{k}"),
        }
    }
}

impl fmt::Display for TwistGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.twist)
        } else {
            write!(f, "{}^{}", self.twist, self.power)
        }
    }
}

/// Orientation conventions: `dehn = +1` makes `T` a left twist; `half`
/// picks the sense in which `H` rotates its disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Handedness {
    pub dehn: i64,
    pub half: i64,
}

impl Handedness {
    /// The choice validating `τ_b T_i τ_b T_i^-1 = T_{i-1} T_i^-2 T_{i+1}`
    /// with left Dehn twists; see `calibrate`.
    pub const CALIBRATED: Handedness = Handedness { dehn: 1, half: -1 };

    pub fn all() -> [Handedness; 4] {
        [(1, 1), (1, -1), (-1, 1), (-1, -1)].map(|(dehn, half)| Handedness { dehn, half })
    }
}

/// An automorphism of `π_1` together with the puncture permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterClass {
    pub aut: FreeAutomorphism,
    pub perm: Permutation,
}

impl OuterClass {
    pub fn identity(n: usize) -> Self {
        OuterClass { aut: FreeAutomorphism::identity(n + 1), perm: Permutation::identity(n) }
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &OuterClass) -> OuterClass {
        OuterClass {
            aut: next.aut.compose(&self.aut).expect("same rank"),
            perm: self.perm.then(&next.perm),
        }
    }

    pub fn inverse(&self) -> OuterClass {
        OuterClass { aut: self.aut.inverse(), perm: self.perm.inverse() }
    }

    /// Equal as mapping classes: same permutation and automorphisms
    /// differing by an inner automorphism.
    pub fn same_class(&self, other: &OuterClass) -> bool {
        self.perm == other.perm && self.aut.compose(&other.aut.inverse()).expect("same rank").is_inner().is_some()
    }
}

/// Per-`n` context: the model, conventions, and traced generator actions.
#[derive(Debug)]
pub struct MappingClassGroup {
    model: TorusModel,
    handedness: Handedness,
    peripheral: PeripheralStructure,
    cache: Vec<OnceLock<OuterClass>>,
}

static REGISTRY: OnceLock<Mutex<HashMap<usize, Arc<MappingClassGroup>>>> = OnceLock::new();

impl MappingClassGroup {
    pub fn new(n: usize, handedness: Handedness) -> Result<Self, McgError> {
        let model = TorusModel::new(n)?;
        let peripheral = model.peripheral_structure();
        let cache = (0..2 * (2 * n + 1)).map(|_| OnceLock::new()).collect();
        Ok(MappingClassGroup { model, handedness, peripheral, cache })
    }

    /// The process-wide group for `n` with the calibrated conventions.
    pub fn shared(n: usize) -> Result<Arc<Self>, McgError> {
        let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = registry.lock().expect("registry lock");
        if let Some(g) = map.get(&n) {
            return Ok(g.clone());
        }
        let g = Arc::new(MappingClassGroup::new(n, Handedness::CALIBRATED)?);
        map.insert(n, g.clone());
        Ok(g)
    }

    pub fn model(&self) -> &TorusModel {
        &self.model
    }

    pub fn n(&self) -> usize {
        self.model.n()
    }

    pub fn handedness(&self) -> Handedness {
        self.handedness
    }

    pub fn peripheral(&self) -> &PeripheralStructure {
        &self.peripheral
    }

    pub fn check_twist(&self, twist: Twist) -> Result<(), McgError> {
        let n = self.n();
        match twist {
            Twist::T(k) | Twist::H(k) if !(1..=n).contains(&k) => Err(McgError::IndexOutOfRange { index: k, n }),
            _ => Ok(()),
        }
    }

    /// The PL map of one generator step, `sign = ±1`.
    pub fn step_map(&self, twist: Twist, sign: i64) -> Box<dyn PlMap + Send + Sync> {
        let n = self.n() as i64;
        let e = sign * self.handedness.dehn;
        let b = self.model.basepoint();
        match twist {
            Twist::Y => Box::new(Shear::horizontal(q(1, 4), q(1, 8), e).anchored(&b)),
            Twist::T(k) => Box::new(Shear::vertical(q(k as i64 % n, n), q(1, 4 * n), e).anchored(&b)),
            Twist::H(k) => Box::new(HalfTwistMap::new(&self.model, k, self.handedness.half, sign < 0)),
        }
    }

    fn slot(&self, twist: Twist, sign: i64) -> usize {
        let idx = match twist {
            Twist::Y => 0,
            Twist::T(k) => k,
            Twist::H(k) => self.n() + k,
        };
        2 * idx + usize::from(sign < 0)
    }

    /// The traced action of one generator step on `π_1` at the basepoint.
    pub fn step_class(&self, twist: Twist, sign: i64) -> Result<&OuterClass, McgError> {
        self.check_twist(twist)?;
        let cell = &self.cache[self.slot(twist, sign)];
        if let Some(c) = cell.get() {
            return Ok(c);
        }
        let fwd = self.step_map(twist, sign);
        let back = self.step_map(twist, -sign);
        let class = self.trace_class(fwd.as_ref(), back.as_ref())?;
        Ok(cell.get_or_init(|| class))
    }

    /// The automorphism induced by a basepoint-fixing homeomorphism `f`
    /// with inverse `g`.
    pub fn trace_class(&self, f: &dyn PlMap, g: &dyn PlMap) -> Result<OuterClass, McgError> {
        let m = &self.model;
        let b = m.basepoint();
        if f.map(&b) != b || g.map(&b) != b {
            return Err(McgError::BasepointMoved);
        }
        let trace = |h: &dyn PlMap| -> Result<Vec<ReducedWord>, McgError> {
            (0..m.rank())
                .map(|gen| Ok(word_of_path(m, &map_vertices(h, &m.based_generator(gen)))?))
                .collect()
        };
        let aut = FreeAutomorphism::new(trace(f)?, trace(g)?)?;
        let images = (0..m.n())
            .map(|k| m.puncture_index(&f.map(m.puncture(k))).ok_or(McgError::PunctureNotPreserved))
            .collect::<Result<Vec<_>, _>>()?;
        let perm = Permutation::from_images(images).ok_or(McgError::PunctureNotPreserved)?;
        Ok(OuterClass { aut, perm })
    }

    pub fn identity(self: &Arc<Self>) -> MappingClass {
        MappingClass {
            group: self.clone(),
            word: Vec::new(),
            perm: Permutation::identity(self.n()),
            outer: OnceLock::new(),
        }
    }

    pub fn class(self: &Arc<Self>, word: Vec<TwistGenerator>) -> Result<MappingClass, McgError> {
        let mut perm = Permutation::identity(self.n());
        for g in &word {
            if g.power == 0 {
                return Err(McgError::ZeroPower);
            }
            let step = self.step_class(g.twist, g.power.signum())?;
            for _ in 0..g.power.unsigned_abs() {
                perm = perm.then(&step.perm);
            }
        }
        Ok(MappingClass { group: self.clone(), word, perm, outer: OnceLock::new() })
    }

    /// `τ_{k,a}^sign = T_k^{a+1} ∘ H_k^sign ∘ T_k^{-(a+1)}`, as a word
    /// applied left to right.
    pub fn half_twist_word(k: usize, a: i64, sign: i64) -> Vec<TwistGenerator> {
        let p = a + 1;
        let mut w = Vec::new();
        if p != 0 {
            w.push(TwistGenerator::new(Twist::T(k), -p));
        }
        w.push(TwistGenerator::new(Twist::H(k), sign));
        if p != 0 {
            w.push(TwistGenerator::new(Twist::T(k), p));
        }
        w
    }

    pub fn tau(self: &Arc<Self>, k: usize, a: i64, sign: i64) -> Result<MappingClass, McgError> {
        self.class(Self::half_twist_word(k, a, sign))
    }

    pub fn twist(self: &Arc<Self>, twist: Twist, power: i64) -> Result<MappingClass, McgError> {
        self.class(vec![TwistGenerator::new(twist, power)])
    }

    /// `ARC_k(a) = T_k^{a+1}(ARC_k(-1))`.
    pub fn derived_arc(self: &Arc<Self>, k: usize, a: i64, max_iterations: usize) -> Result<CurveOnSurface, McgError> {
        let base = self.model.base_arc(k)?;
        if a == -1 {
            return Ok(base);
        }
        self.twist(Twist::T(k), a + 1)?.act(&base, max_iterations)
    }
}

/// A word in twist generators, applied left to right, with its puncture
/// permutation and (lazily) its action on `π_1`.
#[derive(Clone, Debug)]
pub struct MappingClass {
    group: Arc<MappingClassGroup>,
    word: Vec<TwistGenerator>,
    perm: Permutation,
    outer: OnceLock<OuterClass>,
}

impl MappingClass {
    pub fn group(&self) -> &Arc<MappingClassGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn word(&self) -> &[TwistGenerator] {
        &self.word
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Unit steps `(twist, ±1)` in application order.
    pub fn steps(&self) -> impl Iterator<Item = (Twist, i64)> + '_ {
        self.word
            .iter()
            .flat_map(|g| std::iter::repeat_n((g.twist, g.power.signum()), g.power.unsigned_abs() as usize))
    }

    /// Induced automorphism, composed from the traced generator actions.
    pub fn outer(&self) -> &OuterClass {
        self.outer.get_or_init(|| {
            let mut acc = OuterClass::identity(self.n());
            for (twist, sign) in self.steps() {
                let step = self.group.step_class(twist, sign).expect("generators validated at construction");
                acc = acc.then(step);
            }
            acc
        })
    }

    pub fn to_outer_aut(&self) -> (FreeAutomorphism, Permutation) {
        let o = self.outer();
        (o.aut.clone(), o.perm.clone())
    }

    /// The automorphism obtained by pushing the based generator loops
    /// through the whole word geometrically, without the generator cache.
    pub fn traced_outer(&self) -> Result<FreeAutomorphism, McgError> {
        let m = self.group.model();
        let trace_word = |steps: Vec<(Twist, i64)>| -> Result<Vec<ReducedWord>, McgError> {
            (0..m.rank())
                .map(|g| {
                    let mut path = m.based_generator(g);
                    for &(twist, sign) in &steps {
                        path = map_vertices(self.group.step_map(twist, sign).as_ref(), &path);
                    }
                    Ok(word_of_path(m, &path)?)
                })
                .collect()
        };
        let fwd: Vec<_> = self.steps().collect();
        let back: Vec<_> = fwd.iter().rev().map(|&(t, s)| (t, -s)).collect();
        Ok(FreeAutomorphism::new(trace_word(fwd)?, trace_word(back)?)?)
    }

    fn same_group(&self, other: &MappingClass) -> Result<(), McgError> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(McgError::GroupMismatch { left: self.n(), right: other.n() })
        }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &MappingClass) -> Result<MappingClass, McgError> {
        self.same_group(other)?;
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(MappingClass { group: self.group.clone(), word, perm: self.perm.then(&other.perm), outer: OnceLock::new() })
    }

    pub fn inverse(&self) -> MappingClass {
        let word = self.word.iter().rev().map(|g| g.inverse()).collect();
        MappingClass { group: self.group.clone(), word, perm: self.perm.inverse(), outer: OnceLock::new() }
    }

    pub fn pow(&self, k: i64) -> MappingClass {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = self.group.identity();
        for _ in 0..k.unsigned_abs() {
            out = out.then(&base).expect("same group");
        }
        out
    }

    /// Equality in the mapping class group, decided on `Out(π_1)`.
    pub fn equal(&self, other: &MappingClass) -> Result<bool, McgError> {
        self.same_group(other)?;
        Ok(self.outer().same_class(other.outer()))
    }

    pub fn is_identity(&self) -> bool {
        self.outer().same_class(&OuterClass::identity(self.n()))
    }

    /// The permutation reported by the peripheral test on the induced
    /// automorphism.
    pub fn peripheral_permutation(&self) -> Option<Permutation> {
        peripheral_check(&self.outer().aut, self.group.peripheral())
    }

    /// Image of a curve, tightened after every generator step.
    pub fn act(&self, x: &CurveOnSurface, max_iterations: usize) -> Result<CurveOnSurface, McgError> {
        let m = self.group.model();
        let mut cur = x.clone();
        for (twist, sign) in self.steps() {
            let f = self.group.step_map(twist, sign);
            cur = map_curve(m, f.as_ref(), &cur)?;
            cur = minimal_representative(m, &cur, max_iterations)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}
