//! Words in the spherical twists `T_{O_{G_i}(a)}` along components of the
//! reducible fibers, and their images in the product of mapping class
//! groups of the punctured tori.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::mcg::{MappingClass, MappingClassGroup, McgError, Twist, TwistGenerator};
use crate::parallel;
use crate::report::{Entry, Report, Status};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BGroupError {
    #[error("a configuration needs at least one fiber")]
    NoFibers,
    #[error("fiber {fiber} has {n} components; at least 2 are needed")]
    FiberTooSmall { fiber: usize, n: usize },
    #[error("fiber {fiber} out of range 1..={count}")]
    FiberOutOfRange { fiber: usize, count: usize },
    #[error("component {component} out of range 1..={n} on fiber {fiber}")]
    ComponentOutOfRange { fiber: usize, component: usize, n: usize },
    #[error("cannot parse {token:?} at term {position}")]
    Parse { token: String, position: usize },
    #[error(transparent)]
    Mcg(#[from] McgError),
}

/// Component counts `n_1, .., n_l` of the reducible fibers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberConfig {
    sizes: Vec<usize>,
}

impl FiberConfig {
    pub fn new(sizes: Vec<usize>) -> Result<Self, BGroupError> {
        if sizes.is_empty() {
            return Err(BGroupError::NoFibers);
        }
        if let Some((j, &n)) = sizes.iter().enumerate().find(|(_, &n)| n < 2) {
            return Err(BGroupError::FiberTooSmall { fiber: j + 1, n });
        }
        Ok(FiberConfig { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn fibers(&self) -> usize {
        self.sizes.len()
    }

    /// Components on fiber `j` (one-based).
    pub fn size(&self, j: usize) -> Result<usize, BGroupError> {
        j.checked_sub(1)
            .and_then(|k| self.sizes.get(k).copied())
            .ok_or(BGroupError::FiberOutOfRange { fiber: j, count: self.sizes.len() })
    }

    pub fn groups(&self) -> Result<Vec<Arc<MappingClassGroup>>, BGroupError> {
        self.sizes.iter().map(|&n| Ok(MappingClassGroup::shared(n)?)).collect()
    }
}

impl FromStr for FiberConfig {
    type Err = BGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let sizes = s
            .split(',')
            .enumerate()
            .map(|(k, t)| {
                t.trim().parse::<usize>().map_err(|_| BGroupError::Parse { token: t.to_string(), position: k + 1 })
            })
            .collect::<Result<Vec<_>, _>>()?;
        FiberConfig::new(sizes)
    }
}

/// `T_{O_{G_i}(a)}^sign` on fiber `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BGen {
    pub fiber: usize,
    pub component: usize,
    pub degree: i64,
    pub sign: i64,
}

impl BGen {
    pub fn new(fiber: usize, component: usize, degree: i64) -> Self {
        BGen { fiber, component, degree, sign: 1 }
    }

    pub fn inverse(self) -> Self {
        BGen { sign: -self.sign, ..self }
    }

    fn check(&self, cfg: &FiberConfig) -> Result<(), BGroupError> {
        let n = cfg.size(self.fiber)?;
        if self.component == 0 || self.component > n {
            return Err(BGroupError::ComponentOutOfRange { fiber: self.fiber, component: self.component, n });
        }
        Ok(())
    }
}

impl fmt::Display for BGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}.{}[{}]", self.fiber, self.component, self.degree)?;
        if self.sign < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A free word in the generators, read as a composition of functors:
/// `g h` means `g ∘ h`, so the rightmost generator acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct BWord(pub Vec<BGen>);

impl BWord {
    pub fn empty() -> Self {
        BWord(Vec::new())
    }

    pub fn single(g: BGen) -> Self {
        BWord(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation with free cancellation.
    pub fn then(&self, other: &BWord) -> BWord {
        let mut out = self.0.clone();
        for &g in &other.0 {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BWord(out)
    }

    pub fn inverse(&self) -> BWord {
        BWord(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    /// `∏_i T_{O_{G_i}(-1)} T_{O_{G_i}(0)}` on fiber `j`, which is tensoring
    /// by `O_S(Y_j)`.
    pub fn fiber_class(j: usize, n: usize) -> BWord {
        BWord((1..=n).flat_map(|i| [BGen::new(j, i, -1), BGen::new(j, i, 0)]).collect())
    }

    /// `T_{O_{G_i}(-1)} T_{O_{G_i}(0)}` on fiber `j`.
    pub fn pair(j: usize, i: usize) -> BWord {
        BWord(vec![BGen::new(j, i, -1), BGen::new(j, i, 0)])
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses `G<j>.<i>[<a>]` terms with an optional `^-1` or `^<k>`, and
/// `Y<j>` for the fiber class, which needs the configuration to expand.
pub fn parse_bword(text: &str, cfg: &FiberConfig) -> Result<BWord, BGroupError> {
    let mut out = BWord::empty();
    for (k, token) in text.split_whitespace().enumerate() {
        let bad = || BGroupError::Parse { token: token.to_string(), position: k + 1 };
        if token == "id" {
            continue;
        }
        let (body, power) = match token.split_once('^') {
            Some((b, p)) => (b, p.parse::<i64>().map_err(|_| bad())?),
            None => (token, 1),
        };
        if power == 0 {
            return Err(bad());
        }
        let unit = if let Some(j) = body.strip_prefix('Y') {
            let j: usize = j.parse().map_err(|_| bad())?;
            BWord::fiber_class(j, cfg.size(j)?)
        } else {
            let rest = body.strip_prefix('G').ok_or_else(bad)?;
            let (head, degree) = rest.split_once('[').ok_or_else(bad)?;
            let degree: i64 = degree.strip_suffix(']').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let (j, i) = head.split_once('.').ok_or_else(bad)?;
            let g = BGen::new(j.parse().map_err(|_| bad())?, i.parse().map_err(|_| bad())?, degree);
            g.check(cfg)?;
            BWord::single(g)
        };
        let unit = if power < 0 { unit.inverse() } else { unit };
        for _ in 0..power.unsigned_abs() {
            out = out.then(&unit);
        }
    }
    Ok(out)
}

/// One mapping class per fiber; a generator on fiber `j` acts as
/// `τ_{i,a}^sign` there and trivially elsewhere. Mapping class words run
/// left to right, so the B-word is reversed.
pub fn image(w: &BWord, cfg: &FiberConfig) -> Result<Vec<MappingClass>, BGroupError> {
    let groups = cfg.groups()?;
    let mut words: Vec<Vec<TwistGenerator>> = vec![Vec::new(); cfg.fibers()];
    for g in w.0.iter().rev() {
        g.check(cfg)?;
        words[g.fiber - 1].extend(MappingClassGroup::half_twist_word(g.component, g.degree, g.sign));
    }
    groups.iter().zip(words).map(|(group, word)| Ok(group.class(word)?)).collect()
}

pub fn is_in_kernel(w: &BWord, cfg: &FiberConfig) -> Result<bool, BGroupError> {
    for factor in image(w, cfg)? {
        if !factor.equal(&factor.group().identity())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A word in the degree `-1` and `0` generators of component `i` with the
/// same image as `T_{O_{G_i}(a)}`, from `τ_{a-1} τ_a = τ_{-1} τ_0`.
pub fn express_in_generators(j: usize, i: usize, a: i64) -> BWord {
    let pair = BWord::pair(j, i);
    match a {
        -1 | 0 => BWord::single(BGen::new(j, i, a)),
        a if a > 0 => express_in_generators(j, i, a - 1).inverse().then(&pair),
        a => pair.then(&express_in_generators(j, i, a + 1).inverse()),
    }
}

const ANCHOR_DISJOINT: &str = "then $T_{E_1}T_{E_2} \\cong T_{E_2}T_{E_1}$";
const ANCHOR_BRAID: &str = "$T_{E_1}T_{E_2} T_{E_1} \\cong T_{E_2}T_{E_1}T_{E_2}$";
const ANCHOR_CONJ: &str = "$T_i \\tau_b T_i^{-1} = \\tau_{b+1}$";
const ANCHOR_DEHN_HALF: &str = "$\\tau_b T_i \\tau_b T_i^{-1} = T_{i-1}T_i^{-2}T_{i+1}$";
const ANCHOR_TWIST_COMMUTE: &str = "Dehn twists along disjoint curves commute";

fn cyclic_adjacent(n: usize, i: usize, k: usize) -> bool {
    i % n + 1 == k || k % n + 1 == i
}

struct Check {
    name: String,
    anchor: &'static str,
    left: Vec<TwistGenerator>,
    right: Vec<TwistGenerator>,
    expect_equal: bool,
}

fn gen(t: Twist, p: i64) -> TwistGenerator {
    TwistGenerator::new(t, p)
}

fn checks_for(fiber: usize, n: usize, full: bool) -> Vec<Check> {
    let mut out = Vec::new();
    let tag = |s: String| format!("fiber{fiber}/n{n}/{s}");
    let mut push = |name: String, anchor, left, right, expect_equal| {
        out.push(Check { name: tag(name), anchor, left, right, expect_equal })
    };
    for i in 1..=n {
        for k in i + 1..=n {
            let (hi, hk) = (gen(Twist::H(i), 1), gen(Twist::H(k), 1));
            if n >= 3 && !cyclic_adjacent(n, i, k) {
                push(format!("H{i} H{k} commute"), ANCHOR_DISJOINT, vec![hi, hk], vec![hk, hi], true);
            } else if n >= 3 {
                push(format!("H{i} H{k} do not commute"), ANCHOR_BRAID, vec![hi, hk], vec![hk, hi], false);
            }
            let (ti, tk) = (gen(Twist::T(i), 1), gen(Twist::T(k), 1));
            push(format!("T{i} T{k} commute"), ANCHOR_TWIST_COMMUTE, vec![ti, tk], vec![tk, ti], true);
        }
    }
    if n >= 3 {
        for i in 1..=n {
            let k = i % n + 1;
            let (hi, hk) = (gen(Twist::H(i), 1), gen(Twist::H(k), 1));
            push(format!("H{i} H{k} braid"), ANCHOR_BRAID, vec![hi, hk, hi], vec![hk, hi, hk], true);
        }
    }
    let (ty, t1) = (gen(Twist::Y, 1), gen(Twist::T(1), 1));
    push("TY T1 braid".into(), ANCHOR_BRAID, vec![ty, t1, ty], vec![t1, ty, t1], true);
    let conj = if full { -3..=3 } else { -2..=2 };
    for k in 1..=n {
        for b in conj.clone() {
            // T_k τ_b T_k^-1 read as maps: apply T_k^-1 first.
            let mut left = vec![gen(Twist::T(k), -1)];
            left.extend(MappingClassGroup::half_twist_word(k, b, 1));
            left.push(gen(Twist::T(k), 1));
            push(
                format!("T{k} tau{k}[{b}] T{k}^-1 = tau{k}[{}]", b + 1),
                ANCHOR_CONJ,
                left,
                MappingClassGroup::half_twist_word(k, b + 1, 1),
                true,
            );
        }
    }
    for i in 1..=n {
        let prev = if i == 1 { n } else { i - 1 };
        let next = i % n + 1;
        let rhs = vec![gen(Twist::T(prev), 1), gen(Twist::T(i), -2), gen(Twist::T(next), 1)];
        for b in -2..=2 {
            let tau = MappingClassGroup::half_twist_word(i, b, 1);
            let mut left = vec![gen(Twist::T(i), -1)];
            left.extend(tau.iter().copied());
            left.push(gen(Twist::T(i), 1));
            left.extend(tau);
            push(
                format!("tau{i}[{b}] T{i} tau{i}[{b}] T{i}^-1 = T{prev} T{i}^-2 T{next}"),
                ANCHOR_DEHN_HALF,
                left,
                rhs.clone(),
                true,
            );
        }
    }
    out
}

fn run_check(group: &Arc<MappingClassGroup>, c: Check) -> Entry {
    let want = if c.expect_equal { "equal" } else { "not equal" };
    let outcome = group.class(c.left).and_then(|l| {
        let r = group.class(c.right)?;
        l.equal(&r)
    });
    match outcome {
        Ok(eq) => Entry::compare(c.name, want, if eq { "equal" } else { "not equal" }, c.anchor),
        Err(e) => Entry::failed(c.name, want, e, c.anchor),
    }
}

/// Relations among the twists and half twists on every fiber, one entry
/// each. `full` widens the conjugation range from `|b| <= 2` to `|b| <= 3`.
pub fn relation_suite(cfg: &FiberConfig, full: bool) -> Result<Report, BGroupError> {
    let groups = cfg.groups()?;
    let mut jobs = Vec::new();
    for (j, group) in groups.iter().enumerate() {
        for c in checks_for(j + 1, group.n(), full) {
            jobs.push((group.clone(), c));
        }
    }
    let mut entries = parallel::map(jobs, |(g, c)| run_check(&g, c));
    for (j, &n) in cfg.sizes().iter().enumerate() {
        if n < 3 {
            entries.push(Entry::skipped(
                format!("fiber{}/n{n}/H braid", j + 1),
                "half twists braid only for n >= 3",
                ANCHOR_BRAID,
            ));
        }
    }
    debug_assert!(entries.iter().all(|e| e.status != Status::Skip || e.name.ends_with("H braid")));
    Ok(Report::new("relations", entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert_eq!(FiberConfig::new(vec![]), Err(BGroupError::NoFibers));
        assert_eq!(FiberConfig::new(vec![3, 1]), Err(BGroupError::FiberTooSmall { fiber: 2, n: 1 }));
        assert_eq!("3, 4".parse::<FiberConfig>().unwrap().sizes(), &[3, 4]);
        assert!("3,x".parse::<FiberConfig>().is_err());
    }

    #[test]
    fn word_inverse_and_cancellation() {
        let w = BWord(vec![BGen::new(1, 1, -1), BGen::new(1, 2, 0)]);
        assert!(w.then(&w.inverse()).is_empty());
        assert_eq!(w.to_string(), "G1.1[-1] G1.2[0]");
        assert_eq!(BWord::empty().to_string(), "id");
    }

    #[test]
    fn parse_words() {
        let cfg = FiberConfig::new(vec![3, 2]).unwrap();
        let w = parse_bword("G1.1[-1] G2.2[0]^-1", &cfg).unwrap();
        assert_eq!(w.0, vec![BGen::new(1, 1, -1), BGen::new(2, 2, 0).inverse()]);
        assert_eq!(parse_bword("Y1", &cfg).unwrap(), BWord::fiber_class(1, 3));
        assert_eq!(parse_bword("id", &cfg).unwrap(), BWord::empty());
        assert!(matches!(parse_bword("G1.4[0]", &cfg), Err(BGroupError::ComponentOutOfRange { .. })));
        assert!(matches!(parse_bword("G1.1[0] Z", &cfg), Err(BGroupError::Parse { position: 2, .. })));
        assert!(matches!(parse_bword("G3.1[0]", &cfg), Err(BGroupError::FiberOutOfRange { .. })));
    }

    #[test]
    fn expansion_uses_only_two_degrees() {
        for a in -4..=4 {
            let w = express_in_generators(1, 2, a);
            assert!(w.0.iter().all(|g| g.component == 2 && (g.degree == -1 || g.degree == 0)));
        }
        assert_eq!(express_in_generators(1, 1, 1).to_string(), "G1.1[0]^-1 G1.1[-1] G1.1[0]");
    }
}
