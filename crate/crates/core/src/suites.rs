//! Verification suites: each produces a [`Report`] with one entry per check.

use std::sync::Arc;

use crate::bgroup::{is_in_kernel, relation_suite, BWord, FiberConfig};
use crate::dcat::{
    dictionary_pair, form_kernel, in_restriction_lattice, tabulated_pairs, InFiberForm, MultiDegree, ObjTag,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::freegroup::{Alphabet, CyclicWord, Letter, ReducedWord};
use crate::mcg::{MappingClassGroup, McgError, Twist, TwistGenerator};
use crate::parallel;
use crate::perm::Permutation;
use crate::report::{Entry, Report};
use crate::sample;
use crate::surface::{counting_word, intersection_number, CurveOnSurface, SurfaceError};

pub const SUITES: [&str; 8] =
    ["relations", "dictionary", "lattice", "kernel", "peripheral", "inner", "inverses", "all"];

const ANCHOR_PSI_X: &str = "$\\Hom^*_Y(\\Psi(\\cO_{y}), \\cO_{y}) = \\bC \\oplus \\bC[-1]$";
const ANCHOR_PSI_Y: &str = "$\\Hom^*_Y(\\Psi(\\cO_{y}), \\cO_Y) = \\bC[-1]$";
const ANCHOR_PSI_G: &str = "$\\bC[-1] & G\\cdot G'=1$";
const ANCHOR_PSI_G0: &str = "$\\Hom^*_E(\\Psi_1(\\cO_{x_1}), \\cO_{G_1}) = \\bC^2 \\oplus \\bC[-1]$";
const ANCHOR_PSI_OFF: &str = "$\\Psi(\\cO_y) \\cong \\cO_y$ for every point $y \\in Y \\setminus G$";
const ANCHOR_G_POINT: &str = "$\\Hom^*_S(\\cO_G(-1), \\cO_y)=0$ for every point $y \\in Y \\setminus G$";
const ANCHOR_G_Y: &str = "$\\Hom^*_S(\\cO_G(-1), \\cO_Y)=0$";
const ANCHOR_THREE: &str = "must intersect at exactly three points. This requirement determines $\\gamma$";
const ANCHOR_KERNEL: &str = "has the one-dimensional kernel $\\bQ Y_j$";
const ANCHOR_SUM: &str = "sum of all components of the multi-degree vector of $L$ must be zero";
const ANCHOR_ROW: &str = "$\\cO_Y(x_{i-1}-2x_{i}+x_{i+1})$ have the same multi-degree";
const ANCHOR_FIBER: &str = "$1 \\to \\langle (-)\\otimes \\cO_S(Y_j)\\rangle \\to B$";
const ANCHOR_PAIR: &str = "$T_{\\cO_{G_i}(a-1)} \\circ T_{\\cO_{G_i}(a)} \\cong (-)\\otimes \\cO_S(G_i)$";
const ANCHOR_INNER: &str = "$\\Inn(\\pi_1(\\Sigma, p))$ is the inner automorphism group";
const ANCHOR_INVERSE: &str = "is completely determined by its action on the fundamental group";
const SEED: u64 = 20_240_611;
const ANCHOR_PERIPHERAL: &str = "preserve the set of conjugacy classes of the simple closed curves surrounding each point in $P$";

fn anchor_for(e: ObjTag, f: ObjTag) -> &'static str {
    match (e, f) {
        (ObjTag::PsiOx(i), ObjTag::Ox(j)) if i == j => ANCHOR_PSI_X,
        (ObjTag::PsiOx(_), ObjTag::Ox(_)) => ANCHOR_PSI_OFF,
        (ObjTag::PsiOx(_), ObjTag::OY) => ANCHOR_PSI_Y,
        (ObjTag::PsiOx(_), ObjTag::OG(_, 0)) => ANCHOR_PSI_G0,
        (ObjTag::PsiOx(_), _) => ANCHOR_PSI_G,
        (ObjTag::OG(..), ObjTag::OY) => ANCHOR_G_Y,
        _ => ANCHOR_G_POINT,
    }
}

/// Hom totals against intersection numbers for every tabulated pair, and
/// the check that the other candidate curve fails the three-point test.
pub fn dictionary(ns: &[usize], max_iterations: usize) -> Report {
    let mut jobs = Vec::new();
    for &n in ns {
        match MappingClassGroup::shared(n) {
            Ok(g) => {
                jobs.extend(tabulated_pairs(n).into_iter().map(|(e, f)| (g.clone(), Some((e, f)))));
                if n >= 3 {
                    jobs.push((g, None));
                }
            }
            Err(e) => return Report::new("dictionary", vec![Entry::failed(format!("n{n}"), "group", e, "")]),
        }
    }
    let entries = parallel::map(jobs, |(g, pair)| match pair {
        Some((e, f)) => {
            let name = format!("n{}/Hom({e}, {f})", g.n());
            let anchor = anchor_for(e, f);
            match dictionary_pair(&g, e, f, max_iterations) {
                Ok((want, got)) => Entry::compare(name, want, got, anchor),
                Err(err) => Entry::failed(name, "tabulated", err, anchor),
            }
        }
        None => other_candidate(&g, max_iterations),
    });
    Report::new("dictionary", entries)
}

/// `τ_1^{-1}(B_1)` meets the curve of `O_{G_1}` other than three times.
fn other_candidate(g: &Arc<MappingClassGroup>, max_iterations: usize) -> Entry {
    let name = format!("n{}/inverse candidate vs OG(1,0)", g.n());
    let run = || -> Result<u64, crate::mcg::McgError> {
        let b = g.model().curve_b(1)?;
        let gamma = g.tau(1, -1, -1)?.act(&b, max_iterations)?;
        let arc = g.derived_arc(1, 0, max_iterations)?;
        Ok(intersection_number(g.model(), &gamma, &arc)?)
    };
    match run() {
        Ok(k) => Entry::compare(name, "not 3", if k == 3 { "3".to_string() } else { "not 3".to_string() }, ANCHOR_THREE),
        Err(e) => Entry::failed(name, "not 3", e, ANCHOR_THREE),
    }
}

pub fn relations(ns: &[usize]) -> Report {
    match FiberConfig::new(ns.to_vec()).and_then(|cfg| relation_suite(&cfg, true)) {
        Ok(r) => r,
        Err(e) => Report::new("relations", vec![Entry::failed("config", "valid", e, "")]),
    }
}

pub fn lattice(ns: &[usize]) -> Report {
    let mut entries = Vec::new();
    for &n in ns.iter().filter(|&&n| n >= 2) {
        let k = form_kernel(n);
        let ones = k.len() == 1 && k[0].iter().all(|x| *x == k[0][0]);
        entries.push(Entry::compare(
            format!("n{n}/kernel"),
            "1-dim, all ones",
            if ones { "1-dim, all ones".to_string() } else { format!("{}-dim", k.len()) },
            ANCHOR_KERNEL,
        ));
        let form = InFiberForm::new(n);
        for i in 1..=n {
            entries.push(Entry::compare(
                format!("n{n}/e{i} not in lattice"),
                false,
                in_restriction_lattice(&MultiDegree::unit(n, i)),
                ANCHOR_SUM,
            ));
            entries.push(Entry::compare(
                format!("n{n}/row{i} in lattice"),
                true,
                in_restriction_lattice(&form.row(i)),
                ANCHOR_ROW,
            ));
        }
    }
    Report::new("lattice", entries)
}

/// The fiber class is in the kernel; a single consecutive pair is not.
pub fn kernel(cfg: &FiberConfig) -> Report {
    let mut jobs = Vec::new();
    for (j, &n) in cfg.sizes().iter().enumerate() {
        jobs.push((format!("fiber{}/n{n}/Y{}", j + 1, j + 1), BWord::fiber_class(j + 1, n), true, ANCHOR_FIBER));
        for i in 1..=n {
            jobs.push((format!("fiber{}/n{n}/pair{i}", j + 1), BWord::pair(j + 1, i), false, ANCHOR_PAIR));
        }
    }
    let entries = parallel::map(jobs, |(name, w, want, anchor)| match is_in_kernel(&w, cfg) {
        Ok(got) => Entry::compare(name, want, got, anchor),
        Err(e) => Entry::failed(name, want, e, anchor),
    });
    Report::new("kernel", entries)
}

/// Product of the transpositions of the half twists in `word`, left to
/// right.
pub fn transposition_product(n: usize, word: &[TwistGenerator]) -> Permutation {
    word.iter().fold(Permutation::identity(n), |p, g| match g.twist {
        Twist::H(k) if g.power % 2 != 0 => p.then(&Permutation::transposition(n, k - 1, k % n)),
        _ => p,
    })
}

fn sample_words(n: usize) -> Vec<Vec<TwistGenerator>> {
    let g = TwistGenerator::new;
    let last = n;
    vec![
        vec![g(Twist::H(1), 1)],
        vec![g(Twist::H(1), 1), g(Twist::H(2), -1)],
        vec![g(Twist::T(1), 2), g(Twist::H(1), 1), g(Twist::Y, -1), g(Twist::H(last), 1)],
        vec![g(Twist::H(last), 1), g(Twist::T(2), -1), g(Twist::H(1), 3), g(Twist::T(1), 1)],
        vec![g(Twist::H(2), 2), g(Twist::Y, 1), g(Twist::H(1), -1), g(Twist::H(2), 1)],
    ]
}

/// The peripheral test on the induced automorphism succeeds and returns
/// the product of the half twists' transpositions.
pub fn peripheral(ns: &[usize]) -> Report {
    let mut entries = Vec::new();
    for &n in ns {
        let group = match MappingClassGroup::shared(n) {
            Ok(g) => g,
            Err(e) => {
                entries.push(Entry::failed(format!("n{n}/peripheral"), "group", e, ANCHOR_PERIPHERAL));
                continue;
            }
        };
        for word in sample_words(n) {
            let want = transposition_product(n, &word);
            let name = format!("n{n}/peripheral {}", group.class(word.clone()).map(|c| c.to_string()).unwrap_or_default());
            let entry = match group.class(word) {
                Ok(c) => match c.peripheral_permutation() {
                    Some(p) if &p == c.perm() => Entry::compare(name, &want, &p, ANCHOR_PERIPHERAL),
                    Some(p) => Entry::failed(name, &want, format!("traced {} vs tracked {p}", c.perm()), ANCHOR_PERIPHERAL),
                    None => Entry::failed(name, &want, "peripheral structure not preserved", ANCHOR_PERIPHERAL),
                },
                Err(e) => Entry::failed(name, &want, e, ANCHOR_PERIPHERAL),
            };
            entries.push(entry);
        }
    }
    Report::new("peripheral", entries)
}

/// Reduced words of length at most `max_len` over `rank` generators.
fn words_up_to(rank: usize, max_len: usize) -> Vec<ReducedWord> {
    let letters: Vec<Letter> = (0..rank).flat_map(|g| [Letter::new(g, false), Letter::new(g, true)]).collect();
    let mut layer = vec![ReducedWord::identity()];
    let mut out = layer.clone();
    for _ in 0..max_len {
        let next: Vec<ReducedWord> = layer
            .iter()
            .flat_map(|w| {
                letters
                    .iter()
                    .filter(|l| w.letters().last() != Some(&l.inverse()))
                    .map(|&l| ReducedWord::reduce(w.letters().iter().copied().chain([l])))
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The inner automorphism test against a search over conjugators of
/// length at most 6, on random rank-3 automorphisms with short images.
pub fn inner_automorphisms(count: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::new();
    while samples.len() < count {
        let phi = sample::random_automorphism(&mut rng, 3, 4, 2);
        if phi.images().iter().all(|w| w.len() <= 4) {
            samples.push(phi);
        }
    }
    let conjugators = words_up_to(3, 6);
    let alphabet = Alphabet::generic(3);
    let entries = samples
        .iter()
        .enumerate()
        .map(|(k, phi)| {
            let brute = conjugators.iter().any(|w| phi.is_conjugation_by(w));
            let fast = phi.is_inner().is_some_and(|w| phi.is_conjugation_by(&w));
            let images: Vec<_> = phi.images().iter().map(|w| alphabet.format(w.letters())).collect();
            Entry::compare(format!("inner/{k:03} [{}]", images.join(", ")), brute, fast, ANCHOR_INNER)
        })
        .collect();
    Report::new("inner", entries)
}

/// `w w^-1` is the identity, and `w^-1` carries the images of `A`, `B_1`
/// and `ARC_1(-1)` back to curves with the same crossing word and the same
/// intersections with the standard curves.
pub fn inverses(n: usize, count: usize, seed: u64, max_iterations: usize) -> Report {
    let group = match MappingClassGroup::shared(n) {
        Ok(g) => g,
        Err(e) => return Report::new("inverses", vec![Entry::failed(format!("n{n}/inverses"), "group", e, "")]),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<_> = (0..count).map(|_| sample::random_twist_word(&mut rng, n, 6)).collect();
    let entries = parallel::map(words.into_iter().enumerate().collect(), |(k, word)| {
        let name = format!("inverses/n{n}/{k:02}");
        match round_trip(&group, word, max_iterations) {
            Ok((label, true)) => Entry::compare(format!("{name} {label}"), "round trip", "round trip", ANCHOR_INVERSE),
            Ok((label, false)) => Entry::compare(format!("{name} {label}"), "round trip", "differs", ANCHOR_INVERSE),
            Err(e) => Entry::failed(name, "round trip", e, ANCHOR_INVERSE),
        }
    });
    Report::new("inverses", entries)
}

fn profile(group: &MappingClassGroup, x: &CurveOnSurface) -> Result<(CyclicWord, Vec<u64>), McgError> {
    let m = group.model();
    let mut refs = vec![m.curve_a()];
    for i in 1..=group.n() {
        refs.push(m.curve_b(i)?);
        refs.push(m.base_arc(i)?);
    }
    let mut counts = Vec::new();
    for r in &refs {
        counts.push(match intersection_number(m, x, r) {
            Err(SurfaceError::EqualCurves) => 0,
            other => other?,
        });
    }
    Ok((counting_word(m, x)?, counts))
}

fn round_trip(
    group: &Arc<MappingClassGroup>,
    word: Vec<TwistGenerator>,
    max_iterations: usize,
) -> Result<(String, bool), McgError> {
    let c = group.class(word)?;
    let inv = c.inverse();
    let mut ok = c.then(&inv)?.equal(&group.identity())?;
    let m = group.model();
    for x in [m.curve_a(), m.curve_b(1)?, m.base_arc(1)?] {
        let back = inv.act(&c.act(&x, max_iterations)?, max_iterations)?;
        ok &= profile(group, &back)? == profile(group, &x)?;
    }
    Ok((c.to_string(), ok))
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Restricts every suite to one surface; `None` uses the default ranges.
    pub n: Option<usize>,
    pub fibers: Option<FiberConfig>,
    pub max_iterations: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n: None, fibers: None, max_iterations: 10_000 }
    }
}

pub fn run(suite: &str, opts: &SuiteOptions) -> Option<Report> {
    let range = |lo: usize, hi: usize| -> Vec<usize> { opts.n.map_or_else(|| (lo..=hi).collect(), |n| vec![n]) };
    let cfg = || {
        opts.fibers.clone().unwrap_or_else(|| FiberConfig::new(range(2, 8)).expect("ranges start at 2"))
    };
    Some(match suite {
        "relations" => relations(&range(3, 6)),
        "dictionary" => dictionary(&range(3, 5), opts.max_iterations),
        "lattice" => lattice(&range(2, 8)),
        "kernel" => kernel(&cfg()),
        "peripheral" => peripheral(&range(2, 5)),
        "inner" => inner_automorphisms(200, SEED),
        "inverses" => inverses(opts.n.unwrap_or(3), 20, SEED, opts.max_iterations),
        "all" => Report::merge(
            "all",
            vec![
                relations(&range(3, 6)),
                dictionary(&range(3, 5), opts.max_iterations),
                lattice(&range(2, 8)),
                kernel(&cfg()),
                peripheral(&range(2, 5)),
                inner_automorphisms(200, SEED),
                inverses(opts.n.unwrap_or(3), 20, SEED, opts.max_iterations),
            ],
        ),
        _ => return None,
    })
}
