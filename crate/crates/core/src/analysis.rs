//! Three-block structure: greedy reconstruction from the middle block, the
//! sumset picture for a singleton middle block, and the trapezoid and
//! rectangle rules relating a partition to its dual.
//!
//! Entry sets are written `(A|B|C)` with velocities 2, 1, 0 as in the core
//! convention. Only coincidence times and entry differences are used, so
//! nothing here depends on the choice of common drift.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{BlockedPartition, FlagType};
use crate::schedule::{is_ulrich_quick, Time};

/// A three-block candidate whose blocks may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PreUlrichTriple {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnosis {
    PreUlrich,
    /// Some `a` and `c` differ in parity, so they meet at a half-integer time.
    ParityBroken,
    /// The new entry does not fit between its neighbouring blocks or repeats one.
    OrderBroken,
    /// Two pairs meet at this time.
    DoubleBooked { time: i64 },
}

impl PreUlrichTriple {
    pub fn new(mut a: Vec<i64>, mut b: Vec<i64>, mut c: Vec<i64>) -> Self {
        for v in [&mut a, &mut b, &mut c] {
            v.sort_unstable_by(|x, y| y.cmp(x));
        }
        PreUlrichTriple { a, b, c }
    }

    pub fn from_partition(p: &BlockedPartition) -> Result<Self> {
        if p.num_blocks() != 3 {
            return Err(Error::Analysis(format!("{p} does not have three blocks")));
        }
        Ok(PreUlrichTriple {
            a: p.block(0).to_vec(),
            b: p.block(1).to_vec(),
            c: p.block(2).to_vec(),
        })
    }

    pub fn to_partition(&self) -> Result<BlockedPartition> {
        BlockedPartition::from_blocks(&[&self.a, &self.b, &self.c])
    }

    pub fn dimension(&self) -> usize {
        let (a, b, c) = (self.a.len(), self.b.len(), self.c.len());
        a * b + a * c + b * c
    }

    /// All pairwise meeting times, sorted.
    pub fn times(&self) -> Vec<Time> {
        let mut out = Vec::with_capacity(self.dimension());
        for &x in &self.a {
            out.extend(self.b.iter().map(|&y| Ratio::from_integer(x - y)));
            out.extend(self.c.iter().map(|&z| Ratio::new(x - z, 2)));
        }
        for &y in &self.b {
            out.extend(self.c.iter().map(|&z| Ratio::from_integer(y - z)));
        }
        out.sort();
        out
    }

    pub fn diagnose(&self) -> Diagnosis {
        let all: Vec<i64> = self.a.iter().chain(&self.b).chain(&self.c).copied().collect();
        if all.windows(2).any(|w| w[0] <= w[1]) {
            return Diagnosis::OrderBroken;
        }
        if let Some(&first) = self.a.first().or(self.c.first()) {
            if self.a.iter().chain(&self.c).any(|x| (x - first).rem_euclid(2) != 0) {
                return Diagnosis::ParityBroken;
            }
        }
        let times = self.times();
        match times.windows(2).find(|w| w[0] == w[1]) {
            Some(w) => Diagnosis::DoubleBooked {
                time: w[0].to_integer(),
            },
            None => Diagnosis::PreUlrich,
        }
    }

    pub fn is_pre_ulrich(&self) -> bool {
        self.diagnose() == Diagnosis::PreUlrich
    }

    /// Smallest positive integer at which no pair meets.
    pub fn first_uncovered_time(&self) -> i64 {
        let covered: BTreeSet<i64> = self
            .times()
            .into_iter()
            .filter(|t| t.is_integer())
            .map(|t| t.to_integer())
            .collect();
        (1..).find(|t| !covered.contains(t)).expect("finite set")
    }

    /// Whether every entry of `self` appears in the matching block of `other`.
    pub fn is_subset_of(&self, other: &PreUlrichTriple) -> bool {
        let sub = |x: &[i64], y: &[i64]| x.iter().all(|e| y.contains(e));
        sub(&self.a, &other.a) && sub(&self.b, &other.b) && sub(&self.c, &other.c)
    }
}

impl fmt::Display for PreUlrichTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = |v: &[i64]| {
            if v.is_empty() {
                "∅".to_string()
            } else {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "({}|{}|{})", block(&self.a), block(&self.b), block(&self.c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    A,
    C,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::C => 'c',
        }
    }
}

/// Result of one greedy step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub triple: PreUlrichTriple,
    pub letter: Letter,
    pub added: i64,
    /// The time the new entry was placed to cover.
    pub t0: i64,
    pub diagnosis: Diagnosis,
}

impl Extension {
    pub fn is_valid(&self) -> bool {
        self.diagnosis == Diagnosis::PreUlrich
    }
}

/// Adds the `a` that meets the top of `B(t_0) ∪ C(t_0)` at the first
/// uncovered time `t_0`.
pub fn add_a(t: &PreUlrichTriple) -> Result<Extension> {
    let t0 = t.first_uncovered_time();
    let top = t
        .b
        .iter()
        .map(|&y| y - t0)
        .chain(t.c.iter().copied())
        .max()
        .ok_or_else(|| Error::Analysis(format!("{t} has no b or c entry for a new a to meet")))?;
    let added = top + 2 * t0;
    let mut a = t.a.clone();
    a.push(added);
    let triple = PreUlrichTriple::new(a, t.b.clone(), t.c.clone());
    Ok(Extension {
        diagnosis: triple.diagnose(),
        triple,
        letter: Letter::A,
        added,
        t0,
    })
}

/// Adds the `c` that meets the bottom of `A(t_0) ∪ B(t_0)` at the first
/// uncovered time `t_0`.
pub fn add_c(t: &PreUlrichTriple) -> Result<Extension> {
    let t0 = t.first_uncovered_time();
    let bottom = t
        .a
        .iter()
        .map(|&x| x - 2 * t0)
        .chain(t.b.iter().map(|&y| y - t0))
        .min()
        .ok_or_else(|| Error::Analysis(format!("{t} has no a or b entry for a new c to meet")))?;
    let mut c = t.c.clone();
    c.push(bottom);
    let triple = PreUlrichTriple::new(t.a.clone(), t.b.clone(), c);
    Ok(Extension {
        diagnosis: triple.diagnose(),
        triple,
        letter: Letter::C,
        added: bottom,
        t0,
    })
}

pub fn extend(t: &PreUlrichTriple, letter: Letter) -> Result<Extension> {
    match letter {
        Letter::A => add_a(t),
        Letter::C => add_c(t),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GreedyWord {
    letters: Vec<Letter>,
}

impl GreedyWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }
}

impl fmt::Display for GreedyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for GreedyWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for GreedyWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|ch| match ch {
                'a' => Ok(Letter::A),
                'c' => Ok(Letter::C),
                _ => Err(Error::parse(s, format!("{ch:?} is neither 'a' nor 'c'"))),
            })
            .collect::<Result<_>>()?;
        Ok(GreedyWord { letters })
    }
}

/// Applies `word` to `(∅|B|∅)`.
pub fn replay(word: &GreedyWord, b: &[i64]) -> Result<PreUlrichTriple> {
    let mut t = PreUlrichTriple::new(vec![], b.to_vec(), vec![]);
    for &letter in word.letters() {
        t = extend(&t, letter)?.triple;
    }
    Ok(t)
}

/// The order in which the greedy algorithm adds the outer entries of `p`.
pub fn greedy_word(p: &BlockedPartition) -> Result<GreedyWord> {
    let target = PreUlrichTriple::from_partition(p)?;
    if !is_ulrich_quick(p) {
        return Err(Error::NotUlrich(p.to_string()));
    }
    let mut t = PreUlrichTriple::new(vec![], target.b.clone(), vec![]);
    let mut word = GreedyWord::default();
    while t != target {
        let ext = [Letter::A, Letter::C]
            .into_iter()
            .map(|l| extend(&t, l))
            .find(|e| matches!(e, Ok(e) if e.triple.is_subset_of(&target)))
            .ok_or_else(|| Error::Analysis(format!("no greedy step from {t} stays inside {p}")))??;
        word.push(ext.letter);
        t = ext.triple;
    }
    Ok(word)
}

/// `[0, N'] = A' ⊔ C' ⊔ ½(A' + C')` for a partition with one middle entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumsetDecomposition {
    pub a_prime: Vec<i64>,
    pub c_prime: Vec<i64>,
    pub n_prime: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SumsetOutcome {
    Decomposed(SumsetDecomposition),
    Failed { reason: String },
}

impl SumsetOutcome {
    pub fn succeeded(&self) -> bool {
        matches!(self, SumsetOutcome::Decomposed(_))
    }
}

/// Normalizes `b = 0` and sets `A' = A - 1`, `C' = -C - 1`, `N' = N - 1`.
/// The meeting times minus one are then `A'`, `C'` and `½(A' + C')`.
pub fn sumset_decompose(p: &BlockedPartition) -> Result<SumsetOutcome> {
    if p.num_blocks() != 3 || p.block(1).len() != 1 {
        return Err(Error::Analysis(format!(
            "{p} is not of type (α,1,γ)"
        )));
    }
    let b = p.block(1)[0];
    let mut a_prime: Vec<i64> = p.block(0).iter().map(|x| x - b - 1).collect();
    let mut c_prime: Vec<i64> = p.block(2).iter().map(|z| -(z - b) - 1).collect();
    a_prime.sort_unstable();
    c_prime.sort_unstable();
    let n_prime = p.dimension() as i64 - 1;
    let fail = |reason: String| Ok(SumsetOutcome::Failed { reason });

    let mut seen = vec![false; (n_prime + 1) as usize];
    let mut mark = |v: i64, what: &str| -> std::result::Result<(), String> {
        if !(0..=n_prime).contains(&v) {
            return Err(format!("{what} {v} lies outside [0, {n_prime}]"));
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(format!("{v} is covered twice"));
        }
        Ok(())
    };
    for &x in &a_prime {
        if let Err(e) = mark(x, "element of A'") {
            return fail(e);
        }
    }
    for &z in &c_prime {
        if let Err(e) = mark(z, "element of C'") {
            return fail(e);
        }
    }
    for &x in &a_prime {
        for &z in &c_prime {
            if (x + z) % 2 != 0 {
                return fail(format!("{x} + {z} is odd"));
            }
            if let Err(e) = mark((x + z) / 2, "half sum") {
                return fail(e);
            }
        }
    }
    Ok(SumsetOutcome::Decomposed(SumsetDecomposition {
        a_prime,
        c_prime,
        n_prime,
    }))
}

/// `(A*, B*, C*)`: the dual re-centred so that its middle block equals `B`.
/// Entries are `A* = C + (N+1)`, `C* = A - (N+1)`.
pub fn centered_dual(p: &BlockedPartition) -> Result<PreUlrichTriple> {
    let t = PreUlrichTriple::from_partition(p)?;
    let shift = p.dimension() as i64 + 1;
    Ok(PreUlrichTriple {
        a: t.c.iter().map(|z| z + shift).collect(),
        b: t.b,
        c: t.a.iter().map(|x| x - shift).collect(),
    })
}

fn require_ulrich_triple(p: &BlockedPartition) -> Result<()> {
    if p.num_blocks() != 3 {
        return Err(Error::Analysis(format!("{p} does not have three blocks")));
    }
    if !is_ulrich_quick(p) {
        return Err(Error::NotUlrich(p.to_string()));
    }
    Ok(())
}

/// Given `a ∈ A`, `a* ∈ A*`, `c ∈ C`, `c* ∈ C*` with `a* - a = c - c*`,
/// reports whether `N + 1 = a* - c = a - c*`.
pub fn trapezoid_check(p: &BlockedPartition, a: i64, a_star: i64, c: i64, c_star: i64) -> Result<bool> {
    require_ulrich_triple(p)?;
    let dual = centered_dual(p)?;
    let member = |v: &[i64], x: i64, name: &str| {
        if v.contains(&x) {
            Ok(())
        } else {
            Err(Error::Analysis(format!("{x} is not in {name}")))
        }
    };
    member(p.block(0), a, "A")?;
    member(&dual.a, a_star, "A*")?;
    member(p.block(2), c, "C")?;
    member(&dual.c, c_star, "C*")?;
    if a_star - a != c - c_star {
        return Err(Error::Analysis(format!(
            "a* - a = {} but c - c* = {}",
            a_star - a,
            c - c_star
        )));
    }
    let n1 = p.dimension() as i64 + 1;
    Ok(a_star - c == n1 && a - c_star == n1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrapezoidWitness {
    pub a: i64,
    pub a_star: i64,
    pub c: i64,
    pub c_star: i64,
    pub holds: bool,
}

/// Every quadruple in `A × A* × C × C*` meeting the trapezoid hypothesis.
pub fn trapezoid_witnesses(p: &BlockedPartition) -> Result<Vec<TrapezoidWitness>> {
    require_ulrich_triple(p)?;
    let dual = centered_dual(p)?;
    let n1 = p.dimension() as i64 + 1;
    let mut out = Vec::new();
    for &a in p.block(0) {
        for &a_star in &dual.a {
            for &c in p.block(2) {
                for &c_star in &dual.c {
                    if a_star - a == c - c_star {
                        out.push(TrapezoidWitness {
                            a,
                            a_star,
                            c,
                            c_star,
                            holds: a_star - c == n1 && a - c_star == n1,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `|A ∩ A*| ≤ 1` and `|C ∩ C*| ≤ 1`.
pub fn rectangle_check(p: &BlockedPartition) -> Result<bool> {
    require_ulrich_triple(p)?;
    let dual = centered_dual(p)?;
    let shared = |x: &[i64], y: &[i64]| x.iter().filter(|e| y.contains(e)).count();
    Ok(shared(p.block(0), &dual.a) <= 1 && shared(p.block(2), &dual.c) <= 1)
}

/// `b_1 - b_2` for a partition with exactly two middle entries.
pub fn middle_gap(p: &BlockedPartition) -> Option<i64> {
    (p.num_blocks() == 3 && p.block(1).len() == 2).then(|| p.block(1)[0] - p.block(1)[1])
}

/// A positional pattern of middle entries (`true`) and blanks, read from the
/// highest position down.
pub type Pattern = Vec<bool>;

/// `q` repetitions of `m` entries followed by `r - m` blanks.
pub fn k_pattern(q: usize, r: usize, m: usize) -> Result<Pattern> {
    if q == 0 || r == 0 || m > r {
        return Err(Error::Analysis(format!(
            "K({q},{r},{m}) needs q, r > 0 and m ≤ r"
        )));
    }
    let period: Vec<bool> = (0..r).map(|i| i < m).collect();
    Ok(period.repeat(q))
}

/// The mirror partner of `psi`: an entry at mirrored position exactly where
/// `psi` has a blank.
pub fn complement_pattern(psi: &[bool]) -> Pattern {
    psi.iter().rev().map(|x| !x).collect()
}

/// `Ψ`-elongation of a three-block partition: the positional word
/// `A Ψ X_ℓ B X_ℓ Ψ^c C`, with `B` kept in place, `A` raised by `2ℓ` and `C`
/// lowered by `2ℓ`.
pub fn psi_elongate(p: &BlockedPartition, psi: &[bool]) -> Result<BlockedPartition> {
    let t = PreUlrichTriple::from_partition(p)?;
    let (Some(&a_low), Some(&c_high)) = (t.a.last(), t.c.first()) else {
        return Err(Error::Analysis(format!("{p} needs nonempty outer blocks")));
    };
    let l = psi.len() as i64;
    let mut b = Vec::with_capacity(t.b.len() + psi.len());
    // Ψ occupies a_low + 2ℓ - 1 down to a_low + ℓ.
    b.extend(
        psi.iter()
            .enumerate()
            .filter(|(_, &x)| x)
            .map(|(i, _)| a_low + 2 * l - 1 - i as i64),
    );
    b.extend(&t.b);
    // Ψ^c occupies c_high - ℓ down to c_high - 2ℓ + 1.
    b.extend(
        complement_pattern(psi)
            .iter()
            .enumerate()
            .filter(|(_, &x)| x)
            .map(|(i, _)| c_high - l - i as i64),
    );
    let a: Vec<i64> = t.a.iter().map(|x| x + 2 * l).collect();
    let c: Vec<i64> = t.c.iter().map(|z| z - 2 * l).collect();
    BlockedPartition::new(
        FlagType::with_empty_blocks(vec![a.len(), b.len(), c.len()])?,
        a.into_iter().chain(b).chain(c).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BlockedPartition {
        s.parse().unwrap()
    }

    fn tri(a: &[i64], b: &[i64], c: &[i64]) -> PreUlrichTriple {
        PreUlrichTriple::new(a.to_vec(), b.to_vec(), c.to_vec())
    }

    #[test]
    fn add_a_examples() {
        let e = add_a(&tri(&[], &[5, 0], &[])).unwrap();
        assert_eq!(e.triple, tri(&[6], &[5, 0], &[]));
        assert!(e.is_valid());
        let e = add_a(&tri(&[6], &[5, 0], &[-2])).unwrap();
        assert_eq!(e.triple, tri(&[8, 6], &[5, 0], &[-2]));
        assert_eq!(e.t0, 3);
        assert_eq!(add_a(&tri(&[], &[1], &[])).unwrap().triple, tri(&[2], &[1], &[]));
        assert!(add_a(&tri(&[3], &[], &[])).is_err());
    }

    #[test]
    fn add_c_examples() {
        assert_eq!(
            add_c(&tri(&[6], &[5, 0], &[])).unwrap().triple,
            tri(&[6], &[5, 0], &[-2])
        );
        let e = add_c(&tri(&[4], &[3, 0], &[])).unwrap();
        assert_eq!((e.t0, e.triple.clone()), (2, tri(&[4], &[3, 0], &[-2])));
        assert_eq!(add_c(&tri(&[], &[0], &[])).unwrap().triple, tri(&[], &[0], &[-1]));
    }

    #[test]
    fn invalid_extensions_are_diagnosed() {
        // From (6|5,0|-2) the greedy step is an a; a c would land on -3.
        let e = add_c(&tri(&[6], &[5, 0], &[-2])).unwrap();
        assert_eq!(e.added, -3);
        assert_eq!(e.diagnosis, Diagnosis::ParityBroken);
        let e = add_a(&tri(&[], &[1, 0], &[-4])).unwrap();
        assert!(e.is_valid());
        assert_eq!(tri(&[6], &[4], &[-1]).diagnose(), Diagnosis::ParityBroken);
        assert_eq!(tri(&[2], &[1], &[1]).diagnose(), Diagnosis::OrderBroken);
        assert!(matches!(
            tri(&[6, 2], &[1, 0], &[-2, -6]).diagnose(),
            Diagnosis::DoubleBooked { .. }
        ));
    }

    #[test]
    fn greedy_words() {
        for (s, w) in [
            ("8,6|5,0|-2", "aca"),
            ("12,4|3,0|-2,-8", "acca"),
            ("16,10,4|3,0|-2,-12", "acaca"),
        ] {
            let part = p(s);
            let word = greedy_word(&part).unwrap();
            assert_eq!(word.to_string(), w);
            let back = replay(&word, part.block(1)).unwrap();
            assert_eq!(back.to_partition().unwrap(), part);
        }
        assert!(matches!(greedy_word(&p("10,4|3,0|-2")), Err(Error::NotUlrich(_))));
        assert!("ab".parse::<GreedyWord>().is_err());
    }

    #[test]
    fn sumsets() {
        let SumsetOutcome::Decomposed(d) = sumset_decompose(&p("5,1|0|-3")).unwrap() else {
            panic!("expected a decomposition");
        };
        assert_eq!((d.a_prime, d.c_prime, d.n_prime), (vec![0, 4], vec![2], 4));
        let SumsetOutcome::Decomposed(d) =
            sumset_decompose(&p("17,1|0|-3,-7,-9,-11,-15")).unwrap()
        else {
            panic!("expected a decomposition");
        };
        assert_eq!(d.a_prime, vec![0, 16]);
        assert_eq!(d.c_prime, vec![2, 6, 8, 10, 14]);
        assert_eq!(d.n_prime, 16);
        assert!(!sumset_decompose(&p("3,1|0|-1")).unwrap().succeeded());
        assert!(sumset_decompose(&p("5|1,0|-3")).is_err());
    }

    #[test]
    fn trapezoid_examples() {
        let a = p("8,6|5,0|-2");
        assert!(trapezoid_check(&a, 6, 7, -2, -3).unwrap());
        let b = p("16,10,4|3,0|-2,-12");
        assert!(trapezoid_check(&b, 10, 15, -2, -7).unwrap());
        assert!(trapezoid_check(&b, 10, 15, -2, -12).is_err());
        assert!(trapezoid_check(&p("10,4|3,0|-2"), 10, 0, -2, 0).is_err());
        for q in [a, b, p("5|3,-1,-2,-4|-5")] {
            let ws = trapezoid_witnesses(&q).unwrap();
            assert!(ws.iter().all(|w| w.holds), "{q}");
        }
    }

    #[test]
    fn rectangle_examples() {
        assert!(rectangle_check(&p("8,6|5,0|-2")).unwrap());
        assert!(rectangle_check(&p("5|3,-1,-2,-4|-5")).unwrap());
        assert!(rectangle_check(&p("6,2|1,0|-1,-5")).is_err());
    }

    #[test]
    fn patterns() {
        let k = k_pattern(2, 6, 2).unwrap();
        let s: String = k.iter().map(|&x| if x { 'b' } else { 'x' }).collect();
        assert_eq!(s, "bbxxxxbbxxxx");
        let psi = [true, false, true, true, false];
        let c: String = complement_pattern(&psi).iter().map(|&x| if x { 'b' } else { 'x' }).collect();
        assert_eq!(c, "bxxbx");
        assert!(k_pattern(1, 2, 3).is_err());
    }

    #[test]
    fn psi_elongation_layout() {
        // a1 x x x a2 b1 b2 x x b3 x x c1 x c2
        let base = p("14,10|9,8,5|2,0");
        let out = psi_elongate(&base, &[true, false, true, true, false]).unwrap();
        let word: String = (out.entries().last().copied().unwrap()..=out.entries()[0])
            .rev()
            .map(|x| match out.entries().iter().position(|&e| e == x) {
                Some(i) if i < 2 => 'a',
                Some(i) if i >= out.entries().len() - 2 => 'c',
                Some(_) => 'b',
                None => 'x',
            })
            .collect();
        assert_eq!(word, "axxxabxbbxxxxxxbbxxbxxxxxxxbxxbxcxc");
    }
}
