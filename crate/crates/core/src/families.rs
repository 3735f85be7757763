//! The known infinite families of Ulrich partitions and the few sporadic
//! examples. Every constructor re-checks its output with the Ulrich test.

use std::fmt;

use serde::Serialize;

use crate::analysis::{greedy_word, replay, GreedyWord, Letter};
use crate::error::{Error, Result};
use crate::partition::{BlockedPartition, FlagType, MAX_TOTAL_LENGTH};
use crate::schedule::is_ulrich_quick;

fn checked(family: &str, p: BlockedPartition) -> Result<BlockedPartition> {
    if is_ulrich_quick(&p) {
        Ok(p)
    } else {
        Err(Error::NotUlrich(format!("{p} (built as {family})")))
    }
}

/// `(k^{m+1} - 1) / 3` with `k = 4`: the third-block lengths that occur in
/// types `(2,1,k)` and `(1,2,k)`.
pub fn four_power_length(m: u32) -> usize {
    (4usize.pow(m + 1) - 1) / 3
}

/// Largest `m` whose `(4^{m+1} - 1) / 3` stays within the supported length.
const MAX_FOUR_POWER: u32 = 5;

fn check_four_power(family: &str, m: u32) -> Result<()> {
    if m > MAX_FOUR_POWER {
        return Err(Error::family(
            family,
            format!("m = {m} gives a block longer than {MAX_TOTAL_LENGTH}"),
        ));
    }
    Ok(())
}

/// Type `(1,n,1)`: `(n+1 | B | -n-1)` where `B` holds `p` for `p ∈ S` and
/// `-p` otherwise.
pub fn one_n_one(n: usize, subset: &[usize]) -> Result<BlockedPartition> {
    const NAME: &str = "one-n-one";
    if n == 0 || n + 2 > MAX_TOTAL_LENGTH {
        return Err(Error::family(NAME, format!("n = {n} is out of range")));
    }
    if let Some(bad) = subset.iter().find(|&&p| p == 0 || p > n) {
        return Err(Error::family(NAME, format!("{bad} is not in [1, {n}]")));
    }
    let mut b: Vec<i64> = (1..=n as i64)
        .map(|p| if subset.contains(&(p as usize)) { p } else { -p })
        .collect();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let top = n as i64 + 1;
    checked(NAME, BlockedPartition::from_blocks(&[vec![top], b, vec![-top]])?)
}

/// The unique Ulrich partition of type `(2,1,k)`, `k = (4^{m+1} - 1)/3`.
pub fn two_one_k(m: u32) -> Result<BlockedPartition> {
    const NAME: &str = "two-one-k";
    check_four_power(NAME, m)?;
    // C'(j) = 4 C'(j-1) ∪ {c ≤ 4^{j+1} : c ≡ 2 mod 4}, starting from C'(-1) = ∅.
    let mut c_prime: Vec<i64> = Vec::new();
    for j in 0..=m {
        let top = 4i64.pow(j + 1);
        let mut next: Vec<i64> = c_prime.iter().map(|c| 4 * c).collect();
        next.extend((0..=top).filter(|c| c % 4 == 2));
        next.sort_unstable();
        c_prime = next;
    }
    let n_prime = 4i64.pow(m + 1);
    let a = vec![n_prime + 1, 1];
    let c: Vec<i64> = c_prime.iter().map(|x| -(x + 1)).collect();
    checked(NAME, BlockedPartition::from_blocks(&[a, vec![0], c])?)
}

/// The unique Ulrich partition `(2|1,0|C)` of type `(1,2,k)`,
/// `k = (4^{m+1} - 1)/3`: run `j` of `C` is the `4^j` even numbers ending at
/// `-4^{j+1}`.
pub fn one_two_k(m: u32) -> Result<BlockedPartition> {
    const NAME: &str = "one-two-k";
    check_four_power(NAME, m)?;
    let mut c = Vec::new();
    for j in 0..=m {
        let len = 4i64.pow(j);
        let bottom = -4 * len;
        c.extend((0..len).rev().map(|i| bottom + 2 * i));
    }
    checked(NAME, BlockedPartition::from_blocks(&[vec![2], vec![1, 0], c])?)
}

/// The Ulrich partition of type `(k_1 + k_2, 2, 1)` containing the dual of
/// `one_two_k(m1)` and whose symmetric dual contains `one_two_k(m2)`.
///
/// The dual of `one_two_k(m1)` fixes the greedy word for the first
/// `k_1 + 1` steps; the remaining steps only add `a`s, and there are `k_2`
/// of them.
pub fn two_param(m1: u32, m2: u32) -> Result<BlockedPartition> {
    const NAME: &str = "two-param";
    check_four_power(NAME, m1)?;
    check_four_power(NAME, m2)?;
    let seed = one_two_k(m1)?.dual()?;
    let shift = 1 - seed.block(1)[0];
    let seed = seed.shifted(shift)?;
    let mut word: GreedyWord = greedy_word(&seed)?;
    for _ in 0..four_power_length(m2) {
        word.push(Letter::A);
    }
    let t = replay(&word, &[1, 0])?;
    checked(NAME, t.to_partition()?)
}

/// `F_m = (3m, m | m-1, ..., 1 | -m)` of type `(2, m-1, 1)`. `F_1` has an
/// empty middle block and is only an elongation seed.
pub fn fundamental_f(m: usize) -> Result<BlockedPartition> {
    const NAME: &str = "fundamental-1n2";
    if m == 0 || m > MAX_TOTAL_LENGTH {
        return Err(Error::family(NAME, format!("m = {m} is out of range")));
    }
    let m = m as i64;
    let mut entries = vec![3 * m, m];
    entries.extend((1..m).rev());
    entries.push(-m);
    let p = BlockedPartition::new(
        FlagType::with_empty_blocks(vec![2, (m - 1) as usize, 1])?,
        entries,
    )?;
    if m == 1 {
        Ok(p)
    } else {
        checked(NAME, p)
    }
}

/// `E(P)` for `P = (y+2m, y | B | -y)` of type `(2,n,1)`: returns
/// `(y+5m, y+3m | y+3m-1, ..., y+2m, B, -y-m, ..., -y-2m+1 | -y-3m)`.
///
/// Inputs that are not centred (`a_2 ≠ -c`) are translated first.
pub fn elongate(p: &BlockedPartition) -> Result<BlockedPartition> {
    const NAME: &str = "elongate";
    let lengths = p.flag_type().lengths();
    if lengths.len() != 3 || lengths[0] != 2 || lengths[2] != 1 {
        return Err(Error::family(NAME, format!("{p} is not of type (2,n,1)")));
    }
    let (a1, a2, c) = (p.block(0)[0], p.block(0)[1], p.block(2)[0]);
    if (a1 - a2) % 2 != 0 {
        return Err(Error::family(NAME, format!("a-gap {} is odd", a1 - a2)));
    }
    if (a2 + c) % 2 != 0 {
        return Err(Error::family(NAME, format!("{p} cannot be centred: a_2 + c is odd")));
    }
    let centre = (a2 + c) / 2;
    let m = (a1 - a2) / 2;
    let y = a2 - centre;
    let mut entries = vec![y + 5 * m, y + 3 * m];
    entries.extend((y + 2 * m..y + 3 * m).rev());
    entries.extend(p.block(1).iter().map(|b| b - centre));
    entries.extend((-y - 2 * m + 1..=-y - m).rev());
    entries.push(-y - 3 * m);
    let n = lengths[1] + 2 * m as usize;
    BlockedPartition::new(FlagType::with_empty_blocks(vec![2, n, 1])?, entries)
}

/// `E^k(F_m)`, Ulrich of type `(2, 2mk + m - 1, 1)`.
pub fn elongated_family(k: usize, m: usize) -> Result<BlockedPartition> {
    const NAME: &str = "elongated";
    if m == 0 || (k, m) == (0, 1) {
        return Err(Error::family(
            NAME,
            format!("(k, m) = ({k}, {m}) has an empty middle block"),
        ));
    }
    if (2 * m * k + m + 2) > MAX_TOTAL_LENGTH {
        return Err(Error::family(NAME, format!("(k, m) = ({k}, {m}) is too long")));
    }
    let mut p = fundamental_f(m)?;
    for _ in 0..k {
        p = elongate(&p)?;
    }
    checked(NAME, p)
}

/// `P_u = (6u+5, 2u+1 | 2u, 2u-2, ..., 2, -1, -3, ..., -2u+1 | -2u-1, -6u-3)`
/// of type `(2,2u,2)`.
pub fn p_u(u: usize) -> Result<BlockedPartition> {
    const NAME: &str = "p-u";
    if u == 0 || 2 * u + 4 > MAX_TOTAL_LENGTH {
        return Err(Error::family(NAME, format!("u = {u} is out of range")));
    }
    let u = u as i64;
    let b: Vec<i64> = (1..=u)
        .rev()
        .map(|i| 2 * i)
        .chain((1..=u).map(|i| -(2 * i - 1)))
        .collect();
    checked(
        NAME,
        BlockedPartition::from_blocks(&[vec![6 * u + 5, 2 * u + 1], b, vec![-2 * u - 1, -6 * u - 3]])?,
    )
}

pub const SPORADIC_NAMES: [&str; 5] = ["221", "121", "222", "322", "223"];

/// Isolated examples named by their type.
pub fn sporadic(name: &str) -> Result<BlockedPartition> {
    const NAME: &str = "sporadic";
    let text = match name {
        "221" => "8,6|5,0|-2",
        "121" => "4|3,0|-2",
        "222" => "12,4|3,0|-2,-8",
        "322" => "16,10,4|3,0|-2,-12",
        "223" => return checked(NAME, sporadic("322")?.symmetric()),
        other => {
            return Err(Error::family(
                NAME,
                format!("unknown example {other:?}; expected one of {SPORADIC_NAMES:?}"),
            ))
        }
    };
    checked(NAME, text.parse()?)
}

/// A family member addressed by name and integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyId {
    OneNOne { n: usize, subset: Vec<usize> },
    TwoOneK { m: u32 },
    OneTwoK { m: u32 },
    TwoParam { m1: u32, m2: u32 },
    #[serde(rename = "fundamental-1n2")]
    Fundamental { m: usize },
    Elongated { k: usize, m: usize },
    PU { u: usize },
    Sporadic { name: String },
}

pub const FAMILY_NAMES: [&str; 8] = [
    "one-n-one",
    "two-one-k",
    "one-two-k",
    "two-param",
    "fundamental-1n2",
    "elongated",
    "p-u",
    "sporadic",
];

impl FamilyId {
    /// Parses `name` with a comma-separated parameter list. `sporadic` takes
    /// its example name (`322`) as the parameter.
    pub fn parse(name: &str, params: &str) -> Result<Self> {
        let ints = || -> Result<Vec<u64>> {
            params
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u64>()
                        .map_err(|_| Error::family(name, format!("{s:?} is not a nonnegative integer")))
                })
                .collect()
        };
        let exactly = |k: usize| -> Result<Vec<u64>> {
            let v = ints()?;
            if v.len() != k {
                return Err(Error::family(
                    name,
                    format!("expected {k} parameter(s), got {}", v.len()),
                ));
            }
            Ok(v)
        };
        let small = |x: u64| -> Result<u32> {
            u32::try_from(x).map_err(|_| Error::family(name, format!("{x} is too large")))
        };
        Ok(match name {
            "one-n-one" => {
                let v = ints()?;
                let Some((&n, rest)) = v.split_first() else {
                    return Err(Error::family(name, "expected n followed by the subset S"));
                };
                FamilyId::OneNOne {
                    n: n as usize,
                    subset: rest.iter().map(|&x| x as usize).collect(),
                }
            }
            "two-one-k" => FamilyId::TwoOneK {
                m: small(exactly(1)?[0])?,
            },
            "one-two-k" => FamilyId::OneTwoK {
                m: small(exactly(1)?[0])?,
            },
            "two-param" => {
                let v = exactly(2)?;
                FamilyId::TwoParam {
                    m1: small(v[0])?,
                    m2: small(v[1])?,
                }
            }
            "fundamental-1n2" => FamilyId::Fundamental {
                m: exactly(1)?[0] as usize,
            },
            "elongated" => {
                let v = exactly(2)?;
                FamilyId::Elongated {
                    k: v[0] as usize,
                    m: v[1] as usize,
                }
            }
            "p-u" => FamilyId::PU {
                u: exactly(1)?[0] as usize,
            },
            "sporadic" => FamilyId::Sporadic {
                name: params.trim().to_string(),
            },
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }

    pub fn build(&self) -> Result<BlockedPartition> {
        match self {
            FamilyId::OneNOne { n, subset } => one_n_one(*n, subset),
            FamilyId::TwoOneK { m } => two_one_k(*m),
            FamilyId::OneTwoK { m } => one_two_k(*m),
            FamilyId::TwoParam { m1, m2 } => two_param(*m1, *m2),
            FamilyId::Fundamental { m } => fundamental_f(*m),
            FamilyId::Elongated { k, m } => elongated_family(*k, *m),
            FamilyId::PU { u } => p_u(*u),
            FamilyId::Sporadic { name } => sporadic(name),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::OneNOne { .. } => "one-n-one",
            FamilyId::TwoOneK { .. } => "two-one-k",
            FamilyId::OneTwoK { .. } => "one-two-k",
            FamilyId::TwoParam { .. } => "two-param",
            FamilyId::Fundamental { .. } => "fundamental-1n2",
            FamilyId::Elongated { .. } => "elongated",
            FamilyId::PU { .. } => "p-u",
            FamilyId::Sporadic { .. } => "sporadic",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = match self {
            FamilyId::OneNOne { n, subset } => std::iter::once(n)
                .chain(subset)
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
            FamilyId::TwoOneK { m } | FamilyId::OneTwoK { m } => m.to_string(),
            FamilyId::TwoParam { m1, m2 } => format!("{m1},{m2}"),
            FamilyId::Fundamental { m } => m.to_string(),
            FamilyId::Elongated { k, m } => format!("{k},{m}"),
            FamilyId::PU { u } => u.to_string(),
            FamilyId::Sporadic { name } => name.clone(),
        };
        write!(f, "{} {params}", self.name())
    }
}

/// Every family member of the given three-block type, canonicalized and
/// sorted. Covers the types classified by the families above: `(1,n,1)`,
/// `(2,n,1)`, `(2,1,k)`, `(1,2,k)`, `(2,n,2)` and the sporadic cases, plus
/// the reversed types through `symmetric`. The list is closed under the
/// symmetric dual, which preserves the type.
pub fn known_members(ftype: &FlagType) -> Vec<BlockedPartition> {
    let mut out = members_one_orientation(ftype);
    let rev = ftype.reversed();
    if rev != *ftype {
        out.extend(members_one_orientation(&rev).iter().map(|p| p.symmetric()));
    } else {
        let extra: Vec<_> = out.iter().map(|p| p.symmetric()).collect();
        out.extend(extra);
    }
    let duals: Vec<_> = out.iter().filter_map(|p| p.symmetric_dual().ok()).collect();
    out.extend(duals);
    let mut out: Vec<_> = out.into_iter().map(|p| p.canonicalize()).collect();
    out.sort();
    out.dedup();
    out
}

fn members_one_orientation(ftype: &FlagType) -> Vec<BlockedPartition> {
    let l = ftype.lengths();
    let mut out = Vec::new();
    if l.len() != 3 {
        return out;
    }
    let (alpha, beta, gamma) = (l[0], l[1], l[2]);
    if alpha == 1 && gamma == 1 && beta <= 16 {
        for mask in 0u32..(1 << beta) {
            let s: Vec<usize> = (1..=beta).filter(|p| mask & (1 << (p - 1)) != 0).collect();
            out.extend(one_n_one(beta, &s));
        }
    }
    if alpha == 2 && gamma == 1 {
        for m in 1..=beta + 1 {
            let twice = beta + 1 - m;
            if twice % (2 * m) == 0 {
                out.extend(elongated_family(twice / (2 * m), m));
            }
        }
    }
    for m in 0..=MAX_FOUR_POWER {
        let k = four_power_length(m);
        if (alpha, beta, gamma) == (2, 1, k) {
            out.extend(two_one_k(m));
        }
        if (alpha, beta, gamma) == (1, 2, k) {
            out.extend(one_two_k(m));
        }
        for m2 in 0..=MAX_FOUR_POWER {
            if (alpha, beta, gamma) == (k + four_power_length(m2), 2, 1) {
                out.extend(two_param(m, m2));
            }
        }
    }
    if alpha == 2 && gamma == 2 && beta % 2 == 0 && beta > 0 {
        out.extend(p_u(beta / 2));
    }
    for name in SPORADIC_NAMES {
        if let Ok(p) = sporadic(name) {
            if p.flag_type() == ftype {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedule::is_ulrich;

    fn p(s: &str) -> BlockedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn one_n_one_examples() {
        assert_eq!(one_n_one(4, &[3]).unwrap(), p("5|3,-1,-2,-4|-5"));
        assert_eq!(one_n_one(1, &[1]).unwrap(), p("2|1|-2"));
        assert_eq!(one_n_one(2, &[]).unwrap(), p("3|-1,-2|-3"));
        assert!(one_n_one(2, &[3]).is_err());
        assert!(one_n_one(2, &[0]).is_err());
    }

    #[test]
    fn two_one_k_examples() {
        assert_eq!(two_one_k(0).unwrap(), p("5,1|0|-3"));
        assert_eq!(two_one_k(1).unwrap(), p("17,1|0|-3,-7,-9,-11,-15"));
        let big = two_one_k(2).unwrap();
        assert_eq!(big.flag_type().lengths(), &[2, 1, 21]);
        assert_eq!(&big.entries()[..3], &[65, 1, 0]);
        let mut c_prime: Vec<i64> = big.block(2).iter().map(|z| -z - 1).collect();
        c_prime.sort_unstable();
        let mut expected: Vec<i64> = (0..=64).filter(|c| c % 4 == 2).collect();
        expected.extend([8, 24, 32, 40, 56]);
        expected.sort_unstable();
        assert_eq!(c_prime, expected);
        assert!(two_one_k(6).is_err());
    }

    #[test]
    fn one_two_k_examples() {
        assert_eq!(one_two_k(0).unwrap(), p("2|1,0|-4"));
        assert_eq!(one_two_k(1).unwrap(), p("2|1,0|-4,-10,-12,-14,-16"));
        let c = one_two_k(2).unwrap();
        let tail: Vec<i64> = (0..16).map(|i| -34 - 2 * i).collect();
        assert_eq!(&c.block(2)[5..], &tail[..]);
    }

    #[test]
    fn two_param_examples() {
        assert_eq!(two_param(0, 1).unwrap(), p("20,18,16,14,8,2|1,0|-4"));
        let q = two_param(0, 0).unwrap();
        assert_eq!(q.flag_type().lengths(), &[2, 2, 1]);
        assert_eq!(q.dimension(), 8);
        let sd = two_param(0, 1).unwrap().symmetric_dual().unwrap();
        assert!(two_param(1, 0).unwrap().is_equivalent(&sd));
        for m in 0..2 {
            let q = two_param(m, m).unwrap();
            assert!(q.is_equivalent(&q.symmetric_dual().unwrap()));
        }
    }

    #[test]
    fn two_param_dimension_formula() {
        for m1 in 0..3 {
            for m2 in 0..3 {
                let q = two_param(m1, m2).unwrap();
                assert_eq!(q.dimension(), 4u64.pow(m1 + 1) + 4u64.pow(m2 + 1));
            }
        }
    }

    #[test]
    fn fundamental_patterns() {
        assert_eq!(fundamental_f(2).unwrap(), p("6,2|1|-2"));
        assert_eq!(fundamental_f(3).unwrap(), p("9,3|2,1|-3"));
        let f1 = fundamental_f(1).unwrap();
        assert_eq!(f1.entries(), &[3, 1, -1]);
        assert_eq!(f1.flag_type().lengths(), &[2, 0, 1]);
        assert!(fundamental_f(0).is_err());
    }

    #[test]
    fn elongation_examples() {
        let e1 = elongate(&fundamental_f(2).unwrap()).unwrap();
        assert_eq!(e1, p("12,8|7,6,1,-4,-5|-8"));
        assert_eq!(elongate(&e1).unwrap(), p("18,14|13,12,7,6,1,-4,-5,-10,-11|-14"));
        let e = elongate(&fundamental_f(1).unwrap()).unwrap();
        assert_eq!(e, p("6,4|3,-2|-4"));
        assert!(e.is_equivalent(&p("8,6|5,0|-2")));
        // Translation does not matter.
        let shifted = fundamental_f(2).unwrap().shifted(7).unwrap();
        assert!(elongate(&shifted).unwrap().is_equivalent(&e1));
        assert!(elongate(&p("5,2|1|-2")).is_err());
        assert!(elongate(&p("5|1|-2")).is_err());
    }

    #[test]
    fn elongated_family_examples() {
        assert_eq!(elongated_family(0, 3).unwrap(), p("9,3|2,1|-3"));
        assert_eq!(
            elongated_family(1, 3).unwrap(),
            p("18,12|11,10,9,2,1,-6,-7,-8|-12")
        );
        assert_eq!(
            elongated_family(2, 2).unwrap(),
            p("18,14|13,12,7,6,1,-4,-5,-10,-11|-14")
        );
        assert!(elongated_family(0, 1).is_err());
        for k in 0..4 {
            for m in 1..5 {
                if (k, m) == (0, 1) {
                    continue;
                }
                let q = elongated_family(k, m).unwrap();
                assert_eq!(q.flag_type().lengths(), &[2, 2 * m * k + m - 1, 1]);
                // The dimension is 2y + m - 1 with y = a_2 in centred form.
                let y = q.block(0)[1];
                assert_eq!(q.dimension() as i64, 2 * y + m as i64 - 1);
            }
        }
    }

    #[test]
    fn p_u_examples() {
        assert_eq!(p_u(1).unwrap(), p("11,3|2,-1|-3,-9"));
        assert_eq!(p_u(2).unwrap(), p("17,5|4,2,-1,-3|-5,-15"));
        assert_eq!(p_u(3).unwrap(), p("23,7|6,4,2,-1,-3,-5|-7,-21"));
        for u in 1..6 {
            let q = p_u(u).unwrap();
            assert_eq!(q.dimension(), 8 * u as u64 + 4);
            assert!(q.is_equivalent(&q.symmetric_dual().unwrap()));
        }
    }

    #[test]
    fn sporadic_examples() {
        assert_eq!(sporadic("322").unwrap(), p("16,10,4|3,0|-2,-12"));
        assert_eq!(sporadic("221").unwrap(), p("8,6|5,0|-2"));
        let s = sporadic("223").unwrap();
        assert_eq!(s.flag_type().lengths(), &[2, 2, 3]);
        assert!(is_ulrich(&s).is_ulrich);
        assert!(sporadic("999").is_err());
    }

    #[test]
    fn family_ids() {
        let id = FamilyId::parse("elongated", "1,2").unwrap();
        assert_eq!(id.build().unwrap().to_string(), "12,8|7,6,1,-4,-5|-8");
        assert_eq!(id.to_string(), "elongated 1,2");
        assert_eq!(
            FamilyId::parse("one-n-one", "4,3").unwrap().build().unwrap(),
            p("5|3,-1,-2,-4|-5")
        );
        assert_eq!(
            FamilyId::parse("sporadic", "322").unwrap().build().unwrap(),
            p("16,10,4|3,0|-2,-12")
        );
        assert!(matches!(FamilyId::parse("nope", "1"), Err(Error::UnknownFamily(_))));
        assert!(FamilyId::parse("p-u", "1,2").is_err());
        assert!(FamilyId::parse("p-u", "x").is_err());
        for name in FAMILY_NAMES {
            assert_eq!(FamilyId::parse(name, "1,1").map(|f| f.name()).unwrap_or(name), name);
        }
    }

    #[test]
    fn known_members_cover_reversed_types() {
        let t = |s: &str| s.parse::<FlagType>().unwrap();
        assert_eq!(known_members(&t("1,3,1")).len(), 8);
        assert_eq!(known_members(&t("2,4,2")).len(), 2);
        assert_eq!(known_members(&t("1,4,2")).len(), 2);
        assert_eq!(known_members(&t("2,4,1")).len(), 2);
        assert_eq!(known_members(&t("5,1,2")).len(), 1);
        assert_eq!(known_members(&t("2,2,1")).len(), 2);
    }
}
