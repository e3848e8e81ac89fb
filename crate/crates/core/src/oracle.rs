//! Brute-force ground truth over a bounded box, kept independent of the
//! number theory in the rest of the crate.
//!
//! The angle test here compares squared cosines,
//! `d^2 (Tn + Td) = |a|^2 |v|^2 Td` with `d = a.v`, and every hit is
//! re-checked with [`angle_between`].

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::angle::{angle_between, AngleClass};
use crate::angleset::{hilbert_criterion, theta_n_contains};
use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Rational};
use crate::shell::for_each_in_box;
use crate::vector::IntVec;
use crate::witness::{witness_for_angle, SearchBudget};

fn small_components(a: &IntVec) -> Result<Vec<i64>> {
    let limit = i64::from(i32::MAX);
    match a.to_i64s() {
        Some(c) if c.iter().all(|x| x.abs() <= limit) => Ok(c),
        _ => Err(Error::TooLarge {
            what: "vector component",
            value: a.max_abs().to_string(),
            bound: limit.to_string(),
        }),
    }
}

fn small_tangent(t: &Rational) -> Result<(i128, i128)> {
    let limit = i128::from(i32::MAX);
    let n = i128::try_from(t.numer()).ok().filter(|x| x.abs() <= limit);
    let d = i128::try_from(t.denom()).ok().filter(|x| x.abs() <= limit);
    n.zip(d).ok_or_else(|| Error::TooLarge {
        what: "tan^2",
        value: t.to_string(),
        bound: limit.to_string(),
    })
}

enum Target {
    Parallel { negative: bool },
    Right,
    Oblique { tn: i128, td: i128, obtuse: bool },
}

/// First vector in `[-bound, bound]^n` (max-norm shell order) making `angle`
/// with `a`, found by exhaustive search.
pub fn brute_force_witness(a: &IntVec, angle: &AngleClass, bound: u64) -> Result<Option<IntVec>> {
    a.require_nonzero()?;
    let comps = small_components(a)?;
    if bound > i64::from(i32::MAX) as u64 {
        return Err(Error::TooLarge {
            what: "box",
            value: bound.to_string(),
            bound: i32::MAX.to_string(),
        });
    }
    let target = match angle {
        AngleClass::Zero => Target::Parallel { negative: false },
        AngleClass::Straight => Target::Parallel { negative: true },
        AngleClass::Right => Target::Right,
        AngleClass::Oblique { tan2, obtuse } => {
            let (tn, td) = small_tangent(tan2)?;
            Target::Oblique {
                tn,
                td,
                obtuse: *obtuse,
            }
        }
    };
    let a_norm2: i128 = comps.iter().map(|&x| i128::from(x) * i128::from(x)).sum();
    let hit = for_each_in_box(comps.len(), bound, |v| {
        let d: i128 = comps
            .iter()
            .zip(v)
            .map(|(&x, &y)| i128::from(x) * i128::from(y))
            .sum();
        let n: i128 = v.iter().map(|&y| i128::from(y) * i128::from(y)).sum();
        let ok = match target {
            Target::Right => d == 0,
            Target::Parallel { negative } => d != 0 && (d < 0) == negative && a_norm2 * n == d * d,
            Target::Oblique { tn, td, obtuse } => {
                d != 0 && (d < 0) == obtuse && d * d * (tn + td) == a_norm2 * n * td
            }
        };
        if ok {
            ControlFlow::Break(IntVec::from_i64s(v))
        } else {
            ControlFlow::Continue(())
        }
    });
    if let Some(v) = &hit {
        let confirmed = angle_between(a, v)?;
        assert_eq!(
            &confirmed, angle,
            "oracle predicate disagrees with exact angle for {v}"
        );
    }
    Ok(hit)
}

/// Every angle made by `a` with a nonzero vector of the box, with the first
/// such vector in shell order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AngleInventory {
    pub entries: Vec<InventoryEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InventoryEntry {
    pub angle: AngleClass,
    pub witness: IntVec,
}

impl AngleInventory {
    pub fn angles(&self) -> impl Iterator<Item = &AngleClass> {
        self.entries.iter().map(|e| &e.angle)
    }

    pub fn contains(&self, angle: &AngleClass) -> bool {
        self.entries.iter().any(|e| &e.angle == angle)
    }
}

/// Angles between `a` and the nonzero vectors of `[-bound, bound]^n`,
/// sorted by size.
pub fn angle_inventory(a: &IntVec, bound: u64) -> Result<AngleInventory> {
    a.require_nonzero()?;
    small_components(a)?;
    let mut found: BTreeMap<AngleClass, IntVec> = BTreeMap::new();
    let mut err = None;
    for_each_in_box::<()>(a.dim(), bound, |v| {
        let v = IntVec::from_i64s(v);
        match angle_between(a, &v) {
            Ok(angle) => {
                found.entry(angle).or_insert(v);
                ControlFlow::Continue(())
            }
            Err(e) => {
                err = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(AngleInventory {
        entries: found
            .into_iter()
            .map(|(angle, witness)| InventoryEntry { angle, witness })
            .collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The box holds a witness but the angle was predicted absent.
    FoundButExcluded,
    /// The witness search returned a vector at a different angle.
    UnsoundWitness,
    /// The witness search rejected an angle predicted present.
    WitnessRejected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub a: IntVec,
    pub angle: AngleClass,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BudgetMiss {
    pub a: IntVec,
    pub angle: AngleClass,
}

/// Cross-check of predicted membership against exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub dim: usize,
    pub vec_bound: u64,
    pub tan2_height: u64,
    pub box_bound: u64,
    pub bases: usize,
    pub pairs_checked: usize,
    pub predicted_members: usize,
    pub found_by_search: usize,
    pub violations: Vec<Violation>,
    pub budget_exhausted: Vec<BudgetMiss>,
}

impl ConsistencyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.budget_exhausted.is_empty()
    }
}

fn all_bases(dim: usize, vec_bound: u64) -> Vec<Vec<i64>> {
    let b = vec_bound as i64;
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-b..=b).map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x != 0));
    out
}

/// Absolute values sorted descending: one representative per orbit of
/// signed coordinate permutations, which preserve the box and all angles.
fn orbit_key(a: &[i64]) -> Vec<i64> {
    let mut key: Vec<i64> = a.iter().map(|x| x.abs()).collect();
    key.sort_unstable_by(|x, y| y.cmp(x));
    key
}

/// Integer tangents `1..=height`, acute and obtuse, met by `a` inside the
/// box.
fn scan_integer_tangents(a: &[i64], height: u64, bound: u64) -> BTreeSet<(u64, bool)> {
    let a_norm2: i64 = a.iter().map(|x| x * x).sum();
    let limit = height as i64 + 1;
    let total = 2 * height as usize;
    let mut seen = BTreeSet::new();
    for_each_in_box::<()>(a.len(), bound, |v| {
        let d: i64 = a.iter().zip(v).map(|(x, y)| x * y).sum();
        if d == 0 {
            return ControlFlow::Continue(());
        }
        let d2 = d * d;
        let an: i64 = a_norm2 * v.iter().map(|y| y * y).sum::<i64>();
        // tan^2 = an / d^2 - 1 lies in [1, height]
        if an < 2 * d2 || an > limit * d2 || an % d2 != 0 {
            return ControlFlow::Continue(());
        }
        seen.insert(((an / d2 - 1) as u64, d < 0));
        if seen.len() == total {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    seen
}

fn predicted_member(a: &IntVec, angle: &AngleClass) -> Result<bool> {
    if a.dim() != 3 {
        return theta_n_contains(a.dim(), angle);
    }
    let norm2 = crate::exactnum::to_u64(&a.norm2(), "squared norm")?;
    let tan2 = angle.tan2().expect("sampled angles are oblique");
    Ok(hilbert_criterion(norm2, tan2)?.member)
}

struct BaseOutcome {
    pairs: usize,
    members: usize,
    found: usize,
    violations: Vec<Violation>,
    misses: Vec<BudgetMiss>,
}

fn check_base(
    a: &IntVec,
    found: &BTreeSet<(u64, bool)>,
    classes: &[AngleClass],
    budget: SearchBudget,
) -> Result<BaseOutcome> {
    let mut out = BaseOutcome {
        pairs: 0,
        members: 0,
        found: 0,
        violations: vec![],
        misses: vec![],
    };
    for angle in classes {
        let (tan2, obtuse) = angle.require_oblique()?;
        let t = tan2
            .to_integer()
            .try_into()
            .expect("sampled tangents are small");
        let in_box = found.contains(&(t, obtuse));
        let member = predicted_member(a, angle)?;
        out.pairs += 1;
        out.members += usize::from(member);
        out.found += usize::from(in_box);
        let violation = |kind, detail: String| Violation {
            a: a.clone(),
            angle: angle.clone(),
            kind,
            detail,
        };
        if in_box && !member {
            out.violations.push(violation(
                ViolationKind::FoundButExcluded,
                "exhaustive search found a witness".into(),
            ));
            continue;
        }
        if !member {
            continue;
        }
        match witness_for_angle(a, angle, budget) {
            Ok(Some(w)) => match angle_between(a, &w) {
                Ok(got) if &got == angle => {}
                got => out.violations.push(violation(
                    ViolationKind::UnsoundWitness,
                    format!("{w} gives {got:?}"),
                )),
            },
            Ok(None) => out.misses.push(BudgetMiss {
                a: a.clone(),
                angle: angle.clone(),
            }),
            Err(e) => out
                .violations
                .push(violation(ViolationKind::WitnessRejected, e.to_string())),
        }
    }
    Ok(out)
}

/// Checks, for every nonzero `a` with coordinates in `[-vec_bound, vec_bound]`
/// and every integer `tan^2` in `1..=tan2_height` allowed in dimension `dim`
/// (both acute and obtuse):
///
/// * a witness in the box implies predicted membership,
/// * predicted membership yields a verified witness from
///   [`witness_for_angle`] under its default budget.
///
/// Members whose witness search runs out of budget are listed separately.
pub fn consistency_report(
    dim: usize,
    vec_bound: u64,
    tan2_height: u64,
    box_bound: u64,
) -> Result<ConsistencyReport> {
    if dim < 2 {
        return Err(Error::BadDimension {
            got: dim,
            expected: ">= 2",
        });
    }
    if vec_bound == 0 || tan2_height == 0 || box_bound == 0 {
        return Err(Error::InvalidParameter("bounds must be positive".into()));
    }
    if vec_bound > 1000 || box_bound > 10_000 || tan2_height > 1_000_000 {
        return Err(Error::InvalidParameter(
            "bounds too large for exhaustive search".into(),
        ));
    }
    let mut classes = vec![];
    for t in 1..=tan2_height {
        for obtuse in [false, true] {
            let angle = AngleClass::oblique(rat_int(t as i64), obtuse)?;
            if theta_n_contains(dim, &angle)? {
                classes.push(angle);
            }
        }
    }
    let bases = all_bases(dim, vec_bound);
    let keys: BTreeSet<Vec<i64>> = bases.iter().map(|a| orbit_key(a)).collect();
    let keys: Vec<Vec<i64>> = keys.into_iter().collect();
    let scans: BTreeMap<Vec<i64>, BTreeSet<(u64, bool)>> = keys
        .par_iter()
        .map(|k| (k.clone(), scan_integer_tangents(k, tan2_height, box_bound)))
        .collect();
    let budget = SearchBudget::default_for_dim(dim);
    let outcomes: Vec<BaseOutcome> = bases
        .par_iter()
        .map(|a| {
            let found = &scans[&orbit_key(a)];
            check_base(&IntVec::from_i64s(a), found, &classes, budget)
        })
        .collect::<Result<_>>()?;
    let mut report = ConsistencyReport {
        dim,
        vec_bound,
        tan2_height,
        box_bound,
        bases: bases.len(),
        pairs_checked: 0,
        predicted_members: 0,
        found_by_search: 0,
        violations: vec![],
        budget_exhausted: vec![],
    };
    for o in outcomes {
        report.pairs_checked += o.pairs;
        report.predicted_members += o.members;
        report.found_by_search += o.found;
        report.violations.extend(o.violations);
        report.budget_exhausted.extend(o.misses);
    }
    Ok(report)
}
