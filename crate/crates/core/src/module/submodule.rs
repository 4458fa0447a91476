use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::module::GammaModule;
use crate::subset::{self, Subset};
use crate::Options;

/// Least subset containing `seed ∪ {0}` closed under addition and the action.
pub fn submodule_closure(m: &GammaModule, seed: &[usize]) -> Subset {
    let mut mask = vec![false; m.size()];
    let mut members: Vec<usize> = Vec::new();
    let mut stack = vec![m.zero()];
    stack.extend_from_slice(seed);
    let contexts: Vec<_> = m.contexts().collect();
    while let Some(x) = stack.pop() {
        if mask[x] {
            continue;
        }
        mask[x] = true;
        members.push(x);
        for &y in &members {
            let z = m.add(x, y);
            if !mask[z] {
                stack.push(z);
            }
        }
        for &(a, al, be, b) in &contexts {
            let z = m.act(a, al, x, be, b);
            if !mask[z] {
                stack.push(z);
            }
        }
    }
    subset::from_mask(&mask)
}

pub fn is_submodule(m: &GammaModule, members: &[usize]) -> bool {
    let mask = subset::to_mask(members, m.size());
    mask[m.zero()]
        && members.iter().all(|&x| {
            members.iter().all(|&y| mask[m.add(x, y)])
                && m.contexts().all(|(a, al, be, b)| mask[m.act(a, al, x, be, b)])
        })
}

/// All submodules, ascending by cardinality then lexicographically.
pub fn enumerate_submodules(m: &GammaModule, opts: &Options) -> Result<Vec<Subset>> {
    let k = m.size();
    if k > opts.budget.max_enumeration {
        return Err(Error::Budget {
            what: "submodule enumeration carrier",
            size: k,
            limit: opts.budget.max_enumeration,
        });
    }
    let start = submodule_closure(m, &[]);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = vec![start];
    while let Some(current) = queue.pop() {
        for x in 0..k {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = current.clone();
            seed.push(x);
            let next = submodule_closure(m, &seed);
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    subset::sort_canonical(&mut out);
    Ok(out)
}

/// Simple: more than one element, and every submodule is `{0}` or the whole module.
///
/// A module whose zero alone is not closed (possible only when the action
/// fails its zero laws) can still be simple: its single submodule is `M`.
pub fn is_simple(m: &GammaModule, opts: &Options) -> Result<bool> {
    if m.size() <= 1 {
        return Ok(false);
    }
    let subs = enumerate_submodules(m, opts)?;
    Ok(subs
        .iter()
        .all(|s| s.len() == m.size() || s.as_slice() == [m.zero()]))
}

/// Greedy generating set: repeatedly adjoin the element whose closure adds
/// the most new elements (ties broken by index) until everything is covered.
pub fn generating_set(m: &GammaModule) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = submodule_closure(m, &[]);
    while span.len() < m.size() {
        let mut best: Option<(usize, Subset)> = None;
        for x in 0..m.size() {
            if span.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = gens.clone();
            seed.push(x);
            let next = submodule_closure(m, &seed);
            if best.as_ref().is_none_or(|(_, b)| next.len() > b.len()) {
                best = Some((x, next));
            }
        }
        let (x, next) = best.expect("an uncovered element exists");
        gens.push(x);
        span = next;
    }
    gens
}
