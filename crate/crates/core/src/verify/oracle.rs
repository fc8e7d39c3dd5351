//! Exhaustive count of internally vertex-disjoint paths, independent of the
//! flow reduction. Exponential; small graphs only.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_ORDER: usize = 10;
pub const ORACLE_MAX_PATHS: usize = 1_000_000;

/// Largest family of simple `s - t` paths that pairwise share no interior
/// vertex. Enumerates every simple path, keeps the inclusion-minimal
/// nonempty interior vertex sets (a path whose interior contains another's
/// can always be swapped for it), then packs them by memoized backtracking.
pub fn oracle_disjoint_paths(g: &Graph, s: usize, t: usize) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::ScaleGuard(format!(
            "oracle limited to {ORACLE_MAX_ORDER} vertices, graph has {n}"
        )));
    }
    if s >= n || t >= n || s == t {
        return Err(Error::param(format!("invalid terminal pair ({s}, {t}) for n = {n}")));
    }

    let mut interiors = Vec::new();
    let mut count = 0usize;
    let mut stack = vec![(s, 1u32 << s, 0usize)];
    // depth-first over simple paths; each frame is (vertex, visited, next neighbor)
    while let Some((v, visited, next)) = stack.pop() {
        let Some(&w) = g.neighbors(v).get(next) else {
            continue;
        };
        stack.push((v, visited, next + 1));
        if visited & (1 << w) != 0 {
            continue;
        }
        if w == t {
            count += 1;
            if count > ORACLE_MAX_PATHS {
                return Err(Error::ScaleGuard(format!(
                    "more than {ORACLE_MAX_PATHS} simple paths between {s} and {t}"
                )));
            }
            interiors.push(visited & !(1 << s));
        } else {
            stack.push((w, visited | (1 << w), 0));
        }
    }

    // the direct edge has an empty interior and combines with anything
    let direct = usize::from(interiors.contains(&0));
    interiors.retain(|&m| m != 0);
    interiors.sort_unstable_by_key(|m: &u32| (m.count_ones(), *m));
    interiors.dedup();
    let mut minimal: Vec<u32> = Vec::new();
    for m in interiors {
        if !minimal.iter().any(|&kept| kept & !m == 0) {
            minimal.push(m);
        }
    }

    let mut memo = HashMap::new();
    Ok(direct + pack(&minimal, 0, 0, &mut memo))
}

/// Most paths from `paths[from..]` with interiors disjoint from `used` and
/// from each other.
fn pack(paths: &[u32], from: usize, used: u32, memo: &mut HashMap<(usize, u32), usize>) -> usize {
    if from == paths.len() {
        return 0;
    }
    if let Some(&known) = memo.get(&(from, used)) {
        return known;
    }
    let skip = pack(paths, from + 1, used, memo);
    let take = if paths[from] & used == 0 {
        1 + pack(paths, from + 1, used | paths[from], memo)
    } else {
        0
    };
    let best = skip.max(take);
    memo.insert((from, used), best);
    best
}
