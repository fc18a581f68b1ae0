//! A slow isomorphism counter for circulants that shares nothing with the
//! library's canonical labeling: classes are found by pairwise backtracking
//! isomorphism tests.
#![allow(dead_code)]

use std::collections::HashMap;

/// Out-neighbourhoods as bitmasks.
pub fn adjacency(n: u64, set: &[u64]) -> Vec<u32> {
    (0..n)
        .map(|u| set.iter().fold(0u32, |acc, s| acc | 1 << ((u + s) % n)))
        .collect()
}

fn has(adj: &[u32], u: usize, v: usize) -> bool {
    adj[u] >> v & 1 == 1
}

/// Both graphs are vertex-transitive, so any isomorphism can be rotated to
/// send 0 to 0.
pub fn isomorphic(a: &[u32], b: &[u32]) -> bool {
    let n = a.len();
    if n != b.len() || a[0].count_ones() != b[0].count_ones() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    extend(a, b, 1, &mut map, &mut used)
}

fn extend(a: &[u32], b: &[u32], v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = a.len();
    if v == n {
        return true;
    }
    for w in 0..n {
        if used[w] {
            continue;
        }
        let consistent =
            (0..v).all(|u| has(a, u, v) == has(b, map[u], w) && has(a, v, u) == has(b, w, map[u]));
        if consistent {
            map[v] = w;
            used[w] = true;
            if extend(a, b, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    map[v] = usize::MAX;
    false
}

/// Traces of the first few adjacency powers, an isomorphism invariant.
fn invariant(adj: &[u32]) -> Vec<i64> {
    let n = adj.len();
    let a: Vec<Vec<i64>> = (0..n)
        .map(|u| (0..n).map(|v| has(adj, u, v) as i64).collect())
        .collect();
    let mut power = a.clone();
    let mut traces = vec![adj[0].count_ones() as i64];
    for _ in 2..=5 {
        power = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| power[i][k] * a[k][j]).sum())
                    .collect()
            })
            .collect();
        traces.push((0..n).map(|i| power[i][i]).sum());
    }
    traces
}

/// Connection sets of order `n` accepted by `keep`, as sorted member lists.
pub fn sets(n: u64, keep: impl Fn(&[u64]) -> bool) -> Vec<Vec<u64>> {
    (0u64..1 << (n - 1))
        .map(|mask| {
            (1..n)
                .filter(|s| mask >> (s - 1) & 1 == 1)
                .collect::<Vec<_>>()
        })
        .filter(|s| keep(s))
        .collect()
}

/// Number of isomorphism classes among the given connection sets.
pub fn count_classes(n: u64, sets: &[Vec<u64>]) -> u64 {
    let mut buckets: HashMap<Vec<i64>, Vec<Vec<u32>>> = HashMap::new();
    let mut classes = 0;
    for s in sets {
        let adj = adjacency(n, s);
        let reps = buckets.entry(invariant(&adj)).or_default();
        if !reps.iter().any(|r| isomorphic(r, &adj)) {
            reps.push(adj);
            classes += 1;
        }
    }
    classes
}

pub fn is_undirected(n: u64, s: &[u64]) -> bool {
    s.iter().all(|x| s.contains(&(n - x)))
}

pub fn is_oriented(n: u64, s: &[u64]) -> bool {
    s.iter().all(|x| !s.contains(&(n - x)))
}
