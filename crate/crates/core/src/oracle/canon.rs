//! Individualization-refinement canonical labeling for digraphs on at most
//! 64 vertices.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, branch on the first smallest non-singleton cell, and take
//! the lexicographically least relabeled adjacency matrix over all leaves.
//! Subtrees are skipped when a known automorphism fixing the current prefix
//! maps them onto an explored sibling, and a leaf that reproduces the first
//! or best certificate aborts back to its common ancestor with that leaf.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// A digraph on vertices `0..n` stored as out- and in-neighbour bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    /// Panics if `n > 64`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "digraphs are limited to 64 vertices");
        Digraph {
            out: vec![0; n],
            inn: vec![0; n],
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in arcs {
            g.add_arc(u, v);
        }
        g
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| bits(self.out[u]).map(move |v| (u, v)))
    }

    /// The digraph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        Self::from_arcs(self.order(), self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Complement within the loopless complete digraph.
    pub fn complement(&self) -> Self {
        let n = self.order();
        let all = full_mask(n);
        let mut g = Self::empty(n);
        for u in 0..n {
            g.out[u] = all & !self.out[u] & !(1 << u);
            g.inn[u] = all & !self.inn[u] & !(1 << u);
        }
        g
    }

    /// Whether `perm` maps every arc onto an arc.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(perm[u], perm[v]))
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form_with(self, &[])
    }
}

/// Certificate of a digraph: equal for two digraphs iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub order: usize,
    pub certificate: Vec<u8>,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

/// Splits cells by their arc counts into every cell until nothing changes.
/// Subcells are ordered by signature, so the result does not depend on
/// vertex names.
fn refine(g: &Digraph, mut cells: Vec<u64>) -> Vec<u64> {
    loop {
        let mut next = Vec::with_capacity(g.order());
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: BTreeMap<Vec<(u32, u32)>, u64> = BTreeMap::new();
            for v in bits(cell) {
                let sig = cells
                    .iter()
                    .map(|&w| ((g.out[v] & w).count_ones(), (g.inn[v] & w).count_ones()))
                    .collect();
                *groups.entry(sig).or_default() |= 1 << v;
            }
            next.extend(groups.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Leaf {
    cert: Vec<u64>,
    /// `lab[v]` is the position of vertex `v`.
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Digraph,
    generators: Vec<Vec<usize>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn dfs(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        if cells.len() == self.g.order() {
            return self.leaf(&cells, path);
        }
        let level = path.len();
        let target = (0..cells.len())
            .filter(|&i| cells[i].count_ones() > 1)
            .min_by_key(|&i| (cells[i].count_ones(), i))
            .expect("partition is not discrete");
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cells[target]) {
            if !explored.is_empty() {
                let orbit = self.orbits_fixing(path);
                if explored.iter().any(|&e| orbit[e] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cells[target] & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            let jump = self.dfs(child, path);
            path.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut lab = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            lab[v] = pos;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&u| bits(self.g.out[u]).fold(0u64, |row, w| row | 1 << lab[w]))
            .collect();
        let leaf = Leaf {
            cert,
            lab,
            path: path.to_vec(),
        };
        let (Some(first), Some(best)) = (&self.first, &self.best) else {
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        let matched = [first, best]
            .into_iter()
            .find(|known| known.cert == leaf.cert);
        if let Some(known) = matched {
            // lab_known^-1 . lab_leaf maps arcs onto arcs.
            let mut inv = vec![0; n];
            for (v, &p) in known.lab.iter().enumerate() {
                inv[p] = v;
            }
            let gamma: Vec<usize> = leaf.lab.iter().map(|&p| inv[p]).collect();
            let level = common_prefix(&known.path, &leaf.path);
            self.generators.push(gamma);
            return Some(level);
        }
        if leaf.cert < best.cert {
            self.best = Some(leaf);
        }
        None
    }

    /// Orbit labels of the group generated by the known automorphisms that
    /// fix every vertex of `prefix`.
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.generators {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

/// Canonical form of `g`, with `known` automorphisms of `g` used only to
/// prune the search. Passing non-automorphisms gives wrong answers.
pub(crate) fn canonical_form_with(g: &Digraph, known: &[Vec<usize>]) -> CanonicalForm {
    let n = g.order();
    debug_assert!(known.iter().all(|p| g.is_automorphism(p)));
    let mut search = Search {
        g,
        generators: known.to_vec(),
        first: None,
        best: None,
    };
    let start = if n == 0 { vec![] } else { vec![full_mask(n)] };
    search.dfs(start, &mut Vec::new());
    let cert = search.best.map(|b| b.cert).unwrap_or_default();
    let row_bytes = n.div_ceil(8);
    let certificate = cert
        .iter()
        .flat_map(|row| row.to_le_bytes().into_iter().take(row_bytes))
        .collect();
    CanonicalForm {
        order: n,
        certificate,
    }
}
