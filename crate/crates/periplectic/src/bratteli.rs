//! The branching-graph layer: single row/column partitions, removable-box
//! contents, the Pascal-shaped branching graph, and the purely combinatorial
//! spectrum rule for the exterior-power tower.

use crate::analysis::Spectrum;
use crate::linalg::ri;
use crate::{Error, Result};

/// A nonempty partition with a single row or a single column. The one-box
/// partition is canonically a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RCPartition {
    Row(usize),
    Column(usize),
}

impl RCPartition {
    pub fn row(k: usize) -> Self {
        assert!(k >= 1, "partitions are nonempty");
        RCPartition::Row(k)
    }

    pub fn column(k: usize) -> Self {
        assert!(k >= 1, "partitions are nonempty");
        if k == 1 {
            RCPartition::Row(1)
        } else {
            RCPartition::Column(k)
        }
    }

    pub fn size(&self) -> usize {
        match *self {
            RCPartition::Row(k) | RCPartition::Column(k) => k,
        }
    }

    /// Content of the unique removable box: `k-1` for a row, `1-k` for a column.
    pub fn content_removable(&self) -> i64 {
        match *self {
            RCPartition::Row(k) => k as i64 - 1,
            RCPartition::Column(k) => 1 - k as i64,
        }
    }

    /// Partition label: `(k)` or `(1^k)`.
    pub fn label(&self) -> String {
        match *self {
            RCPartition::Row(k) => format!("({k})"),
            RCPartition::Column(k) => format!("(1^{k})"),
        }
    }

    /// All single-row/column partitions reachable by adding or removing one
    /// box (staying nonempty).
    pub fn box_neighbors(&self) -> Vec<RCPartition> {
        let mut out = Vec::new();
        match *self {
            RCPartition::Row(k) => {
                out.push(RCPartition::row(k + 1));
                if k == 1 {
                    out.push(RCPartition::column(2));
                }
                if k >= 2 {
                    out.push(RCPartition::row(k - 1));
                }
            }
            RCPartition::Column(k) => {
                out.push(RCPartition::column(k + 1));
                out.push(RCPartition::column(k - 1));
            }
        }
        out
    }
}

/// Free-function form of [`RCPartition::content_removable`].
pub fn content_removable(p: &RCPartition) -> i64 {
    p.content_removable()
}

/// The level-`n` vertices, left to right: `(n), (n-2), ..., (1^{n-2}), (1^n)`;
/// the vertex at index `k` labels the degree-`k` exterior module.
pub fn rc_partitions(n: usize) -> Result<Vec<RCPartition>> {
    if n < 1 {
        return Err(Error::InvalidParameter("level must be >= 1".into()));
    }
    Ok((0..n).map(|k| vertex_partition(n, k)).collect())
}

/// The index-`k` vertex at level `n`.
pub fn vertex_partition(n: usize, k: usize) -> RCPartition {
    debug_assert!(k < n);
    if n > 2 * k {
        RCPartition::row(n - 2 * k)
    } else {
        RCPartition::column(2 * k + 2 - n)
    }
}

/// Leveled branching graph; `levels[l]` holds level `l+1`, and each edge
/// `(level, from, to)` points downward from `level` to `level + 1`.
#[derive(Clone, Debug)]
pub struct BratteliGraph {
    levels: Vec<Vec<RCPartition>>,
    edges: Vec<(usize, usize, usize)>,
}

impl BratteliGraph {
    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, n: usize) -> &[RCPartition] {
        &self.levels[n - 1]
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn partition_labels(&self, n: usize) -> Vec<String> {
        self.level(n).iter().map(RCPartition::label).collect()
    }

    pub fn content_labels(&self, n: usize) -> Vec<i64> {
        self.level(n)
            .iter()
            .map(RCPartition::content_removable)
            .collect()
    }

    /// Path counts from the level-1 source to each vertex of level `n`.
    pub fn dimension_labels(&self, n: usize) -> Vec<u128> {
        let mut counts: Vec<u128> = vec![1];
        for level in 1..n {
            let next_len = self.levels[level].len();
            let mut next = vec![0u128; next_len];
            for &(l, from, to) in &self.edges {
                if l == level {
                    next[to] += counts[from];
                }
            }
            counts = next;
        }
        counts
    }

    pub fn path_count(&self, n: usize, k: usize) -> u128 {
        self.dimension_labels(n)[k]
    }
}

/// Builds the branching graph down to the given level. Vertices at level `n`
/// are `rc_partitions(n)`; edges add or remove a single box.
pub fn bratteli(levels: usize) -> Result<BratteliGraph> {
    if levels < 1 {
        return Err(Error::InvalidParameter("level count must be >= 1".into()));
    }
    let level_sets: Vec<Vec<RCPartition>> =
        (1..=levels).map(rc_partitions).collect::<Result<_>>()?;
    let mut edges = Vec::new();
    for n in 1..levels {
        let cur = &level_sets[n - 1];
        let next = &level_sets[n];
        for (from, p) in cur.iter().enumerate() {
            for q in p.box_neighbors() {
                if let Some(to) = next.iter().position(|v| *v == q) {
                    edges.push((n, from, to));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(BratteliGraph {
        levels: level_sets,
        edges,
    })
}

fn validate_degree(n: usize, k: usize) -> Result<()> {
    if n < 1 || k > n.saturating_sub(1) {
        return Err(Error::InvalidParameter(format!(
            "degree {k} out of range 0..={} at level {n}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// All integer tuples `(a_1, ..., a_n)` with `a_1 = 0`, unit steps, and
/// `a_n` equal to the removable-box content of the level-`n` vertex `k`;
/// equivalently the content sequences of source-to-vertex paths.
pub fn spectrum_from_paths(n: usize, k: usize) -> Result<Spectrum> {
    validate_degree(n, k)?;
    let target = vertex_partition(n, k).content_removable();
    let mut tuples: Vec<Vec<i64>> = Vec::new();
    let mut prefix = vec![0i64];
    walk(&mut prefix, n, target, &mut tuples);
    tuples.sort();
    let entries = tuples
        .into_iter()
        .enumerate()
        .map(|(idx, t)| (idx, t.into_iter().map(ri).collect()))
        .collect();
    Ok(Spectrum::new(n, entries))
}

fn walk(prefix: &mut Vec<i64>, n: usize, target: i64, out: &mut Vec<Vec<i64>>) {
    let cur = *prefix.last().unwrap();
    let remaining = (n - prefix.len()) as i64;
    if (target - cur).abs() > remaining || (target - cur - remaining) % 2 != 0 {
        return;
    }
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for step in [1, -1] {
        prefix.push(cur + step);
        walk(prefix, n, target, out);
        prefix.pop();
    }
}

/// The canonical generation of the same tuple set: start from the path taking
/// `n-1-k` unit increases then `k` unit decreases, and repeatedly subtract 2
/// from interior entries while the unit-step property survives. Returns the
/// tuples in discovery order (seed first).
pub fn canonical_path_generation(n: usize, k: usize) -> Result<Vec<Vec<i64>>> {
    validate_degree(n, k)?;
    let mut seed = Vec::with_capacity(n);
    for i in 0..(n - k) {
        seed.push(i as i64);
    }
    for i in 1..=k {
        seed.push((n - 1 - k) as i64 - i as i64);
    }
    debug_assert_eq!(seed.len(), n);
    let mut seen = std::collections::BTreeSet::new();
    let mut order = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(seed.clone());
    order.push(seed.clone());
    queue.push_back(seed);
    while let Some(t) = queue.pop_front() {
        // Scan right to left; endpoints are pinned.
        for p in (1..n - 1).rev() {
            let mut u = t.clone();
            u[p] -= 2;
            if (u[p] - u[p - 1]).abs() == 1 && (u[p + 1] - u[p]).abs() == 1 && !seen.contains(&u) {
                seen.insert(u.clone());
                order.push(u.clone());
                queue.push_back(u);
            }
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc
    }

    #[test]
    fn rc_partition_lists() {
        assert_eq!(rc_partitions(1).unwrap(), vec![RCPartition::Row(1)]);
        assert_eq!(
            rc_partitions(4).unwrap(),
            vec![
                RCPartition::Row(4),
                RCPartition::Row(2),
                RCPartition::Column(2),
                RCPartition::Column(4)
            ]
        );
        assert_eq!(rc_partitions(6).unwrap().len(), 6);
        assert!(rc_partitions(0).is_err());
    }

    #[test]
    fn partition_labels_and_contents() {
        assert_eq!(RCPartition::row(1).content_removable(), 0);
        assert_eq!(RCPartition::row(10).content_removable(), 9);
        assert_eq!(RCPartition::column(3).content_removable(), -2);
        assert_eq!(RCPartition::row(4).label(), "(4)");
        assert_eq!(RCPartition::column(4).label(), "(1^4)");
        assert_eq!(RCPartition::column(1), RCPartition::Row(1));
    }

    #[test]
    fn pascal_dimension_rows() {
        let g = bratteli(6).unwrap();
        assert_eq!(g.dimension_labels(1), vec![1]);
        assert_eq!(g.dimension_labels(2), vec![1, 1]);
        assert_eq!(g.dimension_labels(3), vec![1, 2, 1]);
        assert_eq!(g.dimension_labels(4), vec![1, 3, 3, 1]);
        assert_eq!(g.dimension_labels(5), vec![1, 4, 6, 4, 1]);
        assert_eq!(g.dimension_labels(6), vec![1, 5, 10, 10, 5, 1]);
    }

    #[test]
    fn content_rows_through_level_six() {
        let g = bratteli(6).unwrap();
        assert_eq!(g.content_labels(1), vec![0]);
        assert_eq!(g.content_labels(2), vec![1, -1]);
        assert_eq!(g.content_labels(3), vec![2, 0, -2]);
        assert_eq!(g.content_labels(4), vec![3, 1, -1, -3]);
        assert_eq!(g.content_labels(5), vec![4, 2, 0, -2, -4]);
        assert_eq!(g.content_labels(6), vec![5, 3, 1, -1, -3, -5]);
    }

    #[test]
    fn edges_match_pascal_adjacency() {
        // Brute-force comparison: vertex k at level n connects exactly to
        // vertices k and k+1 at level n+1.
        let levels = 9;
        let g = bratteli(levels).unwrap();
        for n in 1..levels {
            let mut expect = Vec::new();
            for k in 0..n {
                expect.push((n, k, k));
                expect.push((n, k, k + 1));
            }
            expect.sort_unstable();
            let got: Vec<(usize, usize, usize)> = g
                .edges()
                .iter()
                .copied()
                .filter(|&(l, _, _)| l == n)
                .collect();
            assert_eq!(
                got,
                expect,
                "edge mismatch between levels {n} and {}",
                n + 1
            );
        }
        // Level 1 has out-degree 2.
        assert_eq!(g.edges().iter().filter(|&&(l, _, _)| l == 1).count(), 2);
    }

    #[test]
    fn path_counts_are_binomials() {
        let g = bratteli(12).unwrap();
        for n in 1..=12 {
            for k in 0..n {
                assert_eq!(g.path_count(n, k), binom(n - 1, k));
            }
        }
    }

    #[test]
    fn spectrum_from_paths_counts_and_shape() {
        for n in 1..=9usize {
            for k in 0..n {
                let sp = spectrum_from_paths(n, k).unwrap();
                assert_eq!(sp.len() as u128, binom(n - 1, k), "count at n={n}, k={k}");
                for (_, t) in sp.entries() {
                    assert_eq!(t[0], ri(0));
                    for w in t.windows(2) {
                        let d = &w[1] - &w[0];
                        assert!(d == ri(1) || d == ri(-1));
                    }
                }
            }
        }
    }

    #[test]
    fn spectrum_small_examples() {
        let sp = spectrum_from_paths(3, 1).unwrap();
        let got = sp.sorted_tuples();
        assert_eq!(
            got,
            vec![vec![ri(0), ri(-1), ri(0)], vec![ri(0), ri(1), ri(0)]]
        );
        let sp = spectrum_from_paths(5, 0).unwrap();
        assert_eq!(
            sp.sorted_tuples(),
            vec![vec![ri(0), ri(1), ri(2), ri(3), ri(4)]]
        );
        assert!(spectrum_from_paths(5, 5).is_err());
    }

    #[test]
    fn reflection_symmetry() {
        for n in 2..=9usize {
            for k in 0..n {
                let a = spectrum_from_paths(n, k).unwrap();
                let b = spectrum_from_paths(n, n - 1 - k).unwrap();
                let negated: std::collections::BTreeSet<Vec<crate::linalg::Rational>> = a
                    .tuple_set()
                    .into_iter()
                    .map(|t| t.into_iter().map(|x| -x).collect())
                    .collect();
                assert_eq!(negated, b.tuple_set());
            }
        }
    }

    #[test]
    fn canonical_generation_matches_path_enumeration() {
        for n in 1..=9usize {
            for k in 0..n {
                let canon = canonical_path_generation(n, k).unwrap();
                let via_paths = spectrum_from_paths(n, k).unwrap();
                let canon_set: std::collections::BTreeSet<Vec<crate::linalg::Rational>> = canon
                    .iter()
                    .map(|t| t.iter().map(|&x| ri(x)).collect())
                    .collect();
                assert_eq!(canon_set, via_paths.tuple_set(), "mismatch at n={n}, k={k}");
            }
        }
    }

    #[test]
    fn canonical_seed_vectors() {
        let canon = canonical_path_generation(12, 1).unwrap();
        assert_eq!(canon[0], vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 9]);
        let canon = canonical_path_generation(4, 3).unwrap();
        assert_eq!(canon, vec![vec![0, -1, -2, -3]]);
    }
}
