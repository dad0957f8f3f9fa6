//! Normal-graph representation of codes, ensemble sampling, and alist I/O.
//!
//! A graph built from a parity-check matrix H has one = node per column
//! and one + node per row and represents a syndrome former. Dualizing
//! swaps the node types and re-labels the graph as an encoder for the
//! dual code; it is a relabeling, the edge set never changes.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::gf2::SparseBinaryMatrix;

/// Which side of the graph carries external symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphRole {
    /// Built from H: external symbols sit on = nodes, + nodes are checks.
    SyndromeFormer,
    /// Dualized: internal message variables drive external sums.
    Encoder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeGraph {
    var_adj: Vec<Vec<u32>>,
    check_adj: Vec<Vec<u32>>,
    role: GraphRole,
}

impl CodeGraph {
    /// One = node per column of H, one + node per row, an edge per entry.
    pub fn from_parity_check(h: &SparseBinaryMatrix) -> CodeGraph {
        let check_adj: Vec<Vec<u32>> = (0..h.rows()).map(|r| h.row(r).to_vec()).collect();
        CodeGraph {
            var_adj: h.column_supports(),
            check_adj,
            role: GraphRole::SyndromeFormer,
        }
    }

    /// Swaps + and = nodes; an involution on the edge set.
    pub fn dual_graph(&self) -> CodeGraph {
        CodeGraph {
            var_adj: self.check_adj.clone(),
            check_adj: self.var_adj.clone(),
            role: match self.role {
                GraphRole::SyndromeFormer => GraphRole::Encoder,
                GraphRole::Encoder => GraphRole::SyndromeFormer,
            },
        }
    }

    pub fn n_vars(&self) -> usize {
        self.var_adj.len()
    }

    pub fn n_checks(&self) -> usize {
        self.check_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.var_adj.iter().map(Vec::len).sum()
    }

    pub fn role(&self) -> GraphRole {
        self.role
    }

    /// Checks incident to variable `v`, sorted.
    pub fn var_neighbors(&self, v: usize) -> &[u32] {
        &self.var_adj[v]
    }

    /// Variables incident to check `c`, sorted.
    pub fn check_neighbors(&self, c: usize) -> &[u32] {
        &self.check_adj[c]
    }

    /// The biadjacency with one row per check and one column per variable.
    pub fn biadjacency(&self) -> SparseBinaryMatrix {
        let entries: Vec<(usize, usize)> = self
            .check_adj
            .iter()
            .enumerate()
            .flat_map(|(c, vars)| vars.iter().map(move |&v| (c, v as usize)))
            .collect();
        SparseBinaryMatrix::from_entries(self.n_checks(), self.n_vars(), &entries)
            .expect("adjacency entries are in bounds")
    }

    /// Maximum degree over all nodes of both types; 0 for an empty graph.
    pub fn max_degree(&self) -> usize {
        self.var_adj
            .iter()
            .chain(self.check_adj.iter())
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }

    /// Sorted (degree, count) pairs over the + nodes.
    pub fn check_degree_profile(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for adj in &self.check_adj {
            *counts.entry(adj.len()).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }
}

/// How many colliding socket pairs an ensemble draw discarded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SampleStats {
    /// Each discarded pair removes two parallel edges between one
    /// (variable, check) pair, lowering both degrees by two.
    pub removed_edge_pairs: usize,
}

/// Node-perspective degree fractions for both sides of the graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeDistribution {
    /// (degree, fraction of variable nodes) pairs.
    pub var: Vec<(usize, f64)>,
    /// (degree, fraction of check nodes) pairs.
    pub check: Vec<(usize, f64)>,
}

impl DegreeDistribution {
    pub fn regular(dv: usize, dc: usize) -> DegreeDistribution {
        DegreeDistribution {
            var: vec![(dv, 1.0)],
            check: vec![(dc, 1.0)],
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        for (name, side) in [("variable", &self.var), ("check", &self.check)] {
            if side.is_empty() {
                return Err(Error::InfeasibleDistribution(format!(
                    "{name} side has no degrees"
                )));
            }
            let mut total = 0.0;
            for &(d, f) in side {
                if !f.is_finite() || f < 0.0 {
                    return Err(Error::InfeasibleDistribution(format!(
                        "bad fraction {f} for {name} degree {d}"
                    )));
                }
                if d == 0 && f > 0.0 {
                    return Err(Error::InfeasibleDistribution(format!(
                        "{name} degree 0 has positive fraction"
                    )));
                }
                total += f;
            }
            if (total - 1.0).abs() > 1e-9 {
                return Err(Error::InfeasibleDistribution(format!(
                    "{name} fractions sum to {total}, want 1"
                )));
            }
        }
        Ok(())
    }

    /// Integer node counts per degree using largest-remainder rounding.
    fn node_counts(side: &[(usize, f64)], total: usize) -> Vec<(usize, usize)> {
        let mut counts: Vec<(usize, usize, f64)> = side
            .iter()
            .map(|&(d, f)| {
                let exact = f * total as f64;
                (d, exact.floor() as usize, exact - exact.floor())
            })
            .collect();
        let assigned: usize = counts.iter().map(|&(_, c, _)| c).sum();
        let mut remainder = total - assigned;
        // Hand leftovers to the largest fractional parts, ties by degree.
        let mut order: Vec<usize> = (0..counts.len()).collect();
        order.sort_by(|&a, &b| {
            counts[b]
                .2
                .partial_cmp(&counts[a].2)
                .unwrap()
                .then(counts[a].0.cmp(&counts[b].0))
        });
        for idx in order {
            if remainder == 0 {
                break;
            }
            counts[idx].1 += 1;
            remainder -= 1;
        }
        counts.into_iter().map(|(d, c, _)| (d, c)).collect()
    }
}

/// Gallager-style regular ensemble via a random socket permutation.
///
/// Returns an (n·dv/dc) x n matrix. Colliding sockets that would create
/// parallel edges cancel in pairs, so column degrees are ≤ dv and row
/// degrees ≤ dc; the shortfall is reported by the `_detailed` variant.
pub fn sample_regular_ldpc(
    n: usize,
    dv: usize,
    dc: usize,
    seed: u64,
) -> Result<SparseBinaryMatrix, Error> {
    sample_regular_ldpc_detailed(n, dv, dc, seed).map(|(m, _)| m)
}

pub fn sample_regular_ldpc_detailed(
    n: usize,
    dv: usize,
    dc: usize,
    seed: u64,
) -> Result<(SparseBinaryMatrix, SampleStats), Error> {
    if dv < 1 || dc < 2 {
        return Err(Error::InvalidParameter(format!(
            "need dv >= 1 and dc >= 2, got dv={dv} dc={dc}"
        )));
    }
    if n == 0 || (n * dv) % dc != 0 {
        return Err(Error::InvalidParameter(format!(
            "n*dv = {} not divisible by dc = {dc}",
            n * dv
        )));
    }
    let var_degrees = vec![dv; n];
    let check_degrees = vec![dc; (n * dv) / dc];
    Ok(sample_from_degrees(&var_degrees, &check_degrees, seed))
}

/// Samples a matrix whose empirical degree fractions match `dist`
/// within the rounding of one node per degree.
pub fn sample_irregular(
    n: usize,
    dist: &DegreeDistribution,
    seed: u64,
) -> Result<SparseBinaryMatrix, Error> {
    sample_irregular_detailed(n, dist, seed).map(|(m, _)| m)
}

pub fn sample_irregular_detailed(
    n: usize,
    dist: &DegreeDistribution,
    seed: u64,
) -> Result<(SparseBinaryMatrix, SampleStats), Error> {
    dist.validate()?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let var_counts = DegreeDistribution::node_counts(&dist.var, n);
    let sockets: usize = var_counts.iter().map(|&(d, c)| d * c).sum();
    if sockets == 0 {
        return Err(Error::InfeasibleDistribution(
            "variable side implies zero edges".into(),
        ));
    }
    let avg_check: f64 = dist.check.iter().map(|&(d, f)| d as f64 * f).sum();
    // Search nearby check counts for one whose rounded degree counts
    // absorb every socket exactly.
    let base = (sockets as f64 / avg_check).round() as i64;
    let mut chosen = None;
    for delta in 0..=2i64 {
        for m in [base - delta, base + delta] {
            if m < 1 {
                continue;
            }
            let counts = DegreeDistribution::node_counts(&dist.check, m as usize);
            let total: usize = counts.iter().map(|&(d, c)| d * c).sum();
            if total == sockets {
                chosen = Some(counts);
                break;
            }
        }
        if chosen.is_some() {
            break;
        }
    }
    let Some(check_counts) = chosen else {
        return Err(Error::InfeasibleDistribution(format!(
            "check side cannot absorb {sockets} sockets at n = {n}"
        )));
    };

    let mut var_degrees = Vec::with_capacity(n);
    for &(d, c) in &var_counts {
        var_degrees.extend(std::iter::repeat_n(d, c));
    }
    let mut check_degrees = Vec::new();
    for &(d, c) in &check_counts {
        check_degrees.extend(std::iter::repeat_n(d, c));
    }
    Ok(sample_from_degrees(&var_degrees, &check_degrees, seed))
}

fn sample_from_degrees(
    var_degrees: &[usize],
    check_degrees: &[usize],
    seed: u64,
) -> (SparseBinaryMatrix, SampleStats) {
    let n = var_degrees.len();
    let m = check_degrees.len();
    let sockets: usize = var_degrees.iter().sum();
    debug_assert_eq!(sockets, check_degrees.iter().sum::<usize>());

    let mut check_sockets: Vec<u32> = Vec::with_capacity(sockets);
    for (c, &d) in check_degrees.iter().enumerate() {
        check_sockets.extend(std::iter::repeat_n(c as u32, d));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    check_sockets.shuffle(&mut rng);

    // Pair variable sockets with shuffled check sockets; edges with even
    // multiplicity cancel over GF(2), removing colliding pairs.
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(sockets);
    let mut s = 0;
    for (v, &d) in var_degrees.iter().enumerate() {
        for _ in 0..d {
            pairs.push((v as u32, check_sockets[s]));
            s += 1;
        }
    }
    pairs.sort_unstable();
    let mut entries = Vec::with_capacity(sockets);
    let mut removed_pairs = 0;
    let mut i = 0;
    while i < pairs.len() {
        let mut j = i;
        while j < pairs.len() && pairs[j] == pairs[i] {
            j += 1;
        }
        let multiplicity = j - i;
        if multiplicity % 2 == 1 {
            entries.push((pairs[i].0 as usize, pairs[i].1 as usize));
        }
        removed_pairs += multiplicity / 2;
        i = j;
    }
    // Matrix rows are checks, columns are variables.
    let entries: Vec<(usize, usize)> = entries.into_iter().map(|(v, c)| (c, v)).collect();
    let matrix = SparseBinaryMatrix::from_entries(m, n, &entries)
        .expect("sampled entries are in bounds");
    (
        matrix,
        SampleStats {
            removed_edge_pairs: removed_pairs,
        },
    )
}

/// Serializes a parity-check matrix in alist format.
///
/// Layout: "n m", "max_col_degree max_row_degree", the n column degrees,
/// the m row degrees, then n lines of 1-indexed row positions per column
/// and m lines of 1-indexed column positions per row, each line padded
/// with zeros to the side's maximum degree. Single spaces, every line
/// newline-terminated.
pub fn format_alist(h: &SparseBinaryMatrix) -> String {
    let n = h.cols();
    let m = h.rows();
    let col_supports = h.column_supports();
    let col_deg: Vec<usize> = col_supports.iter().map(Vec::len).collect();
    let row_deg = h.row_degrees();
    let max_col = col_deg.iter().copied().max().unwrap_or(0);
    let max_row = row_deg.iter().copied().max().unwrap_or(0);

    let mut out = String::new();
    out.push_str(&format!("{n} {m}\n"));
    out.push_str(&format!("{max_col} {max_row}\n"));
    out.push_str(&join_counts(&col_deg));
    out.push_str(&join_counts(&row_deg));
    for support in &col_supports {
        out.push_str(&join_padded(support, max_col));
    }
    for r in 0..m {
        out.push_str(&join_padded(h.row(r), max_row));
    }
    out
}

fn join_counts(values: &[usize]) -> String {
    let mut line = values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    line.push('\n');
    line
}

fn join_padded(support: &[u32], width: usize) -> String {
    let mut fields: Vec<String> = support.iter().map(|&i| (i + 1).to_string()).collect();
    fields.resize(width.max(fields.len()), "0".to_string());
    let mut line = fields.join(" ");
    line.push('\n');
    line
}

/// Parses an alist document into a parity-check matrix.
pub fn parse_alist(text: &str) -> Result<SparseBinaryMatrix, Error> {
    let mut numbers = text.split_whitespace().map(|tok| {
        tok.parse::<usize>()
            .map_err(|_| Error::AlistParse(format!("non-numeric token '{tok}'")))
    });
    let mut next = |what: &str| {
        numbers
            .next()
            .unwrap_or_else(|| Err(Error::AlistParse(format!("missing {what}"))))
    };

    let n = next("column count")?;
    let m = next("row count")?;
    let max_col = next("max column degree")?;
    let max_row = next("max row degree")?;
    let col_deg: Vec<usize> = (0..n)
        .map(|_| next("column degree"))
        .collect::<Result<_, _>>()?;
    let row_deg: Vec<usize> = (0..m)
        .map(|_| next("row degree"))
        .collect::<Result<_, _>>()?;
    if col_deg.iter().any(|&d| d > max_col) || row_deg.iter().any(|&d| d > max_row) {
        return Err(Error::AlistParse("degree exceeds declared maximum".into()));
    }

    let mut entries = Vec::new();
    for (c, &deg) in col_deg.iter().enumerate() {
        for k in 0..max_col {
            let v = next("column entry")?;
            if k < deg {
                if v == 0 || v > m {
                    return Err(Error::AlistParse(format!(
                        "column {c} entry {v} out of range 1..={m}"
                    )));
                }
                entries.push((v - 1, c));
            } else if v != 0 {
                return Err(Error::AlistParse(format!(
                    "column {c} padding must be zero, got {v}"
                )));
            }
        }
    }
    // Row lists are redundant with the column lists; read and cross-check.
    let mut row_entries = Vec::new();
    for (r, &deg) in row_deg.iter().enumerate() {
        for k in 0..max_row {
            let v = next("row entry")?;
            if k < deg {
                if v == 0 || v > n {
                    return Err(Error::AlistParse(format!(
                        "row {r} entry {v} out of range 1..={n}"
                    )));
                }
                row_entries.push((r, v - 1));
            } else if v != 0 {
                return Err(Error::AlistParse(format!(
                    "row {r} padding must be zero, got {v}"
                )));
            }
        }
    }
    let mut from_cols = entries.clone();
    from_cols.sort_unstable();
    row_entries.sort_unstable();
    if from_cols != row_entries {
        return Err(Error::AlistParse(
            "column and row adjacency lists disagree".into(),
        ));
    }
    SparseBinaryMatrix::from_entries(m, n, &entries)
}

pub fn read_alist_file(path: &std::path::Path) -> Result<SparseBinaryMatrix, Error> {
    parse_alist(&std::fs::read_to_string(path)?)
}

pub fn write_alist_file(path: &std::path::Path, h: &SparseBinaryMatrix) -> Result<(), Error> {
    Ok(std::fs::write(path, format_alist(h))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spc3() -> SparseBinaryMatrix {
        SparseBinaryMatrix::from_dense_rows(&[vec![1, 1, 1]])
    }

    #[test]
    fn from_parity_check_counts() {
        let g = CodeGraph::from_parity_check(&spc3());
        assert_eq!(g.n_vars(), 3);
        assert_eq!(g.n_checks(), 1);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.role(), GraphRole::SyndromeFormer);

        let i2 = SparseBinaryMatrix::identity(2);
        let g = CodeGraph::from_parity_check(&i2);
        assert_eq!((g.n_vars(), g.n_checks(), g.edge_count()), (2, 2, 2));
        assert_eq!(g.max_degree(), 1);
    }

    #[test]
    fn biadjacency_round_trips() {
        let h = sample_regular_ldpc(12, 3, 6, 42).unwrap();
        let g = CodeGraph::from_parity_check(&h);
        assert_eq!(g.biadjacency(), h);
    }

    #[test]
    fn dual_graph_swaps_and_inverts() {
        let g = CodeGraph::from_parity_check(&spc3());
        let d = g.dual_graph();
        assert_eq!(d.n_vars(), 1);
        assert_eq!(d.n_checks(), 3);
        assert_eq!(d.role(), GraphRole::Encoder);
        assert_eq!(d.dual_graph(), g);

        let h = sample_regular_ldpc(24, 3, 4, 5).unwrap();
        let g = CodeGraph::from_parity_check(&h);
        assert_eq!(g.dual_graph().dual_graph(), g);
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(CodeGraph::from_parity_check(&spc3()).max_degree(), 3);
        assert_eq!(
            CodeGraph::from_parity_check(&SparseBinaryMatrix::identity(3)).max_degree(),
            1
        );
        let h = sample_regular_ldpc(12, 3, 6, 1).unwrap();
        let g = CodeGraph::from_parity_check(&h);
        let expected = h
            .row_degrees()
            .into_iter()
            .chain(h.col_degrees())
            .max()
            .unwrap();
        assert_eq!(g.max_degree(), expected);
    }

    #[test]
    fn check_degree_profile_examples() {
        assert_eq!(
            CodeGraph::from_parity_check(&spc3()).check_degree_profile(),
            vec![(3, 1)]
        );
        let h = sample_regular_ldpc(12, 3, 6, 9).unwrap();
        let profile = CodeGraph::from_parity_check(&h).check_degree_profile();
        let recount: usize = profile.iter().map(|&(_, c)| c).sum();
        assert_eq!(recount, 6);
        // Mixed block: I2 plus a [1 1] row over fresh columns.
        let mixed = SparseBinaryMatrix::from_dense_rows(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 1],
        ]);
        assert_eq!(
            CodeGraph::from_parity_check(&mixed).check_degree_profile(),
            vec![(1, 2), (2, 1)]
        );
    }

    #[test]
    fn regular_sample_degrees_and_determinism() {
        let (h, stats) = sample_regular_ldpc_detailed(12, 3, 6, 77).unwrap();
        assert_eq!(h.rows(), 6);
        assert_eq!(h.cols(), 12);
        assert!(h.entry_count() <= 36);
        assert_eq!(h.entry_count() + 2 * stats.removed_edge_pairs, 36);
        assert!(h.col_degrees().iter().all(|&d| d <= 3));
        assert!(h.row_degrees().iter().all(|&d| d <= 6));

        let again = sample_regular_ldpc(12, 3, 6, 77).unwrap();
        assert_eq!(h, again);
        let different = sample_regular_ldpc(12, 3, 6, 78).unwrap();
        assert_ne!(h, different, "distinct seeds should differ at this size");
    }

    #[test]
    fn regular_sample_degree_one_variables_partition() {
        let h = sample_regular_ldpc(6, 1, 3, 3).unwrap();
        assert_eq!(h.rows(), 2);
        // dv = 1 cannot collide, so rows partition the columns.
        let mut seen = vec![false; 6];
        for (_, c) in h.entries() {
            assert!(!seen[c]);
            seen[c] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn regular_sample_rejects_bad_divisibility() {
        assert!(sample_regular_ldpc(10, 3, 4, 0).is_err());
        assert!(sample_regular_ldpc(6, 3, 1, 0).is_err());
    }

    #[test]
    fn irregular_degenerate_matches_regular_contract() {
        let dist = DegreeDistribution::regular(3, 6);
        let h = sample_irregular(12, &dist, 4).unwrap();
        assert_eq!(h.rows(), 6);
        assert_eq!(h.cols(), 12);
        assert!(h.col_degrees().iter().all(|&d| d <= 3));
    }

    #[test]
    fn irregular_mixed_column_degrees() {
        let dist = DegreeDistribution {
            var: vec![(2, 0.5), (3, 0.5)],
            check: vec![(5, 1.0)],
        };
        let (h, stats) = sample_irregular_detailed(8, &dist, 10).unwrap();
        assert_eq!(h.cols(), 8);
        assert_eq!(h.rows(), 4); // 4*2 + 4*3 = 20 sockets / 5 per check
        let mut degrees = h.col_degrees();
        degrees.sort_unstable();
        if stats.removed_edge_pairs == 0 {
            assert_eq!(degrees, vec![2, 2, 2, 2, 3, 3, 3, 3]);
        }
    }

    #[test]
    fn irregular_histogram_within_one_node_per_bucket() {
        let dist = DegreeDistribution {
            var: vec![(2, 0.4), (3, 0.6)],
            check: vec![(4, 0.5), (6, 0.5)],
        };
        let (h, stats) = sample_irregular_detailed(40, &dist, 123).unwrap();
        if stats.removed_edge_pairs == 0 {
            let mut check_hist = std::collections::BTreeMap::new();
            for d in h.row_degrees() {
                *check_hist.entry(d).or_insert(0usize) += 1;
            }
            let m = h.rows();
            for (&d, &count) in &check_hist {
                let target = dist
                    .check
                    .iter()
                    .find(|&&(dd, _)| dd == d)
                    .map(|&(_, f)| f * m as f64)
                    .unwrap_or(0.0);
                assert!(
                    (count as f64 - target).abs() <= 1.0,
                    "degree {d}: {count} vs {target}"
                );
            }
        }
    }

    #[test]
    fn irregular_rejects_invalid() {
        let bad_sum = DegreeDistribution {
            var: vec![(3, 0.7)],
            check: vec![(6, 1.0)],
        };
        assert!(sample_irregular(12, &bad_sum, 0).is_err());
        let negative = DegreeDistribution {
            var: vec![(3, 1.5), (2, -0.5)],
            check: vec![(6, 1.0)],
        };
        assert!(sample_irregular(12, &negative, 0).is_err());
    }

    #[test]
    fn alist_round_trip() {
        let h = sample_regular_ldpc(12, 3, 6, 2024).unwrap();
        let text = format_alist(&h);
        let parsed = parse_alist(&text).unwrap();
        assert_eq!(parsed, h);
        assert_eq!(format_alist(&parsed), text);
    }

    #[test]
    fn alist_fixture_exact_bytes() {
        // SPC(3): one check over three columns.
        let expected = "3 1\n1 3\n1 1 1\n3\n1\n1\n1\n1 2 3\n";
        assert_eq!(format_alist(&spc3()), expected);
        assert_eq!(parse_alist(expected).unwrap(), spc3());
    }

    #[test]
    fn alist_normalizes_whitespace() {
        let messy = "3  1\n1 3\n1 1 1\n3\n1\n1\n1\n1 2   3\n";
        let parsed = parse_alist(messy).unwrap();
        assert_eq!(parsed, spc3());
        assert_eq!(format_alist(&parsed), "3 1\n1 3\n1 1 1\n3\n1\n1\n1\n1 2 3\n");
    }

    #[test]
    fn alist_rejects_garbage() {
        assert!(parse_alist("").is_err());
        assert!(parse_alist("2 1\n1 1\n1 1\n2\n1\n1\n1 0\n").is_err()); // wrong row list
        assert!(parse_alist("x y\n").is_err());
    }

    #[test]
    fn alist_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("code.alist");
        let h = sample_regular_ldpc(24, 3, 4, 9).unwrap();
        write_alist_file(&path, &h).unwrap();
        assert_eq!(read_alist_file(&path).unwrap(), h);
    }
}
