//! The McKay graph: adjacency of irreducibles under tensoring with the
//! defining representation, and its identification as an affine ADE
//! diagram.

use num_integer::Integer;
use num_traits::Signed;

use crate::exact::{rational, CyclotomicNumber};
use crate::vogel::RootSystem;

use super::chartab::CharacterTable;
use super::group::FiniteSubgroupSU2;
use super::McKayError;

/// Nodes are irreducibles (with their degrees); `adjacency[i][j]` is the
/// multiplicity of Vⱼ in V ⊗ Vᵢ. Multiplicities above 1 occur only in the
/// two smallest cyclic cases (a doubled bond for C₂, a loop for C₁).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McKayGraph {
    pub degrees: Vec<u32>,
    pub adjacency: Vec<Vec<u32>>,
}

impl McKayGraph {
    pub fn node_count(&self) -> usize {
        self.degrees.len()
    }

    /// Sum of incident multiplicities per node (loops counted once).
    pub fn graph_degrees(&self) -> Vec<u32> {
        self.adjacency.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.node_count();
        (0..n).all(|i| (0..n).all(|j| self.adjacency[i][j] == self.adjacency[j][i]))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, flag) in seen.iter_mut().enumerate() {
                if self.adjacency[i][j] > 0 && !*flag {
                    *flag = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Computes `m_ij = (1/|G|) Σ_C |C| · χ_V(c) · χᵢ(c) · χ̄ⱼ(c)` exactly.
/// Every entry must come out a nonnegative rational integer; anything else
/// is an internal-consistency error, as is an asymmetric or disconnected
/// result.
pub fn mckay_matrix(
    group: &FiniteSubgroupSU2,
    table: &CharacterTable,
) -> Result<McKayGraph, McKayError> {
    let k = table.class_count();
    let common = (table.field_order as u64).lcm(&(group.field_order as u64)) as u32;
    let traces: Vec<CyclotomicNumber> = group
        .classes
        .iter()
        .map(|c| c.trace.coerce(common).unwrap())
        .collect();
    let lifted: Vec<Vec<CyclotomicNumber>> = table
        .values
        .iter()
        .map(|row| row.iter().map(|v| v.coerce(common).unwrap()).collect())
        .collect();
    let mut adjacency = vec![vec![0u32; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut acc = CyclotomicNumber::zero(common);
            for c in 0..k {
                let term = traces[c]
                    .mul(&lifted[i][c])
                    .mul(&lifted[j][c].conj())
                    .scale(&rational(table.class_sizes[c] as i64, 1));
                acc = acc.add(&term);
            }
            let value = acc
                .scale(&rational(1, group.order() as i64))
                .to_rational()
                .ok_or(McKayError::NonIntegerEntry { i, j })?;
            if !value.is_integer() || value.is_negative() {
                return Err(McKayError::NonIntegerEntry { i, j });
            }
            adjacency[i][j] = u32::try_from(value.to_integer())
                .map_err(|_| McKayError::NonIntegerEntry { i, j })?;
        }
    }
    let graph = McKayGraph {
        degrees: table.degrees.clone(),
        adjacency,
    };
    if !graph.is_symmetric() {
        return Err(McKayError::DataIntegrity("McKay matrix is asymmetric".into()));
    }
    if !graph.is_connected() {
        return Err(McKayError::DataIntegrity("McKay graph is disconnected".into()));
    }
    // dimension count: Σⱼ m_ij·deg(j) = 2·deg(i)
    for i in 0..k {
        let total: u32 = (0..k).map(|j| graph.adjacency[i][j] * graph.degrees[j]).sum();
        if total != 2 * graph.degrees[i] {
            return Err(McKayError::DataIntegrity(format!(
                "V ⊗ V_{i} dimension count failed"
            )));
        }
    }
    Ok(graph)
}

/// An affine simply-laced Dynkin diagram label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineDiagram {
    /// Â_r: an (r+1)-cycle; Â₀ is one node with a loop, Â₁ a double bond.
    A(usize),
    /// D̃_m: m+1 nodes, two forks at each end of a path.
    D(usize),
    /// Ê₆, Ê₇ or Ê₈.
    E(u8),
}

impl AffineDiagram {
    /// The finite-type label obtained by dropping the affine node mark.
    pub fn finite(&self) -> RootSystem {
        match *self {
            Self::A(r) => RootSystem::A(r as i64),
            Self::D(m) => RootSystem::D(m as i64),
            Self::E(n) => RootSystem::E(n),
        }
    }

    pub fn node_count(&self) -> usize {
        match *self {
            Self::A(r) => r + 1,
            Self::D(m) => m + 1,
            Self::E(n) => n as usize + 1,
        }
    }

    fn template(&self) -> Vec<Vec<u32>> {
        let n = self.node_count();
        let mut adj = vec![vec![0u32; n]; n];
        let mut link = |a: usize, b: usize| {
            adj[a][b] += 1;
            if a != b {
                adj[b][a] += 1;
            } else {
                adj[a][b] += 1; // loop stored as multiplicity 2
            }
        };
        match *self {
            Self::A(0) => link(0, 0),
            Self::A(1) => {
                link(0, 1);
                link(0, 1);
            }
            Self::A(_) => {
                for i in 0..n {
                    link(i, (i + 1) % n);
                }
            }
            Self::D(m) => {
                // chain 2 .. m-2 with forks {0,1} at node 2 and {m-1, m} at m-2
                link(0, 2);
                link(1, 2);
                for i in 2..(m - 2) {
                    link(i, i + 1);
                }
                link(m - 2, m - 1);
                link(m - 2, m);
            }
            Self::E(6) => {
                // three arms of length 2 around a center
                for arm in 0..3 {
                    link(6, 2 * arm + 1);
                    link(2 * arm + 1, 2 * arm);
                }
            }
            Self::E(7) => {
                for i in 0..6 {
                    link(i, i + 1);
                }
                link(3, 7);
            }
            Self::E(_) => {
                for i in 0..7 {
                    link(i, i + 1);
                }
                link(5, 8);
            }
        }
        adj
    }
}

impl std::fmt::Display for AffineDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Self::A(r) => write!(f, "A~{r}"),
            Self::D(m) => write!(f, "D~{m}"),
            Self::E(n) => write!(f, "E~{n}"),
        }
    }
}

fn degree_multiset(adj: &[Vec<u32>]) -> Vec<u32> {
    let mut d: Vec<u32> = adj.iter().map(|r| r.iter().sum()).collect();
    d.sort_unstable();
    d
}

/// Backtracking isomorphism test on adjacency matrices with multiplicities;
/// fine at these sizes (≤ 16 nodes) with degree pruning.
fn isomorphic(a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
    let n = a.len();
    if b.len() != n || degree_multiset(a) != degree_multiset(b) {
        return false;
    }
    let deg_a: Vec<u32> = a.iter().map(|r| r.iter().sum()).collect();
    let deg_b: Vec<u32> = b.iter().map(|r| r.iter().sum()).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        a: &[Vec<u32>],
        b: &[Vec<u32>],
        deg_a: &[u32],
        deg_b: &[u32],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        for t in 0..n {
            if used[t] || deg_a[i] != deg_b[t] || a[i][i] != b[t][t] {
                continue;
            }
            if (0..i).all(|p| a[i][p] == b[t][map[p]]) {
                map[i] = t;
                used[t] = true;
                if go(i + 1, a, b, deg_a, deg_b, map, used) {
                    return true;
                }
                map[i] = usize::MAX;
                used[t] = false;
            }
        }
        false
    }
    go(0, a, b, &deg_a, &deg_b, &mut map, &mut used)
}

/// Matches the graph against the affine Â/D̃/Ê templates of the same size.
/// A failure signals a bug upstream: the graphs produced here always match.
pub fn identify_affine_diagram(graph: &McKayGraph) -> Result<AffineDiagram, McKayError> {
    let n = graph.node_count();
    if n == 0 || n > 16 {
        return Err(McKayError::NoDiagramMatch { nodes: n });
    }
    let mut candidates: Vec<AffineDiagram> = vec![AffineDiagram::A(n - 1)];
    if n >= 5 {
        candidates.push(AffineDiagram::D(n - 1));
    }
    match n {
        7 => candidates.push(AffineDiagram::E(6)),
        8 => candidates.push(AffineDiagram::E(7)),
        9 => candidates.push(AffineDiagram::E(8)),
        _ => {}
    }
    candidates
        .into_iter()
        .find(|c| isomorphic(&graph.adjacency, &c.template()))
        .ok_or(McKayError::NoDiagramMatch { nodes: n })
}
