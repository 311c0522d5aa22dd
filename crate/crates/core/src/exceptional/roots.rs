use std::collections::{BTreeMap, HashSet};

use super::ExceptionalGroup;
use crate::error::{OrbitError, Result};

/// `C[i][j] = ⟨α_i, α_j^∨⟩`.
pub type CartanMatrix = Vec<Vec<i32>>;

/// Generation stops past this many positive roots; only affine or
/// indefinite candidate diagrams get there.
const ROOT_CAP: usize = 400;

fn simply_laced(rank: usize, edges: &[(usize, usize)]) -> CartanMatrix {
    let mut c = vec![vec![0; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in edges {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    c
}

/// Type E diagram in table order: node 0 is the branch node's single
/// neighbour drawn above the chain, nodes `1..rank` are the chain from left
/// to right, and node 0 hangs off chain position `branch` (0-based).
pub fn e_type_cartan(rank: usize, branch: usize) -> CartanMatrix {
    let mut edges: Vec<(usize, usize)> = (1..rank - 1).map(|c| (c, c + 1)).collect();
    edges.push((0, 1 + branch));
    simply_laced(rank, &edges)
}

fn reversed(c: &CartanMatrix) -> CartanMatrix {
    let n = c.len();
    (0..n)
        .map(|i| (0..n).map(|j| c[n - 1 - i][n - 1 - j]).collect())
        .collect()
}

/// Cartan matrix in the node order used by the tables' diagram column.
pub fn cartan_matrix(group: ExceptionalGroup) -> CartanMatrix {
    match group {
        // long, short
        ExceptionalGroup::G2 => vec![vec![2, -3], vec![-1, 2]],
        ExceptionalGroup::F4 => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        ExceptionalGroup::E6 => e_type_cartan(6, 2),
        ExceptionalGroup::E7 => e_type_cartan(7, 3),
        ExceptionalGroup::E8 => e_type_cartan(8, 4),
    }
}

/// Positive roots in simple-root coordinates, by root strings.
pub fn positive_roots(c: &CartanMatrix) -> Result<Vec<Vec<i32>>> {
    let n = c.len();
    let simple: Vec<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|j| i32::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Vec<i32>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p: how far the α_i-string extends below β.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i32 = (0..n).map(|j| beta[j] * c[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        if all.len() > ROOT_CAP {
            return Err(OrbitError::Table(
                "Cartan matrix does not define a finite root system".into(),
            ));
        }
        layer = next;
    }
    all.sort();
    Ok(all)
}

/// All roots of the group, positive and negative.
pub fn root_system(group: ExceptionalGroup) -> Vec<Vec<i32>> {
    let pos = positive_roots(&cartan_matrix(group)).expect("finite type");
    let neg: Vec<Vec<i32>> = pos.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    pos.into_iter().chain(neg).collect()
}

fn graded_dims_for(c: &CartanMatrix, diagram: &[u8]) -> Result<BTreeMap<i32, u64>> {
    if diagram.len() != c.len() {
        return Err(OrbitError::Table(format!(
            "diagram has {} nodes, expected {}",
            diagram.len(),
            c.len()
        )));
    }
    let mut out = BTreeMap::new();
    for r in positive_roots(c)? {
        let j: i32 = r.iter().zip(diagram).map(|(a, &w)| a * w as i32).sum();
        *out.entry(j).or_insert(0) += 1;
        *out.entry(-j).or_insert(0) += 1;
    }
    *out.entry(0).or_insert(0) += c.len() as u64;
    Ok(out)
}

/// `dim g(j)` for the grading by the weighted diagram.
pub fn graded_dims_from_diagram(group: ExceptionalGroup, diagram: &[u8]) -> Result<BTreeMap<i32, u64>> {
    graded_dims_for(&cartan_matrix(group), diagram)
}

/// One candidate reading of the printed node order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeOrderCandidate {
    pub description: String,
    pub cartan: CartanMatrix,
    pub builtin: bool,
}

/// Every plausible node order for a group: both orientations for G2 and
/// F4, every attachment point of the upper node for type E.
pub fn node_order_candidates(group: ExceptionalGroup) -> Vec<NodeOrderCandidate> {
    let builtin = cartan_matrix(group);
    let raw: Vec<(String, CartanMatrix)> = match group {
        ExceptionalGroup::G2 | ExceptionalGroup::F4 => vec![
            ("as printed".to_string(), builtin.clone()),
            ("reversed".to_string(), reversed(&builtin)),
        ],
        _ => {
            let rank = group.rank();
            (0..rank - 1)
                .map(|b| (format!("upper node on chain position {}", b + 1), e_type_cartan(rank, b)))
                .collect()
        }
    };
    raw.into_iter()
        .map(|(description, cartan)| NodeOrderCandidate {
            builtin: cartan == builtin,
            description,
            cartan,
        })
        .collect()
}

/// How many `(diagram, dim g(1), dim g(2))` rows a candidate reproduces.
/// `None` when the candidate is not of finite type.
pub fn candidate_matches(c: &NodeOrderCandidate, rows: &[(Vec<u8>, u64, u64)]) -> Option<usize> {
    let mut hits = 0;
    for (diagram, g1, g2) in rows {
        let dims = graded_dims_for(&c.cartan, diagram).ok()?;
        if dims.get(&1).copied().unwrap_or(0) == *g1 && dims.get(&2).copied().unwrap_or(0) == *g2 {
            hits += 1;
        }
    }
    Some(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let counts: Vec<usize> = ExceptionalGroup::ALL
            .iter()
            .map(|&g| root_system(g).len())
            .collect();
        assert_eq!(counts, vec![12, 48, 72, 126, 240]);
    }

    #[test]
    fn small_diagrams() {
        let d = graded_dims_from_diagram(ExceptionalGroup::G2, &[0, 1]).unwrap();
        assert_eq!((d[&1], d[&2]), (2, 1));
        let d = graded_dims_from_diagram(ExceptionalGroup::F4, &[1, 0, 0, 0]).unwrap();
        assert_eq!((d[&1], d[&2]), (14, 1));
        assert!(graded_dims_from_diagram(ExceptionalGroup::F4, &[1, 0]).is_err());
    }

    #[test]
    fn affine_candidates_are_rejected() {
        // Upper node in the middle of a 7-chain is the affine E7 diagram.
        assert!(positive_roots(&e_type_cartan(8, 3)).is_err());
        // At the end of the chain it is A8.
        assert_eq!(positive_roots(&e_type_cartan(8, 0)).unwrap().len(), 36);
    }
}
