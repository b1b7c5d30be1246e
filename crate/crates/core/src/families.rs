//! Graph families and closed-form facet families for `K_n ⊔ K_m`.
//!
//! Two-block vertex sets put the first block `V_n` on `1..=n` and the
//! second block `V_m` on `n+1..=n+m`. `M(i,j)` is the family of subsets
//! meeting `V_n` in exactly `i` vertices and `V_m` in exactly `j`;
//! complementing every member gives `M(n-i, m-j)`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

fn graph(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<SimplicialComplex> {
    let faces = edges
        .into_iter()
        .map(|(a, b)| VertexSet::from_vertices(n, [a, b]))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_faces(n, faces)
}

/// `P_n`: edges `{i, i+1}`.
pub fn path(n: usize) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::FamilyParams(format!("path needs n >= 2, got {n}")));
    }
    graph(n, (1..n).map(|i| (i, i + 1)))
}

/// `C_n`: the path plus `{1, n}`.
pub fn cycle(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::FamilyParams(format!("cycle needs n >= 3, got {n}")));
    }
    graph(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
}

/// `K_n`: all 2-subsets.
pub fn complete(n: usize) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::FamilyParams(format!("complete needs n >= 2, got {n}")));
    }
    graph(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

/// `K_{n,m}` on `[n+m]`: edges `{i, n+j}`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<SimplicialComplex> {
    if n < 1 || m < 1 {
        return Err(Error::FamilyParams(format!(
            "bipartite needs n, m >= 1, got {n},{m}"
        )));
    }
    graph(n + m, (1..=n).flat_map(|i| (1..=m).map(move |j| (i, n + j))))
}

/// Places `b` after `a`: vertex `i` of `b` becomes `a.n() + i`.
pub fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    if a.is_empty_face() || b.is_empty_face() {
        return Err(Error::FamilyParams(
            "disjoint union with {∅} is not supported".into(),
        ));
    }
    let n = a.n() + b.n();
    let shift = a.n();
    let faces = a
        .facets()
        .iter()
        .copied()
        .chain(b.facets().iter().map(|f| VertexSet::from_bits(f.bits() << shift)));
    SimplicialComplex::from_faces(n, faces)
}

/// `K_n ⊔ K_m`.
pub fn knm(n: usize, m: usize) -> Result<SimplicialComplex> {
    disjoint_union(&complete(n)?, &complete(m)?)
}

/// Sizes of the two blocks `V_n` (vertices `1..=n`) and `V_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockSplit {
    n: usize,
    m: usize,
}

impl BlockSplit {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 1 || m < 1 || n + m > crate::vertex_set::MAX_VERTICES {
            return Err(Error::FamilyParams(format!("invalid block sizes {n},{m}")));
        }
        Ok(BlockSplit { n, m })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn total(self) -> usize {
        self.n + self.m
    }

    fn first_block(self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn second_block(self) -> VertexSet {
        VertexSet::full(self.n + self.m).difference(self.first_block())
    }
}

/// All `k`-subsets of `block`, as bit patterns.
fn subsets_of_size(block: VertexSet, k: usize) -> Vec<VertexSet> {
    let members = block.to_vec();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(members: &[usize], k: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if chosen.len() == k {
            let mut s = VertexSet::EMPTY;
            for &v in chosen.iter() {
                s.insert(v);
            }
            out.push(s);
            return;
        }
        for idx in start..members.len() {
            if members.len() - idx < k - chosen.len() {
                break;
            }
            chosen.push(members[idx]);
            rec(members, k, idx + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(&members, k, 0, &mut chosen, &mut out);
    out
}

/// `M(i,j)`: subsets with `i` vertices in `V_n` and `j` in `V_m`.
pub fn m_family(split: BlockSplit, i: usize, j: usize) -> Result<Vec<VertexSet>> {
    if i > split.n || j > split.m {
        return Err(Error::FamilyParams(format!(
            "M({i},{j}) out of range for blocks {},{}",
            split.n, split.m
        )));
    }
    let lows = subsets_of_size(split.first_block(), i);
    let highs = subsets_of_size(split.second_block(), j);
    Ok(lows
        .iter()
        .flat_map(|&a| highs.iter().map(move |&b| a.union(b)))
        .collect())
}

/// `M^c(i,j)`, the complements of `M(i,j)`, which is `M(n-i, m-j)`.
pub fn m_family_complement(split: BlockSplit, i: usize, j: usize) -> Result<Vec<VertexSet>> {
    if i > split.n || j > split.m {
        return Err(Error::FamilyParams(format!(
            "M^c({i},{j}) out of range for blocks {},{}",
            split.n, split.m
        )));
    }
    m_family(split, split.n - i, split.m - j)
}

/// Facets of `δ^(k)(K_n ⊔ K_m)` assembled from the `M^c` families, without
/// iterating the NF-step.
///
/// Requires `2 <= n <= m`, `(n, m) != (2, 2)` and `k <= n+m+2`. Union terms
/// whose index range is empty or whose indices fall outside the blocks
/// contribute nothing. The result is checked to be an antichain rather than
/// minimized, so a wrong term shows up as an error.
pub fn knm_facets_closed_form(split: BlockSplit, k: usize) -> Result<SimplicialComplex> {
    let (n, m) = (split.n, split.m);
    if n > m {
        return Err(Error::SwapBlocks { n, m });
    }
    if n < 2 || (n, m) == (2, 2) {
        return Err(Error::FamilyParams(format!(
            "closed form needs 2 <= n <= m and (n,m) != (2,2), got {n},{m}"
        )));
    }
    if k > n + m + 2 {
        return Err(Error::StepOutOfRange { k, lo: 0, hi: n + m + 2 });
    }
    let total = n + m;
    let vn = split.first_block();
    let vm = split.second_block();

    let mut facets: Vec<VertexSet> = Vec::new();
    // signed indices: terms like M^c(k-4-m, m) go negative at the range edges
    let mut add = |i: isize, j: isize| {
        if i >= 0 && j >= 0 && i as usize <= n && j as usize <= m {
            facets.extend(m_family_complement(split, i as usize, j as usize).expect("in range"));
        }
    };
    let (ni, mi, ki) = (n as isize, m as isize, k as isize);
    // ⋃ M^c(i,j) over i in 1..=i_max, j in 1..=j_max, i + j = s
    let diagonal = |add: &mut dyn FnMut(isize, isize), i_max: isize, j_max: isize, s: isize| {
        for i in 1..=i_max {
            let j = s - i;
            if (1..=j_max).contains(&j) {
                add(i, j);
            }
        }
    };

    match k {
        0 => return knm(n, m),
        1 => {
            for x in vn.iter() {
                for y in vm.iter() {
                    facets.push(VertexSet::from_vertices(total, [x, y])?);
                }
            }
        }
        2 => facets.extend([vn, vm]),
        3 => {
            for x in vn.iter() {
                for y in vm.iter() {
                    let mut f = VertexSet::full(total);
                    f.remove(x);
                    f.remove(y);
                    facets.push(f);
                }
            }
        }
        _ if k <= n + 2 => {
            add(ki - 2, 0);
            add(0, ki - 2);
            diagonal(&mut add, ni, mi, ki - 3);
        }
        _ if k == n + 3 => {
            add(0, ni + 1);
            diagonal(&mut add, ni, mi, ni);
        }
        _ if k <= m + 2 => {
            // only reachable when n + 4 <= m + 2
            add(0, ki - 2);
            add(ni, ki - 4 - ni);
            diagonal(&mut add, ni - 1, mi, ki - 3);
        }
        _ => {
            add(ni, ki - 4 - ni);
            add(ki - 4 - mi, mi);
            diagonal(&mut add, ni - 1, mi - 1, ki - 3);
        }
    }

    facets.sort_unstable();
    facets.dedup();
    for (a, &f) in facets.iter().enumerate() {
        if facets[a + 1..].iter().any(|&g| f.is_subset(g)) {
            return Err(Error::FamilyParams(format!(
                "closed form for ({n},{m}) at k = {k} is not an antichain: {f} is contained in another facet"
            )));
        }
    }
    if facets.is_empty() {
        return Err(Error::FamilyParams(format!(
            "closed form for ({n},{m}) at k = {k} is empty"
        )));
    }
    SimplicialComplex::from_faces(total, facets)
}

/// `dim δ^(k)(K_n ⊔ K_m)` by case analysis, for `1 <= k < n+m+2`,
/// `n <= m`, `m >= 3`.
///
/// At `k = 4` the facets are `M^c(2,0) ∪ M^c(0,2)`, of size `n+m-2`, so the
/// dimension is `n+m-3`; the general `n+m-k+2` case starts at `k = 5`,
/// where the diagonal terms become nonempty.
pub fn knm_dimension_formula(split: BlockSplit, k: usize) -> Result<i64> {
    let (n, m) = (split.n, split.m);
    if n > m {
        return Err(Error::SwapBlocks { n, m });
    }
    if m < 3 {
        return Err(Error::FamilyParams(format!("dimension table needs m >= 3, got {m}")));
    }
    if k < 1 || k >= n + m + 2 {
        return Err(Error::StepOutOfRange { k, lo: 1, hi: n + m + 1 });
    }
    let (n, m, k) = (n as i64, m as i64, k as i64);
    Ok(match k {
        1 => 1,
        2 => m - 1,
        3 | 4 => n + m - 3,
        _ if k <= n + 2 => n + m - k + 2,
        _ if k == n + 3 => m - 1,
        _ => n + m - k + 3,
    })
}

/// The table exactly as printed alongside the closed forms, which gives
/// `n+m-k+2` for every `4 <= k <= n+2`. Kept for comparison only.
pub fn knm_dimension_table_as_printed(split: BlockSplit, k: usize) -> Result<i64> {
    let value = knm_dimension_formula(split, k)?;
    Ok(if k == 4 { value + 1 } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, faces).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn small_graphs() {
        assert_eq!(path(2).unwrap(), cx(2, &[&[1, 2]]));
        assert_eq!(path(4).unwrap(), cx(4, &[&[1, 2], &[2, 3], &[3, 4]]));
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert_eq!(complete(2).unwrap(), path(2).unwrap());
        assert_eq!(complete_bipartite(1, 1).unwrap(), cx(2, &[&[1, 2]]));
        assert_eq!(complete(5).unwrap().facet_count(), 10);
        assert!(path(1).is_err() && cycle(2).is_err() && complete(1).is_err());
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn unions() {
        let k2 = complete(2).unwrap();
        assert_eq!(disjoint_union(&k2, &k2).unwrap(), cx(4, &[&[1, 2], &[3, 4]]));
        let e = SimplicialComplex::empty_face(2).unwrap();
        assert!(disjoint_union(&k2, &e).is_err());
        let mixed = disjoint_union(&SimplicialComplex::simplex(3).unwrap(), &k2).unwrap();
        assert_eq!(mixed.dimension(), 2);
        assert_eq!(mixed.n(), 5);
    }

    #[test]
    fn m_family_sizes() {
        for n in 1..=5 {
            for m in 1..=5 {
                let split = BlockSplit::new(n, m).unwrap();
                for i in 0..=n {
                    for j in 0..=m {
                        let fam = m_family(split, i, j).unwrap();
                        assert_eq!(fam.len(), binom(n, i) * binom(m, j));
                        let vn = VertexSet::full(n);
                        assert!(fam.iter().all(|f| f.intersection(vn).len() == i && f.len() == i + j));
                        let comp = m_family_complement(split, i, j).unwrap();
                        let mut expected: Vec<_> = fam.iter().map(|f| f.complement(n + m)).collect();
                        let mut comp_sorted = comp.clone();
                        expected.sort();
                        comp_sorted.sort();
                        assert_eq!(comp_sorted, expected);
                    }
                }
                assert!(m_family(split, n + 1, 0).is_err());
            }
        }
        let s22 = BlockSplit::new(2, 2).unwrap();
        assert_eq!(m_family(s22, 0, 0).unwrap(), vec![VertexSet::EMPTY]);
        let s23 = BlockSplit::new(2, 3).unwrap();
        assert_eq!(m_family(s23, 2, 0).unwrap(), vec![VertexSet::from_vertices(5, [1, 2]).unwrap()]);
    }

    #[test]
    fn closed_form_endpoints() {
        let split = BlockSplit::new(3, 4).unwrap();
        assert_eq!(knm_facets_closed_form(split, 0).unwrap(), knm(3, 4).unwrap());
        assert_eq!(
            knm_facets_closed_form(split, 2).unwrap(),
            cx(7, &[&[1, 2, 3], &[4, 5, 6, 7]])
        );
        assert_eq!(knm_facets_closed_form(split, 9).unwrap(), knm(3, 4).unwrap());
        assert_eq!(knm_facets_closed_form(split, 1).unwrap(), complete_bipartite(3, 4).unwrap());
        let k4 = knm_facets_closed_form(split, 4).unwrap();
        let mut expected = m_family_complement(split, 2, 0).unwrap();
        expected.extend(m_family_complement(split, 0, 2).unwrap());
        expected.sort();
        assert_eq!(k4.facets(), &expected[..]);
    }

    #[test]
    fn closed_form_errors() {
        let swapped = BlockSplit::new(4, 3).unwrap();
        assert_eq!(
            knm_facets_closed_form(swapped, 1),
            Err(Error::SwapBlocks { n: 4, m: 3 })
        );
        let split = BlockSplit::new(2, 2).unwrap();
        assert!(knm_facets_closed_form(split, 1).is_err());
        let split = BlockSplit::new(2, 3).unwrap();
        assert!(knm_facets_closed_form(split, 8).is_err());
        assert!(BlockSplit::new(0, 3).is_err());
    }

    #[test]
    fn dimension_formula_cases() {
        let split = BlockSplit::new(3, 5).unwrap();
        assert_eq!(knm_dimension_formula(split, 1), Ok(1));
        assert_eq!(knm_dimension_formula(split, 2), Ok(4));
        assert_eq!(knm_dimension_formula(split, 3), Ok(5));
        assert_eq!(knm_dimension_formula(split, 6), Ok(4));
        assert_eq!(knm_dimension_formula(split, 7), Ok(4));
        assert_eq!(knm_dimension_formula(split, 9), Ok(2));
        assert!(knm_dimension_formula(split, 0).is_err());
        assert!(knm_dimension_formula(split, 10).is_err());
        assert!(knm_dimension_formula(BlockSplit::new(2, 2).unwrap(), 1).is_err());
    }

    #[test]
    fn printed_table_differs_only_at_k_4() {
        for n in 2..=5 {
            for m in n.max(3)..=5 {
                let split = BlockSplit::new(n, m).unwrap();
                for k in 1..n + m + 2 {
                    let derived = knm_dimension_formula(split, k).unwrap();
                    let printed = knm_dimension_table_as_printed(split, k).unwrap();
                    if k == 4 {
                        assert_eq!(printed, derived + 1);
                    } else {
                        assert_eq!(printed, derived);
                    }
                }
            }
        }
    }
}
