//! Canonical forms under vertex relabeling.
//!
//! The search is individualization–refinement: vertex colours are refined
//! by their facet incidences until stable, then the first non-singleton
//! cell is split by individualizing each of its vertices in turn. Every
//! leaf is a relabeling of `[n]`; the canonical encoding is the smallest
//! relabeled facet list over all leaves. Automorphisms discovered at equal
//! leaves prune sibling branches that lie in the same orbit.

use std::cmp::Ordering;

use crate::complex::{Permutation, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// A complete isomorphism invariant together with the relabeling that
/// realizes it.
///
/// Comparison and equality use `(n, facet count, encoding)` only; the
/// witness is ignored.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    n: usize,
    encoding: Vec<VertexSet>,
    witness: Permutation,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets of the relabeled complex in storage order.
    pub fn encoding(&self) -> &[VertexSet] {
        &self.encoding
    }

    /// Permutation sending the source complex onto the canonical complex.
    pub fn witness(&self) -> &Permutation {
        &self.witness
    }

    pub fn canonical_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_sorted_antichain(self.n, self.encoding.clone())
    }

    fn key(&self) -> (usize, usize, &[VertexSet]) {
        (self.n, self.encoding.len(), &self.encoding)
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for CanonicalForm {}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

struct Search<'a> {
    n: usize,
    facets: &'a [u64],
    best: Option<(Vec<VertexSet>, Vec<u32>)>,
    first: Option<(Vec<VertexSet>, Vec<u32>)>,
    /// Automorphisms as 0-based vertex maps.
    automorphisms: Vec<Vec<u32>>,
}

/// Ranks `keys` densely (equal keys share a rank, order preserved).
fn dense_ranks<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = keys
        .iter()
        .map(|k| sorted.binary_search(k).expect("key present") as u32)
        .collect();
    (ranks, sorted.len())
}

fn cell_count(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Colour refinement on the vertex–facet incidence structure. Colours stay
/// ordered consistently with the input colours, so the result depends only
/// on the isomorphism class of (complex, colouring).
fn refine(n: usize, facets: &[u64], colors: &mut Vec<u32>) {
    let mut cells = cell_count(colors);
    loop {
        let facet_keys: Vec<(u32, Vec<u32>)> = facets
            .iter()
            .map(|&f| {
                let mut cs: Vec<u32> = (0..n).filter(|&v| f >> v & 1 == 1).map(|v| colors[v]).collect();
                cs.sort_unstable();
                (f.count_ones(), cs)
            })
            .collect();
        let (facet_ranks, _) = dense_ranks(&facet_keys);
        let vertex_keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut incident: Vec<u32> = facets
                    .iter()
                    .zip(&facet_ranks)
                    .filter(|(&f, _)| f >> v & 1 == 1)
                    .map(|(_, &r)| r)
                    .collect();
                incident.sort_unstable();
                (colors[v], incident)
            })
            .collect();
        let (ranks, count) = dense_ranks(&vertex_keys);
        *colors = ranks;
        if count == cells || count == n {
            break;
        }
        cells = count;
    }
}

fn relabel(facets: &[u64], labels: &[u32]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = facets
        .iter()
        .map(|&f| {
            let mut bits = 0u64;
            let mut rest = f;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                bits |= 1u64 << labels[v];
            }
            VertexSet::from_bits(bits)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Vertex orbits of the group generated by `gens`, as a representative map.
fn orbit_roots(n: usize, gens: &[&Vec<u32>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

impl Search<'_> {
    fn visit(&mut self, mut colors: Vec<u32>, prefix: &mut Vec<usize>) {
        refine(self.n, self.facets, &mut colors);
        if cell_count(&colors) == self.n {
            self.leaf(colors);
            return;
        }
        // first non-singleton cell, by colour
        let mut counts = vec![0usize; self.n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let target = counts.iter().position(|&k| k > 1).expect("non-discrete") as u32;
        let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();

        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                let stabilizer: Vec<&Vec<u32>> = self
                    .automorphisms
                    .iter()
                    .filter(|g| prefix.iter().all(|&p| g[p] as usize == p))
                    .collect();
                if !stabilizer.is_empty() {
                    let roots = orbit_roots(self.n, &stabilizer);
                    if explored.iter().any(|&u| roots[u] == roots[v]) {
                        continue;
                    }
                }
            }
            let child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + u32::from(c == target && u != v))
                .collect();
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, labels: Vec<u32>) {
        let encoding = relabel(self.facets, &labels);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == encoding {
                // labels_ref⁻¹ ∘ labels maps the complex onto itself
                let mut inv = vec![0u32; self.n];
                for (v, &l) in reference.1.iter().enumerate() {
                    inv[l as usize] = v as u32;
                }
                let auto: Vec<u32> = labels.iter().map(|&l| inv[l as usize]).collect();
                if auto.iter().enumerate().any(|(v, &w)| v as u32 != w) {
                    self.automorphisms.push(auto);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((encoding.clone(), labels.clone()));
        }
        match &self.best {
            Some((best, _)) if *best <= encoding => {}
            _ => self.best = Some((encoding, labels)),
        }
    }
}

/// Canonical form of `complex` under relabelings of `[n]`.
pub fn canonical_form(complex: &SimplicialComplex) -> CanonicalForm {
    let n = complex.n();
    let facets: Vec<u64> = complex.facets().iter().map(|f| f.bits()).collect();
    let mut search = Search {
        n,
        facets: &facets,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    search.visit(vec![0; n], &mut Vec::new());
    let (encoding, labels) = search.best.expect("search reaches at least one leaf");
    let witness = Permutation::new(labels.iter().map(|&l| l as usize + 1).collect())
        .expect("discrete colouring is a bijection");
    CanonicalForm {
        n,
        encoding,
        witness,
    }
}

/// A permutation `π` with `π(a) = b`, if the complexes are isomorphic.
pub fn isomorphism(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Permutation> {
    if a.n() != b.n() || a.facet_count() != b.facet_count() || a.dimension() != b.dimension() {
        return None;
    }
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    (ca == cb).then(|| cb.witness.inverse().after(&ca.witness))
}

/// True iff some permutation of `[n]` maps `a` onto `b`. Complexes on
/// different ground sets are never isomorphic.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    isomorphism(a, b).is_some()
}

/// Cheap isomorphism invariant: facet cardinalities and the sorted vertex
/// profiles (per cardinality, how many facets contain the vertex). Unequal
/// signatures rule out isomorphism.
pub fn invariant_signature(complex: &SimplicialComplex) -> Vec<u32> {
    let n = complex.n();
    let width = complex.facets().last().map_or(0, |f| f.len()) + 1;
    let mut profiles = vec![vec![0u32; width]; n];
    let mut sizes = vec![0u32; width];
    for f in complex.facets() {
        sizes[f.len()] += 1;
        for v in f.iter() {
            profiles[v - 1][f.len()] += 1;
        }
    }
    profiles.sort_unstable();
    let mut sig = vec![n as u32];
    sig.extend(sizes);
    sig.extend(profiles.into_iter().flatten());
    sig
}

/// Isomorphism by trying all `n!` permutations. Test oracle only.
pub fn are_isomorphic_bruteforce(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    if a.n() != b.n() || a.facet_count() != b.facet_count() {
        return false;
    }
    let n = a.n();
    let mut images: Vec<usize> = (1..=n).collect();
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let check = |images: &[usize]| {
        let p = Permutation::new(images.to_vec()).expect("valid");
        a.apply_permutation(&p).expect("same n") == *b
    };
    if check(&images) {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                images.swap(0, i);
            } else {
                images.swap(c[i], i);
            }
            if check(&images) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}
