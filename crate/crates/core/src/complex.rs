use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simplicial complex on `[n]`, held as its facets.
///
/// Facets form a nonempty antichain sorted by `VertexSet`'s order. The
/// complex `{∅}` is the single facet `∅`. The void complex (no faces at all)
/// is not representable. `n` is part of the value and may exceed the largest
/// vertex used, so isolated non-faces are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

fn check_ground_set(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::GroundSetSize(n))
    } else {
        Ok(())
    }
}

/// Keeps the inclusion-maximal members of `faces`, sorted and deduplicated.
pub(crate) fn maximal_elements(mut faces: Vec<VertexSet>) -> Vec<VertexSet> {
    faces.sort_unstable();
    faces.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(faces.len());
    for &f in faces.iter().rev() {
        if !kept.iter().any(|&g| f.is_subset(g)) {
            kept.push(f);
        }
    }
    kept.reverse();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `faces`: its facets are the maximal faces.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Result<Self> {
        Self::from_faces_reporting(n, faces).map(|(c, _)| c)
    }

    /// Like [`from_faces`](Self::from_faces), also returning how many input
    /// faces were dropped as duplicates or non-maximal.
    pub fn from_faces_reporting<I: IntoIterator<Item = VertexSet>>(
        n: usize,
        faces: I,
    ) -> Result<(Self, usize)> {
        check_ground_set(n)?;
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        if faces.is_empty() {
            return Err(Error::VoidComplex);
        }
        for f in &faces {
            if !f.within(n) {
                let vertex = f.max_vertex().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        let given = faces.len();
        let facets = maximal_elements(faces);
        let dropped = given - facets.len();
        Ok((SimplicialComplex { n, facets }, dropped))
    }

    /// Builds from 1-based vertex lists, e.g. `&[&[1, 2], &[2, 3]]`.
    pub fn from_lists<L: AsRef<[usize]>>(n: usize, faces: &[L]) -> Result<Self> {
        let sets = faces
            .iter()
            .map(|f| VertexSet::from_vertices(n, f.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(n, sets)
    }

    /// Trusted constructor for facet lists that are already a sorted antichain.
    pub(crate) fn from_sorted_antichain(n: usize, facets: Vec<VertexSet>) -> Self {
        debug_assert!(!facets.is_empty());
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex { n, facets }
    }

    /// The complex `{∅}`.
    pub fn empty_face(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        })
    }

    /// The full simplex `⟨[n]⟩`.
    pub fn simplex(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// True for `{∅}`.
    pub fn is_empty_face(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Largest facet cardinality minus one; `-1` for `{∅}`.
    pub fn dimension(&self) -> i64 {
        // facets are sorted by cardinality, so the last one is largest
        self.facets.last().map_or(-1, |f| f.len() as i64 - 1)
    }

    /// Relabels every vertex `v` as `perm(v)`.
    pub fn apply_permutation(&self, perm: &Permutation) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::NotAPermutation(self.n));
        }
        let mut facets: Vec<VertexSet> = self.facets.iter().map(|&f| perm.apply(f)).collect();
        facets.sort_unstable();
        Ok(SimplicialComplex { n: self.n, facets })
    }

    /// Facets as sorted 1-based vertex lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty_face() {
            return f.write_str("{∅}");
        }
        f.write_str("⟨")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str("⟩")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.n, self)
    }
}

/// A bijection on `[n]`, stored as 1-based images: `images[i - 1] = π(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_VERTICES {
            return Err(Error::NotAPermutation(n));
        }
        let mut seen = 0u64;
        for &v in &images {
            if v == 0 || v > n || seen >> (v - 1) & 1 == 1 {
                return Err(Error::NotAPermutation(n));
            }
            seen |= 1 << (v - 1);
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Swaps `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::NotAPermutation(n));
        }
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, vertex: usize) -> usize {
        self.images[vertex - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, set: VertexSet) -> VertexSet {
        let mut bits = 0u64;
        for v in set.iter() {
            bits |= 1u64 << (self.images[v - 1] - 1);
        }
        VertexSet::from_bits(bits)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Self {
        Permutation {
            images: first.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

/// Cycle notation, fixed points omitted: `(1 2)(3 5 4)`; identity is `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 1..=n {
            if seen[start - 1] || self.images[start - 1] == start {
                continue;
            }
            f.write_str("(")?;
            let mut v = start;
            let mut first = true;
            while !seen[v - 1] {
                seen[v - 1] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
                first = false;
                v = self.images[v - 1];
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, faces).unwrap()
    }

    #[test]
    fn non_maximal_faces_are_dropped() {
        let c = cx(3, &[&[1], &[1, 2]]);
        assert_eq!(c.facet_lists(), vec![vec![1, 2]]);
        let (_, dropped) = SimplicialComplex::from_faces_reporting(
            3,
            [
                VertexSet::from_vertices(3, [1]).unwrap(),
                VertexSet::from_vertices(3, [1, 2]).unwrap(),
                VertexSet::from_vertices(3, [1, 2]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(dropped, 2);
    }

    #[test]
    fn empty_face_complex() {
        let c = SimplicialComplex::from_faces(3, [VertexSet::EMPTY]).unwrap();
        assert!(c.is_empty_face());
        assert_eq!(c.dimension(), -1);
        assert_eq!(c, SimplicialComplex::empty_face(3).unwrap());
        assert_eq!(c.to_string(), "{∅}");
        // ∅ next to a nonempty face is absorbed
        let d = SimplicialComplex::from_faces(3, [VertexSet::EMPTY, VertexSet::singleton(2)]).unwrap();
        assert_eq!(d.facet_lists(), vec![vec![2]]);
    }

    #[test]
    fn five_vertex_facets_sorted() {
        let c = cx(5, &[&[1, 2], &[2, 3, 4], &[2, 5], &[4, 5]]);
        assert_eq!(
            c.facet_lists(),
            vec![vec![1, 2], vec![2, 5], vec![4, 5], vec![2, 3, 4]]
        );
        assert_eq!(c.dimension(), 2);
        assert_eq!(c.to_string(), "⟨{1,2},{2,5},{4,5},{2,3,4}⟩");
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            SimplicialComplex::from_faces(3, Vec::new()),
            Err(Error::VoidComplex)
        );
        assert_eq!(
            SimplicialComplex::from_lists(3, &[&[1, 4][..]]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            SimplicialComplex::from_faces(65, [VertexSet::EMPTY]),
            Err(Error::GroundSetSize(65))
        );
        assert_eq!(
            SimplicialComplex::from_faces(3, [VertexSet::from_bits(0b1000)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn dimension_of_simplex() {
        assert_eq!(SimplicialComplex::simplex(3).unwrap().dimension(), 2);
    }

    #[test]
    fn permutation_relabels() {
        let c = cx(3, &[&[1], &[2, 3]]);
        let swap = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(c.apply_permutation(&swap).unwrap(), cx(3, &[&[2], &[1, 3]]));
        assert_eq!(c.apply_permutation(&Permutation::identity(3)).unwrap(), c);
        assert!(c.apply_permutation(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn permutation_validation_and_cycles() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        let p = Permutation::new(vec![2, 1, 5, 3, 4]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 5 4)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(p.after(&p.inverse()).is_identity());
        let q = Permutation::new(vec![3, 1, 2, 4, 5]).unwrap();
        let s = VertexSet::from_vertices(5, [1, 3]).unwrap();
        assert_eq!(p.after(&q).apply(s), p.apply(q.apply(s)));
    }
}
