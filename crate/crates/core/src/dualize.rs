//! Minimal vertex covers and the NF-step.
//!
//! The minimal vertex covers of a complex are the supports of the primary
//! components of its facet ideal; their complements are the facets of the
//! Stanley–Reisner complex of that ideal.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// The minimal vertex covers of a complex, sorted like facets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverFamily {
    n: usize,
    covers: Vec<VertexSet>,
}

impl CoverFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[VertexSet] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    /// Each cover as a prime ideal in `x1..xn`, e.g. `(x2, x4)`.
    pub fn ideal_components(&self) -> Vec<String> {
        self.covers
            .iter()
            .map(|c| {
                let vars: Vec<String> = c.iter().map(|v| format!("x{v}")).collect();
                format!("({})", vars.join(", "))
            })
            .collect()
    }

    pub fn cover_lists(&self) -> Vec<Vec<usize>> {
        self.covers.iter().map(|c| c.to_vec()).collect()
    }
}

/// True iff `cover` meets every facet. Never true for `{∅}`.
pub fn is_vertex_cover(complex: &SimplicialComplex, cover: VertexSet) -> bool {
    complex.facets().iter().all(|&f| f.intersects(cover))
}

/// Minimal transversals by Berge multiplication over the facets in stored
/// order.
pub fn minimal_vertex_covers(complex: &SimplicialComplex) -> Result<CoverFamily> {
    if complex.is_empty_face() {
        return Err(Error::EmptyFacetCover);
    }
    let mut transversals = vec![VertexSet::EMPTY];
    let mut extended: Vec<VertexSet> = Vec::new();
    for &facet in complex.facets() {
        extended.clear();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(transversals.len());
        for &t in &transversals {
            if t.intersects(facet) {
                // still minimal: every vertex of t is needed for an earlier facet
                kept.push(t);
            } else {
                extended.extend(facet.iter().map(|v| {
                    let mut s = t;
                    s.insert(v);
                    s
                }));
            }
        }
        if extended.is_empty() {
            transversals = kept;
            continue;
        }
        extended.sort_unstable();
        extended.dedup();
        kept.sort_unstable();
        transversals = merge_minimal(kept, &extended);
    }
    transversals.sort_unstable();
    Ok(CoverFamily {
        n: complex.n(),
        covers: transversals,
    })
}

/// Merges `minimal` (already an antichain of transversals) with sorted
/// `candidates`, dropping any candidate that properly contains another member.
/// A proper subset is strictly smaller, so each candidate is only compared
/// against members of lower cardinality.
fn merge_minimal(minimal: Vec<VertexSet>, candidates: &[VertexSet]) -> Vec<VertexSet> {
    let mut buckets: Vec<Vec<VertexSet>> = Vec::new();
    let bucket = |buckets: &mut Vec<Vec<VertexSet>>, s: VertexSet| {
        let k = s.len();
        if buckets.len() <= k {
            buckets.resize_with(k + 1, Vec::new);
        }
        buckets[k].push(s);
    };
    for &s in &minimal {
        bucket(&mut buckets, s);
    }
    // candidates ascend by cardinality, so smaller accepted ones are already bucketed
    for &s in candidates {
        let k = s.len();
        let dominated = buckets
            .iter()
            .take(k)
            .flatten()
            .any(|&t| t.is_subset(s));
        let duplicate = buckets.get(k).is_some_and(|b| b.contains(&s));
        if !dominated && !duplicate {
            bucket(&mut buckets, s);
        }
    }
    buckets.into_iter().flatten().collect()
}

/// Enumerates all `2^n` subsets and keeps the inclusion-minimal covers.
/// Independent of the Berge route; meant as a test oracle.
pub fn minimal_vertex_covers_bruteforce(complex: &SimplicialComplex) -> Result<CoverFamily> {
    let n = complex.n();
    if n > 20 {
        return Err(Error::OracleCap(n));
    }
    if complex.is_empty_face() {
        return Err(Error::EmptyFacetCover);
    }
    let is_cover = |mask: u64| complex.facets().iter().all(|f| f.bits() & mask != 0);
    let mut covers: Vec<VertexSet> = (0u64..1 << n)
        .filter(|&mask| is_cover(mask))
        .filter(|&mask| {
            (0..n)
                .filter(|&b| mask >> b & 1 == 1)
                .all(|b| !is_cover(mask & !(1 << b)))
        })
        .map(VertexSet::from_bits)
        .collect();
    covers.sort_unstable();
    Ok(CoverFamily { n, covers })
}

/// One NF-step: the Stanley–Reisner complex of the facet ideal.
///
/// `{∅}` has facet ideal `(0)` and maps to the full simplex. Otherwise the
/// facets of the result are the complements of the minimal vertex covers.
pub fn nf_step(complex: &SimplicialComplex) -> SimplicialComplex {
    let n = complex.n();
    if complex.is_empty_face() {
        return SimplicialComplex::from_sorted_antichain(n, vec![VertexSet::full(n)]);
    }
    let covers = minimal_vertex_covers(complex).expect("non-{∅} complexes have covers");
    let mut facets: Vec<VertexSet> = covers.covers.iter().map(|c| c.complement(n)).collect();
    facets.sort_unstable();
    SimplicialComplex::from_sorted_antichain(n, facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, faces).unwrap()
    }

    fn sets(n: usize, lists: &[&[usize]]) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = lists
            .iter()
            .map(|l| VertexSet::from_vertices(n, l.iter().copied()).unwrap())
            .collect();
        v.sort();
        v
    }

    fn five_vertex() -> SimplicialComplex {
        cx(5, &[&[1, 2], &[2, 3, 4], &[2, 5], &[4, 5]])
    }

    #[test]
    fn is_vertex_cover_cases() {
        let simplex = SimplicialComplex::simplex(4).unwrap();
        assert!(is_vertex_cover(&simplex, VertexSet::singleton(1)));
        let e = SimplicialComplex::empty_face(4).unwrap();
        assert!(!is_vertex_cover(&e, VertexSet::full(4)));
        let c24 = VertexSet::from_vertices(5, [2, 4]).unwrap();
        assert!(is_vertex_cover(&five_vertex(), c24));
    }

    #[test]
    fn five_vertex_covers() {
        let covers = minimal_vertex_covers(&five_vertex()).unwrap();
        assert_eq!(
            covers.covers(),
            &sets(5, &[&[2, 4], &[2, 5], &[1, 3, 5], &[1, 4, 5]])[..]
        );
        assert_eq!(
            covers.ideal_components(),
            vec!["(x2, x4)", "(x2, x5)", "(x1, x3, x5)", "(x1, x4, x5)"]
        );
        assert_eq!(minimal_vertex_covers_bruteforce(&five_vertex()).unwrap(), covers);
    }

    #[test]
    fn simplex_covers_are_singletons() {
        for n in 1..=6 {
            let covers = minimal_vertex_covers(&SimplicialComplex::simplex(n).unwrap()).unwrap();
            let expected: Vec<VertexSet> = (1..=n).map(VertexSet::singleton).collect();
            assert_eq!(covers.covers(), &expected[..]);
        }
    }

    #[test]
    fn empty_face_has_no_covers() {
        let e = SimplicialComplex::empty_face(3).unwrap();
        assert_eq!(minimal_vertex_covers(&e), Err(Error::EmptyFacetCover));
        assert_eq!(minimal_vertex_covers_bruteforce(&e), Err(Error::EmptyFacetCover));
    }

    #[test]
    fn bruteforce_small_and_capped() {
        let c = cx(2, &[&[1], &[2]]);
        assert_eq!(
            minimal_vertex_covers_bruteforce(&c).unwrap().covers(),
            &sets(2, &[&[1, 2]])[..]
        );
        let big = SimplicialComplex::simplex(21).unwrap();
        assert_eq!(minimal_vertex_covers_bruteforce(&big), Err(Error::OracleCap(21)));
    }

    #[test]
    fn step_examples() {
        assert_eq!(
            nf_step(&five_vertex()),
            cx(5, &[&[2, 3], &[2, 4], &[1, 3, 4], &[1, 3, 5]])
        );
        // frozen from the brute-force oracle
        let second = nf_step(&nf_step(&five_vertex()));
        assert_eq!(second, cx(5, &[&[1, 3], &[1, 2, 5], &[1, 4, 5], &[3, 4, 5]]));
        assert_eq!(
            minimal_vertex_covers_bruteforce(&nf_step(&five_vertex())).unwrap().covers(),
            &sets(5, &[&[1, 2], &[2, 3], &[3, 4], &[2, 4, 5]])[..]
        );
        let p4 = cx(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(nf_step(&p4), cx(4, &[&[1, 3], &[1, 4], &[2, 4]]));
    }

    #[test]
    fn empty_face_cycle_on_three_vertices() {
        let e = SimplicialComplex::empty_face(3).unwrap();
        let s1 = nf_step(&e);
        assert_eq!(s1, SimplicialComplex::simplex(3).unwrap());
        let s2 = nf_step(&s1);
        assert_eq!(s2, cx(3, &[&[1, 2], &[2, 3], &[1, 3]]));
        let s3 = nf_step(&s2);
        assert_eq!(s3, cx(3, &[&[1], &[2], &[3]]));
        assert_eq!(nf_step(&s3), e);
    }

    #[test]
    fn isolated_vertices_keep_ground_set() {
        let c = cx(3, &[&[1], &[2, 3]]);
        assert_eq!(nf_step(&c), cx(3, &[&[2], &[3]]));
        assert_eq!(nf_step(&nf_step(&c)), cx(3, &[&[1]]));
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            let mask = VertexSet::full(n).bits();
            prop::collection::vec(any::<u64>(), 1..10).prop_map(move |raw| {
                SimplicialComplex::from_faces(n, raw.into_iter().map(|b| VertexSet::from_bits(b & mask)))
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn berge_matches_bruteforce(c in arb_complex(8)) {
            prop_assume!(!c.is_empty_face());
            prop_assert_eq!(minimal_vertex_covers(&c).unwrap(), minimal_vertex_covers_bruteforce(&c).unwrap());
        }

        #[test]
        fn covers_are_minimal_covers(c in arb_complex(8)) {
            prop_assume!(!c.is_empty_face());
            for &cover in minimal_vertex_covers(&c).unwrap().covers() {
                prop_assert!(is_vertex_cover(&c, cover));
                for v in cover.iter() {
                    let mut smaller = cover;
                    smaller.remove(v);
                    prop_assert!(!is_vertex_cover(&c, smaller));
                }
            }
        }

        #[test]
        fn step_is_complement_of_covers(c in arb_complex(8)) {
            prop_assume!(!c.is_empty_face());
            let n = c.n();
            let mut expected: Vec<VertexSet> = minimal_vertex_covers(&c).unwrap()
                .covers().iter().map(|m| m.complement(n)).collect();
            expected.sort();
            let step = nf_step(&c);
            prop_assert_eq!(step.facets(), &expected[..]);
            prop_assert_eq!(step.n(), n);
        }
    }

    #[test]
    fn discrete_and_empty_face_steps() {
        for n in 1..=6 {
            let points = SimplicialComplex::from_faces(n, (1..=n).map(VertexSet::singleton)).unwrap();
            assert!(nf_step(&points).is_empty_face());
            assert_eq!(
                nf_step(&SimplicialComplex::empty_face(n).unwrap()),
                SimplicialComplex::simplex(n).unwrap()
            );
        }
    }
}
