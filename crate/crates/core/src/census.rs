//! Exhaustive enumeration of complexes on small ground sets.
//!
//! The universe on `[n]` holds every nonvoid complex: each nonempty
//! antichain of nonempty subsets, plus `{∅}`. Its size is the Dedekind
//! number `M(n)` minus one (only the empty antichain is excluded).

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::complex::SimplicialComplex;
use crate::dualize::nf_step;
use crate::error::{Error, Result};
use crate::orbit::{nf_period_with, OrbitConfig};
use crate::vertex_set::VertexSet;

pub const MIN_CENSUS_N: usize = 2;
pub const MAX_CENSUS_N: usize = 5;

/// Every complex on `[n]`, sorted in storage order.
#[derive(Debug, Clone)]
pub struct Universe {
    n: usize,
    complexes: Vec<SimplicialComplex>,
    index: HashMap<SimplicialComplex, usize>,
}

impl Universe {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn complexes(&self) -> &[SimplicialComplex] {
        &self.complexes
    }

    pub fn len(&self) -> usize {
        self.complexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complexes.is_empty()
    }

    pub fn index_of(&self, complex: &SimplicialComplex) -> Option<usize> {
        self.index.get(complex).copied()
    }
}

fn check_cap(n: usize) -> Result<()> {
    if (MIN_CENSUS_N..=MAX_CENSUS_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::CensusCap(n))
    }
}

/// Depth-first antichain construction over the nonempty subsets of `[n]`
/// in decreasing bit-pattern order.
pub fn enumerate_complexes(n: usize) -> Result<Universe> {
    check_cap(n)?;
    let subsets: Vec<VertexSet> = (1u64..1 << n).rev().map(VertexSet::from_bits).collect();
    let mut complexes = vec![SimplicialComplex::empty_face(n)?];

    fn extend(
        n: usize,
        subsets: &[VertexSet],
        start: usize,
        chosen: &mut Vec<VertexSet>,
        out: &mut Vec<SimplicialComplex>,
    ) {
        for idx in start..subsets.len() {
            let s = subsets[idx];
            if chosen.iter().any(|&c| s.is_subset(c) || c.is_subset(s)) {
                continue;
            }
            chosen.push(s);
            let mut facets = chosen.clone();
            facets.sort_unstable();
            out.push(SimplicialComplex::from_sorted_antichain(n, facets));
            extend(n, subsets, idx + 1, chosen, out);
            chosen.pop();
        }
    }
    extend(n, &subsets, 0, &mut Vec::new(), &mut complexes);

    complexes.sort_unstable();
    let index = complexes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    Ok(Universe { n, complexes, index })
}

/// `nf_step` image of every universe member, by index. `None` marks an
/// image outside the universe, which would be a bug in the step.
fn step_table(universe: &Universe, threads: usize) -> Vec<Option<usize>> {
    let compute = || -> Vec<Option<usize>> {
        universe
            .complexes
            .par_iter()
            .map(|c| universe.index_of(&nf_step(c)))
            .collect()
    };
    if threads <= 1 {
        universe
            .complexes
            .iter()
            .map(|c| universe.index_of(&nf_step(c)))
            .collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map(|pool| pool.install(compute))
            .unwrap_or_else(|_| compute())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub universe_size: usize,
    /// Pairs of distinct complexes with the same image.
    pub collisions: Vec<(SimplicialComplex, SimplicialComplex)>,
    /// Complexes whose image is not in the universe.
    pub escapes: Vec<SimplicialComplex>,
}

impl BijectionReport {
    pub fn is_bijection(&self) -> bool {
        self.collisions.is_empty() && self.escapes.is_empty()
    }
}

fn bijection_report(universe: &Universe, table: &[Option<usize>]) -> BijectionReport {
    let mut preimage: HashMap<usize, usize> = HashMap::new();
    let mut collisions = Vec::new();
    let mut escapes = Vec::new();
    for (i, image) in table.iter().enumerate() {
        match image {
            None => escapes.push(universe.complexes[i].clone()),
            Some(j) => {
                if let Some(&other) = preimage.get(j) {
                    collisions.push((universe.complexes[other].clone(), universe.complexes[i].clone()));
                } else {
                    preimage.insert(*j, i);
                }
            }
        }
    }
    BijectionReport {
        n: universe.n,
        universe_size: universe.len(),
        collisions,
        escapes,
    }
}

/// Checks that the NF-step permutes the universe on `[n]`.
pub fn verify_bijection(n: usize) -> Result<BijectionReport> {
    let universe = enumerate_complexes(n)?;
    let table = step_table(&universe, 1);
    Ok(bijection_report(&universe, &table))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub threads: usize,
    /// Also count classes of the coarser relation generated by
    /// NF-equivalence and isomorphism.
    pub up_to_iso: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            threads: 1,
            up_to_iso: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub n: usize,
    pub universe_size: usize,
    pub bijection: BijectionReport,
    /// NF-equivalence classes (cycles), each listed from its smallest member
    /// in storage order, classes ordered by that member.
    pub classes: Vec<Vec<SimplicialComplex>>,
    /// Class count after also identifying isomorphic complexes.
    pub classes_up_to_iso: Option<usize>,
}

impl CensusReport {
    /// `NF(n)`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class size → number of classes of that size.
    pub fn size_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for c in &self.classes {
            *h.entry(c.len()).or_insert(0) += 1;
        }
        h
    }

    pub fn representatives(&self) -> Vec<&SimplicialComplex> {
        self.classes.iter().map(|c| &c[0]).collect()
    }
}

pub fn census(n: usize, options: &CensusOptions) -> Result<CensusReport> {
    let universe = enumerate_complexes(n)?;
    let table = step_table(&universe, options.threads);
    let bijection = bijection_report(&universe, &table);

    // sweep in storage order; each unvisited complex starts a new cycle
    let mut visited = vec![false; universe.len()];
    let mut classes = Vec::new();
    for start in 0..universe.len() {
        if visited[start] {
            continue;
        }
        let mut class = Vec::new();
        let mut cur = start;
        while !visited[cur] {
            visited[cur] = true;
            class.push(universe.complexes[cur].clone());
            match table[cur] {
                Some(next) => cur = next,
                None => break,
            }
        }
        classes.push(class);
    }

    let classes_up_to_iso = options.up_to_iso.then(|| {
        let mut parent: Vec<usize> = (0..universe.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };
        for (i, image) in table.iter().enumerate() {
            if let Some(j) = image {
                union(&mut parent, i, *j);
            }
        }
        let mut by_form: HashMap<_, usize> = HashMap::new();
        for (i, c) in universe.complexes.iter().enumerate() {
            let form = canonical_form(c);
            match by_form.get(&form) {
                Some(&j) => union(&mut parent, i, j),
                None => {
                    by_form.insert(form, i);
                }
            }
        }
        (0..universe.len()).filter(|&i| find(&mut parent, i) == i).count()
    });

    Ok(CensusReport {
        n,
        universe_size: universe.len(),
        bijection,
        classes,
        classes_up_to_iso,
    })
}

/// `NF(n)`: the number of cycles of the NF-step on the universe.
pub fn nf_class_count(n: usize) -> Result<usize> {
    census(n, &CensusOptions::default()).map(|r| r.class_count())
}

/// The NF-equivalence class of a complex: its orbit `[Δ, δ(Δ), …]` of
/// length equal to the period.
pub fn class_of(complex: &SimplicialComplex) -> Result<Vec<SimplicialComplex>> {
    class_of_with(complex, &OrbitConfig::default())
}

pub fn class_of_with(complex: &SimplicialComplex, config: &OrbitConfig) -> Result<Vec<SimplicialComplex>> {
    let period = nf_period_with(complex, config)?;
    let mut out = Vec::with_capacity(period as usize);
    let mut cur = complex.clone();
    for _ in 0..period {
        let next = nf_step(&cur);
        out.push(cur);
        cur = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, faces).unwrap()
    }

    #[test]
    fn universe_on_two_vertices() {
        let u = enumerate_complexes(2).unwrap();
        let expected = [
            SimplicialComplex::empty_face(2).unwrap(),
            cx(2, &[&[1]]),
            cx(2, &[&[1], &[2]]),
            cx(2, &[&[2]]),
            cx(2, &[&[1, 2]]),
        ];
        assert_eq!(u.complexes(), &expected[..]);
        assert_eq!(u.index_of(&cx(2, &[&[2]])), Some(3));
    }

    #[test]
    fn census_caps() {
        assert_eq!(enumerate_complexes(1).unwrap_err(), Error::CensusCap(1));
        assert_eq!(enumerate_complexes(6).unwrap_err(), Error::CensusCap(6));
    }

    #[test]
    fn two_vertex_classes() {
        let report = census(2, &CensusOptions::default()).unwrap();
        assert!(report.bijection.is_bijection());
        assert_eq!(report.class_count(), 2);
        let e = SimplicialComplex::empty_face(2).unwrap();
        assert_eq!(
            report.classes[0],
            vec![e, cx(2, &[&[1, 2]]), cx(2, &[&[1], &[2]])]
        );
        assert_eq!(report.classes[1], vec![cx(2, &[&[1]]), cx(2, &[&[2]])]);
        assert_eq!(report.size_histogram().into_iter().collect::<Vec<_>>(), vec![(2, 1), (3, 1)]);
    }

    #[test]
    fn class_of_examples() {
        assert_eq!(class_of(&cx(2, &[&[1]])).unwrap(), vec![cx(2, &[&[1]]), cx(2, &[&[2]])]);
        let e = SimplicialComplex::empty_face(3).unwrap();
        let class = class_of(&e).unwrap();
        assert_eq!(class.len(), 4);
        assert_eq!(class[2], cx(3, &[&[1, 2], &[2, 3], &[1, 3]]));
    }

    #[test]
    fn threads_do_not_change_numbers() {
        let serial = census(4, &CensusOptions::default()).unwrap();
        let parallel = census(4, &CensusOptions { threads: 4, up_to_iso: false }).unwrap();
        assert_eq!(serial.classes, parallel.classes);
    }

    #[test]
    fn up_to_iso_is_coarser() {
        let report = census(3, &CensusOptions { threads: 1, up_to_iso: true }).unwrap();
        let iso = report.classes_up_to_iso.unwrap();
        assert!(iso >= 1 && iso <= report.class_count());
    }
}
