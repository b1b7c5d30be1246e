//! Family literals such as `path:8`, `knm:3,4` or `closed-form:3,4,k=6`.

use crate::families::{
    complete, complete_bipartite, cycle, knm, knm_facets_closed_form, path, BlockSplit,
};
use crate::{Error, Permutation, SimplicialComplex};

fn numbers(args: &str) -> Result<Vec<usize>, Error> {
    args.split(',')
        .map(|a| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("family argument `{a}` is not a nonnegative integer")))
        })
        .collect()
}

fn one(name: &str, args: &str) -> Result<usize, Error> {
    match numbers(args)?.as_slice() {
        [n] => Ok(*n),
        _ => Err(Error::Parse(format!("family `{name}` takes one argument"))),
    }
}

fn two(name: &str, args: &str) -> Result<(usize, usize), Error> {
    match numbers(args)?.as_slice() {
        [n, m] => Ok((*n, *m)),
        _ => Err(Error::Parse(format!("family `{name}` takes two arguments"))),
    }
}

/// Parses `n,m,k=K` (the `k=` prefix is optional).
pub fn closed_form_args(args: &str) -> Result<(usize, usize, usize), Error> {
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("closed form expects `n,m,k=K`, got `{args}`")));
    }
    let k = parts[2].strip_prefix("k=").unwrap_or(parts[2]);
    let nums = numbers(&format!("{},{},{}", parts[0], parts[1], k))?;
    Ok((nums[0], nums[1], nums[2]))
}

/// Closed form for `δ^(k)(K_n ⊔ K_m)`. When `n > m` the blocks are swapped
/// for the computation and the result is relabeled back onto `1..=n` /
/// `n+1..=n+m`.
pub fn closed_form(n: usize, m: usize, k: usize) -> Result<SimplicialComplex, Error> {
    if n <= m {
        return knm_facets_closed_form(BlockSplit::new(n, m)?, k);
    }
    let swapped = knm_facets_closed_form(BlockSplit::new(m, n)?, k)?;
    // swapped labels: 1..=m is the original second block, m+1..=m+n the first
    let images: Vec<usize> = (1..=n + m).map(|v| if v <= m { n + v } else { v - m }).collect();
    swapped.apply_permutation(&Permutation::new(images)?)
}

/// Resolves `name:args`; `None` if `text` is not a literal.
pub fn parse_family(text: &str) -> Option<Result<SimplicialComplex, Error>> {
    let (name, args) = text.split_once(':')?;
    let result = match name {
        "path" => one(name, args).and_then(path),
        "cycle" => one(name, args).and_then(cycle),
        "complete" => one(name, args).and_then(complete),
        "knm" => two(name, args).and_then(|(n, m)| knm(n, m)),
        "bipartite" => two(name, args).and_then(|(n, m)| complete_bipartite(n, m)),
        "empty" => one(name, args).and_then(SimplicialComplex::empty_face),
        "simplex" => one(name, args).and_then(SimplicialComplex::simplex),
        "closed-form" => closed_form_args(args).and_then(|(n, m, k)| closed_form(n, m, k)),
        _ => return None,
    };
    Some(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_family("path:4").unwrap().unwrap(), path(4).unwrap());
        assert_eq!(parse_family("knm:2,3").unwrap().unwrap(), knm(2, 3).unwrap());
        assert!(parse_family("empty:3").unwrap().unwrap().is_empty_face());
        assert!(parse_family("path:x").unwrap().is_err());
        assert!(parse_family("knm:3").unwrap().is_err());
        assert!(parse_family("nosuch:3").is_none());
        assert!(parse_family("file.json").is_none());
        assert_eq!(closed_form_args("3,4,k=6").unwrap(), (3, 4, 6));
        assert_eq!(closed_form_args("3,4,6").unwrap(), (3, 4, 6));
    }

    #[test]
    fn swapped_blocks_relabel_back() {
        for k in 0..=9 {
            let direct = closed_form(4, 3, k).unwrap();
            let iterated = crate::nf_iterate(&knm(4, 3).unwrap(), k as u64);
            assert_eq!(direct, iterated, "k = {k}");
        }
    }
}
