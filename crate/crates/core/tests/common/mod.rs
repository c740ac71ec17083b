//! Brute-force oracles. Nothing here calls into the search or elimination
//! code it is used to check.
#![allow(dead_code)]

use itertools::Itertools;
use shellgcd::{Complex, Face};

/// Minimal subsets of the universe contained in no facet, by enumerating every subset.
pub fn brute_minimal_nonfaces(c: &Complex) -> Vec<Face> {
    let n = c.n_vertices();
    let is_face = |s: u64| c.facets().iter().any(|f| s & !f.mask() == 0);
    let mut out: Vec<Face> = (0..1u64 << n)
        .filter(|&s| !is_face(s) && (0..n).filter(|&v| s >> v & 1 == 1).all(|v| is_face(s & !(1 << v))))
        .map(Face)
        .collect();
    out.sort();
    out
}

fn popcount(x: u64) -> usize {
    x.count_ones() as usize
}

/// Definition check: the faces of <F_j> ∩ <F_1..F_{j-1}> are the subsets of F_j
/// lying in an earlier facet; all of its maximal faces must have |F_j| - 1 elements.
pub fn brute_is_shelling(seq: &[Face]) -> bool {
    for j in 1..seq.len() {
        let fj = seq[j].mask();
        let in_prefix = |s: u64| seq[..j].iter().any(|f| s & !f.mask() == 0);
        let subsets: Vec<u64> = (0..=fj).filter(|&s| s & !fj == 0 && in_prefix(s)).collect();
        for &s in &subsets {
            let maximal = !subsets.iter().any(|&t| t != s && s & !t == 0);
            if maximal && popcount(s) + 1 != popcount(fj) {
                return false;
            }
        }
    }
    true
}

pub fn brute_is_weak_shelling(seq: &[Face], universe: u64) -> bool {
    let r = seq.len();
    for j in 0..r {
        for i in 0..j {
            let (a, b) = (seq[i].mask(), seq[j].mask());
            if a | b == universe {
                let meet = a & b;
                if !(0..j).filter(|&k| k != i).any(|k| meet & !seq[k].mask() == 0) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn brute_is_strong_gcd(seq: &[Face]) -> bool {
    let r = seq.len();
    for i in 0..r {
        for j in i + 1..r {
            let (a, b) = (seq[i].mask(), seq[j].mask());
            if a & b == 0 && !(i + 1..r).filter(|&k| k != j).any(|k| seq[k].mask() & !(a | b) == 0) {
                return false;
            }
        }
    }
    true
}

pub fn any_permutation(items: &[Face], pred: impl Fn(&[Face]) -> bool) -> bool {
    items.iter().copied().permutations(items.len()).any(|p| pred(&p))
}

/// Rank over GF(p) by column reduction of the transpose, keeping a list of reduced pivot vectors.
pub fn oracle_rank_mod_p(mat: &[Vec<i64>], p: i64) -> usize {
    let ncols = mat.first().map_or(0, Vec::len);
    let mut basis: Vec<(usize, Vec<i64>)> = Vec::new();
    for c in 0..ncols {
        let mut v: Vec<i64> = mat.iter().map(|row| row[c].rem_euclid(p)).collect();
        for (lead, b) in &basis {
            if v[*lead] != 0 {
                let f = v[*lead];
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        if let Some(lead) = v.iter().position(|&x| x != 0) {
            let inv = (1..p).find(|&t| t * v[lead] % p == 1).unwrap();
            for x in v.iter_mut() {
                *x = *x * inv % p;
            }
            for (_, b) in basis.iter_mut() {
                if b[lead] != 0 {
                    let f = b[lead];
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x = (*x - f * y).rem_euclid(p);
                    }
                }
            }
            basis.push((lead, v));
        }
    }
    basis.len()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank over Q by cross-multiplying elimination with row content removal. Small matrices only.
pub fn oracle_rank_rational(mat: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<i128>> = mat.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            if rows[r][c] == 0 {
                continue;
            }
            let (a, b) = (rows[rank][c], rows[r][c]);
            let pivot = rows[rank].clone();
            for (x, y) in rows[r].iter_mut().zip(&pivot) {
                *x = a * *x - b * y;
            }
            let g = rows[r].iter().fold(0, |g, &x| gcd(g, x));
            if g > 1 {
                rows[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers from freshly built boundary matrices and the oracle ranks.
/// `p = None` means the rationals.
pub fn oracle_homology(c: &Complex, p: Option<i64>) -> Vec<usize> {
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); c.n_vertices() + 2];
    let mut all: Vec<u64> = c
        .facets()
        .iter()
        .flat_map(|f| (0..=f.mask()).filter(move |s| s & !f.mask() == 0))
        .collect();
    all.sort();
    all.dedup();
    for s in all {
        by_size[popcount(s)].push(s);
    }
    let top = by_size.iter().rposition(|v| !v.is_empty()).unwrap();
    let rank_of = |k: usize| -> usize {
        // boundary from k-element faces to (k-1)-element faces
        if k == 0 || k > top {
            return 0;
        }
        let mat: Vec<Vec<i64>> = by_size[k - 1]
            .iter()
            .map(|&low| {
                by_size[k]
                    .iter()
                    .map(|&high| {
                        if low & !high != 0 {
                            return 0;
                        }
                        let removed = high & !low;
                        let pos = popcount(high & (removed - 1));
                        if pos.is_multiple_of(2) {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect();
        match p {
            Some(p) => oracle_rank_mod_p(&mat, p),
            None => oracle_rank_rational(&mat),
        }
    };
    (0..=top)
        .map(|k| by_size[k].len() - rank_of(k) - rank_of(k + 1))
        .collect()
}

/// Visits weak shelling orders of `facets` depth-first, pruning failed prefixes, until
/// `budget` prefixes have been expanded. Returns the number of complete orders visited.
pub fn enumerate_weak_orders(facets: &[Face], universe: u64, budget: usize, visit: &mut impl FnMut(&[Face])) -> usize {
    fn go(
        facets: &[Face],
        universe: u64,
        used: &mut Vec<bool>,
        seq: &mut Vec<Face>,
        budget: &mut usize,
        count: &mut usize,
        visit: &mut impl FnMut(&[Face]),
    ) {
        if *budget == 0 {
            return;
        }
        *budget -= 1;
        if seq.len() == facets.len() {
            *count += 1;
            visit(seq);
            return;
        }
        for idx in 0..facets.len() {
            if used[idx] {
                continue;
            }
            seq.push(facets[idx]);
            // only pairs ending at the new position can fail
            let j = seq.len() - 1;
            let ok = (0..j).all(|i| {
                let (a, b) = (seq[i].mask(), seq[j].mask());
                a | b != universe || (0..j).filter(|&k| k != i).any(|k| (a & b) & !seq[k].mask() == 0)
            });
            if ok {
                used[idx] = true;
                go(facets, universe, used, seq, budget, count, visit);
                used[idx] = false;
            }
            seq.pop();
        }
    }
    let (mut count, mut budget) = (0, budget);
    go(
        facets,
        universe,
        &mut vec![false; facets.len()],
        &mut Vec::new(),
        &mut budget,
        &mut count,
        visit,
    );
    count
}

/// Reduced Euler characteristic straight from the face count, ∅ included.
pub fn brute_reduced_euler(c: &Complex) -> i64 {
    (0..1u64 << c.n_vertices())
        .filter(|&s| c.facets().iter().any(|f| s & !f.mask() == 0))
        .map(|s| if popcount(s).is_multiple_of(2) { -1 } else { 1 })
        .sum()
}

/// Exact check that every weak shelling order of `facets` is a shelling order.
/// Both step conditions depend only on the set already placed, so it suffices to
/// walk the prefix sets reachable by weak steps and test each weak step for the
/// shelling condition. Returns a failing prefix set and facet index, if any.
pub fn weak_orders_are_shellings(facets: &[Face], universe: u64) -> Option<(u64, usize)> {
    let r = facets.len();
    assert!(r <= 20, "dense walk only");
    let mut seen = vec![false; 1 << r];
    let mut stack = vec![0u64];
    seen[0] = true;
    while let Some(set) = stack.pop() {
        let placed: Vec<usize> = (0..r).filter(|&i| set >> i & 1 == 1).collect();
        for j in (0..r).filter(|&j| set >> j & 1 == 0) {
            let fj = facets[j].mask();
            let weak_ok = placed.iter().all(|&i| {
                let fi = facets[i].mask();
                fi | fj != universe || placed.iter().any(|&k| k != i && (fi & fj) & !facets[k].mask() == 0)
            });
            if !weak_ok {
                continue;
            }
            if !placed.is_empty() {
                let meets: Vec<u64> = placed.iter().map(|&i| facets[i].mask() & fj).collect();
                let shelling_ok = meets
                    .iter()
                    .filter(|&&m| !meets.iter().any(|&o| o != m && m & !o == 0))
                    .all(|&m| popcount(m) + 1 == popcount(fj));
                if !shelling_ok {
                    return Some((set, j));
                }
            }
            let next = set | 1 << j;
            if !seen[next as usize] {
                seen[next as usize] = true;
                stack.push(next);
            }
        }
    }
    None
}
