//! Independent oracles shared by the integration and acceptance tests.
//! Nothing here goes through the library's operator or graph code paths.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rnpoly::{DegreeSequence, Monomial, Multigraph, Polynomial};

/// Monomial as a sorted factor list, largest first.
pub type Factors = Vec<u32>;

/// Rational-coefficient polynomial keyed by factor lists.
pub type RatPoly = BTreeMap<Factors, BigRational>;

fn sorted(mut f: Factors) -> Factors {
    f.sort_unstable_by(|a, b| b.cmp(a));
    f
}

fn add(p: &mut RatPoly, f: Factors, c: BigRational) {
    let e = p.entry(sorted(f)).or_insert_with(BigRational::zero);
    *e += c;
}

fn choose(n: u32, k: u32) -> BigInt {
    // Pascal's triangle row
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

/// Pair-raising operator, literally over factor positions `i < j`.
pub fn oracle_l(p: &RatPoly) -> RatPoly {
    let mut out = RatPoly::new();
    for (f, c) in p {
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let mut g = f.clone();
                g[i] += 1;
                g[j] += 1;
                add(&mut out, g, c.clone());
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Splitting operator with the `-1/2` kept as a rational.
pub fn oracle_h(p: &RatPoly) -> RatPoly {
    let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let mut out = RatPoly::new();
    for (f, c) in p {
        for k in 0..f.len() {
            let a = f[k];
            for l in 1..a {
                let mut g: Factors = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, &x)| x)
                    .collect();
                g.push(1 + l);
                g.push(1 + a - l);
                let w = BigRational::from_integer(choose(a, l)) * &half * c;
                add(&mut out, g, w);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn oracle_a(n: u32) -> RatPoly {
    let mut out = RatPoly::new();
    for k in 1..n {
        add(
            &mut out,
            vec![1 + k, 1 + n - k, n],
            -BigRational::from_integer(choose(n, k)),
        );
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn rat_sum(a: RatPoly, b: RatPoly) -> RatPoly {
    let mut out = a;
    for (f, c) in b {
        add(&mut out, f, c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `R_2, ..., R_max` by the recursion over rationals.
pub fn oracle_r_sequence(max: u32) -> Vec<RatPoly> {
    let mut out = vec![RatPoly::new()];
    for n in 2..max {
        let prev = out.last().unwrap();
        let next = rat_sum(rat_sum(oracle_a(n), oracle_l(prev)), oracle_h(prev));
        out.push(next);
    }
    out
}

pub fn to_rat(p: &Polynomial) -> RatPoly {
    p.terms()
        .map(|(m, c)| {
            (
                m.factors_desc().collect(),
                BigRational::from_integer(c.clone()),
            )
        })
        .collect()
}

pub fn from_factors(terms: &[(&[u32], i64)]) -> Polynomial {
    Polynomial::from_terms(
        terms
            .iter()
            .map(|&(f, c)| (Monomial::from_factors(f).unwrap(), BigInt::from(c))),
    )
}

/// Number of partitions of `k` by the coin-change table.
pub fn naive_partition_count(k: usize) -> BigUint {
    let mut ways = vec![BigUint::zero(); k + 1];
    ways[0] = BigUint::one();
    for part in 1..=k {
        for total in part..=k {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways[k].clone()
}

fn components(vertices: &[usize], edges: &[(usize, usize)]) -> usize {
    let idx: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        r
    }
    let mut count = vertices.len();
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, idx[&u]), find(&mut parent, idx[&v]));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

/// Cut-vertices straight from the definition: `|E| >= 2` and deleting the
/// vertex (with its edges) increases the component count.
pub fn brute_cut_vertices(vertex_count: usize, edges: &[(usize, usize)]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    if edges.len() < 2 {
        return out;
    }
    let all: Vec<usize> = (0..vertex_count).collect();
    let base = components(&all, edges);
    for v in 0..vertex_count {
        let rest: Vec<usize> = all.iter().copied().filter(|&x| x != v).collect();
        let kept: Vec<_> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        if components(&rest, &kept) > base {
            out.insert(v);
        }
    }
    out
}

pub fn brute_nonseparable(vertex_count: usize, edges: &[(usize, usize)]) -> bool {
    let all: Vec<usize> = (0..vertex_count).collect();
    components(&all, edges) == 1 && brute_cut_vertices(vertex_count, edges).is_empty()
}

/// Every loopless multigraph on `vertex_count` labelled vertices with exactly
/// `edge_count` edges (multisets of vertex pairs).
pub fn multigraphs(
    vertex_count: usize,
    edge_count: usize,
    visit: &mut impl FnMut(&[(usize, usize)]),
) {
    let mut pairs = Vec::new();
    for u in 0..vertex_count {
        for v in u + 1..vertex_count {
            pairs.push((u, v));
        }
    }
    fn rec(
        pairs: &[(usize, usize)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        visit: &mut impl FnMut(&[(usize, usize)]),
    ) {
        if left == 0 {
            visit(cur);
            return;
        }
        for i in start..pairs.len() {
            cur.push(pairs[i]);
            rec(pairs, i, left - 1, cur, visit);
            cur.pop();
        }
    }
    rec(&pairs, 0, edge_count, &mut Vec::new(), visit);
}

/// `(vertex count, edges)`
pub type EdgeList = (usize, Vec<(usize, usize)>);

/// Compares the library's cut-vertex routine with the brute force on every
/// loopless multigraph with up to `max_vertices` vertices and `max_edges`
/// edges. Returns `(graphs checked, first mismatch)`.
pub fn cut_vertex_sweep(max_vertices: usize, max_edges: usize) -> (usize, Option<EdgeList>) {
    let mut checked = 0;
    let mut mismatch = None;
    for vc in 1..=max_vertices {
        for ec in 0..=max_edges {
            multigraphs(vc, ec, &mut |edges| {
                if mismatch.is_some() {
                    return;
                }
                checked += 1;
                let g = Multigraph::new(vc, edges.iter().copied()).unwrap();
                let fast = rnpoly::graph::cut_vertices(&g);
                let slow = brute_cut_vertices(vc, edges);
                let ns = rnpoly::graph::is_nonseparable(&g);
                if fast != slow || ns != brute_nonseparable(vc, edges) {
                    mismatch = Some((vc, edges.to_vec()));
                }
            });
        }
    }
    (checked, mismatch)
}

/// Degree sequences (parts >= 2, length >= 2) with sum at most `max_sum`
/// that some non-separable loopless multigraph realizes, by exhaustive
/// search. Every vertex has degree >= 2, so at most `max_sum / 2` vertices
/// and edges are needed.
pub fn realizable_nonseparable_sequences(max_sum: u32) -> BTreeSet<DegreeSequence> {
    let max_edges = (max_sum / 2) as usize;
    let mut out = BTreeSet::new();
    for vc in 2..=max_edges {
        for ec in 1..=max_edges {
            multigraphs(vc, ec, &mut |edges| {
                let mut deg = vec![0u32; vc];
                for &(u, v) in edges {
                    deg[u] += 1;
                    deg[v] += 1;
                }
                if deg.iter().all(|&d| d >= 2) && brute_nonseparable(vc, edges) {
                    out.insert(DegreeSequence::from_unsorted(deg));
                }
            });
        }
    }
    out
}

/// Multisets of integers >= 2 of length >= 2 and sum in `4..=max_sum`.
pub fn candidate_sequences(max_sum: u32) -> Vec<DegreeSequence> {
    fn rec(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<DegreeSequence>) {
        if left == 0 {
            if cur.len() >= 2 {
                out.push(DegreeSequence::new(cur.clone()).unwrap());
            }
            return;
        }
        for p in (2..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for s in 4..=max_sum {
        rec(s, s, &mut Vec::new(), &mut out);
    }
    out
}

/// The first few `R_n` as printed in the literature.
pub fn listed(n: u32) -> Polynomial {
    match n {
        2 => Polynomial::zero(),
        3 => from_factors(&[(&[2, 2, 2], -2)]),
        4 => from_factors(&[(&[2, 3, 3], -12), (&[2, 2, 2, 2], 6)]),
        5 => from_factors(&[
            (&[2, 4, 4], -20),
            (&[3, 3, 4], -30),
            (&[2, 2, 3, 3], 120),
            (&[2, 2, 2, 2, 2], -24),
        ]),
        6 => from_factors(&[
            (&[2, 5, 5], -30),
            (&[3, 4, 5], -120),
            (&[2, 3, 3, 4], 900),
            (&[2, 2, 4, 4], 300),
            (&[4, 4, 4], -30),
            (&[2, 2, 2, 3, 3], -1200),
            (&[3, 3, 3, 3], 210),
            (&[2, 2, 2, 2, 2, 2], 120),
        ]),
        _ => unreachable!(),
    }
}
