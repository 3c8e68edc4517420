//! Non-isomorphic graphs of small order.
//!
//! Graphs of order `n` are obtained by adding a vertex, with every possible
//! neighbor set, to each graph of order `n - 1`, and deduplicating by a
//! brute-force canonical code (maximum over all vertex permutations). That is
//! only practical through order 6; larger catalogs should come from an
//! external enumerator such as nauty's `geng`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 6;

/// Upper-triangle bit `x(i,j)`, `i < j`, in graph6 column order.
fn bit_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn code_under(adj: &[u8], perm: &[usize]) -> u32 {
    let n = perm.len();
    let mut code = 0u32;
    for j in 1..n {
        for i in 0..j {
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                code |= 1 << (31 - bit_index(i, j));
            }
        }
    }
    code
}

fn canonical(adj: &[u8]) -> u32 {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = code_under(adj, &perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.max(code_under(adj, &perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn from_code(n: usize, code: u32) -> Vec<u8> {
    let mut adj = vec![0u8; n];
    for j in 1..n {
        for i in 0..j {
            if code >> (31 - bit_index(i, j)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn to_graph(adj: &[u8]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&w| adj[u] >> w & 1 == 1)
            .map(move |w| (u, w))
    });
    Graph::new(n, edges).expect("catalog graphs are simple")
}

/// Every graph of order exactly `n` up to isomorphism (1, 2, 4, 11, 34, 156
/// for `n = 1..=6`), in a fixed deterministic order.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "built-in catalog covers orders 1..={MAX_ORDER}, got {n}"
        )));
    }
    let mut codes: BTreeSet<u32> = BTreeSet::from([0]);
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let base = from_code(order - 1, code);
            for mask in 0u8..(1 << (order - 1)) {
                let mut adj = base.clone();
                adj.push(mask);
                for (u, row) in adj.iter_mut().enumerate().take(order - 1) {
                    *row |= (mask >> u & 1) << (order - 1);
                }
                next.insert(canonical(&adj));
            }
        }
        codes = next;
    }
    Ok(codes
        .iter()
        .rev()
        .map(|&c| to_graph(&from_code(n, c)))
        .collect())
}

/// All graphs of order `1..=max_order`, smaller orders first.
pub fn graphs_up_to(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(graphs_of_order(n)?);
    }
    Ok(out)
}
