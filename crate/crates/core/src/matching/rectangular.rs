use crate::error::{Error, Result};
use crate::hypergraph::{Edge, EdgePart, HypergraphSpec, Matching, Vertex};
use crate::numtheory::frobenius_decompose;

use super::divisibility::{contract, expand};
use super::{MatchOptions, MatchingReport};

fn singleton_edge(vertices: &[Vertex]) -> Edge {
    Edge::new(vertices.iter().map(|v| EdgePart::new(v.class, vec![v.row])).collect())
}

/// Edges of one `r × r` or `r × (r+1)` block whose top-left cell is `(first_class, top)`.
fn block_edges(r: usize, width: usize, first_class: usize, top: usize) -> Vec<Vec<Vertex>> {
    let row = |i: usize| top + i;
    let col = |j: usize| first_class + j;
    if width == r {
        return (0..r).map(|i| (0..r).map(|j| Vertex::new(col(j), row(i))).collect()).collect();
    }
    let mut edges: Vec<Vec<Vertex>> =
        (0..r).map(|i| (0..=r).filter(|&j| j != i).map(|j| Vertex::new(col(j), row(i))).collect()).collect();
    edges.push((0..r).map(|i| Vertex::new(col(i), row(i))).collect());
    edges
}

/// Maximum matching for `σ = (1, …, 1)`: `⌊nq/r⌋` edges, `nq mod r` unmatched vertices.
///
/// Requires `n >= (r+1)²` and `q >= r` unless `options.permissive`.
pub fn all_ones_maximum_matching(spec: &HypergraphSpec, options: MatchOptions) -> Result<MatchingReport> {
    let (n, q, r) = (spec.n(), spec.q(), spec.r());
    if spec.sigma().largest() != 1 {
        return Err(Error::regime(format!("{} is not all ones", spec.sigma())));
    }
    let mut failures = Vec::new();
    if n < (r + 1) * (r + 1) {
        failures.push(format!("n = {n} < (r+1)^2 = {}", (r + 1) * (r + 1)));
    }
    if q < r {
        failures.push(format!("q = {q} < r = {r}"));
    }
    if !failures.is_empty() && !options.permissive {
        return Err(Error::regime(failures.join(", ")));
    }

    let (x, y) = frobenius_decompose(n as u64, r as u64, r as u64 + 1)?;
    let (x, y) = (x as usize, y as usize);
    let mut blocks = Vec::with_capacity(x + y);
    let mut class = 1;
    for width in std::iter::repeat(r).take(x).chain(std::iter::repeat(r + 1).take(y)) {
        blocks.push((class, width));
        class += width;
    }

    let bands = q / r;
    let t = q % r;
    let full_groups = n / r;
    let g = n % r;

    // band 0 is kept per block so that corner chunks can be absorbed
    let mut donors: Vec<Vec<Vec<Vertex>>> = Vec::new();
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    for band in 0..bands {
        for &(first, width) in &blocks {
            let block = block_edges(r, width, first, 1 + band * r);
            if band == 0 {
                donors.push(block);
            } else {
                edges.extend(block);
            }
        }
    }
    for row in bands * r + 1..=q {
        for grp in 0..full_groups {
            edges.push((0..r).map(|j| Vertex::new(grp * r + 1 + j, row)).collect());
        }
    }

    let corner: Vec<Vertex> = (bands * r + 1..=q)
        .flat_map(|row| (full_groups * r + 1..=n).map(move |class| Vertex::new(class, row)))
        .collect();
    let chunks = corner.len() / r;
    let mut exchanges = 0;
    for (chunk_index, chunk) in corner.chunks_exact(r).enumerate() {
        let possible = donors.len() >= r && donors[..r].iter().all(|b| b.len() > chunk_index);
        if !possible {
            break;
        }
        let mut freed = Vec::with_capacity(r);
        for (donor, &replacement) in donors[..r].iter_mut().zip(chunk) {
            let edge = &mut donor[chunk_index];
            let lowest = (0..edge.len()).min_by_key(|&i| edge[i]).expect("edges are non-empty");
            freed.push(std::mem::replace(&mut edge[lowest], replacement));
        }
        edges.push(freed);
        exchanges += 1;
    }
    edges.extend(donors.into_iter().flatten());

    let matching = Matching::from_edges(spec, edges.iter().map(|e| singleton_edge(e)).collect());
    let mut report = MatchingReport::new(matching, "all-ones")
        .certify("frobenius_x", x)
        .certify("frobenius_y", y)
        .certify("bands", bands)
        .certify("bottom_rows", t)
        .certify("corner_columns", g)
        .certify("corner_chunks", chunks)
        .certify("exchanges", exchanges)
        .certify("nu_formula", n * q / r);
    if !failures.is_empty() {
        report = report.mark_unproven();
    }
    Ok(report)
}

/// Maximum matching for `σ = (Δ, …, Δ)` with `s` parts: contract to all ones, solve, expand.
///
/// Leaves `n·(q mod Δ) + Δ·(nm mod s)` vertices unmatched where `m = ⌊q/Δ⌋`.
/// Requires `n >= (r+1)²` and `q >= rΔ` unless `options.permissive`.
pub fn rectangular_maximum_matching(spec: &HypergraphSpec, options: MatchOptions) -> Result<MatchingReport> {
    let sigma = spec.sigma();
    if !sigma.is_rectangular() {
        return Err(Error::regime(format!("{sigma} is not rectangular")));
    }
    let (n, q, r, delta) = (spec.n(), spec.q(), spec.r(), sigma.largest());
    if delta == 1 {
        let mut report = all_ones_maximum_matching(spec, options)?;
        report.strategy = report.strategy.replacen("all-ones", "rectangular", 1);
        return Ok(report);
    }
    let mut failures = Vec::new();
    if n < (r + 1) * (r + 1) {
        failures.push(format!("n = {n} < (r+1)^2 = {}", (r + 1) * (r + 1)));
    }
    if q < r * delta {
        failures.push(format!("q = {q} < r*delta = {}", r * delta));
    }
    if !failures.is_empty() && !options.permissive {
        return Err(Error::regime(failures.join(", ")));
    }
    let contraction = contract(spec)?;
    let inner = all_ones_maximum_matching(&contraction.contracted, MatchOptions::permissive())?;
    let matching = expand(spec, &inner.matching)?;
    let s = spec.s();
    let m = contraction.contracted.q();
    let mut report = MatchingReport::new(matching, "rectangular")
        .certify("delta", delta)
        .certify("dropped_rows", contraction.dropped_rows)
        .certify("unmatched_formula", n * (q % delta) + delta * ((n * m) % s));
    report.certificates.extend(inner.certificates.into_iter().filter(|c| c.name != "unproven_regime"));
    if !failures.is_empty() {
        report = report.mark_unproven();
    }
    Ok(report)
}
