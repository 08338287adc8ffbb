use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, EdgePart, HypergraphSpec, Matching, Sigma};
use crate::numtheory::{frobenius_decompose, gcd};

use super::divisibility::{diagonal_band, diagonal_strips};
use super::dls::{dls_matching_with, generate_dls, DlsFragment};
use super::{MatchOptions, MatchingReport, CERTIFIED_BOUND};

/// A split of the parts of σ into `A ⊔ B` with part sums coprime to `r` (and so to each other).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RGoodSplit {
    /// 1-based indices into σ, ascending.
    pub set_a: Vec<usize>,
    pub set_b: Vec<usize>,
    pub a: usize,
    pub b: usize,
    #[serde(rename = "L")]
    pub lcm: usize,
}

impl RGoodSplit {
    fn from_set(sigma: &Sigma, set_a: Vec<usize>) -> Self {
        let set_b: Vec<usize> = (1..=sigma.s()).filter(|i| !set_a.contains(i)).collect();
        let a: usize = set_a.iter().map(|&i| sigma.part(i)).sum();
        let b = sigma.r() - a;
        RGoodSplit { set_a, set_b, a, b, lcm: a * b }
    }

    fn parts_a(&self, sigma: &Sigma) -> Vec<usize> {
        self.set_a.iter().map(|&i| sigma.part(i)).collect()
    }

    fn parts_b(&self, sigma: &Sigma) -> Vec<usize> {
        self.set_b.iter().map(|&i| sigma.part(i)).collect()
    }

    fn check(&self, sigma: &Sigma) -> Result<()> {
        let mut all: Vec<usize> = self.set_a.iter().chain(&self.set_b).copied().collect();
        all.sort_unstable();
        let consistent = all == (1..=sigma.s()).collect::<Vec<_>>()
            && !self.set_a.is_empty()
            && !self.set_b.is_empty()
            && self.parts_a(sigma).iter().sum::<usize>() == self.a
            && self.a + self.b == sigma.r()
            && self.lcm == self.a * self.b
            && gcd(self.a, sigma.r()) == 1;
        if consistent {
            Ok(())
        } else {
            Err(Error::validation(format!("{self:?} is not an r-good split of {sigma}")))
        }
    }
}

/// The split minimizing `L = ab`, ties broken by the lexicographically smallest `A`.
/// `None` when no subset sum of σ is coprime to `r`.
pub fn find_r_good_split(sigma: &Sigma) -> Result<Option<RGoodSplit>> {
    let (s, r, parts) = (sigma.s(), sigma.r(), sigma.parts());
    if s < 2 {
        return Err(Error::regime(format!("{sigma} has fewer than two parts")));
    }
    // reach[i][x]: some subset of parts[i..] sums to x
    let mut reach = vec![vec![false; r + 1]; s + 1];
    reach[s][0] = true;
    for i in (0..s).rev() {
        for x in 0..=r {
            reach[i][x] = reach[i + 1][x] || (x >= parts[i] && reach[i + 1][x - parts[i]]);
        }
    }
    let smallest_set = |mut target: usize| -> Vec<usize> {
        let mut set = Vec::new();
        let mut from = 0;
        while target > 0 {
            let i = (from..s)
                .find(|&i| parts[i] <= target && reach[i + 1][target - parts[i]])
                .expect("target is reachable");
            set.push(i + 1);
            target -= parts[i];
            from = i + 1;
        }
        set
    };
    let best = (1..r)
        .filter(|&a| gcd(a, r) == 1 && reach[0][a])
        .map(|a| (a * (r - a), smallest_set(a)))
        .min();
    Ok(best.map(|(_, set_a)| RGoodSplit::from_set(sigma, set_a)))
}

/// Perfect cover of the `L × r` subgrid at the offsets by `L` edges: diagonal packings of
/// `σ_A` on the first `a` classes joined row by row with packings of `σ_B` on the next `b`.
pub fn packing_matching(
    spec: &HypergraphSpec,
    split: &RGoodSplit,
    row_offset: usize,
    class_offset: usize,
) -> Result<Vec<Edge>> {
    let sigma = spec.sigma();
    split.check(sigma)?;
    let (l, r) = (split.lcm, spec.r());
    if row_offset + l > spec.q() || class_offset + r > spec.n() {
        return Err(Error::validation(format!(
            "{l}x{r} subgrid at rows {row_offset}+, classes {class_offset}+ is outside {spec}"
        )));
    }
    let half = |parts: Vec<usize>, width: usize, first_class: usize| -> Vec<Vec<EdgePart>> {
        let classes: Vec<usize> = (first_class..first_class + width).collect();
        (0..l / width)
            .flat_map(|u| diagonal_band(&parts, row_offset + 1 + u * width, &classes))
            .collect()
    };
    let left = half(split.parts_a(sigma), split.a, class_offset + 1);
    let right = half(split.parts_b(sigma), split.b, class_offset + 1 + split.a);
    Ok(left.into_iter().zip(right).map(|(mut x, y)| {
        x.extend(y);
        Edge::new(x)
    }).collect())
}

/// Parameter regimes in which an r-good σ has a certified matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `r | q`, `n >= s`: perfect.
    DivisibleRows,
    /// `r | n` and `q >= (L-1)(r-1)` or `L | q`: perfect.
    DivisibleClasses,
    /// `q >= L(r-1)`, `n >= s`: at most `L(r-1)²` unmatched.
    Banded,
    /// `q >= L(r²-1)`, `n >= s + r` (or `n >= r + 2` when `s = 2`): at most `(r-1)²` unmatched.
    Exchange,
}

impl Regime {
    pub const DISPATCH_ORDER: [Regime; 4] =
        [Regime::DivisibleRows, Regime::DivisibleClasses, Regime::Exchange, Regime::Banded];

    pub fn label(self, s: usize) -> &'static str {
        match self {
            Regime::DivisibleRows => "rgood:r-divides-q",
            Regime::DivisibleClasses => "rgood:r-divides-n",
            Regime::Banded => "rgood:banded",
            Regime::Exchange if s == 2 => "rgood:pair-exchange",
            Regime::Exchange => "rgood:dls-exchange",
        }
    }

    /// Stated thresholds this instance misses; empty when the regime applies.
    fn failures(self, spec: &HypergraphSpec, l: usize) -> Vec<String> {
        let (n, q, r, s) = (spec.n(), spec.q(), spec.r(), spec.s());
        let mut out = Vec::new();
        let mut need = |ok: bool, msg: String| {
            if !ok {
                out.push(msg);
            }
        };
        match self {
            Regime::DivisibleRows => {
                need(q % r == 0, format!("r = {r} does not divide q = {q}"));
                need(n >= s, format!("n = {n} < s = {s}"));
            }
            Regime::DivisibleClasses => {
                need(n % r == 0, format!("r = {r} does not divide n = {n}"));
                let low = (l - 1) * (r - 1);
                need(q >= low || q % l == 0, format!("q = {q} < (L-1)(r-1) = {low} and L = {l} does not divide q"));
            }
            Regime::Banded => {
                need(q >= l * (r - 1), format!("q = {q} < L(r-1) = {}", l * (r - 1)));
                need(n >= s, format!("n = {n} < s = {s}"));
            }
            Regime::Exchange => {
                need(q >= l * (r * r - 1), format!("q = {q} < L(r^2-1) = {}", l * (r * r - 1)));
                let width = if s == 2 { r + 2 } else { s + r };
                need(n >= width, format!("n = {n} < {width}"));
            }
        }
        out
    }
}

fn no_r_good_split(sigma: &Sigma) -> Error {
    Error::regime(format!("{sigma} is not r-good: no subset sum is coprime to r = {}", sigma.r()))
}

fn split_for(spec: &HypergraphSpec) -> Result<RGoodSplit> {
    if spec.n() < spec.s() {
        return Err(Error::regime(format!("n = {} < s = {}: there are no edges", spec.n(), spec.s())));
    }
    find_r_good_split(spec.sigma())?.ok_or_else(|| no_r_good_split(spec.sigma()))
}

/// Builds the matching of one regime. Thresholds are enforced unless `options.permissive`.
pub fn r_good_matching_in_regime(
    spec: &HypergraphSpec,
    regime: Regime,
    options: MatchOptions,
) -> Result<MatchingReport> {
    let split = split_for(spec)?;
    let failures = regime.failures(spec, split.lcm);
    if !failures.is_empty() && !options.permissive {
        return Err(Error::regime(failures.join(", ")));
    }
    let report = build(spec, &split, regime)?;
    Ok(if failures.is_empty() { report } else { report.mark_unproven() })
}

/// Dispatches to the strongest regime whose thresholds hold.
///
/// With `options.permissive` and no applicable regime, every construction is attempted and the
/// largest result is returned, marked unproven.
pub fn r_good_maximum_matching(spec: &HypergraphSpec, options: MatchOptions) -> Result<MatchingReport> {
    let split = split_for(spec)?;
    let mut reasons = Vec::new();
    for regime in Regime::DISPATCH_ORDER {
        let failures = regime.failures(spec, split.lcm);
        if failures.is_empty() {
            match build(spec, &split, regime) {
                Ok(report) => return Ok(report),
                Err(e) => reasons.push(format!("{}: {e}", regime.label(spec.s()))),
            }
        } else {
            reasons.push(format!("{}: {}", regime.label(spec.s()), failures.join(", ")));
        }
    }
    if !options.permissive {
        return Err(Error::regime(format!("no regime applies ({})", reasons.join("; "))));
    }
    let mut best: Option<MatchingReport> = None;
    for regime in Regime::DISPATCH_ORDER {
        if let Ok(report) = build(spec, &split, regime) {
            if best.as_ref().map_or(true, |b| report.nu > b.nu) {
                best = Some(report);
            }
        }
    }
    best.map(MatchingReport::mark_unproven)
        .ok_or_else(|| Error::regime(format!("no construction succeeded ({})", reasons.join("; "))))
}

fn build(spec: &HypergraphSpec, split: &RGoodSplit, regime: Regime) -> Result<MatchingReport> {
    let (mut edges, mut report) = match regime {
        Regime::DivisibleRows => divisible_rows(spec),
        Regime::DivisibleClasses => divisible_classes(spec, split)?,
        Regime::Banded => banded(spec, split, None)?,
        Regime::Exchange => banded(spec, split, Some(exchange_layout(spec)?))?,
    };
    let l = split.lcm;
    report.push_certificate("L", l);
    report.push_certificate("split_a", split.a);
    report.push_certificate("split_b", split.b);
    let matching = Matching::from_edges(spec, std::mem::take(&mut edges));
    report.nu = matching.len();
    report.unmatched_count = matching.unmatched.len();
    report.matching = matching;
    report.strategy = regime.label(spec.s()).to_string();
    Ok(report)
}

fn all_classes(spec: &HypergraphSpec) -> Vec<usize> {
    (1..=spec.n()).collect()
}

fn divisible_rows(spec: &HypergraphSpec) -> (Vec<Edge>, MatchingReport) {
    let edges = diagonal_strips(spec, 1, spec.q() / spec.r(), &all_classes(spec));
    (edges, blank().certify(CERTIFIED_BOUND, 0))
}

fn blank() -> MatchingReport {
    MatchingReport::new(Matching::default(), "")
}

/// Largest `h <= height` that is a nonnegative combination of `L` and `r`, with that combination.
fn representable_prefix(height: usize, l: usize, r: usize) -> (usize, usize, usize) {
    (0..=height)
        .rev()
        .find_map(|h| frobenius_decompose(h as u64, l as u64, r as u64).ok().map(|(x, y)| (h, x as usize, y as usize)))
        .unwrap_or((0, 0, 0))
}

/// Tiles rows `top..` of the first `width` classes (`r | width`) with `x` packing bands of
/// height `L` followed by `y` diagonal strips.
fn tile_divisible(spec: &HypergraphSpec, split: &RGoodSplit, top: usize, x: usize, y: usize, width: usize) -> Vec<Edge> {
    let (l, r) = (split.lcm, spec.r());
    let mut edges = Vec::new();
    for band in 0..x {
        for group in 0..width / r {
            edges.extend(packing_matching(spec, split, top - 1 + band * l, group * r).expect("subgrid in range"));
        }
    }
    let classes: Vec<usize> = (1..=width).collect();
    if width >= spec.s() {
        edges.extend(diagonal_strips(spec, top + x * l, y, &classes));
    }
    edges
}

fn divisible_classes(spec: &HypergraphSpec, split: &RGoodSplit) -> Result<(Vec<Edge>, MatchingReport)> {
    let r = spec.r();
    let width = spec.n() - spec.n() % r;
    let (h, x, y) = representable_prefix(spec.q(), split.lcm, r);
    let edges = tile_divisible(spec, split, 1, x, y, width);
    let report = blank()
        .certify("frobenius_x", x)
        .certify("frobenius_y", y)
        .certify("tiled_rows", h)
        .certify(CERTIFIED_BOUND, 0);
    Ok((edges, report))
}

/// Widths of the exchange blocks at the left of each strip.
struct ExchangeLayout {
    width: usize,
    square: Option<crate::matching::DiagonalLatinSquare>,
}

fn exchange_layout(spec: &HypergraphSpec) -> Result<ExchangeLayout> {
    match spec.s() {
        2 => Ok(ExchangeLayout { width: 2, square: None }),
        s => Ok(ExchangeLayout { width: s, square: Some(generate_dls(s)?) }),
    }
}

enum Block {
    Dls(DlsFragment),
    Pair { top: usize, class: usize },
}

/// Diagonal strips on top, the residual band tiled over the `r`-divisible columns below, and,
/// when `exchange` is given, residual columns absorbed into exchange blocks of the strips.
fn banded(
    spec: &HypergraphSpec,
    split: &RGoodSplit,
    exchange: Option<ExchangeLayout>,
) -> Result<(Vec<Edge>, MatchingReport)> {
    let (n, q, r, s) = (spec.n(), spec.q(), spec.r(), spec.s());
    let l = split.lcm;
    let m = (l - 1) * (r - 1);
    let strips = q.saturating_sub(m) / r;
    let q1 = q - strips * r;
    let (t, b) = (n / r, n % r);

    let mut edges = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    let (mut f, mut h) = (0, n);
    if let Some(layout) = &exchange {
        f = n.saturating_sub(r) / layout.width;
        h = n - f * layout.width;
    }
    let rest: Vec<usize> = (f * exchange.as_ref().map_or(0, |x| x.width) + 1..=n).collect();
    for strip in 0..strips {
        let top = 1 + strip * r;
        for k in 0..f {
            let layout = exchange.as_ref().expect("f > 0 only with a layout");
            let class = k * layout.width;
            blocks.push(match &layout.square {
                Some(square) => Block::Dls(dls_matching_with(spec, square, top - 1, class)?),
                None => Block::Pair { top, class: class + 1 },
            });
        }
        if rest.len() >= s {
            edges.extend(diagonal_band(spec.sigma().parts(), top, &rest).into_iter().map(Edge::new));
        }
    }

    let residual_top = strips * r + 1;
    let (tiled, x, y) = representable_prefix(q1, l, r);
    edges.extend(tile_divisible(spec, split, residual_top, x, y, t * r));

    let mut report = blank()
        .certify("strips", strips)
        .certify("q1", q1)
        .certify("t", t)
        .certify("b", b)
        .certify("frobenius_x", x)
        .certify("frobenius_y", y);
    if tiled < q1 {
        report.push_certificate("untiled_rows", q1 - tiled);
    }

    if exchange.is_none() {
        report.push_certificate(CERTIFIED_BOUND, l * (r - 1) * (r - 1));
        return Ok((edges, report));
    }

    // chunks of r rows in each residual column, left to right, top to bottom
    let (p, z) = (q1 / r, q1 % r);
    let chunks: Vec<(usize, usize)> = (t * r + 1..=n)
        .flat_map(|class| (0..p).map(move |u| (class, residual_top + u * r)))
        .collect();
    let absorbed = chunks.len().min(blocks.len());
    let mut chunk_iter = chunks.iter();
    for block in blocks {
        let chunk = chunk_iter.next();
        match (block, chunk) {
            (Block::Dls(frag), None) => edges.extend(frag.edges),
            (Block::Dls(frag), Some(&(class, row))) => edges.extend(absorb_dls(spec, frag, class, row)),
            (Block::Pair { top, class }, chunk) => edges.extend(pair_block(spec, top, class, chunk.copied())),
        }
    }

    let ratio_statement = l * (r * r - 1);
    let ratio_proof = l * (r - 1) * (r - 1);
    report = report
        .certify("f", f)
        .certify("h", h)
        .certify("p", p)
        .certify("z", z)
        .certify("blocks_needed", chunks.len())
        .certify("blocks_available", f * strips)
        .certify("absorbed", absorbed)
        .certify("q_threshold_statement", ratio_statement)
        .certify("q_threshold_proof", ratio_proof)
        .certify("thresholds_diverge", usize::from(ratio_statement != ratio_proof))
        .certify(CERTIFIED_BOUND, (r - 1) * (r - 1));
    Ok((edges, report))
}

/// Swaps each diagonal part of the block for the same-sized part of the chunk
/// `(class, row..row + r)`; the freed diagonal parts form one extra edge.
fn absorb_dls(spec: &HypergraphSpec, frag: DlsFragment, class: usize, row: usize) -> Vec<Edge> {
    let parts = spec.sigma().parts();
    let mut starts = Vec::with_capacity(parts.len());
    let mut next = row;
    for &a in parts {
        starts.push(next);
        next += a;
    }
    let mut out: Vec<Edge> = frag
        .edges
        .iter()
        .zip(&frag.diagonal)
        .zip(&frag.diagonal_symbols)
        .map(|((edge, diag), &sym)| {
            let mut kept: Vec<EdgePart> = edge.parts().iter().filter(|p| *p != diag).cloned().collect();
            kept.push(EdgePart::block(class, starts[sym], parts[sym]));
            Edge::new(kept)
        })
        .collect();
    out.push(Edge::new(frag.diagonal));
    out
}

/// Two-class block for `σ = (a₁, a₂)` at rows `top..top + r`, optionally absorbing the chunk
/// `(class, row..row + r)` by splitting its top edge in two.
fn pair_block(spec: &HypergraphSpec, top: usize, c1: usize, chunk: Option<(usize, usize)>) -> Vec<Edge> {
    let (a1, a2) = (spec.sigma().part(1), spec.sigma().part(2));
    let c2 = c1 + 1;
    let bottom = Edge::new(vec![EdgePart::block(c1, top + a1, a2), EdgePart::block(c2, top + a2, a1)]);
    match chunk {
        None => vec![Edge::new(vec![EdgePart::block(c1, top, a1), EdgePart::block(c2, top, a2)]), bottom],
        Some((class, row)) => vec![
            Edge::new(vec![EdgePart::block(c1, top, a1), EdgePart::block(class, row, a2)]),
            Edge::new(vec![EdgePart::block(c2, top, a2), EdgePart::block(class, row + a2, a1)]),
            bottom,
        ],
    }
}
