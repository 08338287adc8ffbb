use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, EdgePart, HypergraphSpec};

/// Latin square whose main diagonal also holds every symbol once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalLatinSquare {
    order: usize,
    cells: Vec<Vec<usize>>,
}

impl DiagonalLatinSquare {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row][col]
    }

    pub fn is_valid(&self) -> bool {
        let n = self.order;
        fn full(n: usize, mut symbols: impl Iterator<Item = usize>) -> bool {
            let mut seen = vec![false; n];
            symbols.all(|x| x < n && !std::mem::replace(&mut seen[x], true))
        }
        self.cells.len() == n
            && self.cells.iter().all(|row| row.len() == n)
            && (0..n).all(|i| full(n, self.cells[i].iter().copied()))
            && (0..n).all(|j| full(n, (0..n).map(|i| self.cells[i][j])))
            && full(n, (0..n).map(|i| self.cells[i][i]))
    }
}

struct Search {
    n: usize,
    cells: Vec<Option<usize>>,
    rows: Vec<u128>,
    cols: Vec<u128>,
    diag: u128,
    nodes: u64,
}

const NODE_LIMIT: u64 = 200_000;

impl Search {
    /// Fills the open cell with the fewest candidates (first in row-major order on ties)
    /// with the smallest symbol that keeps the grid consistent.
    fn fill(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(Error::BudgetExceeded(format!("DLS search of order {} gave up after {NODE_LIMIT} nodes", self.n)));
        }
        let n = self.n;
        let mut best: Option<(u32, usize)> = None;
        for pos in 0..n * n {
            if self.cells[pos].is_none() {
                let c = self.candidates(pos / n, pos % n).count_ones();
                if best.map_or(true, |(k, _)| c < k) {
                    best = Some((c, pos));
                }
            }
        }
        let Some((_, pos)) = best else { return Ok(true) };
        let (i, j) = (pos / n, pos % n);
        let mut options = self.candidates(i, j);
        while options != 0 {
            let x = options.trailing_zeros() as usize;
            options &= options - 1;
            self.place(i, j, Some(x));
            if self.consistent() && self.fill()? {
                return Ok(true);
            }
            self.place(i, j, None);
        }
        Ok(false)
    }

    fn candidates(&self, i: usize, j: usize) -> u128 {
        let full = if self.n == 128 { u128::MAX } else { (1u128 << self.n) - 1 };
        let mut used = self.rows[i] | self.cols[j];
        if i == j {
            used |= self.diag;
        }
        full & !used
    }

    fn place(&mut self, i: usize, j: usize, symbol: Option<usize>) {
        let x = symbol.or(self.cells[i * self.n + j]).expect("cell to toggle");
        let bit = 1u128 << x;
        self.rows[i] ^= bit;
        self.cols[j] ^= bit;
        if i == j {
            self.diag ^= bit;
        }
        self.cells[i * self.n + j] = symbol;
    }

    /// Every open cell keeps a candidate, and every symbol missing from a row, a column or
    /// the diagonal still fits in one of its open cells.
    fn consistent(&self) -> bool {
        let n = self.n;
        let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let mut row_reach = vec![0u128; n];
        let mut col_reach = vec![0u128; n];
        let mut diag_reach = 0u128;
        for a in 0..n {
            for b in 0..n {
                if self.cells[a * n + b].is_some() {
                    continue;
                }
                let c = self.candidates(a, b);
                if c == 0 {
                    return false;
                }
                row_reach[a] |= c;
                col_reach[b] |= c;
                if a == b {
                    diag_reach |= c;
                }
            }
        }
        (0..n).all(|k| full & !self.rows[k] & !row_reach[k] == 0 && full & !self.cols[k] & !col_reach[k] == 0)
            && full & !self.diag & !diag_reach == 0
    }
}

/// Backtracking with the diagonal fixed to `0, 1, …, n-1`. Orders 1 and `>= 3` exist; order 2
/// does not. Orders up to about 36 finish in milliseconds; a search exceeding its node budget
/// reports `BudgetExceeded`.
pub fn generate_dls(order: usize) -> Result<DiagonalLatinSquare> {
    match order {
        0 => return Err(Error::validation("DLS order must be positive")),
        2 => return Err(Error::NoSuchDesign("no diagonal Latin square of order 2".into())),
        n if n > 128 => return Err(Error::validation(format!("DLS order {n} exceeds 128"))),
        _ => {}
    }
    let n = order;
    let mut search = Search { n, cells: vec![None; n * n], rows: vec![0; n], cols: vec![0; n], diag: 0, nodes: 0 };
    for i in 0..n {
        search.place(i, i, Some(i));
    }
    if !search.fill()? {
        return Err(Error::NoSuchDesign(format!("no diagonal Latin square of order {n}")));
    }
    let cells = search.cells.chunks(n).map(|row| row.iter().map(|x| x.expect("filled")).collect()).collect();
    Ok(DiagonalLatinSquare { order: n, cells })
}

/// Perfect cover of an `r × s` subgrid by `s` edges read off a diagonal Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlsFragment {
    pub edges: Vec<Edge>,
    /// The part of edge `i` that lies in the `i`-th class of the subgrid.
    pub diagonal: Vec<EdgePart>,
    /// Index into σ of each diagonal part; a permutation of `0..s`.
    pub diagonal_symbols: Vec<usize>,
}

/// DLS matching of the subgrid whose top-left vertex is `(class_offset + 1, row_offset + 1)`.
pub fn dls_matching(spec: &HypergraphSpec, row_offset: usize, class_offset: usize) -> Result<DlsFragment> {
    if spec.s() == 2 {
        return Err(Error::NoSuchDesign("DLS matchings need s != 2".into()));
    }
    let square = generate_dls(spec.s())?;
    dls_matching_with(spec, &square, row_offset, class_offset)
}

pub(crate) fn dls_matching_with(
    spec: &HypergraphSpec,
    square: &DiagonalLatinSquare,
    row_offset: usize,
    class_offset: usize,
) -> Result<DlsFragment> {
    let (r, s) = (spec.r(), spec.s());
    if row_offset + r > spec.q() || class_offset + s > spec.n() {
        return Err(Error::validation(format!(
            "{r}x{s} subgrid at rows {row_offset}+, classes {class_offset}+ is outside {spec}"
        )));
    }
    let parts = spec.sigma().parts();
    let mut edge_parts: Vec<Vec<EdgePart>> = vec![Vec::with_capacity(s); s];
    for c in 0..s {
        let mut row = row_offset + 1;
        for (i, parts_of_edge) in edge_parts.iter_mut().enumerate() {
            let size = parts[square.get(i, c)];
            parts_of_edge.push(EdgePart::block(class_offset + c + 1, row, size));
            row += size;
        }
    }
    let diagonal = (0..s).map(|i| edge_parts[i][i].clone()).collect();
    let diagonal_symbols = (0..s).map(|i| square.get(i, i)).collect();
    Ok(DlsFragment { edges: edge_parts.into_iter().map(Edge::new).collect(), diagonal, diagonal_symbols })
}
