//! Davenport-Schinzel sequences: no two equal neighbours and no pair of
//! symbols alternating `2b` times.

use serde::{Deserialize, Serialize};

use crate::limits::NodeCounter;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolSequence {
    pub symbols: Vec<usize>,
    pub t: usize,
    pub b: usize,
}

impl SymbolSequence {
    pub fn new(symbols: Vec<usize>, t: usize, b: usize) -> Result<Self> {
        if t == 0 || b < 2 {
            return Err(Error::InvalidArgument(format!("need t >= 1 and b >= 2, got t = {t}, b = {b}")));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s >= t) {
            return Err(Error::InvalidArgument(format!("symbol {s} outside an alphabet of size {t}")));
        }
        Ok(SymbolSequence { symbols, t, b })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "indices")]
pub enum DsViolation {
    /// Two equal neighbours at `i, i + 1`.
    Adjacent(Vec<usize>),
    /// Positions of an alternation of length `2b`.
    Alternation(Vec<usize>),
}

/// `Ok(())` when admissible. Adjacent repeats are reported before
/// alternations; each witness is the lexicographically earliest of its kind.
pub fn is_ds_admissible(s: &SymbolSequence) -> std::result::Result<(), DsViolation> {
    if let Some(i) = s.symbols.windows(2).position(|w| w[0] == w[1]) {
        return Err(DsViolation::Adjacent(vec![i, i + 1]));
    }
    match find_alternation(&s.symbols, s.b) {
        Some(idx) => Err(DsViolation::Alternation(idx)),
        None => Ok(()),
    }
}

/// Lexicographically earliest index tuple `h_1 < .. < h_{2b}` on which two
/// distinct symbols alternate, if any. Repeated neighbours are allowed.
pub fn find_alternation(seq: &[usize], b: usize) -> Option<Vec<usize>> {
    let mut symbols: Vec<usize> = seq.to_vec();
    symbols.sort_unstable();
    symbols.dedup();
    let mut best: Option<Vec<usize>> = None;
    for &x in &symbols {
        for &y in &symbols {
            if x == y {
                continue;
            }
            // greedy earliest embedding of (x y)^b
            let mut idx = Vec::with_capacity(2 * b);
            for (i, &s) in seq.iter().enumerate() {
                if idx.len() == 2 * b {
                    break;
                }
                let want = if idx.len() % 2 == 0 { x } else { y };
                if s == want {
                    idx.push(i);
                }
            }
            if idx.len() == 2 * b && best.as_ref().map_or(true, |cur| idx < *cur) {
                best = Some(idx);
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DsMax {
    pub t: usize,
    pub b: usize,
    pub length: usize,
    pub witness: Vec<usize>,
    /// False when the node budget ran out; `length` is then a lower bound.
    pub optimal: bool,
    pub nodes: u64,
}

impl DsMax {
    pub const CSV_HEADER: &'static str = "t,b,length,optimal,witness";

    pub fn csv_row(&self) -> String {
        let w: Vec<String> = self.witness.iter().map(|s| s.to_string()).collect();
        format!("{},{},{},{},{}", self.t, self.b, self.length, self.optimal, w.join(" "))
    }
}

/// Longest admissible sequence over `t` symbols by exhaustive search. First
/// occurrences are forced into increasing symbol order.
pub fn max_ds_length(t: usize, b: usize, budget: Option<u64>) -> Result<DsMax> {
    SymbolSequence::new(Vec::new(), t, b)?;
    let mut search = DsSearch {
        t,
        limit: 2 * b,
        seq: Vec::new(),
        runs: vec![0; t * t],
        last: vec![usize::MAX; t * t],
        best: Vec::new(),
        counter: NodeCounter::new("Davenport-Schinzel search", budget),
    };
    let optimal = search.extend(0).is_ok();
    Ok(DsMax { t, b, length: search.best.len(), witness: search.best, optimal, nodes: search.counter.expanded })
}

struct DsSearch {
    t: usize,
    limit: usize,
    seq: Vec<usize>,
    /// `runs[x * t + y]` (x < y): runs in the sequence restricted to {x, y}.
    runs: Vec<usize>,
    /// Last symbol seen among {x, y}.
    last: Vec<usize>,
    best: Vec<usize>,
    counter: NodeCounter,
}

impl DsSearch {
    fn extend(&mut self, used: usize) -> Result<()> {
        self.counter.tick()?;
        if self.seq.len() > self.best.len() {
            self.best = self.seq.clone();
        }
        let prev = self.seq.last().copied();
        for s in 0..(used + 1).min(self.t) {
            if Some(s) == prev {
                continue;
            }
            let mut touched = Vec::new();
            let mut ok = true;
            for y in 0..self.t {
                if y == s {
                    continue;
                }
                let key = s.min(y) * self.t + s.max(y);
                if self.last[key] != s {
                    touched.push((key, self.last[key]));
                    self.runs[key] += 1;
                    self.last[key] = s;
                    if self.runs[key] >= self.limit {
                        ok = false;
                        break;
                    }
                }
            }
            let result = if ok {
                self.seq.push(s);
                let r = self.extend(used.max(s + 1));
                self.seq.pop();
                r
            } else {
                Ok(())
            };
            for (key, old) in touched.into_iter().rev() {
                self.runs[key] -= 1;
                self.last[key] = old;
            }
            result?;
        }
        Ok(())
    }
}
