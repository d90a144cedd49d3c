//! Non-crossing linked partitions of `[n]` and their bijection with
//! mono-crossing admissible arc diagrams.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arc::{AlgebraSpec, Arc};
use crate::diagram::ArcDiagram;
use crate::error::{Error, Result};

/// Why a block system fails to be a non-crossing linked partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NclViolation {
    /// A block is empty or leaves `[n]`.
    Malformed(String),
    /// The mark is covered by no block.
    Ncl1 { missing: u32 },
    /// `a < b < c < d` with `a, c` in `first` and `b, d` in `second`.
    Ncl2 {
        first: Vec<u32>,
        second: Vec<u32>,
        witness: [u32; 4],
    },
    /// The two blocks overlap in a way other than a single link point.
    Ncl3 { first: Vec<u32>, second: Vec<u32> },
}

impl NclViolation {
    /// `"NCL1"`, `"NCL2"`, `"NCL3"` or `"malformed"`.
    pub fn condition(&self) -> &'static str {
        match self {
            NclViolation::Malformed(_) => "malformed",
            NclViolation::Ncl1 { .. } => "NCL1",
            NclViolation::Ncl2 { .. } => "NCL2",
            NclViolation::Ncl3 { .. } => "NCL3",
        }
    }
}

fn fmt_block(b: &[u32]) -> String {
    let inner: Vec<String> = b.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for NclViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NclViolation::Malformed(msg) => write!(f, "malformed block system: {msg}"),
            NclViolation::Ncl1 { missing } => {
                write!(f, "NCL1 violated: {missing} lies in no block")
            }
            NclViolation::Ncl2 {
                first,
                second,
                witness: [a, b, c, d],
            } => write!(
                f,
                "NCL2 violated: {a} < {b} < {c} < {d} alternates between {} and {}",
                fmt_block(first),
                fmt_block(second)
            ),
            NclViolation::Ncl3 { first, second } => write!(
                f,
                "NCL3 violated: {} and {} overlap illegally",
                fmt_block(first),
                fmt_block(second)
            ),
        }
    }
}

/// Blocks are kept as sorted lists, sorted lexicographically, without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "NclRecord")]
pub struct NclPartition {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct NclRecord {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

impl From<NclRecord> for NclPartition {
    fn from(r: NclRecord) -> Self {
        NclPartition::new(r.n, r.blocks)
    }
}

impl NclPartition {
    /// Canonicalizes without validating; see [`NclPartition::check`].
    pub fn new(n: u32, blocks: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let set: BTreeSet<Vec<u32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        NclPartition {
            n,
            blocks: set.into_iter().collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn check(&self) -> std::result::Result<(), NclViolation> {
        for b in &self.blocks {
            if b.is_empty() {
                return Err(NclViolation::Malformed("empty block".into()));
            }
            if let Some(bad) = b.iter().find(|&&x| x < 1 || x > self.n) {
                return Err(NclViolation::Malformed(format!("{bad} is outside [{}]", self.n)));
            }
        }
        for x in 1..=self.n {
            if !self.blocks.iter().any(|b| b.contains(&x)) {
                return Err(NclViolation::Ncl1 { missing: x });
            }
        }
        for (k, e) in self.blocks.iter().enumerate() {
            for f in &self.blocks[k + 1..] {
                pair_violation(e, f)?;
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// One arc `(min E, j)` for every other element `j` of every block `E`.
    pub fn to_diagram(&self) -> Result<ArcDiagram> {
        self.check().map_err(Error::InvalidPartition)?;
        let arcs = self.blocks.iter().flat_map(|b| {
            let lo = b[0];
            b[1..].iter().map(move |&j| Arc::new(lo, j))
        });
        ArcDiagram::new(AlgebraSpec::LinearA(self.n - 1), arcs)
    }

    pub fn from_diagram(d: &ArcDiagram) -> Result<NclPartition> {
        let AlgebraSpec::LinearA(m) = d.spec() else {
            return Err(Error::InvalidAlgebra(format!(
                "linked partitions need admissible arcs, got {}",
                d.spec()
            )));
        };
        d.require_monobrick()?;
        let n = m + 1;
        let mut blocks = Vec::new();
        for i in 1..=n {
            let ends: Vec<u32> = d.arcs().iter().filter(|a| a.start == i).map(|a| a.end).collect();
            if !ends.is_empty() {
                blocks.push(std::iter::once(i).chain(ends).collect());
            } else if !d.arcs().iter().any(|a| a.end == i) {
                blocks.push(vec![i]);
            }
        }
        Ok(NclPartition::new(n, blocks))
    }
}

/// NCL2 and NCL3 for one unordered pair of distinct sorted blocks.
fn pair_violation(e: &[u32], f: &[u32]) -> std::result::Result<(), NclViolation> {
    for (x, y) in [(e, f), (f, e)] {
        if let Some(witness) = alternation(x, y) {
            return Err(NclViolation::Ncl2 {
                first: x.to_vec(),
                second: y.to_vec(),
                witness,
            });
        }
    }
    let shared: Vec<u32> = e.iter().copied().filter(|x| f.contains(x)).collect();
    let ok = match shared.as_slice() {
        [] => true,
        [j] => {
            let linked = |x: &[u32], y: &[u32]| *j == x[0] && x.len() > 1 && *j != y[0];
            linked(e, f) || linked(f, e)
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(NclViolation::Ncl3 {
            first: e.to_vec(),
            second: f.to_vec(),
        })
    }
}

/// Some `a < b < c < d` with `a, c` in `x` and `b, d` in `y`.
fn alternation(x: &[u32], y: &[u32]) -> Option<[u32; 4]> {
    for &a in x {
        for &b in y.iter().filter(|&&b| b > a) {
            for &c in x.iter().filter(|&&c| c > b) {
                if let Some(&d) = y.iter().find(|&&d| d > c) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Every non-crossing linked partition of `[n]`, sorted, found by brute force
/// over pairwise-compatible families of subsets.
pub fn enumerate_ncl(n: u32) -> Vec<NclPartition> {
    assert!(n <= 16, "subset enumeration is exponential in n");
    let subsets: Vec<Vec<u32>> = (1u32..(1 << n))
        .map(|mask| (1..=n).filter(|x| mask >> (x - 1) & 1 == 1).collect())
        .collect();
    let compatible: Vec<Vec<bool>> = subsets
        .iter()
        .map(|e| {
            subsets
                .iter()
                .map(|f| e != f && pair_violation(e, f).is_ok())
                .collect()
        })
        .collect();
    let full: u32 = (1 << n) - 1;
    let mask_of = |k: usize| (k as u32) + 1;

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn grow(
        start: usize,
        covered: u32,
        full: u32,
        chosen: &mut Vec<usize>,
        compatible: &[Vec<bool>],
        mask_of: &dyn Fn(usize) -> u32,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if covered == full {
            visit(chosen);
        }
        for k in start..compatible.len() {
            if chosen.iter().all(|&c| compatible[c][k]) {
                chosen.push(k);
                grow(
                    k + 1,
                    covered | mask_of(k),
                    full,
                    chosen,
                    compatible,
                    mask_of,
                    visit,
                );
                chosen.pop();
            }
        }
    }
    grow(0, 0, full, &mut chosen, &compatible, &mask_of, &mut |c| {
        out.push(NclPartition::new(n, c.iter().map(|&k| subsets[k].clone())));
    });
    out.sort();
    out
}
