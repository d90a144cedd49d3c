//! Reference listings of monobricks for `a3_linear`, `a3_source` and `nak2`,
//! with the expected maximal elements, cofinal closures and shape of `Filt`.
//!
//! In rows with a drawing, `white` lists the indecomposables of `add Filt(M)`
//! outside `M`. For rows marked [`Mark::NotSummandClosed`] those do not lie in
//! `Filt(M)` itself; in every other row they do.

use std::collections::BTreeSet;

use super::universe::{ClassId, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    None,
    /// Not closed under direct summands (so neither under images nor kernels).
    NotSummandClosed,
    /// Closed under images but not under kernels.
    NotKernelClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub monobrick: &'static [&'static str],
    pub white: Option<&'static [&'static str]>,
    /// `None` means the monobrick itself.
    pub mmax: Option<&'static [&'static str]>,
    pub closure: Option<&'static [&'static str]>,
    pub wide: Option<bool>,
    pub torsion_free: Option<bool>,
    pub mark: Mark,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table {
    pub preset: &'static str,
    /// Rows cover exactly the monobricks with at least this many members.
    pub min_size: usize,
    pub rows: &'static [TableRow],
}

const fn row(
    monobrick: &'static [&'static str],
    white: &'static [&'static str],
    wide: bool,
    mmax: Option<&'static [&'static str]>,
    torsion_free: bool,
    closure: Option<&'static [&'static str]>,
) -> TableRow {
    TableRow {
        monobrick,
        white: Some(white),
        mmax,
        closure,
        wide: Some(wide),
        torsion_free: Some(torsion_free),
        mark: Mark::None,
    }
}

/// Rows listed with only mmax and closure; wide and torsion-free are read
/// off as "mmax is itself" and "closure is itself".
const fn short(
    monobrick: &'static [&'static str],
    white: Option<&'static [&'static str]>,
    mmax: Option<&'static [&'static str]>,
    closure: Option<&'static [&'static str]>,
    mark: Mark,
) -> TableRow {
    TableRow {
        monobrick,
        white,
        mmax,
        closure,
        wide: Some(mmax.is_none()),
        torsion_free: Some(closure.is_none()),
        mark,
    }
}

const DIAMOND: &[&str] = &["2", "3/2", "1/2", "13/2"];

pub const A3_LINEAR: Table = Table {
    preset: "a3_linear",
    min_size: 2,
    rows: &[
        row(&["1", "2/1"], &[], false, Some(&["2/1"]), true, None),
        row(
            &["1", "3/2/1"],
            &[],
            false,
            Some(&["3/2/1"]),
            false,
            Some(&["1", "2/1", "3/2/1"]),
        ),
        row(&["1", "2"], &["2/1"], true, None, true, None),
        row(
            &["1", "3/2"],
            &["3/2/1"],
            true,
            None,
            false,
            Some(&["1", "2", "3/2"]),
        ),
        row(&["1", "3"], &[], true, None, true, None),
        row(
            &["2/1", "3/2/1"],
            &[],
            false,
            Some(&["3/2/1"]),
            false,
            Some(&["1", "2/1", "3/2/1"]),
        ),
        row(
            &["2/1", "3"],
            &["3/2/1"],
            true,
            None,
            false,
            Some(&["1", "2/1", "3"]),
        ),
        row(
            &["2", "3/2/1"],
            &[],
            true,
            None,
            false,
            Some(&["1", "3/2/1", "2"]),
        ),
        row(&["2", "3/2"], &[], false, Some(&["3/2"]), true, None),
        row(&["2", "3"], &["3/2"], true, None, true, None),
        row(&["1", "2/1", "3/2/1"], &[], false, Some(&["3/2/1"]), true, None),
        row(
            &["1", "2/1", "3"],
            &["3/2/1"],
            false,
            Some(&["2/1", "3"]),
            true,
            None,
        ),
        row(
            &["1", "3/2/1", "2"],
            &["2/1"],
            false,
            Some(&["2", "3/2/1"]),
            true,
            None,
        ),
        row(
            &["1", "2", "3/2"],
            &["2/1", "3/2/1"],
            false,
            Some(&["1", "3/2"]),
            true,
            None,
        ),
        row(&["1", "2", "3"], &["2/1", "3/2/1", "3/2"], true, None, true, None),
    ],
};

pub const A3_SOURCE: Table = Table {
    preset: "a3_source",
    min_size: 2,
    rows: &[
        short(&["2", "1/2"], Some(&[]), Some(&["1/2"]), None, Mark::None),
        short(&["2", "3/2"], Some(&[]), Some(&["3/2"]), None, Mark::None),
        short(
            &["2", "13/2"],
            Some(&["1/2", "3/2"]),
            Some(&["13/2"]),
            Some(DIAMOND),
            Mark::NotSummandClosed,
        ),
        short(&["2", "1"], Some(&["1/2"]), None, None, Mark::None),
        short(&["2", "3"], Some(&["3/2"]), None, None, Mark::None),
        short(
            &["1/2", "3/2"],
            Some(&[]),
            None,
            Some(&["3/2", "2", "1/2"]),
            Mark::None,
        ),
        // 2 embeds in 1/2 and 3/2 in 13/2, so neither row is cofinally closed
        short(
            &["1/2", "13/2"],
            Some(&[]),
            Some(&["13/2"]),
            Some(DIAMOND),
            Mark::None,
        ),
        short(
            &["3/2", "13/2"],
            Some(&[]),
            Some(&["13/2"]),
            Some(DIAMOND),
            Mark::None,
        ),
        short(
            &["1/2", "3"],
            Some(&["13/2"]),
            None,
            Some(&["2", "1/2", "3"]),
            Mark::None,
        ),
        short(
            &["3/2", "1"],
            Some(&["13/2"]),
            None,
            Some(&["2", "3/2", "1"]),
            Mark::None,
        ),
        short(&["1", "3"], Some(&[]), None, None, Mark::None),
        short(
            &["3/2", "2", "1/2"],
            Some(&[]),
            Some(&["1/2", "3/2"]),
            None,
            Mark::None,
        ),
        short(
            &["2", "1/2", "13/2"],
            Some(&["3/2"]),
            Some(&["13/2"]),
            Some(DIAMOND),
            Mark::NotSummandClosed,
        ),
        short(
            &["2", "3/2", "13/2"],
            Some(&["1/2"]),
            Some(&["13/2"]),
            Some(DIAMOND),
            Mark::NotSummandClosed,
        ),
        short(
            &["2", "1/2", "3"],
            Some(&["13/2", "3/2"]),
            Some(&["1/2", "3"]),
            None,
            Mark::None,
        ),
        short(
            &["2", "3/2", "1"],
            Some(&["1/2", "13/2"]),
            Some(&["3/2", "1"]),
            None,
            Mark::None,
        ),
        short(
            &["3/2", "13/2", "1/2"],
            Some(&[]),
            Some(&["13/2"]),
            Some(DIAMOND),
            Mark::NotKernelClosed,
        ),
        short(
            &["1", "2", "3"],
            Some(&["1/2", "13/2", "3/2"]),
            None,
            None,
            Mark::None,
        ),
        short(DIAMOND, Some(&[]), Some(&["13/2"]), None, Mark::None),
    ],
};

pub const NAK2: Table = Table {
    preset: "nak2",
    min_size: 0,
    rows: &[
        short(&[], None, None, None, Mark::None),
        short(&["1"], None, None, None, Mark::None),
        short(&["2"], None, None, None, Mark::None),
        short(&["1/2"], None, None, Some(&["2", "1/2"]), Mark::None),
        short(&["2/1"], None, None, Some(&["1", "2/1"]), Mark::None),
        short(&["1", "2/1"], None, Some(&["2/1"]), None, Mark::None),
        short(&["2", "1/2"], None, Some(&["1/2"]), None, Mark::None),
        short(&["1", "2"], None, None, None, Mark::None),
    ],
};

pub fn table_for(preset: &str) -> Option<&'static Table> {
    [&A3_LINEAR, &A3_SOURCE, &NAK2]
        .into_iter()
        .find(|t| t.preset == preset)
}

/// Resolves labels to sorted class ids.
pub fn resolve(u: &Universe, labels: &[&str]) -> Option<Vec<ClassId>> {
    let mut ids: Vec<ClassId> = labels
        .iter()
        .map(|l| u.class_of_label(l))
        .collect::<Option<_>>()?;
    ids.sort_unstable();
    Some(ids)
}

pub fn labels(u: &Universe, ids: impl IntoIterator<Item = ClassId>) -> String {
    let l: Vec<String> = ids.into_iter().map(|i| u.label(i)).collect();
    format!("{{{}}}", l.join(", "))
}

/// Every disagreement between a table and the universe, as readable lines.
pub fn check_table(u: &Universe, table: &Table) -> Vec<String> {
    let mut problems = Vec::new();
    let all = u.monobricks_bruteforce();
    let expected: BTreeSet<Vec<ClassId>> = all
        .iter()
        .filter(|m| m.len() >= table.min_size)
        .cloned()
        .collect();
    let mut listed = BTreeSet::new();
    for (k, r) in table.rows.iter().enumerate() {
        let name = format!("row {} {:?}", k + 1, r.monobrick);
        let Some(mm) = resolve(u, r.monobrick) else {
            problems.push(format!("{name}: unknown label"));
            continue;
        };
        listed.insert(mm.clone());
        if !all.contains(&mm) {
            problems.push(format!("{name}: not a monobrick"));
            continue;
        }
        let want = |col: Option<&[&str]>| col.map_or(Some(mm.clone()), |c| resolve(u, c));
        let mut got = u.brick_mmax(&mm);
        got.sort_unstable();
        if want(r.mmax) != Some(got.clone()) {
            problems.push(format!("{name}: mmax is {}", labels(u, got)));
        }
        let mut got = u.brick_cofinal_closure(&mm);
        got.sort_unstable();
        if want(r.closure) != Some(got.clone()) {
            problems.push(format!("{name}: closure is {}", labels(u, got)));
        }

        let e = u.filt(mm.iter().copied());
        let flags = e.closure_flags();
        if r.wide.is_some_and(|w| w != flags.is_wide()) {
            problems.push(format!("{name}: wide is {}", flags.is_wide()));
        }
        if r.torsion_free.is_some_and(|t| t != flags.is_torsion_free()) {
            problems.push(format!("{name}: torsion-free is {}", flags.is_torsion_free()));
        }
        let members: BTreeSet<ClassId> = mm.iter().copied().collect();
        if !members.is_subset(&e.indecomposables()) {
            problems.push(format!("{name}: black vertices missing from Filt"));
        }
        if let Some(white) = r.white {
            let Some(white) = resolve(u, white) else {
                problems.push(format!("{name}: unknown white label"));
                continue;
            };
            let white: BTreeSet<ClassId> = white.into_iter().collect();
            let found: BTreeSet<ClassId> = e.add_indecomposables().difference(&members).copied().collect();
            if white != found {
                problems.push(format!("{name}: add(Filt) adds {}", labels(u, found)));
            }
            let in_e: BTreeSet<ClassId> = e.indecomposables().difference(&members).copied().collect();
            let expected_in_e = if r.mark == Mark::NotSummandClosed {
                BTreeSet::new()
            } else {
                white
            };
            if in_e != expected_in_e {
                problems.push(format!("{name}: Filt adds indecomposables {}", labels(u, in_e)));
            }
        }
        let (summands, kernels, images) = match r.mark {
            Mark::None => (true, true, true),
            Mark::NotSummandClosed => (false, false, false),
            Mark::NotKernelClosed => (true, false, true),
        };
        if (flags.summands, flags.kernels, flags.images) != (summands, kernels, images) {
            problems.push(format!(
                "{name}: summands/kernels/images closed = {}/{}/{}",
                flags.summands, flags.kernels, flags.images
            ));
        }
    }
    for missing in expected.difference(&listed) {
        problems.push(format!(
            "monobrick {} is not listed",
            labels(u, missing.iter().copied())
        ));
    }
    for extra in listed.difference(&expected) {
        problems.push(format!(
            "listed set {} is out of range",
            labels(u, extra.iter().copied())
        ));
    }
    problems
}
