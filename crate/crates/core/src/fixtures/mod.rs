//! Printed example arrays, stored as transcribed text and instantiated on demand.
//!
//! Names follow the displays: `H(n;k)` for complete arrays, `B(n)` for the
//! small-order blocks that are completed by the 3x3 block `C`, and
//! `A1_m2`/`A1_m3` for the parametric Case E blocks.

mod data;
mod template;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::array::{SparseSquareArray, SupportSet};
use crate::cycles::CellSet;

pub use template::{Expr, Instantiated, Params, Template, TemplateError, HIGHLIGHT_MASK};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("fixture {0:?} is parametric in k; supply k")]
    MissingParameter(String),
    #[error("fixture {0:?} takes no parameter")]
    UnexpectedParameter(String),
    #[error("fixture {name:?}: {source}")]
    Template {
        name: String,
        #[source]
        source: TemplateError,
    },
}

/// Line-sum and support contract declared for a sub-block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockContract {
    pub line_sum: i64,
    pub support: SupportSet,
}

/// How a parametric fixture was instantiated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parametric {
    /// Order of the full array whose `n` appears in the entries.
    pub n: usize,
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub array: SparseSquareArray,
    pub masks: BTreeMap<String, CellSet>,
    pub provenance: &'static str,
    pub parametric: Option<Parametric>,
    /// For complete arrays: the fill `k` the display is labelled with.
    pub heffter_k: Option<usize>,
    pub contract: Option<BlockContract>,
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    /// A complete array labelled `H(n;k)`.
    Heffter { k: usize },
    /// A block `B(n)` of order `n - 3` with zero line sums.
    Block { full_order: usize },
    /// Entries mention `k`; `default_k` is used when none is supplied.
    ParamK { n: usize, default_k: Option<u64>, heffter_k: Option<usize> },
    /// Worked illustration with no contract of its own.
    Example,
}

struct Entry {
    name: &'static str,
    text: &'static str,
    provenance: &'static str,
    kind: Kind,
}

const ENTRIES: &[Entry] = &[
    Entry { name: "H(7;3)", text: data::H7_3, provenance: "small-order table, Case B smallest order", kind: Kind::Heffter { k: 3 } },
    Entry { name: "B(11)", text: data::B11, provenance: "small-order table, Case B block", kind: Kind::Block { full_order: 11 } },
    Entry { name: "B(15)", text: data::B15, provenance: "small-order table, Case B block", kind: Kind::Block { full_order: 15 } },
    Entry { name: "H(6;3)", text: data::H6_3, provenance: "small-order table, Case C smallest order", kind: Kind::Heffter { k: 3 } },
    Entry { name: "B(10)", text: data::B10, provenance: "small-order table, Case C block", kind: Kind::Block { full_order: 10 } },
    Entry { name: "B(14)", text: data::B14, provenance: "small-order table, Case C block", kind: Kind::Block { full_order: 14 } },
    Entry { name: "B(18)", text: data::B18, provenance: "small-order table, Case C block", kind: Kind::Block { full_order: 18 } },
    Entry { name: "B(22)", text: data::B22, provenance: "small-order table, Case C block", kind: Kind::Block { full_order: 22 } },
    Entry { name: "B(26)", text: data::B26, provenance: "small-order table, Case C block", kind: Kind::Block { full_order: 26 } },
    Entry {
        name: "H(30;3)",
        text: data::H30_3,
        provenance: "small-order table, Case C order 30 with cycles H and K",
        kind: Kind::ParamK { n: 30, default_k: Some(3), heffter_k: Some(3) },
    },
    Entry { name: "H(9;5)", text: data::H9_5, provenance: "small-order table, Case D smallest order", kind: Kind::Heffter { k: 5 } },
    Entry { name: "H(6;5)", text: data::H6_5, provenance: "small-order table, Case E smallest order", kind: Kind::Heffter { k: 5 } },
    Entry { name: "H(13;9)", text: data::H13_9, provenance: "small-order table, Case D order 13 with cycles H and K", kind: Kind::Heffter { k: 9 } },
    Entry { name: "H(15;6)", text: data::H15_6, provenance: "Case A worked example", kind: Kind::Heffter { k: 6 } },
    Entry { name: "H(19;3)", text: data::H19_3, provenance: "Case B worked example", kind: Kind::Heffter { k: 3 } },
    Entry { name: "H(17;5)", text: data::H17_5, provenance: "Case D worked example with cycle H", kind: Kind::Heffter { k: 5 } },
    Entry { name: "H(18;5)", text: data::H18_5, provenance: "Case E worked example with cycles H and K", kind: Kind::Heffter { k: 5 } },
    Entry {
        name: "A1_m2",
        text: data::A1_M2,
        provenance: "Case E block A_1 for n = 10",
        kind: Kind::ParamK { n: 10, default_k: None, heffter_k: None },
    },
    Entry {
        name: "A1_m3",
        text: data::A1_M3,
        provenance: "Case E block A_1 for n = 14",
        kind: Kind::ParamK { n: 14, default_k: None, heffter_k: None },
    },
    Entry { name: "bacon(9)", text: data::BACON_9, provenance: "two Hamilton cycles filled with 1..36, S1 highlighted", kind: Kind::Example },
    Entry { name: "A0'(m=4)", text: data::A0P_M4, provenance: "Case B block A_0' for m = 4", kind: Kind::Example },
    Entry { name: "A0'(m=7)", text: data::A0P_M7, provenance: "Case C block A_0' for m = 7", kind: Kind::Example },
];

/// Support every `B(n)` block must have: the magnitudes `1..=3n-6` except 5, 6, 7.
pub fn block_support(full_order: usize) -> SupportSet {
    SupportSet::range(1, 4).union(&SupportSet::range(8, 3 * full_order as u64 - 6))
}

/// Every fixture name, sorted.
pub fn list_fixtures() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = ENTRIES.iter().map(|e| e.name).collect();
    names.sort_unstable();
    names
}

pub fn get_fixture(name: &str, k: Option<u64>) -> Result<Fixture, FixtureError> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| FixtureError::UnknownFixture(name.to_string()))?;
    let wrap = |source| FixtureError::Template {
        name: name.to_string(),
        source,
    };
    let template = Template::parse(entry.text).map_err(wrap)?;
    let (params, parametric, heffter_k, contract) = match entry.kind {
        Kind::ParamK { n, default_k, heffter_k } => {
            let k = k
                .or(default_k)
                .ok_or_else(|| FixtureError::MissingParameter(name.to_string()))?;
            let params = Params {
                n: Some(n as i64),
                k: Some(k as i64),
                m: None,
            };
            (params, Some(Parametric { n, k }), heffter_k.map(|_| k as usize), None)
        }
        other => {
            if k.is_some() {
                return Err(FixtureError::UnexpectedParameter(name.to_string()));
            }
            match other {
                Kind::Heffter { k } => (Params::default(), None, Some(k), None),
                Kind::Block { full_order } => (
                    Params::default(),
                    None,
                    None,
                    Some(BlockContract {
                        line_sum: 0,
                        support: block_support(full_order),
                    }),
                ),
                _ => (Params::default(), None, None, None),
            }
        }
    };
    let Instantiated { array, masks } = template.instantiate(params).map_err(wrap)?;
    Ok(Fixture {
        name: entry.name.to_string(),
        array,
        masks,
        provenance: entry.provenance,
        parametric,
        heffter_k,
        contract,
    })
}

/// Building blocks with entries in `m`, `n` and `k`, used by the constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockTemplate {
    /// 7x7 block of the order `4m+3` construction.
    A1CaseB,
    /// 3x3 block holding 5, 6, 7 and the six largest magnitudes.
    C,
    /// 13x13 block of the order `4m+6` construction.
    A1CaseC,
    /// 3x3 block holding 8, 9, 10 and large magnitudes.
    A2,
    /// 3x3 block holding 11, 12, 13 and large magnitudes.
    A3,
    /// Case E block for `m = 2`.
    A1M2,
    /// Case E block for `m = 3`.
    A1M3,
}

impl BlockTemplate {
    fn text(self) -> &'static str {
        match self {
            BlockTemplate::A1CaseB => data::A1_CASE_B,
            BlockTemplate::C => data::C_BLOCK,
            BlockTemplate::A1CaseC => data::A1_CASE_C,
            BlockTemplate::A2 => data::A2_BLOCK,
            BlockTemplate::A3 => data::A3_BLOCK,
            BlockTemplate::A1M2 => data::A1_M2,
            BlockTemplate::A1M3 => data::A1_M3,
        }
    }

    pub fn instantiate(self, params: Params) -> Result<SparseSquareArray, TemplateError> {
        Ok(Template::parse(self.text())?.instantiate(params)?.array)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::Position;

    #[test]
    fn h7_3_row_five() {
        let f = get_fixture("H(7;3)", None).unwrap();
        let row: Vec<i64> = (1..=7).filter_map(|c| f.array.get(Position::new(5, c))).collect();
        assert_eq!(row, vec![5, 21, 17]);
        assert_eq!(row.iter().sum::<i64>(), 43);
    }

    #[test]
    fn a1_m2_is_parametric() {
        let f = get_fixture("A1_m2", Some(5)).unwrap();
        assert_eq!(f.array.get(Position::new(1, 2)), Some(46));
        assert_eq!(
            get_fixture("A1_m2", None),
            Err(FixtureError::MissingParameter("A1_m2".into()))
        );
        assert_eq!(
            get_fixture("H(7;3)", Some(3)),
            Err(FixtureError::UnexpectedParameter("H(7;3)".into()))
        );
        assert!(matches!(get_fixture("H(2;2)", None), Err(FixtureError::UnknownFixture(_))));
    }

    #[test]
    fn h30_masks() {
        let f = get_fixture("H(30;3)", None).unwrap();
        assert_eq!(f.masks["H"].len(), 60);
        assert_eq!(f.masks["K"].len(), 60);
        assert_eq!(f.array.get(Position::new(28, 29)), Some(90));
        let f7 = get_fixture("H(30;3)", Some(7)).unwrap();
        assert_eq!(f7.array.get(Position::new(28, 29)), Some(210));
    }

    #[test]
    fn listing_is_sorted_and_stable() {
        let a = list_fixtures();
        assert_eq!(a, list_fixtures());
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert!(a.len() >= 15);
        for b in ["B(10)", "B(14)", "B(18)", "B(22)", "B(26)"] {
            assert!(a.contains(&b));
        }
        for name in a {
            let k = if name.starts_with("A1_m") { Some(5) } else { None };
            get_fixture(name, k).unwrap();
        }
    }

    #[test]
    fn masks_avoid_numeric_cells() {
        for name in list_fixtures() {
            let k = if name.starts_with("A1_m") { Some(5) } else { None };
            let f = get_fixture(name, k).unwrap();
            let filled = CellSet::from_positions(f.array.order(), f.array.positions());
            for (mname, m) in &f.masks {
                if mname != HIGHLIGHT_MASK {
                    assert!(m.is_disjoint(&filled), "{name} {mname}");
                }
            }
        }
    }
}
