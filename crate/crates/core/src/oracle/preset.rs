//! The five bound quivers the oracle knows, with their indecomposables.
//!
//! Vertex `v` of a label is vertex `v - 1` internally. Labels list composition
//! factors from the top down, so `2/1` has top `S_2` and socle `S_1`, and
//! `13/2` has top `S_1 + S_3`.

use crate::arc::{arc_label, AlgebraSpec, Arc};
use crate::error::{Error, Result};

use super::rep::{Quiver, Rep};

/// A thin indecomposable: its support and the arrows acting as identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndecSpec {
    pub label: &'static str,
    pub support: &'static [usize],
    pub active: &'static [usize],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub quiver: Quiver,
    pub indecomposables: Vec<IndecSpec>,
    /// The Nakayama algebra whose arcs index the bricks, if any.
    pub arc_model: Option<AlgebraSpec>,
}

pub const PRESET_NAMES: [&str; 5] = ["a2_linear", "a3_linear", "a3_source", "nak2", "b3"];

const fn ind(label: &'static str, support: &'static [usize], active: &'static [usize]) -> IndecSpec {
    IndecSpec {
        label,
        support,
        active,
    }
}

impl Preset {
    pub fn by_name(name: &str) -> Result<Preset> {
        let preset = match name {
            // 1 <- 2
            "a2_linear" => Preset {
                name: "a2_linear",
                quiver: Quiver {
                    vertices: 2,
                    arrows: vec![(1, 0)],
                    relations: vec![],
                },
                indecomposables: vec![
                    ind("1", &[0], &[]),
                    ind("2", &[1], &[]),
                    ind("2/1", &[0, 1], &[0]),
                ],
                arc_model: Some(AlgebraSpec::LinearA(2)),
            },
            // 1 <- 2 <- 3
            "a3_linear" => Preset {
                name: "a3_linear",
                quiver: Quiver {
                    vertices: 3,
                    arrows: vec![(1, 0), (2, 1)],
                    relations: vec![],
                },
                indecomposables: vec![
                    ind("1", &[0], &[]),
                    ind("2", &[1], &[]),
                    ind("3", &[2], &[]),
                    ind("2/1", &[0, 1], &[0]),
                    ind("3/2", &[1, 2], &[1]),
                    ind("3/2/1", &[0, 1, 2], &[0, 1]),
                ],
                arc_model: Some(AlgebraSpec::LinearA(3)),
            },
            // 1 -> 2 <- 3
            "a3_source" => Preset {
                name: "a3_source",
                quiver: Quiver {
                    vertices: 3,
                    arrows: vec![(0, 1), (2, 1)],
                    relations: vec![],
                },
                indecomposables: vec![
                    ind("1", &[0], &[]),
                    ind("2", &[1], &[]),
                    ind("3", &[2], &[]),
                    ind("1/2", &[0, 1], &[0]),
                    ind("3/2", &[1, 2], &[1]),
                    ind("13/2", &[0, 1, 2], &[0, 1]),
                ],
                arc_model: None,
            },
            // 1 <-> 2, both paths of length two zero
            "nak2" => Preset {
                name: "nak2",
                quiver: Quiver {
                    vertices: 2,
                    arrows: vec![(1, 0), (0, 1)],
                    relations: vec![vec![0, 1], vec![1, 0]],
                },
                indecomposables: vec![
                    ind("1", &[0], &[]),
                    ind("2", &[1], &[]),
                    ind("2/1", &[0, 1], &[0]),
                    ind("1/2", &[0, 1], &[1]),
                ],
                arc_model: Some(AlgebraSpec::CyclicB(2)),
            },
            // 2 -> 1, 3 -> 2, 1 -> 3, all paths of length three zero
            "b3" => Preset {
                name: "b3",
                quiver: Quiver {
                    vertices: 3,
                    arrows: vec![(1, 0), (2, 1), (0, 2)],
                    relations: vec![vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 2]],
                },
                indecomposables: vec![
                    ind("1", &[0], &[]),
                    ind("2", &[1], &[]),
                    ind("3", &[2], &[]),
                    ind("2/1", &[0, 1], &[0]),
                    ind("3/2", &[1, 2], &[1]),
                    ind("1/3", &[0, 2], &[2]),
                    ind("3/2/1", &[0, 1, 2], &[0, 1]),
                    ind("1/3/2", &[0, 1, 2], &[1, 2]),
                    ind("2/1/3", &[0, 1, 2], &[2, 0]),
                ],
                arc_model: Some(AlgebraSpec::CyclicB(3)),
            },
            other => return Err(Error::UnknownPreset(other.to_string())),
        };
        Ok(preset)
    }

    pub fn all() -> Vec<Preset> {
        PRESET_NAMES
            .iter()
            .map(|n| Preset::by_name(n).expect("built-in preset"))
            .collect()
    }

    pub fn indec_rep(&self, k: usize) -> Rep {
        let spec = &self.indecomposables[k];
        Rep::thin(&self.quiver, spec.support, spec.active)
    }

    pub fn indec_index(&self, label: &str) -> Option<usize> {
        self.indecomposables.iter().position(|i| i.label == label)
    }

    pub fn max_indec_dim(&self) -> usize {
        self.indecomposables
            .iter()
            .map(|i| i.support.len())
            .max()
            .unwrap_or(0)
    }

    /// The indecomposable `M_a` for an arc of the arc model.
    pub fn indec_of_arc(&self, a: Arc) -> Result<usize> {
        let spec = self
            .arc_model
            .ok_or_else(|| Error::Oracle(format!("preset {} has no arc model", self.name)))?;
        spec.check(a)?;
        let label = arc_label(a, spec.marks());
        self.indec_index(&label)
            .ok_or_else(|| Error::Oracle(format!("no indecomposable labelled {label}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::linalg::Field;

    #[test]
    fn indecomposables_satisfy_relations() {
        let f = Field::new(2).unwrap();
        for p in Preset::all() {
            for k in 0..p.indecomposables.len() {
                assert!(
                    p.indec_rep(k).satisfies_relations(&p.quiver, f),
                    "{} {}",
                    p.name,
                    k
                );
            }
        }
    }

    #[test]
    fn list_sizes() {
        let sizes: Vec<usize> = Preset::all().iter().map(|p| p.indecomposables.len()).collect();
        assert_eq!(sizes, vec![3, 6, 6, 4, 9]);
    }

    #[test]
    fn arcs_cover_indecomposables() {
        for p in Preset::all() {
            let Some(spec) = p.arc_model else { continue };
            let mut seen: Vec<usize> = spec
                .arcs()
                .into_iter()
                .map(|a| p.indec_of_arc(a).unwrap())
                .collect();
            seen.sort_unstable();
            assert_eq!(
                seen,
                (0..p.indecomposables.len()).collect::<Vec<_>>(),
                "{}",
                p.name
            );
        }
    }

    #[test]
    fn unknown_preset() {
        assert_eq!(Preset::by_name("e6"), Err(Error::UnknownPreset("e6".into())));
    }
}
