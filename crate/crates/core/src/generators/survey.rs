use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::canonical::canonical_form;
use super::enumerate::{arc_mask, from_arc_mask, is_hamiltonian, Filter, ENUMERATION_CAP};
use crate::digraph::BipartiteDigraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub a: usize,
    pub filter: String,
    pub count: u64,
}

/// Flags of one enumerated digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MaskRow {
    pub mask: u64,
    pub condition_m: bool,
    pub min_degree: bool,
    pub half_degrees: bool,
    pub hamiltonian: bool,
}

impl MaskRow {
    pub fn of(graph: &BipartiteDigraph) -> Self {
        MaskRow {
            mask: arc_mask(graph),
            condition_m: Filter::ConditionM.accepts(graph),
            min_degree: Filter::MinDegree.accepts(graph),
            half_degrees: Filter::HalfDegrees.accepts(graph),
            hamiltonian: is_hamiltonian(graph),
        }
    }
}

#[derive(Default)]
struct Tally {
    total: u64,
    condition_m: u64,
    condition_m_hamiltonian: u64,
    min_degree: u64,
    min_degree_condition_m: u64,
    half_degrees: u64,
    half_degrees_hamiltonian: u64,
    semi: u64,
    semi_nonhamiltonian: u64,
    semi_nonhamiltonian_forms: BTreeSet<u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.condition_m += other.condition_m;
        self.condition_m_hamiltonian += other.condition_m_hamiltonian;
        self.min_degree += other.min_degree;
        self.min_degree_condition_m += other.min_degree_condition_m;
        self.half_degrees += other.half_degrees;
        self.half_degrees_hamiltonian += other.half_degrees_hamiltonian;
        self.semi += other.semi;
        self.semi_nonhamiltonian += other.semi_nonhamiltonian;
        self.semi_nonhamiltonian_forms.extend(other.semi_nonhamiltonian_forms);
        self
    }
}

fn check_cap(a: usize) -> Result<()> {
    if !(2..=ENUMERATION_CAP).contains(&a) {
        return Err(Error::CapExceeded {
            what: "survey class size",
            limit: ENUMERATION_CAP,
            value: a,
        });
    }
    Ok(())
}

/// Exhaustive counts over all digraphs with class size `a`. `semi_degree`
/// rows use the bound `ceil((a + 1) / 2)` on both semi-degrees; the
/// `_classes` row counts isomorphism classes.
pub fn survey(a: usize) -> Result<Vec<SurveyRow>> {
    check_cap(a)?;
    let semi = (a + 2) / 2;
    let tally = (0..1u64 << (2 * a * a))
        .into_par_iter()
        .fold(Tally::default, |mut t, m| {
            let g = from_arc_mask(a, m).expect("within cap");
            let row = MaskRow::of(&g);
            t.total += 1;
            t.condition_m += row.condition_m as u64;
            t.condition_m_hamiltonian += (row.condition_m && row.hamiltonian) as u64;
            t.min_degree += row.min_degree as u64;
            t.min_degree_condition_m += (row.min_degree && row.condition_m) as u64;
            t.half_degrees += row.half_degrees as u64;
            t.half_degrees_hamiltonian += (row.half_degrees && row.hamiltonian) as u64;
            if Filter::MinSemiDegree(semi).accepts(&g) {
                t.semi += 1;
                if !row.hamiltonian {
                    t.semi_nonhamiltonian += 1;
                    t.semi_nonhamiltonian_forms.insert(canonical_form(&g).expect("within cap"));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    let rows = [
        ("total", tally.total),
        ("condition_m", tally.condition_m),
        ("condition_m_hamiltonian", tally.condition_m_hamiltonian),
        ("min_degree", tally.min_degree),
        ("min_degree_condition_m", tally.min_degree_condition_m),
        ("half_degrees", tally.half_degrees),
        ("half_degrees_hamiltonian", tally.half_degrees_hamiltonian),
        ("semi_degree", tally.semi),
        ("semi_degree_nonhamiltonian", tally.semi_nonhamiltonian),
        (
            "semi_degree_nonhamiltonian_classes",
            tally.semi_nonhamiltonian_forms.len() as u64,
        ),
    ];
    Ok(rows
        .into_iter()
        .map(|(filter, count)| SurveyRow {
            a,
            filter: filter.to_string(),
            count,
        })
        .collect())
}

/// Per-digraph flags for every digraph passing `filters`, in mask order.
pub fn survey_masks(a: usize, filters: &[Filter]) -> Result<Vec<MaskRow>> {
    check_cap(a)?;
    Ok((0..1u64 << (2 * a * a))
        .into_par_iter()
        .filter_map(|m| {
            let g = from_arc_mask(a, m).expect("within cap");
            filters.iter().all(|f| f.accepts(&g)).then(|| MaskRow::of(&g))
        })
        .collect())
}

pub fn rows_to_csv(rows: &[SurveyRow]) -> String {
    let mut out = String::from("a,filter,count\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.a, r.filter, r.count));
    }
    out
}

pub fn mask_rows_to_csv(rows: &[MaskRow]) -> String {
    let mut out = String::from("mask,condition_m,min_degree,half_degrees,hamiltonian\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.mask, r.condition_m as u8, r.min_degree as u8, r.half_degrees as u8, r.hamiltonian as u8
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn survey_of_a_two() {
        let rows = survey(2).unwrap();
        let get = |name: &str| rows.iter().find(|r| r.filter == name).unwrap().count;
        assert_eq!(get("total"), 256);
        assert_eq!(get("condition_m"), get("condition_m_hamiltonian"));
        assert!(rows_to_csv(&rows).starts_with("a,filter,count\n2,total,256\n"));
        assert!(survey(4).is_err());
    }

    #[test]
    fn mask_rows_match_filters() {
        let rows = survey_masks(2, &[Filter::ConditionM]).unwrap();
        assert!(rows.iter().all(|r| r.condition_m && r.hamiltonian));
        assert!(mask_rows_to_csv(&rows).lines().count() == rows.len() + 1);
    }
}
