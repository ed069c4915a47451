//! The extremal families, random condition-(M) sampling and exhaustive
//! enumeration of small digraphs.

mod canonical;
mod enumerate;
mod families;
mod random;
mod survey;

pub use canonical::{canonical_form, fig1_classes, fig1_digraph, CANONICAL_CAP};
pub use enumerate::{arc_index, arc_mask, enumerate_all, from_arc_mask, par_enumerate, Filter, ENUMERATION_CAP};
pub use families::{gen_dak, gen_dprime, gen_tak, Family, FamilySpec};
pub use random::{deletion_walk, gen_random, gen_random_m, DeletionWalk};
pub use survey::{mask_rows_to_csv, rows_to_csv, survey, survey_masks, MaskRow, SurveyRow};
