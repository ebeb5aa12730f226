//! The two-dimensional dendriform dialgebras over ℚ in the standard
//! list: six coming from weight-zero Rota-Baxter operators and five
//! further ones. Products not listed are zero; indices are 0-based.
//!
//! `extra-2` is stored exactly as listed and fails two axioms, e.g.
//! `(e1≺e2)≺e1 = 0` but `e1≺(e2⋆e1) = e2`. No single reading repairs it
//! unambiguously, so it is left alone.

use crate::exactlin::{FieldSpec, StructureTensor};
use crate::structures::DendriformDi;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub dendriform: DendriformDi,
    /// The listed entry assigns `e1≺e1` twice; the second assignment is
    /// read as `e1≻e1`.
    pub typo_corrected: bool,
}

type Constants = &'static [(usize, usize, usize, i64, i64)];

const ENTRIES: [(&str, Constants, Constants, bool); 11] = [
    ("rb-1", &[], &[], false),
    ("rb-2", &[(1, 1, 0, 1, 2)], &[(1, 1, 0, 1, 2)], false),
    ("rb-3", &[(1, 0, 1, 1, 1)], &[(0, 0, 0, 1, 1), (0, 1, 1, 1, 1)], false),
    ("rb-4", &[(1, 1, 0, 1, 1)], &[], false),
    ("rb-5", &[(0, 0, 0, 1, 1), (1, 0, 1, 1, 1)], &[(0, 1, 1, 1, 1)], false),
    ("rb-6", &[], &[(1, 1, 0, 1, 1)], false),
    ("extra-1", &[(0, 0, 0, 1, 1)], &[(1, 1, 1, 1, 1)], false),
    ("extra-2", &[(0, 0, 0, 1, 1), (0, 1, 1, 1, 1)], &[(1, 0, 1, 1, 1)], false),
    ("extra-3", &[(0, 1, 1, -1, 1)], &[(0, 0, 0, 1, 1), (0, 1, 1, 1, 1)], false),
    ("extra-4", &[(0, 0, 1, 1, 1)], &[(0, 0, 1, -1, 1)], true),
    ("extra-5", &[(0, 0, 1, 1, 3)], &[(0, 0, 1, 2, 3)], false),
];

pub fn builtin_catalogue() -> Vec<CatalogueEntry> {
    let q = FieldSpec::Rational;
    ENTRIES
        .iter()
        .map(|&(name, prec, succ, typo_corrected)| CatalogueEntry {
            name,
            dendriform: DendriformDi::new(
                StructureTensor::from_ratios(q, 2, prec),
                StructureTensor::from_ratios(q, 2, succ),
            )
            .expect("same shape"),
            typo_corrected,
        })
        .collect()
}

/// Looks an entry up by name.
pub fn catalogue_entry(name: &str) -> Option<CatalogueEntry> {
    builtin_catalogue().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::validate_dendriform_di;

    #[test]
    fn all_but_extra_2_valid() {
        let cat = builtin_catalogue();
        assert_eq!(cat.len(), 11);
        for e in &cat {
            let rep = validate_dendriform_di(&e.dendriform);
            assert_eq!(rep.passed, e.name != "extra-2", "{}: {rep}", e.name);
        }
        let rep = validate_dendriform_di(&catalogue_entry("extra-2").unwrap().dendriform);
        assert_eq!(rep.violations[0].indices, vec![0, 1, 0]);
        assert_eq!(cat.iter().filter(|e| e.typo_corrected).count(), 1);
    }

    #[test]
    fn spot_entries() {
        let rb1 = catalogue_entry("rb-1").unwrap().dendriform;
        assert!(rb1.prec().is_zero() && rb1.succ().is_zero());
        let e5 = catalogue_entry("extra-5").unwrap().dendriform;
        assert_eq!(e5.prec().get(0, 0, 1).to_string(), "1/3");
        assert_eq!(e5.succ().get(0, 0, 1).to_string(), "2/3");
        assert!(catalogue_entry("rb-7").is_none());
    }
}
