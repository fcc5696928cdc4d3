//! The four Fano threefolds of Picard number one that double cover a
//! Fano-Enriques threefold with terminal cyclic quotient singularities.

use thiserror::Error;

use crate::covers::{cover_invariants, CoverError, CoverInvariants, FanoInput};
use crate::exactnum::{as_i64, Rational};
use crate::varieties::{self, ModelError, WciModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{name}: {source}")]
    Model { name: String, source: ModelError },
    #[error("{name}: {source}")]
    Cover { name: String, source: CoverError },
    #[error("{name}: computed {field} = {computed} but catalog asserts {asserted}")]
    Mismatch {
        name: String,
        field: &'static str,
        computed: String,
        asserted: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoRecord {
    pub name: &'static str,
    pub model: WciModel,
    pub asserted_r: i64,
    pub asserted_k3: i64,
    pub asserted_euler: i64,
    pub description: &'static str,
}

impl FanoRecord {
    fn model_err(&self, source: ModelError) -> CatalogError {
        CatalogError::Model {
            name: self.name.to_string(),
            source,
        }
    }

    /// Recomputes `(r, (-K)^3, e)` from the model and compares them with
    /// the stored values.
    pub fn verify(&self) -> Result<(), CatalogError> {
        let r = varieties::fano_index(&self.model).map_err(|e| self.model_err(e))?;
        let k3 = varieties::minus_k_cubed(&self.model).map_err(|e| self.model_err(e))?;
        let e = varieties::euler_characteristic(&self.model).map_err(|e| self.model_err(e))?;
        let checks: [(&'static str, Rational, i64); 3] = [
            ("r", Rational::from_integer(r.into()), self.asserted_r),
            ("(-K)^3", k3, self.asserted_k3),
            ("e", e, self.asserted_euler),
        ];
        for (field, computed, asserted) in checks {
            if as_i64(&computed) != Some(asserted) {
                return Err(CatalogError::Mismatch {
                    name: self.name.to_string(),
                    field,
                    computed: computed.to_string(),
                    asserted,
                });
            }
        }
        Ok(())
    }

    /// Cover-computation input built from the model alone.
    pub fn fano_input(&self) -> Result<FanoInput, CatalogError> {
        let r = varieties::fano_index(&self.model).map_err(|e| self.model_err(e))?;
        let as_int = |field: &'static str, q: Rational| {
            as_i64(&q).ok_or_else(|| CatalogError::Mismatch {
                name: self.name.to_string(),
                field,
                computed: q.to_string(),
                asserted: 0,
            })
        };
        let k3 = as_int(
            "(-K)^3",
            varieties::minus_k_cubed(&self.model).map_err(|e| self.model_err(e))?,
        )?;
        let e = as_int(
            "e",
            varieties::euler_characteristic(&self.model).map_err(|e| self.model_err(e))?,
        )?;
        FanoInput::new(e, k3, r, 1).map_err(|source| CatalogError::Cover {
            name: self.name.to_string(),
            source,
        })
    }

    pub fn cover_invariants(&self) -> Result<CoverInvariants, CatalogError> {
        cover_invariants(&self.fano_input()?).map_err(|source| CatalogError::Cover {
            name: self.name.to_string(),
            source,
        })
    }

    /// Model of the double cover of `X` branched along `|-2K_X|`, which is
    /// an etale double cover of `Y`.
    pub fn etale_cover_model(&self) -> Result<WciModel, CatalogError> {
        varieties::etale_cover_model(&self.model, self.asserted_r).map_err(|e| self.model_err(e))
    }
}

fn record(
    name: &'static str,
    weights: &[u64],
    degrees: &[u64],
    (asserted_r, asserted_k3, asserted_euler): (i64, i64, i64),
    description: &'static str,
) -> FanoRecord {
    FanoRecord {
        name,
        model: WciModel::new(weights, degrees).expect("builtin model is valid"),
        asserted_r,
        asserted_k3,
        asserted_euler,
        description,
    }
}

pub fn builtin_families() -> Vec<FanoRecord> {
    vec![
        record(
            "X1",
            &[1, 1, 1, 1, 1, 2],
            &[2, 4],
            (1, 4, -56),
            "complete intersection of a quadric and a quartic in P(1,1,1,1,1,2)",
        ),
        record(
            "X2",
            &[1, 1, 1, 1, 1, 1, 1],
            &[2, 2, 2],
            (1, 8, -24),
            "complete intersection of three quadrics in P^6",
        ),
        record(
            "X3",
            &[1, 1, 1, 1, 2],
            &[4],
            (2, 16, -16),
            "quartic hypersurface in P(1,1,1,1,2)",
        ),
        record(
            "X4",
            &[1, 1, 1, 1, 1, 1],
            &[2, 2],
            (2, 32, 0),
            "complete intersection of two quadrics in P^5",
        ),
    ]
}

/// Looks up a builtin family by name (`X1`..`X4`, case-insensitive).
pub fn find(name: &str) -> Option<FanoRecord> {
    builtin_families()
        .into_iter()
        .find(|r| r.name.eq_ignore_ascii_case(name))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table1Row {
    pub name: String,
    pub h_y_cubed: i64,
    pub h_c2: i64,
    pub h11: i64,
    pub h12: i64,
}

impl Table1Row {
    pub fn tuple(&self) -> (i64, i64, i64, i64) {
        (self.h_y_cubed, self.h_c2, self.h11, self.h12)
    }
}

/// Invariants of the Calabi-Yau double covers, one row per builtin family
/// in catalog order.
pub fn table1() -> Result<Vec<Table1Row>, CatalogError> {
    builtin_families()
        .iter()
        .map(|rec| {
            let y = rec.cover_invariants()?;
            Ok(Table1Row {
                name: rec.name.to_string(),
                h_y_cubed: y.h_y_cubed,
                h_c2: y.h_c2,
                h11: y.h11,
                h12: y.h12,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::euler_cover;
    use crate::exactnum::int;

    #[test]
    fn four_families() {
        let fams = builtin_families();
        assert_eq!(fams.len(), 4);
        let x2 = &fams[1];
        assert_eq!(
            (x2.asserted_r, x2.asserted_k3, x2.asserted_euler),
            (1, 8, -24)
        );
        let x3 = &fams[2];
        assert_eq!(
            (x3.asserted_r, x3.asserted_k3, x3.asserted_euler),
            (2, 16, -16)
        );
    }

    #[test]
    fn records_are_self_consistent() {
        for rec in builtin_families() {
            rec.verify().unwrap();
        }
    }

    #[test]
    fn tampered_record_is_caught() {
        let mut rec = find("X3").unwrap();
        rec.asserted_euler = -14;
        assert!(matches!(
            rec.verify().unwrap_err(),
            CatalogError::Mismatch {
                field: "e",
                asserted: -14,
                ..
            }
        ));
    }

    #[test]
    fn table_rows() {
        let t = table1().unwrap();
        let names: Vec<_> = t.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["X1", "X2", "X3", "X4"]);
        assert_eq!(t[1].tuple(), (8, 32, 1, 33));
        assert_eq!(t[2].tuple(), (2, 20, 1, 37));
        assert_eq!(t[0].tuple(), (4, 28, 1, 45));
        assert_eq!(t[0].tuple(), t[3].tuple());
    }

    #[test]
    fn etale_covers_of_x1_and_x4_coincide() {
        let a = find("X1").unwrap().etale_cover_model().unwrap();
        let b = find("x4").unwrap().etale_cover_model().unwrap();
        assert_eq!(a, b);
        assert_eq!(varieties::euler_characteristic(&a).unwrap(), int(-176));
        let y1 = find("X1").unwrap().fano_input().unwrap();
        assert_eq!(int(2 * euler_cover(&y1)), int(-176));
    }

    #[test]
    fn unknown_name() {
        assert!(find("X5").is_none());
    }
}
