//! Command implementations behind the `cydouble` binary.
//!
//! Each `cmd_*` function returns the text destined for stdout; `main.rs`
//! only parses arguments, prints, and maps errors to exit codes.

pub mod db;
pub mod spec;
pub mod table;

use thiserror::Error;

use cydouble::catalog::{self, CatalogError};
use cydouble::covers::{self, CoverError, FanoInput};
use cydouble::exactnum::{as_i64, render};
use cydouble::varieties::{self, ModelError};

pub use db::{DbError, KnownCyDatabase, KnownEntry};
pub use spec::parse_model_spec;
pub use table::{Format, OutputTable};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Db(#[from] DbError),
    #[error(transparent)]
    Table(#[from] table::RaggedRow),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn kv(out: &mut String, key: &str, value: impl std::fmt::Display) {
    out.push_str(key);
    out.push('\t');
    out.push_str(&value.to_string());
    out.push('\n');
}

/// Invariants of a user-supplied model. With `cover`, the model is taken
/// to have Picard number one and the Calabi-Yau double cover block is
/// appended.
pub fn cmd_compute(model_spec: &str, cover: bool) -> Result<String, CliError> {
    let m = parse_model_spec(model_spec)?;
    let h3 = varieties::h_cubed(&m)?;
    let euler = varieties::euler_characteristic(&m)?;
    let c2h = varieties::c2_dot_h(&m)?;
    let chi = varieties::chi_structure_sheaf(&m)?;

    let mut out = String::new();
    kv(&mut out, "model", &m);
    kv(&mut out, "dimension", m.dimension());
    kv(&mut out, "H3", render(&h3));
    kv(&mut out, "euler", render(&euler));
    kv(&mut out, "c2_H", render(&c2h));
    kv(&mut out, "chi_O", render(&chi));
    match varieties::fano_index(&m) {
        Ok(r) => {
            kv(&mut out, "r", r);
            kv(
                &mut out,
                "minus_K_cubed",
                render(&varieties::minus_k_cubed(&m)?),
            );
            kv(
                &mut out,
                "c2_minus_K",
                render(&varieties::c2_dot_minus_k(&m)?),
            );
        }
        Err(e) if cover => return Err(e.into()),
        Err(_) => kv(&mut out, "r", "none"),
    }

    if cover {
        let r = varieties::fano_index(&m)?;
        let k3 = varieties::minus_k_cubed(&m)?;
        let (Some(k3), Some(e)) = (as_i64(&k3), as_i64(&euler)) else {
            return Err(CoverError::InvalidInput(format!(
                "(-K)^3 = {} and e = {} must be integers",
                render(&k3),
                render(&euler)
            ))
            .into());
        };
        let f = FanoInput::new(e, k3, r, 1)?;
        let y = covers::cover_invariants(&f)?;
        kv(&mut out, "Y_euler", y.euler_y);
        kv(&mut out, "Y_H3", y.h_y_cubed);
        kv(&mut out, "Y_Hc2", y.h_c2);
        kv(&mut out, "Y_h11", y.h11);
        kv(&mut out, "Y_h12", y.h12);
        kv(&mut out, "Y_l", y.l_factor);
        kv(&mut out, "Y_chi_H", y.chi_h);
        kv(&mut out, "W_euler", render(&y.euler_w));
        kv(&mut out, "S_euler", render(&y.euler_s));
        kv(&mut out, "S_X_euler", render(&y.euler_sx));
    }
    Ok(out)
}

pub fn table1_output() -> Result<OutputTable, CliError> {
    let rows = catalog::table1()?
        .into_iter()
        .map(|r| {
            vec![
                r.name,
                r.h_y_cubed.to_string(),
                r.h_c2.to_string(),
                r.h11.to_string(),
                r.h12.to_string(),
            ]
        })
        .collect();
    Ok(OutputTable::new(["name", "H3", "Hc2", "h11", "h12"], rows)?)
}

pub fn cmd_table1(format: Format) -> Result<String, CliError> {
    Ok(table1_output()?.render(format))
}

/// Marks each computed cover tuple as NEW or KNOWN against a database file.
pub fn cmd_check_novelty(db_path: &std::path::Path) -> Result<String, CliError> {
    let db = KnownCyDatabase::load(db_path)?;
    check_novelty(&db)
}

pub fn check_novelty(db: &KnownCyDatabase) -> Result<String, CliError> {
    let rows = catalog::table1()?
        .into_iter()
        .map(|r| {
            let (status, label) = match db.lookup(r.tuple()) {
                Some(e) => ("KNOWN", e.label.clone()),
                None => ("NEW", "-".to_string()),
            };
            vec![
                r.name.clone(),
                r.h_y_cubed.to_string(),
                r.h_c2.to_string(),
                r.h11.to_string(),
                r.h12.to_string(),
                status.to_string(),
                label,
            ]
        })
        .collect();
    let t = OutputTable::new(["name", "H3", "Hc2", "h11", "h12", "status", "label"], rows)?;
    Ok(t.render(Format::Tsv))
}

/// Model of the etale double cover of `Y` for a builtin family, with its
/// Euler number from the Chern series next to `2 e(Y)` from the cover
/// formula.
pub fn cmd_cover_model(name: &str) -> Result<String, CliError> {
    let rec = catalog::find(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown family '{name}'; expected one of X1, X2, X3, X4"
        ))
    })?;
    let m = rec.etale_cover_model()?;
    let euler = varieties::euler_characteristic(&m)?;
    let twice_y = 2 * covers::euler_cover(&rec.fano_input()?);
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");

    let mut out = String::new();
    kv(&mut out, "family", rec.name);
    kv(&mut out, "weights", join(m.weights()));
    kv(&mut out, "degrees", join(m.degrees()));
    kv(&mut out, "euler", render(&euler));
    kv(&mut out, "twice_euler_Y", twice_y);
    kv(
        &mut out,
        "agree",
        if as_i64(&euler) == Some(twice_y) {
            "yes"
        } else {
            "no"
        },
    );
    Ok(out)
}

pub fn cmd_list() -> Result<String, CliError> {
    let rows = catalog::builtin_families()
        .into_iter()
        .map(|r| {
            vec![
                r.name.to_string(),
                r.model.to_string(),
                r.asserted_r.to_string(),
                r.asserted_k3.to_string(),
                r.asserted_euler.to_string(),
                r.description.to_string(),
            ]
        })
        .collect();
    let t = OutputTable::new(
        [
            "name",
            "model",
            "r",
            "minus_K_cubed",
            "euler",
            "description",
        ],
        rows,
    )?;
    Ok(t.render(Format::Tsv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field<'a>(out: &'a str, key: &str) -> &'a str {
        out.lines()
            .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
            .unwrap_or_else(|| panic!("no {key} in {out}"))
    }

    #[test]
    fn compute_x1_with_cover() {
        let out = cmd_compute("1,1,1,1,1,2/2,4", true).unwrap();
        assert_eq!(field(&out, "r"), "1");
        assert_eq!(field(&out, "minus_K_cubed"), "4");
        assert_eq!(field(&out, "euler"), "-56");
        assert_eq!(field(&out, "Y_H3"), "4");
        assert_eq!(field(&out, "Y_Hc2"), "28");
        assert_eq!(field(&out, "Y_h12"), "45");
        assert_eq!(field(&out, "Y_euler"), "-88");
    }

    #[test]
    fn compute_p3() {
        let out = cmd_compute("1,1,1,1/", false).unwrap();
        assert_eq!(field(&out, "r"), "4");
        assert_eq!(field(&out, "minus_K_cubed"), "64");
        assert_eq!(field(&out, "euler"), "4");
        assert!(!out.contains("Y_"));
    }

    #[test]
    fn compute_dimension_error() {
        let err = cmd_compute("1,1/2", false).unwrap_err();
        assert!(matches!(
            err,
            CliError::Model(ModelError::Dimension { found: 0, .. })
        ));
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn compute_non_fano() {
        let out = cmd_compute("1,1,1,1,1/5", false).unwrap();
        assert_eq!(field(&out, "r"), "none");
        assert_eq!(field(&out, "c2_H"), "50");
        assert_eq!(field(&out, "euler"), "-200");
        assert!(matches!(
            cmd_compute("1,1,1,1,1/5", true).unwrap_err(),
            CliError::Model(ModelError::NotFano(0))
        ));
    }

    #[test]
    fn compute_fractional_output() {
        // Degree 6/30 in P(1,1,2,3,5): the weighted formula gives fractions.
        let out = cmd_compute("1,1,2,3,5/6", false).unwrap();
        assert_eq!(field(&out, "H3"), "1/5");
        assert!(cmd_compute("1,1,2,3,5/6", true).is_err());
    }

    #[test]
    fn compute_cover_block_for_p3() {
        // r = 4, (-K)^3 = 64: H_Y^3 = 1, H_Y.c2 = 22, e(Y) = 4 - 24 - 128.
        let out = cmd_compute("1,1,1,1/", true).unwrap();
        assert_eq!(field(&out, "Y_H3"), "1");
        assert_eq!(field(&out, "Y_Hc2"), "22");
        assert_eq!(field(&out, "Y_euler"), "-148");
        assert_eq!(field(&out, "Y_chi_H"), "2");
    }

    #[test]
    fn table1_tsv_rows() {
        let out = cmd_table1(Format::Tsv).unwrap();
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "name\tH3\tHc2\th11\th12");
        assert_eq!(lines[4], "X4\t4\t28\t1\t45");
        assert_eq!(lines[2], "X2\t8\t32\t1\t33");
        assert!(out.ends_with('\n'));
        let md = cmd_table1(Format::Markdown).unwrap();
        assert_eq!(md.lines().count(), 2 + 4);
    }

    #[test]
    fn cover_model_outputs() {
        let x1 = cmd_cover_model("X1").unwrap();
        assert_eq!(field(&x1, "weights"), "1,1,1,1,1,1,2");
        assert_eq!(field(&x1, "degrees"), "2,2,4");
        assert_eq!(field(&x1, "euler"), "-176");
        assert_eq!(field(&x1, "twice_euler_Y"), "-176");
        let x4 = cmd_cover_model("X4").unwrap();
        assert_eq!(x1.replace("X1", "X4"), x4);
        let x2 = cmd_cover_model("X2").unwrap();
        assert_eq!(field(&x2, "weights"), "1,1,1,1,1,1,1,1");
        assert_eq!(field(&x2, "degrees"), "2,2,2,2");
        assert_eq!(field(&x2, "euler"), "-128");
        assert!(matches!(
            cmd_cover_model("X9").unwrap_err(),
            CliError::Usage(_)
        ));
    }

    #[test]
    fn list_has_four_rows() {
        let out = cmd_list().unwrap();
        assert_eq!(out.lines().count(), 5);
        assert!(out.contains("X3\t1,1,1,1,2/4\t2\t16\t-16\t"));
    }
}
