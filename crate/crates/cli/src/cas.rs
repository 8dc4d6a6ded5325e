//! Export of a presentation as a Singular script.
//!
//! Singular's `dp` treats the first ring variable as largest, while coxpres
//! orders by degree reverse lexicographic with the last variable largest, so
//! the variables are written in reverse. With that, both systems use the same
//! monomial order and the script can compare reduced bases directly.

use std::fmt::Write;

use coxpres_core::collineation::{cox_presentation, Params};
use coxpres_core::groebner::IdealPresentation;
use coxpres_core::Error;

/// Largest `c + d` for which our own reduced basis is embedded.
const EMBED_BASIS_MAX_M: usize = 7;

fn ideal_body(polys: &[String]) -> String {
    if polys.is_empty() {
        "0".to_string()
    } else {
        polys.iter().map(|p| format!("\n  {p}")).collect::<Vec<_>>().join(",")
    }
}

pub fn singular_script(p: &Params, budget: usize) -> anyhow::Result<String> {
    let cp = cox_presentation(p)?;
    let names: Vec<&str> = cp.variables().iter().rev().map(String::as_str).collect();
    let k = cp.grading.matrix().rows();
    let n = names.len();
    let mut s = String::new();
    writeln!(s, "// Cox ring of X(2, {}, {}), regime {}", p.c, p.d, cp.regime.label())?;
    writeln!(s, "// {} generators, {} relations, grading group Z^{}", n, cp.relations.len(), k)?;
    writeln!(s, "//")?;
    writeln!(s, "// Manual cross-check: run `Singular -q <file>`. The script recomputes a")?;
    writeln!(s, "// reduced standard basis of I and prints 1 for each of the comparisons")?;
    writeln!(s, "// below when it agrees with the basis computed by coxpres.")?;
    writeln!(s, "ring R = 0, ({}), dp;", names.join(", "))?;
    writeln!(s, "option(redSB);")?;
    let rels: Vec<String> = cp.relations.iter().map(|r| r.to_string()).collect();
    writeln!(s, "ideal I = {};", ideal_body(&rels))?;
    let entries: Vec<String> = (0..k)
        .flat_map(|row| (0..n).rev().map(move |col| (row, col)))
        .map(|(row, col)| cp.grading.matrix().get(row, col).to_string())
        .collect();
    writeln!(s, "// column j is the degree of the j-th ring variable")?;
    writeln!(s, "intmat Q[{k}][{n}] = {};", entries.join(","))?;
    writeln!(s, "ideal G = std(I);")?;

    let ours = if p.m() <= EMBED_BASIS_MAX_M {
        let ideal = IdealPresentation::new(&cp.ring, cp.relations.clone())?;
        match ideal.groebner_basis(budget) {
            Ok(gb) => Some(gb.iter().map(|g| g.to_string()).collect::<Vec<_>>()),
            Err(Error::BudgetExceeded { budget }) => {
                writeln!(s, "// coxpres basis omitted: pair budget {budget} exceeded")?;
                None
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        writeln!(s, "// coxpres basis omitted for c + d > {EMBED_BASIS_MAX_M}")?;
        None
    };
    if let Some(gb) = ours {
        writeln!(s, "// reduced Groebner basis computed by coxpres ({} elements)", gb.len())?;
        writeln!(s, "ideal H = {};", ideal_body(&gb))?;
        writeln!(s, "// same ideal")?;
        writeln!(s, "size(reduce(H, G)) == 0 && size(reduce(I, std(H))) == 0;")?;
        writeln!(s, "// same leading terms, hence the same reduced basis up to scaling")?;
        writeln!(s, "size(reduce(lead(G), std(lead(H)))) == 0 && size(G) == size(H);")?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxpres_core::collineation::{cox_relation, cox_ring};

    #[test]
    fn script_shape_33() {
        let s = singular_script(&Params::new(3, 3).unwrap(), 200_000).unwrap();
        assert!(s.contains("ring R = 0, (Tinf, T_5_6, T_4_6, T_4_5, T_3_6,"));
        assert!(s.contains("intmat Q[3][16] = 0,1,1,1,"));
        let p = Params::new(3, 3).unwrap();
        let ring = cox_ring(&p);
        assert!(s.contains(&cox_relation(&ring, &p, [1, 2, 4, 5]).unwrap().to_string()));
        assert!(s.contains("ideal H ="));
        assert_eq!(s.matches("== 0").count(), 3);
    }

    #[test]
    fn script_for_projective_space() {
        let s = singular_script(&Params::new(2, 2).unwrap(), 200_000).unwrap();
        assert!(s.contains("ideal I = 0;"));
        assert!(s.contains("intmat Q[1][4] = 1,1,1,1;"));
    }

    #[test]
    fn large_parameters_omit_basis() {
        let s = singular_script(&Params::new(4, 4).unwrap(), 200_000).unwrap();
        assert!(!s.contains("ideal H"));
    }
}
