//! Plain-text output.

use std::fmt::Write;

use coxpres_core::collineation::{cox_presentation, Params};
use coxpres_core::geometry::RationalCone;

use crate::checks::Outcome;
use crate::json::{ConesJson, GitFanJson, VerificationReport};

fn tuple(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn cone(c: &RationalCone) -> String {
    format!("cone({})", c.rays().iter().map(|r| tuple(r)).collect::<Vec<_>>().join(", "))
}

pub fn presentation_text(p: &Params) -> anyhow::Result<String> {
    let cp = cox_presentation(p)?;
    let mut s = String::new();
    writeln!(s, "X(2, {}, {})  regime {}  class group Z^{}", p.c, p.d, cp.regime.label(), cp.class_group_rank())?;
    writeln!(s, "generators ({}):", cp.ring.nvars())?;
    for (i, name) in cp.variables().iter().enumerate() {
        writeln!(s, "  {name:<8} deg {}", tuple(&cp.grading.variable_degree(i)))?;
    }
    writeln!(s, "relations ({}):", cp.relations.len())?;
    for r in &cp.relations {
        writeln!(s, "  {r}")?;
    }
    Ok(s)
}

pub fn cones_text(c: &ConesJson) -> String {
    format!(
        "X(2, {}, {})\nEff      {}\nMov      {}\nSAmple   {}\n",
        c.c,
        c.d,
        cone(&c.effective),
        cone(&c.movable),
        c.semiample
    )
}

pub fn gitfan_text(g: &GitFanJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "X(2, {}, {})  GIT fan of Q: {} maximal chambers", g.c, g.d, g.chambers.len());
    for (k, ch) in g.chambers.iter().enumerate() {
        let _ = writeln!(s, "  lambda{}  {}", k + 1, cone(ch));
    }
    for w in &g.witnesses {
        let coords: Vec<String> = w.coords.iter().map(|c| format!("x_{}_{} = {}", c.i, c.j, c.value)).collect();
        let nonzero = w.residuals.iter().filter(|r| *r != "0").count();
        let chamber = match w.chamber {
            Some(k) => format!("= lambda{}", k + 1),
            None => "matches no chamber".into(),
        };
        let _ = writeln!(
            s,
            "  witness {}: {}; {} of {} Plücker residuals nonzero; orbit cone {} {}",
            w.name,
            coords.join(", "),
            nonzero,
            w.residuals.len(),
            cone(&w.orbit_cone),
            chamber
        );
    }
    s
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "verify X(2, {}, {})  budget {}", r.params.c, r.params.d, r.budget);
    for rec in &r.records {
        let status = match rec.status {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "skipped",
        };
        let ms = rec.wall_time_us as f64 / 1000.0;
        let _ = write!(s, "  {:<13} {:<8} {:>9.1} ms", rec.id.label(), status, ms);
        match rec.status {
            Outcome::Pass => {}
            Outcome::Fail => {
                let _ = write!(s, "  expected {}  actual {}", rec.expected, rec.actual);
            }
            Outcome::Skipped => {
                let _ = write!(s, "  {}", rec.actual);
            }
        }
        s.push('\n');
    }
    let count = |o: Outcome| r.records.iter().filter(|x| x.status == o).count();
    let _ = writeln!(
        s,
        "{} passed, {} failed, {} skipped",
        count(Outcome::Pass),
        count(Outcome::Fail),
        count(Outcome::Skipped)
    );
    s
}
