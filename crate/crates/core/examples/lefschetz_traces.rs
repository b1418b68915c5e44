//! The holomorphic Lefschetz trace table, and what a missing stratum does
//! to it.

use ramiq::chevalley_weil::lefschetz_trace_check;
use ramiq::io::example;
use ramiq::{chi_g, Report};

fn print_table(report: &Report) {
    for row in &report.trace_table {
        let mark = match (row.matches, row.algebraic_integer) {
            (false, _) => "MISMATCH",
            (true, false) => "NON-INTEGRAL",
            (true, true) => "ok",
        };
        println!("  g = {}: trace {} vs fixed points {} {mark}", row.representative, row.formula, row.lefschetz);
        for w in &row.warnings {
            println!("    {w}");
        }
    }
}

fn main() -> ramiq::Result<()> {
    let s = example("genus2_hyperelliptic")?;
    let (lhs, rhs) = lefschetz_trace_check(&s, 1)?;
    println!("hyperelliptic involution on ω: {lhs} = {rhs}");

    let mut broken = s.clone();
    broken.strata.pop();
    let r = chi_g(&broken)?;
    println!("one Weierstrass point removed (flagged: {}):", r.is_flagged());
    print_table(&r);

    let mut s3 = example("s3_projective_line")?;
    s3.strata.retain(|z| !z.id.starts_with("F3"));
    let r = chi_g(&s3)?;
    println!("S3 on P1 without the fixed points of one involution:");
    print_table(&r);
    println!("{:?}", r.ensure_consistent());
    Ok(())
}
