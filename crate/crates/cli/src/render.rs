//! Output formatting. R is always printed with 17 significant digits.

use std::io::{self, Write};

use rework_core::{Network, RunReport, SweepSummary};

fn r(value: f64) -> String {
    format!("{value:.16e}")
}

fn flags(report: &RunReport) -> &'static str {
    if report.structurally_infeasible {
        "no-feasible"
    } else {
        ""
    }
}

fn tuple(values: impl IntoIterator<Item = impl ToString>) -> String {
    let parts: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn csv_header(out: &mut impl Write, phi: usize) -> io::Result<()> {
    let m: Vec<String> = (1..=phi).map(|j| format!("m_{j}")).collect();
    writeln!(out, "name,b,d,{},T,S,s,R,flags", m.join(","))
}

fn csv_row(out: &mut impl Write, rep: &RunReport) -> io::Result<()> {
    let m: Vec<String> = rep.line_counts.iter().map(u64::to_string).collect();
    writeln!(
        out,
        "{},{},{},{},{:.6},{},{},{},{}",
        rep.network,
        rep.b,
        rep.d,
        m.join(","),
        rep.elapsed_seconds,
        rep.total_tuples,
        rep.feasible_count,
        r(rep.reliability),
        flags(rep)
    )
}

fn table_header(out: &mut impl Write, phi: usize) -> io::Result<()> {
    write!(out, "{:>3} {:>3}", "b", "d")?;
    for j in 1..=phi {
        write!(out, " {:>8}", format!("m_{j}"))?;
    }
    writeln!(out, " {:>10} {:>14} {:>10} {:>24}  flags", "T", "S", "s", "R")
}

fn table_row(out: &mut impl Write, rep: &RunReport) -> io::Result<()> {
    write!(out, "{:>3} {:>3}", rep.b, rep.d)?;
    for m in &rep.line_counts {
        write!(out, " {m:>8}")?;
    }
    writeln!(
        out,
        " {:>10.6} {:>14} {:>10} {:>24}  {}",
        rep.elapsed_seconds,
        rep.total_tuples,
        rep.feasible_count,
        r(rep.reliability),
        flags(rep)
    )
}

fn summary_lines(out: &mut impl Write, s: &SweepSummary) -> io::Result<()> {
    writeln!(out, "# N = {}", s.rows)?;
    writeln!(out, "# S* = {}", s.s_star)?;
    writeln!(out, "# T_avg = {:.6}", s.elapsed_avg)?;
    writeln!(out, "# S_avg = {}", s.total_tuples_avg)?;
    writeln!(out, "# S_avg/S* = {:.7}%", 100.0 * s.tuple_ratio)?;
    writeln!(out, "# s_avg = {}", s.feasible_avg)?;
    writeln!(out, "# R_avg = {}", r(s.reliability_avg))
}

/// Solutions as `i j Z X Pr`, `j` counting from 1.
fn solutions_table(out: &mut impl Write, rep: &RunReport, sep: &str) -> io::Result<()> {
    let Some(sols) = &rep.solutions else {
        return Ok(());
    };
    writeln!(out, "i{sep}j{sep}Z{sep}X{sep}Pr")?;
    for (j, sol) in sols.iter().enumerate() {
        writeln!(
            out,
            "{}{sep}{}{sep}{}{sep}{}{sep}{}",
            sol.global_index,
            j + 1,
            tuple(&sol.z),
            tuple(&sol.x.values),
            r(sol.prob)
        )?;
    }
    Ok(())
}

pub fn solve_table(out: &mut impl Write, net: &Network, rep: &RunReport) -> io::Result<()> {
    table_header(out, net.lines.len())?;
    table_row(out, rep)?;
    if rep.solutions.is_some() {
        writeln!(out)?;
        solutions_table(out, rep, "\t")?;
        writeln!(out, "SUM\t\t\t\t{}", r(rep.reliability))?;
    }
    Ok(())
}

pub fn solve_csv(out: &mut impl Write, net: &Network, rep: &RunReport) -> io::Result<()> {
    csv_header(out, net.lines.len())?;
    csv_row(out, rep)?;
    if let Some(sols) = &rep.solutions {
        writeln!(out)?;
        // Z and X contain commas, so they are quoted
        writeln!(out, "i,j,Z,X,Pr")?;
        for (j, sol) in sols.iter().enumerate() {
            writeln!(
                out,
                "{},{},\"{}\",\"{}\",{}",
                sol.global_index,
                j + 1,
                tuple(&sol.z),
                tuple(&sol.x.values),
                r(sol.prob)
            )?;
        }
    }
    Ok(())
}

pub fn json(out: &mut impl Write, value: &impl serde::Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

pub fn sweep_table(out: &mut impl Write, phi: usize, reports: &[RunReport], summary: Option<&SweepSummary>) -> io::Result<()> {
    table_header(out, phi)?;
    for rep in reports {
        table_row(out, rep)?;
    }
    if let Some(s) = summary {
        summary_lines(out, s)?;
    }
    Ok(())
}

pub fn sweep_csv(out: &mut impl Write, phi: usize, reports: &[RunReport], summary: Option<&SweepSummary>) -> io::Result<()> {
    csv_header(out, phi)?;
    for rep in reports {
        csv_row(out, rep)?;
    }
    if let Some(s) = summary {
        summary_lines(out, s)?;
    }
    Ok(())
}

pub fn sweep_json(out: &mut impl Write, reports: &[RunReport], summary: Option<&SweepSummary>) -> io::Result<()> {
    #[derive(serde::Serialize)]
    struct Sweep<'a> {
        reports: &'a [RunReport],
        #[serde(skip_serializing_if = "Option::is_none")]
        summary: Option<&'a SweepSummary>,
    }
    json(out, &Sweep { reports, summary })
}
