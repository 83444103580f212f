//! Markdown rendering of an [`AnalysisReport`].

use std::fmt::Write;

use crate::report::{AnalysisReport, BracketLine, Component, Matrix, Vector, VerdictSection};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn vector(v: &Vector) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (label, coeff)) in v.iter().enumerate() {
        let (sign, magnitude) = match coeff.strip_prefix('-') {
            Some(m) => ("-", m),
            None => ("+", coeff.as_str()),
        };
        match (i, sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            (_, s) => write!(out, " {s} ").unwrap(),
        }
        if magnitude != "1" {
            write!(out, "({magnitude})").unwrap();
        }
        out.push_str(label);
    }
    out
}

fn span(vs: &[Vector]) -> String {
    if vs.is_empty() {
        return "{0}".into();
    }
    format!("span{{{}}}", vs.iter().map(vector).collect::<Vec<_>>().join(", "))
}

fn matrix(out: &mut String, m: &Matrix) {
    let cols: Vec<&String> = m.values().next().map(|r| r.keys().collect()).unwrap_or_default();
    writeln!(out, "| | {} |", cols.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(" | ")).unwrap();
    writeln!(out, "|---|{}", "---|".repeat(cols.len())).unwrap();
    for (row, entries) in m {
        writeln!(out, "| **{row}** | {} |", entries.values().map(|v| v.as_str()).collect::<Vec<_>>().join(" | "))
            .unwrap();
    }
    out.push('\n');
}

fn lines(out: &mut String, entries: &[BracketLine], op: fn(&str, &str) -> String) {
    if entries.is_empty() {
        out.push_str("All zero.\n\n");
        return;
    }
    for e in entries {
        writeln!(out, "- {} = {}", op(&e.x, &e.y), vector(&e.value)).unwrap();
    }
    out.push('\n');
}

fn components(out: &mut String, name: &str, cs: &[Component]) {
    for c in cs {
        writeln!(out, "- {name}({}) = {}", c.index.join(", "), c.value).unwrap();
    }
    out.push('\n');
}

fn verdict(out: &mut String, title: &str, v: &VerdictSection) {
    writeln!(out, "### {title}\n").unwrap();
    if v.feasible {
        let constant = v.constant.as_deref().unwrap_or("?");
        match &v.class {
            Some(class) => writeln!(out, "Feasible, constant {constant} ({class}).").unwrap(),
            None => writeln!(out, "Feasible, constant {constant} (not pinned by the solution family).").unwrap(),
        }
        if let Some(w) = &v.witness {
            if let Some(f) = &w.field {
                writeln!(out, "\nWitness field: X = {}", vector(f)).unwrap();
            }
            if let Some(d) = &w.derivation {
                out.push_str("\nWitness derivation D:\n\n");
                matrix(out, d);
            }
        }
        writeln!(
            out,
            "Solution family: {} free parameter(s) over ({}).",
            v.family.kernel_basis.len(),
            v.family.unknowns.join(", ")
        )
        .unwrap();
    } else {
        writeln!(out, "Infeasible: coefficient rank {} < augmented rank {}.", v.family.rank, v.family.augmented_rank)
            .unwrap();
    }
    writeln!(out, "Plug-back verified: {}\n", yes_no(v.verified)).unwrap();
}

pub fn render(r: &AnalysisReport) -> String {
    let mut out = String::new();
    writeln!(out, "# Analysis of `{}`\n", r.model.name).unwrap();

    let c = &r.conventions;
    out.push_str("## Conventions\n\n");
    for (k, v) in [
        ("connection", &c.connection),
        ("curvature", &c.curvature),
        ("Ricci", &c.ricci),
        ("scalar curvature", &c.scalar_curvature),
        ("Weyl", &c.weyl),
        ("soliton equation", &c.soliton_equation),
        ("soliton class", &c.soliton_class),
        ("rough Laplacian", &c.rough_laplacian),
        ("energy", &c.energy),
    ] {
        writeln!(out, "- **{k}**: `{v}`").unwrap();
    }
    out.push('\n');

    let m = &r.model;
    out.push_str("## Model\n\n");
    writeln!(
        out,
        "Dimension {}, basis ({}), signature ({}, {}).\n",
        m.dimension,
        m.basis.join(", "),
        m.signature[0],
        m.signature[1]
    )
    .unwrap();
    if let Some(v) = &m.volume {
        writeln!(out, "Volume: {v}\n").unwrap();
    }
    lines(&mut out, &m.brackets, |x, y| format!("[{x}, {y}]"));
    matrix(&mut out, &m.metric);

    if let Some(s) = &r.connection {
        out.push_str("## Levi-Civita connection\n\n");
        lines(&mut out, &s.nabla, |x, y| format!("nabla_{x} {y}"));
        writeln!(
            out,
            "Torsion-free: {}. Metric-compatible: {}.\n",
            yes_no(s.torsion_free),
            yes_no(s.metric_compatible)
        )
        .unwrap();
    }
    if let Some(s) = &r.curvature {
        out.push_str("## Curvature\n\n");
        if s.flat {
            out.push_str("Flat.\n\n");
        } else {
            components(&mut out, "R", &s.components);
        }
    }
    if let Some(s) = &r.ricci {
        out.push_str("## Ricci\n\nRicci tensor rho:\n\n");
        matrix(&mut out, &s.rho);
        out.push_str("Ricci operator Rc:\n\n");
        matrix(&mut out, &s.ricci_operator);
        writeln!(out, "Scalar curvature: {}\n", s.scalar).unwrap();
    }
    if let Some(s) = &r.weyl {
        out.push_str("## Weyl tensor\n\n");
        writeln!(out, "Conformally flat: {}\n", yes_no(s.conformally_flat)).unwrap();
        if !s.conformally_flat {
            components(&mut out, "C", &s.components);
        }
    }
    if let Some(s) = &r.ledger {
        out.push_str("## Ledger conditions\n\n");
        let witness =
            |w: &Option<Vec<String>>| w.as_ref().map(|w| format!(" (fails at {})", w.join(", "))).unwrap_or_default();
        writeln!(out, "- L3 (cyclic-parallel Ricci): {}{}", yes_no(s.l3), witness(&s.l3_witness)).unwrap();
        writeln!(out, "- L5: {}{}", yes_no(s.l5), witness(&s.l5_witness)).unwrap();
        writeln!(out, "- locally symmetric: {}\n", yes_no(s.locally_symmetric)).unwrap();
    }
    if let Some(b) = r.biinvariant {
        writeln!(out, "Bi-invariant metric: {}\n", yes_no(b)).unwrap();
    }
    if let Some(s) = &r.solitons {
        out.push_str("## Solitons\n\n");
        verdict(&mut out, "Einstein", &s.einstein);
        verdict(&mut out, "Invariant Ricci soliton", &s.invariant_ricci);
        verdict(&mut out, "Algebraic Ricci soliton", &s.algebraic_ricci);
    }
    if let Some(s) = &r.walker {
        out.push_str("## Parallel null line fields\n\n");
        if s.lines.is_empty() {
            out.push_str("No parallel null lines.\n");
        }
        for l in &s.lines {
            writeln!(out, "- span{{{}}}", vector(l)).unwrap();
        }
        for sub in &s.null_subspaces {
            writeln!(out, "- every line in the totally null {}", span(sub)).unwrap();
        }
        for sub in &s.unresolved {
            writeln!(out, "- unresolved common eigenspace {}", span(sub)).unwrap();
        }
        writeln!(out, "\nSearch complete: {}\n", yes_no(!s.incomplete)).unwrap();
    }
    if let Some(p) = &r.parallel_fields {
        writeln!(out, "## Parallel fields\n\n{}\n", span(p)).unwrap();
    }
    if let Some(h) = &r.harmonic {
        out.push_str("## Harmonic classification\n\n");
        writeln!(out, "Harmonic sections: {}\n", span(&h.harmonic_sections)).unwrap();
        writeln!(out, "Curvature term vanishes on all of them: {}\n", yes_no(h.quadratic_obstruction_vanishes))
            .unwrap();
        for w in h.witnesses.iter().filter(|w| !w.curvature_term.is_empty()) {
            writeln!(out, "- V = {}: tr R(nabla V, V) = {}", vector(&w.field), vector(&w.curvature_term)).unwrap();
        }
    }
    if let Some(f) = &r.field {
        writeln!(out, "## Vector field V = {}\n", vector(&f.coefficients)).unwrap();
        lines(&mut out, &f.nabla_v, |x, y| format!("nabla_{x} {y}"));
        writeln!(out, "- rough Laplacian: {}", vector(&f.rough_laplacian)).unwrap();
        writeln!(out, "- curvature term: {}", vector(&f.curvature_term)).unwrap();
        writeln!(out, "- g(V, V) = {}", f.squared_length).unwrap();
        for (k, v) in [
            ("harmonic section", f.is_harmonic_section),
            ("harmonic map", f.is_harmonic_map),
            ("critical for constant length", f.is_critical_constant_length),
            ("geodesic", f.is_geodesic),
            ("Killing", f.is_killing),
            ("parallel", f.is_parallel),
        ] {
            writeln!(out, "- {k}: {}", yes_no(v)).unwrap();
        }
        out.push_str("\nLie derivative of the metric:\n\n");
        matrix(&mut out, &f.lie_derivative_metric);
        writeln!(out, "Energy on volume {}: density {}, total {}", f.energy.volume, f.energy.density, f.energy.total)
            .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_read_naturally() {
        let v: Vector = [("e2", "-1/2"), ("e4", "1/2")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(vector(&v), "-(1/2)e2 + (1/2)e4");
        let w: Vector = [("P", "1"), ("Q", "-1")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(vector(&w), "P - Q");
        assert_eq!(vector(&Vector::new()), "0");
    }
}
