//! Rendering of report records as plain text, CSV or JSON.

use std::fmt::Write as _;

use serde::Serialize;

use dioplane::report::{
    ComparisonReport, GeometryRecord, McKayRecord, SolutionRecord, VogelRecord,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("csv header");
    for row in rows {
        w.write_record(&row).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn triple(t: &Option<[i64; 3]>) -> String {
    t.map(|[a, b, c]| format!("({a}, {b}, {c})")).unwrap_or_default()
}

// ---- solutions -------------------------------------------------------------

pub fn solutions(records: &[SolutionRecord], format: Format) -> String {
    match format {
        Format::Json => json(&records),
        Format::Csv => csv_rows(
            &[
                "k", "n", "m", "equation", "kind", "family_parameter", "vogel", "dim", "rank",
                "algebra",
            ],
            records
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.n.to_string(),
                        r.m.to_string(),
                        r.equation.clone(),
                        opt(&r.kind),
                        opt(&r.family_parameter),
                        triple(&r.vogel),
                        opt(&r.dim),
                        opt(&r.rank),
                        opt(&r.algebra),
                    ]
                })
                .collect(),
        ),
        Format::Plain => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>6} {:>6} {:>6}  {:<15} {:<14} {:>6} {:>6}  algebra",
                "k", "n", "m", "kind", "vogel", "dim", "rank"
            );
            for r in records {
                let _ = writeln!(
                    out,
                    "{:>6} {:>6} {:>6}  {:<15} {:<14} {:>6} {:>6}  {}",
                    r.k,
                    r.n,
                    r.m,
                    opt(&r.kind),
                    triple(&r.vogel),
                    opt(&r.dim),
                    opt(&r.rank),
                    opt(&r.algebra),
                );
            }
            let _ = writeln!(out, "{} solution(s)", records.len());
            out
        }
    }
}

// ---- single solution record ------------------------------------------------

fn geometry_line(g: &GeometryRecord) -> String {
    let name = g.name.clone().unwrap_or_else(|| {
        format!("{{{},{}}} map", g.face_size, g.vertex_degree)
    });
    let regular = match g.regular_map {
        Some(true) => ", regular",
        Some(false) => ", locally regular only",
        None => "",
    };
    format!(
        "{name}: V={}, E={}, F={}, chi={}, {}{}",
        g.vertices, g.edges, g.faces, g.euler_char, g.surface, regular
    )
}

pub fn vogel(record: &VogelRecord, format: Format) -> String {
    match format {
        Format::Json => json(record),
        Format::Csv => csv_rows(
            &[
                "k", "n", "m", "kind", "vogel", "dim", "rank", "regular", "algebra", "geometry",
            ],
            vec![vec![
                record.solution[0].to_string(),
                record.solution[1].to_string(),
                record.solution[2].to_string(),
                record.kind.clone(),
                triple(&record.vogel),
                opt(&record.dim),
                opt(&record.rank),
                opt(&record.regular),
                record.algebra.join("; "),
                record
                    .geometry
                    .iter()
                    .map(geometry_line)
                    .collect::<Vec<_>>()
                    .join("; "),
            ]],
        ),
        Format::Plain => {
            let mut out = String::new();
            let [k, n, m] = record.solution;
            let _ = writeln!(out, "solution ({k}, {n}, {m})  [{}]", record.kind);
            if let Some(v) = record.vogel {
                let _ = writeln!(out, "  point     ({}, {}, {})", v[0], v[1], v[2]);
            } else {
                let _ = writeln!(out, "  point     line alpha+beta+gamma = 0");
            }
            if let Some(d) = &record.dim {
                let _ = writeln!(out, "  dim       {d}");
            }
            if let Some(r) = &record.rank {
                let _ = writeln!(out, "  rank      {r}");
            }
            if let Some(reg) = record.regular {
                let _ = writeln!(out, "  regular   {reg}");
            }
            if !record.algebra.is_empty() {
                let _ = writeln!(out, "  algebra   {}", record.algebra.join(", "));
            }
            for g in &record.geometry {
                let _ = writeln!(out, "  geometry  {}", geometry_line(g));
            }
            if let Some(e) = &record.expansion {
                let terms: Vec<String> = e
                    .coefficients
                    .iter()
                    .map(|(exp, c)| format!("{c}*e[{exp}x/4]"))
                    .collect();
                let _ = writeln!(
                    out,
                    "  expansion (at {:?}) {}",
                    e.scale_note,
                    terms.join(" + ")
                );
            }
            for n in &record.notes {
                let _ = writeln!(out, "  note      {n}");
            }
            out
        }
    }
}

// ---- geometry ---------------------------------------------------------------

pub fn geometry(records: &[GeometryRecord], format: Format) -> String {
    match format {
        Format::Json => json(&records),
        Format::Csv => csv_rows(
            &[
                "face_size", "vertex_degree", "edges", "vertices", "faces", "euler_char",
                "surface", "name", "regular_map",
            ],
            records
                .iter()
                .map(|g| {
                    vec![
                        g.face_size.to_string(),
                        g.vertex_degree.to_string(),
                        g.edges.to_string(),
                        g.vertices.to_string(),
                        g.faces.to_string(),
                        g.euler_char.to_string(),
                        g.surface.clone(),
                        g.name.clone().unwrap_or_default(),
                        opt(&g.regular_map),
                    ]
                })
                .collect(),
        ),
        Format::Plain => {
            let mut out = String::new();
            for g in records {
                let _ = writeln!(out, "{}", geometry_line(g));
            }
            out
        }
    }
}

// ---- subgroups ---------------------------------------------------------------

pub fn mckay(record: &McKayRecord, format: Format) -> String {
    match format {
        Format::Json => json(record),
        Format::Csv => csv_rows(
            &["family", "order", "classes", "degrees", "affine", "finite", "adjacency"],
            vec![vec![
                record.family.clone(),
                record.order.to_string(),
                record.class_count.to_string(),
                record
                    .degrees
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                record.affine.clone(),
                record.finite.clone(),
                record
                    .adjacency
                    .iter()
                    .map(|row| {
                        row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                    })
                    .collect::<Vec<_>>()
                    .join("; "),
            ]],
        ),
        Format::Plain => {
            let mut out = String::new();
            let _ = writeln!(out, "subgroup  {}", record.family);
            let _ = writeln!(out, "  order    {}", record.order);
            let _ = writeln!(out, "  classes  {}", record.class_count);
            let _ = writeln!(
                out,
                "  degrees  {}",
                record
                    .degrees
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            let _ = writeln!(out, "  diagram  {} (finite {})", record.affine, record.finite);
            let _ = writeln!(out, "  adjacency");
            for row in &record.adjacency {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "    {}", cells.join(" "));
            }
            out
        }
    }
}

// ---- comparison ---------------------------------------------------------------

pub fn comparison(report: &ComparisonReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => csv_rows(
            &["solutions", "platonic", "subgroups", "mckay", "diophantine", "coincide"],
            report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.solutions.clone(),
                        r.platonic.clone(),
                        r.subgroups.join("; "),
                        r.mckay.join("; "),
                        r.diophantine.clone(),
                        r.coincide.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Plain => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:<24} {:<28} {:<28} {:<32} {:<28} coincide",
                "solutions", "platonic", "subgroups", "mckay", "diophantine"
            );
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{:<24} {:<28} {:<28} {:<32} {:<28} {}",
                    r.solutions,
                    r.platonic,
                    r.subgroups.join(", "),
                    r.mckay.join(", "),
                    r.diophantine,
                    if r.coincide { "yes" } else { "no" }
                );
            }
            for (i, f) in report.footnotes.iter().enumerate() {
                let _ = writeln!(out, "[{}] {f}", i + 1);
            }
            out
        }
    }
}
