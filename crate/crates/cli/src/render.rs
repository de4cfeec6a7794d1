//! Text, CSV, JSON and TeX renderings of generated ideals and Betti tables.

use std::fmt::Write as _;

use genlink::ideal::{Family, IdealFile, Monomial, MonomialIdeal, TermOrder, Universe};
use genlink::link::{BettiTable, LinkInstance};
use genlink::verify::InstanceHeader;
use serde::Serialize;

/// Version of every JSON document this binary writes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Tex,
}

/// Generators of an ideal in Order1-descending order.
pub fn sorted_generators(inst: &LinkInstance, ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut gens = ideal.generators().to_vec();
    TermOrder::order1(inst.universe()).sort_descending(&mut gens);
    gens
}

#[derive(Serialize)]
struct GeneratedIdeal<'a> {
    schema_version: u32,
    instance: InstanceHeader,
    target: &'a str,
    order: &'static str,
    generators: Vec<String>,
    ideal: IdealFile,
}

#[derive(Serialize)]
struct BettiEntry {
    i: u32,
    j: u32,
    value: u64,
}

#[derive(Serialize)]
struct GeneratedBetti {
    schema_version: u32,
    instance: InstanceHeader,
    target: &'static str,
    d: u32,
    g: u32,
    entries: Vec<BettiEntry>,
}

pub fn ideal(inst: &LinkInstance, target: &str, ideal: &MonomialIdeal, format: Format) -> String {
    let u = inst.universe();
    let gens = sorted_generators(inst, ideal);
    if format != Format::Json {
        return listing(&u, &gens, format);
    }
    let mut file = IdealFile::from_ideal(ideal);
    file.generators = gens
        .iter()
        .map(|g| g.terms().iter().map(|&(v, e)| (u.variable(v).to_string(), e)).collect())
        .collect();
    json(&GeneratedIdeal {
        schema_version: SCHEMA_VERSION,
        instance: inst.into(),
        target,
        order: "order1",
        generators: gens.iter().map(|g| g.display(&u).to_string()).collect(),
        ideal: file,
    })
}

/// An arbitrary ideal in its canonical generator order.
pub fn plain(ideal: &MonomialIdeal, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = ideal.to_json();
            s.push('\n');
            s
        }
        _ => listing(ideal.universe(), ideal.generators(), format),
    }
}

fn listing(u: &Universe, gens: &[Monomial], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("index,generator,degree\n");
            for (k, g) in gens.iter().enumerate() {
                let _ = writeln!(out, "{},{},{}", k + 1, g.display(u), g.degree());
            }
            out
        }
        Format::Tex => {
            let mut out = String::from("\\begin{gather*}\n");
            for (k, g) in gens.iter().enumerate() {
                let sep = if k + 1 < gens.len() { ",\\\\" } else { "" };
                let _ = writeln!(out, "  {}{sep}", tex_monomial(u, g));
            }
            out.push_str("\\end{gather*}\n");
            out
        }
        _ => gens.iter().map(|g| format!("{}\n", g.display(u))).collect(),
    }
}

pub fn betti(inst: &LinkInstance, table: &BettiTable, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Text => table.pretty(),
        Format::Json => {
            let doc = GeneratedBetti {
                schema_version: SCHEMA_VERSION,
                instance: inst.into(),
                target: "betti",
                d: table.d(),
                g: table.g(),
                entries: table
                    .entries()
                    .map(|((i, j), value)| BettiEntry { i, j, value })
                    .collect(),
            };
            json(&doc)
        }
        Format::Tex => {
            let max_i = table.entries().map(|((i, _), _)| i).max().unwrap_or(0);
            let max_row = table.entries().map(|((i, j), _)| j - i).max().unwrap_or(0);
            let mut out = format!("\\begin{{tabular}}{{r|{}}}\n", "r".repeat(max_i as usize + 1));
            let head: Vec<String> = (0..=max_i).map(|i| i.to_string()).collect();
            let _ = writeln!(out, "  & {} \\\\ \\hline", head.join(" & "));
            for row in 0..=max_row {
                let cells: Vec<String> = (0..=max_i)
                    .map(|i| match table.get(i, i + row) {
                        0 => ".".to_string(),
                        v => v.to_string(),
                    })
                    .collect();
                let _ = writeln!(out, "  {row} & {} \\\\", cells.join(" & "));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

fn tex_monomial(u: &Universe, g: &Monomial) -> String {
    if g.degree() == 0 {
        return "1".into();
    }
    let mut out = String::new();
    for &(v, e) in g.terms() {
        let var = u.variable(v);
        let letter = match var.family {
            Family::X => "x",
            Family::Y => "Y",
        };
        let _ = write!(out, "{letter}_{{{},{}}}", var.row, var.col);
        if e > 1 {
            let _ = write!(out, "^{{{e}}}");
        }
    }
    out
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
