//! Markdown tables whose cells are computed on demand.

use std::str::FromStr;

use octoverify_core::roots::{
    exponents, exterior_power_table, magic_square_table, sphere_decomposition, sugra_triplet,
    RootSystem,
};
use octoverify_core::Result;

use crate::format::{list, rep_sum, rep_sum_compact, signed_sum, sphere_product};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableName {
    MagicSquare,
    SugraTriplet,
    Table35,
    Spheres,
}

impl TableName {
    pub const ALL: [TableName; 4] = [
        TableName::MagicSquare,
        TableName::SugraTriplet,
        TableName::Table35,
        TableName::Spheres,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableName::MagicSquare => "magic-square",
            TableName::SugraTriplet => "sugra-triplet",
            TableName::Table35 => "table35",
            TableName::Spheres => "spheres",
        }
    }
}

impl FromStr for TableName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TableName::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown table `{s}`"))
    }
}

pub fn render_table(name: TableName) -> Result<String> {
    match name {
        TableName::MagicSquare => magic_square(),
        TableName::SugraTriplet => sugra(),
        TableName::Table35 => table35(),
        TableName::Spheres => spheres(),
    }
}

fn magic_square() -> Result<String> {
    let sq = magic_square_table()?;
    let mut out = String::from("| | R | C | H | O |\n|---|---|---|---|---|\n");
    for (name, row) in ["R", "C", "H", "O"].iter().zip(sq.iter()) {
        let cells: Vec<String> = row
            .iter()
            .map(|c| format!("{} ({})", c.label, c.dim))
            .collect();
        out.push_str(&format!("| {name} | {} |\n", cells.join(" | ")));
    }
    Ok(out)
}

fn sugra() -> Result<String> {
    let rows = sugra_triplet()?;
    let mut out = String::from("| field | SO(9) dim | sign |\n|---|---|---|\n");
    for (name, sign, dim) in &rows {
        let field = match *name {
            "graviton" => "graviton h",
            "gravitino" => "gravitino ψ",
            _ => "3-form C",
        };
        out.push_str(&format!(
            "| {field} | {dim} | {} |\n",
            if *sign < 0 { "−" } else { "+" }
        ));
    }
    let line = rows
        .iter()
        .enumerate()
        .map(|(i, (_, sign, dim))| match (i, *sign < 0) {
            (0, _) => dim.to_string(),
            (_, true) => format!(" − {dim}"),
            (_, false) => format!(" + {dim}"),
        })
        .collect::<String>();
    let total: i64 = rows.iter().map(|(_, s, d)| s * *d as i64).sum();
    out.push_str(&format!("\n{line} = {total}\n"));
    Ok(out)
}

fn table35() -> Result<String> {
    let t = exterior_power_table(0..=16)?;
    let mut out =
        String::from("| k | SU(16) | Spin(10) | O(9) | O(8) |\n|---|---|---|---|---|\n");
    for row in &t.rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            row.k,
            row.su16,
            rep_sum(&t.d5, &row.spin10)?,
            rep_sum_compact(&t.b4, &row.o9)?,
            rep_sum_compact(&t.d4, &row.o8)?,
        ));
    }
    let (even, odd): (Vec<_>, Vec<_>) = t.rows.iter().partition(|r| r.k % 2 == 0);
    let sum = |rows: &[&octoverify_core::roots::ExteriorRow]| -> Result<String> {
        let mut total = num_bigint::BigInt::from(0);
        for r in rows {
            total += r.spin10.dim(&t.d5)?;
        }
        Ok(total.to_string())
    };
    out.push_str(&format!(
        "\n{}\n",
        signed_sum(&[(1, sum(&even)?), (-1, sum(&odd)?)])
    ));
    Ok(out)
}

fn spheres() -> Result<String> {
    let mut out = String::from("| group | exponents | spheres | dimension |\n|---|---|---|---|\n");
    for (group, label) in [
        ("G₂", "G2"),
        ("Spin(7)", "B3"),
        ("Spin(8)", "D4"),
        ("Spin(9)", "B4"),
        ("F₄", "F4"),
        ("E₆", "E6"),
        ("E₇", "E7"),
        ("E₈", "E8"),
    ] {
        let rs: RootSystem = label.parse()?;
        let s = sphere_decomposition(&rs);
        out.push_str(&format!(
            "| {group} | {} | {} | {} |\n",
            list(&exponents(&rs)),
            sphere_product(&s),
            s.iter().sum::<u64>()
        ));
    }
    Ok(out)
}
