//! Text forms of representations shared by checks, tables and commands.

use octoverify_core::roots::{weyl_dim, CartanType, RootSystem, VirtualRep, Weight};
use octoverify_core::Result;

/// Dimension of an irrep, with a triality suffix `v`, `s` or `c` on D₄
/// irreps that are not triality invariant.
pub fn irrep_label(rs: &RootSystem, hw: &Weight) -> Result<String> {
    let dim = weyl_dim(rs, hw)?.to_string();
    if rs.kind() != CartanType::D || rs.rank() != 4 {
        return Ok(dim);
    }
    let l = rs.dynkin_labels(hw);
    let (v, s, c) = (l[0], l[3], l[2]);
    let suffix = if v == s && s == c {
        ""
    } else if s == c {
        "v"
    } else if v == c {
        "s"
    } else if v == s {
        "c"
    } else {
        ""
    };
    Ok(format!("{dim}{suffix}"))
}

fn leading_number(label: &str) -> i64 {
    let digits: String = label.chars().take_while(|c| c.is_ascii_digit()).collect();
    digits.parse().unwrap_or(0)
}

/// Joins signed labels as `a+b-c`, ordered by signed dimension (largest
/// first) and then by label.
pub fn signed_sum(terms: &[(i64, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut terms = terms.to_vec();
    terms.sort_by(|(sa, la), (sb, lb)| {
        (sb * leading_number(lb))
            .cmp(&(sa * leading_number(la)))
            .then_with(|| la.cmp(lb))
    });
    let mut out = String::new();
    for (i, (sign, label)) in terms.iter().enumerate() {
        match (i, *sign < 0) {
            (_, true) => out.push('-'),
            (0, false) => {}
            (_, false) => out.push('+'),
        }
        out.push_str(label);
    }
    out
}

/// Normalized form of a literal sum such as `"8s+8c+56s+56c"` or
/// `"44+84-128"`.
pub fn normalize_sum(text: &str) -> String {
    let mut terms = Vec::new();
    let mut sign = 1;
    let mut current = String::new();
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        if ch == '+' || ch == '-' {
            if !current.is_empty() {
                terms.push((sign, std::mem::take(&mut current)));
            }
            sign = if ch == '-' { -1 } else { 1 };
        } else {
            current.push(ch);
        }
    }
    if !current.is_empty() {
        terms.push((sign, current));
    }
    signed_sum(&terms)
}

/// A virtual representation as a signed sum of irrep labels, each irrep
/// repeated by its multiplicity.
pub fn rep_sum(rs: &RootSystem, rep: &VirtualRep) -> Result<String> {
    let mut terms = Vec::new();
    for t in rep.terms() {
        let label = irrep_label(rs, &t.hw)?;
        for _ in 0..t.coeff.unsigned_abs() {
            terms.push((t.coeff.signum(), label.clone()));
        }
    }
    Ok(signed_sum(&terms))
}

/// Like [`rep_sum`] but writes repeated irreps as `k·label`.
pub fn rep_sum_compact(rs: &RootSystem, rep: &VirtualRep) -> Result<String> {
    let mut counts: Vec<(i64, String, u64)> = Vec::new();
    for t in rep.terms() {
        let label = irrep_label(rs, &t.hw)?;
        let sign = t.coeff.signum();
        match counts.iter_mut().find(|(s, l, _)| *s == sign && *l == label) {
            Some(entry) => entry.2 += t.coeff.unsigned_abs(),
            None => counts.push((sign, label, t.coeff.unsigned_abs())),
        }
    }
    let terms: Vec<(i64, String)> = counts
        .into_iter()
        .map(|(s, l, k)| (s, if k == 1 { l } else { format!("{k}·{l}") }))
        .collect();
    Ok(signed_sum_by_label_dim(terms))
}

fn signed_sum_by_label_dim(terms: Vec<(i64, String)>) -> String {
    let key = |l: &str| leading_number(l.rsplit('·').next().unwrap_or(l));
    let mut terms = terms;
    terms.sort_by(|(sa, la), (sb, lb)| {
        (sb * key(lb))
            .cmp(&(sa * key(la)))
            .then_with(|| la.cmp(lb))
    });
    let mut out = String::new();
    for (i, (sign, label)) in terms.iter().enumerate() {
        if *sign < 0 {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `[3, 7, 11]` as `S³×̃S⁷×̃S¹¹`.
pub fn sphere_product(dims: &[u64]) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    dims.iter()
        .map(|d| {
            let sup: String = d
                .to_string()
                .chars()
                .map(|c| SUP[c.to_digit(10).expect("digit") as usize])
                .collect();
            format!("S{sup}")
        })
        .collect::<Vec<_>>()
        .join("×̃")
}

pub fn list<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
