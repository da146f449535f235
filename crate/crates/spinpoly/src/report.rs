//! Plain-text tables, CSV and polynomial rendering shared by the commands.

use std::io::Write;

use spinpoly_core::minpoly::{EigenSpectrum, MinPolyForm};
use spinpoly_core::partitions::Sign;

use crate::error::CliResult;

/// Factored form when there is one, the expanded polynomial otherwise.
pub fn poly_string(form: &MinPolyForm) -> String {
    form.to_string()
}

fn binomial(k: u64, sign: &str) -> String {
    let x = if k == 1 { "x".to_string() } else { format!("x^{k}") };
    format!("({x} {sign} 1)")
}

/// One ±-style string for the forms at a class and at its z-translate
/// (upper sign for the first). Falls back to `a ; b` when the two are not
/// sign variants of one closed form.
pub fn pm_string(a: &MinPolyForm, b: &MinPolyForm) -> String {
    let (sa, sb) = (poly_string(a), poly_string(b));
    if sa == sb {
        return sa;
    }
    let same_shape = !a.factors.is_empty()
        && a.factors.len() == b.factors.len()
        && a.factors.iter().zip(&b.factors).all(|(x, y)| x.0 == y.0 && x.2 == y.2);
    if !same_shape {
        return format!("{sa} ; {sb}");
    }
    let sym = |e: Sign| if e == Sign::Plus { '-' } else { '+' };
    let term = |(x, y): (&(u64, Sign, i8), &(u64, Sign, i8))| {
        let s = match (sym(x.1), sym(y.1)) {
            (p, q) if p == q => p.to_string(),
            ('+', _) => "±".to_string(),
            _ => "∓".to_string(),
        };
        binomial(x.0, &s)
    };
    let pairs: Vec<_> = a.factors.iter().zip(&b.factors).collect();
    let num: String = pairs.iter().filter(|(x, _)| x.2 > 0).map(|&p| term(p)).collect();
    let den: String = pairs.iter().filter(|(x, _)| x.2 < 0).map(|&p| term(p)).collect();
    if den.is_empty() {
        num
    } else {
        format!("{num}/{den}")
    }
}

/// `E(d)^j:m` for each eigenvalue ζ_d^j of multiplicity m > 0.
pub fn spectrum_string(sp: &EigenSpectrum) -> String {
    let parts: Vec<String> = sp
        .mult
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(j, m)| format!("E({})^{j}:{m}", sp.order))
        .collect();
    parts.join(" ")
}

/// Left-aligned columns separated by two spaces.
pub fn write_table(out: &mut dyn Write, header: &[String], rows: &[Vec<String>]) -> CliResult<()> {
    let ncol = header.len().max(rows.iter().map(Vec::len).max().unwrap_or(0));
    let mut width = vec![0usize; ncol];
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (i, cell) in r.iter().enumerate() {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let mut line = String::new();
        for (i, cell) in r.iter().enumerate() {
            if i + 1 < r.len() {
                line.push_str(cell);
                line.extend(std::iter::repeat(' ').take(width[i] - cell.chars().count() + 2));
            } else {
                line.push_str(cell);
            }
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}

pub fn write_csv(out: &mut dyn Write, header: &[String], rows: &[Vec<String>]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

/// `key  value` lines.
pub fn write_pairs(out: &mut dyn Write, pairs: &[(&str, String)]) -> CliResult<()> {
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in pairs {
        writeln!(out, "{k:<w$}  {v}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use spinpoly_core::minpoly::FormTag;

    #[test]
    fn pm_forms() {
        let a = MinPolyForm::closed(FormTag::Family5, 5, Sign::Minus).unwrap();
        let b = MinPolyForm::closed(FormTag::Family5, 5, Sign::Plus).unwrap();
        assert_eq!(pm_string(&a, &b), "(x^5 ± 1)/(x ± 1)");
        assert_eq!(pm_string(&b, &a), "(x^5 ∓ 1)/(x ∓ 1)");
        assert_eq!(pm_string(&a, &a), "(x^5 + 1)/(x + 1)");
    }

    #[test]
    fn table_alignment() {
        let mut buf = Vec::new();
        let h = vec!["a".to_string(), "bb".to_string()];
        write_table(&mut buf, &h, &[vec!["ccc".into(), "d".into()]]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a    bb\nccc  d\n");
    }
}
