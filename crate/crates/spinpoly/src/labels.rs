//! Turning command-line strings into row and class labels.

use spinpoly_core::covergroup::{AltTag, ClassLabel, Group};
use spinpoly_core::partitions::{Partition, Sign, StrictPartition};
use spinpoly_core::spinchars::{row_assocs, Assoc, RowLabel};

use crate::error::{CliError, CliResult};

fn usage<T>(msg: String) -> CliResult<T> {
    Err(CliError::Usage(msg))
}

pub fn parse_lambda(n: u32, s: &str) -> CliResult<StrictPartition> {
    let lambda: StrictPartition = s.parse().map_err(|e| CliError::Usage(format!("--lambda {s}: {e}")))?;
    if lambda.n() != n {
        return usage(format!("--lambda {lambda} is a partition of {}, not {n}", lambda.n()));
    }
    Ok(lambda)
}

pub fn parse_row(group: Group, n: u32, lambda: &str, assoc: Option<&str>) -> CliResult<RowLabel> {
    let lambda = parse_lambda(n, lambda)?;
    let allowed = row_assocs(group, n, &lambda);
    let assoc = match assoc {
        Some(a) => a.parse::<Assoc>().map_err(|e| CliError::Usage(e.to_string()))?,
        None => allowed[0],
    };
    if !allowed.contains(&assoc) {
        let names: Vec<&str> = allowed.iter().map(|a| a.symbol()).collect();
        return usage(format!("{lambda} in group {} takes --assoc {}", group.letter(), names.join(" or ")));
    }
    Ok(RowLabel::new(lambda, assoc))
}

/// `sign` may carry a z-sign (`+`, `-`) and, for split Ã classes, a half
/// tag (`a`, `b`), e.g. `+a` or `b`.
pub fn parse_class(group: Group, n: u32, mu: &str, sign: Option<&str>) -> CliResult<ClassLabel> {
    let mu: Partition = mu.parse().map_err(|e| CliError::Usage(format!("--mu {mu}: {e}")))?;
    if mu.n() != n {
        return usage(format!("--mu {mu} is a partition of {}, not {n}", mu.n()));
    }
    let mut z_sign = None;
    let mut alt = None;
    for ch in sign.unwrap_or("").chars() {
        match ch {
            '+' => z_sign = Some(Sign::Plus),
            '-' => z_sign = Some(Sign::Minus),
            'a' => alt = Some(AltTag::A),
            'b' => alt = Some(AltTag::B),
            c => return usage(format!("--sign: unexpected {c:?} (use +, -, a, b)")),
        }
    }
    ClassLabel::new(group, mu, z_sign, alt).map_err(|e| CliError::Usage(e.to_string()))
}

/// Inverse of the class `Display`: `(5,3,1^2)+a`.
pub fn parse_class_name(group: Group, s: &str) -> CliResult<ClassLabel> {
    let (mu, rest) = match s.find(')') {
        Some(i) => s.split_at(i + 1),
        None => return usage(format!("bad class name {s:?}")),
    };
    let mu: Partition = mu.parse().map_err(|e| CliError::Usage(format!("{s}: {e}")))?;
    let n = mu.n();
    parse_class(group, n, &mu.to_string(), Some(rest))
}
