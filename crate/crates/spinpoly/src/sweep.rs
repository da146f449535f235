//! Sweeps over every (row, class) cell, split across a rayon pool.

use rayon::prelude::*;
use spinpoly_core::minpoly::{verify_n, PowerMaps, Sweep, VerificationReport};
use spinpoly_core::spinchars::SpinCharacterTable;

use crate::error::{CliError, CliResult};

pub fn pool(workers: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {workers} workers: {e}")))
}

/// Same cells in the same order as `Sweep::run`, computed in parallel.
pub fn parallel_sweep(table: &SpinCharacterTable, pool: &rayon::ThreadPool) -> CliResult<Sweep> {
    let powers = PowerMaps::new(table)?;
    let pairs = Sweep::all_pairs(table);
    let chunk = pairs.len().div_ceil(pool.current_num_threads() * 4).max(1);
    let parts: Vec<_> = pool.install(|| {
        pairs.par_chunks(chunk).map(|c| Sweep::cells_for(table, &powers, c.iter().copied())).collect()
    });
    let mut cells = Vec::with_capacity(pairs.len());
    for p in parts {
        cells.extend(p?);
    }
    Ok(Sweep { group: table.group(), n: table.n(), cells })
}

pub fn parallel_verify(table: &SpinCharacterTable, pool: &rayon::ThreadPool) -> CliResult<VerificationReport> {
    let sweep = parallel_sweep(table, pool)?;
    Ok(verify_n(&sweep)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use spinpoly_core::covergroup::Group;
    use spinpoly_core::spinchars::build_table;

    #[test]
    fn parallel_matches_serial() {
        let p = pool(3).unwrap();
        for (g, n) in [(Group::S, 7), (Group::A, 8)] {
            let t = build_table(g, n).unwrap();
            let a = parallel_sweep(&t, &p).unwrap();
            let b = Sweep::run(&t).unwrap();
            assert_eq!(a.cells.len(), b.cells.len());
            for (x, y) in a.cells.iter().zip(&b.cells) {
                assert_eq!((&x.row, &x.class, &x.computed.support), (&y.row, &y.class, &y.computed.support));
            }
        }
    }
}
