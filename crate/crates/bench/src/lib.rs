//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use coalglab::coalgebra::path_coalgebra;
use coalglab::exactlin::Field;
use coalglab::{Coalgebra, Comodule, Quiver};

/// Truncated path coalgebra of the `n`-vertex line.
pub fn line(field: Field, n: usize, len: usize) -> Arc<Coalgebra> {
    Arc::new(path_coalgebra(field, &Quiver::line(n), len).expect("line quiver"))
}

/// `C` as a left comodule, plus a copy of itself.
pub fn regular_twice(c: &Arc<Coalgebra>) -> Comodule {
    let m = Comodule::regular(c.clone());
    m.direct_sum(&m).expect("same coalgebra")
}
