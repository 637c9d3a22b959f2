/*!
Exact circumference machinery for sparse-cycle extremal problems.

The crate is organized as a library with one thin CLI on top; the
`examples/` directory is the guided tour, one runnable program per
capability.

- [`graph`]: bitset-backed simple graphs and set algebra.
- [`graph6`]: the printable interchange codec.
- [`witness`]: cycle/path witnesses and the degenerate-cycle conventions
  (vertex = cycle of length 1, edge = cycle of length 2).
- [`invariants`]: exact solvers (circumference, longest path, vertex
  connectivity) plus residual invariants after deleting a longest cycle.
- [`oracle`]: naive exhaustive reference implementations the solvers are
  cross-checked against.
- [`rational`]: exact rational arithmetic for bound values.
- [`bounds`]: the circumference lower bounds and their comparison table.
- [`gen`]: extremal families, seeded random graphs, named graphs, and
  exhaustive small-graph enumeration.
- [`machinery`]: cycle-extension structures on top of a longest cycle and
  the lemma checks quantified over them.
- [`campaign`]: batch verification with deterministic reports.
*/

#![forbid(unsafe_code)]

pub mod bounds;
pub mod campaign;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod machinery;
pub mod oracle;
pub mod rational;
pub mod witness;
