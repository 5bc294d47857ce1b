/// Capacity limits applied throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest group whose full subgroup lattice is computed.
    pub subgroup_lattice_order: usize,
    /// Largest graph handed to maximal independent set enumeration.
    pub independent_set_vertices: usize,
    /// Largest semigroup enumerated by closure.
    pub semigroup_elements: usize,
    /// Semigroups up to this size get a full multiplication table.
    pub table_elements: usize,
    /// Largest semigroup the subset-enumeration oracle accepts.
    pub oracle_elements: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            subgroup_lattice_order: 400,
            independent_set_vertices: 64,
            semigroup_elements: 100_000,
            table_elements: 2048,
            oracle_elements: 16,
        }
    }
}
