/// Hard limits for standard basis computations. Exceeding either one is
/// an error, never a silently truncated result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Reduction steps per basis completion.
    pub max_reductions: u64,
    /// Elements a basis may grow to.
    pub max_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_reductions: 5_000_000, max_basis: 4_000 }
    }
}

/// Settings shared by every stage of the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub budget: Budget,
    /// Generic recombinations tried before an input is declared invalid.
    pub retry_cap: u32,
    /// Quotient rounds allowed before a saturation is declared divergent.
    pub saturation_cap: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config { budget: Budget::default(), retry_cap: 8, saturation_cap: 32 }
    }
}
