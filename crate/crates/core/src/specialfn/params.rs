use num_complex::Complex64;

/// Truncation and accuracy controls shared by the series evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
    /// Target relative accuracy.
    pub tolerance: f64,
    /// Radius of the perturbation circle around an integer parameter where
    /// the residue series has colliding poles; parameters within half this
    /// distance of an integer take the perturbed path.
    pub epsilon_perturb: f64,
    /// Abscissa of the vertical line used by the contour-integral oracle;
    /// `None` picks one automatically.
    pub contour_abscissa: Option<f64>,
}

impl Default for SeriesParams {
    fn default() -> Self {
        SeriesParams {
            max_terms: 2000,
            tolerance: 1e-14,
            epsilon_perturb: 0.25,
            contour_abscissa: None,
        }
    }
}

impl SeriesParams {
    pub fn with_tolerance(self, tolerance: f64) -> Self {
        SeriesParams { tolerance, ..self }
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        SeriesParams { max_terms, ..self }
    }

    pub fn with_epsilon(self, epsilon_perturb: f64) -> Self {
        SeriesParams { epsilon_perturb, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    /// The term cap was hit before the requested accuracy.
    Truncated,
    /// An integer parameter was handled by symmetric perturbation.
    Perturbed,
    /// A pole was removed analytically (finite-part value).
    Regularized,
    /// The series being summed is not known to converge.
    NonConvergent,
}

impl Flag {
    pub const ALL: [Flag; 4] = [Flag::Truncated, Flag::Perturbed, Flag::Regularized, Flag::NonConvergent];

    pub fn name(self) -> &'static str {
        match self {
            Flag::Truncated => "Truncated",
            Flag::Perturbed => "Perturbed",
            Flag::Regularized => "Regularized",
            Flag::NonConvergent => "NonConvergent",
        }
    }

    fn bit(self) -> u8 {
        match self {
            Flag::Truncated => 1,
            Flag::Perturbed => 2,
            Flag::Regularized => 4,
            Flag::NonConvergent => 8,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Flags(u8);

impl Flags {
    pub fn empty() -> Self {
        Flags(0)
    }

    pub fn insert(&mut self, flag: Flag) {
        self.0 |= flag.bit();
    }

    pub fn contains(self, flag: Flag) -> bool {
        self.0 & flag.bit() != 0
    }

    pub fn union(self, other: Flags) -> Flags {
        Flags(self.0 | other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Flag> {
        Flag::ALL.into_iter().filter(move |f| self.contains(*f))
    }
}

impl From<Flag> for Flags {
    fn from(flag: Flag) -> Self {
        Flags(flag.bit())
    }
}

impl std::fmt::Display for Flags {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<_> = self.iter().map(Flag::name).collect();
        f.write_str(&names.join("|"))
    }
}

/// A numerical value with an error estimate and a record of how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub flags: Flags,
}

impl EvalResult {
    pub fn new(value: Complex64, abs_error_estimate: f64, terms_used: usize) -> Self {
        EvalResult {
            value,
            abs_error_estimate,
            terms_used,
            flags: Flags::empty(),
        }
    }

    pub fn with_flag(mut self, flag: Flag) -> Self {
        self.flags.insert(flag);
        self
    }
}
