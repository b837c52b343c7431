//! Resource guards for the enumeration entry points.
//!
//! Exceeding a guard is a refusal, not an attempt. All limits are plain
//! fields so callers can relax them deliberately; `from_env` additionally
//! honours `MATROID_MAX_N` and `CENSUS_GUARD`.

#[derive(Clone, Debug)]
pub struct Guards {
    /// Default groundset cap for enumeration work (hard cap is 24).
    pub max_n: usize,
    /// Full matroid census cap on `n` when the walk stays within rank 3.
    pub census_n_low_rank: usize,
    /// Full matroid census cap on `n` for general rank.
    pub census_n_general: usize,
    /// Paving enumeration cap on `n` at rank 3.
    pub paving_n_rank3: usize,
    /// Stable-set enumeration cap on the number of `r`-subsets.
    pub sparse_max_positions: u64,
    /// Steiner enumeration cap on `n` at rank 3.
    pub steiner_n_rank3: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_n: 16,
            census_n_low_rank: 8,
            census_n_general: 7,
            paving_n_rank3: 9,
            sparse_max_positions: 35,
            steiner_n_rank3: 9,
        }
    }
}

impl Guards {
    /// Defaults, overridden by `MATROID_MAX_N` (groundset cap) and
    /// `CENSUS_GUARD` (lifts every census-style cap on `n` to the given
    /// value).
    pub fn from_env() -> Self {
        let mut g = Guards::default();
        if let Some(v) = read_env("MATROID_MAX_N") {
            g.max_n = v.min(crate::sets::MAX_GROUNDSET);
        }
        if let Some(v) = read_env("CENSUS_GUARD") {
            g.census_n_low_rank = v;
            g.census_n_general = v;
            g.paving_n_rank3 = v;
            g.steiner_n_rank3 = v;
        }
        g
    }
}

fn read_env(name: &str) -> Option<usize> {
    std::env::var(name).ok()?.trim().parse().ok()
}
