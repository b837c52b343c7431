//! Exact-cover search: given items ("columns") and candidate sets ("rows"),
//! stream every selection of rows that covers each column exactly once.
//!
//! The solver is a counter-based variant of Algorithm X. Column selection is
//! fewest-available-rows first with ties broken by the smallest column index,
//! and the rows of a column are tried in ascending row id, so the solution
//! stream is deterministic and independent of how the search is driven.

/// An exact-cover problem. Rows are identified by their insertion index.
#[derive(Clone, Debug)]
pub struct ExactCoverInstance {
    n_columns: usize,
    rows: Vec<Vec<usize>>,
}

impl ExactCoverInstance {
    pub fn new(n_columns: usize) -> Self {
        ExactCoverInstance {
            n_columns,
            rows: Vec::new(),
        }
    }

    pub fn n_columns(&self) -> usize {
        self.n_columns
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Add a row covering the given columns; returns its row id.
    ///
    /// Every row must cover at least one column, and column indices must be
    /// in range — both are contract errors.
    pub fn add_row(&mut self, columns: Vec<usize>) -> usize {
        assert!(!columns.is_empty(), "a row must cover at least one column");
        assert!(
            columns.iter().all(|&c| c < self.n_columns),
            "column index out of range"
        );
        let mut cols = columns;
        cols.sort_unstable();
        cols.dedup();
        self.rows.push(cols);
        self.rows.len() - 1
    }

    pub fn row(&self, id: usize) -> &[usize] {
        &self.rows[id]
    }

    /// Stream all solutions, each as the ascending list of chosen row ids.
    /// Includes the empty solution when there are no columns.
    pub fn solutions(self) -> Solutions {
        Solutions::new(self)
    }

    /// Number of solutions, without materialising them.
    pub fn count_solutions(self) -> u64 {
        let mut sols = self.solutions();
        let mut count = 0u64;
        while sols.advance() {
            count += 1;
        }
        count
    }
}

struct Frame {
    candidates: Vec<usize>,
    idx: usize,
}

/// Iterator over the solutions of an [`ExactCoverInstance`].
pub struct Solutions {
    inst: ExactCoverInstance,
    col_rows: Vec<Vec<usize>>,
    covered: Vec<bool>,
    /// per-row count of covered columns it touches; the row is available iff 0
    blocked: Vec<u32>,
    /// per-column count of available rows (stale while the column is covered)
    avail: Vec<u32>,
    uncovered: usize,
    frames: Vec<Frame>,
    backtracking: bool,
    done: bool,
}

impl Solutions {
    fn new(inst: ExactCoverInstance) -> Self {
        let n = inst.n_columns;
        let mut col_rows = vec![Vec::new(); n];
        for (r, cols) in inst.rows.iter().enumerate() {
            for &c in cols {
                col_rows[c].push(r);
            }
        }
        let avail = col_rows.iter().map(|v| v.len() as u32).collect();
        Solutions {
            blocked: vec![0; inst.rows.len()],
            covered: vec![false; n],
            uncovered: n,
            col_rows,
            avail,
            inst,
            frames: Vec::new(),
            backtracking: false,
            done: false,
        }
    }

    fn place(&mut self, row: usize) {
        let cols = std::mem::take(&mut self.inst.rows[row]);
        for &c in &cols {
            self.covered[c] = true;
            self.uncovered -= 1;
            for i in 0..self.col_rows[c].len() {
                let r = self.col_rows[c][i];
                self.blocked[r] += 1;
                if self.blocked[r] == 1 {
                    for &c2 in &self.inst.rows[r] {
                        if !self.covered[c2] {
                            self.avail[c2] -= 1;
                        }
                    }
                    if r == row {
                        // the placed row's own column list is parked in `cols`
                        for &c2 in &cols {
                            if !self.covered[c2] {
                                self.avail[c2] -= 1;
                            }
                        }
                    }
                }
            }
        }
        self.inst.rows[row] = cols;
    }

    fn unplace(&mut self, row: usize) {
        let cols = std::mem::take(&mut self.inst.rows[row]);
        for &c in cols.iter().rev() {
            for i in (0..self.col_rows[c].len()).rev() {
                let r = self.col_rows[c][i];
                if self.blocked[r] == 1 {
                    for &c2 in &self.inst.rows[r] {
                        if !self.covered[c2] {
                            self.avail[c2] += 1;
                        }
                    }
                    if r == row {
                        for &c2 in &cols {
                            if !self.covered[c2] {
                                self.avail[c2] += 1;
                            }
                        }
                    }
                }
                self.blocked[r] -= 1;
            }
            self.covered[c] = false;
            self.uncovered += 1;
        }
        self.inst.rows[row] = cols;
    }

    fn pick_column(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_avail = u32::MAX;
        for c in 0..self.inst.n_columns {
            if !self.covered[c] && self.avail[c] < best_avail {
                best_avail = self.avail[c];
                best = c;
                if best_avail == 0 {
                    break;
                }
            }
        }
        best
    }

    /// Move to the next solution; `true` when positioned on one. The chosen
    /// rows are then readable from the frame stack.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        loop {
            if self.backtracking {
                loop {
                    match self.frames.last_mut() {
                        None => {
                            self.done = true;
                            return false;
                        }
                        Some(f) => {
                            let row = f.candidates[f.idx];
                            f.idx += 1;
                            let next = f.idx < f.candidates.len();
                            let next_row = if next { Some(f.candidates[f.idx]) } else { None };
                            self.unplace(row);
                            match next_row {
                                Some(r) => {
                                    self.place(r);
                                    self.backtracking = false;
                                    break;
                                }
                                None => {
                                    self.frames.pop();
                                }
                            }
                        }
                    }
                }
            } else {
                if self.uncovered == 0 {
                    self.backtracking = true;
                    return true;
                }
                let col = self.pick_column();
                let candidates: Vec<usize> = self.col_rows[col]
                    .iter()
                    .copied()
                    .filter(|&r| self.blocked[r] == 0)
                    .collect();
                if candidates.is_empty() {
                    self.backtracking = true;
                    continue;
                }
                self.place(candidates[0]);
                self.frames.push(Frame { candidates, idx: 0 });
            }
        }
    }

    fn snapshot(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.frames.iter().map(|f| f.candidates[f.idx]).collect();
        rows.sort_unstable();
        rows
    }
}

impl Iterator for Solutions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.advance() {
            Some(self.snapshot())
        } else {
            None
        }
    }
}
