//! Bounded integer feasibility: a model of boxed integer variables and
//! linear rows, solved exactly by bound propagation and depth-first domain
//! splitting.

use std::collections::VecDeque;

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Eq,
    Ge,
    Gt,
}

/// `Σ coef · var <= rhs`. Every constraint is stored in this form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub label: &'static str,
    pub terms: Vec<(usize, i64)>,
    pub rhs: i64,
}

#[derive(Debug, Clone, Default)]
pub struct IlpModel {
    names: Vec<String>,
    lower: Vec<i64>,
    upper: Vec<Option<i64>>,
    rows: Vec<Row>,
}

impl IlpModel {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a variable with domain `lo..=hi`; `hi = None` leaves it unbounded,
    /// which [`ilp_feasible`] rejects.
    pub fn add_var(&mut self, name: impl Into<String>, lo: i64, hi: Option<i64>) -> usize {
        self.names.push(name.into());
        self.lower.push(lo);
        self.upper.push(hi);
        self.names.len() - 1
    }

    /// Adds `Σ terms ⋈ rhs`. Strict relations become non-strict over the
    /// integers and an equation becomes two opposite inequalities.
    pub fn add_constraint(&mut self, label: &'static str, terms: &[(usize, i64)], rel: Relation, rhs: i64) {
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(terms.len());
        let mut sorted = terms.to_vec();
        sorted.sort_unstable_by_key(|&(v, _)| v);
        for (v, c) in sorted {
            match merged.last_mut() {
                Some((w, d)) if *w == v => *d += c,
                _ => merged.push((v, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        let negated = || merged.iter().map(|&(v, c)| (v, -c)).collect::<Vec<_>>();
        let le = |terms: Vec<(usize, i64)>, rhs| Row { label, terms, rhs };
        match rel {
            Relation::Le => self.rows.push(le(merged.clone(), rhs)),
            Relation::Lt => self.rows.push(le(merged.clone(), rhs - 1)),
            Relation::Ge => self.rows.push(le(negated(), -rhs)),
            Relation::Gt => self.rows.push(le(negated(), -rhs - 1)),
            Relation::Eq => {
                self.rows.push(le(merged.clone(), rhs));
                self.rows.push(le(negated(), -rhs));
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn var(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn bounds(&self, var: usize) -> (i64, Option<i64>) {
        (self.lower[var], self.upper[var])
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn count_rows(&self, label: &str) -> usize {
        self.rows.iter().filter(|r| r.label == label).count()
    }

    /// Whether `values` lies in every box and satisfies every row.
    pub fn satisfied_by(&self, values: &[i64]) -> bool {
        values.len() == self.num_vars()
            && values.iter().enumerate().all(|(i, &x)| x >= self.lower[i] && self.upper[i].is_none_or(|h| x <= h))
            && self.rows.iter().all(|r| r.terms.iter().map(|&(v, c)| c * values[v]).sum::<i64>() <= r.rhs)
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

struct Search<'a> {
    model: &'a IlpModel,
    var_rows: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Tightens `lo`/`hi` to a fixpoint starting from the queued rows;
    /// `false` when some row cannot be met.
    fn propagate(&self, lo: &mut [i64], hi: &mut [i64], mut queue: VecDeque<usize>) -> bool {
        let rows = &self.model.rows;
        let mut queued = vec![false; rows.len()];
        for &r in &queue {
            queued[r] = true;
        }
        while let Some(r) = queue.pop_front() {
            queued[r] = false;
            let row = &rows[r];
            let min_act: i64 = row.terms.iter().map(|&(v, c)| if c > 0 { c * lo[v] } else { c * hi[v] }).sum();
            if min_act > row.rhs {
                return false;
            }
            for &(v, c) in &row.terms {
                let own = if c > 0 { c * lo[v] } else { c * hi[v] };
                let slack = row.rhs - (min_act - own);
                let changed = if c > 0 {
                    let bound = floor_div(slack, c);
                    if bound < hi[v] {
                        hi[v] = bound;
                        true
                    } else {
                        false
                    }
                } else {
                    let bound = ceil_div(slack, c);
                    if bound > lo[v] {
                        lo[v] = bound;
                        true
                    } else {
                        false
                    }
                };
                if changed {
                    if lo[v] > hi[v] {
                        return false;
                    }
                    for &q in &self.var_rows[v] {
                        if !queued[q] {
                            queued[q] = true;
                            queue.push_back(q);
                        }
                    }
                }
            }
        }
        true
    }

    fn dfs(&self, lo: Vec<i64>, hi: Vec<i64>, changed: usize) -> Option<Vec<i64>> {
        let (mut lo, mut hi) = (lo, hi);
        if !self.propagate(&mut lo, &mut hi, self.var_rows[changed].iter().copied().collect()) {
            return None;
        }
        let pick = (0..lo.len()).filter(|&v| hi[v] > lo[v]).min_by_key(|&v| (hi[v] - lo[v], v));
        let Some(v) = pick else {
            return Some(lo);
        };
        let mid = lo[v] + (hi[v] - lo[v]) / 2;
        let mut low_hi = hi.clone();
        low_hi[v] = mid;
        if let Some(sol) = self.dfs(lo.clone(), low_hi, v) {
            return Some(sol);
        }
        lo[v] = mid + 1;
        self.dfs(lo, hi, v)
    }
}

/// Finds an integer point satisfying every row, or `None`. Exact: the search
/// only discards boxes that propagation proves empty.
pub fn ilp_feasible(model: &IlpModel) -> Result<Option<Vec<i64>>> {
    let n = model.num_vars();
    let mut hi = Vec::with_capacity(n);
    for v in 0..n {
        match model.upper[v] {
            Some(h) => hi.push(h),
            None => return Err(invalid(format!("variable {} has no upper bound", model.names[v]))),
        }
    }
    let mut lo = model.lower.clone();
    if (0..n).any(|v| lo[v] > hi[v]) {
        return Ok(None);
    }
    let mut var_rows = vec![Vec::new(); n];
    for (r, row) in model.rows.iter().enumerate() {
        for &(v, _) in &row.terms {
            var_rows[v].push(r);
        }
    }
    let search = Search { model, var_rows };
    if !search.propagate(&mut lo, &mut hi, (0..model.rows.len()).collect()) {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let sol = search.dfs(lo, hi, 0);
    if let Some(s) = &sol {
        debug_assert!(model.satisfied_by(s));
    }
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let mut m = IlpModel::new();
        let x = m.add_var("x", 0, Some(10));
        m.add_constraint("a", &[(x, 1)], Relation::Le, 2);
        m.add_constraint("b", &[(x, 1)], Relation::Ge, 3);
        assert_eq!(ilp_feasible(&m).unwrap(), None);

        let mut m = IlpModel::new();
        let x = m.add_var("x", 0, Some(2));
        let y = m.add_var("y", 0, Some(2));
        m.add_constraint("sum", &[(x, 1), (y, 1)], Relation::Eq, 3);
        let sol = ilp_feasible(&m).unwrap().unwrap();
        assert!(sol == vec![1, 2] || sol == vec![2, 1]);
        assert_eq!(m.count_rows("sum"), 2);

        let mut m = IlpModel::new();
        m.add_var("free", 0, None);
        assert!(ilp_feasible(&m).is_err());
    }

    #[test]
    fn strict_and_negative() {
        let mut m = IlpModel::new();
        let x = m.add_var("x", -5, Some(5));
        let y = m.add_var("y", -5, Some(5));
        m.add_constraint("s", &[(x, 2), (y, -3)], Relation::Gt, 7);
        m.add_constraint("t", &[(x, 1), (y, 1)], Relation::Lt, 0);
        let sol = ilp_feasible(&m).unwrap().unwrap();
        assert!(2 * sol[0] - 3 * sol[1] > 7 && sol[0] + sol[1] < 0);
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(ceil_div(7, -2), -3);
    }
}
