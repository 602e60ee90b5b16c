//! The small integer program behind the neighborhood-diversity solver:
//! minimise the number of chosen path-class vectors subject to per-class
//! covering rows and, for edge-disjoint covers, per-class-pair edge budgets.
//! Solved by depth-first branch and bound.

use std::fmt;
use std::ops::ControlFlow;

use crate::checker::CoverMode;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpColumn {
    /// Vertices taken from each class.
    pub counts: Vec<u32>,
    /// Edges used per edge row, aligned with `IlpInstance::edge_rows`.
    pub edges: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpInstance {
    pub mode: CoverMode,
    pub class_sizes: Vec<u32>,
    /// Class pairs with an edge budget; empty unless edge-disjoint.
    pub edge_rows: Vec<(usize, usize)>,
    pub edge_capacity: Vec<u32>,
    pub columns: Vec<IlpColumn>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasible;

impl IlpInstance {
    pub fn objective(z: &[u32]) -> u32 {
        z.iter().sum()
    }

    pub fn is_feasible(&self, z: &[u32]) -> bool {
        for (j, &size) in self.class_sizes.iter().enumerate() {
            let got: u32 = self.columns.iter().zip(z).map(|(c, &x)| c.counts[j] * x).sum();
            let ok = if self.mode == CoverMode::Partition { got == size } else { got >= size };
            if !ok {
                return false;
            }
        }
        for (e, &cap) in self.edge_capacity.iter().enumerate() {
            let used: u32 = self.columns.iter().zip(z).map(|(c, &x)| c.edges[e] * x).sum();
            if used > cap {
                return false;
            }
        }
        true
    }
}

/// LP-style dump: the objective row, then one constraint per line as
/// `<coefficients> <op> <rhs>`.
impl fmt::Display for IlpInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones = vec!["1"; self.columns.len()].join(" ");
        writeln!(f, "min {ones}")?;
        let op = if self.mode == CoverMode::Partition { "=" } else { ">=" };
        for (j, size) in self.class_sizes.iter().enumerate() {
            let row: Vec<String> = self.columns.iter().map(|c| c.counts[j].to_string()).collect();
            writeln!(f, "{} {op} {size}", row.join(" "))?;
        }
        for (e, cap) in self.edge_capacity.iter().enumerate() {
            let row: Vec<String> = self.columns.iter().map(|c| c.edges[e].to_string()).collect();
            writeln!(f, "{} <= {cap}", row.join(" "))?;
        }
        Ok(())
    }
}

struct State<'a> {
    ilp: &'a IlpInstance,
    order: Vec<usize>,
    /// `max_coef[i][j]`: largest count of class j among columns order[i..].
    max_coef: Vec<Vec<u32>>,
    rem: Vec<i64>,
    cap: Vec<i64>,
    z: Vec<u32>,
    used: u32,
}

impl<'a> State<'a> {
    fn new(ilp: &'a IlpInstance) -> Self {
        let mut order: Vec<usize> = (0..ilp.columns.len()).collect();
        order.sort_by_key(|&c| std::cmp::Reverse(ilp.columns[c].counts.iter().sum::<u32>()));
        let d = ilp.class_sizes.len();
        let mut max_coef = vec![vec![0u32; d]; order.len() + 1];
        for i in (0..order.len()).rev() {
            for j in 0..d {
                max_coef[i][j] = max_coef[i + 1][j].max(ilp.columns[order[i]].counts[j]);
            }
        }
        State {
            ilp,
            order,
            max_coef,
            rem: ilp.class_sizes.iter().map(|&s| s as i64).collect(),
            cap: ilp.edge_capacity.iter().map(|&c| c as i64).collect(),
            z: vec![0; ilp.columns.len()],
            used: 0,
        }
    }

    fn satisfied(&self) -> bool {
        if self.ilp.mode == CoverMode::Partition {
            self.rem.iter().all(|&r| r == 0)
        } else {
            self.rem.iter().all(|&r| r <= 0)
        }
    }

    /// Paths still needed from columns `order[i..]`, or `None` if impossible.
    fn lower_bound(&self, i: usize) -> Option<u32> {
        let mut lb = 0i64;
        for (j, &r) in self.rem.iter().enumerate() {
            if r <= 0 {
                continue;
            }
            let m = self.max_coef[i][j] as i64;
            if m == 0 {
                return None;
            }
            lb = lb.max((r + m - 1) / m);
        }
        Some(lb as u32)
    }

    /// Largest sensible value for column `order[i]`. With `useful_only`
    /// covering columns stop once they add nothing.
    fn upper(&self, i: usize, limit: u32, useful_only: bool) -> u32 {
        let col = &self.ilp.columns[self.order[i]];
        let mut ub = limit as i64;
        let mut useful = 0i64;
        for (j, &a) in col.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let a = a as i64;
            if self.ilp.mode == CoverMode::Partition {
                ub = ub.min(self.rem[j].max(0) / a);
            } else {
                useful = useful.max((self.rem[j].max(0) + a - 1) / a);
            }
        }
        if self.ilp.mode != CoverMode::Partition && useful_only {
            ub = ub.min(useful);
        }
        for (e, &t) in col.edges.iter().enumerate() {
            if t > 0 {
                ub = ub.min(self.cap[e].max(0) / t as i64);
            }
        }
        ub.max(0) as u32
    }

    fn apply(&mut self, i: usize, x: u32, sign: i64) {
        let c = self.order[i];
        let col = &self.ilp.columns[c];
        for (j, &a) in col.counts.iter().enumerate() {
            self.rem[j] -= sign * (a * x) as i64;
        }
        for (e, &t) in col.edges.iter().enumerate() {
            self.cap[e] -= sign * (t * x) as i64;
        }
        if sign > 0 {
            self.z[c] += x;
            self.used += x;
        } else {
            self.z[c] -= x;
            self.used -= x;
        }
    }

    fn optimise(&mut self, i: usize, best: &mut Option<(u32, Vec<u32>)>) {
        if self.satisfied() {
            if best.as_ref().is_none_or(|b| self.used < b.0) {
                *best = Some((self.used, self.z.clone()));
            }
            return;
        }
        if i == self.order.len() {
            return;
        }
        let Some(lb) = self.lower_bound(i) else { return };
        let bound = best.as_ref().map_or(u32::MAX, |b| b.0);
        if self.used + lb >= bound {
            return;
        }
        let limit = bound.saturating_sub(self.used + 1);
        for x in (0..=self.upper(i, limit, true)).rev() {
            self.apply(i, x, 1);
            self.optimise(i + 1, best);
            self.apply(i, x, -1);
        }
    }

    fn enumerate(&mut self, i: usize, total: u32, f: &mut dyn FnMut(&[u32]) -> ControlFlow<()>) -> ControlFlow<()> {
        if self.used == total && self.satisfied() {
            return f(&self.z);
        }
        if i == self.order.len() || self.used >= total {
            return ControlFlow::Continue(());
        }
        let Some(lb) = self.lower_bound(i) else { return ControlFlow::Continue(()) };
        if self.used + lb > total {
            return ControlFlow::Continue(());
        }
        for x in (0..=self.upper(i, total - self.used, false)).rev() {
            self.apply(i, x, 1);
            let flow = self.enumerate(i + 1, total, f);
            self.apply(i, x, -1);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// An optimal assignment of multiplicities to columns.
pub fn solve_ilp(ilp: &IlpInstance) -> Result<Vec<u32>, Infeasible> {
    let mut state = State::new(ilp);
    let mut best = None;
    state.optimise(0, &mut best);
    best.map(|b| b.1).ok_or(Infeasible)
}

/// Calls `f` on every feasible assignment with objective exactly `total`
/// until it breaks.
pub fn for_each_solution(ilp: &IlpInstance, total: u32, mut f: impl FnMut(&[u32]) -> ControlFlow<()>) -> ControlFlow<()> {
    State::new(ilp).enumerate(0, total, &mut f)
}
