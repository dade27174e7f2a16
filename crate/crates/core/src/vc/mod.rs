//! Solver parameterized by the vertex cover number.
//!
//! With a minimum cover `C` fixed, the algorithm guesses `H ∩ C`, the edges
//! added inside it, and the shape parameters of the degree sequence of good
//! edges among the independent vertices. Each guess yields an integer program
//! over counts of vertex types; a feasible point is turned back into edges.

mod cover;
mod ilp;

pub use cover::{min_vertex_cover, VertexCover};
pub use ilp::{ilp_feasible, IlpModel, Relation, Row};

use crate::error::{internal, invalid, Result};
use crate::graph::induced_subgraph;
use crate::instance::{verify_certificate, Answer, Certificate, Instance, Normalized};
use crate::sequences::{erdos_gallai, realize};

/// Shape of the good-edge degree sequence `t` on the independent side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphicGuess {
    /// No edges between independent vertices.
    NoInternalEdges,
    /// `d_max` is the largest degree present; the range check runs for
    /// `D ∈ [left, right]` with `T_D = t_d[D - left]`.
    Params { d_max: usize, left: usize, right: usize, t_d: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessTuple {
    /// `H ∩ C`, ascending.
    pub core: Vec<usize>,
    /// Edges added between vertices of `core`.
    pub clique_edges: Vec<(usize, usize)>,
    pub graphic: GraphicGuess,
}

/// The instance after fixing `H ∩ C` and the edges inside it.
struct Reduced {
    k: usize,
    p: usize,
    core: Vec<usize>,
    /// Degree inside `core` after the guessed additions.
    deg_core: Vec<usize>,
    /// Vertices outside `C` grouped by their neighbourhood mask within `core`.
    types: Vec<Vec<usize>>,
    budget: usize,
}

impl Reduced {
    fn new(inst: &Instance, cover: &VertexCover, core: &[usize], clique: &[(usize, usize)]) -> Self {
        let g = &inst.graph;
        let pos = |v: usize| core.binary_search(&v).ok();
        let mut deg_core: Vec<usize> =
            core.iter().map(|&v| g.neighbors(v).iter().filter(|&&w| pos(w).is_some()).count()).collect();
        for &(a, b) in clique {
            deg_core[pos(a).expect("clique edge inside core")] += 1;
            deg_core[pos(b).expect("clique edge inside core")] += 1;
        }
        let mut types = vec![Vec::new(); 1 << core.len()];
        for v in (0..g.n()).filter(|&v| !cover.contains(v)) {
            let mask = g.neighbors(v).iter().filter_map(|&w| pos(w)).fold(0usize, |m, i| m | 1 << i);
            types[mask].push(v);
        }
        Reduced {
            k: inst.k,
            p: inst.normalize_target(),
            core: core.to_vec(),
            deg_core,
            types,
            budget: inst.b - clique.len(),
        }
    }

    fn c(&self) -> usize {
        self.core.len()
    }

    fn lo_i(&self) -> usize {
        self.k.saturating_sub(self.c())
    }

    fn lo_j(&self) -> usize {
        self.k.saturating_sub(self.c() + 1)
    }
}

/// Variable indices of one model.
struct Layout {
    x: Vec<usize>,
    /// `y[S]` lists `(S', var)` over supersets `S' ⊇ S`.
    y: Vec<Vec<(usize, usize)>>,
    /// `u[i - lo_i]` lists `(j, var)` for `j ∈ [lo_j, i]`.
    u: Vec<Vec<(usize, usize)>>,
    /// `t[j - lo_j]`.
    t: Vec<usize>,
}

fn supersets(s: usize, full: usize) -> impl Iterator<Item = usize> {
    let free = full & !s;
    let mut sub = free;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = s | (free & !sub);
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & free;
        }
        Some(out)
    })
}

/// Builds the model for one guess. `graphic = None` gives the relaxation
/// without the degree-sequence rows, used to skip hopeless guesses early.
fn model_for(red: &Reduced, graphic: Option<&GraphicGuess>) -> (IlpModel, Layout) {
    use Relation::*;
    let (k, c) = (red.k as i64, red.c());
    let n = red.types.iter().map(Vec::len).sum::<usize>() as i64;
    let full = (1usize << c) - 1;
    let (lo_i, lo_j) = (red.lo_i(), red.lo_j());
    let mut m = IlpModel::new();

    let x: Vec<usize> = (0..=full).map(|s| m.add_var(format!("x[{s:b}]"), 0, Some(red.types[s].len() as i64))).collect();
    let y: Vec<Vec<(usize, usize)>> = (0..=full)
        .map(|s| {
            supersets(s, full)
                .map(|t| (t, m.add_var(format!("y[{s:b},{t:b}]"), 0, Some(red.types[s].len() as i64))))
                .collect()
        })
        .collect();
    let s_var: Vec<usize> = (lo_i..=red.k).map(|i| m.add_var(format!("s[{i}]"), 0, Some(n))).collect();
    let u: Vec<Vec<(usize, usize)>> =
        (lo_i..=red.k).map(|i| (lo_j..=i).map(|j| (j, m.add_var(format!("u[{i},{j}]"), 0, Some(n)))).collect()).collect();
    let t: Vec<usize> = (lo_j..=red.k).map(|j| m.add_var(format!("t[{j}]"), 0, Some(n))).collect();
    let z = m.add_var("z", 0, Some(red.budget as i64));

    let mut budget: Vec<(usize, i64)> = Vec::new();
    for (s, row) in y.iter().enumerate() {
        for &(sup, var) in row {
            budget.push((var, (sup & !s).count_ones() as i64));
        }
    }
    for (ii, row) in u.iter().enumerate() {
        for &(j, var) in row {
            budget.push((var, (lo_i + ii - j) as i64));
        }
    }
    budget.push((z, 1));
    m.add_constraint("budget", &budget, Le, red.budget as i64);

    for (s, &xs) in x.iter().enumerate() {
        m.add_constraint("xs", &[(xs, 1)], Le, red.types[s].len() as i64);
    }
    let all_x: Vec<(usize, i64)> = x.iter().map(|&v| (v, 1)).collect();
    m.add_constraint("pvertices", &all_x, Ge, red.p as i64 - c as i64);
    for s in 0..=full {
        let mut terms: Vec<(usize, i64)> = y[s].iter().map(|&(_, v)| (v, 1)).collect();
        terms.push((x[s], -1));
        m.add_constraint("typechange", &terms, Eq, 0);
    }
    for (i, &deg) in red.deg_core.iter().enumerate() {
        let terms: Vec<(usize, i64)> =
            y.iter().flat_map(|row| row.iter().filter(|&&(sup, _)| sup >> i & 1 == 1).map(|&(_, v)| (v, 1))).collect();
        m.add_constraint("cdegree", &terms, Ge, k - deg as i64);
    }
    for (ii, &sv) in s_var.iter().enumerate() {
        let i = lo_i + ii;
        let mut terms: Vec<(usize, i64)> = y
            .iter()
            .flat_map(|row| row.iter().filter(|&&(sup, _)| red.k.saturating_sub(sup.count_ones() as usize) == i))
            .map(|&(_, v)| (v, 1))
            .collect();
        terms.push((sv, -1));
        m.add_constraint("defcount", &terms, Eq, 0);
    }
    for (ii, row) in u.iter().enumerate() {
        let mut terms: Vec<(usize, i64)> = row.iter().map(|&(_, v)| (v, 1)).collect();
        terms.push((s_var[ii], -1));
        m.add_constraint("defchange", &terms, Eq, 0);
    }
    for (jj, &tv) in t.iter().enumerate() {
        let j = lo_j + jj;
        let mut terms: Vec<(usize, i64)> =
            u.iter().flat_map(|row| row.iter().filter(|&&(jr, _)| jr == j).map(|&(_, v)| (v, 1))).collect();
        terms.push((tv, -1));
        m.add_constraint("newdef", &terms, Eq, 0);
    }

    graphic_rows(&mut m, &t, z, lo_j, red.k, graphic);
    (m, Layout { x, y, u, t })
}

/// Rows tying the counts `t[j - lo_j]` and `z` to the guessed shape.
fn graphic_rows(m: &mut IlpModel, t: &[usize], z: usize, lo_j: usize, k: usize, graphic: Option<&GraphicGuess>) {
    use Relation::*;
    let tj = |j: usize| t[j - lo_j];
    let range_sum = |from: usize, to: usize, weight: &dyn Fn(usize) -> i64| -> Vec<(usize, i64)> {
        (from.max(lo_j)..=to.min(k)).map(|j| (tj(j), weight(j))).collect()
    };
    match graphic {
        None => {
            let mut terms = range_sum(lo_j, k, &|j| j as i64);
            terms.push((z, -2));
            m.add_constraint("even", &terms, Eq, 0);
        }
        Some(GraphicGuess::NoInternalEdges) => {
            m.add_constraint("noedges", &[(z, 1)], Eq, 0);
            for j in lo_j.max(1)..=k {
                m.add_constraint("noedges", &[(tj(j), 1)], Eq, 0);
            }
        }
        Some(GraphicGuess::Params { d_max, left, right, t_d }) => {
            let (d_max, left, right) = (*d_max, *left, *right);
            for j in d_max + 1..=k {
                m.add_constraint("bigzero", &[(tj(j), 1)], Eq, 0);
            }
            m.add_constraint("dmaxone", &[(tj(d_max), 1)], Gt, 0);
            m.add_constraint("dmax", &range_sum(lo_j, k, &|_| 1), Ge, d_max as i64 + 1);
            let mut terms = range_sum(lo_j, d_max, &|j| j as i64);
            terms.push((z, -2));
            m.add_constraint("even", &terms, Eq, 0);
            if left <= right {
                for d in left..=right {
                    m.add_constraint("tds", &range_sum(d, d_max, &|_| 1), Eq, t_d[d - left] as i64);
                }
            }
            if d_max > right {
                m.add_constraint("right", &range_sum(right + 1, d_max, &|_| 1), Lt, lo_j as i64);
            }
            if left > lo_j {
                m.add_constraint("left", &range_sum(left - 1, d_max, &|_| 1), Gt, d_max as i64);
            }
            if left <= right {
                for d in left..=right {
                    let td = t_d[d - left];
                    let mut terms = range_sum(d, d_max, &|j| j as i64);
                    if d > lo_j {
                        terms.extend(range_sum(lo_j, d - 1, &|j| -(j.min(td) as i64)));
                    }
                    m.add_constraint("erdos", &terms, Le, (td * td.saturating_sub(1)) as i64);
                }
            }
        }
    }
}

impl Instance {
    fn normalize_target(&self) -> usize {
        match self.normalize() {
            Normalized::Target(p) => p,
            Normalized::Decided(_) => self.p,
        }
    }
}

fn check_guess(inst: &Instance, cover: &VertexCover, guess: &GuessTuple) -> Result<()> {
    let g = &inst.graph;
    if guess.core.windows(2).any(|w| w[0] >= w[1]) || guess.core.iter().any(|&v| !cover.contains(v)) {
        return Err(invalid("guessed core must be an ascending subset of the cover"));
    }
    if !cover.covers(g) {
        return Err(invalid("the given vertex set is not a vertex cover"));
    }
    if guess.clique_edges.len() > inst.b {
        return Err(invalid("guessed clique edges exceed the budget"));
    }
    for &(a, b) in &guess.clique_edges {
        if a == b || g.has_edge(a, b) || guess.core.binary_search(&a).is_err() || guess.core.binary_search(&b).is_err()
        {
            return Err(invalid(format!("clique edge {} {} is not a non-edge inside the core", a + 1, b + 1)));
        }
    }
    let lo_j = inst.k.saturating_sub(guess.core.len() + 1);
    if let GraphicGuess::Params { d_max, left, right, t_d } = &guess.graphic {
        let (d_max, left, right) = (*d_max, *left, *right);
        let expected = if left <= right { right - left + 1 } else { 0 };
        if !(lo_j..=inst.k).contains(&d_max)
            || !(lo_j..=d_max + 1).contains(&left)
            || !(lo_j..=d_max).contains(&right)
            || t_d.len() != expected
        {
            return Err(invalid("guessed parameters are out of range"));
        }
        if t_d.iter().any(|&x| x < lo_j || x > d_max) || t_d.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid("guessed T_D values must be non-increasing and within range"));
        }
    }
    Ok(())
}

/// The integer program for one guess. Every equation appears as two
/// opposite inequalities; [`Row::label`] names the family of each row.
pub fn build_ilp(inst: &Instance, cover: &VertexCover, guess: &GuessTuple) -> Result<IlpModel> {
    check_guess(inst, cover, guess)?;
    if inst.graph.n() <= inst.k {
        return Err(invalid(format!("{} vertices cannot form a {}-core", inst.graph.n(), inst.k)));
    }
    let red = Reduced::new(inst, cover, &guess.core, &guess.clique_edges);
    Ok(model_for(&red, Some(&guess.graphic)).0)
}

/// Every parameter tuple for the given range, in a fixed order.
fn all_params(lo_j: usize, k: usize) -> Vec<GraphicGuess> {
    fn sequences(len: usize, lo: usize, hi: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        for v in (lo..=top).rev() {
            cur.push(v);
            sequences(len, lo, hi, out, cur);
            cur.pop();
        }
    }
    let mut all = vec![GraphicGuess::NoInternalEdges];
    for d_max in lo_j..=k {
        for left in lo_j..=d_max + 1 {
            for right in lo_j..=d_max {
                let len = if left <= right { right - left + 1 } else { 0 };
                let mut seqs = Vec::new();
                sequences(len, lo_j, d_max, &mut seqs, &mut Vec::new());
                for t_d in seqs {
                    all.push(GraphicGuess::Params { d_max, left, right, t_d });
                }
            }
        }
    }
    all
}

/// The parameters the lemma-based check uses for a concrete sequence given
/// as counts `t[j - lo_j]`, or `None` if the sequence is all zero.
fn params_of(t: &[usize], lo_j: usize) -> Option<GraphicGuess> {
    let d_max = lo_j + t.iter().rposition(|&c| c > 0)?;
    let big_t = |d: usize| -> usize { t[d - lo_j..].iter().sum() };
    let left = (lo_j..=d_max).find(|&d| big_t(d) <= d_max).unwrap_or(d_max + 1);
    let right = (lo_j..=d_max).rev().find(|&d| big_t(d) >= lo_j).unwrap_or(lo_j);
    let t_d = if left <= right { (left..=right).map(big_t).collect() } else { Vec::new() };
    Some(GraphicGuess::Params { d_max, left, right, t_d })
}

fn is_graphic_counts(t: &[usize], lo_j: usize) -> bool {
    let mut seq: Vec<usize> = t.iter().enumerate().rev().flat_map(|(jj, &c)| std::iter::repeat_n(lo_j + jj, c)).collect();
    seq.sort_unstable_by(|a, b| b.cmp(a));
    erdos_gallai(&seq).unwrap_or(false)
}

fn value(sol: &[i64], var: usize) -> usize {
    sol[var] as usize
}

/// Turns a feasible point into concrete added edges.
fn reconstruct(
    inst: &Instance,
    red: &Reduced,
    clique: &[(usize, usize)],
    layout: &Layout,
    sol: &[i64],
) -> Result<Vec<(usize, usize)>> {
    let k = red.k;
    let mut edges: Vec<(usize, usize)> = clique.to_vec();
    let mut h: Vec<usize> = red.core.clone();
    // (vertex, deficiency after cover edges)
    let mut independent: Vec<(usize, usize)> = Vec::new();
    for (s, members) in red.types.iter().enumerate() {
        let mut pool = members[..value(sol, layout.x[s])].iter();
        for &(sup, var) in &layout.y[s] {
            for _ in 0..value(sol, var) {
                let &v = pool.next().ok_or_else(|| internal("type counts exceed chosen vertices"))?;
                for i in 0..red.c() {
                    if (sup & !s) >> i & 1 == 1 {
                        let c = red.core[i];
                        edges.push((v.min(c), v.max(c)));
                    }
                }
                h.push(v);
                independent.push((v, k.saturating_sub(sup.count_ones() as usize)));
            }
        }
    }
    independent.sort_unstable();
    h.sort_unstable();

    // Good-edge degrees: vertices of deficiency i take degree j per u[i][j].
    let mut want: Vec<(usize, usize)> = Vec::new();
    for (ii, row) in layout.u.iter().enumerate() {
        let i = red.lo_i() + ii;
        let mut of_i = independent.iter().filter(|&&(_, d)| d == i).map(|&(v, _)| v);
        for &(j, var) in row {
            for _ in 0..value(sol, var) {
                let v = of_i.next().ok_or_else(|| internal("deficiency counts exceed vertices"))?;
                want.push((v, j));
            }
        }
    }
    want.sort_unstable_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let degrees: Vec<usize> = want.iter().map(|&(_, j)| j).collect();
    let good = realize(&degrees).ok_or_else(|| internal("good-edge degree sequence is not graphic"))?;
    for (a, b) in good.edges() {
        let (x, y) = (want[a].0, want[b].0);
        edges.push((x.min(y), x.max(y)));
    }

    // Remaining deficiency is met greedily inside H.
    let (mut sub, back) = induced_subgraph(&inst.graph, &h);
    let local = |v: usize| h.binary_search(&v).expect("vertex of H");
    for &(a, b) in &edges {
        sub.add_edge(local(a), local(b))?;
    }
    for v in 0..sub.n() {
        while sub.degree(v) < k {
            let w = (0..sub.n())
                .find(|&w| w != v && !sub.has_edge(v, w))
                .ok_or_else(|| internal("no non-neighbour left inside H"))?;
            sub.add_edge(v, w)?;
            edges.push((back[v].min(back[w]), back[v].max(back[w])));
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

fn solve_reduced(inst: &Instance, red: &Reduced, clique: &[(usize, usize)]) -> Result<Option<Vec<(usize, usize)>>> {
    let (relaxed, layout) = model_for(red, None);
    let Some(sol) = ilp_feasible(&relaxed)? else {
        return Ok(None);
    };
    let lo_j = red.lo_j();
    let t: Vec<usize> = layout.t.iter().map(|&v| value(&sol, v)).collect();
    let mut order = Vec::new();
    if is_graphic_counts(&t, lo_j) {
        order.push(params_of(&t, lo_j).unwrap_or(GraphicGuess::NoInternalEdges));
    }
    for guess in all_params(lo_j, red.k) {
        if !order.contains(&guess) {
            order.push(guess);
        }
    }
    for guess in &order {
        let (model, layout) = model_for(red, Some(guess));
        if let Some(sol) = ilp_feasible(&model)? {
            return reconstruct(inst, red, clique, &layout, &sol).map(Some);
        }
    }
    Ok(None)
}

pub fn solve_vc(inst: &Instance) -> Result<Answer> {
    solve_vc_with(inst, &min_vertex_cover(&inst.graph))
}

/// Runs the guess loops over the given cover, which need not be minimum.
pub fn solve_vc_with(inst: &Instance, cover: &VertexCover) -> Result<Answer> {
    let g = &inst.graph;
    if !cover.covers(g) {
        return Err(invalid("the given vertex set is not a vertex cover"));
    }
    if cover.len() > 20 {
        return Err(invalid(format!("cover of size {} is too large", cover.len())));
    }
    let p = match inst.normalize() {
        Normalized::Decided(answer) => return Ok(answer),
        Normalized::Target(p) => p,
    };
    let outside = g.n() - cover.len();
    for mask in 0u32..1 << cover.len() {
        let core: Vec<usize> =
            cover.vertices.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let c = core.len();
        if c + outside < p || (c > 0 && c - 1 + outside < inst.k) {
            continue;
        }
        let non_edges: Vec<(usize, usize)> = core
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| core[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .collect();
        for pick in 0u64..1 << non_edges.len() {
            if pick.count_ones() as usize > inst.b {
                continue;
            }
            let clique: Vec<(usize, usize)> =
                non_edges.iter().enumerate().filter(|&(i, _)| pick >> i & 1 == 1).map(|(_, &e)| e).collect();
            let red = Reduced::new(inst, cover, &core, &clique);
            if let Some(edges) = solve_reduced(inst, &red, &clique)? {
                let cert = Certificate::from_additions(g, inst.k, edges);
                if !verify_certificate(inst, &cert).is_accepted() {
                    return Err(internal("reconstructed certificate does not verify"));
                }
                return Ok(Answer::yes(cert));
            }
        }
    }
    Ok(Answer::no())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::{brute_force_solve, enumerate_graphs, SearchBudget};

    fn inst(g: Graph, k: usize, b: usize, p: usize) -> Instance {
        Instance::new(g, k, b, p)
    }

    #[test]
    fn examples() {
        let a = solve_vc(&inst(Graph::path(4), 2, 1, 4)).unwrap();
        assert!(a.feasible);
        assert!(solve_vc(&inst(Graph::star(5), 2, 2, 4)).unwrap().feasible);
        let mut k4 = Graph::complete(4);
        k4.remove_edge(0, 1).unwrap();
        let a = solve_vc(&inst(k4, 3, 1, 4)).unwrap();
        assert_eq!(a.certificate.unwrap().added_edges, vec![(0, 1)]);
    }

    #[test]
    fn model_shape() {
        let g = Graph::path(4);
        let cover = min_vertex_cover(&g);
        assert_eq!(cover.len(), 2);
        let guess = GuessTuple {
            core: cover.vertices.clone(),
            clique_edges: vec![],
            graphic: GraphicGuess::Params { d_max: 1, left: 2, right: 1, t_d: vec![] },
        };
        let m = build_ilp(&inst(g.clone(), 2, 3, 4), &cover, &guess).unwrap();
        let count = |prefix: &str| (0..m.num_vars()).filter(|&v| m.name(v).starts_with(prefix)).count();
        assert_eq!(count("x["), 4);
        assert_eq!(count("y["), 9);
        assert_eq!(m.count_rows("tds") + m.count_rows("erdos"), 0);
        let bad = GuessTuple { graphic: GraphicGuess::Params { d_max: 2, left: 0, right: 1, t_d: vec![1, 2] }, ..guess };
        assert!(build_ilp(&inst(g, 2, 3, 4), &cover, &bad).is_err());
    }

    #[test]
    fn parameters_are_unique_per_sequence() {
        for lo_j in 0..=2 {
            for k in lo_j..=4 {
                let params = all_params(lo_j, k);
                let width = k - lo_j + 1;
                for code in 0..6usize.pow(width as u32) {
                    let t: Vec<usize> = (0..width).map(|i| code / 6usize.pow(i as u32) % 6).collect();
                    let total: usize = t.iter().sum();
                    let mut hits = 0;
                    for guess in params.iter().filter(|g| matches!(g, GraphicGuess::Params { .. })) {
                        let mut m = IlpModel::new();
                        let vars: Vec<usize> = t.iter().map(|&c| m.add_var("t", c as i64, Some(c as i64))).collect();
                        let z = m.add_var("z", 0, Some(100));
                        graphic_rows(&mut m, &vars, z, lo_j, k, Some(guess));
                        if ilp_feasible(&m).unwrap().is_some() {
                            hits += 1;
                        }
                    }
                    let graphic = total > 0
                        && t.iter().rposition(|&c| c > 0).is_some_and(|d| total > lo_j + d)
                        && is_graphic_counts(&t, lo_j);
                    assert!(hits <= 1, "t={t:?} lo_j={lo_j}");
                    assert_eq!(hits == 1, graphic, "t={t:?} lo_j={lo_j}");
                }
            }
        }
    }

    #[test]
    fn matches_oracle_on_small_graphs() {
        for n in 1..=5 {
            for g in enumerate_graphs(n) {
                for k in 1..=3 {
                    for b in 0..=2 {
                        for p in 0..=n {
                            let i = inst(g.clone(), k, b, p);
                            let want = brute_force_solve(&i, SearchBudget::default()).unwrap().feasible;
                            let got = solve_vc(&i).unwrap();
                            assert_eq!(got.feasible, want, "n={n} k={k} b={b} p={p} {:?}", g.edges().collect::<Vec<_>>());
                        }
                    }
                }
            }
        }
    }
}
