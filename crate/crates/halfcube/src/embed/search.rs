//! Depth-first search over undetermined intersection values.
//!
//! The root state is expanded breadth-first into a fixed fan-out of
//! subtrees (independent of worker count), workers explore subtrees in
//! waves, and results are accounted in subtree order. Statuses, counts,
//! solution lists and node counts are therefore identical across `jobs`
//! values; only wall-clock time varies.

use std::time::{Duration, Instant};

use super::addressing::{assign_addresses, verify_embedding};
use super::propagate::propagate;
use super::roots::coordinate_graphs;
use super::table::{seed_table, SearchState, Value};
use super::{Solution, Status};
use crate::graph::{all_pairs_distances, bfs_tree, Graph, GraphError, SpanningTree};

#[derive(Debug, Clone)]
pub struct EmbedOptions {
    /// Stop at the first subtree that yields a verified embedding.
    pub first_only: bool,
    /// Node budget per subtree; exceeding it degrades the status to
    /// `Unknown`, never to a negative.
    pub node_budget: u64,
    /// Wall-clock budget for the whole search.
    pub time_budget: Option<Duration>,
    /// Worker threads exploring subtrees.
    pub jobs: usize,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        EmbedOptions {
            first_only: true,
            node_budget: 100_000_000,
            time_budget: None,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: Status,
    pub s: usize,
    pub diameter: usize,
    pub solutions: Vec<Solution>,
    /// Number of inequivalent verified embeddings found (all of them when
    /// enumerating, the first otherwise).
    pub count: usize,
    pub stats: SearchStats,
}

impl SearchOutcome {
    /// Smallest host dimension among the found embeddings.
    pub fn min_m(&self) -> Option<usize> {
        self.solutions.iter().map(|s| s.embedding.m).min()
    }
}

/// Find one embedding (or a proof of non-embeddability) at truncation `s`,
/// defaulting to the diameter.
pub fn embed(g: &Graph, s: Option<usize>, opts: &EmbedOptions) -> Result<SearchOutcome, GraphError> {
    run(g, s, EmbedOptions { first_only: true, ..opts.clone() })
}

/// Find and count all inequivalent embeddings at truncation `s`.
pub fn enumerate(
    g: &Graph,
    s: Option<usize>,
    opts: &EmbedOptions,
) -> Result<SearchOutcome, GraphError> {
    run(g, s, EmbedOptions { first_only: false, ..opts.clone() })
}

struct Ctx<'a> {
    g: &'a Graph,
    tree: SpanningTree,
    dm: &'a crate::graph::DistanceMatrix,
    s: usize,
    first_only: bool,
    node_budget: u64,
    deadline: Option<Instant>,
}

enum Unit {
    Solved(Vec<Solution>),
    Subtree(SearchState),
}

fn run(g: &Graph, s: Option<usize>, opts: EmbedOptions) -> Result<SearchOutcome, GraphError> {
    if g.n < 2 {
        return Err(GraphError::InvalidParams(
            "embedding needs at least two vertices".into(),
        ));
    }
    let dm = all_pairs_distances(g)?;
    let diameter = dm.diameter;
    let s = s.unwrap_or(diameter);
    if s > diameter || (s < 2 && s != diameter) {
        return Err(GraphError::InvalidParams(format!(
            "truncation level must satisfy 2 <= s <= diameter (= {diameter})"
        )));
    }
    let start = Instant::now();
    let ctx = Ctx {
        g,
        tree: bfs_tree(g, 0)?,
        dm: &dm,
        s,
        first_only: opts.first_only,
        node_budget: opts.node_budget,
        deadline: opts.time_budget.map(|b| start + b),
    };

    let mut nodes = 0u64;
    let mut truncated = false;
    let mut solutions: Vec<Solution> = Vec::new();

    match seed_table(g, &dm, s) {
        Err(_) => {}
        Ok(seeded) => {
            let units = expand(&ctx, seeded, &mut nodes, &mut truncated);
            process_units(&ctx, units, opts.jobs.max(1), &mut nodes, &mut truncated, &mut solutions);
        }
    }

    if opts.first_only && solutions.len() > 1 {
        solutions.truncate(1);
    }
    solutions.sort_by_cached_key(|sol| sol.canonical_key());
    let count = solutions.len();
    let status = if count > 0 {
        if s == diameter {
            Status::Embeddable
        } else {
            Status::TrEmbeddable(s)
        }
    } else if truncated {
        Status::Unknown
    } else if s == diameter {
        Status::NotEmbeddable
    } else {
        Status::NotTrEmbeddable(s)
    };
    Ok(SearchOutcome {
        status,
        s,
        diameter,
        solutions,
        count,
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

const FAN_OUT: usize = 64;

/// Breadth-first expansion of the root into at most `FAN_OUT` units,
/// worker-count independent.
fn expand(ctx: &Ctx, root: SearchState, nodes: &mut u64, truncated: &mut bool) -> Vec<Unit> {
    let mut queue = std::collections::VecDeque::from([root]);
    let mut units = Vec::new();
    while let Some(mut st) = queue.pop_front() {
        if units.len() + queue.len() + 1 >= FAN_OUT {
            units.push(Unit::Subtree(st));
            continue;
        }
        *nodes += 1;
        if out_of_budget(ctx, *nodes) {
            *truncated = true;
            units.push(Unit::Subtree(st));
            continue;
        }
        if propagate(&mut st).is_err() {
            continue;
        }
        match st.first_open_pair() {
            None => units.push(Unit::Solved(process_leaf(ctx, &st))),
            Some((a, b)) => {
                let dom = st.get(a, b);
                for v in 0..3u8 {
                    if dom >> v & 1 != 0 {
                        let mut child = st.clone();
                        if child.restrict(a, b, 1 << v).is_ok() {
                            queue.push_back(child);
                        }
                    }
                }
            }
        }
    }
    units
}

fn process_units(
    ctx: &Ctx,
    units: Vec<Unit>,
    jobs: usize,
    nodes: &mut u64,
    truncated: &mut bool,
    solutions: &mut Vec<Solution>,
) {
    struct SubtreeResult {
        nodes: u64,
        truncated: bool,
        solutions: Vec<Solution>,
    }
    let explore = |st: &SearchState| {
        let mut r = SubtreeResult {
            nodes: 0,
            truncated: false,
            solutions: Vec::new(),
        };
        let mut st = st.clone();
        dfs(ctx, &mut st, &mut r.nodes, &mut r.truncated, &mut r.solutions);
        r
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");

    let mut idx = 0;
    while idx < units.len() {
        let wave_end = (idx + jobs).min(units.len());
        let wave = &units[idx..wave_end];
        let results: Vec<Option<SubtreeResult>> = pool.install(|| {
            use rayon::prelude::*;
            wave.par_iter()
                .map(|u| match u {
                    Unit::Solved(_) => None,
                    Unit::Subtree(st) => Some(explore(st)),
                })
                .collect()
        });
        for (u, res) in wave.iter().zip(results) {
            match (u, res) {
                (Unit::Solved(sols), _) => {
                    solutions.extend(sols.iter().cloned());
                }
                (Unit::Subtree(_), Some(r)) => {
                    *nodes += r.nodes;
                    *truncated |= r.truncated;
                    solutions.extend(r.solutions);
                }
                _ => unreachable!(),
            }
            if ctx.first_only && !solutions.is_empty() {
                return;
            }
        }
        idx = wave_end;
    }
}

fn out_of_budget(ctx: &Ctx, nodes: u64) -> bool {
    if nodes > ctx.node_budget {
        return true;
    }
    if let Some(deadline) = ctx.deadline {
        // amortize the clock read
        if nodes % 256 == 0 && Instant::now() > deadline {
            return true;
        }
    }
    false
}

fn dfs(
    ctx: &Ctx,
    st: &mut SearchState,
    nodes: &mut u64,
    truncated: &mut bool,
    out: &mut Vec<Solution>,
) -> bool {
    *nodes += 1;
    if out_of_budget(ctx, *nodes) {
        *truncated = true;
        return false;
    }
    if propagate(st).is_err() {
        return false;
    }
    match st.first_open_pair() {
        None => {
            out.extend(process_leaf(ctx, st));
            ctx.first_only && !out.is_empty()
        }
        Some((a, b)) => {
            let dom = st.get(a, b);
            for v in 0..3u8 {
                if dom >> v & 1 == 0 {
                    continue;
                }
                let mut child = st.clone();
                if child.restrict(a, b, 1 << v).is_ok()
                    && dfs(ctx, &mut child, nodes, truncated, out)
                {
                    return true;
                }
            }
            false
        }
    }
}

/// Reconstruct and verify every embedding consistent with a fully
/// determined table.
fn process_leaf(ctx: &Ctx, st: &SearchState) -> Vec<Solution> {
    let classes = st.classes();
    let roots = st.roots();
    let k = roots.len();
    let mut ifun = vec![0u8; k * k];
    for i in 0..k {
        ifun[i * k + i] = 2;
        for j in i + 1..k {
            let v = Value::determined(st.get(roots[i], roots[j]))
                .expect("leaf table is fully determined");
            ifun[i * k + j] = v;
            ifun[j * k + i] = v;
        }
    }
    let mut class_of_edge = vec![0usize; st.ne];
    for e in 0..st.ne {
        let r = st.find(e);
        class_of_edge[e] = roots.binary_search(&r).expect("root exists");
    }
    let adj = |a: usize, b: usize| ifun[a * k + b] == 1;
    let mut out = Vec::new();
    for cg in coordinate_graphs(k, &adj) {
        let emb = assign_addresses(ctx.g, &ctx.tree, &cg, &class_of_edge, ctx.s);
        if !verify_embedding(ctx.dm, &emb).is_empty() {
            continue;
        }
        // the addressing must realize the claimed classes: every edge
        // flips exactly its class's coordinate pair
        let consistent = ctx.g.edges.iter().enumerate().all(|(e, &(u, v))| {
            let (p, q) = cg.class_pairs[class_of_edge[e]];
            let (au, av) = (&emb.addresses[u], &emb.addresses[v]);
            au.hamming(av) == 2 && au.get(p) != av.get(p) && au.get(q) != av.get(q)
        });
        if !consistent {
            continue;
        }
        out.push(Solution {
            classes: classes.clone(),
            intersections: ifun.clone(),
            root: cg,
            embedding: emb,
        });
    }
    out
}
