//! Affine crystals of type `A^{(1)}_{p−1}`: level-one crystals `B(Λ_s)` on
//! `p`-regular partitions, tensor products, and the product crystal with
//! colors `(i, k)` whose graph matches modular branching for `FG_n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Debug, Write as _};
use std::hash::Hash;

use serde::Serialize;

use crate::cyclotomic::CycloWeight;
use crate::error::{Error, Result};
use crate::partition::{add_in_row, remove_from_row, Partition};
use crate::report::Report;
use crate::repmod::branch::branch;
use crate::repmod::wreath_modules::{simple_labels, RepContext};
use crate::hecke::tscalars::c_scalars;

/// Order in which addable and removable cells are read into a signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    TopToBottom,
    BottomToTop,
}

/// The reading that reproduces the branching graph.
pub const READING: Reading = Reading::TopToBottom;

/// `(shift + col − row) mod p`, zero-indexed cell.
pub fn residue(row: usize, col: usize, shift: u32, p: u32) -> u32 {
    (shift as i64 + col as i64 - row as i64).rem_euclid(p as i64) as u32
}

/// `a_{ij}` of the affine Cartan matrix of rank `p`.
pub fn cartan(p: u32, i: u32, j: u32) -> i64 {
    if i == j {
        2
    } else if p == 2 {
        -2
    } else if (i + 1) % p == j || (j + 1) % p == i {
        -1
    } else {
        0
    }
}

pub trait Crystal {
    type Node: Clone + Ord + Hash + Debug;

    fn p(&self) -> u32;
    fn highest(&self) -> Self::Node;
    fn e(&self, b: &Self::Node, i: u32) -> Option<Self::Node>;
    fn f(&self, b: &Self::Node, i: u32) -> Option<Self::Node>;
    fn epsilon(&self, b: &Self::Node, i: u32) -> usize;
    fn phi(&self, b: &Self::Node, i: u32) -> usize;
    /// Coefficients of `Λ_0, …, Λ_{p−1}` in the highest weight.
    fn highest_weight(&self) -> Vec<i64>;
    /// `c` with `wt(b) = λ − Σ c_j α_j`.
    fn content(&self, b: &Self::Node) -> Vec<i64>;

    /// `⟨h_i, wt(b)⟩`.
    fn pairing(&self, b: &Self::Node, i: u32) -> i64 {
        let c = self.content(b);
        self.highest_weight()[i as usize] - (0..self.p()).map(|j| c[j as usize] * cartan(self.p(), i, j)).sum::<i64>()
    }
}

/// A sign in a signature with the position it came from.
#[derive(Clone, Copy, Debug)]
struct Sign<T> {
    plus: bool,
    at: T,
}

/// Cancels adjacent `+−` pairs; what remains reads `−⋯− +⋯+`.
fn reduce<T: Copy>(signs: &[Sign<T>]) -> (Vec<T>, Vec<T>) {
    let mut minus = Vec::new();
    let mut plus: Vec<T> = Vec::new();
    for s in signs {
        if s.plus {
            plus.push(s.at);
        } else if plus.pop().is_none() {
            minus.push(s.at);
        }
    }
    (minus, plus)
}

/// Addable (`+`) and removable (`−`) `i`-cells of `mu` as row indices.
fn partition_signature(mu: &[usize], shift: u32, p: u32, i: u32, reading: Reading) -> Vec<Sign<usize>> {
    let mut out = Vec::new();
    for r in 0..=mu.len() {
        let len = mu.get(r).copied().unwrap_or(0);
        if r < mu.len() && (r + 1 == mu.len() || mu[r] > mu[r + 1]) && residue(r, len - 1, shift, p) == i {
            out.push(Sign { plus: false, at: r });
        }
        let addable = r == 0 || r == mu.len() || mu[r] < mu[r - 1];
        if addable && residue(r, len, shift, p) == i {
            out.push(Sign { plus: true, at: r });
        }
    }
    if reading == Reading::BottomToTop {
        out.reverse();
    }
    out
}

/// `B(Λ_{s_1}) ⊗ ⋯ ⊗ B(Λ_{s_l})` on tuples of partitions, read factor by
/// factor. With one factor this is the level-one crystal on `p`-regular
/// partitions.
#[derive(Clone, Debug)]
pub struct PartitionTensor {
    pub p: u32,
    pub shifts: Vec<u32>,
    pub reading: Reading,
}

impl PartitionTensor {
    pub fn new(p: u32, shifts: Vec<u32>) -> Self {
        PartitionTensor { p, shifts, reading: READING }
    }

    pub fn level_one(p: u32, shift: u32) -> Self {
        Self::new(p, vec![shift])
    }

    /// Shifts in increasing residue order, repeated by multiplicity.
    pub fn for_weight(p: u32, weight: &CycloWeight) -> Self {
        let w = weight.normalized(p);
        Self::new(p, w.lambda.iter().flat_map(|(&i, &m)| std::iter::repeat_n(i, m as usize)).collect())
    }

    fn signature(&self, b: &[Partition], i: u32) -> Vec<Sign<(usize, usize)>> {
        b.iter()
            .zip(&self.shifts)
            .enumerate()
            .flat_map(|(f, (mu, &s))| {
                partition_signature(mu, s, self.p, i, self.reading).into_iter().map(move |x| Sign { plus: x.plus, at: (f, x.at) })
            })
            .collect()
    }
}

impl Crystal for PartitionTensor {
    type Node = Vec<Partition>;

    fn p(&self) -> u32 {
        self.p
    }

    fn highest(&self) -> Self::Node {
        vec![vec![]; self.shifts.len()]
    }

    fn e(&self, b: &Self::Node, i: u32) -> Option<Self::Node> {
        let (minus, _) = reduce(&self.signature(b, i));
        let &(f, r) = minus.last()?;
        let mut out = b.clone();
        out[f] = remove_from_row(&b[f], r);
        Some(out)
    }

    fn f(&self, b: &Self::Node, i: u32) -> Option<Self::Node> {
        let (_, plus) = reduce(&self.signature(b, i));
        let &(f, r) = plus.first()?;
        let mut out = b.clone();
        out[f] = add_in_row(&b[f], r);
        Some(out)
    }

    fn epsilon(&self, b: &Self::Node, i: u32) -> usize {
        reduce(&self.signature(b, i)).0.len()
    }

    fn phi(&self, b: &Self::Node, i: u32) -> usize {
        reduce(&self.signature(b, i)).1.len()
    }

    fn highest_weight(&self) -> Vec<i64> {
        let mut w = vec![0; self.p as usize];
        for &s in &self.shifts {
            w[(s % self.p) as usize] += 1;
        }
        w
    }

    fn content(&self, b: &Self::Node) -> Vec<i64> {
        let mut c = vec![0; self.p as usize];
        for (mu, &s) in b.iter().zip(&self.shifts) {
            for (r, &len) in mu.iter().enumerate() {
                for col in 0..len {
                    c[residue(r, col, s, self.p) as usize] += 1;
                }
            }
        }
        c
    }
}

/// `A ⊗ B` under the same signature rule: `f̃` acts on the left factor when
/// `φ_A > ε_B`, and `ẽ` acts on the left factor when `φ_A ≥ ε_B`.
#[derive(Clone, Debug)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: Crystal, B: Crystal> Crystal for Tensor<A, B> {
    type Node = (A::Node, B::Node);

    fn p(&self) -> u32 {
        self.0.p()
    }

    fn highest(&self) -> Self::Node {
        (self.0.highest(), self.1.highest())
    }

    fn e(&self, (a, b): &Self::Node, i: u32) -> Option<Self::Node> {
        if self.0.phi(a, i) >= self.1.epsilon(b, i) {
            Some((self.0.e(a, i)?, b.clone()))
        } else {
            Some((a.clone(), self.1.e(b, i)?))
        }
    }

    fn f(&self, (a, b): &Self::Node, i: u32) -> Option<Self::Node> {
        if self.0.phi(a, i) > self.1.epsilon(b, i) {
            Some((self.0.f(a, i)?, b.clone()))
        } else {
            Some((a.clone(), self.1.f(b, i)?))
        }
    }

    fn epsilon(&self, (a, b): &Self::Node, i: u32) -> usize {
        let (ea, pa, eb) = (self.0.epsilon(a, i), self.0.phi(a, i), self.1.epsilon(b, i));
        ea + eb.saturating_sub(pa)
    }

    fn phi(&self, (a, b): &Self::Node, i: u32) -> usize {
        let (pa, eb, pb) = (self.0.phi(a, i), self.1.epsilon(b, i), self.1.phi(b, i));
        pb + pa.saturating_sub(eb)
    }

    fn highest_weight(&self) -> Vec<i64> {
        self.0.highest_weight().iter().zip(self.1.highest_weight()).map(|(x, y)| x + y).collect()
    }

    fn content(&self, (a, b): &Self::Node) -> Vec<i64> {
        self.0.content(a).iter().zip(self.1.content(b)).map(|(x, y)| x + y).collect()
    }
}

/// All nodes reachable from the highest one within `depth` steps, by depth.
pub fn nodes_by_depth<C: Crystal>(c: &C, depth: usize) -> Vec<Vec<C::Node>> {
    let mut layers = vec![vec![c.highest()]];
    for _ in 0..depth {
        let mut next = BTreeSet::new();
        for b in layers.last().expect("nonempty") {
            for i in 0..c.p() {
                if let Some(x) = c.f(b, i) {
                    next.insert(x);
                }
            }
        }
        layers.push(next.into_iter().collect());
    }
    layers
}

/// Crystal axioms on every node up to `depth`.
pub fn verify_axioms<C: Crystal>(c: &C, depth: usize) -> Report {
    let mut r = Report::new();
    let p = c.p();
    let layers = nodes_by_depth(c, depth);
    let (mut inverse, mut strings, mut weights, mut highest) = (true, true, true, true);
    for b in layers.iter().flatten() {
        for i in 0..p {
            if let Some(x) = c.f(b, i) {
                inverse &= c.e(&x, i).as_ref() == Some(b);
                let mut expected = c.content(b);
                expected[i as usize] += 1;
                weights &= c.content(&x) == expected;
            }
            if let Some(x) = c.e(b, i) {
                inverse &= c.f(&x, i).as_ref() == Some(b);
            }
            let count = |step: &dyn Fn(&C::Node) -> Option<C::Node>| {
                let mut n = 0;
                let mut cur = b.clone();
                while let Some(x) = step(&cur) {
                    n += 1;
                    cur = x;
                }
                n
            };
            strings &= count(&|x| c.e(x, i)) == c.epsilon(b, i) && count(&|x| c.f(x, i)) == c.phi(b, i);
            weights &= c.phi(b, i) as i64 - c.epsilon(b, i) as i64 == c.pairing(b, i);
        }
    }
    let top = c.highest();
    for i in 0..p {
        highest &= c.e(&top, i).is_none();
    }
    r.push("ẽ_i and f̃_i are mutually inverse", inverse);
    r.push("ε_i and φ_i are string lengths", strings);
    r.push("φ_i − ε_i = ⟨h_i, wt⟩ and wt(f̃_i b) = wt(b) − α_i", weights);
    r.push("the highest node is killed by every ẽ_i", highest);
    r
}

/// `B(λ[1]) ⊗ ⋯ ⊗ B(λ[r])` with colors `(i, k)` acting on component `k`;
/// `λ[k]` has `⟨h_i, λ[k]⟩ = λ_{i c_k}`.
#[derive(Clone, Debug)]
pub struct WreathCrystal {
    pub p: u32,
    pub components: Vec<PartitionTensor>,
}

/// A node: one tuple of partitions per component.
pub type WreathNode = Vec<Vec<Partition>>;

impl WreathCrystal {
    /// `c` holds the scalars `c_k` as integers mod `p`.
    pub fn new(p: u32, weight: &CycloWeight, c: &[u32]) -> Result<Self> {
        let components = c
            .iter()
            .enumerate()
            .map(|(k, &ck)| Ok(PartitionTensor::for_weight(p, &weight.bracket(p, k + 1, ck)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(WreathCrystal { p, components })
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn highest(&self) -> WreathNode {
        self.components.iter().map(|c| c.highest()).collect()
    }

    pub fn f(&self, b: &WreathNode, i: u32, k: usize) -> Option<WreathNode> {
        let mut out = b.clone();
        out[k] = self.components[k].f(&b[k], i)?;
        Some(out)
    }

    pub fn e(&self, b: &WreathNode, i: u32, k: usize) -> Option<WreathNode> {
        let mut out = b.clone();
        out[k] = self.components[k].e(&b[k], i)?;
        Some(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CrystalEdge {
    pub from: WreathNode,
    pub to: WreathNode,
    pub i: u32,
    /// Zero-indexed component.
    pub k: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    pub p: u32,
    pub r: usize,
    pub layers: Vec<Vec<WreathNode>>,
    pub edges: Vec<CrystalEdge>,
}

/// Breadth-first generation to `depth`.
pub fn build_crystal(weight: &CycloWeight, c: &[u32], p: u32, depth: usize) -> Result<CrystalGraph> {
    let crystal = WreathCrystal::new(p, weight, c)?;
    let mut layers = vec![vec![crystal.highest()]];
    let mut edges = Vec::new();
    for _ in 0..depth {
        let mut next = BTreeSet::new();
        for b in layers.last().expect("nonempty") {
            for k in 0..crystal.r() {
                for i in 0..p {
                    if let Some(x) = crystal.f(b, i, k) {
                        edges.push(CrystalEdge { from: b.clone(), to: x.clone(), i, k });
                        next.insert(x);
                    }
                }
            }
        }
        layers.push(next.into_iter().collect());
    }
    Ok(CrystalGraph { p, r: crystal.r(), layers, edges })
}

/// The scalars `c_k` of `G` in characteristic `p`, as integers mod `p`.
pub fn integral_scalars(ctx: &RepContext) -> Result<Vec<u32>> {
    c_scalars(&ctx.group, &ctx.field)?
        .iter()
        .enumerate()
        .map(|(k, t)| match t.integral {
            Some(c) if c != 0 => Ok(c),
            _ => Err(Error::ZeroScalar { k: k + 1 }),
        })
        .collect()
}

struct Label<'a>(&'a WreathNode);

impl fmt::Display for Label<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |mu: &Partition| {
            if mu.is_empty() {
                "∅".to_string()
            } else {
                format!("({})", mu.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }
        };
        let comps: Vec<String> = self
            .0
            .iter()
            .map(|c| if c.len() == 1 { part(&c[0]) } else { format!("[{}]", c.iter().map(part).collect::<Vec<_>>().join("|")) })
            .collect();
        write!(out, "({})", comps.join(", "))
    }
}

impl CrystalGraph {
    fn index(&self) -> BTreeMap<&WreathNode, usize> {
        self.layers.iter().flatten().enumerate().map(|(i, b)| (b, i)).collect()
    }

    /// DOT with nodes labeled by partition tuples and edges by `i:k`
    /// (`k` one-indexed).
    pub fn to_dot(&self) -> String {
        let index = self.index();
        let mut s = String::from("digraph crystal {\n");
        for (b, i) in &index {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", Label(b));
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}:{}\"];", index[&e.from], index[&e.to], e.i, e.k + 1);
        }
        s.push_str("}\n");
        s
    }

    /// `{"nodes": [...], "edges": [{"from", "to", "i", "k"}]}` with node
    /// indices and one-indexed `k`.
    pub fn to_json(&self) -> serde_json::Value {
        let index = self.index();
        let nodes: Vec<serde_json::Value> = self
            .layers
            .iter()
            .enumerate()
            .flat_map(|(depth, layer)| {
                layer.iter().map(move |b| serde_json::json!({ "depth": depth, "label": Label(b).to_string(), "partitions": b }))
            })
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|e| serde_json::json!({ "from": index[&e.from], "to": index[&e.to], "i": e.i, "k": e.k + 1 }))
            .collect();
        serde_json::json!({ "p": self.p, "r": self.r, "nodes": nodes, "edges": edges })
    }
}

/// Compares simple `FG_m`-modules and their socle-of-restriction edges with
/// the crystal `B(Λ_0)^{⊗r}` for `m ≤ n_max`.
pub fn crystal_vs_branching(ctx: &RepContext, n_max: usize) -> Result<Report> {
    crystal_vs_branching_with(ctx, n_max, READING)
}

pub fn crystal_vs_branching_with(ctx: &RepContext, n_max: usize, reading: Reading) -> Result<Report> {
    let p = ctx.field.p();
    let c = integral_scalars(ctx)?;
    let mut crystal = WreathCrystal::new(p, &CycloWeight::fundamental(0), &c)?;
    for comp in crystal.components.iter_mut() {
        comp.reading = reading;
    }
    let flat = |b: &WreathNode| -> Vec<Partition> { b.iter().map(|c| c[0].clone()).collect() };
    let mut r = Report::new();
    let mut layer = vec![crystal.highest()];
    for m in 1..=n_max {
        let mut crystal_edges = BTreeSet::new();
        let mut next = BTreeSet::new();
        for b in &layer {
            for k in 0..crystal.r() {
                for i in 0..p {
                    if let Some(x) = crystal.f(b, i, k) {
                        crystal_edges.insert((flat(b), flat(&x), i, k));
                        next.insert(x);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
        let nodes: BTreeSet<Vec<Partition>> = layer.iter().map(flat).collect();
        let simples: BTreeSet<Vec<Partition>> = simple_labels(ctx, m).into_iter().map(|l| l.partitions).collect();
        r.push_detail(
            format!("m = {m}: crystal nodes are the simple labels"),
            nodes == simples,
            format!("{} nodes, {} simples", nodes.len(), simples.len()),
        );
        let report = branch(ctx, m)?;
        r.extend(report.checks);
        let mut branch_edges = BTreeSet::new();
        let mut well_formed = true;
        for e in &report.edges {
            well_formed &= e.multiplicity == 1;
            match e.residue {
                Some(i) => {
                    branch_edges.insert((e.from.partitions.clone(), e.to.partitions.clone(), i, e.k));
                }
                None => well_formed = false,
            }
        }
        r.push(format!("m = {m}: branching edges are multiplicity-free and integral"), well_formed);
        let missing = crystal_edges.difference(&branch_edges).count();
        let extra = branch_edges.difference(&crystal_edges).count();
        r.push_detail(
            format!("m = {m}: socle edges equal f̃ edges"),
            missing == 0 && extra == 0,
            format!("{} crystal edges, {} socle edges, {missing} only in crystal, {extra} only in socles", crystal_edges.len(), branch_edges.len()),
        );
    }
    Ok(r)
}
