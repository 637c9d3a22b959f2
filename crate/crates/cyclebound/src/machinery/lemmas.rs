/*!
Inequality checkers for the supporting results behind the main bound.

Every checker walks one extension instance (or, for the path-contact bound
`lemma3`, a graph with a pinned longest cycle), emits one case record per
checked configuration, and aggregates them: a check holds when no case has
negative slack, and is vacuous when its premise never fired. Identities are
recorded with slack `-(lhs - rhs).abs()` so that zero still means tight.

Checkers that need restricted longest paths or the two-path bound share a
per-instance cache. Configurations whose search exceeds the size ceilings
in [`super::opaths`] are skipped rather than guessed at; the skipped
configurations simply do not appear in the case count. The instance
enumerations behind [`run_lemma_suite`] stay far below those ceilings.

The suite runner checks every lemma on every instance of a graph, running
the per-cycle path-contact bound once per distinct longest cycle, and
reports per-lemma aggregates.
*/

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::instances::{enumerate_instances, LemmaInstance};
use super::opaths::{compute_o, compute_omega, OVariant};
use super::stats::UClass;
use super::{HcExtension, MachineryError, MACHINERY_CAP};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{all_longest_cycles, longest_cycle};
use crate::witness::CycleWitness;

/// Most roots a path-contact configuration may pin.
pub const LEMMA3_MAX_ROOTS: usize = 3;
/// Most vertices in one pinned path of a path-contact configuration.
pub const LEMMA3_MAX_PATH_VERTICES: usize = 4;
/// Hard ceiling on enumerated path-contact configurations per cycle.
pub const LEMMA3_CONFIG_CAP: usize = 200_000;

const VIOLATION_SAMPLE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaId {
    B1,
    B2,
    Lemma3,
    D1,
    D2,
    D3,
    E1,
    E2,
    G1,
    G2,
    G3,
    G5,
    G6,
    I1,
    I7,
    I8,
    Lemma8,
}

impl LemmaId {
    pub const ALL: [LemmaId; 17] = [
        LemmaId::B1,
        LemmaId::B2,
        LemmaId::Lemma3,
        LemmaId::D1,
        LemmaId::D2,
        LemmaId::D3,
        LemmaId::E1,
        LemmaId::E2,
        LemmaId::G1,
        LemmaId::G2,
        LemmaId::G3,
        LemmaId::G5,
        LemmaId::G6,
        LemmaId::I1,
        LemmaId::I7,
        LemmaId::I8,
        LemmaId::Lemma8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::B1 => "b1",
            LemmaId::B2 => "b2",
            LemmaId::Lemma3 => "lemma3",
            LemmaId::D1 => "d1",
            LemmaId::D2 => "d2",
            LemmaId::D3 => "d3",
            LemmaId::E1 => "e1",
            LemmaId::E2 => "e2",
            LemmaId::G1 => "g1",
            LemmaId::G2 => "g2",
            LemmaId::G3 => "g3",
            LemmaId::G5 => "g5",
            LemmaId::G6 => "g6",
            LemmaId::I1 => "i1",
            LemmaId::I7 => "i7",
            LemmaId::I8 => "i8",
            LemmaId::Lemma8 => "lemma8",
        }
    }

    pub fn parse(name: &str) -> Result<LemmaId, MachineryError> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name() == name)
            .ok_or_else(|| MachineryError::UnknownLemma { name: name.to_string() })
    }
}

/// One checked configuration. Slack is nonnegative exactly when the case
/// holds; zero means tight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub context: String,
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub lemma: LemmaId,
    pub holds: bool,
    pub vacuous: bool,
    pub cases: usize,
    pub violation_count: usize,
    /// Case with the smallest slack, violating or not.
    pub tightest: Option<CaseRecord>,
    /// At most the first few violating cases, for reporting.
    pub violations: Vec<CaseRecord>,
}

#[derive(Default)]
struct Collector {
    cases: usize,
    violation_count: usize,
    tightest: Option<CaseRecord>,
    violations: Vec<CaseRecord>,
}

impl Collector {
    fn record(&mut self, context: String, lhs: i64, rhs: i64, slack: i64) {
        self.cases += 1;
        let rec = CaseRecord { context, lhs, rhs, slack };
        if slack < 0 {
            self.violation_count += 1;
            if self.violations.len() < VIOLATION_SAMPLE_CAP {
                self.violations.push(rec.clone());
            }
        }
        if self.tightest.as_ref().is_none_or(|t| slack < t.slack) {
            self.tightest = Some(rec);
        }
    }

    fn geq(&mut self, context: String, lhs: i64, rhs: i64) {
        self.record(context, lhs, rhs, lhs - rhs);
    }

    fn equal(&mut self, context: String, lhs: i64, rhs: i64) {
        self.record(context, lhs, rhs, -(lhs - rhs).abs());
    }

    fn finish(self, lemma: LemmaId) -> CheckResult {
        CheckResult {
            lemma,
            holds: self.violation_count == 0,
            vacuous: self.cases == 0,
            cases: self.cases,
            violation_count: self.violation_count,
            tightest: self.tightest,
            violations: self.violations,
        }
    }
}

/// Outcome of a cached two-path bound lookup.
#[derive(Clone, Copy)]
enum OmegaVal {
    Edges(i64),
    NoPair,
    Capped,
}

/// Per-instance cache of restricted path lengths and two-path bounds,
/// shared across the checkers of one instance. Lengths are in edges;
/// `None` marks a search that hit its size ceiling and was skipped.
#[derive(Default)]
struct Caches {
    o: BTreeMap<(usize, usize, OVariant), Option<i64>>,
    omega: BTreeMap<(usize, usize), OmegaVal>,
}

impl Caches {
    fn o_edges(
        &mut self,
        ext: &HcExtension,
        x: usize,
        y: usize,
        variant: OVariant,
    ) -> Result<Option<i64>, MachineryError> {
        if let Some(&hit) = self.o.get(&(x, y, variant)) {
            return Ok(hit);
        }
        let val = match compute_o(ext, x, y, variant) {
            Ok(p) => {
                let p = p.expect("the leftover cycle keeps every kind connected");
                Some(p.vertices.len() as i64 - 1)
            }
            Err(MachineryError::SizeCap { .. }) => None,
            Err(e) => return Err(e),
        };
        self.o.insert((x, y, variant), val);
        Ok(val)
    }

    fn omega_edges(
        &mut self,
        ext: &HcExtension,
        x: usize,
        y: usize,
    ) -> Result<OmegaVal, MachineryError> {
        let key = (x.min(y), x.max(y));
        if let Some(&hit) = self.omega.get(&key) {
            return Ok(hit);
        }
        let val = match compute_omega(ext, key.0, key.1) {
            Ok(Some(v)) => OmegaVal::Edges(v as i64 - 1),
            Ok(None) => OmegaVal::NoPair,
            Err(MachineryError::SizeCap { .. }) => OmegaVal::Capped,
            Err(e) => return Err(e),
        };
        self.omega.insert(key, val);
        Ok(val)
    }
}

/// Checks one lemma on one instance.
pub fn check_lemma(inst: &LemmaInstance, id: LemmaId) -> Result<CheckResult, MachineryError> {
    let mut caches = Caches::default();
    check_with(inst, id, &mut caches)
}

/// Checks every lemma on one instance, sharing the path caches.
pub fn check_all_lemmas(inst: &LemmaInstance) -> Result<Vec<CheckResult>, MachineryError> {
    let mut caches = Caches::default();
    LemmaId::ALL.into_iter().map(|id| check_with(inst, id, &mut caches)).collect()
}

fn check_with(
    inst: &LemmaInstance,
    id: LemmaId,
    caches: &mut Caches,
) -> Result<CheckResult, MachineryError> {
    let ext = &inst.ext;
    let st = &inst.stats;
    let h = ext.h_len();
    let hh = h as i64;
    let mut col = Collector::default();

    match id {
        LemmaId::B1 => {
            for i in 0..h {
                if st.classes[i] != UClass::U0 && ext.tree(i).len() >= 3 {
                    let mut overlap = st.phi_sets[i].clone();
                    overlap.intersect_with(&st.b_sets[i]);
                    col.equal(format!("u={}", ext.h()[i]), overlap.len() as i64, 0);
                }
            }
        }
        LemmaId::B2 => {
            let grown: i64 = (0..h)
                .filter(|&i| st.classes[i] != UClass::U0)
                .map(|i| st.b[i] as i64)
                .sum();
            let plain: i64 = (0..h)
                .filter(|&i| st.classes[i] == UClass::U0)
                .map(|i| st.b_star[i] as i64)
                .sum();
            col.equal("grown b sum = plain b-star sum".to_string(), grown, plain);
            let gamma_sum: i64 = st.gamma.iter().sum();
            let phi_prime_sum: i64 = st.phi_prime.iter().map(|&v| v as i64).sum();
            col.equal("gamma sum = phi-prime sum".to_string(), gamma_sum, phi_prime_sum);
            for i in 0..h {
                let mut reach = st.phi_sets[i].clone();
                reach.union_with(&st.b_sets[i]);
                let split: i64 = st.a_sets[i].iter().map(|a| a.len() as i64).sum();
                col.equal(format!("u={}", ext.h()[i]), reach.len() as i64, split);
            }
        }
        LemmaId::Lemma3 => {
            let cycle = CycleWitness::Proper(ext.cycle().to_vec());
            return check_lemma3(ext.graph(), &cycle);
        }
        LemmaId::D1 => {
            for i in 0..h {
                if ext.tree(i).len() >= 3 {
                    col.geq(format!("u={}", ext.h()[i]), hh, 2 * st.gamma[i]);
                }
            }
        }
        LemmaId::D2 => {
            for i in 0..h {
                if ext.tree(i).len() != 2 {
                    continue;
                }
                let u = ext.h()[i];
                let member = matches!(st.classes[i], UClass::U1 | UClass::UStar);
                col.geq(format!("u={u} lands in a separated or closed class"), member as i64, 1);
                let pp = st.phi_prime[i] as i64;
                match st.classes[i] {
                    UClass::U1 => {
                        col.geq(format!("u={u} doubled contact count within h"), hh, 2 * pp);
                        col.geq(
                            format!("u={u} doubled contact count above gamma"),
                            2 * pp,
                            st.gamma[i] + 1,
                        );
                    }
                    UClass::UStar => {
                        col.geq(format!("u={u} closed root bound"), hh, 2 * (st.gamma[i] + 1));
                    }
                    _ => {}
                }
            }
        }
        LemmaId::D3 => {
            for i in 0..h {
                col.geq(format!("u={}", ext.h()[i]), hh, st.gamma[i] + 1);
            }
        }
        LemmaId::E1 | LemmaId::E2 => {
            for i in 0..h {
                let grown_by = ext.tree(i).len() as i64 - 1;
                let fires = match id {
                    LemmaId::E1 => grown_by >= 2,
                    _ => grown_by == 1,
                };
                if !fires {
                    continue;
                }
                for ix in 0..h {
                    for iy in 0..h {
                        if ix == iy {
                            continue;
                        }
                        let (arc, edges) = forward_arc(ext, ix, iy);
                        if !st.lambda[i].is_subset_of(&arc) {
                            continue;
                        }
                        let rhs = match id {
                            LemmaId::E1 => st.gamma[i],
                            _ => st.gamma[i] - 1,
                        };
                        col.geq(
                            format!("u={} x={} y={}", ext.h()[i], ext.h()[ix], ext.h()[iy]),
                            edges,
                            rhs,
                        );
                    }
                }
            }
        }
        LemmaId::G1 | LemmaId::G2 | LemmaId::G6 => {
            for ix in 0..h {
                for iy in 0..h {
                    if ix == iy {
                        continue;
                    }
                    let (x, y) = (ext.h()[ix], ext.h()[iy]);
                    let Some(plain) = caches.o_edges(ext, x, y, OVariant::Plain)? else {
                        continue;
                    };
                    let targets: Vec<usize> = match id {
                        LemmaId::G1 => {
                            (0..h).filter(|&i| st.classes[i] == UClass::UStar).collect()
                        }
                        LemmaId::G2 => (0..h).filter(|&i| ext.tree(i).len() >= 3).collect(),
                        _ => {
                            let mut around: Vec<usize> = [
                                (ix + 1) % h,
                                (ix + h - 1) % h,
                                (iy + 1) % h,
                                (iy + h - 1) % h,
                            ]
                            .into_iter()
                            .filter(|&i| i != ix && i != iy)
                            .collect();
                            around.sort_unstable();
                            around.dedup();
                            around
                        }
                    };
                    for i in targets {
                        let rhs = if id == LemmaId::G1 { st.gamma[i] + 1 } else { st.gamma[i] };
                        col.geq(
                            format!("x={x} y={y} u={}", ext.h()[i]),
                            plain,
                            rhs,
                        );
                    }
                }
            }
        }
        LemmaId::G3 => {
            for ix in 0..h {
                if ext.tree(ix).len() != 2 {
                    continue;
                }
                for iy in 0..h {
                    if ix == iy {
                        continue;
                    }
                    let (x, y) = (ext.h()[ix], ext.h()[iy]);
                    let Some(aug) = caches.o_edges(ext, x, y, OVariant::AugX)? else {
                        continue;
                    };
                    col.geq(format!("x={x} y={y}"), aug, st.gamma[ix] - 1);
                }
            }
        }
        LemmaId::G5 => {
            for ix in 0..h {
                if ext.tree(ix).len() != 2 {
                    continue;
                }
                for iy in 0..h {
                    if ix == iy {
                        continue;
                    }
                    let (x, y) = (ext.h()[ix], ext.h()[iy]);
                    let back = caches.o_edges(ext, x, y, OVariant::RingXToX)?;
                    let over = caches.o_edges(ext, x, y, OVariant::RingXToY)?;
                    let (Some(back), Some(over)) = (back, over) else { continue };
                    col.geq(format!("x={x} y={y}"), back.min(over), st.gamma[ix]);
                }
            }
        }
        LemmaId::I1 | LemmaId::I7 | LemmaId::I8 => {
            for ix in 0..h {
                for iy in 0..h {
                    if ix == iy {
                        continue;
                    }
                    let (x, y) = (ext.h()[ix], ext.h()[iy]);
                    match id {
                        LemmaId::I7
                            if st.classes[ix] == UClass::U0
                                || st.classes[iy] == UClass::U0 =>
                        {
                            continue
                        }
                        LemmaId::I8 if (ix + 1) % h != iy => continue,
                        _ => {}
                    }
                    let OmegaVal::Edges(omega) = caches.omega_edges(ext, x, y)? else {
                        continue;
                    };
                    match id {
                        LemmaId::I1 => {
                            for i in 0..h {
                                let pair = [ext.h()[i], ext.h()[(i + 1) % h]];
                                if pair.contains(&x) || pair.contains(&y) {
                                    continue;
                                }
                                col.geq(
                                    format!("x={x} y={y} edge {}-{}", pair[0], pair[1]),
                                    2 * omega,
                                    st.two_beta[i],
                                );
                            }
                        }
                        _ => {
                            let peak = st.two_beta.iter().copied().max().unwrap_or(0);
                            col.geq(format!("x={x} y={y}"), 2 * omega, peak);
                        }
                    }
                }
            }
        }
        LemmaId::Lemma8 => {
            for ix in 0..h {
                for iy in 0..h {
                    if ix == iy {
                        continue;
                    }
                    let (x, y) = (ext.h()[ix], ext.h()[iy]);
                    let OmegaVal::Edges(omega) = caches.omega_edges(ext, x, y)? else {
                        continue;
                    };
                    let Some(plain) = caches.o_edges(ext, x, y, OVariant::Plain)? else {
                        continue;
                    };
                    let mut rhs = plain;
                    if ext.tree(ix).len() == 2 {
                        let a = [OVariant::AugX, OVariant::RingXToY, OVariant::RingXToX];
                        let mut parts = Vec::new();
                        for v in a {
                            match caches.o_edges(ext, x, y, v)? {
                                Some(l) => parts.push(l),
                                None => {
                                    parts.clear();
                                    break;
                                }
                            }
                        }
                        if let Some(&m) = parts.iter().min() {
                            rhs = rhs.max(m);
                        }
                    }
                    if ext.tree(iy).len() == 2 {
                        let b = [OVariant::AugY, OVariant::RingYToX, OVariant::RingYToY];
                        let mut parts = Vec::new();
                        for v in b {
                            match caches.o_edges(ext, x, y, v)? {
                                Some(l) => parts.push(l),
                                None => {
                                    parts.clear();
                                    break;
                                }
                            }
                        }
                        if let Some(&m) = parts.iter().min() {
                            rhs = rhs.max(m);
                        }
                    }
                    col.geq(format!("x={x} y={y}"), omega, rhs);
                }
            }
        }
    }
    Ok(col.finish(id))
}

/// Vertex set and edge count of the forward arc of H from position `ix`
/// to position `iy`.
fn forward_arc(ext: &HcExtension, ix: usize, iy: usize) -> (VertexSet, i64) {
    let h = ext.h_len();
    let edges = (iy + h - ix) % h;
    let mut arc = VertexSet::empty(ext.graph().n());
    for k in 0..=edges {
        arc.insert(ext.h()[(ix + k) % h]);
    }
    (arc, edges as i64)
}

/// Checks the path-contact bound against a longest cycle `c` of `g`: for
/// every pinned path Q in the leftover graph, every choice of up to
/// [`LEMMA3_MAX_ROOTS`] roots on Q, and every system of disjoint proper
/// paths from the roots (each leaving Q immediately and using at most
/// [`LEMMA3_MAX_PATH_VERTICES`] vertices), the cycle must be at least as
/// long as the tips' cycle-contact count plus the size of their union.
/// Enumeration stops quietly at [`LEMMA3_CONFIG_CAP`] configurations.
pub fn check_lemma3(g: &Graph, c: &CycleWitness) -> Result<CheckResult, MachineryError> {
    if !c.is_proper() || !c.validate(g) {
        return Err(MachineryError::BadCycleWitness);
    }
    if longest_cycle(g).len() != c.len() {
        return Err(MachineryError::BadCycleWitness);
    }
    let c_set = VertexSet::from_iter(g.n(), c.vertices().iter().copied());
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !c_set.contains(v)).collect();
    if rest.len() > MACHINERY_CAP {
        return Err(MachineryError::SizeCap {
            what: "leftover path enumeration",
            got: rest.len(),
            cap: MACHINERY_CAP,
        });
    }
    let rest_set = VertexSet::from_iter(g.n(), rest.iter().copied());

    let mut col = Collector::default();
    let mut budget = LEMMA3_CONFIG_CAP;

    let mut stack: Vec<Vec<usize>> = rest.iter().map(|&v| vec![v]).collect();
    while let Some(q) = stack.pop() {
        if budget == 0 {
            break;
        }
        // each undirected pinned path is processed in one direction only
        if q.len() == 1 || q[0] < *q.last().expect("nonempty") {
            scan_root_choices(g, c.len() as i64, &c_set, &rest_set, &q, &mut col, &mut budget);
        }
        let last = *q.last().expect("nonempty");
        for w in g.neighbors_iter(last) {
            if rest_set.contains(w) && !q.contains(&w) {
                let mut next = q.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    Ok(col.finish(LemmaId::Lemma3))
}

fn scan_root_choices(
    g: &Graph,
    c_len: i64,
    c_set: &VertexSet,
    rest_set: &VertexSet,
    q: &[usize],
    col: &mut Collector,
    budget: &mut usize,
) {
    let mut avail = rest_set.clone();
    for &v in q {
        avail.remove(v);
    }
    for mask in 1u32..(1 << q.len()) {
        if mask.count_ones() as usize > LEMMA3_MAX_ROOTS {
            continue;
        }
        let roots: Vec<usize> =
            (0..q.len()).filter(|&k| mask & (1 << k) != 0).map(|k| q[k]).collect();
        let mut sys = SystemScan {
            g,
            c_len,
            c_set,
            avail: &mut avail,
            q,
            roots: &roots,
            tips: Vec::new(),
            col,
            budget,
        };
        sys.assign(0);
        if *budget == 0 {
            return;
        }
    }
}

struct SystemScan<'a> {
    g: &'a Graph,
    c_len: i64,
    c_set: &'a VertexSet,
    avail: &'a mut VertexSet,
    q: &'a [usize],
    roots: &'a [usize],
    tips: Vec<usize>,
    col: &'a mut Collector,
    budget: &'a mut usize,
}

impl SystemScan<'_> {
    fn assign(&mut self, k: usize) {
        if *self.budget == 0 {
            return;
        }
        if k == self.roots.len() {
            self.record();
            return;
        }
        self.extend(k, self.roots[k], 1);
    }

    fn extend(&mut self, k: usize, last: usize, count: usize) {
        if *self.budget == 0 {
            return;
        }
        for w in self.g.neighbors_iter(last).collect::<Vec<_>>() {
            if !self.avail.contains(w) {
                continue;
            }
            self.avail.remove(w);
            self.tips.push(w);
            self.assign(k + 1);
            self.tips.pop();
            if count + 1 < LEMMA3_MAX_PATH_VERTICES {
                self.extend(k, w, count + 1);
            }
            self.avail.insert(w);
        }
    }

    fn record(&mut self) {
        let mut total = 0i64;
        let mut union = VertexSet::empty(self.g.n());
        for &tip in &self.tips {
            let mut z = self.g.neighbors(tip);
            z.intersect_with(self.c_set);
            total += z.len() as i64;
            union.union_with(&z);
        }
        self.col.geq(
            format!("Q={:?} tips={:?}", self.q, self.tips),
            self.c_len,
            total + union.len() as i64,
        );
        *self.budget -= 1;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaSummary {
    pub lemma: LemmaId,
    pub cases: usize,
    pub violations: usize,
    /// Number of checked units (instances, or distinct longest cycles for
    /// the path-contact bound) on which the check was vacuous.
    pub vacuous: usize,
    pub sample: Option<CaseRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub instances: usize,
    /// Why no instance existed, when none did.
    pub skipped: Option<String>,
    pub lemmas: Vec<LemmaSummary>,
    pub total_violations: usize,
}

/// Runs every checker over every instance of `g`. The path-contact bound
/// runs once per distinct longest cycle; everything else runs per
/// instance, in parallel, with deterministic aggregation order.
pub fn run_lemma_suite(g: &Graph) -> Result<SuiteReport, MachineryError> {
    let instances = enumerate_instances(g)?;
    if instances.is_empty() {
        return Ok(SuiteReport {
            instances: 0,
            skipped: Some(skip_reason(g)),
            lemmas: Vec::new(),
            total_violations: 0,
        });
    }

    let mut lemma3_runs: BTreeMap<Vec<usize>, CheckResult> = BTreeMap::new();
    for inst in &instances {
        let key = inst.ext.cycle().to_vec();
        if let Entry::Vacant(slot) = lemma3_runs.entry(key) {
            let cycle = CycleWitness::Proper(slot.key().clone());
            slot.insert(check_lemma3(g, &cycle)?);
        }
    }

    let per_instance: Vec<Vec<CheckResult>> = instances
        .par_iter()
        .map(|inst| {
            let mut caches = Caches::default();
            LemmaId::ALL
                .into_iter()
                .filter(|&id| id != LemmaId::Lemma3)
                .map(|id| check_with(inst, id, &mut caches))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut lemmas = Vec::with_capacity(LemmaId::ALL.len());
    let mut total_violations = 0usize;
    for id in LemmaId::ALL {
        let mut summary = LemmaSummary {
            lemma: id,
            cases: 0,
            violations: 0,
            vacuous: 0,
            sample: None,
        };
        let mut absorb = |r: &CheckResult| {
            summary.cases += r.cases;
            summary.violations += r.violation_count;
            summary.vacuous += r.vacuous as usize;
            if summary.sample.is_none() {
                summary.sample = r.violations.first().cloned();
            }
        };
        if id == LemmaId::Lemma3 {
            for r in lemma3_runs.values() {
                absorb(r);
            }
        } else {
            for results in &per_instance {
                for r in results {
                    if r.lemma == id {
                        absorb(r);
                    }
                }
            }
        }
        total_violations += summary.violations;
        lemmas.push(summary);
    }

    Ok(SuiteReport { instances: instances.len(), skipped: None, lemmas, total_violations })
}

fn skip_reason(g: &Graph) -> String {
    let c = longest_cycle(g);
    if !c.is_proper() {
        return "no proper cycle to anchor on".to_string();
    }
    let mut best_leftover = 0usize;
    if let Ok(cycles) = all_longest_cycles(g) {
        for c in cycles {
            let c_set = VertexSet::from_iter(g.n(), c.vertices().iter().copied());
            if let Ok((residual, _)) = g.delete_vertices(&c_set) {
                best_leftover = best_leftover.max(longest_cycle(&residual).len());
            }
        }
    }
    if best_leftover == 0 {
        "every longest cycle covers the whole graph".to_string()
    } else {
        format!(
            "no longest cycle leaves a proper cycle behind (best leftover cycle length {best_leftover})"
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::machinery::tests::{hexagon_plus_triangle, wheel_pendant};
    use crate::machinery::{compute_stats, HcExtension};

    fn instance_of(g: &Graph) -> LemmaInstance {
        let instances = enumerate_instances(g).unwrap();
        assert_eq!(instances.len(), 1);
        instances.into_iter().next().unwrap()
    }

    fn by_id(results: &[CheckResult], id: LemmaId) -> &CheckResult {
        results.iter().find(|r| r.lemma == id).unwrap()
    }

    #[test]
    fn names_roundtrip() {
        for id in LemmaId::ALL {
            assert_eq!(LemmaId::parse(id.name()).unwrap(), id);
        }
        assert!(matches!(
            LemmaId::parse("g9"),
            Err(MachineryError::UnknownLemma { .. })
        ));
        assert_eq!(serde_json::to_string(&LemmaId::Lemma8).unwrap(), "\"lemma8\"");
    }

    #[test]
    fn closed_root_branch_of_the_degree_two_bound() {
        let (g, _, _) = wheel_pendant();
        let inst = instance_of(&g);
        let d2 = check_lemma(&inst, LemmaId::D2).unwrap();
        assert!(d2.holds);
        assert_eq!(d2.cases, 2); // membership plus the closed-root bound
        assert_eq!(d2.tightest.as_ref().unwrap().slack, 0); // membership is exact
        let closed = &d2.violations;
        assert!(closed.is_empty());

        let d3 = check_lemma(&inst, LemmaId::D3).unwrap();
        assert!(d3.holds);
        assert_eq!(d3.cases, 3);
        assert_eq!(d3.tightest.as_ref().unwrap().slack, 0);

        // only the grown root is eligible, and its path has one edge
        let d1 = check_lemma(&inst, LemmaId::D1).unwrap();
        assert!(d1.vacuous);
        let e2 = check_lemma(&inst, LemmaId::E2).unwrap();
        assert!(e2.holds && !e2.vacuous);
        let e1 = check_lemma(&inst, LemmaId::E1).unwrap();
        assert!(e1.vacuous);

        // no disjoint escape pair exists, so the two-path checks skip
        for id in [LemmaId::I1, LemmaId::I7, LemmaId::I8, LemmaId::Lemma8] {
            assert!(check_lemma(&inst, id).unwrap().vacuous);
        }

        // the closed root is adjacent on H to both plain roots
        let g1 = check_lemma(&inst, LemmaId::G1).unwrap();
        assert!(g1.holds && !g1.vacuous);
        let g6 = check_lemma(&inst, LemmaId::G6).unwrap();
        assert!(g6.holds);
        assert_eq!(g6.tightest.as_ref().unwrap().slack, 0);
    }

    #[test]
    fn trivial_instance_identities() {
        let (g, _, _) = hexagon_plus_triangle();
        let inst = instance_of(&g);
        let results = check_all_lemmas(&inst).unwrap();
        for r in &results {
            assert!(r.holds, "{:?} failed: {:?}", r.lemma, r.violations);
        }
        assert_eq!(by_id(&results, LemmaId::B2).cases, 5);
        let d3 = by_id(&results, LemmaId::D3);
        assert_eq!(d3.tightest.as_ref().unwrap().slack, 0);
        let g6 = by_id(&results, LemmaId::G6);
        assert_eq!(g6.tightest.as_ref().unwrap().slack, 0);
        // every root is plain: nothing qualifies for the grown-root checks
        for id in [LemmaId::B1, LemmaId::D1, LemmaId::D2, LemmaId::E1, LemmaId::E2,
            LemmaId::G1, LemmaId::G2, LemmaId::G3, LemmaId::G5]
        {
            assert!(by_id(&results, id).vacuous, "{id:?} should be vacuous");
        }
    }

    /// Square cycle, triangle of roots, unique escape pair. The adjacent
    /// pair bound and the plain-kind bounds are all tight here.
    #[test]
    fn unique_pair_bounds_are_tight() {
        let g = Graph::from_edge_list(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (4, 6), (4, 0), (5, 2)],
        )
        .unwrap();
        let c = CycleWitness::Proper(vec![0, 1, 2, 3]);
        let h = CycleWitness::Proper(vec![4, 5, 6]);
        let ext =
            HcExtension::new(g, &c, &h, vec![vec![4], vec![5], vec![6]]).unwrap();
        let stats = compute_stats(&ext).unwrap();
        let inst = LemmaInstance { ext, stats };

        let i8 = check_lemma(&inst, LemmaId::I8).unwrap();
        assert!(i8.holds);
        assert_eq!(i8.cases, 1);
        let rec = i8.tightest.as_ref().unwrap();
        assert_eq!((rec.lhs, rec.rhs, rec.slack), (4, 4, 0));

        let g6 = check_lemma(&inst, LemmaId::G6).unwrap();
        assert!(g6.holds);
        assert_eq!(g6.tightest.as_ref().unwrap().slack, 0);

        let l8 = check_lemma(&inst, LemmaId::Lemma8).unwrap();
        assert!(l8.holds);
        assert_eq!(l8.cases, 2);
        let rec = l8.tightest.as_ref().unwrap();
        assert_eq!((rec.lhs, rec.rhs, rec.slack), (2, 2, 0));

        // the two roots with escapes are plain, so the grown-pair check
        // never fires; the third root cannot escape at all
        assert!(check_lemma(&inst, LemmaId::I7).unwrap().vacuous);
    }

    /// Two grown roots whose escape pair is unique, exercising the
    /// ring-vertex kinds of the two-path bound.
    #[test]
    fn grown_pair_bounds() {
        let mut edges = vec![(8, 9), (9, 10), (8, 10), (8, 0), (9, 4), (8, 11), (9, 12)];
        for i in 0..8 {
            edges.push((i, (i + 1) % 8));
        }
        let g = Graph::from_edge_list(13, &edges).unwrap();
        let c = CycleWitness::Proper((0..8).collect());
        let h = CycleWitness::Proper(vec![8, 9, 10]);
        let ext = HcExtension::new(g, &c, &h, vec![vec![8, 11], vec![9, 12], vec![10]])
            .unwrap();
        let stats = compute_stats(&ext).unwrap();
        assert_eq!(stats.classes, vec![UClass::UStar, UClass::UStar, UClass::U0]);
        assert_eq!(stats.gamma, vec![0, 0, 2]);
        let inst = LemmaInstance { ext, stats };

        let i7 = check_lemma(&inst, LemmaId::I7).unwrap();
        assert!(i7.holds);
        assert_eq!(i7.cases, 2);
        let rec = i7.tightest.as_ref().unwrap();
        assert_eq!((rec.lhs, rec.rhs, rec.slack), (4, 2, 2));

        let l8 = check_lemma(&inst, LemmaId::Lemma8).unwrap();
        assert!(l8.holds);
        assert_eq!(l8.tightest.as_ref().unwrap().slack, 0);

        let g5 = check_lemma(&inst, LemmaId::G5).unwrap();
        assert!(g5.holds);
        assert_eq!(g5.cases, 4);
        assert_eq!(g5.tightest.as_ref().unwrap().slack, 1);

        let d2 = check_lemma(&inst, LemmaId::D2).unwrap();
        assert!(d2.holds);
    }

    /// Long cycle with a pentagon of roots: the edge-pair bound fires for
    /// the arc opposite the escape roots.
    #[test]
    fn edge_pair_bound_across_the_pentagon() {
        let mut edges = vec![(10, 11), (11, 12), (12, 13), (13, 14), (14, 10), (10, 0), (12, 5)];
        for i in 0..10 {
            edges.push((i, (i + 1) % 10));
        }
        let g = Graph::from_edge_list(15, &edges).unwrap();
        let c = CycleWitness::Proper((0..10).collect());
        let h = CycleWitness::Proper(vec![10, 11, 12, 13, 14]);
        let paths = (10..15).map(|v| vec![v]).collect();
        let ext = HcExtension::new(g, &c, &h, paths).unwrap();
        let stats = compute_stats(&ext).unwrap();
        assert_eq!(stats.gamma, vec![2; 5]);
        let inst = LemmaInstance { ext, stats };

        let i1 = check_lemma(&inst, LemmaId::I1).unwrap();
        assert!(i1.holds);
        assert_eq!(i1.cases, 2); // the pair in both orders, one free edge each
        let rec = i1.tightest.as_ref().unwrap();
        assert_eq!((rec.lhs, rec.rhs, rec.slack), (6, 4, 2));

        let l8 = check_lemma(&inst, LemmaId::Lemma8).unwrap();
        assert!(l8.holds);
        assert_eq!(l8.tightest.as_ref().unwrap().slack, 0);
    }

    #[test]
    fn path_contact_bound_standalone() {
        let g = Graph::from_edge_list(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 7), (6, 8), (8, 0), (8, 2)],
        )
        .unwrap();
        let c = CycleWitness::Proper(vec![0, 1, 2, 3, 4, 5]);
        let r = check_lemma3(&g, &c).unwrap();
        assert!(r.holds && !r.vacuous);
        let rec = r.tightest.as_ref().unwrap();
        assert_eq!((rec.lhs, rec.rhs, rec.slack), (6, 4, 2));

        // a cycle that is not longest is rejected
        let short = CycleWitness::Proper(vec![0, 1, 2, 8]);
        assert_eq!(check_lemma3(&g, &short).unwrap_err(), MachineryError::BadCycleWitness);
    }

    #[test]
    fn suite_reports_skips_and_clean_sweeps() {
        let (g, _, _) = wheel_pendant();
        let report = run_lemma_suite(&g).unwrap();
        assert_eq!(report.instances, 1);
        assert!(report.skipped.is_none());
        assert_eq!(report.lemmas.len(), 17);
        assert_eq!(report.total_violations, 0);

        let complete = Graph::complete(5).unwrap();
        let report = run_lemma_suite(&complete).unwrap();
        assert_eq!(report.instances, 0);
        assert!(report.skipped.unwrap().contains("whole graph"));

        let fam = gen::kappa_family(2, 3).unwrap();
        let report = run_lemma_suite(&fam.graph).unwrap();
        assert!(report.skipped.unwrap().contains("leftover cycle length 2"));

        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let report = run_lemma_suite(&star).unwrap();
        assert!(report.skipped.unwrap().contains("no proper cycle"));
    }

    #[test]
    fn clean_sweep_over_small_connected_graphs() {
        let mut with_instances = 0usize;
        for g in gen::enumerate_connected_dedup(6).unwrap() {
            let report = run_lemma_suite(&g).unwrap();
            assert_eq!(report.total_violations, 0, "violations on {:?}", g.edges());
            if report.instances > 0 {
                with_instances += 1;
            }
        }
        assert!(with_instances >= 1);
    }
}
