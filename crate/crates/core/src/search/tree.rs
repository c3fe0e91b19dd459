use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::difference::{domain_prune, forced_from_report, series_difference_report, Feasibility, ForcedRelation};
use super::shape::{candidate_shapes, series_from_resolution, ResolutionShape, ResolutionType, ShapeError};
use crate::words::{normal_words, Alphabet, Antichain, MultiDegree, Word};

/// Recorded eliminations used when the bundled data file is not overridden.
pub const DEFAULT_ELIMINATIONS: &str = include_str!("../../fixtures/eliminations.json");

/// A node the Hilbert series alone does not close, with the coefficient
/// argument that does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordedElimination {
    #[serde(rename = "type")]
    pub kind: String,
    pub shape: Vec<[u32; 2]>,
    pub gorenstein: [u32; 2],
    pub obstructions: Vec<String>,
    pub reason: String,
}

pub fn load_eliminations(json: &str) -> Result<Vec<RecordedElimination>, serde_json::Error> {
    serde_json::from_str(json)
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub cap: u32,
    /// Keep one shape per switching orbit.
    pub normalize: bool,
    pub eliminations: Vec<RecordedElimination>,
    pub max_nodes: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            cap: 12,
            normalize: true,
            eliminations: load_eliminations(DEFAULT_ELIMINATIONS).expect("bundled eliminations parse"),
            max_nodes: 5_000,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("cap {cap} is below the Gorenstein total degree {needed}")]
    CapTooSmall { cap: u32, needed: u32 },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Contradiction {
    /// H_{R^i} − H_R has a negative lowest term.
    NegativeCoefficient { degree: MultiDegree, coefficient: i64 },
    /// Relations are forced at a degree but no leading word survives.
    NoCandidates { degree: MultiDegree, count: usize, rejected: Vec<(String, Feasibility)> },
    /// A relation degree of the resolution can no longer occur.
    MissingShapeRelation { degree: MultiDegree },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum NodeStatus {
    /// Expanded into children.
    Open,
    Complete,
    Contradicted {
        reason: Contradiction,
    },
    SurvivingNeedsCoefficientAnalysis {
        reason: String,
    },
    /// Not examined within the node budget.
    Unexplored,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchNode {
    pub id: usize,
    pub parent: Option<usize>,
    /// Obstructions so far, deg-lex ascending, with their degrees.
    pub obstructions: Vec<(String, MultiDegree)>,
    /// Words adjoined at this node.
    pub added: Vec<String>,
    /// Lowest terms of H_{R(V)} − H_R.
    pub lowest_terms: String,
    pub forced: Vec<ForcedRelation>,
    /// The forced degree expanded into children.
    pub branch: Option<ForcedRelation>,
    pub status: NodeStatus,
    pub children: Vec<usize>,
    #[serde(skip)]
    pub words: Vec<Word>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeSearch {
    pub shape: ResolutionShape,
    /// Lowest negative coefficient of the shape's own series; such a shape
    /// cannot belong to any algebra.
    pub target_negative: Option<(MultiDegree, i64)>,
    pub nodes: Vec<SearchNode>,
    pub truncated: bool,
}

impl ShapeSearch {
    pub fn complete_leaves(&self) -> impl Iterator<Item = &SearchNode> {
        self.nodes.iter().filter(|n| n.status == NodeStatus::Complete)
    }

    /// Node whose obstruction set is exactly `words`.
    pub fn find(&self, alphabet: &Alphabet, words: &[&str]) -> Option<&SearchNode> {
        let mut want: Vec<Word> = words.iter().filter_map(|s| alphabet.parse_word(s)).collect();
        want.sort();
        self.nodes.iter().find(|n| {
            let mut have = n.words.clone();
            have.sort();
            have == want
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchTree {
    #[serde(rename = "type")]
    pub kind: String,
    pub cap: u32,
    pub shapes: Vec<ShapeSearch>,
}

impl SearchTree {
    pub fn complete_leaves(&self) -> Vec<(&ResolutionShape, &SearchNode)> {
        self.shapes.iter().flat_map(|s| s.complete_leaves().map(move |n| (&s.shape, n))).collect()
    }

    pub fn shape(&self, level2: &[(u32, u32)], gamma: (u32, u32)) -> Option<&ShapeSearch> {
        let mut l2: Vec<MultiDegree> = level2.iter().map(|&(a, b)| MultiDegree::new2(a, b)).collect();
        l2.sort_by(|a, b| a.cmp_deglex(b));
        self.shapes
            .iter()
            .find(|s| s.shape.level2() == l2.as_slice() && s.shape.gorenstein == MultiDegree::new2(gamma.0, gamma.1))
    }

    pub fn node_count(&self) -> usize {
        self.shapes.iter().map(|s| s.nodes.len()).sum()
    }
}

/// Searches every candidate shape of a type.
pub fn search_obstructions(kind: ResolutionType, config: &SearchConfig) -> Result<SearchTree, SearchError> {
    if config.cap < kind.gorenstein_total() {
        return Err(SearchError::CapTooSmall { cap: config.cap, needed: kind.gorenstein_total() });
    }
    let mut shapes = Vec::new();
    for shape in candidate_shapes(kind, config.normalize, config.cap) {
        shapes.push(search_shape(&shape, Some(kind), config)?);
    }
    Ok(SearchTree { kind: kind.code().into(), cap: config.cap, shapes })
}

/// Breadth-first search below one resolution shape.
pub fn search_shape(
    shape: &ResolutionShape,
    kind: Option<ResolutionType>,
    config: &SearchConfig,
) -> Result<ShapeSearch, SearchError> {
    let alphabet = Alphabet::standard2();
    let target = series_from_resolution(shape, config.cap)?;
    let eliminations: Vec<&RecordedElimination> = config
        .eliminations
        .iter()
        .filter(|e| kind.is_some_and(|k| k.code() == e.kind) && shape_matches(e, shape))
        .collect();
    let mut required: BTreeMap<MultiDegree, usize> = BTreeMap::new();
    for d in shape.level2() {
        if d.total() <= config.cap {
            *required.entry(d.clone()).or_insert(0) += 1;
        }
    }
    let mut nodes: Vec<SearchNode> = Vec::new();
    let mut queue = VecDeque::new();
    nodes.push(new_node(&alphabet, 0, None, Vec::new(), Vec::new()));
    queue.push_back(0);
    let mut truncated = false;
    while let Some(id) = queue.pop_front() {
        if nodes.len() > config.max_nodes {
            nodes[id].status = NodeStatus::Unexplored;
            truncated = true;
            continue;
        }
        let v = Antichain::new(nodes[id].words.clone()).expect("obstructions form an antichain");
        let report = series_difference_report(&alphabet, &v, &target);
        nodes[id].lowest_terms = report.rendered();
        if let Some((degree, coefficient)) = report.lowest.iter().find(|(_, c)| *c < 0).cloned() {
            nodes[id].status =
                NodeStatus::Contradicted { reason: Contradiction::NegativeCoefficient { degree, coefficient } };
            continue;
        }
        if let Some(degree) = missing_shape_relation(&required, &nodes[id].words, &alphabet, &report.lowest) {
            nodes[id].status = NodeStatus::Contradicted { reason: Contradiction::MissingShapeRelation { degree } };
            continue;
        }
        let names = rendered_set(&alphabet, &nodes[id].words);
        if let Some(e) = eliminations.iter().find(|e| {
            let mut o = e.obstructions.clone();
            o.sort();
            o == names
        }) {
            nodes[id].status = NodeStatus::SurvivingNeedsCoefficientAnalysis { reason: e.reason.clone() };
            continue;
        }
        let Some(forced) = forced_from_report(&report) else {
            nodes[id].status = NodeStatus::Complete;
            continue;
        };
        nodes[id].forced = forced.clone();
        // Expand the forced degree with the fewest leading-word choices.
        let mut best: Option<Choice> = None;
        for f in &forced {
            let mut ok = Vec::new();
            let mut rejected = Vec::new();
            let mut words = normal_words(&alphabet, &v, &f.degree);
            words.reverse();
            for w in words {
                match domain_prune(&alphabet, &w, &f.degree, &v) {
                    Feasibility::Feasible => ok.push(w),
                    bad => rejected.push((alphabet.render(&w), bad)),
                }
            }
            let n = binomial(ok.len(), f.count);
            if best.as_ref().is_none_or(|b| n < b.0) {
                best = Some((n, f.clone(), ok, rejected));
            }
        }
        let (n, f, ok, rejected) = best.expect("forced is nonempty");
        if n == 0 {
            nodes[id].status = NodeStatus::Contradicted {
                reason: Contradiction::NoCandidates { degree: f.degree.clone(), count: f.count, rejected },
            };
            continue;
        }
        nodes[id].branch = Some(f.clone());
        for subset in subsets(&ok, f.count) {
            let child = nodes.len();
            let mut words = nodes[id].words.clone();
            words.extend(subset.iter().cloned());
            let added = subset.iter().map(|w| alphabet.render(w)).collect();
            nodes.push(new_node(&alphabet, child, Some(id), words, added));
            nodes[id].children.push(child);
            queue.push_back(child);
        }
    }
    Ok(ShapeSearch { shape: shape.clone(), target_negative: target.first_negative(), nodes, truncated })
}

/// Number of subsets, the forced relation, feasible words, rejected words.
type Choice = (u128, ForcedRelation, Vec<Word>, Vec<(String, Feasibility)>);

fn shape_matches(e: &RecordedElimination, shape: &ResolutionShape) -> bool {
    let mut l2: Vec<MultiDegree> = e.shape.iter().map(|&[a, b]| MultiDegree::new2(a, b)).collect();
    l2.sort_by(|a, b| a.cmp_deglex(b));
    l2.as_slice() == shape.level2() && shape.gorenstein == MultiDegree::new2(e.gorenstein[0], e.gorenstein[1])
}

fn rendered_set(alphabet: &Alphabet, words: &[Word]) -> Vec<String> {
    let mut v: Vec<String> = words.iter().map(|w| alphabet.render(w)).collect();
    v.sort();
    v
}

fn new_node(
    alphabet: &Alphabet,
    id: usize,
    parent: Option<usize>,
    mut words: Vec<Word>,
    added: Vec<String>,
) -> SearchNode {
    words.sort_by(|a, b| alphabet.compare_deglex(a, b));
    SearchNode {
        id,
        parent,
        obstructions: words.iter().map(|w| (alphabet.render(w), alphabet.degree(w))).collect(),
        added,
        lowest_terms: String::new(),
        forced: Vec::new(),
        branch: None,
        status: NodeStatus::Open,
        children: Vec::new(),
        words,
    }
}

/// A level-2 degree still owed by the basis must appear no lower than the
/// lowest term of the difference, and at that total degree with enough
/// multiplicity.
fn missing_shape_relation(
    required: &BTreeMap<MultiDegree, usize>,
    words: &[Word],
    alphabet: &Alphabet,
    lowest: &[(MultiDegree, i64)],
) -> Option<MultiDegree> {
    let mut have: BTreeMap<MultiDegree, usize> = BTreeMap::new();
    for w in words {
        *have.entry(alphabet.degree(w)).or_insert(0) += 1;
    }
    let floor = lowest.first().map(|(d, _)| d.total());
    for (d, &m) in required {
        let owed = m.saturating_sub(have.get(d).copied().unwrap_or(0));
        if owed == 0 {
            continue;
        }
        let ok = match floor {
            None => false,
            Some(n) if d.total() < n => false,
            Some(n) if d.total() == n => lowest.iter().find(|(e, _)| e == d).is_some_and(|(_, c)| *c as usize >= owed),
            Some(_) => true,
        };
        if !ok {
            return Some(d.clone());
        }
    }
    None
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn subsets(items: &[Word], k: usize) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[Word], k: usize, start: usize, cur: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}
