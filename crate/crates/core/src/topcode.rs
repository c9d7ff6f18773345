//! Topcode-matrices of colored graphs, their number strings, the search for
//! cuttings of a number string that realize a colored tree, and topological
//! vectors of caterpillars.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::TotalColoring;
use crate::degree::{is_connected, is_tree};
use crate::error::{parse_err, Error, Result};
use crate::graph::{content_lines, Graph, Vertex};
use crate::textio::join;

/// Convention tag written into serialized matrices.
pub const CONVENTION: &str = "row-major/1-2digit";

/// Rows `X`, `E`, `Y`; column `i` is `(x_i, e_i, y_i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopcodeMatrix {
    x: Vec<u32>,
    e: Vec<u32>,
    y: Vec<u32>,
}

impl TopcodeMatrix {
    pub fn new(x: Vec<u32>, e: Vec<u32>, y: Vec<u32>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::InvalidMatrix("at least one column required".into()));
        }
        if x.len() != e.len() || x.len() != y.len() {
            return Err(Error::InvalidMatrix(format!(
                "row lengths {}, {}, {} differ",
                x.len(),
                e.len(),
                y.len()
            )));
        }
        Ok(TopcodeMatrix { x, e, y })
    }

    pub fn from_columns(columns: &[(u32, u32, u32)]) -> Result<Self> {
        TopcodeMatrix::new(
            columns.iter().map(|c| c.0).collect(),
            columns.iter().map(|c| c.1).collect(),
            columns.iter().map(|c| c.2).collect(),
        )
    }

    pub fn q(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn e(&self) -> &[u32] {
        &self.e
    }

    pub fn y(&self) -> &[u32] {
        &self.y
    }

    pub fn columns(&self) -> Vec<(u32, u32, u32)> {
        (0..self.q()).map(|i| (self.x[i], self.e[i], self.y[i])).collect()
    }

    /// Each column as `(min, e, max)`, columns sorted by `(e, x, y)`.
    pub fn canonical(&self) -> TopcodeMatrix {
        let mut cols: Vec<(u32, u32, u32)> = self
            .columns()
            .into_iter()
            .map(|(x, e, y)| (x.min(y), e, x.max(y)))
            .collect();
        cols.sort_unstable_by_key(|&(x, e, y)| (e, x, y));
        TopcodeMatrix::from_columns(&cols).expect("same shape")
    }

    pub fn to_text(&self) -> String {
        format!(
            "# topcode {CONVENTION}\nX {}\nE {}\nY {}\n",
            join(&self.x, ","),
            join(&self.e, ","),
            join(&self.y, ",")
        )
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let header = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| parse_err(1, "empty input"))?;
        if header.1 != format!("# topcode {CONVENTION}") {
            return Err(parse_err(
                header.0,
                format!("expected header `# topcode {CONVENTION}`"),
            ));
        }
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(3);
        let mut last = header.0;
        for (n, line) in content_lines(text) {
            last = n;
            let name = ["X", "E", "Y"]
                .get(rows.len())
                .ok_or_else(|| parse_err(n, "trailing content"))?;
            let rest = line
                .strip_prefix(name)
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| parse_err(n, format!("expected row `{name}`")))?;
            let row = rest
                .trim()
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| parse_err(n, format!("invalid entry `{}`", t.trim())))
                })
                .collect::<Result<Vec<u32>>>()?;
            rows.push(row);
        }
        let [x, e, y]: [Vec<u32>; 3] = rows
            .try_into()
            .map_err(|_| parse_err(last, "expected rows X, E and Y"))?;
        TopcodeMatrix::new(x, e, y).map_err(|err| parse_err(last, err.to_string()))
    }
}

impl fmt::Display for TopcodeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A non-empty string of decimal digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberString(String);

impl NumberString {
    pub fn new(digits: &str) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::InvalidNumberString("empty".into()));
        }
        if let Some((i, c)) = digits.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            return Err(Error::InvalidNumberString(format!(
                "non-digit `{c}` at offset {i}"
            )));
        }
        Ok(NumberString(digits.to_string()))
    }

    /// Applies explicit character substitutions before validating, for
    /// strings known to contain transcription slips.
    pub fn with_substitutions(text: &str, substitutions: &[(char, char)]) -> Result<Self> {
        let fixed: String = text
            .chars()
            .map(|c| {
                substitutions
                    .iter()
                    .find(|(from, _)| *from == c)
                    .map_or(c, |&(_, to)| to)
            })
            .collect();
        NumberString::new(&fixed)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NumberString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for NumberString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NumberString::new(s.trim())
    }
}

/// One column `(f(u), f(uv), f(v))` per edge with `f(u) <= f(v)`, columns
/// sorted by `(e, x, y)`.
pub fn topcode_from_graph(g: &Graph, f: &TotalColoring) -> Result<TopcodeMatrix> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    f.check_total(g)?;
    let cols: Vec<(u32, u32, u32)> = g
        .edges()
        .map(|e| {
            let (a, b) = (
                f.vertex(e.lo()).expect("total"),
                f.vertex(e.hi()).expect("total"),
            );
            (a, f.edge(e.lo(), e.hi()).expect("total"), b)
        })
        .collect();
    Ok(TopcodeMatrix::from_columns(&cols)?.canonical())
}

/// Row-major concatenation of the entries in minimal decimal form.
pub fn string_from_topcode(t: &TopcodeMatrix) -> Result<NumberString> {
    let mut s = String::new();
    for &v in t.x.iter().chain(&t.e).chain(&t.y) {
        if v > 99 {
            return Err(Error::EntryTooLarge(v));
        }
        s.push_str(&v.to_string());
    }
    NumberString::new(&s)
}

fn check_length(len: usize, q: usize) -> Result<()> {
    if q == 0 || len < 3 * q || len > 6 * q {
        return Err(Error::StringLength {
            len,
            segments: 3 * q,
        });
    }
    Ok(())
}

fn digits_of(d: &NumberString) -> Vec<u8> {
    d.0.bytes().map(|b| b - b'0').collect()
}

/// Whether a segment of `width` digits may start at `pos` when `seg` of
/// `total` segments are already placed.
fn segment_fits(digits: &[u8], pos: usize, width: usize, seg: usize, total: usize) -> bool {
    let len = digits.len();
    if pos + width > len || (width == 2 && digits[pos] == 0) {
        return false;
    }
    let left = total - seg - 1;
    let rest = len - pos - width;
    left <= rest && rest <= 2 * left
}

/// Every split of a number string into `3q` segments of one or two digits
/// (two-digit segments never start with `0`), assembled row-major. Widths
/// are explored one before two, from the first segment on.
pub struct Cuttings {
    digits: Vec<u8>,
    q: usize,
    widths: Vec<usize>,
    pos: usize,
    descending: bool,
    done: bool,
}

pub fn cuttings(d: &NumberString, q: usize) -> Result<Cuttings> {
    check_length(d.len(), q)?;
    Ok(Cuttings {
        digits: digits_of(d),
        q,
        widths: Vec::with_capacity(3 * q),
        pos: 0,
        descending: true,
        done: false,
    })
}

impl Cuttings {
    fn matrix(&self) -> TopcodeMatrix {
        let mut values = Vec::with_capacity(3 * self.q);
        let mut pos = 0;
        for &w in &self.widths {
            values.push(
                self.digits[pos..pos + w]
                    .iter()
                    .fold(0u32, |acc, &d| acc * 10 + u32::from(d)),
            );
            pos += w;
        }
        let q = self.q;
        TopcodeMatrix::new(
            values[..q].to_vec(),
            values[q..2 * q].to_vec(),
            values[2 * q..].to_vec(),
        )
        .expect("3q values")
    }
}

impl Iterator for Cuttings {
    type Item = TopcodeMatrix;

    fn next(&mut self) -> Option<TopcodeMatrix> {
        let total = 3 * self.q;
        while !self.done {
            if self.descending {
                if self.widths.len() == total {
                    self.descending = false;
                    return Some(self.matrix());
                }
                let seg = self.widths.len();
                match [1, 2]
                    .into_iter()
                    .find(|&w| segment_fits(&self.digits, self.pos, w, seg, total))
                {
                    Some(w) => {
                        self.widths.push(w);
                        self.pos += w;
                    }
                    None => self.descending = false,
                }
            } else {
                match self.widths.pop() {
                    None => self.done = true,
                    Some(w) => {
                        self.pos -= w;
                        let seg = self.widths.len();
                        if w == 1 && segment_fits(&self.digits, self.pos, 2, seg, total) {
                            self.widths.push(2);
                            self.pos += 2;
                            self.descending = true;
                        }
                    }
                }
            }
        }
        None
    }
}

/// Distinct-labels realization: every distinct value of `X ∪ Y` becomes a
/// vertex colored with that value (vertices in ascending value order), and
/// column `i` the edge `{x_i, y_i}` colored `e_i`. Absent when a value is 0,
/// a column is a loop, two columns give the same edge, or the graph is
/// disconnected. The palette is the largest entry; the coloring need not
/// be proper.
pub fn realize_topcode(t: &TopcodeMatrix) -> Option<(Graph, TotalColoring)> {
    if t.x.iter().chain(&t.e).chain(&t.y).any(|&v| v == 0) {
        return None;
    }
    let values: Vec<u32> = t
        .x
        .iter()
        .chain(&t.y)
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let id = |v: u32| values.binary_search(&v).expect("value listed") + 1;
    let mut g = Graph::empty(values.len()).ok()?;
    let mut edges = BTreeMap::new();
    for i in 0..t.q() {
        let (u, v) = (id(t.x[i]), id(t.y[i]));
        g.add_edge(u, v).ok()?;
        edges.insert(crate::graph::Edge::new(u, v), t.e[i]);
    }
    if !is_connected(&g) {
        return None;
    }
    let palette = t.x.iter().chain(&t.e).chain(&t.y).copied().max().unwrap_or(1);
    Some((g, TotalColoring::new(palette, values, edges)))
}

/// Largest matrix for [`realize_topcode_identify`].
pub const IDENTIFY_MAX_Q: usize = 6;

/// Identification mode: equal values may denote distinct vertices. Tries
/// every grouping of the `2q` endpoint occurrences into vertices (only
/// occurrences of equal value share a vertex) and keeps the simple,
/// connected results with no zero entries. One result per grouping; vertex
/// ids follow the first occurrence in `x_1, y_1, x_2, y_2, ...`.
pub fn realize_topcode_identify(t: &TopcodeMatrix) -> Result<Vec<(Graph, TotalColoring)>> {
    if t.q() > IDENTIFY_MAX_Q {
        return Err(Error::TooLarge(format!(
            "identification search for q = {} (limit {IDENTIFY_MAX_Q})",
            t.q()
        )));
    }
    if t.x.iter().chain(&t.e).chain(&t.y).any(|&v| v == 0) {
        return Ok(Vec::new());
    }
    let occurrences: Vec<u32> = (0..t.q()).flat_map(|i| [t.x[i], t.y[i]]).collect();
    let mut block = vec![0usize; occurrences.len()];
    let mut out = Vec::new();
    identify_rec(t, &occurrences, 0, 0, &mut block, &mut out);
    Ok(out)
}

fn identify_rec(
    t: &TopcodeMatrix,
    occ: &[u32],
    i: usize,
    blocks: usize,
    block: &mut [usize],
    out: &mut Vec<(Graph, TotalColoring)>,
) {
    if i == occ.len() {
        if let Some(r) = build_identified(t, occ, blocks, block) {
            out.push(r);
        }
        return;
    }
    // Join an existing vertex of the same value, or open a new one.
    let mut candidates: Vec<usize> = (0..i)
        .filter(|&j| occ[j] == occ[i])
        .map(|j| block[j])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    candidates.push(blocks);
    for b in candidates {
        block[i] = b;
        identify_rec(t, occ, i + 1, blocks.max(b + 1), block, out);
    }
}

fn build_identified(
    t: &TopcodeMatrix,
    occ: &[u32],
    blocks: usize,
    block: &[usize],
) -> Option<(Graph, TotalColoring)> {
    let mut g = Graph::empty(blocks).ok()?;
    let mut colors = vec![0; blocks];
    let mut edges = BTreeMap::new();
    for (i, &b) in block.iter().enumerate() {
        colors[b] = occ[i];
    }
    for i in 0..t.q() {
        let (u, v) = (block[2 * i] + 1, block[2 * i + 1] + 1);
        g.add_edge(u, v).ok()?;
        edges.insert(crate::graph::Edge::new(u, v), t.e[i]);
    }
    if !is_connected(&g) {
        return None;
    }
    let palette = t.x.iter().chain(&t.e).chain(&t.y).copied().max().unwrap_or(1);
    Some((g, TotalColoring::new(palette, colors, edges)))
}

/// Limits for [`solve_dnsp`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DnspOptions {
    pub time_limit: Option<Duration>,
    /// Solutions beyond this many are counted but not kept.
    pub max_kept: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnspSolution {
    pub matrix: TopcodeMatrix,
    pub graph: Graph,
    pub coloring: TotalColoring,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnspReport {
    /// Kept solutions in cutting order, grouped by ascending `q`.
    pub solutions: Vec<DnspSolution>,
    /// All solutions found, kept or not.
    pub count: u64,
    /// Search nodes visited.
    pub nodes: u64,
    /// False when the time limit cut the search short.
    pub complete: bool,
    /// Edge counts searched; values of `q` whose length bounds exclude the
    /// string are skipped.
    pub searched: Vec<usize>,
}

impl fmt::Display for DnspReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q searched: {}", join(&self.searched, ","))?;
        writeln!(f, "solutions: {}", self.count)?;
        writeln!(f, "kept: {}", self.solutions.len())?;
        writeln!(f, "nodes: {}", self.nodes)?;
        write!(f, "complete: {}", if self.complete { "yes" } else { "no" })
    }
}

/// All cuttings of `d` with `q` in `qs` whose distinct-labels realization is
/// a tree. Solutions are listed in the order of [`cuttings`].
pub fn solve_dnsp(d: &NumberString, qs: RangeInclusive<usize>, options: &DnspOptions) -> Result<DnspReport> {
    let searched: Vec<usize> = qs.clone().filter(|&q| check_length(d.len(), q).is_ok()).collect();
    if searched.is_empty() {
        return Err(Error::StringLength {
            len: d.len(),
            segments: 3 * qs.start(),
        });
    }
    let deadline = options.time_limit.map(|t| Instant::now() + t);
    let digits = digits_of(d);
    let mut report = DnspReport {
        solutions: Vec::new(),
        count: 0,
        nodes: 0,
        complete: true,
        searched: searched.clone(),
    };
    for q in searched {
        let prefixes = prefixes(&digits, q, 3 * q);
        let stop = AtomicBool::new(false);
        let parts: Vec<TaskResult> = prefixes
            .par_iter()
            .map(|prefix| {
                let mut task = Task::new(&digits, q, deadline, &stop, options.max_kept);
                task.run_from(prefix);
                task.finish()
            })
            .collect();
        for part in parts {
            report.count += part.count;
            report.nodes += part.nodes;
            report.complete &= part.complete;
            report.solutions.extend(part.kept);
        }
    }
    if let Some(limit) = options.max_kept {
        report.solutions.truncate(limit);
    }
    Ok(report)
}

/// Width choices for the first few X segments, in cutting order; each
/// becomes one parallel task.
fn prefixes(digits: &[u8], q: usize, total: usize) -> Vec<Vec<usize>> {
    let depth = q.min(6);
    let mut out = Vec::new();
    fn rec(digits: &[u8], total: usize, depth: usize, pos: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        for w in [1, 2] {
            if segment_fits(digits, pos, w, cur.len(), total) && segment_value(digits, pos, w) != 0 {
                cur.push(w);
                rec(digits, total, depth, pos + w, cur, out);
                cur.pop();
            }
        }
    }
    rec(digits, total, depth, 0, &mut Vec::new(), &mut out);
    out
}

fn segment_value(digits: &[u8], pos: usize, width: usize) -> u32 {
    digits[pos..pos + width]
        .iter()
        .fold(0, |acc, &d| acc * 10 + u32::from(d))
}

struct TaskResult {
    kept: Vec<DnspSolution>,
    count: u64,
    nodes: u64,
    complete: bool,
}

/// Depth-first search over one prefix. While filling `Y`, each new edge
/// must join two different components of the edges so far; with `q` edges
/// on `q + 1` distinct values this is exactly the tree condition, and it
/// also excludes loops and repeated edges.
struct Task<'a> {
    digits: &'a [u8],
    q: usize,
    values: Vec<u32>,
    widths: Vec<usize>,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    max_kept: Option<usize>,
    kept: Vec<DnspSolution>,
    count: u64,
    nodes: u64,
    aborted: bool,
}

impl<'a> Task<'a> {
    fn new(
        digits: &'a [u8],
        q: usize,
        deadline: Option<Instant>,
        stop: &'a AtomicBool,
        max_kept: Option<usize>,
    ) -> Self {
        Task {
            digits,
            q,
            values: Vec::with_capacity(3 * q),
            widths: Vec::with_capacity(3 * q),
            deadline,
            stop,
            max_kept,
            kept: Vec::new(),
            count: 0,
            nodes: 0,
            aborted: false,
        }
    }

    fn run_from(&mut self, prefix: &[usize]) {
        let mut pos = 0;
        let mut seen = 0u128;
        for &w in prefix {
            let v = segment_value(self.digits, pos, w);
            seen |= 1u128 << v;
            self.values.push(v);
            self.widths.push(w);
            pos += w;
        }
        let mut parent = [0u8; 100];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        self.dfs(pos, seen, &parent);
    }

    fn finish(self) -> TaskResult {
        TaskResult {
            kept: self.kept,
            count: self.count,
            nodes: self.nodes,
            complete: !self.aborted,
        }
    }

    fn out_of_time(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if self.stop.load(Ordering::Relaxed) {
                self.aborted = true;
            } else if self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.stop.store(true, Ordering::Relaxed);
                self.aborted = true;
            }
        }
        self.aborted
    }

    /// `seen` is the bitset of distinct endpoint values placed so far.
    fn dfs(&mut self, pos: usize, seen: u128, parent: &[u8; 100]) {
        if self.out_of_time() {
            return;
        }
        let q = self.q;
        let seg = self.values.len();
        let total = 3 * q;
        if seg == total {
            if seen.count_ones() as usize == q + 1 {
                self.record();
            }
            return;
        }
        for w in [1, 2] {
            if !segment_fits(self.digits, pos, w, seg, total) {
                continue;
            }
            let v = segment_value(self.digits, pos, w);
            if v == 0 {
                continue;
            }
            let mut next_seen = seen;
            let mut next_parent = *parent;
            if seg < q {
                next_seen |= 1u128 << v;
            } else if seg >= 2 * q {
                let x = self.values[seg - 2 * q];
                let (rx, ry) = (find(&mut next_parent, x as u8), find(&mut next_parent, v as u8));
                if rx == ry {
                    continue;
                }
                next_parent[rx as usize] = ry;
                next_seen |= 1u128 << v;
                if next_seen.count_ones() as usize > q + 1 {
                    continue;
                }
            }
            self.values.push(v);
            self.widths.push(w);
            self.dfs(pos + w, next_seen, &next_parent);
            self.values.pop();
            self.widths.pop();
            if self.aborted {
                return;
            }
        }
    }

    fn record(&mut self) {
        self.count += 1;
        if self.max_kept.is_some_and(|m| self.kept.len() >= m) {
            return;
        }
        let q = self.q;
        let matrix = TopcodeMatrix::new(
            self.values[..q].to_vec(),
            self.values[q..2 * q].to_vec(),
            self.values[2 * q..].to_vec(),
        )
        .expect("3q values");
        let (graph, coloring) = realize_topcode(&matrix).expect("search keeps only trees");
        debug_assert!(is_tree(&graph));
        self.kept.push(DnspSolution {
            matrix,
            graph,
            coloring,
        });
    }
}

fn find(parent: &mut [u8; 100], mut v: u8) -> u8 {
    while parent[v as usize] != v {
        let p = parent[v as usize];
        parent[v as usize] = parent[p as usize];
        v = p;
    }
    v
}

/// Pendant-leaf counts along the spine of a caterpillar, read in the
/// direction that gives the lexicographically smaller vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopologicalVector(Vec<u32>);

impl TopologicalVector {
    /// Canonicalizes by reversal.
    pub fn new(entries: Vec<u32>) -> Self {
        let mut rev = entries.clone();
        rev.reverse();
        TopologicalVector(entries.min(rev))
    }

    /// Keeps the given reading as is; lattice arithmetic is positional.
    pub fn raw(entries: Vec<u32>) -> Self {
        TopologicalVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for TopologicalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0, ","))
    }
}

impl FromStr for TopologicalVector {
    type Err = Error;

    /// `(a,b,c)` or `a,b,c`, read positionally.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidMatrix(format!("invalid vector entry `{}`", t.trim())))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(TopologicalVector::raw(entries))
    }
}

/// The spine of `t` is what remains after deleting its leaves; it must be a
/// path. For `K_2` one endpoint serves as the spine, giving `(1)`.
pub fn topological_vector(t: &Graph) -> Result<TopologicalVector> {
    if t.order() < 2 || !is_tree(t) {
        return Err(Error::NotCaterpillar);
    }
    if t.order() == 2 {
        return Ok(TopologicalVector::new(vec![1]));
    }
    let leaves: BTreeSet<Vertex> = t.leaves().into_iter().collect();
    let spine: Vec<Vertex> = t.vertices().filter(|v| !leaves.contains(v)).collect();
    let spine_degree = |v: Vertex| t.neighbors(v).filter(|w| !leaves.contains(w)).count();
    if spine.iter().any(|&v| spine_degree(v) > 2) {
        return Err(Error::NotCaterpillar);
    }
    // Walk the path from one end.
    let start = *spine
        .iter()
        .find(|&&v| spine_degree(v) <= 1)
        .expect("a path has an end");
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(next) = t
        .neighbors(cur)
        .find(|w| !leaves.contains(w) && Some(*w) != prev)
    {
        prev = Some(cur);
        cur = next;
        order.push(cur);
    }
    let counts = order
        .iter()
        .map(|&v| t.neighbors(v).filter(|w| leaves.contains(w)).count() as u32)
        .collect();
    Ok(TopologicalVector::new(counts))
}

fn padded(v: &TopologicalVector, len: usize) -> Vec<u32> {
    let mut e = v.0.clone();
    e.resize(len, 0);
    e
}

/// Every coefficient tuple `a` with `Σ a_k base_k = v` and `Σ a_k >= 1`, in
/// lexicographic order. Vectors are padded with trailing zeros to a common
/// length. Each `a_k` is bounded by `min v_i / b_i` over the nonzero
/// entries of `base_k`; a zero base vector gets coefficient at most 1.
pub fn vector_lattice_solutions(v: &TopologicalVector, bases: &[TopologicalVector]) -> Result<Vec<Vec<u32>>> {
    if bases.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let len = bases
        .iter()
        .map(|b| b.0.len())
        .chain([v.0.len()])
        .max()
        .unwrap_or(0);
    let target = padded(v, len);
    let rows: Vec<Vec<u32>> = bases.iter().map(|b| padded(b, len)).collect();
    let bounds: Vec<u32> = rows
        .iter()
        .map(|b| {
            b.iter()
                .zip(&target)
                .filter(|(&bi, _)| bi > 0)
                .map(|(&bi, &vi)| vi / bi)
                .min()
                .unwrap_or(1)
        })
        .collect();
    let mut out = Vec::new();
    let mut coefficients = vec![0; rows.len()];
    let mut remaining = target.clone();
    lattice_rec(&rows, &bounds, 0, &mut coefficients, &mut remaining, &mut out);
    Ok(out)
}

fn lattice_rec(
    rows: &[Vec<u32>],
    bounds: &[u32],
    k: usize,
    coefficients: &mut Vec<u32>,
    remaining: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if k == rows.len() {
        if remaining.iter().all(|&r| r == 0) && coefficients.iter().any(|&a| a > 0) {
            out.push(coefficients.clone());
        }
        return;
    }
    let mut a = 0;
    loop {
        coefficients[k] = a;
        lattice_rec(rows, bounds, k + 1, coefficients, remaining, out);
        if a == bounds[k] || rows[k].iter().zip(remaining.iter()).any(|(&b, &r)| b > r) {
            break;
        }
        for (r, &b) in remaining.iter_mut().zip(&rows[k]) {
            *r -= b;
        }
        a += 1;
    }
    for (r, &b) in remaining.iter_mut().zip(&rows[k]) {
        *r += b * a;
    }
    coefficients[k] = 0;
}

/// First solution of [`vector_lattice_solutions`].
pub fn vector_lattice_member(v: &TopologicalVector, bases: &[TopologicalVector]) -> Result<Option<Vec<u32>>> {
    Ok(vector_lattice_solutions(v, bases)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    fn m(x: &[u32], e: &[u32], y: &[u32]) -> TopcodeMatrix {
        TopcodeMatrix::new(x.to_vec(), e.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn matrices_from_graphs() {
        let k2 = Graph::path(2);
        let f = TotalColoring::from_triples(3, vec![1, 2], [(1, 2, 3)]);
        assert_eq!(topcode_from_graph(&k2, &f).unwrap(), m(&[1], &[3], &[2]));

        let p3 = Graph::path(3);
        let f = TotalColoring::from_triples(5, vec![1, 2, 3], [(1, 2, 4), (2, 3, 5)]);
        let t = topcode_from_graph(&p3, &f).unwrap();
        assert_eq!(t.columns(), vec![(1, 4, 2), (2, 5, 3)]);

        let f = TotalColoring::from_triples(5, vec![1], []);
        assert_eq!(
            topcode_from_graph(&Graph::empty(1).unwrap(), &f),
            Err(Error::NoEdges)
        );
        assert!(TopcodeMatrix::new(vec![1], vec![1, 2], vec![1]).is_err());
    }

    #[test]
    fn strings() {
        assert_eq!(string_from_topcode(&m(&[1], &[3], &[2])).unwrap().as_str(), "132");
        assert_eq!(string_from_topcode(&m(&[12], &[3], &[7])).unwrap().as_str(), "1237");
        assert_eq!(string_from_topcode(&m(&[100], &[3], &[7])), Err(Error::EntryTooLarge(100)));
        assert!(NumberString::new("12a").is_err());
        assert!(NumberString::new("").is_err());
        let fixed = NumberString::with_substitutions("172o2019", &[('o', '0')]).unwrap();
        assert_eq!(fixed.as_str(), "17202019");
    }

    #[test]
    fn cutting_streams() {
        let d = NumberString::new("132").unwrap();
        let all: Vec<_> = cuttings(&d, 1).unwrap().collect();
        assert_eq!(all, vec![m(&[1], &[3], &[2])]);

        let d = NumberString::new("1234").unwrap();
        let all: Vec<_> = cuttings(&d, 1).unwrap().map(|t| t.columns()[0]).collect();
        assert_eq!(all, vec![(1, 2, 34), (1, 23, 4), (12, 3, 4)]);

        // No two-digit segment starts with 0.
        let d = NumberString::new("1034").unwrap();
        let all: Vec<_> = cuttings(&d, 1).unwrap().map(|t| t.columns()[0]).collect();
        assert_eq!(all, vec![(1, 0, 34), (10, 3, 4)]);

        assert!(matches!(
            cuttings(&NumberString::new("12").unwrap(), 1),
            Err(Error::StringLength { .. })
        ));
        assert!(cuttings(&NumberString::new("1234567").unwrap(), 1).is_err());
    }

    #[test]
    fn realizations() {
        let (g, f) = realize_topcode(&m(&[1], &[3], &[2])).unwrap();
        assert_eq!(g, Graph::path(2));
        assert_eq!(f.vertex_colors(), &[1, 2]);
        assert_eq!(f.edge(1, 2), Some(3));
        assert!(realize_topcode(&m(&[1, 1], &[3, 3], &[2, 2])).is_none());
        assert!(realize_topcode(&m(&[1, 3], &[5, 6], &[2, 4])).is_none());
        assert!(realize_topcode(&m(&[1], &[3], &[1])).is_none());
        assert!(realize_topcode(&m(&[0], &[3], &[1])).is_none());

        let t = m(&[2, 1], &[5, 4], &[3, 2]);
        let (g, f) = realize_topcode(&t).unwrap();
        assert_eq!(topcode_from_graph(&g, &f).unwrap(), t.canonical());
    }

    #[test]
    fn identification_mode() {
        // Two columns with endpoints 1-2: distinct labels give a multi-edge,
        // but splitting one label gives a path.
        let t = m(&[1, 1], &[3, 4], &[2, 2]);
        assert!(realize_topcode(&t).is_none());
        let found = realize_topcode_identify(&t).unwrap();
        assert_eq!(found.len(), 2);
        assert!(found.iter().all(|(g, _)| are_isomorphic(g, &Graph::path(3))));
        let big = TopcodeMatrix::new(vec![1; 7], vec![1; 7], vec![2; 7]).unwrap();
        assert!(realize_topcode_identify(&big).is_err());
    }

    #[test]
    fn dnsp() {
        let opts = DnspOptions::default();
        let r = solve_dnsp(&NumberString::new("132").unwrap(), 1..=1, &opts).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.complete);
        assert_eq!(r.solutions[0].graph, Graph::path(2));

        // Length 6 with q = 2 forces one-digit segments: X=(1,4), E=(2,5),
        // Y=(3,6) is two disjoint edges.
        let r = solve_dnsp(&NumberString::new("142536").unwrap(), 2..=2, &opts).unwrap();
        assert_eq!(r.count, 0);
        let r = solve_dnsp(&NumberString::new("121312").unwrap(), 2..=2, &opts).unwrap();
        assert_eq!(r.count, 0);
        let r = solve_dnsp(&NumberString::new("122325").unwrap(), 2..=2, &opts).unwrap();
        assert_eq!(r.count, 1);
        assert_eq!(r.solutions[0].matrix, m(&[1, 2], &[2, 3], &[2, 5]));
        assert!(are_isomorphic(&r.solutions[0].graph, &Graph::path(3)));
        assert!(solve_dnsp(&NumberString::new("12").unwrap(), 1..=3, &opts).is_err());
    }

    #[test]
    fn topological_vectors() {
        assert_eq!(topological_vector(&Graph::star(4)).unwrap().entries(), &[4]);
        assert_eq!(topological_vector(&Graph::path(5)).unwrap().entries(), &[1, 0, 1]);
        assert_eq!(topological_vector(&Graph::path(2)).unwrap().entries(), &[1]);
        // Height 2: the internal vertices form a path, so it is a caterpillar.
        let binary2 = Graph::new(7, [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)]).unwrap();
        assert_eq!(topological_vector(&binary2).unwrap().entries(), &[2, 0, 2]);
        let binary3 = Graph::new(15, (2..=15).map(|v| (v / 2, v))).unwrap();
        assert_eq!(topological_vector(&binary3), Err(Error::NotCaterpillar));
        assert_eq!(topological_vector(&Graph::cycle(4)), Err(Error::NotCaterpillar));
        let spider = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let mirrored = spider.relabel(&[6, 5, 4, 3, 2, 1]);
        assert_eq!(topological_vector(&spider), topological_vector(&mirrored));
        assert_eq!(topological_vector(&spider).unwrap().entries(), &[1, 0, 2]);
    }

    #[test]
    fn vector_lattice() {
        let v = |s: &str| s.parse::<TopologicalVector>().unwrap();
        assert_eq!(vector_lattice_member(&v("(2,0,2)"), &[v("(1,0,1)")]).unwrap(), Some(vec![2]));
        assert_eq!(vector_lattice_member(&v("(1,0,1)"), &[v("(2,0,2)")]).unwrap(), None);
        let all = vector_lattice_solutions(&v("(3,1)"), &[v("(1,0)"), v("(0,1)"), v("(1,1)")]).unwrap();
        assert_eq!(all, vec![vec![2, 0, 1], vec![3, 1, 0]]);
        assert_eq!(vector_lattice_member(&v("(3,1)"), &[]), Err(Error::EmptyBasis));
        assert_eq!(v("(1,2)").to_string(), "(1,2)");
    }

    #[test]
    fn matrix_text_round_trip() {
        let t = m(&[1, 12], &[3, 4], &[2, 7]);
        let text = t.to_text();
        assert_eq!(text, "# topcode row-major/1-2digit\nX 1,12\nE 3,4\nY 2,7\n");
        assert_eq!(TopcodeMatrix::from_text(&text).unwrap(), t);
        assert!(TopcodeMatrix::from_text("X 1\nE 2\nY 3\n").is_err());
        assert!(TopcodeMatrix::from_text(&text.replace("Y 2,7", "Y 2")).is_err());
    }
}
