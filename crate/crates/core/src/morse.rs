//! The trivial-coefficient bar complex, its Morse matching, and weighted path
//! sums: the Anick differential, the homotopy `g`, and the transferred
//! derivation.
//!
//! Basis vertices of the bar complex are tuples of nonempty reduced words.
//! The matching pairs a vertex whose first `p+1` components are single
//! generators forming a chain either with the vertex obtained by splitting
//! the next component after its first letter (when that letter extends the
//! chain) or with the vertex obtained by merging the next two components.
//! Unmatched vertices are exactly the Anick chains. Transferred maps are sums
//! of weighted zigzag paths in the matched graph: differential edges keep
//! their coefficient, reversed matching edges carry minus the inverse of
//! theirs.

use std::collections::{HashMap, HashSet};
use std::fmt;


use crate::linalg::{rat_int, Rational};
use crate::rewrite::{derive_word, is_obstruction, is_reduced, normal_form_word, Family, LinComb, Word};

/// An Anick chain: an index tuple in which every adjacent pair is an
/// obstruction of the family. A tuple of length `n` is a basis element of the
/// Anick complex in homological degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnickChain(Vec<u32>);

impl AnickChain {
    pub fn new(indices: Vec<u32>) -> Self {
        AnickChain(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the indices.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("empty chain")
    }

    /// Tuple with index `j` appended.
    pub fn append(&self, j: u32) -> AnickChain {
        let mut v = self.0.clone();
        v.push(j);
        AnickChain(v)
    }

    pub fn to_bar_vertex(&self) -> BarVertex {
        BarVertex::new(self.0.iter().map(|&n| Word::single(n)).collect())
    }
}

impl fmt::Display for AnickChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "]")
    }
}

/// Basis vertex of the trivial-coefficient bar complex: a nonempty tuple of
/// nonempty reduced words. Homological degree = component count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarVertex(Vec<Word>);

impl BarVertex {
    pub fn new(components: Vec<Word>) -> Self {
        debug_assert!(!components.is_empty(), "bar vertex needs at least one component");
        debug_assert!(components.iter().all(|w| !w.is_empty()), "empty bar component");
        BarVertex(components)
    }

    pub fn components(&self) -> &[Word] {
        &self.0
    }

    pub fn count(&self) -> usize {
        self.0.len()
    }

    /// Sum of all letter indices across all components.
    pub fn index_degree(&self) -> u32 {
        self.0.iter().map(Word::index_degree).sum()
    }

    /// The index tuple, when every component is a single generator.
    pub fn single_letters(&self) -> Option<Vec<u32>> {
        self.0
            .iter()
            .map(|w| if w.len() == 1 { Some(w.letters()[0]) } else { None })
            .collect()
    }

    /// Number of components equal to the one-letter word `v(0)`.
    pub fn zero_components(&self) -> usize {
        self.0.iter().filter(|w| w.letters() == [0]).count()
    }

    /// The chain this vertex represents, if it is one.
    pub fn as_chain(&self, family: Family) -> Option<AnickChain> {
        let letters = self.single_letters()?;
        chain_predicate(family, &letters).then(|| AnickChain::new(letters))
    }
}

impl fmt::Display for BarVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

/// Morse class of a bar vertex. Positions are 1-based: a `MergedEnd(p)`
/// splits its `p`-th component after the first letter, a `SplitEnd(p)` merges
/// components `p` and `p+1`; `p` is also the merge position of the matched
/// differential edge, whose coefficient is `(-1)^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorseClass {
    Critical,
    MergedEnd(usize),
    SplitEnd(usize),
}

/// All adjacent pairs are obstructions. Single indices are always chains.
pub fn chain_predicate(family: Family, indices: &[u32]) -> bool {
    !indices.is_empty() && indices.windows(2).all(|p| is_obstruction(family, p[0], p[1]))
}

/// The explicit description of `U(3)` chains: all indices up to the
/// antepenultimate are at least 2, and the tail is either `(>=2, *)` or
/// `(1, 0)`. Equivalent to [`chain_predicate`]; kept as a cross-check.
pub fn u3_chain_explicit(indices: &[u32]) -> bool {
    let n = indices.len();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    indices[..n - 2].iter().all(|&i| i >= 2)
        && (indices[n - 2] >= 2 || (indices[n - 2], indices[n - 1]) == (1, 0))
}

/// All chains of the given length and index degree, in lexicographic order.
pub fn enumerate_chains(family: Family, n: usize, d: u32) -> Vec<AnickChain> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(n);
    fn rec(family: Family, n: usize, d_left: u32, cur: &mut Vec<u32>, out: &mut Vec<AnickChain>) {
        if cur.len() == n {
            if d_left == 0 {
                out.push(AnickChain::new(cur.clone()));
            }
            return;
        }
        for next in 0..=d_left {
            if let Some(&prev) = cur.last() {
                if !is_obstruction(family, prev, next) {
                    continue;
                }
            }
            cur.push(next);
            rec(family, n, d_left - next, cur, out);
            cur.pop();
        }
    }
    rec(family, n, d, &mut cur, &mut out);
    out
}

/// Morse class of a bar vertex under the chain-prefix matching.
pub fn classify(family: Family, b: &BarVertex) -> MorseClass {
    let comps = b.components();
    let m = comps.len();
    // longest prefix of single generators forming a chain
    let mut k = 0;
    let mut prev: Option<u32> = None;
    while k < m {
        let w = &comps[k];
        if w.len() != 1 {
            break;
        }
        let letter = w.letters()[0];
        if let Some(p) = prev {
            if !is_obstruction(family, p, letter) {
                break;
            }
        }
        prev = Some(letter);
        k += 1;
    }
    if k == m {
        return MorseClass::Critical;
    }
    let w = &comps[k];
    if w.len() >= 2 {
        let first = w.letters()[0];
        let extends = match prev {
            None => true,
            Some(p) => is_obstruction(family, p, first),
        };
        if extends {
            return MorseClass::MergedEnd(k + 1);
        }
    }
    MorseClass::SplitEnd(k)
}

/// The other end of the matched edge through `b`, together with the merge
/// position of that edge. `None` for critical vertices.
pub fn matched_partner(family: Family, b: &BarVertex) -> Option<(BarVertex, usize)> {
    match classify(family, b) {
        MorseClass::Critical => None,
        MorseClass::MergedEnd(pos) => {
            let comps = b.components();
            let w = &comps[pos - 1];
            let mut parts: Vec<Word> = comps[..pos - 1].to_vec();
            parts.push(Word::single(w.letters()[0]));
            parts.push(Word::new(w.letters()[1..].to_vec()));
            parts.extend_from_slice(&comps[pos..]);
            Some((BarVertex::new(parts), pos))
        }
        MorseClass::SplitEnd(pos) => {
            let comps = b.components();
            let merged = comps[pos - 1].concat(&comps[pos]);
            debug_assert!(is_reduced(family, &merged), "split-merge concatenation not reduced");
            let mut parts: Vec<Word> = comps[..pos - 1].to_vec();
            parts.push(merged);
            parts.extend_from_slice(&comps[pos + 1..]);
            Some((BarVertex::new(parts), pos))
        }
    }
}

/// Bar differential with trivial coefficients:
/// `sum_i (-1)^i [u_1|...|N(u_i u_{i+1})|...|u_m]`, expanded into basis
/// vertices. The two decorated outer terms vanish because the augmentation
/// kills every factor. Single-component vertices map to zero.
pub fn bar_diff(family: Family, b: &BarVertex) -> LinComb<BarVertex> {
    let comps = b.components();
    let m = comps.len();
    let mut out = LinComb::zero();
    for i in 1..m {
        let product = normal_form_word(family, &comps[i - 1].concat(&comps[i]));
        let sign = if i % 2 == 1 { rat_int(-1) } else { rat_int(1) };
        for (w, c) in product.iter() {
            debug_assert!(!w.is_empty(), "product of augmentation-ideal elements hit the identity");
            let mut parts: Vec<Word> = comps[..i - 1].to_vec();
            parts.push(w.clone());
            parts.extend_from_slice(&comps[i + 1..]);
            out.add_term(BarVertex::new(parts), &sign * c);
        }
    }
    out
}

/// Slotwise derivation on a bar vertex: apply the derivation to each
/// component in turn and expand into basis vertices.
pub fn slotwise_derivative(family: Family, b: &BarVertex) -> LinComb<BarVertex> {
    let comps = b.components();
    let mut out = LinComb::zero();
    for i in 0..comps.len() {
        for (dw, dc) in derive_word(family, &comps[i]).iter() {
            debug_assert!(!dw.is_empty());
            let mut parts = comps.to_vec();
            parts[i] = dw.clone();
            out.add_term(BarVertex::new(parts), dc.clone());
        }
    }
    out
}

/// Weight of the reversed matching edge out of a `MergedEnd` at position
/// `pos`: the matched differential edge carries `(-1)^pos`, so the reversed
/// edge carries `-1/(-1)^pos`.
fn reversed_weight(pos: usize) -> Rational {
    if pos.is_multiple_of(2) {
        rat_int(-1)
    } else {
        rat_int(1)
    }
}

/// Differential edges out of `v` in the matched graph: the bar differential
/// with the matched edge removed when `v` is a split end.
pub fn unmatched_down_edges(family: Family, v: &BarVertex) -> Vec<(BarVertex, Rational)> {
    let diff = bar_diff(family, v);
    let skip = match classify(family, v) {
        MorseClass::SplitEnd(pos) => {
            let (partner, _) = matched_partner(family, v).expect("split end has a partner");
            debug_assert!(
                {
                    let c = diff.coeff(&partner);
                    (if pos % 2 == 1 { -c.clone() } else { c.clone() }) == rat_int(1)
                },
                "matched edge of {v} does not carry (-1)^{pos}"
            );
            Some(partner)
        }
        _ => None,
    };
    diff.iter()
        .filter(|(u, _)| Some(*u) != skip.as_ref())
        .map(|(u, c)| (u.clone(), c.clone()))
        .collect()
}

/// Memoized sum over directed paths from critical cells to the critical cells
/// one homological degree down; this is the Anick differential. Vertices more
/// than one degree below the start never reach such a cell and are not
/// expanded.
pub struct DeltaEngine {
    family: Family,
    prune_zeros: bool,
    memo: HashMap<BarVertex, LinComb<AnickChain>>,
    in_progress: HashSet<BarVertex>,
}

impl DeltaEngine {
    pub fn new(family: Family, prune_zeros: bool) -> Self {
        DeltaEngine { family, prune_zeros, memo: HashMap::new(), in_progress: HashSet::new() }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `δ_n` on a chain of length `n >= 2`: weighted paths from the chain to
    /// critical cells of length `n - 1`.
    pub fn delta(&mut self, c: &AnickChain) -> LinComb<AnickChain> {
        debug_assert!(c.len() >= 2, "the Anick differential starts at length 2");
        debug_assert!(chain_predicate(self.family, c.indices()));
        self.expand(&c.to_bar_vertex())
    }

    /// Contributions of all paths from `v` to critical cells one degree below
    /// `v`.
    fn expand(&mut self, v: &BarVertex) -> LinComb<AnickChain> {
        if let Some(hit) = self.memo.get(v) {
            return hit.clone();
        }
        assert!(self.in_progress.insert(v.clone()), "directed cycle in the Morse graph at {v}");
        let family = self.family;
        let mut out = LinComb::zero();
        for (u, w) in unmatched_down_edges(family, v) {
            if self.prune_zeros && u.zero_components() >= 2 {
                continue;
            }
            match classify(family, &u) {
                MorseClass::Critical => {
                    let chain = u.as_chain(family).expect("critical cells are chains");
                    out.add_term(chain, w);
                }
                MorseClass::MergedEnd(pos) => {
                    let (split, _) = matched_partner(family, &u).expect("merged end has a partner");
                    let weight = &w * reversed_weight(pos);
                    let sub = self.expand(&split);
                    out.add_scaled(&sub, &weight);
                }
                // a split end one degree down can only continue further down,
                // away from every critical cell at the target degree
                MorseClass::SplitEnd(_) => {}
            }
        }
        self.in_progress.remove(v);
        self.memo.insert(v.clone(), out.clone());
        out
    }
}

/// Memoized sum over zigzag paths staying in the homological degree of the
/// start; this is the chain homotopy `g` between the Anick and bar
/// resolutions. No zero-component pruning here: the recorded vertices need
/// not be chains.
pub struct GEngine {
    family: Family,
    memo: HashMap<BarVertex, LinComb<BarVertex>>,
    in_progress: HashSet<BarVertex>,
}

impl GEngine {
    pub fn new(family: Family) -> Self {
        GEngine { family, memo: HashMap::new(), in_progress: HashSet::new() }
    }

    /// `g_n` on a chain: the trivial path contributes the chain itself, every
    /// other contribution descends through an unmatched differential edge and
    /// climbs back along a reversed matching edge.
    pub fn g(&mut self, c: &AnickChain) -> LinComb<BarVertex> {
        debug_assert!(chain_predicate(self.family, c.indices()));
        self.expand(&c.to_bar_vertex())
    }

    fn expand(&mut self, v: &BarVertex) -> LinComb<BarVertex> {
        if let Some(hit) = self.memo.get(v) {
            return hit.clone();
        }
        assert!(self.in_progress.insert(v.clone()), "directed cycle in the Morse graph at {v}");
        let family = self.family;
        let mut out = LinComb::from_term(v.clone(), rat_int(1));
        for (u, w) in unmatched_down_edges(family, v) {
            if let MorseClass::MergedEnd(pos) = classify(family, &u) {
                let (split, _) = matched_partner(family, &u).expect("merged end has a partner");
                let weight = &w * reversed_weight(pos);
                let sub = self.expand(&split);
                out.add_scaled(&sub, &weight);
            }
        }
        self.in_progress.remove(v);
        self.memo.insert(v.clone(), out.clone());
        out
    }
}

/// Sum over all directed paths in the matched graph from `start` to vertices
/// satisfying `terminal`, weighted by the product of edge weights. The empty
/// path counts when the start itself is terminal; paths may pass through
/// terminal vertices and end at later ones.
pub fn morse_paths(
    family: Family,
    start: &BarVertex,
    terminal: &dyn Fn(&BarVertex) -> bool,
) -> LinComb<BarVertex> {
    let mut memo: HashMap<BarVertex, LinComb<BarVertex>> = HashMap::new();
    let mut in_progress: HashSet<BarVertex> = HashSet::new();
    fn expand(
        family: Family,
        v: &BarVertex,
        terminal: &dyn Fn(&BarVertex) -> bool,
        memo: &mut HashMap<BarVertex, LinComb<BarVertex>>,
        in_progress: &mut HashSet<BarVertex>,
    ) -> LinComb<BarVertex> {
        if let Some(hit) = memo.get(v) {
            return hit.clone();
        }
        assert!(in_progress.insert(v.clone()), "directed cycle in the Morse graph at {v}");
        let mut out = LinComb::zero();
        if terminal(v) {
            out.add_term(v.clone(), rat_int(1));
        }
        for (u, w) in unmatched_down_edges(family, v) {
            let sub = expand(family, &u, terminal, memo, in_progress);
            out.add_scaled(&sub, &w);
        }
        if let MorseClass::MergedEnd(pos) = classify(family, v) {
            let (split, _) = matched_partner(family, v).expect("merged end has a partner");
            let weight = reversed_weight(pos);
            let sub = expand(family, &split, terminal, memo, in_progress);
            out.add_scaled(&sub, &weight);
        }
        in_progress.remove(v);
        memo.insert(v.clone(), out.clone());
        out
    }
    expand(family, start, terminal, &mut memo, &mut in_progress)
}

/// Anick differential by weighted path enumeration, with the zero-component
/// pruning on.
pub fn anick_diff_paths(family: Family, c: &AnickChain) -> LinComb<AnickChain> {
    anick_diff_paths_opt(family, c, true)
}

/// Anick differential by weighted path enumeration with an explicit pruning
/// flag; chains of length 1 map to zero.
pub fn anick_diff_paths_opt(family: Family, c: &AnickChain, prune_zeros: bool) -> LinComb<AnickChain> {
    if c.len() < 2 {
        return LinComb::zero();
    }
    DeltaEngine::new(family, prune_zeros).delta(c)
}

/// The homotopy `g` on a chain.
pub fn g_map(family: Family, c: &AnickChain) -> LinComb<BarVertex> {
    GEngine::new(family).g(c)
}

/// Projection of a bar combination onto the chain basis: vertices that are
/// not Anick chains are dropped.
pub fn project_to_chains(family: Family, x: &LinComb<BarVertex>) -> LinComb<AnickChain> {
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        if let Some(chain) = b.as_chain(family) {
            out.add_term(chain, c.clone());
        }
    }
    out
}

/// Transferred derivation via the defining route: apply the slotwise
/// derivation to `g` of the chain and project onto the chain basis. Preserves
/// length and lowers the index degree by one.
pub fn tilde_partial_general(family: Family, c: &AnickChain) -> LinComb<AnickChain> {
    let mut engine = GEngine::new(family);
    tilde_partial_general_with(&mut engine, c)
}

/// Same as [`tilde_partial_general`], reusing a `GEngine` across calls.
pub fn tilde_partial_general_with(engine: &mut GEngine, c: &AnickChain) -> LinComb<AnickChain> {
    let family = engine.family;
    let g = engine.g(c);
    let mut derived = LinComb::zero();
    for (b, coeff) in g.iter() {
        derived.add_scaled(&slotwise_derivative(family, b), coeff);
    }
    project_to_chains(family, &derived)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn chain(idx: &[u32]) -> AnickChain {
        AnickChain::new(idx.to_vec())
    }

    fn bv(comps: &[&[u32]]) -> BarVertex {
        BarVertex::new(comps.iter().map(|c| Word::new(c.to_vec())).collect())
    }

    fn lc(terms: &[(&[u32], Rational)]) -> LinComb<AnickChain> {
        let mut out = LinComb::zero();
        for (t, c) in terms {
            out.add_term(chain(t), c.clone());
        }
        out
    }

    #[test]
    fn chain_predicate_examples() {
        assert!(chain_predicate(Family::U3, &[2, 1, 0]));
        assert!(!chain_predicate(Family::U3, &[1, 1]));
        assert!(chain_predicate(Family::U2, &[1, 1, 0]));
    }

    #[test]
    fn u3_chain_explicit_matches_predicate() {
        for len in 1..=6usize {
            let mut tuple = vec![0u32; len];
            loop {
                assert_eq!(
                    chain_predicate(Family::U3, &tuple),
                    u3_chain_explicit(&tuple),
                    "tuple {tuple:?}"
                );
                let mut i = 0;
                loop {
                    if i == len {
                        break;
                    }
                    tuple[i] += 1;
                    if tuple[i] <= 8 {
                        break;
                    }
                    tuple[i] = 0;
                    i += 1;
                }
                if i == len {
                    break;
                }
            }
        }
    }

    #[test]
    fn enumerate_chain_examples() {
        assert_eq!(
            enumerate_chains(Family::U3, 3, 4),
            vec![chain(&[2, 2, 0]), chain(&[3, 1, 0])]
        );
        assert_eq!(enumerate_chains(Family::U3, 2, 1), vec![chain(&[1, 0])]);
        assert_eq!(enumerate_chains(Family::U3, 1, 0), vec![chain(&[0])]);
    }

    #[test]
    fn classify_examples() {
        // a chain is critical
        assert_eq!(classify(Family::U3, &bv(&[&[2], &[2], &[0]])), MorseClass::Critical);
        // [v(0)v(3)|v(0)] -> MergedEnd(1) with partner [v(0)|v(3)|v(0)]
        let b = bv(&[&[0, 3], &[0]]);
        assert_eq!(classify(Family::U3, &b), MorseClass::MergedEnd(1));
        let (partner, pos) = matched_partner(Family::U3, &b).unwrap();
        assert_eq!(pos, 1);
        assert_eq!(partner, bv(&[&[0], &[3], &[0]]));
        // [v(2)|v(1)|v(1)] -> SplitEnd(2) with partner [v(2)|v(1)v(1)]
        let s = bv(&[&[2], &[1], &[1]]);
        assert_eq!(classify(Family::U3, &s), MorseClass::SplitEnd(2));
        let (sp, spos) = matched_partner(Family::U3, &s).unwrap();
        assert_eq!(spos, 2);
        assert_eq!(sp, bv(&[&[2], &[1, 1]]));
        assert_eq!(classify(Family::U3, &sp), MorseClass::MergedEnd(2));
    }

    #[test]
    fn bar_diff_examples() {
        // U3: d[v(1)|v(0)] = -[v(0)v(1)] - [v(0)]
        let d = bar_diff(Family::U3, &bv(&[&[1], &[0]]));
        let mut want = LinComb::zero();
        want.add_term(bv(&[&[0, 1]]), rat_int(-1));
        want.add_term(bv(&[&[0]]), rat_int(-1));
        assert_eq!(d, want);
        // single component: zero
        assert!(bar_diff(Family::U3, &bv(&[&[0, 2, 5]])).is_zero());
        // U2: d[v(n)|v(m)] = -[v(0)v(n+m)] - n[v(n+m-1)]
        let d2 = bar_diff(Family::U2, &bv(&[&[3], &[2]]));
        let mut want2 = LinComb::zero();
        want2.add_term(bv(&[&[0, 5]]), rat_int(-1));
        want2.add_term(bv(&[&[4]]), rat_int(-3));
        assert_eq!(d2, want2);
    }

    #[test]
    fn morse_paths_examples() {
        // start already terminal: coefficient 1 on start (plus nothing else here)
        let start = bv(&[&[2], &[2]]);
        let got = morse_paths(Family::U3, &start, &|v| v.count() == 2 && v == &start);
        assert_eq!(got, LinComb::from_term(start.clone(), rat_int(1)));
        // U3 from [2|0] to one-component critical vertices: -2[v(1)]
        let got = morse_paths(Family::U3, &bv(&[&[2], &[0]]), &|v| {
            v.count() == 1 && classify(Family::U3, v) == MorseClass::Critical
        });
        assert_eq!(got, LinComb::from_term(bv(&[&[1]]), rat_int(-2)));
        // U2 from [v(0)v(3)|v(0)] to vertices one level up: +[0|3|0]
        let got = morse_paths(Family::U2, &bv(&[&[0, 3], &[0]]), &|v| v.count() == 3);
        assert_eq!(got, LinComb::from_term(bv(&[&[0], &[3], &[0]]), rat_int(1)));
    }

    #[test]
    fn anick_diff_examples() {
        // U3: delta_2[1|0] = -[0]
        assert_eq!(
            anick_diff_paths(Family::U3, &chain(&[1, 0])),
            lc(&[(&[0], rat_int(-1))])
        );
        // U3: delta_2[3|2] = -(3/2)[4]
        assert_eq!(
            anick_diff_paths(Family::U3, &chain(&[3, 2])),
            lc(&[(&[4], rat(-3, 2))])
        );
        // U2: delta_3[2|1|0] = 2[1|1] - [2|0], delta_3[1|1|0] = 0
        assert_eq!(
            anick_diff_paths(Family::U2, &chain(&[2, 1, 0])),
            lc(&[(&[1, 1], rat_int(2)), (&[2, 0], rat_int(-1))])
        );
        assert!(anick_diff_paths(Family::U2, &chain(&[1, 1, 0])).is_zero());
    }

    #[test]
    fn g_map_examples() {
        for family in [Family::U2, Family::U3] {
            let g = g_map(family, &chain(&[2, 0]));
            let mut want = LinComb::zero();
            want.add_term(bv(&[&[2], &[0]]), rat_int(1));
            want.add_term(bv(&[&[0], &[2]]), rat_int(-1));
            assert_eq!(g, want, "family {family}");
            // any chain appears in its own g with coefficient 1
            let c = chain(&[2, 2, 0]);
            assert_eq!(g_map(family, &c).coeff(&c.to_bar_vertex()), rat_int(1));
        }
    }

    #[test]
    fn tilde_partial_general_examples() {
        // U2: tilde d_3 [2|1|0] = 2[1|1|0]
        assert_eq!(
            tilde_partial_general(Family::U2, &chain(&[2, 1, 0])),
            lc(&[(&[1, 1, 0], rat_int(2))])
        );
        // U3: tilde d_1 [0] = 0
        assert!(tilde_partial_general(Family::U3, &chain(&[0])).is_zero());
        // U3: tilde d_2 [2|0] = 2[1|0]
        assert_eq!(
            tilde_partial_general(Family::U3, &chain(&[2, 0])),
            lc(&[(&[1, 0], rat_int(2))])
        );
    }

    // the specialized engines restrict the traversal to the two homological
    // degrees a contributing path can visit; the generic unrestricted path
    // sum must agree with them
    #[test]
    fn engines_agree_with_generic_path_sums() {
        for family in [Family::U3, Family::U2] {
            let mut delta_engine = DeltaEngine::new(family, true);
            let mut g_engine = GEngine::new(family);
            for n in 1..=4usize {
                for d in 0..=7u32 {
                    for c in enumerate_chains(family, n, d) {
                        let start = c.to_bar_vertex();
                        if n >= 2 {
                            let generic = morse_paths(family, &start, &|v| {
                                v.count() == n - 1
                                    && classify(family, v) == MorseClass::Critical
                            });
                            assert_eq!(
                                project_to_chains(family, &generic),
                                delta_engine.delta(&c),
                                "{family}: differential of {c}"
                            );
                        }
                        let generic = morse_paths(family, &start, &|v| v.count() == n);
                        assert_eq!(generic, g_engine.g(&c), "{family}: homotopy of {c}");
                    }
                }
            }
        }
    }
}
