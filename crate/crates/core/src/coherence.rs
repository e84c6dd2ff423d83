//! Parenthesized, permuted tensor words and the structural maps between them.
//!
//! A structural map between two words on `n` copies of `(M, μ)` is always a
//! permutation of tensor slots followed by a power of `μ` on each slot; that
//! pair is a [`CoherenceMap`]. Maps are obtained by composing elementary
//! moves (associator, inverse associator, flip at a subtree) along a path.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::homspace::HomObject;
use crate::kernel::{apply_on_axis, basis_vector, multi_index, Matrix};
use crate::report::{AxiomResult, Report};
use crate::scalar::Scalar;

pub const MAX_LEAVES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PTree {
    Leaf,
    Node(Box<PTree>, Box<PTree>),
}

/// A tree with leaves labelled by variables: `perm[j]` is the leaf position
/// of variable `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShuffledWord {
    pub tree: PTree,
    pub perm: Vec<usize>,
}

/// Slot `i` of the output receives `μ^{exponents[i]}` applied to the content
/// of input slot `source[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoherenceMap {
    source: Vec<usize>,
    exponents: Vec<i64>,
}

/// Elementary move at the subtree reached by `address` (false = left child).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// `((A B) C) -> (A (B C))`
    Associate(Vec<bool>),
    /// `(A (B C)) -> ((A B) C)`
    AssociateInverse(Vec<bool>),
    /// `(A B) -> (B A)`
    Flip(Vec<bool>),
}

impl PTree {
    pub fn node(l: PTree, r: PTree) -> Self {
        PTree::Node(Box::new(l), Box::new(r))
    }

    /// `X₁(X₂(⋯(X_{n−1}X_n)⋯))`
    pub fn right_comb(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("a tree needs at least one leaf".into()));
        }
        let mut t = PTree::Leaf;
        for _ in 1..n {
            t = PTree::node(PTree::Leaf, t);
        }
        Ok(t)
    }

    pub fn left_comb(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("a tree needs at least one leaf".into()));
        }
        let mut t = PTree::Leaf;
        for _ in 1..n {
            t = PTree::node(t, PTree::Leaf);
        }
        Ok(t)
    }

    pub fn leaves(&self) -> usize {
        match self {
            PTree::Leaf => 1,
            PTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn is_right_comb(&self) -> bool {
        match self {
            PTree::Leaf => true,
            PTree::Node(l, r) => **l == PTree::Leaf && r.is_right_comb(),
        }
    }

    /// Subtree at `address` and the position of its first leaf.
    pub fn subtree(&self, address: &[bool]) -> Option<(&PTree, usize)> {
        let mut t = self;
        let mut offset = 0;
        for &right in address {
            match t {
                PTree::Leaf => return None,
                PTree::Node(l, r) => {
                    if right {
                        offset += l.leaves();
                        t = r;
                    } else {
                        t = l;
                    }
                }
            }
        }
        Some((t, offset))
    }

    fn subtree_mut(&mut self, address: &[bool]) -> Option<&mut PTree> {
        let mut t = self;
        for &right in address {
            match t {
                PTree::Leaf => return None,
                PTree::Node(l, r) => t = if right { r } else { l },
            }
        }
        Some(t)
    }

    /// Addresses of all internal nodes, preorder.
    pub fn internal_addresses(&self) -> Vec<Vec<bool>> {
        fn go(t: &PTree, prefix: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
            if let PTree::Node(l, r) = t {
                out.push(prefix.clone());
                prefix.push(false);
                go(l, prefix, out);
                prefix.pop();
                prefix.push(true);
                go(r, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        if n <= 1 {
            return PTree::Leaf;
        }
        let k = rng.gen_range(1..n);
        PTree::node(Self::random(k, rng), Self::random(n - k, rng))
    }
}

impl fmt::Display for PTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &PTree, next: &mut usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                PTree::Leaf => {
                    *next += 1;
                    write!(f, "{}", next)
                }
                PTree::Node(l, r) => {
                    write!(f, "(")?;
                    go(l, next, f)?;
                    write!(f, " ")?;
                    go(r, next, f)?;
                    write!(f, ")")
                }
            }
        }
        go(self, &mut 0, f)
    }
}

/// All planar binary trees with `n` leaves.
pub fn enumerate_trees(n: usize) -> Result<Vec<PTree>> {
    if n == 0 {
        return Err(Error::InvalidInput("a tree needs at least one leaf".into()));
    }
    if n > MAX_LEAVES {
        return Err(Error::ResourceLimit(format!(
            "{n} leaves exceeds the limit of {MAX_LEAVES}"
        )));
    }
    let mut by_size: Vec<Vec<PTree>> = vec![Vec::new(), vec![PTree::Leaf]];
    for size in 2..=n {
        let mut all = Vec::new();
        for k in 1..size {
            for l in &by_size[k] {
                for r in &by_size[size - k] {
                    all.push(PTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(all);
    }
    Ok(by_size.swap_remove(n))
}

/// `(2n−2)! / ((n−1)! n!)`
pub fn catalan(n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    let m = (n - 1) as u64;
    let mut c: u64 = 1;
    for i in 0..m {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

impl ShuffledWord {
    pub fn new(tree: PTree, perm: Vec<usize>) -> Result<Self> {
        let n = tree.leaves();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidInput(format!(
                "{perm:?} is not a permutation of {n} positions"
            )));
        }
        Ok(ShuffledWord { tree, perm })
    }

    pub fn plain(tree: PTree) -> Self {
        let n = tree.leaves();
        ShuffledWord {
            tree,
            perm: (0..n).collect(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.perm.len()
    }

    /// Variable at each leaf position.
    fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.perm.len()];
        for (var, &pos) in self.perm.iter().enumerate() {
            labels[pos] = var;
        }
        labels
    }

    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        ShuffledWord {
            tree: PTree::random(n, rng),
            perm,
        }
    }
}

impl fmt::Display for ShuffledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.labels();
        let shape = self.tree.to_string();
        let mut out = String::new();
        let mut pos = 0;
        let mut chars = shape.chars().peekable();
        while let Some(c) = chars.next() {
            if c.is_ascii_digit() {
                while chars.peek().is_some_and(char::is_ascii_digit) {
                    chars.next();
                }
                out.push_str(&format!("x{}", labels[pos] + 1));
                pos += 1;
            } else {
                out.push(c);
            }
        }
        write!(f, "{out}")
    }
}

impl Move {
    pub fn inverse(&self) -> Move {
        match self {
            Move::Associate(a) => Move::AssociateInverse(a.clone()),
            Move::AssociateInverse(a) => Move::Associate(a.clone()),
            Move::Flip(a) => Move::Flip(a.clone()),
        }
    }
}

/// State while walking a path: current tree, variable at each leaf, and the
/// μ-exponent accumulated by each variable.
struct Walk {
    tree: PTree,
    labels: Vec<usize>,
    exps: Vec<i64>,
}

impl Walk {
    fn start(w: &ShuffledWord) -> Self {
        Walk {
            tree: w.tree.clone(),
            labels: w.labels(),
            exps: vec![0; w.leaves()],
        }
    }

    fn step(&mut self, mv: &Move) -> Result<()> {
        let bad = |what: &str| Error::Internal(format!("{what} not applicable at {mv:?}"));
        let (addr, sign) = match mv {
            Move::Associate(a) => (a, 1),
            Move::AssociateInverse(a) => (a, -1),
            Move::Flip(a) => {
                let (sub, offset) = self.tree.subtree(a).ok_or_else(|| bad("flip"))?;
                let PTree::Node(l, r) = sub else {
                    return Err(bad("flip"));
                };
                let (nl, nr) = (l.leaves(), r.leaves());
                self.labels[offset..offset + nl + nr].rotate_left(nl);
                let node = self.tree.subtree_mut(a).expect("address checked above");
                if let PTree::Node(l, r) = node {
                    std::mem::swap(l, r);
                }
                return Ok(());
            }
        };
        let (sub, offset) = self.tree.subtree(addr).ok_or_else(|| bad("associator"))?;
        let (a_len, c_len, total) = match (sign, sub) {
            (1, PTree::Node(ab, c)) => match &**ab {
                PTree::Node(a, _) => (a.leaves(), c.leaves(), sub.leaves()),
                PTree::Leaf => return Err(bad("associator")),
            },
            (_, PTree::Node(a, bc)) => match &**bc {
                PTree::Node(_, c) => (a.leaves(), c.leaves(), sub.leaves()),
                PTree::Leaf => return Err(bad("inverse associator")),
            },
            _ => return Err(bad("associator")),
        };
        for p in offset..offset + a_len {
            self.exps[self.labels[p]] += sign;
        }
        for p in offset + total - c_len..offset + total {
            self.exps[self.labels[p]] -= sign;
        }
        let node = self.tree.subtree_mut(addr).expect("address checked above");
        let old = std::mem::replace(node, PTree::Leaf);
        *node = match (sign, old) {
            (1, PTree::Node(ab, c)) => match *ab {
                PTree::Node(a, b) => PTree::Node(a, Box::new(PTree::Node(b, c))),
                PTree::Leaf => unreachable!(),
            },
            (_, PTree::Node(a, bc)) => match *bc {
                PTree::Node(b, c) => PTree::Node(Box::new(PTree::Node(a, b)), c),
                PTree::Leaf => unreachable!(),
            },
            _ => unreachable!(),
        };
        Ok(())
    }
}

/// Applies `path` to `from` and returns the induced map and the final word.
pub fn follow_path(from: &ShuffledWord, path: &[Move]) -> Result<(CoherenceMap, ShuffledWord)> {
    let mut w = Walk::start(from);
    for mv in path {
        w.step(mv)?;
    }
    let n = from.leaves();
    let mut perm = vec![0; n];
    for (pos, &var) in w.labels.iter().enumerate() {
        perm[var] = pos;
    }
    let source = w.labels.iter().map(|&var| from.perm[var]).collect();
    let exponents = w.labels.iter().map(|&var| w.exps[var]).collect();
    Ok((
        CoherenceMap { source, exponents },
        ShuffledWord { tree: w.tree, perm },
    ))
}

fn push_rotations_to_right_comb(tree: &PTree, prefix: Vec<bool>, path: &mut Vec<Move>) -> PTree {
    let mut t = tree.clone();
    loop {
        match &t {
            PTree::Node(l, _) if matches!(**l, PTree::Node(..)) => {
                path.push(Move::Associate(prefix.clone()));
                let PTree::Node(ab, c) = t else {
                    unreachable!()
                };
                let PTree::Node(a, b) = *ab else {
                    unreachable!()
                };
                t = PTree::Node(a, Box::new(PTree::Node(b, c)));
            }
            PTree::Node(_, r) => {
                let mut p = prefix.clone();
                p.push(true);
                let r = push_rotations_to_right_comb(r, p, path);
                return PTree::node(PTree::Leaf, r);
            }
            PTree::Leaf => return t,
        }
    }
}

fn push_rotations_to_left_comb(tree: &PTree, prefix: Vec<bool>, path: &mut Vec<Move>) -> PTree {
    let mut t = tree.clone();
    loop {
        match &t {
            PTree::Node(_, r) if matches!(**r, PTree::Node(..)) => {
                path.push(Move::AssociateInverse(prefix.clone()));
                let PTree::Node(a, bc) = t else {
                    unreachable!()
                };
                let PTree::Node(b, c) = *bc else {
                    unreachable!()
                };
                t = PTree::Node(Box::new(PTree::Node(a, b)), c);
            }
            PTree::Node(l, _) => {
                let mut p = prefix.clone();
                p.push(false);
                let l = push_rotations_to_left_comb(l, p, path);
                return PTree::node(l, PTree::Leaf);
            }
            PTree::Leaf => return t,
        }
    }
}

/// Swaps leaf positions `p`, `p+1` of a right comb with `n` leaves.
fn right_comb_swap(n: usize, p: usize) -> Vec<Move> {
    let addr = vec![true; p];
    if p + 2 == n {
        vec![Move::Flip(addr)]
    } else {
        let mut left = addr.clone();
        left.push(false);
        vec![
            Move::AssociateInverse(addr.clone()),
            Move::Flip(left),
            Move::Associate(addr),
        ]
    }
}

/// Swaps leaf positions `p`, `p+1` of a left comb with `n` leaves.
fn left_comb_swap(n: usize, p: usize) -> Vec<Move> {
    let addr = vec![false; n - 2 - p];
    if p == 0 {
        vec![Move::Flip(addr)]
    } else {
        let mut right = addr.clone();
        right.push(true);
        vec![
            Move::Associate(addr.clone()),
            Move::Flip(right),
            Move::AssociateInverse(addr),
        ]
    }
}

/// Bubble sorts the leaf labels into increasing order using `swap`.
fn bubble_sort(labels: &mut [usize], swap: impl Fn(usize) -> Vec<Move>, path: &mut Vec<Move>) {
    let n = labels.len();
    for end in (1..n).rev() {
        for p in 0..end {
            if labels[p] > labels[p + 1] {
                labels.swap(p, p + 1);
                path.extend(swap(p));
            }
        }
    }
}

/// Moves from `w` to the right comb with variables in order: rotate the tree
/// into a right comb, then bubble sort with adjacent flips.
pub fn canonical_path(w: &ShuffledWord) -> Vec<Move> {
    let mut path = Vec::new();
    push_rotations_to_right_comb(&w.tree, Vec::new(), &mut path);
    let n = w.leaves();
    let mut labels = w.labels();
    bubble_sort(&mut labels, |p| right_comb_swap(n, p), &mut path);
    path
}

/// Like [`canonical_path`] but sorting at the left comb first.
pub fn left_comb_path(w: &ShuffledWord) -> Vec<Move> {
    let mut path = Vec::new();
    let n = w.leaves();
    push_rotations_to_left_comb(&w.tree, Vec::new(), &mut path);
    let mut labels = w.labels();
    bubble_sort(&mut labels, |p| left_comb_swap(n, p), &mut path);
    push_rotations_to_right_comb(&PTree::left_comb(n).expect("n >= 1"), Vec::new(), &mut path);
    path
}

pub fn reverse_path(path: &[Move]) -> Vec<Move> {
    path.iter().rev().map(Move::inverse).collect()
}

/// A path `u -> v` through the normal form via `to_normal`.
pub fn path_via(
    u: &ShuffledWord,
    v: &ShuffledWord,
    to_normal: impl Fn(&ShuffledWord) -> Vec<Move>,
) -> Vec<Move> {
    let mut p = to_normal(u);
    p.extend(reverse_path(&to_normal(v)));
    p
}

/// A path `u -> v` that first wanders through `steps` random moves.
pub fn random_detour_path<R: Rng>(
    u: &ShuffledWord,
    v: &ShuffledWord,
    steps: usize,
    rng: &mut R,
) -> Vec<Move> {
    let mut path = Vec::new();
    let mut w = Walk::start(u);
    for _ in 0..steps {
        let addrs = w.tree.internal_addresses();
        if addrs.is_empty() {
            break;
        }
        let addr = addrs[rng.gen_range(0..addrs.len())].clone();
        let candidates = [
            Move::Associate(addr.clone()),
            Move::AssociateInverse(addr.clone()),
            Move::Flip(addr),
        ];
        let mv = candidates[rng.gen_range(0..3)].clone();
        if w.step(&mv).is_ok() {
            path.push(mv);
        }
    }
    let (_, mid) = follow_path(u, &path).expect("moves were applied successfully");
    path.extend(path_via(&mid, v, canonical_path));
    path
}

fn check_pair(u: &ShuffledWord, v: &ShuffledWord) -> Result<()> {
    if u.leaves() != v.leaves() {
        return Err(Error::InvalidInput(format!(
            "words have {} and {} leaves",
            u.leaves(),
            v.leaves()
        )));
    }
    if u.leaves() > MAX_LEAVES {
        return Err(Error::ResourceLimit(format!(
            "{} leaves exceeds the limit of {MAX_LEAVES}",
            u.leaves()
        )));
    }
    Ok(())
}

/// The unique structural map `b(u, v)`.
pub fn reassociate(u: &ShuffledWord, v: &ShuffledWord) -> Result<CoherenceMap> {
    check_pair(u, v)?;
    let (map, end) = follow_path(u, &path_via(u, v, canonical_path))?;
    if end != *v {
        return Err(Error::Internal(format!(
            "path from {u} ended at {end} instead of {v}"
        )));
    }
    Ok(map)
}

impl CoherenceMap {
    pub fn identity(n: usize) -> Self {
        CoherenceMap {
            source: (0..n).collect(),
            exponents: vec![0; n],
        }
    }

    pub fn new(source: Vec<usize>, exponents: Vec<i64>) -> Result<Self> {
        let n = source.len();
        let mut seen = vec![false; n];
        if exponents.len() != n
            || source
                .iter()
                .any(|&s| s >= n || std::mem::replace(&mut seen[s], true))
        {
            return Err(Error::InvalidInput(
                "source must be a permutation matching the exponents".into(),
            ));
        }
        Ok(CoherenceMap { source, exponents })
    }

    /// Every slot twisted by `μ^k`, no permutation.
    pub fn uniform(n: usize, k: i64) -> Self {
        CoherenceMap {
            source: (0..n).collect(),
            exponents: vec![k; n],
        }
    }

    pub fn leaves(&self) -> usize {
        self.source.len()
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Target position of each source slot.
    pub fn perm(&self) -> Vec<usize> {
        let mut p = vec![0; self.source.len()];
        for (i, &s) in self.source.iter().enumerate() {
            p[s] = i;
        }
        p
    }

    /// `self ∘ first`
    pub fn after(&self, first: &Self) -> Self {
        assert_eq!(self.leaves(), first.leaves());
        CoherenceMap {
            source: self.source.iter().map(|&s| first.source[s]).collect(),
            exponents: self
                .source
                .iter()
                .zip(&self.exponents)
                .map(|(&s, &k)| k + first.exponents[s])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.leaves();
        let mut source = vec![0; n];
        let mut exponents = vec![0; n];
        for (i, (&s, &k)) in self.source.iter().zip(&self.exponents).enumerate() {
            source[s] = i;
            exponents[s] = -k;
        }
        CoherenceMap { source, exponents }
    }

    /// Juxtaposition `self ⊗ other` on `n + m` slots.
    pub fn juxtapose(&self, other: &Self) -> Self {
        let n = self.leaves();
        let mut source = self.source.clone();
        source.extend(other.source.iter().map(|&s| s + n));
        let mut exponents = self.exponents.clone();
        exponents.extend(&other.exponents);
        CoherenceMap { source, exponents }
    }

    /// Refines a map on blocks to one on leaves: block `b` has `sizes[b]`
    /// leaves, each of which inherits the block's exponent.
    pub fn expand(&self, sizes: &[usize]) -> Self {
        assert_eq!(sizes.len(), self.leaves());
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &s in sizes {
            offsets.push(acc);
            acc += s;
        }
        let mut source = Vec::with_capacity(acc);
        let mut exponents = Vec::with_capacity(acc);
        for (&b, &k) in self.source.iter().zip(&self.exponents) {
            for j in 0..sizes[b] {
                source.push(offsets[b] + j);
                exponents.push(k);
            }
        }
        CoherenceMap { source, exponents }
    }

    /// The induced map on `M^{⊗n}` applied to `x`.
    pub fn apply<F: Scalar>(&self, obj: &HomObject<F>, x: &[F]) -> Vec<F> {
        let n = self.leaves();
        let d = obj.dim();
        let dims = vec![d; n];
        let total = d.pow(n as u32);
        assert_eq!(
            x.len(),
            total,
            "vector must lie in the {n}-fold tensor power"
        );
        let mut y = vec![F::zero(); total];
        for (flat, v) in x.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let a = multi_index(&dims, flat);
            let out = self.source.iter().fold(0, |acc, &s| acc * d + a[s]);
            y[out] = v.clone();
        }
        for (axis, &k) in self.exponents.iter().enumerate() {
            if k != 0 {
                y = apply_on_axis(&obj.mu_pow(k), &dims, axis, &y);
            }
        }
        y
    }

    pub fn to_matrix<F: Scalar>(&self, obj: &HomObject<F>) -> Matrix<F> {
        let total = obj.dim().pow(self.leaves() as u32);
        let cols: Vec<Vec<F>> = (0..total)
            .map(|j| self.apply(obj, &basis_vector(total, j)))
            .collect();
        Matrix::from_columns(&cols).expect("columns have equal length")
    }
}

impl fmt::Display for CoherenceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .source
            .iter()
            .zip(&self.exponents)
            .map(|(&s, &k)| match k {
                0 => format!("x{}", s + 1),
                1 => format!("μ(x{})", s + 1),
                _ => format!("μ^{k}(x{})", s + 1),
            })
            .collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

/// `t³·s` with `s` the cycle 1→2→3→1, and `t³·s²`.
pub fn cyclic_words() -> (ShuffledWord, ShuffledWord, ShuffledWord) {
    let t3 = PTree::right_comb(3).expect("3 leaves");
    (
        ShuffledWord::plain(t3.clone()),
        ShuffledWord {
            tree: t3.clone(),
            perm: vec![1, 2, 0],
        },
        ShuffledWord {
            tree: t3,
            perm: vec![2, 0, 1],
        },
    )
}

/// Path independence over all ordered pairs of trees with `n` leaves, each with
/// the identity permutation and with a random pair of permutations.
pub fn verify_path_independence<R: Rng>(n: usize, rng: &mut R) -> Result<Report> {
    let trees = enumerate_trees(n)?;
    let mut report = Report::new(format!("coherence on {n} leaves"));
    let expected = catalan(n) as usize;
    report.push(if trees.len() == expected {
        AxiomResult::pass("tree_count", trees.len())
    } else {
        AxiomResult::fail(
            "tree_count",
            1,
            vec![trees.len()],
            format!("expected {expected}"),
        )
    });
    let mut pairs = Vec::new();
    for a in &trees {
        for b in &trees {
            pairs.push((
                ShuffledWord::plain(a.clone()),
                ShuffledWord::plain(b.clone()),
            ));
            let mut p: Vec<usize> = (0..n).collect();
            let mut q = p.clone();
            p.shuffle(rng);
            q.shuffle(rng);
            pairs.push((
                ShuffledWord {
                    tree: a.clone(),
                    perm: p,
                },
                ShuffledWord {
                    tree: b.clone(),
                    perm: q,
                },
            ));
        }
    }
    let mut failure = None;
    let mut checked = 0;
    for (idx, (u, v)) in pairs.iter().enumerate() {
        let paths = [
            path_via(u, v, canonical_path),
            path_via(u, v, left_comb_path),
            random_detour_path(u, v, 2 * n, rng),
        ];
        let mut maps = Vec::new();
        for p in &paths {
            let (m, end) = follow_path(u, p)?;
            if end != *v {
                return Err(Error::Internal(format!("path from {u} ended at {end}")));
            }
            maps.push(m);
        }
        checked += 1;
        if maps.iter().any(|m| *m != maps[0]) {
            failure = Some((
                idx,
                format!("{u} -> {v}: {} vs {} vs {}", maps[0], maps[1], maps[2]),
            ));
            break;
        }
    }
    report.push(match failure {
        None => AxiomResult::pass("path_independence", checked),
        Some((i, d)) => AxiomResult::fail("path_independence", checked, vec![i], d),
    });
    Ok(report)
}
