//! Exhaustive generation of small trees and a direct test of the hipster
//! condition. This is the ground truth every recurrence is checked against.
//!
//! Trees of size `n` are composed from pools holding every tree of each
//! smaller size. Subtrees are shared through `Rc`, so the pools cost one
//! vertex per tree. The trees of the requested size itself are streamed.

use std::rc::Rc;

use arrayvec::ArrayVec;

use crate::family::FamilyId;

/// Default hard cap on the enumerated size.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Blue,
    Red,
}

/// Annotation on the edge from a vertex to one of its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    Left,
    Right,
    /// A right edge in a colored binary tree.
    ColoredRight(Color),
    /// A child in a plane 1-2 tree; its position is its place in the sequence.
    Plain,
}

impl EdgeLabel {
    fn code(self) -> u8 {
        match self {
            EdgeLabel::Left => b'L',
            EdgeLabel::Right => b'R',
            EdgeLabel::ColoredRight(Color::Blue) => b'b',
            EdgeLabel::ColoredRight(Color::Red) => b'r',
            EdgeLabel::Plain => b'P',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("a vertex may have at most two children")]
    TooManyChildren,
    #[error("the empty tree cannot be a child")]
    EmptyChild,
    #[error("children {labels:?} are not allowed in a {family} tree")]
    InvalidChildren {
        family: FamilyId,
        labels: Vec<EdgeLabel>,
    },
    #[error("size {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Child {
    label: EdgeLabel,
    subtree: Rc<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Vertex {
    children: ArrayVec<Child, 2>,
}

/// A rooted plane tree with annotated edges, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    root: Option<Rc<Vertex>>,
}

impl PlaneTree {
    pub fn empty() -> Self {
        PlaneTree { root: None }
    }

    pub fn leaf() -> Self {
        PlaneTree {
            root: Some(Rc::new(Vertex {
                children: ArrayVec::new(),
            })),
        }
    }

    /// A root whose children are the given trees, in order.
    pub fn node<I>(children: I) -> Result<Self, TreeError>
    where
        I: IntoIterator<Item = (EdgeLabel, PlaneTree)>,
    {
        let mut v = ArrayVec::new();
        for (label, tree) in children {
            let subtree = tree.root.ok_or(TreeError::EmptyChild)?;
            v.try_push(Child { label, subtree })
                .map_err(|_| TreeError::TooManyChildren)?;
        }
        Ok(PlaneTree {
            root: Some(Rc::new(Vertex { children: v })),
        })
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn vertex_count(&self) -> usize {
        fn count(v: &Vertex) -> usize {
            1 + v.children.iter().map(|c| count(&c.subtree)).sum::<usize>()
        }
        self.root.as_deref().map_or(0, count)
    }

    /// The root's children with their incoming edge labels.
    pub fn children(&self) -> Vec<(EdgeLabel, PlaneTree)> {
        self.root.as_ref().map_or_else(Vec::new, |v| {
            v.children
                .iter()
                .map(|c| {
                    (
                        c.label,
                        PlaneTree {
                            root: Some(c.subtree.clone()),
                        },
                    )
                })
                .collect()
        })
    }

    /// Every subtree rooted at a vertex, the whole tree first.
    pub fn subtrees(&self) -> Vec<PlaneTree> {
        let mut out = Vec::new();
        let mut stack: Vec<Rc<Vertex>> = self.root.iter().cloned().collect();
        while let Some(v) = stack.pop() {
            stack.extend(v.children.iter().rev().map(|c| c.subtree.clone()));
            out.push(PlaneTree { root: Some(v) });
        }
        out
    }

    /// Byte encoding that identifies the tree up to equality. The incoming
    /// edge of the root is not part of the tree, so comparing the encodings
    /// of two siblings compares their subtrees and nothing else.
    pub fn canonical_encoding(&self) -> Vec<u8> {
        let mut out = Vec::new();
        match &self.root {
            None => out.push(EMPTY_ENCODING),
            Some(v) => encode_vertex(v, &mut out),
        }
        out
    }
}

const EMPTY_ENCODING: u8 = b'.';

fn encode_vertex(v: &Vertex, out: &mut Vec<u8>) {
    out.push(b'(');
    for c in &v.children {
        out.push(c.label.code());
        encode_vertex(&c.subtree, out);
    }
    out.push(b')');
}

/// Canonical byte encoding of `t`; equal encodings mean isomorphic trees.
pub fn canonical_encode(family: FamilyId, t: &PlaneTree) -> Vec<u8> {
    debug_assert!(validate(family, t).is_ok());
    t.canonical_encoding()
}

fn labels_allowed(family: FamilyId, labels: &[EdgeLabel]) -> bool {
    use EdgeLabel::*;
    match family {
        FamilyId::BinaryPlane => matches!(labels, [] | [Left] | [Right] | [Left, Right]),
        FamilyId::PlaneOneTwo => matches!(labels, [] | [Plain] | [Plain, Plain]),
        FamilyId::ColoredRightBinary => matches!(
            labels,
            [] | [Left] | [ColoredRight(_)] | [Left, ColoredRight(_)]
        ),
    }
}

/// Checks the arity and annotation rules of `family` at every vertex.
pub fn validate(family: FamilyId, t: &PlaneTree) -> Result<(), TreeError> {
    fn walk(family: FamilyId, v: &Vertex) -> Result<(), TreeError> {
        let labels: ArrayVec<EdgeLabel, 2> = v.children.iter().map(|c| c.label).collect();
        if !labels_allowed(family, &labels) {
            return Err(TreeError::InvalidChildren {
                family,
                labels: labels.to_vec(),
            });
        }
        v.children.iter().try_for_each(|c| walk(family, &c.subtree))
    }
    t.root.as_deref().map_or(Ok(()), |v| walk(family, v))
}

/// True iff no vertex has two children with isomorphic subtrees.
pub fn is_hipster(family: FamilyId, t: &PlaneTree) -> Result<bool, TreeError> {
    validate(family, t)?;
    let Some(root) = &t.root else {
        return Ok(true);
    };
    let mut buf = Vec::with_capacity(64);
    Ok(hipster_walk(root, &mut buf))
}

/// Appends the encoding of `v` to `buf` and reports whether every vertex in
/// it has pairwise distinct child subtrees.
fn hipster_walk(v: &Vertex, buf: &mut Vec<u8>) -> bool {
    buf.push(b'(');
    let mut ok = true;
    let mut spans: ArrayVec<(usize, usize), 2> = ArrayVec::new();
    for c in &v.children {
        buf.push(c.label.code());
        let start = buf.len();
        ok &= hipster_walk(&c.subtree, buf);
        spans.push((start, buf.len()));
    }
    if let [(a0, a1), (b0, b1)] = spans[..] {
        if buf[a0..a1] == buf[b0..b1] {
            ok = false;
        }
    }
    buf.push(b')');
    ok
}

/// Ways a vertex can have children in a family.
#[derive(Clone, Copy, Debug)]
enum Shape {
    Unary(EdgeLabel),
    Binary(EdgeLabel, EdgeLabel),
}

fn shapes(family: FamilyId) -> &'static [Shape] {
    use EdgeLabel::*;
    use Shape::*;
    match family {
        FamilyId::BinaryPlane => &[Unary(Left), Unary(Right), Binary(Left, Right)],
        FamilyId::PlaneOneTwo => &[Unary(Plain), Binary(Plain, Plain)],
        FamilyId::ColoredRightBinary => &[
            Unary(Left),
            Unary(ColoredRight(Color::Blue)),
            Unary(ColoredRight(Color::Red)),
            Binary(Left, ColoredRight(Color::Blue)),
            Binary(Left, ColoredRight(Color::Red)),
        ],
    }
}

type Pools = Rc<Vec<Vec<Rc<Vertex>>>>;

/// Enumerates trees of one family, caching the pools of smaller trees
/// between calls.
pub struct Enumerator {
    family: FamilyId,
    limit: usize,
    /// `pools[k]` holds every tree with `k` vertices; `pools[0]` is unused.
    pools: Pools,
}

impl Enumerator {
    pub fn new(family: FamilyId) -> Self {
        Self::with_limit(family, DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn with_limit(family: FamilyId, limit: usize) -> Self {
        Enumerator {
            family,
            limit,
            pools: Rc::new(vec![Vec::new()]),
        }
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    /// Streams every tree with exactly `n` vertices, each once, in a fixed
    /// order. `n = 0` yields the empty tree.
    pub fn trees(&mut self, n: usize) -> Result<Trees, TreeError> {
        if n > self.limit {
            return Err(TreeError::LimitExceeded {
                n,
                limit: self.limit,
            });
        }
        while self.pools.len() < n {
            let k = self.pools.len();
            let pool: Vec<Rc<Vertex>> = Trees::new(self.family, self.pools.clone(), k)
                .map(|t| t.root.expect("nonempty"))
                .collect();
            Rc::make_mut(&mut self.pools).push(pool);
        }
        Ok(Trees::new(self.family, self.pools.clone(), n))
    }

    pub fn count_total(&mut self, n: usize) -> Result<u64, TreeError> {
        Ok(self.trees(n)?.count() as u64)
    }

    pub fn count_hipster(&mut self, n: usize) -> Result<u64, TreeError> {
        let family = self.family;
        let mut count = 0;
        for t in self.trees(n)? {
            if is_hipster(family, &t)? {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// Stream of all trees of one size. See [`Enumerator::trees`].
pub struct Trees {
    family: FamilyId,
    pools: Pools,
    n: usize,
    /// Index into `shapes`, then into the split size for binary shapes.
    shape: usize,
    split: usize,
    i: usize,
    j: usize,
    done: bool,
}

impl Trees {
    fn new(family: FamilyId, pools: Pools, n: usize) -> Self {
        Trees {
            family,
            pools,
            n,
            shape: 0,
            split: 1,
            i: 0,
            j: 0,
            done: false,
        }
    }

    fn make(children: ArrayVec<Child, 2>) -> PlaneTree {
        PlaneTree {
            root: Some(Rc::new(Vertex { children })),
        }
    }
}

impl Iterator for Trees {
    type Item = PlaneTree;

    fn next(&mut self) -> Option<PlaneTree> {
        if self.done {
            return None;
        }
        match self.n {
            0 => {
                self.done = true;
                return Some(PlaneTree::empty());
            }
            1 => {
                self.done = true;
                return Some(PlaneTree::leaf());
            }
            _ => {}
        }
        let rest = self.n - 1;
        let shapes = shapes(self.family);
        while let Some(&shape) = shapes.get(self.shape) {
            match shape {
                Shape::Unary(label) => {
                    if let Some(sub) = self.pools[rest].get(self.i) {
                        self.i += 1;
                        let mut ch = ArrayVec::new();
                        ch.push(Child { label, subtree: sub.clone() });
                        return Some(Self::make(ch));
                    }
                }
                Shape::Binary(first, second) => {
                    while self.split < rest {
                        let left = &self.pools[self.split];
                        let right = &self.pools[rest - self.split];
                        if self.i < left.len() {
                            if self.j < right.len() {
                                let mut ch = ArrayVec::new();
                                ch.push(Child { label: first, subtree: left[self.i].clone() });
                                ch.push(Child { label: second, subtree: right[self.j].clone() });
                                self.j += 1;
                                return Some(Self::make(ch));
                            }
                            self.i += 1;
                            self.j = 0;
                            continue;
                        }
                        self.split += 1;
                        self.i = 0;
                        self.j = 0;
                    }
                }
            }
            self.shape += 1;
            self.split = 1;
            self.i = 0;
            self.j = 0;
        }
        self.done = true;
        None
    }
}

/// Every tree of `family` with `n` vertices, using the default limit.
pub fn enumerate_trees(family: FamilyId, n: usize) -> Result<Trees, TreeError> {
    Enumerator::new(family).trees(n)
}

pub fn count_hipster(family: FamilyId, n: usize) -> Result<u64, TreeError> {
    Enumerator::new(family).count_hipster(n)
}

pub fn count_total(family: FamilyId, n: usize) -> Result<u64, TreeError> {
    Enumerator::new(family).count_total(n)
}

/// `(total, hipster)` counts for every size `0..=n_max`.
pub fn census(family: FamilyId, n_max: usize, limit: usize) -> Result<Vec<(u64, u64)>, TreeError> {
    let mut e = Enumerator::with_limit(family, limit);
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut total = 0;
        let mut hipster = 0;
        for t in e.trees(n)? {
            total += 1;
            if is_hipster(family, &t)? {
                hipster += 1;
            }
        }
        rows.push((total, hipster));
    }
    Ok(rows)
}
