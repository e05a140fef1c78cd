use std::collections::HashMap;
use std::fmt;

/// Planar binary tree without labels. Left/right order matters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn node(left: Shape, right: Shape) -> Shape {
        Shape::Node(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Shape::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Number of grafting nodes strictly above each leaf, left to right.
    pub fn depths(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_depths(0, &mut out);
        out
    }

    fn collect_depths(&self, d: u32, out: &mut Vec<u32>) {
        match self {
            Shape::Leaf => out.push(d),
            Shape::Node(l, r) => {
                l.collect_depths(d + 1, out);
                r.collect_depths(d + 1, out);
            }
        }
    }

    /// Vertical symmetry applied at every node.
    pub fn mirror(&self) -> Shape {
        match self {
            Shape::Leaf => Shape::Leaf,
            Shape::Node(l, r) => Shape::node(r.mirror(), l.mirror()),
        }
    }

    /// Every internal node has at least one leaf child.
    pub fn is_fern(&self) -> bool {
        match self {
            Shape::Leaf => true,
            Shape::Node(l, r) => (l.is_leaf() || r.is_leaf()) && l.is_fern() && r.is_fern(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        self.leaf_count() - 1
    }

    /// `((..(| v |) v |) .. v |)`: successive grafting of a leaf on the right.
    pub fn left_comb(n: usize) -> Shape {
        assert!(n >= 1);
        let mut s = Shape::Leaf;
        for _ in 1..n {
            s = Shape::node(s, Shape::Leaf);
        }
        s
    }

    /// `(| v (| v ( .. v |)))`: successive grafting of a leaf on the left.
    pub fn right_comb(n: usize) -> Shape {
        assert!(n >= 1);
        let mut s = Shape::Leaf;
        for _ in 1..n {
            s = Shape::node(Shape::Leaf, s);
        }
        s
    }

    /// All shapes with `n` leaves; there are `Catalan(n-1)` of them.
    pub fn enumerate(n: usize) -> Vec<Shape> {
        let mut memo = HashMap::new();
        Self::enumerate_memo(n, &mut memo)
    }

    fn enumerate_memo(n: usize, memo: &mut HashMap<usize, Vec<Shape>>) -> Vec<Shape> {
        if n == 0 {
            return Vec::new();
        }
        if let Some(v) = memo.get(&n) {
            return v.clone();
        }
        let out = if n == 1 {
            vec![Shape::Leaf]
        } else {
            let mut out = Vec::new();
            for m in 1..n {
                let ls = Self::enumerate_memo(m, memo);
                let rs = Self::enumerate_memo(n - m, memo);
                for l in &ls {
                    for r in &rs {
                        out.push(Shape::node(l.clone(), r.clone()));
                    }
                }
            }
            out
        };
        memo.insert(n, out.clone());
        out
    }

    /// Bare structure with `|` for leaves, e.g. `((| |) |)`.
    pub fn skeleton(&self) -> String {
        match self {
            Shape::Leaf => "|".to_string(),
            Shape::Node(l, r) => format!("({} {})", l.skeleton(), r.skeleton()),
        }
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.skeleton())
    }
}
