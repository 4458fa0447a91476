/// Disjoint-set forest with path halving and union by size.
///
/// `union` keeps the smaller index as the representative so that class
/// representatives are canonical (the least member of each class).
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Canonical representative (least member) of every element.
    pub fn representatives(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|i| self.find(i)).collect()
    }

    /// Dense class numbering ordered by least member: `(class_of, class_count)`.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let reps = self.representatives();
        let mut index = vec![usize::MAX; reps.len()];
        let mut count = 0;
        let mut class_of = vec![0; reps.len()];
        for (i, &r) in reps.iter().enumerate() {
            if index[r] == usize::MAX {
                index[r] = count;
                count += 1;
            }
            class_of[i] = index[r];
        }
        (class_of, count)
    }
}
