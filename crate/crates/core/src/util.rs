//! Small internal helpers: subset iteration, disjoint-set union, a fixed-size
//! hash set for hot dedup loops.

use alloc::vec::Vec;

/// Iterates the k-element subsets of {1, ..., n} in ascending lexicographic
/// order of their sorted tuples: {1,2} < {1,3} < ... < {n-1,n}.
pub struct Combinations {
    n: u32,
    k: u32,
    current: Vec<u32>,
    done: bool,
}

impl Combinations {
    pub fn new(n: u32, k: u32) -> Self {
        let done = k > n;
        let current: Vec<u32> = (1..=k).collect();
        Combinations { n, k, current, done }
    }
}

impl Iterator for Combinations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        if self.k == 0 {
            self.done = true;
            return Some(out);
        }
        // advance: find rightmost slot that can still move up
        let k = self.k as usize;
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - (self.k - 1 - i as u32) {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Disjoint-set union with path halving, for component counting and cycle
/// detection in small graphs.
pub struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    pub fn new(size: usize) -> Self {
        Dsu { parent: (0..size).collect(), components: size }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if x and y were already connected (i.e. this edge closes
    /// a cycle).
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let rx = self.find(x);
        let ry = self.find(y);
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_order_and_count() {
        let all: Vec<Vec<u32>> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(Combinations::new(6, 3).count(), 20);
        assert_eq!(Combinations::new(5, 0).collect::<Vec<_>>(), vec![Vec::<u32>::new()]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn dsu_cycle_detection() {
        let mut dsu = Dsu::new(4);
        assert!(dsu.union(0, 1));
        assert!(dsu.union(2, 3));
        assert_eq!(dsu.components(), 2);
        assert!(dsu.union(1, 2));
        assert!(!dsu.union(0, 3));
        assert_eq!(dsu.components(), 1);
    }

}
