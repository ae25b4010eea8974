use crate::graph::{Edge, Graph};

const UNKNOWN: u8 = u8::MAX;

/// Memoized subset recursion: the best matching on a vertex set either leaves
/// its lowest vertex unmatched or pairs it with one of its neighbours in the set.
pub(crate) struct MatchingTable<'a> {
    g: &'a Graph,
    memo: Vec<u8>,
}

impl<'a> MatchingTable<'a> {
    pub fn new(g: &'a Graph) -> Self {
        MatchingTable { g, memo: vec![UNKNOWN; 1 << g.n()] }
    }

    pub fn size(&mut self, mask: u64) -> usize {
        if mask == 0 {
            return 0;
        }
        let cached = self.memo[mask as usize];
        if cached != UNKNOWN {
            return cached as usize;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = self.size(rest);
        let mut partners = self.g.adjacency(v) & rest;
        while partners != 0 {
            let u = partners.trailing_zeros() as usize;
            partners &= partners - 1;
            best = best.max(1 + self.size(rest & !(1 << u)));
        }
        self.memo[mask as usize] = best as u8;
        best
    }

    /// One maximum matching on `mask`, preferring the smallest partner at each step.
    pub fn witness(&mut self, mut mask: u64) -> Vec<Edge> {
        let mut out = Vec::new();
        while mask != 0 {
            let target = self.size(mask);
            let v = mask.trailing_zeros() as usize;
            let rest = mask & !(1 << v);
            let mut partners = self.g.adjacency(v) & rest;
            let mut next = rest;
            while partners != 0 {
                let u = partners.trailing_zeros() as usize;
                partners &= partners - 1;
                if 1 + self.size(rest & !(1 << u)) == target {
                    out.push((v, u));
                    next = rest & !(1 << u);
                    break;
                }
            }
            mask = next;
        }
        out
    }
}
