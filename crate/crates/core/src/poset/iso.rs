use fixedbitset::FixedBitSet;

use super::HasseQuiver;

struct Shape {
    out: Vec<FixedBitSet>,
    signature: Vec<(usize, usize, usize, usize)>,
}

impl Shape {
    fn new<L>(h: &HasseQuiver<L>) -> Self {
        let k = h.len();
        let mut out: Vec<FixedBitSet> = (0..k).map(|_| FixedBitSet::with_capacity(k)).collect();
        let mut in_deg = vec![0; k];
        for &(a, b) in &h.arrows {
            out[a].insert(b);
            in_deg[b] += 1;
        }
        let below = h.order();
        let mut above = vec![0; k];
        for lower in &below {
            for j in lower.ones() {
                above[j] += 1;
            }
        }
        let signature = (0..k)
            .map(|i| (out[i].count_ones(..), in_deg[i], below[i].count_ones(..), above[i]))
            .collect();
        Shape { out, signature }
    }

    fn arrow(&self, a: usize, b: usize) -> bool {
        self.out[a].contains(b)
    }
}

/// An order isomorphism between two posets given by their Hasse quivers,
/// as a map from vertices of `a` to vertices of `b`.
pub fn poset_isomorphic<A, B>(a: &HasseQuiver<A>, b: &HasseQuiver<B>) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.arrows.len() != b.arrows.len() {
        return None;
    }
    let (sa, sb) = (Shape::new(a), Shape::new(b));
    let mut sig_a = sa.signature.clone();
    let mut sig_b = sb.signature.clone();
    sig_a.sort_unstable();
    sig_b.sort_unstable();
    if sig_a != sig_b {
        return None;
    }

    // visit vertices of `a` so that each one after the first in its
    // component has an already placed neighbour
    let k = a.len();
    let mut order = Vec::with_capacity(k);
    let mut anchor = vec![None; k];
    let mut placed = vec![false; k];
    for start in 0..k {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in a.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    anchor[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; k];
    if search(0, &order, &anchor, &sa, &sb, b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search<B>(
    depth: usize,
    order: &[usize],
    anchor: &[Option<usize>],
    sa: &Shape,
    sb: &Shape,
    b: &HasseQuiver<B>,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let candidates: Vec<usize> = match anchor[v] {
        Some(u) => b.neighbors(map[u]),
        None => (0..b.len()).collect(),
    };
    for c in candidates {
        if used[c] || sa.signature[v] != sb.signature[c] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| sa.arrow(v, w) == sb.arrow(c, map[w]) && sa.arrow(w, v) == sb.arrow(map[w], c));
        if !consistent {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if search(depth + 1, order, anchor, sa, sb, b, map, used) {
            return true;
        }
        used[c] = false;
        map[v] = usize::MAX;
    }
    false
}
