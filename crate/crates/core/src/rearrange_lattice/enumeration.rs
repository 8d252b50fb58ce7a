use crate::error::{domain, Error, Result};
use crate::lattice::LatticePoint;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

/// Which labelling of `Z^d` to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Labelling {
    /// Anticlockwise square spiral on `Z^2`.
    Spiral,
    /// Nested vertex-isoperimetric minimizers; on `Z^d`, `d >= 3`, the same as [`Labelling::L1Lex`].
    WangWang,
    /// Increasing `l^1` norm, lexicographic within a sphere.
    L1Lex,
}

impl FromStr for Labelling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "spiral" => Ok(Labelling::Spiral),
            "wang-wang" | "wangwang" | "ww" => Ok(Labelling::WangWang),
            "l1-lex" | "l1" | "lex" => Ok(Labelling::L1Lex),
            other => Err(domain(format!("unknown labelling '{other}'"))),
        }
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Labelling::Spiral => "spiral",
            Labelling::WangWang => "wang-wang",
            Labelling::L1Lex => "l1-lex",
        })
    }
}

/// Reference values for the first labels of the Wang-Wang order on `Z^2`.
const WANG_WANG_SEED: [(i64, i64); 13] = [
    (0, 0),
    (0, 1),
    (1, 0),
    (-1, 0),
    (0, -1),
    (1, 1),
    (-1, 1),
    (0, 2),
    (2, 0),
    (1, -1),
    (-2, 0),
    (-1, -1),
    (0, -2),
];

fn neighbors2(p: (i64, i64)) -> [(i64, i64); 4] {
    let (x, y) = p;
    [(x, y + 1), (x + 1, y), (x - 1, y), (x, y - 1)]
}

/// Clockwise angle from the `+y` axis, in `[0, 2 pi)`.
fn clockwise_angle(p: (i64, i64)) -> f64 {
    (p.0 as f64).atan2(p.1 as f64).rem_euclid(2.0 * std::f64::consts::PI)
}

#[derive(Debug)]
enum Generator {
    Spiral { pos: (i64, i64), dir: usize, leg: i64, left: i64, legs_at_len: u8 },
    /// Vertices are taken batch by batch in discovery order, so the unlabelled
    /// part of every batch queue is exactly the vertex boundary of the prefix.
    WangWang { discovered: HashSet<(i64, i64)>, batches: VecDeque<Vec<(i64, i64)>> },
    Shells { next_radius: i64 },
}

#[derive(Debug)]
struct State {
    points: Vec<LatticePoint>,
    index: HashMap<LatticePoint, usize>,
    generator: Generator,
}

/// A bijection `{1, 2, ...} -> Z^d` generated lazily. The inverse map is
/// memoized behind a mutex, so an enumeration can be shared between threads.
#[derive(Debug)]
pub struct Enumeration {
    dim: usize,
    labelling: Labelling,
    state: Mutex<State>,
}

/// Points of `Z^d` with `|x|_1 = r`, in lexicographic order.
pub fn l1_sphere(dim: usize, r: i64) -> Vec<LatticePoint> {
    fn rec(dim: usize, r: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if dim == 1 {
            for v in if r == 0 { vec![0] } else { vec![-r, r] } {
                prefix.push(v);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for v in -r..=r {
            prefix.push(v);
            rec(dim - 1, r - v.abs(), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, r, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().map(LatticePoint::new).collect()
}

impl Enumeration {
    pub fn new(labelling: Labelling, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(domain("dimension must be positive"));
        }
        let generator = match labelling {
            Labelling::Spiral if dim != 2 => return Err(domain(format!("the spiral labelling needs d = 2, got {dim}"))),
            Labelling::Spiral => Generator::Spiral { pos: (0, 0), dir: 0, leg: 1, left: 1, legs_at_len: 0 },
            Labelling::WangWang if dim == 2 => {
                Generator::WangWang { discovered: HashSet::from([(0, 0)]), batches: VecDeque::from([vec![(0, 0)]]) }
            }
            Labelling::WangWang | Labelling::L1Lex => Generator::Shells { next_radius: 0 },
        };
        let state = State { points: Vec::new(), index: HashMap::new(), generator };
        Ok(Enumeration { dim, labelling, state: Mutex::new(state) })
    }

    pub fn spiral() -> Self {
        Self::new(Labelling::Spiral, 2).expect("d = 2")
    }

    pub fn wang_wang(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(domain(format!("the Wang-Wang labelling needs d >= 2, got {dim}")));
        }
        Self::new(Labelling::WangWang, dim)
    }

    pub fn l1_lex(dim: usize) -> Result<Self> {
        Self::new(Labelling::L1Lex, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labelling(&self) -> Labelling {
        self.labelling
    }

    /// Smaller `l^1` norm always gets the smaller label.
    pub fn respects_l1(&self) -> bool {
        self.labelling != Labelling::Spiral
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, State> {
        self.state.lock().unwrap_or_else(|e| e.into_inner())
    }

    fn ensure(state: &mut State, n: usize) {
        while state.points.len() < n {
            let batch = Self::step(&mut state.generator, state.points.len());
            for p in batch {
                state.index.insert(p.clone(), state.points.len() + 1);
                state.points.push(p);
            }
        }
    }

    fn step(generator: &mut Generator, produced: usize) -> Vec<LatticePoint> {
        match generator {
            Generator::Spiral { pos, dir, leg, left, legs_at_len } => {
                let out = LatticePoint::new(vec![pos.0, pos.1]);
                const DIRS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
                pos.0 += DIRS[*dir].0;
                pos.1 += DIRS[*dir].1;
                *left -= 1;
                if *left == 0 {
                    *dir = (*dir + 1) % 4;
                    *legs_at_len += 1;
                    if *legs_at_len == 2 {
                        *legs_at_len = 0;
                        *leg += 1;
                    }
                    *left = *leg;
                }
                vec![out]
            }
            Generator::WangWang { discovered, batches } => {
                let head = batches.front_mut().expect("boundary queue never empties");
                let pick = if produced < WANG_WANG_SEED.len() {
                    let v = WANG_WANG_SEED[produced];
                    head.iter().position(|c| *c == v).expect("seed order is consistent with discovery")
                } else {
                    let key = |c: &(i64, i64)| {
                        let fresh = neighbors2(*c).iter().filter(|q| !discovered.contains(q)).count();
                        (fresh, c.0.abs() + c.1.abs(), clockwise_angle(*c))
                    };
                    (0..head.len())
                        .min_by(|&a, &b| key(&head[a]).partial_cmp(&key(&head[b])).expect("finite keys"))
                        .expect("nonempty batch")
                };
                let v = head.remove(pick);
                if head.is_empty() {
                    batches.pop_front();
                }
                let fresh: Vec<(i64, i64)> = neighbors2(v).into_iter().filter(|q| !discovered.contains(q)).collect();
                discovered.extend(fresh.iter().copied());
                if !fresh.is_empty() {
                    batches.push_back(fresh);
                }
                vec![LatticePoint::new(vec![v.0, v.1])]
            }
            Generator::Shells { .. } => unreachable!("handled by shell_step"),
        }
    }

    fn fill(&self, state: &mut State, n: usize) {
        if let Generator::Shells { next_radius } = &mut state.generator {
            while state.points.len() < n {
                for p in l1_sphere(self.dim, *next_radius) {
                    state.index.insert(p.clone(), state.points.len() + 1);
                    state.points.push(p);
                }
                *next_radius += 1;
            }
        } else {
            Self::ensure(state, n);
        }
    }

    /// The point with label `label >= 1`.
    pub fn point(&self, label: usize) -> Result<LatticePoint> {
        if label == 0 {
            return Err(domain("labels start at 1"));
        }
        let mut state = self.lock();
        self.fill(&mut state, label);
        Ok(state.points[label - 1].clone())
    }

    /// `v_1, ..., v_n`.
    pub fn prefix(&self, n: usize) -> Vec<LatticePoint> {
        let mut state = self.lock();
        self.fill(&mut state, n);
        state.points[..n].to_vec()
    }

    /// Label of `p`, generating as far as needed.
    pub fn label(&self, p: &LatticePoint) -> Result<usize> {
        if p.dim() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: p.dim() });
        }
        let mut state = self.lock();
        // every point of l^inf norm r is labelled within the first (2r + 3)^d
        // spiral labels, and within the closed l^1 ball of radius |p|_1 otherwise
        let r = p.l1().max(1) as usize;
        let mut target = state.points.len().max(64);
        loop {
            if let Some(&i) = state.index.get(p) {
                return Ok(i);
            }
            target *= 2;
            assert!(target < (2 * r + 3).pow(self.dim as u32) * 4 + 128, "labelling is not a bijection");
            self.fill(&mut state, target);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(vec![x, y])
    }

    #[test]
    fn spiral_labels() {
        let e = Enumeration::spiral();
        let expect = [(1, (0, 0)), (2, (1, 0)), (3, (1, 1)), (4, (0, 1)), (9, (1, -1)), (10, (2, -1)), (13, (2, 2))];
        for (i, (x, y)) in expect {
            assert_eq!(e.point(i).unwrap(), pt(x, y));
        }
        for i in 1..=2000 {
            assert_eq!(e.label(&e.point(i).unwrap()).unwrap(), i);
        }
        assert!(Enumeration::new(Labelling::Spiral, 3).is_err());
    }

    #[test]
    fn wang_wang_labels() {
        let e = Enumeration::wang_wang(2).unwrap();
        assert_eq!(e.point(2).unwrap(), pt(0, 1));
        assert_eq!(e.point(6).unwrap(), pt(1, 1));
        assert_eq!(e.point(13).unwrap(), pt(0, -2));
        // layer by layer
        for k in 0..20i64 {
            let n = (2 * k * (k + 1) + 1) as usize;
            assert!(e.prefix(n).iter().all(|p| p.l1() <= k));
        }
    }

    #[test]
    fn l1_lex_shells() {
        let e = Enumeration::l1_lex(3).unwrap();
        assert_eq!(e.point(1).unwrap(), LatticePoint::new(vec![0, 0, 0]));
        assert_eq!(e.point(2).unwrap(), LatticePoint::new(vec![-1, 0, 0]));
        assert_eq!(l1_sphere(3, 2).len(), 18);
        let p = e.prefix(500);
        assert!(p.windows(2).all(|w| w[0].l1() <= w[1].l1()));
        assert_eq!(e.label(&p[321]).unwrap(), 322);
        assert!("zigzag".parse::<Labelling>().is_err());
    }
}
