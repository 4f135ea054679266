//! Dihedral group arithmetic and the vertex codec.
//!
//! Every element of `D_N` is written in the normal form `τ^s σ^t` and stored
//! as the pair `(s, t)`, with `s ∈ {0, 1}` and `t ∈ Z_N`. Vertices of the
//! Cayley graph are labelled `v = s·N + t`, so rotations occupy `0..N` and
//! reflections `N..2N`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, WalkError};

/// Polygon order of the dihedral group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralParams {
    n: usize,
}

impl DihedralParams {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(WalkError::PolygonOrder(n));
        }
        Ok(Self { n })
    }

    /// Number of rotations (and of reflections).
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of group elements, `2N`.
    #[inline]
    pub fn order(&self) -> usize {
        2 * self.n
    }

    /// Reduces any integer into `[0, N)`.
    #[inline]
    pub fn wrap(&self, t: i64) -> usize {
        t.rem_euclid(self.n as i64) as usize
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { s: 0, t: 0 }
    }

    /// Group product `a · b`.
    ///
    /// `τ^{s1}σ^{t1} · τ^{s2}σ^{t2} = τ^{s1⊕s2} σ^{(−1)^{s2} t1 + t2}`, which
    /// follows from `σ^t τ = τ σ^{−t}`.
    pub fn multiply(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        let t1 = a.t as i64;
        let t = if b.s == 0 { t1 } else { -t1 } + b.t as i64;
        GroupElement {
            s: a.s ^ b.s,
            t: self.wrap(t),
        }
    }

    pub fn inverse(&self, g: GroupElement) -> GroupElement {
        if g.s == 0 {
            GroupElement {
                s: 0,
                t: self.wrap(-(g.t as i64)),
            }
        } else {
            g
        }
    }

    /// `g^e` for a non-negative exponent.
    pub fn pow(&self, g: GroupElement, e: usize) -> GroupElement {
        (0..e).fold(self.identity(), |acc, _| self.multiply(acc, g))
    }

    /// The group element a generator label stands for.
    pub fn generator_element(&self, gen: Generator) -> GroupElement {
        match gen {
            Generator::Rotation => GroupElement { s: 0, t: 1 },
            Generator::Identity => GroupElement { s: 0, t: 0 },
            Generator::Reflection => GroupElement { s: 1, t: 0 },
        }
    }

    /// Moves `g` along one edge of the Cayley graph: left multiplication by
    /// `σ`, `e` or `τ`.
    ///
    /// Rotation sends `(0,t) → (0,t+1)` and `(1,t) → (1,t−1)`; reflection
    /// flips the sheet and keeps `t`.
    pub fn apply_generator_left(&self, g: GroupElement, gen: Generator) -> GroupElement {
        match gen {
            Generator::Rotation => {
                let dt = if g.s == 0 { 1 } else { -1 };
                GroupElement {
                    s: g.s,
                    t: self.wrap(g.t as i64 + dt),
                }
            }
            Generator::Identity => g,
            Generator::Reflection => GroupElement { s: 1 - g.s, t: g.t },
        }
    }

    pub fn encode_vertex(&self, g: GroupElement) -> VertexIndex {
        VertexIndex(g.s as usize * self.n + g.t)
    }

    pub fn decode_vertex(&self, v: VertexIndex) -> Result<GroupElement> {
        if v.0 >= self.order() {
            return Err(WalkError::VertexOutOfRange {
                v: v.0,
                limit: self.order(),
            });
        }
        Ok(GroupElement {
            s: (v.0 / self.n) as u8,
            t: v.0 % self.n,
        })
    }

    /// Out-neighbours of `v` in the order rotation, identity, reflection.
    pub fn cayley_neighbors(&self, v: VertexIndex) -> Result<[(Generator, VertexIndex); 3]> {
        let g = self.decode_vertex(v)?;
        Ok(Generator::ALL.map(|gen| (gen, self.encode_vertex(self.apply_generator_left(g, gen)))))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |v| GroupElement {
            s: (v / self.n) as u8,
            t: v % self.n,
        })
    }
}

/// A dihedral element `τ^s σ^t`; also a Cayley-graph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    s: u8,
    t: usize,
}

impl GroupElement {
    pub fn new(s: u8, t: usize, p: &DihedralParams) -> Result<Self> {
        if s > 1 || t >= p.n() {
            return Err(WalkError::InvalidElement { s, t, n: p.n() });
        }
        Ok(Self { s, t })
    }

    /// Sheet: 0 for rotations, 1 for reflections.
    #[inline]
    pub fn s(&self) -> u8 {
        self.s
    }

    /// Position on the sheet, in `[0, N)`.
    #[inline]
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn is_reflection(&self) -> bool {
        self.s == 1
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.t)
    }
}

/// Canonical vertex label `s·N + t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexIndex(pub usize);

impl VertexIndex {
    #[inline]
    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Edge labels of the Cayley graph, one per coin basis state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    Rotation,
    Identity,
    Reflection,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::Rotation, Generator::Identity, Generator::Reflection];
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Rotation => "rotation",
            Generator::Identity => "identity",
            Generator::Reflection => "reflection",
        })
    }
}
