//! Representations of a bound quiver over `F_p`.

use super::linalg::{Field, Matrix, Subspace};

/// Vertices are `0..vertices`; arrow `k` goes from `arrows[k].0` to `arrows[k].1`.
/// A relation is a path, listed as arrows in the order they are traversed,
/// that must act as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    pub relations: Vec<Vec<usize>>,
}

/// One vector space per vertex and one matrix per arrow; the matrix of
/// `s -> t` has shape `dims[t] x dims[s]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Rep {
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        assert_eq!(dims.len(), q.vertices);
        assert_eq!(maps.len(), q.arrows.len());
        for (m, &(s, t)) in maps.iter().zip(&q.arrows) {
            assert_eq!((m.rows(), m.cols()), (dims[t], dims[s]), "arrow shape");
        }
        Rep { dims, maps }
    }

    pub fn zero(q: &Quiver) -> Self {
        Rep::new(
            q,
            vec![0; q.vertices],
            q.arrows.iter().map(|_| Matrix::zeros(0, 0)).collect(),
        )
    }

    /// Thin representation: one dimension on each listed vertex and identity
    /// `1 x 1` blocks on the listed arrows.
    pub fn thin(q: &Quiver, support: &[usize], active: &[usize]) -> Self {
        let dims: Vec<usize> = (0..q.vertices)
            .map(|v| usize::from(support.contains(&v)))
            .collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Matrix::zeros(dims[t], dims[s]);
                if active.contains(&k) {
                    assert!(dims[s] == 1 && dims[t] == 1, "active arrow outside support");
                    m.set(0, 0, 1);
                }
                m
            })
            .collect();
        Rep::new(q, dims, maps)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn direct_sum(&self, other: &Rep, q: &Quiver) -> Rep {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let (a, b) = (&self.maps[k], &other.maps[k]);
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c));
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(a.rows() + r, a.cols() + c, b.get(r, c));
                    }
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    pub fn satisfies_relations(&self, q: &Quiver, f: Field) -> bool {
        q.relations.iter().all(|path| {
            let start = q.arrows[path[0]].0;
            let mut acc = Matrix::identity(self.dims[start]);
            for &a in path {
                acc = self.maps[a].mul(&acc, f);
            }
            acc.is_zero()
        })
    }

    /// `true` iff every arrow maps `subs[s]` into `subs[t]`.
    pub fn is_stable(&self, q: &Quiver, subs: &[Subspace], f: Field) -> bool {
        q.arrows
            .iter()
            .enumerate()
            .all(|(k, &(s, t))| self.arrow_preserves(k, s, t, subs, f))
    }

    fn arrow_preserves(&self, k: usize, s: usize, t: usize, subs: &[Subspace], f: Field) -> bool {
        subs[s]
            .basis()
            .iter()
            .all(|b| subs[t].contains(&self.maps[k].apply(b, f), f))
    }

    /// The subrepresentation on a stable subspace tuple, in echelon coordinates.
    pub fn restrict(&self, q: &Quiver, subs: &[Subspace], f: Field) -> Rep {
        let dims: Vec<usize> = subs.iter().map(Subspace::dim).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for (c, b) in subs[s].basis().iter().enumerate() {
                    let image = self.maps[k].apply(b, f);
                    for (r, x) in subs[t].coordinates(&image).into_iter().enumerate() {
                        m.set(r, c, x);
                    }
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    /// The quotient by a stable subspace tuple, in complement coordinates.
    pub fn quotient(&self, q: &Quiver, subs: &[Subspace], f: Field) -> Rep {
        let dims: Vec<usize> = subs.iter().map(|s| s.ambient() - s.dim()).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for (c, pos) in subs[s].complement_positions().into_iter().enumerate() {
                    let mut e = vec![0u8; self.dims[s]];
                    e[pos] = 1;
                    let image = self.maps[k].apply(&e, f);
                    for (r, x) in subs[t].quotient_coordinates(&image, f).into_iter().enumerate() {
                        m.set(r, c, x);
                    }
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    /// Every subrepresentation, as stable tuples of per-vertex subspaces.
    pub fn subreps(&self, q: &Quiver, f: Field, cache: &mut SubspaceCache) -> Vec<Vec<Subspace>> {
        for &d in &self.dims {
            cache.prepare(d, f);
        }
        let cache = &*cache;
        let lists: Vec<&[Subspace]> = self.dims.iter().map(|&d| cache.get(d, f)).collect();
        let mut out = Vec::new();
        let mut chosen: Vec<Subspace> = Vec::with_capacity(q.vertices);
        self.extend_subreps(q, f, &lists, &mut chosen, &mut out);
        out
    }

    fn extend_subreps(
        &self,
        q: &Quiver,
        f: Field,
        lists: &[&[Subspace]],
        chosen: &mut Vec<Subspace>,
        out: &mut Vec<Vec<Subspace>>,
    ) {
        let v = chosen.len();
        if v == q.vertices {
            out.push(chosen.clone());
            return;
        }
        for candidate in lists[v] {
            chosen.push(candidate.clone());
            // arrows whose endpoints are both decided and one of them is v
            let ok = q.arrows.iter().enumerate().all(|(k, &(s, t))| {
                s > v || t > v || (s != v && t != v) || self.arrow_preserves(k, s, t, chosen, f)
            });
            if ok {
                self.extend_subreps(q, f, lists, chosen, out);
            }
            chosen.pop();
        }
    }
}

/// Memoized lists of all subspaces of `F_p^d`.
#[derive(Default)]
pub struct SubspaceCache {
    lists: std::collections::HashMap<(u8, usize), Vec<Subspace>>,
}

impl SubspaceCache {
    pub fn prepare(&mut self, d: usize, f: Field) {
        self.lists
            .entry((f.p(), d))
            .or_insert_with(|| Subspace::all(d, f));
    }

    /// Panics unless [`SubspaceCache::prepare`] ran for `(d, f)`.
    pub fn get(&self, d: usize, f: Field) -> &[Subspace] {
        &self.lists[&(f.p(), d)]
    }
}

/// A linear map between representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism(pub Vec<Matrix>);

impl Morphism {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Matrix::is_zero)
    }

    pub fn kernel(&self, f: Field) -> Vec<Subspace> {
        self.0
            .iter()
            .map(|m| Subspace::span(m.cols(), &m.nullspace(f), f))
            .collect()
    }

    pub fn image(&self, f: Field) -> Vec<Subspace> {
        self.0
            .iter()
            .map(|m| {
                let cols: Vec<Vec<u8>> = (0..m.cols()).map(|c| m.column(c)).collect();
                Subspace::span(m.rows(), &cols, f)
            })
            .collect()
    }

    pub fn is_injective(&self, f: Field) -> bool {
        self.0.iter().all(|m| m.rank(f) == m.cols())
    }

    pub fn is_iso(&self, f: Field) -> bool {
        self.0.iter().all(|m| m.is_invertible(f))
    }
}

/// Basis of `Hom(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    basis: Vec<Morphism>,
    field: Field,
}

impl HomSpace {
    pub fn compute(q: &Quiver, x: &Rep, y: &Rep, f: Field) -> HomSpace {
        // unknown (v, r, c) is entry (r, c) of the block at vertex v
        let mut offset = Vec::with_capacity(q.vertices);
        let mut n = 0;
        for v in 0..q.vertices {
            offset.push(n);
            n += y.dims[v] * x.dims[v];
        }
        let var = |v: usize, r: usize, c: usize| offset[v] + r * x.dims[v] + c;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for (k, &(s, t)) in q.arrows.iter().enumerate() {
            let (xa, ya) = (&x.maps[k], &y.maps[k]);
            // (Y_a phi_s - phi_t X_a)[r][c] = 0
            for r in 0..y.dims[t] {
                for c in 0..x.dims[s] {
                    let mut eq = vec![0u8; n];
                    for m in 0..y.dims[s] {
                        let i = var(s, m, c);
                        eq[i] = f.add(eq[i], ya.get(r, m));
                    }
                    for m in 0..x.dims[t] {
                        let i = var(t, r, m);
                        eq[i] = f.sub(eq[i], xa.get(m, c));
                    }
                    rows.push(eq);
                }
            }
        }
        let solutions = if rows.is_empty() {
            (0..n)
                .map(|i| {
                    let mut e = vec![0u8; n];
                    e[i] = 1;
                    e
                })
                .collect()
        } else {
            let flat: Vec<u8> = rows.iter().flatten().copied().collect();
            Matrix::from_rows(rows.len(), n, &flat).nullspace(f)
        };
        let basis = solutions
            .into_iter()
            .map(|sol| {
                Morphism(
                    (0..q.vertices)
                        .map(|v| {
                            let (r, c) = (y.dims[v], x.dims[v]);
                            Matrix::from_rows(r, c, &sol[offset[v]..offset[v] + r * c])
                        })
                        .collect(),
                )
            })
            .collect();
        HomSpace { basis, field: f }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    pub fn combination(&self, coeffs: &[u8]) -> Morphism {
        let f = self.field;
        let first = &self.basis[0];
        let mut blocks: Vec<Matrix> = first
            .0
            .iter()
            .map(|m| Matrix::zeros(m.rows(), m.cols()))
            .collect();
        for (b, &c) in self.basis.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (acc, m) in blocks.iter_mut().zip(&b.0) {
                *acc = acc.add_scaled(m, c, f);
            }
        }
        Morphism(blocks)
    }

    /// Every element, `p^dim` of them. The zero map comes first.
    pub fn elements(&self, zero: Morphism) -> impl Iterator<Item = Morphism> + '_ {
        let zero_first = std::iter::once(zero);
        let rest = self
            .field
            .vectors(self.basis.len())
            .skip(1)
            .map(move |c| self.combination(&c));
        zero_first.chain(rest)
    }
}

/// The zero morphism `X -> Y`.
pub fn zero_morphism(x: &Rep, y: &Rep) -> Morphism {
    Morphism(
        x.dims
            .iter()
            .zip(&y.dims)
            .map(|(&dx, &dy)| Matrix::zeros(dy, dx))
            .collect(),
    )
}

/// Exhaustive search for an isomorphism; exponential, meant for audits.
pub fn are_isomorphic(q: &Quiver, x: &Rep, y: &Rep, f: Field) -> bool {
    if x.dims != y.dims {
        return false;
    }
    let hom = HomSpace::compute(q, x, y, f);
    if hom.dim() == 0 {
        return x.total_dim() == 0;
    }
    let found = hom.elements(zero_morphism(x, y)).any(|m| m.is_iso(f));
    found
}
