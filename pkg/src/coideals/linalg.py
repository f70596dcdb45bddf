"""Exact linear algebra over QQ and GF(p).

Conventions used by the whole package:

* A LinMap with shape (rows, cols) sends k^cols -> k^rows, acting on column
  vectors; vectors are plain tuples of scalars.
* Tensor legs are flattened index-major: the basis vector e_i (x) e_j of
  V (x) W sits at position i*dim(W) + j.  Both unitors and the associator
  are then literal identities, and tensor_of_maps is the Kronecker product
  with row index i*rows_g + i2, column index j*cols_g + j2.
* A linear map f: V -> W, seen as a vector (for Hom-space computations),
  is flattened entry-major: entry (r, c) sits at position r*cols + c.
* Subspaces are stored in reduced row echelon form with unit pivots and
  rows ordered by pivot column; two subspaces are equal iff their stored
  bases are identical.

Storage of a LinMap is sparse (dict keyed by (row, col), no zeros kept)
until density exceeds 1/2, then a dense row-major list of lists.  All
operations go through representation-agnostic accessors, so both storages
produce identical canonical outputs.
"""

from __future__ import annotations

from random import Random

from .fields import Field, same_field


class DimensionMismatchError(ValueError):
    pass


class LinMap:
    """Exact matrix k^cols -> k^rows with automatic sparse/dense storage."""

    __slots__ = ("field", "rows", "cols", "_d", "_m")

    def __init__(self, field, rows, cols, entries):
        # entries: dict {(r, c): scalar}; zeros are dropped here
        self.field = field
        self.rows = rows
        self.cols = cols
        d = {k: v for k, v in entries.items() if v != field.zero}
        for r, c in d:
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatchError(f"entry {(r, c)} outside {rows}x{cols}")
        if rows * cols > 0 and len(d) * 2 > rows * cols:
            m = [[field.zero] * cols for _ in range(rows)]
            for (r, c), v in d.items():
                m[r][c] = v
            self._d = None
            self._m = m
        else:
            self._d = d
            self._m = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_entries(cls, field, rows, cols, triples):
        d = {}
        for r, c, v in triples:
            if (r, c) in d:
                raise ValueError(f"duplicate entry at {(r, c)}")
            d[(r, c)] = v
        return cls(field, rows, cols, d)

    @classmethod
    def from_rows(cls, field, mat):
        rows = len(mat)
        cols = len(mat[0]) if rows else 0
        d = {}
        for r, row in enumerate(mat):
            assert len(row) == cols
            for c, v in enumerate(row):
                if v != field.zero:
                    d[(r, c)] = v
        return cls(field, rows, cols, d)

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols, {})

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, {(i, i): field.one for i in range(n)})

    @classmethod
    def from_column(cls, field, vec):
        return cls(field, len(vec), 1, {(i, 0): v for i, v in enumerate(vec) if v != field.zero})

    @classmethod
    def from_row(cls, field, vec):
        return cls(field, 1, len(vec), {(0, j): v for j, v in enumerate(vec) if v != field.zero})

    # -- accessors ----------------------------------------------------

    def entry(self, r, c):
        if self._d is not None:
            return self._d.get((r, c), self.field.zero)
        return self._m[r][c]

    def entries(self):
        """Iterate ((r, c), v) over nonzero entries in row-major order."""
        if self._d is not None:
            for key in sorted(self._d):
                yield key, self._d[key]
        else:
            z = self.field.zero
            for r, row in enumerate(self._m):
                for c, v in enumerate(row):
                    if v != z:
                        yield (r, c), v

    def _dict(self):
        if self._d is not None:
            return self._d
        z = self.field.zero
        return {(r, c): v for r, row in enumerate(self._m) for c, v in enumerate(row) if v != z}

    def nnz(self):
        return len(self._dict())

    def is_zero(self):
        return self.nnz() == 0

    def dense_rows(self):
        z = self.field.zero
        m = [[z] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries():
            m[r][c] = v
        return m

    def row(self, r):
        z = self.field.zero
        out = [z] * self.cols
        if self._d is not None:
            for (rr, c), v in self._d.items():
                if rr == r:
                    out[c] = v
        else:
            out = list(self._m[r])
        return tuple(out)

    def column(self, c):
        return tuple(self.entry(r, c) for r in range(self.rows))

    # -- arithmetic ---------------------------------------------------

    def _binop(self, other, op):
        same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")
        d = dict(self._dict())
        f = self.field
        for k, v in other._dict().items():
            d[k] = op(d.get(k, f.zero), v)
        return LinMap(f, self.rows, self.cols, d)

    def __add__(self, other):
        return self._binop(other, self.field.add)

    def __sub__(self, other):
        return self._binop(other, self.field.sub)

    def __neg__(self):
        f = self.field
        return LinMap(f, self.rows, self.cols, {k: f.neg(v) for k, v in self._dict().items()})

    def scale(self, scalar):
        f = self.field
        if scalar == f.zero:
            return LinMap.zero(f, self.rows, self.cols)
        return LinMap(f, self.rows, self.cols, {k: f.mul(scalar, v) for k, v in self._dict().items()})

    def __matmul__(self, other):
        """Composition self o other (apply other first)."""
        same_field(self.field, other.field)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        f = self.field
        # index other's entries by row
        by_row = {}
        for (r, c), v in other._dict().items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in self._dict().items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                cur = out.get(key)
                prod = f.mul(v, w)
                out[key] = prod if cur is None else f.add(cur, prod)
        return LinMap(f, self.rows, other.cols, out)

    def apply(self, vec):
        if len(vec) != self.cols:
            raise DimensionMismatchError(f"apply {self.rows}x{self.cols} to vector of length {len(vec)}")
        f = self.field
        out = [f.zero] * self.rows
        for (r, c), v in self._dict().items():
            w = vec[c]
            if w != f.zero:
                out[r] = f.add(out[r], f.mul(v, w))
        return tuple(out)

    def transpose(self):
        return LinMap(self.field, self.cols, self.rows,
                      {(c, r): v for (r, c), v in self._dict().items()})

    def tensor(self, other):
        """Kronecker product; see the module docstring for index flattening."""
        same_field(self.field, other.field)
        f = self.field
        out = {}
        for (i, j), v in self._dict().items():
            for (i2, j2), w in other._dict().items():
                out[(i * other.rows + i2, j * other.cols + j2)] = f.mul(v, w)
        return LinMap(f, self.rows * other.rows, self.cols * other.cols, out)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self._dict() == other._dict())

    def __repr__(self):
        return f"LinMap({self.field}, {self.rows}x{self.cols}, nnz={self.nnz()})"


def tensor_of_maps(f, g):
    return f.tensor(g)


def swap_map(field, m, n):
    """The flip k^m (x) k^n -> k^n (x) k^m, e_i (x) e_j -> e_j (x) e_i."""
    return LinMap(field, n * m, m * n,
                  {(j * m + i, i * n + j): field.one for i in range(m) for j in range(n)})


def identity_map(field, n):
    return LinMap.identity(field, n)


def basis_vector(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


# -- row reduction ----------------------------------------------------


def rref(field, mat):
    """Reduced row echelon form of a list of row lists.

    Returns (rows, pivots): unit pivots, zeros above and below, rows ordered
    by pivot column, zero rows dropped.  Column scan is left-to-right and the
    first row with a nonzero entry is taken, so the output is deterministic.
    """
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    pr = 0
    for c in range(ncols):
        pivot_row = None
        for r in range(pr, nrows):
            if rows[r][c] != field.zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        pv = rows[pr][c]
        if pv != field.one:
            inv = field.inv(pv)
            rows[pr] = [field.mul(inv, x) for x in rows[pr]]
        for r in range(nrows):
            if r != pr and rows[r][c] != field.zero:
                factor = rows[r][c]
                prow = rows[pr]
                rows[r] = [field.sub(x, field.mul(factor, p)) for x, p in zip(rows[r], prow)]
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return [tuple(r) for r in rows[:pr]], tuple(pivots)


class Subspace:
    """Canonical subspace of k^ambient: RREF basis rows, equality is identity."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        vecs = list(vectors)
        for i, v in enumerate(vecs):
            if len(v) != ambient:
                raise DimensionMismatchError(
                    f"vector {i} has length {len(v)}, ambient is {ambient}")
        if not vecs:
            return cls(field, ambient, (), ())
        rows, pivots = rref(field, vecs)
        return cls(field, ambient, rows, pivots)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field, ambient):
        rows = [basis_vector(field, ambient, i) for i in range(ambient)]
        return cls(field, ambient, rows, tuple(range(ambient)))

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Residual of vec after killing its pivot coordinates (canonical coset rep)."""
        f = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            coeff = v[p]
            if coeff != f.zero:
                v = [f.sub(x, f.mul(coeff, r)) for x, r in zip(v, row)]
        return tuple(v)

    def coords(self, vec):
        """Coefficients of vec on the canonical basis, or None if not a member."""
        f = self.field
        v = list(vec)
        out = []
        for row, p in zip(self.rows, self.pivots):
            coeff = v[p]
            out.append(coeff)
            if coeff != f.zero:
                v = [f.sub(x, f.mul(coeff, r)) for x, r in zip(v, row)]
        if any(x != f.zero for x in v):
            return None
        return tuple(out)

    def contains(self, vec):
        return self.coords(vec) is not None

    def contains_subspace(self, other):
        return all(self.contains(r) for r in other.rows)

    def sum_with(self, other):
        same_field(self.field, other.field)
        assert self.ambient == other.ambient
        return Subspace.from_vectors(self.field, self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other):
        """Zassenhaus-free intersection: solve x*R1 = y*R2 via a kernel."""
        same_field(self.field, other.field)
        assert self.ambient == other.ambient
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        # columns of m: coefficients (x, y); rows: ambient conditions of x*R1 - y*R2 = 0
        f = self.field
        d1, d2 = self.dim, other.dim
        entries = {}
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                if v != f.zero:
                    entries[(j, i)] = v
        for i, r in enumerate(other.rows):
            for j, v in enumerate(r):
                if v != f.zero:
                    entries[(j, d1 + i)] = f.neg(v)
        m = LinMap(f, self.ambient, d1 + d2, entries)
        ker = kernel_of(m)
        vecs = []
        for coeffs in ker.rows:
            v = [f.zero] * self.ambient
            for i, r in enumerate(self.rows):
                if coeffs[i] != f.zero:
                    v = [f.add(x, f.mul(coeffs[i], y)) for x, y in zip(v, r)]
            vecs.append(tuple(v))
        return Subspace.from_vectors(f, self.ambient, vecs)

    def basis_map(self):
        """LinMap k^dim -> k^ambient whose columns are the canonical basis rows."""
        f = self.field
        entries = {}
        for j, row in enumerate(self.rows):
            for i, v in enumerate(row):
                if v != f.zero:
                    entries[(i, j)] = v
        return LinMap(f, self.ambient, self.dim, entries)

    def coords_map(self):
        """LinMap k^ambient -> k^dim: coordinates on the canonical basis.

        Only meaningful on members; on a general vector it reads off pivot
        coordinates (a retraction of basis_map).
        """
        f = self.field
        # coords are pivot coordinates of the RREF basis: coeff_i = v[pivot_i]
        # after eliminating previous pivots; since rows are RREF, reading the
        # pivot entries directly is exact for members.
        entries = {}
        for i, p in enumerate(self.pivots):
            entries[(i, p)] = f.one
        return LinMap(f, self.dim, self.ambient, entries)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.rows == other.rows)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient} over {self.field})"


def canonicalize_subspace(field, ambient, vectors):
    return Subspace.from_vectors(field, ambient, vectors)


def kernel_of(f):
    """Kernel of a LinMap as a canonical Subspace of k^cols."""
    field = f.field
    rows, pivots = rref(field, f.dense_rows()) if f.rows else ((), ())
    pivset = set(pivots)
    free = [c for c in range(f.cols) if c not in pivset]
    vecs = []
    for fc in free:
        v = [field.zero] * f.cols
        v[fc] = field.one
        for row, p in zip(rows, pivots):
            if row[fc] != field.zero:
                v[p] = field.neg(row[fc])
        vecs.append(tuple(v))
    return Subspace.from_vectors(field, f.cols, vecs)


def image_of(f):
    """Column span of a LinMap as a canonical Subspace of k^rows."""
    cols = [f.column(c) for c in range(f.cols)]
    return Subspace.from_vectors(f.field, f.rows, cols)


def rank(f):
    if f.rows == 0 or f.cols == 0:
        return 0
    _, pivots = rref(f.field, f.dense_rows())
    return len(pivots)


def solve(f, target):
    """One exact solution x of f x = target, or None if inconsistent."""
    field = f.field
    if len(target) != f.rows:
        raise DimensionMismatchError("target length != rows")
    aug = [list(r) + [t] for r, t in zip(f.dense_rows(), target)]
    if not aug:
        return tuple([field.zero] * f.cols)
    rows, pivots = rref(field, aug)
    x = [field.zero] * f.cols
    for row, p in zip(rows, pivots):
        if p == f.cols:
            return None  # pivot in augmented column: inconsistent
        x[p] = row[-1]
    return tuple(x)


def invert(f):
    """Exact inverse of a square LinMap, or None if singular."""
    if f.rows != f.cols:
        return None
    n = f.rows
    field = f.field
    aug = [list(r) + list(basis_vector(field, n, i)) for i, r in enumerate(f.dense_rows())]
    rows, pivots = rref(field, aug)
    if list(pivots) != list(range(n)):
        return None
    inv_rows = [r[n:] for r in rows]
    return LinMap.from_rows(field, inv_rows)


def is_invertible(f):
    return f.rows == f.cols and rank(f) == f.rows


def find_section(p, constraints=()):
    """Section s of a surjection p: V -> W with p o s = id_W, or None.

    constraints: iterable of (u, v) pairs of LinMaps, u: W -> W, v: V -> V,
    each imposing the intertwining condition s o u = v o s (this is how
    module-linearity of a splitting is phrased).  The first solution of the
    echelonized affine system is returned (free variables set to zero), so
    the output is deterministic.
    """
    field = p.field
    nV, nW = p.cols, p.rows
    nunk = nV * nW  # s entries, s[r][c] at r*nW + c

    def unk(r, c):
        return r * nW + c

    rows = []
    rhs = []
    pd = p._dict()
    # p o s = id_W
    for i in range(nW):
        for j in range(nW):
            row = [field.zero] * nunk
            for (ii, k), v in pd.items():
                if ii == i:
                    row[unk(k, j)] = field.add(row[unk(k, j)], v)
            rows.append(row)
            rhs.append(field.one if i == j else field.zero)
    # s o u = v o s
    for u, v in constraints:
        assert u.rows == u.cols == nW and v.rows == v.cols == nV
        ud, vd = u._dict(), v._dict()
        for r in range(nV):
            for c in range(nW):
                row = [field.zero] * nunk
                for (k, cc), uv in ud.items():
                    if cc == c:
                        row[unk(r, k)] = field.add(row[unk(r, k)], uv)
                for (rr, k), vv in vd.items():
                    if rr == r:
                        row[unk(k, c)] = field.sub(row[unk(k, c)], vv)
                if any(x != field.zero for x in row):
                    rows.append(row)
                    rhs.append(field.zero)
    aug = [r + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(field, aug)
    sol = [field.zero] * nunk
    for row, piv in zip(red, pivots):
        if piv == nunk:
            return None
        sol[piv] = row[-1]
    ent = {}
    for r in range(nV):
        for c in range(nW):
            v = sol[unk(r, c)]
            if v != field.zero:
                ent[(r, c)] = v
    s = LinMap(field, nV, nW, ent)
    assert (p @ s) == LinMap.identity(field, nW)
    return s


def stack_maps(maps):
    """Stack LinMaps vertically (same cols); rows are concatenated in order."""
    maps = list(maps)
    assert maps
    field = maps[0].field
    cols = maps[0].cols
    ent = {}
    off = 0
    for m in maps:
        same_field(field, m.field)
        assert m.cols == cols
        for (r, c), v in m.entries():
            ent[(off + r, c)] = v
        off += m.rows
    return LinMap(field, off, cols, ent)


def left_inverse(m):
    """R with R @ m = id (m injective), or None."""
    field = m.field
    mt = m.transpose()
    cols = []
    for i in range(m.cols):
        y = solve(mt, basis_vector(field, m.cols, i))
        if y is None:
            return None
        cols.append(y)
    ent = {}
    for i, y in enumerate(cols):
        for j, v in enumerate(y):
            if v != field.zero:
                ent[(i, j)] = v
    return LinMap(field, m.cols, m.rows, ent)


def induced_on_subspaces(f, dom, cod):
    """Matrix of f restricted to dom, expressed on cod's canonical basis.

    Returns None if some image falls outside cod (witnessing non-invariance).
    """
    field = f.field
    assert f.cols == dom.ambient and f.rows == cod.ambient
    cols = []
    for row in dom.rows:
        img = f.apply(row)
        coords = cod.coords(img)
        if coords is None:
            return None
        cols.append(coords)
    ent = {}
    for j, col in enumerate(cols):
        for i, v in enumerate(col):
            if v != field.zero:
                ent[(i, j)] = v
    return LinMap(field, cod.dim, dom.dim, ent)


# -- spaces of maps ----------------------------------------------------


def map_to_vec(f):
    """Flatten a LinMap entry-major: entry (r, c) -> position r*cols + c."""
    field = f.field
    out = [field.zero] * (f.rows * f.cols)
    for (r, c), v in f.entries():
        out[r * f.cols + c] = v
    return tuple(out)


def vec_to_map(field, rows, cols, vec):
    ent = {}
    for r in range(rows):
        for c in range(cols):
            v = vec[r * cols + c]
            if v != field.zero:
                ent[(r, c)] = v
    return LinMap(field, rows, cols, ent)


def matrix_of_operator(field, in_shape, out_shape, fn):
    """Materialize a linear operator on map spaces.

    fn takes a LinMap of shape in_shape=(rows, cols) and returns one of shape
    out_shape, linearly; the result is the matrix of fn on flattened maps.
    """
    ir, ic = in_shape
    orr, oc = out_shape
    ent = {}
    for r in range(ir):
        for c in range(ic):
            e = LinMap(field, ir, ic, {(r, c): field.one})
            img = fn(e)
            assert (img.rows, img.cols) == (orr, oc)
            col = r * ic + c
            for (rr, cc), v in img.entries():
                ent[(rr * oc + cc, col)] = v
    return LinMap(field, orr * oc, ir * ic, ent)


def subspace_basis_maps(space, rows, cols):
    """Read the rows of a Subspace of flattened maps back as LinMaps."""
    return [vec_to_map(space.field, rows, cols, r) for r in space.rows]


def contains_invertible(space, n, seed=0, tries=24):
    """Search a Subspace of flattened n x n maps for an invertible element.

    Deterministic: basis elements first, then seeded pseudo-random integer
    combinations, then (for very small bases) an exhaustive small-coefficient
    grid.  A returned witness is certain; None means none was found.
    """
    field = space.field
    assert space.ambient == n * n
    mats = subspace_basis_maps(space, n, n)
    if not mats:
        return None
    for m in mats:
        if is_invertible(m):
            return m
    rng = Random(seed)
    bound = max(4, n * n)
    for _ in range(tries):
        coeffs = [field.from_int(rng.randint(-bound, bound)) for _ in mats]
        cand = LinMap.zero(field, n, n)
        for c, m in zip(coeffs, mats):
            cand = cand + m.scale(c)
        if is_invertible(cand):
            return cand
    if len(mats) <= 4:
        from itertools import product
        for coeffs in product(range(-2, 3), repeat=len(mats)):
            cand = LinMap.zero(field, n, n)
            for c, m in zip(coeffs, mats):
                if c:
                    cand = cand + m.scale(field.from_int(c))
            if is_invertible(cand):
                return cand
    return None
