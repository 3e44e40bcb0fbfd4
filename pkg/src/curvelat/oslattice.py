r"""
Matroids, the subset complex with its weighted boundary operators, and
the two homology theories built from them: the plain degree-zero part,
whose ranks match the coefficients of the arrangement polynomial, and
the U-extended complex, whose homology matches the projective
arrangement polynomial in negated degrees.

All homology is computed over the integers; torsion is reported, never
discarded.
"""

from itertools import combinations

from .errors import ConsistencyError
from .exactalg import rank_rational, smith_normal_form


class Matroid:
    r"""
    Rank function on the subsets of {0, .., n-1}, stored per bitmask.

    The constructor checks the rank axioms: empty set at zero, unit
    monotone growth, and submodularity.
    """

    def __init__(self, n, rank):
        self.n = n
        self.rank = dict(rank)
        if self.rank.get(0, None) != 0:
            raise ValueError("rank of the empty set must be 0")
        for mask in range(1 << n):
            if mask not in self.rank:
                raise ValueError("rank missing for subset %d" % mask)
        for mask in range(1 << n):
            for i in range(n):
                if mask >> i & 1:
                    continue
                grown = self.rank[mask | 1 << i] - self.rank[mask]
                if grown not in (0, 1):
                    raise ValueError("rank must grow by 0 or 1")
                for j in range(i + 1, n):
                    if mask >> j & 1:
                        continue
                    lhs = (self.rank[mask | 1 << i | 1 << j]
                           + self.rank[mask])
                    rhs = (self.rank[mask | 1 << i]
                           + self.rank[mask | 1 << j])
                    if lhs > rhs:
                        raise ValueError("rank is not submodular")

    @classmethod
    def boolean(cls, n):
        r"""Free matroid: every subset is independent."""
        return cls(n, {m: bin(m).count("1") for m in range(1 << n)})

    @classmethod
    def uniform(cls, n, r):
        r"""Uniform matroid: rank is cardinality capped at r."""
        return cls(n, {m: min(bin(m).count("1"), r) for m in range(1 << n)})

    @classmethod
    def generic_lines(cls, n):
        r"""n lines in general position through one point of a plane."""
        return cls.uniform(n, min(n, 2))

    @classmethod
    def from_local_matroid(cls, table, v):
        r"""Wrap the local rank function of a Hilbert table at v."""
        from .hilbert import local_matroid

        rank = local_matroid(table, v)
        return cls(len(v), rank)

    def subset_rank(self, elements):
        mask = 0
        for e in elements:
            mask |= 1 << e
        return self.rank[mask]

    def full_rank(self):
        return self.rank[(1 << self.n) - 1]

    def is_independent(self, mask):
        return self.rank[mask] == bin(mask).count("1")


class GradedGroup:
    r"""
    Finitely generated abelian group per integer degree: a rank and a
    tuple of torsion divisors larger than 1.
    """

    def __init__(self, groups):
        self.groups = {}
        for q, (rank, torsion) in groups.items():
            torsion = tuple(t for t in torsion if t > 1)
            if rank or torsion:
                self.groups[q] = (rank, torsion)

    def rank(self, q):
        return self.groups.get(q, (0, ()))[0]

    def torsion(self, q):
        return self.groups.get(q, (0, ()))[1]

    def degrees(self):
        return sorted(self.groups)

    def total_rank(self):
        return sum(rank for rank, _ in self.groups.values())

    def __eq__(self, other):
        return isinstance(other, GradedGroup) and self.groups == other.groups

    def __repr__(self):
        return "GradedGroup(%r)" % (self.groups,)


def _mask_elements(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _subsets_of_size(n, k):
    return [sum(1 << i for i in c) for c in combinations(range(n), k)]


class OSComplex:
    r"""
    The subset complex of a matroid: one generator per subset, graded
    by cardinality, with the boundary weighted by rank drops.

    Removing the i-th smallest element of K carries sign (-1)^(i-1)
    and U-weight rank(K) - rank(K minus that element); the weight-0
    part and the weight-1 part of the boundary are exposed separately.
    """

    def __init__(self, matroid):
        self.matroid = matroid
        self.n = matroid.n

    def basis(self, k):
        r"""Subsets of size k as bitmasks, ascending."""
        if k < 0 or k > self.n:
            return []
        return _subsets_of_size(self.n, k)

    def _boundary(self, k, keep):
        # keep(drop) selects terms by their rank drop (0 or 1)
        rows = self.basis(k - 1)
        cols = self.basis(k)
        index = {m: i for i, m in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for c, mask in enumerate(cols):
            elements = _mask_elements(mask)
            for pos, e in enumerate(elements):
                smaller = mask & ~(1 << e)
                drop = self.matroid.rank[mask] - self.matroid.rank[smaller]
                if keep(drop):
                    sign = 1 if pos % 2 == 0 else -1
                    mat[index[smaller]][c] += sign
        return mat

    def boundary_full(self, k):
        r"""Unweighted boundary from size k to size k-1."""
        return self._boundary(k, lambda drop: True)

    def boundary_d0(self, k):
        r"""Rank-preserving part of the weighted boundary."""
        return self._boundary(k, lambda drop: drop == 0)

    def boundary_d1(self, k):
        r"""Rank-dropping part of the weighted boundary."""
        return self._boundary(k, lambda drop: drop == 1)


def homology_from_boundaries(dims, boundaries):
    r"""
    Integer homology of a chain complex.

    Parameters
    ----------
    dims : dict mapping degree q to the dimension of the chain group
    boundaries : dict mapping degree q to the matrix of the boundary
        from degree q into degree q-1 (rows indexed by degree q-1)

    Returns
    -------
    GradedGroup
    """
    ranks = {}
    torsions = {}
    for q, mat in boundaries.items():
        if mat and mat[0]:
            snf = smith_normal_form(mat)
            ranks[q] = snf.rank
            torsions[q] = tuple(d for d in snf.divisors if d > 1)
        else:
            ranks[q] = 0
            torsions[q] = ()
    groups = {}
    for q, dim in dims.items():
        free = dim - ranks.get(q, 0) - ranks.get(q + 1, 0)
        tor = torsions.get(q + 1, ())
        if free < 0:
            raise ConsistencyError("negative free rank in homology")
        groups[q] = (free, tor)
    return GradedGroup(groups)


def arrangement_poincare(matroid):
    r"""
    Topological polynomial of the arrangement: sum over subsets K of
    (-1)^|K| (-t)^rank(K), as a tuple of coefficients by degree.
    """
    coeffs = [0] * (matroid.full_rank() + 1)
    for mask in range(1 << matroid.n):
        size = bin(mask).count("1")
        rk = matroid.rank[mask]
        coeffs[rk] += (-1) ** size * (-1) ** rk
    return tuple(coeffs)


def projective_poincare(matroid):
    r"""
    The arrangement polynomial divided by 1 + t; the division must be
    exact, otherwise ConsistencyError is raised.
    """
    coeffs = list(arrangement_poincare(matroid))
    quotient = []
    carry = 0
    for c in coeffs:
        quotient.append(c - carry)
        carry = quotient[-1]
    if quotient[-1] != 0:
        raise ConsistencyError("arrangement polynomial not divisible "
                               "by 1 + t")
    return tuple(quotient[:-1])


def os_homology(matroid):
    r"""
    Integer homology of the subset complex under the rank-preserving
    boundary, graded by subset size.

    The ranks agree with the coefficients of the arrangement
    polynomial; torsion, if any appeared, would be reported.
    """
    cx = OSComplex(matroid)
    dims = {k: len(cx.basis(k)) for k in range(matroid.n + 1)}
    boundaries = {k: cx.boundary_d0(k) for k in range(matroid.n + 2)}
    return homology_from_boundaries(dims, boundaries)


def _du_basis_and_boundaries(matroid, n_trunc):
    # basis element: (mask, m) = U^m z_K, degree |K| - 2(m + rank K)
    by_degree = {}
    for mask in range(1 << matroid.n):
        size = bin(mask).count("1")
        rk = matroid.rank[mask]
        for m in range(n_trunc):
            q = size - 2 * (m + rk)
            by_degree.setdefault(q, []).append((size, mask, m))
    for q in by_degree:
        by_degree[q].sort()
    boundaries = {}
    for q, cols in by_degree.items():
        rows = by_degree.get(q - 1, [])
        index = {key: i for i, key in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for c, (size, mask, m) in enumerate(cols):
            elements = _mask_elements(mask)
            for pos, e in enumerate(elements):
                smaller = mask & ~(1 << e)
                drop = matroid.rank[mask] - matroid.rank[smaller]
                m2 = m + drop
                if m2 >= n_trunc:
                    continue
                sign = 1 if pos % 2 == 0 else -1
                key = (size - 1, smaller, m2)
                mat[index[key]][c] += sign
        boundaries[q] = mat
    dims = {q: len(v) for q, v in by_degree.items()}
    return dims, boundaries


def du_homology(matroid, u_truncation=None):
    r"""
    Integer homology of the U-extended complex, graded by
    |K| - 2(m + rank K) for the basis element U^m z_K.

    U is truncated internally at max(u_truncation, 2n + 6), far enough
    that every reported degree, -(2n + 4) and above, is exact; the
    computation is repeated with two more U powers and any difference
    in the reported window raises ConsistencyError.

    Parameters
    ----------
    matroid : Matroid
    u_truncation : int, optional
        Requested truncation, at least n + 2 when given.

    Returns
    -------
    GradedGroup
    """
    n = matroid.n
    if u_truncation is not None and u_truncation < n + 2:
        raise ValueError("u_truncation must be at least n + 2")
    floor = -(2 * n + 4)
    n_trunc = max(u_truncation or 0, 2 * n + 6)

    def run(nt):
        dims, boundaries = _du_basis_and_boundaries(matroid, nt)
        full = homology_from_boundaries(dims, boundaries)
        return GradedGroup({q: grp for q, grp in full.groups.items()
                            if q >= floor})

    first = run(n_trunc)
    second = run(n_trunc + 2)
    if first != second:
        raise ConsistencyError(
            "U-truncated homology changed between truncations %d and %d"
            % (n_trunc, n_trunc + 2))
    return first


def _span_rank(vectors):
    return rank_rational(vectors) if vectors else 0


def d0_structure_checks(matroid):
    r"""
    Verify, degree by degree over the rationals, the structural facts
    that make the rank-preserving boundary compute arrangement
    homology:

    - the rank-preserving boundary kills independent-set generators;
    - the rank-dropping boundary maps dependent-set spans into
      dependent-set spans;
    - the kernel of the rank-preserving boundary is spanned by
      independent generators together with its image;
    - that image splits into its intersections with the dependent and
      independent spans;
    - the quotient dimensions match the arrangement polynomial.

    Returns True, or raises ConsistencyError.  Guarded to n <= 8.
    """
    n = matroid.n
    if n > 8:
        raise ValueError("structure checks are limited to 8 elements")
    cx = OSComplex(matroid)
    poincare = arrangement_poincare(matroid)
    for k in range(n + 1):
        basis = cx.basis(k)
        dim = len(basis)
        dep_rows = [i for i, m in enumerate(basis)
                    if not matroid.is_independent(m)]
        indep_rows = [i for i, m in enumerate(basis)
                      if matroid.is_independent(m)]

        def unit(i):
            row = [0] * dim
            row[i] = 1
            return row

        d0 = cx.boundary_d0(k + 1)
        dfull = cx.boundary_full(k + 1)
        cols_above = len(cx.basis(k + 1))
        image_d0 = [[d0[i][c] for i in range(dim)]
                    for c in range(cols_above)] if dim else []

        # rank-preserving boundary vanishes on independent generators
        out = cx.boundary_d0(k)
        for i, mask in enumerate(basis):
            if matroid.is_independent(mask):
                if any(row[i] for row in out):
                    raise ConsistencyError(
                        "weight-0 boundary does not kill an "
                        "independent generator")

        # rank-dropping boundary keeps dependent spans dependent
        below = cx.basis(k - 1) if k else []
        out1 = cx.boundary_d1(k)
        for i, mask in enumerate(basis):
            if not matroid.is_independent(mask):
                for rpos, rmask in enumerate(below):
                    if out1[rpos][i] and matroid.is_independent(rmask):
                        raise ConsistencyError(
                            "weight-1 boundary leaks a dependent "
                            "generator into the independent span")

        # kernel of d0 equals independent span plus image of d0
        kernel_dim = dim - _span_rank_cols(out)
        indep_vectors = [unit(i) for i in indep_rows]
        joint = indep_vectors + image_d0
        if _span_rank(joint) != kernel_dim:
            raise ConsistencyError(
                "kernel of the weight-0 boundary is not independent "
                "span plus image in degree %d" % k)

        # image splits across the dependent and independent spans
        dim_image = _span_rank(image_d0)
        dep_vectors = [unit(i) for i in dep_rows]
        inter_dep = (dim_image + len(dep_rows)
                     - _span_rank(image_d0 + dep_vectors))
        inter_indep = (dim_image + len(indep_rows)
                       - _span_rank(image_d0 + indep_vectors))
        if inter_dep + inter_indep != dim_image:
            raise ConsistencyError(
                "image of the weight-0 boundary does not split in "
                "degree %d" % k)

        # quotient by dependent span plus full boundary of it matches
        # the arrangement polynomial coefficient
        dep_above = [c for c, m in enumerate(cx.basis(k + 1))
                     if not matroid.is_independent(m)]
        ideal = list(dep_vectors)
        for c in dep_above:
            ideal.append([dfull[i][c] for i in range(dim)])
        expected = poincare[k] if k < len(poincare) else 0
        if dim - _span_rank(ideal) != expected:
            raise ConsistencyError(
                "ideal quotient dimension disagrees with the "
                "arrangement polynomial in degree %d" % k)
    return True


def _span_rank_cols(mat):
    if not mat or not mat[0]:
        return 0
    return rank_rational(mat)
