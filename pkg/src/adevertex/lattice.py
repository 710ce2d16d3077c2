"""A-D-E root lattices with oriented Dynkin diagrams and the asymmetry function.

Node numbering follows a linear chain with one extra node at the fork:

* A_n: chain 1 - 2 - ... - n.
* D_n: chain 1 - ... - (n-1) with node n attached to n-2.
* E_6: chain 1 - ... - 5 with node 6 attached to 3.
* E_7: chain 1 - ... - 6 with node 7 attached to 3.
* E_8: chain 1 - ... - 7 with node 8 attached to 5.

An orientation directs every edge; the asymmetry function nu is the unique
bimultiplicative sign function with nu(a_j, a_k) = -1 iff j = k or the edge
is directed k -> j.  Default orientations direct every chain edge from its
odd endpoint to its even endpoint, with the fork edges as listed below.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class AlgebraKind:
    series: str  # "A", "D" or "E"
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s == "A":
            ok = n >= 1
        elif s == "D":
            ok = n >= 3
        elif s == "E":
            ok = n in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise ValueError(f"no simply-laced algebra {s}{n}")

    def __str__(self):
        return f"{self.series}{self.rank}"

    @staticmethod
    def parse(text):
        text = text.strip()
        if len(text) < 2 or text[0] not in "ADE" or not text[1:].isdigit():
            raise ValueError(f"cannot parse algebra name {text!r}")
        return AlgebraKind(text[0], int(text[1:]))


def diagram_edges(kind):
    """Undirected edge set as a sorted tuple of (j, k) pairs, j < k, 1-based."""
    s, n = kind.series, kind.rank
    if s == "A":
        return tuple((j, j + 1) for j in range(1, n))
    if s == "D":
        return tuple((j, j + 1) for j in range(1, n - 1)) + ((n - 2, n),)
    fork = {6: 3, 7: 3, 8: 5}[n]
    return tuple((j, j + 1) for j in range(1, n - 1)) + ((fork, n),)


def default_orientation(kind):
    """The pictured orientation: a set of arrows (j, k) meaning a_j -> a_k."""
    s, n = kind.series, kind.rank
    arrows = set()
    chain_len = n if s == "A" else n - 1
    # A/D chains direct each edge odd -> even; E chains direct even -> odd.
    src_parity = 0 if s == "E" else 1
    for j in range(1, chain_len):
        arrows.add((j, j + 1) if j % 2 == src_parity else (j + 1, j))
    if s == "D":
        p = n - 2
        # D_even: the extra node points into the fork; D_odd: the fork points out.
        arrows.add((n, p) if n % 2 == 0 else (p, n))
    elif s == "E":
        fork = {6: 3, 7: 3, 8: 5}[n]
        arrows.add((n, fork))
    return frozenset(arrows)


def _cartan(kind):
    n = kind.rank
    m = [[0] * n for _ in range(n)]
    for j in range(n):
        m[j][j] = 2
    for j, k in diagram_edges(kind):
        m[j - 1][k - 1] = m[k - 1][j - 1] = -1
    return tuple(tuple(row) for row in m)


class RootLattice:
    """Root lattice of an A-D-E algebra together with a fixed diagram
    orientation and the induced table of asymmetry signs on simple roots."""

    def __init__(self, kind, orientation=None):
        if isinstance(kind, str):
            kind = AlgebraKind.parse(kind)
        self.kind = kind
        self.rank = kind.rank
        self.edges = diagram_edges(kind)
        if orientation is None:
            orientation = default_orientation(kind)
        orientation = frozenset(tuple(a) for a in orientation)
        edge_set = {frozenset(e) for e in self.edges}
        if {frozenset(a) for a in orientation} != edge_set or \
                len(orientation) != len(edge_set):
            raise ValueError("orientation must direct each diagram edge exactly once")
        self.orientation = orientation
        self.cartan = _cartan(kind)
        n = self.rank
        table = [[1] * n for _ in range(n)]
        for j in range(n):
            table[j][j] = -1
        for j, k in orientation:
            table[k - 1][j - 1] = -1  # arrow j -> k means nu(a_k, a_j) = -1
        self.nu_table = tuple(tuple(row) for row in table)
        # bitmask of l with nu(a_j, a_l) = -1, used for fast coset signs
        self.neg_mask = tuple(
            sum(1 << l for l in range(n) if table[j][l] == -1) for j in range(n)
        )
        self._roots = None

    def __repr__(self):
        return f"RootLattice({self.kind})"

    def inner(self, alpha, beta):
        """(alpha|beta) in the symmetric normalization (a_j|a_j) = 2."""
        c = self.cartan
        n = self.rank
        return sum(alpha[j] * c[j][k] * beta[k]
                   for j in range(n) for k in range(n) if alpha[j] and beta[k])

    def simple_root(self, j):
        """a_j as a coefficient vector, 1-based j."""
        v = [0] * self.rank
        v[j - 1] = 1
        return tuple(v)

    def roots(self):
        """The full root set {alpha : (alpha|alpha) = 2}, via reflection closure."""
        if self._roots is not None:
            return self._roots
        n = self.rank
        c = self.cartan
        seen = set()
        frontier = [self.simple_root(j) for j in range(1, n + 1)]
        seen.update(frontier)
        while frontier:
            nxt = []
            for alpha in frontier:
                pairing = [sum(alpha[k] * c[k][j] for k in range(n) if alpha[k])
                           for j in range(n)]
                for j in range(n):
                    refl = list(alpha)
                    refl[j] -= pairing[j]
                    refl = tuple(refl)
                    if refl not in seen:
                        seen.add(refl)
                        nxt.append(refl)
            frontier = nxt
        self._roots = frozenset(seen)
        return self._roots

    def coset_bits(self, alpha):
        """alpha mod 2Q as an n-bit integer (bit j-1 = coefficient of a_j mod 2)."""
        bits = 0
        for j, m in enumerate(alpha):
            if m & 1:
                bits |= 1 << j
        return bits

    def nu(self, alpha, beta):
        """The asymmetry sign nu(alpha, beta) in {+1, -1}."""
        flips = 0
        bbits = self.coset_bits(beta)
        for j, m in enumerate(alpha):
            if m & 1:
                flips += (self.neg_mask[j] & bbits).bit_count()
        return -1 if flips & 1 else 1

    def nu_bits(self, abits, bbits):
        """nu on cosets given directly as bitmasks."""
        flips = 0
        masks = self.neg_mask
        j = 0
        while abits >> j:
            if (abits >> j) & 1:
                flips += (masks[j] & bbits).bit_count()
            j += 1
        return -1 if flips & 1 else 1

    def epsilon_root(self, j, k, sign):
        """For D_n: the vector eps_j + sign*eps_k in simple-root coordinates.

        Uses a_j = eps_j - eps_{j+1} (j < n) and a_n = eps_{n-1} + eps_n.
        """
        if self.kind.series != "D":
            raise ValueError("epsilon coordinates are defined for the D series")
        n = self.rank
        if not (1 <= j < k <= n):
            raise ValueError("need 1 <= j < k <= n")
        target = [0] * n
        target[j - 1] += 1
        target[k - 1] += sign
        # columns of the change of basis: simple roots in eps coordinates
        cols = []
        for m in range(1, n):
            v = [0] * n
            v[m - 1], v[m] = 1, -1
            cols.append(v)
        v = [0] * n
        v[n - 2] = v[n - 1] = 1
        cols.append(v)
        mat = [[Fraction(cols[c][r]) for c in range(n)] + [Fraction(target[r])]
               for r in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if mat[r][col])
            mat[col], mat[piv] = mat[piv], mat[col]
            inv = 1 / mat[col][col]
            mat[col] = [x * inv for x in mat[col]]
            for r in range(n):
                if r != col and mat[r][col]:
                    f = mat[r][col]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
        coeffs = [mat[r][n] for r in range(n)]
        assert all(x.denominator == 1 for x in coeffs)
        return tuple(int(x) for x in coeffs)


def add_vec(alpha, beta):
    return tuple(a + b for a, b in zip(alpha, beta))


def neg_vec(alpha):
    return tuple(-a for a in alpha)


def root_span_vector(lat, indices, doubled=(), extra=()):
    """Sum of a_j over indices, plus 2*a_j over doubled, plus a_j over extra."""
    v = [0] * lat.rank
    for j in indices:
        v[j - 1] += 1
    for j in doubled:
        v[j - 1] += 2
    for j in extra:
        v[j - 1] += 1
    return tuple(v)


def parse_orientation_file(path):
    """Read arrows from a text file with one "j k" pair per line."""
    arrows = set()
    with open(path) as fh:
        for line in fh:
            line = line.split("#")[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ValueError(f"bad orientation line: {line!r}")
            arrows.add((int(parts[0]), int(parts[1])))
    return frozenset(arrows)
