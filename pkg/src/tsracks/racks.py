"""Finite racks as operation matrices.

A rack on {x_1, ..., x_n} is stored as an n x n matrix ``op`` with entries
in 1..n, where op[i][j] = k means x_i > x_j = x_k (writing > for the rack
operation).  Rack axioms, as checked by validate_rack:

  (i)  every column j is a permutation of 1..n, so the inverse operation
       >^{-1} exists (inv_op is the columnwise inverse matrix);
  (ii) (x > y) > z = (x > z) > (y > z) for all triples.

Everything is 1-indexed to match the usual rack-matrix convention.
"""

from math import lcm

from .errors import RackAxiomError, ValidationError


class FiniteRack:
    """A validated finite rack.  Build through validate_rack()."""

    def __init__(self, op, inv_op):
        self.n = len(op)
        self.op_matrix = op
        self.inv_matrix = inv_op
        self.elements = tuple(range(1, self.n + 1))

    def op(self, i, j):
        return self.op_matrix[i - 1][j - 1]

    def op_inv(self, i, j):
        return self.inv_matrix[i - 1][j - 1]

    def kink_map(self):
        """The permutation pi(x) = x > x (the matrix diagonal)."""
        return tuple(self.op_matrix[i][i] for i in range(self.n))

    def __eq__(self, other):
        return isinstance(other, FiniteRack) and self.op_matrix == other.op_matrix

    def __hash__(self):
        return hash(self.op_matrix)

    def __repr__(self):
        return "FiniteRack(n=%d)" % self.n

    def to_text(self):
        lines = [str(self.n)]
        for row in self.op_matrix:
            lines.append(" ".join(str(k) for k in row))
        return "\n".join(lines) + "\n"


def validate_rack(matrix):
    """Check the rack axioms and return a FiniteRack.

    Raises RackAxiomError naming the first failing axiom instance: the
    offending column for axiom (i), a witness triple for axiom (ii).
    """
    op = tuple(tuple(int(k) for k in row) for row in matrix)
    n = len(op)
    if n == 0 or any(len(row) != n for row in op):
        raise ValidationError("rack matrix must be square and nonempty")
    for row in op:
        for k in row:
            if not 1 <= k <= n:
                raise ValidationError(
                    "rack matrix entries must lie in 1..%d, got %d" % (n, k)
                )

    inv = [[0] * n for _ in range(n)]
    for j in range(n):
        col = [op[i][j] for i in range(n)]
        if sorted(col) != list(range(1, n + 1)):
            raise RackAxiomError(
                1, j + 1,
                "axiom (i) fails: column %d is not a permutation" % (j + 1),
            )
        for i in range(n):
            inv[col[i] - 1][j] = i + 1
    inv = tuple(tuple(row) for row in inv)

    for x in range(1, n + 1):
        for y in range(1, n + 1):
            xy = op[x - 1][y - 1]
            for z in range(1, n + 1):
                left = op[xy - 1][z - 1]
                right = op[op[x - 1][z - 1] - 1][op[y - 1][z - 1] - 1]
                if left != right:
                    raise RackAxiomError(
                        2, (x, y, z),
                        "axiom (ii) fails at (x,y,z)=(%d,%d,%d): "
                        "(x>y)>z=%d but (x>z)>(y>z)=%d" % (x, y, z, left, right),
                    )
    return FiniteRack(op, inv)


def rack_from_text(text):
    """Parse the rack matrix text format: first line n, then n rows."""
    tokens = text.split()
    if not tokens:
        raise ValidationError("empty rack matrix text")
    try:
        n = int(tokens[0])
        values = [int(v) for v in tokens[1:]]
    except ValueError as exc:
        raise ValidationError("rack matrix text must contain integers") from exc
    if len(values) != n * n:
        raise ValidationError(
            "expected %d matrix entries, got %d" % (n * n, len(values))
        )
    rows = [values[i * n : (i + 1) * n] for i in range(n)]
    return validate_rack(rows)


def rack_rank(rack):
    """(N, per-element ranks): N(x) is the pi-cycle length through x and
    N = lcm of them, which is also the order of pi in S_n."""
    pi = rack.kink_map()
    per = [0] * rack.n
    for start in range(1, rack.n + 1):
        if per[start - 1]:
            continue
        cycle = [start]
        x = pi[start - 1]
        while x != start:
            cycle.append(x)
            x = pi[x - 1]
        for e in cycle:
            per[e - 1] = len(cycle)
    n_total = lcm(*per)
    assert n_total == _permutation_order(pi)
    return n_total, per


def _permutation_order(pi):
    order = 1
    seen = set()
    for start in range(1, len(pi) + 1):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = pi[x - 1]
            length += 1
        order = lcm(order, length)
    return order


def is_quandle(rack):
    return all(rack.op(x, x) == x for x in rack.elements)


def constant_action_rack(sigma):
    """Rack with x > y = sigma(x); sigma given as a 1-indexed image list."""
    sigma = tuple(int(v) for v in sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValidationError("sigma is not a permutation of 1..%d" % n)
    return validate_rack([[sigma[i]] * n for i in range(n)])


def conjugation_rack(table, n_exp=1):
    """Conjugation rack x > y = y^{-n} x y^{n} on a finite group.

    ``table`` is the 1-indexed multiplication table.  The result is always
    a quandle.
    """
    table = tuple(tuple(int(v) for v in row) for row in table)
    k = len(table)
    if any(len(row) != k for row in table):
        raise ValidationError("group table must be square")
    for j in range(k):
        if sorted(table[i][j] for i in range(k)) != list(range(1, k + 1)):
            raise ValidationError("group table column %d not a permutation" % (j + 1))
        if sorted(table[j]) != list(range(1, k + 1)):
            raise ValidationError("group table row %d not a permutation" % (j + 1))
    identity = None
    for e in range(1, k + 1):
        if all(table[e - 1][x - 1] == x and table[x - 1][e - 1] == x
               for x in range(1, k + 1)):
            identity = e
            break
    if identity is None:
        raise ValidationError("group table has no identity element")
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            for c in range(1, k + 1):
                ab_c = table[table[a - 1][b - 1] - 1][c - 1]
                a_bc = table[a - 1][table[b - 1][c - 1] - 1]
                if ab_c != a_bc:
                    raise ValidationError(
                        "group table is not associative at (%d,%d,%d)" % (a, b, c)
                    )
    inverse = [0] * k
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            if table[a - 1][b - 1] == identity:
                inverse[a - 1] = b

    def power(y, m):
        base = y if m >= 0 else inverse[y - 1]
        out = identity
        for _ in range(abs(m)):
            out = table[out - 1][base - 1]
        return out

    op = [[0] * k for _ in range(k)]
    for x in range(1, k + 1):
        for y in range(1, k + 1):
            yn = power(y, n_exp)
            yninv = power(y, -n_exp)
            op[x - 1][y - 1] = table[table[yninv - 1][x - 1] - 1][yn - 1]
    return validate_rack(op)


def maximal_subquandle(rack):
    """Elements of rack rank 1, i.e. {x : x > x = x}.  May be empty.

    The subset is closed under the rack operation; we assert that rather
    than trust it.
    """
    q = [x for x in rack.elements if rack.op(x, x) == x]
    qset = set(q)
    assert all(rack.op(x, y) in qset for x in q for y in q)
    return tuple(q)


def is_homomorphism(f, source, target):
    """True iff f respects > on all pairs.  f maps 1..n to target elements.

    Preservation of >^{-1} follows for bijections onto subracks; we assert
    it outright.
    """
    for x in source.elements:
        if f[x] not in target.elements:
            return False
    for x in source.elements:
        for y in source.elements:
            if f[source.op(x, y)] != target.op(f[x], f[y]):
                return False
    for x in source.elements:
        for y in source.elements:
            assert f[source.op_inv(x, y)] == target.op_inv(f[x], f[y])
    return True


def _element_profiles(rack):
    """Per-element invariants used to prune the isomorphism search."""
    _, per = rack_rank(rack)
    base = {x: per[x - 1] for x in rack.elements}
    # refine once with the rank multiset of the row and column through x
    profiles = {}
    for x in rack.elements:
        row = sorted(base[rack.op(x, y)] for y in rack.elements)
        col = sorted(base[rack.op(y, x)] for y in rack.elements)
        profiles[x] = (base[x], tuple(row), tuple(col))
    return profiles


def find_isomorphism(x_rack, y_rack):
    """Backtracking search for a rack isomorphism, or None.

    Candidate targets are restricted by necessary profile invariants
    (per-element rack rank, kink cycle type, row/column rank multisets);
    the profiles prune but the search itself decides.  Deterministic:
    the same pair always yields the same witness.
    """
    if x_rack.n != y_rack.n:
        return None
    if rack_rank(x_rack)[0] != rack_rank(y_rack)[0]:
        return None
    if _cycle_type(x_rack.kink_map()) != _cycle_type(y_rack.kink_map()):
        return None
    px = _element_profiles(x_rack)
    py = _element_profiles(y_rack)
    if sorted(px.values()) != sorted(py.values()):
        return None
    candidates = {
        x: tuple(y for y in y_rack.elements if py[y] == px[x])
        for x in x_rack.elements
    }
    order = sorted(x_rack.elements, key=lambda x: len(candidates[x]))
    n = x_rack.n

    def extend(f, used, idx):
        if idx == n:
            return dict(f)
        x = order[idx]
        for y in candidates[x]:
            if y in used:
                continue
            f[x] = y
            used.add(y)
            if _consistent(f, x, x_rack, y_rack):
                result = extend(f, used, idx + 1)
                if result is not None:
                    return result
            del f[x]
            used.discard(y)
        return None

    f = extend({}, set(), 0)
    if f is not None:
        assert is_homomorphism(f, x_rack, y_rack)
        assert len(set(f.values())) == n
    return f


def _consistent(f, x, x_rack, y_rack):
    for a in list(f):
        for u, v in ((a, x), (x, a)):
            w = x_rack.op(u, v)
            if w in f and y_rack.op(f[u], f[v]) != f[w]:
                return False
    return True


def _cycle_type(pi):
    seen = set()
    lengths = []
    for start in range(1, len(pi) + 1):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = pi[x - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))
