"""(t,s)-racks: rack structures on finite modules.

A (t,s)-rack is a finite abelian group A with a commuting pair of
endomorphisms t (invertible) and s satisfying s^2 = (Id - t)s.  The rack
operation is x > y = t(x) + s(y), with inverse x >^{-1} y = t^{-1}(x - s(y)),
and the kink map is multiplication by t + s.  When s = Id - t the rack is a
quandle (an Alexander quandle).

The isomorphism machinery implements two classification criteria:

* Alexander quandles: M and M' are isomorphic as quandles iff |M| = |M'| and
  (1-t)M and (1-t)M' are isomorphic as Z[t^{+-1}]-modules.

* General (t,s)-racks: X and Y are isomorphic as racks iff there is a module
  isomorphism h : sX -> sY together with coset-representative sets A, B for
  X/sX and Y/sY and a bijection g between the (t+s)-orbit sets of A and B
  satisfying h(s a) = s g(a) and g((t+s)a + w) = (t+s)g(a) + h(w).

Both directions of the general criterion are exercised against brute-force
rack isomorphism search in the test suite; a found certificate is always
re-verified end to end as an honest rack isomorphism before it is returned.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd

from .errors import (
    NotInvertibleError,
    RelationViolationError,
    ValidationError,
    WrongStructureError,
)
from .groups import AbelianGroup
from .racks import validate_rack


class TSRack:
    """A (t,s)-rack on a carrier subset of an ambient abelian group.

    For racks built by the constructors below the carrier is the whole
    group; s_submodule() produces carriers that are proper subgroups.
    t_map / s_map are dictionaries on the carrier.
    """

    def __init__(self, group, t_map, s_map, carrier=None, spec=None):
        self.group = group
        self.carrier = tuple(sorted(carrier if carrier is not None
                                    else group.elements()))
        self.t_map = dict(t_map)
        self.s_map = dict(s_map)
        self.spec = spec
        self._validate()
        self.t_inv_map = {v: k for k, v in self.t_map.items()}
        ts = {x: group.add(self.t_map[x], self.s_map[x]) for x in self.carrier}
        self.ts_map = ts
        self.ts_inv_map = {v: k for k, v in ts.items()}

    # -- structure checks ------------------------------------------------

    def _validate(self):
        g = self.group
        cset = set(self.carrier)
        if g.zero not in cset:
            raise ValidationError("carrier must contain 0")
        for x in self.carrier:
            for y in self.carrier:
                if g.add(x, y) not in cset:
                    raise ValidationError("carrier is not closed under +")
        for m, name in ((self.t_map, "t"), (self.s_map, "s")):
            if set(m) != cset or any(v not in cset for v in m.values()):
                raise ValidationError("%s-action must map carrier to carrier"
                                      % name)
            zero_img = m[g.zero]
            if zero_img != g.zero:
                raise ValidationError("%s-action must fix 0" % name)
            for x in self.carrier:
                for y in self.carrier:
                    if m[g.add(x, y)] != g.add(m[x], m[y]):
                        raise ValidationError(
                            "%s-action is not additive" % name)
        if len(set(self.t_map.values())) != len(self.carrier):
            raise NotInvertibleError("t-action is not bijective")
        for x in self.carrier:
            if self.t_map[self.s_map[x]] != self.s_map[self.t_map[x]]:
                raise ValidationError("t and s do not commute at %r" % (x,))
        for x in self.carrier:
            ss = self.s_map[self.s_map[x]]
            want = g.sub(self.s_map[x], self.s_map[self.t_map[x]])
            if ss != want:
                raise RelationViolationError(
                    "s^2 != (Id - t)s at %r: s^2 x = %r, (Id-t)s x = %r"
                    % (x, ss, want))

    # -- rack structure ---------------------------------------------------

    @property
    def elements(self):
        return self.carrier

    @property
    def order(self):
        return len(self.carrier)

    def t(self, x):
        return self.t_map[x]

    def t_inv(self, x):
        return self.t_inv_map[x]

    def s(self, x):
        return self.s_map[x]

    def ts(self, x):
        """Kink map pi(x) = (t+s)x."""
        return self.ts_map[x]

    def op(self, x, y):
        return self.group.add(self.t_map[x], self.s_map[y])

    def op_inv(self, x, y):
        return self.t_inv_map[self.group.sub(x, self.s_map[y])]

    def rack_rank(self):
        """Order of the (t+s)-action, the period of framing dependence."""
        n = 1
        cur = {x: self.ts_map[x] for x in self.carrier}
        while any(cur[x] != x for x in self.carrier):
            cur = {x: self.ts_map[cur[x]] for x in self.carrier}
            n += 1
        return n

    def is_alexander(self):
        """True when s = Id - t, i.e. the rack is an Alexander quandle."""
        g = self.group
        return all(self.s_map[x] == g.sub(x, self.t_map[x])
                   for x in self.carrier)

    def to_finite_rack(self, order=None):
        """Export the operation matrix, elements enumerated in ``order``
        (default: lexicographic).  Round-trips through validate_rack."""
        elems = list(order) if order is not None else list(self.carrier)
        if sorted(elems) != list(self.carrier):
            raise ValidationError("order must enumerate the carrier exactly")
        index = {x: i + 1 for i, x in enumerate(elems)}
        matrix = [[index[self.op(x, y)] for y in elems] for x in elems]
        return validate_rack(matrix)

    def __repr__(self):
        if self.spec is not None:
            return "TSRack(%r)" % (self.spec,)
        return "TSRack(order=%d, moduli=%s)" % (self.order, self.group.moduli)


def _matrix_map(group, matrix, carrier):
    matrix = [list(map(int, row)) for row in matrix]
    k = group.rank
    if len(matrix) != k or any(len(row) != k for row in matrix):
        raise ValidationError("endomorphism matrix must be %d x %d" % (k, k))
    # entry (i,j) maps Z_{m_j} into Z_{m_i}: need m_i | a_ij * m_j
    for i in range(k):
        for j in range(k):
            if (matrix[i][j] * group.moduli[j]) % group.moduli[i] != 0:
                raise ValidationError(
                    "matrix entry (%d,%d)=%d is not a well-defined map "
                    "Z_%d -> Z_%d" % (i, j, matrix[i][j],
                                      group.moduli[j], group.moduli[i]))
    out = {}
    for x in carrier:
        out[x] = tuple(
            sum(matrix[i][j] * x[j] for j in range(k)) % group.moduli[i]
            for i in range(k)
        )
    return out


def make_module(moduli, t_matrix, s_matrix, spec=None):
    """(t,s)-rack on a direct sum of cyclic groups from endomorphism
    matrices.  Raises the first violated condition: t not bijective,
    ts != st, or s^2 != (Id-t)s."""
    group = moduli if isinstance(moduli, AbelianGroup) else AbelianGroup(moduli)
    carrier = group.elements()
    t_map = _matrix_map(group, t_matrix, carrier)
    s_map = _matrix_map(group, s_matrix, carrier)
    return TSRack(group, t_map, s_map, spec=spec)


def make_linear(n, t, s):
    """Linear (t,s)-rack on Z_n: x > y = tx + sy.

    Needs gcd(t, n) = 1 and s^2 = (1-t)s mod n; each failure is reported
    separately with the offending residues.
    """
    n = int(n)
    if n < 2:
        raise ValidationError("n must be >= 2")
    t, s = int(t) % n, int(s) % n
    if gcd(t, n) != 1:
        raise NotInvertibleError("t=%d is not a unit mod %d" % (t, n))
    if (s * s) % n != ((1 - t) * s) % n:
        raise RelationViolationError(
            "s^2 = %d but (1-t)s = %d mod %d"
            % ((s * s) % n, ((1 - t) * s) % n, n))
    return make_module((n,), [[t]], [[s]],
                       spec={"type": "linear", "n": n, "t": t, "s": s})


def make_quotient(n, coeffs):
    """(t,s)-rack on R + R where R = Z_n[t]/(p(t)), elements (a, b)
    standing for a + b s; t acts coordinatewise, s(a, b) = (0, a + (1-t)b).

    Requires the class of t to be a unit in R.
    """
    from .groups import QuotientRing

    ring = QuotientRing(n, coeffs)
    if not ring.t_is_unit:
        raise NotInvertibleError(
            "t is not a unit in %r (constant coefficient %d is not a unit "
            "mod %d)" % (ring, ring.coeffs[0], n))
    d = ring.degree
    group = AbelianGroup((n,) * (2 * d))

    def to_pair(x):
        return tuple(x[:d]), tuple(x[d:])

    carrier = group.elements()
    t_map = {}
    s_map = {}
    one_minus_t = ring.sub(ring.one, ring.t)
    for x in carrier:
        a, b = to_pair(x)
        t_map[x] = ring.t_times(a) + ring.t_times(b)
        s_map[x] = ring.zero + ring.add(a, ring.mul(one_minus_t, b))
    return TSRack(group, t_map, s_map,
                  spec={"type": "quotient", "n": n,
                        "p": [c % n for c in coeffs]})


def enumerate_linear(n):
    """All (t, s) pairs defining a linear (t,s)-rack on Z_n, in
    lexicographic order."""
    out = []
    for t in range(n):
        if gcd(t, n) != 1:
            continue
        for s in range(n):
            if (s * s) % n == ((1 - t) * s) % n:
                out.append((t, s))
    return out


def s_submodule(rack):
    """The image sX with the restricted t- and s-actions.

    sX is closed under both actions (t s = s t and s^2 = (1-t)s keep it
    stable); the TSRack constructor re-checks everything.
    """
    image = sorted({rack.s_map[x] for x in rack.carrier})
    iset = set(image)
    assert all(rack.t_map[x] in iset for x in image)
    assert all(rack.s_map[x] in iset for x in image)
    t_map = {x: rack.t_map[x] for x in image}
    s_map = {x: rack.s_map[x] for x in image}
    return TSRack(rack.group, t_map, s_map, carrier=image)


# -- module isomorphisms -------------------------------------------------


def _generating_sequence(rack):
    """Greedy additive generating sequence for the carrier subgroup."""
    from .groups import subgroup_closure

    gens = []
    span = {rack.group.zero}
    for x in rack.carrier:
        if x not in span:
            gens.append(x)
            span = set(subgroup_closure(rack.group, gens))
    return gens


def _extend_additively(m_from, m_to, gens, images):
    """Extend gen -> image additively over the carrier, or None on clash."""
    g_from, g_to = m_from.group, m_to.group
    h = {g_from.zero: g_to.zero}
    frontier = [g_from.zero]
    pairs = list(zip(gens, images))
    while frontier:
        x = frontier.pop()
        for gen, img in pairs:
            nx = g_from.add(x, gen)
            ny = g_to.add(h[x], img)
            if nx in h:
                if h[nx] != ny:
                    return None
            else:
                h[nx] = ny
                frontier.append(nx)
    if len(h) != len(m_from.carrier):
        return None
    return h


def all_module_isos(m_from, m_to, respect_s=True):
    """Yield every module isomorphism between two carriers.

    An isomorphism preserves +, the t-action and (when respect_s) the
    s-action.  Enumeration goes over images of a greedy generating
    sequence, filtered by additive order, then checks everything.
    """
    if len(m_from.carrier) != len(m_to.carrier):
        return
    gens = _generating_sequence(m_from)
    if not gens:
        yield {m_from.group.zero: m_to.group.zero}
        return
    orders = [m_from.group.element_order(g) for g in gens]
    candidate_pools = [
        [y for y in m_to.carrier if m_to.group.element_order(y) == o]
        for o in orders
    ]
    for images in product(*candidate_pools):
        h = _extend_additively(m_from, m_to, gens, images)
        if h is None:
            continue
        if len(set(h.values())) != len(h):
            continue
        if any(h[m_from.t_map[x]] != m_to.t_map[h[x]] for x in h):
            continue
        if respect_s and any(
            h[m_from.s_map[x]] != m_to.s_map[h[x]] for x in h
        ):
            continue
        yield h


def module_iso_exists(m_from, m_to, respect_s=True):
    """First module isomorphism found, or None."""
    for h in all_module_isos(m_from, m_to, respect_s=respect_s):
        return h
    return None


# -- the (t,s)-rack isomorphism criterion --------------------------------


@dataclass
class TSRackIsoCertificate:
    """Witness data for a (t,s)-rack isomorphism.

    h is a module isomorphism sX -> sY; A and B are coset representative
    sets for X/sX and Y/sY; g is the bijection between the (t+s)-orbit
    sets of A and B; phi is the assembled rack isomorphism
    phi(a + w) = g(a) + h(w), re-verified as a rack homomorphism.
    """

    h: dict
    coset_reps_a: tuple
    coset_reps_b: tuple
    g: dict
    phi: dict


def _coset_data(rack, sub_elements):
    """(canonical representative list, element -> representative map)."""
    sub = set(sub_elements)
    rep_of = {}
    reps = []
    for x in rack.carrier:  # carrier is sorted, so first hit is lex-least
        key = min(rack.group.add(x, w) for w in sub)
        rep_of[x] = key
        if key == x:
            reps.append(x)
    return reps, rep_of


def _orbit(rack, seed):
    """Forward (t+s)-closure of a set; the action has finite order, so
    forward iteration reaches the whole orbit."""
    out = set(seed)
    frontier = list(seed)
    while frontier:
        x = frontier.pop()
        y = rack.ts_map[x]
        if y not in out:
            out.add(y)
            frontier.append(y)
    return out


def tsrack_iso_check(x_rack, y_rack):
    """Decide (t,s)-rack isomorphism via the submodule criterion.

    Searches module isomorphisms h : sX -> sY, then representative
    choices g0 : A -> Y with s g0(a) = h(s a) hitting every coset of sY
    once (their image is the representative set B), then checks the orbit
    compatibility equation.  A certificate is assembled and verified as an
    actual rack isomorphism before being returned; None means no witness
    exists.
    """
    if x_rack.order != y_rack.order:
        return None
    if x_rack.rack_rank() != y_rack.rack_rank():
        return None
    sx = s_submodule(x_rack)
    sy = s_submodule(y_rack)
    if sx.order != sy.order:
        return None

    reps_a, rep_of_x = _coset_data(x_rack, sx.carrier)
    _, rep_of_y = _coset_data(y_rack, sy.carrier)

    # alpha is recovered from a coset: (t+s)alpha + w lies in the coset
    # t(alpha) + sX, and t permutes cosets
    coset_to_alpha = {rep_of_x[x_rack.ts_map[a]]: a for a in reps_a}

    for h in all_module_isos(sx, sy, respect_s=True):
        # candidates for g0(alpha): y with s y = h(s alpha)
        pools = []
        for a in reps_a:
            target = h[x_rack.s_map[a]]
            pools.append([y for y in y_rack.carrier
                          if y_rack.s_map[y] == target])
        cert = _search_reps(x_rack, y_rack, h, reps_a, rep_of_x,
                            rep_of_y, coset_to_alpha, pools)
        if cert is not None:
            return cert
    return None


def _search_reps(x_rack, y_rack, h, reps_a, rep_of_x, rep_of_y,
                 coset_to_alpha, pools):
    gx, gy = x_rack.group, y_rack.group
    n_cosets = len(reps_a)

    def backtrack(idx, g0, used_cosets):
        if idx == n_cosets:
            return try_certificate(dict(g0))
        a = reps_a[idx]
        for y in pools[idx]:
            c = rep_of_y[y]
            if c in used_cosets:
                continue
            g0[a] = y
            used_cosets.add(c)
            cert = backtrack(idx + 1, g0, used_cosets)
            if cert is not None:
                return cert
            del g0[a]
            used_cosets.discard(c)
        return None

    def try_certificate(g0):
        orbit_a = _orbit(x_rack, reps_a)
        g_full = {}
        for x in sorted(orbit_a):
            a = coset_to_alpha[rep_of_x[x]]
            w = gx.sub(x, x_rack.ts_map[a])
            if w not in h:
                return None
            g_full[x] = gy.add(y_rack.ts_map[g0[a]], h[w])
        # g must restrict to g0 on A and map the orbit of A bijectively
        # onto the orbit of B
        for a in reps_a:
            if g_full[a] != g0[a]:
                return None
        orbit_b = _orbit(y_rack, [g0[a] for a in reps_a])
        values = set(g_full.values())
        if len(values) != len(g_full) or values != orbit_b:
            return None
        phi = {}
        for x in x_rack.carrier:
            a = rep_of_x[x]
            w = gx.sub(x, a)
            phi[x] = gy.add(g0[a], h[w])
        if len(set(phi.values())) != x_rack.order:
            return None
        if any(phi[x_rack.op(x, y)] != y_rack.op(phi[x], phi[y])
               for x in x_rack.carrier for y in x_rack.carrier):
            return None
        reps_b = tuple(g0[a] for a in reps_a)
        return TSRackIsoCertificate(h=h, coset_reps_a=tuple(reps_a),
                                    coset_reps_b=reps_b, g=g_full, phi=phi)

    return backtrack(0, {}, set())


def tsracks_isomorphic(x_rack, y_rack):
    return tsrack_iso_check(x_rack, y_rack) is not None


def alexander_iso_check(m_rack, m2_rack):
    """Alexander-quandle criterion: equal order and (1-t)M = (1-t)M' as
    Z[t^{+-1}]-modules.  Raises WrongStructureError off Alexander inputs."""
    for r in (m_rack, m2_rack):
        if not r.is_alexander():
            raise WrongStructureError(
                "%r is not an Alexander quandle (s != 1 - t)" % (r,))
    if m_rack.order != m2_rack.order:
        return False
    sub1 = _one_minus_t_submodule(m_rack)
    sub2 = _one_minus_t_submodule(m2_rack)
    return module_iso_exists(sub1, sub2, respect_s=False) is not None


def _one_minus_t_submodule(rack):
    g = rack.group
    image = sorted({g.sub(x, rack.t_map[x]) for x in rack.carrier})
    t_map = {x: rack.t_map[x] for x in image}
    # on an Alexander quandle s = 1 - t restricts to the submodule
    s_map = {x: g.sub(x, rack.t_map[x]) for x in image}
    return TSRack(rack.group, t_map, s_map, carrier=image)


# -- textual specs --------------------------------------------------------


def tsrack_from_spec(spec):
    """Build a TSRack from its structured-text description.

    Accepted forms:
      {"type": "linear", "n": N, "t": T, "s": S}
      {"type": "quotient", "n": N, "p": [c0, c1, ...]}   (ascending)
      {"type": "module", "moduli": [...], "t": [[...]], "s": [[...]]}
    """
    if not isinstance(spec, dict) or "type" not in spec:
        raise ValidationError("rack spec must be an object with a 'type'")
    kind = spec["type"]
    try:
        if kind == "linear":
            return make_linear(spec["n"], spec["t"], spec["s"])
        if kind == "quotient":
            return make_quotient(spec["n"], spec["p"])
        if kind == "module":
            return make_module(spec["moduli"], spec["t"], spec["s"],
                               spec=spec)
    except KeyError as exc:
        raise ValidationError("rack spec is missing field %s" % exc) from exc
    raise ValidationError("unknown rack spec type %r" % (kind,))
