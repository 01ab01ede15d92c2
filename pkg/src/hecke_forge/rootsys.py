"""Root-system data for A1/A2 and the extended affine Weyl group.

Weights and coweights are integer (or Fraction) vectors in the fundamental
(co)weight basis; with the normalization (theta, theta) = 2 both A1 and A2
are self-dual, so one lattice of tuples serves P and P^vee.  Affine roots
are pairs [alpha, j]; the affine action is b([z, zeta]) = [z, zeta - (b, z)],
w([z, zeta]) = [w(z), zeta].
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .scalars import Scalar


class RootSystem:
    """A1 or A2 with precomputed Weyl group and pairing table."""

    def __init__(self, kind):
        if kind not in ("A1", "A2"):
            raise ValueError("unsupported root system %r" % kind)
        self.kind = kind
        if kind == "A1":
            self.n = 1
            self.cartan = ((2,),)
            self.gram = ((Fraction(1, 2),),)
            self.degrees = (2,)
            self.pi_order = 2
        else:
            self.n = 2
            self.cartan = ((2, -1), (-1, 2))
            self.gram = ((Fraction(2, 3), Fraction(1, 3)),
                         (Fraction(1, 3), Fraction(2, 3)))
            self.degrees = (2, 3)
            self.pi_order = 3
        # simple roots in the weight basis: alpha_j has coordinates C[:, j]
        self.simple_roots = tuple(
            tuple(self.cartan[i][j] for i in range(self.n))
            for j in range(self.n))
        self.rho = (1,) * self.n
        if kind == "A1":
            self.theta = (2,)
            self.pos_roots = (self.theta,)
        else:
            self.theta = (1, 1)
            self.pos_roots = (self.simple_roots[0], self.simple_roots[1],
                              self.theta)
        self._build_weyl()
        # integer pairing table: (b, root) = dot(b, coeffs[root]) with coeffs
        # the coroot-basis coordinates G * root
        self._root_pair = {}
        for alpha in self.pos_roots:
            for sgn in (1, -1):
                r = tuple(sgn * x for x in alpha)
                coeffs = tuple(
                    int(sum(self.gram[i][j] * r[j] for j in range(self.n)))
                    for i in range(self.n))
                self._root_pair[r] = coeffs

    # -- pairings ------------------------------------------------------------
    def pair(self, a, b):
        """(a, b) for vectors in the weight basis."""
        return sum(self.gram[i][j] * a[i] * b[j]
                   for i in range(self.n) for j in range(self.n))

    def pair_root(self, b, root):
        """(b, root) as an int, for root any element of +-R."""
        coeffs = self._root_pair[root]
        return sum(x * y for x, y in zip(b, coeffs))

    def norm2(self, a):
        return self.pair(a, a)

    # -- Weyl group ------------------------------------------------------------
    def _apply_simple(self, i, a):
        """s_i(a) = a - (a, alpha_i) alpha_i^vee; coordinates are (a, alpha_j^vee)."""
        ai = a[i]
        return tuple(a[j] - ai * self.cartan[i][j] for j in range(self.n))

    def _build_weyl(self):
        # elements are stored as tuples of basis images (coordinate tuples)
        def act_word(word, a):
            for i in reversed(word):
                a = self._apply_simple(i, a)
            return a

        seen = {}
        frontier = [()]
        basis = [tuple(int(i == j) for j in range(self.n))
                 for i in range(self.n)]
        while frontier:
            nxt = []
            for word in frontier:
                key = tuple(act_word(word, b) for b in basis)
                if key in seen:
                    continue
                seen[key] = word
                for i in range(self.n):
                    nxt.append(word + (i,))
            frontier = nxt
        # keep shortest word per matrix
        self.weyl_words = {}
        for key, word in sorted(seen.items(), key=lambda kv: len(kv[1])):
            if key not in self.weyl_words:
                self.weyl_words[key] = word
        self.weyl = sorted(self.weyl_words, key=lambda k: len(self.weyl_words[k]))
        self.w0 = max(self.weyl, key=lambda k: len(self.weyl_words[k]))

    def w_apply(self, w, a):
        """Apply a Weyl element (matrix of basis images) to a vector."""
        return tuple(sum(w[i][j] * a[i] for i in range(self.n))
                     for j in range(self.n))

    def w_mul(self, w1, w2):
        """Composition w1 o w2 as matrices of basis images."""
        return tuple(self.w_apply(w1, row) for row in w2)

    def w_inv(self, w):
        for cand in self.weyl:
            if self.w_mul(w, cand) == self.w_id:
                return cand
        raise ValueError("inverse not found")

    @property
    def w_id(self):
        return tuple(tuple(int(i == j) for j in range(self.n))
                     for i in range(self.n))

    def simple_matrix(self, i):
        basis = [tuple(int(k == j) for j in range(self.n))
                 for k in range(self.n)]
        return tuple(self._apply_simple(i, b) for b in basis)

    def w_length(self, w):
        return len(self.weyl_words[w])

    def poincare_poly(self):
        """Nonaffine Poincare polynomial as int coefficients of t^j."""
        c = {}
        for w in self.weyl:
            l = self.w_length(w)
            c[l] = c.get(l, 0) + 1
        return c

    def is_dominant(self, a):
        return all(x >= 0 for x in a)

    def dominant_rep(self, a):
        """The dominant representative of W(a)."""
        cur = a
        changed = True
        while changed:
            changed = False
            for i in range(self.n):
                if cur[i] < 0:
                    cur = self._apply_simple(i, cur)
                    changed = True
        return cur


class AffWeylElt:
    """Element b.w of the extended affine Weyl group W ltimes P^vee."""

    __slots__ = ("rs", "b", "w")

    def __init__(self, rs, b, w):
        self.rs = rs
        self.b = tuple(b)
        self.w = w

    @classmethod
    def identity(cls, rs):
        return cls(rs, (0,) * rs.n, rs.w_id)

    @classmethod
    def translation(cls, rs, b):
        return cls(rs, b, rs.w_id)

    @classmethod
    def reflection(cls, rs, i):
        return cls(rs, (0,) * rs.n, rs.simple_matrix(i))

    def __eq__(self, other):
        return self.b == other.b and self.w == other.w

    def __hash__(self):
        return hash((self.b, self.w))

    def __repr__(self):
        return "AffWeylElt(b=%s, w=%s)" % (self.b, self.rs.weyl_words[self.w])

    def __mul__(self, other):
        """(b1, w1)(b2, w2) = (b1 + w1(b2), w1 w2)."""
        rs = self.rs
        b = tuple(x + y for x, y in zip(self.b, rs.w_apply(self.w, other.b)))
        return AffWeylElt(rs, b, rs.w_mul(self.w, other.w))

    def inv(self):
        rs = self.rs
        wi = rs.w_inv(self.w)
        b = tuple(-x for x in rs.w_apply(wi, self.b))
        return AffWeylElt(rs, b, wi)

    # -- actions ------------------------------------------------------------
    def act_affine_root(self, root):
        """[alpha, j] -> [w(alpha), j - (b, w(alpha))]."""
        alpha, j = root
        wa = self.rs.w_apply(self.w, alpha)
        return (wa, j - self.rs.pair(self.b, wa))

    def act_point(self, x):
        """Affine action on x in R^n (weight-basis coordinates): w then +b."""
        wx = self.rs.w_apply(self.w, x)
        return tuple(p + q for p, q in zip(wx, self.b))

    def act_km_weight(self, z, level, zeta):
        """Action on z + level*Lambda_0 + zeta*delta."""
        rs = self.rs
        wz = rs.w_apply(self.w, z)
        z2 = tuple(p + level * q for p, q in zip(wz, self.b))
        zeta2 = zeta - rs.pair(wz, self.b) \
            - level * rs.pair(self.b, self.b) / 2
        return z2, level, zeta2


def is_positive_affine(rs, root):
    alpha, j = root
    if j != 0:
        return j > 0
    return alpha in rs.pos_roots


def all_roots(rs):
    return list(rs.pos_roots) + [tuple(-x for x in a) for a in rs.pos_roots]


def lambda_set(w: AffWeylElt):
    """Inversion set Lambda(w) = {affine alpha > 0 : w(alpha) < 0}.

    For [alpha, j], the image is [w(alpha), j - (b, w(alpha))]; it is
    negative exactly for 0 <= j < (b, w(alpha)) on the positive side (plus
    the j = 0 sign rule), so each root direction contributes a contiguous
    block of levels.
    """
    rs = w.rs
    out = []
    pos = set(rs.pos_roots)
    for alpha in all_roots(rs):
        positive_alpha = alpha in pos
        wa = rs.w_apply(w.w, alpha)
        shift = rs.pair_root(w.b, wa)
        wa_positive = wa in pos
        j0 = 0 if positive_alpha else 1
        # image level j - shift; negative iff j < shift, or j == shift and
        # w(alpha) negative
        top = shift if wa_positive else shift + 1
        for j in range(j0, top):
            out.append((alpha, j))
    return out


def length(w: AffWeylElt):
    return len(lambda_set(w))


def pi_elements(rs):
    """The group Pi = {pi_r}: length-zero elements permuting the diagram.

    pi_r = omega_r u_r^(-1), where u_r is of minimal length with
    u_r(omega_r) in P_-; found by brute-force search.
    """
    out = [AffWeylElt.identity(rs)]
    for r in range(rs.n):
        omega_r = tuple(int(i == r) for i in range(rs.n))
        # minuscule test: (alpha, omega_r) <= 1 for all positive alpha
        if any(rs.pair(alpha, omega_r) > 1 for alpha in rs.pos_roots):
            continue
        best = None
        for w in rs.weyl:
            img = rs.w_apply(w, omega_r)
            if all(x <= 0 for x in img):
                if best is None or rs.w_length(w) < rs.w_length(best):
                    best = w
        u_inv = rs.w_inv(best)
        cand = AffWeylElt(rs, omega_r, rs.w_id) * AffWeylElt(rs, (0,) * rs.n, u_inv)
        assert length(cand) == 0, "pi_r must have length zero"
        out.append(cand)
    return out


def enumerate_by_length(rs, L):
    """Exact counts of extended affine Weyl elements of each length <= L.

    l(b.w) >= 2(rho, b_+) - |R_+| for the dominant representative, so
    coordinates are safely bounded by L + h.
    """
    bound = L + 3
    counts = {}
    ranges = range(-bound, bound + 1)
    if rs.n == 1:
        bs = [(m,) for m in ranges]
    else:
        bs = [(m1, m2) for m1 in ranges for m2 in ranges]
    for b in bs:
        for w in rs.weyl:
            el = AffWeylElt(rs, b, w)
            l = length(el)
            if l <= L:
                counts[l] = counts.get(l, 0) + 1
    return counts


def affine_poincare_rational(rs) -> Scalar:
    """|Pi|/(1-t)^n * prod (1-t^{d_i})/(1-t^{d_i-1}) as an exact Scalar."""
    one = Scalar.one()
    num = Scalar.integer(rs.pi_order)
    den = (one - Scalar.t_pow(1)) ** rs.n
    for d in rs.degrees:
        num = num * (one - Scalar.t_pow(d))
        den = den * (one - Scalar.t_pow(d - 1))
    return num / den


def affine_poincare_coeffs(rs, L):
    """Integer coefficients of the t-expansion of the rational formula."""
    # numerator and denominator as int coefficient lists in t
    def poly_mul(a, b):
        r = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                r[i + j] += x * y
        return r

    num = [rs.pi_order]
    den = [1]
    for d in rs.degrees:
        num = poly_mul(num, [1] + [0] * (d - 1) + [-1])
        den = poly_mul(den, [1] + [0] * (d - 2) + [-1])
    for _ in range(rs.n):
        den = poly_mul(den, [1, -1])
    # series division num/den up to t^L (den[0] = 1)
    assert den[0] == 1
    coeffs = []
    num = num + [0] * (L + 1)
    for j in range(L + 1):
        c = num[j] - sum(den[i] * coeffs[j - i]
                         for i in range(1, min(j, len(den) - 1) + 1))
        coeffs.append(c)
    return coeffs


def looijenga_dim(rs, l):
    if l <= 0:
        raise ValueError("level must be positive")
    if rs.kind == "A1":
        return 1 + l // 2
    delta = 2 if l % 3 == 0 else 0
    return ((l + 2) * (l + 1) // 2 + delta) // 3


def _level_set(rs, l):
    """C_l = {b in P_+ : (b, theta) <= l}."""
    out = []
    if rs.n == 1:
        for m in range(l + 1):
            if rs.pair((m,), rs.theta) <= l:
                out.append((m,))
    else:
        for m1 in range(l + 1):
            for m2 in range(l + 1):
                if rs.pair((m1, m2), rs.theta) <= l:
                    out.append((m1, m2))
    return out


def coinvariant_dim(rs, l):
    """dim of level-l coinvariants; equals looijenga_dim and is cross-checked
    by counting Pi-orbits on C_l under the affine action of (l omega_r) u_r."""
    if l <= 0:
        raise ValueError("level must be positive")
    pts = _level_set(rs, l)
    maps = []
    for r in range(rs.n):
        omega_r = tuple(int(i == r) for i in range(rs.n))
        if any(rs.pair(alpha, omega_r) > 1 for alpha in rs.pos_roots):
            continue
        best = None
        for w in rs.weyl:
            img = rs.w_apply(w, omega_r)
            if all(x <= 0 for x in img):
                if best is None or rs.w_length(w) < rs.w_length(best):
                    best = w
        # x -> l*omega_r + u_r^(-1)(x): the dilated affine action of pi_r
        lomega = tuple(l * x for x in omega_r)
        act = AffWeylElt(rs, lomega, rs.w_inv(best))
        maps.append(act)
    # orbit count under the group generated by the maps
    index = {p: i for i, p in enumerate(pts)}
    parent = list(range(len(pts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    for act in maps:
        for p in pts:
            q = act.act_point(p)
            qi = tuple(int(x) for x in q)
            assert qi in index, "Pi must permute C_l"
            union(index[p], index[qi])
    orbits = len({find(i) for i in range(len(pts))})
    dim = looijenga_dim(rs, l)
    assert orbits == dim, "orbit count %d != closed formula %d" % (orbits, dim)
    return dim


@lru_cache(maxsize=None)
def get_rs(kind):
    return RootSystem(kind)
