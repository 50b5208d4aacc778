"""Finite-dimensional modules of the restricted quantum sl(2).

Every module carries exact matrices for E, F, K on a basis in which K is
diagonal (K is always diagonalizable since K^2p = 1, and keeping bases
K-homogeneous makes intertwiner computations block-diagonal).  The
families constructed here: the 2p irreducibles, the explicit two-step
gluings with two modules on top / on the bottom, the projective covers,
and the general gluing of m top copies with n socle copies along a pair
of coefficient matrices, which realizes every indecomposable of
semisimple length two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import AlgElem, base_algebra
from .cyclotomic import CycField, CycNum, qint


def _sign(a) -> int:
    if a in (1, -1):
        return a
    if a in ("+", "plus"):
        return 1
    if a in ("-", "minus"):
        return -1
    raise ValueError(f"bad sign {a!r}")


class CP1:
    """A point z = z1 : z2 of the projective line over Q(zeta_2p),
    stored in the canonical form (1, z2/z1) or (0, 1)."""

    __slots__ = ("z1", "z2")

    def __init__(self, z1: CycNum, z2: CycNum):
        if not z1 and not z2:
            raise ValueError("z1 and z2 must not both be zero")
        if z1:
            self.z1 = z1.field.one
            self.z2 = z2 / z1
        else:
            self.z1 = z1.field.zero
            self.z2 = z2.field.one

    @staticmethod
    def of(p: int, z1, z2) -> "CP1":
        field = CycField(2 * p)
        conv = lambda v: v if isinstance(v, CycNum) else field.from_fraction(v)
        return CP1(conv(z1), conv(z2))

    def __eq__(self, other):
        return isinstance(other, CP1) and self.z1 == other.z1 and self.z2 == other.z2

    def __hash__(self):
        return hash((self.z1, self.z2))

    def __repr__(self):
        return f"{self.z1.to_string()}:{self.z2.to_string()}"

    def sort_key(self):
        return (0 if self.z1 else 1, self.z2.num, self.z2.den)

    def to_json(self) -> list[str]:
        return [self.z1.to_string(), self.z2.to_string()]


class QMod:
    """A finite-dimensional module: exact E, F, K matrices on a
    K-eigenbasis."""

    def __init__(self, p, mat_e, mat_f, weights, label=None, field=None):
        self.p = p
        self.field = field or (weights[0].field if weights else CycField(2 * p))
        self.dim = len(weights)
        self.mat_e = mat_e
        self.mat_f = mat_f
        self.weights = list(weights)
        self.label = label

    @property
    def mat_k(self):
        mat = linalg.zeros(self.field, self.dim, self.dim)
        for i, w in enumerate(self.weights):
            mat[i][i] = w
        return mat

    def mat(self, gen: str):
        if gen == "E":
            return self.mat_e
        if gen == "F":
            return self.mat_f
        if gen == "K":
            return self.mat_k
        raise ValueError(f"unknown generator {gen!r}")

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"QMod(p={self.p}, dim={self.dim}{tag})"

    def relabel(self, label):
        return QMod(self.p, self.mat_e, self.mat_f, self.weights, label, self.field)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        def sparse(mat):
            return [
                [i, j, x.to_json()]
                for i, row in enumerate(mat)
                for j, x in enumerate(row)
                if x
            ]

        return {
            "p": self.p,
            "dim": self.dim,
            "label": self.label,
            "weights": [w.to_json() for w in self.weights],
            "E": sparse(self.mat_e),
            "F": sparse(self.mat_f),
            "K": [[i, i, w.to_json()] for i, w in enumerate(self.weights)],
        }

    @staticmethod
    def from_json(data: dict) -> "QMod":
        p = int(data["p"])
        dim = int(data["dim"])
        field = CycField(2 * p)
        weights = [CycNum.from_json(w) for w in data["weights"]]
        if len(weights) != dim:
            raise ValueError("weight list does not match the stated dimension")

        def dense(entries):
            mat = linalg.zeros(field, dim, dim)
            for i, j, c in entries:
                mat[int(i)][int(j)] = CycNum.from_json(c)
            return mat

        m = QMod(p, dense(data["E"]), dense(data["F"]), weights, data.get("label"), field)
        kmat = dense(data.get("K", []))
        for i in range(dim):
            for j in range(dim):
                expect = weights[i] if i == j else field.zero
                if data.get("K") and kmat[i][j] != expect:
                    raise ValueError("K entries disagree with the weight list")
        return m


@dataclass
class ModuleCheck:
    ok: bool
    violations: list[str]


def verify_module(m: QMod) -> ModuleCheck:
    """Exact check of all defining relations on the stored matrices."""
    field, p = m.field, m.p
    q = CycField(2 * p).gen().embed(field.order)
    violations = []
    for w in m.weights:
        if w ** (2 * p) != field.one:
            violations.append("K eigenvalue is not a 2p-th root of unity")
            break
    e_p = linalg.mat_pow(m.mat_e, p) if m.dim else []
    f_p = linalg.mat_pow(m.mat_f, p) if m.dim else []
    if not linalg.is_zero_mat(e_p):
        violations.append("E^p != 0")
    if not linalg.is_zero_mat(f_p):
        violations.append("F^p != 0")
    q2 = q * q
    q2inv = q2.inv()
    for i in range(m.dim):
        for j in range(m.dim):
            if m.mat_e[i][j] and m.weights[i] != q2 * m.weights[j]:
                violations.append("KEK^-1 != q^2 E")
            if m.mat_f[i][j] and m.weights[i] != q2inv * m.weights[j]:
                violations.append("KFK^-1 != q^-2 F")
    comm = linalg.mat_sub(
        linalg.mat_mul(m.mat_e, m.mat_f), linalg.mat_mul(m.mat_f, m.mat_e)
    )
    qdiff_inv = (q - q.inv()).inv()
    for i in range(m.dim):
        for j in range(m.dim):
            expect = (m.weights[i] - m.weights[i].inv()) * qdiff_inv if i == j else field.zero
            if comm[i][j] != expect:
                violations.append("[E,F] != (K - K^-1)/(q - q^-1)")
                break
        else:
            continue
        break
    # deduplicate, keep order
    seen, uniq = set(), []
    for v in violations:
        if v not in seen:
            seen.add(v)
            uniq.append(v)
    return ModuleCheck(not uniq, uniq)


# -- weights of the irreducibles --------------------------------------------------


def irreducible_weights(p: int, a, s: int) -> list[CycNum]:
    a = _sign(a)
    field = CycField(2 * p)
    return [field.root_of_unity(s - 1 - 2 * n) * a for n in range(s)]


# -- constructors -----------------------------------------------------------------


def irreducible(p: int, a, s: int) -> QMod:
    """The irreducible of dimension s and highest weight (+-)q^(s-1)."""
    a = _sign(a)
    if not 1 <= s <= p:
        raise ValueError(f"irreducible needs 1 <= s <= p, got s={s}")
    field = CycField(2 * p)
    mat_e = linalg.zeros(field, s, s)
    mat_f = linalg.zeros(field, s, s)
    for n in range(s):
        if n >= 1:
            mat_e[n - 1][n] = qint(p, n) * qint(p, s - n) * a
        if n + 1 < s:
            mat_f[n + 1][n] = field.one
    return QMod(p, mat_e, mat_f, irreducible_weights(p, a, s),
                label=f"X{'+' if a > 0 else '-'}_{s}", field=field)


def build_glued(p: int, a, s: int, rep) -> QMod:
    """The module with rep.d0 copies of the sign-a dimension-s irreducible
    on top and rep.d1 copies of the opposite irreducible in the socle; the
    F-gluing is weighted by rep.r and the E-gluing by rep.rbar."""
    a = _sign(a)
    if not 1 <= s <= p - 1:
        raise ValueError(f"glued modules need 1 <= s <= p-1, got s={s}")
    field = CycField(2 * p)
    m, n = rep.d0, rep.d1
    for mat in (rep.r, rep.rbar):
        if len(mat) != n or any(len(row) != m for row in mat):
            raise ValueError("malformed quiver representation: arrow matrices must be d1 x d0")
    t = p - s
    dim = m * s + n * t
    top = lambda j, nu: j * s + nu
    soc = lambda i, k: m * s + i * t + k
    mat_e = linalg.zeros(field, dim, dim)
    mat_f = linalg.zeros(field, dim, dim)
    weights: list[CycNum] = [field.zero] * dim
    wt_top = irreducible_weights(p, a, s)
    wt_soc = irreducible_weights(p, -a, t)
    for j in range(m):
        for nu in range(s):
            weights[top(j, nu)] = wt_top[nu]
            if nu >= 1:
                mat_e[top(j, nu - 1)][top(j, nu)] = qint(p, nu) * qint(p, s - nu) * a
            if nu + 1 < s:
                mat_f[top(j, nu + 1)][top(j, nu)] = field.one
        for i in range(n):
            if rep.rbar[i][j]:
                mat_e[soc(i, t - 1)][top(j, 0)] = rep.rbar[i][j]
            if rep.r[i][j]:
                mat_f[soc(i, 0)][top(j, s - 1)] = rep.r[i][j]
    for i in range(n):
        for k in range(t):
            weights[soc(i, k)] = wt_soc[k]
            if k >= 1:
                mat_e[soc(i, k - 1)][soc(i, k)] = -a * qint(p, k) * qint(p, t - k)
            if k + 1 < t:
                mat_f[soc(i, k + 1)][soc(i, k)] = field.one
    return QMod(p, mat_e, mat_f, weights, field=field)


class _RawRep:
    def __init__(self, field, r, rbar):
        self.r = r
        self.rbar = rbar
        self.d1 = len(r)
        self.d0 = len(r[0]) if r else 0


def build_w2(p: int, a, s: int) -> QMod:
    """Two copies on top, one in the socle: E glues the first top copy,
    F glues the second."""
    a = _sign(a)
    field = CycField(2 * p)
    one, zero = field.one, field.zero
    rep = _RawRep(field, [[zero, one]], [[one, zero]])
    m = build_glued(p, a, s, rep)
    return m.relabel(f"W{'+' if a > 0 else '-'}_{s}(2)")


def build_m2(p: int, a, s: int) -> QMod:
    """One copy on top, two in the socle: E glues into the first socle
    copy, F into the second."""
    a = _sign(a)
    field = CycField(2 * p)
    one, zero = field.one, field.zero
    rep = _RawRep(field, [[zero], [one]], [[one], [zero]])
    m = build_glued(p, a, s, rep)
    return m.relabel(f"M{'+' if a > 0 else '-'}_{s}(2)")


def build_o1(p: int, a, s: int, z: CP1) -> QMod:
    """The CP1 family with one top and one socle copy; z = 1:0 is the
    Verma module, z = 0:1 its contragredient."""
    a = _sign(a)
    rep = _RawRep(z.z1.field, [[z.z1]], [[z.z2]])
    m = build_glued(p, a, s, rep)
    return m.relabel(f"O{'+' if a > 0 else '-'}_{s}(1,{z!r})")


def build_p(p: int, a, s: int) -> QMod:
    """The projective cover of the sign-a dimension-s irreducible,
    dimension 2p, with the explicit basis {a_n, b_n, x_k, y_k}."""
    a = _sign(a)
    if not 1 <= s <= p - 1:
        raise ValueError(f"projective covers need 1 <= s <= p-1, got s={s}")
    field = CycField(2 * p)
    one = field.one
    t = p - s
    A = lambda n: n
    B = lambda n: s + n
    X = lambda k: 2 * s + k
    Y = lambda k: 2 * s + t + k
    dim = 2 * p
    mat_e = linalg.zeros(field, dim, dim)
    mat_f = linalg.zeros(field, dim, dim)
    weights: list[CycNum] = [field.zero] * dim
    wt_top = irreducible_weights(p, a, s)
    wt_soc = irreducible_weights(p, -a, t)
    for n in range(s):
        weights[A(n)] = wt_top[n]
        weights[B(n)] = wt_top[n]
        coef = qint(p, n) * qint(p, s - n) * a
        if n >= 1:
            mat_e[A(n - 1)][A(n)] = coef
            mat_e[B(n - 1)][B(n)] = coef
            mat_e[A(n - 1)][B(n)] = one
        if n + 1 < s:
            mat_f[A(n + 1)][A(n)] = one
            mat_f[B(n + 1)][B(n)] = one
    for k in range(t):
        weights[X(k)] = wt_soc[k]
        weights[Y(k)] = wt_soc[k]
        coef = -a * qint(p, k) * qint(p, t - k)
        if k >= 1:
            mat_e[X(k - 1)][X(k)] = coef
            mat_e[Y(k - 1)][Y(k)] = coef
        if k + 1 < t:
            mat_f[X(k + 1)][X(k)] = one
            mat_f[Y(k + 1)][Y(k)] = one
    mat_e[A(s - 1)][Y(0)] = one
    mat_e[X(t - 1)][B(0)] = one
    mat_f[A(0)][X(t - 1)] = one
    mat_f[Y(0)][B(s - 1)] = one
    return QMod(p, mat_e, mat_f, weights,
                label=f"P{'+' if a > 0 else '-'}_{s}", field=field)


def steinberg(p: int, a) -> QMod:
    return irreducible(p, a, p)


def direct_sum(*mods: QMod) -> QMod:
    mods = [m for m in mods if m.dim or True]
    if not mods:
        raise ValueError("direct sum of nothing")
    p, field = mods[0].p, mods[0].field
    for m in mods:
        if m.p != p or m.field is not field:
            raise ValueError("direct sum needs modules over the same algebra")
    dim = sum(m.dim for m in mods)
    mat_e = linalg.zeros(field, dim, dim)
    mat_f = linalg.zeros(field, dim, dim)
    weights = []
    off = 0
    for m in mods:
        for i in range(m.dim):
            for j in range(m.dim):
                mat_e[off + i][off + j] = m.mat_e[i][j]
                mat_f[off + i][off + j] = m.mat_f[i][j]
        weights.extend(m.weights)
        off += m.dim
    return QMod(p, mat_e, mat_f, weights, field=field)


def tensor(a: QMod, b: QMod) -> QMod:
    """Tensor product along the coproduct: E acts as 1 (x) E + E (x) K,
    F as K^-1 (x) F + F (x) 1, K as K (x) K."""
    if a.p != b.p:
        raise ValueError("tensor needs the same p")
    field = a.field
    ia, ib = linalg.identity(field, a.dim), linalg.identity(field, b.dim)
    ka = a.mat_k
    kb = b.mat_k
    ka_inv = linalg.zeros(field, a.dim, a.dim)
    for i, w in enumerate(a.weights):
        ka_inv[i][i] = w.inv()
    mat_e = linalg.mat_add(linalg.kron(ia, b.mat_e), linalg.kron(a.mat_e, kb))
    mat_f = linalg.mat_add(linalg.kron(ka_inv, b.mat_f), linalg.kron(a.mat_f, ib))
    weights = [wa * wb for wa in a.weights for wb in b.weights]
    return QMod(a.p, mat_e, mat_f, weights, field=field)


def dual(m: QMod) -> QMod:
    """Contragredient module: x acts on the dual basis through the
    antipode, (x f)(v) = f(S(x) v)."""
    field = m.field
    k_inv = [w.inv() for w in m.weights]
    ki_mat = linalg.zeros(field, m.dim, m.dim)
    k_mat = m.mat_k
    for i, w in enumerate(k_inv):
        ki_mat[i][i] = w
    se = linalg.mat_neg(linalg.mat_mul(m.mat_e, ki_mat))  # S(E) = -E K^-1
    sf = linalg.mat_neg(linalg.mat_mul(k_mat, m.mat_f))  # S(F) = -K F
    return QMod(m.p, linalg.transpose(se), linalg.transpose(sf), k_inv, field=field)


def weight_character(m: QMod) -> dict[CycNum, int]:
    out: dict[CycNum, int] = {}
    for w in m.weights:
        out[w] = out.get(w, 0) + 1
    return out


def regular_module(p: int) -> QMod:
    """The left regular module on the PBW basis, conjugated into a
    K-eigenbasis by the discrete Fourier transform in the K-exponent."""
    alg = base_algebra(p)
    field = alg.field
    terms = list(alg.basis_terms())
    index = {t: i for i, t in enumerate(terms)}
    dim = len(terms)

    def left_mult(gen_term):
        mat = linalg.zeros(field, dim, dim)
        for t in terms:
            for u, c in alg.mul_terms(gen_term, t).items():
                mat[index[u]][index[t]] = c
        return mat

    mat_e = left_mult((1, 0, 0))
    mat_f = left_mult((0, 1, 0))
    # Fourier columns: v_(i,j,m) = sum_l q^(-m l) E^i F^j K^l,
    # eigenvectors of left multiplication by K with eigenvalue q^(2(i-j)+m).
    fw = linalg.zeros(field, dim, dim)
    bw = linalg.zeros(field, dim, dim)
    inv2p = field.from_fraction(Fraction(1, 2 * p))
    weights: list[CycNum] = [field.zero] * dim
    for (i, j, m), cidx in index.items():
        weights[cidx] = alg.qpow(2 * (i - j) + m)
        for l in range(2 * p):
            fw[index[(i, j, l)]][cidx] = alg.qpow(-m * l)
            bw[cidx][index[(i, j, l)]] = alg.qpow(m * l) * inv2p
    mat_e = linalg.mat_mul(bw, linalg.mat_mul(mat_e, fw))
    mat_f = linalg.mat_mul(bw, linalg.mat_mul(mat_f, fw))
    mat_k = linalg.mat_mul(bw, linalg.mat_mul(left_mult((0, 0, 1)), fw))
    for i in range(dim):
        for j in range(dim):
            expect = weights[i] if i == j else field.zero
            assert mat_k[i][j] == expect, "Fourier basis must diagonalize K"
    return QMod(p, mat_e, mat_f, weights, label="Reg", field=field)


def action_matrix(m: QMod, elem: AlgElem):
    """Action matrix of an algebra element (base algebra, K-Cartan)."""
    if elem.alg.kk != 1:
        raise ValueError("action of the extended algebra needs a chosen square root of K")
    if elem.alg.p != m.p:
        raise ValueError("element and module have different p")
    field = m.field
    e_p = [linalg.identity(field, m.dim)]
    f_p = [linalg.identity(field, m.dim)]
    for _ in range(m.p - 1):
        e_p.append(linalg.mat_mul(e_p[-1], m.mat_e))
        f_p.append(linalg.mat_mul(f_p[-1], m.mat_f))
    out = linalg.zeros(field, m.dim, m.dim)
    for (i, j, l), c in elem.terms.items():
        c = c if c.field is field else c.embed(field.order)
        mat = linalg.mat_mul(e_p[i], f_p[j])
        kdiag = [w ** l for w in m.weights]
        for r in range(m.dim):
            row = mat[r]
            for cidx in range(m.dim):
                x = row[cidx]
                if x:
                    out[r][cidx] = out[r][cidx] + c * x * kdiag[cidx]
    return out


# -- intertwiners and sub/quotient structure ------------------------------------


def intertwiner_basis(src: QMod, dst: QMod) -> list[list[list[CycNum]]]:
    """Canonical basis of Hom(src, dst): matrices Phi with
    Phi E = E Phi, Phi F = F Phi, Phi K = K Phi, solved exactly on
    K-weight-compatible positions."""
    if src.p != dst.p:
        raise ValueError("intertwiners need the same p")
    field = src.field
    pairs = [
        (r, c)
        for r in range(dst.dim)
        for c in range(src.dim)
        if dst.weights[r] == src.weights[c]
    ]
    if not pairs:
        return []
    unk = {rc: k for k, rc in enumerate(pairs)}
    eqs: dict[tuple, dict[int, CycNum]] = {}

    def add(eq_key, col, coeff):
        row = eqs.setdefault(eq_key, {})
        cur = row.get(col)
        tot = coeff if cur is None else cur + coeff
        if tot:
            row[col] = tot
        elif cur is not None:
            del row[col]

    for gname, g_dst, g_src in (("E", dst.mat_e, src.mat_e), ("F", dst.mat_f, src.mat_f)):
        for (k, c), col in unk.items():
            for r in range(dst.dim):
                x = g_dst[r][k]
                if x:
                    add((gname, r, c), col, x)
        for (r, k), col in unk.items():
            for c in range(src.dim):
                x = g_src[k][c]
                if x:
                    add((gname, r, c), col, -x)
    keys = sorted(eqs.keys(), key=repr)
    mat = [[eqs[k].get(col, field.zero) for col in range(len(pairs))] for k in keys]
    if not mat:
        vectors = [[field.one if i == k else field.zero for i in range(len(pairs))] for k in range(len(pairs))]
    else:
        vectors = linalg.nullspace(mat)
    out = []
    for v in vectors:
        phi = linalg.zeros(field, dst.dim, src.dim)
        for (r, c), col in unk.items():
            phi[r][c] = v[col]
        out.append(phi)
    return out


def submodule(m: QMod, columns: list[list[CycNum]]) -> tuple[QMod, list[list[CycNum]]]:
    """Restrict the action to the span of K-homogeneous columns; returns
    the submodule and the embedding matrix (dim x k)."""
    field = m.field
    k = len(columns)
    if k == 0:
        return QMod(m.p, [], [], [], field=field), [[] for _ in range(m.dim)]
    emb = [[columns[j][i] for j in range(k)] for i in range(m.dim)]
    weights = []
    for j in range(k):
        support = [i for i in range(m.dim) if emb[i][j]]
        wset = {m.weights[i] for i in support}
        if len(wset) != 1:
            raise ValueError("submodule basis vectors must be K-homogeneous")
        weights.append(wset.pop())
    sub_e = linalg.solve(emb, linalg.mat_mul(m.mat_e, emb))
    sub_f = linalg.solve(emb, linalg.mat_mul(m.mat_f, emb))
    if sub_e is None or sub_f is None:
        raise ValueError("the given columns do not span a submodule")
    return QMod(m.p, sub_e, sub_f, weights, field=field), emb


def quotient(m: QMod, sub_columns: list[list[CycNum]]) -> tuple[QMod, list[list[CycNum]]]:
    """Quotient by the span of K-homogeneous columns; returns the quotient
    module and the projection matrix (k x dim)."""
    field = m.field
    rs = linalg.RowSpace(field, m.dim)
    for col in sub_columns:
        rs.add(col)
    pivots = set(rs.pivots)
    keep = [i for i in range(m.dim) if i not in pivots]

    def project(vec):
        red = rs._reduce(vec)
        return [red[i] for i in keep]

    weights = [m.weights[i] for i in keep]
    proj = [project([field.one if i == r else field.zero for i in range(m.dim)]) for r in range(m.dim)]
    proj = [list(row) for row in zip(*proj)]  # now k x dim
    q_e = [project(linalg.mat_vec(m.mat_e, _basis_vec(field, m.dim, i))) for i in keep]
    q_f = [project(linalg.mat_vec(m.mat_f, _basis_vec(field, m.dim, i))) for i in keep]
    q_e = [list(row) for row in zip(*q_e)] if q_e else []
    q_f = [list(row) for row in zip(*q_f)] if q_f else []
    return QMod(m.p, q_e, q_f, weights, field=field), proj


def _basis_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def generated_submodule(m: QMod, columns: list[list[CycNum]]) -> list[list[CycNum]]:
    """Closure of the span of the given vectors under E and F, as a list
    of K-homogeneous basis columns."""
    field = m.field
    rs = linalg.RowSpace(field, m.dim)
    frontier = []
    for col in columns:
        if rs.add(col):
            frontier.append(col)
    while frontier:
        nxt = []
        for v in frontier:
            for mat in (m.mat_e, m.mat_f):
                img = linalg.mat_vec(mat, v)
                if any(img) and rs.add(img):
                    nxt.append(img)
        frontier = nxt
    # split the row-space basis into K-homogeneous vectors: rows of the
    # rref are already homogeneous because weights partition coordinates
    cols = []
    for row in rs.basis():
        support_weights = {m.weights[i] for i, x in enumerate(row) if x}
        if len(support_weights) > 1:
            # re-split by weight
            for w in support_weights:
                piece = [x if m.weights[i] == w else field.zero for i, x in enumerate(row)]
                cols.append(piece)
        else:
            cols.append(list(row))
    # reduce again to an independent set
    rs2 = linalg.RowSpace(field, m.dim)
    out = []
    for colv in cols:
        if rs2.add(colv):
            out.append(colv)
    return out


def radical_columns(m: QMod) -> list[list[CycNum]]:
    """Basis of rad(m) = intersection of the kernels of all maps onto
    irreducibles, as K-homogeneous columns."""
    field = m.field
    stacked: list[list[CycNum]] = []
    for a in (1, -1):
        for s in range(1, m.p + 1):
            x = irreducible(m.p, a, s)
            for phi in intertwiner_basis(m, x):
                stacked.extend(phi)
    if not stacked:
        return [_basis_vec(field, m.dim, i) for i in range(m.dim)]
    vecs = linalg.nullspace(stacked)
    # null space of a weight-compatible system is weight-homogeneous per
    # vector except for accidental same-weight mixing, which is fine; but
    # re-split defensively
    out = []
    rs = linalg.RowSpace(field, m.dim)
    for v in vecs:
        wset = {m.weights[i] for i, x in enumerate(v) if x}
        pieces = [v] if len(wset) <= 1 else [
            [x if m.weights[i] == w else field.zero for i, x in enumerate(v)] for w in wset
        ]
        for piece in pieces:
            if rs.add(piece):
                out.append(piece)
    return out


def socle_columns(m: QMod) -> list[list[CycNum]]:
    """Basis of the maximal semisimple submodule: the span of the images
    of all maps from irreducibles."""
    field = m.field
    rs = linalg.RowSpace(field, m.dim)
    out = []
    for a in (1, -1):
        for s in range(1, m.p + 1):
            x = irreducible(m.p, a, s)
            for phi in intertwiner_basis(x, m):
                for j in range(x.dim):
                    col = [phi[i][j] for i in range(m.dim)]
                    if any(col) and rs.add(col):
                        out.append(col)
    return out


def semisimple_length_of(m: QMod) -> int:
    """Length of the radical series (the minimal semisimple filtration
    length for these algebras)."""
    length = 0
    cur = m
    while cur.dim:
        cols = radical_columns(cur)
        nxt, _ = submodule(cur, cols)
        length += 1
        if nxt.dim == cur.dim:
            raise ValueError("radical series does not terminate")
        cur = nxt
    return length


def block_index(m: QMod) -> int:
    """The Casimir block s in 0..p the module lives in; raises when the
    module mixes blocks."""
    from .algebra import casimir

    cd = casimir(m.p)
    act = action_matrix(m, cd.element)
    for s, beta in enumerate(cd.roots):
        shifted = [
            [act[i][j] - (beta if i == j else m.field.zero) for j in range(m.dim)]
            for i in range(m.dim)
        ]
        if linalg.is_zero_mat(linalg.mat_mul(shifted, shifted)):
            return s
    raise ValueError("module does not lie in a single Casimir block")


def coerce_field(m: QMod, order: int) -> QMod:
    """Base-change the module matrices into a larger cyclotomic field."""
    conv = lambda mat: [[x.embed(order) for x in row] for row in mat]
    weights = [w.embed(order) for w in m.weights]
    return QMod(m.p, conv(m.mat_e), conv(m.mat_f), weights, m.label,
                field=CycField(order))
