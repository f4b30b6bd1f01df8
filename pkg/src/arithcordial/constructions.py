"""Explicit cordial labelings for the graph families with known constructions.

Each ``label_*`` function builds the graph, the structure it is meant for and
the labeling, and returns them together with the edge counts that the
construction predicts.  Callers are expected to run :func:`verify` (or
``result.report()``) rather than trust the prediction.

Enumerations of the zeta classes (``r_i`` for zeta = 1, ``s_i`` for zeta = 0)
are always taken in ascending order.
"""

from collections import Counter
from dataclasses import dataclass, field

from . import graphs as gr
from . import numtheory as nt
from .errors import HypothesisFailure, PropertyViolation, SizeMismatch
from .labeling import as_sequence, check_bijective, verify
from .structures import (
    PRODUCT,
    SUM,
    ArithmeticStructure,
    ZetaSpec,
    check_prop_balance,
    check_prop_congruence,
    check_prop_multiplicative,
    residue_classes,
)


@dataclass(frozen=True)
class ConstructionResult:
    graph: gr.Graph
    structure: ArithmeticStructure
    labeling: tuple
    predicted: tuple = None
    provenance: str = ""
    notes: tuple = field(default=(), compare=False)

    def report(self):
        return verify(self.graph, self.labeling, self.structure)

    def to_json(self):
        return {
            "provenance": self.provenance,
            "structure": self.structure.spec,
            "label_set": list(self.structure.label_set),
            "graph": self.graph.to_json(),
            "labels": {str(v): x for v, x in enumerate(self.labeling)},
            "predicted": None if self.predicted is None else list(self.predicted),
            "notes": list(self.notes),
        }


def _require_odd_prime(p, minimum=3):
    if not nt.is_odd_prime(p) or p < minimum:
        raise HypothesisFailure(f"need an odd prime >= {minimum}, got {p}")


def _structure(p, structure, star, labels):
    if structure is None:
        return ArithmeticStructure(p, ZetaSpec("legendre"), star, tuple(labels))
    if structure.eta != p:
        raise HypothesisFailure(f"structure modulus {structure.eta} differs from p = {p}")
    if structure.star != star:
        raise HypothesisFailure(f"construction needs star {star}, got {structure.star}")
    return structure.with_labels(labels)


def _require_props(struct, multiplicative=False):
    checks = [check_prop_congruence(struct), check_prop_balance(struct)]
    if multiplicative:
        checks.append(check_prop_multiplicative(struct))
    for c in checks:
        if not c:
            raise PropertyViolation(c.name, struct.spec, c.detail)


def _classes(struct):
    c = residue_classes(struct)
    return list(c.A1), list(c.A0)


def _assemble(graph, struct, values, predicted, provenance, notes=()):
    labeling = tuple(values[v] for v in range(graph.order))
    check_bijective(labeling, struct.label_set)
    return ConstructionResult(graph, struct, labeling, predicted, provenance, tuple(notes))


# -- stars under the Jacobi zeta ---------------------------------------------


def label_star_jacobi(eta, m=1, c=1):
    """Star of order m*phi(eta)+1: centre gets c*eta, leaves get the m residue blocks."""
    if eta < 3 or eta % 2 == 0:
        raise HypothesisFailure(f"Jacobi star needs an odd modulus >= 3, got {eta}")
    if nt.is_perfect_square(eta):
        raise HypothesisFailure(f"{eta} is a perfect square; the Jacobi zeta is unbalanced")
    if m < 1 or c < 1:
        raise HypothesisFailure("m and c must be positive")
    phi = nt.euler_phi(eta)
    leaves = [i + j * eta for j in range(m) for i in nt.coprime_residues(eta)]
    graph = gr.star(m * phi + 1)
    labels = [c * eta] + leaves
    struct = ArithmeticStructure(eta, ZetaSpec("jacobi"), SUM, tuple(labels))
    return _assemble(
        graph,
        struct,
        labels,
        (m * phi // 2, m * phi // 2),
        f"star-jacobi(eta={eta}, m={m}, c={c})",
    )


@dataclass(frozen=True)
class SufficientCertificate:
    ok: bool
    blocks: tuple = ()
    condition: str = ""
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_sufficient_condition(graph, labeling, eta, star=SUM):
    """Do the edge values f(u)*f(v) form distinct, complete coprime-residue blocks?

    On success the certificate lists the block indices i (values j + i*eta).
    Any zeta that is residue-invariant and balanced then gives e0 == e1.
    """
    f = as_sequence(labeling, graph.order)
    phi = nt.euler_phi(eta)
    h = [star.apply(f[u], f[v]) for u, v in graph.edges]
    if len(h) % phi:
        return SufficientCertificate(
            False, condition="i", reason=f"size {len(h)} is not a multiple of phi({eta}) = {phi}"
        )
    dup = [x for x, k in Counter(h).items() if k > 1]
    if dup:
        return SufficientCertificate(
            False, condition="ii", reason=f"repeated edge values {sorted(dup)}"
        )
    units = set(nt.coprime_residues(eta))
    by_block = {}
    for x in h:
        by_block.setdefault(x // eta, set()).add(x % eta)
    for i, residues in sorted(by_block.items()):
        if residues != units:
            return SufficientCertificate(
                False,
                condition="i",
                reason=f"block {i} holds residues {sorted(residues)}, not the units mod {eta}",
            )
    return SufficientCertificate(True, blocks=tuple(sorted(by_block)))


# -- sum structures -------------------------------------------------------------


def label_ladder(p, structure=None):
    """Ladder L_p over {1..2p}."""
    _require_odd_prime(p)
    struct = _structure(p, structure, SUM, range(1, 2 * p + 1))
    _require_props(struct)
    graph = gr.ladder(p)
    values = {}
    for j in (1, 2):
        for i in range(1, p + 1):
            if i <= (p + 1) // 2:
                x = i + (p - 1) // 2 + (j - 1) * p
            else:
                x = i - (p + 1) // 2 + (j - 1) * p
            values[(j - 1) * p + i - 1] = x
    half = (p - 1) // 2
    return _assemble(
        graph,
        struct,
        values,
        (3 * half + 1, 3 * half),
        f"ladder(p={p})",
        ("e0 = p cannot hold with 3p-2 edges; the verified count is 3(p-1)/2+1",),
    )


def label_snake(n, p, structure=None):
    """Snake of n copies of C_p, labeled row by row over {1..np}; needs zeta(1) = 1."""
    _require_odd_prime(p)
    if n < 2:
        raise HypothesisFailure(f"snake construction needs n >= 2, got {n}")
    struct = _structure(p, structure, SUM, range(1, n * p + 1))
    _require_props(struct)
    if struct.zeta_value(1) != 1:
        raise HypothesisFailure("snake construction needs zeta(1) = 1")
    graph = gr.snake(n, p)
    values = {j * p + i: i + 1 + j * p for j in range(n) for i in range(p)}
    half = (p - 1) // 2
    return _assemble(
        graph, struct, values, (n * half + n, n * half + n - 1), f"snake(n={n}, p={p})"
    )


def _size_offset(g, base, what):
    eps = g.size - base
    if eps not in (-1, 0, 1):
        raise SizeMismatch(f"{what} has size {g.size}; need {base} + eps with eps in {{-1, 0, 1}}")
    return eps


def label_corona_path(g, p, structure=None, enforce=True):
    """G o P_{p-1} over {1..np}, for connected G of order n and size n + eps.

    The balance needs zeta(1) = 1 and zeta(2) = 0.  With ``enforce=False`` the
    labeling is produced anyway (for negative controls); ``predicted`` then
    follows whichever value zeta(2) actually takes.
    """
    _require_odd_prime(p)
    n = g.order
    if n < 2 or not g.connected():
        raise HypothesisFailure("G must be connected with at least 2 vertices")
    eps = _size_offset(g, n, "G")
    struct = _structure(p, structure, SUM, range(1, n * p + 1))
    _require_props(struct)
    z1, z2 = struct.zeta_value(1), struct.zeta_value(2)
    if enforce and (z1, z2) != (1, 0):
        raise HypothesisFailure(f"need zeta(1)=1 and zeta(2)=0, got {z1} and {z2} at p={p}")
    graph = gr.corona(g, gr.path(p - 1))
    values = {}
    for i in range(n):
        values[i] = (p + 1) // 2 + i * p
        for j in range(1, p):
            if j <= (p - 1) // 2:
                x = j + (p + 1) // 2 + i * p
            else:
                x = j - (p - 1) // 2 + i * p
            values[n + i * (p - 1) + j - 1] = x
    if z1 == 1 and z2 == 0:
        predicted = (n * (p - 1), n * (p - 1) + eps)
    elif z1 == 1:
        predicted = (n * p, n * (p - 2) + eps)
    else:
        predicted = None
    notes = (
        "edges of G carry residue 1, not 2; only zeta(1) = 1 and zeta(2) = 0 balance the count",
    )
    return _assemble(graph, struct, values, predicted, f"corona-path(n={n}, eps={eps}, p={p})", notes)


def label_tensor_complete(g, p, structure=None):
    """K_p x G for connected bipartite G, labeled partite set by partite set."""
    _require_odd_prime(p)
    n = g.order
    if n < 2:
        raise HypothesisFailure("G needs at least 2 vertices")
    part1, part2 = gr.bipartite_partition(g)
    struct = _structure(p, structure, SUM, range(1, n * p + 1))
    _require_props(struct)
    graph = gr.tensor(gr.complete(p), g)
    n1 = len(part1)
    values = {}
    for i in range(1, p + 1):
        for t, x in enumerate(part1, start=1):
            values[(i - 1) * n + x] = i + (t - 1) * p
        for t, x in enumerate(part2, start=1):
            offset = (n1 + t - 1) * p
            values[(i - 1) * n + x] = (p - i if i < p else p) + offset
    e = g.size * p * (p - 1) // 2
    return _assemble(graph, struct, values, (e, e), f"tensor-complete(p={p}, m={g.size})")


# -- product structures -------------------------------------------------------


def _product_structure(p, structure, labels):
    struct = _structure(p, structure, PRODUCT, labels)
    _require_props(struct, multiplicative=True)
    return struct


def label_join_kayak(p, structure=None):
    """Empty K_p joined with the kayak paddle KP_{(p-1)/2, 0, (p-1)/2} over {1..2p-1}."""
    _require_odd_prime(p, 7)
    struct = _product_structure(p, structure, range(1, 2 * p))
    r, s = _classes(struct)
    k = (p - 1) // 2
    graph = gr.join(gr.empty(p), gr.kayak_paddle(k, 0, k))
    values = {}
    for i in range(k):
        values[i] = r[i]
        values[k + i] = s[i]
        values[p + i] = r[i] + p
        values[p + k + i] = s[i] + p
    values[p - 1] = p
    e1 = (p - 1) * (p + 1) // 2
    return _assemble(graph, struct, values, (e1 + 1, e1), f"join-kayak(p={p})")


@dataclass(frozen=True)
class JoinCertificate:
    ok: bool
    epsilon: int
    omega: dict
    b_size: int

    def __bool__(self):
        return self.ok

    @property
    def edge_difference(self):
        """e0 - e1 on the join implied by the counts (it is -epsilon)."""
        return -self.epsilon


def check_join_condition(g1, g2, labeling, p, structure=None):
    """Evaluate the balance identity for a labeling of G1 + G2 over {1..p-1}.

    ``labeling`` indexes the join's vertices (G1 first).  The certificate holds
    the epsilon that makes the identity true, when it lies in {-1, 0, 1}.
    """
    _require_odd_prime(p)
    k = (p - 1) // 2
    if g1.order != k or g2.order != k:
        raise SizeMismatch(f"both graphs need order {k}, got {g1.order} and {g2.order}")
    struct = _product_structure(p, structure, range(1, p))
    f = as_sequence(labeling, 2 * k)
    if len(f) != 2 * k:
        raise SizeMismatch(f"expected {2 * k} labels, got {len(f)}")
    check_bijective(f, struct.label_set)
    chi = struct.chi_value
    omega = {(1, 1): 0, (1, -1): 0, (2, 1): 0, (2, -1): 0}
    for u, v in g1.edges:
        omega[(1, chi(f[u] * f[v]))] += 1
    for u, v in g2.edges:
        omega[(2, chi(f[k + u] * f[k + v]))] += 1
    b = sum(1 for v in range(k) if chi(f[v]) == 1)
    eps = (omega[(1, 1)] + omega[(2, 1)]) - (omega[(1, -1)] + omega[(2, -1)] + (2 * b - k) ** 2)
    return JoinCertificate(eps in (-1, 0, 1), eps, omega, b)


def label_join_path_cycle(p, structure=None):
    """P_{4k} + C_{4k} over {1..p-1} where (p-1)/2 = 4k."""
    _require_odd_prime(p, 17)
    if ((p - 1) // 2) % 4:
        raise HypothesisFailure(f"need (p-1)/2 divisible by 4, got p = {p}")
    struct = _product_structure(p, structure, range(1, p))
    r, s = _classes(struct)
    n = (p - 1) // 2
    kk = n // 4
    graph = gr.join(gr.path(n), gr.cycle(n))
    values = {}
    for i in range(1, n + 1):
        first = i % 4 in (1, 2)
        values[i - 1] = r[i - 1] if first else s[i - 1]
        values[n + i - 1] = s[i - 1] if first else r[i - 1]
    base = 8 * kk * kk + 4 * kk
    return _assemble(
        graph,
        struct,
        values,
        (base - 1, base),
        f"join-path-cycle(p={p})",
        ("balance identity holds with epsilon = 1, which makes e1 exceed e0 by one",),
    )


def label_corona_k1(g, p, structure=None):
    """G o K_1 over {1..p-1}: zeta-one labels on G, zeta-zero labels on the pendants."""
    _require_odd_prime(p)
    k = (p - 1) // 2
    if g.order != k:
        raise SizeMismatch(f"G needs order {k}, got {g.order}")
    if not g.connected():
        raise HypothesisFailure("G must be connected")
    eps = _size_offset(g, k, "G")
    struct = _product_structure(p, structure, range(1, p))
    r, s = _classes(struct)
    graph = gr.corona(g, gr.empty(1))
    values = {i: r[i] for i in range(k)}
    values.update({k + i: s[i] for i in range(k)})
    return _assemble(graph, struct, values, (k, k + eps), f"corona-k1(p={p}, eps={eps})")


def label_corona_gh(g, h, p, m, structure=None):
    """G o H over {1..p(p-1)}: multiples of p on G, one residue per copy of H."""
    _require_odd_prime(p)
    if m < 1:
        raise HypothesisFailure(f"m must be positive, got {m}")
    if g.order != p - 1 or h.order != p - 1:
        raise SizeMismatch(f"G and H need order {p - 1}, got {g.order} and {h.order}")
    if not g.connected():
        raise HypothesisFailure("G must be connected")
    eps = _size_offset(g, m * (p - 1), "G")
    if h.size != p - 1 + m:
        raise SizeMismatch(f"H needs size {p - 1 + m}, got {h.size}")
    struct = _product_structure(p, structure, range(1, p * (p - 1) + 1))
    r, s = _classes(struct)
    k = (p - 1) // 2
    values = {}
    for i in range(p - 1):
        values[i] = (i + 1) * p
        c = r[i] if i < k else s[i - k]
        for j in range(p - 1):
            values[(p - 1) + i * (p - 1) + j] = c + j * p
    graph = gr.corona(g, h)
    predicted = (m * (p - 1) + eps + (p - 1) ** 2, (p - 1) * (p - 1 + m))
    return _assemble(graph, struct, values, predicted, f"corona-gh(p={p}, m={m}, eps={eps})")


__all__ = [
    "ConstructionResult",
    "JoinCertificate",
    "SufficientCertificate",
    "check_join_condition",
    "check_sufficient_condition",
    "label_corona_gh",
    "label_corona_k1",
    "label_corona_path",
    "label_join_kayak",
    "label_join_path_cycle",
    "label_ladder",
    "label_snake",
    "label_star_jacobi",
    "label_tensor_complete",
]
