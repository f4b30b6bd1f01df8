"""Arithmetic structures <S, zeta_eta, star> and their property checkers.

A structure bundles a modulus ``eta``, a finite label set ``S``, a binary
operation on labels (sum, product or an (a,b)-Fibonacci sum) and a
{0,1}-valued function ``zeta`` defined on integers coprime to ``eta``.

Every shipped zeta depends only on the residue of its argument, so values are
tabulated once per structure on the coprime residues in [1, eta-1] and looked
up afterwards.
"""

from dataclasses import dataclass, field, replace
import json
import math
import re

from . import numtheory as nt
from .errors import CordialError, ParseError

ZETA_KINDS = (
    "legendre",
    "neg-legendre",
    "jacobi",
    "jacobi-factor",
    "index-parity",
    "index-chi",
    "euler-quotient",
    "table",
)


@dataclass(frozen=True)
class StarOp:
    kind: str = "sum"
    a: int = 1
    b: int = 1

    def __post_init__(self):
        if self.kind not in ("sum", "product", "fibsum"):
            raise CordialError(f"unknown star operation {self.kind!r}")

    def apply(self, x, y, eta=None):
        """x star y.  FibSum is reduced modulo ``eta`` when one is given."""
        if self.kind == "sum":
            return x + y
        if self.kind == "product":
            return x * y
        if x < 0 or y < 0:
            raise CordialError("fibsum labels must be nonnegative")
        if eta is None:
            return nt.fib_ab(x, self.a, self.b) + nt.fib_ab(y, self.a, self.b)
        return (nt.fib_ab(x, self.a, self.b, eta) + nt.fib_ab(y, self.a, self.b, eta)) % eta

    def __str__(self):
        if self.kind == "fibsum":
            return f"fibsum({self.a},{self.b})"
        return self.kind


SUM = StarOp("sum")
PRODUCT = StarOp("product")


@dataclass(frozen=True)
class ZetaSpec:
    """Which zeta to use.  ``param`` is the divisor d for jacobi-factor, the
    primitive root for the index kinds (None = smallest), and a sorted tuple of
    (residue, value) pairs for table."""

    kind: str
    param: object = None
    source: str = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ZETA_KINDS:
            raise CordialError(f"unknown zeta kind {self.kind!r}")

    def __str__(self):
        if self.kind == "jacobi-factor":
            return f"jacobi-factor:{self.param}"
        if self.kind in ("index-parity", "index-chi") and self.param is not None:
            return f"{self.kind}:w={self.param}"
        if self.kind == "table":
            return f"table:{self.source}" if self.source else "table"
        return self.kind


def table_spec(mapping, source=None):
    """ZetaSpec from an explicit {residue: 0/1} mapping."""
    pairs = tuple(sorted((int(k), int(v)) for k, v in mapping.items()))
    return ZetaSpec("table", pairs, source)


def _zeta_value(kind, param, eta, r):
    if kind == "legendre":
        return (1 + nt.legendre_symbol(r, eta)) // 2
    if kind == "neg-legendre":
        return (1 - nt.legendre_symbol(r, eta)) // 2
    if kind == "jacobi":
        return (1 + nt.jacobi_symbol(r, eta)) // 2
    if kind == "jacobi-factor":
        return (1 + nt.jacobi_symbol(r, param)) // 2
    if kind == "index-parity":
        return nt.discrete_log(r, param, eta) % 2
    if kind == "index-chi":
        return 1 if nt.discrete_log(r, param, eta) % 2 == 0 else 0
    if kind == "euler-quotient":
        # exact quotient on the canonical representative only
        return ((r ** nt.euler_phi(eta) - 1) // eta) % 2
    raise AssertionError(kind)  # pragma: no cover


def _build_table(zeta, eta):
    kind, param = zeta.kind, zeta.param
    if kind in ("legendre", "neg-legendre") and not nt.is_odd_prime(eta):
        raise CordialError(f"{kind} needs an odd prime modulus, got {eta}")
    if kind == "jacobi" and eta % 2 == 0:
        raise CordialError(f"jacobi needs an odd modulus, got {eta}")
    if kind == "jacobi-factor":
        if not isinstance(param, int) or param < 1 or param % 2 == 0 or eta % param:
            raise CordialError(f"jacobi-factor needs an odd divisor of {eta}, got {param}")
    if kind in ("index-parity", "index-chi"):
        if nt.primitive_root(eta) is None:
            raise CordialError(f"{eta} has no primitive root")
        if param is not None and not nt.is_primitive_root(param, eta):
            raise CordialError(f"{param} is not a primitive root of {eta}")
    units = nt.coprime_residues(eta)
    if kind == "table":
        table = dict(param or ())
        missing = [r for r in units if r not in table]
        if missing:
            raise CordialError(f"table misses coprime residues {missing}")
        extra = [r for r in table if r not in units]
        if extra:
            raise CordialError(f"table has entries outside the coprime residues: {extra}")
        if any(v not in (0, 1) for v in table.values()):
            raise CordialError("table values must be 0 or 1")
        return table
    if kind in ("index-parity", "index-chi") and param is None:
        param = nt.primitive_root(eta)
    return {r: _zeta_value(kind, param, eta, r) for r in units}


@dataclass(frozen=True)
class ArithmeticStructure:
    eta: int
    zeta: ZetaSpec
    star: StarOp = SUM
    label_set: tuple = None
    _table: dict = field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.eta < 2:
            raise CordialError(f"modulus must be >= 2, got {self.eta}")
        if self.label_set is not None:
            labels = tuple(sorted(self.label_set))
            if len(set(labels)) != len(labels):
                raise CordialError("label set has duplicates")
            object.__setattr__(self, "label_set", labels)
        object.__setattr__(self, "_table", _build_table(self.zeta, self.eta))

    def with_labels(self, labels):
        return replace(self, label_set=tuple(labels))

    def zeta_value(self, x):
        """zeta(x) in {0, 1}, or None when gcd(x, eta) != 1."""
        if math.gcd(x, self.eta) != 1:
            return None
        return self._table[x % self.eta]

    def chi_value(self, x):
        z = self.zeta_value(x)
        if z is None:
            raise CordialError(f"chi undefined: gcd({x}, {self.eta}) != 1")
        return 2 * z - 1

    def combine(self, x, y):
        return self.star.apply(x, y, self.eta)

    @property
    def spec(self):
        return f"{self.zeta}@{self.eta}:{self.star}"

    def __str__(self):
        return self.spec


def zeta_eval(struct, x):
    """zeta(x) for ``struct``, or None (not coprime)."""
    return struct.zeta_value(x)


def chi_eval(struct, x):
    return struct.chi_value(x)


def make(zeta, eta, star="sum", labels=None, param=None):
    """Convenience constructor: ``make("legendre", 7, "product", range(1, 8))``."""
    if isinstance(zeta, str):
        zeta = ZetaSpec(zeta, param)
    if isinstance(star, str):
        star = StarOp(star)
    return ArithmeticStructure(eta, zeta, star, None if labels is None else tuple(labels))


@dataclass(frozen=True)
class ResidueClasses:
    A0: tuple
    A1: tuple
    NC: tuple


def residue_classes(struct):
    eta = struct.eta
    a0, a1, nc = [], [], []
    for r in range(1, eta + 1):
        z = struct.zeta_value(r)
        (nc if z is None else a1 if z else a0).append(r)
    return ResidueClasses(tuple(a0), tuple(a1), tuple(nc))


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    ok: bool
    detail: str = ""
    witness: tuple = None

    def __bool__(self):
        return self.ok


def check_prop_congruence(struct, window=3, evaluate=None):
    """zeta(r) == zeta(r + k*eta) for coprime residues r and |k| <= window.

    ``evaluate`` replaces the structure's own zeta (used for negative controls).
    """
    evaluate = evaluate or struct.zeta_value
    eta = struct.eta
    for r in nt.coprime_residues(eta):
        base = evaluate(r)
        for k in range(-window, window + 1):
            if evaluate(r + k * eta) != base:
                return PropertyCheck(
                    "congruence", False, f"zeta({r}) != zeta({r + k * eta})", (r, r + k * eta)
                )
    return PropertyCheck("congruence", True)


def check_prop_balance(struct):
    classes = residue_classes(struct)
    n0, n1 = len(classes.A0), len(classes.A1)
    half = nt.euler_phi(struct.eta) / 2
    ok = n0 == n1 == half
    return PropertyCheck("balance", ok, f"|A0|={n0}, |A1|={n1}", (n0, n1))


def check_prop_multiplicative(struct):
    eta = struct.eta
    units = nt.coprime_residues(eta)
    chi = {r: struct.chi_value(r) for r in units}
    for a in units:
        for b in units:
            if chi[a * b % eta] != chi[a] * chi[b]:
                return PropertyCheck(
                    "multiplicativity",
                    False,
                    f"chi({a}*{b}) != chi({a})*chi({b})",
                    (a, b),
                )
    return PropertyCheck("multiplicativity", True)


_STRUCT_RE = re.compile(r"^(?P<zeta>[^@]+)@(?P<eta>\d+):(?P<star>.+)$")
_FIB_RE = re.compile(r"^fibsum\((-?\d+),(-?\d+)\)$")


def parse_star(text):
    text = text.replace(" ", "")
    if text in ("sum", "product"):
        return StarOp(text)
    m = _FIB_RE.match(text)
    if m:
        return StarOp("fibsum", int(m.group(1)), int(m.group(2)))
    raise ParseError(f"unknown star {text!r}", 0, ("sum", "product", "fibsum(a,b)"))


def parse_zeta(text):
    """Zeta spec strings such as ``legendre``, ``jacobi-factor:3``,
    ``index-parity:w=3`` or ``table:classes.json``."""
    text = text.strip()
    name, _, params = text.partition(":")
    if name not in ZETA_KINDS:
        raise ParseError(f"unknown zeta {name!r}", 0, ZETA_KINDS)
    if name == "table":
        if not params:
            raise ParseError("table needs a file path", len(text), ("table:<path>",))
        with open(params) as fh:
            data = json.load(fh)
        return table_spec(data.get("table", data), source=params)
    if name == "jacobi-factor":
        if not params.isdigit():
            raise ParseError("jacobi-factor needs a divisor", len(name) + 1, ("<d>",))
        return ZetaSpec(name, int(params))
    if name in ("index-parity", "index-chi"):
        if not params:
            return ZetaSpec(name)
        key, _, val = params.partition("=")
        if key != "w" or not val.isdigit():
            raise ParseError(f"bad index parameter {params!r}", len(name) + 1, ("w=<root>",))
        return ZetaSpec(name, int(val))
    if params:
        raise ParseError(f"{name} takes no parameters", len(name) + 1)
    return ZetaSpec(name)


def parse_structure(text, labels=None):
    """Parse ``<zeta>[:<params>]@<eta>:<star>``, e.g. ``legendre@7:sum``."""
    m = _STRUCT_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed structure spec {text!r}", 0, ("<zeta>@<eta>:<star>",))
    zeta = parse_zeta(m.group("zeta"))
    star = parse_star(m.group("star"))
    return ArithmeticStructure(
        int(m.group("eta")), zeta, star, None if labels is None else tuple(labels)
    )
