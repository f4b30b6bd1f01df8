"""Equivalence of arithmetic structures and transfer of labelings along a witness."""

from dataclasses import dataclass
import math

from .errors import CordialError, NonBijective, PropertyViolation, SizeMismatch
from .labeling import as_sequence
from .structures import (
    PRODUCT,
    check_prop_balance,
    check_prop_congruence,
    check_prop_multiplicative,
    residue_classes,
)


@dataclass(frozen=True)
class EquivalenceWitness:
    psi: dict
    source: object = None
    target: object = None

    def __post_init__(self):
        if len(set(self.psi.values())) != len(self.psi):
            raise NonBijective("psi is not injective")

    def __call__(self, x):
        return self.psi[x]

    def inverse(self):
        return EquivalenceWitness({v: k for k, v in self.psi.items()}, self.target, self.source)

    def to_json(self):
        return {"psi": {str(k): v for k, v in sorted(self.psi.items())}}

    @classmethod
    def from_json(cls, data, source=None, target=None):
        raw = data.get("psi", data)
        return cls({int(k): int(v) for k, v in raw.items()}, source, target)


def identity_witness(struct1, struct2=None):
    struct2 = struct2 or struct1
    return EquivalenceWitness({x: x for x in struct1.label_set}, struct1, struct2)


@dataclass(frozen=True)
class EquivalenceCheck:
    ok: bool
    pair: tuple = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_equivalence(struct1, struct2, witness):
    """Check both conditions over every unordered pair a < b of S1.

    Returns the first offending pair in lexicographic order on failure.
    """
    s1, s2 = struct1.label_set, struct2.label_set
    if s1 is None or s2 is None:
        raise CordialError("both structures need a label set")
    if len(s1) != len(s2):
        raise SizeMismatch(f"|S1| = {len(s1)} but |S2| = {len(s2)}")
    psi = witness.psi
    if set(psi) != set(s1) or set(psi.values()) != set(s2):
        raise NonBijective("psi must map S1 onto S2")
    for i, a in enumerate(s1):
        for b in s1[i + 1 :]:
            x = struct1.star.apply(a, b)
            y = struct2.star.apply(psi[a], psi[b])
            c1 = math.gcd(x, struct1.eta) == 1
            c2 = math.gcd(y, struct2.eta) == 1
            if c1 != c2:
                return EquivalenceCheck(False, (a, b), "coprimality differs")
            if c1 and struct1.zeta_value(x) != struct2.zeta_value(y):
                return EquivalenceCheck(False, (a, b), "zeta values differ")
    return EquivalenceCheck(True)


def _require(struct):
    if struct.star != PRODUCT:
        raise CordialError(f"equivalence construction needs the product star, got {struct.star}")
    for check in (check_prop_congruence, check_prop_balance, check_prop_multiplicative):
        result = check(struct)
        if not result:
            raise PropertyViolation(result.name, struct.spec, result.detail)


def build_psi(eta, m, variant, struct1, struct2):
    """Residue-class-preserving bijection on {1..eta*m + variant}, variant in {-1, 0}.

    Classes of struct1 are matched to the same classes of struct2 in ascending
    order, block by block; multiples of eta stay fixed.
    """
    if eta < 3 or m < 1:
        raise CordialError("need eta >= 3 and m >= 1")
    if variant not in (-1, 0):
        raise CordialError(f"variant must be -1 or 0, got {variant}")
    if struct1.eta != eta or struct2.eta != eta:
        raise CordialError("both structures must use modulus eta")
    _require(struct1)
    _require(struct2)
    c1, c2 = residue_classes(struct1), residue_classes(struct2)
    base = {}
    base.update(zip(c1.A0, c2.A0))
    base.update(zip(c1.A1, c2.A1))
    base.update(zip(c1.NC[:-1], c2.NC[:-1]))
    base[eta] = eta
    top = eta * m + variant
    psi = {}
    for k in range(m):
        for r, t in base.items():
            x = r + k * eta
            if x <= top:
                psi[x] = t + k * eta
    labels = tuple(range(1, top + 1))
    return EquivalenceWitness(psi, struct1.with_labels(labels), struct2.with_labels(labels))


def transfer(labeling, witness):
    """g = psi o f."""
    f = as_sequence(labeling)
    missing = [x for x in f if x not in witness.psi]
    if missing:
        raise CordialError(f"labels {missing} are outside the witness domain")
    return tuple(witness.psi[x] for x in f)
