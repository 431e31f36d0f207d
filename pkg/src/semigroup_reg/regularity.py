"""Decomposition of K[B] into shifted monomial ideals and its regularity."""
from dataclasses import dataclass, field as dc_field

from .apery import apery_classes
from .ideals import minimalize, parse_field, regularity
from .lattice import class_count, degree, is_member, validate


@dataclass
class ClassSummand:
    index: int
    cls: object
    ideal: object
    reg: int
    shift_degree: int

    @property
    def total(self):
        return self.reg + self.shift_degree


@dataclass
class DecompositionReport:
    presentation: object
    f: int
    codim: int
    summands: list
    reg: int
    gamma: list
    gcd_ok: bool
    field: int = 0
    warnings: list = dc_field(default_factory=list)

    @property
    def classes(self):
        return [s.cls for s in self.summands]

    @property
    def eg_bound(self):
        return self.f - self.codim

    @property
    def margin(self):
        return self.eg_bound - self.reg

    @property
    def eg_holds(self):
        """None when the coprimality assumption fails and no verdict is given."""
        if not self.gcd_ok:
            return None
        return self.reg <= self.eg_bound

    @property
    def status(self):
        if not self.gcd_ok:
            return "suppressed: extra generators are not coprime, deg K[B] = f not asserted"
        return "ok"

    def module_multiset(self):
        """``{(ideal string, shift degree): multiplicity}``."""
        out = {}
        for s in self.summands:
            key = (str(s.ideal), s.shift_degree)
            out[key] = out.get(key, 0) + 1
        return out

    def to_dict(self):
        alpha = self.presentation.alpha
        return {
            "presentation": self.presentation.to_dict(),
            "f": self.f,
            "codim": self.codim,
            "field": "q" if self.field == 0 else f"fp:{self.field}",
            "classes": [
                dict(
                    s.cls.to_dict(alpha),
                    index=s.index,
                    ideal=str(s.ideal),
                    reg_ideal=s.reg,
                    reg_plus_shift=s.total,
                )
                for s in self.summands
            ],
            "regKB": self.reg,
            "gammaSet": self.gamma,
            "egBound": self.eg_bound,
            "egHolds": self.eg_holds,
            "margin": self.margin,
            "status": self.status,
            "warnings": list(self.warnings),
        }


def decompose(P, field=None, method="auto"):
    rep = validate(P)
    if not rep.valid:
        raise ValueError("; ".join(rep.errors))
    p = parse_field(field)
    classes = apery_classes(P)
    summands = []
    for t, cls in enumerate(classes, 1):
        I = minimalize(cls.exponents)
        if len(I) != len(cls):
            raise AssertionError(f"class {t}: exponent set is not minimal")
        summands.append(ClassSummand(t, cls, I, regularity(I, p, method), cls.shift_degree(P.alpha)))
    reg = max(s.total for s in summands)
    gamma = [s.index for s in summands if s.total == reg]
    return DecompositionReport(
        P, class_count(P), P.c, summands, reg, gamma, rep.gcd_ok, p, list(rep.warnings)
    )


REGIME_DIM2 = "dimension two"
REGIME_ALL_SMALL = "every class has at most two elements"
REGIME_GAMMA_SMALL = "a regularity-attaining class has at most two elements"
REGIME_UNPROVED = "unproved regime, empirical check only"


@dataclass
class EGVerdict:
    holds: object
    reg: int
    bound: int
    margin: int
    regimes: list
    status: str

    @property
    def regime(self):
        return self.regimes[0] if self.regimes else REGIME_UNPROVED

    def to_dict(self):
        return {
            "egHolds": self.holds,
            "regKB": self.reg,
            "egBound": self.bound,
            "margin": self.margin,
            "regimes": list(self.regimes) or [REGIME_UNPROVED],
            "status": self.status,
        }


def check_eisenbud_goto(P, field=None, report=None):
    """reg K[B] <= deg K[B] - codim K[B], with every proved case that applies."""
    rep = report if report is not None else decompose(P, field)
    regimes = []
    if P.d == 2:
        regimes.append(REGIME_DIM2)
    if all(len(c) <= 2 for c in rep.classes):
        regimes.append(REGIME_ALL_SMALL)
    if any(len(rep.summands[t - 1].cls) <= 2 for t in rep.gamma):
        regimes.append(REGIME_GAMMA_SMALL)
    return EGVerdict(rep.eg_holds, rep.reg, rep.eg_bound, rep.margin, regimes, rep.status)


@dataclass
class GapReport:
    alpha: int
    members: list
    gaps: list
    longest: int
    second: int
    lvovsky_bound: int
    hhs_bound: object
    f: int
    codim: int

    @property
    def identity_holds(self):
        return self.f - self.codim == sum(self.gaps) + 1

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "degreeOneMembers": self.members,
            "gaps": self.gaps,
            "L": self.longest,
            "L2": self.second,
            "lvovskyBound": self.lvovsky_bound,
            "hhsBound": self.hhs_bound,
            "degMinusCodim": self.f - self.codim,
            "gapSumPlusOne": sum(self.gaps) + 1,
            "identityCheck": self.identity_holds,
        }


def gap_report(P):
    if P.d != 2:
        raise ValueError("gaps are only defined for d = 2")
    a = P.alpha
    # points (k, alpha - k), k = 0..alpha, on the degree-one line
    member = [is_member(P, (k, a - k)) for k in range(a + 1)]
    gaps = []
    run = 0
    for m in member:
        if m:
            if run:
                gaps.append(run)
            run = 0
        else:
            run += 1
    top = sorted(gaps, reverse=True) + [0, 0]
    hhs = top[0] + 1 if member[1] and member[a - 1] else None
    return GapReport(
        a,
        [k for k, m in enumerate(member) if m],
        gaps,
        top[0],
        top[1],
        top[0] + top[1] + 1,
        hhs,
        class_count(P),
        P.c,
    )


def degree_bound_check(P, classes=None):
    """Largest Apery degree against deg K[B] - codim K[B]."""
    if classes is None:
        classes = apery_classes(P)
    witness = max((x for c in classes for x in c.elements), key=lambda x: (sum(x), x))
    top = int(degree(witness, P.alpha))
    bound = class_count(P) - P.c
    return {"maxDegree": top, "witness": list(witness), "bound": bound, "holds": top <= bound}
