"""Named verification suites: each expands to a list of picklable tasks run by ``run_task``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from random import Random
from typing import Callable, Sequence

import mpmath

from . import determinants, double_zeta, identities, lattice, ramanujan
from .exact import PiPoly
from .numerics import zagier
from .numerics.quadrature import GUARD_DIGITS
from .numerics.recurrences import check_recurrence
from .numerics.special import hurwitz_zeta
from .verdict import Verdict, exact_verdict, gate_extras, numeric_verdict

F = Fraction


@dataclass(frozen=True)
class Task:
    suite: str
    id: str
    params: tuple

    def sort_key(self):
        # numbers sort by value, anything else by its string form
        return (self.suite, self.id,
                tuple((0, p) if isinstance(p, (int, Fraction)) else (1, str(p)) for p in self.params))


# default index ranges, inclusive
IDENTITY_DEFAULTS: dict[str, tuple[int, int]] = {
    "lettington_1_2": (1, 60),
    **{t: (1, 40) for t in ("thm1a", "thm1b", "thm1c", "thm1d", "thm1e")},
    **{t: (1, 30) for t in ("thm2a", "thm2b", "thm2c", "thm2d")},
    "thm5": (1, 40),
    "thm6_gosper": (0, 40),
    "eq_1_5": (1, 30),
    "williams": (1, 20),
    "lehmer_6k": (0, 20),
    "lehmer_6k2": (0, 20),
    "prop2": (0, 30),
    **{f"prop3_{q}": (0, 15) for q in (4, 6, 8, 10, 12, 14, 16)},
    "prop1_hurwitz": (1, 3),
}
ALIASES = {"lettington": "lettington_1_2"}

A_GRID = (F(1), F(1, 2), F(1, 3))
B_GRID = (F(1), F(4), F(1, 4))
Z_GRID = (F(-1), F(1, 2))

RECURRENCE_GRIDS: dict[str, tuple[tuple[int, int], list[tuple]]] = {
    # kind: (default j range, parameter tuples following j)
    "lemma1": ((1, 10), [()]),
    "post_lemma1_remark": ((1, 6), [()]),
    "thm9a": ((1, 6), [(a,) for a in A_GRID]),
    "thm9b": ((1, 6), [(a, b) for a in A_GRID for b in B_GRID]),
    "thm10_lerch": ((1, 6), [(a, b, z) for a in A_GRID for b in B_GRID for z in Z_GRID]),
    "cor4_L": ((1, 6), [(name,) for name in ("chi4", "chi3", "chi5_quartic", "principal5")]),
    "cor5a_hyp": ((1, 6), [(a, b, z) for a in A_GRID for b in B_GRID for z in Z_GRID]),
    "cor5b_polylog": ((1, 6), [(b, z) for b in B_GRID for z in Z_GRID]),
    "thm8_mellin": ((1, 6), [(F(1), F(1)), (F(4), F(1, 2)), (F(1, 4), F(2))]),
    "cor2_besselK": ((1, 5), [(F(1), F(1)), (F(1, 4), F(2))]),
    "cor3_gamma": ((1, 5), [(F(1), F(23, 2)), (F(1, 4), F(27, 2))]),
}

HZ_S = (F(3, 2), F(2), F(37, 10), F(6))
HZ_A = (F(1, 4), F(1, 2), F(1), F(23, 10))
TAUS = ("i", "rho", "0.3+1.2i")


def _j_range(rng, default):
    lo, hi = rng if rng is not None else default
    return range(lo, hi + 1)


def _identity_tasks(tag: str, rng) -> list[Task]:
    return [Task(tag, tag, (n,)) for n in _j_range(rng, IDENTITY_DEFAULTS.get(tag, (1, 10)))]


def _recurrence_tasks(kind: str, rng) -> list[Task]:
    default, grid = RECURRENCE_GRIDS[kind]
    return [Task(kind, kind, (j, *extra)) for extra in grid for j in _j_range(rng, default)]


def _determinant_tasks(rng) -> list[Task]:
    s_max = rng[1] if rng is not None else 8
    out = [Task("determinants", f"thm3{v}", (s,)) for v in "ab" for s in range(1, min(s_max, 6) + 1)]
    out += [Task("determinants", "cor1_phi", (s, j)) for s in range(1, s_max + 1) for j in (1, 2, 3)]
    out += [Task("determinants", "cor1_theta3", (s, 1)) for s in range(1, s_max + 1)]
    out += [Task("determinants", "delta_roundtrip", (s,)) for s in range(1, s_max + 1)]
    out += [Task("determinants", "det_random", (s, k)) for s in range(1, s_max + 1) for k in range(20)]
    return out


def _ramanujan_tasks(rng) -> list[Task]:
    s_max = rng[1] if rng is not None else 10
    out = [Task("ramanujan", f"thm7{p}", (n, s)) for p in "abc" for n in range(1, 7) for s in range(1, s_max + 1)]
    out += [Task("ramanujan", f"funeq_{w}", (k,)) for w in ("R_odd", "Q_even") for k in range(20)]
    return out


def _zagier_tasks(rng) -> list[Task]:
    return [Task("zagier", "zagier_F1", ())] + [Task("zagier", "thm7d", (n,)) for n in _j_range(rng, (2, 4))]


def _hurwitz_zeta_tasks(rng) -> list[Task]:
    out = [Task("hurwitz_zeta", "thm12_contour", (s, a)) for s in HZ_S for a in HZ_A]
    out += [Task("hurwitz_zeta", "trivial_zero", (j,)) for j in range(1, 4)]
    return out


def _double_zeta_tasks(rng) -> list[Task]:
    out = [Task("double_zeta", "reflection", (a, b)) for a in range(2, 9) for b in range(2, 9)]
    out += [Task("double_zeta", "thm4", (s,)) for s in _j_range(rng, (2, 6))]
    out.append(Task("double_zeta", "thm4_pi4_320", (2,)))
    return out


def _hurwitz_tasks(rng) -> list[Task]:
    n_max = rng[1] if rng is not None else 6
    out = [Task("hurwitz", "hurwitz_stated", (o,)) for o in (4, 8, 12)]
    for m in ("integral_thm14", "series_thm16", "recurrence_thm15"):
        out += [Task("hurwitz", f"hurwitz_{m}", (4 * n,)) for n in range(1, n_max + 1)]
    out += [Task("hurwitz", "hurwitz_integral_thm14", (o,)) for o in (6, 10, 14)]
    out += [Task("hurwitz", "thm15", (n,)) for n in range(1, n_max + 1)]
    out += [Task("hurwitz", "hurwitz_cosine_cor6", (o,)) for o in (4, 8)]
    out += [Task("hurwitz", "cor7_refined", (n,)) for n in range(1, 11)]
    return out


def _lattice_tasks(rng) -> list[Task]:
    out = [Task("lattice", "eisenstein_agreement", (o, t)) for o in (4, 8) for t in TAUS]
    out += [Task("lattice", "thm11_eisenstein", p) for p in
            [(2, F(1), "i"), (3, F(1), "rho"), (2, F(4), "i"), (2, F(1), "0.3+1.2i"), (4, F(1), "rho")]]
    out += [Task("lattice", f"cor8_{w}", ()) for w in ("square", "equianharmonic")]
    out.append(Task("lattice", "lemma2", ()))
    out += [Task("lattice", "thm13_lattice", (j, F(1), chi, 8)) for chi in ("alternating", "quarter") for j in (2, 3)]
    out += [Task("lattice", "thm17a", (6 * n,)) for n in (1, 2)]
    return out


def _printed_tasks(rng) -> list[Task]:
    out = []
    for tag, spec in identities.PRINTED_VARIANTS.items():
        lo, hi = rng if rng is not None else (spec.min_param, spec.min_param + 5)
        out += [Task(tag, tag, (n,)) for n in range(lo, hi + 1)]
    return out


GROUPS: dict[str, Callable] = {
    "identities": lambda rng: [t for tag in IDENTITY_DEFAULTS for t in _identity_tasks(tag, None)],
    "determinants": _determinant_tasks,
    "recurrences": lambda rng: [t for k in RECURRENCE_GRIDS for t in _recurrence_tasks(k, None)],
    "hurwitz_zeta": _hurwitz_zeta_tasks,
    "double_zeta": _double_zeta_tasks,
    "ramanujan": _ramanujan_tasks,
    "zagier": _zagier_tasks,
    "hurwitz": _hurwitz_tasks,
    "lattice": _lattice_tasks,
}
# groups where --range has a meaning (upper bound or index range)
RANGED_GROUPS = {"determinants", "ramanujan", "zagier", "double_zeta", "hurwitz"}


def suite_names() -> list[str]:
    return (["all"] + list(GROUPS) + list(IDENTITY_DEFAULTS) + list(ALIASES) + list(RECURRENCE_GRIDS)
            + ["printed"] + list(identities.PRINTED_VARIANTS))


def expand(suite: str, rng: tuple[int, int] | None = None) -> list[Task]:
    """Tasks of ``suite``; ``rng`` replaces the default index range where the suite has one."""
    suite = ALIASES.get(suite, suite)
    if suite == "all":
        if rng is not None:
            raise ValueError("--range cannot be combined with the 'all' suite")
        return [t for g in GROUPS.values() for t in g(None)]
    if suite in IDENTITY_DEFAULTS or suite in identities.PRINTED_VARIANTS:
        if suite in identities.PRINTED_VARIANTS and rng is None:
            spec = identities.PRINTED_VARIANTS[suite]
            rng = (spec.min_param, spec.min_param + 5)
        return _identity_tasks(suite, rng)
    if suite in RECURRENCE_GRIDS:
        return _recurrence_tasks(suite, rng)
    if suite == "printed":
        return _printed_tasks(rng)
    if suite in GROUPS:
        if rng is not None and suite not in RANGED_GROUPS:
            raise ValueError(f"suite {suite!r} has a fixed grid; drop --range")
        return GROUPS[suite](rng)
    raise KeyError(f"unknown suite {suite!r}")


# --------------------------------------------------------------------------
# runners

def _tol(dps: int, slack: int):
    return mpmath.mpf(10) ** (-(dps - slack))


def _random_rational(rng: Random) -> Fraction:
    return F(rng.randint(-200, 200) or 1, rng.randint(1, 60))


def _run_determinant(task: Task, dps: int) -> Verdict:
    i, p = task.id, task.params
    if i in ("thm3a", "thm3b"):
        return determinants.check_theorem3(i[-1], p[0])
    if i == "cor1_phi":
        return determinants.corollary1(p[0], p[1], "phi")
    if i == "cor1_theta3":
        return determinants.corollary1(p[0], 1, "theta3")
    if i == "delta_roundtrip":
        h = [F(1, factorial(2 * k + 1)) for k in range(1, p[0] + 1)]
        return determinants.delta_roundtrip(h, p[0])
    if i == "det_random":
        return determinants.random_trial(*p)
    raise KeyError(i)


def _run_ramanujan(task: Task, dps: int) -> Verdict:
    i, p = task.id, task.params
    if i.startswith("thm7"):
        return ramanujan.check_theorem7(i[-1], *p)
    which = i[len("funeq_"):]
    rng = Random(f"{which}:{p[0]}")
    s = rng.randint(1, 10)
    z = _random_rational(rng)
    res = ramanujan.functional_equation_residual(which, s, z)
    return exact_verdict(i, (s, z), PiPoly.const(res))


def _run_zagier(task: Task, dps: int) -> Verdict:
    if task.id == "zagier_F1":
        with mpmath.workdps(dps + GUARD_DIGITS):
            lhs = zagier.zagier_F(1, dps)
            rhs = zagier.zagier_F_at_1(dps)
            return numeric_verdict("zagier_F1", (), lhs, rhs, _tol(dps, 5), dps)
    return zagier.check_thm7d(task.params[0], max(dps, 30))


def _run_hurwitz_zeta(task: Task, dps: int) -> Verdict:
    with mpmath.workdps(dps + GUARD_DIGITS):
        if task.id == "thm12_contour":
            s, a = task.params
            s_, a_ = mpmath.mpf(s.numerator) / s.denominator, mpmath.mpf(a.numerator) / a.denominator
            h = hurwitz_zeta(s_, a_, dps, "hermite")
            c = hurwitz_zeta(s_, a_, dps, "contour_thm12")
            return numeric_verdict("thm12_contour", task.params, h, c, _tol(dps, 5), dps)
        (j,) = task.params
        v = hurwitz_zeta(-2 * j, mpmath.mpf(1) / 2, dps, "hermite")
        return numeric_verdict("trivial_zero", (j,), v, 0, _tol(dps, 5), dps)


def _run_double_zeta(task: Task, dps: int) -> Verdict:
    i, p = task.id, task.params
    with mpmath.workdps(dps + GUARD_DIGITS):
        if i == "reflection":
            a, b = p
            dz = double_zeta.double_zeta
            lhs = dz(a, b, dps) + dz(b, a, dps)
            rhs = mpmath.zeta(a) * mpmath.zeta(b) - mpmath.zeta(a + b)
            return numeric_verdict(i, p, lhs, rhs, _tol(dps, 5), dps)
        if i == "thm4":
            return double_zeta.check_theorem4(p[0], dps)
        if i == "thm4_pi4_320":
            lhs, rhs = double_zeta.theorem4_sides(2, dps)
            target = mpmath.pi ** 4 / 320
            tol = mpmath.mpf(10) ** -25
            v = numeric_verdict(i, p, lhs, target, tol, dps, rhs_gap=abs(rhs - target))
            return gate_extras(v, ("rhs_gap",))
    raise KeyError(i)


def _run_hurwitz(task: Task, dps: int) -> Verdict:
    i, p = task.id, task.params
    if i == "hurwitz_stated":
        stated = {4: F(1, 10), 8: F(3, 10), 12: F(567, 130)}[p[0]]
        return exact_verdict(i, p, PiPoly.const(lattice.hurwitz_number_exact(p[0]) - stated))
    if i.startswith("hurwitz_"):
        return lattice.check_hurwitz(p[0], i[len("hurwitz_"):], dps)
    if i == "thm15":
        return lattice.check_theorem15(p[0], dps)
    if i == "cor7_refined":
        (n,) = p
        with mpmath.workdps(dps + GUARD_DIGITS):
            h = lattice.hurwitz_number_exact(4 * n)
            _, refined = lattice.hurwitz_asymptotic(4 * n, dps)
            ratio = mpmath.mpf(h.numerator) / h.denominator / refined
            return numeric_verdict(i, p, ratio, 1, mpmath.mpf("0.1"), dps)
    raise KeyError(i)


def _run_lattice(task: Task, dps: int) -> Verdict:
    i, p = task.id, task.params
    if i == "eisenstein_agreement":
        return lattice.check_eisenstein_agreement(p[0], p[1], dps)
    if i == "thm11_eisenstein":
        return lattice.check_theorem11(*p, dps=dps)
    if i.startswith("cor8_"):
        return lattice.check_invariants(i[len("cor8_"):], dps)
    if i == "lemma2":
        return lattice.lemma2_check(dps)
    if i == "thm13_lattice":
        return lattice.check_theorem13(*p, dps=dps)
    if i == "thm17a":
        return lattice.check_equianharmonic(p[0], dps)
    raise KeyError(i)


_GROUP_RUNNERS: dict[str, Callable[[Task, int], Verdict]] = {
    "determinants": _run_determinant,
    "ramanujan": _run_ramanujan,
    "zagier": _run_zagier,
    "hurwitz_zeta": _run_hurwitz_zeta,
    "double_zeta": _run_double_zeta,
    "hurwitz": _run_hurwitz,
    "lattice": _run_lattice,
}


def run_task(task: Task, dps: int = 50) -> Verdict:
    if task.suite in _GROUP_RUNNERS:
        return _GROUP_RUNNERS[task.suite](task, dps)
    if task.suite in RECURRENCE_GRIDS:
        return check_recurrence(task.id, task.params, dps)
    return identities.check_exact(task.id, task.params)


def run_tasks(tasks: Sequence[Task], dps: int = 50) -> list[Verdict]:
    return [run_task(t, dps) for t in tasks]
