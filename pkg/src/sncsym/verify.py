#!/usr/bin/env python3
"""
Identity suite behind `sncsym verify`.

Each check walks every case up to a degree bound and stops at the first
counterexample. Bounds apply to n + m on the noncommutative side and to the
degree on the commuting side.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from math import comb, factorial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from sympy.polys.domains import QQ

from . import algebra
from . import combinat as sc
from . import oracle
from . import ssym
from . import tableaux
from .algebra import SymbolicElement
from .bases import Basis, SymBasis
from .combinat import Supercomposition
from .errors import VerificationError
from .superpartition import Superpartition, superpartitions

logger = logging.getLogger(__name__)

BELL = (1, 1, 2, 5, 15, 52, 203, 877)
# set superpartitions of [n] counted with a single zero block allowed
HALF_TOTALS = (1, 2, 6, 22, 94, 454, 2430, 14214)

Case = Tuple[str, bool]


@dataclass
class CheckResult:
    name: str
    description: str
    passed: bool = True
    cases: int = 0
    counterexample: Optional[str] = None

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    max_degree: int
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> Dict:
        return {
            "max_degree": self.max_degree,
            "passed": self.passed,
            "checks": [r.to_json() for r in self.results],
        }


def bidegrees(max_degree: int) -> Iterator[Tuple[int, int]]:
    """Bidegrees (n, m) with n + m <= max_degree and sP_{n,m} nonempty"""
    for total in range(max_degree + 1):
        for m in range(total + 1):
            n = total - m
            if m <= n + 1:
                yield n, m


def _indices(max_degree: int) -> Iterator[Supercomposition]:
    for n, m in bidegrees(max_degree):
        yield from sc.set_superpartitions(n, m)


def _shapes(max_degree: int) -> Iterator[Superpartition]:
    for n in range(max_degree + 1):
        for m in range(n + 2):
            yield from superpartitions(n, m)


def _num_vars(index: Supercomposition) -> int:
    return index.degree + index.fermionic_degree + 1


# ---------------------------------------------------------------- checks

def check_counting(max_degree: int) -> Iterator[Case]:
    for n in range(min(max_degree, len(BELL) - 1) + 1):
        yield f"Bell number n={n}", len(sc.set_partitions(n)) == BELL[n]
        yield f"set superpartitions n={n}", sc.count_set_superpartitions(n) == 2 * HALF_TOTALS[n]


def check_mobius(max_degree: int) -> Iterator[Case]:
    for n, m in bidegrees(min(max_degree, 5)):
        for L in sc.supercompositions(n, m):
            below = sc.strong_refinements(L)
            for K in below:
                yield f"mu{K},{L}", sc.mobius(K, L) == sc.mobius_recursive(K, L)
            total = sum(abs(sc.mobius_zero(K)) for K in below)
            yield f"sum |mu(0,K)| below {L}", total == sc.factorial(L)
        bottom = sc.zero(n, m)
        for L in sc.set_superpartitions(n, m):
            yield f"chains mu(0,{L})", sc.mobius_by_chains(bottom, L) == sc.mobius_zero(L)


def check_oracle_bases(max_degree: int) -> Iterator[Case]:
    for I in _indices(max_degree):
        N = _num_vars(I)
        for basis in (Basis.P, Basis.E, Basis.H):
            symbolic = algebra.to_monomial(SymbolicElement.of(basis, I))
            ok = oracle.expand_basis(basis, I, N) == oracle.expand_element(symbolic, N)
            yield f"{basis.value}{I} in m, N={N}", ok


def check_fermionic_action(max_degree: int) -> Iterator[Case]:
    for I in _indices(max_degree):
        m = I.fermionic_degree
        if m < 2:
            continue
        N = _num_vars(I)
        for sigma in permutations(range(1, m + 1)):
            K = sc.act_fermionic(sigma, I)
            sign = -1 if sc.inversions(sigma) % 2 else 1
            for basis in (Basis.M, Basis.P, Basis.E, Basis.H):
                ok = oracle.expand_basis(basis, K, N) == oracle.expand_basis(basis, I, N).scale(sign)
                yield f"{basis.value}{K} = {sign} {basis.value}{I}", ok


def check_transitions(max_degree: int) -> Iterator[Case]:
    for n, m in bidegrees(max_degree):
        size = len(sc.set_superpartitions(n, m))
        identity = [[QQ.one if i == j else QQ.zero for j in range(size)] for i in range(size)]
        for basis in (Basis.P, Basis.E, Basis.H):
            forward = algebra.transition_matrix(Basis.M, basis, n, m)
            backward = algebra.transition_matrix(basis, Basis.M, n, m)
            yield f"m<->{basis.value} ({n},{m})", algebra.matrix_entries(forward * backward) == identity


def check_direct_routes(max_degree: int) -> Iterator[Case]:
    for I in _indices(max_degree):
        for source, target in sorted(algebra.DIRECT_ROUTES, key=lambda pair: (pair[0].value, pair[1].value)):
            el = SymbolicElement.of(source, I)
            ok = algebra.convert_direct(el, target) == algebra.convert_via_monomial(el, target)
            yield f"{source.value}->{target.value} {I}", ok


def _pairs(max_degree: int) -> Iterator[Tuple[Supercomposition, Supercomposition]]:
    for n1, m1 in bidegrees(max_degree):
        for n2, m2 in bidegrees(max_degree - n1 - m1):
            for I in sc.set_superpartitions(n1, m1):
                for J in sc.set_superpartitions(n2, m2):
                    yield I, J


def check_products(max_degree: int) -> Iterator[Case]:
    for I, J in _pairs(max_degree):
        n, m = I.degree + J.degree, I.fermionic_degree + J.fermionic_degree
        N = max(1, n + m)
        for basis in (Basis.M, Basis.P, Basis.E, Basis.H):
            f, g = SymbolicElement.of(basis, I), SymbolicElement.of(basis, J)
            concrete = oracle.expand_basis(basis, I, N) * oracle.expand_basis(basis, J, N)
            symbolic = algebra.to_monomial(algebra.product(f, g))
            yield f"{basis.value}{I} {basis.value}{J}", oracle.monomial_coefficients(concrete, n, m) == symbolic


def check_omega(max_degree: int) -> Iterator[Case]:
    for I in _indices(max_degree):
        m_I = SymbolicElement.of(Basis.M, I)
        yield f"omega^2 m{I}", algebra.omega(algebra.omega(m_I)) == m_I
        p_I = SymbolicElement.of(Basis.P, I)
        yield f"omega p{I}", algebra.omega(p_I) == p_I.scale(sc.sign(I))
    for I, J in _pairs(min(max_degree, 3)):
        f, g = SymbolicElement.of(Basis.E, I), SymbolicElement.of(Basis.M, J)
        yield f"omega(e{I} m{J})", algebra.omega(f * g) == algebra.omega(f) * algebra.omega(g)


def check_inner_products(max_degree: int) -> Iterator[Case]:
    for n, m in bidegrees(max_degree):
        indices = sc.set_superpartitions(n, m)
        scale = algebra.pairing_scale(n, m)
        for I in indices:
            for J in indices:
                m_I, h_J = SymbolicElement.of(Basis.M, I), SymbolicElement.of(Basis.H, J)
                expected = scale if I == J else 0
                yield f"<m{I},h{J}>", algebra.inner_product(m_I, h_J) == expected
                h_I = SymbolicElement.of(Basis.H, I)
                left = algebra.inner_product(h_I, h_J)
                yield f"<h{I},h{J}> symmetric", left == algebra.inner_product(h_J, h_I)
                meets = sum((-1 if sc.inversions(s) % 2 else 1)
                            * sc.factorial(sc.meet(I, sc.act_fermionic(s, J)))
                            for s in permutations(range(1, m + 1)))
                yield f"<h{I},h{J}> by meets", left == scale * meets
                p_I, p_J = SymbolicElement.of(Basis.P, I), SymbolicElement.of(Basis.P, J)
                expected = QQ(scale, abs(sc.mobius_zero(I))) if I == J else 0
                yield f"<p{I},p{J}>", algebra.inner_product(p_I, p_J) == expected


def check_projection(max_degree: int) -> Iterator[Case]:
    for I in _indices(max_degree):
        N = max(1, I.degree + I.fermionic_degree)
        for basis in (Basis.M, Basis.P, Basis.E, Basis.H):
            yield f"rho {basis.value}{I}", ssym.rho_check(SymbolicElement.of(basis, I), N)
    for shape in _shapes(max_degree):
        m_shape = ssym.SSymElement.of(SymBasis.M, shape)
        yield f"rho lift m{shape}", ssym.rho(ssym.lift(m_shape)) == m_shape


def check_isometry(max_degree: int) -> Iterator[Case]:
    for n in range(max_degree + 1):
        for m in range(n + 2):
            shapes = superpartitions(n, m)
            for left in shapes:
                for right in shapes:
                    f = ssym.SSymElement.of(SymBasis.M, left)
                    g = ssym.SSymElement.of(SymBasis.H, right)
                    lifted = algebra.inner_product(ssym.lift(f), ssym.lift(g))
                    yield f"<lift m{left}, lift h{right}>", lifted == ssym.inner_product_ssym(f, g)


def check_lift_formulas(max_degree: int) -> Iterator[Case]:
    for shape in _shapes(max_degree):
        n = shape.degree
        h = ssym.SSymElement.of(SymBasis.H, shape)
        expected = algebra.signed_type_sum(Basis.H, shape).scale(
            QQ(shape.sym_multiplicity_factorial(), factorial(n)))
        yield f"lift h{shape}", ssym.lift(h) == expected
        p = ssym.SSymElement.of(SymBasis.P, shape)
        expected = algebra.signed_type_sum(Basis.P, shape).scale(QQ(1, shape.binomial()))
        yield f"lift p{shape}", ssym.lift(p) == expected
        yield f"omega lift p{shape}", algebra.omega(ssym.lift(p)) == ssym.lift(ssym.omega_hat(p))


def check_schur(max_degree: int) -> Iterator[Case]:
    for n in range(min(max_degree, 4) + 1):
        e_top = SymbolicElement.of(Basis.E, Supercomposition(((0,) + tuple(range(1, n + 1)),)))
        column = Superpartition((0,), (1,) * n)
        yield f"S(0;1^{n}) = e", tableaux.schur(column) == e_top
        yield f"Sbar(0;1^{n}) = e", tableaux.schur(column, tableaux.SECOND) == e_top
    for shape in _shapes(max_degree):
        n = shape.degree
        for kind in (tableaux.FIRST, tableaux.SECOND):
            S = tableaux.schur(shape, kind)
            s = tableaux.schur_ssym(shape, kind)
            yield f"rho S{shape} kind {kind}", ssym.rho(S) == s.scale(factorial(n))
            yield f"lift s{shape} kind {kind}", ssym.lift(s.scale(factorial(n))) == S


def check_schur_symmetry(max_degree: int) -> Iterator[Case]:
    for shape in _shapes(min(max_degree, 3)):
        N = shape.degree + shape.fermionic_degree + 1
        for kind in (tableaux.FIRST, tableaux.SECOND):
            direct = tableaux.schur_direct(shape, kind, N)
            yield f"S{shape} kind {kind} symmetric", direct.is_symmetric()
            yield f"S{shape} kind {kind} two paths", \
                direct == oracle.expand_element(tableaux.schur(shape, kind), N)


def check_duality(max_degree: int) -> Iterator[Case]:
    for n in range(max_degree + 1):
        for m in range(n + 2):
            shapes = superpartitions(n, m)
            expected = factorial(n) ** 2 * (-1) ** comb(m, 2)
            for left in shapes:
                for right in shapes:
                    value = tableaux.check_duality(left, right)
                    yield f"<omega Sbar{left}', S{right}>", value == (expected if left == right else 0)


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    run: Callable[[int], Iterator[Case]]


CHECKS: Tuple[Check, ...] = (
    Check("counting", "Bell numbers and set superpartition totals", check_counting),
    Check("mobius", "closed-form Mobius function against its recursion", check_mobius),
    Check("oracle-bases", "p, e, h monomial expansions against brute force", check_oracle_bases),
    Check("fermionic-action", "reordering fermionic blocks changes b_I by the sign", check_fermionic_action),
    Check("transitions", "m<->p, m<->e, m<->h matrices are mutually inverse", check_transitions),
    Check("direct-routes", "direct e/h/p formulas agree with the monomial route", check_direct_routes),
    Check("products", "symbolic products against brute-force products", check_products),
    Check("omega", "omega is a multiplicative involution with omega(p_I) = (-1)^I p_I", check_omega),
    Check("inner-products", "m/h duality, h symmetry, p orthogonality", check_inner_products),
    Check("projection", "rho formulas and rho after lifting", check_projection),
    Check("isometry", "lifting preserves the pairing", check_isometry),
    Check("lift-formulas", "lifts of h and p and omega-hat compatibility", check_lift_formulas),
    Check("schur", "Schur functions, their projections and lifts", check_schur),
    Check("schur-symmetry", "tableau sums are symmetric and match the Kostka expansion", check_schur_symmetry),
    Check("duality", "omega(Sbar_L') and S_O are dual", check_duality),
)


def run_check(check: Check, max_degree: int) -> CheckResult:
    result = CheckResult(check.name, check.description)
    for label, ok in check.run(max_degree):
        result.cases += 1
        if not ok:
            result.passed = False
            result.counterexample = label
            logger.warning("Check %s failed at %s", check.name, label)
            break
    logger.info("Check %s: %d cases, %s", check.name, result.cases, "ok" if result.passed else "FAILED")
    return result


def run_checks(max_degree: int, names: Optional[List[str]] = None) -> Report:
    """Run the selected checks (all by default)"""
    selected = [c for c in CHECKS if names is None or c.name in names]
    unknown = set(names or ()) - {c.name for c in CHECKS}
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    report = Report(max_degree)
    for check in selected:
        report.results.append(run_check(check, max_degree))
    return report


def verify_strict(max_degree: int, names: Optional[List[str]] = None) -> Report:
    """Like run_checks, raising VerificationError on the first failing check"""
    report = run_checks(max_degree, names)
    for result in report.results:
        if not result.passed:
            raise VerificationError(result.name, result.counterexample)
    return report
