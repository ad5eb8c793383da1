"""Seeded property verification across corpus and randomized structures.

Three suites, all exact:

* operator identities: the sl(2;R) commutators, the nine-entry
  commutation table of (d, d^Lambda, d d^Lambda) against (L, Lambda, H),
  squares and anticommutators of the differentials, the star identities,
  and Lefschetz reassembly on seeded random forms;
* theorems: the degree-2 decomposition, the vanishing intersection
  H^(k,0) meet H^(0,2k), H^(r,s) = L^r H^(0,s) in low total degree, and
  the one-dimensionality of H^(r,0);
* equivalences: HLC vs the dd^Lambda-lemma, the star dualities between
  the four cohomologies, the Lefschetz structure of H_(d+d^Lambda), the
  full-implies-dual-direct implication, cup-pairing non-degeneracy, and
  the torus rigidity of HLC among nilpotent algebras.

Random symplectic structures are produced by drawing a random closed
non-degenerate 2-form on a catalog algebra and applying a random
invertible change of coframe, so validity is guaranteed by construction
while coefficients become generic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cohomology import SymplecticCohomology, is_abelian
from .errors import SympcohError
from .exterior import Form, monomial_basis, operator_matrix
from .lie import LieAlgebra, build_lie_algebra
from .linalg import QMatrix, Subspace, inverse, kernel, rref, subspace_intersect, subspace_sum
from .parsing import StructureEquations, parse_structure_equations, render_structure
from .symplectic import SymplecticStructure, validate_symplectic

__all__ = [
    "CheckResult",
    "VerifySummary",
    "random_symplectic_structure",
    "random_form",
    "transform_coframe",
    "verify_structure",
    "run_verify",
    "BASE_STRUCTURES",
]

# Catalog of symplectic-capable algebras used as seeds for randomization.
BASE_STRUCTURES: dict[int, tuple[str, ...]] = {
    2: ("0,0",),
    4: ("0,0,0,0", "0,0,0,12", "0,0,12,13", "14,-24,0,0"),
    6: (
        "0^6",
        "0,0,0,12,14-23,15+34",
        "-13,23,0,-56,46,0",
        "-23,0,0,-46,56,0",
        "0,12-45,-13+46,0,15-24,-16+34",
        "0,0,0,12,13,23",
    ),
    8: (
        "0^8",
        "0,0,0,12,14-23,15+34,0,0",
        "0,0,0,0,12,13,14,23",
        "-13,23,0,-56,46,0,0,0",
    ),
}


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, context: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 8:
                self.failures.append(context)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class VerifySummary:
    seed: int
    structures: list[str]
    results: dict[str, CheckResult]

    @property
    def ok(self) -> bool:
        return all(result.ok for result in self.results.values())

    def format_text(self) -> str:
        lines = [
            f"verify: seed={self.seed}, structures={len(self.structures)}",
        ]
        width = max((len(name) for name in self.results), default=0)
        for name in sorted(self.results):
            result = self.results[name]
            status = "ok" if result.ok else "FAIL"
            lines.append(
                f"  {name.ljust(width)}  {result.passed:5d} pass  {result.failed:3d} fail  [{status}]"
            )
            for ctx in result.failures:
                lines.append(f"      failure: {ctx}")
        lines.append("all checks passed" if self.ok else "FAILURES DETECTED")
        return "\n".join(lines)


class _Recorder:
    def __init__(self):
        self.results: dict[str, CheckResult] = {}

    def __call__(self, name: str, ok: bool, context: str = "") -> None:
        self.results.setdefault(name, CheckResult(name)).record(ok, context)

    def guard(self, name: str, context: str, thunk) -> None:
        """Run a check that raises on failure; record either way."""
        try:
            thunk()
        except SympcohError as exc:
            self(name, False, f"{context}: {exc}")
        else:
            self(name, True)


# ---------------------------------------------------------------------------
# random structures
# ---------------------------------------------------------------------------


def random_form(dim: int, degree: int, rng: random.Random, sparsity: int = 4) -> Form:
    """Seeded random form with small rational coefficients."""
    basis = monomial_basis(dim, degree)
    picks = rng.sample(range(len(basis)), min(sparsity, len(basis)))
    coeffs = {}
    for i in picks:
        num = rng.randint(-3, 3)
        den = rng.choice((1, 1, 2, 3))
        if num:
            coeffs[basis[i]] = Fraction(num, den)
    return Form(dim, degree, coeffs)


def _substitute(form: Form, rows: tuple, dim: int) -> Form:
    """Rewrite a form under e^j -> sum_k rows[j-1][k] f^k."""
    total = Form.zero(dim, form.degree)
    for key, c in form.coeffs.items():
        term = Form.unit(dim) * c
        for idx in key:
            row = rows[idx - 1]
            one = Form(dim, 1, {(k + 1,): row[k] for k in range(dim) if row[k]})
            term = term.wedge(one)
        total = total + term
    return total


def transform_coframe(
    structure: StructureEquations, omega: Form, change: QMatrix
) -> tuple[StructureEquations, Form]:
    """Rewrite structure equations and omega in the coframe f^i = sum_j M_ij e^j.

    The result presents the same algebra and the same symplectic form in
    a new basis, so Jacobi, closedness, and non-degeneracy come for free.
    """
    dim = structure.dim
    rows = inverse(change).rows
    substituted = [_substitute(d, rows, dim) for d in structure.differentials]
    new_diffs = []
    for i in range(dim):
        acc = Form.zero(dim, 2)
        for j in range(dim):
            factor = change.rows[i][j]
            if factor:
                acc = acc + substituted[j] * factor
        new_diffs.append(acc)
    new_structure = StructureEquations(dim, tuple(new_diffs), "")
    rendered = render_structure(new_structure)
    new_structure = StructureEquations(dim, tuple(new_diffs), rendered)
    return new_structure, _substitute(omega, rows, dim)


def _random_change(dim: int, rng: random.Random) -> QMatrix:
    rows = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for _ in range(rng.randint(2, 4)):
        op = rng.choice(("shear", "swap", "negate"))
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if op == "swap":
            rows[i], rows[j] = rows[j], rows[i]
        elif op == "negate":
            rows[i] = [-x for x in rows[i]]
        elif i != j:
            c = Fraction(rng.choice((-2, -1, 1, 2)))
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return QMatrix(rows)


def _random_closed_nondegenerate(g: LieAlgebra, rng: random.Random) -> Form | None:
    closed = kernel(g.d_op.block(2))
    basis = closed.basis.rows
    if not basis:
        return None
    n = g.dim // 2
    for attempt in range(120):
        spread = 2 if attempt < 60 else 3
        candidate = Form.zero(g.dim, 2)
        for vec in basis:
            c = rng.randint(-spread, spread)
            if c:
                candidate = candidate + Form.from_vector(g.dim, 2, vec) * c
        if candidate.is_zero():
            continue
        top = candidate
        for _ in range(n - 1):
            top = top.wedge(candidate)
        if not top.is_zero():
            return candidate
    return None


def random_symplectic_structure(
    dim: int, rng: random.Random, nilpotent_only: bool = False
) -> SymplecticStructure:
    """Seeded random valid symplectic structure on a dim-dimensional algebra."""
    from .lie import check_properties

    bases = list(BASE_STRUCTURES[dim])
    while True:
        text = rng.choice(bases)
        g = build_lie_algebra(parse_structure_equations(text))
        if nilpotent_only and not check_properties(g).nilpotent:
            continue
        omega = _random_closed_nondegenerate(g, rng)
        if omega is None:
            continue
        structure, omega = transform_coframe(g.structure, omega, _random_change(dim, rng))
        return validate_symplectic(build_lie_algebra(structure), omega)


# ---------------------------------------------------------------------------
# per-structure suites
# ---------------------------------------------------------------------------


def _basis_forms(dim: int, k: int):
    return (Form.monomial(dim, key) for key in monomial_basis(dim, k))


def operator_identity_suite(
    s: SymplecticStructure,
    check: _Recorder,
    rng: random.Random,
    include_star: bool = True,
    label: str = "",
) -> None:
    dim, n = s.dim, s.n
    d, lam, L, h, dl = s.d, s.lam, s.L, s.h, s.d_lambda

    # The sign of [d^Lambda, L] is forced by the others: from [d, L] = 0,
    # [d, Lambda] = d^Lambda and [Lambda, L] = H, the Jacobi identity
    # gives [d^Lambda, L] = [d, H] = d under this package's Lambda sign.
    table = {
        "commute_d_L": lambda m: d(L(m)) - L(d(m)),
        "commute_dl_L_is_d": lambda m: dl(L(m)) - L(dl(m)) - d(m),
        "commute_ddl_L": lambda m: s.dd_lambda(L(m)) - L(s.dd_lambda(m)),
        "commute_d_Lambda_is_dl": lambda m: d(lam(m)) - lam(d(m)) - dl(m),
        "commute_dl_Lambda": lambda m: dl(lam(m)) - lam(dl(m)),
        "commute_ddl_Lambda": lambda m: s.dd_lambda(lam(m)) - lam(s.dd_lambda(m)),
        "commute_d_H_is_d": lambda m: d(h(m)) - h(d(m)) - d(m),
        "commute_dl_H_is_minus_dl": lambda m: dl(h(m)) - h(dl(m)) + dl(m),
        "commute_ddl_H": lambda m: s.dd_lambda(h(m)) - h(s.dd_lambda(m)),
        "sl2_lambda_L": lambda m: lam(L(m)) - L(lam(m)) - h(m),
        "sl2_H_L": lambda m: h(L(m)) - L(h(m)) + 2 * L(m),
        "sl2_H_Lambda": lambda m: h(lam(m)) - lam(h(m)) - 2 * lam(m),
        "d_squared": lambda m: d(d(m)),
        "d_lambda_squared": lambda m: dl(dl(m)),
        "anticommute_d_dl": lambda m: d(dl(m)) + dl(d(m)),
    }
    for k in range(dim + 1):
        for m in _basis_forms(dim, k):
            for name, expr in table.items():
                value = expr(m)
                check(name, value.is_zero(), f"{label} degree {k} at {m}: {value}")

    if include_star:
        check.guard("star_identities", label, lambda: s.star_op)

    for k in range(dim + 1):
        form = random_form(dim, k, rng, sparsity=3)
        check.guard(
            "lefschetz_reassembly",
            f"{label} degree {k}",
            lambda form=form: s.lefschetz_decompose(form),
        )

    for k in range(dim + 1):
        total = sum(
            s.primitive_subspace(k - 2 * r).dim for r in range(max(k - n, 0), k // 2 + 1)
        )
        check(
            "lefschetz_direct_sum_dims",
            total == comb(dim, k),
            f"{label} degree {k}: {total} != C({dim},{k})",
        )

    for k in range(n):
        check(
            "L_injective_below_middle",
            kernel(s.L_op.block(k)).dim == 0,
            f"{label} degree {k}",
        )
    for k in range(n + 1):
        block = operator_matrix(
            lambda m, k=k: _l_power(s, m, k), dim, n - k, n + k
        )
        _, _, rank = rref(block)
        check(
            "L_power_form_isomorphism",
            rank == comb(dim, n - k),
            f"{label} L^{k} on degree {n - k}",
        )


def _l_power(s: SymplecticStructure, form: Form, power: int) -> Form:
    for _ in range(power):
        form = s.L(form)
    return form


def theorem_suite(coh: SymplecticCohomology, check: _Recorder, label: str = "") -> None:
    check.guard("theorem_h2_full_direct", label, coh.h2_decomposition_check)
    check.guard("theorem_hk0_meets_h02k", label, coh.intersection_remark_check)
    check.guard("theorem_lr_equals_hr", label, coh.lr_equals_hr_check)

    s = coh.s
    for r in range(1, s.n // 2 + 1):
        group = coh.hrs_group(r, 0)
        omega_power = Form.unit(s.dim)
        for _ in range(r):
            omega_power = s.L(omega_power)
        cls = coh.de_rham[2 * r].class_of(omega_power)
        ok = group.dim == 1 and group.classes.contains(cls)
        check("theorem_hr0_spanned_by_omega_r", ok, f"{label} r={r}: dim {group.dim}")


def equivalence_suite(
    coh: SymplecticCohomology, check: _Recorder, label: str = ""
) -> None:
    s = coh.s
    dim = s.dim
    check.guard("equiv_hlc_iff_dd_lemma", label, coh.hlc_equals_dd_lemma_check)

    dl_dual = all(coh.dlambda_dims[k] == coh.betti[dim - k] for k in range(dim + 1))
    check("equiv_dlambda_dual_de_rham", dl_dual, f"{label} {coh.dlambda_dims}")

    ddl_dual = all(
        coh.ddlambda_dims[k] == coh.d_plus_dlambda[dim - k].dim for k in range(dim + 1)
    )
    check("equiv_ddlambda_dual_d_plus_dlambda", ddl_dual, f"{label} {coh.ddlambda_dims}")

    check.guard(
        "equiv_d_plus_dlambda_lefschetz", label, coh.d_plus_dlambda_lefschetz_check
    )
    check.guard("prop_full_implies_dual_direct", label, coh.full_implies_dual_direct_check)

    for sdeg in range(s.n + 1):
        check.guard(
            "primitive_ph_formulas_agree",
            f"{label} degree {sdeg}",
            lambda sdeg=sdeg: coh.primitive_ph_plus(sdeg),
        )

    if coh.properties.unimodular:
        for k in range(dim + 1):
            matrix = coh.cup_matrix(k)
            _, _, rank = rref(matrix)
            check(
                "cup_pairing_nondegenerate",
                rank == coh.betti[k] == coh.betti[dim - k],
                f"{label} degree {k}",
            )

    if coh.properties.nilpotent:
        check(
            "nilpotent_hlc_torus_rigidity",
            coh.hlc().overall == is_abelian(s.g),
            f"{label} nilpotent: hlc={coh.hlc().overall}",
        )

    if coh.hlc().overall:
        for k in range(dim + 1):
            verdict = coh.decomposition(k)
            check(
                "hlc_implies_full_direct",
                verdict.full and verdict.direct,
                f"{label} degree {k}: {verdict}",
            )
            # L^r is injective on H^(0,s) exactly while r + s <= n, so the
            # surviving summands start at r = max(k - n, 0).
            primitive_total = sum(
                coh.hrs_group(0, k - 2 * r).dim
                for r in range(max(k - s.n, 0), k // 2 + 1)
            )
            check(
                "hlc_implies_primitive_dims",
                primitive_total == coh.betti[k],
                f"{label} degree {k}: {primitive_total} != b_{k}",
            )


def verify_structure(
    s: SymplecticStructure,
    check: _Recorder,
    rng: random.Random,
    include_star: bool = True,
    label: str = "",
    operators: bool = True,
    theorems: bool = True,
    equivalences: bool = True,
) -> None:
    coh = SymplecticCohomology(s)
    if operators:
        operator_identity_suite(s, check, rng, include_star=include_star, label=label)
    if theorems:
        theorem_suite(coh, check, label=label)
    if equivalences:
        equivalence_suite(coh, check, label=label)


# ---------------------------------------------------------------------------
# generic linear-algebra property checks
# ---------------------------------------------------------------------------


def _random_matrix(rng: random.Random, nrows: int, ncols: int) -> QMatrix:
    return QMatrix(
        [
            [Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2))) for _ in range(ncols)]
            for _ in range(nrows)
        ],
        ncols,
    )


def linalg_suite(check: _Recorder, rng: random.Random, rounds: int = 12) -> None:
    from .linalg import image

    for i in range(rounds):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        m = _random_matrix(rng, nrows, ncols)
        reduced, _, rank = rref(m)
        again, _, rank2 = rref(reduced)
        check("rref_idempotent", again == reduced and rank == rank2, f"round {i}")
        check(
            "rank_nullity",
            kernel(m).dim + rank == ncols,
            f"round {i}: {kernel(m).dim} + {rank} != {ncols}",
        )
        x = [Fraction(rng.randint(-3, 3)) for _ in range(ncols)]
        check("image_contains_products", image(m).contains(m.apply(x)), f"round {i}")

        ambient = rng.randint(2, 6)
        a = Subspace.from_vectors(
            ambient, [_random_matrix(rng, 1, ambient).rows[0] for _ in range(rng.randint(0, 3))]
        )
        b = Subspace.from_vectors(
            ambient, [_random_matrix(rng, 1, ambient).rows[0] for _ in range(rng.randint(0, 3))]
        )
        lhs = a.dim + b.dim
        rhs = subspace_sum(a, b).dim + subspace_intersect(a, b).dim
        check("subspace_modular_law", lhs == rhs, f"round {i}: {lhs} != {rhs}")


def exterior_suite(check: _Recorder, rng: random.Random, rounds: int = 10) -> None:
    for i in range(rounds):
        dim = rng.choice((4, 5, 6))
        ka = rng.randint(0, dim)
        kb = rng.randint(0, dim)
        a = random_form(dim, ka, rng)
        b = random_form(dim, kb, rng)
        sign = -1 if (ka * kb) % 2 else 1
        check(
            "wedge_graded_commutative",
            a.wedge(b) == b.wedge(a) * sign,
            f"round {i}: degrees {ka},{kb}",
        )
        kc = rng.randint(0, dim)
        c = random_form(dim, kc, rng)
        check(
            "wedge_associative",
            a.wedge(b).wedge(c) == a.wedge(b.wedge(c)),
            f"round {i}",
        )


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def run_verify(
    seed: int = 0,
    dims: tuple[int, ...] = (4, 6),
    count_per_dim: int = 4,
    include_corpus: bool = True,
) -> VerifySummary:
    """Run every suite over the corpus and seeded random structures."""
    from .models import corpus
    from .report import structure_from_model

    rng = random.Random(seed)
    check = _Recorder()
    labels: list[str] = []

    linalg_suite(check, rng)
    exterior_suite(check, rng)

    jobs: list[tuple[str, SymplecticStructure, bool]] = []
    if include_corpus:
        for model in corpus():
            s = structure_from_model(model)
            jobs.append((model.name, s, True))
    for dim in dims:
        for i in range(count_per_dim):
            s = random_symplectic_structure(dim, rng)
            jobs.append((f"random-{dim}d-{i}", s, dim <= 6))

    for label, s, with_star in jobs:
        labels.append(label)
        verify_structure(s, check, rng, include_star=with_star, label=label)

    return VerifySummary(seed=seed, structures=labels, results=check.results)
