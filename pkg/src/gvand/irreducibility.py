"""Irreducibility decisions for generalized Vandermonde determinants.

For N >= 3 the determinant is absolutely irreducible over a field of
characteristic p exactly when three support conditions hold: the affine
span of the exponent set has dimension >= 2, the componentwise minimum
is zero (no monomial content), and p does not divide the scale gcd d.
Each failure mode names its witness: a monomial content factor, a
collinear support that splits after specialization, or a p-th power
structure coming from the Frobenius.  Certificates are constructively
re-checkable against the expanded determinant.
"""

from dataclasses import dataclass

from gvand.errors import (
    CertificateMismatchError,
    NoRootError,
    SizeCapError,
    SpecializationUnluckyError,
)
from gvand.exponents import (
    Support,
    affine_dimension,
    componentwise_min,
    d_gamma,
    normalize,
)
from gvand.reporting import ConditionCheck
from gvand.rings import GF, CoefficientRing
from gvand.vandermonde import (
    VandermondeInstance,
    content_monomial,
    row_support,
    vandermonde_determinant,
)

VERDICT_IRREDUCIBLE = "irreducible"
VERDICT_MONOMIAL_FACTOR = "monomial_factor"
VERDICT_POWER = "power_of_irreducible"
VERDICT_COLLINEAR = "collinear_split"
VERDICT_SMALL_N = "small_n"


@dataclass(frozen=True)
class FieldSpec:
    """Ground-field data: characteristic 0 or a prime."""

    characteristic: int

    def __post_init__(self):
        CoefficientRing(self.characteristic)  # validates

    @property
    def ring(self) -> CoefficientRing:
        return CoefficientRing(self.characteristic)


@dataclass(frozen=True)
class IrreducibilityCertificate:
    verdict: str
    characteristic: int
    gamma_bar: tuple
    d_gamma: object  # int, or None for a single-vector support
    affine_dim: int
    power_r: int
    reduced_support: Support
    conditions: tuple

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "characteristic": self.characteristic,
            "gamma_bar": list(self.gamma_bar),
            "d_gamma": self.d_gamma,
            "affine_dimension": self.affine_dim,
            "power_r": self.power_r,
            "reduced_support": self.reduced_support.to_json(),
            "conditions": [c.to_json() for c in self.conditions],
        }


def _p_adic_valuation(d: int, p: int) -> int:
    r = 0
    while d % p == 0:
        d //= p
        r += 1
    return r


def decide(support: Support, field: FieldSpec) -> IrreducibilityCertificate:
    """Classify the determinant of the given support over the given field."""
    p = field.characteristic
    gamma_bar = componentwise_min(support)
    norm, _ = normalize(support)
    dim = affine_dimension(support)
    d = d_gamma(support) if support.N >= 2 else None

    span_ok = dim >= 2
    content_ok = not any(gamma_bar)
    if p == 0:
        char_ok = True
        char_detail = "characteristic 0 divides no positive scale gcd"
    elif d is None:
        char_ok = False
        char_detail = "scale gcd undefined for a single exponent vector"
    else:
        char_ok = d % p != 0
        char_detail = f"char {p} {'does not divide' if char_ok else 'divides'} d = {d}"

    conditions = (
        ConditionCheck("span", span_ok, f"affine dimension {dim} (needs >= 2)"),
        ConditionCheck(
            "content",
            content_ok,
            "componentwise minimum is zero"
            if content_ok
            else f"componentwise minimum {gamma_bar} extracts a monomial factor",
        ),
        ConditionCheck("characteristic", char_ok, char_detail),
    )

    power_r = 0
    reduced = norm
    if support.N >= 2 and p > 0 and d is not None and d % p == 0:
        power_r = _p_adic_valuation(d, p)
        q = p**power_r
        reduced = Support(norm.n, tuple(tuple(x // q for x in v) for v in norm.vectors))

    if support.N < 3:
        verdict = VERDICT_SMALL_N
    elif not content_ok:
        verdict = VERDICT_MONOMIAL_FACTOR
    elif not span_ok:
        verdict = VERDICT_COLLINEAR
    elif not char_ok:
        verdict = VERDICT_POWER
    else:
        verdict = VERDICT_IRREDUCIBLE

    return IrreducibilityCertificate(
        verdict=verdict,
        characteristic=p,
        gamma_bar=gamma_bar,
        d_gamma=d,
        affine_dim=dim,
        power_r=power_r,
        reduced_support=reduced,
        conditions=conditions,
    )


def _reconstruct_support(cert: IrreducibilityCertificate) -> Support:
    mult = cert.characteristic**cert.power_r if cert.power_r else 1
    vectors = tuple(
        tuple(mult * x + g for x, g in zip(v, cert.gamma_bar))
        for v in cert.reduced_support.vectors
    )
    return Support(len(cert.gamma_bar), vectors)


def verify_certificate(inst: VandermondeInstance, cert: IrreducibilityCertificate, seed: int = 0) -> dict:
    """Re-check a certificate constructively against the expanded determinant.

    Returns a report of named checks when everything passes; raises
    CertificateMismatchError (report attached) when any check fails.
    The expensive symbolic work stays within the N <= 12 cap.
    """
    checks = []

    def add(name, ok, detail):
        checks.append(ConditionCheck(name, bool(ok), detail))
        return ok

    if inst.coeff_ring.characteristic != cert.characteristic:
        add(
            "field",
            False,
            f"instance char {inst.coeff_ring.characteristic} vs certificate {cert.characteristic}",
        )
        _finish(cert, checks, "field characteristic mismatch")
    reconstructed = _reconstruct_support(cert)
    if reconstructed != inst.support:
        add("support", False, "certificate does not reconstruct this support")
        _finish(cert, checks, "support mismatch")
    add("support", True, "gamma_bar + p^r-scaled reduced support reconstructs the instance")

    det = vandermonde_determinant(inst)
    verdict = cert.verdict

    if verdict == VERDICT_SMALL_N:
        _check_small_n(inst, det, add)
    elif verdict == VERDICT_MONOMIAL_FACTOR:
        _check_monomial_factor(inst, cert, det, add)
    elif verdict == VERDICT_POWER:
        _check_power(inst, cert, det, add)
    elif verdict == VERDICT_COLLINEAR:
        _check_collinear(inst, cert, seed, add)
    elif verdict == VERDICT_IRREDUCIBLE:
        _check_irreducible(inst, cert, seed, add)
    else:
        add("verdict", False, f"unknown verdict {verdict!r}")

    report = {
        "verdict": verdict,
        "ok": all(c.holds for c in checks),
        "checks": [c.to_json() for c in checks],
    }
    if not report["ok"]:
        failing = next(c for c in checks if not c.holds)
        raise CertificateMismatchError(f"check {failing.name!r} failed: {failing.detail}", report)
    return report


def _finish(cert, checks, message):
    report = {
        "verdict": cert.verdict,
        "ok": False,
        "checks": [c.to_json() for c in checks],
    }
    raise CertificateMismatchError(message, report)


def _check_small_n(inst, det, add):
    ring = inst.poly_ring()
    n, vectors = inst.n, inst.support.vectors
    if inst.N == 1:
        expected = ring.monomial(vectors[0])
        add("small_n", det == expected, "N = 1 determinant is the single monomial")
        return
    if inst.N == 2:
        g1, g2 = vectors
        plus = ring.monomial(tuple(g1) + tuple(g2))
        minus = ring.monomial(tuple(g2) + tuple(g1))
        add("small_n", det == plus - minus, "N = 2 determinant is the 2x2 binomial")
        return
    add("small_n", False, f"small_n verdict with N = {inst.N}")


def _check_monomial_factor(inst, cert, det, add):
    content = content_monomial(inst)
    quotient = det.exact_divide(content)
    if quotient is None:
        add("content_divides", False, "monomial content does not divide the determinant")
        return
    add("content_divides", True, "componentwise-min monomial divides the determinant")
    norm_inst = VandermondeInstance(normalize(inst.support)[0], inst.coeff_ring)
    add(
        "content_quotient",
        quotient == vandermonde_determinant(norm_inst),
        "quotient equals the determinant of the normalized support",
    )


def _check_power(inst, cert, det, add):
    p, r = cert.characteristic, cert.power_r
    if p == 0 or r < 1:
        add("power_shape", False, f"power verdict needs p > 0 and r >= 1, got p={p}, r={r}")
        return
    try:
        root = det.frobenius_root(r)
    except NoRootError as exc:
        add("frobenius_root", False, f"no p^{r}-th root: {exc}")
        return
    add("frobenius_root", True, f"determinant admits a p^{r}-th Frobenius root")
    reduced_inst = VandermondeInstance(cert.reduced_support, inst.coeff_ring)
    add(
        "root_is_reduced_det",
        root == vandermonde_determinant(reduced_inst),
        "root equals the determinant of the reduced support",
    )
    add(
        "root_row_support",
        row_support(root, reduced_inst) == set(cert.reduced_support.vectors),
        "row-1 support of the root matches the reduced support",
    )
    add("root_repowers", root ** (p**r) == det, "root re-raised to p^r reproduces the determinant")
    sub = decide(cert.reduced_support, FieldSpec(p))
    others_hold = all(c.holds for c in sub.conditions[:2])
    if others_hold:
        add(
            "reduced_verdict",
            sub.verdict == VERDICT_IRREDUCIBLE,
            f"reduced support decides {sub.verdict}",
        )
    else:
        add("reduced_verdict", True, f"reduced support fails another condition ({sub.verdict})")


def _check_collinear(inst, cert, seed, add):
    from gvand.oracle import LINE_CASE_PRIMES, line_case_factor

    # The split is characteristic-blind, so any demo prime exhibits it.
    # Prefer the certificate's own characteristic; small fields can be
    # unlucky (every torus point may kill the reference minor), in which
    # case the remaining primes are tried before giving up.
    first = cert.characteristic if cert.characteristic in LINE_CASE_PRIMES else 5
    last_error = None
    for p in [first] + [q for q in (5, 3, 2) if q != first]:
        demo = VandermondeInstance(inst.support, GF(p))
        try:
            report = line_case_factor(demo, seed=seed)
        except (SpecializationUnluckyError, SizeCapError) as exc:
            last_error = exc
            continue
        add(
            "line_split",
            report.n_factors >= 2,
            f"specialized univariate splits into {report.n_factors} factors over GF({p})",
        )
        return
    add("line_split", False, f"specialized factorization failed: {last_error}")


def _check_irreducible(inst, cert, seed, add):
    from gvand.oracle import polygon_indecomposability
    from gvand.tropical import TROPICAL_IRREDUCIBLE, decide_tropical_irreducibility

    tcert = decide_tropical_irreducibility(inst.support, seed=seed)
    d = cert.d_gamma
    if d == 1:
        add(
            "tropical",
            tcert.verdict == TROPICAL_IRREDUCIBLE,
            f"tropical decision is {tcert.verdict} (d = 1 expects irreducible)",
        )
    else:
        add(
            "tropical",
            tcert.verdict != TROPICAL_IRREDUCIBLE and tcert.multiplicity_gcd == d,
            f"tropical decision {tcert.verdict} with facet-multiplicity gcd "
            f"{tcert.multiplicity_gcd} (char-blind scale d = {d})",
        )
    if inst.n == 2:
        poly_report = polygon_indecomposability(normalize(inst.support)[0])
        if poly_report.status == "indecomposable":
            add("polygon", True, "Newton polygon is lattice-indecomposable")
        else:
            add(
                "polygon",
                True,
                f"polygon test {poly_report.status} (one-directional, recorded only)",
            )
