"""Structure of the automorphism group of the surface of a pair.

For ``P(0) = Q(0) = 0`` every fibration is conjugate to the one of ``[P, Q]``
or ``[Q, P]`` and the group is an amalgamated product over the diagonal
automorphisms ``Diag``: of ``A`` (generated by the swap) and ``J_y`` when
the two pairs are isomorphic, of ``J_y`` and ``J_v`` otherwise. When
``Diag`` is trivial the amalgam is a free product. Otherwise the group is
huge and the report carries a free family certificate.
"""

from zigzag.PairClass import PairClass, CASE_I, CASE_II, CASE_III
from zigzag.moduli import aut_pair_group, apply_reversion
from zigzag.network import classify_type_iii, SELF_LOOP
from zigzag.words import repair_shift
from zigzag.automorphisms.hypotheses import check_hypotheses
from zigzag.util.config import DEFAULT_FAMILY
from zigzag.util.rationals import as_rational, format_rational, parse_rational_list

import logging
logger = logging.getLogger(__name__)


class AutReport(object):
    """What is known about ``Aut(S)`` for the surface of one pair.

    ``diag`` lists the diagonal automorphisms as ``(a, c, action)`` with
    ``action`` the scalars ``(a, c, k, m)`` by which they act on
    ``(x, y, u, v)``, or is ``None`` when ``Diag`` is infinite.
    ``certificate`` and ``hypotheses`` are only set for the huge shape.
    """

    AMALGAM_SWAP = 'A *_Diag J_y'
    AMALGAM_FIBRATIONS = 'J_y *_Diag J_v'
    HUGE = 'type-I-huge'

    FREE_SWAP = 'Z/2 * G_a^inf'
    FREE_FIBRATIONS = 'G_a^inf * G_a^inf'

    def __init__(self, pair, shape, diag = None, diag_description = None, jy_description = None,
                 jv_description = None, certificate = None, hypotheses = None):
        if shape == self.AMALGAM_SWAP or shape == self.AMALGAM_FIBRATIONS:
            assert pair.case == CASE_III
        self.pair = pair
        self.shape = shape
        self.diag = diag
        self.diag_description = diag_description
        self.jy_description = jy_description
        self.jv_description = jv_description
        self.certificate = certificate
        self.hypotheses = hypotheses

    @property
    def diag_trivial(self):
        return self.diag is not None and len(self.diag) == 1 and self.diag[0][:2] == (1, 1)

    @property
    def free_product(self):
        """The free product the amalgam degenerates to when ``Diag`` is trivial, else ``None``."""
        if not self.diag_trivial:
            return None
        return self.FREE_SWAP if self.shape == self.AMALGAM_SWAP else self.FREE_FIBRATIONS

    def to_json(self):
        out = {
            'pair' : self.pair.to_json(),
            'shape' : self.shape,
            'free_product' : self.free_product,
        }
        if self.shape != self.HUGE:
            out['diag_trivial'] = self.diag_trivial
            out['diag'] = None if self.diag is None else [
                {
                    'a' : format_rational(a),
                    'c' : format_rational(c),
                    'action' : [format_rational(x) for x in action],
                } for a, c, action in self.diag
            ]
            out['diag_description'] = self.diag_description
            out['jy_description'] = self.jy_description
            if self.jv_description is not None:
                out['jv_description'] = self.jv_description
        else:
            out['hypotheses'] = self.hypotheses.to_json()
            out['certificate'] = self.certificate.to_json()
        return out

    def to_text(self):
        lines = ["Aut(S) for %s (case %s)" % (self.pair, self.pair.case)]
        if self.shape == self.HUGE:
            lines.append("  contains a free group on the zeta words of {%s}" % ", ".join(
                format_rational(a) for a in self.certificate.family
            ))
            status = "certified" if self.certificate.ok else "NOT certified: %s" % self.certificate.failure
            if self.certificate.shift != 0:
                status += " (after replacing Q(w) by Q(w + %s))" % format_rational(self.certificate.shift)
            lines.append("  free family %s" % status)
            lines.append("  " + self.hypotheses.to_text())
        else:
            lines.append("  amalgamated product %s" % self.shape)
            if self.free_product is not None:
                lines.append("  Diag(S) is trivial: free product %s" % self.free_product)
            lines.append("  Diag(S): %s" % self.diag_description)
            lines.append("  J_y: %s" % self.jy_description)
            if self.jv_description is not None:
                lines.append("  J_v: %s" % self.jv_description)
        return "\n".join(lines) + "\n"


def diagonal_action(pair, a, c):
    """Scalars ``(a, c, k, m)`` of the diagonal automorphism ``(a, 0, c)`` on ``(x, y, u, v)``.

    With ``P(a w) = kappa P(w)`` and ``Q(k w) = mu Q(w)``: ``k = a kappa / c``
    and ``m = kappa mu / c``.
    """
    a, c = as_rational(a), as_rational(c)
    kappa = pair.P.compose_affine(a).leading_coefficient / pair.P.leading_coefficient
    k = a * kappa / c
    mu = pair.Q.compose_affine(k).leading_coefficient / pair.Q.leading_coefficient
    assert pair.P.compose_affine(a) == pair.P.scale(kappa)
    assert pair.Q.compose_affine(k) == pair.Q.scale(mu)
    return (a, c, k, kappa * mu / c)


def _lift_description(aut):
    return "(x, y) -> (a x + y R(y), c y), R in k[y], with (a, R(0), c): %s" % aut.describe()


def _diag(pair, aut):
    """Finite list of diagonal automorphisms, or ``None`` if there are infinitely many."""
    a_values = aut.a_values
    if a_values is None or aut.bc_constraint.is_family:
        return None
    out = []
    for a in a_values:
        for w in aut.bc_constraint.witnesses:
            c = w.beta * a**(aut.r0 + 1)
            out.append((a, c, diagonal_action(pair, a, c)))
    return out


def aut_structure(pair, family = None, max_syllables = 2, jobs = 1):
    """Describe ``Aut(S)`` for the surface of ``pair``.

    Args:
        pair (PairClass): The pair.
        family (list): Parameters of the free family certified for case I and
            II pairs; defaults to ``ZIGZAG_DEFAULT_FAMILY``.
        max_syllables (int): Passed to the certifier.
        jobs (int): Passed to the certifier.
    Returns:
        AutReport
    """
    if pair.case == CASE_III:
        shape = AutReport.AMALGAM_SWAP if classify_type_iii(pair) == SELF_LOOP else AutReport.AMALGAM_FIBRATIONS
        aut = aut_pair_group(pair)
        diag = _diag(pair, aut)
        report = AutReport(
            pair, shape,
            diag = diag,
            diag_description = "b = 0, %s" % aut.describe(),
            jy_description = _lift_description(aut),
            jv_description = None if shape == AutReport.AMALGAM_SWAP else _lift_description(aut_pair_group(pair.swapped())),
        )
        logger.info("Aut(S) of %s: %s" % (pair, report.free_product or shape))
        return report

    base = pair
    if pair.case == CASE_II:
        base = apply_reversion(pair, 0)
        assert base.case == CASE_I
    if family is None:
        family = parse_rational_list(DEFAULT_FAMILY)
    certificate = repair_shift(base, family, max_syllables = max_syllables, jobs = jobs)
    report = AutReport(
        pair, AutReport.HUGE,
        certificate = certificate,
        hypotheses = check_hypotheses(base.P, base.Q),
    )
    logger.info("Aut(S) of %s is huge; free family %s" % (pair, "certified" if certificate.ok else "not certified"))
    return report
