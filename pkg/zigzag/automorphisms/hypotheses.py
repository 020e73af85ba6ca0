from zigzag.poly import multiplicity_profile

import logging
logger = logging.getLogger(__name__)


class HypothesisReport(object):
    """Hypotheses under which a surface has a huge automorphism group.

    ``P`` and ``Q`` each need at least two distinct roots over the algebraic
    closure, and ``P(0) != 0``.
    """

    def __init__(self, p_distinct_roots, q_distinct_roots, p_unit):
        self.p_distinct_roots = p_distinct_roots
        self.q_distinct_roots = q_distinct_roots
        self.p_unit = p_unit

    @property
    def p_two_roots(self):
        return self.p_distinct_roots >= 2

    @property
    def q_two_roots(self):
        return self.q_distinct_roots >= 2

    @property
    def passed(self):
        return self.p_two_roots and self.q_two_roots and self.p_unit

    def to_json(self):
        return {
            'p_two_distinct_roots' : self.p_two_roots,
            'q_two_distinct_roots' : self.q_two_roots,
            'p_nonzero_at_0' : self.p_unit,
            'passed' : self.passed,
        }

    def to_text(self):
        mark = lambda ok: "yes" if ok else "no"
        return "P has 2 distinct roots: %s; Q has 2 distinct roots: %s; P(0) != 0: %s; verdict: %s" % (
            mark(self.p_two_roots), mark(self.q_two_roots), mark(self.p_unit),
            "pass" if self.passed else "fail"
        )


def check_hypotheses(P, Q):
    """Check the hypotheses on ``(P, Q)``; see ``HypothesisReport``."""
    return HypothesisReport(
        multiplicity_profile(P).n_distinct,
        multiplicity_profile(Q).n_distinct,
        P[0] != 0,
    )
