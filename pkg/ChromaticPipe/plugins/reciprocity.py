import ChromaticPipe.core.constants as cst
from ChromaticPipe.core.identities import (Counterexample, VerificationResult, cross_check_mH,
                                           count_compatible_pairs, reciprocity_mismatches,
                                           reciprocity_polynomial)
from ChromaticPipe.core.mixedgraph import enumerate_acyclic_orientations, enumerate_flats
from ChromaticPipe.core.oracle import interpolate_chi
from ChromaticPipe.core.orderpoly import count_weak_maps, poset_from_orientation
from ChromaticPipe.core.pluginsystem import Plugin


class ChromaticReciprocity(Plugin):
    """ Checks chi_G(-x, -y) against the signed sum of compatible pairs over the
        flats of G, pointwise on 0 <= y <= x <= xmax and as interpolated
        polynomials, and bridges every m_H to the weak order polynomials.
    """

    def __init__(self):
        super().__init__()
        self.title = "Chromatic reciprocity"
        self.call_level = 400
        self.command_full = "reciprocity"
        self.description = """ chi_G(-x,-y) = sum over flats H of (-1)^|V(H)| m_H(x,y), with
                               m_H counted as compatible pairs and as weak maps
                           """

    def on_run(self, graph, args):
        bound = getattr(args, "bound", None)
        xmax = getattr(args, "xmax", None)
        xmax = cst.reciprocity_xmax if xmax is None else xmax
        result = VerificationResult(self.command_full, graph)

        for x, y, left, right in reciprocity_mismatches(graph, xmax, bound):
            result.counterexample = Counterexample(graph, left, right, point=(x, y))
            return result
        result.checked += (xmax + 1) * (xmax + 2) // 2

        negated = interpolate_chi(graph, bound).negate_vars()
        signed = reciprocity_polynomial(graph, bound)
        result.checked += 1
        if negated != signed:
            result.counterexample = Counterexample(graph, negated, signed)
            return result

        for h in enumerate_flats(graph):
            for x in range(1, xmax + 1):
                for y in range(x):
                    result.checked += 1
                    if not cross_check_mH(h, x, y):
                        weak = sum(count_weak_maps(poset_from_orientation(h, sigma), x, y + 1)
                                   for sigma in enumerate_acyclic_orientations(h.quotient.underlying()))
                        result.counterexample = Counterexample(graph, count_compatible_pairs(h, x, y), weak,
                                                               element=h, point=(x, y))
                        return result
        return result
