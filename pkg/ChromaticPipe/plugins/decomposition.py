import logging
import random

import ChromaticPipe.core.constants as cst
from ChromaticPipe.core.decomposition import chi_by_decomposition
from ChromaticPipe.core.identities import Counterexample, VerificationResult, chi_by_delcontr
from ChromaticPipe.core.oracle import count_colorings, heldout_points, interpolate_chi
from ChromaticPipe.core.pluginsystem import Plugin

logger = logging.getLogger(__name__)


class ThreeWayAgreement(Plugin):
    """ Computes chi_G by decomposition, by interpolation and by edge elimination,
        demands exact agreement and then re-checks the polynomial against the
        coloring counts at random points off the interpolation grid.
    """

    def __init__(self):
        super().__init__()
        self.title = "Decomposition against the oracle"
        self.call_level = 300
        self.command_full = "decomposition"
        self.description = """ Sum over flats and acyclic orientations of the strict order
                               polynomials equals the interpolated coloring count and the
                               deletion-contraction result
                           """

    def on_run(self, graph, args):
        bound = getattr(args, "bound", None)
        seed = getattr(args, "seed", None)
        result = VerificationResult(self.command_full, graph)

        decomposed = chi_by_decomposition(graph, bound)
        for name, other in (("interpolate", interpolate_chi(graph, bound)),
                            ("delcontr", chi_by_delcontr(graph, bound))):
            result.checked += 1
            if other != decomposed:
                result.counterexample = Counterexample(graph, decomposed, other, detail={"method": name})
                return result

        rng = random.Random(cst.default_seed if seed is None else seed)
        for x, y in heldout_points(rng, graph.order):
            result.checked += 1
            count = count_colorings(graph, x, y)
            value = decomposed.eval(x, y)
            if value != count:
                result.counterexample = Counterexample(graph, count, value, point=(x, y))
                break
        logger.debug(f"{graph!r}: {result.summary()}")
        return result
