from ChromaticPipe.core.decomposition import decomposition_terms
from ChromaticPipe.core.identities import Counterexample, VerificationResult
from ChromaticPipe.core.orderpoly import bop_reciprocity_sides
from ChromaticPipe.core.pluginsystem import Plugin


class OrderPolynomialReciprocity(Plugin):
    """ Checks the order polynomial reciprocity on every bicolored poset that
        appears as a term of the decomposition of a graph.
    """

    def __init__(self):
        super().__init__()
        self.title = "Order polynomial reciprocity"
        self.call_level = 500
        self.command_full = "bop-reciprocity"
        self.description = """ (-1)^|P| strict(-x,-y) = weak(x,y+1) for the bicolored posets
                               of all flats and acyclic orientations
                           """

    def on_run(self, graph, args):
        result = VerificationResult(self.command_full, graph)
        seen = set()
        for flat, sigma, poset in decomposition_terms(graph):
            key = poset.canonical_key()
            if key in seen:
                continue
            seen.add(key)
            left, right = bop_reciprocity_sides(poset, bound=getattr(args, "bound", None))
            result.checked += 1
            if left != right:
                result.counterexample = Counterexample(poset, left, right, element=flat,
                                                       detail={"orientation": sigma.describe()})
                break
        return result
