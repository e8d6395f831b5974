from ChromaticPipe.core.identities import Counterexample, VerificationResult, arc_delcontr_terms
from ChromaticPipe.core.pluginsystem import Plugin


class ArcDeletionContraction(Plugin):
    """ Checks arc deletion-contraction on every arc of a graph whose endpoints
        carry no other edge or arc. A failure lists every intermediate polynomial,
        including the union and intersection counts both sides are built from.
    """

    def __init__(self):
        super().__init__()
        self.title = "Arc deletion-contraction"
        self.call_level = 200
        self.command_full = "delcontr-arc"
        self.description = """ chi_G + chi_{G_a} = chi_{G-a} - chi_{G/a} + (x-y)(1-x+y) chi_{(G/a)-v_a}
                               + (x-y)(chi_{G-a-v} + chi_{G-a-u}) for every arc a = u->v
                           """
        self.needs_arcs = True

    def on_run(self, graph, args):
        result = VerificationResult(self.command_full, graph)
        for a in graph.arc_list():
            if graph.parallel_elements(a):
                result.skipped.append(f"arc {a[0]}->{a[1]} shares its endpoints with another edge or arc")
                continue
            terms = arc_delcontr_terms(graph, a, getattr(args, "bound", None))
            result.checked += 1
            if terms["lhs"] != terms["rhs"]:
                detail = {name: value for name, value in terms.items() if name not in ("lhs", "rhs")}
                result.counterexample = Counterexample(graph, terms["lhs"], terms["rhs"], element=a, detail=detail)
                break
        return result
