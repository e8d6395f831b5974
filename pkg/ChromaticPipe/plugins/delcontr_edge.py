from ChromaticPipe.core.identities import Counterexample, VerificationResult, edge_delcontr_terms
from ChromaticPipe.core.mixedgraph import edge
from ChromaticPipe.core.pluginsystem import Plugin


class EdgeDeletionContraction(Plugin):
    """ Checks edge deletion-contraction on every edge of a graph whose
        endpoints carry no other edge or arc.
    """

    def __init__(self):
        super().__init__()
        self.title = "Edge deletion-contraction"
        self.call_level = 100
        self.command_full = "delcontr-edge"
        self.description = """ chi_G = chi_{G-e} - chi_{G/e} + (x-y) chi_{(G/e)-v_e}, every
                               side interpolated from the coloring counts
                           """
        self.needs_edges = True

    def on_run(self, graph, args):
        result = VerificationResult(self.command_full, graph)
        for u, v in graph.edge_list():
            e = edge(u, v)
            if graph.parallel_elements(e):
                result.skipped.append(f"edge {u}-{v} shares its endpoints with an arc")
                continue
            terms = edge_delcontr_terms(graph, e, getattr(args, "bound", None))
            result.checked += 1
            if terms["G"] != terms["rhs"]:
                detail = {name: terms[name] for name in ("G-e", "G/e", "(G/e)-v_e")}
                result.counterexample = Counterexample(graph, terms["G"], terms["rhs"], element=e, detail=detail)
                break
        return result
