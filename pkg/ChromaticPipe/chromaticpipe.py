import argparse
import json
import logging
import sys

import ChromaticPipe.core.constants as cst
import ChromaticPipe.core.errors as ers
import ChromaticPipe.core.printstatus as ps
from ChromaticPipe.core.corpus import generate_suite
from ChromaticPipe.core.decomposition import chi_by_decomposition, decomposition_report
from ChromaticPipe.core.graphfile import load_graph
from ChromaticPipe.core.identities import chi_by_delcontr, clear_caches
from ChromaticPipe.core.mixedgraph import enumerate_acyclic_orientations, enumerate_flats
from ChromaticPipe.core.oracle import count_colorings, interpolate_chi
from ChromaticPipe.core.pluginsystem import PluginCollector

logger = logging.getLogger(__name__)

# How each --method computes chi_G(x, y)
_methods = {
    "decomposition": chi_by_decomposition,
    "interpolate": interpolate_chi,
    "delcontr": chi_by_delcontr,
}


class ChromaticPipe(object):
    """ Command line front end. Everything meant for the user goes to stdout
        (polynomials, counts, reports); status lines, the logo and diagnostics
        go to stderr.

        Exit codes: 0 success, 1 verification failed, 2 usage or parse error,
        3 bound exceeded, 4 the oracle disagrees with the polynomial.
    """

    def __init__(self, argv=None):
        # Retrieve the arguments and set up logging before anything is printed
        self.load_args(argv)
        self.setup_logging()
        self.print_logo()

    def print_logo(self):
        if ps.quiet:
            return
        sys.stderr.write(cst.logo + "\n")
        sys.stderr.write(cst.cr + "\n\n")

    def setup_logging(self):
        args = self.args
        ps.quiet = args.quiet
        if args.logfile:
            logging.basicConfig(filename=args.logfile, level=logging.DEBUG, force=True,
                                format=cst.log_format, datefmt=cst.log_datefmt)
        else:
            level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
            logging.basicConfig(stream=sys.stderr, level=level, force=True,
                                format=cst.log_format, datefmt=cst.log_datefmt)
        logging.info("ChromaticPipe: " + cst.cr)

    def load_args(self, argv=None):
        """ Build one subparser per subcommand and parse argv. """
        # Options every subcommand understands
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--bound", type=int, default=None,
                            help=f"Largest graph (in vertices) the exact methods accept (default {cst.vertex_bound})")
        common.add_argument("--logfile", type=str, default=None, help="Write a DEBUG log to this file")
        common.add_argument("-v", "--verbose", action="count", default=0, help="Log INFO (-v) or DEBUG (-vv) to stderr")
        common.add_argument("-q", "--quiet", action="store_true", help="Suppress the logo and status lines")

        parser = argparse.ArgumentParser(prog="chromaticpipe",
                                         description="Bivariate chromatic polynomials of mixed graphs")
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True

        compute = subparsers.add_parser("compute", parents=[common], help="Compute chi_G(x, y) of a graph file")
        compute.add_argument("file", help="Graph file")
        compute.add_argument("--method", choices=cst.methods, default=cst.default_method,
                             help=f"Algorithm (default {cst.default_method})")
        compute.add_argument("--format", choices=cst.formats, default=cst.default_format, help="Output format")

        evaluate = subparsers.add_parser("eval", parents=[common], help="Count the colorings at (x, y)")
        evaluate.add_argument("file", help="Graph file")
        evaluate.add_argument("-x", type=int, required=True, help="Number of colors")
        evaluate.add_argument("-y", type=int, required=True, help="Threshold, at most x")

        verify = subparsers.add_parser("verify", parents=[common], help="Verify an identity")
        verify.add_argument("identity", help="Identity to verify, or 'all'")
        verify.add_argument("files", nargs="*", help="Graph files; without files the seeded suite is used")
        verify.add_argument("--seed", type=int, default=None,
                            help=f"Also run the random suite generated from this seed (default {cst.default_seed})")
        verify.add_argument("--suite-size", type=int, default=cst.suite_size, help="Number of suite graphs")
        verify.add_argument("--xmax", type=int, default=cst.reciprocity_xmax,
                            help="Largest x of the pointwise reciprocity checks")
        verify.add_argument("--format", choices=("plain", "json"), default="plain", help="Output format")

        report = subparsers.add_parser("report", parents=[common], help="Per-term decomposition report")
        report.add_argument("file", help="Graph file")
        report.add_argument("--format", choices=cst.formats, default=cst.default_format, help="Output format")

        flats = subparsers.add_parser("flats", parents=[common], help="List the flats of a graph")
        flats.add_argument("file", help="Graph file")
        flats.add_argument("--format", choices=("plain", "json"), default="plain", help="Output format")

        orientations = subparsers.add_parser("orientations", parents=[common],
                                             help="List the acyclic orientations of the underlying graph")
        orientations.add_argument("file", help="Graph file")
        orientations.add_argument("--format", choices=("plain", "json"), default="plain", help="Output format")

        self.parser = parser
        self.args = parser.parse_args(argv)
        self.check_args()

    def check_args(self):
        """ Reject bounds, palettes and suite sizes out of range via
            parser.error(), which exits with code 2.
        """
        parser = self.parser; args = self.args
        if args.bound is not None and args.bound < 0:
            parser.error(f"--bound must be nonnegative, got {args.bound}")
        if args.command == "verify":
            if args.xmax < 0:
                parser.error(f"--xmax must be nonnegative, got {args.xmax}")
            if args.suite_size < 0:
                parser.error(f"--suite-size must be nonnegative, got {args.suite_size}")

    def start(self):
        """ Run the selected subcommand and return its exit code. """
        command = getattr(self, "cmd_" + self.args.command)
        try:
            return command()
        except ers.BoundExceededError as error:
            ps.failed(error.message)
            return cst.EXIT_BOUND
        except ers.PipeError as error:
            ps.failed(error.message)
            return cst.EXIT_USAGE
        except OSError as error:
            ps.failed(f"Could not read {error.filename}: {error.strerror}")
            return cst.EXIT_USAGE

    def read_graph(self, path):
        ps.running(f"Reading {path}")
        graph = load_graph(path)
        ps.updateDone(f"Read {path}: {graph.order} vertices, {len(graph.edges)} edges, {len(graph.arcs)} arcs")
        return graph

    @staticmethod
    def emit(text):
        sys.stdout.write(text + "\n")
        sys.stdout.flush()

    #-----------------------------------------#
    #               Subcommands               #
    #-----------------------------------------#

    def cmd_compute(self):
        args = self.args
        graph = self.read_graph(args.file)
        ps.running(f"Computing chi by {args.method}")
        polynomial = _methods[args.method](graph, args.bound)
        ps.updateDone(f"Computed chi by {args.method}")
        self.emit(polynomial.render(args.format))
        return cst.EXIT_OK

    def cmd_eval(self):
        args = self.args
        graph = self.read_graph(args.file)
        count = count_colorings(graph, args.x, args.y)
        self.emit(str(count))

        bound = cst.vertex_bound if args.bound is None else args.bound
        if graph.order > bound:
            ps.warning(f"{graph.order} vertices exceeds the bound {bound}, polynomial cross-check skipped")
            return cst.EXIT_OK
        value = chi_by_decomposition(graph, bound).eval(args.x, args.y)
        if value != count:
            ps.failed(f"Internal mismatch at ({args.x}, {args.y}): counted {count}, polynomial gives {value}")
            return cst.EXIT_INTERNAL
        ps.done("Count agrees with the polynomial")
        return cst.EXIT_OK

    def cmd_verify(self):
        args = self.args
        plugins = PluginCollector("ChromaticPipe.plugins").get(args.identity)

        graphs = [(path, self.read_graph(path)) for path in args.files]
        if args.seed is not None or not args.files:
            seed = cst.default_seed if args.seed is None else args.seed
            suite = generate_suite(seed, args.suite_size)
            graphs += [(f"suite[{seed}]#{i}", graph) for i, graph in enumerate(suite)]
            ps.done(f"Generated {len(suite)} graphs from seed {seed}")

        results = []
        failed = 0
        for plugin in plugins:
            ps.module(f"Running plugin: {plugin.title}")
            for index, (name, graph) in enumerate(graphs):
                ps.progressBar(index, len(graphs), prefix=f"{plugin.command_full} on {name}", log=False)
                if not plugin.applies_to(graph):
                    results.append((name, plugin.command_full, None))
                    continue
                result = plugin.on_run(graph, args)
                results.append((name, plugin.command_full, result))
                if not result.passed:
                    failed += 1
                    ps.updateFailed(f"{plugin.command_full} fails on {name}", progressbar=True)
            ps.progressBar(len(graphs), len(graphs), prefix=f"{plugin.command_full} done", log=False)
            ps.newline()
        clear_caches()

        self.emit(self.render_results(results, args.format))
        return cst.EXIT_FAILED if failed else cst.EXIT_OK

    @staticmethod
    def render_results(results, fmt):
        if fmt == "json":
            return json.dumps([{"input": name, "identity": identity,
                                "result": None if result is None else result.to_json()}
                               for name, identity, result in results], separators=(",", ":"))
        lines = []
        for name, identity, result in results:
            if result is None:
                lines.append(f"{name}: {identity}: not applicable")
                continue
            lines.append(f"{name}: {result.summary()}")
            if not result.passed:
                lines.extend("    " + line for line in result.counterexample.describe().splitlines())
        checked = [result for _, _, result in results if result is not None]
        passed = sum(1 for result in checked if result.passed)
        lines.append(f"{passed} passed, {len(checked) - passed} failed, {len(results) - len(checked)} not applicable")
        return "\n".join(lines)

    def cmd_report(self):
        args = self.args
        graph = self.read_graph(args.file)
        ps.running("Decomposing over flats and acyclic orientations")
        report = decomposition_report(graph, args.bound)
        ps.updateDone(f"Decomposed into {len(report.rows)} terms over {len(report.flats())} flats")
        self.emit(report.render(args.format))
        return cst.EXIT_OK

    def cmd_flats(self):
        args = self.args
        graph = self.read_graph(args.file)
        flats = enumerate_flats(graph)
        if args.format == "json":
            self.emit(json.dumps([{"partition": flat.partition(),
                                   "quotient": list(flat.vertices),
                                   "contracted": sorted(flat.contracted, key=flat.quotient.position)}
                                  for flat in flats], separators=(",", ":")))
        else:
            for flat in flats:
                contracted = ", ".join(sorted(flat.contracted, key=flat.quotient.position)) or "-"
                self.emit(f"{flat.describe()}  C(H) = {contracted}")
        return cst.EXIT_OK

    def cmd_orientations(self):
        args = self.args
        graph = self.read_graph(args.file)
        orientations = enumerate_acyclic_orientations(graph.underlying())
        if args.format == "json":
            self.emit(json.dumps([[list(arc) for arc in sigma.arc_list()] for sigma in orientations],
                                 separators=(",", ":")))
        else:
            for sigma in orientations:
                self.emit(sigma.describe())
        return cst.EXIT_OK


def run(argv=None):
    """ Run the front end on argv and return the exit code. """
    try:
        return ChromaticPipe(argv).start()
    except KeyboardInterrupt:
        ps.warning("KeyboardInterrupt! Exiting...")
        ps.newline()
        return cst.EXIT_FAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
