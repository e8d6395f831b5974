#-----------------------------------------#
#                General                  #
#-----------------------------------------#
version = "0.1.0"
date = "17-10-2026"
logo = r"""
  ____ _                              _   _      ____  _            
 / ___| |__  _ __ ___  _ __ ___   __ _| |_(_) ___|  _ \(_)_ __   ___ 
| |   | '_ \| '__/ _ \| '_ ` _ \ / _` | __| |/ __| |_) | | '_ \ / _ \
| |___| | | | | | (_) | | | | | | (_| | |_| | (__|  __/| | |_) |  __/
 \____|_| |_|_|  \___/|_| |_| |_|\__,_|\__|_|\___|_|   |_| .__/ \___|
                                                         |_|         
"""
authors = ["The ChromaticPipe developers"]
cr = f"Version {version} ({date}), Copyright 2026 © {', '.join(authors)}"


#-----------------------------------------#
#            Computation bounds           #
#-----------------------------------------#

# Largest graph (in vertices) the exact methods accept
vertex_bound = 6
# Largest bicolored poset (in elements) the order polynomials accept
poset_bound = 6
# Off-grid points used to re-check an interpolated polynomial
heldout_points = 10
# Entries kept by the memoized counters and polynomial builders
count_cache_size = 1 << 16
polynomial_cache_size = 4096


#-----------------------------------------#
#            Randomized corpora           #
#-----------------------------------------#

default_seed = 2023
suite_size = 200
suite_max_vertices = 5
# Probability that a vertex pair carries an edge or an arc, and the relative
# frequency of each graph order 1..suite_max_vertices in the suite
edge_probability = 0.6
suite_vertex_weights = (1, 2, 3, 4, 5)
relation_probability = 0.4
celeste_probability = 0.4
poset_suite_size = 120
poset_max_size = 5
reciprocity_xmax = 4


#-----------------------------------------#
#             Command line                #
#-----------------------------------------#

methods = ("decomposition", "interpolate", "delcontr")
default_method = "decomposition"
formats = ("plain", "latex", "json")
default_format = "plain"

# Exit codes of the command line front end
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3
EXIT_INTERNAL = 4


#-----------------------------------------#
#                 Logging                 #
#-----------------------------------------#

log_format = "%(asctime)s %(levelname)s %(module)s - %(funcName)s: %(message)s"
log_datefmt = "%Y-%m-%d %H:%M:%S"


#-----------------------------------------#
#            Graph text format            #
#-----------------------------------------#

# Directives of the graph file format, with their number of operands
directives = {"vertex": 1, "edge": 2, "arc": 2}
comment_char = "#"
# Vertex names: nonempty ASCII alphanumeric/underscore tokens
name_pattern = r"[A-Za-z0-9_]+"
