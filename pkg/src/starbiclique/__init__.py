"""Star and biclique colorings: structures, enumeration, verification,
exact solvers, hardness gadgets, and the linear-time algorithms for
threshold and net-free block graphs."""

from .enumeration import (Biclique, CapExceeded, Star, maximal_bicliques,
                          maximal_stars, maximal_stars_split)
from .graphs import (BlockSeparation, Graph, RecognitionFlags, TwinPartition,
                     block_separation, build_graph, contains_induced,
                     pattern_graph, recognize, twin_partition)
from .solve import (ListAssignment, SolveOutcome, SolveTimeout, chromatic,
                    is_k_choosable, solve_biclique_coloring,
                    solve_star_coloring, uniform_lists)
from .verify import (Coloring, Violation, check_biclique_coloring,
                     check_biclique_coloring_blocksep, check_star_coloring,
                     check_star_coloring_blocksep, is_biclique_coloring,
                     is_star_coloring, is_star_coloring_blocksep,
                     mono_biclique_from_indepset, mono_star_biclique_exists)

__all__ = [name for name in dir() if not name.startswith("_")]
