"""Zero forcing numbers: exact solving, certificates, bounds, experiments."""

from .bounds import (BoundEntry, BoundReport, TuranParams, bound_report,
                     davila_kenter_value, girth_lower_bound,
                     gnp_forcing_formula, hfree_lower_bound,
                     hoffman_forcing_lower, kab_lower_bound,
                     kst_degree_bound, moore_bound,
                     odd_inner_product_witness_cap, report_to_json,
                     report_to_text, spectral_forcing_upper)
from .errors import (BudgetExceededError, InputError, NumericError,
                     ResourceError, SoundnessError)
from .forcing import (ForcingChronicle, ZfResult, closure, is_forcing_set,
                      validate_chronicle, zero_forcing_number_exact,
                      zero_forcing_upper_heuristic)
from .graph import (Gf2Matrix, Graph, check_graph_invariants, circulant_graph,
                    complete_bipartite_graph, complete_graph, contains_kab,
                    cycle_graph, format_edge_list, gf2_rank, girth,
                    gnp_sample, graph_from_edge_list, is_regular, line_graph,
                    mask_from, max_degree, min_degree,
                    odd_inner_product_graph, parse_edge_list, path_graph,
                    petersen_graph, random_regular_sample, read_edge_list,
                    standard_graph, write_edge_list)
from .kernels import BACKEND
from .spectral import (LineGraphForcingReport, SpectralSummary,
                       greedy_witness, greedy_witness_guarantee,
                       line_graph_forcing_construction, mixing_defect,
                       spectrum)
from .witness import (LooseSubwitness, SuperdiagonalMax,
                      SuperdiagonalRatioScan, Witness, check_loose_subwitness,
                      check_witness, forcing_set_from_witness, format_witness,
                      is_divided, loose_subwitness_from_witness,
                      max_superdiagonal_pairs, max_witness_order,
                      parse_witness, superdiagonal_pairs_bound,
                      superdiagonal_ratio_table, witness_from_forcing,
                      witness_labels_independent)

__version__ = "0.1.0"
