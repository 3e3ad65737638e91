"""Construction registry, claim reproduction, pair suites and reports."""
from .pairs import load_pairs, pair_suite, pair_suite_file
from .reconstruct import SearchError, SearchSpace, cospectral_pairs, reconstruct_from_matrix, unlabeled_classes
from .registry import REGISTRY, UnknownConstruction, construction, ids
from .report import Entry, Report, emit, parse_json
from .reproduce import reproduce, reproduce_all
