# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

########################################
#          EDGE KINDS
########################################

H_EDGE = "H"
CHORD = "chord"
SPOKE = "spoke"

EDGE_KINDS = [H_EDGE, CHORD, SPOKE]

# Sort rank used for canonical edge ordering in documents
EDGE_KIND_RANK = {
    H_EDGE: 0,
    CHORD: 1,
    SPOKE: 2,
}

########################################
#          MATCHING LABELS
########################################

COLOURS = (1, 2, 3)
CHORD_LABEL = 4
ALL_LABELS = frozenset({1, 2, 3, 4})

########################################
#          SEGMENT PROFILES
########################################

THREE_ODD = "ThreeOdd"
TWO_EVEN_ONE_ODD = "TwoEvenOneOdd"

########################################
#          DISPATCHER RULES
########################################

RULE_THREE_ODD = "ThreeOdd"
RULE_LEN2 = "Len2"
RULE_UNIQ_EXTERIOR = "UniqExterior"
RULE_SUPPRESS = "Suppress"
# Profile constraint name for poles handled by suppression
RULE_FAMILY_G = "FamilyG"
RULE_ANY = "Any"

PROFILE_CONSTRAINTS = [RULE_ANY, RULE_THREE_ODD, RULE_LEN2, RULE_UNIQ_EXTERIOR, RULE_FAMILY_G]

ROUTE_B = "b-route"
ROUTE_BACKTRACK = "backtrack"

REDUCTION_UNIQUE_EXTERIOR = "UniqueExterior"
REDUCTION_INDUCTION_FRONT = "InductionFront"
REDUCTION_INDUCTION_BACK = "InductionBack"

CIRCUIT_SOURCE_CONSTRUCTION = "construction"
CIRCUIT_SOURCE_FALLBACK = "oracle-fallback"
CIRCUIT_SOURCE_ORACLE = "oracle"

########################################
#          LIMITS AND DEFAULTS
########################################

DEFAULT_MATCHING_CAP = 30
DEFAULT_COVER_CAP = 17
DEFAULT_CIRCUIT_CAP = 20
DEFAULT_ENUMERATION_CAP = 13
DEFAULT_REJECTION_BUDGET = 10_000
DEFAULT_KEMPE_BUDGET_FACTOR = 2
DEFAULT_KEMPE_RESTARTS = 4
DEFAULT_SEARCH_RESTARTS = 5

# node budget of the first cut-off colouring search: base + per_edge * |E|
SEARCH_BASE_NODES = 256
SEARCH_NODES_PER_EDGE = 4

SIZE_CAP_ENV = "PM4COVER_SIZE_CAP"

########################################
#          CLI EXIT CODES
########################################

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INTERNAL_VIOLATION = 2
EXIT_NEGATIVE_VERDICT = 3

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]
