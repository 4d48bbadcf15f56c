# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Exception hierarchy for pm4cover.

Verifiers never raise; they return reports. Everything below signals either
malformed input or, for InternalProofViolation, a bug in a construction step.
"""

from typing import List, Optional


class Pm4CoverError(Exception):
    """Base class for all pm4cover errors"""


class PoleError(Pm4CoverError):
    """Raised when a raw pole description violates the 3-pole structure"""


class EvenOrderError(PoleError): ...


class SpokeClashError(PoleError): ...


class ChordCoverageError(PoleError): ...


class LoopChordError(PoleError): ...


class RoleUnavailableError(PoleError): ...


class WrongProfileError(Pm4CoverError):
    """Raised when an operation is applied to a pole outside its precondition"""


class ImproperInputError(Pm4CoverError):
    """Raised when a cover handed to an extension step is not proper"""


class InvalidCircuitError(Pm4CoverError): ...


class InternalProofViolation(Pm4CoverError):
    """A construction step produced something its correctness argument excludes"""

    def __init__(self, message: str, trace: Optional[List] = None):
        super().__init__(message)
        self.trace = list(trace or [])


class ColouringError(Pm4CoverError): ...


class OddCircuitError(ColouringError): ...


class DegenerateReductionError(ColouringError): ...


class UnequalBoundaryError(ColouringError): ...


class ColouringUnavailableError(ColouringError): ...


class SizeCapError(Pm4CoverError):
    """Raised when an exhaustive search is asked to run beyond its configured cap"""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class GenerationError(Pm4CoverError): ...


class InfeasibleSpecError(GenerationError): ...


class RejectionBudgetExceededError(GenerationError): ...


class GraphError(Pm4CoverError): ...


class DegreeError(GraphError): ...


class NoQualifyingTwoFactorError(GraphError): ...


class DocumentError(Pm4CoverError): ...


class DocumentSyntaxError(DocumentError): ...


class DocumentValidationError(DocumentError): ...


class DocumentReferenceError(DocumentError): ...
