# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
pm4cover - proper 4-covers of Hamiltonian cubic 3-poles by perfect matchings,
with the brute-force oracle, instance generators and graph-level covering
that check them
"""

from .cli import main, run
from .version import __version__

__all__ = ["main", "run", "__version__"]
