# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""Version information for pm4cover"""

__version__ = "1.0.0"
__title__ = "pm4cover"
__description__ = "Proper 4-covers of Hamiltonian cubic 3-poles by perfect matchings"
__author__ = "The pm4cover Authors"
__license__ = "Apache-2.0"
