# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
pm4cover Test Suite

Worked poles, engine levels, oracle agreement, documents and the command line.
"""
