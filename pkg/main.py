# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

import pm4cover


if __name__ == "__main__":
    pm4cover.main()
