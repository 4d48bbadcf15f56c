#!/usr/bin/env python3
# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Settings loading tests
"""

import sys
import tempfile
import unittest
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

try:
    from pm4cover.config import (
        OracleLimits,
        Settings,
        default_jobs,
        get_oracle_limits,
        get_settings,
        load_settings,
        set_oracle_limits,
        set_settings,
    )
    from pm4cover.constants import DEFAULT_COVER_CAP, DEFAULT_KEMPE_RESTARTS, DEFAULT_SEARCH_RESTARTS, SIZE_CAP_ENV
    CONFIG_IMPORTS_AVAILABLE = True
except ImportError as e:
    print(f"Warning: Could not import pm4cover config modules: {e}")
    CONFIG_IMPORTS_AVAILABLE = False


@unittest.skipUnless(CONFIG_IMPORTS_AVAILABLE, "pm4cover config modules not available")
class TestLoadSettings(unittest.TestCase):
    """Bundled defaults, user file, environment"""

    def tearDown(self):
        set_settings(None)

    def test_bundled_defaults(self):
        settings = load_settings(environ={})
        self.assertEqual(settings, Settings())
        self.assertEqual(settings.oracle.cover_cap, DEFAULT_COVER_CAP)
        self.assertTrue(settings.engine.use_b_route)
        self.assertEqual((settings.engine.kempe_restarts, settings.engine.search_restarts), (DEFAULT_KEMPE_RESTARTS, DEFAULT_SEARCH_RESTARTS))

    def test_user_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "pm4cover.toml"
            path.write_text('[engine]\nuse_b_route = false\nspeed = "fast"\n\n[oracle]\ncover_cap = 11\n')
            with self.assertLogs("pm4cover.config", level="WARNING"):
                settings = load_settings(path, environ={})
        self.assertFalse(settings.engine.use_b_route)
        self.assertEqual(settings.oracle.cover_cap, 11)
        self.assertEqual(settings.oracle.matching_cap, OracleLimits().matching_cap)

    def test_environment_cap(self):
        settings = load_settings(environ={SIZE_CAP_ENV: "9"})
        self.assertEqual(settings.oracle, OracleLimits(9, 9, 9, 9))
        with self.assertRaises(ValueError):
            load_settings(environ={SIZE_CAP_ENV: "nine"})
        with self.assertRaises(ValueError):
            load_settings(environ={SIZE_CAP_ENV: "0"})

    def test_process_settings(self):
        custom = Settings(oracle=OracleLimits(cover_cap=5))
        set_settings(custom)
        self.assertIs(get_settings(), custom)
        self.assertEqual(get_oracle_limits().cover_cap, 5)
        set_settings(None)
        self.assertIsNot(get_settings(), custom)

    def test_replace_oracle_limits(self):
        custom = Settings()
        set_settings(custom)
        set_oracle_limits(OracleLimits(9, 9, 9, 9))
        self.assertEqual(get_oracle_limits(), OracleLimits(9, 9, 9, 9))
        self.assertEqual(custom.oracle.enumeration_cap, 9)

    def test_default_jobs(self):
        self.assertGreaterEqual(default_jobs(), 1)


if __name__ == '__main__':
    unittest.main()
