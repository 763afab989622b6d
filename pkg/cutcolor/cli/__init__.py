# SPDX-License-Identifier: MIT
"""Command line entry points (`cutcolor solve | gen | verify | bench`)."""
