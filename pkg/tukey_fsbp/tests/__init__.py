# coding=utf-8
"""Tests for Tukey FSBP.

The tests compare the exact engine against slower oracles written
independently in :mod:`tukey_fsbp.tests.utils`. Acceptance-scale sweeps are
marked ``slow``; deselect them with ``pytest -m 'not slow'``.
"""
