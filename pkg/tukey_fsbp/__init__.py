# coding=utf-8
"""The root of the Tukey FSBP namespace."""
