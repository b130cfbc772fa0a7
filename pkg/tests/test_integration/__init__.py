"""
Integration tests for the negmass scenario runner and CLI.

These tests run whole scenarios against a temporary output directory and
inspect the files and exit codes they produce.
"""
