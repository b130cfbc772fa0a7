# This file marks the cli directory as a Python package
