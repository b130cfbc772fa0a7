#!/usr/bin/env python3
"""
🧮 negmass workbench CLI
Wrapper script to launch the CLI module
"""

import sys
from pathlib import Path

# Add project root and src/ to path if needed
project_root = Path(__file__).parent
for path in (project_root, project_root / "src"):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from cli.src.main import app

if __name__ == "__main__":
    app()
