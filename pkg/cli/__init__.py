"""negmass workbench command-line interface."""
