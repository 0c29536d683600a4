"""Views package: the command-line surface."""
