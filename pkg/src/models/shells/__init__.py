"""Norm shells, root-system checks and the reference H2/H3/H4 models."""
