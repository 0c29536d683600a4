"""
Certify Package

The registered certificate checks and the runner that writes .cert files
and the MANIFEST.
"""
