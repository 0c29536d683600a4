"""
Controllers Package

This package provides the exhaustive searches and the certificate checks
built on the models. It represents the 'C' part in the MVC architecture.
"""

from src.controllers.certify.runner import CertificateRunner, run_all, run_check

# Specify classes/objects to expose externally
__all__ = [
    'CertificateRunner',
    'run_all',
    'run_check',
]
