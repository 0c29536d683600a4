"""
Certificate Runner Module

This module runs registered checks and writes their certificates and the
run manifest.
"""

import os
from pathlib import Path
from typing import List, Optional, Sequence

from src import __version__
from src.constants.oracle_constants import CD_CONVENTION, TOOL_NAME
from src.controllers.certify.checks import CHECKS, CheckContext, CheckOptions
from src.models.certificate import Certificate, RunManifest, build_manifest
from src.models.orders.catalog import ICOSIAN_BASIS_TEXT
from src.utils.config import Config
from src.utils.errors import UnknownCheckError
from src.utils.logger import Logger

MANIFEST_NAME = "MANIFEST"
CERT_SUFFIX = ".cert"


class CertificateRunner:
    """
    Runs checks against one shared context.

    Orders, structure tables and unit shells are computed once per runner
    and reused by every check that needs them.
    """

    def __init__(self, options: Optional[CheckOptions] = None):
        """
        Initialize the runner

        Args:
            options: check options; read from the configuration when omitted
        """
        self.logger = Logger.instance()
        self.options = options or self.options_from_config()
        self.context = CheckContext(self.options)

    @staticmethod
    def options_from_config() -> CheckOptions:
        config = Config.instance()
        config.validate()
        section = config.get("verification")
        return CheckOptions(workers=section["workers"], witnesses=section["witnesses"],
                            random_samples=section["random_samples"], seed=section["seed"])

    def run_check(self, check_id: str) -> Certificate:
        """
        Run one check

        Raises:
            UnknownCheckError: check_id is not registered
            InconsistencyError: the computation contradicted itself
        """
        if check_id not in CHECKS:
            raise UnknownCheckError(check_id)
        description, func = CHECKS[check_id]
        self.logger.info(f"running {check_id}: {description}")
        cert = func(self.context)
        if cert.status == "FAIL":
            for key, mismatch in cert.mismatches.items():
                self.logger.error(f"{check_id}: {key} expected {mismatch['expected']}, "
                                  f"computed {mismatch['computed']}")
        self.logger.info(f"{check_id}: {cert.status}")
        return cert

    def run_all(self, out_dir, check_ids: Sequence[str] = tuple(CHECKS)) -> RunManifest:
        """
        Run checks in order, write `<id>.cert` for each and the MANIFEST

        Args:
            out_dir: output directory, created when missing
            check_ids: checks to run, all registered ones by default

        Returns:
            RunManifest: the manifest that was written
        """
        out = Path(out_dir)
        os.makedirs(out, exist_ok=True)
        certificates: List[Certificate] = []
        for check_id in check_ids:
            cert = self.run_check(check_id)
            write_certificate(cert, out)
            certificates.append(cert)
        manifest = build_manifest(certificates, TOOL_NAME, __version__, ICOSIAN_BASIS_TEXT,
                                  CD_CONVENTION)
        with open(out / MANIFEST_NAME, "wb") as f:
            f.write(manifest.render())
        self.logger.info(f"wrote {len(certificates)} certificates to {out}, overall {manifest.status}")
        return manifest


def write_certificate(cert: Certificate, out_dir) -> Path:
    path = Path(out_dir) / f"{cert.check_id}{CERT_SUFFIX}"
    with open(path, "wb") as f:
        f.write(cert.to_bytes())
    return path


def run_check(check_id: str, options: Optional[CheckOptions] = None) -> Certificate:
    return CertificateRunner(options).run_check(check_id)


def run_all(out_dir, options: Optional[CheckOptions] = None) -> RunManifest:
    return CertificateRunner(options).run_all(out_dir)
