"""
Certificate data model and canonical serialization.

A certificate is one line of JSON with sorted keys, compact separators,
ASCII escapes and no floating values, terminated by a newline. The same
inputs therefore always give the same bytes and the same SHA-256.
"""

from dataclasses import dataclass, field
import hashlib
import json
from typing import Dict, List, Sequence, Tuple

from src.utils.errors import InconsistencyError

CHECK_IDS: Tuple[str, ...] = (
    "p1-closure", "p2-shells", "p3-gram", "p4-den2", "p5-sqrt5", "p6-tower",
    "half-root-strict", "half-root-trace", "self-dual",
)

PASS = "PASS"
FAIL = "FAIL"


def _check_canonical(value, path: str = "certificate"):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return
    if isinstance(value, float):
        raise InconsistencyError(f"{path}: floating value {value!r} in certificate")
    if isinstance(value, dict):
        for k, v in value.items():
            if not isinstance(k, str):
                raise InconsistencyError(f"{path}: non-string key {k!r}")
            _check_canonical(v, f"{path}.{k}")
        return
    if isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            _check_canonical(v, f"{path}[{i}]")
        return
    raise InconsistencyError(f"{path}: unsupported value type {type(value).__name__}")


def canonical_json(value) -> bytes:
    _check_canonical(value)
    text = json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
    return (text + "\n").encode("ascii")


@dataclass
class Certificate:
    check_id: str
    parameters: Dict[str, object] = field(default_factory=dict)
    counts: Dict[str, int] = field(default_factory=dict)
    witnesses: List[str] = field(default_factory=list)
    expected: Dict[str, dict] = field(default_factory=dict)
    mismatches: Dict[str, dict] = field(default_factory=dict)
    status: str = PASS

    def expect(self, key: str, oracle, computed) -> bool:
        """Record an oracle comparison; a mismatch flips the status to FAIL"""
        self.expected[key] = oracle.as_dict()
        if _normalize(computed) != _normalize(oracle.value):
            self.mismatches[key] = {"expected": _normalize(oracle.value),
                                    "computed": _normalize(computed),
                                    "citation": oracle.citation}
            self.status = FAIL
            return False
        return True

    def require(self, key: str, condition: bool) -> bool:
        """Record a boolean property under counts and fail when it does not hold"""
        self.counts[key] = 1 if condition else 0
        if not condition:
            self.mismatches[key] = {"expected": True, "computed": False, "citation": key}
            self.status = FAIL
        return condition

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "parameters": self.parameters,
            "counts": self.counts,
            "witnesses": list(self.witnesses),
            "expected": self.expected,
            "mismatches": self.mismatches,
            "status": self.status,
        }

    def to_bytes(self) -> bytes:
        return canonical_json(self.to_dict())

    def sha256(self) -> str:
        return hashlib.sha256(self.to_bytes()).hexdigest()

    @classmethod
    def from_bytes(cls, data: bytes) -> "Certificate":
        """
        Raises:
            InconsistencyError: the bytes are not a canonical certificate
        """
        try:
            raw = json.loads(data.decode("ascii"))
        except (UnicodeDecodeError, json.JSONDecodeError) as e:
            raise InconsistencyError(f"unreadable certificate: {e}") from e
        missing = {"check_id", "parameters", "counts", "witnesses", "expected",
                   "mismatches", "status"} - set(raw)
        if missing:
            raise InconsistencyError(f"certificate lacks {sorted(missing)}")
        cert = cls(raw["check_id"], raw["parameters"], raw["counts"], raw["witnesses"],
                   raw["expected"], raw["mismatches"], raw["status"])
        if cert.to_bytes() != data:
            raise InconsistencyError("certificate bytes are not canonical")
        return cert


def _normalize(value):
    if isinstance(value, tuple):
        return [_normalize(v) for v in value]
    if isinstance(value, list):
        return [_normalize(v) for v in value]
    return value


@dataclass(frozen=True)
class ManifestEntry:
    check_id: str
    sha256: str
    status: str


@dataclass(frozen=True)
class RunManifest:
    tool: str
    version: str
    icosian_basis: str
    cd_convention: str
    entries: Tuple[ManifestEntry, ...]
    digest: str

    @property
    def status(self) -> str:
        return PASS if all(e.status == PASS for e in self.entries) else FAIL

    def render(self) -> bytes:
        lines = [f"tool={self.tool}", f"version={self.version}",
                 f"icosian_basis={self.icosian_basis}", f"cd_convention={self.cd_convention}"]
        lines += [f"cert {e.check_id} sha256={e.sha256} status={e.status}" for e in self.entries]
        lines += [f"status={self.status}", f"sha256={self.digest}"]
        return ("\n".join(lines) + "\n").encode("ascii")


def build_manifest(certificates: Sequence[Certificate], tool: str, version: str,
                   icosian_basis: str, cd_convention: str) -> RunManifest:
    """Manifest over certificates taken in check-id order"""
    rank = {c: i for i, c in enumerate(CHECK_IDS)}
    ordered = sorted(certificates, key=lambda c: rank.get(c.check_id, len(rank)))
    digest = hashlib.sha256(b"".join(c.to_bytes() for c in ordered)).hexdigest()
    entries = tuple(ManifestEntry(c.check_id, c.sha256(), c.status) for c in ordered)
    return RunManifest(tool, version, icosian_basis, cd_convention, entries, digest)
