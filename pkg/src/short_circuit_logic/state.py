import time
import uuid

from .rewriting import ProofTrace


class ProofStore:
    """Proof traces found by ``prove`` calls, kept for ``ttl_seconds``."""

    def __init__(self, ttl_seconds: int = 3600):
        self._proofs: dict[str, dict] = {}
        self._ttl_seconds = ttl_seconds

    def add(self, trace: ProofTrace, set_name: str) -> str:
        proof_id = str(uuid.uuid4())
        self._proofs[proof_id] = {
            "created_at": time.time(),
            "set": set_name,
            "trace": trace,
        }
        return proof_id

    def get(self, proof_id: str) -> tuple[ProofTrace, str] | None:
        entry = self._proofs.get(proof_id)
        if entry is None:
            return None
        return entry["trace"], entry["set"]

    def __len__(self) -> int:
        return len(self._proofs)

    def prune_expired(self) -> None:
        now = time.time()
        expired = [
            pid
            for pid, data in self._proofs.items()
            if now - data["created_at"] > self._ttl_seconds
        ]
        for pid in expired:
            del self._proofs[pid]
