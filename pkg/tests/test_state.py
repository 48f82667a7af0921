import time

from short_circuit_logic.rewriting import ProofTrace
from short_circuit_logic.state import ProofStore
from short_circuit_logic.terms import parse


def empty_trace():
    return ProofTrace(parse("a"), parse("a"), ())


class TestProofStore:
    def test_add_returns_uuid(self):
        store = ProofStore()
        proof_id = store.add(empty_trace(), "EqFSCL")
        assert isinstance(proof_id, str)
        assert len(proof_id) == 36  # UUID4 format

    def test_store_and_retrieve(self):
        store = ProofStore()
        trace = empty_trace()
        proof_id = store.add(trace, "EqMSCL")
        assert store.get(proof_id) == (trace, "EqMSCL")
        assert len(store) == 1

    def test_unknown_id_returns_none(self):
        assert ProofStore().get("nonexistent-id") is None

    def test_expired_proofs_are_pruned(self):
        store = ProofStore(ttl_seconds=0)
        proof_id = store.add(empty_trace(), "EqFSCL")
        time.sleep(0.01)
        store.prune_expired()
        assert store.get(proof_id) is None
        assert len(store) == 0

    def test_fresh_proofs_survive_prune(self):
        store = ProofStore(ttl_seconds=3600)
        proof_id = store.add(empty_trace(), "EqFSCL")
        store.prune_expired()
        assert store.get(proof_id) is not None
