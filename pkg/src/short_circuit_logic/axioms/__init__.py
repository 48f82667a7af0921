from collections.abc import Sequence

from .base import AxiomSet, Lemma
from .conditional import create_conditional_sets
from .sequential import create_sequential_sets


class UnknownAxiomSetError(ValueError):
    pass


def _key(name: str) -> str:
    return name.lower().replace("_", "-").replace("*", "-star").replace("--", "-")


def build_registry(atoms: Sequence[str] = ("a", "b")) -> dict[str, AxiomSet]:
    """Every built-in axiom set, schemes expanded over ``atoms``."""
    registry = {}
    for axiom_set in create_conditional_sets():
        registry[axiom_set.name] = axiom_set.with_alphabet(atoms)
    for axiom_set in create_sequential_sets():
        registry[axiom_set.name] = axiom_set.with_alphabet(atoms)
    return registry


def get_axiom_set(name: str, registry: dict[str, AxiomSet] | None = None) -> AxiomSet:
    """Look an axiom set up by name, ignoring case and ``-``/``_`` spelling.

    ``cpstat*``, ``cpstat-star`` and ``CPSTAT_STAR`` all name CPstat*.
    Raises UnknownAxiomSetError listing the known names.
    """
    registry = registry if registry is not None else build_registry()
    wanted = _key(name)
    for axiom_set in registry.values():
        if _key(axiom_set.name) == wanted:
            return axiom_set
    known = ", ".join(registry)
    raise UnknownAxiomSetError(f"Unknown axiom set: '{name}'. Known: {known}")


__all__ = ["AxiomSet", "Lemma", "UnknownAxiomSetError", "build_registry", "get_axiom_set"]
