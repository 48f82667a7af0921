from ..valuations import AutomatonValuation, ModelSpecError, ReactiveValuation, StaticValuation
from .counter import CounterModel
from .registers import RegisterModel

_MODEL_MAP: dict[str, type[ReactiveValuation]] = {
    "registers": RegisterModel,
    "counter": CounterModel,
    "automaton": AutomatonValuation,
    "static": StaticValuation,
}


def model_kinds() -> list[str]:
    return sorted(_MODEL_MAP)


def get_model(spec: str) -> ReactiveValuation:
    """Build the valuation described by a model spec such as ``counter:0``.

    Raises ModelSpecError if the kind is unknown or its argument is malformed.
    """
    kind, _, argument = spec.strip().partition(":")
    model_cls = _MODEL_MAP.get(kind.lower())
    if model_cls is None:
        supported = ", ".join(model_kinds())
        raise ModelSpecError(f"Unsupported model kind: '{kind}'. Supported: {supported}")
    return model_cls.from_spec(argument)


__all__ = ["CounterModel", "RegisterModel", "get_model", "model_kinds"]
