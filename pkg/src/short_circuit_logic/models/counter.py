import re

from ..valuations import ModelSpecError, ReactiveValuation, UnknownAtomError

_INCREMENT = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)=(?P=name)\+1")
_COMPARE = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)==(?P<value>-?\d+)")


class CounterModel(ReactiveValuation):
    """Integer counters in the manner of a Perl condition.

    ``n=n+1`` increments counter ``n`` and replies whether the new value is
    non-zero (always, since counters start at a non-negative value);
    ``n==k`` compares without writing. Every name is its own counter.
    """

    def __init__(self, init: int = 0):
        if init < 0:
            raise ModelSpecError(f"counter init must be non-negative, got {init}")
        self.init = init

    def _decode(self, atom: str) -> tuple[str, str, int | None]:
        if m := _INCREMENT.fullmatch(atom):
            return "inc", m.group("name"), None
        if m := _COMPARE.fullmatch(atom):
            return "eq", m.group("name"), int(m.group("value"))
        if "=" in atom:
            raise ModelSpecError(f"malformed counter atom '{atom}' (expected n=n+1 or n==k)")
        raise UnknownAtomError(f"atom '{atom}' is not a counter atom")

    def check_atom(self, atom: str) -> None:
        self._decode(atom)

    def initial_state(self) -> tuple[tuple[str, int], ...]:
        return ()

    def reply(self, state, atom):
        op, name, value = self._decode(atom)
        counters = dict(state)
        current = counters.get(name, self.init)
        if op == "eq":
            return current == value, state
        counters[name] = current + 1
        return counters[name] != 0, tuple(sorted(counters.items()))

    def describe(self) -> str:
        return f"counters starting at {self.init}"

    def describe_state(self, state) -> dict[str, int]:
        return dict(state)

    @classmethod
    def from_spec(cls, argument: str) -> "CounterModel":
        if not argument:
            return cls()
        if not re.fullmatch(r"-?\d+", argument):
            raise ModelSpecError(f"counter init must be an integer, got '{argument}'")
        return cls(int(argument))
