import re

from ..valuations import ModelSpecError, ReactiveValuation, UnknownAtomError

_ATOM = re.compile(r"(?P<op>set|eq):(?P<index>\d+):(?P<value>[TF])")


class RegisterModel(ReactiveValuation):
    """Boolean registers read by ``eq:i:j`` and written by ``set:i:j`` (1-based ``i``)."""

    def __init__(self, n: int, init: tuple[bool, ...] | None = None):
        if n < 1:
            raise ModelSpecError(f"register count must be at least 1, got {n}")
        init = init if init is not None else (False,) * n
        if len(init) != n:
            raise ModelSpecError(f"expected {n} initial register values, got {len(init)}")
        self.n = n
        self.init = tuple(init)

    def _decode(self, atom: str) -> tuple[str, int, bool]:
        m = _ATOM.fullmatch(atom)
        if m is None:
            raise UnknownAtomError(f"atom '{atom}' is not a register atom (set:i:T, eq:i:F, ...)")
        index = int(m.group("index"))
        if not 1 <= index <= self.n:
            raise ModelSpecError(f"register index {index} out of range 1..{self.n} in '{atom}'")
        return m.group("op"), index - 1, m.group("value") == "T"

    def check_atom(self, atom: str) -> None:
        self._decode(atom)

    def initial_state(self) -> tuple[bool, ...]:
        return self.init

    def reply(self, state: tuple[bool, ...], atom: str) -> tuple[bool, tuple[bool, ...]]:
        op, i, value = self._decode(atom)
        if op == "eq":
            return state[i] == value, state
        return True, state[:i] + (value,) + state[i + 1 :]

    def describe(self) -> str:
        return f"{self.n} registers"

    def describe_state(self, state: tuple[bool, ...]) -> dict[str, str]:
        return {str(i + 1): "T" if v else "F" for i, v in enumerate(state)}

    @classmethod
    def from_spec(cls, argument: str) -> "RegisterModel":
        count, _, init = argument.partition(":")
        if not count.isdigit():
            raise ModelSpecError(f"expected registers:<n>[:<T/F per register>], got 'registers:{argument}'")
        n = int(count)
        if init and set(init) - {"T", "F"}:
            raise ModelSpecError(f"register init must be a string of T and F, got '{init}'")
        return cls(n, tuple(c == "T" for c in init) if init else None)
