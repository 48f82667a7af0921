from hypothesis import strategies as st

from short_circuit_logic.terms import F, T, And, Atom, Cond, Not, Or, Var


def terms(atoms=("a", "b", "c"), variables=(), conditionals=True, max_leaves=12):
    leaves = st.sampled_from([T, F, *(Atom(a) for a in atoms), *(Var(v) for v in variables)])

    def extend(children):
        options = [
            children.map(Not),
            st.builds(And, children, children),
            st.builds(Or, children, children),
        ]
        if conditionals:
            options.append(st.builds(Cond, children, children, children))
        return st.one_of(options)

    return st.recursive(leaves, extend, max_leaves=max_leaves)
