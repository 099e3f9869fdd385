import hypothesis.strategies as st
import pytest

from lkg0 import formula as N
from lkg0 import surface as S

ATOM_NAMES = ["p", "q", "r", "p(a)", "p(b)"]


def nnf_formulas(names=ATOM_NAMES, max_leaves=12):
    leaves = st.one_of(
        st.sampled_from(names).map(N.Atom),
        st.sampled_from(names).map(N.NegAtom),
        st.just(N.TOP),
        st.just(N.BOTTOM),
    )
    return st.recursive(
        leaves,
        lambda kids: st.one_of(st.builds(N.And, kids, kids), st.builds(N.Or, kids, kids)),
        max_leaves=max_leaves,
    )


def surface_formulas(names=ATOM_NAMES, max_leaves=12):
    leaves = st.one_of(
        st.sampled_from(names).map(S.Atom),
        st.just(S.Top()),
        st.just(S.Bottom()),
    )
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.builds(S.Not, kids),
            st.builds(S.And, kids, kids),
            st.builds(S.Or, kids, kids),
            st.builds(S.Implies, kids, kids),
        ),
        max_leaves=max_leaves,
    )


def sequents(names=ATOM_NAMES, max_size=4, max_leaves=8):
    return st.lists(nnf_formulas(names, max_leaves), max_size=max_size).map(N.Sequent)


@pytest.fixture
def pab():
    from lkg0.parser import parse_sequent
    return parse_sequent("p(a)&p(b), ~p(a)|~p(b)")
