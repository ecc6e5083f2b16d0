"""Hypothesis strategies shared by the theta-graph and GL2 tests."""
from hypothesis import strategies as st

from spinecensus import gl2
from spinecensus.theta_farey import BASE, flip

_GENS = (((0, -1), (1, 0)), ((1, 1), (0, 1)), ((1, -1), (0, 1)), ((1, 0), (0, -1)))


@st.composite
def theta_graphs(draw, max_steps=12):
    th = BASE
    for i in draw(st.lists(st.integers(0, 2), max_size=max_steps)):
        th = flip(th, sorted(th.slopes)[i])
    return th


@st.composite
def gl2_matrices(draw, max_len=8):
    m = gl2.I2
    for i in draw(st.lists(st.integers(0, len(_GENS) - 1), max_size=max_len)):
        m = gl2.mul(m, _GENS[i])
    return m
