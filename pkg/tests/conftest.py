from hypothesis import strategies as st

import ncfkit
from ncfkit import NcfLayerSpec, TruthTable
from ncfkit.enumeration import layer_compositions


def pytest_report_header(config):
    return f"ncfkit kernel backend: {ncfkit.backend_name()}"


@st.composite
def tables(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.binary(min_size=1 << n, max_size=1 << n))
    return TruthTable(n, bytes(b & 1 for b in raw))


@st.composite
def ncf_specs(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    ks = draw(st.sampled_from(list(layer_compositions(n))))
    order = draw(st.permutations(list(range(1, n + 1))))
    inputs = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    b = draw(st.integers(0, 1))
    layers = []
    pos = 0
    for k in ks:
        part = order[pos : pos + k]
        layers.append(tuple((v, inputs[v - 1]) for v in sorted(part)))
        pos += k
    return NcfLayerSpec(n=n, layers=tuple(layers), b=b)
