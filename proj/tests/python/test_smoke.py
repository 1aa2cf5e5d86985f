import pytest

import spheretri as st


def test_counts():
    result = st.enumerate(8)
    assert [len(result[n]) for n in range(4, 9)] == [1, 1, 2, 5, 14]


def test_degree_sums():
    for n, reps in st.enumerate(8).items():
        for t in reps:
            assert sum(t.degrees()) == 6 * (n - 2)


def test_round_trip_and_isomorphism():
    o = st.octahedron()
    assert st.Triangulation.parse(o.to_text()) == o
    assert st.is_isomorphic(o, o.mirror())
    assert o.canonical_code() == o.mirror().canonical_code()
    assert o.name() == "G6,1"


def test_colorings():
    o = st.octahedron()
    cs = st.colorings(o)
    assert len(cs) == st.count_colorings(o) == 4
    assert st.count_coloring_orbits(o) == 2
    assert all(st.is_rainbow(o, c) for c in cs)
    assert "r[4c] g[4c] b[4c]" in {st.summary(o, c) for c in cs}


def test_insertions():
    t = st.tetrahedron()
    g5 = st.insert_in_face(t, t.faces()[0])
    assert g5.degrees() == [3, 3, 4, 4, 4]
    assert st.is_isomorphic(g5, st.insert_on_edge(t, 0, 1))


def test_errors():
    with pytest.raises(st.Error) as info:
        st.Triangulation([[1, 3, 2], [0, 3, 2], [0, 1, 3], [0, 2, 1]])
    assert info.value.code == "NotTriangular"
    with pytest.raises(st.Error):
        st.enumerate(12)
    with pytest.raises(ValueError):
        st.Triangulation.parse("not a triangulation")
