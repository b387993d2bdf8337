import pytest

from bchroma import graph as gr


def test_star_shape():
    g = gr.star(4)
    assert g.n == 5
    assert len(g.edges) == 4
    assert g.degrees == (4, 1, 1, 1, 1)
    assert gr.star(0).n == 1


def test_complete_path_cycle_shapes():
    assert len(gr.complete(5).edges) == 10
    assert gr.path(1).n == 1 and gr.path(1).edges == ()
    assert gr.path(4).degrees == (1, 2, 2, 1)
    assert gr.cycle(5).degrees == (2, 2, 2, 2, 2)


def test_generator_preconditions():
    with pytest.raises(ValueError):
        gr.star(-1)
    with pytest.raises(ValueError):
        gr.complete(0)
    with pytest.raises(ValueError):
        gr.cycle(2)


def test_graph_rejects_bad_edges():
    labs = (gr.Plain(0), gr.Plain(1))
    with pytest.raises(ValueError):
        gr.Graph(labs, ((0, 0),))
    with pytest.raises(ValueError):
        gr.Graph(labs, ((1, 0),))
    with pytest.raises(ValueError):
        gr.Graph((gr.Plain(0), gr.Plain(0)), ())


def test_adjacency_and_index_of():
    g = gr.star(3)
    assert g.neighbors[0] == (1, 2, 3)
    assert g.adjacent(0, 2) and not g.adjacent(1, 2)
    assert g.index_of(gr.Plain(2)) == 2


def test_degree_profile_sorted_descending():
    p = gr.degree_profile(gr.path(4))
    assert p.degrees == (2, 2, 1, 1)
    assert p.vertex_order == (1, 2, 0, 3)


def test_distances_and_diameter():
    g = gr.path(5)
    assert gr.distance(g, 0, 4) == 4
    assert gr.diameter(g) == 4
    assert gr.diameter(gr.star(6)) == 2
    assert gr.diameter(gr.complete(4)) == 1
    assert gr.is_connected(g)


def test_disconnected_graph():
    g = gr.Graph((gr.Plain(0), gr.Plain(1), gr.Plain(2)), ((0, 1),))
    assert not gr.is_connected(g)
    assert gr.distance(g, 0, 2) is gr.UNREACHABLE
    with pytest.raises(ValueError):
        gr.diameter(g)


def test_label_str_and_parse_round_trip():
    labels = [gr.Plain(7),
              gr.Pair(gr.Plain(1), gr.Plain(2)),
              gr.edge_origin(gr.Plain(3), gr.Plain(0)),
              gr.Pair(gr.edge_origin(gr.Plain(1), gr.Plain(2)), gr.Plain(0))]
    for lab in labels:
        assert gr.parse_label(str(lab)) == lab
    assert str(gr.edge_origin(gr.Plain(3), gr.Plain(0))) == "{0,3}"


def test_edge_list_round_trip():
    g = gr.cycle(5)
    assert gr.from_edge_list_text(gr.to_edge_list_text(g)) == g
    with pytest.raises(ValueError):
        gr.from_edge_list_text("2 3\n0 1\n")


def test_json_round_trip():
    g = gr.star(3)
    assert gr.from_json_text(gr.to_json_text(g)) == g
