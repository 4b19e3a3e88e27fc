"""Smoke test for the domset extension module. Run after installing it."""

import json

import domset


def main() -> None:
    p5 = domset.path(5)
    r = domset.solve(p5)
    assert r.greedy_order == [1, 2, 3], r.greedy_order
    assert r.purified_set == [1, 3], r.purified_set
    assert r.tied_pairs == [(1, 2), (2, 3)]
    assert p5.is_minimal_dominating(r.purified_set)

    graph, labels = domset.fixture("fig3-counter")
    r = domset.solve(graph, exact_limit=64)
    assert [labels[v] for v in r.greedy_set] == ["1", "2", "3"]
    assert r.gamma == 2 and [labels[v] for v in r.gamma_witness] == ["3", "5"]

    c5k1 = domset.corona(domset.cycle(5), domset.Graph(1))
    r = domset.solve(c5k1, exact_limit=64)
    assert len(r.purified_set) == 5 == r.gamma

    spider = domset.Graph(5, [(0, 1), (1, 3), (0, 2), (2, 4)])
    assert domset.solve(spider, mode="strict").purified_set == [0, 1, 2]
    assert domset.solve(spider).purified_set == [1, 2]
    assert domset.ensure_minimal(spider, [0, 1, 2]) == [1, 2]

    g = domset.random_connected_graph(200, 260, seed=7)
    r = domset.solve(g, tie_break="random:3")
    assert g.is_dominating(r.purified_set)
    assert set(r.purified_set) <= set(r.greedy_set)
    lower, upper = domset.gamma_bounds(g)
    assert lower <= len(r.purified_set)
    report = json.loads(r.to_json())["report"]
    assert report["greedy_size"] == len(r.greedy_set)

    text = g.to_text("dimacs")
    back = domset.Graph.from_text(text)
    assert back.edges() == g.edges()

    assert domset.exact_gamma(domset.star(6)) == (1, [0])
    assert domset.solve(domset.star(6)).certificates == ["size-at-most-two", "independent-partition"]
    for bad in (lambda: domset.Graph(3, [(0, 5)]), lambda: domset.solve(p5, mode="lax")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
