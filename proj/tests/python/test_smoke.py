"""End-to-end checks of the python module against frozen values."""

import qskein


def test_q_expand_small():
    assert qskein.q_expand([1], [1]) == "h1*hs1 - 1"
    assert qskein.q_expand([2], []) == "h2"


def test_template_rows():
    assert qskein.template_rows([1], [1]) == [["hs1", "1"], ["1", "h1"]]


def test_eigenvalue_of_empty_pair_is_delta():
    assert qskein.eigenvalue([], []) == "(-v + v^-1)/(s - s^-1)"


def test_expand_round_trip_coordinates():
    rows = qskein.expand("h1*hs1")
    assert sorted(rows) == [([], [], "1"), ([1], [1], "1")]


def test_multiply_structure_constants():
    rows = qskein.multiply([1], [], [1], [])
    assert sorted(rows) == [([1, 1], [], "1"), ([2], [], "1")]
    mixed = qskein.multiply([1], [], [], [1])
    assert sorted(mixed) == [([], [], "1"), ([1], [1], "1")]


def test_evaluate_and_macdonald_agree():
    assert qskein.evaluate("h2") == qskein.macdonald([2])


def test_phi_n_restriction():
    assert qskein.phi_n("h1*hs1 - 1", 2) == "h1*h1 - 1"


def test_homfly_of_right_trefoil():
    out = qskein.homfly_braid([1, 1, 1], 2)
    assert out["writhe"] == 3
    assert out["crossings"] == 3
    assert out["p"] == "-v^4 + v^2*s^2 + v^2*s^-2"


def test_k_box_box_of_unknot_braid():
    # writhe-zero unknot: the satellite value is exactly 1
    assert qskein.k_box_box_braid([1, -2], 3) == "1"


def test_verify_suite_counts():
    out = qskein.verify("ring", max_size=3, cases=10, seed=1)
    assert out["suite"] == "ring"
    assert out["failed"] == 0
    assert out["passed"] > 0
    assert out["failures"] == []
