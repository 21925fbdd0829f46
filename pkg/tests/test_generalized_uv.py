"""The u/v coefficient triangles: hand-computed rows and the closed-form
consistency between the standalone recursion and the polynomial families."""

from fractions import Fraction

import pytest

from acpolys.ac_families import build_by_recurrence, lambda_alpha_tables
from acpolys.generalized_uv import build_uv, check_uv_consistency, row_width
from acpolys.report import PASS

F = Fraction

# Rows worked by hand from the recursion before implementation:
#   n=1 seed; n=2,3 by the first-column rules; n=4 exercises the interior
#   rule (q=2 with n even, the top-index case).
HAND_ROWS_U = {
    (1, 1): F(0),
    (2, 1): F(1),
    (3, 1): F(2),
    (3, 2): F(0),
    (4, 1): F(10, 3),
    (4, 2): F(7, 3),
}

HAND_ROWS_V = {
    (1, 1): F(1),
    (2, 1): F(2),
    (3, 1): F(4),
    (3, 2): F(1),
    (4, 1): F(20, 3),
    (4, 2): F(8, 3),
    (5, 1): F(10),
}


class TestRowWidth:
    def test_widths(self):
        assert [row_width(n) for n in range(1, 9)] == [1, 1, 2, 2, 3, 3, 4, 4]


class TestBuildUV:
    def test_requires_positive_max(self):
        with pytest.raises(ValueError):
            build_uv(0)

    def test_seed_row(self):
        uv = build_uv(1)
        assert uv.u == {(1, 1): F(0)}
        assert uv.v == {(1, 1): F(1)}

    def test_hand_rows(self):
        uv = build_uv(5)
        for key, expected in HAND_ROWS_U.items():
            assert uv.u[key] == expected, f"u{key}"
        for key, expected in HAND_ROWS_V.items():
            assert uv.v[key] == expected, f"v{key}"

    def test_table_shape(self):
        n_max = 12
        uv = build_uv(n_max)
        expected_keys = {
            (n, k) for n in range(1, n_max + 1) for k in range(1, row_width(n) + 1)
        }
        assert set(uv.u) == expected_keys
        assert set(uv.v) == expected_keys
        assert uv.max_n == n_max

    def test_top_v_entries_nonzero(self):
        # The deepest v entry of each row is a positive rational.
        uv = build_uv(20)
        for n in range(1, 21):
            assert uv.v[(n, row_width(n))] > 0


class TestConsistency:
    def test_uv_matches_families_to_24(self):
        n_max = 24
        uv = build_uv(n_max)
        family = build_by_recurrence(n_max)
        checks = check_uv_consistency(uv, family)
        failures = [c.id for c in checks if c.status != PASS]
        assert not failures

    def test_closed_form_by_hand_n4(self):
        # u_n^k = (n+1) alpha_n^(n+1-2k): u_4^2 = 5 * alpha_4^1 = 5 * 7/15
        family = build_by_recurrence(4)
        t = lambda_alpha_tables(family)
        assert 5 * t.alpha[(4, 1)] == F(7, 3) == HAND_ROWS_U[(4, 2)]
        assert 5 * t.lam[(4, 3)] == F(20, 3) == HAND_ROWS_V[(4, 1)]

    def test_uv_table_longer_than_family_rejected(self):
        uv = build_uv(6)
        family = build_by_recurrence(4)
        with pytest.raises(ValueError):
            check_uv_consistency(uv, family)

    def test_convention_checks_present(self):
        uv = build_uv(3)
        family = build_by_recurrence(3)
        ids = [c.id for c in check_uv_consistency(uv, family)]
        assert "uv/convention_u0/n=2" in ids
        assert "uv/convention_v0/n=3" in ids
