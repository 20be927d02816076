"""Shock-transform registry: built-in values and construction-time audits."""

import numpy as np
import pytest

from llshock import HFunction, builtin_h


class TestBuiltins:
    def test_neg_log_values(self):
        h = builtin_h("neg_log")
        assert h.monotonicity == "decreasing"
        assert float(h.fn(np.exp(-2.0))) == pytest.approx(2.0, rel=1e-12)
        assert float(h.inv(2.0)) == pytest.approx(0.135335, abs=1e-6)

    def test_square_values(self):
        h = builtin_h("square")
        assert h.monotonicity == "increasing"
        assert float(h.inv(0.25)) == pytest.approx(0.5, rel=1e-12)

    def test_exp_round_trip(self):
        h = builtin_h("exp")
        u = np.linspace(0.05, 1.0, 40)
        assert np.max(np.abs(h.inv(h.fn(u)) - u)) < 1e-12

    @pytest.mark.parametrize("name", ["neg_log", "square", "exp"])
    def test_inv_deriv_matches_finite_difference(self, name):
        h = builtin_h(name)
        ys = np.asarray(h.fn(np.linspace(0.2, 0.9, 9)), dtype=float)
        step = 1e-6
        approx = (np.asarray(h.inv(ys + step)) - np.asarray(h.inv(ys - step))) / (2 * step)
        assert np.max(np.abs(approx - np.asarray(h.inv_deriv(ys)))) < 1e-7

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            builtin_h("cube")


class TestValidation:
    def test_rejects_concave(self):
        with pytest.raises(ValueError, match="convex"):
            HFunction("root", "increasing", np.sqrt, np.square, lambda y: 2.0 * y)

    def test_rejects_linear(self):
        with pytest.raises(ValueError, match="convex"):
            HFunction("ident", "increasing", lambda u: u, lambda y: y, lambda y: np.ones_like(y))

    def test_rejects_wrong_tag(self):
        with pytest.raises(ValueError, match="tagged"):
            HFunction("square", "decreasing", np.square, np.sqrt, lambda y: 0.5 / np.sqrt(y))

    def test_rejects_negative_values(self):
        with pytest.raises(ValueError, match="nonnegative"):
            HFunction(
                "shifted",
                "increasing",
                lambda u: np.square(u) - 0.5,
                lambda y: np.sqrt(y + 0.5),
                lambda y: 0.5 / np.sqrt(y + 0.5),
            )

    def test_rejects_bad_inverse(self):
        with pytest.raises(ValueError, match="round-trip"):
            HFunction("off", "increasing", np.square, lambda y: np.sqrt(y) + 1e-6, lambda y: 0.5 / np.sqrt(y))

    def test_rejects_bad_tag_string(self):
        with pytest.raises(ValueError, match="monotonicity"):
            HFunction("square", "convex", np.square, np.sqrt, lambda y: 0.5 / np.sqrt(y))
