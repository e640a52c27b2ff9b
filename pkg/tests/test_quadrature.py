import math

import numpy as np
import pytest

from vortexbell import modes, quadrature


def trapezoid_moments(nm, half=8.0, points=801):
    """Independent moment oracle: dense trapezoid grid, FFT-free finite
    differences for the momentum side. Good to ~1e-4."""
    axis = np.linspace(-half, half, points)
    h = axis[1] - axis[0]
    X, Y = np.meshgrid(axis, axis, indexing="ij")
    amp = modes.lg_amplitude(nm, X, Y)
    dX = np.gradient(amp, h, axis=0)
    dY = np.gradient(amp, h, axis=1)
    cell = h * h
    dens = np.abs(amp) ** 2

    def integral(values):
        return float(np.sum(values).real * cell)

    return {
        "xx": integral(dens * X * X),
        "pypy": integral(np.abs(dY) ** 2),
        "xpy": integral(np.conj(amp) * X * (-1j) * dY),
        "ypx": integral(np.conj(amp) * Y * (-1j) * dX),
        "xy": integral(dens * X * Y),
    }


class TestGaussNodes:
    def test_hermite_order_one(self):
        nodes, weights = quadrature.gauss_nodes(
            quadrature.QuadratureConfig(order=1, rule="gauss_hermite")
        )
        assert nodes == pytest.approx([0.0])
        assert weights == pytest.approx([math.sqrt(math.pi)])

    def test_hermite_second_moment(self):
        nodes, weights = quadrature.gauss_nodes(
            quadrature.QuadratureConfig(order=2, rule="gauss_hermite")
        )
        assert float(np.sum(weights * nodes**2)) == pytest.approx(
            math.sqrt(math.pi) / 2.0, abs=1e-12
        )

    def test_legendre_constant(self):
        nodes, weights = quadrature.gauss_nodes(
            quadrature.QuadratureConfig(order=4, half_width=1.0, rule="gauss_legendre")
        )
        assert float(np.sum(weights)) == pytest.approx(2.0, abs=1e-12)

    def test_hermite_polynomial_exactness(self):
        # degree <= 2*order-1 against exp(-x^2): moments are (2k-1)!! sqrt(pi)/2^k
        nodes, weights = quadrature.gauss_nodes(quadrature.QuadratureConfig(order=8))
        for k in range(8):
            expected = math.sqrt(math.pi) * math.prod(range(1, 2 * k, 2)) / 2.0**k
            got = float(np.sum(weights * nodes ** (2 * k)))
            assert got == pytest.approx(expected, rel=1e-12)

    def test_legendre_polynomial_exactness(self):
        config = quadrature.QuadratureConfig(order=8, half_width=2.5, rule="gauss_legendre")
        nodes, weights = quadrature.gauss_nodes(config)
        for k in range(8):
            expected = 2.0 * config.half_width ** (2 * k + 1) / (2 * k + 1)
            got = float(np.sum(weights * nodes ** (2 * k)))
            assert got == pytest.approx(expected, rel=1e-12)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            quadrature.QuadratureConfig(order=0)
        with pytest.raises(ValueError):
            quadrature.QuadratureConfig(order=300)
        with pytest.raises(ValueError):
            quadrature.QuadratureConfig(order=16, rule="midpoint")
        with pytest.raises(ValueError):
            quadrature.QuadratureConfig(order=16, half_width=-1.0, rule="gauss_legendre")


class TestMoments:
    def test_ground_mode(self):
        table = quadrature.moments((0, 0))
        for name in ("xx", "yy", "pxpx", "pypy"):
            assert getattr(table, name) == pytest.approx(0.5, abs=1e-12)
        for name in ("xy", "pxpy", "xpy", "ypx", "xpx_sym", "ypy_sym"):
            assert getattr(table, name) == pytest.approx(0.0, abs=1e-12)

    def test_lowest_vortex(self):
        table = quadrature.moments((1, 0))
        assert table.xpy == pytest.approx(0.5, abs=1e-10)
        assert table.ypx == pytest.approx(-0.5, abs=1e-10)
        assert table.xx == pytest.approx(1.0, abs=1e-10)
        assert table.pypy == pytest.approx(1.0, abs=1e-10)

    def test_closed_forms_up_to_order_eight(self):
        for n in range(9):
            for m in range(9 - n):
                table = quadrature.moments((n, m))
                assert table.xpy == pytest.approx((n - m) / 2.0, abs=1e-8), (n, m)
                assert table.xx == pytest.approx((n + m + 1) / 2.0, abs=1e-8), (n, m)

    @pytest.mark.parametrize("nm", [(1, 0), (2, 1)])
    def test_against_trapezoid_oracle(self, nm):
        # route-independence check; the oracle's central differences carry an
        # O(h^2) bias of ~1e-3 on the momentum side
        table = quadrature.moments(nm)
        oracle = trapezoid_moments(nm)
        for key, value in oracle.items():
            assert getattr(table, key) == pytest.approx(value, abs=2e-3), key

    def test_matches_wigner_side(self):
        for n in range(7):
            for m in range(7 - n):
                field_side = quadrature.moments((n, m))
                wigner_side = quadrature.wigner_moments((n, m))
                for key in (
                    "xx", "yy", "pxpx", "pypy", "xy", "pxpy",
                    "xpy", "ypx", "xpx_sym", "ypy_sym",
                ):
                    assert getattr(field_side, key) == pytest.approx(
                        getattr(wigner_side, key), abs=1e-6
                    ), (n, m, key)

    def test_cross_moment_antisymmetry(self):
        for nm in [(1, 0), (3, 1), (2, 2), (0, 4), (5, 2)]:
            table = quadrature.moments(nm)
            assert table.xpy == pytest.approx(-table.ypx, abs=1e-10), nm

    def test_orbital_angular_momentum_identity(self):
        for n in range(11):
            for m in range(11 - n):
                table = quadrature.moments((n, m))
                assert table.xpy - table.ypx == pytest.approx(n - m, abs=1e-8), (n, m)

    def test_doubling_stability(self):
        for nm in [(1, 0), (4, 3)]:
            config = quadrature.default_moment_config(nm)
            base = quadrature.moments(nm, config, check_stability=False)
            doubled = quadrature.moments(
                nm,
                quadrature.QuadratureConfig(order=2 * config.order),
                check_stability=False,
            )
            for key in ("xx", "yy", "pxpx", "pypy", "xpy", "ypx"):
                assert abs(getattr(base, key) - getattr(doubled, key)) < 1e-8

    def test_insufficient_order_rejected(self):
        with pytest.raises(quadrature.InsufficientOrderError):
            quadrature.moments((5, 5), quadrature.QuadratureConfig(order=16))

    def test_deterministic(self):
        a = quadrature.moments((3, 2))
        b = quadrature.moments((3, 2))
        assert a == b


class TestFirstMoments:
    def test_all_components_vanish(self):
        for nm in [(1, 0), (0, 0), (3, 2)]:
            for which in ("X", "Y", "P_X", "P_Y"):
                assert quadrature.expectation_mean(nm, which) == pytest.approx(
                    0.0, abs=1e-10
                ), (nm, which)

    def test_rejects_unknown_component(self):
        with pytest.raises(ValueError):
            quadrature.expectation_mean((1, 0), "Z")
