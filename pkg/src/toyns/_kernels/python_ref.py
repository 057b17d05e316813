"""Pure-numpy reference implementations of the hot stencil kernels.

The compiled backend in _core.pyx mirrors these expression trees operation
for operation (same operands, same association), so both backends return
bitwise identical float64 arrays.  Any change here must be replicated there.
"""

import numpy as np


def _ax(axis, s):
    idx = [slice(None)] * 3
    idx[axis] = s
    return tuple(idx)


def diff_periodic(f, axis, inv_2h):
    """Centred first difference along an axis with periodic wrap."""
    return (np.roll(f, -1, axis) - np.roll(f, 1, axis)) * inv_2h


def diff_dirichlet(f, axis, inv_2h):
    """Centred first difference; second-order one-sided stencils at walls."""
    out = np.empty_like(f)
    out[_ax(axis, slice(1, -1))] = (
        f[_ax(axis, slice(2, None))] - f[_ax(axis, slice(None, -2))]
    ) * inv_2h
    f0 = f[_ax(axis, 0)]
    f1 = f[_ax(axis, 1)]
    f2 = f[_ax(axis, 2)]
    out[_ax(axis, 0)] = ((-3.0 * f0 + 4.0 * f1) - f2) * inv_2h
    g0 = f[_ax(axis, -1)]
    g1 = f[_ax(axis, -2)]
    g2 = f[_ax(axis, -3)]
    out[_ax(axis, -1)] = ((3.0 * g0 - 4.0 * g1) + g2) * inv_2h
    return out


def _second_diff_periodic(f, axis):
    return (np.roll(f, -1, axis) - 2.0 * f) + np.roll(f, 1, axis)


def _second_diff_dirichlet(f, axis):
    out = np.empty_like(f)
    out[_ax(axis, slice(1, -1))] = (
        f[_ax(axis, slice(2, None))] - 2.0 * f[_ax(axis, slice(1, -1))]
    ) + f[_ax(axis, slice(None, -2))]
    f0, f1, f2, f3 = (f[_ax(axis, k)] for k in range(4))
    out[_ax(axis, 0)] = ((2.0 * f0 - 5.0 * f1) + 4.0 * f2) - f3
    g0, g1, g2, g3 = (f[_ax(axis, -1 - k)] for k in range(4))
    out[_ax(axis, -1)] = ((2.0 * g0 - 5.0 * g1) + 4.0 * g2) - g3
    return out


def laplacian_periodic(f, inv_h2):
    tx = _second_diff_periodic(f, 0)
    ty = _second_diff_periodic(f, 1)
    tz = _second_diff_periodic(f, 2)
    return ((tx + ty) + tz) * inv_h2


def laplacian_dirichlet(f, inv_h2):
    """Laplacian with one-sided second differences on the walls.

    Wall values only matter for inspection; solvers re-impose boundary data
    after every stage.
    """
    tx = _second_diff_dirichlet(f, 0)
    ty = _second_diff_dirichlet(f, 1)
    tz = _second_diff_dirichlet(f, 2)
    return ((tx + ty) + tz) * inv_h2


def nonlinear_component(u1, u2, u3, g1, g2, g3, ui, div):
    """One component of u.grad(ui) + 0.5*ui*div(u)."""
    return ((u1 * g1 + u2 * g2) + u3 * g3) + (0.5 * ui) * div


def euler_update(u, k, dt):
    return u + dt * k


def heun_update(u, k1, k2, dt):
    return u + (0.5 * dt) * (k1 + k2)
