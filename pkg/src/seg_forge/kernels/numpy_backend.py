"""Pure-numpy kernel implementations.

Fallback path for the numba-jitted kernels in ``numba_backend``; selected
with SEG_FORGE_BACKEND=numpy. Convolutions run as kh*kw strided-slice
contractions so everything stays vectorized.
"""

import numpy as np


def _pad2d(x: np.ndarray, padding: int) -> np.ndarray:
    if padding == 0:
        return x
    return np.pad(x, ((0, 0), (0, 0), (padding, padding), (padding, padding)))


def conv2d_forward(x, kernel, bias, stride, padding):
    n, cin, h, w = x.shape
    cout, _, kh, kw = kernel.shape
    ho = (h + 2 * padding - kh) // stride + 1
    wo = (w + 2 * padding - kw) // stride + 1
    xp = _pad2d(x, padding)
    acc = np.zeros((n, ho, wo, cout), dtype=x.dtype)
    for i in range(kh):
        for j in range(kw):
            xs = xp[:, :, i:i + stride * ho:stride, j:j + stride * wo:stride]
            acc += np.tensordot(xs, kernel[:, :, i, j], axes=([1], [1]))
    out = acc.transpose(0, 3, 1, 2) + bias[None, :, None, None]
    return np.ascontiguousarray(out)


def conv2d_backward_input(gout, kernel, x_shape, stride, padding):
    n, cin, h, w = x_shape
    cout, _, kh, kw = kernel.shape
    ho, wo = gout.shape[2], gout.shape[3]
    gxp = np.zeros((n, cin, h + 2 * padding, w + 2 * padding), dtype=gout.dtype)
    for i in range(kh):
        for j in range(kw):
            g = np.tensordot(gout, kernel[:, :, i, j], axes=([1], [0]))
            gxp[:, :, i:i + stride * ho:stride, j:j + stride * wo:stride] += (
                g.transpose(0, 3, 1, 2))
    if padding == 0:
        return gxp
    return np.ascontiguousarray(gxp[:, :, padding:padding + h, padding:padding + w])


def conv2d_backward_kernel(gout, x, k_shape, stride, padding):
    cout, cin, kh, kw = k_shape
    ho, wo = gout.shape[2], gout.shape[3]
    xp = _pad2d(x, padding)
    gk = np.empty(k_shape, dtype=gout.dtype)
    for i in range(kh):
        for j in range(kw):
            xs = xp[:, :, i:i + stride * ho:stride, j:j + stride * wo:stride]
            gk[:, :, i, j] = np.tensordot(gout, xs, axes=([0, 2, 3], [0, 2, 3]))
    return gk


def maxpool2_forward(x):
    n, c, h, w = x.shape
    win = (x.reshape(n, c, h // 2, 2, w // 2, 2)
            .transpose(0, 1, 2, 4, 3, 5)
            .reshape(n, c, h // 2, w // 2, 4))
    # argmax picks the first maximum: row-major scan order inside the window
    idx = win.argmax(axis=-1).astype(np.uint8)
    out = np.take_along_axis(win, idx[..., None].astype(np.intp), axis=-1)[..., 0]
    return np.ascontiguousarray(out), idx


def maxpool2_backward(gout, idx, x_shape):
    n, c, h, w = x_shape
    gwin = np.zeros((n, c, h // 2, w // 2, 4), dtype=gout.dtype)
    np.put_along_axis(gwin, idx[..., None].astype(np.intp), gout[..., None], axis=-1)
    return np.ascontiguousarray(
        gwin.reshape(n, c, h // 2, w // 2, 2, 2)
            .transpose(0, 1, 2, 4, 3, 5)
            .reshape(n, c, h, w))
