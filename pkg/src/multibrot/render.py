"""Escape-time renderer for the connectedness loci of z^d + c.

A pixel is iterated from the critical point until it leaves the disk of
radius max(|c|, 2^(1/(d-1))) or the iteration budget runs out; pixels
that never leave are drawn black. Output is a binary pixmap (P6) or a
PNG through a self-contained encoder, and a fixed spec renders to
byte-identical files: rows are computed in parallel but assembled by
index, and no pixel depends on the blocking.
"""

from __future__ import annotations

import math
import os
import struct
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = ["RenderSpec", "render", "render_array"]


@dataclass(frozen=True)
class RenderSpec:
    """Window, resolution, and iteration budget for one image.

    The sample grid is x_i = center_re + (i - W/2) s and
    y_j = center_im + (H/2 - j) s with s = width / W, so for even H and
    center_im = 0 the row j = H/2 lies exactly on the real axis.
    """

    d: int
    center_re: float = 0.0
    center_im: float = 0.0
    width: float = 3.2
    px_w: int = 800
    px_h: int = 800
    max_iter: int = 1000
    palette: int = 0

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 2:
            raise ValueError("degree must be an integer >= 2")
        if self.px_w < 1 or self.px_h < 1:
            raise ValueError("resolution must be at least 1x1")
        if not (self.width > 0):
            raise ValueError("window width must be positive")
        if self.max_iter < 1:
            raise ValueError("iteration budget must be at least 1")
        if self.palette not in (0, 1):
            raise ValueError("unknown palette id")

    @property
    def scale(self) -> float:
        return self.width / self.px_w


def _zpow(z: np.ndarray, d: int) -> np.ndarray:
    # square-and-multiply; np.power on complex arrays goes through exp/log
    result = None
    base = z
    e = d
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return result


def _escape_data(d: int, c: np.ndarray, max_iter: int):
    """First exit step and |z| at exit for each parameter; 0 = never exits."""
    n = c.size
    count = np.zeros(n, dtype=np.int64)
    az_out = np.ones(n, dtype=np.float64)
    idx = np.arange(n)
    radius = np.maximum(np.abs(c), 2.0 ** (1.0 / (d - 1)))
    z = np.zeros_like(c)
    for k in range(1, max_iter + 1):
        z = _zpow(z, d) + c
        az = np.abs(z)
        esc = az > radius
        if esc.any():
            hit = idx[esc]
            count[hit] = k
            az_out[hit] = az[esc]
            keep = ~esc
            idx, z, c, radius = idx[keep], z[keep], c[keep], radius[keep]
            if idx.size == 0:
                break
    return count, az_out


def _colorize(count: np.ndarray, az: np.ndarray, d: int, palette: int) -> np.ndarray:
    rgb = np.zeros((count.size, 3), dtype=np.uint8)
    esc = count > 0
    if not esc.any():
        return rgb
    # az > 1 wherever esc holds, so both logs are defined
    nu = count[esc] + 1.0 - np.log(np.log(az[esc]) / math.log(2.0)) / math.log(d)
    t = (np.maximum(nu, 0.0) / 32.0) % 1.0
    if palette == 0:
        v = (255.0 * t).astype(np.uint8)
        rgb[esc] = v[:, None]
    else:
        for ch, phase in enumerate((0.0, 1.0 / 3.0, 2.0 / 3.0)):
            wave = 0.5 + 0.5 * np.sin(2.0 * math.pi * (t + phase))
            rgb[esc, ch] = (255.0 * wave).astype(np.uint8)
    return rgb


def _render_rows(spec: RenderSpec, j_lo: int, j_hi: int) -> np.ndarray:
    s = spec.scale
    xs = spec.center_re + (np.arange(spec.px_w) - spec.px_w / 2.0) * s
    ys = spec.center_im + (spec.px_h / 2.0 - np.arange(j_lo, j_hi)) * s
    c = (xs[None, :] + 1j * ys[:, None]).ravel()
    count, az = _escape_data(spec.d, c, spec.max_iter)
    rgb = _colorize(count, az, spec.d, spec.palette)
    return rgb.reshape(j_hi - j_lo, spec.px_w, 3)


_ROW_BLOCK = 32


def render_array(spec: RenderSpec) -> np.ndarray:
    """The image as an (H, W, 3) uint8 array, rows top to bottom."""
    blocks = [(j, min(j + _ROW_BLOCK, spec.px_h)) for j in range(0, spec.px_h, _ROW_BLOCK)]
    workers = min(len(blocks), os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda jj: _render_rows(spec, *jj), blocks))
    return np.concatenate(parts, axis=0)


def _png_bytes(rgb: np.ndarray) -> bytes:
    h, w, _ = rgb.shape

    def chunk(tag: bytes, data: bytes) -> bytes:
        return (struct.pack(">I", len(data)) + tag + data
                + struct.pack(">I", zlib.crc32(tag + data) & 0xFFFFFFFF))

    raw = b"".join(b"\x00" + rgb[j].tobytes() for j in range(h))
    ihdr = struct.pack(">IIBBBBB", w, h, 8, 2, 0, 0, 0)
    return (b"\x89PNG\r\n\x1a\n"
            + chunk(b"IHDR", ihdr)
            + chunk(b"IDAT", zlib.compress(raw, 9))
            + chunk(b"IEND", b""))


def render(spec: RenderSpec, out_path) -> Path:
    """Render to out_path; .png selects the PNG encoder, anything else P6."""
    path = Path(out_path)
    rgb = render_array(spec)
    if path.suffix.lower() == ".png":
        data = _png_bytes(rgb)
    else:
        header = f"P6\n{spec.px_w} {spec.px_h}\n255\n".encode()
        data = header + rgb.tobytes()
    path.write_bytes(data)
    return path
