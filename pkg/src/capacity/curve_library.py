"""
Built-in test curves and the plain-text curve file format.

Curve file format:
    line 1:      n (even node count)
    lines 2..:   "t x1 x2", one node per line, t_i = 2 pi i/n

Derivatives of sampled curves are computed spectrally with numpy.fft, which
is exact for trigonometric polynomials and spectrally accurate for smooth
closed curves.
"""

import logging
from pathlib import Path

import numpy as np
import pandas as pd

from core.errors import ConfigurationError
from .smooth_curve import SmoothCurve

logger = logging.getLogger(__name__)


def circle(radius: float = 1.0, n: int = 256, center: complex = 0.0) -> SmoothCurve:
    """Circle x(t) = center + radius e^{it}."""
    if not radius > 0:
        raise ValueError("radius must be positive")
    return SmoothCurve.from_function(
        lambda t: center + radius * np.exp(1j * t),
        lambda t: 1j * radius * np.exp(1j * t),
        lambda t: -radius * np.exp(1j * t),
        n, name=f"circle(r={radius:g})")


def ellipse(semi_major: float = 2.0, semi_minor: float = 1.0, n: int = 256,
            center: complex = 0.0, angle: float = 0.0) -> SmoothCurve:
    """Ellipse with the given semi-axes, rotated by angle about its center."""
    if not (semi_major > 0 and semi_minor > 0):
        raise ValueError("semi-axes must be positive")
    rotation = np.exp(1j * angle)
    return SmoothCurve.from_function(
        lambda t: center + rotation * (semi_major * np.cos(t) + 1j * semi_minor * np.sin(t)),
        lambda t: rotation * (-semi_major * np.sin(t) + 1j * semi_minor * np.cos(t)),
        lambda t: -rotation * (semi_major * np.cos(t) + 1j * semi_minor * np.sin(t)),
        n, name=f"ellipse({semi_major:g},{semi_minor:g})")


def perturbed_circle(radius: float = 1.0, amplitude: float = 0.2, mode: int = 3, n: int = 256) -> SmoothCurve:
    """Star-shaped curve r(theta) = radius (1 + amplitude cos(mode theta))."""
    if not 0 <= amplitude < 1:
        raise ValueError("amplitude must lie in [0, 1)")

    def x(t):
        return radius * (1 + amplitude * np.cos(mode * t)) * np.exp(1j * t)

    def dx(t):
        r = radius * (1 + amplitude * np.cos(mode * t))
        dr = -radius * amplitude * mode * np.sin(mode * t)
        return (dr + 1j * r) * np.exp(1j * t)

    def ddx(t):
        r = radius * (1 + amplitude * np.cos(mode * t))
        dr = -radius * amplitude * mode * np.sin(mode * t)
        ddr = -radius * amplitude * mode ** 2 * np.cos(mode * t)
        return (ddr - r + 2j * dr) * np.exp(1j * t)

    return SmoothCurve.from_function(x, dx, ddx, n, name=f"perturbed_circle({amplitude:g},{mode})")


CURVE_BUILDERS = {
    'circle': circle,
    'ellipse': ellipse,
    'perturbed_circle': perturbed_circle,
}


def curve_by_name(name: str, n: int, **params) -> SmoothCurve:
    """Build a library curve by name with n nodes."""
    if name not in CURVE_BUILDERS:
        raise ConfigurationError(f"unknown curve '{name}', expected one of {sorted(CURVE_BUILDERS)}",
                                 module=__name__)
    return CURVE_BUILDERS[name](n=n, **params)


def spectral_derivatives(points):
    """First and second derivatives of periodic samples by FFT."""
    points = np.asarray(points, dtype=complex)
    n = points.size
    wavenumbers = np.fft.fftfreq(n, d=1.0 / n)
    coefficients = np.fft.fft(points)
    first = 1j * wavenumbers * coefficients
    if n % 2 == 0:
        first[n // 2] = 0.0
    second = -(wavenumbers ** 2) * coefficients
    return np.fft.ifft(first), np.fft.ifft(second)


def trigonometric_resample(values, count: int) -> np.ndarray:
    """Trigonometric interpolation of periodic samples onto count equispaced nodes."""
    values = np.asarray(values, dtype=complex)
    n = values.size
    if count == n:
        return values.copy()
    coefficients = np.fft.fft(values) / n
    padded = np.zeros(count, dtype=complex)
    half = min(n, count) // 2
    padded[:half] = coefficients[:half]
    padded[-half:] = coefficients[-half:]
    return np.fft.ifft(padded) * count


def resample(curve: SmoothCurve, n: int) -> SmoothCurve:
    """Same curve on n nodes, by trigonometric interpolation of x, x' and x''."""
    if n == curve.n:
        return curve
    return SmoothCurve(trigonometric_resample(curve.points, n), trigonometric_resample(curve.derivative, n),
                       trigonometric_resample(curve.second_derivative, n), name=curve.name, validate=False)


def from_samples(points, name: str = 'sampled') -> SmoothCurve:
    """Curve through uniformly parameterized samples, derivatives by FFT."""
    derivative, second = spectral_derivatives(points)
    return SmoothCurve(points, derivative, second, name=name)


def read_curve_file(path) -> SmoothCurve:
    """
    Read a curve file.

    Args:
        path (str | Path): File in the "n, then n lines 't x1 x2'" format.

    Returns:
        SmoothCurve: Curve with spectral derivatives.

    Raises:
        ConfigurationError: On any format violation, citing the 1-based line number.
    """
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as e:
        raise ConfigurationError(f"cannot read curve file {path}: {e}", module=__name__)

    def fail(line_number, message):
        raise ConfigurationError(f"{path}:{line_number}: {message}", module=__name__)

    if not lines:
        fail(1, "empty curve file")
    try:
        n = int(lines[0].strip())
    except ValueError:
        fail(1, f"expected the node count, got '{lines[0].strip()}'")
    if n < 4 or n % 2 != 0:
        fail(1, f"node count must be even and at least 4, got {n}")
    if len(lines) - 1 < n:
        fail(len(lines) + 1, f"expected {n} node lines, found {len(lines) - 1}")

    samples = np.empty((n, 3))
    for i in range(n):
        fields = lines[i + 1].split()
        if len(fields) != 3:
            fail(i + 2, f"expected 't x1 x2', got {len(fields)} field(s)")
        try:
            samples[i] = [float(value) for value in fields]
        except ValueError:
            fail(i + 2, f"non-numeric entry in '{lines[i + 1].strip()}'")
        if abs(samples[i, 0] - 2 * np.pi * i / n) > 1e-8 * (1 + abs(samples[i, 0])):
            fail(i + 2, f"parameter t must equal 2 pi {i}/{n}")
    if any(line.strip() for line in lines[n + 1:]):
        fail(n + 2, "unexpected content after the last node")

    try:
        curve = from_samples(samples[:, 1] + 1j * samples[:, 2], name=path.stem)
    except ValueError as e:
        raise ConfigurationError(f"{path}: {e}", module=__name__)
    logger.info(f"Read curve '{curve.name}' with {n} nodes from {path}")
    return curve


def write_curve_file(curve: SmoothCurve, path) -> Path:
    """Write the nodes of a curve in the curve file format."""
    path = Path(path)
    frame = pd.DataFrame({'t': curve.t, 'x1': curve.points.real, 'x2': curve.points.imag})
    body = frame.to_csv(sep=' ', header=False, index=False, float_format='%.17g')
    path.write_text(f"{curve.n}\n{body}")
    return path
