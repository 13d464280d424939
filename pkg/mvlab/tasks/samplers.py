"""
Coefficient vector samplers and CSV storage of coefficient vectors.

Random samplers draw from a Philox counter-based generator keyed by
(seed, index), so sample i of a run is the same whatever else is drawn.
"""
import numpy as np

from ..constants import SAMPLERS
from ..models.coefficients import CoefficientVector, IndexDomain
from ..utils.csvfiles import read_csv, write_csv
from ..utils.exceptions import InvalidInput
from ..utils.parsing import parse_index


def generator(seed, index=0):
    """
    numpy Generator on a Philox stream keyed by (seed, index)
    """
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(int(seed), spawn_key=(int(index),)))
    )


def sample_coefficients(sampler, omega, seed=0, index=0):
    """
    One coefficient vector from a named sampler:

      all-ones       a_n = 1
      single-point   a_n = 1 at one random point, 0 elsewhere
      random-phases  a_n = e(theta_n), theta_n uniform in [0, 1)
      random-sparse  random phases on a random support (each point kept
                     with probability 1/2, never empty)
    """
    if sampler not in SAMPLERS:
        raise InvalidInput(
            "Unknown sampler %r; expected one of %s" % (sampler, ", ".join(SAMPLERS))
        )
    size = len(omega)
    if sampler == "all-ones":
        return CoefficientVector.constant(omega, 1)
    rng = generator(seed, index)
    if sampler == "single-point":
        base = np.zeros(size, dtype=np.complex128)
        base[rng.integers(size)] = 1
        return CoefficientVector(omega, base)
    base = np.exp(2j * np.pi * rng.random(size))
    if sampler == "random-sparse":
        support = rng.random(size) < 0.5
        if not support.any():
            support[rng.integers(size)] = True
        base = np.where(support, base, 0)
    return CoefficientVector(omega, base)


def draws_for(sampler, samples):
    """
    Deterministic samplers are drawn once
    """
    return 1 if sampler == "all-ones" else samples


def load_coefficients(path, N=None):  # pylint: disable=invalid-name
    """
    Read a coefficient vector from CSV rows (index, real, imag), the index
    tuple dash-joined.  The index domain is the set of listed points.
    """
    rows = read_csv(path)
    if not rows:
        raise InvalidInput("No coefficients found in %s" % path)
    points = []
    base = []
    for position, row in enumerate(rows, start=1):
        try:
            points.append(parse_index(row["index"]))
            base.append(complex(float(row["real"]), float(row.get("imag") or 0)))
        except (KeyError, ValueError, InvalidInput) as err:
            raise InvalidInput("Malformed coefficient row", position) from err
    if N is None:
        N = max(max(point) for point in points) + 1
    return CoefficientVector(IndexDomain(tuple(points), N), base)


def dump_coefficients(a, path, config=None):
    rows = (
        (point, float(value.real), float(value.imag))
        for point, value in zip(a.domain, a.values())
    )
    return write_csv(path, ["index", "real", "imag"], rows, config)
