"""Spectral data of factor manifolds.

A factor is described by its dimension, constant scalar curvature, optional
volume and a truncated list of Laplace-Beltrami eigenvalues with
multiplicities. Round spheres and real projective spaces are built in
(unit radius); anything else is read from a JSON spectrum file.
"""

import json
import math
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import SpectrumParseError, SpectrumValidationError
from .rationals import format_rational, parse_rational

__all__ = [
    "SpectrumEntry",
    "FactorSpectrum",
    "harmonic_dim",
    "sphere_volume",
    "sphere_spectrum",
    "projective_spectrum",
    "catalog_factor",
    "catalog_count",
    "parse_catalog",
    "load_factor",
    "save_factor",
    "factor_to_dict",
    "factor_from_dict",
]


@dataclass(frozen=True)
class SpectrumEntry:
    index: int
    eigenvalue: Fraction
    multiplicity: int


@dataclass(frozen=True)
class FactorSpectrum:
    """Immutable spectral description of one factor.

    Construction validates every invariant; an invalid spectrum cannot exist.
    """

    name: str
    dim: int
    scalar_curvature: Fraction
    entries: tuple
    volume: float | None = None
    einstein: bool = False
    harmonically_free: bool = False

    def __post_init__(self):
        object.__setattr__(self, "scalar_curvature", Fraction(self.scalar_curvature))
        object.__setattr__(self, "entries", tuple(self.entries))
        if not isinstance(self.dim, int) or self.dim < 1:
            raise SpectrumValidationError(f"dimension must be a positive integer, got {self.dim!r}")
        if self.volume is not None and not self.volume > 0:
            raise SpectrumValidationError(f"volume must be positive, got {self.volume!r}")
        _validate_entries(self.entries)
        if self.einstein and self.scalar_curvature > 0 and self.dim >= 2 and len(self.entries) >= 2:
            bound = self.scalar_curvature / (self.dim - 1)
            if self.entries[1].eigenvalue < bound:
                raise SpectrumValidationError(
                    f"Einstein factor violates the Lichnerowicz-Obata bound: "
                    f"rho_1 = {self.entries[1].eigenvalue} < {bound}",
                    index=1,
                )

    @property
    def truncation_count(self) -> int:
        return len(self.entries)

    @property
    def eigenvalues(self) -> list:
        return [e.eigenvalue for e in self.entries]

    @property
    def multiplicities(self) -> list:
        return [e.multiplicity for e in self.entries]


def _validate_entries(entries):
    if not entries:
        raise SpectrumValidationError("spectrum must list at least the constant eigenvalue")
    for pos, entry in enumerate(entries):
        if entry.index != pos:
            raise SpectrumValidationError(f"entry at position {pos} has index {entry.index}", index=pos)
        if not isinstance(entry.multiplicity, int) or entry.multiplicity < 1:
            raise SpectrumValidationError(
                f"nonpositive multiplicity {entry.multiplicity!r} at index {pos}", index=pos
            )
    if entries[0].eigenvalue != 0:
        raise SpectrumValidationError("first eigenvalue must be exactly 0", index=0)
    if entries[0].multiplicity != 1:
        raise SpectrumValidationError("constant eigenspace multiplicity must be 1", index=0)
    for pos in range(1, len(entries)):
        if entries[pos].eigenvalue <= entries[pos - 1].eigenvalue:
            raise SpectrumValidationError(f"eigenvalues non-increasing at index {pos}", index=pos)


def harmonic_dim(n: int, k: int) -> int:
    """Dimension of degree-``k`` harmonic polynomials in ``n + 1`` variables."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return comb(n + k, k) - (comb(n + k - 2, k - 2) if k >= 2 else 0)


def sphere_volume(n: int) -> float:
    """Volume of the unit round ``n``-sphere."""
    return 2.0 * math.pi ** ((n + 1) / 2) / math.gamma((n + 1) / 2)


def sphere_spectrum(n: int, count: int) -> FactorSpectrum:
    """Unit-radius round ``S^n``: eigenvalues ``k(k+n-1)``, ``k < count``."""
    _check_catalog_args("sphere", n, count)
    entries = [SpectrumEntry(k, Fraction(k * (k + n - 1)), harmonic_dim(n, k)) for k in range(count)]
    return FactorSpectrum(
        name=f"S^{n}",
        dim=n,
        scalar_curvature=Fraction(n * (n - 1)),
        entries=entries,
        volume=sphere_volume(n),
        einstein=True,
        harmonically_free=True,
    )


def projective_spectrum(n: int, count: int) -> FactorSpectrum:
    """Unit-radius ``RP^n``: the even-degree part of the sphere spectrum."""
    _check_catalog_args("rp", n, count)
    entries = [
        SpectrumEntry(k, Fraction(2 * k * (2 * k + n - 1)), harmonic_dim(n, 2 * k)) for k in range(count)
    ]
    return FactorSpectrum(
        name=f"RP^{n}",
        dim=n,
        scalar_curvature=Fraction(n * (n - 1)),
        entries=entries,
        volume=sphere_volume(n) / 2,
        einstein=True,
        harmonically_free=True,
    )


def _check_catalog_args(kind, n, count):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"{kind} dimension must be an integer >= 2, got {n!r}")
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"eigenvalue count must be a positive integer, got {count!r}")


_CATALOG = {
    "sphere": (sphere_spectrum, lambda n, k: k * (k + n - 1)),
    "rp": (projective_spectrum, lambda n, k: 2 * k * (2 * k + n - 1)),
}


def parse_catalog(descriptor: str) -> tuple:
    """Split ``"sphere:n:count"`` / ``"rp:n:count"`` into ``(kind, n, count)``."""
    parts = descriptor.split(":")
    if len(parts) != 3 or parts[0] not in _CATALOG:
        raise SpectrumParseError(
            f"unknown catalog descriptor {descriptor!r}; expected sphere:<n>:<count> or rp:<n>:<count>"
        )
    try:
        n, count = int(parts[1]), int(parts[2])
    except ValueError:
        raise SpectrumParseError(f"non-integer field in catalog descriptor {descriptor!r}") from None
    if n < 2 or count < 1:
        raise SpectrumParseError(f"catalog descriptor {descriptor!r} needs n >= 2 and count >= 1")
    return parts[0], n, count


def catalog_factor(descriptor: str) -> FactorSpectrum:
    kind, n, count = parse_catalog(descriptor)
    return _CATALOG[kind][0](n, count)


def catalog_count(kind: str, n: int, threshold) -> int:
    """Smallest eigenvalue count whose last eigenvalue is ``>= threshold``."""
    eig = _CATALOG[kind][1]
    k = 0
    while eig(n, k) < threshold:
        k += 1
    return k + 1


def factor_to_dict(spec: FactorSpectrum) -> dict:
    return {
        "name": spec.name,
        "dim": spec.dim,
        "scalar_curvature": format_rational(spec.scalar_curvature),
        "volume": spec.volume,
        "einstein": spec.einstein,
        "harmonically_free": spec.harmonically_free,
        "entries": [
            {"index": e.index, "eigenvalue": format_rational(e.eigenvalue), "multiplicity": e.multiplicity}
            for e in spec.entries
        ],
    }


def factor_from_dict(data) -> FactorSpectrum:
    if not isinstance(data, dict):
        raise SpectrumParseError("spectrum must be a JSON object")
    try:
        name = data["name"]
        dim = data["dim"]
        kappa = parse_rational(data["scalar_curvature"])
        raw_entries = data["entries"]
    except KeyError as exc:
        raise SpectrumParseError(f"missing field {exc.args[0]!r}") from None
    volume = data.get("volume")
    if volume is not None and (isinstance(volume, bool) or not isinstance(volume, (int, float))):
        raise SpectrumParseError(f"volume must be a number or null, got {volume!r}")
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise SpectrumParseError(f"dim must be an integer, got {dim!r}")
    if not isinstance(raw_entries, list):
        raise SpectrumParseError("entries must be a list")
    entries = []
    for pos, raw in enumerate(raw_entries):
        try:
            index, multiplicity = raw["index"], raw["multiplicity"]
            eigenvalue = parse_rational(raw["eigenvalue"])
        except (KeyError, TypeError):
            raise SpectrumParseError(f"malformed entry at position {pos}") from None
        except SpectrumParseError as exc:
            raise SpectrumParseError(f"entry {pos}: {exc}") from None
        if not isinstance(index, int) or not isinstance(multiplicity, int):
            raise SpectrumParseError(f"entry {pos}: index and multiplicity must be integers")
        entries.append(SpectrumEntry(index, eigenvalue, multiplicity))
    return FactorSpectrum(
        name=str(name),
        dim=dim,
        scalar_curvature=kappa,
        entries=entries,
        volume=None if volume is None else float(volume),
        einstein=bool(data.get("einstein", False)),
        harmonically_free=bool(data.get("harmonically_free", False)),
    )


def load_factor(path) -> FactorSpectrum:
    """Read and validate a JSON spectrum file."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpectrumParseError(f"{path}: invalid JSON: {exc}") from None
    return factor_from_dict(data)


def save_factor(spec: FactorSpectrum, path) -> None:
    write_atomic(path, json.dumps(factor_to_dict(spec), indent=2) + "\n")


def write_atomic(path, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
