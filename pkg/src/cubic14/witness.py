"""Witness bundles: JSON files carrying a surface ideal, its history and expectations."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .field import DEFAULT_PRIME, is_prime
from .geometry import (GeometryError, ProjectiveScheme, check_projection_contract, internal_projection,
                       lies_on, sample_rational_point, transport_line)
from .ideals import Ideal
from .poly import ParseError, Ring

FIELDS = ("prime", "ambient_dim", "variables", "generators", "history", "lines", "expected")

SURFACE_EXPECTED = {"degree": 10, "genus": 7, "quadrics": 1, "cubics": 12, "euler": 26,
                    "h0_normal_in_cubic": 15}
K3_EXPECTED = {"degree": 12, "genus": 7, "quadrics": 10, "cubics": 64}


class WitnessError(ValueError):
    """Malformed witness; ``line``/``column`` point into the file when known."""

    def __init__(self, msg, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(msg + where)
        self.line = line
        self.column = column


class ContractError(RuntimeError):
    pass


@dataclass
class WitnessBundle:
    prime: int
    ambient_dim: int
    variables: list
    generators: list
    history: list = field(default_factory=list)
    lines: list = field(default_factory=list)
    expected: dict = field(default_factory=dict)

    def ring(self) -> Ring:
        return Ring(self.ambient_dim + 1, self.prime, names=self.variables)

    def ideal(self) -> Ideal:
        R = self.ring()
        return Ideal(R, [R.parse(g) for g in self.generators])

    def scheme(self, name: str = "S") -> ProjectiveScheme:
        return ProjectiveScheme(self.ideal(), saturated=True, name=name)

    def line_schemes(self) -> list:
        R = self.ring()
        return [ProjectiveScheme(Ideal(R, [R.parse(g) for g in gens]), saturated=True, name=f"L{i + 1}")
                for i, gens in enumerate(self.lines)]

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def save(self, path):
        Path(path).write_text(self.to_json() + "\n")

    @classmethod
    def from_scheme(cls, X: ProjectiveScheme, **kw) -> WitnessBundle:
        return cls(X.ring.p, X.ambient_dim, list(X.ring.names), [str(g) for g in X.generators], **kw)


def _locate(text: str, needle: str):
    pos = text.find(needle)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


def parse_witness(text: str, prime: int | None = None) -> WitnessBundle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WitnessError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise WitnessError("witness must be a JSON object", 1, 1)
    missing = [k for k in ("prime", "ambient_dim", "variables", "generators") if k not in data]
    if missing:
        raise WitnessError(f"missing fields: {', '.join(missing)}")
    p, n = data["prime"], data["ambient_dim"]
    if not isinstance(p, int) or not is_prime(p):
        raise WitnessError(f"prime {p!r} is not a prime", *_locate(text, '"prime"'))
    if prime is not None and prime != p:
        raise WitnessError(f"prime mismatch: witness uses {p}, engine configured for {prime}")
    names = data["variables"]
    if not isinstance(n, int) or not isinstance(names, list) or len(names) != n + 1:
        raise WitnessError("variables do not match ambient_dim", *_locate(text, '"variables"'))
    bundle = WitnessBundle(p, n, list(names), list(data["generators"]), list(data.get("history") or []),
                           list(data.get("lines") or []), dict(data.get("expected") or {}))
    R = bundle.ring()
    for g in bundle.generators + [g for L in bundle.lines for g in L]:
        if not isinstance(g, str):
            raise WitnessError(f"generator {g!r} is not a string")
        line, col = _locate(text, g)
        try:
            f = R.parse(g)
        except ParseError as exc:
            if line is not None:
                # column of the offending character inside the file
                col = col + exc.pos if exc.line == 1 else exc.column
            raise WitnessError(f"cannot parse generator: {exc}", line, col) from None
        if not f.is_homogeneous():
            raise WitnessError(f"generator {g!r} is not homogeneous", line, col)
    return bundle


def load_witness(path, prime: int | None = None) -> WitnessBundle:
    """Read and validate a witness file (parse, homogeneity, prime)."""
    path = Path(path)
    if not path.exists():
        bundled = fixture_path(path.name)
        if bundled is None:
            raise FileNotFoundError(path)
        path = bundled
    return parse_witness(path.read_text(), prime)


def fixture_path(name: str):
    if not name.endswith(".json"):
        name += ".json"
    ref = resources.files("cubic14") / "fixtures" / name
    return Path(str(ref)) if ref.is_file() else None


def load_fixture(name: str, prime: int | None = None) -> WitnessBundle:
    path = fixture_path(name)
    if path is None:
        raise FileNotFoundError(name)
    return parse_witness(path.read_text(), prime)


# ---------------------------------------------------------------------------

@dataclass
class PipelineConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    max_retries: int = 8
    timeout_secs: float = 3600.0
    k3: WitnessBundle | None = None  # starting surface; bundled fixture by default


def _stage(X: ProjectiveScheme, center=None) -> dict:
    d, g, _ = X.sectional_invariants()
    return {"ambient": X.ambient_dim, "degree": d, "genus": g, "quadrics": X.h0_ideal(2),
            "cubics": X.h0_ideal(3), "center": list(center) if center is not None else None}


def _start_surface(config: PipelineConfig) -> WitnessBundle:
    if config.k3 is not None:
        return config.k3
    if config.prime == 65521 and fixture_path("k3_genus7_p7") is not None:
        return load_fixture("k3_genus7_p7", config.prime)
    from .k3 import mukai_genus7_k3
    X = mukai_genus7_k3(0, config.prime)
    return WitnessBundle.from_scheme(X, expected=dict(K3_EXPECTED))


def _project_once(X: ProjectiveScheme, seed: int, retries: int):
    last = None
    for attempt in range(retries):
        s = seed * 7919 + attempt
        try:
            pt = sample_rational_point(X, seed=s)
            res = internal_projection(X, pt.coords, seed=s)
            check_projection_contract(X, res)
            return res
        except GeometryError as exc:
            last = exc
    raise ContractError(f"projection failed after {retries} attempts: {last}")


def construct_witness(seed: int = 0, config: PipelineConfig | None = None) -> WitnessBundle:
    """Project the genus-7 K3 twice from random smooth points and track both lines."""
    config = config or PipelineConfig(seed=seed)
    start = _start_surface(config)
    S0 = start.scheme("K3")
    exp = start.expected or K3_EXPECTED
    if "degree" in exp and S0.degree != exp["degree"]:
        raise ContractError(f"starting surface: degree is {S0.degree}, expected {exp['degree']}")
    if S0.dim != 2:
        raise ContractError(f"starting surface has dimension {S0.dim}")
    first = _stage(S0)
    for key in ("genus", "quadrics", "cubics"):
        if key in exp and first[key] != exp[key]:
            raise ContractError(f"starting surface: {key} is {first[key]}, expected {exp[key]}")
    history = [first]
    rng = random.Random(seed)
    r1 = _project_once(S0, rng.randrange(1 << 30), config.max_retries)
    history.append(_stage(r1.image, r1.center.coords))
    for attempt in range(config.max_retries):
        r2 = _project_once(r1.image, rng.randrange(1 << 30), config.max_retries)
        try:
            L1 = transport_line(r1.line, r2)
        except GeometryError:
            continue  # second center on the first line
        break
    else:
        raise ContractError("could not find a second center off the first line")
    S = r2.image
    history.append(_stage(S, r2.center.coords))
    lines = []
    for L in (L1, r2.line):
        if not lies_on(L, S):
            raise ContractError("exceptional line is not on the surface")
        lines.append([str(g) for g in L.ideal.gens])
    return WitnessBundle(S.ring.p, S.ambient_dim, list(S.ring.names), [str(g) for g in S.generators],
                         history, lines, dict(SURFACE_EXPECTED))


def history_numerology(bundle: WitnessBundle) -> list:
    return [(h["degree"], h["genus"], h["quadrics"], h["cubics"]) for h in bundle.history]


__all__ = ["WitnessBundle", "WitnessError", "ContractError", "PipelineConfig", "load_witness",
           "parse_witness", "load_fixture", "fixture_path", "construct_witness", "history_numerology"]
