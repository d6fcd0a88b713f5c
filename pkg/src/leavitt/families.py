"""Symbolic graph families and their finite truncations.

A family descriptor names one of the catalog shapes:

  rose      one vertex with n >= 2 loops
  line      an oriented line on n vertices
  loop      one vertex with a single loop
  twoarrow  one source emitting to two sinks
  esubf     vertices are the nonempty finite subsets of a ground set,
            with an edge for each strict inclusion
  ekappa    vertices are the ordinals below a given length, with an edge
            for each strict inequality
  tower     vertices are the nonempty subsets of a set that are strictly
            smaller than it, with an edge for each strict inclusion
  unitization(inner)  the inner family with an identity adjoined

esubf and tower take a cardinal parameter, ekappa an ordinal descriptor.
Finite parameters build concretely; infinite ones are reasoned about
symbolically (countable separation, dimension) and can be truncated to a
finite graph whose emitting vertices are flagged as infinite emitters.

Textual form, as accepted on the command line:

  rose --n=3
  esubf --cardinal=uncountable:X
  ekappa --preset=omega1
  ekappa --cardinal=uncountable:k --cofinality=countable
  unitization(tower --cardinal=uncountable:X)
"""

from __future__ import annotations

import itertools
import shlex
from dataclasses import dataclass
from typing import Optional

from .errors import (
    DimensionRuleUnavailable,
    NotAGraphFamily,
    NotApplicable,
    NotConcretelyBuildable,
)
from .graphs import Graph, build_graph

__all__ = [
    "Cardinal",
    "OrdinalSpec",
    "FamilyDescriptor",
    "rose",
    "line",
    "loop",
    "two_arrow",
    "finite_subsets_family",
    "ordinal_complete_family",
    "tower_family",
    "unitization",
    "parse_descriptor",
    "descriptor_text",
    "build_catalog_graph",
    "symbolic_csp",
    "symbolic_dimension",
    "truncation_flags",
]

_GROUND = "abcdefghijklmnopqrstuvwxyz"
_MAX_SUBSET_GROUND = 8  # 2^n - 1 vertices; keep concrete builds small


@dataclass(frozen=True)
class Cardinal:
    """A cardinal class: finite with a size, countably infinite, or
    uncountable with a display label."""

    kind: str  # "finite" | "countable" | "uncountable"
    n: Optional[int] = None
    label: Optional[str] = None

    def __post_init__(self):
        if self.kind == "finite":
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError("finite cardinal needs n >= 1")
        elif self.kind == "countable":
            if self.n is not None or self.label is not None:
                raise ValueError("countable cardinal takes no parameters")
        elif self.kind == "uncountable":
            if not self.label:
                raise ValueError("uncountable cardinal needs a nonempty label")
        else:
            raise ValueError(f"unknown cardinal kind {self.kind!r}")

    @classmethod
    def finite(cls, n: int) -> "Cardinal":
        return cls("finite", n=n)

    @classmethod
    def countable(cls) -> "Cardinal":
        return cls("countable")

    @classmethod
    def uncountable(cls, label: str) -> "Cardinal":
        return cls("uncountable", label=label)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_uncountable(self) -> bool:
        return self.kind == "uncountable"

    def text(self) -> str:
        if self.kind == "finite":
            return f"finite:{self.n}"
        if self.kind == "countable":
            return "countable"
        return f"uncountable:{self.label}"

    @classmethod
    def parse(cls, text: str) -> "Cardinal":
        if text == "countable":
            return cls.countable()
        if text.startswith("finite:"):
            try:
                return cls.finite(int(text[len("finite:"):]))
            except ValueError as exc:
                raise ValueError(f"bad cardinal {text!r}") from exc
        if text.startswith("uncountable:"):
            return cls.uncountable(text[len("uncountable:"):])
        raise ValueError(f"bad cardinal {text!r}")


_PRESETS = {
    # name -> (cardinality, has countable cofinal subset)
    "omega": (Cardinal.countable(), True),
    "omega1": (Cardinal.uncountable("aleph1"), False),
    "omega_omega": (Cardinal.uncountable("aleph_omega"), True),
}


@dataclass(frozen=True)
class OrdinalSpec:
    """An ordinal length described by cardinality and cofinality.

    countable_cofinality records whether some countable set of smaller
    ordinals is cofinal.  Any ordinal of countable cardinality has one
    (itself), so only uncountable cardinalities may set it to False.
    """

    cardinality: Cardinal
    countable_cofinality: bool = True
    preset: Optional[str] = None

    def __post_init__(self):
        if not self.cardinality.is_uncountable and not self.countable_cofinality:
            raise ValueError(
                "an ordinal of countable cardinality always has countable cofinality"
            )

    @classmethod
    def from_preset(cls, name: str) -> "OrdinalSpec":
        if name not in _PRESETS:
            raise ValueError(f"unknown preset {name!r}")
        card, cof = _PRESETS[name]
        return cls(card, cof, preset=name)

    @property
    def is_finite(self) -> bool:
        return self.cardinality.is_finite


_CONCRETE_KINDS = ("rose", "line", "loop", "twoarrow")
_PARAMETRIC_KINDS = ("esubf", "ekappa", "tower")


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str
    n: Optional[int] = None
    cardinal: Optional[Cardinal] = None
    ordinal: Optional[OrdinalSpec] = None
    inner: Optional["FamilyDescriptor"] = None

    def __post_init__(self):
        if self.kind == "rose":
            if not isinstance(self.n, int) or self.n < 2:
                raise ValueError("rose needs n >= 2")
        elif self.kind == "line":
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError("line needs n >= 1")
        elif self.kind in ("loop", "twoarrow"):
            pass
        elif self.kind in ("esubf", "tower"):
            if self.cardinal is None:
                raise ValueError(f"{self.kind} needs a cardinal parameter")
        elif self.kind == "ekappa":
            if self.ordinal is None:
                raise ValueError("ekappa needs an ordinal parameter")
        elif self.kind == "unitization":
            if self.inner is None:
                raise ValueError("unitization needs an inner descriptor")
            if self.inner.kind == "unitization":
                raise ValueError("unitization does not nest")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def parameter_is_finite(self) -> Optional[bool]:
        """Whether the size parameter is finite; None for parameterless kinds."""
        if self.kind in ("esubf", "tower"):
            return self.cardinal.is_finite
        if self.kind == "ekappa":
            return self.ordinal.is_finite
        if self.kind in _CONCRETE_KINDS:
            return True
        return None


def rose(n: int) -> FamilyDescriptor:
    return FamilyDescriptor("rose", n=n)


def line(n: int) -> FamilyDescriptor:
    return FamilyDescriptor("line", n=n)


def loop() -> FamilyDescriptor:
    return FamilyDescriptor("loop")


def two_arrow() -> FamilyDescriptor:
    return FamilyDescriptor("twoarrow")


def finite_subsets_family(cardinal: Cardinal) -> FamilyDescriptor:
    return FamilyDescriptor("esubf", cardinal=cardinal)


def ordinal_complete_family(ordinal: OrdinalSpec) -> FamilyDescriptor:
    return FamilyDescriptor("ekappa", ordinal=ordinal)


def tower_family(cardinal: Cardinal) -> FamilyDescriptor:
    return FamilyDescriptor("tower", cardinal=cardinal)


def unitization(inner: FamilyDescriptor) -> FamilyDescriptor:
    return FamilyDescriptor("unitization", inner=inner)


def descriptor_text(d: FamilyDescriptor) -> str:
    if d.kind == "unitization":
        return f"unitization({descriptor_text(d.inner)})"
    if d.kind in ("rose", "line"):
        return f"{d.kind} --n={d.n}"
    if d.kind in ("loop", "twoarrow"):
        return d.kind
    if d.kind in ("esubf", "tower"):
        return f"{d.kind} --cardinal={d.cardinal.text()}"
    # ekappa
    o = d.ordinal
    if o.preset:
        return f"ekappa --preset={o.preset}"
    cof = "countable" if o.countable_cofinality else "uncountable"
    return f"ekappa --cardinal={o.cardinality.text()} --cofinality={cof}"


def parse_descriptor(text: str) -> FamilyDescriptor:
    """Parse the textual descriptor form; inverse of descriptor_text."""
    text = text.strip()
    if text.startswith("unitization(") and text.endswith(")"):
        return unitization(parse_descriptor(text[len("unitization("):-1]))
    try:
        tokens = shlex.split(text)
    except ValueError as exc:
        raise ValueError(f"bad descriptor {text!r}: {exc}") from exc
    if not tokens:
        raise ValueError("empty family descriptor")
    kind, opts = tokens[0], {}
    for tok in tokens[1:]:
        if not tok.startswith("--") or "=" not in tok:
            raise ValueError(f"bad descriptor option {tok!r}")
        key, _, value = tok[2:].partition("=")
        if key in opts:
            raise ValueError(f"duplicate option --{key}")
        opts[key] = value

    def take(key):
        return opts.pop(key, None)

    try:
        if kind in ("rose", "line"):
            n = take("n")
            if n is None:
                raise ValueError(f"{kind} needs --n")
            d = FamilyDescriptor(kind, n=int(n))
        elif kind in ("loop", "twoarrow"):
            d = FamilyDescriptor(kind)
        elif kind in ("esubf", "tower"):
            card = take("cardinal")
            if card is None:
                raise ValueError(f"{kind} needs --cardinal")
            d = FamilyDescriptor(kind, cardinal=Cardinal.parse(card))
        elif kind == "ekappa":
            preset = take("preset")
            if preset is not None:
                d = FamilyDescriptor("ekappa", ordinal=OrdinalSpec.from_preset(preset))
            else:
                card = take("cardinal")
                if card is None:
                    raise ValueError("ekappa needs --preset or --cardinal")
                cardinal = Cardinal.parse(card)
                cof = take("cofinality")
                if cof is None:
                    if cardinal.is_uncountable:
                        raise ValueError("uncountable ekappa needs --cofinality")
                    cof = "countable"
                if cof not in ("countable", "uncountable"):
                    raise ValueError(f"bad cofinality {cof!r}")
                d = FamilyDescriptor(
                    "ekappa",
                    ordinal=OrdinalSpec(cardinal, cof == "countable"),
                )
        else:
            raise ValueError(f"unknown family {kind!r}")
    except ValueError:
        raise
    if opts:
        raise ValueError(f"unused options for {kind}: {sorted(opts)}")
    return d


def _subset_label(symbols) -> str:
    return "{" + ",".join(sorted(symbols)) + "}"


def _edge_id(a: str, b: str) -> str:
    return f"e({a}>{b})"


def _subset_graph(ground_size: int, max_subset_size: int) -> Graph:
    """Subsets of the first ground_size symbols, nonempty and of size at
    most max_subset_size, with an edge for each strict inclusion."""
    symbols = _GROUND[:ground_size]
    subsets = []
    for k in range(1, max_subset_size + 1):
        subsets.extend(frozenset(c) for c in itertools.combinations(symbols, k))
    labels = {s: _subset_label(s) for s in subsets}
    edges = [
        (_edge_id(labels[a], labels[b]), labels[a], labels[b])
        for a in subsets
        for b in subsets
        if a < b
    ]
    return build_graph(sorted(labels.values()), edges)


def build_catalog_graph(d: FamilyDescriptor) -> Graph:
    """Materialize a finite descriptor as an unflagged graph."""
    if d.kind == "loop":
        return build_graph(["v"], [("x", "v", "v")])
    if d.kind == "rose":
        return build_graph(["v"], [(f"e{i}", "v", "v") for i in range(1, d.n + 1)])
    if d.kind == "line":
        vs = [f"v{i}" for i in range(1, d.n + 1)]
        es = [(f"e{i}", f"v{i}", f"v{i+1}") for i in range(1, d.n)]
        return build_graph(vs, es)
    if d.kind == "twoarrow":
        return build_graph(["u", "v1", "v2"], [("e1", "u", "v1"), ("e2", "u", "v2")])
    if d.kind in ("esubf", "tower"):
        if not d.cardinal.is_finite:
            raise NotConcretelyBuildable(
                f"{d.kind} with an infinite ground set has no finite presentation"
            )
        n = d.cardinal.n
        if n > _MAX_SUBSET_GROUND:
            raise NotConcretelyBuildable(
                f"ground set of size {n} exceeds the build bound {_MAX_SUBSET_GROUND}"
            )
        top = n if d.kind == "esubf" else n - 1
        if top < 1:
            raise NotConcretelyBuildable(
                "tower over a one-element set has no vertices"
            )
        return _subset_graph(n, top)
    if d.kind == "ekappa":
        if not d.ordinal.is_finite:
            raise NotConcretelyBuildable(
                "an infinite ordinal length has no finite presentation"
            )
        n = d.ordinal.cardinality.n
        vs = [str(i) for i in range(n)]
        es = [
            (_edge_id(str(i), str(j)), str(i), str(j))
            for i in range(n)
            for j in range(i + 1, n)
        ]
        return build_graph(vs, es)
    raise NotConcretelyBuildable(f"{d.kind} does not denote a single finite graph")


def symbolic_csp(d: FamilyDescriptor) -> bool:
    """Whether some countable vertex set separates the family's graph:
    every vertex must reach a member of the set."""
    if d.kind == "unitization":
        raise NotAGraphFamily("a unitization is not a graph family")
    if d.kind in _CONCRETE_KINDS:
        return True
    if d.kind in ("esubf", "tower"):
        # countably many sets cover only a countable ground set
        return not d.cardinal.is_uncountable
    # ekappa: a separating set is exactly a countable cofinal set
    return d.ordinal.countable_cofinality


def symbolic_dimension(d: FamilyDescriptor) -> Cardinal:
    """Vector-space dimension class over any field, where a rule exists.

    For the subset and ordinal families with an infinite parameter the
    dimension equals the parameter's cardinality; adjoining an identity
    adds one dimension, which does not change the class.
    """
    if d.kind == "unitization":
        return symbolic_dimension(d.inner)
    if d.kind == "esubf" and not d.cardinal.is_finite:
        return d.cardinal
    if d.kind == "ekappa" and not d.ordinal.is_finite:
        return d.ordinal.cardinality
    raise DimensionRuleUnavailable(
        f"no dimension rule for {descriptor_text(d)}"
    )


def truncation_flags(d: FamilyDescriptor, g: Graph) -> Graph:
    """Flag every emitting vertex of a finite truncation of d.

    In the full graph of an infinite subset or ordinal family every
    non-sink vertex emits infinitely many edges, so a faithful truncation
    marks them all as infinite emitters.
    """
    if d.kind not in _PARAMETRIC_KINDS or d.parameter_is_finite:
        raise NotApplicable(
            f"{descriptor_text(d)} is not an infinite parametric family"
        )
    vertices = [(v, bool(g.out_edges(v)) or f) for v, f in g.vertices]
    return Graph(tuple(sorted(vertices)), g.edges)
