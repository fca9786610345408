"""Result records for the colouring pipeline, schema-stable for JSON."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass


@dataclass(frozen=True)
class ColouringReport:
    """Everything the pipeline decided and verified for one graph.

    Fields that only make sense on the construction branch are None on the
    other branches; the JSON schema is identical for every graph.
    """

    name: str
    n: int
    m: int
    branch: str                      # 3-colourable | reduced | constructed
    reductions: tuple[str, ...]      # rewrite kinds, outermost first
    base_branch: str                 # branch taken on the fully reduced graph
    base_order: int
    cycle_lengths: tuple[int, ...] | None
    selection_size: int | None
    component_shapes: tuple[str, ...] | None
    colours: tuple[int, ...]
    poor: int
    medium: int
    rich: int
    bound_ok: bool
    bound_tight: bool
    is_petersen: bool
    audit_passed: bool | None
    audit_failures: tuple[str, ...]
    oracle_minimum: int | None = None

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), indent=2)

    def render_text(self) -> str:
        lines = [
            f"graph {self.name or '<unnamed>'}: n={self.n}, m={self.m}",
            f"  branch: {self.branch}"
            + (f" (reductions: {', '.join(self.reductions)}; base: {self.base_branch} "
               f"on {self.base_order} vertices)" if self.reductions else ""),
        ]
        if self.cycle_lengths is not None:
            lines.append(f"  2-factor cycle lengths: {list(self.cycle_lengths)}")
            lines.append(
                f"  selection size: {self.selection_size}; "
                f"component shapes: {list(self.component_shapes or ())}"
            )
        lines.append(
            f"  edges: poor={self.poor} medium={self.medium} rich={self.rich}"
        )
        verdict = "tight" if self.bound_tight else "strict"
        lines.append(
            f"  medium bound: {self.medium} <= 4/5 * {self.n} = {4 * self.n / 5:g}"
            f" [{verdict}]" if self.bound_ok else
            f"  medium bound VIOLATED: {self.medium} > 4/5 * {self.n}"
        )
        if self.audit_passed is not None:
            lines.append(
                "  discharging audit: " + ("passed" if self.audit_passed else
                                           "FAILED: " + "; ".join(self.audit_failures))
            )
        if self.oracle_minimum is not None:
            lines.append(f"  oracle minimum medium over 4-colourings: {self.oracle_minimum}")
        return "\n".join(lines)
