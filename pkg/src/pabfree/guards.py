"""Size guards for the exponential searches.

Guards are configuration: every guarded function takes ``guards=`` and falls
back to :data:`DEFAULT_GUARDS`. The CLI's ``--guard-override name=value``
builds a modified copy.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace


class GuardError(ValueError):
    def __init__(self, parameter: str, limit: int, value: int):
        super().__init__(f"size guard {parameter}={limit} refuses input of size {value}")
        self.parameter = parameter
        self.limit = limit
        self.value = value


@dataclass(frozen=True)
class Guards:
    # exact colouring / clique / Ramsey / connectivity-core searches
    max_colour_vertices: int = 40
    # pattern size for induced_embedding
    max_embed_pattern: int = 12
    # pattern size for subdivision detection
    max_subdivision_pattern: int = 10
    # host size for generic-pattern subdivision detection
    max_host_generic: int = 24
    # host size for the P(a, b)-specialised detector
    max_host_pab: int = 48
    # host size for the exhaustive K(s, s) search
    max_kss_vertices: int = 200
    # search-node budget for the exhaustive multipartite template search
    template_search_budget: int = 200_000

    def check(self, parameter: str, value: int) -> None:
        limit = getattr(self, parameter)
        if value > limit:
            raise GuardError(parameter, limit, value)

    def override(self, **changes: int) -> "Guards":
        names = {f.name for f in fields(self)}
        unknown = set(changes) - names
        if unknown:
            raise ValueError(f"unknown guard(s): {', '.join(sorted(unknown))}")
        return replace(self, **changes)


DEFAULT_GUARDS = Guards()


def resolve(guards: Guards | None) -> Guards:
    return DEFAULT_GUARDS if guards is None else guards
