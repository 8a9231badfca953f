"""Splitting of actor codes into entity, role and attribute."""

from __future__ import annotations

from dataclasses import dataclass

from phoenixlib._src.input_checks import check_actor_length


@dataclass(frozen=True)
class ActorDecomposition:
    entity: str
    role: str | None
    attribute: str | None
    full: str

    @property
    def segments(self) -> tuple[str, ...]:
        return tuple(self.full[i : i + 3] for i in range(0, len(self.full), 3))


def decompose_actor(full: str, code_sets) -> ActorDecomposition:
    """Break an actor code into its top-level entity, role and attribute.

    The first segment is the entity. Later segments are classified by
    membership in `code_sets.roles` and `code_sets.attributes`, the first hit
    of each kind winning. Unclassified segments stay in `full` only.

    Parameters
    ----------
    full: str
        Actor code, a positive multiple of 3 characters.

    code_sets: DictionarySet or any object with `roles` and `attributes` sets

    Raises
    ------
    PhoenixMalformedCode
        if the length of `full` is not a positive multiple of 3.

    Examples
    --------
    >>> from phoenixlib.dictionaries import DictionarySet
    >>> from phoenixlib.enrich import decompose_actor
    >>> sets = DictionarySet(roles={"GOV", "REB"}, attributes={"MOS"}, version="toy")
    >>> decompose_actor("IMGMOSISI", sets)
    ActorDecomposition(entity='IMG', role=None, attribute='MOS', full='IMGMOSISI')
    """
    full = check_actor_length(full)
    role = attribute = None
    for i in range(3, len(full), 3):
        seg = full[i : i + 3]
        if role is None and seg in code_sets.roles:
            role = seg
        elif attribute is None and seg in code_sets.attributes:
            attribute = seg
    return ActorDecomposition(full[:3], role, attribute, full)
