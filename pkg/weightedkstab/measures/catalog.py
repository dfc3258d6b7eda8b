from dataclasses import dataclass, field
from typing import List, Tuple

from weightedkstab.exceptions import UnknownCaseError
from weightedkstab.geometry import MomentPolytope

VALUATION_CONE_NOTE = "valuation cone is the half-plane {ξ(α) <= 0}; V ∩ -V is spanned by χ*"
UNIQUE_DEGENERATION_NOTE = "unique equivariant special test configuration up to twist"


@dataclass(frozen=True)
class CaseData:
    dm_id: str
    mori_mukai: str
    polytope: MomentPolytope
    notes: Tuple[str, ...] = field(default_factory=tuple)


def _case(dm_id: str, mori_mukai: str, vertices, *notes: str) -> CaseData:
    polytope = MomentPolytope(vertices, kappa=(2, 0), dh_exponent=1, label=dm_id)
    return CaseData(dm_id, mori_mukai, polytope, (VALUATION_CONE_NOTE, UNIQUE_DEGENERATION_NOTE) + notes)


# rank two faithful SL_2 x G_m-spherical actions on non-toric Fano threefolds
CATALOG: Tuple[CaseData, ...] = (
    _case("3-2-3", "4-8", [(0, -1), (4, -1), (4, 0), (2, 1), (0, 1)], "weight-insensitive: μ + (2/3)ν >= 0"),
    _case("3-2-4", "1-16", [(0, 0), (3, -3), (3, 3)], "weight-insensitive: μ >= 0"),
    _case("3-2-5", "2-32", [(0, 0), (2, -2), (4, 0), (2, 2)], "weight-insensitive: μ >= 0"),
    _case("3-2-6", "2-31", [(0, 0), (2, -2), (3, -1), (3, 3)], "weight-insensitive: μ >= 0"),
    _case("3-2-8", "3-24", [(0, 0), (1, -1), (3, -1), (4, 0), (2, 2)], "weight-insensitive: μ >= 0"),
    _case("3-2-9", "3-20", [(0, 0), (2, -2), (3, -1), (3, 1), (2, 2)], "weight-insensitive: μ >= 0"),
    _case("3-2-11", "4-7", [(0, 0), (1, -1), (3, -1), (4, 0), (3, 1), (1, 1)], "weight-insensitive: μ >= 0"),
    _case(
        "3-2-17", "3-22", [(0, -1), (2, -1), (6, -1), (6, 0), (2, 1), (0, 1)], "weight-insensitive: μ + 2ν >= 0"
    ),
    _case(
        "3-2-18",
        "1-16",
        [(0, -3), (6, 0), (0, 3)],
        "weight-sensitive: cosh(a y) destabilizes for a > a0 ≈ 1.81037",
        "test configuration x0x2 - x1^2 + z x3x4 = 0 in P^4 x C",
        "central fiber: singular quadric x0x2 = x1^2, Gorenstein toric with reflexive ID 2 (degree 54)",
    ),
    _case(
        "3-2-19",
        "2-29",
        [(0, 3), (4, 1), (4, -1), (0, -3)],
        "weight-sensitive: cosh(a y) destabilizes for a > a0 ≈ 1.3176",
        "test configuration: blowup of the 3-2-18 one along x3 = x4 = 0",
        "central fiber: Gorenstein toric with reflexive ID 19",
    ),
    _case("3-2-21", "2-30", [(0, 3), (6, 0), (4, -1), (0, -1)], "weight-insensitive: μ + (2/3)ν >= 0"),
    _case("3-2-23", "3-19", [(0, -1), (4, -1), (6, 0), (4, 1), (0, 1)], "weight-insensitive: μ >= 0"),
)


def catalog() -> List[CaseData]:
    return list(CATALOG)


def get_case(dm_id: str) -> CaseData:
    for case in CATALOG:
        if case.dm_id == dm_id:
            return case
    raise UnknownCaseError(f"No catalog case with id {dm_id!r}")


def find_by_mori_mukai(mori_mukai: str) -> List[CaseData]:
    return [case for case in CATALOG if case.mori_mukai == mori_mukai]


def lookup(identifier: str) -> CaseData:
    """
    Resolve a spherical action id ("3-2-19") or a Mori-Mukai id naming a single action ("2-29")
    :param identifier:
    :return:
    """
    identifier = identifier.strip()
    for case in CATALOG:
        if case.dm_id == identifier:
            return case
    matches = find_by_mori_mukai(identifier)
    if len(matches) == 1:
        return matches[0]
    if matches:
        ids = ", ".join(case.dm_id for case in matches)
        raise UnknownCaseError(f"Mori-Mukai {identifier} has several spherical actions ({ids}); use one of them")
    raise UnknownCaseError(f"No catalog case with id {identifier!r}")
