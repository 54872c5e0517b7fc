"""
Families package - Askey-scheme identifications and their verification
"""

from AW_Forge.families.registry import FAMILY_MAPS, FamilyMap, XDomain, get_family
from AW_Forge.families.verification import (
    FamilyInstance,
    FamilyReport,
    bind,
    check_instance,
    family_lambda,
    family_pn,
    verify_family,
)

__all__ = [
    "FAMILY_MAPS",
    "FamilyInstance",
    "FamilyMap",
    "FamilyReport",
    "XDomain",
    "bind",
    "check_instance",
    "family_lambda",
    "family_pn",
    "get_family",
    "verify_family",
]
