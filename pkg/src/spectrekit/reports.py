"""Structured results for lemma checkers.

A checker runs a list of individual verifications and reports each as a
CheckItem; the surrounding LemmaReport passes only when every applicable
item does.  Details are pre-rendered strings with exact rational values, so
serializing a report never rounds anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple


@dataclass(frozen=True)
class CheckItem:
    label: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class LemmaReport:
    name: str
    items: Tuple[CheckItem, ...]
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> List[CheckItem]:
        return [item for item in self.items if not item.passed]


def report(name: str, items: List[CheckItem], note: str = "") -> LemmaReport:
    return LemmaReport(name=name, items=tuple(items), note=note)
