"""Reference tables of code sizes, computed from the closed-form counters."""
from __future__ import annotations

from dataclasses import dataclass

from .count import s_count, vcal_count


@dataclass(frozen=True)
class TableSpec:
    table_id: int
    q: int
    n_range: range
    k_range: range | None = None

    @property
    def variable_length(self) -> bool:
        return self.k_range is not None

    @property
    def header(self) -> tuple[str, ...]:
        if self.variable_length:
            return ("n", "k", "cardinality")
        return ("n", "construction_I", "construction_I_prime")


TABLES = {
    1: TableSpec(1, 3, range(3, 17)),
    2: TableSpec(2, 4, range(3, 17)),
    3: TableSpec(3, 5, range(3, 17)),
    4: TableSpec(4, 6, range(3, 17)),
    5: TableSpec(5, 3, range(8, 24), range(3, 11)),
    6: TableSpec(6, 4, range(8, 24), range(3, 11)),
}


def best_construction_I(q: int, n: int) -> int:
    return max(s_count(1, q - 1, k, n) for k in range(1, n))


def best_construction_I_prime(q: int, n: int) -> int:
    return max(s_count(a, q - a, k, n) for k in range(1, n) for a in range(1, q))


def best_construction_II_prime(q: int, k: int, n: int) -> int:
    return max(vcal_count(a, q - a, k, n) for a in range(1, q))


def table_rows(table_id: int) -> list[tuple[int, ...]]:
    if table_id not in TABLES:
        raise ValueError(f"table must be one of 1..6, got {table_id}")
    spec = TABLES[table_id]
    rows: list[tuple[int, ...]] = []
    for n in spec.n_range:
        if spec.k_range is None:
            rows.append((n, best_construction_I(spec.q, n), best_construction_I_prime(spec.q, n)))
        else:
            for k in spec.k_range:
                if 2 * k + 2 <= n:
                    rows.append((n, k, best_construction_II_prime(spec.q, k, n)))
    return rows
