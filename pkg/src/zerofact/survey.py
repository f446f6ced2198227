"""Likert-table arithmetic and the matched-pairs t-test.

Percentages are recomputed from raw counts with half-up rounding to two
decimals (the convention every reproducible published figure follows) and
compared against the published values; entries whose two-decimal values
differ are flagged rather than silently adopted from either side.

The matched-pairs test works on per-respondent differences d = before -
after with the one-sided alternative "before - after < 0" (responses
improved).  Raw pairings were never published, so ``synthetic_pairs`` builds
a clearly-synthetic pairing constrained to the published marginals, letting
the full pipeline run end to end.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from fractions import Fraction
from typing import Iterable, Literal

from . import datasets
from .rng import splitmix64
from .special import student_t_cdf


class LikertCategory(Enum):
    """The five response categories with their published numeric codes."""

    STRONGLY_AGREE = 5
    SOMEWHAT_AGREE = 4
    NEUTRAL = 3
    SOMEWHAT_DISAGREE = 2
    STRONGLY_DISAGREE = 1

    @property
    def label(self) -> str:
        return self.name.lower()


CATEGORY_ORDER = (
    LikertCategory.STRONGLY_AGREE,
    LikertCategory.SOMEWHAT_AGREE,
    LikertCategory.NEUTRAL,
    LikertCategory.SOMEWHAT_DISAGREE,
    LikertCategory.STRONGLY_DISAGREE,
)


class InsufficientDataError(ValueError):
    """Fewer pairs than the test needs (df would be zero)."""


class DegenerateVarianceError(ValueError):
    """All differences identical; the t statistic is undefined."""


class CsvFormatError(ValueError):
    """Malformed survey CSV; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class StatementTable:
    """Response counts for one survey statement, ordered as CATEGORY_ORDER."""

    statement_id: str
    counts: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.counts) != 5:
            raise ValueError("a statement table has exactly five category counts")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative count in table {self.statement_id!r}")

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class PairedResponses:
    """Per-respondent (before, after) Likert codes."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for before, after in self.pairs:
            if not (1 <= before <= 5 and 1 <= after <= 5):
                raise ValueError(f"Likert codes must lie in 1..5, got ({before}, {after})")

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class TTestResult:
    n: int
    mean_diff: float
    sd_diff: float
    t_stat: float
    df: int
    p_one_sided: float


@dataclass(frozen=True)
class ComparisonEntry:
    label: str
    computed: float
    published: float

    @property
    def flagged(self) -> bool:
        return round_half_up(self.computed) != round_half_up(self.published)


@dataclass(frozen=True)
class ComparisonReport:
    entries: tuple[ComparisonEntry, ...]

    @property
    def flagged_entries(self) -> tuple[ComparisonEntry, ...]:
        return tuple(e for e in self.entries if e.flagged)

    @property
    def all_match(self) -> bool:
        return not self.flagged_entries


def round_half_up(value: float | Fraction, places: int = 2) -> float:
    """Half-up decimal rounding, exact for rational inputs."""
    if isinstance(value, Fraction):
        dec = Decimal(value.numerator) / Decimal(value.denominator)
    else:
        dec = Decimal(repr(value))
    quantum = Decimal(1).scaleb(-places)
    return float(dec.quantize(quantum, rounding=ROUND_HALF_UP))


def percentages_exact(table: StatementTable) -> tuple[Fraction, ...]:
    """Unrounded category percentages, kept exact for downstream sums."""
    if table.total == 0:
        raise ValueError(f"table {table.statement_id!r} has no responses")
    return tuple(Fraction(100 * c, table.total) for c in table.counts)


def percentages(table: StatementTable) -> tuple[float, ...]:
    """Category percentages rounded half-up to two decimals."""
    return tuple(round_half_up(p) for p in percentages_exact(table))


def aggregate_agree(table: StatementTable) -> tuple[int, float]:
    """Count and percentage of strongly-agree plus somewhat-agree."""
    if table.total == 0:
        raise ValueError(f"table {table.statement_id!r} has no responses")
    count = table.counts[0] + table.counts[1]
    return count, round_half_up(Fraction(100 * count, table.total))


def response_rate(responded: int, invited: int) -> float:
    """Percentage of invitees who responded, half-up to two decimals."""
    if invited <= 0:
        raise ValueError(f"invited must be positive, got {invited}")
    if not 0 <= responded <= invited:
        raise ValueError(f"responded must lie in [0, {invited}], got {responded}")
    return round_half_up(Fraction(100 * responded, invited))


def paired_t_test(
    data: PairedResponses,
    alternative: Literal["less", "two_sided"] = "less",
) -> TTestResult:
    """Matched-pairs t-test on d = before - after.

    The default alternative is "less" (the differences are negative, i.e.
    responses improved); ``two_sided`` is available behind the flag.
    """
    n = len(data)
    if n < 2:
        raise InsufficientDataError(f"need at least 2 pairs, got {n}")
    diffs = [before - after for before, after in data.pairs]
    mean = sum(diffs) / n
    ss = sum((d - mean) ** 2 for d in diffs)
    if ss == 0.0:
        raise DegenerateVarianceError("all differences are identical; sd is zero")
    sd = math.sqrt(ss / (n - 1))
    t_stat = mean / (sd / math.sqrt(n))
    df = n - 1
    if alternative == "less":
        p = student_t_cdf(t_stat, df)
    elif alternative == "two_sided":
        p = 2.0 * student_t_cdf(-abs(t_stat), df)
    else:
        raise ValueError(f"unknown alternative {alternative!r}")
    return TTestResult(n=n, mean_diff=mean, sd_diff=sd, t_stat=t_stat, df=df, p_one_sided=p)


def _column_marginals(codes: Iterable[int]) -> tuple[int, int, int, int, int]:
    counts = [0] * 5
    for code in codes:
        counts[5 - code] += 1  # code 5 first, matching CATEGORY_ORDER
    return tuple(counts)


def reduce_to_responders(table: StatementTable, n: int) -> StatementTable:
    """Drop excess responses down to ``n``, from the largest categories first.

    This is the documented rule for restricting a table to the subset of
    respondents who answered both paired statements (ties broken toward
    stronger agreement).  The reduction is deterministic so that marginal
    checks against it are reproducible.
    """
    excess = table.total - n
    if excess < 0:
        raise ValueError(f"table has only {table.total} responses, cannot keep {n}")
    counts = list(table.counts)
    while excess > 0:
        i = counts.index(max(counts))
        counts[i] -= 1
        excess -= 1
    return StatementTable(statement_id=table.statement_id, counts=tuple(counts))


def marginal_consistency(
    data: PairedResponses,
    before_table: StatementTable,
    after_table: StatementTable,
) -> bool:
    """Does the pairing's column marginals reproduce the tables exactly?

    A before table covering more respondents than the pairing is first
    reduced by :func:`reduce_to_responders`, mirroring how the pairing
    generator restricts to dual responders.
    """
    n = len(data)
    if n == 0 or after_table.total != n or before_table.total < n:
        return False
    before = reduce_to_responders(before_table, n) if before_table.total > n else before_table
    before_marg = _column_marginals(b for b, _ in data.pairs)
    after_marg = _column_marginals(a for _, a in data.pairs)
    return before_marg == before.counts and after_marg == after_table.counts


def synthetic_pairs(
    before_table: StatementTable | None = None,
    after_table: StatementTable | None = None,
    seed: int | None = None,
) -> PairedResponses:
    """A synthetic pairing matching the published marginals (n = 62).

    Raw per-respondent pairings were never published, so this generator
    fabricates one, purely to exercise the t-test machinery: the before
    column is the pre-presentation table reduced to the dual responders, the
    after column the post-presentation table, and both columns are sorted
    descending and zipped (the maximally-correlated coupling).  With a seed
    the after column is instead permuted deterministically (splitmix64 sort
    keys), which preserves the marginals but varies the joint table.  Any
    p-value computed from this data is SYNTHETIC and says nothing about the
    real survey beyond its marginals.
    """
    if before_table is None:
        before_table = embedded_tables()["0"]
    if after_table is None:
        after_table = embedded_tables()["4"]
    n = after_table.total
    before = reduce_to_responders(before_table, n)

    def expand(table: StatementTable) -> list[int]:
        codes: list[int] = []
        for category, count in zip(CATEGORY_ORDER, table.counts):
            codes.extend([category.value] * count)
        return codes  # descending, since CATEGORY_ORDER starts at code 5

    before_codes = expand(before)
    after_codes = expand(after_table)
    if seed is not None:
        keys = splitmix64(seed, len(after_codes))
        after_codes = [after_codes[i] for i in sorted(range(len(after_codes)), key=lambda i: (int(keys[i]), i))]
    return PairedResponses(pairs=tuple(zip(before_codes, after_codes)))


def embedded_tables() -> dict[str, StatementTable]:
    """The embedded survey dataset as statement tables."""
    return {
        sid: StatementTable(statement_id=sid, counts=datasets.COUNTS[sid])
        for sid in datasets.STATEMENT_IDS
    }


def compare_to_reported(
    tables: dict[str, StatementTable] | None = None,
) -> ComparisonReport:
    """Recompute every published percentage and aggregate from raw counts.

    Each entry pairs a computed value with its published counterpart; the
    ``flagged`` property marks two-decimal disagreement.  On the embedded
    dataset exactly three entries flag: one aggregate percentage printed as
    72.85 (arithmetic gives 72.58), one printed as 95.15 (arithmetic gives
    95.16), and the believability increase printed as 9.21 (arithmetic gives
    9.22).
    """
    if tables is None:
        tables = embedded_tables()
    entries: list[ComparisonEntry] = []

    for sid in datasets.STATEMENT_IDS:
        if sid not in tables:
            continue
        table = tables[sid]
        published_row = datasets.PUBLISHED_PERCENTAGES[sid]
        for category, computed, published in zip(
            CATEGORY_ORDER, percentages(table), published_row
        ):
            entries.append(
                ComparisonEntry(
                    label=f"statement {sid} {category.label} %",
                    computed=computed,
                    published=published,
                )
            )
        agg_count, agg_pct = aggregate_agree(table)
        pub_count, pub_pct = datasets.PUBLISHED_AGGREGATES[sid]
        entries.append(
            ComparisonEntry(
                label=f"statement {sid} agree aggregate count",
                computed=float(agg_count),
                published=float(pub_count),
            )
        )
        entries.append(
            ComparisonEntry(
                label=f"statement {sid} agree aggregate %",
                computed=agg_pct,
                published=pub_pct,
            )
        )

    entries.append(
        ComparisonEntry(
            label="response rate %",
            computed=response_rate(datasets.RESPONDED, datasets.INVITED),
            published=datasets.PUBLISHED_RESPONSE_RATE,
        )
    )

    if "0" in tables and "4" in tables:
        _, before_agg = aggregate_agree(tables["0"])
        _, after_agg = aggregate_agree(tables["4"])
        entries.append(
            ComparisonEntry(
                label="believability agree-aggregate increase",
                computed=round_half_up(after_agg - before_agg),
                published=datasets.PUBLISHED_AGGREGATE_INCREASE,
            )
        )
        before_strong = percentages(tables["0"])[0]
        after_strong = percentages(tables["4"])[0]
        entries.append(
            ComparisonEntry(
                label="believability strongly-agree increase",
                computed=round_half_up(after_strong - before_strong),
                published=datasets.PUBLISHED_STRONG_AGREE_INCREASE,
            )
        )

    return ComparisonReport(entries=tuple(entries))


_LABEL_TO_CATEGORY = {c.label: c for c in CATEGORY_ORDER}


def read_tables_csv(path) -> dict[str, StatementTable]:
    """Read statement tables from ``statement_id,category,count`` CSV."""
    pending: dict[str, dict[LikertCategory, int]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["statement_id", "category", "count"]:
            raise CsvFormatError(1, "expected header statement_id,category,count")
        for line, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise CsvFormatError(line, f"expected 3 fields, got {len(row)}")
            sid, label, raw_count = row
            category = _LABEL_TO_CATEGORY.get(label.strip())
            if category is None:
                raise CsvFormatError(line, f"unknown category {label!r}")
            try:
                count = int(raw_count)
            except ValueError:
                raise CsvFormatError(line, f"count {raw_count!r} is not an integer") from None
            if count < 0:
                raise CsvFormatError(line, f"count must be non-negative, got {count}")
            cell = pending.setdefault(sid.strip(), {})
            if category in cell:
                raise CsvFormatError(line, f"duplicate category {label!r} for statement {sid!r}")
            cell[category] = count
    tables = {}
    for sid, cells in pending.items():
        counts = tuple(cells.get(c, 0) for c in CATEGORY_ORDER)
        tables[sid] = StatementTable(statement_id=sid, counts=counts)
    return tables


def read_paired_csv(path) -> PairedResponses:
    """Read paired responses from ``respondent_id,before,after`` CSV."""
    pairs: list[tuple[int, int]] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["respondent_id", "before", "after"]:
            raise CsvFormatError(1, "expected header respondent_id,before,after")
        for line, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise CsvFormatError(line, f"expected 3 fields, got {len(row)}")
            _, raw_before, raw_after = row
            try:
                before, after = int(raw_before), int(raw_after)
            except ValueError:
                raise CsvFormatError(line, "before/after codes must be integers") from None
            if not (1 <= before <= 5 and 1 <= after <= 5):
                raise CsvFormatError(line, f"codes must lie in 1..5, got ({before}, {after})")
            pairs.append((before, after))
    return PairedResponses(pairs=tuple(pairs))
