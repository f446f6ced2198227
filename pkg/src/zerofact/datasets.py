"""Embedded survey dataset: Likert response counts and the published figures.

Sixty-four students were invited; statement 0 ("zero factorial equals one is
believable") was asked before a presentation of the three justifications,
statements 1a-3c rate each justification afterwards (a: the symbolic
explanation helped, b: the picture helped, c: the justification is
convincing), and statement 4 re-asks believability afterwards.  Counts are
ordered strongly agree, somewhat agree, neutral, somewhat disagree,
strongly disagree.

``PUBLISHED_*`` constants carry the percentages and aggregate claims as they
appear in the published summary; this package recomputes everything from the
raw counts and flags the handful of published figures that do not survive
the arithmetic (see ``survey.compare_to_reported``).
"""

from __future__ import annotations

STATEMENT_IDS = ("0", "1a", "1b", "1c", "2a", "2b", "2c", "3a", "3b", "3c", "4")

# statement -> (strongly agree, somewhat agree, neutral, somewhat dis., strongly dis.)
COUNTS: dict[str, tuple[int, int, int, int, int]] = {
    "0": (30, 25, 4, 2, 3),  # pre-presentation believability, 64 respondents
    "1a": (21, 34, 5, 1, 1),
    "2a": (21, 30, 9, 1, 1),
    "3a": (20, 25, 8, 7, 2),
    "1b": (24, 33, 3, 0, 2),
    "2b": (28, 29, 4, 0, 1),
    "3b": (27, 24, 7, 2, 2),
    "1c": (28, 25, 5, 3, 1),
    "2c": (27, 22, 9, 3, 1),
    "3c": (22, 22, 11, 5, 2),
    "4": (39, 20, 0, 2, 1),  # post-presentation believability, 62 respondents
}

PUBLISHED_PERCENTAGES: dict[str, tuple[float, float, float, float, float]] = {
    "0": (46.88, 39.06, 6.25, 3.13, 4.69),
    "1a": (33.87, 54.84, 8.06, 1.61, 1.61),
    "2a": (33.87, 48.39, 14.52, 1.61, 1.61),
    "3a": (32.26, 40.32, 12.90, 11.29, 3.23),
    "1b": (38.71, 53.23, 4.84, 0.00, 3.23),
    "2b": (45.16, 46.77, 6.45, 0.00, 1.61),
    "3b": (43.55, 38.71, 11.29, 3.23, 3.23),
    "1c": (45.16, 40.32, 8.06, 4.84, 1.61),
    "2c": (43.55, 35.48, 14.52, 4.84, 1.61),
    "3c": (35.48, 35.48, 17.74, 8.06, 3.23),
    "4": (62.90, 32.26, 0.00, 3.23, 1.61),
}

# statement -> (agree-aggregate count, published aggregate percentage)
PUBLISHED_AGGREGATES: dict[str, tuple[int, float]] = {
    "1a": (55, 88.71),
    "2a": (51, 82.26),
    "3a": (45, 72.85),  # published; 45/62 actually rounds to 72.58
    "1b": (57, 91.94),
    "2b": (57, 91.94),
    "3b": (51, 82.26),
    "1c": (53, 85.48),
    "2c": (49, 79.03),
    "3c": (44, 70.97),
    "0": (55, 85.94),
    "4": (59, 95.15),  # published; 59/62 actually rounds to 95.16
}

INVITED = 64
RESPONDED = 62
PUBLISHED_RESPONSE_RATE = 96.88

# believability aggregates moved 85.94 -> 95.16; the summary prints the
# increase as 9.21 and the strongly-agree increase (46.88 -> 62.90) as 16.02
PUBLISHED_AGGREGATE_INCREASE = 9.21
PUBLISHED_STRONG_AGREE_INCREASE = 16.02
