#!/usr/bin/env python3
"""Print the ring-property classification table for the built-in catalog.

Covers the finite catalog graphs, the three infinite symbolic families,
and the unitization of each infinite family.  Output is a text table by
default; --format json emits the full reports keyed by subject.
"""

import argparse
import json
import sys

from leavitt import (
    Cardinal,
    OrdinalSpec,
    classify_family,
    finite_subsets_family,
    line,
    loop,
    ordinal_complete_family,
    rose,
    tower_family,
    two_arrow,
    unitization,
)

COLUMNS = ("unital", "prime", "primitive", "von_neumann_regular", "csp")

GRAPHS = [
    ("R_1", loop()),
    ("R_2", rose(2)),
    ("R_3", rose(3)),
    ("A_2", line(2)),
    ("A_3", line(3)),
    ("A_5", line(5)),
    ("TwoArrow", two_arrow()),
    ("FS_2", finite_subsets_family(Cardinal.finite(2))),
    ("FS_3", finite_subsets_family(Cardinal.finite(3))),
    ("OC_3", ordinal_complete_family(OrdinalSpec(Cardinal.finite(3)))),
    ("OC_4", ordinal_complete_family(OrdinalSpec(Cardinal.finite(4)))),
]

FAMILIES = [
    finite_subsets_family(Cardinal.uncountable("X")),
    ordinal_complete_family(OrdinalSpec.from_preset("omega")),
    ordinal_complete_family(OrdinalSpec.from_preset("omega1")),
    tower_family(Cardinal.uncountable("X")),
]


def cell(verdict):
    if verdict.value == "unknown":
        return "?"
    return "yes" if verdict.value else "no"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    args = ap.parse_args(argv)

    reports = []
    for name, d in GRAPHS:
        r = classify_family(d)
        reports.append((name, r))
    for d in FAMILIES:
        reports.append((None, classify_family(d)))
        reports.append((None, classify_family(unitization(d))))

    if args.format == "json":
        json.dump({r.subject: r.to_dict() for _, r in reports}, sys.stdout, indent=2)
        print()
        return 0

    subj_w = max(len(r.subject if n is None else n) for n, r in reports)
    header = "subject".ljust(subj_w) + "".join(c.rjust(22) for c in COLUMNS)
    print(header)
    print("-" * len(header))
    for name, r in reports:
        label = name if name is not None else r.subject
        row = label.ljust(subj_w)
        row += "".join(cell(r.properties[c]).rjust(22) for c in COLUMNS)
        print(row)

    print()
    print("legend: yes / no / ? (not determined by the descriptor alone)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
