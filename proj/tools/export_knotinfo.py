#!/usr/bin/env python3
"""Regenerate data/knots.csv from the `database_knotinfo` package.

The CSV keeps KnotInfo column names. PD codes are rewritten into the
`PD[X(a,b,c,d),...]` grammar and braid words into the `n: e1 ... ek` grammar
(when KnotInfo lists several braids, the first is used). Seifert matrices,
unknotting and tunnel numbers are copied verbatim, including intervals such
as `[2,3]`.

    pip install database_knotinfo
    python3 tools/export_knotinfo.py > data/knots.csv
"""

import csv
import json
import re
import sys

from database_knotinfo import link_list
from database_knotinfo.__version__ import value as knotinfo_version

TWELVE_CROSSING = """
12a_427 12a_435 12a_465 12a_466 12a_475 12a_647 12a_742 12a_801 12a_868
12a_975 12a_990 12a_1019 12a_1102 12a_1105 12a_1167 12a_1206 12a_1229
12a_1288 12n_518 12n_533 12n_604 12n_605 12n_642 12n_706 12n_840 12n_879
12n_888
""".split()

COLUMNS = ["name", "pd_notation", "braid_notation", "seifert_matrix",
           "unknotting_number", "tunnel_number", "determinant", "source"]


def pd_grammar(text):
    crossings = json.loads(text)
    return "PD[" + ",".join(
        "X(" + ",".join(str(e) for e in x) + ")" for x in crossings) + "]"


def braid_grammar(text):
    word = json.loads(text)
    if word and isinstance(word[0], list):
        word = word[0]
    strands = max(abs(e) for e in word) + 1
    return f"{strands}: " + " ".join(str(e) for e in word)


def crossing_number(name):
    m = re.match(r"(\d+)", name)
    return int(m.group(1)) if m else None


def main():
    source = f"KnotInfo via database_knotinfo {knotinfo_version}"
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(COLUMNS)
    # KnotInfo carries no presentation for the unknot.
    writer.writerow(["0_1", "", "1:", "", "0", "0", "1", "manual: unknot"])
    for rec in link_list()[1:]:
        name = rec["name"]
        cn = crossing_number(name)
        if cn is None or cn == 0:
            continue
        if not (cn <= 10 or name in TWELVE_CROSSING):
            continue
        writer.writerow([
            name,
            pd_grammar(rec["pd_notation"]),
            braid_grammar(rec["braid_notation"]),
            rec["seifert_matrix"],
            rec["unknotting_number"],
            rec["tunnel_number"],
            rec["determinant"],
            source,
        ])


if __name__ == "__main__":
    main()
