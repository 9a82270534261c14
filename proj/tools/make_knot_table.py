#!/usr/bin/env python3
"""Builds data/knots10.tsv from the KnotInfo database (database_knotinfo).

KnotInfo lists each PD crossing clockwise from the incoming under-strand;
knotx reads them counterclockwise, so entries b and d are swapped. The jones
column is filled in by the knotx binary itself; KnotInfo's own Jones values
are written separately to tests/data/knotinfo_jones.tsv as an external
cross-check (they are compared up to mirror image).

usage: make_knot_table.py KNOTX_BINARY KNOTINFO_CSV OUT_TSV OUT_REFERENCE
"""
import csv
import json
import re
import subprocess
import sys

import sympy


def knotinfo_jones(text):
    """Degree -> coefficient map of a KnotInfo Jones string such as `t^(-2)-t^(-1)+ 1`."""
    t = sympy.Symbol("t")
    shifted = sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"t": t}) * t**50)
    poly = sympy.Poly(shifted, t)
    return {m[0] - 50: int(c) for m, c in zip(poly.monoms(), poly.coeffs())}


def render(terms):
    out = []
    for e in sorted(terms):
        c = terms[e]
        mag = abs(c)
        sign = ("-" if c < 0 else "") if not out else (" - " if c < 0 else " + ")
        if e == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else f"{mag}*") + "t" + ("" if e == 1 else f"^{e}")
        out.append(sign + body)
    return "".join(out) if out else "0"


def main():
    binary, src, out_tsv, out_ref = sys.argv[1:5]
    csv.field_size_limit(10**9)
    rows = list(csv.reader(open(src), delimiter="|"))
    header = {k: i for i, k in enumerate(rows[0])}
    table, reference = [], []
    for row in rows[2:]:
        c = row[header["crossing_number"]]
        if not c.isdigit() or int(c) > 10:
            continue
        name = row[header["name"]]
        alt = "1" if row[header["alternating"]] == "Y" else "0"
        if name == "0_1":
            pd = "O[1]"
        else:
            pd = " ".join(
                f"X[{a},{d},{cc},{b}]" for a, b, cc, d in json.loads(row[header["pd_notation"]])
            )
        jones = subprocess.run(
            [binary, "jones", "--pd", pd], check=True, capture_output=True, text=True
        ).stdout.strip()
        table.append("\t".join([name, c, alt, pd, jones]))
        reference.append("\t".join([name, render(knotinfo_jones(row[header["jones_polynomial"]]))]))
    with open(out_tsv, "w") as f:
        f.write("name\tcrossing_number\talternating\tpd\tjones\n")
        f.write("\n".join(table) + "\n")
    with open(out_ref, "w") as f:
        f.write("# name<TAB>Jones polynomial as published by KnotInfo (may be the mirror)\n")
        f.write("\n".join(reference) + "\n")


if __name__ == "__main__":
    main()
