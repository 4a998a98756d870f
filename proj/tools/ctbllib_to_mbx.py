#!/usr/bin/env python3
"""Convert one ordinary table from a GAP character table library file (.tbl)
into the mbx class-data format.

    ctbllib_to_mbx.py ctomonst.tbl M --out monster.classdata
    ctbllib_to_mbx.py ctomonst.tbl M --values --out monster.table

Without --values only centralizer orders and degrees are written.
"""

import argparse
import re
import sys
from collections import defaultdict
from math import gcd


class Cyc:
    """Formal sum of roots of unity: {(n, k): coefficient}, 0 <= k < n."""

    def __init__(self, terms=None):
        self.terms = defaultdict(int)
        for key, c in (terms or {}).items():
            if c:
                self.terms[key] += c

    @staticmethod
    def lift(x):
        return x if isinstance(x, Cyc) else Cyc({(1, 0): x})

    def __add__(self, other):
        other = Cyc.lift(other)
        out = Cyc(dict(self.terms))
        for key, c in other.terms.items():
            out.terms[key] += c
        return out

    __radd__ = __add__

    def __neg__(self):
        return Cyc({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Cyc.lift(other))

    def __rsub__(self, other):
        return Cyc.lift(other) - self

    def __mul__(self, other):
        other = Cyc.lift(other)
        out = Cyc()
        for (n1, k1), c1 in self.terms.items():
            for (n2, k2), c2 in other.terms.items():
                n = n1 * n2 // gcd(n1, n2)
                k = (k1 * (n // n1) + k2 * (n // n2)) % n
                out.terms[(n, k) if k else (1, 0)] += c1 * c2
        return out

    __rmul__ = __mul__

    def __pow__(self, e):
        if len(self.terms) != 1:
            raise ValueError("power of a sum")
        (n, k), c = next(iter(self.terms.items()))
        if c != 1:
            raise ValueError("power of a scaled root")
        k = (k * e) % n
        return Cyc({(n, k) if k else (1, 0): 1})

    def galois(self, j):
        out = Cyc()
        for (n, k), c in self.terms.items():
            k = (k * j) % n
            out.terms[(n, k) if k else (1, 0)] += c
        return out

    def text(self):
        parts = [(key, c) for key, c in sorted(self.terms.items()) if c]
        if not parts:
            return "0"
        if len(parts) == 1 and parts[0][0] == (1, 0):
            return str(parts[0][1])
        out = ""
        for (n, k), c in parts:
            term = str(abs(c)) if (n, k) == (1, 0) else f"{abs(c)}*z({n},{k})"
            out += ("-" if c < 0 else ("+" if out else "")) + term
        return out

    def rational(self):
        nonzero = {key: c for key, c in self.terms.items() if c}
        if set(nonzero) - {(1, 0)}:
            raise ValueError("irrational value where an integer is required")
        return nonzero.get((1, 0), 0)


def E(n):
    return Cyc({(1, 0): 1}) if n == 1 else Cyc({(n, 1): 1})


GALOIS = "GALOIS"


def read_mot(path, name):
    text = open(path).read()
    start = text.find(f'MOT("{name}",')
    if start < 0:
        sys.exit(f"table {name} not found in {path}")
    # Arguments of MOT(...) up to the matching parenthesis.
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                end = i
                break
    body = text[start + len("MOT(") : end]
    body = body.replace("\\\n", "").replace("\n", "")
    return body


def split_top(body):
    out, depth, cur, quoted = [], 0, "", False
    for ch in body:
        if ch == '"':
            quoted = not quoted
        if not quoted:
            if ch in "[(":
                depth += 1
            elif ch in "])":
                depth -= 1
            elif ch == "," and depth == 0:
                out.append(cur)
                cur = ""
                continue
        cur += ch
    out.append(cur)
    return out


def evaluate(expr):
    expr = expr.replace("^", "**")
    if re.search(r"[^0-9E()\[\]*+\-, GALOIS]", expr):
        raise ValueError("unexpected token in table data")
    return eval(expr, {"__builtins__": {}}, {"E": E, "GALOIS": GALOIS})


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("tbl")
    ap.add_argument("name")
    ap.add_argument("--values", action="store_true", help="also write every character value")
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    fields = split_top(read_mot(args.tbl, args.name))
    centralizers = evaluate(fields[2])
    rows = evaluate(fields[4])
    k = len(centralizers)
    values = []
    for row in rows:
        if row[0] == GALOIS:
            source, j = row[1]
            values.append([Cyc.lift(v).galois(j) for v in values[source - 1]])
        else:
            values.append([Cyc.lift(v) for v in row])
    if len(values) != k:
        sys.exit(f"expected {k} characters, found {len(values)}")
    degrees = [v[0].rational() for v in values]

    lines = [f"# {args.name}, converted from the GAP character table library",
             f"group {args.name}", f"order {centralizers[0]}", f"classes {k}"]

    def wrapped(keyword, items):
        out, cur = [], keyword
        for item in items:
            if len(cur) + 1 + len(item) > 100:
                out.append(cur)
                cur = " "
            cur += " " + item
        out.append(cur)
        return out

    lines += wrapped("centralizers", [str(z) for z in centralizers])
    lines += wrapped("degrees", [str(d) for d in degrees])
    if args.values:
        for i, row in enumerate(values):
            lines.append(f"char {i}: " + " ".join(v.text() for v in row))
    data = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(data)
    else:
        open(args.out, "w").write(data)


if __name__ == "__main__":
    main()
