"""CSV and JSON encodings of triangles.

JSON: ``{"family": str, "m": int, "r": "p/q", "entries": [[coeffs...], ...]}``
where ``entries[n][k]`` is a list of ``"p/q"`` coefficient strings in
ascending powers of L.  CSV: header ``n,k,value`` and one row per entry,
the value written as an L-polynomial such as ``2*L^2-3*L+1``.
"""

from __future__ import annotations

import csv
import io
import json

from .exact import LambdaPoly, format_rational, parse_rational


def triangle_to_obj(family: str, m: int, r, rows) -> dict:
    return {
        "family": family,
        "m": m,
        "r": format_rational(r),
        "entries": [[p.to_json() for p in row] for row in rows],
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def triangle_to_json(family: str, m: int, r, rows) -> str:
    return dumps(triangle_to_obj(family, m, r, rows))


def triangle_from_json(text: str) -> tuple[str, int, object, list[list[LambdaPoly]]]:
    obj = json.loads(text)
    missing = {"family", "m", "r", "entries"} - set(obj)
    if missing:
        raise ValueError(f"triangle JSON lacks keys: {', '.join(sorted(missing))}")
    rows = [[LambdaPoly.from_json(c) for c in row] for row in obj["entries"]]
    return obj["family"], int(obj["m"]), parse_rational(str(obj["r"])), rows


def triangle_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "value"])
    for n, row in enumerate(rows):
        for k, p in enumerate(row):
            w.writerow([n, k, str(p)])
    return buf.getvalue()


def triangle_from_csv(text: str) -> list[list[LambdaPoly]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["n", "k", "value"]:
        raise ValueError(f"unexpected CSV header {header}")
    rows: list[list[LambdaPoly]] = []
    for n_s, k_s, value in reader:
        n, k = int(n_s), int(k_s)
        while len(rows) <= n:
            rows.append([])
        row = rows[n]
        while len(row) <= k:
            row.append(LambdaPoly.zero())
        row[k] = LambdaPoly.parse(value)
    return rows
