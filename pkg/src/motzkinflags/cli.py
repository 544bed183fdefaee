"""Command-line interface: ``motzkinflags <verb> ...``.

Exit status is 0 on success, 1 on usage errors and 2 when an input fails
validation (bad word, bad vector, malformed flag-code document).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import bijection, code, motzkin
from .construct import realize
from .errors import MotzkinFlagsError
from .flag import Flag, TypeVector, collapse_points, distance_vector, max_flag_distance
from .gf import check_modulus

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2

MAX_TABLE_N = 20
MAX_ENUM_N = 18


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def parse_vector(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"vector must be comma-separated integers, got {text!r}")


def format_vector(v: Sequence[int]) -> str:
    return ",".join(map(str, v))


# -- document I/O --------------------------------------------------------------


class DocumentError(MotzkinFlagsError):
    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


def _is_matrix(x: Any) -> bool:
    return isinstance(x, list) and all(isinstance(r, list) and all(isinstance(e, int) for e in r) for r in x)


def _check_entries(m: list[list[int]], n: int, q: int) -> None:
    for r in m:
        if len(r) != n:
            raise MotzkinFlagsError(f"row {r} has length {len(r)}, expected {n}")
        for e in r:
            if isinstance(e, bool) or not 0 <= e < q:
                raise MotzkinFlagsError(f"entry {e!r} is not an integer in [0, {q})")


def flag_from_json(obj: Any, t: TypeVector, q: int) -> Flag:
    """A flag given as a list of generator matrices or, for full type, one adapted basis."""
    if _is_matrix(obj) and obj and t.is_full:
        _check_entries(obj, t.n, q)
        return Flag.from_adapted_basis(obj, q)
    if not isinstance(obj, list) or not all(_is_matrix(m) for m in obj):
        raise MotzkinFlagsError("expected a list of matrices (lists of integer rows)")
    for m in obj:
        _check_entries(m, t.n, q)
    return Flag.from_matrices(obj, q, t.n, t.dims)


def flag_to_json(f: Flag) -> list[list[list[int]]]:
    return [s.basis.to_lists() for s in f.subspaces]


def load_code(doc: Any) -> code.FlagCode:
    if not isinstance(doc, dict):
        raise DocumentError(["document must be a JSON object"])
    missing = [k for k in ("n", "q", "type", "flags") if k not in doc]
    if missing:
        raise DocumentError([f"missing key(s): {', '.join(missing)}"])
    n, q, dims, flags = doc["n"], doc["q"], doc["type"], doc["flags"]
    try:
        if not isinstance(n, int) or not isinstance(q, int):
            raise MotzkinFlagsError("n and q must be integers")
        check_modulus(q)
        if not isinstance(dims, list) or not all(isinstance(k, int) for k in dims):
            raise MotzkinFlagsError("type must be a list of integers")
        t = TypeVector(tuple(dims), n)
    except (MotzkinFlagsError, ValueError) as e:
        raise DocumentError([str(e)])
    if not isinstance(flags, list) or not flags:
        raise DocumentError(["flags must be a non-empty list"])
    parsed, problems = [], []
    for k, obj in enumerate(flags, 1):
        try:
            parsed.append(flag_from_json(obj, t, q))
        except (MotzkinFlagsError, ValueError) as e:
            problems.append(f"flag {k}: {e}")
    if problems:
        raise DocumentError(problems)
    try:
        return code.FlagCode(tuple(parsed))
    except MotzkinFlagsError as e:
        raise DocumentError([str(e)])


# -- rendering -----------------------------------------------------------------


def render_table(rows: list[tuple[int, list[str]]], corner: str, ncols: int) -> str:
    header = [corner] + [str(k) for k in range(ncols)]
    body = [[str(n)] + cells + [""] * (ncols - len(cells)) for n, cells in rows]
    widths = [max(len(r[j]) for r in [header] + body) for j in range(ncols + 1)]
    lines = []
    for r in [header] + body:
        lines.append(" ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def area_table(max_n: int) -> str:
    rows = [(n, [str(x) for x in motzkin.area_distribution(n)]) for n in range(max_n + 1)]
    return render_table(rows, "n\\k", motzkin.max_area(max_n) + 1)


def disjoint_table(max_n: int) -> str:
    ncols = motzkin.max_area(max_n) + 1
    rows = []
    for n in range(2, max_n + 1):
        top = n - 1 + motzkin.max_area(n - 2)
        cells = ["-" if d < n - 1 else str(code.disjoint_vector_count(n, d)) for d in range(top + 1)]
        rows.append((n, cells))
    return render_table(rows, "n\\d", ncols)


def draw(w: str) -> str:
    """ASCII picture: '/' for U, '_' for H, '\\' for D, highest row first."""
    hs = motzkin.heights(w)
    top = max(hs) if w else 0
    grid = [[" "] * len(w) for _ in range(top + 1)]
    for i, c in enumerate(w):
        h = hs[i]
        if c == "U":
            grid[h][i] = "/"
        elif c == "H":
            grid[h][i] = "_"
        else:
            grid[h - 1][i] = "\\"
    lines = ["".join(row).rstrip() for row in reversed(grid)]
    while len(lines) > 1 and not lines[0]:
        lines.pop(0)
    return "\n".join(lines)


def analyze_report(c: code.FlagCode, all_pairs: bool = False) -> str:
    t = c.type
    d = code.min_distance(c)
    lines = [
        f"size: {len(c)}",
        f"n: {c.n}",
        f"q: {c.q}",
        f"type: {format_vector(t.dims)}",
        f"min_distance: {d}",
    ]
    if len(c) < 2:
        lines.append("distance_vectors: none (single flag)")
    else:
        vecs = sorted(tuple(v) for v in code.distance_vector_set(c))
        lines.append("distance_vectors: " + " ".join(f"({format_vector(v)})" for v in vecs))
    if all_pairs:
        for (j, k), v in code.pairwise_vectors(c).items():
            lines.append(f"pair {j}-{k}: ({format_vector(v)}) distance {sum(v)}")
    disjoint = code.is_disjoint(c) if len(c) > 1 else False
    lines += [
        f"projected_sizes: {format_vector(code.projected_sizes(c))}",
        f"disjoint: {'yes' if disjoint else 'no'}",
        f"max_flag_distance: {max_flag_distance(t)}",
    ]
    if t.is_full:
        lines.append(f"potential_vector_count: {code.potential_vector_count(c.n, d)}")
        if disjoint:
            lines.append(f"disjoint_vector_count: {code.disjoint_vector_count(c.n, d)}")
    return "\n".join(lines)


def realize_document(n: int, q: int, vector: Sequence[int]) -> dict:
    v = bijection.validate_distance_vector(vector, n)
    pair = realize(v, q)
    got = distance_vector(pair.first, pair.second)
    return {
        "n": n,
        "q": q,
        "type": list(range(1, n)),
        "flags": [flag_to_json(pair.first), flag_to_json(pair.second)],
        "verification": {
            "distance_vector": format_vector(got),
            "flag_distance": sum(got),
            "collapse_points": sorted(collapse_points(pair.first, pair.second)),
        },
    }


# -- commands ------------------------------------------------------------------


def cmd_count(a) -> str:
    simple = {
        "motzkin": motzkin.motzkin_number,
        "catalan": motzkin.catalan_number,
        "elevated": motzkin.elevated_number,
        "riordan": motzkin.riordan_number,
    }
    if a.kind in simple:
        return str(simple[a.kind](a.n))
    if a.d is None:
        raise UsageError(f"count {a.kind} needs --d")
    if a.kind == "area":
        return str(motzkin.area_count(a.n, a.d))
    return str(code.disjoint_vector_count(a.n, a.d))


def cmd_table(a) -> str:
    if a.max_n > MAX_TABLE_N:
        raise UsageError(f"--max-n is limited to {MAX_TABLE_N}")
    return area_table(a.max_n) if a.kind == "area" else disjoint_table(a.max_n)


def cmd_convert(a) -> str:
    if a.direction == "to-path":
        comps = parse_vector(a.payload)
        return bijection.psi(bijection.validate_distance_vector(comps, len(comps) + 1))
    return format_vector(bijection.phi(motzkin.validate_word(a.payload.strip())))


def cmd_path(a) -> str:
    w = motzkin.validate_word(a.word.strip())
    if a.sub == "area":
        return str(motzkin.area(w))
    if a.sub == "strips":
        s = bijection.strip_decomposition(w)
        return " ".join(f"({i},{j}):{j - i}" for i, j in s.pairs)
    if a.sub == "decompose":
        parts = [f"{f}:{ar}" for f, ar in bijection.factor_areas(w)]
        return " ".join(parts + [f"total:{motzkin.area(w)}"])
    return draw(w)


def cmd_enum(a) -> str:
    if a.n > MAX_ENUM_N and a.limit is None:
        raise UsageError(f"--n above {MAX_ENUM_N} requires --limit")
    words = []
    for k, w in enumerate(motzkin.enumerate_paths(a.n, a.path_class, a.area)):
        if a.limit is not None and k >= a.limit:
            break
        words.append(w)
    return "\n".join(words)


def dump_document(doc: dict) -> str:
    """JSON with one matrix row per line; still valid input for ``analyze``."""
    out = ["{"]
    keys = list(doc)
    for k, key in enumerate(keys):
        sep = "," if k < len(keys) - 1 else ""
        val = doc[key]
        if key == "flags":
            out.append(f'  "flags": [')
            for fi, f in enumerate(val):
                out.append("    [")
                for mi, m in enumerate(f):
                    rows = ", ".join(json.dumps(r) for r in m)
                    out.append(f"      [{rows}]" + ("," if mi < len(f) - 1 else ""))
                out.append("    ]" + ("," if fi < len(val) - 1 else ""))
            out.append("  ]" + sep)
        else:
            out.append(f"  {json.dumps(key)}: {json.dumps(val)}{sep}")
    out.append("}")
    return "\n".join(out)


def cmd_realize(a) -> str:
    return dump_document(realize_document(a.n, a.q, parse_vector(a.vector)))


def cmd_analyze(a) -> str:
    try:
        with open(a.document, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {a.document}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise DocumentError([f"not valid JSON: {e}"])
    return analyze_report(load_code(doc), a.all_pairs)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="motzkinflags", description="Distance vectors of full flag codes and Motzkin paths.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("count", help="exact counts")
    s.add_argument("kind", choices=["motzkin", "catalan", "elevated", "riordan", "area", "disjoint"])
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--d", type=_nonneg)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("table", help="T(n,k) or T(n-2,d-n+1) as a table")
    s.add_argument("kind", choices=["area", "disjoint"])
    s.add_argument("--max-n", type=_nonneg, required=True)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("convert", help="distance vector <-> Motzkin word")
    s.add_argument("direction", choices=["to-path", "to-vector"])
    s.add_argument("payload")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("path", help="inspect a Motzkin word")
    s.add_argument("sub", choices=["area", "strips", "decompose", "draw"])
    s.add_argument("word")
    s.set_defaults(func=cmd_path)

    s = sub.add_parser("enum", help="list Motzkin words in U<H<D order")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--class", dest="path_class", choices=[c.value for c in motzkin.PathClass], default="all")
    s.add_argument("--area", type=_nonneg)
    s.add_argument("--limit", type=_nonneg)
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("realize", help="build two full flags with a given distance vector")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--vector", required=True)
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("analyze", help="report on a flag-code JSON document")
    s.add_argument("document")
    s.add_argument("--all-pairs", action="store_true")
    s.set_defaults(func=cmd_analyze)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as e:
        print(f"motzkinflags {args.verb}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as e:
        for msg in e.problems:
            print(f"motzkinflags {args.verb}: invalid document: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except MotzkinFlagsError as e:
        print(f"motzkinflags {args.verb}: invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
