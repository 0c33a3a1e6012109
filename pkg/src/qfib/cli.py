"""Command-line interface.

Verbs: table (print a weighted tiling sum), enumerate (list combinatorial
objects), verify (run identity checks over a grid), det (exact versus closed
form minor determinant), validate-scheme (shift coherence of a scheme).

Exit codes: 0 success / all checks pass, 1 a check found a counterexample,
2 usage error or a desk-scale guard refused the request.  Output is
byte-identical across runs for identical flags; --format json switches every
verb to the canonical JSON forms.

Scheme flags accept a built-in statistic pair (inv-lp, inv-rlp, inv-prlp,
maj-lp, maj-rlp, maj-prlp, rb-lpi) or generic:A,B,C where each component is
an integer expression in the tile length i (operators + - * / and
parentheses, division must be exact) or a bracketed value table like
[0 1 3] with one entry per tile length.  QFIB_SEED overrides --seed, and
setting QFIB_CORRUPT_SCHEMES=1 deliberately breaks the shift coherence of
the --random-schemes schemes (a falsifiability hook for testing the
verifiers themselves).
"""

import argparse
import json
import os
import sys

from . import identities, lattice
from .errors import QfibError
from .layered import (
    SCHEMED_PAIRS,
    StatPair,
    builtin_scheme,
    enumerate_family,
    format_object,
    object_statistic,
)
from .polyring import Poly
from .report import IdentityReport
from .tiling import (
    WeightScheme,
    corrupted_scheme,
    enumerate_tilings,
    random_scheme,
    validate_weight_scheme,
    weighted_sum_enumerative,
)

_MAX_BOARD = 20
_MAX_DET_K = 6

_BUILTIN_NAMES = tuple(str(p) for p in SCHEMED_PAIRS)


# ----------------------------------------------------------------------
# the tiny arithmetic grammar over the tile length i


def _parse_expr(text: str):
    """Compile an integer expression in the variable i into a callable."""
    s = text.strip()
    pos = 0

    def fail(msg):
        raise QfibError(f"bad scheme expression {text!r}: {msg}")

    def skip():
        nonlocal pos
        while pos < len(s) and s[pos] == " ":
            pos += 1

    def atom():
        nonlocal pos
        skip()
        if pos >= len(s):
            fail("unexpected end")
        ch = s[pos]
        if ch == "(":
            pos += 1
            node = expr()
            skip()
            if pos >= len(s) or s[pos] != ")":
                fail("missing ')'")
            pos += 1
            return node
        if ch == "-":
            pos += 1
            node = atom()
            return lambda i, f=node: -f(i)
        if ch == "i":
            pos += 1
            return lambda i: i
        if ch.isdigit():
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            value = int(s[start:pos])
            return lambda i: value
        fail(f"unexpected {ch!r}")

    def product():
        nonlocal pos
        node = atom()
        while True:
            skip()
            if pos < len(s) and s[pos] == "*":
                pos += 1
                rhs = atom()
                node = lambda i, f=node, g=rhs: f(i) * g(i)
            elif pos < len(s) and s[pos] == "/":
                pos += 1
                rhs = atom()

                def divide(i, f=node, g=rhs):
                    num, den = f(i), g(i)
                    if den == 0 or num % den:
                        raise QfibError(
                            f"scheme expression {text!r} does not divide exactly at i={i}"
                        )
                    return num // den

                node = divide
            else:
                return node

    def expr():
        nonlocal pos
        node = product()
        while True:
            skip()
            if pos < len(s) and s[pos] in "+-":
                op = s[pos]
                pos += 1
                rhs = product()
                if op == "+":
                    node = lambda i, f=node, g=rhs: f(i) + g(i)
                else:
                    node = lambda i, f=node, g=rhs: f(i) - g(i)
            else:
                return node

    node = expr()
    skip()
    if pos != len(s):
        fail(f"trailing input at {pos}")
    return node


def _split_components(text: str) -> list[str]:
    """Split on commas that are not inside brackets."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def _component_fn(component: str, k: int, label: str):
    body = component.strip()
    prefix = f"{label}="
    if body.upper().startswith(prefix):
        body = body[len(prefix):].strip()
    if body.startswith("["):
        if not body.endswith("]"):
            raise QfibError(f"unclosed value table in {component!r}")
        values = [int(v) for v in body[1:-1].split()]
        if len(values) != k:
            raise QfibError(
                f"value table {component!r} needs {k} entries, got {len(values)}"
            )
        return lambda i: values[i - 1]
    return _parse_expr(body)


def _parse_scheme(text: str, k: int) -> WeightScheme:
    if text in _BUILTIN_NAMES:
        return builtin_scheme(StatPair.parse(text), k)
    if text.startswith("generic:"):
        components = _split_components(text[len("generic:"):])
        if len(components) != 3:
            raise QfibError(
                f"generic scheme needs three comma-separated components, got {text!r}"
            )
        fns = [
            _component_fn(comp, k, label)
            for comp, label in zip(components, "ABC")
        ]
        return WeightScheme(k, *fns, name=text)
    raise QfibError(
        f"unknown scheme {text!r}: expected one of {', '.join(_BUILTIN_NAMES)} "
        "or generic:A,B,C"
    )


def _resolve_schemes(args, k: int) -> list[WeightScheme]:
    schemes = []
    if getattr(args, "stat", None):
        schemes.append(_parse_scheme(args.stat, k))
    count = getattr(args, "random_schemes", 0) or 0
    if count:
        seed = int(os.environ.get("QFIB_SEED", args.seed))
        factory = (
            corrupted_scheme
            if os.environ.get("QFIB_CORRUPT_SCHEMES")
            else random_scheme
        )
        schemes.extend(
            factory(k, seed + idx, name=f"{factory.__name__.split('_')[0]}-{seed + idx}")
            for idx in range(count)
        )
    if not schemes:
        schemes = [builtin_scheme(p, k) for p in SCHEMED_PAIRS]
    return schemes


# ----------------------------------------------------------------------
# verbs


def _print_poly(p: Poly, fmt: str):
    if fmt == "json":
        print(json.dumps(p.to_json_dict()))
    else:
        print(p.format())


def _cmd_table(args) -> int:
    if args.n < 0 or args.n > _MAX_BOARD:
        raise QfibError(f"table is desk-scale: need 0 <= n <= {_MAX_BOARD}")
    before, after = args.append
    scheme = _parse_scheme(args.stat, args.k)
    poly = weighted_sum_enumerative(args.n, args.k, scheme, (before, after))
    _print_poly(poly, args.format)
    return 0


_OBJECT_STATS = {
    "lp": ("inv", "maj"),
    "rlp": ("inv", "maj"),
    "prlp": ("inv", "maj"),
    "lpi": ("rb", "ls"),
    "tilings": (),
}


def _cmd_enumerate(args) -> int:
    if args.n < 0 or args.n > _MAX_BOARD:
        raise QfibError(f"enumerate is desk-scale: need 0 <= n <= {_MAX_BOARD}")
    stat = args.with_stat
    if stat and stat not in _OBJECT_STATS[args.object]:
        raise QfibError(f"statistic {stat!r} is not defined for {args.object}")
    rows = []
    if args.object == "tilings":
        for t in enumerate_tilings(args.n, args.k):
            rows.append((",".join(str(p) for p in t.parts), None))
    else:
        pair = StatPair(stat, args.object) if stat else None
        for obj in enumerate_family(args.object, args.n, args.k):
            value = object_statistic(pair, obj) if pair else None
            rows.append((format_object(args.object, obj), value))
    if args.format == "json":
        payload = [
            {"object": text} if value is None else {"object": text, "stat": value}
            for text, value in rows
        ]
        print(json.dumps(payload))
    else:
        for text, value in rows:
            print(text if value is None else f"{text} {value}")
    return 0


def _verify_reports(args, schemes):
    identity = args.identity
    plans = []
    if identity in ("recursion", "all"):
        plans.append("recursion")
    if identity in ("convolution", "all"):
        plans.append("convolution")
    if identity in ("kreduce", "all"):
        plans.append("kreduce")
    if identity in ("det", "all"):
        plans.append("det")
    reports = []
    for w in schemes:
        for plan in plans:
            if plan == "recursion":
                reports.extend(
                    identities.verify_recursion(n, args.k, w)
                    for n in range(1, args.max_n + 1)
                )
            elif plan == "convolution":
                reports.extend(
                    identities.verify_convolution(m, n, args.k, w)
                    for m in range(1, args.max_n + 1)
                    for n in range(1, args.max_n + 1)
                )
            elif plan == "kreduce" and args.k >= 2:
                reports.extend(
                    identities.verify_k_reduction(n, args.k, w)
                    for n in range(1, args.max_n + 1)
                )
            elif plan == "det":
                for n in range(1, args.max_n + 1):
                    spec = lattice.MinorSpec(n, args.k)
                    reports.append(
                        IdentityReport.compare(
                            "det",
                            {"n": n, "k": args.k, "scheme": w.name},
                            lattice.determinant(lattice.build_minor(spec, w)),
                            lattice.closed_form_det(spec, w),
                        )
                    )
        if identity == "all" and w.name in _BUILTIN_NAMES:
            reports.extend(
                identities.verify_specializations(w.name, args.max_n, args.k)
            )
    return reports


def _cmd_verify(args) -> int:
    if args.max_n < 1:
        raise QfibError("need --max-n >= 1")
    if args.identity == "kreduce" and args.k < 2:
        raise QfibError("kreduce needs --k >= 2")
    if args.identity in ("convolution", "all") and 2 * args.max_n > _MAX_BOARD:
        raise QfibError(
            f"convolution grid is desk-scale: need --max-n <= {_MAX_BOARD // 2}"
        )
    if args.max_n > _MAX_BOARD:
        raise QfibError(f"verify is desk-scale: need --max-n <= {_MAX_BOARD}")
    if args.identity in ("det", "all"):
        if args.k > _MAX_DET_K:
            raise QfibError(f"determinants are limited to k <= {_MAX_DET_K}")
        if args.max_n + 2 * args.k - 2 > _MAX_BOARD:
            raise QfibError(
                "determinant grid is desk-scale: need max-n + 2k - 2 <= "
                f"{_MAX_BOARD}"
            )
    schemes = _resolve_schemes(args, args.k)
    reports = _verify_reports(args, schemes)
    reports.sort(key=lambda r: (r.identity, r.describe()))
    for r in reports:
        if args.format == "json":
            print(json.dumps(r.to_json_dict()))
        else:
            print(r.describe())
    failures = [r for r in reports if not r.passed]
    if failures:
        first = failures[0]
        print(
            f"verification failed: {first.describe()}",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_det(args) -> int:
    if args.k < 1 or args.k > _MAX_DET_K:
        raise QfibError(f"det is limited to 1 <= k <= {_MAX_DET_K}")
    if args.n < 1 or args.n + 2 * args.k - 2 > _MAX_BOARD:
        raise QfibError(
            f"det is desk-scale: need n >= 1 and n + 2k - 2 <= {_MAX_BOARD}"
        )
    scheme = _parse_scheme(args.stat, args.k)
    spec = lattice.MinorSpec(args.n, args.k)
    exact = closed = None
    if args.show in ("exact", "both"):
        exact = lattice.determinant(lattice.build_minor(spec, scheme))
    if args.show in ("closed", "both"):
        closed = lattice.closed_form_det(spec, scheme)
    if args.format == "json":
        payload = {"n": args.n, "k": args.k, "scheme": scheme.name}
        if exact is not None:
            payload["exact"] = exact.to_json_dict()
        if closed is not None:
            payload["closed"] = closed.to_json_dict()
        if exact is not None and closed is not None:
            payload["match"] = exact == closed
        print(json.dumps(payload))
    else:
        if exact is not None:
            print(exact.format())
        if closed is not None:
            print(closed.format())
    if exact is not None and closed is not None and exact != closed:
        print("determinant mismatch: exact != closed form", file=sys.stderr)
        return 1
    return 0


def _cmd_validate_scheme(args) -> int:
    if args.max_n < 1:
        raise QfibError("need --max-n >= 1")
    schemes = _resolve_schemes(args, args.k)
    bad = False
    for w in schemes:
        result = validate_weight_scheme(w, args.max_n)
        print(f"scheme {w.name}: {result}")
        bad = bad or not result.ok
    return 1 if bad else 0


# ----------------------------------------------------------------------
# argument plumbing


def _add_common(sub, *, n=False, k=True, stat=False, fmt=True):
    if n:
        sub.add_argument("--n", type=int, required=True, help="board length")
    if k:
        sub.add_argument("--k", type=int, required=True, help="maximum tile length")
    if stat:
        sub.add_argument(
            "--stat",
            required=stat == "required",
            help="statistic pair or generic:A,B,C scheme",
        )
    if fmt:
        sub.add_argument(
            "--format", choices=("text", "json"), default="text", help="output form"
        )


def _append_pair(text: str):
    before, sep, after = text.partition(",")
    if not sep:
        raise argparse.ArgumentTypeError("expected BEFORE,AFTER")
    try:
        pair = (int(before), int(after))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if pair[0] < 0 or pair[1] < 0:
        raise argparse.ArgumentTypeError("append lengths must be nonnegative")
    return pair


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfib",
        description="Exact q-analogues of k-Fibonacci numbers from weighted tilings.",
        epilog=(
            "Environment: QFIB_SEED overrides --seed; QFIB_BACKEND selects the "
            "term kernels (auto/python/cython); QFIB_CORRUPT_SCHEMES=1 corrupts "
            "--random-schemes schemes to exercise the verifiers."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("table", help="print a weighted tiling sum")
    _add_common(p, n=True, stat="required")
    p.add_argument(
        "--append",
        type=_append_pair,
        default=(0, 0),
        metavar="BEFORE,AFTER",
        help="untiled board lengths appended before and after",
    )
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("enumerate", help="list tilings or layered objects")
    _add_common(p, n=True)
    p.add_argument(
        "--object",
        required=True,
        choices=("tilings", "lp", "rlp", "prlp", "lpi"),
    )
    p.add_argument(
        "--with-stat",
        choices=("inv", "maj", "rb", "ls"),
        help="annotate each object with a statistic",
    )
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="verify identities over a grid")
    _add_common(p, stat=True)
    p.add_argument(
        "--identity",
        required=True,
        choices=("recursion", "convolution", "kreduce", "det", "all"),
    )
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--random-schemes", type=int, default=0, metavar="R")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("det", help="minor determinant, exact and closed form")
    _add_common(p, n=True, stat="required")
    p.add_argument("--show", choices=("closed", "exact", "both"), default="both")
    p.set_defaults(fn=_cmd_det)

    p = sub.add_parser("validate-scheme", help="check shift coherence of a scheme")
    _add_common(p, stat=True, fmt=False)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--random-schemes", type=int, default=0, metavar="R")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_validate_scheme)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except QfibError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
