"""Command-line front end: parse ideal files, run analyses, print verdicts.

Input grammar (whitespace insignificant, ``#`` starts a line comment)::

    ring <name>+ ; char <nat> ; ideal <mono> (, <mono>)* ;
    mono = term ('*' term)*
    term = name ('^' nat)?

Variables are bound positionally: the declared order is x_1 .. x_n, which
is also the lex order x_1 > ... > x_n.

Exit codes: 0 ok, 1 usage/parse error, 2 precondition refused,
3 fuzz counterexample.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import NamedTuple, Sequence

from .betti import BettiTable, ek_betti, last_betti_column, socle_basis
from .criteria import cwl_wlp_criterion, gotzmann_wlp_criterion, lex_slp_criterion
from .generators import random_lexsegment, random_stable
from .hilbert import hilbert_function, hilbert_s, macaulay_lower
from .lexsegment import is_gotzmann, lex_ideal_of
from .linalg import det_gf, det_q
from .monomials import (
    Monomial,
    MonomialIdeal,
    PreconditionError,
    Ring,
    _ideal_part,
    is_borel_fixed,
    is_lexsegment,
    is_m_primary,
    is_prime,
    is_stable,
    is_strongly_stable,
    minimalize,
)
from .oracle import (
    STRONG,
    WEAK,
    FieldSpec,
    LefschetzVerdict,
    LinearForm,
    decide_lefschetz,
    is_lefschetz_element,
    mult_matrix,
)

OK, USAGE_ERROR, REFUSED, COUNTEREXAMPLE = 0, 1, 2, 3


class IdealSyntaxError(Exception):
    """Parse error with source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class _Token(NamedTuple):
    kind: str  # name | nat | punct | eof
    value: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|\d+|[;,^*]|\S")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for m in _TOKEN_RE.finditer(body):
            tok = m.group(0)
            col = m.start() + 1
            if tok[0].isalpha() or tok[0] == "_":
                kind = "name"
            elif tok.isdigit():
                kind = "nat"
            elif tok in ";,^*":
                kind = "punct"
            else:
                raise IdealSyntaxError(f"unexpected character {tok!r}", lineno, col)
            tokens.append(_Token(kind, tok, lineno, col))
    last = tokens[-1] if tokens else _Token("eof", "", 1, 1)
    tokens.append(_Token("eof", "", last.line, last.col + len(last.value)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise IdealSyntaxError(message, tok.line, tok.col)

    def expect(self, kind: str, value: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind or (value is not None and tok.value != value):
            want = value if value is not None else kind
            self.fail(f"expected {want!r}, got {tok.value!r}")
        return self.next()

    def parse(self) -> tuple[Ring, MonomialIdeal]:
        self.expect("name", "ring")
        names: list[str] = []
        while self.peek().kind == "name":
            tok = self.next()
            if tok.value in names:
                self.fail(f"duplicate variable {tok.value!r}", tok)
            names.append(tok.value)
        if not names:
            self.fail("expected at least one variable name")
        self.expect("punct", ";")

        self.expect("name", "char")
        chartok = self.expect("nat")
        char = int(chartok.value)
        if char != 0 and not is_prime(char):
            self.fail(f"characteristic must be 0 or a prime, got {char}", chartok)
        self.expect("punct", ";")
        ring = Ring(len(names), char, tuple(names))

        self.expect("name", "ideal")
        if self.peek().kind == "punct" and self.peek().value == ";":
            self.fail("empty generator list")
        index = {name: i for i, name in enumerate(names)}
        gens = [self._monomial(ring, index)]
        while self.peek().value == ",":
            self.next()
            gens.append(self._monomial(ring, index))
        self.expect("punct", ";")
        if self.peek().kind != "eof":
            self.fail(f"trailing input {self.peek().value!r}")
        return ring, minimalize(gens, ring)

    def _monomial(self, ring: Ring, index: dict[str, int]) -> Monomial:
        exps = [0] * ring.n
        start = self.peek()
        while True:
            tok = self.expect("name")
            if tok.value not in index:
                self.fail(f"unknown variable {tok.value!r}", tok)
            exp = 1
            if self.peek().value == "^":
                self.next()
                etok = self.peek()
                if etok.kind != "nat":
                    self.fail(f"malformed exponent after '^': got {etok.value!r}", etok)
                self.next()
                exp = int(etok.value)
            exps[index[tok.value]] += exp
            if self.peek().value == "*":
                self.next()
                continue
            break
        if not any(exps):
            self.fail("constant generator (degree 0) is not allowed", start)
        return Monomial(tuple(exps))


def parse_ideal_text(text: str) -> tuple[Ring, MonomialIdeal]:
    """Parse the ideal-file grammar into a ring and a minimalized ideal."""
    return _Parser(text).parse()


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(m.exponents, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    """Render ring and ideal in the input grammar (parse/print round trip)."""
    names = ideal.ring.variable_names
    gens = ", ".join(format_monomial(g, names) for g in ideal.gens)
    return f"ring {' '.join(names)}; char {ideal.ring.char}; ideal {gens};"


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_ideal(args) -> tuple[Ring, MonomialIdeal]:
    ring, ideal = parse_ideal_text(_read_source(args.file))
    if getattr(args, "char", None) is not None:
        ring = Ring(ring.n, args.char, ring.names)
        ideal = MonomialIdeal(ring, ideal.gens)
    return ring, ideal


def _field_for(args, ring: Ring) -> FieldSpec:
    raw = getattr(args, "field", None)
    if raw is None:
        return FieldSpec(ring.char)
    if raw.lower() in ("q", "qq"):
        return FieldSpec.rationals()
    m = re.fullmatch(r"gf:(\d+)", raw.lower())
    if not m:
        raise argparse.ArgumentTypeError(f"field must be 'q' or 'gf:<p>', got {raw!r}")
    return FieldSpec.gf(int(m.group(1)))


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------- commands


def cmd_analyze(args) -> int:
    ring, ideal = _load_ideal(args)
    names = ring.variable_names
    print(f"ring: {' '.join(names)}  (n={ring.n}, char={ring.char})")
    gens = ", ".join(format_monomial(g, names) for g in ideal.gens)
    print(f"generators ({len(ideal.gens)}): {gens}")
    primary = is_m_primary(ideal)
    print(f"m-primary:       {_yesno(primary)}")
    print(f"stable:          {_yesno(is_stable(ideal))}")
    print(f"strongly stable: {_yesno(is_strongly_stable(ideal))}")
    print(f"borel-fixed:     {_yesno(is_borel_fixed(ideal))}")
    print(f"lexsegment:      {_yesno(is_lexsegment(ideal))}")
    if primary:
        print(f"gotzmann:        {_yesno(is_gotzmann(ideal))}")
        h = hilbert_function(ideal)
        print(f"hilbert:         {' '.join(str(v) for v in h)}")
        dims = socle_basis(ideal).dims
        socle = " ".join(f"{j}:{dims[j]}" for j in sorted(dims))
        print(f"socle dims:      {socle}")
    else:
        print("gotzmann:        n/a (not m-primary)")
        print("hilbert:         n/a (not m-primary)")
        print("socle dims:      n/a (not m-primary)")
    return OK


def _render_betti(table: BettiTable) -> str:
    shifts = table.shifts()
    cells = [[str(v) if (v := table.entry(i, i + s)) else "-" for i in range(table.n)] for s in shifts]
    width = max([len(str(s)) for s in shifts] + [len(c) for row in cells for c in row] + [len(str(table.n - 1))])
    header = " " * (width + 2) + " ".join(f"{i:>{width}}" for i in range(table.n))
    lines = [header]
    for s, row in zip(shifts, cells):
        lines.append(f"{s:>{width}}: " + " ".join(f"{c:>{width}}" for c in row))
    return "\n".join(lines)


def cmd_betti(args) -> int:
    ring, ideal = _load_ideal(args)
    if not is_stable(ideal):
        print("cannot apply the generator formula: the ideal is not stable")
        if is_m_primary(ideal):
            print("socle route for the last column (valid for any m-primary ideal):")
            for j, v in sorted(last_betti_column(ideal).items()):
                print(f"  beta_{{{ring.n - 1},{ring.n + j}}} = {v}")
        return REFUSED
    table = ek_betti(ideal)
    print("Betti diagram (rows: shift j; columns: homological index i):")
    print(_render_betti(table))
    return OK


def cmd_hilbert(args) -> int:
    _, ideal = _load_ideal(args)
    h = hilbert_function(ideal)
    print(" ".join(str(v) for v in h))
    return OK


def cmd_lex(args) -> int:
    _, ideal = _load_ideal(args)
    print(format_ideal(lex_ideal_of(ideal)))
    return OK


def _parse_element(raw: str, ring: Ring) -> LinearForm:
    try:
        coeffs = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"element must be comma-separated integers, got {raw!r}")
    if len(coeffs) != ring.n:
        raise argparse.ArgumentTypeError(
            f"element has {len(coeffs)} coefficients, ring has {ring.n} variables"
        )
    return LinearForm(coeffs)


def _print_evidence(verdict: LefschetzVerdict) -> None:
    if not verdict.evidence:
        print("evidence: none needed (no nontrivial multiplication maps)")
        return
    print("evidence (j k rank required):")
    for ev in verdict.evidence:
        mark = "" if ev.maximal else "   <- not maximal"
        print(f"  {ev.j} {ev.k} {ev.rank} {ev.required}{mark}")


def _witness_failure_note(ideal, form, field, verdict) -> None:
    fail = verdict.first_failure
    if fail is None:
        return
    print(f"fails at j={fail.j} (k={fail.k}): rank {fail.rank} < required {fail.required}")
    rows = mult_matrix(ideal, form, fail.j, fail.k, field)
    if rows and len(rows) == len(rows[0]):
        det = det_q(rows) if field.is_rationals else det_gf(rows, field.char)
        over = "" if field.is_rationals else f" (mod {field.char})"
        print(f"note: square map at j={fail.j} is singular, det = {det}{over}")


def _criteria_sections(ideal, mode: str, verdict: LefschetzVerdict) -> list[str]:
    lines = []

    def banner(report_holds: bool) -> str:
        return "AGREE" if report_holds == verdict.holds else "DISAGREE"

    if mode == WEAK and is_stable(ideal) and is_m_primary(ideal):
        for which in ("b", "c", "star"):
            rep = cwl_wlp_criterion(ideal, which)
            lines.append(
                f"  {rep.criterion} (d={rep.d}): {'holds' if rep.holds else 'fails'}"
                f" -> {banner(rep.holds)}"
            )
    if is_m_primary(ideal):
        h = hilbert_function(ideal)
        if mode == WEAK and is_gotzmann(ideal):
            rep = gotzmann_wlp_criterion(h)
            lines.append(
                f"  gotzmann_wlp (t={rep.t}): {'holds' if rep.holds else 'fails'}"
                f" -> {banner(rep.holds)}"
            )
        if mode == STRONG and is_lexsegment(ideal):
            rep = lex_slp_criterion(h)
            lines.append(
                f"  lex_slp (t={rep.t}): {'holds' if rep.holds else 'fails'}"
                f" -> {banner(rep.holds)}"
            )
    return lines


def _cmd_lefschetz(args, mode: str) -> int:
    ring, ideal = _load_ideal(args)
    field = _field_for(args, ring)
    label = "weak" if mode == WEAK else "strong"
    if args.element is not None:
        form = _parse_element(args.element, ring)
        verdict = is_lefschetz_element(ideal, form, mode, field)
        shown = form.render(ring.variable_names)
        if verdict.holds:
            print(f"element {shown} over {field}: {label} Lefschetz element "
                  "(all maps have maximal rank)")
        else:
            print(f"element {shown} over {field}: NOT a {label} Lefschetz element")
            _witness_failure_note(ideal, form, field, verdict)
        _print_evidence(verdict)
        return OK
    verdict = decide_lefschetz(ideal, mode, field, trials=args.trials, seed=args.seed)
    print(f"{label} Lefschetz property over {field}: {'HOLDS' if verdict.holds else 'FAILS'}")
    print(f"strategy: {verdict.strategy}   confidence: {verdict.confidence}"
          + (f" ({verdict.trials} trials)" if verdict.confidence == "probabilistic" else ""))
    if verdict.element is not None:
        print(f"witness: {verdict.element.render(ring.variable_names)}")
    fail = verdict.first_failure
    if fail is not None:
        print(f"first failure: j={fail.j} k={fail.k} (rank {fail.rank} < {fail.required})")
    _print_evidence(verdict)
    criteria = _criteria_sections(ideal, mode, verdict)
    if criteria:
        print("criteria:")
        for line in criteria:
            print(line)
    return OK


def cmd_wlp(args) -> int:
    return _cmd_lefschetz(args, WEAK)


def cmd_slp(args) -> int:
    return _cmd_lefschetz(args, STRONG)


def _fuzz_stable_instance(ideal: MonomialIdeal, field: FieldSpec) -> list[str]:
    problems = []
    if not (is_stable(ideal) and is_m_primary(ideal)):
        problems.append("generator broke its contract: output not stable m-primary")
        return problems
    oracle = decide_lefschetz(ideal, WEAK, field).holds
    for which in ("b", "c", "star"):
        rep = cwl_wlp_criterion(ideal, which)
        if rep.holds != oracle:
            problems.append(f"criterion {rep.criterion} holds={rep.holds} but oracle weak={oracle}")
    table = ek_betti(ideal)
    if table.last_column() != last_betti_column(ideal):
        problems.append("generator-formula last column disagrees with the socle")
    h = hilbert_function(ideal)
    n = ideal.ring.n
    for t in range(h.socle_degree + n + 2):
        total = hilbert_s(n, t) - sum(
            (-1) ** i * v * hilbert_s(n, t - j) for (i, j), v in table.entries.items()
        )
        if total != h[t]:
            problems.append(f"Betti/Hilbert alternating identity fails at degree {t}")
            break
    return problems


def _fuzz_lex_instance(ideal: MonomialIdeal, field: FieldSpec, mode: str) -> list[str]:
    problems = []
    if not (is_lexsegment(ideal) and is_m_primary(ideal)):
        problems.append("generator broke its contract: output not a lexsegment ideal")
        return problems
    h = hilbert_function(ideal)
    if mode in (WEAK, "both"):
        rep = gotzmann_wlp_criterion(h)
        oracle = decide_lefschetz(ideal, WEAK, field).holds
        if rep.holds != oracle:
            problems.append(f"gotzmann_wlp holds={rep.holds} but oracle weak={oracle}")
    if mode in (STRONG, "both"):
        rep = lex_slp_criterion(h)
        oracle = decide_lefschetz(ideal, STRONG, field).holds
        if rep.holds != oracle:
            problems.append(f"lex_slp holds={rep.holds} but oracle strong={oracle}")
    n = ideal.ring.n
    for j in range(1, h.socle_degree + 2):
        slice_ = _ideal_part(ideal, j)
        if not slice_:
            continue
        count = sum(1 for e in slice_ if e[n - 1] > 0)
        if count != hilbert_s(n, j - 1) - macaulay_lower(h[j], j):
            problems.append(f"last-variable count identity fails at degree {j}")
    return problems


def cmd_fuzz(args) -> int:
    ring = Ring(args.n)
    field = FieldSpec.rationals()
    print(f"fuzz: n={args.n} max_deg={args.max_deg} count={args.count} "
          f"seed={args.seed} mode={args.mode}")
    for i in range(args.count):
        seed = args.seed + i
        if args.mode in (WEAK, "both"):
            ideal = random_stable(ring, args.max_deg, seed=seed)
            problems = _fuzz_stable_instance(ideal, field)
            if problems:
                print(f"COUNTEREXAMPLE (stable instance {i}, seed {seed}):")
                print(format_ideal(ideal))
                for p in problems:
                    print(f"  {p}")
                return COUNTEREXAMPLE
        ideal = random_lexsegment(ring, args.max_deg, seed=seed)
        problems = _fuzz_lex_instance(ideal, field, args.mode)
        if problems:
            print(f"COUNTEREXAMPLE (lexsegment instance {i}, seed {seed}):")
            print(format_ideal(ideal))
            for p in problems:
                print(f"  {p}")
            return COUNTEREXAMPLE
    if args.mode in (WEAK, "both"):
        print(f"stable instances: {args.count} ok "
              "(cwl_b/cwl_c/star agree with the oracle; Betti cross-checks pass)")
    print(f"lexsegment instances: {args.count} ok "
          "(Hilbert criteria agree with the oracle; last-variable counts match)")
    print("all checks passed")
    return OK


# ---------------------------------------------------------------- wiring


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="lefschetz",
        description="Weak/strong Lefschetz properties of m-primary monomial ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file_cmd(name: str, func, help_: str):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="ideal file (or '-' for stdin)")
        p.add_argument("--char", type=int, default=None,
                       help="override the file's coefficient characteristic")
        p.set_defaults(func=func)
        return p

    add_file_cmd("analyze", cmd_analyze, "class flags, Hilbert function and socle")
    add_file_cmd("betti", cmd_betti, "Betti diagram of a stable ideal")
    add_file_cmd("hilbert", cmd_hilbert, "Hilbert function of the quotient")
    add_file_cmd("lex", cmd_lex, "lexsegment ideal with the same Hilbert function")
    for name, func, help_ in (
        ("wlp", cmd_wlp, "decide the weak Lefschetz property"),
        ("slp", cmd_slp, "decide the strong Lefschetz property"),
    ):
        p = add_file_cmd(name, func, help_)
        p.add_argument("--field", default=None, help="q or gf:<p> (default: the ring's characteristic)")
        p.add_argument("--element", default=None,
                       help="comma-separated coefficients of a specific linear form")
        p.add_argument("--trials", type=int, default=8,
                       help="random trials for non-stable input (default 8)")
        p.add_argument("--seed", type=int, default=0, help="seed for random trials")

    p = sub.add_parser("fuzz", help="randomized criteria-vs-oracle equivalence suite")
    p.add_argument("--n", type=int, default=3, help="number of variables")
    p.add_argument("--max-deg", type=int, default=4, help="maximum seed degree")
    p.add_argument("--count", type=int, default=50, help="instances per class")
    p.add_argument("--seed", type=int, default=0, help="base seed")
    p.add_argument("--mode", choices=(WEAK, STRONG, "both"), default="both",
                   help="which criterion families to exercise")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except IdealSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except PreconditionError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
