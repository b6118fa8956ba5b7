"""Text formats: classic WCNF DIMACS, a ground logic-program format with
weak constraints, and the native w-system format.

All three parsers reject malformed input with ParseError carrying a
SourceSpan; they never raise anything else on arbitrary text.  Writers emit
canonical `\n`-terminated text that re-parses to a structurally identical
object (w-condition labels are auto-assigned positionally, so wsys and wcnf
round trips are identity up to labels).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .encodings import OProgram, PwProblem, WeakConstraint
from .errors import ParseError
from .model import (
    AMS,
    Clause,
    Program,
    PropFormula,
    Rule,
    Theory,
    Vocabulary,
    WCondition,
    WcBody,
    WSystem,
    and_,
    atom,
    iff,
    implies,
    not_,
    or_,
)
from .solve import Sense


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    offset: int


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_LP_ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

# Structural keywords of the two text formats; not usable as atom names so
# that anything one format emits survives the other parser.
_RESERVED = frozenset(
    ("vocab", "hard", "soft", "sat", "pl", "lp", "wc", "clause", "sigma",
     "not", "true", "false")
)


# ==========================================================================
# WCNF (classic, pre-2022: explicit top weight)


def _int_token(tok, span, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {tok!r}", span) from None


def parse_wcnf(text: str) -> PwProblem:
    """Parse classic WCNF: `p wcnf <nvars> <nclauses> <top>`, one clause per
    line, weight == top marks hard clauses.

    `c map <var> <atom>` comments (as emitted by write_wcnf) name the
    variables; unnamed variables become x1..xN.
    """
    nvars = nclauses = top = None
    names = {}
    hard = []
    soft = []
    offset = 0
    line_no = 0
    last_span = SourceSpan(1, 1, 0)
    for raw_line in text.split("\n"):
        line_no += 1
        line = raw_line[:-1] if raw_line.endswith("\r") else raw_line
        line_start = offset
        offset += len(raw_line) + 1

        def span_at(col):
            return SourceSpan(line_no, col + 1, line_start + col)

        last_span = span_at(len(line))
        tokens = [(m.group(), m.start()) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        first, fcol = tokens[0]
        if first == "c" or first.startswith("c"):
            if first == "c" and len(tokens) >= 4 and tokens[1][0] == "map":
                var = _int_token(tokens[2][0], span_at(tokens[2][1]), "variable in map comment")
                name = tokens[3][0]
                if not _NAME_RE.fullmatch(name):
                    raise ParseError(f"bad atom name {name!r} in map comment", span_at(tokens[3][1]))
                if var in names and names[var] != name:
                    raise ParseError(f"conflicting map for variable {var}", span_at(tokens[2][1]))
                names[var] = name
            continue
        if first == "p":
            if top is not None:
                raise ParseError("duplicate problem header", span_at(fcol))
            if len(tokens) != 5 or tokens[1][0] != "wcnf":
                raise ParseError("malformed header, expected `p wcnf <vars> <clauses> <top>`", span_at(fcol))
            nvars = _int_token(tokens[2][0], span_at(tokens[2][1]), "variable count")
            nclauses = _int_token(tokens[3][0], span_at(tokens[3][1]), "clause count")
            top = _int_token(tokens[4][0], span_at(tokens[4][1]), "top weight")
            if nvars < 0 or nclauses < 0:
                raise ParseError("header counts must be nonnegative", span_at(tokens[2][1]))
            if top < 1:
                raise ParseError("top weight must be at least 1", span_at(tokens[4][1]))
            continue
        if first == "h":
            raise ParseError(
                "new-format (2022) WCNF with `h` lines is not supported; "
                "use the classic header with an explicit top weight",
                span_at(fcol),
            )
        if top is None:
            raise ParseError("clause line before `p wcnf` header", span_at(fcol))
        weight = _int_token(first, span_at(fcol), "clause weight")
        if weight <= 0:
            raise ParseError(f"clause weight must be positive, got {weight}", span_at(fcol))
        if weight > top:
            raise ParseError(f"clause weight {weight} exceeds top {top}", span_at(fcol))
        if len(tokens) < 2:
            raise ParseError("missing terminating 0", span_at(len(line)))
        lits = []
        for tok, col in tokens[1:-1]:
            lit = _int_token(tok, span_at(col), "literal")
            if lit == 0:
                raise ParseError("literal 0 before the end of the clause", span_at(col))
            if abs(lit) > nvars:
                raise ParseError(f"literal {lit} out of range 1..{nvars}", span_at(col))
            lits.append(lit)
        endtok, endcol = tokens[-1]
        if endtok != "0":
            raise ParseError("missing terminating 0", span_at(endcol))
        pos = frozenset(_wcnf_name(names, v) for v in lits if v > 0)
        neg = frozenset(_wcnf_name(names, -v) for v in lits if v < 0)
        clause = Clause(negative=neg, positive=pos)
        if weight == top:
            hard.append(clause)
        else:
            soft.append((clause, weight))
    if top is None:
        raise ParseError("missing `p wcnf` header", last_span)
    if len(hard) + len(soft) != nclauses:
        raise ParseError(
            f"header announced {nclauses} clauses but found {len(hard) + len(soft)}",
            last_span,
        )
    vocab_names = []
    seen = set()
    for v in range(1, nvars + 1):
        name = _wcnf_name(names, v)
        if name in seen:
            raise ParseError(f"duplicate atom name {name!r} in map comments", last_span)
        seen.add(name)
        vocab_names.append(name)
    return PwProblem(Vocabulary(vocab_names), tuple(hard), tuple(soft), sense=Sense.MAX)


def _wcnf_name(names, v):
    return names.get(v, f"x{v}")


def write_wcnf(p: PwProblem) -> str:
    """Canonical classic WCNF with top = 1 + total soft weight and `c map`
    comments recording the atom names."""
    sigma = p.vocabulary
    top = 1 + sum(w for _, w in p.soft)
    lines = [f"c map {i + 1} {name}" for i, name in enumerate(sigma.names)]
    hard = sorted(p.hard, key=lambda c: _clause_key(c, sigma))
    lines.append(f"p wcnf {len(sigma)} {len(hard) + len(p.soft)} {top}")
    for c in hard:
        lines.append(f"{top} {_clause_text(c, sigma)}")
    for c, w in p.soft:
        lines.append(f"{w} {_clause_text(c, sigma)}")
    return "\n".join(lines) + "\n"


def _clause_lits(c: Clause, sigma: Vocabulary):
    lits = [-(sigma.index(n) + 1) for n in c.negative]
    lits += [sigma.index(n) + 1 for n in c.positive]
    return sorted(lits, key=abs)


def _clause_key(c: Clause, sigma: Vocabulary):
    return tuple((abs(l), l < 0) for l in _clause_lits(c, sigma))


def _clause_text(c: Clause, sigma: Vocabulary) -> str:
    return " ".join(str(l) for l in _clause_lits(c, sigma) + [0])


# ==========================================================================
# Shared tokenizer for the lp and wsys formats


@dataclass(frozen=True)
class _Token:
    kind: str  # name | int | punct | end
    value: str
    span: SourceSpan


_PUNCT = (
    "<->",
    "->",
    ":-",
    ":~",
    "#minimize",
    "#maximize",
    "[",
    "]",
    "{",
    "}",
    "(",
    ")",
    "@",
    ".",
    ",",
    ";",
    ":",
    "|",
    "&",
    "-",
)


def _tokenize(text: str, comment_char: str):
    tokens = []
    line_no = 1
    col = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line_no += 1
            col = 0
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == comment_char:
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        span = SourceSpan(line_no, col + 1, i)
        m = _NAME_RE.match(text, i)
        if m:
            tokens.append(_Token("name", m.group(), span))
            col += m.end() - i
            i = m.end()
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], span))
            col += j - i
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                # A `-` immediately starting a number is the number's sign.
                if p == "-" and i + 1 < n and text[i + 1].isdigit():
                    j = i + 1
                    while j < n and text[j].isdigit():
                        j += 1
                    tokens.append(_Token("int", text[i:j], span))
                    col += j - i
                    i = j
                    break
                tokens.append(_Token("punct", p, span))
                col += len(p)
                i += len(p)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", span)
    end_span = SourceSpan(line_no, col + 1, n)
    tokens.append(_Token("end", "", end_span))
    return tokens


class _Stream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        t = self.tokens[self.pos]
        if t.kind != "end":
            self.pos += 1
        return t

    def expect(self, value, what=None) -> _Token:
        t = self.peek()
        if t.value != value or t.kind == "end":
            raise ParseError(f"expected {what or repr(value)}, got {_tok_text(t)}", t.span)
        return self.next()

    def at(self, value) -> bool:
        t = self.peek()
        return t.kind != "end" and t.value == value

    def take(self, value) -> bool:
        if self.at(value):
            self.next()
            return True
        return False


def _tok_text(t: _Token) -> str:
    return repr(t.value) if t.kind != "end" else "end of input"


def _expect_int(ts: _Stream, what) -> tuple[int, SourceSpan]:
    t = ts.peek()
    if t.kind != "int":
        raise ParseError(f"expected {what}, got {_tok_text(t)}", t.span)
    ts.next()
    return int(t.value), t.span


def _expect_atom(ts: _Stream, what="an atom") -> tuple[str, SourceSpan]:
    t = ts.peek()
    if t.kind != "name" or t.value in _RESERVED:
        raise ParseError(f"expected {what}, got {_tok_text(t)}", t.span)
    ts.next()
    return t.value, t.span


def _expect_lp_atom(ts: _Stream, what="an atom") -> tuple[str, SourceSpan]:
    name, span = _expect_atom(ts, what)
    if not _LP_ATOM_RE.match(name):
        raise ParseError(f"atom {name!r} does not match [a-z][A-Za-z0-9_]*", span)
    return name, span


# ==========================================================================
# Logic programs with weak constraints


def parse_lp(text: str) -> OProgram:
    """Parse rules `a :- b, not c.`, facts, constraints `:- b.`, weak
    constraints `:~ b, not c. [w@l]` and #minimize/#maximize statements
    (desugared into weak constraints)."""
    declared = _lp_vocab_directive(text)
    ts = _Stream(_tokenize(text, "%"))
    mention_order: list[str] = list(declared)
    mentioned = set(declared)
    rules = []
    weaks = []  # (pos, neg, weight, level, weight_span)

    def note(name):
        if name not in mentioned:
            mentioned.add(name)
            mention_order.append(name)

    def parse_literal():
        t = ts.peek()
        if t.kind == "name" and t.value == "not":
            ts.next()
            name, _ = _expect_lp_atom(ts, "an atom after `not`")
            note(name)
            return name, False
        name, _ = _expect_lp_atom(ts)
        note(name)
        return name, True

    def parse_body(allow_empty=False):
        if allow_empty and ts.at("."):
            return frozenset(), frozenset()
        pos, neg = set(), set()
        while True:
            name, positive = parse_literal()
            (pos if positive else neg).add(name)
            if not ts.take(","):
                return frozenset(pos), frozenset(neg)

    def parse_weight_suffix():
        ts.expect("[", "`[weight@level]`")
        weight, wspan = _expect_int(ts, "a weight")
        level = 1
        if ts.take("@"):
            level, lspan = _expect_int(ts, "a level")
            if level <= 0:
                raise ParseError(f"level must be positive, got {level}", lspan)
        ts.expect("]")
        return weight, level, wspan

    while True:
        t = ts.peek()
        if t.kind == "end":
            break
        if t.value == ":-":
            ts.next()
            pos, neg = parse_body(allow_empty=True)
            ts.expect(".")
            rules.append(Rule(None, pos, neg))
        elif t.value == ":~":
            ts.next()
            pos, neg = parse_body()
            ts.expect(".")
            weight, level, _ = parse_weight_suffix()
            weaks.append(WeakConstraint(WcBody(pos, neg), weight, level))
        elif t.value in ("#minimize", "#maximize"):
            direction = t.value[1:]
            ts.next()
            ts.expect("{")
            entries = []
            if not ts.at("}"):
                while True:
                    weight, _ = _expect_int(ts, "a weight")
                    level = 1
                    if ts.take("@"):
                        level, lspan = _expect_int(ts, "a level")
                        if level <= 0:
                            raise ParseError(f"level must be positive, got {level}", lspan)
                    ts.expect(":")
                    name, positive = parse_literal()
                    entries.append((weight, level, name, positive))
                    if not (ts.take(",") or ts.take(";")):
                        break
            ts.expect("}")
            ts.expect(".")
            for weight, level, name, positive in entries:
                if direction == "maximize":
                    weight = -weight
                body = WcBody(positive={name}) if positive else WcBody(negative={name})
                weaks.append(WeakConstraint(body, weight, level))
        elif t.kind == "name" and t.value not in _RESERVED:
            head, _ = _expect_lp_atom(ts, "a statement")
            note(head)
            if ts.take(":-"):
                pos, neg = parse_body(allow_empty=True)
                ts.expect(".")
                rules.append(Rule(head, pos, neg))
            else:
                ts.expect(".", "`.` or `:-` after the head atom")
                rules.append(Rule(head))
        else:
            raise ParseError(
                f"expected a statement, got {t.value!r}", t.span
            )
    bad = [n for n in declared if not _LP_ATOM_RE.match(n)]
    if bad:
        raise ParseError(
            f"atom {bad[0]!r} does not match [a-z][A-Za-z0-9_]*", SourceSpan(1, 1, 0)
        )
    vocab = Vocabulary(mention_order)
    return OProgram(Program(rules, vocab), weaks)


def _lp_vocab_directive(text: str):
    names = []
    for line in text.split("\n"):
        m = re.match(r"\s*%\s*vocab:\s*(.*)$", line)
        if m:
            for name in m.group(1).split():
                if name not in names:
                    names.append(name)
    return names


def _lp_literals(pos, neg, sigma):
    parts = [n for n in sorted(pos, key=sigma.index)]
    parts += [f"not {n}" for n in sorted(neg, key=sigma.index)]
    return ", ".join(parts)


def write_lp(p: OProgram) -> str:
    sigma = p.vocabulary
    lines = ["% vocab: " + " ".join(sigma.names)]
    for r in p.program.rules:
        body = _lp_literals(r.positive_body, r.negative_body, sigma)
        if r.head is None:
            lines.append(f":- {body}.")
        elif body:
            lines.append(f"{r.head} :- {body}.")
        else:
            lines.append(f"{r.head}.")
    for wc in p.constraints:
        body = _lp_literals(wc.body.positive, wc.body.negative, sigma)
        lines.append(f":~ {body}. [{wc.weight}@{wc.level}]")
    return "\n".join(lines) + "\n"


# ==========================================================================
# Native w-system format


def parse_wsystem(text: str) -> WSystem:
    """Parse the line-oriented native format:

        vocab a b c
        hard sat { a | b. -a | -b. }
        hard lp { a :- not b. }
        soft clause (-a | b) [2@1]
        soft pl (a & -b) [2]
        soft not wc (a & -b) [-1@2]

    Soft conditions get positional labels s0, s1, ...  A sigma module is
    appended automatically when soft conditions mention atoms no hard module
    covers (with a warning).
    """
    ts = _Stream(_tokenize(text, "#"))
    declared: list[str] = []
    mention_order: list[str] = []
    mentioned = set()

    def note(name):
        if name not in mentioned:
            mentioned.add(name)
            mention_order.append(name)

    # (kind, payload, span) triples; theories get vocabularies once the full
    # vocabulary is known.
    hard_specs = []
    soft_specs = []

    while True:
        t = ts.peek()
        if t.kind == "end":
            break
        if t.value == "vocab":
            ts.next()
            while ts.peek().kind == "name" and ts.peek().value not in _RESERVED:
                name, span = _expect_atom(ts, "an atom in the vocab line")
                if name in declared:
                    raise ParseError(f"duplicate atom {name!r} in vocab line", span)
                declared.append(name)
                note(name)
        elif t.value == "hard":
            ts.next()
            hard_specs.append(_parse_theory_expr(ts, note))
        elif t.value == "soft":
            ts.next()
            spec = _parse_theory_expr(ts, note)
            ts.expect("[", "`[weight@level]`")
            weight, _ = _expect_int(ts, "a weight")
            level = 1
            if ts.take("@"):
                level, lspan = _expect_int(ts, "a level")
                if level <= 0:
                    raise ParseError(f"level must be positive, got {level}", lspan)
            ts.expect("]")
            soft_specs.append((spec, weight, level))
        else:
            raise ParseError(
                f"expected `vocab`, `hard` or `soft`, got {t.value!r}", t.span
            )

    sigma = Vocabulary(mention_order)
    hard_theories = [_build_theory(spec, sigma) for spec in hard_specs]
    soft = [
        WCondition(f"s{i}", _build_theory(spec, sigma), weight, level)
        for i, (spec, weight, level) in enumerate(soft_specs)
    ]
    covered = set()
    for theory in hard_theories:
        covered |= set(theory.vocabulary.names)
    needed = set()
    for b in soft:
        needed |= set(b.theory.vocabulary.names)
    missing = [n for n in sigma.names if n not in covered and (n in needed or n in declared)]
    if missing:
        hard_theories.append(Theory.sigma(Vocabulary(missing)))
        if any(n in needed for n in missing):
            import warnings

            warnings.warn(
                f"soft-only atoms {sorted(set(missing) & needed)} covered by an "
                "appended sigma module",
                stacklevel=2,
            )
    return WSystem(AMS(hard_theories), soft)


def _parse_theory_expr(ts: _Stream, note):
    t = ts.peek()
    if t.kind == "end":
        raise ParseError("expected a theory expression", t.span)
    kind = t.value
    if kind == "not":
        ts.next()
        inner = _parse_theory_expr(ts, note)
        return ("not", inner, t.span)
    if kind == "sat":
        ts.next()
        ts.expect("{")
        clauses = []
        while not ts.take("}"):
            clauses.append(_parse_clause_literals(ts, note, terminator="."))
        return ("sat", tuple(clauses), t.span)
    if kind == "clause":
        ts.next()
        ts.expect("(")
        lits = []
        if not ts.at(")"):
            while True:
                lits.append(_parse_literal_token(ts, note))
                if not ts.take("|"):
                    break
        ts.expect(")")
        return ("clause", tuple(lits), t.span)
    if kind == "wc":
        ts.next()
        ts.expect("(")
        lits = [_parse_literal_token(ts, note)]
        while ts.take("&"):
            lits.append(_parse_literal_token(ts, note))
        ts.expect(")")
        return ("wc", tuple(lits), t.span)
    if kind == "pl":
        ts.next()
        if ts.take("("):
            f = _parse_formula(ts, note)
            ts.expect(")")
            return ("pl", (f,), t.span)
        ts.expect("{", "`(` or `{` after `pl`")
        formulas = []
        while not ts.take("}"):
            formulas.append(_parse_formula(ts, note))
            ts.expect(".")
        return ("pl", tuple(formulas), t.span)
    if kind == "lp":
        ts.next()
        ts.expect("{")
        rules = []
        while not ts.take("}"):
            rules.append(_parse_wsys_rule(ts, note))
        return ("lp", tuple(rules), t.span)
    if kind == "sigma":
        ts.next()
        names = []
        if ts.take("{"):
            while not ts.take("}"):
                name, _ = _expect_atom(ts, "an atom in the sigma module")
                note(name)
                names.append(name)
        return ("sigma", tuple(names), t.span)
    raise ParseError(f"unknown logic tag {kind!r}", t.span)


def _parse_literal_token(ts: _Stream, note):
    neg = ts.take("-")
    name, _ = _expect_atom(ts)
    note(name)
    return (name, not neg)


def _parse_clause_literals(ts: _Stream, note, terminator):
    lits = []
    if not ts.at(terminator):
        while True:
            lits.append(_parse_literal_token(ts, note))
            if not ts.take("|"):
                break
    ts.expect(terminator)
    return tuple(lits)


def _parse_wsys_rule(ts: _Stream, note):
    if ts.take(":-"):
        pos, neg = _parse_wsys_body(ts, note)
        ts.expect(".")
        return Rule(None, pos, neg)
    head, _ = _expect_atom(ts, "a rule head or `:-`")
    note(head)
    if ts.take(":-"):
        pos, neg = _parse_wsys_body(ts, note)
        ts.expect(".")
        return Rule(head, pos, neg)
    ts.expect(".", "`.` or `:-` after the head atom")
    return Rule(head)


def _parse_wsys_body(ts: _Stream, note):
    if ts.at("."):
        return frozenset(), frozenset()
    pos, neg = set(), set()
    while True:
        t = ts.peek()
        if t.kind == "name" and t.value == "not":
            ts.next()
            name, _ = _expect_atom(ts, "an atom after `not`")
            note(name)
            neg.add(name)
        else:
            name, _ = _expect_atom(ts)
            note(name)
            pos.add(name)
        if not ts.take(","):
            return frozenset(pos), frozenset(neg)


def _parse_formula(ts: _Stream, note) -> PropFormula:
    f = _parse_implies(ts, note)
    while ts.take("<->"):
        f = iff(f, _parse_implies(ts, note))
    return f


def _parse_implies(ts: _Stream, note) -> PropFormula:
    f = _parse_disj(ts, note)
    if ts.take("->"):
        return implies(f, _parse_implies(ts, note))
    return f


def _parse_disj(ts: _Stream, note) -> PropFormula:
    parts = [_parse_conj(ts, note)]
    while ts.take("|"):
        parts.append(_parse_conj(ts, note))
    return parts[0] if len(parts) == 1 else or_(*parts)


def _parse_conj(ts: _Stream, note) -> PropFormula:
    parts = [_parse_neg(ts, note)]
    while ts.take("&"):
        parts.append(_parse_neg(ts, note))
    return parts[0] if len(parts) == 1 else and_(*parts)


def _parse_neg(ts: _Stream, note) -> PropFormula:
    if ts.take("-"):
        return not_(_parse_neg(ts, note))
    t = ts.peek()
    if t.value == "(":
        ts.next()
        f = _parse_formula(ts, note)
        ts.expect(")")
        return f
    if t.kind == "name" and t.value == "true":
        ts.next()
        return PropFormula("true")
    if t.kind == "name" and t.value == "false":
        ts.next()
        return PropFormula("false")
    name, _ = _expect_atom(ts, "an atom, `true`, `false`, `-` or `(`")
    note(name)
    return atom(name)


def _build_theory(spec, sigma: Vocabulary) -> Theory:
    kind, payload, span = spec
    if kind == "not":
        inner = _build_theory(payload, sigma)
        return Theory("complement", inner, inner.vocabulary)
    if kind == "sat":
        clauses = frozenset(_lits_to_clause(lits) for lits in payload)
        return Theory.sat(clauses, _restrict(sigma, _clauses_atoms(clauses)))
    if kind == "clause":
        clause = _lits_to_clause(payload)
        return Theory.sat(frozenset([clause]), _restrict(sigma, clause.atom_names()))
    if kind == "wc":
        pos = frozenset(n for n, p in payload if p)
        neg = frozenset(n for n, p in payload if not p)
        if pos & neg:
            raise ParseError(
                f"atom {sorted(pos & neg)[0]!r} occurs both positively and "
                "negatively in a wc body",
                span,
            )
        body = WcBody(pos, neg)
        return Theory.wc(body, _restrict(sigma, body.atom_names()))
    if kind == "pl":
        names = frozenset()
        for f in payload:
            names |= f.atom_names()
        return Theory.pl(payload, _restrict(sigma, names))
    if kind == "lp":
        names = frozenset()
        for r in payload:
            names |= r.atom_names()
        prog = Program(payload, _restrict(sigma, names))
        return Theory.lp(prog)
    if kind == "sigma":
        names = payload if payload else sigma.names
        return Theory.sigma(_restrict(sigma, frozenset(names)))
    raise AssertionError(kind)


def _lits_to_clause(lits) -> Clause:
    return Clause(
        negative=frozenset(n for n, p in lits if not p),
        positive=frozenset(n for n, p in lits if p),
    )


def _clauses_atoms(clauses):
    out = frozenset()
    for c in clauses:
        out |= c.atom_names()
    return out


def _restrict(sigma: Vocabulary, names) -> Vocabulary:
    return Vocabulary([n for n in sigma.names if n in names])


# --------------------------------------------------------------------------
# w-system writer


def write_wsystem(w: WSystem) -> str:
    sigma = w.vocabulary
    lines = ["vocab " + " ".join(sigma.names) if len(sigma) else "vocab"]
    for t in w.hard.modules:
        lines.append("hard " + _render_theory(t, sigma))
    for b in w.soft:
        lines.append(f"soft {_render_theory(b.theory, sigma)} [{b.weight}@{b.level}]")
    return "\n".join(lines) + "\n"


def _render_literal(name, positive):
    return name if positive else f"-{name}"


def _render_clause_body(c: Clause, sigma: Vocabulary) -> str:
    lits = [(sigma.index(n), _render_literal(n, False)) for n in c.negative]
    lits += [(sigma.index(n), _render_literal(n, True)) for n in c.positive]
    return " | ".join(text for _, text in sorted(lits))


def _render_theory(t: Theory, sigma: Vocabulary) -> str:
    if t.logic == "complement":
        return "not " + _render_theory(t.payload, sigma)
    if t.logic == "sat":
        clauses = sorted(t.payload, key=lambda c: _clause_key(c, sigma))
        if len(clauses) == 1:
            return f"clause ({_render_clause_body(clauses[0], sigma)})"
        inner = " ".join(f"{_render_clause_body(c, sigma)}." for c in clauses)
        return "sat { " + inner + " }" if clauses else "sat { }"
    if t.logic == "wc":
        body = t.payload
        lits = [(sigma.index(n), _render_literal(n, True)) for n in body.positive]
        lits += [(sigma.index(n), _render_literal(n, False)) for n in body.negative]
        return "wc (" + " & ".join(text for _, text in sorted(lits)) + ")"
    if t.logic == "pl":
        if len(t.payload) == 1:
            return f"pl ({_render_formula(t.payload[0])})"
        inner = " ".join(f"{_render_formula(f)}." for f in t.payload)
        return "pl { " + inner + " }" if t.payload else "pl { }"
    if t.logic == "lp":
        prog = t.payload
        inner = " ".join(_render_rule(r, prog.vocabulary) for r in prog.rules)
        return "lp { " + inner + " }" if prog.rules else "lp { }"
    if t.logic == "sigma":
        return "sigma { " + " ".join(t.vocabulary.names) + " }"
    raise AssertionError(t.logic)


def _render_rule(r: Rule, sigma: Vocabulary) -> str:
    body = _lp_literals(r.positive_body, r.negative_body, sigma)
    if r.head is None:
        return f":- {body}."
    if body:
        return f"{r.head} :- {body}."
    return f"{r.head}."


def _render_formula(f: PropFormula) -> str:
    op = f.op
    if op == "true":
        return "true"
    if op == "false":
        return "false"
    if op == "atom":
        return f.name
    if op == "not":
        return "-" + _render_formula_atomic(f.children[0])
    if op == "and":
        if not f.children:
            return "true"
        if len(f.children) == 1:
            return _render_formula(f.children[0])
        return "(" + " & ".join(_render_formula_atomic(c) for c in f.children) + ")"
    if op == "or":
        if not f.children:
            return "false"
        if len(f.children) == 1:
            return _render_formula(f.children[0])
        return "(" + " | ".join(_render_formula_atomic(c) for c in f.children) + ")"
    if op == "implies":
        a, b = f.children
        return f"({_render_formula_atomic(a)} -> {_render_formula_atomic(b)})"
    if op == "iff":
        a, b = f.children
        return f"({_render_formula_atomic(a)} <-> {_render_formula_atomic(b)})"
    raise AssertionError(op)


def _render_formula_atomic(f: PropFormula) -> str:
    text = _render_formula(f)
    return text
