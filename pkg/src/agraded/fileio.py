"""File formats and pretty-printing.

Matrix files: a line "d n", then d rows of n space-separated integers.
Ideal files: one generator per line as n nonnegative integers (the
exponent vector).  '#' starts a comment in both; blank lines are skipped.
Monomials print with variable names a, b, c, ... when n <= 26, x1, x2,
... otherwise.
"""

import string

from .grading import validate_grading
from .monomials import minimalize


class FormatError(ValueError):
    pass


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_matrix(text):
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty matrix file")
    try:
        d, n = map(int, lines[0].split())
    except ValueError as exc:
        raise FormatError(f"bad header line {lines[0]!r}") from exc
    if len(lines) != d + 1:
        raise FormatError(f"expected {d} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        row = [int(tok) for tok in line.split()]
        if len(row) != n:
            raise FormatError(f"row {line!r} does not have {n} entries")
        rows.append(row)
    return rows


def load_matrix(path):
    with open(path, "r", encoding="utf-8") as fh:
        return validate_grading(parse_matrix(fh.read()))


def format_matrix(rows):
    out = [f"{len(rows)} {len(rows[0])}"]
    out += [" ".join(str(x) for x in row) for row in rows]
    return "\n".join(out) + "\n"


def parse_ideal(text, n):
    gens = []
    for line in _content_lines(text):
        exps = [int(tok) for tok in line.split()]
        if len(exps) != n:
            raise FormatError(f"generator {line!r} does not have {n} exponents")
        if any(e < 0 for e in exps):
            raise FormatError(f"negative exponent in {line!r}")
        gens.append(tuple(exps))
    return minimalize(gens)


def load_ideal(path, n):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ideal(fh.read(), n)


def format_ideal(ideal):
    return "".join(" ".join(str(e) for e in g) + "\n" for g in ideal.gens)


def variable_names(n):
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"x{i + 1}" for i in range(n)]


def monomial_str(exps, names=None):
    if names is None:
        names = variable_names(len(exps))
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts) if parts else "1"


def binomial_str(lead, trail, coeff=1, names=None):
    if coeff == 1:
        return f"{monomial_str(lead, names)} - {monomial_str(trail, names)}"
    return f"{monomial_str(lead, names)} - {coeff} {monomial_str(trail, names)}"


def pair_str(pair, names=None):
    return binomial_str(pair[0], pair[1], 1, names)
