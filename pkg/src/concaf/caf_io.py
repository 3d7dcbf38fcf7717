"""Plain-text interchange format for claim-augmented frameworks.

Grammar, one directive per line; text after ``#`` is a comment and blank
lines are ignored:

    arg <name>              declare an argument (ids follow declaration order)
    claim <name> <label>    assign the claim of a previously declared argument
    att <source> <target>   attack between previously declared arguments

Names and labels are limited to ``[A-Za-z0-9_]``. Every argument requires
exactly one claim directive. Parsing an emitted document reproduces the
framework exactly; emitting is canonical (arguments in id order, claims in
the same order, attacks sorted by name pair) and therefore idempotent.
"""

import re

from .errors import ParseError, StructuralError
from .model import Caf, make_caf

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


def _token(text: str, what: str, lineno: int) -> str:
    if not _NAME.fullmatch(text):
        raise ParseError(f"{what} {text!r} must match [A-Za-z0-9_]+", lineno)
    return text


def parse_caf(text: "str | bytes") -> Caf:
    """Parse a framework document; any violation is fatal with a line number."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    ids: dict[str, int] = {}
    labels: list["str | None"] = []
    attacks: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "arg":
            if len(parts) != 2:
                raise ParseError("expected 'arg <name>'", lineno)
            name = _token(parts[1], "argument name", lineno)
            if name in ids:
                raise ParseError(f"duplicate argument {name!r}", lineno)
            ids[name] = len(ids)
            labels.append(None)
        elif parts[0] == "claim":
            if len(parts) != 3:
                raise ParseError("expected 'claim <name> <label>'", lineno)
            name = parts[1]
            if name not in ids:
                raise ParseError(f"claim for undeclared argument {name!r}", lineno)
            label = _token(parts[2], "claim label", lineno)
            if labels[ids[name]] is not None:
                raise ParseError(f"second claim directive for {name!r}", lineno)
            labels[ids[name]] = label
        elif parts[0] == "att":
            if len(parts) != 3:
                raise ParseError("expected 'att <source> <target>'", lineno)
            for endpoint in parts[1:]:
                if endpoint not in ids:
                    raise ParseError(f"attack endpoint {endpoint!r} not declared", lineno)
            attacks.append((ids[parts[1]], ids[parts[2]]))
        else:
            raise ParseError(f"unrecognized directive {parts[0]!r}", lineno)
    names = list(ids)
    for name, label in zip(names, labels):
        if label is None:
            raise ParseError(f"argument {name!r} has no claim directive", max(len(text.splitlines()), 1))
    return make_caf(names, attacks, [label for label in labels if label is not None])


def emit_caf(caf: Caf) -> str:
    """Serialize a framework to its canonical document.

    Raises StructuralError for names or labels outside the format's
    ``[A-Za-z0-9_]`` alphabet. An empty framework yields an empty document.
    """
    for name in caf.arg_names:
        if not _NAME.fullmatch(name):
            raise StructuralError(f"argument name {name!r} is not serializable")
    for label in caf.claim_names:
        if not _NAME.fullmatch(label):
            raise StructuralError(f"claim label {label!r} is not serializable")
    lines = [f"arg {name}" for name in caf.arg_names]
    lines += [
        f"claim {name} {caf.claim_names[key]}"
        for name, key in zip(caf.arg_names, caf.claims)
    ]
    lines += sorted(
        f"att {caf.arg_names[a]} {caf.arg_names[b]}" for a, b in caf.af.attacks
    )
    return "\n".join(lines) + "\n" if lines else ""
