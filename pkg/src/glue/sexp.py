"""Minimal S-expression reader used by every textual interface.

Values are either atom strings or Python lists of values.  The reader is
whitespace-insensitive and reports 1-based line/column positions on error.
"""

from .errors import ParseError

_DELIMS = "()"


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _linecol(self, pos):
        line = self.text.count("\n", 0, pos) + 1
        nl = self.text.rfind("\n", 0, pos)
        return line, pos - nl

    def error(self, message, pos=None):
        line, col = self._linecol(self.pos if pos is None else pos)
        raise ParseError(message, line, col)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def read(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            self.error("unexpected end of input")
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            items = []
            while True:
                self.skip_ws()
                if self.pos >= len(self.text):
                    self.error("unclosed '('")
                if self.text[self.pos] == ")":
                    self.pos += 1
                    return items
                items.append(self.read())
        if ch == ")":
            self.error("unexpected ')'")
        start = self.pos
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c.isspace() or c in _DELIMS:
                break
            self.pos += 1
        return self.text[start:self.pos]


def read(text):
    """Parse one S-expression; trailing garbage is an error."""
    sc = _Scanner(text)
    value = sc.read()
    if not sc.at_end():
        sc.error("trailing input after expression")
    return value


def show(value):
    """Render a nested-list value back to its textual form."""
    if isinstance(value, str):
        return value
    return "(" + " ".join(show(v) for v in value) + ")"
