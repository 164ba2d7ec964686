"""
Copyright (c) 2026 pyChainmail contributors

Shared helpers: the exception hierarchy, deterministic enumeration orders and
the fixed text forms used in reports.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import os


class ChainmailError(ValueError):
    pass


class GraphSyntaxError(ChainmailError):
    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path is not None:
            where.append(path)
        super().__init__(f"{message} ({'; '.join(where)})" if where else message)


class GraphValidationError(ChainmailError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid chainmail graph: " + "; ".join(self.violations))


class UnknownVertexError(ChainmailError):
    pass


class DegenerateFraming(ChainmailError):
    pass


class HypothesisError(ChainmailError):
    pass


class DiagramSyntaxError(ChainmailError):
    def __init__(self, message, crossing=None):
        self.crossing = crossing
        if crossing is not None:
            message = f"crossing {crossing}: {message}"
        super().__init__(message)


class SplitDiagramError(ChainmailError):
    pass


class NugatoryCrossingError(ChainmailError):
    def __init__(self, crossing):
        self.crossing = crossing
        super().__init__(f"crossing {crossing} is nugatory: both white corners lie in one region")


class SpinExistenceError(RuntimeError):
    pass


def gray_code_flips(d):
    """
    Index of the basis vector toggled at each step of the reflected Gray code
    on d bits; yields 2**d - 1 indices.
    """
    for k in range(1, 2 ** d):
        yield (k & -k).bit_length() - 1


def format_matrix(rows):
    if len(rows) == 0:
        return "[]"
    return "[" + ", ".join("[" + ", ".join(str(int(x)) for x in row) + "]" for row in rows) + "]"


def format_subset(members):
    return "{" + ",".join(members) + "}"


def parse_int_range(text):
    """Parse 'a..b' (inclusive) or a single integer."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ChainmailError(f"invalid integer range '{text}'")
    if lo > hi:
        raise ChainmailError(f"empty integer range '{text}'")
    return lo, hi


def worker_count(requested=None):
    cap = os.environ.get("CHAINMAIL_THREADS")
    n = requested if requested is not None else (os.cpu_count() or 1)
    if cap:
        try:
            n = min(n, int(cap))
        except ValueError:
            raise ChainmailError(f"CHAINMAIL_THREADS must be an integer, got '{cap}'")
    return max(1, n)
