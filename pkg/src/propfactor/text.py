"""Validated symbol sequences and separator-joined string collections."""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

# Symbol 0 is reserved for internal terminators; inputs must stay above it.
RESERVED_SYMBOL = 0
MAX_SYMBOL = 2**31 - 1
BYTE_LIMIT = 255


class InputError(ValueError):
    """Invalid input; `position` is the first offending offset when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class Text:
    """An immutable string over a positive integer alphabet.

    Symbols fit in one byte unless `wide` is set, in which case any value
    up to 2**31 - 1 is allowed.
    """

    __slots__ = ("symbols", "wide", "_distinct")

    def __init__(self, symbols: np.ndarray, wide: bool = False):
        arr = np.ascontiguousarray(symbols, dtype=np.int32)
        arr.setflags(write=False)
        self.symbols = arr
        self.wide = wide
        self._distinct: int | None = None

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def alphabet_size(self) -> int:
        """Number of distinct symbols actually present."""
        if self._distinct is None:
            self._distinct = int(len(np.unique(self.symbols)))
        return self._distinct

    def max_symbol(self) -> int:
        return int(self.symbols.max()) if len(self.symbols) else RESERVED_SYMBOL

    def factor(self, start: int, stop: int) -> "Text":
        """The factor at [start, stop) as a new Text."""
        return Text(self.symbols[start:stop], wide=self.wide)

    def to_bytes(self) -> bytes:
        if self.wide:
            raise InputError("wide text does not round-trip through bytes")
        return bytes(self.symbols.tolist())

    def to_str(self) -> str:
        return "".join(chr(s) for s in self.symbols.tolist())

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols.tolist())

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Text(self.symbols[i], wide=self.wide)
        return int(self.symbols[i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Text):
            return NotImplemented
        return np.array_equal(self.symbols, other.symbols)

    def __hash__(self) -> int:
        return hash(self.symbols.tobytes())

    def __repr__(self) -> str:
        if len(self) <= 32:
            body = self.to_str() if not self.wide else self.symbols.tolist()
        else:
            body = f"<{len(self)} symbols>"
        return f"Text({body!r})"


def load_text(raw, wide: bool | None = None) -> Text:
    """Validate and load bytes, a str, or an int sequence as a Text.

    Bytes map to byte values, a str maps to code points, and any other
    sequence is taken as integer symbols directly.  Symbol 0 is reserved
    and rejected, with the first offending position reported.  `wide`
    defaults to whatever the symbol range requires.
    """
    if isinstance(raw, Text):
        arr = raw.symbols
    elif isinstance(raw, (bytes, bytearray, memoryview)):
        arr = np.frombuffer(bytes(raw), dtype=np.uint8).astype(np.int32)
    elif isinstance(raw, str):
        arr = np.array([ord(c) for c in raw], dtype=np.int64)
    elif isinstance(raw, np.ndarray):
        arr = raw.astype(np.int64)
    elif isinstance(raw, Sequence):
        arr = np.array(list(raw), dtype=np.int64)
    else:
        raise InputError(f"cannot load {type(raw).__name__} as text")

    if len(arr):
        lo = int(arr.min())
        if lo <= RESERVED_SYMBOL:
            bad = int(np.argmax(arr <= RESERVED_SYMBOL))
            what = "reserved symbol 0" if lo == RESERVED_SYMBOL else f"symbol {lo}"
            raise InputError(f"{what} at position {bad}", position=bad)
        hi = int(arr.max())
        if hi > MAX_SYMBOL:
            bad = int(np.argmax(arr > MAX_SYMBOL))
            raise InputError(f"symbol {int(arr[bad])} exceeds 32-bit range at position {bad}", position=bad)
        needs_wide = hi > BYTE_LIMIT
    else:
        needs_wide = False

    if wide is None:
        wide = needs_wide
    elif not wide and needs_wide:
        bad = int(np.argmax(arr > BYTE_LIMIT))
        raise InputError(f"symbol {int(arr[bad])} needs wide mode at position {bad}", position=bad)
    return Text(arr.astype(np.int32), wide=wide)


class JoinedText:
    """k texts concatenated with k fresh separator symbols.

    Each input string is followed by its own separator, a symbol above
    every input alphabet, so no two suffixes from different strings ever
    compare equal.  `origin_id`/`origin_pos` map global positions back to
    (string id, local position); separators carry id -1.
    """

    __slots__ = ("symbols", "k", "parts", "starts", "sep_positions",
                 "sep_values", "origin_id", "origin_pos")

    def __init__(self, parts: Sequence[Text]):
        if len(parts) < 1:
            raise InputError("need at least one text to join")
        self.parts = tuple(parts)
        self.k = len(parts)
        base = max((t.max_symbol() for t in parts), default=RESERVED_SYMBOL)
        if base + self.k > MAX_SYMBOL:
            raise InputError(f"no room for {self.k} separator symbols above alphabet")
        self.sep_values = np.arange(base + 1, base + 1 + self.k, dtype=np.int32)

        total = sum(len(t) for t in parts) + self.k
        symbols = np.empty(total, dtype=np.int32)
        origin_id = np.empty(total, dtype=np.int32)
        origin_pos = np.empty(total, dtype=np.int32)
        starts = np.empty(self.k, dtype=np.int64)
        sep_positions = np.empty(self.k, dtype=np.int64)
        at = 0
        for sid, t in enumerate(parts):
            m = len(t)
            starts[sid] = at
            symbols[at:at + m] = t.symbols
            origin_id[at:at + m] = sid
            origin_pos[at:at + m] = np.arange(m, dtype=np.int32)
            at += m
            symbols[at] = self.sep_values[sid]
            origin_id[at] = -1
            origin_pos[at] = -1
            sep_positions[sid] = at
            at += 1
        for a in (symbols, origin_id, origin_pos, starts, sep_positions):
            a.setflags(write=False)
        self.symbols = symbols
        self.starts = starts
        self.sep_positions = sep_positions
        self.origin_id = origin_id
        self.origin_pos = origin_pos

    def __len__(self) -> int:
        return len(self.symbols)

    def origin(self, g: int) -> tuple[int, int] | None:
        """(string id, local position) at global position g; None on separators."""
        sid = int(self.origin_id[g])
        if sid < 0:
            return None
        return sid, int(self.origin_pos[g])

    def global_position(self, sid: int, local: int) -> int:
        if not 0 <= sid < self.k:
            raise InputError(f"no string {sid}")
        if not 0 <= local < len(self.parts[sid]):
            raise InputError(f"position {local} outside string {sid}")
        return int(self.starts[sid]) + local


def join_texts(texts: Sequence[Text]) -> JoinedText:
    """Concatenate texts with one fresh separator symbol per string."""
    return JoinedText([t if isinstance(t, Text) else load_text(t) for t in texts])
