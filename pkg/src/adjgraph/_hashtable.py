"""Open-addressing map from node id to internal slot.

Linear probing over a power-of-two table, Fibonacci hashing, and
backward-shift deletion (no tombstones). Keys and values live in two
``array('i')`` buffers so the table costs 8 bytes per bucket.
"""
from array import array

_EMPTY = -1
_GOLDEN = 2654435769  # 2**32 / phi
_MIN_BITS = 3


class NodeTable:
    __slots__ = ("_keys", "_vals", "_bits", "_mask", "_shift", "_size")

    def __init__(self, capacity_hint=0):
        bits = _MIN_BITS
        while (1 << bits) < 2 * capacity_hint:
            bits += 1
        self._alloc(bits)

    def _alloc(self, bits):
        cap = 1 << bits
        self._keys = array("i", [_EMPTY]) * cap
        self._vals = array("i", bytes(4 * cap))
        self._bits = bits
        self._mask = cap - 1
        self._shift = 32 - bits
        self._size = 0

    def __len__(self):
        return self._size

    def capacity(self):
        return self._mask + 1

    def get(self, key, default=-1):
        keys = self._keys
        mask = self._mask
        h = ((key * _GOLDEN) & 0xFFFFFFFF) >> self._shift
        while True:
            k = keys[h]
            if k == key:
                return self._vals[h]
            if k == _EMPTY:
                return default
            h = (h + 1) & mask

    def __contains__(self, key):
        return self.get(key) != -1

    def put(self, key, val):
        """Insert or overwrite ``key``."""
        if 2 * (self._size + 1) > self._mask + 1:
            self._rehash(self._bits + 1)
        keys = self._keys
        mask = self._mask
        h = ((key * _GOLDEN) & 0xFFFFFFFF) >> self._shift
        while True:
            k = keys[h]
            if k == _EMPTY:
                keys[h] = key
                self._vals[h] = val
                self._size += 1
                return
            if k == key:
                self._vals[h] = val
                return
            h = (h + 1) & mask

    def pop(self, key):
        """Remove ``key`` and return its value, or -1 if absent."""
        keys = self._keys
        vals = self._vals
        mask = self._mask
        shift = self._shift
        i = ((key * _GOLDEN) & 0xFFFFFFFF) >> shift
        while True:
            k = keys[i]
            if k == _EMPTY:
                return -1
            if k == key:
                break
            i = (i + 1) & mask
        out = vals[i]
        # backward-shift: pull later cluster members into the hole when
        # their home bucket does not lie cyclically in (i, j]
        j = i
        while True:
            j = (j + 1) & mask
            k = keys[j]
            if k == _EMPTY:
                break
            home = ((k * _GOLDEN) & 0xFFFFFFFF) >> shift
            if (j > i and (home <= i or home > j)) or (j < i and i >= home > j):
                keys[i] = k
                vals[i] = vals[j]
                i = j
        keys[i] = _EMPTY
        self._size -= 1
        return out

    def _rehash(self, bits):
        old_keys, old_vals = self._keys, self._vals
        self._alloc(bits)
        for k, v in zip(old_keys, old_vals):
            if k != _EMPTY:
                self.put(k, v)

    def clear(self):
        self._alloc(_MIN_BITS)

    def items(self):
        for k, v in zip(self._keys, self._vals):
            if k != _EMPTY:
                yield k, v

    def nbytes(self):
        return (self._mask + 1) * 8
