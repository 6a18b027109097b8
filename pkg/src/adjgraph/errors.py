"""Exception hierarchy shared by every module."""


class GraphError(Exception):
    """Base class for all library errors."""


class NodeNotFoundError(GraphError, KeyError):
    def __init__(self, nid):
        super().__init__(nid)
        self.nid = nid

    def __str__(self):
        return f"node {self.nid} does not exist"


class DuplicateNodeError(GraphError, ValueError):
    def __init__(self, nid):
        super().__init__(nid)
        self.nid = nid

    def __str__(self):
        return f"node {self.nid} already exists"


class EdgeNotFoundError(GraphError, KeyError):
    def __init__(self, *key):
        super().__init__(*key)
        self.key = key

    def __str__(self):
        if len(self.key) == 1:
            return f"edge id {self.key[0]} does not exist"
        return f"edge {self.key[0]} -> {self.key[1]} does not exist"


class InvalidNodeIdError(GraphError, ValueError):
    """Node id outside ``[0, 2**31 - 1]``."""


class ParameterError(GraphError, ValueError):
    """Invalid generator or algorithm parameters."""


class ConvergenceError(GraphError, RuntimeError):
    """A randomized construction gave up after its retry budget."""


# attribute networks

class AttributeSchemaError(GraphError):
    pass


class DuplicateAttributeError(AttributeSchemaError, ValueError):
    pass


class UndeclaredAttributeError(AttributeSchemaError, KeyError):
    pass


class AttributeTypeError(AttributeSchemaError, TypeError):
    pass


# persistence

class GraphFormatError(GraphError, ValueError):
    """Base class for malformed binary or text input."""


class BadMagicError(GraphFormatError):
    pass


class BadVersionError(GraphFormatError):
    pass


class TruncatedStreamError(GraphFormatError):
    pass


class CountMismatchError(GraphFormatError):
    pass


class UnsortedVectorError(GraphFormatError):
    pass


class MalformedLineError(GraphFormatError):
    def __init__(self, lineno, line, reason="expected two integer tokens"):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno
        self.line = line


class NegativeIdError(MalformedLineError):
    def __init__(self, lineno, line):
        super().__init__(lineno, line, reason="negative node id")
