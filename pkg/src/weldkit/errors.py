"""Exception hierarchy. Every error the library raises derives from WeldkitError."""


class WeldkitError(Exception):
    pass


class ParseError(WeldkitError, ValueError):
    pass


class MalformedToken(ParseError):
    def __init__(self, token):
        super().__init__(f"malformed token {token!r}")
        self.token = token


class CrossingCountNotTwo(ParseError):
    def __init__(self, label, count):
        super().__init__(f"crossing {label} appears {count} times, expected 2")
        self.label = label


class DuplicateRole(ParseError):
    def __init__(self, label):
        super().__init__(f"crossing {label} has two passes with the same role")
        self.label = label


class SignMismatch(ParseError):
    def __init__(self, label):
        super().__init__(f"crossing {label} has passes with different signs")
        self.label = label


class UnknownCrossing(WeldkitError, KeyError):
    def __init__(self, label):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"unknown crossing {self.label}"


class BadParameter(WeldkitError, ValueError):
    pass


class BadGap(BadParameter):
    pass


class InapplicableMove(WeldkitError, ValueError):
    pass


class BadModulus(WeldkitError, ValueError):
    pass


class NotRankOne(WeldkitError, ValueError):
    pass


class InternalInconsistency(WeldkitError, RuntimeError):
    """Both an unknot witness and a knottedness certificate were found."""


class CatalogError(WeldkitError):
    pass


class SchemaError(CatalogError, ValueError):
    pass


class FingerprintMismatch(CatalogError, ValueError):
    def __init__(self, name, detail=""):
        super().__init__(f"fingerprint mismatch for {name}" + (f": {detail}" if detail else ""))
        self.name = name


class CatalogMissing(CatalogError, KeyError):
    def __str__(self):
        return f"catalog is missing {self.args[0]}"
