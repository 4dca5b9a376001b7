"""
Exceptions raised by parasyntax.

Every error carries its structured fields as attributes and renders a one-line
diagnostic with :func:`str`.
"""


class ParasyntaxError(Exception):
    pass


# Terms


class TermError(ParasyntaxError):
    pass


class ArityMismatch(TermError):
    def __init__(self, kind, what, expected, actual):
        self.kind = kind
        self.what = what
        self.expected = expected
        self.actual = actual
        super().__init__(f"{kind}: expected {expected} {what}, got {actual}")


class SortMismatch(TermError):
    def __init__(self, position, expected, actual, where=""):
        self.position = position
        self.expected = expected
        self.actual = actual
        prefix = f"{where}: " if where else ""
        super().__init__(
            f"{prefix}sort mismatch at position {position}: expected {expected}, got {actual}"
        )


class PayloadMismatch(TermError):
    def __init__(self, kind, position, expected, value):
        self.kind = kind
        self.position = position
        self.expected = expected
        self.value = value
        super().__init__(
            f"{kind}: payload {position} expects {expected}, got {value!r}"
        )


class UnknownKind(TermError):
    def __init__(self, kind, signature):
        self.kind = kind
        self.signature = signature
        super().__init__(f"{kind} is not a kind of signature {signature}")


class NotAContainerTerm(TermError):
    def __init__(self, sort, container):
        self.sort = sort
        self.container = container
        super().__init__(f"expected {container} sort, got {sort}")


class NotAListTerm(NotAContainerTerm):
    def __init__(self, sort):
        super().__init__(sort, "a list")


class InvalidPath(TermError):
    def __init__(self, path, reason=""):
        self.path = path
        super().__init__(f"invalid path {path}" + (f": {reason}" if reason else ""))


# Schemas and signatures


class SchemaError(ParasyntaxError):
    pass


class SchemaSyntaxError(SchemaError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class InvalidSchema(SchemaError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"invalid schema: {report}")


class NonConformingValue(SchemaError):
    def __init__(self, expected, value):
        self.expected = expected
        self.value = value
        super().__init__(f"value {value!r} does not conform to {expected}")


class ForeignKind(SchemaError):
    def __init__(self, kind):
        self.kind = kind
        super().__init__(f"kind {kind} does not belong to the modularized language")


class DuplicateKind(SchemaError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"duplicate kind {name}")


class RemovedKindNotPresent(SchemaError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"cannot remove {name}: no such kind")


# Injections


class InjectionError(ParasyntaxError):
    pass


class IllTypedPath(InjectionError):
    def __init__(self, source, target, reason):
        self.source = source
        self.target = target
        super().__init__(f"ill-typed injection path {source} -> {target}: {reason}")


class DuplicateInjection(InjectionError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"injection {source} -> {target} already declared")


class NoInjection(InjectionError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"no injection {source} -> {target}")


class MissingEdge(InjectionError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"cannot compose: missing edge {source} -> {target}")


class AmbiguousInjection(InjectionError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"two derived paths for {source} -> {target}")


# Rewriting


class SortViolation(ParasyntaxError):
    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f"rewrite changed sort {expected} into {actual}")


# Frontends


class FrontendError(ParasyntaxError):
    pass


class SourceError(FrontendError):
    """A source or schema file that cannot be read or written."""

    def __init__(self, file, reason):
        self.file = file
        self.reason = reason
        super().__init__(f"{file}: {reason}")

    @classmethod
    def from_error(cls, file, error: Exception) -> "SourceError":
        if isinstance(error, UnicodeDecodeError):
            return cls(file, f"not UTF-8 text, byte {error.start} cannot be decoded")
        return cls(file, getattr(error, "strerror", None) or str(error))


class ParseError(FrontendError):
    def __init__(self, line, col, expected, found=None):
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found
        message = f"{line}:{col}: expected {expected}"
        if found is not None:
            message += f", found {found!r}"
        super().__init__(message)


class UnrepresentableTerm(FrontendError):
    def __init__(self, language, term):
        self.language = language
        self.term = term
        super().__init__(f"{language} has no rendering for {term.kind.name} here")


class UnconvertibleInit(FrontendError):
    def __init__(self, language, reason):
        self.language = language
        super().__init__(f"{language}: initializer has no expression form ({reason})")


# Flow


class FlowError(ParasyntaxError):
    pass


class UnstructuredConstruct(FlowError):
    pass


# Passes


class PassError(ParasyntaxError):
    pass


class RequirementMissing(PassError):
    def __init__(self, pass_name, language, missing):
        self.pass_name = pass_name
        self.language = language
        self.missing = missing
        super().__init__(f"{pass_name} cannot run on {language}: missing {missing}")


class LocalLimit(PassError):
    pass
