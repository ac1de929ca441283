"""Exception hierarchy.

Every error raised by validation names the witnessing labels so that a
failing check can be traced back to a single table entry.
"""


class FinKanError(Exception):
    """Base class for all errors raised by finkan."""


class SemanticError(FinKanError, ValueError):
    """Well-formed input that violates a structural law."""


class ParseError(FinKanError):
    def __init__(self, line, column, expected):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"line {line}, column {column}: expected {expected}")


class UnknownObject(SemanticError):
    def __init__(self, obj):
        self.obj = obj
        super().__init__(f"unknown object {obj!r}")


class UnknownMorphism(SemanticError):
    def __init__(self, mor):
        self.mor = mor
        super().__init__(f"unknown morphism {mor!r}")


# category axioms

class MissingIdentity(SemanticError):
    def __init__(self, obj):
        self.obj = obj
        super().__init__(f"object {obj!r} has no identity morphism")


class IdentityLawViolation(SemanticError):
    def __init__(self, mor):
        self.mor = mor
        super().__init__(f"identity law fails at morphism {mor!r}")


class CompositionDomainError(SemanticError):
    def __init__(self, a, b, present):
        self.a, self.b, self.present = a, b, present
        what = "entry for non-composable pair" if present else "missing entry for composable pair"
        super().__init__(f"{what} ({a!r}, {b!r})")


class SourceTargetMismatch(SemanticError):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"composite of ({a!r}, {b!r}) has wrong source or target")


class AssociativityViolation(SemanticError):
    def __init__(self, a, b, c):
        self.a, self.b, self.c = a, b, c
        super().__init__(f"(ab)c != a(bc) for ({a!r}, {b!r}, {c!r})")


# functors

class IdentityNotPreserved(SemanticError):
    def __init__(self, obj):
        self.obj = obj
        super().__init__(f"functor does not send the identity of {obj!r} to an identity")


class CompositionNotPreserved(SemanticError):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"functor does not preserve the composite of ({a!r}, {b!r})")


class SourceTargetNotPreserved(SemanticError):
    def __init__(self, mor):
        self.mor = mor
        super().__init__(f"functor does not preserve source/target of {mor!r}")


# presheaves and natural transformations

class IdentityActionViolation(SemanticError):
    def __init__(self, obj):
        self.obj = obj
        super().__init__(f"identity at {obj!r} does not act as the identity map")


class FunctorialityViolation(SemanticError):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"action of composite ({a!r}, {b!r}) is not the composite action")


class IllTypedAction(SemanticError):
    def __init__(self, mor, detail=""):
        self.mor = mor
        super().__init__(f"action of {mor!r} is not a map of the right sets" + (f": {detail}" if detail else ""))


class NaturalityViolation(SemanticError):
    def __init__(self, mor, element=None):
        self.mor, self.element = mor, element
        at = f" at element {element!r}" if element is not None else ""
        super().__init__(f"naturality square for {mor!r} does not commute{at}")


class IllTypedComponent(SemanticError):
    def __init__(self, obj, detail=""):
        self.obj = obj
        super().__init__(f"component at {obj!r} is not a map of the right sets" + (f": {detail}" if detail else ""))


class BaseMismatch(SemanticError):
    def __init__(self, detail="presheaves live over different categories"):
        super().__init__(detail)


class CompositionMismatch(SemanticError):
    def __init__(self):
        super().__init__("target of the first transformation is not the source of the second")


# tensor products

class NotCoequalizing(SemanticError):
    def __init__(self, mor, left, right):
        self.mor, self.left, self.right = mor, left, right
        super().__init__(f"map does not coequalize the relation along {mor!r} at ({left!r}, {right!r})")


# generation

class GenerationExhausted(FinKanError):
    pass


class LawViolation(FinKanError, AssertionError):
    """An identity that must hold by construction failed at runtime."""
