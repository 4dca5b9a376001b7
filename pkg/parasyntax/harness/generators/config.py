from dataclasses import dataclass, replace

__all__ = ["GenConfig"]


@dataclass(frozen=True)
class GenConfig:
    """
    Knobs of the random program generators. Equal configurations generate
    equal programs.
    """

    seed: int = 0
    max_depth: int = 6
    """Nesting limit for statements and expressions."""
    max_stmts: int = 5
    """Maximum number of statements per block."""
    loops: bool = True
    short_circuit: bool = True
    shadowing: bool = True
    """Allow declarations in nested blocks to reuse visible names."""
    parallel_assign: bool = True
    """Allow declarations and assignments of several names at once."""

    def nth(self, index: int) -> "GenConfig":
        """The configuration of the `index`-th program of a corpus."""
        return replace(self, seed=self.seed + index)
