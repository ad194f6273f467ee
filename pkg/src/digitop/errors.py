"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An argument violates a documented precondition."""


class ContinuityError(ValueError):
    """An assignment maps some adjacent pair to non-adjacent, unequal values.

    Carries one witnessing domain edge so failures are reproducible.
    """

    def __init__(self, edge: tuple[int, int], values: tuple[int, int]):
        self.edge = edge
        self.values = values
        super().__init__(
            f"adjacent domain points {edge[0]} and {edge[1]} map to "
            f"{values[0]} and {values[1]}, which are neither equal nor adjacent"
        )
