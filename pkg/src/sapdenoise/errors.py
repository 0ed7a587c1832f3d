"""Exception types shared across the package."""


class PnmParseError(ValueError):
    """Malformed PGM/PPM input.  `offset` is the byte position of the problem."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"PNM parse error at byte {offset}: {message}")
        self.offset = offset


class DimensionMismatchError(ValueError):
    """Operands do not share width/height/channel-count."""


class UnknownFilterError(ValueError):
    """Filter designator is not one of the supported names."""


class MetricUndefinedError(ValueError):
    """Metric has no defined value for these inputs (e.g. IEF with noisy == original)."""
