"""Number formatting shared by every text interface."""

__all__ = ["sig9"]


def sig9(x: float) -> str:
    """Render a float at 9 significant digits, the package-wide text precision."""
    return format(float(x), ".9g")
