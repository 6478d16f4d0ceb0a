"""Physical constants entering the transport and noise formulas.

The 2018 SI redefinition fixes the elementary charge, the Planck constant
and the Boltzmann constant exactly; the conductance quantum G0 = 2 e^2 / h
follows from them.
"""

from dataclasses import dataclass, field

__all__ = ["PhysicalConstants", "CODATA"]


@dataclass(frozen=True)
class PhysicalConstants:
    e: float = 1.602176634e-19  # elementary charge, C (exact)
    h: float = 6.62607015e-34   # Planck constant, J s (exact)
    k: float = 1.380649e-23     # Boltzmann constant, J/K (exact)
    G0: float = field(init=False)  # conductance quantum 2 e^2 / h, S

    def __post_init__(self) -> None:
        object.__setattr__(self, "G0", 2.0 * self.e * self.e / self.h)


CODATA = PhysicalConstants()
