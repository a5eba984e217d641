import enum


class RayRole(enum.StrEnum):
    RHO0 = enum.auto()
    RHO0_PRIME = enum.auto()
    G_STABLE = enum.auto()

    @classmethod
    def choices(cls):
        """
        Pair example:
        (rho0_prime, Rho0 prime)
        """

        return [(element.value, element.name.replace("_", " ").lower().capitalize()) for element in cls]
