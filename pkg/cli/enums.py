import enum


class InputKind(enum.StrEnum):
    CONE = "cone"
    TORIC_MONOID = "toric-monoid"
    RANK_ONE = "rank-one"
    HOROSPHERICAL = "horospherical"

    @classmethod
    def choices(cls):
        """
        Pair example:
        (toric-monoid, Toric monoid)
        """

        return [(element.value, element.name.replace("_", " ").lower().capitalize()) for element in cls]


class ExitCode(enum.IntEnum):
    OK = 0
    FAILURE = 1
    INPUT_ERROR = 2
    PRECONDITION = 3
    BOX_TOO_SMALL = 4
