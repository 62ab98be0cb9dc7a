"""Exception hierarchy shared by all modules."""


class CharmError(Exception):
    """Base class for every error raised by this package."""


class GraphError(CharmError, ValueError):
    pass


class NotCubic(GraphError):
    pass


class NotSimple(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadIndex(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class EdgeNotInGraph(CharmError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InvalidFactor(CharmError, ValueError):
    pass


class InvalidCircuit(CharmError, ValueError):
    pass


class CircuitsNotDisjoint(CharmError, ValueError):
    pass


class InvalidMatching(CharmError, ValueError):
    pass


# families

class BadSize(CharmError, ValueError):
    pass


class NotATriangle(CharmError, ValueError):
    pass


class ContractionNotSimple(CharmError, ValueError):
    pass


class NotKlee(CharmError, ValueError):
    pass


class NotKleeLadder(CharmError, ValueError):
    pass


# reductions

class ReductionError(CharmError, ValueError):
    """A surgery precondition does not hold for the given input."""


class NotACyclicCut(ReductionError):
    pass


class WrongCutSize(ReductionError):
    pass


class IndexMismatch(ReductionError):
    pass


class TooManyCrossings(ReductionError):
    pass


class NotA4Circuit(ReductionError):
    pass


class WouldCreateParallel(ReductionError):
    pass


class PairingMismatch(ReductionError):
    pass


class NotA5Circuit(ReductionError):
    pass


class NeighborsCollide(ReductionError):
    pass


class CircuitCollision(ReductionError):
    """Rewritten circuits would share a vertex."""


# solver

class ConnectivityTooLow(CharmError, ValueError):
    pass


class KleeInput(CharmError, ValueError):
    pass


class InternalNoWitness(CharmError, RuntimeError):
    """Raised when the solver exhausts every route without a witness.

    Valid input should never get here; seeing it means a bug or a
    counterexample.
    """
