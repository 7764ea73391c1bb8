"""Hand-built diagrams shared by several test modules."""
from foldribbon import PolyDiagram, folds_from_pattern


def piercing_fixture():
    """A sharp fold at the origin with a straight strand crossing its crease.

    The vertical strand passes under the incoming edge and over the outgoing
    edge, yet the underfold puts the outgoing face below the incoming one.
    Once the strand's face reaches the crease (w > 0.6) it would have to
    pass through the fold.
    """
    A = ((0.0, 0.0), (4.0, 1.0), (4.0, -1.0))
    B = ((0.3, -5.0), (0.3, 5.0), (-5.0, 0.0))
    K = PolyDiagram((A, B), {(0, 3, 0): 3, (2, 3, 0): 2})
    return K, folds_from_pattern(K, "UOOOOO")


def contradictory_two_stick():
    """Coincident edges whose recorded stacking disagrees with both folds."""
    K = PolyDiagram((((0.0, 0.0), (1.0, 0.0)),), {}, {(0, 1): 0})
    return K, folds_from_pattern(K, "OO")
