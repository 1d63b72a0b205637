"""Knot diagrams, the order-one invariant I_lk and Reidemeister distance bounds."""

from .group import GroupElement, X, Y, format_element, parse_element
from .diagram import (
    UNKNOT, Diagram, DiagramError, braid_closure, build_Dn, build_En, canonical_code,
    connected_sum, crossing_sign, crossing_switch, faces, from_pd_tuples, is_isomorphic,
    kink, mirror, parse_pd, reverse_orientation, serialize_pd, to_gauss_code,
)
from .invariants import (
    cowrithe, cowrithe_direct, crossing_number, interleaved, invariant_Ilk,
    linking_number, linking_numbers, smooth, writhe,
)
from .bounds import (
    E, F, G, H, K, Functional, Generator, GeneratorSet, best_certificate,
    classify_generator, decomposition_profile, in_R, is_certificate, lower_bound,
    rlength_exact,
)
from .moves import (
    ClassificationError, InapplicableMove, MoveSite, apply_move, classify_delta,
    disjoint_commute_check, dn_to_en_sequence, enumerate_moves, replay,
)
from .conway import BasedDiagram, arnold_A, c2, is_descending
from ._kernel import BACKEND

__version__ = "0.1.0"


def v_n(n: int) -> GroupElement:
    """``I_lk(E_n) - I_lk(D_n)``."""
    return (n + 1) * (X(0) - Y(0)) + n * (Y(1) - X(-1))
