from .perm import Permutation, compose, inverse, fixed_points
from .group import PermGroup
from .named import symmetric, alternating, cyclic, dihedral, WreathProduct
from .actions import Action, ActionSpec, LieTag, realize, coset_action
from .subgroups import subgroups_containing, maximal_overgroups

__all__ = ["Permutation", "compose", "inverse", "fixed_points", "PermGroup",
           "symmetric", "alternating", "cyclic", "dihedral", "WreathProduct",
           "Action", "ActionSpec", "LieTag", "realize", "coset_action",
           "subgroups_containing", "maximal_overgroups"]
