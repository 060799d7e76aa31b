"""Finite quasigroups as Cayley tables: parastrophes, isotopy, holomorphs,
and exhaustive checking of identities."""
from .core import (LatinError, LoopProfile, Perm, Quasigroup, associates, compose,
                   cyclic_group, direct_product, divide, is_associative, klein_four,
                   loop_profile, mul, nucleus, symmetric_group_3, tables_equal,
                   totally_symmetric_z3, translation)
from .enumeration import groups, latin_squares, loops, random_quasigroup
from .holomorph import automorphism_group, build_holomorph
from .identities import (builtin, evans_check, identity_holds, is_balanced,
                         khalil_suite, parse_identity)
from .isotopy import (BoundExceeded, Isotopism, apply_isotopism, find_isomorphism,
                      find_isotopism, is_isotopism)
from .parastrophe import Kind

__version__ = "0.1.0"
