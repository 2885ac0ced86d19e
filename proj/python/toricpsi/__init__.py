"""Exact computations on toric posets.

Thin re-export of the compiled module: quivers and sink-source flips, flip
classes and their fingerprint-based equality, toric Hasse diagrams and
closures, toric total extensions via three independent enumeration routes,
and the exact rational functions attached to posets and toric posets.
"""

try:  # installed layout: the extension lives inside the package
    from . import _toricpsi as _impl
except ImportError:  # build-tree layout: the extension is importable top-level
    import _toricpsi as _impl

InputError = _impl.InputError
ResourceLimitError = _impl.ResourceLimitError
Quiver = _impl.Quiver
RationalFunction = _impl.RationalFunction
count_toric_extensions = _impl.count_toric_extensions
flip = _impl.flip
flip_class = _impl.flip_class
is_acyclic = _impl.is_acyclic
linear_extensions = _impl.linear_extensions
parse_quiver = _impl.parse_quiver
psi_poset = _impl.psi_poset
psi_tor = _impl.psi_tor
run_suite = _impl.run_suite
same_toric_poset = _impl.same_toric_poset
serialize_quiver = _impl.serialize_quiver
sinks = _impl.sinks
sources = _impl.sources
suite_names = _impl.suite_names
toric_extensions = _impl.toric_extensions
toric_hasse = _impl.toric_hasse
toric_transitive_closure = _impl.toric_transitive_closure

__all__ = [
    "InputError",
    "Quiver",
    "RationalFunction",
    "ResourceLimitError",
    "count_toric_extensions",
    "flip",
    "flip_class",
    "is_acyclic",
    "linear_extensions",
    "parse_quiver",
    "psi_poset",
    "psi_tor",
    "run_suite",
    "same_toric_poset",
    "serialize_quiver",
    "sinks",
    "sources",
    "suite_names",
    "toric_extensions",
    "toric_hasse",
    "toric_transitive_closure",
]
