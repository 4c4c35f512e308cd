"""Exact-arithmetic toolkit for uniserial length categories.

Submodules: linalg (Gaussian-rational matrices), weyl (the first Weyl
algebra), gradedrep and quiverrep (the two object backends), abcat (the
category engine), species (the uniseriality criterion and classifier),
itext (iterated extensions and deformations), weylcat (the catalog and
theorem verifier), cli (command-line front end).
"""

__version__ = "0.1.0"
