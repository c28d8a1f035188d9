"""cmsurvey: exact-arithmetic toolkit and survey CLI for CM fields.

Class groups by relation collection and by reduced binary quadratic forms,
CM types and reflex fields inside explicit Galois closures, reciprocity
images and field-of-moduli degrees, CM elliptic-curve heights by Dirichlet
L-values and by modular periods, and fundamental-domain point censuses.
"""

__version__ = "0.1.0"
