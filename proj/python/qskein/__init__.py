"""Exact skein computations in the determinantal basis."""

try:
    from ._qskein import (
        eigenvalue,
        evaluate,
        expand,
        homfly_braid,
        k_box_box_braid,
        macdonald,
        multiply,
        phi_n,
        q_expand,
        template_rows,
        verify,
    )
except ImportError:  # build-tree layout: _qskein.so next to the package
    from _qskein import (
        eigenvalue,
        evaluate,
        expand,
        homfly_braid,
        k_box_box_braid,
        macdonald,
        multiply,
        phi_n,
        q_expand,
        template_rows,
        verify,
    )

__version__ = "0.1.0"

__all__ = [
    "eigenvalue",
    "evaluate",
    "expand",
    "homfly_braid",
    "k_box_box_braid",
    "macdonald",
    "multiply",
    "phi_n",
    "q_expand",
    "template_rows",
    "verify",
]
