"""Backend selection for the dense GF(q) matrix kernels.

The compiled Cython extension is preferred when it imported successfully and
the field is small enough to carry full add/sub tables; otherwise the
pure-Python implementation runs.  Set HYBRIDNC_PURE_KERNELS=1 to force the
pure path (used by the benchmark for side-by-side timing).
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py as _pure
from .gf import ADD_TABLE_LIMIT, _FieldOps

try:
    from . import _kernels as _compiled  # type: ignore
except ImportError:  # extension not built; pure fallback
    _compiled = None

_FORCE_PURE = os.environ.get("HYBRIDNC_PURE_KERNELS", "") not in ("", "0")


def compiled_available() -> bool:
    return _compiled is not None


def active_backend_name(field: _FieldOps) -> str:
    return "compiled" if tables_for(field).backend is _compiled else "pure"


class FieldTables:
    """Flat lookup tables for one field, shared by both kernel backends."""

    __slots__ = ("field", "order", "qm1", "exp", "log", "add_table",
                 "sub_table", "field_add", "field_sub", "np_exp", "np_log",
                 "np_add", "np_sub", "backend")

    def __init__(self, field: _FieldOps):
        q = field.order
        self.field = field
        self.order = q
        self.qm1 = q - 1
        self.exp = list(field._exp)
        # log[0] is never read (all loops test the operand first)
        self.log = list(field._log)
        self.add_table = field._add_table
        self.sub_table = field._sub_table
        self.field_add = field.add
        self.field_sub = field.sub
        use_compiled = (_compiled is not None and not _FORCE_PURE
                        and q <= ADD_TABLE_LIMIT)
        if use_compiled:
            self.np_exp = np.asarray(self.exp, dtype=np.intc)
            self.np_log = np.asarray(self.log, dtype=np.intc)
            self.np_add = np.asarray(self.add_table, dtype=np.intc)
            self.np_sub = np.asarray(self.sub_table, dtype=np.intc)
            self.backend = _compiled
        else:
            self.np_exp = self.np_log = self.np_add = self.np_sub = None
            self.backend = _pure


def tables_for(field: _FieldOps) -> FieldTables:
    ft = getattr(field, "_kernel_tables", None)
    if ft is None:
        ft = FieldTables(field)
        field._kernel_tables = ft
    return ft


def rref(rows, ncols: int, field: _FieldOps):
    ft = tables_for(field)
    return ft.backend.rref(rows, ncols, ft)


def rank(rows, ncols: int, field: _FieldOps) -> int:
    ft = tables_for(field)
    return ft.backend.rank(rows, ncols, ft)


def matmul(a, b, field: _FieldOps):
    ft = tables_for(field)
    return ft.backend.matmul(a, b, ft)


def reduce_vector(vec, rows, pivots, field: _FieldOps):
    ft = tables_for(field)
    return ft.backend.reduce_vector(vec, rows, pivots, ft)
