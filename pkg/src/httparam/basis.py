"""Loader for the checked standard library shipped as ``basis.htt``.

The basis is auto-loaded before any user file; its names are reserved.
``HTTPARAM_BASIS`` (or an explicit path) substitutes a different file,
which is a testing hook only.
"""

from __future__ import annotations

import os
from pathlib import Path

from .kernel import Kernel
from .parser import parse
from .syntax import SourceFile

BASIS_FILENAME = "basis.htt"

RESERVED_NAMES = (
    "transport", "ap", "inv", "concat",
    "concat_refl_l", "concat_refl_r", "inv_concat", "concat_inv",
    "transport_inv", "ap_id", "ap_comp", "transport_const",
    "dpath2", "diag_dpath",
    "equiv", "idEquiv", "equiv_empty_unit_absurd",
    "ua", "circRec", "circElim_loop",
)

AXIOM_NAMES = ("ua", "circElim_loop")


def basis_path() -> Path:
    override = os.environ.get("HTTPARAM_BASIS")
    if override:
        return Path(override)
    return Path(__file__).with_name(BASIS_FILENAME)


def parse_basis(path: Path | None = None) -> SourceFile:
    p = path or basis_path()
    return parse(p.read_text(encoding="utf-8"), str(p))


def load_basis(kernel: Kernel, path: Path | None = None) -> SourceFile:
    src = parse_basis(path)
    kernel.load(src)
    return src


def fresh_kernel(path: Path | None = None, with_basis: bool = True) -> Kernel:
    k = Kernel()
    if with_basis:
        load_basis(k, path)
    return k
