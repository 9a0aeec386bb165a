"""Shared pipeline construction, cached per Lie type across the whole run."""

from __future__ import annotations

from dataclasses import dataclass

from sasakian.chevalley import (ChevalleyBasis, CompactForm, build_chevalley,
                                compact_real_form)
from sasakian.datum import ComplexDatum, build_complex_datum
from sasakian.roots import RootSystem, build_root_system, highest_root
from sasakian.tensors import (NomizuTable, ReductiveSplit, SasakiModel,
                              build_model, compact_split, nomizu,
                              verify_sasaki_identities)


@dataclass
class Pipeline:
    rs: RootSystem
    cb: ChevalleyBasis
    cf: CompactForm
    datum: ComplexDatum
    split: ReductiveSplit
    model: SasakiModel
    nomizu: NomizuTable


_CACHE: dict[str, Pipeline] = {}
_LIGHT_CACHE: dict[str, tuple] = {}


def light_pipeline(name: str):
    """Root system, Chevalley basis and datum only (no compact form)."""
    got = _LIGHT_CACHE.get(name)
    if got is None:
        if name in _CACHE:
            p = _CACHE[name]
            got = (p.rs, p.cb, p.datum)
        else:
            rs = build_root_system(name)
            cb = build_chevalley(rs)
            d = build_complex_datum(cb, highest_root(rs))
            got = (rs, cb, d)
        _LIGHT_CACHE[name] = got
    return got


def pipeline(name: str) -> Pipeline:
    got = _CACHE.get(name)
    if got is None:
        rs, cb, d = light_pipeline(name)
        cf = compact_real_form(cb)
        split = compact_split(d, cf)
        model = build_model(split)
        verify_sasaki_identities(model)
        nt = nomizu(model)
        got = Pipeline(rs=rs, cb=cb, cf=cf, datum=d, split=split, model=model,
                       nomizu=nt)
        _CACHE[name] = got
    return got
