"""Boolean inverse monoids: finite instances, duality and the Cuntz monoids C_n."""

import json

from ._tarski import (
    EPPoint,
    FiniteMonoid,
    PrefixMap,
    TarskiError,
    apply_point,
    cli,
    clopen_iso,
    compatible,
    conjugator_unit,
    cooper_decompose,
    domain_idempotent,
    f1_witness,
    f2_witness,
    f3_witness,
    find_moved_point,
    hengist_witness,
    infinitesimal_at,
    is_infinitesimal,
    is_involution,
    is_unit,
    leq,
    orthogonal,
    phi,
    piecewise_factorize,
    principality_decompose,
    properly_infinite_witness,
    range_idempotent,
    separating_idempotent,
    sigma,
    support_cover,
    transfer_witness,
    unit_in_ultrafilter,
)
from . import _tarski


def analyze(instance, seed=42, samples=100):
    """Analysis report as a dict. `instance` is a FiniteMonoid, a finite spec or "cn:<n>"."""
    if isinstance(instance, str) and instance.startswith("cn:"):
        return json.loads(_tarski._analyze_cuntz_json(int(instance[3:]), seed, samples))
    if isinstance(instance, str):
        instance = FiniteMonoid(instance)
    return json.loads(_tarski._analyze_json(instance))


def roundtrip(instance):
    """Certificate of the round trip S -> B(G(S))."""
    if isinstance(instance, str):
        instance = FiniteMonoid(instance)
    return json.loads(_tarski._roundtrip_json(instance))


def run_suite(name, instance="", seed=42, samples=100):
    """Seeded property suite report as a dict."""
    return json.loads(_tarski._suite_json(name, instance, seed, samples))

