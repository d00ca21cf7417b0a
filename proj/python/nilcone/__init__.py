"""Exact semi-invariants, normal forms and toric data for nilpotent matrices.

Matrices are lists of rows whose entries may be ints, Fractions or strings
like "3/4"; results come back as Fractions. Semi-invariant data and quiver
morphisms are plain dicts in the JSON layout used by the command-line tool.
"""

import json
from fractions import Fraction

from . import _nilcone
from ._nilcone import (
    GenericityError,
    InputError,
    InternalError,
    NilconeError,
    NotAcceptableError,
    NotConjugateError,
    NotToricError,
    PatternError,
    PreconditionError,
    ScaleError,
    ShapeError,
    SingularityError,
    UnstablePointError,
    accperm,
    chi_extract,
    dual_cone,
    hilbert_basis,
    toric_cone,
    toric_exponents,
)

__all__ = [
    "GenericityError", "InputError", "InternalError", "NilconeError", "NotAcceptableError",
    "NotConjugateError", "NotToricError", "PatternError", "PreconditionError", "ScaleError",
    "ShapeError", "SingularityError", "UnstablePointError",
    "accperm", "chi_extract", "conjugacy_witness", "det", "det_k", "dual_cone", "eval_datum",
    "eval_quiver", "f_ij", "g_ij", "genericity_minors", "git_map_n3", "git_semistable",
    "hilbert_basis", "nonsurjectivity_residual", "normal_form", "random_nilpotent", "rank", "run_cli",
    "toric_cone", "toric_datum", "toric_exponents", "toric_exponents_oracle", "u_quotient_n3",
    "verify_relations", "weight_of",
]


def _encode(matrix):
    return [[str(Fraction(x)) for x in row] for row in matrix]


def _decode(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def _invariant(raw):
    datum, weight, label = raw
    return {"datum": json.loads(datum), "weight": list(weight), "label": label}


def det(matrix):
    return Fraction(_nilcone.det(_encode(matrix)))


def rank(matrix):
    return _nilcone.rank(_encode(matrix))


def random_nilpotent(n, seed):
    return _decode(_nilcone.random_nilpotent(n, seed))


def eval_datum(datum, matrix):
    """Value of the determinantal function f^P for the given datum."""
    return Fraction(_nilcone.eval_datum(json.dumps(datum), _encode(matrix)))


def weight_of(datum, n):
    return list(_nilcone.weight_of(json.dumps(datum), n))


def det_k(n, k):
    return _invariant(_nilcone.det_k(n, k))


def f_ij(n, i, j):
    return _invariant(_nilcone.f_ij(n, i, j))


def g_ij(n, i, j):
    return _invariant(_nilcone.g_ij(n, i, j))


def genericity_minors(matrix, blocks=()):
    return [Fraction(x) for x in _nilcone.genericity_minors(_encode(matrix), list(blocks))]


def normal_form(matrix, group="borel", blocks=(), seed=0):
    """Returns (H, g, minors) with g N g^-1 = H."""
    h, g, minors = _nilcone.normal_form(_encode(matrix), group, list(blocks), seed)
    return _decode(h), _decode(g), [Fraction(x) for x in minors]


def conjugacy_witness(n_matrix, h_matrix, group="borel", blocks=(), seed=0):
    return _decode(_nilcone.conjugacy_witness(_encode(n_matrix), _encode(h_matrix), group, list(blocks), seed))


def toric_datum(a, aprime, n):
    return json.loads(_nilcone.toric_datum(list(a), list(aprime), n))


def toric_exponents_oracle(datum, n):
    return list(_nilcone.toric_exponents_oracle(json.dumps(datum), n))


def eval_quiver(morphism, matrix):
    """Returns (f_phi(N), the equivalent datum)."""
    value, datum = _nilcone.eval_quiver(json.dumps(morphism), _encode(matrix))
    return Fraction(value), json.loads(datum)


def u_quotient_n3(matrix):
    return tuple(Fraction(x) for x in _nilcone.u_quotient_n3(_encode(matrix)))


def git_semistable(matrix):
    return _nilcone.git_semistable(_encode(matrix))


def git_map_n3(matrix):
    return tuple(Fraction(x) for x in _nilcone.git_map_n3(_encode(matrix)))


def nonsurjectivity_residual(matrix):
    return Fraction(_nilcone.nonsurjectivity_residual(_encode(matrix)))


def verify_relations(n, trials=20, seed=1):
    return json.loads(_nilcone.verify_relations(n, trials, seed))


def run_cli(*args):
    """Runs a command-line subcommand in-process; returns (exit code, stdout, stderr)."""
    return _nilcone.cli_run([str(a) for a in args])
