"""Bipartite divisor graphs B(X), prime vertex graphs and common divisor
graphs of finite sets of positive integers."""
from .arith import BudgetExceeded, factorize, first_primes, gcd, is_prime
from .divisor import (
    BipartiteDivisorGraph,
    EmptyOrTrivial,
    IntegerSet,
    build_B,
    build_delta,
    build_gamma,
    distance2_graph,
    make_integer_set,
)
from .graph import SimpleGraph
from .realize import BipartitionedGraph, IsolatedVertex, RealizationResult, dualize, realize

__version__ = "0.1.0"
