"""Invariants of equigenerated monomial ideals and the classification of
Cohen-Macaulay polymatroidal ideals."""

from .classify import (Classification, Verdict, check_radical_lemma, classify,
                       is_principal, is_squarefree_veronese, is_veronese, radical)
from .core import (DegenerateIdeal, Monomial, MonomialError, MonomialIdeal,
                   NotEquigenerated, divides, is_generated_in_one_degree,
                   minimalize, revlex_less, shrink_to_support)
from .covers import CoverReport, dim_quotient, is_vertex_cover, minimal_vertex_covers
from .exchange import (ExchangeAxiomViolated, ExchangePath, ExchangeWitness,
                       check_dual_exchange, exchange_path, exchange_violation,
                       is_matroidal, is_polymatroidal, product)
from .io import ParseError, format_ideal, load_ideal, parse_ideal, parse_monomial
from .quotients import (NoLinearQuotients, QuotientReport, colon_by_monomial,
                        depth_quotient, is_cohen_macaulay, linear_quotients_revlex)
from .families import principal_ideal, squarefree_veronese, veronese

__version__ = "0.1.0"
