"""
Symmetric thermal optimal path (TOPS) lead-lag analysis.

Subpackages:
- series_prep: CSV ingestion, continuous futures splicing, log returns.
- tops: distance matrix, thermal weight recursion, ensemble path.
- stats: summary statistics, JB / ADF tests, correlation, OLS.
- selfconsistent: rolling regression check of an inferred lead-lag path.
- synthetic: known-lag generators, recovery scoring, brute-force oracle.
"""

__version__ = "0.1.0"
