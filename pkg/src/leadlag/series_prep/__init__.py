from leadlag.series_prep.csv_io import export_spliced, parse_price_csv
from leadlag.series_prep.returns import log_returns, standardize
from leadlag.series_prep.splicing import (
    FUTURES_SERIES,
    align_common_dates,
    splice_continuous_futures,
    spot_futures_basis,
)
from leadlag.series_prep.types import ContractQuote, PricePoint, PriceSeries, ReturnSeries

__all__ = [
    "ContractQuote",
    "FUTURES_SERIES",
    "PricePoint",
    "PriceSeries",
    "ReturnSeries",
    "align_common_dates",
    "export_spliced",
    "log_returns",
    "parse_price_csv",
    "splice_continuous_futures",
    "spot_futures_basis",
    "standardize",
]
