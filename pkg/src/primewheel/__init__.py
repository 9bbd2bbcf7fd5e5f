"""Prime generation and primality testing on the 6k +/- 1 wheel."""

from .counting import (
    CountReportRow,
    CutCounts,
    count_report,
    cut_ratio,
    exact_prime_count,
    paper_prime_count,
    theorem4_counts,
)
from .errors import (
    BadMagic,
    ChecksumMismatch,
    OutOfTableRange,
    RangeError,
    TableFormatError,
    TruncatedStream,
    VersionMismatch,
)
from .oracle import OracleKind, OracleVerdict, eratosthenes, trial_division
from .primality import PrimalityVerdict, Verdict, is_prime_naive, is_prime_table
from .residue import ClassifiedNumber, ResidueClass, TrivialStatus, classify, lemma_status, value_of
from .selectors import (
    SelectorKind,
    SelectorWitness,
    enumerate_selector_indices,
    find_composite_witness,
    paper_index_bounds,
    paper_selector_count,
    selector_value,
    selector_value_shifted,
)
from .sieve import PrimeList, primes_up_to
from .table import CompositeIndexTable, build_composite_index_table, deserialize_table, serialize_table

__version__ = "0.1.0"
