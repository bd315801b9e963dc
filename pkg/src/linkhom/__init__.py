"""Link invariants from braid closures: Jones, HOMFLY, Khovanov and triply graded homology."""

__version__ = "0.1.0"
