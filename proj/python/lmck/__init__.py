"""Random d-complex homology: samplers, GF(q) ranks, Smith normal form.

Thin wrapper over the C++ core; see the project README for the CLI and the
file format.
"""

from lmck._core import (  # noqa: F401
    RNG_ALGORITHM,
    ComplexSpec,
    DComplex,
    ResourceError,
    ValidationError,
    __version__,
    betti_mod_q,
    boundary,
    boundary_rank,
    certify_zero,
    cycle_dim,
    estimate_mtilde,
    hadamard_column_bound,
    homology_summary,
    is_zero_integer,
    is_zero_mod_q,
    mean_reducing_size,
    rank_face,
    read_complex,
    read_complex_file,
    reducing_set,
    run_process,
    sample_bernoulli,
    sample_ordering,
    sample_uniform_m,
    smith_normal_form,
    torsion_order_bound,
    union_complexes,
    unrank_face,
    write_complex,
    write_complex_file,
)
