from .coherent import (
    BeamSplitterParams,
    CoherentTerm,
    ComplexAmp,
    SuperposedState,
    apply_beam_splitter,
    apply_displacement,
    cat_state,
    inner,
    norm2,
    normalize,
    overlap,
    permute_modes,
    prune_terms,
    tensor,
    term_overlap,
)
from .serialization import dump_state, load_state
