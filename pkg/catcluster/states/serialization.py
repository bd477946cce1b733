import json
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from catcluster.states.coherent import SuperposedState


def state_to_dict(state: SuperposedState) -> Dict[str, Any]:
    """State dump in the ``{"modes", "terms": [{"coeff": [re, im], "alphas": [[re, im], ...]}]}`` layout."""
    return {
        "modes": state.modes,
        "terms": [
            {
                "coeff": [float(c.real), float(c.imag)],
                "alphas": [[float(a.real), float(a.imag)] for a in row],
            }
            for c, row in zip(state.coeffs, state.alphas)
        ],
    }


def state_from_dict(data: Dict[str, Any]) -> SuperposedState:
    modes = int(data["modes"])
    terms = data["terms"]
    coeffs = np.array([complex(*term["coeff"]) for term in terms], dtype=np.complex128)
    alphas = np.array([[complex(*pair) for pair in term["alphas"]] for term in terms], dtype=np.complex128)
    return SuperposedState(coeffs, alphas.reshape(len(terms), modes))


def dump_state(state: SuperposedState, path: Union[str, Path, None] = None) -> str:
    """Serialize to JSON. Python's float repr keeps every double exactly, so a reload is lossless."""
    text = json.dumps(state_to_dict(state), indent=2)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def load_state(source: Union[str, Path]) -> SuperposedState:
    """Load a state from a JSON file path or from JSON text."""
    if isinstance(source, Path) or not str(source).lstrip().startswith("{"):
        source = Path(source).read_text(encoding="utf-8")
    return state_from_dict(json.loads(source))
