from pathlib import Path
from typing import Union

from catcluster.states.coherent import CoherentTerm, SuperposedState
from catcluster.states.serialization import load_state, state_from_dict


def create_state_obj(state: Union[SuperposedState, dict, str, Path, list]) -> SuperposedState:
    """Checks state to ensure it's a SuperposedState object. It can also be a JSON state dump (as a dict, as JSON
    text or as a path to a JSON file) or a list of CoherentTerm objects. The following checks are performed:
        - If the object is a SuperposedState, return the object.
        - If the object is a list, build a SuperposedState from its CoherentTerm elements.
        - If the object is a dict, read it as a state dump.
        - If the object is a str or Path, load it as JSON text or a JSON file.

    :param state: A SuperposedState, or a representation of one as described above.
    :return: SuperposedState object as-is or created from the representation.
    """

    if isinstance(state, SuperposedState):  # We're good
        return state
    if isinstance(state, list):
        if not all(isinstance(term, CoherentTerm) for term in state):
            raise TypeError("A list state must contain only CoherentTerm objects.")
        return SuperposedState.from_terms(state)
    if isinstance(state, dict):
        return state_from_dict(state)
    if isinstance(state, (str, Path)):
        return load_state(state)
    raise TypeError(
        f"Invalid type '{type(state)}' for `state`. "
        f"Use a SuperposedState, dict, str, Path, or list of CoherentTerm instead."
    )
