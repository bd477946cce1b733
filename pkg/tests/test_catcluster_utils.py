import pytest

from catcluster.states import CoherentTerm, SuperposedState, cat_state, dump_state
from catcluster.states.serialization import state_to_dict
from catcluster.utils.catcluster_utils import create_state_obj


@pytest.fixture
def cat():
    """Fixture for a normalized alpha = 2 cat state"""
    return cat_state(2.0)


def test_create_state_obj_state(cat):
    """Tests creating a SuperposedState from a SuperposedState, aka just return the state"""
    assert create_state_obj(cat) is cat


def test_create_state_obj_dict(cat):
    """Tests creating a SuperposedState from a state dump dict"""
    assert isinstance(create_state_obj(state_to_dict(cat)), SuperposedState)


def test_create_state_obj_json_text(cat):
    """Tests creating a SuperposedState from JSON text"""
    assert create_state_obj(dump_state(cat)).modes == 1


def test_create_state_obj_path(cat, tmp_path):
    """Tests creating a SuperposedState from a JSON file"""
    path = tmp_path / "cat.json"
    dump_state(cat, path)
    assert len(create_state_obj(path)) == 2
    assert len(create_state_obj(str(path))) == 2


def test_create_state_obj_terms():
    """Tests creating a SuperposedState from a list of CoherentTerm"""
    state = create_state_obj([CoherentTerm(1.0, (0.0, 1.0)), CoherentTerm(1j, (2.0, 3.0))])
    assert state.modes == 2 and len(state) == 2


def test_create_state_obj_invalid_type():
    """Tests creating a SuperposedState from an invalid type"""
    with pytest.raises(TypeError):
        create_state_obj(1)  # Invalid type


def test_create_state_obj_invalid_type_list():
    """Tests creating a SuperposedState from an invalid type list"""
    with pytest.raises(TypeError):
        create_state_obj([1])  # Invalid type list
