import logging
from typing import Dict, Union

from pydantic import ValidationError

from catcluster.exceptions import InvalidThresholdModel
from catcluster.tradeoff.tradeoff import ThresholdModel

AVAILABLE_MODELS = {
    "barrett": {
        "description": "Topological threshold with 0.63% computational errors or 24.9% located loss",
        "display_name": "Barrett-Stace",
        "comp_only": 0.0063,
        "loss_only": 0.249,
    },
    "optimistic": {
        "description": "Computational bound relaxed to 1%, same 24.9% located-loss bound",
        "display_name": "Optimistic",
        "comp_only": 0.01,
        "loss_only": 0.249,
    },
}


class CatClusterModel:
    """
    Implement the Factory pattern for the threshold models the tradeoff curves are compared against.
    """

    def __init__(self, model: Union[str, ThresholdModel]):
        """Initialize instance attributes.

        :param model: Name of a registered model, or a ThresholdModel to pass through.
        :type model: Union[str, ThresholdModel]
        """
        logging.debug(f"Executing CatClusterModel constructor. model: {model}")
        self.model = model

    def create_model(self) -> ThresholdModel:
        """
        Create the threshold model.

        :return: The ThresholdModel named by `model`, or `model` itself if it already is one.
        :rtype: ThresholdModel
        """
        if isinstance(self.model, ThresholdModel):
            return self.model
        if self.model in AVAILABLE_MODELS:
            entry = AVAILABLE_MODELS[self.model]
            return ThresholdModel(name=self.model, comp_only=entry["comp_only"], loss_only=entry["loss_only"])

        raise InvalidThresholdModel(
            'Threshold model not supported: "{}". Available models:\n{}'.format(
                self.model, "\n".join([f"{k}: {v['description']}" for k, v in AVAILABLE_MODELS.items()])
            )
        )

    @classmethod
    def custom(cls, comp_only: float, loss_only: float, name: str = "custom") -> ThresholdModel:
        """Build a model from explicit bounds, raising InvalidThresholdModel instead of a pydantic error."""
        try:
            return ThresholdModel(name=name, comp_only=comp_only, loss_only=loss_only)
        except ValidationError as exc:
            raise InvalidThresholdModel(f"Invalid threshold model bounds: {exc.errors()[0]['msg']}") from exc

    @classmethod
    def display_available_models(cls) -> Dict[str, Dict]:
        """Simple class method for returning dict of available threshold models and their bounds
        :return: Dict containing model name, description, display name and bounds
        :rtype: Dict[str, Dict]
        """
        return AVAILABLE_MODELS
