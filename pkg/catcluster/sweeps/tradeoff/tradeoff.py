import logging
from pathlib import Path
from typing import Any, Dict, List

from catcluster.catcluster_model_factory import CatClusterModel
from catcluster.exceptions import NoCrossingError
from catcluster.sweeps.catcluster_abstract_sweep import AbstractCatClusterSweep
from catcluster.teleport.teleporter import scan_cutoff
from catcluster.tradeoff.tradeoff import find_crossing_alpha, reported_alpha, summary_table, tradeoff_curve
from catcluster.utils.output import write_csv, write_json

CURVE_FIELDNAMES = ["alpha", "reported_alpha", "set_size", "er_comp", "er_loss", "f_av", "p_det"]


class CatClusterTradeoffSweep(AbstractCatClusterSweep):
    """Loss/error tradeoff curves over a grid of logical amplitudes plus the photon accounting summary.

    ``out_path`` is a directory: one CSV per amplitude and ``summary.json``.
    """

    fieldnames = CURVE_FIELDNAMES
    description = "Located-loss versus computational-error curves, threshold crossing and photon accounting"

    def _cutoff(self, alpha: float) -> int:
        return self.config.cutoff if self.config.cutoff is not None else scan_cutoff(alpha)

    def curve_rows(self, alpha: float) -> List[Dict[str, Any]]:
        reported = reported_alpha(alpha, self.config.penalty)
        return [
            {
                "alpha": alpha,
                "reported_alpha": reported,
                "set_size": point.set_size,
                "er_comp": point.er_comp,
                "er_loss": point.er_loss,
                "f_av": point.f_av,
                "p_det": point.p_det,
            }
            for point in tradeoff_curve(alpha, self._cutoff(alpha), input=self.config.input)
        ]

    def compute(self) -> List[List[Dict[str, Any]]]:
        return self.map_points(self.curve_rows, self.config.alphas(), "tradeoff")

    def summary(self) -> Dict[str, Any]:
        """Photon accounting at the threshold crossing; ``rows`` is empty when the grid never crosses."""
        model = CatClusterModel(self.config.model).create_model()
        summary = {"model": model.model_dump(), "penalty": self.config.penalty, "crossing_alpha": None, "rows": []}
        try:
            crossing = find_crossing_alpha(
                model, self.config.alphas(), self._cutoff, penalty=self.config.penalty, input=self.config.input
            )
        except NoCrossingError as exc:
            logging.warning(f"tradeoff: {exc}")
            return summary
        summary["crossing_alpha"] = crossing
        summary["rows"] = summary_table([model], self.config.penalty, self.config.alphas(), {model.name: crossing})
        return summary

    def run(self) -> List[Path]:
        out_dir = Path(self.config.out_path)
        written = []
        for alpha, rows in zip(self.config.alphas(), self.compute()):
            written.append(write_csv(out_dir / f"tradeoff_alpha_{alpha:.4f}.csv", self.fieldnames, rows))
        written.append(write_json(out_dir / "summary.json", self.summary()))
        return written
