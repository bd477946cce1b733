# STATES
class ModeMismatchError(Exception):
    """
    Exception for the :mod:`coherent state <catcluster.states.coherent>` module.

    To be used when two states or terms that must share a mode count do not.
    """


class InvalidModeError(Exception):
    """For use when a mode index is out of range, or when two mode indices that must differ are equal"""


class CancelledStateError(Exception):
    """
    Exception for :func:`catcluster.states.coherent.normalize`.

    To be used when the Gram-sum norm of a superposition is at or below numerical zero, i.e. the terms cancelled.
    """


class InvalidAmplitudeError(Exception):
    """For use when a cat or Bell amplitude is not a positive finite number"""


class InvalidBeamSplitterParams(Exception):
    """For use when theta is outside [0, pi/2] or phi is outside (-pi, pi]"""


# MEASUREMENTS
class QuadratureError(Exception):
    """
    Exception for :func:`catcluster.measurements.projectors.gaussian_band_integral`.

    To be used when neither the complex error function route nor the adaptive quadrature fallback reaches the
    requested accuracy.
    """


# CLUSTERS
class InvalidGraphError(Exception):
    """For use when a graph has self-loops, duplicate edges or vertices out of range"""


class InvalidCatClusterGraph(Exception):
    """
    Exception for the :class:`Graph Factory <catcluster.catcluster_graph_factory.CatClusterGraph>` factory.

    To be used when the requested graph preset is not available.
    """


# METRICS
class InvalidOperatorPattern(Exception):
    """
    Exception for the :mod:`visibility <catcluster.metrics.visibility>` module.

    To be used when a pattern has labels other than I/X/Z, has no measured vertex, does not match the state or
    graph size, or is not an element of the cluster's stabilizer group.
    """


class ErInversionRangeError(Exception):
    """For use when a fidelity or visibility lies outside the range a depolarizing error rate can explain"""


# TELEPORT
class CutoffTooSmallError(Exception):
    """
    Exception for :func:`catcluster.teleport.teleporter.scan_outcomes`.

    To be used when the photon-number cutoff leaves more than the allowed probability mass unscanned.
    """


class EmptyAcceptanceSetError(Exception):
    """For use when an accepted set of detection patterns is empty or carries zero probability"""


# TRADEOFF
class InvalidThresholdModel(Exception):
    """
    Exception for the :class:`Threshold Model Factory <catcluster.catcluster_model_factory.CatClusterModel>`
    factory.

    To be used when the requested threshold model is not available.
    """


class NoCrossingError(Exception):
    """For use when no amplitude on the supplied grid brings a tradeoff curve under the threshold line"""


class EmptyScanError(Exception):
    """For use when a teleporter scan produced no outcome records to build a tradeoff curve from"""


# SWEEPS
class InvalidCatClusterSweep(Exception):
    """
    Exception for the :class:`Sweep Factory <catcluster.catcluster_sweep_factory.CatClusterSweep>` factory.

    To be used when the requested sweep command is not available.
    """


class InvalidSweepConfig(Exception):
    """For use when a sweep configuration is valid on its own but not for the requested command"""
