import os


class DEFAULT_DIRS:
    ROOT_DIR = os.path.dirname(os.path.abspath(__file__))
    PRESET_DATA_DIR = os.path.join(ROOT_DIR, "clusters/data")


class DEFAULT_TOLERANCES:
    INTEGRAL_ENV_VAR = "CATCLUST_TOL"
    INTEGRAL = 1e-10
    ZERO_NORM = 1e-300
    IMAG_RESIDUE = 1e-12
    RECORD_PROB = 1e-15
    COMPLETENESS_TAIL = 1e-9
    PAIR_WEIGHT_FLOOR = 1e-17
    BISECTION = 1e-12
    FRAME_GAIN = 1e-14

    @classmethod
    def integral(cls) -> float:
        """Integral tolerance, read from CATCLUST_TOL at call time so the CLI and tests can override it."""
        value = os.environ.get(cls.INTEGRAL_ENV_VAR)
        if not value:
            return cls.INTEGRAL
        return float(value)
