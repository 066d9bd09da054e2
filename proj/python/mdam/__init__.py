"""Python interface to the mdam library."""

from ._core import (
    DataError,
    Fit,
    IdentificationError,
    IoError,
    NumericalError,
    SpecError,
    coefficient_names,
    enumerate_joint,
    fit_config,
    fit_scenario,
    identify,
    simulate_scenario,
    version,
)

__version__ = version()

__all__ = [
    "DataError",
    "Fit",
    "IdentificationError",
    "IoError",
    "NumericalError",
    "SpecError",
    "coefficient_names",
    "enumerate_joint",
    "fit_config",
    "fit_scenario",
    "identify",
    "simulate_scenario",
    "version",
]
