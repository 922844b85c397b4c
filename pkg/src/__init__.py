"""
Hypervolume optimal mu-distributions on line- and plane-based fronts in three dimensions.
"""
__version__ = "0.1.0"

from .config import CONFIG
from .exceptions import HvDistError
from .models import FrontKind, FrontSpec, SolutionSet, get_front_spec, list_fronts, validate_front
from .geometry import das_weights, inverted_das_weights, uniform_line_set, uniform_front_set
from .hypervolume import hv2, hv3, hypervolume, hvc, contributions, least_contributor

__all__ = [
    '__version__',
    'CONFIG',
    'HvDistError',
    'FrontKind',
    'FrontSpec',
    'SolutionSet',
    'get_front_spec',
    'list_fronts',
    'validate_front',
    'das_weights',
    'inverted_das_weights',
    'uniform_line_set',
    'uniform_front_set',
    'hv2',
    'hv3',
    'hypervolume',
    'hvc',
    'contributions',
    'least_contributor',
]
