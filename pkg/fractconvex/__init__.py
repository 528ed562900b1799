__version__ = "0.1.0"

from .alpha_core import *
from .special_fn import *
from .expr import *
from .parsers import *
from .calculus import *
from .checkers import *
from .loggers import *
from .params import *
from . import (
    database,
    exc,
    loggers,
    params,
    config,
    types,
    tuples,
    utils
)


__all__: tuple[str, ...] = (
    "database",
    "exc",
    "config",
    "types",
    "tuples",
    "utils"
)

__all__ += alpha_core.__all__
__all__ += special_fn.__all__
__all__ += expr.__all__
__all__ += parsers.__all__
__all__ += calculus.__all__
__all__ += checkers.__all__
__all__ += loggers.__all__
__all__ += params.__all__
