from .nodes import *
from .printer import *
from .simplifier import *
from .evaluator import *
from .polynomial import *


__all__: tuple[str, ...] = ()
__all__ += nodes.__all__
__all__ += printer.__all__
__all__ += simplifier.__all__
__all__ += evaluator.__all__
__all__ += polynomial.__all__
