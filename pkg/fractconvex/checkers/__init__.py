from .convexity import *
from .inequalities import *
from .scenarios import *


__all__: tuple[str, ...] = ()
__all__ += convexity.__all__
__all__ += inequalities.__all__
__all__ += scenarios.__all__
