from .numeric import *
from .render import *


__all__: tuple[str, ...] = ()
__all__ += numeric.__all__
__all__ += render.__all__
