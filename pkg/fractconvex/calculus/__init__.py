from .symbolic import *
from .integral import *
from .taylor import *
from .diagnostics import *


__all__: tuple[str, ...] = ()
__all__ += symbolic.__all__
__all__ += integral.__all__
__all__ += taylor.__all__
__all__ += diagnostics.__all__
