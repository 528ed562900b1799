from .engine import FracDB
from .orm import FracDBOrm
from .tables import base_table_class, FracDBReports


__all__: tuple[str, ...] = (
    "FracDB",
    "FracDBOrm",
    "FracDBReports",
    "base_table_class"
)
