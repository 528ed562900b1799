from sqlalchemy import func, String, Text, Float, Boolean, DateTime
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column


__all__ = (
    "base_table_class",
    "FracDBReports"
)


class Base(DeclarativeBase):
    """Main class of database tables"""

    created: Mapped[DateTime] = mapped_column(DateTime, default=func.now())


# Var of main tables class
base_table_class = Base


class FracDBReports(base_table_class):
    """Class of archived verification reports"""

    __tablename__ = "frac_report"

    id: Mapped[int] = mapped_column(primary_key=True, autoincrement=True)

    check: Mapped[str] = mapped_column("check_name", String(50), nullable=False)
    expr: Mapped[str] = mapped_column(String(500), nullable=True)
    alpha: Mapped[float] = mapped_column(Float, nullable=False)
    mode: Mapped[str] = mapped_column(String(10), nullable=False)

    # Sides of the inequality, empty for convexity reports
    lhs: Mapped[float] = mapped_column(Float, nullable=True)
    mid: Mapped[float] = mapped_column(Float, nullable=True)
    rhs: Mapped[float] = mapped_column(Float, nullable=True)

    margin1: Mapped[float] = mapped_column(Float, nullable=True)
    margin2: Mapped[float] = mapped_column(Float, nullable=True)
    satisfied: Mapped[bool] = mapped_column(Boolean, nullable=False)
    tolerance: Mapped[float] = mapped_column(Float, nullable=False)

    # Full JSON report
    payload: Mapped[str] = mapped_column(Text, nullable=False)
