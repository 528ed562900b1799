import json
from typing import Union, Optional, Any

from sqlalchemy import select
from sqlalchemy.orm import Session

from .tables import FracDBReports

from ..types import ConvexityReport, InequalityReport


__all__ = (
    "FracDBOrm",
)


Report = Union[ConvexityReport, InequalityReport]


class FracDBOrm:
    """
    Object for comfortable work with SQLAlchemy ORM.

    e.g.::

        from fractconvex.database import FracDB, FracDBOrm

        frac_db = FracDB(url="sqlite:///reports.db")

        with FracDBOrm(frac_db.session) as orm:
            rows = orm.select_reports("hh", mode="real")

    Args:
        session: Object of SQLAlchemy :code:`Session`, not open ORM session. It will be opened later.
    """

    # Magic methods
    def __init__(self, session: Session) -> None:
        self.__session = session

    def __enter__(self):
        """Using context manager for connect to database with ORM"""

        self.__session = self.__session.__enter__()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        """Closing context manager with closing ORM session"""

        self.__session.__exit__(exc_type, exc_val, exc_tb)

    # Getters
    @property
    def session(self) -> Session:
        return self.__session

    # Main methods
    def add_report(self, report: Report) -> FracDBReports:
        """
        Add a verification report to the archive.

        Args:
            report: :code:`ConvexityReport` or :code:`InequalityReport`.

        Returns:
            Added row - :code:`FracDBReports`.
        """

        payload = report.to_dict()
        margins: list[Optional[float]] = list(payload["margins"]) + [None, None]

        row = FracDBReports(
            check=payload["check"],
            expr=payload["grid"].get("expr"),
            alpha=payload["alpha"],
            mode=payload["mode"],
            lhs=payload["lhs"],
            mid=payload["mid"],
            rhs=payload["rhs"],
            margin1=margins[0],
            margin2=margins[1],
            satisfied=payload["satisfied"],
            tolerance=payload["tolerance"],
            payload=json.dumps(payload, allow_nan=False)
        )

        self.__session.add(row)
        self.__session.commit()

        return row

    def select_reports(self, check: str, mode: Optional[str] = None) -> list[FracDBReports]:
        """
        Select reports of one check in insertion order.

        Args:
            check: Check name as stored in the report.
            mode: Only reports of this mode, all modes if not.

        Returns:
            List of :code:`FracDBReports`.
        """

        query = select(FracDBReports).where(FracDBReports.check == check)

        if mode is not None:
            query = query.where(FracDBReports.mode == mode)

        return list(self.__session.execute(query.order_by(FracDBReports.id)).scalars())

    def select_report_by_key(self, check: str, expr: Optional[str], alpha: float, mode: str) -> FracDBReports:
        """
        Select the latest report of a check for one expression, alpha and mode.

        Returns:
            Report - :code:`FracDBReports`, None if not archived.
        """

        query = select(FracDBReports).where(
            FracDBReports.check == check,
            FracDBReports.expr == expr,
            FracDBReports.alpha == alpha,
            FracDBReports.mode == mode
        ).order_by(FracDBReports.id.desc())

        return self.__session.execute(query).scalars().first()

    @staticmethod
    def payload(row: FracDBReports) -> dict[str, Any]:
        """JSON report stored in a row."""

        return json.loads(row.payload)
