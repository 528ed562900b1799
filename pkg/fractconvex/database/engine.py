from typing import Union, Optional, Any, Callable

from sqlalchemy import create_engine, Engine
from sqlalchemy.engine.url import URL
from sqlalchemy.exc import SQLAlchemyError
from sqlalchemy.orm import sessionmaker, Session

from .tables import base_table_class
from .orm import FracDBOrm

from ..exc import FracDBExc
from ..loggers import frac_logger


__all__ = (
    "FracDB",
)


class FracDB:
    """
    Engine for work with the report archive. Need for connect, create, drop database and create ORM session.

    Args:
        url: SQLAlchemy URL for connect to database.
        engine: Your :code:`Engine` for connect to database.
        drop: Before creating all tables (if exists) drop database.
        echo: Logging of SQLAlchemy database engine.
        kwargs: Advanced params for :code:`Engine`.

    Raises:
        ValueError: if url and engine not be indicated.
        FracDBExc: if engine can not be created from url.
    """

    # Magic methods
    def __init__(
            self,
            *,
            url: Optional[Union[str, URL]] = None,
            engine: Optional[Engine] = None,
            drop: bool = False,
            echo: bool = False,
            **kwargs: Any
    ) -> None:

        if url is None and engine is None:
            raise ValueError("At least one of the parameters should be indicated: url or engine")

        self.__url = url

        try:
            self.__engine = create_engine(self.__url, echo=echo, **kwargs) if engine is None else engine

        except (SQLAlchemyError, ValueError) as error:
            frac_logger.db.error(f"Can not create engine: {error}")
            raise FracDBExc(f"Can not connect to report archive '{url}': {error}") from error

        self.__session_maker = sessionmaker(bind=self.__engine, class_=Session, expire_on_commit=False)

        # FracDB params
        self.__db_configured = False
        self.__db_drop_param = drop

    # Getters
    @property
    def url(self) -> Union[str, URL]:
        return self.__url

    @property
    def engine(self) -> Engine:
        return self.__engine

    @property
    def session_maker(self) -> sessionmaker:
        return self.__session_maker

    @property
    def session(self) -> Session:
        """
        Returns:
            ORM session for connect database. Is not open ORM session.
        """

        return self.__session_maker()

    # Main methods
    def orm_decorator(self):
        """
        Decorator for connect to database.
        Forward in function open :code:`FracDBOrm` session for work with ORM.

        e.g.::

            from fractconvex.database import FracDB

            frac_db = FracDB(url="sqlite:///reports.db")

            @frac_db.orm_decorator()  # must be called without args
            def archive(report, orm: FracDBOrm):
                # orm arg must be kwargs

                orm.add_report(report)

        Returns:
            Decorator function
        """

        def decor(func) -> Callable[..., Any]:
            def wrapper(*args, **kwargs) -> Any:
                if self.__db_configured is False:
                    self.setup_db()

                try:
                    with FracDBOrm(self.session) as orm:
                        kwargs["orm"] = orm
                        return func(*args, **kwargs)

                except SQLAlchemyError as error:
                    frac_logger.db.error(f"Report archive failed: {error}")
                    raise FracDBExc(f"Report archive failed: {error}") from error

            return wrapper
        return decor

    def setup_db(self) -> None:
        """
        Make first database setup: if you need drop database and create all tables if exists.

        Note:
            This function call automatically then open first connection to the database.
            But if you need you can call it yourself.
        """

        if self.__db_configured:
            frac_logger.db.warning("Database already configured")
            return

        try:
            if self.__db_drop_param:
                self.drop_db()

            self.create_db()

        except SQLAlchemyError as error:
            frac_logger.db.error(f"Database setup failed: {error}")
            raise FracDBExc(f"Report archive setup failed: {error}") from error

        self.__db_configured = True
        frac_logger.db.info("Database successful configured")

    def create_db(self) -> None:
        """Create all tables in database"""

        base_table_class.metadata.create_all(self.__engine)
        frac_logger.db.info("All tables created")

    def drop_db(self) -> None:
        """Drop all database content"""

        base_table_class.metadata.drop_all(self.__engine)
        frac_logger.db.info("Database dropped success")
