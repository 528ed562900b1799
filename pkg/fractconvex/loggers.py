from time import perf_counter as _perf_counter
from logging import Logger, getLogger, DEBUG, INFO, WARNING, ERROR, CRITICAL


__all__ = (
    "FULL",
    "MAIN",
    "CHILDREN",
    "CALC",
    "CHECKS",
    "CONVEXITY",
    "INEQUALITIES",
    "DB",
    "frac_logger"
)


# FracLogger parameters
FULL = 100
MAIN = 110
CHILDREN = 120
CALC = 130
CHECKS = 140
CONVEXITY = 150
INEQUALITIES = 160
DB = 170


class LogTimer:
    """Class for measure time of functions work"""

    # Sign start with time will be round.
    _ndigits: int = 3

    # Magic methods
    def __init__(self) -> None:
        self.__start_time = _perf_counter()
        self.__result = None

    # Getters
    @property
    def start_time(self) -> float:
        return self.__start_time

    @property
    def result(self) -> float:
        if self.__result is not None:
            return self.__result

        else:
            raise RuntimeError("Timer not stopped")

    # Main methods
    def stop(self) -> float:
        """
        Stop timer and return result.

        Returns:
            Seconds after creating object.
        """

        self.__result = round(_perf_counter() - self.__start_time, self._ndigits)
        return self.__result


class FracLogger:
    """Class for fractconvex logging"""

    # Loggers names
    __main_name = "fractconvex"
    __calc_name = "calc"
    __checks_name = "checks"
    __convexity_name = "convexity"
    __inequalities_name = "inequalities"
    __cli_name = "cli"
    __db_name = "db"

    __is_one = None

    # Magic methods
    def __new__(cls, *args, **kwargs):
        """Blocking to create new items"""

        if cls.__is_one is None:
            cls.__is_one = super().__new__(cls)

        return cls.__is_one

    def __init__(self) -> None:
        # Main logger
        self.__main = getLogger(self.__main_name)

        # Children loggers
        self.__calc = self.main.getChild(self.__calc_name)
        self.__cli = self.main.getChild(self.__cli_name)
        self.__db = self.main.getChild(self.__db_name)

        self.__checks = self.main.getChild(self.__checks_name)
        self.__convexity = self.checks.getChild(self.__convexity_name)
        self.__inequalities = self.checks.getChild(self.__inequalities_name)

        self.setup(CRITICAL)  # Disable all loggers

    # Getters
    @property
    def main(self) -> Logger:
        return self.__main

    @property
    def calc(self) -> Logger:
        return self.__calc

    @property
    def checks(self) -> Logger:
        return self.__checks

    @property
    def convexity(self) -> Logger:
        return self.__convexity

    @property
    def inequalities(self) -> Logger:
        return self.__inequalities

    @property
    def cli(self) -> Logger:
        return self.__cli

    @property
    def db(self) -> Logger:
        return self.__db

    @property
    def all(self) -> tuple[Logger, ...]:
        return self.main, self.calc, self.checks, self.convexity, self.inequalities, self.cli, self.db

    # Main methods
    def setup(self, *params: int) -> None:
        """
        Enable loggers of fractconvex

        Note:
            :code:`FULL` - Enable all loggers\n
            :code:`MAIN` - Enable only main logger\n
            :code:`CHILDREN` - Enable main logger and its direct children\n
            :code:`CALC` - Enable main and calculus loggers\n
            :code:`CHECKS` - Enable main, checks, convexity and inequalities loggers\n
            :code:`CONVEXITY` - Enable main, checks and convexity loggers\n
            :code:`INEQUALITIES` - Enable main, checks and inequalities loggers\n
            :code:`DB` - Enable main and report archive loggers\n
            :code:`DEBUG`, :code:`INFO`, :code:`WARNING`, :code:`ERROR`, :code:`CRITICAL` - Change logging level.

        Args:
            params: Can pass multiple parameters.
        """

        for param in params:
            if param == FULL:
                for logger in self.all:
                    logger.setLevel(INFO)

            elif param == MAIN:
                self.main.setLevel(INFO)

            elif param == CHILDREN:
                self.main.setLevel(INFO)
                self.calc.setLevel(INFO)
                self.checks.setLevel(INFO)
                self.cli.setLevel(INFO)
                self.db.setLevel(INFO)

            elif param == CALC:
                self.main.setLevel(INFO)
                self.calc.setLevel(INFO)

            elif param == CHECKS:
                self.main.setLevel(INFO)
                self.checks.setLevel(INFO)
                self.convexity.setLevel(INFO)
                self.inequalities.setLevel(INFO)

            elif param == CONVEXITY:
                self.main.setLevel(INFO)
                self.checks.setLevel(INFO)
                self.convexity.setLevel(INFO)

            elif param == INEQUALITIES:
                self.main.setLevel(INFO)
                self.checks.setLevel(INFO)
                self.inequalities.setLevel(INFO)

            elif param == DB:
                self.main.setLevel(INFO)
                self.db.setLevel(INFO)

            elif param in (DEBUG, INFO, WARNING, ERROR, CRITICAL):
                for logger in self.all:
                    logger.setLevel(param)

    # Class methods
    @classmethod
    def change_ndigits(cls, ndigits: int) -> None:
        """
        Changes the number of decimal places in the logs time.

        Args:
            ndigits: Sign start with time will be round.

        Returns:
            None
        """

        LogTimer._ndigits = ndigits


# Main fractconvex logger
frac_logger = FracLogger()
