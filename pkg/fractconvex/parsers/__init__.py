from .expr_parser import ExprParser, parse


__all__: tuple[str, ...] = (
    "ExprParser",
    "parse"
)
