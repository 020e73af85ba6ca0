from .progress import progress
from .rationals import as_rational, parse_rational, format_rational, parse_rational_list, order_key
from .jsonio import dumps, loads
