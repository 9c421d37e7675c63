"""Static scan corpus.

Each `# expect:` line gives the container literals and compound conditions
written by hand for the code up to the next `# expect:` line. Conditions
inside assert statements and anything inside f-strings are not counted.
"""

# expect: containers=0 conditions=0
import collections
import os
import re
from typing import Dict, List, Optional

# expect: containers=4 conditions=0
PRIMES = [2, 3, 5, 7, 11]
EMPTY_LIST = []
EMPTY_DICT = {}
EMPTY_TUPLE = ()
LIMITS = {"low": 1, "high": 10}
PAIR = (0, 1)
SINGLE = ("only",)

# expect: containers=3 conditions=0
MATRIX = [
    [1, 0],
    [0, 1],
]

# expect: containers=2 conditions=0
TAGS = {"red", "green", "blue"}
NESTED = {"a": {}, "b": set()}


# expect: containers=0 conditions=1
def is_valid(name):
    return name and not name.startswith("_")


# expect: containers=1 conditions=1
def pick(options, default=None):
    if options and len(options) > 1:
        return options[0]
    return [default]


# expect: containers=0 conditions=1
def guarded(x, y, z):
    while x > 0 and (y or z):
        x -= 1
    return x


# expect: containers=0 conditions=1
def negations(a, b, c):
    if not (a and b) or not c:
        return True
    return False


# expect: containers=0 conditions=0
def chained(a, b, c):
    if a < b < c:
        return a
    if not a:
        return b
    return c


# expect: containers=3 conditions=2
def ternaries(flag, items):
    label = "yes" if flag and items else "no"
    size = len(items) if items or flag else 0
    return [label, size], (size,)


# expect: containers=0 conditions=2
def nested_calls(a, b, c, d):
    return max(a or b, c and d)


# expect: containers=0 conditions=1
def mixed_chain(a, b, c, d):
    return a and b and c or d


# expect: containers=1 conditions=0
def unpacking(pairs):
    total = 0
    for left, right in pairs:
        total += left * right
    return total


# expect: containers=3 conditions=0
def swap(a, b):
    a, b = b, a
    return a, b


# expect: containers=2 conditions=0
def comprehensions(data):
    squares = [x * x for x in data]
    evens = {x for x in data if x % 2 == 0}
    index = {k: v for k, v in enumerate(data)}
    gen = sum(x for x in data)
    return squares, evens, index, gen


# expect: containers=1 conditions=1
def comprehension_filter(data, lo, hi):
    keep = [x for x in data if x > lo and x < hi]
    return keep, len(keep)


# expect: containers=1 conditions=0
def subscripts(grid, i, j):
    return grid[i, j]


# expect: containers=2 conditions=0
def dict_unpack(base, extra):
    merged = {**base, "extra": extra}
    return {**merged}


# expect: containers=2 conditions=0
def starred(*args):
    first, *rest = args
    return [*rest, first]


# expect: containers=1 conditions=0
def exceptions(path):
    try:
        return open(path).read()
    except (OSError, ValueError):
        return ""


# expect: containers=2 conditions=0
def asserts(x, y):
    assert x and y, "both needed"
    assert not (x or y) or [x, y]
    return [x]


# expect: containers=0 conditions=0
def fstrings(name, items):
    return f"{name}: {[i for i in items]} {name and items} {(1, 2)}"


# expect: containers=2 conditions=1
def lambdas(items):
    key = lambda it: it.priority or it.order
    return sorted(items, key=key), [key]


# expect: containers=0 conditions=1
def walrus(stream):
    while (chunk := stream.read()) and chunk != b"":
        yield chunk


# expect: containers=3 conditions=1
class Config:
    DEFAULTS = {"debug": False, "level": 3}
    ORDER = ("a", "b", "c")

    def __init__(self, values: Optional[Dict[str, int]] = None):
        self.values = values or {}

    def enabled(self, key):
        return self.values.get(key) is not None


# expect: containers=3 conditions=2
class Router:
    def __init__(self):
        self.routes: List[tuple] = []

    def add(self, method, path, handler):
        if method in ("GET", "POST") and path.startswith("/"):
            self.routes.append((method, path, handler))
        elif method == "DELETE" or method == "PUT":
            self.routes.append([method, path])


# expect: containers=1 conditions=1
def comparisons(value, allowed):
    ok = value in allowed and value is not None and not isinstance(value, bool)
    return ok, 0


# expect: containers=0 conditions=1
def defaults(config=None, env=None):
    config = config or env or os.environ
    return config


# expect: containers=1 conditions=1
def regexes(text):
    patterns = [re.compile(r"\d+"), re.compile(r"[a-z]+")]
    return any(p.match(text) for p in patterns) or text == ""


# expect: containers=0 conditions=0
def counters(words):
    counts = collections.Counter(words)
    return counts.most_common()


# expect: containers=2 conditions=2
def multiline(a, b, c, d):
    if (
        a
        and b
        and (c or d)
    ):
        return {
            "a": a,
            "b": b,
        }
    return [
        a if b or c else d,
    ]


# expect: containers=1 conditions=0
def keyword_args(func):
    return func(x=1, y=[2])


# expect: containers=0 conditions=1
def augmented(flags, extra):
    flags |= extra and 1
    return flags


# expect: containers=1 conditions=1
def returns_tuple(a, b):
    return a or b, b


# expect: containers=1 conditions=0
def deletes(table):
    del table["a"], table["b"]
    table.update({"c": 3})
    return table


# expect: containers=0 conditions=2
def boolean_args(check, a, b, c):
    check(a and b)
    check(not (b or c))
    return None


# expect: containers=1 conditions=1
def yield_from(items, fallback):
    yield from items or fallback
    yield [None]


# expect: containers=0 conditions=1
async def async_guard(session, url):
    async with session.get(url) as resp:
        if resp.status == 200 and resp.ok:
            return await resp.text()
    return None


# expect: containers=3 conditions=0
def global_tables():
    codes = {1: "one", 2: "two", 3: "three"}
    return sorted(codes), tuple(codes.items()), ["x"]


# expect: containers=1 conditions=0
def decorated_default(flag=(True, False)):
    return flag


# expect: containers=3 conditions=0
def set_and_list(a, b):
    return {a, b}, [a, b]


# expect: containers=0 conditions=1
def early_exit(items, limit):
    for item in items:
        if item is None or item > limit:
            break
    else:
        return True
    return False


# expect: containers=1 conditions=1
def lambda_default(items, key=lambda v: v or 0):
    return [key(i) for i in items if i], items


# expect: containers=0 conditions=0
def only_not(a):
    return not a


# expect: containers=1 conditions=1
def with_annotation(a: int, b: int) -> tuple:
    both: bool = bool(a) and bool(b)
    return (a, b) if both else None
