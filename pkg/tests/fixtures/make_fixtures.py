"""Regenerate the b-file fixtures.

These files are produced locally (not downloaded).  They use independent
constructions and not the fibdir code paths:

* fibonacci_word_b.txt: 0-offset Fibonacci word from the Beatty formula
  a(k) = 1 + floor((k+1)/beta) - floor((k+2)/beta), with exact isqrt floors.
* fixed_point_123_b.txt: 1-offset fixed point of 1 -> 12, 2 -> 3, 3 -> 12.
* corrupted_b.txt: a copy of the first file with a non-increasing index.
"""

from math import isqrt
from pathlib import Path

HERE = Path(__file__).parent
COUNT = 2000


def floor_beta(n: int) -> int:
    return (n + isqrt(5 * n * n)) // 2


def fib_word(k: int) -> int:
    return 1 + (floor_beta(k + 1) - (k + 1)) - (floor_beta(k + 2) - (k + 2))


def fixed_point_123(count: int) -> list[int]:
    sub = {1: (1, 2), 2: (3,), 3: (1, 2)}
    word = [1]
    while len(word) < count:
        word = [c for a in word for c in sub[a]]
    return word[:count]


def write(name: str, header: str, rows) -> None:
    lines = [f"# {header}", "# regenerated locally by make_fixtures.py"]
    lines += [f"{n} {v}" for n, v in rows]
    (HERE / name).write_text("\n".join(lines) + "\n", encoding="utf-8")


def main() -> None:
    fw = [(k, fib_word(k)) for k in range(COUNT)]
    write("fibonacci_word_b.txt", "Fibonacci word, offset 0", fw)
    fp = fixed_point_123(COUNT)
    write("fixed_point_123_b.txt", "fixed point of 1->12, 2->3, 3->12, offset 1",
          [(n + 1, v) for n, v in enumerate(fp)])
    bad = fw[:50] + [(48, 0)] + fw[50:60]
    write("corrupted_b.txt", "corrupted copy: index 48 repeats after 49", bad)


if __name__ == "__main__":
    main()
