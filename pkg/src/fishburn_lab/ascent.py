"""Brute-force enumeration of ascent sequences.

Kept deliberately free of any series code so that it can serve as an
independent check on the Fishburn numbers.
"""

MAX_LENGTH = 14


def is_ascent_sequence(xs):
    if not xs:
        return True
    if xs[0] != 0:
        return False
    asc = 0
    for prev, cur in zip(xs, xs[1:]):
        if not 0 <= cur <= asc + 1:
            return False
        if cur > prev:
            asc += 1
    return True


def ascent_sequences(n):
    """Yield every ascent sequence of length n as a tuple."""
    if n == 0:
        yield ()
        return
    seq = [0] * n

    def extend(pos, asc):
        if pos == n:
            yield tuple(seq)
            return
        last = seq[pos - 1]
        for x in range(asc + 2):
            seq[pos] = x
            yield from extend(pos + 1, asc + (x > last))

    yield from extend(1, 0)


def count_ascent_sequences(n):
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n > MAX_LENGTH:
        raise ValueError(f"enumeration is exponential; refusing n > {MAX_LENGTH}")
    if n == 0:
        return 1
    count = 0
    # (position, ascents so far, last value) with an explicit stack
    stack = [(1, 0, 0)]
    while stack:
        pos, asc, last = stack.pop()
        if pos == n:
            count += 1
            continue
        for x in range(asc + 2):
            stack.append((pos + 1, asc + (x > last), x))
    return count
