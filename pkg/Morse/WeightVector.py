class WeightVector(object):
    """
    Weights a = (a_1, ..., a_k) on the tower levels, with partial sums
    b_j = a_1 + ... + a_j and total |a| = b_k.

    Admissible vectors make O_{X_k}(a) relatively nef:
    a_1 >= 3 a_2, ..., a_{k-2} >= 3 a_{k-1} and a_{k-1} >= 2 a_k > 0.
    """

    def __init__(self, a=None):
        if a is None:
            raise ValueError("A weight vector needs at least one weight")
        if isinstance(a, str):
            a = [part for part in a.replace(" ", "").split(",") if part]
        try:
            _a = tuple(int(x) for x in a)
        except (TypeError, ValueError):
            raise TypeError("Weights must be integers; received {}".format(a))
        if not _a:
            raise ValueError("A weight vector needs at least one weight")
        if any(x < 1 for x in _a):
            raise ValueError("Weights must be positive; received {}".format(_a))
        self._a = _a

    #
    # Factories
    #
    @classmethod
    def default(cls, k):
        """(2*3^(k-2), ..., 6, 2, 1); (1) when k = 1."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("The jet order must be a positive integer; received {}".format(k))
        if k == 1:
            return cls((1,))
        return cls(tuple(2 * 3 ** (k - j - 1) for j in range(1, k)) + (1,))

    #
    # Overrides
    #
    def __eq__(self, other):
        return isinstance(other, WeightVector) and other.a == self._a

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __hash__(self):
        return hash(self._a)

    def __len__(self):
        return len(self._a)

    def __iter__(self):
        return iter(self._a)

    def __repr__(self):
        return "<WeightVector: {}>".format(self.dumps())

    def __str__(self):
        return self.dumps()

    #
    # Properties
    #
    @property
    def a(self):
        return self._a

    @property
    def k(self):
        return len(self._a)

    @property
    def b(self):
        sums, running = [], 0
        for x in self._a:
            running += x
            sums.append(running)
        return tuple(sums)

    @property
    def total(self):
        return sum(self._a)

    @property
    def sort_key(self):
        """Sweep order: by |a|, then lexicographically."""
        return (self.total, self._a)

    def is_admissible(self):
        return is_admissible(self._a)

    def scaled(self, factor):
        return WeightVector(tuple(factor * x for x in self._a))

    def dumps(self):
        return ",".join(str(x) for x in self._a)


def default_weights(k):
    return WeightVector.default(k)


def is_admissible(a):
    """True iff the weights satisfy the relative nefness chain; never raises."""
    try:
        _a = tuple(int(x) for x in a)
    except (TypeError, ValueError):
        return False
    if not _a or _a[-1] <= 0:
        return False
    k = len(_a)
    for j in range(k - 2):
        if _a[j] < 3 * _a[j + 1]:
            return False
    if k >= 2 and _a[k - 2] < 2 * _a[k - 1]:
        return False
    return True


def minimal_total(k):
    """The smallest |a| of an admissible vector of length k (that of the default weights)."""
    return 3 ** (k - 1)


def admissible_weights(k, max_total):
    """
    Every admissible vector of length k with |a| <= max_total, ordered by
    |a| then lexicographically.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("The jet order must be a positive integer; received {}".format(k))
    found = []

    def extend(suffix, used):
        # suffix holds a_j..a_k; choose a_{j-1}.
        position = k - len(suffix)
        if position == 0:
            found.append(suffix)
            return
        factor = 2 if len(suffix) == 1 else 3
        lowest = factor * suffix[0]
        for x in range(lowest, max_total - used + 1):
            extend((x,) + suffix, used + x)

    for last in range(1, max_total + 1):
        extend((last,), last)
    return [WeightVector(a) for a in sorted(found, key=lambda t: (sum(t), t))]
