"""Descriptors naming the fine gradings and their text form.

Text forms::

    sl-inner:m=2,pp=3          (m, then prime powers separated by ';')
    sl-outer:m=1,s=0,d=00;10   (labels as bit strings, two bits per factor)
    ortho:m=0,s=1,d=1;1;1      ('1' is the identity label)
    sympl:m=1,s=1,d=11
"""

from dataclasses import dataclass

__all__ = ["Descriptor", "DescriptorError", "label_sign", "label_from_text", "label_to_text", "is_prime_power"]

KINDS = ("sl-inner", "sl-outer", "ortho", "sympl")


class DescriptorError(ValueError):
    pass


def label_sign(bits):
    """(-1)^(number of factors carrying q3); the tau-eigenvalue of x_a."""
    k = sum(bits[2 * i] & bits[2 * i + 1] for i in range(len(bits) // 2))
    return -1 if k % 2 else 1


def label_from_text(tok, m):
    tok = tok.strip()
    if tok in ("1", "e"):
        return (0,) * (2 * m)
    if tok == "" and m == 0:
        return ()
    if len(tok) != 2 * m or any(ch not in "01" for ch in tok):
        raise DescriptorError(f"label {tok!r} is not a bit string of length {2 * m}")
    return tuple(int(ch) for ch in tok)


def label_to_text(bits):
    if not any(bits):
        return "1"
    return "".join(str(b) for b in bits)


def is_prime_power(q):
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class Descriptor:
    kind: str
    m: int
    s: int = 0
    labels: tuple = ()
    pp: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DescriptorError(f"unknown descriptor kind {self.kind!r}")
        object.__setattr__(self, "labels", tuple(tuple(a) for a in self.labels))
        object.__setattr__(self, "pp", tuple(sorted(self.pp)))

    @property
    def r(self):
        return len(self.labels)

    @property
    def epsilon(self):
        return {"ortho": 1, "sympl": -1}.get(self.kind)

    @property
    def n(self):
        if self.kind == "sl-inner":
            out = self.m
            for q in self.pp:
                out *= q
            return out
        return 2 ** self.m * (self.r + 2 * self.s)

    def is_excluded(self):
        """s = 0, r = 2 with equal lines: the construction is not fine."""
        return self.kind != "sl-inner" and self.s == 0 and self.r == 2 and self.labels[0] == self.labels[1]

    def validate(self):
        if self.kind == "sl-inner":
            if self.m < 1:
                raise DescriptorError("sl-inner needs m >= 1")
            for q in self.pp:
                if not is_prime_power(q):
                    raise DescriptorError(f"{q} is not a prime power")
            if self.pp and all(q == 2 for q in self.pp) and self.m < 3:
                raise DescriptorError("when every prime power is 2, m must be at least 3")
            return self
        if self.m < 0 or self.s < 0:
            raise DescriptorError("m and s must be nonnegative")
        if self.r + 2 * self.s == 0:
            raise DescriptorError("empty descriptor: r + 2s must be positive")
        for a in self.labels:
            if len(a) != 2 * self.m or any(b not in (0, 1) for b in a):
                raise DescriptorError(f"label {a} is not in Z_2^{2 * self.m}")
        eps = self.epsilon
        if eps is not None:
            for a in self.labels:
                if label_sign(a) != eps:
                    raise DescriptorError(f"label {label_to_text(a)} has sign {label_sign(a)}, {self.kind} needs {eps}")
        return self

    def to_text(self):
        if self.kind == "sl-inner":
            return f"sl-inner:m={self.m},pp=" + ";".join(str(q) for q in self.pp)
        return f"{self.kind}:m={self.m},s={self.s},d=" + ";".join(label_to_text(a) for a in self.labels)

    @classmethod
    def parse(cls, text):
        if ":" not in text:
            raise DescriptorError(f"descriptor {text!r} lacks a kind prefix")
        kind, _, rest = text.partition(":")
        kind = kind.strip()
        fields = {}
        for part in rest.split(","):
            if not part.strip():
                continue
            key, eq, val = part.partition("=")
            if not eq:
                raise DescriptorError(f"malformed field {part!r}")
            fields[key.strip()] = val.strip()
        try:
            m = int(fields.pop("m"))
        except (KeyError, ValueError):
            raise DescriptorError("descriptor needs an integer m") from None
        if kind == "sl-inner":
            pp = fields.pop("pp", "")
            try:
                pps = tuple(int(x) for x in pp.split(";") if x.strip())
            except ValueError:
                raise DescriptorError(f"bad prime power list {pp!r}") from None
            if fields:
                raise DescriptorError(f"unexpected fields {sorted(fields)}")
            return cls(kind, m, pp=pps).validate()
        if kind not in KINDS:
            raise DescriptorError(f"unknown descriptor kind {kind!r}")
        try:
            s = int(fields.pop("s", "0"))
        except ValueError:
            raise DescriptorError("s must be an integer") from None
        d = fields.pop("d", None)
        if "r" in fields and d is None:
            # shorthand for m = 0: r copies of the identity label
            d = ";".join(["1"] * int(fields.pop("r")))
        if fields:
            raise DescriptorError(f"unexpected fields {sorted(fields)}")
        labels = tuple(label_from_text(t, m) for t in d.split(";")) if d else ()
        return cls(kind, m, s, labels).validate()

    def __str__(self):
        return self.to_text()
