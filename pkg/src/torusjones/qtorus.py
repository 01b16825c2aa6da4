"""The quantum torus of recurrence operators and its action on discrete sequences.

Elements are kept in the normal form sum a_{k,l}(t) * M^k * L^l (M written
before L).  Products re-normalize through the commutation rule

    L^l * M^k = t^{2kl} * M^k * L^l,

equivalently (M^k L^l) * (M^k' L^l') = t^{2 l k'} * M^{k+k'} * L^{l+l'}.

An element acts on a discrete function f: Z -> Z[t^{+-1}] by

    (M^k L^l f)(n) = t^{2kn} * f(n + l),

extended bilinearly.  The involution sigma negates the (k, l) exponents of
normal-form monomials and the reduction epsilon sets t = -1, landing in the
commutative ring of (M, L) Laurent polynomials.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .laurent import MLPoly, TPoly


class OperatorSyntaxError(ValueError):
    """Parse failure; ``position`` is the character offset in the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class QTElem:
    """A quantum torus element in M-before-L normal form.

    ``terms`` maps (k, l) to the nonzero TPoly coefficient of M^k L^l.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, TPoly] | None = None):
        t = {}
        if terms:
            for key, c in terms.items():
                if isinstance(c, int):
                    c = TPoly({0: c})
                if not c.is_zero():
                    k = (int(key[0]), int(key[1]))
                    if k in t:
                        s = t[k] + c
                        if s.is_zero():
                            del t[k]
                        else:
                            t[k] = s
                    else:
                        t[k] = c
        self.terms = t

    @classmethod
    def zero(cls) -> "QTElem":
        return cls()

    @classmethod
    def one(cls) -> "QTElem":
        return cls({(0, 0): TPoly.one()})

    @classmethod
    def t_pow(cls, e: int, coeff: int = 1) -> "QTElem":
        return cls({(0, 0): TPoly({e: coeff})})

    @classmethod
    def M_pow(cls, k: int) -> "QTElem":
        return cls({(k, 0): TPoly.one()})

    @classmethod
    def L_pow(cls, l: int) -> "QTElem":
        return cls({(0, l): TPoly.one()})

    @classmethod
    def monomial(cls, coeff: "TPoly | int", k: int, l: int) -> "QTElem":
        return cls({(k, l): coeff})

    @classmethod
    def from_tpoly(cls, c: TPoly) -> "QTElem":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, QTElem):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __neg__(self) -> "QTElem":
        out = QTElem()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __add__(self, other) -> "QTElem":
        if isinstance(other, (int, TPoly)):
            other = QTElem({(0, 0): other})
        if not isinstance(other, QTElem):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                s = out[k] + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = c
        r = QTElem()
        r.terms = out
        return r

    __radd__ = __add__

    def __sub__(self, other) -> "QTElem":
        if isinstance(other, (int, TPoly)):
            other = QTElem({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other) -> "QTElem":
        return (-self) + other

    def __mul__(self, other) -> "QTElem":
        if isinstance(other, (int, TPoly)):
            other = QTElem({(0, 0): other})
        if not isinstance(other, QTElem):
            return NotImplemented
        acc: dict = {}
        for (k1, l1), c1 in self.terms.items():
            for (k2, l2), c2 in other.terms.items():
                # (M^k1 L^l1)(M^k2 L^l2) = t^{2 l1 k2} M^{k1+k2} L^{l1+l2}
                c = (c1 * c2).shift(2 * l1 * k2)
                key = (k1 + k2, l1 + l2)
                if key in acc:
                    s = acc[key] + c
                    if s.is_zero():
                        del acc[key]
                    else:
                        acc[key] = s
                else:
                    acc[key] = c
        out = QTElem()
        out.terms = acc
        return out

    def __rmul__(self, other) -> "QTElem":
        if isinstance(other, (int, TPoly)):
            return QTElem({(0, 0): other}) * self
        return NotImplemented

    def __pow__(self, n: int) -> "QTElem":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial quantum torus element")
            ((k, l), c) = next(iter(self.terms.items()))
            if len(c.terms) != 1:
                raise ValueError("negative power of a non-monomial quantum torus element")
            ((e, cv),) = c.terms.items()
            if cv not in (1, -1):
                raise ValueError("negative power needs a unit coefficient")
            # inverse of c t^e M^k L^l is c^{-1} t^{2kl - e} M^{-k} L^{-l}
            inv = QTElem({(-k, -l): TPoly({2 * k * l - e: cv})})
            return inv ** (-n)
        result = QTElem.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sigma(self) -> "QTElem":
        """The involution sending a(t) M^k L^l to a(t) M^{-k} L^{-l} termwise."""
        out = QTElem()
        out.terms = {(-k, -l): c for (k, l), c in self.terms.items()}
        return out

    def epsilon(self) -> MLPoly:
        """Reduce t = -1, landing in the commutative (M, L) Laurent ring."""
        out = {}
        for (k, l), c in self.terms.items():
            v = c.at_minus_one()
            if v:
                out[(k, l)] = v
        return MLPoly(out)

    def apply(self, f: Callable[[int], TPoly], n: int) -> TPoly:
        """Act on a discrete sequence: sum of a_{k,l}(t) t^{2kn} f(n+l)."""
        acc = TPoly.zero()
        for (k, l), c in self.terms.items():
            v = f(n + l)
            if v.is_zero():
                continue
            acc = acc + (c * v).shift(2 * k * n)
        return acc

    def coefficient(self, k: int, l: int) -> TPoly:
        return self.terms.get((k, l), TPoly.zero())

    def l_degrees(self) -> list:
        return sorted({l for (_k, l) in self.terms})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (k, l) in sorted(self.terms):
            c = self.terms[(k, l)]
            mono = []
            if k:
                mono.append("M" if k == 1 else f"M^{k}")
            if l:
                mono.append("L" if l == 1 else f"L^{l}")
            monostr = "*".join(mono)
            if len(c.terms) == 1:
                ((e, cv),) = c.terms.items()
                mag = abs(cv)
                pieces = []
                if e:
                    pieces.append("t" if e == 1 else f"t^{e}")
                if mono:
                    pieces.append(monostr)
                if not pieces:
                    body = str(mag)
                else:
                    body = "*".join(pieces)
                    if mag != 1:
                        body = f"{mag}*{body}"
                if not parts:
                    parts.append(("-" if cv < 0 else "") + body)
                else:
                    parts.append((" - " if cv < 0 else " + ") + body)
            else:
                body = f"({c})"
                if mono:
                    body += "*" + monostr
                parts.append(body if not parts else " + " + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QTElem('{self}')"


def qt_mul(x: QTElem, y: QTElem) -> QTElem:
    """Noncommutative product in normal form."""
    return x * y


def sigma(x: QTElem) -> QTElem:
    return x.sigma()


def epsilon(x: QTElem) -> MLPoly:
    return x.epsilon()


def apply_op(x: QTElem, f: Callable[[int], TPoly], n: int) -> TPoly:
    return x.apply(f, n)


class DiscreteSeq:
    """A memoized total function Z -> TPoly with a printable rule name.

    The cache makes repeated verification sweeps over overlapping windows
    cheap; evaluation is deterministic, so caching never changes semantics.
    """

    __slots__ = ("name", "_fn", "_cache")

    def __init__(self, name: str, fn: Callable[[int], TPoly]):
        self.name = name
        self._fn = fn
        self._cache: dict = {}

    def __call__(self, n: int) -> TPoly:
        v = self._cache.get(n)
        if v is None:
            v = self._fn(n)
            self._cache[n] = v
        return v

    def __repr__(self) -> str:
        return f"DiscreteSeq({self.name!r})"


def _acted_value(op: QTElem, f: DiscreteSeq, n: int) -> TPoly:
    return op.apply(f, n)


def acted(op: QTElem, f: DiscreteSeq, name: str | None = None) -> DiscreteSeq:
    """The sequence n -> (op f)(n)."""
    import functools

    return DiscreteSeq(name or f"({f.name} acted)", functools.partial(_acted_value, op, f))


# --- operator grammar -------------------------------------------------------
#
# expr   := term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := '-' factor | atom ('^' signed-int)?
# atom   := INT | 't' | 'M' | 'L' | '(' expr ')'
#
# Multiplication happens in the written order, so e.g. L*M normalizes to
# t^2*M*L through the commutation rule.


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None, self.pos
        return self.text[self.pos], self.pos

    def next_int(self) -> int:
        ch, p = self.peek()
        sign = 1
        if ch == "-":
            sign = -1
            self.pos += 1
            ch, p = self.peek()
        if ch is None or not ch.isdigit():
            raise OperatorSyntaxError("expected an integer", p)
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return sign * int(self.text[start : self.pos])


def parse(text: str) -> QTElem:
    """Parse the operator grammar into normal form.

    >>> str(parse('L*M'))
    't^2*M*L'
    """
    tok = _Tokenizer(text)

    def parse_expr() -> QTElem:
        acc = parse_term()
        while True:
            ch, _ = tok.peek()
            if ch == "+":
                tok.pos += 1
                acc = acc + parse_term()
            elif ch == "-":
                tok.pos += 1
                acc = acc - parse_term()
            else:
                return acc

    def parse_term() -> QTElem:
        acc = parse_factor()
        while True:
            ch, _ = tok.peek()
            if ch == "*":
                tok.pos += 1
                acc = acc * parse_factor()
            else:
                return acc

    def parse_factor() -> QTElem:
        ch, p = tok.peek()
        if ch == "-":
            tok.pos += 1
            return -parse_factor()
        atom = parse_atom()
        ch, _ = tok.peek()
        if ch == "^":
            tok.pos += 1
            e = tok.next_int()
            atom = atom ** e
        return atom

    def parse_atom() -> QTElem:
        ch, p = tok.peek()
        if ch is None:
            raise OperatorSyntaxError("unexpected end of input", p)
        if ch.isdigit():
            return QTElem({(0, 0): TPoly({0: tok.next_int()})})
        if ch == "t":
            tok.pos += 1
            return QTElem.t_pow(1)
        if ch == "M":
            tok.pos += 1
            return QTElem.M_pow(1)
        if ch == "L":
            tok.pos += 1
            return QTElem.L_pow(1)
        if ch == "(":
            tok.pos += 1
            inner = parse_expr()
            ch2, p2 = tok.peek()
            if ch2 != ")":
                raise OperatorSyntaxError("expected ')'", p2)
            tok.pos += 1
            return inner
        raise OperatorSyntaxError(f"unexpected character {ch!r}", p)

    result = parse_expr()
    ch, p = tok.peek()
    if ch is not None:
        raise OperatorSyntaxError(f"trailing input {ch!r}", p)
    return result


def serialize(x: QTElem) -> str:
    """Canonical text: normal-form terms ordered by (k, l)."""
    return str(x)
