"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are stored as packed integers: the total degree occupies the top
field and the exponents of the variables follow in variable order, each in a
fixed-width field.  Adding two packed keys multiplies the monomials, and
comparing keys as integers is the graded-lexicographic order, so the
leading term of a polynomial is simply its largest key.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, Sequence

from ..errors import DivisionByZero, InexactDivision

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1

_FIXED_ORDER = ("x", "y", "z1", "z2", "z3", "z4", "z41", "z12", "z23", "z34", "z")
_FIXED_RANK = {name: i for i, name in enumerate(_FIXED_ORDER)}
_GROUP_RANK = {"z": 0, "w": 1, "U": 2, "V": 3, "Q": 4}
_INDEXED = re.compile(r"([A-Za-z]+?)(\d+)")

Scalar = int | Fraction


def var_key(name: str) -> tuple:
    """Sort key realising the global variable order.

    x, y, z1..z4, the corner variables, z, then w1.., U.., V.., Q, and any
    other name afterwards in alphabetical order.
    """
    if name in _FIXED_RANK:
        return (0, _FIXED_RANK[name], name)
    m = _INDEXED.fullmatch(name)
    if m and m.group(1) in _GROUP_RANK:
        group = _GROUP_RANK[m.group(1)]
        return (group, 100 + int(m.group(2)), name) if group == 0 else (group, int(m.group(2)), name)
    if name in _GROUP_RANK:
        return (_GROUP_RANK[name], 0, name)
    return (5, 0, name)


def sort_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=var_key))


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _exact_quotient(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
    return _norm(Fraction(a) / b)


def _pack(exps: Sequence[int]) -> int:
    key = sum(exps)
    for e in exps:
        if e < 0:
            raise ValueError("negative exponent")
        if e > _MASK:
            raise OverflowError("exponent too large for packed monomial")
        key = (key << _SHIFT) | e
    return key


def _unpack(key: int, k: int) -> list[int]:
    out = [0] * k
    for i in range(k - 1, -1, -1):
        out[i] = key & _MASK
        key >>= _SHIFT
    return out


class SparsePoly:
    """Immutable sparse polynomial over the rationals.

    ``vars`` is the ordered variable tuple; ``terms`` is built from a mapping
    of exponent tuples to coefficients.  Variables that do not occur are
    allowed, and equality ignores them.
    """

    __slots__ = ("vars", "_t")

    def __init__(self, terms: Mapping[Sequence[int], Scalar] | None = None,
                 vars: Sequence[str] = ()):
        vars = tuple(vars)
        if list(vars) != list(sort_vars(vars)) or len(set(vars)) != len(vars):
            order = sort_vars(vars)
            perm = [vars.index(v) for v in order]
            terms = {tuple(e[p] for p in perm): c for e, c in (terms or {}).items()}
            vars = order
        packed: dict[int, Scalar] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(vars):
                raise ValueError("exponent vector length does not match vars")
            c = _norm(Fraction(c)) if not isinstance(c, int) else int(c)
            if c:
                key = _pack(exps)
                v = packed.get(key, 0) + c
                if v:
                    packed[key] = v
                else:
                    packed.pop(key, None)
        self.vars = vars
        self._t = packed

    @classmethod
    def _raw(cls, vars: tuple[str, ...], packed: dict[int, Scalar]) -> "SparsePoly":
        p = object.__new__(cls)
        p.vars = vars
        p._t = packed
        return p

    # construction helpers

    @classmethod
    def constant(cls, c: Scalar, vars: Sequence[str] = ()) -> "SparsePoly":
        vars = sort_vars(vars)
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls._raw(vars, {0: c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "SparsePoly":
        return cls._raw((name,), {_pack((1,)): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Scalar = 1) -> "SparsePoly":
        vars = sort_vars(exps)
        return cls({tuple(exps[v] for v in vars): coeff}, vars)

    # basic accessors

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._t)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get(0, 0)

    def terms(self) -> Iterator[tuple[tuple[int, ...], Scalar]]:
        """Yield (exponents, coefficient) pairs, leading term first."""
        k = len(self.vars)
        for key in sorted(self._t, reverse=True):
            yield tuple(_unpack(key, k)), self._t[key]

    def as_dict(self) -> dict[tuple[int, ...], Scalar]:
        k = len(self.vars)
        return {tuple(_unpack(key, k)): c for key, c in self._t.items()}

    def coefficients(self) -> list[Scalar]:
        return list(self._t.values())

    def leading_term(self) -> tuple[tuple[int, ...], Scalar]:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        key = max(self._t)
        return tuple(_unpack(key, len(self.vars))), self._t[key]

    def used_vars(self) -> tuple[str, ...]:
        seen = [False] * len(self.vars)
        for exps, _ in self.terms():
            for i, e in enumerate(exps):
                if e:
                    seen[i] = True
        return tuple(v for v, s in zip(self.vars, seen) if s)

    def compact(self) -> "SparsePoly":
        return self.with_vars(self.used_vars())

    def with_vars(self, vars: Sequence[str]) -> "SparsePoly":
        """Re-express over ``vars``, which must contain every used variable."""
        vars = sort_vars(vars)
        if vars == self.vars:
            return self
        return SparsePoly._raw(vars, self._repack(vars))

    def _repack(self, new_vars: tuple[str, ...]) -> dict[int, Scalar]:
        k_old, k_new = len(self.vars), len(new_vars)
        pos = {v: i for i, v in enumerate(new_vars)}
        shifts = []
        for v in self.vars:
            if v in pos:
                shifts.append(_SHIFT * (k_new - 1 - pos[v]))
            else:
                shifts.append(None)
        top = _SHIFT * k_new
        out = {}
        for key, c in self._t.items():
            exps = _unpack(key, k_old)
            nk = sum(exps) << top
            for e, s in zip(exps, shifts):
                if e:
                    if s is None:
                        raise ValueError("variable in use cannot be dropped")
                    nk |= e << s
            out[nk] = c
        return out

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._t.values())

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(type(c) is int and c > 0 for c in self._t.values())

    def degree(self, var: str | None = None) -> int:
        if not self._t:
            return -1
        if var is None:
            return max(k >> (_SHIFT * len(self.vars)) for k in self._t)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        s = _SHIFT * (len(self.vars) - 1 - i)
        return max((k >> s) & _MASK for k in self._t)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "SparsePoly | None":
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(other)
        return None

    def _aligned(self, other: "SparsePoly"):
        if self.vars == other.vars:
            return self.vars, self._t, other._t
        if not other.vars and all(k == 0 for k in other._t):
            return self.vars, self._t, other._t
        if not self.vars and all(k == 0 for k in self._t):
            return other.vars, self._t, other._t
        union = sort_vars(self.vars + other.vars)
        return union, self._repack(union), other._repack(union)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        vars, a, b = self._aligned(o)
        if len(a) < len(b):
            a, b = b, a
        res = dict(a)
        get = res.get
        for k, c in b.items():
            v = get(k, 0) + c
            if v:
                res[k] = v
            else:
                del res[k]
        return SparsePoly._raw(vars, res)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.vars, {k: -c for k, c in self._t.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return SparsePoly._raw(self.vars, {})
            other = _norm(other)
            return SparsePoly._raw(self.vars, {k: _norm(c * other) for k, c in self._t.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        vars, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        res: dict[int, Scalar] = {}
        get = res.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                res[k] = get(k, 0) + ca * cb
        res = {k: _norm(c) for k, c in res.items() if c}
        return SparsePoly._raw(vars, res)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        result = SparsePoly.constant(1, self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero scalar")
            return SparsePoly._raw(self.vars, {k: _exact_quotient(c, other) for k, c in self._t.items()})
        if isinstance(other, SparsePoly):
            return divexact(self, other)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        _, a, b = self._aligned(o)
        return a == b

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # type: ignore[assignment]

    # substitution and evaluation

    def rename(self, mapping: Mapping[str, str]) -> "SparsePoly":
        """Simultaneously rename variables (a permutation is allowed)."""
        return self.monomial_map({old: {new: 1} for old, new in mapping.items()})

    def monomial_map(self, images: Mapping[str, Mapping[str, int]],
                     shift: Mapping[str, int] | None = None) -> "SparsePoly":
        """Substitute each listed variable by a Laurent monomial, then
        multiply by the monomial ``shift``.

        ``images`` maps a variable to a dict of exponents, e.g. y -> y/x is
        ``{"y": {"y": 1, "x": -1}}``.  The result must be a polynomial.
        """
        shift = dict(shift or {})
        target = set(v for v in self.vars if v not in images)
        for img in images.values():
            target.update(img)
        target.update(shift)
        target = sort_vars(target)
        idx = {v: i for i, v in enumerate(target)}
        k_new = len(target)
        base = [0] * k_new
        for v, e in shift.items():
            base[idx[v]] += e
        contrib = []
        for v in self.vars:
            img = images.get(v, {v: 1})
            contrib.append([(idx[w], e) for w, e in img.items()])
        k_old = len(self.vars)
        out: dict[int, Scalar] = {}
        for key, c in self._t.items():
            exps = _unpack(key, k_old)
            new = list(base)
            for e, cl in zip(exps, contrib):
                if e:
                    for j, f in cl:
                        new[j] += e * f
            nk = _pack(new)
            v = out.get(nk, 0) + c
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
        return SparsePoly._raw(target, out)

    def subs(self, mapping: Mapping[str, Any]) -> "SparsePoly":
        """Substitute rationals or polynomials for variables."""
        mapping = {k: v for k, v in mapping.items() if k in self.vars}
        if not mapping:
            return self
        k = len(self.vars)
        keep = tuple(v for v in self.vars if v not in mapping)
        keep_idx = [self.vars.index(v) for v in keep]
        sub_idx = [(self.vars.index(v), val) for v, val in mapping.items()]
        all_scalar = all(isinstance(val, (int, Fraction)) for _, val in sub_idx)
        if all_scalar:
            caches = [{0: 1} for _ in sub_idx]
            out: dict[int, Scalar] = {}
            for key, c in self._t.items():
                exps = _unpack(key, k)
                coef = c
                for (i, val), cache in zip(sub_idx, caches):
                    e = exps[i]
                    if e:
                        pw = cache.get(e)
                        if pw is None:
                            pw = cache[e] = val ** e
                        coef = coef * pw
                        if not coef:
                            break
                if not coef:
                    continue
                nk = _pack([exps[i] for i in keep_idx])
                v = out.get(nk, 0) + coef
                if v:
                    out[nk] = v
                else:
                    out.pop(nk, None)
            return SparsePoly._raw(keep, {kk: _norm(c) for kk, c in out.items()})
        # polynomial images: group terms by substituted exponents
        groups: dict[tuple[int, ...], dict[int, Scalar]] = {}
        for key, c in self._t.items():
            exps = _unpack(key, k)
            sk = tuple(exps[i] for i, _ in sub_idx)
            nk = _pack([exps[i] for i in keep_idx])
            groups.setdefault(sk, {})[nk] = c
        vals = [v if isinstance(v, SparsePoly) else SparsePoly.constant(v) for _, v in sub_idx]
        caches = [{0: SparsePoly.constant(1)} for _ in vals]
        total = SparsePoly._raw(keep, {})
        for sk, part in groups.items():
            factor = SparsePoly.constant(1)
            for e, val, cache in zip(sk, vals, caches):
                if e:
                    pw = cache.get(e)
                    if pw is None:
                        pw = cache[e] = val ** e
                    factor = factor * pw
            total = total + SparsePoly._raw(keep, part) * factor
        return total

    def evaluate(self, point: Mapping[str, Any]):
        """Evaluate at a point whose values may live in any commutative ring
        supporting + and * with rationals (e.g. cyclotomic numbers)."""
        k = len(self.vars)
        vals = []
        for v in self.vars:
            if v not in point:
                raise KeyError(f"no value for variable {v}")
            vals.append(point[v])
        caches = [{0: 1, 1: val} for val in vals]
        total = 0
        for key, c in self._t.items():
            exps = _unpack(key, k)
            term = c
            for e, val, cache in zip(exps, vals, caches):
                if e:
                    pw = cache.get(e)
                    if pw is None:
                        pw = cache[e] = val ** e
                    term = term * pw
            total = total + term
        return total

    def coeff(self, var: str, k: int) -> "SparsePoly":
        """Coefficient of var^k, as a polynomial in the remaining variables."""
        return self.coefficients_in(var).get(k, SparsePoly._raw(
            tuple(v for v in self.vars if v != var), {}))

    def coefficients_in(self, var: str) -> dict[int, "SparsePoly"]:
        if var not in self.vars:
            return {0: self} if self._t else {}
        i = self.vars.index(var)
        k = len(self.vars)
        rest = tuple(v for v in self.vars if v != var)
        parts: dict[int, dict[int, Scalar]] = {}
        for key, c in self._t.items():
            exps = _unpack(key, k)
            e = exps.pop(i)
            parts.setdefault(e, {})[_pack(exps)] = c
        return {e: SparsePoly._raw(rest, d) for e, d in parts.items()}

    def coefficient_of(self, exps: Mapping[str, int]) -> Scalar:
        """Coefficient of the full monomial described by ``exps``."""
        if any(v not in self.vars for v, e in exps.items() if e):
            return 0
        vec = [exps.get(v, 0) for v in self.vars]
        return self._t.get(_pack(vec), 0)

    def derivative(self, var: str) -> "SparsePoly":
        if var not in self.vars:
            return SparsePoly._raw(self.vars, {})
        i = self.vars.index(var)
        k = len(self.vars)
        out = {}
        for key, c in self._t.items():
            exps = _unpack(key, k)
            e = exps[i]
            if e:
                exps[i] = e - 1
                out[_pack(exps)] = c * e
        return SparsePoly._raw(self.vars, out)

    def map_coefficients(self, fn) -> "SparsePoly":
        out = {}
        for k, c in self._t.items():
            v = _norm(fn(c))
            if v:
                out[k] = v
        return SparsePoly._raw(self.vars, out)

    # presentation

    def __repr__(self) -> str:
        return f"SparsePoly({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if type(c) is int else f"({c})*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out


def var(name: str) -> SparsePoly:
    return SparsePoly.variable(name)


def variables(names: str) -> tuple[SparsePoly, ...]:
    return tuple(var(n) for n in names.split())


def as_poly(value) -> SparsePoly:
    if isinstance(value, SparsePoly):
        return value
    return SparsePoly.constant(value)


def poly_arith(op: str, a, b=None) -> SparsePoly:
    """Dispatch ``add``, ``sub``, ``mul`` or ``neg`` on polynomials."""
    a = as_poly(a)
    if op == "neg":
        return -a
    b = as_poly(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def divmod_poly(num: SparsePoly, den: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    """Graded-lex division by a single divisor; returns (quotient, remainder)."""
    return _divide(num, den, strict=False)


def divexact(num, den) -> SparsePoly:
    """Exact quotient; raises InexactDivision if ``den`` does not divide ``num``."""
    q, _ = _divide(as_poly(num), as_poly(den), strict=True)
    return q


def _divide(num: SparsePoly, den: SparsePoly, strict: bool):
    if den.is_zero():
        raise DivisionByZero("polynomial division by zero")
    vars, a, d = num._aligned(den)
    k = len(vars)
    if len(d) == 1:
        (lk, lc), = d.items()
        lexp = _unpack(lk, k)
        quot, rem = {}, {}
        for key, c in a.items():
            exps = _unpack(key, k)
            if all(e >= f for e, f in zip(exps, lexp)):
                quot[key - lk] = _exact_quotient(c, lc)
            elif strict:
                raise InexactDivision("monomial does not divide numerator")
            else:
                rem[key] = c
        return SparsePoly._raw(vars, quot), SparsePoly._raw(vars, rem)
    lk = max(d)
    lc = d[lk]
    lexp = _unpack(lk, k)
    dterms = [(kk, c) for kk, c in d.items() if kk != lk]
    rem = dict(a)
    heap = [-kk for kk in rem]
    heapq.heapify(heap)
    quot: dict[int, Scalar] = {}
    leftover: dict[int, Scalar] = {}
    while heap:
        key = -heapq.heappop(heap)
        c = rem.pop(key, 0)
        if not c:
            continue
        exps = _unpack(key, k)
        if not all(e >= f for e, f in zip(exps, lexp)):
            if strict:
                raise InexactDivision("nonzero remainder in polynomial division")
            leftover[key] = c
            continue
        qk = key - lk
        qc = _exact_quotient(c, lc)
        quot[qk] = qc
        for dk, dc in dterms:
            nk = qk + dk
            old = rem.get(nk)
            v = (old or 0) - qc * dc
            if v:
                if old is None:
                    heapq.heappush(heap, -nk)
                rem[nk] = _norm(v)
            elif old is not None:
                del rem[nk]
    return SparsePoly._raw(vars, quot), SparsePoly._raw(vars, leftover)


def poly_divexact(num, den) -> SparsePoly:
    return divexact(num, den)


# canonical serialisation

def _coeff_str(c: Scalar) -> str:
    if type(c) is int:
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def _parse_coeff(s: str) -> Scalar:
    if "/" in s:
        p, q = s.split("/")
        return _norm(Fraction(int(p), int(q)))
    return int(s)


def to_json_obj(p: SparsePoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [{"coeff": _coeff_str(c), "exps": list(e)} for e, c in p.terms()],
    }


def from_json_obj(obj: Mapping) -> SparsePoly:
    vars = list(obj["vars"])
    terms = {}
    for t in obj["terms"]:
        terms[tuple(t["exps"])] = _parse_coeff(t["coeff"])
    return SparsePoly(terms, vars)
