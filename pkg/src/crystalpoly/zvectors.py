"""Crystal structure on finitely supported integer sequences.

An element is a sparse vector (.., x_2, x_1); the operator for index i
acts on the position selected by the sigma statistics attached to a
periodic index sequence.  Two structures live on the same vectors: the
highest-weight one (a weight gates the actions through sigma_0) and the
free one (no gate on lowering, raising needs a positive sigma).  The
breadth-first closure of the zero vector is the ground-truth oracle the
inequality systems are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .cartan import CartanData, IndexSequence, Weight
from .crystals import CrystalGraph, Letter, TensorWord, UnitLetter, bfs_graph

BINF = "binf"


@dataclass(frozen=True)
class ZVector:
    """Finitely supported integer vector plus the structure it lives in."""

    coords: tuple[tuple[int, int], ...]  # sorted (position, value), values nonzero
    mode: object = BINF  # BINF or a Weight

    def get(self, k: int) -> int:
        for pos, val in self.coords:
            if pos == k:
                return val
        return 0

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(pos for pos, _ in self.coords)

    @property
    def max_pos(self) -> int:
        return self.coords[-1][0] if self.coords else 0

    @property
    def total(self) -> int:
        return sum(val for _, val in self.coords)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coords)

    def bumped(self, k: int, delta: int) -> "ZVector":
        d = self.as_dict()
        d[k] = d.get(k, 0) + delta
        if d[k] == 0:
            del d[k]
        return ZVector(tuple(sorted(d.items())), self.mode)

    def label(self) -> str:
        if not self.coords:
            return "0"
        return ",".join(f"x{pos}={val}" for pos, val in self.coords)

    def __repr__(self):
        return f"ZVector({self.label()})"

    def to_json_obj(self) -> dict:
        mode = BINF if self.mode == BINF else {"lambda": list(self.mode.coeffs)}
        return {"coords": {str(pos): val for pos, val in self.coords}, "mode": mode}

    @classmethod
    def from_json_obj(cls, obj) -> "ZVector":
        mode = obj.get("mode", BINF)
        if mode != BINF:
            mode = Weight(tuple(int(c) for c in mode["lambda"]))
        coords = tuple(sorted((int(k), int(v)) for k, v in obj["coords"].items() if int(v)))
        return cls(coords, mode)

    @classmethod
    def from_dict(cls, d: dict[int, int], mode=BINF) -> "ZVector":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)), mode)


class MSet(NamedTuple):
    sigma: int
    min_pos: int
    max_pos: int | None  # None flags an infinite tail of attaining positions


class SequenceCrystal:
    """Operators, statistics, and BFS for one (cartan, sequence, weight)."""

    def __init__(self, cartan: CartanData, seq: IndexSequence, lam: Weight | None = None):
        if seq.rank != cartan.rank:
            raise ValueError("sequence rank must match the Cartan datum")
        if lam is not None and lam.rank != cartan.rank:
            raise ValueError("weight rank must match the Cartan datum")
        self.cartan = cartan
        self.seq = seq
        self.lam = lam

    @property
    def mode(self):
        return BINF if self.lam is None else self.lam

    def zero(self) -> ZVector:
        return ZVector((), self.mode)

    def _check(self, x: ZVector):
        if x.mode != self.mode:
            raise ValueError("vector mode does not match this crystal")

    def sigma(self, x: ZVector, k: int) -> int:
        """x_k plus the pairing-weighted tail sum over positions above k."""
        ik = self.seq.index_at(k)
        total = x.get(k)
        for pos, val in x.coords:
            if pos > k:
                total += self.cartan.a(ik, self.seq.index_at(pos)) * val
        return total

    def sigma_0(self, x: ZVector, i: int) -> int:
        """Affine companion of sigma carrying the highest-weight data."""
        if self.lam is None:
            raise ValueError("sigma_0 is only defined in highest-weight mode")
        total = -self.lam.pairing(i)
        for pos, val in x.coords:
            total += self.cartan.a(i, self.seq.index_at(pos)) * val
        return total

    def m_set(self, x: ZVector, i: int) -> MSet:
        """Max of sigma over positions of index i, with arg-min and arg-max.

        Beyond the support every sigma vanishes, so the max is >= 0 and is
        attained; the attaining set is infinite exactly when the max is 0,
        flagged by max_pos=None.
        """
        self._check(x)
        top = x.max_pos
        best = 0
        best_positions: list[int] = []
        for k in self.seq.positions_of(i, top):
            s = self.sigma(x, k)
            if s > best:
                best = s
                best_positions = [k]
            elif s == best:
                best_positions.append(k)
        if best > 0:
            return MSet(best, best_positions[0], best_positions[-1])
        min_pos = best_positions[0] if best_positions else self.seq.next_position_of(i, top)
        return MSet(0, min_pos, None)

    def f(self, x: ZVector, i: int) -> ZVector | None:
        """Lowering: add 1 at the first position attaining the sigma max."""
        ms = self.m_set(x, i)
        if self.lam is not None and not ms.sigma > self.sigma_0(x, i):
            return None
        return x.bumped(ms.min_pos, +1)

    def e(self, x: ZVector, i: int) -> ZVector | None:
        """Raising: subtract 1 at the last position attaining the sigma max."""
        ms = self.m_set(x, i)
        if ms.sigma <= 0:
            return None
        if self.lam is not None and not ms.sigma >= self.sigma_0(x, i):
            return None
        return x.bumped(ms.max_pos, -1)

    def weight_pairings(self, x: ZVector) -> tuple[int, ...]:
        """<h_j, wt(x)> for every j, with wt = lambda minus the step roots."""
        out = []
        for j in self.cartan.indices:
            total = self.lam.pairing(j) if self.lam is not None else 0
            for pos, val in x.coords:
                total -= self.cartan.a(j, self.seq.index_at(pos)) * val
            out.append(total)
        return tuple(out)

    def epsilon(self, x: ZVector, i: int) -> int:
        s = self.m_set(x, i).sigma
        if self.lam is None:
            return s
        return max(s, self.sigma_0(x, i))

    def phi(self, x: ZVector, i: int) -> int:
        return self.weight_pairings(x)[i - 1] + self.epsilon(x, i)

    def wt_eps_phi(self, x: ZVector):
        wt = self.weight_pairings(x)
        eps = tuple(self.epsilon(x, i) for i in self.cartan.indices)
        phi = tuple(wt[i - 1] + eps[i - 1] for i in self.cartan.indices)
        return wt, eps, phi

    def bfs(self, depth: int) -> CrystalGraph:
        """All lowering descendants of the zero vector, to the given depth."""
        return bfs_graph(self.zero(), self.cartan.indices, self.f, depth)

    def to_tensor_word(self, x: ZVector, length: int) -> TensorWord:
        """Truncate to a finite tensor word; coordinate x_k becomes (-x_k)_{i_k}."""
        self._check(x)
        if x.max_pos > length:
            raise ValueError("truncation length does not cover the support")
        letters = [
            Letter(self.seq.index_at(k), -x.get(k)) for k in range(length, 0, -1)
        ]
        unit = None if self.lam is None else UnitLetter(self.lam)
        return TensorWord(self.cartan, letters, unit)

    def from_tensor_word(self, word: TensorWord) -> ZVector:
        """Inverse of to_tensor_word for words shaped like this sequence."""
        n = len(word.letters)
        coords = {}
        for offset, letter in enumerate(word.letters):
            pos = n - offset
            if letter.index != self.seq.index_at(pos):
                raise ValueError("letter indices do not follow the sequence")
            if letter.value:
                coords[pos] = -letter.value
        return ZVector.from_dict(coords, self.mode)
