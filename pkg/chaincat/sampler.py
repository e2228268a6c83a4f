import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Tuple

from categories import Sampler
from chains import (
    ChainMap,
    Complex,
    chain_map_space,
    cocylinder_factor,
    direct_sum,
    homology_projection,
    sum_inclusions,
    sum_projections,
)
from linalg import Matrix, solve_linear


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Thickening:
    """
    ``x ⊕ acyclic`` with its inclusion and projection, both quasi-isomorphisms.
    """

    obj: Complex
    inclusion: ChainMap
    projection: ChainMap


def _unit_triangular(rng: random.Random, n: int, lower: bool) -> Matrix:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(1)
            elif (j < i) == lower:
                row.append(rng.choice((-1, 0, 0, 1)))
            else:
                row.append(0)
        rows.append(row)
    return Matrix(n, n, rows)


class ChainSampler(Sampler):
    """
    Seeded random complexes and chain maps.

    Complexes are sums of spheres and discs inside a degree window, conjugated
    by random invertible matrices so that differentials are not in normal
    form. Chain maps are random small combinations of a basis of the space of
    chain maps.

    Attributes:
        low (int): Lowest degree a sample may occupy.
        high (int): Highest degree a sample may occupy.
        max_window (int): Largest number of consecutive degrees in a sample.
        max_dim (int): Largest dimension in any degree.
    """

    def __init__(self, low: int = -3, high: int = 5, max_window: int = 3, max_dim: int = 3):
        """
        Initialize a new sampler.

        Args:
            low (int): Lowest degree. Defaults to -3.
            high (int): Highest degree. Defaults to 5.
            max_window (int): Window length. Defaults to 3.
            max_dim (int): Dimension cap per degree. Defaults to 3.
        """
        self.low = low
        self.high = high
        self.max_window = max_window
        self.max_dim = max_dim

    def invertible(self, rng: random.Random, n: int) -> Tuple[Matrix, Matrix]:
        """Return a random invertible n x n matrix and its inverse."""
        m = _unit_triangular(rng, n, True) @ _unit_triangular(rng, n, False)
        inverse = solve_linear(m, Matrix.identity(n))
        return m, inverse

    def sample_object(self, rng: random.Random) -> Complex:
        width = rng.randint(1, self.max_window)
        start = rng.randint(self.low, self.high - width + 1)
        degrees = list(range(start, start + width))
        spheres = {n: 0 for n in degrees}
        discs = {n: 0 for n in degrees[1:]}
        used = {n: 0 for n in degrees}
        for n in degrees:
            room = self.max_dim - used[n]
            spheres[n] = rng.randint(0, min(room, 2))
            used[n] += spheres[n]
        for n in degrees[1:]:
            room = min(self.max_dim - used[n], self.max_dim - used[n - 1])
            discs[n] = rng.randint(0, max(0, min(room, 1)))
            used[n] += discs[n]
            used[n - 1] += discs[n]
        return self.conjugate(rng, self.normal_form(spheres, discs))

    @staticmethod
    def normal_form(spheres: Dict[int, int], discs: Dict[int, int]) -> Complex:
        """Return the sum of ``spheres[n]`` copies of S(n) and ``discs[n]`` copies of D(n)."""
        x = Complex.zero()
        for n, k in sorted(spheres.items()):
            if k:
                x = direct_sum(x, Complex.sphere(n, k))
        for n, k in sorted(discs.items()):
            if k:
                x = direct_sum(x, Complex.disc(n, k))
        return x

    def conjugate(self, rng: random.Random, x: Complex) -> Complex:
        """Return ``x`` with each degree transformed by a random change of basis."""
        changes = {n: self.invertible(rng, k) for n, k in x.dims.items()}
        diff = {
            n: changes[n - 1][0] @ d @ changes[n][1] for n, d in x.differentials().items()
        }
        return Complex(x.dims, diff)

    def random_combination(self, rng: random.Random, maps: List[ChainMap], zero: ChainMap) -> ChainMap:
        total = zero
        for m in maps:
            c = rng.choice((-1, 0, 1, 2))
            if c:
                total = total + m.scale(c)
        return total

    def sample_map(self, rng: random.Random, source: Complex, target: Complex) -> ChainMap:
        space = chain_map_space(source, target)
        zero = ChainMap.zero(source, target)
        if space is None or not space.basis:
            return zero
        return self.random_combination(rng, space.basis, zero)

    def sample_isomorphism(self, rng: random.Random, x: Complex) -> ChainMap:
        space = chain_map_space(x, x)
        ident = ChainMap.identity(x)
        for _ in range(8):
            candidate = ident + self.random_combination(rng, space.basis, ChainMap.zero(x, x))
            if candidate.is_injective():
                return candidate
        return ident.scale(rng.choice((-1, 2)))

    def thicken(self, rng: random.Random, x: Complex) -> Thickening:
        """Add a random sum of discs to ``x``."""
        degrees = range(self.low + 1, self.high + 1)
        discs = {n: 1 for n in rng.sample(list(degrees), rng.randint(1, 2))}
        acyclic = self.conjugate(rng, self.normal_form({}, discs))
        inclusion, _ = sum_inclusions(x, acyclic)
        projection, _ = sum_projections(x, acyclic)
        return Thickening(direct_sum(x, acyclic), inclusion, projection)

    def sample_weak_equivalence(self, rng: random.Random, source: Complex) -> ChainMap:
        choice = rng.randrange(4)
        if choice == 0:
            return self.thicken(rng, source).inclusion
        if choice == 1:
            return self.sample_isomorphism(rng, source)
        if choice == 2:
            return homology_projection(source)
        target = self.sample_object(rng)
        return cocylinder_factor(self.sample_map(rng, source, target)).first
